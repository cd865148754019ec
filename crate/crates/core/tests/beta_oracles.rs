use lusztig_core::{beta, beta_maximizers, beta_oracle, beta_prime, beta_ratio, partition_product, partitions_of, Nat};
use num_traits::Pow;
use proptest::prelude::*;

#[test]
fn closed_form_matches_brute_force_up_to_50() {
    for n in 0..=50 {
        let oracle = beta_oracle(n).unwrap();
        let closed = beta_maximizers(n);
        assert_eq!(closed.value, oracle.value, "value at {n}");
        assert_eq!(closed.maximizers, oracle.maximizers, "maximizers at {n}");
        assert_eq!(beta(n), oracle.value);
        let expected_count = if n == 7 { 2 } else { 1 };
        assert_eq!(closed.maximizers.len(), expected_count, "n = {n}");
    }
}

#[test]
fn strictly_increasing_up_to_200() {
    for n in 1..200 {
        assert!(beta(n) < beta(n + 1));
    }
}

#[test]
fn supermultiplicative_up_to_100() {
    for k in 1..=100 {
        for n in 1..=100 {
            assert!(beta(k) * beta(n) <= beta(k + n), "k = {k}, n = {n}");
        }
    }
}

#[test]
fn fourth_power_sandwich_up_to_400() {
    let five = Nat::from(5u32);
    for n in 1..=400usize {
        let b4 = beta(n).pow(4u32);
        assert!(b4 <= five.clone().pow(n), "upper at {n}");
        if n >= 3 {
            assert!(b4 > five.clone().pow(n - 3), "lower at {n}");
        }
    }
    // n < 3: 5^{(n−3)/4} < 1 ≤ β(n)
}

#[test]
fn half_argument_bounds_even_n() {
    for n in (4..=200).step_by(2) {
        assert!(beta(n / 2) <= beta(n - 3) * 3u32, "n = {n}");
        if n > 4 {
            assert!(beta(n / 2) <= beta(n - 5) * 7u32, "n = {n}");
        }
    }
}

#[test]
fn beta_prime_matches_odd_part_oracle() {
    for n in (2..=50).step_by(2) {
        let oracle = partitions_of(n).filter(|mu| mu.has_odd_part()).map(|mu| partition_product(&mu)).max().unwrap();
        assert_eq!(beta_prime(n).unwrap(), oracle, "n = {n}");
        // same maximum via the definition max_{a odd} β(a)β(n−a)
        let split = (1..n).step_by(2).map(|a| beta(a) * beta(n - a)).max().unwrap();
        assert_eq!(beta_prime(n).unwrap(), split, "n = {n}");
    }
}

proptest! {
    #[test]
    fn ratio_times_product_recovers_beta(k in 1usize..120, n in 1usize..120) {
        let r = beta_ratio(k, n);
        let lhs = r * num_rational::BigRational::from_integer((beta(k) * beta(n)).into());
        prop_assert_eq!(lhs, num_rational::BigRational::from_integer(beta(k + n).into()));
    }

    #[test]
    fn ratio_is_at_least_one(k in 1usize..200, n in 1usize..200) {
        prop_assert!(beta_ratio(k, n) >= num_rational::BigRational::from_integer(1.into()));
    }

    #[test]
    fn tail_scales_by_five(n in 8usize..300) {
        prop_assert_eq!(beta(n + 4), beta(n) * 5u32);
    }
}
