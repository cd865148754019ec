//! β(n) = max Π p(μ_j) over partitions μ of n, its maximizers, and β′.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::error::{CoreError, Result};
use crate::partition::{partition_product, partitions_of, Nat, Partition};

/// Largest n accepted by the exhaustive oracles.
pub const ENUMERATION_GUARD: usize = 60;

const SMALL_BETA: [u64; 8] = [1, 1, 2, 3, 5, 7, 11, 15];

/// Maximum value together with every maximizing partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaResult {
    pub value: Nat,
    /// Sorted reverse-lexicographically, largest first.
    pub maximizers: Vec<Partition>,
}

fn pow5(e: usize) -> Nat {
    Nat::from(5u32).pow(e)
}

/// β(n) from the closed form; β(0) = 1.
pub fn beta(n: usize) -> Nat {
    if n < SMALL_BETA.len() {
        return Nat::from(SMALL_BETA[n]);
    }
    match n % 4 {
        0 => pow5(n / 4),
        1 => Nat::from(7u32) * pow5((n - 5) / 4),
        2 => Nat::from(11u32) * pow5((n - 6) / 4),
        _ => Nat::from(77u32) * pow5((n - 11) / 4),
    }
}

/// π(n): the maximizing partitions, read off the residue of n mod 4.
fn pi(n: usize) -> Vec<Partition> {
    match n {
        0 => vec![Partition::empty()],
        1..=6 => vec![Partition::new(vec![n])],
        7 => vec![Partition::new(vec![7]), Partition::new(vec![4, 3])],
        _ => {
            let fixed: &[usize] = match n % 4 {
                0 => &[],
                1 => &[5],
                2 => &[6],
                _ => &[6, 5],
            };
            let fours = (n - fixed.iter().sum::<usize>()) / 4;
            let mut parts = fixed.to_vec();
            parts.extend(std::iter::repeat_n(4, fours));
            vec![Partition::new(parts)]
        }
    }
}

pub fn beta_maximizers(n: usize) -> BetaResult {
    BetaResult { value: beta(n), maximizers: pi(n) }
}

/// Brute force over all partitions of n. Shares no code with [`beta`].
pub fn beta_oracle(n: usize) -> Result<BetaResult> {
    best_product(n, |_| true)
}

/// Exhaustive maximum of `partition_product` over the partitions of `n`
/// accepted by `admit`. `None` value means nothing was admitted.
pub(crate) fn best_product(n: usize, admit: impl Fn(&Partition) -> bool) -> Result<BetaResult> {
    if n > ENUMERATION_GUARD {
        return Err(CoreError::TooLarge { n, guard: ENUMERATION_GUARD });
    }
    let mut best: Option<BetaResult> = None;
    for mu in partitions_of(n).filter(|mu| admit(mu)) {
        let v = partition_product(&mu);
        match &mut best {
            Some(b) if v < b.value => {}
            Some(b) if v == b.value => b.maximizers.push(mu),
            _ => best = Some(BetaResult { value: v, maximizers: vec![mu] }),
        }
    }
    best.ok_or_else(|| CoreError::Domain(format!("no admissible partition of {n}")))
}

/// β′(n) = max over odd a of β(a)β(n−a), for even n ≥ 2.
pub fn beta_prime(n: usize) -> Result<Nat> {
    if n % 2 == 1 || n == 0 {
        return Err(CoreError::Domain(format!("beta_prime needs an even n >= 2, got {n}")));
    }
    Ok(match n {
        2 => Nat::one(),
        4 => Nat::from(3u32),
        6 => Nat::from(9u32),
        _ => beta(5) * beta(n - 5),
    })
}

/// β(k+n) / (β(k)β(n)), reduced.
pub fn beta_ratio(k: usize, n: usize) -> BigRational {
    BigRational::new(BigInt::from(beta(k + n)), BigInt::from(beta(k) * beta(n)))
}
