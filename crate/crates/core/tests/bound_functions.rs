use lusztig_core::bounds::rational;
use lusztig_core::{
    alpha, alpha_minus, alpha_plus, beta, bound_value, max_alpha_beta, max_gamma, un5_constant, AlphaKind, BoundKind,
    BoundSource, GammaKind, Nat, Un5Column,
};
use num_traits::Pow;
use proptest::prelude::*;

#[test]
fn closed_forms_equal_brute_force_maxima() {
    for kind in BoundKind::ALL {
        for n in kind.threshold()..=60 {
            let brute = match kind.source() {
                BoundSource::AlphaBeta(k) => max_alpha_beta(k, n).value,
                BoundSource::Gamma(g) => max_gamma(g, n).value,
            };
            assert_eq!(bound_value(kind, n).unwrap(), brute, "{kind} at {n}");
        }
    }
}

#[test]
fn closed_form_witness_evaluates_to_coefficient() {
    for kind in BoundKind::ALL {
        for (r, t) in kind.terms().iter().enumerate() {
            let head = match (kind.source(), t.b) {
                (BoundSource::AlphaBeta(k), None) => k.value(t.a),
                (BoundSource::Gamma(g), Some(b)) => {
                    let (k1, k2) = g.factors();
                    k1.value(t.a) * k2.value(b)
                }
                _ => unreachable!(),
            };
            let used = t.a + t.b.unwrap_or(0);
            // head·β(offset − used) is the coefficient at n = offset
            assert_eq!(head * beta(t.offset - used), Nat::from(t.coefficient), "{kind} residue {r}");
            assert_eq!(t.offset % 4, r);
        }
    }
}

#[test]
fn alpha_beta_argmax_is_stable_from_18() {
    let expect = |k: AlphaKind| match k {
        AlphaKind::Symplectic => [16, 15, 14, 15],
        _ => [16, 17, 14, 15],
    };
    for k in AlphaKind::ALL {
        for n in 18..=60 {
            assert_eq!(max_alpha_beta(k, n).witnesses, vec![expect(k)[n % 4]], "{k} at {n}");
        }
        for n in 1..18 {
            assert!(max_alpha_beta(k, n).witnesses.contains(&n), "{k} at {n}");
        }
    }
}

#[test]
fn gamma_argmax_table() {
    let table = |g: GammaKind| match g {
        GammaKind::AA => [(14, 14), (15, 14), (15, 15), (16, 15)],
        GammaKind::APlus => [(16, 16), (15, 14), (14, 16), (15, 16)],
        GammaKind::PlusPlus => [(16, 16), (15, 14), (16, 14), (16, 15)],
        GammaKind::PlusMinus => [(16, 16), (15, 14), (16, 14), (15, 16)],
    };
    for g in GammaKind::ALL {
        let from = if g == GammaKind::AA { 28 } else { 29 };
        for n in from..=60 {
            assert_eq!(max_gamma(g, n).witnesses, vec![table(g)[n % 4]], "{g} at {n}");
        }
    }
}

#[test]
fn gamma_witnesses_stay_in_window() {
    for g in GammaKind::ALL {
        for n in 0..=60 {
            for &(a, b) in &max_gamma(g, n).witnesses {
                assert!(a <= 17 && b <= 17, "{g} at {n}: ({a},{b})");
                if n > 45 {
                    assert!(a > 13 && b > 13, "{g} at {n}: ({a},{b})");
                }
                if n - a - b > 11 {
                    assert!(a > 13 && b > 13, "{g} at {n}: ({a},{b})");
                }
            }
        }
    }
}

#[test]
fn five_fold_alpha_growth_switch() {
    for a in 1..=43 {
        for (name, f) in [("alpha", alpha as fn(usize) -> Nat), ("plus", alpha_plus), ("minus", alpha_minus)] {
            let (next, five) = (f(a + 4), f(a) * 5u32);
            if a <= 13 {
                assert!(next > five, "{name} at {a}");
            } else {
                assert!(next < five, "{name} at {a}");
            }
        }
    }
}

#[test]
fn sup_constants() {
    let check = |c: Un5Column, bound: (i64, i64), below: bool| {
        let k = un5_constant(c);
        assert_eq!(k.is_below(&rational(bound.0, bound.1)), below, "{}", c.name());
        k
    };
    let a = check(Un5Column::A, (3, 2), true);
    assert_eq!(a.c_fourth, rational(1, 1));
    assert_eq!(a.attained_at.1, 0);
    assert_eq!(check(Un5Column::CEven, (15, 1), true).c_decimal, "14.4414");
    assert_eq!(check(Un5Column::BOdd, (95, 1), true).c_decimal, "94.9671");
    assert_eq!(check(Un5Column::COdd, (209, 1), true).c_decimal, "208.5563");
    assert_eq!(check(Un5Column::DOdd, (44, 1), true).c_decimal, "43.2437");
    let d = check(Un5Column::DEven, (6, 1), false);
    assert_eq!(d.c_decimal, "6.5760");
    assert_eq!(d.attained_at, ("f_plus", 0));
    // 4110⁴ / 5¹⁶ exactly
    assert_eq!(d.c_fourth, rational(4110i64.pow(4), 5i64.pow(16)));
}

#[test]
fn decimal_is_a_floor() {
    for c in Un5Column::ALL {
        let k = un5_constant(c);
        let (int, frac) = k.c_decimal.split_once('.').unwrap();
        let digits: i64 = format!("{int}{frac}").parse().unwrap();
        let lo = rational(digits, 10_000);
        let hi = rational(digits + 1, 10_000);
        assert!(Pow::pow(&lo, 4u32) <= k.c_fourth && k.c_fourth < Pow::pow(&hi, 4u32), "{}", c.name());
    }
}

proptest! {
    #[test]
    fn closed_forms_scale_by_five(ki in 0usize..7, extra in 0usize..200) {
        let kind = BoundKind::ALL[ki];
        let n = kind.threshold() + extra;
        prop_assert_eq!(bound_value(kind, n + 4).unwrap(), bound_value(kind, n).unwrap() * 5u32);
    }

    #[test]
    fn below_threshold_is_refused(ki in 0usize..7, n in 0usize..18) {
        prop_assert!(bound_value(BoundKind::ALL[ki], n).is_err());
    }
}
