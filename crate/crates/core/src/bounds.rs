//! Closed-form maxima f, f±, τ, θ, θ± and the product families they bound.

use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use crate::argmax::{Argmax, MaxResult};
use crate::beta::beta;
use crate::error::{CoreError, Result};
use crate::group::{Family, GroupSpec, QParity};
use crate::partition::Nat;
use crate::unipotent::AlphaKind;

/// One residue class of a closed form: `coefficient · 5^{(n − offset)/4}`,
/// realized by α-arguments `a` (and `b` for the two-factor kinds).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidueTerm {
    pub coefficient: u64,
    pub offset: usize,
    pub a: usize,
    pub b: Option<usize>,
}

const fn t1(coefficient: u64, offset: usize, a: usize) -> ResidueTerm {
    ResidueTerm { coefficient, offset, a, b: None }
}

const fn t2(coefficient: u64, offset: usize, a: usize, b: usize) -> ResidueTerm {
    ResidueTerm { coefficient, offset, a, b: Some(b) }
}

/// The α-product families maximized over pairs (a, b).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GammaKind {
    /// α(a)α(b)
    AA,
    /// α(a)α⁺(b)
    APlus,
    /// α⁺(a)α⁺(b)
    PlusPlus,
    /// α⁻(a)α⁺(b)
    PlusMinus,
}

impl GammaKind {
    pub const ALL: [GammaKind; 4] = [GammaKind::AA, GammaKind::APlus, GammaKind::PlusPlus, GammaKind::PlusMinus];

    pub fn factors(self) -> (AlphaKind, AlphaKind) {
        use AlphaKind::*;
        match self {
            GammaKind::AA => (Symplectic, Symplectic),
            GammaKind::APlus => (Symplectic, Plus),
            GammaKind::PlusPlus => (Plus, Plus),
            GammaKind::PlusMinus => (Minus, Plus),
        }
    }

    pub fn is_symmetric(self) -> bool {
        matches!(self, GammaKind::AA | GammaKind::PlusPlus)
    }

    pub fn name(self) -> &'static str {
        match self {
            GammaKind::AA => "aa",
            GammaKind::APlus => "a_plus",
            GammaKind::PlusPlus => "plusplus",
            GammaKind::PlusMinus => "plus_minus",
        }
    }
}

impl fmt::Display for GammaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GammaKind {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        GammaKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| CoreError::Domain(format!("unknown gamma kind `{s}`")))
    }
}

/// Where a bound's small-n values come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSource {
    AlphaBeta(AlphaKind),
    Gamma(GammaKind),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    F,
    FPlus,
    FMinus,
    Tau,
    Theta,
    ThetaPlus,
    ThetaMinus,
}

impl BoundKind {
    pub const ALL: [BoundKind; 7] = [
        BoundKind::F,
        BoundKind::FPlus,
        BoundKind::FMinus,
        BoundKind::Tau,
        BoundKind::Theta,
        BoundKind::ThetaPlus,
        BoundKind::ThetaMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::F => "f",
            BoundKind::FPlus => "f_plus",
            BoundKind::FMinus => "f_minus",
            BoundKind::Tau => "tau",
            BoundKind::Theta => "theta",
            BoundKind::ThetaPlus => "theta_plus",
            BoundKind::ThetaMinus => "theta_minus",
        }
    }

    /// Smallest n for which the closed form holds.
    pub fn threshold(self) -> usize {
        match self.source() {
            BoundSource::AlphaBeta(_) => 18,
            BoundSource::Gamma(_) => 32,
        }
    }

    pub fn source(self) -> BoundSource {
        use AlphaKind::*;
        match self {
            BoundKind::F => BoundSource::AlphaBeta(Symplectic),
            BoundKind::FPlus => BoundSource::AlphaBeta(Plus),
            BoundKind::FMinus => BoundSource::AlphaBeta(Minus),
            BoundKind::Tau => BoundSource::Gamma(GammaKind::AA),
            BoundKind::Theta => BoundSource::Gamma(GammaKind::APlus),
            BoundKind::ThetaPlus => BoundSource::Gamma(GammaKind::PlusPlus),
            BoundKind::ThetaMinus => BoundSource::Gamma(GammaKind::PlusMinus),
        }
    }

    /// Terms for n ≡ 0, 1, 2, 3 mod 4.
    pub fn terms(self) -> [ResidueTerm; 4] {
        match self {
            BoundKind::F => [t1(8988, 16, 16), t1(66396, 21, 15), t1(4020, 14, 14), t1(6036, 15, 15)],
            BoundKind::FPlus => [t1(4110, 16, 16), t1(6007, 17, 17), t1(1836, 14, 14), t1(2730, 15, 15)],
            BoundKind::FMinus => [t1(4066, 16, 16), t1(6007, 17, 17), t1(1806, 14, 14), t1(2730, 15, 15)],
            BoundKind::Tau => {
                [t2(16160400, 28, 14, 14), t2(24264720, 29, 15, 14), t2(36433296, 30, 15, 15), t2(54251568, 31, 16, 15)]
            }
            BoundKind::Theta => {
                [t2(36940680, 32, 16, 16), t2(11082096, 29, 15, 14), t2(16522200, 30, 14, 16), t2(24807960, 31, 15, 16)]
            }
            BoundKind::ThetaPlus => {
                [t2(16892100, 32, 16, 16), t2(5012280, 29, 15, 14), t2(7545960, 30, 16, 14), t2(11220300, 31, 16, 15)]
            }
            BoundKind::ThetaMinus => {
                [t2(16711260, 32, 16, 16), t2(5012280, 29, 15, 14), t2(7465176, 30, 16, 14), t2(11220300, 31, 15, 16)]
            }
        }
    }

    /// The bound governing `spec`, if any (GL/U are bounded by β itself).
    pub fn for_spec(spec: &GroupSpec) -> Option<BoundKind> {
        use Family::*;
        Some(match (spec.family(), spec.q_parity()) {
            (Linear | Unitary, _) => return None,
            (C | B, QParity::Even) => BoundKind::F,
            (DPlus, QParity::Even) => BoundKind::FPlus,
            (DMinus, QParity::Even) => BoundKind::FMinus,
            (C, QParity::Odd) => BoundKind::Tau,
            (B, QParity::Odd) => BoundKind::Theta,
            (DPlus, QParity::Odd) => BoundKind::ThetaPlus,
            (DMinus, QParity::Odd) => BoundKind::ThetaMinus,
        })
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundKind {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        BoundKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| CoreError::Domain(format!("unknown bound `{s}`")))
    }
}

fn pow5(e: usize) -> Nat {
    Nat::from(5u32).pow(e)
}

/// The closed form at n ≥ threshold.
pub fn bound_value(kind: BoundKind, n: usize) -> Result<Nat> {
    if n < kind.threshold() {
        return Err(CoreError::BelowThreshold { kind: kind.name(), n, threshold: kind.threshold() });
    }
    let t = kind.terms()[n % 4];
    Ok(Nat::from(t.coefficient) * pow5((n - t.offset) / 4))
}

/// Witness of a bound-function maximum: a single `a` or a pair `(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitWitness {
    A(usize),
    AB(usize, usize),
}

impl fmt::Display for SplitWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitWitness::A(a) => write!(f, "a={a}"),
            SplitWitness::AB(a, b) => write!(f, "(a,b)=({a},{b})"),
        }
    }
}

/// Exact maximum of the product family behind `kind`; meant for n below the
/// threshold, though it is exact for every n.
pub fn small_n_max(kind: BoundKind, n: usize) -> MaxResult<SplitWitness> {
    match kind.source() {
        BoundSource::AlphaBeta(k) => max_alpha_beta(k, n).map(SplitWitness::A),
        BoundSource::Gamma(g) => max_gamma(g, n).map(|(a, b)| SplitWitness::AB(a, b)),
    }
}

/// max over 0 ≤ a ≤ n of α-variant(a)·β(n−a); witnesses in decreasing a.
pub fn max_alpha_beta(kind: AlphaKind, n: usize) -> MaxResult<usize> {
    let mut best = Argmax::new();
    for a in (0..=n).rev() {
        best.offer(kind.value(a) * beta(n - a), a);
    }
    best.finish().expect("range is nonempty")
}

fn gamma_scan(kind: GammaKind, n: usize, equal_sum: bool) -> MaxResult<(usize, usize)> {
    let (k1, k2) = kind.factors();
    let f1: Vec<Nat> = (0..=n).map(|x| k1.value(x)).collect();
    let f2: Vec<Nat> = (0..=n).map(|x| k2.value(x)).collect();
    let betas: Vec<Nat> = (0..=n).map(beta).collect();
    let mut best = Argmax::new();
    for a in 0..=n {
        let lo = if equal_sum { n - a } else { 0 };
        for b in lo..=n - a {
            best.offer(&f1[a] * &f2[b] * &betas[n - a - b], (a, b));
        }
    }
    let mut r = best.finish().expect("range is nonempty");
    if kind.is_symmetric() {
        for w in &mut r.witnesses {
            *w = (w.0.max(w.1), w.0.min(w.1));
        }
    }
    r.witnesses.sort_by_key(|&(a, b)| (a < b, Reverse(a), Reverse(b)));
    r.witnesses.dedup();
    r
}

/// max over a, b ≥ 0, a+b ≤ n of the `kind` product times β(n−a−b).
/// Symmetric kinds report pairs with a ≥ b; otherwise (a, b) keeps the
/// factor order of the kind.
pub fn max_gamma(kind: GammaKind, n: usize) -> MaxResult<(usize, usize)> {
    gamma_scan(kind, n, false)
}

/// The same maximum restricted to a + b = n.
pub fn max_gamma_eq(kind: GammaKind, n: usize) -> MaxResult<(usize, usize)> {
    gamma_scan(kind, n, true)
}

/// The exact maximum of ν for `spec`: closed form at or above the threshold,
/// product-family maximum below it, β(n) for GL/U.
pub fn series_bound(spec: &GroupSpec) -> Nat {
    let n = spec.rank();
    match BoundKind::for_spec(spec) {
        None => beta(n),
        Some(kind) if n >= kind.threshold() => bound_value(kind, n).expect("n is at or above threshold"),
        Some(kind) => small_n_max(kind, n).value,
    }
}

/// Columns of the sup-constant table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Un5Column {
    A,
    CEven,
    DEven,
    BOdd,
    COdd,
    DOdd,
}

impl Un5Column {
    pub const ALL: [Un5Column; 6] =
        [Un5Column::A, Un5Column::CEven, Un5Column::DEven, Un5Column::BOdd, Un5Column::COdd, Un5Column::DOdd];

    pub fn name(self) -> &'static str {
        match self {
            Un5Column::A => "A",
            Un5Column::CEven => "C_even",
            Un5Column::DEven => "D_even",
            Un5Column::BOdd => "B_odd",
            Un5Column::COdd => "C_odd",
            Un5Column::DOdd => "D_odd",
        }
    }

    fn kinds(self) -> &'static [BoundKind] {
        match self {
            Un5Column::A => &[],
            Un5Column::CEven => &[BoundKind::F],
            Un5Column::DEven => &[BoundKind::FPlus, BoundKind::FMinus],
            Un5Column::BOdd => &[BoundKind::Theta],
            Un5Column::COdd => &[BoundKind::Tau],
            Un5Column::DOdd => &[BoundKind::ThetaPlus, BoundKind::ThetaMinus],
        }
    }
}

impl FromStr for Un5Column {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        Un5Column::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CoreError::Domain(format!("unknown constant column `{s}`")))
    }
}

/// sup_n bound(n)/5^{n/4}, kept as its exact fourth power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Un5Constant {
    pub column: Un5Column,
    pub c_fourth: BigRational,
    /// ⌊c·10⁴⌋/10⁴ rendered with four decimals.
    pub c_decimal: String,
    /// Bound name (`beta` for column A) and residue attaining the supremum.
    pub attained_at: (&'static str, usize),
}

impl Un5Constant {
    /// c < bound, decided as c⁴ < bound⁴.
    pub fn is_below(&self, bound: &BigRational) -> bool {
        self.c_fourth < Pow::pow(bound, 4u32)
    }
}

const BETA_TERMS: [(u64, usize); 4] = [(1, 0), (7, 5), (11, 6), (77, 11)];

/// Within a residue class the ratio to 5^{n/4} is the constant
/// coefficient/5^{offset/4}, so c⁴ is the largest coefficient⁴/5^{offset}.
pub fn un5_constant(column: Un5Column) -> Un5Constant {
    let mut candidates: Vec<(&'static str, usize, u64, usize)> = Vec::new();
    if column == Un5Column::A {
        for (r, &(c, o)) in BETA_TERMS.iter().enumerate() {
            candidates.push(("beta", r, c, o));
        }
    }
    for &k in column.kinds() {
        for (r, t) in k.terms().iter().enumerate() {
            candidates.push((k.name(), r, t.coefficient, t.offset));
        }
    }
    let (mut best, mut at) = (BigRational::zero(), ("", 0));
    for (name, r, c, o) in candidates {
        let q = BigRational::new(BigInt::from(c).pow(4u32), BigInt::from(5).pow(o as u32));
        if q > best {
            best = q;
            at = (name, r);
        }
    }
    Un5Constant { column, c_decimal: fourth_root_decimal(&best, 4), c_fourth: best, attained_at: at }
}

/// ⌊x^{1/4}·10^digits⌋ as a decimal string.
fn fourth_root_decimal(x: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10).pow(4 * digits);
    let scaled = (x.numer() * scale).div_floor(x.denom());
    let root = scaled.nth_root(4);
    let unit = BigInt::from(10).pow(digits);
    let (int, frac) = root.div_rem(&unit);
    format!("{int}.{frac:0>width$}", width = digits as usize)
}

/// n/d as an exact rational.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
