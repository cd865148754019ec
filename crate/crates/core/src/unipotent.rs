//! Unipotent character counts of Sp₂ₙ, Spin⁺₂ₙ and Spin⁻₂ₙ, and of GLₙ/Uₙ.

use std::fmt;

use num_traits::{One, Pow};

use crate::error::{CoreError, Result};
use crate::partition::{pair_partition_count, partition_count, Nat};

/// Which of α, α⁺, α⁻.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlphaKind {
    Symplectic,
    Plus,
    Minus,
}

impl AlphaKind {
    pub const ALL: [AlphaKind; 3] = [AlphaKind::Symplectic, AlphaKind::Plus, AlphaKind::Minus];

    pub fn value(self, n: usize) -> Nat {
        match self {
            AlphaKind::Symplectic => alpha(n),
            AlphaKind::Plus => alpha_plus(n),
            AlphaKind::Minus => alpha_minus(n),
        }
    }

    /// `α`, `α⁺` or `α⁻`.
    pub fn symbol(self) -> &'static str {
        match self {
            AlphaKind::Symplectic => "α",
            AlphaKind::Plus => "α⁺",
            AlphaKind::Minus => "α⁻",
        }
    }
}

impl fmt::Display for AlphaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlphaKind::Symplectic => "symplectic",
            AlphaKind::Plus => "plus",
            AlphaKind::Minus => "minus",
        })
    }
}

/// α(n) = Σ_{j ≥ 0, j²+j ≤ n} p₂(n − j² − j).
pub fn alpha(n: usize) -> Nat {
    (0..).map(|j| j * j + j).take_while(|&t| t <= n).map(|t| pair_partition_count(n - t)).sum()
}

/// α⁺(n) = ½p₂(n) + ¾(1+(−1)ⁿ)p(n/2) + Σ_{j>1 even} p₂(n−j²), with α⁺(0) = 1.
pub fn alpha_plus(n: usize) -> Nat {
    if n == 0 {
        return Nat::one();
    }
    // Work with 4α⁺ so every term is integral.
    let mut four = pair_partition_count(n) * 2u32;
    if n.is_multiple_of(2) {
        four += partition_count(n / 2) * 6u32;
    }
    four += (2..)
        .step_by(2)
        .map(|j: usize| j * j)
        .take_while(|&sq| sq <= n)
        .map(|sq| pair_partition_count(n - sq) * 4u32)
        .sum::<Nat>();
    let (q, r) = (&four / 4u32, &four % 4u32);
    assert!(r == Nat::ZERO, "4·alpha_plus({n}) = {four} is not divisible by 4");
    q
}

/// α⁻(n) = α⁺(n) − 2p(n/2) for even n ≥ 2, α⁺(n) for odd n; α⁻(0) = 1.
pub fn alpha_minus(n: usize) -> Nat {
    if n == 0 {
        return Nat::one();
    }
    let plus = alpha_plus(n);
    if n % 2 == 1 {
        plus
    } else {
        plus - partition_count(n / 2) * 2u32
    }
}

/// Unipotent characters of GLₙ(q) and Uₙ(q): p(n).
pub fn nu_linear(n: usize) -> Nat {
    partition_count(n)
}

/// (n²−1)·2^{⌊n/2⌋+2}, a crude upper estimate for α(n) when n ≥ 2.
pub fn alpha_upper_estimate(n: usize) -> Result<Nat> {
    if n < 2 {
        return Err(CoreError::Domain(format!("alpha_upper_estimate needs n >= 2, got {n}")));
    }
    Ok(Nat::from(n * n - 1) * Nat::from(2u32).pow(n / 2 + 2))
}
