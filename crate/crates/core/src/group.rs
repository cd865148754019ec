use std::fmt;
use std::str::FromStr;

use crate::error::{CoreError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Linear,
    Unitary,
    B,
    C,
    DPlus,
    DMinus,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::Linear, Family::Unitary, Family::B, Family::C, Family::DPlus, Family::DMinus];

    /// GLₙ or Uₙ.
    pub fn is_type_a(self) -> bool {
        matches!(self, Family::Linear | Family::Unitary)
    }

    pub fn is_orthogonal(self) -> bool {
        matches!(self, Family::B | Family::DPlus | Family::DMinus)
    }

    /// Form sign of the even-dimensional orthogonal families.
    pub fn form_sign(self) -> Option<Sign> {
        match self {
            Family::DPlus => Some(Sign::Plus),
            Family::DMinus => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Linear => "GL",
            Family::Unitary => "U",
            Family::B => "B",
            Family::C => "C",
            Family::DPlus => "D+",
            Family::DMinus => "D-",
        })
    }
}

impl FromStr for Family {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "gl" | "linear" | "a" => Family::Linear,
            "u" | "gu" | "unitary" => Family::Unitary,
            "b" => Family::B,
            "c" => Family::C,
            "d+" | "dplus" => Family::DPlus,
            "d-" | "dminus" => Family::DMinus,
            _ => return Err(CoreError::Domain(format!("unknown family `{s}`"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QParity {
    Even,
    Odd,
}

impl fmt::Display for QParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QParity::Even => "even",
            QParity::Odd => "odd",
        })
    }
}

/// Witt type of an even-dimensional orthogonal space: `+` split, `−` defect 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A classical group G* of the given family and rank over a field of the given
/// characteristic parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    family: Family,
    rank: usize,
    q_parity: QParity,
    q_mod4: Option<u8>,
}

impl GroupSpec {
    /// B with q even is the same count problem as C and is stored as C.
    pub fn new(family: Family, rank: usize, q_parity: QParity) -> Result<Self> {
        if rank == 0 {
            return Err(CoreError::Domain("rank must be positive".into()));
        }
        let family = match (family, q_parity) {
            (Family::B, QParity::Even) => Family::C,
            (f, _) => f,
        };
        Ok(GroupSpec { family, rank, q_parity, q_mod4: None })
    }

    /// Records q mod 4 (1 or 3); only meaningful for odd q.
    pub fn with_q_mod4(mut self, r: u8) -> Result<Self> {
        if self.q_parity != QParity::Odd || !(r == 1 || r == 3) {
            return Err(CoreError::Domain(format!("q mod 4 = {r} is not compatible with q {}", self.q_parity)));
        }
        self.q_mod4 = Some(r);
        Ok(self)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn q_parity(&self) -> QParity {
        self.q_parity
    }

    pub fn q_mod4(&self) -> Option<u8> {
        self.q_mod4
    }

    /// ε(n) = (−1)^{(q−1)n/2}; `None` when q mod 4 is unknown and it matters.
    pub fn epsilon(&self) -> Option<Sign> {
        match self.q_parity {
            QParity::Even => Some(Sign::Plus),
            QParity::Odd if self.rank.is_multiple_of(2) => Some(Sign::Plus),
            QParity::Odd => self.q_mod4.map(|r| if r == 1 { Sign::Plus } else { Sign::Minus }),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} rank {}", self.family, self.rank)?;
        if !self.family.is_type_a() {
            write!(f, ", q {}", self.q_parity)?;
        }
        if let Some(r) = self.q_mod4 {
            write!(f, " (q = {r} mod 4)")?;
        }
        Ok(())
    }
}
