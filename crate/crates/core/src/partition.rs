//! Partition counts and partition enumeration.
//!
//! `p(n)` comes from Euler's pentagonal recurrence and `p₂(n)` from the
//! convolution of `p` with itself. Both live in a process-wide memo that only
//! ever grows, so results do not depend on call order.

use std::fmt;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exact nonnegative count.
pub type Nat = BigUint;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_odd_part(&self) -> bool {
        self.0.iter().any(|x| x % 2 == 1)
    }

    /// Adds one part, keeping the parts sorted.
    pub fn with_part(&self, part: usize) -> Self {
        let mut parts = self.0.clone();
        parts.push(part);
        Partition::new(parts)
    }
}

impl From<Vec<usize>> for Partition {
    fn from(parts: Vec<usize>) -> Self {
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Grow-only tables for `p(n)` and `p₂(n)`.
#[derive(Debug)]
pub struct PartitionMemo {
    table: RwLock<Vec<Nat>>,
    pair_table: RwLock<Vec<Nat>>,
}

impl Default for PartitionMemo {
    fn default() -> Self {
        Self::new()
    }
}

impl PartitionMemo {
    pub fn new() -> Self {
        PartitionMemo { table: RwLock::new(vec![Nat::one()]), pair_table: RwLock::new(Vec::new()) }
    }

    pub fn p(&self, n: usize) -> Nat {
        if let Some(v) = self.table.read().unwrap().get(n) {
            return v.clone();
        }
        let mut t = self.table.write().unwrap();
        while t.len() <= n {
            let next = pentagonal_step(&t);
            t.push(next);
        }
        t[n].clone()
    }

    pub fn p2(&self, n: usize) -> Nat {
        if let Some(v) = self.pair_table.read().unwrap().get(n) {
            return v.clone();
        }
        // Fill p first so we never hold both locks while extending p.
        let ps: Vec<Nat> = (0..=n).map(|m| self.p(m)).collect();
        let mut t = self.pair_table.write().unwrap();
        while t.len() <= n {
            let m = t.len();
            let s = (0..=m).map(|i| &ps[i] * &ps[m - i]).sum();
            t.push(s);
        }
        t[n].clone()
    }
}

/// p(n) from p(0..n) via p(n) = Σ_{k≥1} (−1)^{k+1} [p(n − k(3k−1)/2) + p(n − k(3k+1)/2)].
fn pentagonal_step(prev: &[Nat]) -> Nat {
    let n = prev.len();
    let mut plus = Nat::zero();
    let mut minus = Nat::zero();
    for k in 1.. {
        let g1 = k * (3 * k - 1) / 2;
        if g1 > n {
            break;
        }
        let g2 = k * (3 * k + 1) / 2;
        let acc = if k % 2 == 1 { &mut plus } else { &mut minus };
        *acc += &prev[n - g1];
        if g2 <= n {
            *acc += &prev[n - g2];
        }
    }
    plus - minus
}

static MEMO: LazyLock<PartitionMemo> = LazyLock::new(PartitionMemo::new);

/// p(n), the number of partitions of n.
pub fn partition_count(n: usize) -> Nat {
    MEMO.p(n)
}

/// p₂(n) = Σ_{m=0}^{n} p(m)p(n−m), the number of ordered pairs of partitions of total weight n.
pub fn pair_partition_count(n: usize) -> Nat {
    MEMO.p2(n)
}

/// Π_j p(μ_j); the empty partition gives 1.
pub fn partition_product(mu: &Partition) -> Nat {
    mu.parts().iter().map(|&x| partition_count(x)).product()
}

/// Streams every partition of `n` once, in reverse-lexicographic order
/// starting from `(n)`.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions { current: Some(if n == 0 { Vec::new() } else { vec![n] }) }
}

#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        // Successor: lower the last part above 1, then refill greedily.
        if let Some(i) = cur.iter().rposition(|&x| x > 1) {
            let v = cur[i] - 1;
            // The unit taken off cur[i] plus the trailing ones.
            let mut rest = cur.len() - i;
            let mut next = cur[..i].to_vec();
            next.push(v);
            while rest > 0 {
                let take = rest.min(v);
                next.push(take);
                rest -= take;
            }
            self.current = Some(next);
        }
        Some(Partition(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn small_counts() {
        let expected = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(partition_count(i), n(e));
        }
        assert_eq!(partition_count(100), "190569292".parse::<Nat>().unwrap());
    }

    #[test]
    fn pair_counts() {
        assert_eq!(pair_partition_count(0), n(1));
        assert_eq!(pair_partition_count(2), n(5));
        assert_eq!(pair_partition_count(3), n(10));
    }

    #[test]
    fn enumeration_order_and_counts() {
        let seven: Vec<_> = partitions_of(7).collect();
        assert_eq!(seven.len(), 15);
        assert_eq!(seven[0].parts(), &[7]);
        assert_eq!(seven[1].parts(), &[6, 1]);
        assert_eq!(seven.last().unwrap().parts(), &[1; 7]);
        assert!(seven.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(partitions_of(4).count(), 5);
        let zero: Vec<_> = partitions_of(0).collect();
        assert_eq!(zero, vec![Partition::empty()]);
    }

    #[test]
    fn enumeration_matches_count_47() {
        assert_eq!(Nat::from(partitions_of(47).count()), partition_count(47));
    }

    #[test]
    fn products() {
        assert_eq!(partition_product(&Partition::empty()), n(1));
        assert_eq!(partition_product(&Partition::new(vec![3, 4])), n(15));
        assert_eq!(partition_product(&Partition::new(vec![4, 4, 4])), n(125));
    }

    #[test]
    fn private_memo_agrees_with_global() {
        let m = PartitionMemo::new();
        assert_eq!(m.p2(30), pair_partition_count(30));
        assert_eq!(m.p(30), partition_count(30));
    }

    #[test]
    fn display() {
        assert_eq!(Partition::new(vec![4, 6, 5]).to_string(), "(6,5,4)");
        assert_eq!(Partition::empty().to_string(), "()");
    }
}
