//! Integer partitions, used both as cycle types and as p-basis indices.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{ChowError, Result};

/// A weakly decreasing sequence of positive parts.
///
/// Partitions are ordered by size first and then reverse-lexicographically,
/// so `(3) < (2,1) < (1,1,1)`. This is the ordering used for every
/// serialized series and table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates that parts are positive and weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(ChowError::OutOfRange(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ChowError::OutOfRange(format!("parts not decreasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1, 1, ..., 1)` of size `n`.
    pub fn ones(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Union of the two multisets of parts.
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] >= other.0[j] {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.0[i..]);
        parts.extend_from_slice(&other.0[j..]);
        Partition(parts)
    }

    /// Multiply every part by `k`.
    pub fn scale(&self, k: u32) -> Partition {
        Partition(self.0.iter().map(|&p| p * k).collect())
    }

    /// Centralizer order of a permutation with this cycle type.
    pub fn z(&self) -> BigInt {
        z_lambda(self)
    }

    /// Compact label such as `31` or `2211`; parts above 9 are comma-joined.
    pub fn label(&self) -> String {
        if self.0.iter().all(|&p| p < 10) {
            self.0.iter().map(|p| p.to_string()).collect()
        } else {
            self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n as u32, n as u32, &mut cur, &mut out);
    out
}

/// `prod_d d^{m_d} m_d!`
pub fn z_lambda(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (d, m) in lambda.multiplicities() {
        for i in 1..=m {
            z *= BigInt::from(d) * BigInt::from(i);
        }
    }
    z
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(6).len(), 11);
        let ps = partitions_of(7);
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn centralizers() {
        assert_eq!(z_lambda(&Partition::ones(5)), BigInt::from(120));
        assert_eq!(z_lambda(&p(&[2, 1])), BigInt::from(2));
        assert_eq!(z_lambda(&p(&[3])), BigInt::from(3));
        assert_eq!(z_lambda(&p(&[2, 2, 1])), BigInt::from(8));
        for n in 1..=8 {
            let nf = factorial(n);
            for lam in partitions_of(n) {
                assert_eq!(&nf % lam.z(), BigInt::from(0));
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=9 {
            let total: num_rational::BigRational =
                partitions_of(n).iter().map(|l| num_rational::BigRational::new(factorial(n), l.z())).sum();
            assert_eq!(total, num_rational::BigRational::from_integer(factorial(n)));
        }
    }

    #[test]
    fn validation_and_helpers() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(p(&[3, 1]).concat(&p(&[2, 1])), p(&[3, 2, 1, 1]));
        assert_eq!(p(&[2, 1]).scale(3), p(&[6, 3]));
        assert_eq!(p(&[2, 2, 1]).multiplicities(), vec![(2, 2), (1, 1)]);
        assert_eq!(p(&[3, 1, 1, 1]).label(), "3111");
        assert_eq!(p(&[10, 2]).label(), "10,2");
    }
}
