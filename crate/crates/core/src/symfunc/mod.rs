//! Truncated symmetric functions over `Q[t]` in the power-sum basis.
//!
//! A [`SymSeries`] stores `sum c_{lambda,k} t^k p_lambda` for all
//! `|lambda| <= n_max`. Every operation drops terms of symmetric-function
//! degree above `n_max` as soon as they appear.

mod characters;
mod graded;
mod serial;

pub use characters::{character_table, from_schur, schur_expand, schur_expand_with, CharacterTable};
pub use graded::GradedSeries;
pub use serial::{SymSeriesRecord, TermRecord};

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{ChowError, Result};
use crate::partition::{factorial, partitions_of, Partition};
use crate::poly::TPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymSeries {
    n_max: usize,
    terms: BTreeMap<Partition, TPoly>,
}

impl SymSeries {
    pub fn zero(n_max: usize) -> Self {
        SymSeries { n_max, terms: BTreeMap::new() }
    }

    pub fn one(n_max: usize) -> Self {
        Self::term(Partition::empty(), TPoly::one(), n_max)
    }

    /// `c(t) p_lambda`, or zero if `lambda` is beyond the truncation.
    pub fn term(lambda: Partition, c: TPoly, n_max: usize) -> Self {
        let mut s = Self::zero(n_max);
        s.add_term(lambda, c);
        s
    }

    pub fn p(lambda: Partition, n_max: usize) -> Self {
        Self::term(lambda, TPoly::one(), n_max)
    }

    /// The single power sum `p_k`.
    pub fn power_sum(k: u32, n_max: usize) -> Self {
        Self::p(Partition::from_unsorted(vec![k]), n_max)
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn terms(&self) -> &BTreeMap<Partition, TPoly> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> TPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate `(lambda, t-exponent, coefficient)` in canonical order.
    pub fn iter_terms(&self) -> impl Iterator<Item = (&Partition, usize, &BigRational)> {
        self.terms.iter().flat_map(|(lam, poly)| {
            poly.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (lam, k, c))
        })
    }

    /// Adds `c(t) p_lambda` in place, keeping the no-zero-terms invariant.
    pub fn add_term(&mut self, lambda: Partition, c: TPoly) {
        if c.is_zero() || lambda.size() > self.n_max {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Build from raw triples; zero coefficients are ignored.
    pub fn from_terms(n_max: usize, terms: impl IntoIterator<Item = (Partition, usize, BigRational)>) -> Self {
        let mut s = Self::zero(n_max);
        for (lam, k, c) in terms {
            s.add_term(lam, TPoly::monomial(c, k));
        }
        s
    }

    pub fn truncate(&self, n_max: usize) -> Self {
        SymSeries {
            n_max,
            terms: self.terms.iter().filter(|(l, _)| l.size() <= n_max).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    /// Homogeneous degree-`n` part.
    pub fn component(&self, n: usize) -> SymSeries {
        SymSeries {
            n_max: self.n_max,
            terms: self.terms.iter().filter(|(l, _)| l.size() == n).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    pub fn is_homogeneous(&self, n: usize) -> bool {
        self.terms.keys().all(|l| l.size() == n)
    }

    /// Smallest symmetric-function degree present.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    /// Largest t-exponent present.
    pub fn t_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(TPoly::degree).max()
    }

    pub fn add(&self, other: &SymSeries) -> SymSeries {
        let n_max = self.n_max.min(other.n_max);
        let mut out = self.truncate(n_max);
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> SymSeries {
        self.map_coeffs(|c| -c)
    }

    pub fn sub(&self, other: &SymSeries) -> SymSeries {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> SymSeries {
        self.map_coeffs(|p| p.scale(c))
    }

    /// Multiply every coefficient by a polynomial in `t`.
    pub fn mul_poly(&self, c: &TPoly) -> SymSeries {
        self.map_coeffs(|p| p * c)
    }

    pub fn map_coeffs(&self, f: impl Fn(&TPoly) -> TPoly) -> SymSeries {
        let mut out = SymSeries::zero(self.n_max);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), f(c));
        }
        out
    }

    /// Divide every coefficient exactly by `t - 1`.
    pub fn div_t_minus_one(&self, context: &str) -> Result<SymSeries> {
        let mut out = SymSeries::zero(self.n_max);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c.div_t_minus_one(context)?);
        }
        Ok(out)
    }

    /// Truncated product; only pairs with `|lambda| + |mu| <= n_max` are formed.
    pub fn mul(&self, other: &SymSeries) -> SymSeries {
        let n_max = self.n_max.min(other.n_max);
        let a = by_degree(self, n_max);
        let b = by_degree(other, n_max);
        let mut acc: HashMap<Partition, TPoly> = HashMap::new();
        for (i, ai) in a.iter().enumerate() {
            for bj in b.iter().take(n_max - i + 1) {
                for (la, ca) in ai {
                    for (lb, cb) in bj {
                        let prod = *ca * *cb;
                        let slot = acc.entry(la.concat(lb)).or_default();
                        *slot = &*slot + &prod;
                    }
                }
            }
        }
        let mut out = SymSeries::zero(n_max);
        for (l, c) in acc {
            if !c.is_zero() {
                out.terms.insert(l, c);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> SymSeries {
        let mut acc = SymSeries::one(self.n_max);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Adams operation: `t -> t^k`, `p_d -> p_{kd}`.
    pub fn psi(&self, k: u32) -> SymSeries {
        assert!(k >= 1, "psi needs k >= 1");
        let mut out = SymSeries::zero(self.n_max);
        for (l, c) in &self.terms {
            out.add_term(l.scale(k), c.substitute_power(k as usize));
        }
        out
    }

    /// Whether the series has a nonzero bidegree-(0,0) term.
    pub fn has_constant_term(&self) -> bool {
        self.terms.get(&Partition::empty()).is_some_and(|c| !c.coeff(0).is_zero())
    }

    /// Plethysm `self ∘ inner`.
    ///
    /// The outer coefficients in `t` are scalars; only the power sums are
    /// substituted, `p_k -> psi_k(inner)`. The inner series must have no
    /// symmetric-degree-0 terms at all: a pure `t^j` term would make the
    /// composition an infinite sum that degree truncation cannot cut off.
    pub fn plethysm(&self, inner: &SymSeries) -> Result<SymSeries> {
        if inner.has_constant_term() {
            return Err(ChowError::ConstantTerm);
        }
        if inner.terms.contains_key(&Partition::empty()) {
            return Err(ChowError::DegreeZeroInner);
        }
        let n_max = self.n_max.min(inner.n_max);
        let inner = inner.truncate(n_max);

        // powers psi_d(inner)^m, built sequentially so the parallel part is read-only
        let mut needed: BTreeMap<u32, u32> = BTreeMap::new();
        for lam in self.terms.keys().filter(|l| l.size() <= n_max) {
            for (d, m) in lam.multiplicities() {
                let e = needed.entry(d).or_insert(0);
                *e = (*e).max(m);
            }
        }
        let mut powers: HashMap<(u32, u32), SymSeries> = HashMap::new();
        for (&d, &m_max) in &needed {
            let base = inner.psi(d);
            let mut acc = base.clone();
            powers.insert((d, 1), acc.clone());
            for m in 2..=m_max {
                acc = acc.mul(&base);
                powers.insert((d, m), acc.clone());
            }
        }

        let terms: Vec<(&Partition, &TPoly)> = self.terms.iter().filter(|(l, _)| l.size() <= n_max).collect();
        let pieces: Vec<SymSeries> = terms
            .par_iter()
            .map(|(lam, c)| {
                let mut prod = SymSeries::one(n_max);
                for (d, m) in lam.multiplicities() {
                    prod = prod.mul(&powers[&(d, m)]);
                }
                prod.mul_poly(c)
            })
            .collect();
        let mut out = SymSeries::zero(n_max);
        for piece in pieces {
            for (l, c) in piece.terms {
                out.add_term(l, c);
            }
        }
        Ok(out)
    }

    /// `n! * [p_{1^n}]` for every degree `n` where it is nonzero: the
    /// dimension polynomial of the corresponding graded representation.
    pub fn rk(&self) -> BTreeMap<usize, TPoly> {
        self.terms
            .iter()
            .filter(|(l, _)| l.parts().iter().all(|&p| p == 1))
            .map(|(l, c)| (l.size(), c.scale(&BigRational::from_integer(factorial(l.size())))))
            .collect()
    }
}

fn by_degree(s: &SymSeries, n_max: usize) -> Vec<Vec<(&Partition, &TPoly)>> {
    let mut buckets: Vec<Vec<(&Partition, &TPoly)>> = vec![Vec::new(); n_max + 1];
    for (l, c) in &s.terms {
        if l.size() <= n_max {
            buckets[l.size()].push((l, c));
        }
    }
    buckets
}

/// `h_n` in the power-sum basis, `sum_{lambda |- n} p_lambda / z_lambda`.
pub fn homogeneous_h(n: usize, n_max: usize) -> SymSeries {
    let mut s = SymSeries::zero(n_max);
    for lam in partitions_of(n) {
        let z = lam.z();
        s.add_term(lam, TPoly::constant(BigRational::new(One::one(), z)));
    }
    s
}

/// `e_n = sum_{lambda |- n} sign(lambda) p_lambda / z_lambda`.
pub fn elementary_e(n: usize, n_max: usize) -> SymSeries {
    let mut s = SymSeries::zero(n_max);
    for lam in partitions_of(n) {
        let sign = if (n - lam.len()).is_multiple_of(2) { 1 } else { -1 };
        let z = lam.z();
        s.add_term(lam, TPoly::constant(BigRational::new(sign.into(), z)));
    }
    s
}

/// Frobenius characteristic of a (graded) class function on `S_n`.
pub fn frobenius_from_character(n: usize, character: &BTreeMap<Partition, TPoly>) -> Result<SymSeries> {
    let mut s = SymSeries::zero(n);
    for lam in partitions_of(n) {
        let value = character.get(&lam).ok_or_else(|| ChowError::MissingCycleType(lam.to_string()))?;
        let z = BigRational::from_integer(lam.z());
        s.add_term(lam, value.scale(&z.recip()));
    }
    Ok(s)
}
