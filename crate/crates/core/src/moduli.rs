//! The equivariant series `M = sum_n M_n(t)` of the open moduli spaces
//! `M_{0,n+1}`, built from twisted point counts of configuration spaces.
//!
//! `M_{0,n+1}` is the space of `n` distinct points on the affine line modulo
//! affine transformations (the marking `0` sits at infinity). For a
//! permutation `sigma` of cycle type `lambda`, the number of configurations
//! fixed by `sigma ∘ Frobenius` is a polynomial in `q`; dividing by the
//! `q(q-1)` points of the affine group and reading `q` as `t` gives the
//! graded character of `M_n` at `lambda`, because the cohomology is pure.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{ChowError, Result};
use crate::partition::{factorial, partitions_of, Partition};
use crate::poly::{rat, QPoly, TPoly};
use crate::symfunc::{frobenius_from_character, GradedSeries, SymSeries};

fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of closed points of degree `d` on the affine line:
/// `(1/d) sum_{e | d} mu(e) q^{d/e}`.
pub fn necklace(d: usize) -> QPoly {
    assert!(d >= 1, "necklace needs d >= 1");
    let mut coeffs = vec![BigRational::zero(); d + 1];
    for e in (1..=d).filter(|e| d.is_multiple_of(*e)) {
        coeffs[d / e] += rat(mobius(e as u64));
    }
    TPoly::from_coeffs(coeffs).scale(&BigRational::new(BigInt::from(1), BigInt::from(d)))
}

/// Configurations of `|lambda|` distinct labelled points on the affine line
/// fixed by `sigma ∘ Frobenius`, `sigma` of cycle type `lambda`.
pub fn twisted_count(lambda: &Partition) -> QPoly {
    let mut total = QPoly::one();
    for (d, m) in lambda.multiplicities() {
        let nd = necklace(d as usize);
        let dm = rat(i64::from(d).pow(m));
        let mut falling = QPoly::constant(dm);
        for i in 0..m {
            falling = &falling * &(&nd - &QPoly::from_ints(&[i64::from(i)]));
        }
        total = &total * &falling;
    }
    debug_assert!(total.is_integral());
    total
}

/// `M_n` in the power-sum basis, `t` standing for the weight variable `q`.
pub fn m_component(n: usize) -> Result<SymSeries> {
    if n < 2 {
        return Err(ChowError::OutOfRange(format!("M_n needs n >= 2, got {n}")));
    }
    let mut character = BTreeMap::new();
    for lam in partitions_of(n) {
        let count = twisted_count(&lam);
        // divide by q(q - 1): first by q, then by (q - 1)
        let (by_q, rem) = count.div_rem_linear(0);
        if !rem.is_zero() {
            return Err(ChowError::InexactDivision { context: format!("twisted count of {lam} by q") });
        }
        let quotient = by_q.div_t_minus_one(&format!("twisted count of {lam} by q-1"))?;
        character.insert(lam, quotient);
    }
    frobenius_from_character(n, &character)
}

/// `M` with components `2..=n_max`; construction checks the component
/// invariants (homogeneity, t-degree `n-2`, and the dimension polynomial).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MSeries {
    series: GradedSeries,
}

impl MSeries {
    pub fn n_max(&self) -> usize {
        self.series.n_max()
    }

    pub fn component(&self, n: usize) -> SymSeries {
        self.series.component(n)
    }

    pub fn as_graded(&self) -> &GradedSeries {
        &self.series
    }

    pub fn total(&self) -> SymSeries {
        self.series.total()
    }
}

/// `prod_{j=2}^{n-1} (t - j)`, the dimension polynomial of `M_n`.
pub fn m_dimension_polynomial(n: usize) -> TPoly {
    (2..n).fold(TPoly::one(), |acc, j| &acc * &TPoly::linear(j as i64))
}

pub fn m_series(n_max: usize) -> Result<MSeries> {
    if n_max < 2 {
        return Err(ChowError::OutOfRange(format!("m_series needs n_max >= 2, got {n_max}")));
    }
    let mut series = GradedSeries::new(n_max);
    for n in 2..=n_max {
        let c = m_component(n)?.truncate(n_max);
        if c.t_degree() != Some(n - 2) {
            return Err(ChowError::OutOfRange(format!("M_{n} has t-degree {:?}", c.t_degree())));
        }
        let top = c.coeff(&Partition::ones(n)).scale(&BigRational::from_integer(factorial(n)));
        if top != m_dimension_polynomial(n) {
            return Err(ChowError::OutOfRange(format!("M_{n} has the wrong dimension polynomial")));
        }
        series.set(n, c)?;
    }
    Ok(MSeries { series })
}

/// Value of a count polynomial at an integer `q`.
pub fn count_at(p: &QPoly, q: i64) -> BigRational {
    p.eval(&rat(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{homogeneous_h, schur_expand};

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn necklace_examples() {
        assert_eq!(necklace(1), TPoly::t());
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(necklace(2), TPoly::from_ints(&[0, -1, 1]).scale(&half));
        let third = BigRational::new(1.into(), 3.into());
        assert_eq!(necklace(3), TPoly::from_ints(&[0, -1, 0, 1]).scale(&third));
        // integer valued at prime powers
        for d in 1..=8 {
            for q in [2, 3, 4, 5, 7, 8, 9] {
                assert!(count_at(&necklace(d), q).is_integer());
            }
        }
    }

    #[test]
    fn twisted_count_examples() {
        for n in 1..=6 {
            let falling = (0..n).fold(TPoly::one(), |acc, i| &acc * &TPoly::linear(i as i64));
            assert_eq!(twisted_count(&Partition::ones(n)), falling);
        }
        assert_eq!(twisted_count(&part(&[2])), TPoly::from_ints(&[0, -1, 1]));
        assert_eq!(twisted_count(&part(&[3])), TPoly::from_ints(&[0, -1, 0, 1]));
    }

    #[test]
    fn twisted_counts_match_brute_force_over_f2_f3() {
        // direct count over the prime field F_p of configurations x with F(x_i) = x_{sigma(i)}:
        // for p prime the Frobenius on F_p points is trivial, so only the identity
        // type can have rational configurations; everything else needs extensions.
        for p in [2i64, 3, 5] {
            for n in 1..=4 {
                let mut count = 0i64;
                let pts: Vec<i64> = (0..p).collect();
                let mut idx = vec![0usize; n];
                loop {
                    let xs: Vec<i64> = idx.iter().map(|&i| pts[i]).collect();
                    let distinct = (0..n).all(|a| (a + 1..n).all(|b| xs[a] != xs[b]));
                    if distinct {
                        count += 1;
                    }
                    let mut k = 0;
                    while k < n && idx[k] + 1 == pts.len() {
                        idx[k] = 0;
                        k += 1;
                    }
                    if k == n {
                        break;
                    }
                    idx[k] += 1;
                }
                assert_eq!(count_at(&twisted_count(&Partition::ones(n)), p), rat(count));
            }
        }
    }

    #[test]
    fn twisted_counts_nonnegative_integers() {
        for n in 1..=8 {
            for lam in partitions_of(n) {
                for q in 2..=5 {
                    let v = count_at(&twisted_count(&lam), q);
                    assert!(v.is_integer() && v >= rat(0), "{lam} at q={q}");
                }
            }
        }
    }

    #[test]
    fn m_component_examples() {
        assert_eq!(m_component(2).unwrap(), homogeneous_h(2, 2));
        let m3 = schur_expand(&m_component(3).unwrap(), 3).unwrap();
        let expect = BTreeMap::from([(part(&[3]), TPoly::t()), (part(&[2, 1]), TPoly::from_ints(&[-1]))]);
        assert_eq!(m3, expect);
        let rk4 = m_component(4).unwrap().rk();
        assert_eq!(rk4[&4], TPoly::from_ints(&[6, -5, 1]));
        assert!(m_component(1).is_err());
    }

    #[test]
    fn m_series_invariants() {
        let m = m_series(2).unwrap();
        assert_eq!(m.as_graded().components().len(), 1);
        assert_eq!(m.component(2), homogeneous_h(2, 2));
        let m = m_series(6).unwrap();
        for n in 2..=6 {
            let c = m.component(n);
            assert_eq!(c.t_degree(), Some(n - 2));
            let schur = schur_expand(&c, n).unwrap();
            assert!(schur.values().all(TPoly::is_integral));
            // top weight is the trivial representation
            for (lam, poly) in &schur {
                let top = poly.coeff(n - 2);
                let expected = if lam.len() == 1 { rat(1) } else { rat(0) };
                assert_eq!(top, expected, "n={n} lambda={lam}");
            }
        }
    }
}
