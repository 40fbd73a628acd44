//! Non-equivariant Chow polynomials `H_n^num(t)` by several independent
//! recursions, plus the Euler characteristics `chi_n = H_n^num(1)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{bell_partial, omega_arguments, omega_shifted, set_partition_profiles, StirlingCache};
use crate::error::{ChowError, Result};
use crate::partition::factorial;
use crate::poly::{fmt_rational, parse_rational, TPoly};
use crate::symfunc::GradedSeries;

/// `H_n^num` for `1 <= n <= n_max` with `chi_n` read off at `t = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericTable {
    hnum: BTreeMap<usize, TPoly>,
}

impl NumericTable {
    pub fn from_polys(hnum: BTreeMap<usize, TPoly>) -> Self {
        NumericTable { hnum }
    }

    pub fn hnum(&self, n: usize) -> Option<&TPoly> {
        self.hnum.get(&n)
    }

    pub fn polys(&self) -> &BTreeMap<usize, TPoly> {
        &self.hnum
    }

    pub fn chi(&self, n: usize) -> Option<BigInt> {
        self.hnum.get(&n).map(|p| p.eval(&BigRational::one()).to_integer())
    }

    /// Restrict to `n` in `2..=n_max`, the range every route shares.
    pub fn range(&self, lo: usize, hi: usize) -> NumericTable {
        NumericTable { hnum: self.hnum.range(lo..=hi).map(|(k, v)| (*k, v.clone())).collect() }
    }

    pub fn to_records(&self) -> Vec<NumericRecord> {
        self.hnum
            .iter()
            .map(|(&n, p)| NumericRecord {
                n,
                hnum: p.coeffs().iter().map(fmt_rational).collect(),
                chi: self.chi(n).map(|c| i64::try_from(&c).expect("chi fits in i64")).unwrap_or(0),
            })
            .collect()
    }

    pub fn from_records(records: &[NumericRecord]) -> Result<Self> {
        let mut hnum = BTreeMap::new();
        for r in records {
            let coeffs = r.hnum.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>()?;
            hnum.insert(r.n, TPoly::from_coeffs(coeffs));
        }
        Ok(NumericTable { hnum })
    }
}

/// `{n, hnum: ["c0", ...], chi}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericRecord {
    pub n: usize,
    pub hnum: Vec<String>,
    pub chi: i64,
}

/// Runs `(t-1) H_n = sum_{k<n} coeff(n,k) H_k` from the seed `H_1 = 1`.
fn run_recursion(
    n_max: usize,
    route: &str,
    mut coeff: impl FnMut(usize, usize) -> Result<TPoly>,
) -> Result<NumericTable> {
    let mut hnum = BTreeMap::new();
    hnum.insert(1, TPoly::one());
    for n in 2..=n_max {
        let mut rhs = TPoly::zero();
        for k in 1..n {
            rhs = &rhs + &(&coeff(n, k)? * &hnum[&k]);
        }
        let h = rhs.div_t_minus_one(&format!("{route} recursion at n={n}"))?;
        hnum.insert(n, h);
    }
    Ok(NumericTable { hnum })
}

/// `(t-1) H_n = sum_k H_k sum_{j=k}^n s(n,j) S(j,k) t^{j-k}`.
pub fn hnum_stirling(n_max: usize) -> Result<NumericTable> {
    let cache = StirlingCache::new(n_max);
    hnum_stirling_with(n_max, |n, j| cache.first(n, j).expect("within cache"), &cache)
}

pub fn hnum_stirling_with(
    n_max: usize,
    first: impl Fn(usize, usize) -> BigInt,
    cache: &StirlingCache,
) -> Result<NumericTable> {
    run_recursion(n_max, "stirling", |n, k| {
        let mut coeffs = vec![BigRational::zero(); n - k + 1];
        for j in k..=n {
            coeffs[j - k] = BigRational::from_integer(first(n, j) * cache.second(j, k)?);
        }
        Ok(TPoly::from_coeffs(coeffs))
    })
}

/// `(t-1) H_n = sum_k Bell_{n,k}(omega_1(t-1), ...) H_k`.
pub fn hnum_bell(n_max: usize) -> Result<NumericTable> {
    let args = omega_arguments(n_max.max(1));
    run_recursion(n_max, "bell", |n, k| bell_partial(n, k, &args[..n - k + 1]))
}

/// Largest `n` for which set partitions are enumerated explicitly.
pub const LATTICE_MAX_N: usize = 12;

/// Partition-lattice form: sum over all set partitions of `[n]` into `k`
/// blocks of `prod_j omega_{|B_j|}(t-1)`, enumerated block by block.
pub fn hnum_lattice(n_max: usize) -> Result<NumericTable> {
    if n_max > LATTICE_MAX_N {
        return Err(ChowError::OutOfRange(format!("lattice route limited to n <= {LATTICE_MAX_N}")));
    }
    let omegas: Vec<TPoly> =
        (0..=n_max.max(1)).map(|i| if i == 0 { TPoly::zero() } else { omega_shifted(i) }).collect();
    let mut per_n: BTreeMap<usize, BTreeMap<usize, TPoly>> = BTreeMap::new();
    for n in 2..=n_max {
        let mut by_blocks: BTreeMap<usize, TPoly> = BTreeMap::new();
        for (sizes, count) in set_partition_profiles(n) {
            let k = sizes.len();
            if k == n {
                continue;
            }
            let prod = sizes.parts().iter().fold(TPoly::one(), |acc, &s| &acc * &omegas[s as usize]);
            let term = prod.scale(&BigRational::from_integer(BigInt::from(count)));
            let slot = by_blocks.entry(k).or_default();
            *slot = &*slot + &term;
        }
        per_n.insert(n, by_blocks);
    }
    run_recursion(n_max, "lattice", |n, k| Ok(per_n[&n].get(&k).cloned().unwrap_or_default()))
}

/// Dimension polynomials of a solved equivariant series (with `H_1 = 1`).
pub fn hnum_from_solution(b: &GradedSeries) -> NumericTable {
    let mut hnum = BTreeMap::new();
    hnum.insert(1, TPoly::one());
    for n in 2..=b.n_max() {
        let rk = b.component(n).rk();
        hnum.insert(n, rk.get(&n).cloned().unwrap_or_default());
    }
    NumericTable { hnum }
}

/// `chi_1 = 1`, `chi_n = sum_{k<n} chi_k C(n, k-1) (n-k-1)! (-1)^{n-k-1}`.
pub fn euler_chars(n_max: usize) -> BTreeMap<usize, BigInt> {
    let mut chi = BTreeMap::new();
    chi.insert(1, BigInt::one());
    for n in 2..=n_max {
        let mut total = BigInt::zero();
        for k in 1..n {
            let binom = factorial(n) / (factorial(k - 1) * factorial(n - k + 1));
            let mut term = &chi[&k] * binom * factorial(n - k - 1);
            if (n - k - 1) % 2 == 1 {
                term = -term;
            }
            total += term;
        }
        chi.insert(n, total);
    }
    chi
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> TPoly {
        TPoly::from_ints(c)
    }

    #[test]
    fn stirling_route_values() {
        let t = hnum_stirling(6).unwrap();
        assert_eq!(t.hnum(2), Some(&poly(&[1])));
        assert_eq!(t.hnum(3), Some(&poly(&[1, 1])));
        assert_eq!(t.hnum(4), Some(&poly(&[1, 8, 1])));
        assert_eq!(t.hnum(5), Some(&poly(&[1, 41, 41, 1])));
    }

    #[test]
    fn bell_route_values() {
        let t = hnum_bell(6).unwrap();
        assert_eq!(t.hnum(2), Some(&poly(&[1])));
        assert_eq!(t.hnum(4), Some(&poly(&[1, 8, 1])));
        assert_eq!(t.hnum(6), Some(&poly(&[1, 187, 732, 187, 1])));
    }

    #[test]
    fn lattice_route_values() {
        let t = hnum_lattice(9).unwrap();
        assert_eq!(t.hnum(3), Some(&poly(&[1, 1])));
        assert_eq!(t.hnum(4), Some(&poly(&[1, 8, 1])));
        assert_eq!(t, hnum_bell(9).unwrap());
        assert!(hnum_lattice(LATTICE_MAX_N + 1).is_err());
    }

    #[test]
    fn euler_values() {
        let chi = euler_chars(12);
        let expect = [1, 1, 2, 10, 84];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(chi[&(n + 1)], BigInt::from(*e));
        }
        let t = hnum_stirling(12).unwrap();
        for n in 1..=12 {
            assert_eq!(t.chi(n).unwrap(), chi[&n]);
        }
    }

    #[test]
    fn records_round_trip() {
        let t = hnum_stirling(6).unwrap();
        let recs = t.to_records();
        assert_eq!(recs[3].hnum, vec!["1/1", "8/1", "1/1"]);
        assert_eq!(recs[3].chi, 10);
        assert_eq!(NumericTable::from_records(&recs).unwrap(), t);
    }
}
