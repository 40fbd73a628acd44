//! Irreducible characters of `S_n` via Murnaghan–Nakayama, and the Schur
//! expansion built on top of them.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::SymSeries;
use crate::error::{ChowError, Result};
use crate::partition::{partitions_of, Partition};
use crate::poly::TPoly;

/// `values[i][j] = chi^{labels[i]}(labels[j])`, both indexed by
/// `partitions_of(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    labels: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    /// `chi^lambda(mu)`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }

    pub fn row(&self, lambda: &Partition) -> &[i64] {
        &self.values[self.index[lambda]]
    }
}

/// Beta-set (first-column hook lengths) of `lambda` with `len` entries.
fn beta_set(lambda: &[u32], len: usize) -> Vec<i64> {
    (0..len).map(|i| lambda.get(i).copied().unwrap_or(0) as i64 + (len - 1 - i) as i64).collect()
}

fn from_beta(beta: &[i64]) -> Vec<u32> {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let len = b.len();
    b.iter().enumerate().map(|(i, &x)| (x - (len - 1 - i) as i64) as u32).filter(|&p| p > 0).collect()
}

/// Murnaghan–Nakayama: strip rim hooks of length `mu[0]`, `mu[1]`, ...
fn mn_value(lambda: &[u32], mu: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    if mu.is_empty() {
        return i64::from(lambda.is_empty());
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu[0] as i64;
    let beta = beta_set(lambda, lambda.len());
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        let target = b - r;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_value(&from_beta(&next), &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// Full character table of `S_n`.
pub fn character_table(n: usize) -> CharacterTable {
    let labels = partitions_of(n);
    let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
    let mut memo = HashMap::new();
    let values = labels
        .iter()
        .map(|lam| labels.iter().map(|mu| mn_value(lam.parts(), mu.parts(), &mut memo)).collect())
        .collect();
    CharacterTable { n, labels, index, values }
}

/// Schur coefficients `c_lambda(t) = <f, s_lambda>` of a homogeneous
/// degree-`n` series. Zero coefficients are omitted.
pub fn schur_expand(f: &SymSeries, n: usize) -> Result<BTreeMap<Partition, TPoly>> {
    schur_expand_with(f, &character_table(n))
}

pub fn schur_expand_with(f: &SymSeries, table: &CharacterTable) -> Result<BTreeMap<Partition, TPoly>> {
    let n = table.n();
    if !f.is_homogeneous(n) {
        return Err(ChowError::NotHomogeneous(n));
    }
    let mut out = BTreeMap::new();
    for lam in table.labels() {
        // <p_mu, s_lambda> = chi^lambda(mu)
        let mut c = TPoly::zero();
        for (mu, coeff) in f.terms() {
            let chi = table.value(lam, mu);
            if chi != 0 {
                c = &c + &coeff.scale(&BigRational::from_integer(BigInt::from(chi)));
            }
        }
        if !c.is_zero() {
            out.insert(lam.clone(), c);
        }
    }
    Ok(out)
}

/// Inverse of [`schur_expand`]: `sum_lambda c_lambda s_lambda` in the p-basis.
pub fn from_schur(coeffs: &BTreeMap<Partition, TPoly>, table: &CharacterTable, n_max: usize) -> SymSeries {
    let mut s = SymSeries::zero(n_max);
    for mu in table.labels() {
        let z = BigRational::from_integer(mu.z());
        let mut c = TPoly::zero();
        for (lam, cl) in coeffs {
            let chi = table.value(lam, mu);
            if chi != 0 {
                c = &c + &cl.scale(&BigRational::from_integer(BigInt::from(chi)));
            }
        }
        s.add_term(mu.clone(), c.scale(&z.recip()));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::factorial;
    use crate::symfunc::homogeneous_h;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_tables() {
        let t2 = character_table(2);
        assert_eq!(t2.row(&part(&[2])), &[1, 1]);
        assert_eq!(t2.row(&part(&[1, 1])), &[-1, 1]);
        let t3 = character_table(3);
        assert_eq!(t3.value(&part(&[2, 1]), &part(&[1, 1, 1])), 2);
        for n in 1..=8 {
            let t = character_table(n);
            let triv = part(&[n as u32]);
            assert!(t.labels().iter().all(|mu| t.value(&triv, mu) == 1));
        }
    }

    #[test]
    fn dimensions_square_sum_to_factorial() {
        for n in 1..=9 {
            let t = character_table(n);
            let id = Partition::ones(n);
            let sum: i64 = t.labels().iter().map(|l| t.value(l, &id).pow(2)).sum();
            assert_eq!(BigInt::from(sum), factorial(n));
            assert!(t.labels().iter().all(|l| t.value(l, &id) > 0));
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=8 {
            let t = character_table(n);
            for mu in t.labels() {
                for nu in t.labels() {
                    let s: i64 = t.labels().iter().map(|l| t.value(l, mu) * t.value(l, nu)).sum();
                    let expect = if mu == nu { mu.z() } else { BigInt::from(0) };
                    assert_eq!(BigInt::from(s), expect, "n={n} mu={mu} nu={nu}");
                }
            }
        }
    }

    #[test]
    fn schur_examples() {
        let h2 = schur_expand(&homogeneous_h(2, 2), 2).unwrap();
        assert_eq!(h2, BTreeMap::from([(part(&[2]), TPoly::one())]));
        let p11 = schur_expand(&SymSeries::p(part(&[1, 1]), 2), 2).unwrap();
        assert_eq!(p11, BTreeMap::from([(part(&[2]), TPoly::one()), (part(&[1, 1]), TPoly::one())]));
        assert_eq!(schur_expand(&homogeneous_h(2, 3).add(&homogeneous_h(3, 3)), 3), Err(ChowError::NotHomogeneous(3)));
    }

    #[test]
    fn schur_round_trip() {
        for n in 1..=7 {
            let t = character_table(n);
            for (i, mu) in t.labels().iter().enumerate() {
                let f = SymSeries::term(mu.clone(), TPoly::from_ints(&[i as i64, 1]), n);
                let back = from_schur(&schur_expand_with(&f, &t).unwrap(), &t, n);
                assert_eq!(back, f);
            }
        }
    }
}
