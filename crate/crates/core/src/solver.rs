//! Degree-by-degree solution of `(h_1 + B) ∘ (h_1 + (t-1) M) = h_1 + t B`.
//!
//! Writing `G = h_1 + (t-1) M`, the degree-`n` part of the equation reads
//!
//! ```text
//! (t-1) B_n = (t-1) M_n + sum_{k=2}^{n-1} [B_k ∘ G]_n
//! ```
//!
//! since `[B_n ∘ G]_n = B_n`. `G` does not involve `B`, so each `B_k ∘ G` is
//! computed once, as soon as `B_k` is known, and accumulated into all higher
//! degrees. Division by `t - 1` must be exact.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::moduli::MSeries;
use crate::partition::Partition;
use crate::poly::TPoly;
use crate::symfunc::{character_table, homogeneous_h, schur_expand_with, GradedSeries, SymSeries};

/// `h_1 + (t-1) M`, truncated at `n_max`.
pub fn g_series(m: &MSeries, n_max: usize) -> SymSeries {
    let t_minus_one = TPoly::linear(1);
    homogeneous_h(1, n_max).add(&m.total().truncate(n_max).mul_poly(&t_minus_one))
}

/// Solve for `B = sum_{n>=2} H_n(t)` through degree `n_max`.
pub fn solve_b(m: &MSeries, n_max: usize) -> Result<GradedSeries> {
    let n_max = n_max.min(m.n_max());
    let g = g_series(m, n_max);
    let t_minus_one = TPoly::linear(1);
    let mut b = GradedSeries::new(n_max);
    // running sum of B_k ∘ G over solved k
    let mut composed = SymSeries::zero(n_max);
    for n in 2..=n_max {
        let rhs = m.component(n).mul_poly(&t_minus_one).add(&composed.component(n));
        let b_n = rhs.div_t_minus_one(&format!("solving degree {n}"))?;
        if n < n_max {
            composed = composed.add(&b_n.plethysm(&g)?);
        }
        b.set(n, b_n)?;
    }
    Ok(b)
}

/// Recompute `(h_1 + B) ∘ G` and `h_1 + t B` from scratch and compare.
pub fn verify_functional_equation(b: &GradedSeries, m: &MSeries) -> bool {
    let n_max = b.n_max().min(m.n_max());
    let g = g_series(m, n_max);
    let h1 = homogeneous_h(1, n_max);
    let outer = h1.add(&b.total().truncate(n_max));
    let lhs = match outer.plethysm(&g) {
        Ok(l) => l,
        Err(_) => return false,
    };
    let rhs = h1.add(&b.total().truncate(n_max).mul_poly(&TPoly::t()));
    lhs == rhs
}

/// Layers `B^(1), B^(2), ...` of the filtration by number of levels:
/// `B^(1) = M` and `B^(k+1) = (B^(k) ∘ G - B^(k)) / (t-1)`. Stops at the
/// first layer that vanishes through `n_max`.
pub fn level_filtration(m: &MSeries, n_max: usize) -> Result<Vec<GradedSeries>> {
    let n_max = n_max.min(m.n_max());
    let g = g_series(m, n_max);
    let mut layers = Vec::new();
    let mut current = m.total().truncate(n_max);
    let mut k = 1;
    while !current.is_zero() {
        layers.push(GradedSeries::from_series(&current));
        let next = current.plethysm(&g)?.sub(&current);
        current = next.div_t_minus_one(&format!("level filtration layer {}", k + 1))?;
        k += 1;
    }
    Ok(layers)
}

/// Schur expansion of component `n` of a solved series.
pub fn equivariant_table(b: &GradedSeries, n: usize) -> Result<BTreeMap<Partition, TPoly>> {
    schur_expand_with(&b.component(n).truncate(n), &character_table(n))
}

/// Schur tables for every `n` in `2..=n_max`, solving from scratch.
pub fn equivariant_tables(n_max: usize) -> Result<BTreeMap<usize, BTreeMap<Partition, TPoly>>> {
    let m = crate::moduli::m_series(n_max)?;
    let b = solve_b(&m, n_max)?;
    (2..=n_max).map(|n| Ok((n, equivariant_table(&b, n)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moduli::m_series;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn row(entries: &[(&[u32], &[i64])]) -> BTreeMap<Partition, TPoly> {
        entries.iter().map(|(l, c)| (part(l), TPoly::from_ints(c))).collect()
    }

    #[test]
    fn small_rows() {
        let m = m_series(5).unwrap();
        let b = solve_b(&m, 5).unwrap();
        assert_eq!(b.component(2), homogeneous_h(2, 5));
        assert_eq!(equivariant_table(&b, 2).unwrap(), row(&[(&[2], &[1])]));
        assert_eq!(equivariant_table(&b, 3).unwrap(), row(&[(&[3], &[1, 1])]));
        assert_eq!(
            equivariant_table(&b, 4).unwrap(),
            row(&[(&[4], &[1, 3, 1]), (&[3, 1], &[0, 1]), (&[2, 2], &[0, 1])])
        );
        assert_eq!(
            equivariant_table(&b, 5).unwrap(),
            row(&[(&[5], &[1, 5, 5, 1]), (&[4, 1], &[0, 4, 4]), (&[3, 2], &[0, 3, 3]), (&[2, 2, 1], &[0, 1, 1]),])
        );
    }

    #[test]
    fn functional_equation_holds_and_detects_perturbation() {
        let m = m_series(6).unwrap();
        let b = solve_b(&m, 6).unwrap();
        assert!(verify_functional_equation(&b, &m));
        let mut bad = b.clone();
        let bump = SymSeries::term(part(&[4]), TPoly::t(), 6).add(&homogeneous_h(4, 6).mul_poly(&TPoly::t()));
        bad.set(4, b.component(4).add(&bump.component(4))).unwrap();
        assert!(!verify_functional_equation(&bad, &m));

        let m2 = m_series(2).unwrap();
        let b2 = solve_b(&m2, 2).unwrap();
        assert_eq!(b2.component(2), m2.component(2));
        assert!(verify_functional_equation(&b2, &m2));
    }

    #[test]
    fn level_filtration_sums_to_solution() {
        let m = m_series(6).unwrap();
        let layers = level_filtration(&m, 6).unwrap();
        assert_eq!(layers[0].total(), m.total());
        let sum = layers.iter().fold(SymSeries::zero(6), |acc, l| acc.add(&l.total()));
        assert_eq!(sum, solve_b(&m, 6).unwrap().total());
        // degree-n part vanishes beyond n-1 levels
        for (k, layer) in layers.iter().enumerate() {
            let levels = k + 1;
            for n in 2..=6 {
                if levels > n - 1 {
                    assert!(layer.component(n).is_zero(), "layer {levels} degree {n}");
                }
            }
        }
        assert_eq!(layers.len(), 5);
    }
}
