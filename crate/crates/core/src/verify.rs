//! The invariant suite behind `braid-chow verify`: every check is exact and
//! bounded by `max_n` (with tighter caps for the expensive oracles).

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{
    bell_limit_at_one, bell_limit_closed_form, omega_shifted, stirling_bell_identity_check_with, StirlingCache,
};
use crate::error::Result;
use crate::level_trees::{chain_count, enumerate_level_trees, strata_summary, LevelTree};
use crate::moduli::{m_dimension_polynomial, m_series, MSeries};
use crate::numeric::{
    euler_chars, hnum_bell, hnum_from_solution, hnum_lattice, hnum_stirling_with, NumericTable, LATTICE_MAX_N,
};
use crate::partition::Partition;
use crate::poly::TPoly;
use crate::reference::{reference_tables, REFERENCE_MAX_N};
use crate::solver::{equivariant_table, level_filtration, solve_b, verify_functional_equation};
use crate::symfunc::{character_table, homogeneous_h, GradedSeries, SymSeries};

pub const STRATA_MAX_N: usize = 7;
pub const POSITIVITY_MAX_N: usize = 8;
pub const PRUNING_MAX_N: usize = 5;

/// Deliberate corruption used to show that the suite catches errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Negate every signed Stirling number of the first kind.
    StirlingSign,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub max_n: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Context {
    max_n: usize,
    stirling: StirlingCache,
    fault: Option<Fault>,
    m: MSeries,
    b: GradedSeries,
}

impl Context {
    fn first(&self, n: usize, k: usize) -> BigInt {
        let v = self.stirling.first(n, k).expect("within cache");
        match self.fault {
            Some(Fault::StirlingSign) => -v,
            None => v,
        }
    }
}

fn check_stirling_bell(cx: &Context) -> Outcome {
    for n in 1..=cx.max_n {
        for k in 1..=n {
            ensure(stirling_bell_identity_check_with(n, k, |a, b| cx.first(a, b), &cx.stirling), || {
                format!("identity fails at (n, k) = ({n}, {k})")
            })?;
        }
    }
    Ok(format!("1 <= k <= n <= {}", cx.max_n))
}

fn check_triangle_inversion(cx: &Context) -> Outcome {
    for n in 0..=cx.max_n {
        for k in 0..=n {
            let sum: BigInt = (k..=n).map(|j| cx.first(n, j) * cx.stirling.second(j, k).unwrap()).sum();
            let expect = if n == k { BigInt::one() } else { BigInt::zero() };
            ensure(sum == expect, || format!("sum_j s({n},j) S(j,{k}) = {sum}"))?;
        }
    }
    Ok(format!("n <= {}", cx.max_n))
}

fn check_bell_limits(cx: &Context) -> Outcome {
    for n in 2..=cx.max_n {
        for k in 1..n {
            let got = bell_limit_at_one(n, k).map_err(|e| e.to_string())?;
            ensure(got == bell_limit_closed_form(n, k), || format!("limit mismatch at ({n}, {k})"))?;
        }
    }
    Ok(format!("n <= {}", cx.max_n))
}

fn check_omega(cx: &Context) -> Outcome {
    for n in 2..=cx.max_n {
        let q = omega_shifted(n).div_t_minus_one("omega").map_err(|e| e.to_string())?;
        ensure(q == m_dimension_polynomial(n), || format!("omega_{n}(t-1)/(t-1) mismatch"))?;
    }
    Ok(format!("n <= {}", cx.max_n))
}

fn check_characters(cx: &Context) -> Outcome {
    let top = cx.max_n.min(POSITIVITY_MAX_N);
    for n in 1..=top {
        let t = character_table(n);
        for mu in t.labels() {
            for nu in t.labels() {
                let s: i64 = t.labels().iter().map(|l| t.value(l, mu) * t.value(l, nu)).sum();
                let expect = if mu == nu { mu.z() } else { BigInt::zero() };
                ensure(BigInt::from(s) == expect, || format!("orthogonality fails for {mu}, {nu} in S_{n}"))?;
            }
        }
    }
    Ok(format!("n <= {top}"))
}

/// Fixed sample series for the plethysm laws (no randomness in the CLI).
fn plethysm_samples(n_max: usize) -> Vec<SymSeries> {
    let p = |parts: &[u32], c: &[i64]| {
        SymSeries::term(Partition::from_unsorted(parts.to_vec()), TPoly::from_ints(c), n_max)
    };
    vec![
        p(&[1], &[0, 1]).add(&homogeneous_h(2, n_max)),
        p(&[2], &[1, -1]).add(&p(&[1, 1], &[2])),
        p(&[1], &[1]).add(&p(&[3], &[0, 0, 1])),
    ]
}

fn check_plethysm_laws(cx: &Context) -> Outcome {
    let n_max = cx.max_n.min(6);
    let s = plethysm_samples(n_max);
    let outer = [homogeneous_h(2, n_max), SymSeries::one(n_max).add(&s[0]), s[1].clone()];
    let run = || -> Result<()> {
        for f in &outer {
            for g in &outer {
                for h in &s {
                    let lhs = f.add(g).plethysm(h)?;
                    let rhs = f.plethysm(h)?.add(&g.plethysm(h)?);
                    if lhs != rhs {
                        return Err(crate::ChowError::Parse("additivity".into()));
                    }
                    if f.mul(g).plethysm(h)? != f.plethysm(h)?.mul(&g.plethysm(h)?) {
                        return Err(crate::ChowError::Parse("multiplicativity".into()));
                    }
                }
            }
            for g in &s {
                for h in &s {
                    if f.plethysm(g)?.plethysm(h)? != f.plethysm(&g.plethysm(h)?)? {
                        return Err(crate::ChowError::Parse("associativity".into()));
                    }
                }
            }
        }
        for a in 1..=6u32 {
            for b in 1..=6u32 {
                let pa = SymSeries::power_sum(a, 36);
                let pb = SymSeries::power_sum(b, 36);
                if pa.plethysm(&pb)? != SymSeries::power_sum(a * b, 36) {
                    return Err(crate::ChowError::Parse(format!("p_{a} ∘ p_{b}")));
                }
            }
        }
        Ok(())
    };
    run().map_err(|e| format!("law violated: {e}"))?;
    Ok(format!("sampled through degree {n_max}"))
}

fn check_m_series(cx: &Context) -> Outcome {
    for n in 2..=cx.max_n {
        let rk = cx.m.component(n).rk();
        ensure(rk.get(&n) == Some(&m_dimension_polynomial(n)), || format!("dimension polynomial of M_{n}"))?;
    }
    Ok(format!("n <= {}", cx.max_n))
}

fn check_reference_table(cx: &Context) -> Outcome {
    let top = cx.max_n.min(REFERENCE_MAX_N);
    let reference = reference_tables();
    for n in 2..=top {
        let got = equivariant_table(&cx.b, n).map_err(|e| e.to_string())?;
        ensure(got == reference[&n], || format!("row n={n} differs from the reference table"))?;
    }
    Ok(format!("rows 2..={top}"))
}

fn check_functional_equation(cx: &Context) -> Outcome {
    ensure(verify_functional_equation(&cx.b, &cx.m), || "residual is nonzero".into())?;
    Ok(format!("through degree {}", cx.max_n))
}

fn check_level_filtration(cx: &Context) -> Outcome {
    let layers = level_filtration(&cx.m, cx.max_n).map_err(|e| e.to_string())?;
    let sum = layers.iter().fold(SymSeries::zero(cx.max_n), |acc, l| acc.add(&l.total()));
    ensure(sum == cx.b.total(), || "sum of filtration layers differs from the solution".into())?;
    ensure(layers.first().map(GradedSeries::total) == Some(cx.m.total()), || "first layer is not M".into())?;
    Ok(format!("{} layers", layers.len()))
}

fn check_routes(cx: &Context) -> Outcome {
    let from_solver = hnum_from_solution(&cx.b);
    let stirling = hnum_stirling_with(cx.max_n, |n, k| cx.first(n, k), &cx.stirling).map_err(|e| e.to_string())?;
    let bell = hnum_bell(cx.max_n).map_err(|e| e.to_string())?;
    ensure(stirling == from_solver, || "stirling route disagrees with the solver".into())?;
    ensure(bell == from_solver, || "bell route disagrees with the solver".into())?;
    let lattice_top = cx.max_n.min(LATTICE_MAX_N);
    let lattice = hnum_lattice(lattice_top).map_err(|e| e.to_string())?;
    ensure(lattice == from_solver.range(1, lattice_top), || "lattice route disagrees with the solver".into())?;
    let strata_top = cx.max_n.min(STRATA_MAX_N);
    for n in 2..=strata_top {
        let e = strata_summary(n, false).epoly();
        ensure(Some(&e) == from_solver.hnum(n), || format!("strata sum differs at n={n}"))?;
    }
    Ok(format!("solver/stirling/bell n <= {}, lattice n <= {lattice_top}, strata n <= {strata_top}", cx.max_n))
}

fn check_euler(cx: &Context) -> Outcome {
    let chi = euler_chars(cx.max_n);
    let table: NumericTable = hnum_from_solution(&cx.b);
    for n in 1..=cx.max_n {
        ensure(table.chi(n).as_ref() == chi.get(&n), || format!("chi_{n} mismatch"))?;
    }
    Ok(format!("n <= {}", cx.max_n))
}

fn check_structure(cx: &Context) -> Outcome {
    let table = hnum_from_solution(&cx.b);
    for n in 2..=cx.max_n {
        let h = table.hnum(n).unwrap();
        ensure(h.degree() == Some(n - 2), || format!("H_{n} has degree {:?}", h.degree()))?;
        ensure(h.is_monic() && h.is_palindromic() && h.is_unimodal(), || {
            format!("H_{n} is not monic/palindromic/unimodal")
        })?;
    }
    Ok(format!("n <= {}", cx.max_n))
}

fn check_positivity(cx: &Context) -> Outcome {
    let top = cx.max_n.min(POSITIVITY_MAX_N);
    for n in 2..=top {
        let ct = character_table(n);
        let schur = equivariant_table(&cx.b, n).map_err(|e| e.to_string())?;
        let trivial = Partition::from_unsorted(vec![n as u32]);
        for (lam, c) in &schur {
            ensure(c.is_integral() && c.is_nonnegative(), || format!("coefficient of s_{lam} at n={n}"))?;
            ensure(c.is_palindromic_of_degree(n - 2), || format!("coefficient of s_{lam} not palindromic"))?;
            let ends = if *lam == trivial { BigRational::one() } else { BigRational::zero() };
            ensure(c.coeff(0) == ends && c.coeff(n - 2) == ends, || format!("extreme degrees of s_{lam} at n={n}"))?;
        }
        for mu in ct.labels() {
            let mut value = TPoly::zero();
            for (lam, c) in &schur {
                value = &value + &c.scale(&BigRational::from_integer(ct.value(lam, mu).into()));
            }
            ensure(value.is_integral() && !value.coeffs().iter().any(Signed::is_negative), || {
                format!("character value at {mu} for n={n} is not a nonnegative integer polynomial")
            })?;
        }
    }
    Ok(format!("n <= {top}"))
}

fn check_level_trees(cx: &Context) -> Outcome {
    let top = cx.max_n.min(STRATA_MAX_N);
    for n in 2..=top {
        let count = strata_summary(n, true).total_count();
        ensure(BigInt::from(count) == chain_count(n), || format!("{count} trees vs chain count at n={n}"))?;
    }
    let prune_top = cx.max_n.min(PRUNING_MAX_N);
    for n in 2..=prune_top {
        for t in enumerate_level_trees(n) {
            if let Some((pruned, subsets)) = t.prune() {
                let back: LevelTree = pruned.unprune(&subsets).map_err(|e| e.to_string())?;
                ensure(back.canonical_key() == t.canonical_key(), || format!("pruning round trip fails at n={n}"))?;
            }
        }
    }
    Ok(format!("census n <= {top}, pruning n <= {prune_top}"))
}

type Check = (&'static str, fn(&Context) -> Outcome);

const CHECKS: &[Check] = &[
    ("stirling-bell identity", check_stirling_bell),
    ("stirling triangle inversion", check_triangle_inversion),
    ("bell limit at t=1", check_bell_limits),
    ("omega quotient", check_omega),
    ("character orthogonality", check_characters),
    ("plethysm laws", check_plethysm_laws),
    ("M dimension polynomials", check_m_series),
    ("reference table", check_reference_table),
    ("functional equation", check_functional_equation),
    ("level filtration", check_level_filtration),
    ("numeric route agreement", check_routes),
    ("euler characteristics", check_euler),
    ("chow polynomial shape", check_structure),
    ("equivariant positivity", check_positivity),
    ("level tree census", check_level_trees),
];

/// Runs every check up to `max_n` (at least 2).
pub fn run_verification(max_n: usize, fault: Option<Fault>) -> Result<VerifyReport> {
    let max_n = max_n.max(2);
    let m = m_series(max_n)?;
    let b = solve_b(&m, max_n)?;
    let cx = Context { max_n, stirling: StirlingCache::new(max_n), fault, m, b };
    let checks = CHECKS
        .iter()
        .map(|(name, f)| {
            let start = Instant::now();
            let (passed, detail) = match f(&cx) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult { name, passed, detail, elapsed: start.elapsed() }
        })
        .collect();
    Ok(VerifyReport { max_n, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_run_passes() {
        let r = run_verification(5, None).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
        assert_eq!(r.checks.len(), CHECKS.len());
    }

    #[test]
    fn injected_fault_is_named() {
        let r = run_verification(4, Some(Fault::StirlingSign)).unwrap();
        assert!(!r.passed());
        assert_eq!(r.first_failure().unwrap().name, "stirling-bell identity");
    }
}
