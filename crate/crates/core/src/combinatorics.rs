//! Stirling numbers, the `omega_n` polynomials and partial Bell polynomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{ChowError, Result};
use crate::partition::{factorial, partitions_of, Partition};
use crate::poly::TPoly;

/// Triangles of signed first-kind `s(n,k)` and second-kind `S(n,k)`
/// Stirling numbers for `0 <= k <= n <= max_n`.
#[derive(Clone, Debug)]
pub struct StirlingCache {
    max_n: usize,
    first: Vec<Vec<BigInt>>,
    second: Vec<Vec<BigInt>>,
}

impl StirlingCache {
    pub fn new(max_n: usize) -> Self {
        let mut first = vec![vec![BigInt::zero(); max_n + 1]; max_n + 1];
        let mut second = first.clone();
        first[0][0] = BigInt::one();
        second[0][0] = BigInt::one();
        for n in 1..=max_n {
            for k in 1..=n {
                // x^(n) falling = x^(n-1) falling * (x - (n-1))
                first[n][k] = &first[n - 1][k - 1] - BigInt::from(n - 1) * &first[n - 1][k];
                second[n][k] = &second[n - 1][k - 1] + BigInt::from(k) * &second[n - 1][k];
            }
        }
        StirlingCache { max_n, first, second }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    fn check(&self, n: usize, k: usize) -> Result<()> {
        if k > n || n > self.max_n {
            return Err(ChowError::OutOfRange(format!("stirling index ({n}, {k}) with cache bound {}", self.max_n)));
        }
        Ok(())
    }

    pub fn first(&self, n: usize, k: usize) -> Result<BigInt> {
        self.check(n, k)?;
        Ok(self.first[n][k].clone())
    }

    pub fn second(&self, n: usize, k: usize) -> Result<BigInt> {
        self.check(n, k)?;
        Ok(self.second[n][k].clone())
    }
}

/// Coefficient of `x^k` in `x (x-1) ... (x-n+1)`.
pub fn stirling_first_signed(n: usize, k: usize) -> Result<BigInt> {
    StirlingCache::new(n).first(n, k)
}

/// Number of partitions of an `n`-set into `k` blocks.
pub fn stirling_second(n: usize, k: usize) -> Result<BigInt> {
    StirlingCache::new(n).second(n, k)
}

/// `omega_1 = 1`, `omega_n(t) = (t - n + 2) omega_{n-1}(t)`.
pub fn omega(n: usize) -> TPoly {
    assert!(n >= 1, "omega is defined for n >= 1");
    (2..=n).fold(TPoly::one(), |acc, m| &acc * &TPoly::linear(m as i64 - 2))
}

/// `omega_n(t - 1)`.
pub fn omega_shifted(n: usize) -> TPoly {
    omega(n).translate(-1)
}

/// `(omega_1(t-1), ..., omega_m(t-1))`.
pub fn omega_arguments(m: usize) -> Vec<TPoly> {
    (1..=m).map(omega_shifted).collect()
}

/// Partitions of `n` with exactly `k` parts, smallest largest part first.
fn partitions_with_length(n: usize, k: usize) -> Vec<Partition> {
    let mut ps: Vec<Partition> = partitions_of(n).into_iter().filter(|p| p.len() == k).collect();
    ps.reverse();
    ps
}

/// Partial exponential Bell polynomial `Bell_{n,k}(xs[0], xs[1], ...)`,
/// where `xs[i-1]` stands for the variable `x_i`.
pub fn bell_partial(n: usize, k: usize, xs: &[TPoly]) -> Result<TPoly> {
    if k < 1 || k > n {
        return Err(ChowError::OutOfRange(format!("Bell_{{{n},{k}}}")));
    }
    let needed = n - k + 1;
    if xs.len() < needed {
        return Err(ChowError::InsufficientArguments { needed, got: xs.len() });
    }
    let nf = factorial(n);
    let mut total = TPoly::zero();
    for lam in partitions_with_length(n, k) {
        let mut denom = BigInt::one();
        let mut term = TPoly::one();
        for (i, m) in lam.multiplicities() {
            denom *= factorial(i as usize).pow(m) * factorial(m as usize);
            term = &term * &xs[i as usize - 1].pow(m);
        }
        total = &total + &term.scale(&BigRational::new(nf.clone(), denom));
    }
    Ok(total)
}

/// `sum_{j=k}^n s(n,j) S(j,k) t^j`, with `s` supplied by the caller so the
/// check can be pointed at an alternate Stirling source.
pub fn stirling_product_poly(
    n: usize,
    k: usize,
    first: impl Fn(usize, usize) -> BigInt,
    second: &StirlingCache,
) -> TPoly {
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for (j, c) in coeffs.iter_mut().enumerate().take(n + 1).skip(k) {
        *c = BigRational::from_integer(first(n, j) * &second.second[j][k]);
    }
    TPoly::from_coeffs(coeffs)
}

/// `t^k Bell_{n,k}(omega_1(t-1), ..., omega_{n-k+1}(t-1))`.
pub fn bell_omega_side(n: usize, k: usize) -> Result<TPoly> {
    let bell = bell_partial(n, k, &omega_arguments(n - k + 1))?;
    Ok(bell.shift(k))
}

/// Checks `t^k Bell_{n,k}(omega(t-1)) = sum_j s(n,j) S(j,k) t^j` exactly.
pub fn stirling_bell_identity_check(n: usize, k: usize) -> bool {
    let cache = StirlingCache::new(n);
    stirling_bell_identity_check_with(n, k, |a, b| cache.first[a][b].clone(), &cache)
}

pub fn stirling_bell_identity_check_with(
    n: usize,
    k: usize,
    first: impl Fn(usize, usize) -> BigInt,
    cache: &StirlingCache,
) -> bool {
    match bell_omega_side(n, k) {
        Ok(lhs) => lhs == stirling_product_poly(n, k, first, cache),
        Err(_) => false,
    }
}

/// `Bell_{n,k}(omega(t-1)) / (t-1)` evaluated at `t = 1`, by exact division.
pub fn bell_limit_at_one(n: usize, k: usize) -> Result<BigRational> {
    let bell = bell_partial(n, k, &omega_arguments(n - k + 1))?;
    let q = bell.div_t_minus_one("Bell limit")?;
    Ok(q.eval(&BigRational::one()))
}

/// `n! (-1)^{n-k-1} (n-k-1)! / ((k-1)! (n-k+1)!)` for `1 <= k <= n-1`.
pub fn bell_limit_closed_form(n: usize, k: usize) -> BigRational {
    assert!(1 <= k && k < n);
    let sign = if (n - k - 1).is_multiple_of(2) { 1 } else { -1 };
    let num = factorial(n) * factorial(n - k - 1) * BigInt::from(sign);
    let den = factorial(k - 1) * factorial(n - k + 1);
    BigRational::new(num, den)
}

/// Visits every set partition of `{0..n}` as a restricted growth string.
pub fn for_each_set_partition(n: usize, mut visit: impl FnMut(&[usize], usize)) {
    if n == 0 {
        visit(&[], 0);
        return;
    }
    let mut rgs = vec![0usize; n];
    let mut maxes = vec![0usize; n];
    loop {
        let blocks = maxes[n - 1] + 1;
        visit(&rgs, blocks);
        // advance to the next restricted growth string
        let mut i = n - 1;
        loop {
            if i == 0 {
                return;
            }
            let bound = maxes[i - 1] + 1;
            if rgs[i] < bound {
                rgs[i] += 1;
                maxes[i] = maxes[i - 1].max(rgs[i]);
                for j in i + 1..n {
                    rgs[j] = 0;
                    maxes[j] = maxes[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Number of set partitions of an `n`-set with each multiset of block sizes,
/// tallied by explicit enumeration.
pub fn set_partition_profiles(n: usize) -> BTreeMap<Partition, u64> {
    let mut counts = BTreeMap::new();
    let mut sizes = vec![0u32; n];
    for_each_set_partition(n, |rgs, blocks| {
        sizes[..blocks].iter_mut().for_each(|s| *s = 0);
        for &b in rgs {
            sizes[b] += 1;
        }
        *counts.entry(Partition::from_unsorted(sizes[..blocks].to_vec())).or_insert(0) += 1;
    });
    counts
}
