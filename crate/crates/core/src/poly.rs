//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{ChowError, Result};

/// A polynomial in `t` over the rationals. The coefficient vector never has
/// trailing zeros, so the zero polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TPoly {
    coeffs: Vec<BigRational>,
}

/// Point-count polynomials use the weight variable `q`, which is identified
/// with `t` everywhere in this crate.
pub type QPoly = TPoly;

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigRational, exp: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); exp + 1];
        coeffs[exp] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn from_ints(ints: &[i64]) -> Self {
        Self::from_coeffs(ints.iter().map(|&c| rat(c)).collect())
    }

    /// `t - a`
    pub fn linear(a: i64) -> Self {
        Self::from_ints(&[-a, 1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of coefficient slots, i.e. `degree + 1` (0 for the zero polynomial).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `t -> t^k`
    pub fn substitute_power(&self, k: usize) -> Self {
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// `p(t) -> p(t + a)` by Horner composition.
    pub fn translate(&self, a: i64) -> Self {
        let lin = Self::from_ints(&[a, 1]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Synthetic division by `t - a`, returning quotient and remainder.
    pub fn div_rem_linear(&self, a: i64) -> (Self, BigRational) {
        if self.is_zero() {
            return (Self::zero(), BigRational::zero());
        }
        let a = rat(a);
        let n = self.coeffs.len();
        let mut quot = vec![BigRational::zero(); n - 1];
        let mut carry = BigRational::zero();
        for i in (0..n).rev() {
            let cur = &self.coeffs[i] + &carry * &a;
            if i == 0 {
                return (Self::from_coeffs(quot), cur);
            }
            quot[i - 1] = cur.clone();
            carry = cur;
        }
        unreachable!()
    }

    /// Exact division by `t - 1`; fails if the remainder is nonzero.
    pub fn div_t_minus_one(&self, context: &str) -> Result<Self> {
        let (q, r) = self.div_rem_linear(1);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ChowError::InexactDivision { context: context.to_string() })
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Integer coefficients, or `None` if some coefficient is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    /// Symmetric about `degree / 2` with respect to the given degree.
    pub fn is_palindromic_of_degree(&self, d: usize) -> bool {
        (0..=d).all(|i| self.coeff(i) == self.coeff(d - i)) && self.coeffs.len() <= d + 1
    }

    pub fn is_palindromic(&self) -> bool {
        match self.degree() {
            Some(d) => self.is_palindromic_of_degree(d),
            None => true,
        }
    }

    /// Coefficients weakly increase then weakly decrease.
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coeffs;
        let mut i = 1;
        while i < c.len() && c[i] >= c[i - 1] {
            i += 1;
        }
        while i < c.len() && c[i] <= c[i - 1] {
            i += 1;
        }
        i >= c.len()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Sub<&TPoly> for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        self + &(-rhs)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(coeffs)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<TPoly> for TPoly {
            type Output = TPoly;
            fn $m(self, rhs: TPoly) -> TPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || ChowError::Parse(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl fmt::Display for TPoly {
    /// Human-readable form, e.g. `1 + 3t + t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if abs.is_one() && k > 0 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{abs}{var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn synthetic_division() {
        // t^2 - 1 = (t - 1)(t + 1)
        let p = TPoly::from_ints(&[-1, 0, 1]);
        let q = p.div_t_minus_one("test").unwrap();
        assert_eq!(q, TPoly::from_ints(&[1, 1]));
        assert!(TPoly::from_ints(&[1, 0, 1]).div_t_minus_one("test").is_err());
        let (q, r) = TPoly::from_ints(&[5, 0, 1]).div_rem_linear(2);
        assert_eq!(q, TPoly::from_ints(&[2, 1]));
        assert_eq!(r, rat(9));
    }

    #[test]
    fn translate_and_substitute() {
        let p = TPoly::from_ints(&[0, 0, 1]);
        assert_eq!(p.translate(-1), TPoly::from_ints(&[1, -2, 1]));
        assert_eq!(TPoly::from_ints(&[1, 2]).substitute_power(3), TPoly::from_ints(&[1, 0, 0, 2]));
    }

    #[test]
    fn shape_predicates() {
        let p = TPoly::from_ints(&[1, 8, 1]);
        assert!(p.is_palindromic() && p.is_unimodal() && p.is_monic());
        assert!(!TPoly::from_ints(&[1, 0, 1]).is_unimodal());
        assert!(!TPoly::from_ints(&[1, 2]).is_palindromic());
        assert_eq!(TPoly::from_ints(&[1, 3, 1]).to_string(), "1 + 3t + t^2");
        assert_eq!(TPoly::from_ints(&[0, -1, 2]).to_string(), "-t + 2t^2");
    }

    #[test]
    fn rational_strings() {
        let c = parse_rational("-3/6").unwrap();
        assert_eq!(fmt_rational(&c), "-1/2");
        assert_eq!(parse_rational("4").unwrap(), rat(4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
