//! Exact rational scalars and dense univariate polynomials over them.
//!
//! Coefficients are stored lowest degree first. The zero polynomial is the
//! empty coefficient vector and reports degree `-1`.

mod complex;
mod gcd;
mod squarefree;
mod serial;
mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use complex::ComplexRational;
pub use gcd::{resultant, resultant_in_kappa};
pub(crate) use gcd::{discriminant_in_parameter, int_gcd, linear_pencil, prem};
pub use squarefree::squarefree_decomposition;
pub(crate) use serial::{opt_rational, rational_str, rational_strs};
pub use text::{format_rational, parse_poly, parse_rational, parse_rational_list};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Poly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from lowest-first coefficients, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// `leading * prod (x - r)`
    pub fn from_roots(roots: &[Rational], leading: Rational) -> Self {
        let mut p = Poly::constant(leading);
        for r in roots {
            p = &p * &Poly::from_coeffs(vec![-r.clone(), Rational::one()]);
        }
        p
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn derivative(&self, order: usize) -> Poly {
        let mut coeffs = self.coeffs.clone();
        for _ in 0..order {
            if coeffs.is_empty() {
                break;
            }
            coeffs = coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect();
        }
        Poly::from_coeffs(coeffs)
    }

    /// The antiderivative with constant term `c`.
    pub fn antiderivative(&self, c: Rational) -> Poly {
        let mut coeffs = vec![c];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| a / Rational::from_integer(BigInt::from(i + 1))),
        );
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_complex(&self, z: &ComplexRational) -> ComplexRational {
        let mut acc = ComplexRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + &ComplexRational::real(c.clone());
        }
        acc
    }

    /// Returns `q` with `q(x) = p(x + t)`.
    pub fn taylor_shift(&self, t: &Rational) -> Poly {
        let lin = Poly::from_coeffs(vec![t.clone(), Rational::one()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Coefficient `b` in `p/lc = (x + a/n)^n + b (x + a/n)^(n-2) + ...`.
    pub fn depressed_b(&self) -> Result<Rational> {
        let n = self.degree();
        if n < 2 {
            return Err(Error::DegreeTooLow { need: 2, got: n });
        }
        let monic = self.monic();
        let a = monic.coeff(n as usize - 1);
        let shift = -(a / Rational::from_integer(BigInt::from(n)));
        Ok(monic.taylor_shift(&shift).coeff(n as usize - 2))
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.leading();
        self.scale(&lc.recip())
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `p(q(x))`
    pub fn compose(&self, q: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let dd = d.coeffs.len() - 1;
        let lc_inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Quotient of an exact division; the remainder must be zero.
    pub(crate) fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d).expect("division by zero polynomial");
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor, via a subresultant remainder sequence
    /// over the integers.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        if self.is_zero() {
            return Ok(other.monic());
        }
        if other.is_zero() {
            return Ok(self.monic());
        }
        let g = int_gcd(&self.to_primitive_integer(), &other.to_primitive_integer());
        Ok(Poly::from_integer(&g).monic())
    }

    /// `p / gcd(p, p')`, monic. Carries every distinct root exactly once.
    pub fn squarefree_part(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative(1))?;
        Ok(self.exact_div(&g).monic())
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative(1)).is_ok_and(|g| g.degree() == 0)
    }

    /// Integer coefficient vector proportional to `self` by a positive factor,
    /// with content 1.
    pub(crate) fn to_primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        ints.into_iter().map(|c| c / &content).collect()
    }

    pub(crate) fn from_integer(coeffs: &[BigInt]) -> Poly {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl fmt::Display for Poly {
    /// Writes the comma-separated lowest-first text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Binomial coefficient as an exact rational.
pub fn binomial(n: usize, k: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

pub fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn construction_strips_trailing_zeros() {
        let q = p(&[-1, 0, 1, 0, 0]);
        assert_eq!(q.degree(), 2);
        assert_eq!(p(&[0]).degree(), -1);
        assert!(p(&[0, 0]).is_zero());
        let scaled = p(&[3, -18, 0, 0, 3]).scale(&rat(1, 3));
        assert_eq!(scaled, p(&[1, -6, 0, 0, 1]));
    }

    #[test]
    fn from_roots_expands() {
        assert_eq!(Poly::from_roots(&[int(1), int(-1)], int(1)), p(&[-1, 0, 1]));
        assert_eq!(
            Poly::from_roots(&[int(0), int(0), int(0), int(1)], int(1)),
            p(&[0, 0, 0, -1, 1])
        );
        assert_eq!(
            Poly::from_roots(&[int(1), int(2), int(-10), int(0), int(0)], int(1)),
            p(&[0, 0, 20, -28, 7, 1])
        );
    }

    #[test]
    fn derivatives() {
        let q = p(&[0, 0, 20, -28, 7, 1]);
        assert_eq!(q.derivative(1), p(&[0, 40, -84, 28, 5]));
        assert_eq!(p(&[-1, 0, 1]).derivative(2), p(&[2]));
        assert!(p(&[7]).derivative(1).is_zero());
        assert!(Poly::zero().derivative(3).is_zero());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
        assert!((&p(&[-1, 0, 1]) + &p(&[1, 0, -1])).is_zero());
        assert_eq!(
            p(&[4, 0, 11, 0, 1]).scale(&rat(-1, 4)),
            Poly::from_coeffs(vec![int(-1), int(0), rat(-11, 4), int(0), rat(-1, 4)])
        );
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[-1, 0, 1]).eval(&int(2)), int(3));
        let z = ComplexRational::new(int(1), int(1));
        let v = p(&[0, 0, 1]).eval_complex(&z);
        assert_eq!(v, ComplexRational::new(int(0), int(2)));
        assert_eq!(v.norm_sqr(), int(4));
    }

    #[test]
    fn taylor_shift_cases() {
        assert_eq!(p(&[0, 0, 1]).taylor_shift(&int(1)), p(&[1, 2, 1]));
        let q = &p(&[-1, 1]).pow(5) + &p(&[1, 1]).pow(5);
        assert_eq!(q.taylor_shift(&int(0)), q);
        // x^4 + 4x^3 about the mean of its roots has no cubic term
        let d = p(&[0, 0, 0, 4, 1]).taylor_shift(&int(-1));
        assert_eq!(d.coeff(3), int(0));
        assert_eq!(d, p(&[-3, 8, -6, 0, 1]));
    }

    #[test]
    fn depressed_coefficient() {
        assert_eq!(p(&[-1, 0, 1]).depressed_b().unwrap(), int(-1));
        assert_eq!(p(&[0, 0, 3, 1]).depressed_b().unwrap(), int(-3));
        assert!(p(&[1, 1]).depressed_b().is_err());
        // (x-1)^5 + (x+1)^5 = 2x^5 + 20x^3 + 10x, b = 10 > 0 and p' has no real roots
        let q = &p(&[-1, 1]).pow(5) + &p(&[1, 1]).pow(5);
        assert_eq!(q.depressed_b().unwrap(), int(10));
    }

    #[test]
    fn gcd_cases() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 0, 0, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[-1, 0, 1])).unwrap(), p(&[1]));
        let q = p(&[0, 0, 1, 0, 1]);
        assert_eq!(q.gcd(&q.derivative(1)).unwrap(), p(&[0, 1]));
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Err(Error::BothZero));
        assert_eq!(Poly::zero().gcd(&p(&[2, 4])).unwrap(), Poly::from_coeffs(vec![rat(1, 2), int(1)]));
    }

    #[test]
    fn display_is_text_format() {
        let q = Poly::from_coeffs(vec![rat(-1, 2), int(0), int(3)]);
        assert_eq!(q.to_string(), "-1/2,0,3");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(6, 0), int(1));
        assert_eq!(factorial(5), int(120));
    }
}
