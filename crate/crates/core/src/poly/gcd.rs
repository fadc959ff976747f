//! Subresultant remainder sequences over an integral domain.
//!
//! The same routine serves integer polynomials (gcd, resultant over Q after
//! clearing denominators) and polynomials whose coefficients are themselves
//! polynomials in the parameter kappa.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// Minimal integral-domain interface needed by the remainder sequences.
pub(crate) trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division known to be exact.
    fn div_exact(&self, o: &Self) -> Self;

    fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % o)));
        self / o
    }
}

/// Polynomials over Q viewed as the coefficient domain Q[kappa].
impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Self {
        self.exact_div(o)
    }
}

fn trim<R: Ring>(v: &mut Vec<R>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn deg<R>(v: &[R]) -> usize {
    v.len() - 1
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
pub(crate) fn prem<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    let db = deg(b);
    let lb = &b[db];
    let mut r: Vec<R> = a.to_vec();
    let mut e = (deg(a) + 1).saturating_sub(db);
    while !r.is_empty() && r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&lr.mul(bc));
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

/// Resultant with the Sylvester-determinant sign convention, computed by the
/// subresultant algorithm. Inputs must be trimmed.
pub(crate) fn subresultant_resultant<R: Ring>(a: &[R], b: &[R]) -> R {
    if a.is_empty() || b.is_empty() {
        return R::zero();
    }
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    let mut negate = false;
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            negate = true;
        }
    }
    let signed = |r: R, negate: bool| if negate { r.neg() } else { r };
    if deg(&b) == 0 {
        return signed(b[0].pow(deg(&a)), negate);
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let delta = deg(&a) - deg(&b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            negate = !negate;
        }
        let r = prem(&a, &b);
        a = b;
        let divisor = g.mul(&h.pow(delta));
        b = r.iter().map(|c| c.div_exact(&divisor)).collect();
        g = a.last().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta).div_exact(&h.pow(delta - 1)),
        };
        if b.is_empty() {
            return R::zero();
        }
        if deg(&b) == 0 {
            break;
        }
    }
    let da = deg(&a);
    let lb = b[0].clone();
    let out = if da == 1 {
        lb
    } else {
        lb.pow(da).div_exact(&h.pow(da - 1))
    };
    signed(out, negate)
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(<BigInt as Zero>::zero(), |acc, c| acc.gcd(c))
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let c = content(v);
    let sgn = if v.last().is_some_and(|l| l.is_negative()) {
        -<BigInt as One>::one()
    } else {
        <BigInt as One>::one()
    };
    v.iter().map(|x| x / &c * &sgn).collect()
}

/// Primitive gcd of two nonzero integer polynomials (subresultant PRS).
pub(crate) fn int_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return primitive(b);
    }
    if b.is_empty() {
        return primitive(a);
    }
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    let d = content(&a).gcd(&content(&b));
    a = primitive(&a);
    b = primitive(&b);
    let mut g = <BigInt as One>::one();
    let mut h = <BigInt as One>::one();
    loop {
        let delta = deg(&a) - deg(&b);
        let r = prem(&a, &b);
        if r.is_empty() {
            break;
        }
        if deg(&r) == 0 {
            b = vec![<BigInt as One>::one()];
            break;
        }
        a = b;
        let divisor = &g * Ring::pow(&h, delta);
        b = r.iter().map(|c| c / &divisor).collect();
        g = a.last().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => Ring::pow(&g, delta) / Ring::pow(&h, delta - 1),
        };
    }
    primitive(&b).into_iter().map(|c| c * &d).collect()
}

/// Resultant of two nonzero polynomials, Sylvester-determinant convention:
/// `Res(a, b) = lc(a)^deg(b) * lc(b)^deg(a) * prod (alpha_i - beta_j)`.
pub fn resultant(a: &Poly, b: &Poly) -> Result<Rational> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    // Res(c1*A, c2*B) = c1^deg(B) c2^deg(A) Res(A, B)
    let (ia, ib) = (a.to_primitive_integer(), b.to_primitive_integer());
    let ca = a.leading() / Rational::from_integer(ia.last().unwrap().clone());
    let cb = b.leading() / Rational::from_integer(ib.last().unwrap().clone());
    let r = Rational::from_integer(subresultant_resultant(&ia, &ib));
    let (da, db) = (a.degree() as i32, b.degree() as i32);
    Ok(r * num_traits::pow::Pow::pow(&ca, db) * num_traits::pow::Pow::pow(&cb, da))
}

/// Coefficients (in x) of `kappa * A - B`, each a polynomial in kappa.
pub(crate) fn linear_pencil(a: &Poly, b: &Poly) -> Vec<Poly> {
    let n = a.coeffs().len().max(b.coeffs().len());
    let mut v: Vec<Poly> = (0..n)
        .map(|i| Poly::from_coeffs(vec![-b.coeff(i), a.coeff(i)]))
        .collect();
    trim(&mut v);
    v
}

/// `Res_x(F, dF/dx)` for a polynomial in x with coefficients in Q[kappa].
pub(crate) fn discriminant_in_parameter(f: &[Poly]) -> Poly {
    let df: Vec<Poly> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.scale(&Rational::from_integer(BigInt::from(i))))
        .collect();
    let mut df = df;
    trim(&mut df);
    subresultant_resultant(f, &df)
}

/// `Res_x(H_kappa[p], dH_kappa[p]/dx)` as an exact polynomial in kappa, where
/// `H_kappa[p] = kappa (p')^2 - p p''`.
pub fn resultant_in_kappa(p: &Poly) -> Result<Poly> {
    if p.degree() < 2 {
        return Err(Error::DegreeTooLow {
            need: 2,
            got: p.degree(),
        });
    }
    let d1 = p.derivative(1);
    let pencil = linear_pencil(&(&d1 * &d1), &(p * &p.derivative(2)));
    Ok(discriminant_in_parameter(&pencil))
}
