use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use super::sturm::SturmChain;
use crate::poly::{format_rational, rat, sign, Poly, Rational};

/// A real algebraic number: the unique root of a square-free `defining`
/// polynomial in the open interval `(lo, hi)`. When `lo == hi` the number is
/// that rational exactly and `defining` is `x - lo`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraicNumber {
    defining: Poly,
    lo: Rational,
    hi: Rational,
    multiplicity: usize,
}

fn half() -> Rational {
    rat(1, 2)
}

impl AlgebraicNumber {
    /// Caller guarantees that `defining` is square-free, has exactly one root
    /// in `(lo, hi)` and does not vanish at either endpoint.
    pub(crate) fn isolated(defining: Poly, lo: Rational, hi: Rational, multiplicity: usize) -> Self {
        debug_assert!(lo < hi);
        AlgebraicNumber {
            defining,
            lo,
            hi,
            multiplicity,
        }
    }

    pub fn rational(r: Rational, multiplicity: usize) -> Self {
        AlgebraicNumber {
            defining: Poly::from_coeffs(vec![-r.clone(), Rational::one()]),
            lo: r.clone(),
            hi: r,
            multiplicity,
        }
    }

    pub fn defining(&self) -> &Poly {
        &self.defining
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// Multiplicity as a root of the polynomial it was isolated from.
    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// The exact value when the number is rational and has been detected as such.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_exact().then_some(&self.lo)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Midpoint of the isolating interval.
    pub fn approx(&self) -> Rational {
        (&self.lo + &self.hi) * half()
    }

    pub fn to_f64(&self) -> f64 {
        let m = self.approx();
        ratio_to_f64(&m)
    }

    /// One bisection step. Collapses to an exact rational when the midpoint
    /// is the root.
    pub(crate) fn bisect(&mut self) {
        if self.is_exact() {
            return;
        }
        let mid = self.approx();
        let fm = sign(&self.defining.eval(&mid));
        if fm == 0 {
            *self = AlgebraicNumber::rational(mid, self.multiplicity);
            return;
        }
        let flo = sign(&self.defining.eval(&self.lo));
        if flo == fm {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Narrows the isolating interval to width at most `width`.
    pub fn refine(&self, width: &Rational) -> AlgebraicNumber {
        let mut a = self.clone();
        while !a.is_exact() && &a.width() > width {
            a.bisect();
        }
        a
    }

    /// True iff `q` vanishes at this number.
    pub fn is_root_of(&self, q: &Poly) -> bool {
        if let Some(r) = self.as_rational() {
            return q.eval(r).is_zero();
        }
        if q.is_zero() {
            return true;
        }
        let Ok(g) = q.gcd(&self.defining) else {
            return false;
        };
        if g.degree() < 1 {
            return false;
        }
        // g divides the defining polynomial, so it is square-free and has at
        // most one root in the interval, which is then this number.
        let chain = SturmChain::of_squarefree(&g);
        chain.count_closed(&self.lo, &self.hi) > 0
    }

    /// Refines until the square-free polynomial behind `chain` has no root in
    /// the closed isolating interval other than this number itself. Returns
    /// whether this number is a root of it.
    pub(crate) fn separate_from(&mut self, chain: &SturmChain) -> bool {
        if let Some(r) = self.as_rational() {
            return chain.vanishes_at(r);
        }
        let shared = self.is_root_of(chain.head());
        let target = usize::from(shared);
        while !self.is_exact() && chain.count_closed(&self.lo, &self.hi) > target {
            self.bisect();
        }
        if let Some(r) = self.as_rational() {
            return chain.vanishes_at(r);
        }
        shared
    }

    /// Sign of `q` at this number.
    pub fn sign_of(&self, q: &Poly) -> i8 {
        if let Some(r) = self.as_rational() {
            return sign(&q.eval(r));
        }
        if q.is_zero() || self.is_root_of(q) {
            return 0;
        }
        let chain = SturmChain::of_squarefree(&q.squarefree_part().expect("nonzero"));
        let mut a = self.clone();
        a.separate_from(&chain);
        sign(&q.eval(&a.approx()))
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        let mut a = self.clone();
        loop {
            if let Some(v) = a.as_rational() {
                return v.cmp(r);
            }
            if r <= &a.lo {
                return Ordering::Greater;
            }
            if r >= &a.hi {
                return Ordering::Less;
            }
            if a.defining.eval(r).is_zero() {
                return Ordering::Equal;
            }
            a.bisect();
        }
    }

    /// Exact comparison; equal numbers with different defining polynomials
    /// are detected through their gcd.
    pub fn cmp_exact(&self, other: &AlgebraicNumber) -> Ordering {
        if let Some(r) = other.as_rational() {
            return self.cmp_rational(r);
        }
        if let Some(r) = self.as_rational() {
            return other.cmp_rational(r).reverse();
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        let lo = if a.lo > b.lo { &a.lo } else { &b.lo };
        let hi = if a.hi < b.hi { &a.hi } else { &b.hi };
        if lo < hi {
            // A common root inside both intervals is both numbers at once.
            let g = a.defining.gcd(&b.defining).expect("nonzero");
            if g.degree() > 0 && SturmChain::of_squarefree(&g).count_closed(lo, hi) > 0 {
                return Ordering::Equal;
            }
        }
        loop {
            if a.hi <= b.lo && !(a.is_exact() && b.is_exact()) {
                return Ordering::Less;
            }
            if b.hi <= a.lo && !(a.is_exact() && b.is_exact()) {
                return Ordering::Greater;
            }
            if a.is_exact() || b.is_exact() {
                return a.cmp_exact(&b);
            }
            if a.width() >= b.width() {
                a.bisect();
            } else {
                b.bisect();
            }
        }
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            write!(f, "{}", format_rational(r))?;
        } else {
            write!(
                f,
                "root of [{}] in ({}, {})",
                self.defining,
                format_rational(&self.lo),
                format_rational(&self.hi)
            )?;
        }
        if self.multiplicity > 1 {
            write!(f, " x{}", self.multiplicity)?;
        }
        Ok(())
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{}", format_rational(r)),
            None => write!(f, "~{:.6}", self.to_f64()),
        }
    }
}

/// Lossy conversion for display and plotting only.
pub fn ratio_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Very large numerators/denominators: scale by bit lengths.
        let n = r.numer();
        let d = r.denom();
        let shift = n.bits().max(d.bits()).saturating_sub(1000) as usize;
        let n = (n >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (d >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn sqrt2() -> AlgebraicNumber {
        AlgebraicNumber::isolated(Poly::from_ints(&[-2, 0, 1]), int(1), int(2), 1)
    }

    #[test]
    fn refine_sqrt2() {
        let a = sqrt2().refine(&rat(1, 1000));
        assert!(a.width() <= rat(1, 1000));
        assert!(a.lo() * a.lo() < int(2) && a.hi() * a.hi() > int(2));
        let a = a.refine(&rat(1, 10_000));
        assert!(a.lo() > &rat(1414, 1000) && a.hi() < &rat(14143, 10000));
        assert!(a.is_root_of(&Poly::from_ints(&[-2, 0, 1])));
    }

    #[test]
    fn bisection_hits_rational_root() {
        let a = AlgebraicNumber::isolated(Poly::from_ints(&[-1, 2]), int(0), int(1), 1);
        let b = a.refine(&rat(1, 10));
        assert_eq!(b.as_rational(), Some(&rat(1, 2)));
    }

    #[test]
    fn signs() {
        let r2 = sqrt2();
        assert_eq!(r2.sign_of(&Poly::from_ints(&[-2, 0, 1])), 0);
        assert_eq!(r2.sign_of(&Poly::from_ints(&[-4, 0, 0, 1])), -1);
        assert_eq!(r2.sign_of(&Poly::from_ints(&[0, 6])), 1);
        // x^2 - 2 shares the root with x^3 - 2x but the defining poly differs
        assert_eq!(r2.sign_of(&Poly::from_ints(&[0, -2, 0, 1])), 0);
        // 141/100 < sqrt 2 < 1415/1000
        assert_eq!(r2.sign_of(&Poly::from_coeffs(vec![rat(-141, 100), int(1)])), 1);
        assert_eq!(r2.sign_of(&Poly::from_coeffs(vec![rat(-1415, 1000), int(1)])), -1);
    }

    #[test]
    fn comparisons() {
        let r2 = sqrt2();
        let other = AlgebraicNumber::isolated(Poly::from_ints(&[0, -2, 0, 1]), rat(1, 2), int(3), 1);
        assert_eq!(r2.cmp_exact(&other), Ordering::Equal);
        let r3 = AlgebraicNumber::isolated(Poly::from_ints(&[-3, 0, 1]), int(1), int(2), 1);
        assert_eq!(r2.cmp_exact(&r3), Ordering::Less);
        assert_eq!(r3.cmp_exact(&r2), Ordering::Greater);
        assert_eq!(r2.cmp_rational(&rat(7, 5)), Ordering::Greater);
        assert_eq!(AlgebraicNumber::rational(int(1), 1).cmp_exact(&r2), Ordering::Less);
    }
}
