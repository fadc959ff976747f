use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{prem, sign, Poly, Rational};

/// Evaluation point for sign variations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Point {
    NegInf,
    PosInf,
    At(Rational),
}

/// Sturm sequence of a square-free polynomial, each member stored as a
/// primitive integer polynomial (positive rescaling keeps signs intact).
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Poly>,
    ints: Vec<Vec<BigInt>>,
}

/// Sign of `sum c_i x^i` at `x = num/den`, `den > 0`, from the integer
/// `sum c_i num^i den^(d-i)`.
fn sign_at_ratio(c: &[BigInt], num: &BigInt, den: &BigInt) -> i8 {
    let Some((top, rest)) = c.split_last() else {
        return 0;
    };
    let mut acc = top.clone();
    let mut dpow = BigInt::one();
    for ci in rest.iter().rev() {
        dpow *= den;
        acc *= num;
        if !ci.is_zero() {
            acc += ci * &dpow;
        }
    }
    match acc.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

fn primitive(c: Vec<BigInt>) -> Vec<BigInt> {
    let content = c.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_one() {
        c
    } else {
        c.into_iter().map(|x| x / &content).collect()
    }
}

impl SturmChain {
    /// Builds the chain for the square-free part of `p`.
    pub fn new(p: &Poly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::of_squarefree(&p.squarefree_part()?))
    }

    /// `f` must already be square-free.
    pub(crate) fn of_squarefree(f: &Poly) -> Self {
        let mut ints = vec![f.to_primitive_integer()];
        let d = f.derivative(1);
        if !d.is_zero() {
            ints.push(d.to_primitive_integer());
        }
        while ints.len() >= 2 {
            let (a, b) = (&ints[ints.len() - 2], &ints[ints.len() - 1]);
            if b.len() == 1 {
                break;
            }
            // prem(a, b) = lc(b)^e * rem(a, b); the chain continues with -rem
            let e = a.len() - b.len() + 1;
            let r = prem(a, b);
            if r.is_empty() {
                break;
            }
            let keep = b[b.len() - 1].is_negative() && e % 2 == 1;
            let r: Vec<BigInt> = if keep { r } else { r.into_iter().map(|c| -c).collect() };
            ints.push(primitive(r));
        }
        let chain = ints.iter().map(|c| Poly::from_integer(c)).collect();
        SturmChain { chain, ints }
    }

    pub fn polys(&self) -> &[Poly] {
        &self.chain
    }

    /// The square-free polynomial the chain was built from, primitive.
    pub fn head(&self) -> &Poly {
        &self.chain[0]
    }

    pub(crate) fn variations(&self, at: &Point) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for (q, qi) in self.chain.iter().zip(&self.ints) {
            let s = match at {
                Point::At(x) => sign_at_ratio(qi, x.numer(), x.denom()),
                Point::PosInf => sign(&q.leading()),
                Point::NegInf => {
                    let s = sign(&q.leading());
                    if q.degree() % 2 == 1 {
                        -s
                    } else {
                        s
                    }
                }
            };
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub(crate) fn vanishes_at(&self, x: &Rational) -> bool {
        sign_at_ratio(&self.ints[0], x.numer(), x.denom()) == 0
    }

    /// Distinct roots in the open interval `(a, b)`. Zero when `a >= b`.
    pub(crate) fn count_open(&self, a: &Point, b: &Point) -> usize {
        if !points_ordered(a, b) {
            return 0;
        }
        let va = self.variations(a);
        let vb = self.variations(b);
        let half_open = va.saturating_sub(vb);
        match b {
            Point::At(x) if self.vanishes_at(x) => half_open - 1,
            _ => half_open,
        }
    }

    /// Distinct roots in `[a, b]` for rational `a <= b`.
    pub(crate) fn count_closed(&self, a: &Rational, b: &Rational) -> usize {
        if a == b {
            return usize::from(self.vanishes_at(a));
        }
        let (pa, pb) = (Point::At(a.clone()), Point::At(b.clone()));
        self.count_open(&pa, &pb)
            + usize::from(self.vanishes_at(a))
            + usize::from(self.vanishes_at(b))
    }

    pub fn count_real(&self) -> usize {
        self.count_open(&Point::NegInf, &Point::PosInf)
    }
}

fn points_ordered(a: &Point, b: &Point) -> bool {
    match (a, b) {
        (Point::At(x), Point::At(y)) => x < y,
        (Point::PosInf, _) | (_, Point::NegInf) => false,
        _ => true,
    }
}

/// Cauchy bound `1 + max |c_i / lc|`, rounded up to a power of two so that
/// bisection midpoints stay dyadic.
pub(crate) fn cauchy_bound_pow2(p: &Poly) -> Rational {
    let lc = p.leading().abs();
    let n = p.coeffs().len() - 1;
    let m = p.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / &lc)
        .fold(Rational::zero(), |a, c| if c > a { c } else { a });
    let bound = m + Rational::from_integer(1.into());
    let mut b = Rational::from_integer(1.into());
    while b < bound {
        b = b * Rational::from_integer(2.into());
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn chain_shapes() {
        let c = SturmChain::new(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(c.polys(), &[p(&[-1, 0, 1]), p(&[0, 1]), p(&[1])]);
        assert_eq!(c.count_real(), 2);
        let c = SturmChain::new(&p(&[1, 0, 1])).unwrap();
        assert_eq!(c.variations(&Point::NegInf), c.variations(&Point::PosInf));
        assert_eq!(SturmChain::new(&p(&[3, -6, 0, 0, 1])).unwrap().count_real(), 2);
        assert!(SturmChain::new(&Poly::zero()).is_err());
    }

    #[test]
    fn open_and_closed_counts() {
        let c = SturmChain::new(&p(&[0, -3, 0, 1])).unwrap();
        assert_eq!(c.count_real(), 3);
        assert_eq!(c.count_open(&Point::At(int(0)), &Point::At(int(2))), 1);
        assert_eq!(c.count_open(&Point::At(int(-2)), &Point::At(int(0))), 1);
        assert_eq!(c.count_closed(&int(0), &int(0)), 1);
        assert_eq!(c.count_closed(&int(-2), &int(0)), 2);
        let c = SturmChain::new(&p(&[-2, 1]).pow(2)).unwrap();
        assert_eq!(c.count_closed(&int(0), &int(2)), 1);
        assert_eq!(c.count_open(&Point::At(int(0)), &Point::At(int(2))), 0);
    }

    #[test]
    fn bound_is_power_of_two() {
        assert_eq!(cauchy_bound_pow2(&p(&[-3, 0, 1])), int(4));
        assert_eq!(cauchy_bound_pow2(&p(&[0, 0, 1])), int(1));
        assert_eq!(cauchy_bound_pow2(&p(&[-5, 2])), int(4));
    }
}
