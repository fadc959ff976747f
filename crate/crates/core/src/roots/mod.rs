//! Real-root counting and isolation by Sturm sequences, with exact handling
//! of interval endpoints that are themselves algebraic numbers.

mod algebraic;
mod sturm;

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::{squarefree_decomposition, Poly, Rational};

pub use algebraic::{ratio_to_f64, AlgebraicNumber};
pub use sturm::SturmChain;
pub(crate) use sturm::{cauchy_bound_pow2, Point};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInf,
    PosInf,
    At(Rational),
    Alg(AlgebraicNumber),
}

impl Endpoint {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Endpoint::NegInf | Endpoint::PosInf)
    }

    /// A representative rational strictly on the appropriate side is not
    /// implied; this is only a display aid.
    pub fn approx_f64(&self) -> f64 {
        match self {
            Endpoint::NegInf => f64::NEG_INFINITY,
            Endpoint::PosInf => f64::INFINITY,
            Endpoint::At(r) => ratio_to_f64(r),
            Endpoint::Alg(a) => a.to_f64(),
        }
    }
}

/// An interval of the real line. Infinite ends are always open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalSpec {
    pub lo: Endpoint,
    pub hi: Endpoint,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl IntervalSpec {
    pub fn real_line() -> Self {
        Self::open(Endpoint::NegInf, Endpoint::PosInf)
    }

    pub fn open(lo: Endpoint, hi: Endpoint) -> Self {
        IntervalSpec {
            lo,
            hi,
            lo_closed: false,
            hi_closed: false,
        }
    }

    pub fn closed(lo: Endpoint, hi: Endpoint) -> Self {
        let lo_closed = !lo.is_infinite();
        let hi_closed = !hi.is_infinite();
        IntervalSpec {
            lo,
            hi,
            lo_closed,
            hi_closed,
        }
    }

    pub fn open_rat(lo: Rational, hi: Rational) -> Self {
        Self::open(Endpoint::At(lo), Endpoint::At(hi))
    }

    pub fn closed_rat(lo: Rational, hi: Rational) -> Self {
        Self::closed(Endpoint::At(lo), Endpoint::At(hi))
    }

    pub fn is_bounded(&self) -> bool {
        !self.lo.is_infinite() && !self.hi.is_infinite()
    }
}

/// Ascending real roots with their multiplicities in the source polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootList {
    pub roots: Vec<AlgebraicNumber>,
}

impl RootList {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(AlgebraicNumber::multiplicity).sum()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, AlgebraicNumber> {
        self.roots.iter()
    }
}

/// Canonical Sturm sequence of the square-free part of `p`.
pub fn sturm_chain(p: &Poly) -> Result<Vec<Poly>> {
    Ok(SturmChain::new(p)?.polys().to_vec())
}

struct Anchor {
    point: Point,
    on_root: bool,
}

fn anchor_lower(chain: &SturmChain, e: &mut Endpoint) -> Anchor {
    match e {
        Endpoint::NegInf => Anchor { point: Point::NegInf, on_root: false },
        Endpoint::PosInf => Anchor { point: Point::PosInf, on_root: false },
        Endpoint::At(r) => Anchor {
            on_root: chain.vanishes_at(r),
            point: Point::At(r.clone()),
        },
        Endpoint::Alg(a) => {
            let on_root = a.separate_from(chain);
            Anchor {
                point: Point::At(a.hi().clone()),
                on_root,
            }
        }
    }
}

fn anchor_upper(chain: &SturmChain, e: &mut Endpoint) -> Anchor {
    match e {
        Endpoint::Alg(a) => {
            let on_root = a.separate_from(chain);
            Anchor {
                point: Point::At(a.lo().clone()),
                on_root,
            }
        }
        other => anchor_lower(chain, other),
    }
}

/// Distinct roots of a square-free polynomial (given by its chain) in `iv`.
pub(crate) fn count_with_chain(chain: &SturmChain, iv: &IntervalSpec) -> usize {
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    let (a, b) = loop {
        let a = anchor_lower(chain, &mut lo);
        let b = anchor_upper(chain, &mut hi);
        let ordered = match (&a.point, &b.point) {
            (Point::At(x), Point::At(y)) => x <= y,
            _ => true,
        };
        if ordered {
            break (a, b);
        }
        // Anchors crossed: the algebraic ends still overlap. Tighten them.
        for e in [&mut lo, &mut hi] {
            if let Endpoint::Alg(x) = e {
                x.bisect();
            }
        }
    };
    // An exact rational anchor that is the endpoint itself is excluded by
    // the open count; algebraic anchors are never roots.
    let mut n = chain.count_open(&a.point, &b.point);
    if iv.lo_closed && a.on_root {
        n += 1;
    }
    if iv.hi_closed && b.on_root {
        // Degenerate [x, x]: do not count the same root twice.
        let same = matches!((&a.point, &b.point), (Point::At(x), Point::At(y)) if x == y)
            && iv.lo_closed
            && a.on_root
            && endpoints_equal(&iv.lo, &iv.hi);
        if !same {
            n += 1;
        }
    }
    n
}

fn endpoints_equal(a: &Endpoint, b: &Endpoint) -> bool {
    match (a, b) {
        (Endpoint::At(x), Endpoint::At(y)) => x == y,
        (Endpoint::Alg(x), Endpoint::Alg(y)) => x.cmp_exact(y) == Ordering::Equal,
        (Endpoint::At(x), Endpoint::Alg(y)) | (Endpoint::Alg(y), Endpoint::At(x)) => {
            y.cmp_rational(x) == Ordering::Equal
        }
        _ => false,
    }
}

/// Number of distinct real roots of `p` in `iv`.
pub fn count_distinct_roots(p: &Poly, iv: &IntervalSpec) -> Result<usize> {
    let chain = SturmChain::new(p)?;
    Ok(count_with_chain(&chain, iv))
}

/// Number of real roots of `p` in `iv`, counted with multiplicity.
pub fn count_roots_with_multiplicity(p: &Poly, iv: &IntervalSpec) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut total = 0;
    for (f, m) in squarefree_decomposition(p)? {
        total += m * count_with_chain(&SturmChain::of_squarefree(&f), iv);
    }
    Ok(total)
}

/// Reusable multiplicity counter: the square-free decomposition and the
/// Sturm chains are built once and queried on many intervals.
#[derive(Clone, Debug)]
pub struct RootCounter {
    parts: Vec<(SturmChain, usize)>,
}

impl RootCounter {
    pub fn new(p: &Poly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let parts = squarefree_decomposition(p)?
            .into_iter()
            .map(|(f, m)| (SturmChain::of_squarefree(&f), m))
            .collect();
        Ok(RootCounter { parts })
    }

    pub fn count(&self, iv: &IntervalSpec) -> usize {
        self.parts
            .iter()
            .map(|(c, m)| m * count_with_chain(c, iv))
            .sum()
    }

    pub fn count_real(&self) -> usize {
        self.parts.iter().map(|(c, m)| m * c.count_real()).sum()
    }
}

/// Real roots of `p` over the whole line, with multiplicity.
pub fn real_root_count(p: &Poly) -> Result<usize> {
    count_roots_with_multiplicity(p, &IntervalSpec::real_line())
}

fn isolate_squarefree(f: &Poly, multiplicity: usize, out: &mut Vec<AlgebraicNumber>) {
    if f.degree() < 1 {
        return;
    }
    if f.degree() == 1 {
        let r = -f.coeff(0) / f.coeff(1);
        out.push(AlgebraicNumber::rational(r, multiplicity));
        return;
    }
    let chain = SturmChain::of_squarefree(f);
    let b = cauchy_bound_pow2(f);
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count_open(&Point::At(lo.clone()), &Point::At(hi.clone()));
        match n {
            0 => {}
            // Endpoints must not be roots, so keep bisecting if one is.
            1 if !chain.vanishes_at(&lo) && !chain.vanishes_at(&hi) => {
                out.push(AlgebraicNumber::isolated(chain.head().clone(), lo, hi, multiplicity))
            }
            _ => {
                let mid = (&lo + &hi) / Rational::from_integer(2.into());
                if chain.vanishes_at(&mid) {
                    out.push(AlgebraicNumber::rational(mid.clone(), multiplicity));
                }
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
}

/// Isolates every real root of `p`. Roots coming from different square-free
/// factors are refined until their isolating intervals are disjoint.
pub fn isolate_roots(p: &Poly) -> Result<RootList> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    for (f, m) in squarefree_decomposition(p)? {
        isolate_squarefree(&f, m, &mut roots);
    }
    roots.sort_by(|a, b| a.cmp_exact(b));
    // Separate neighbours so closed intervals do not overlap.
    for i in 1..roots.len() {
        loop {
            let (l, r) = roots.split_at_mut(i);
            let (a, b) = (&mut l[i - 1], &mut r[0]);
            if a.hi() < b.lo() || (a.hi() == b.lo() && !(a.is_exact() && b.is_exact())) {
                break;
            }
            if a.width() >= b.width() {
                a.bisect();
            } else {
                b.bisect();
            }
        }
    }
    Ok(RootList { roots })
}

/// A rational strictly between two distinct real algebraic numbers `a < b`.
pub fn rational_between(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Rational {
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        if a.hi() < b.lo() {
            return (a.hi() + b.lo()) / Rational::from_integer(2.into());
        }
        if a.width() >= b.width() && !a.is_exact() {
            a.bisect();
        } else {
            b.bisect();
        }
    }
}

fn endpoint_number(e: &Endpoint) -> Option<AlgebraicNumber> {
    match e {
        Endpoint::At(r) => Some(AlgebraicNumber::rational(r.clone(), 1)),
        Endpoint::Alg(a) => Some(a.clone()),
        _ => None,
    }
}

/// A rational point in the interior of a nonempty interval.
pub fn interior_point(iv: &IntervalSpec) -> Rational {
    let one = Rational::from_integer(1.into());
    match (endpoint_number(&iv.lo), endpoint_number(&iv.hi)) {
        (None, None) => Rational::from_integer(0.into()),
        (None, Some(b)) => b.lo().floor() - one,
        (Some(a), None) => a.hi().ceil() + one,
        (Some(a), Some(b)) => rational_between(&a, &b),
    }
}

/// Multiplicity of `a` as a root of `p` (0 if not a root).
pub fn multiplicity_at(p: &Poly, a: &AlgebraicNumber) -> usize {
    let mut q = p.clone();
    let mut m = 0;
    while !q.is_zero() && a.is_root_of(&q) {
        m += 1;
        q = q.derivative(1);
    }
    m
}

/// Sign of `q` at the algebraic number `a`.
pub fn sign_at(q: &Poly, a: &AlgebraicNumber) -> i8 {
    a.sign_of(q)
}
