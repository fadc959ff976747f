//! How the zero counts of `H_k` and `Q_k` move with `k`: a rational grid,
//! the exact breakpoint set, and the threshold on an infinite interval.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{discriminant_in_parameter, int, linear_pencil, rat, Poly, Rational};
use crate::roots::{isolate_roots, rational_between, AlgebraicNumber, RootCounter};

use super::partition::{interval_partition, IntervalKind};
use super::{h_unchecked, need_degree, q_reduced, Kappa};

/// `H_k = F * (k A - B)` with `F = gcd((p')^2, p p'')`. The reduced factor
/// `k A - B` is, up to a constant, the numerator of `Q_k`, and `disc` is its
/// x-discriminant as a polynomial in `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedPencil {
    pub f: Poly,
    pub a: Poly,
    pub b: Poly,
    pub disc: Poly,
}

pub fn reduced_pencil(p: &Poly) -> Result<ReducedPencil> {
    need_degree(p, 2)?;
    let d1 = p.derivative(1);
    let sq = &d1 * &d1;
    let pp = p * &p.derivative(2);
    let f = sq.gcd(&pp)?;
    let a = sq.exact_div(&f);
    let b = pp.exact_div(&f);
    if a.degree() < 1 && b.degree() < 1 {
        return Err(Error::PerfectPower);
    }
    let disc = discriminant_in_parameter(&linear_pencil(&a, &b));
    if disc.is_zero() {
        return Err(Error::PerfectPower);
    }
    Ok(ReducedPencil { f, a, b, disc })
}

/// Counts at one parameter value; `None` when `H` vanishes identically.
fn counts_at(p: &Poly, kappa: &Kappa) -> Result<Option<(usize, usize)>> {
    let hq = q_reduced(p, kappa)?;
    if hq.degenerate {
        return Ok(None);
    }
    let zh = RootCounter::new(&hq.h)?.count_real();
    let zq = RootCounter::new(&hq.q_num)?.count_real();
    Ok(Some((zh, zq)))
}

fn special_kappas(p: &Poly) -> Result<Vec<Rational>> {
    let n = p.degree() as i64;
    let mut out = vec![Rational::new((n - 1).into(), n.into())];
    for r in isolate_roots(p)?.iter().filter(|r| r.multiplicity() >= 2) {
        let j = r.multiplicity() as i64;
        out.push(Rational::new((j - 1).into(), j.into()));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapCount {
    /// `None` for an unbounded end.
    pub lo: Option<AlgebraicNumber>,
    pub hi: Option<AlgebraicNumber>,
    pub sample: Rational,
    pub z_r_h: usize,
    pub z_r_q: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Breakpoints {
    pub pencil: ReducedPencil,
    /// Ascending, without repetition.
    pub points: Vec<AlgebraicNumber>,
    /// Counts exactly at each breakpoint that is rational; `None` for an
    /// irrational breakpoint or a degenerate `H`.
    pub at_points: Vec<Option<(usize, usize)>>,
    /// `points.len() + 1` open gaps with their constant counts.
    pub gaps: Vec<GapCount>,
}

impl Breakpoints {
    /// Index of the gap containing `kappa`, or `None` if it is a breakpoint.
    pub fn gap_of(&self, kappa: &Rational) -> Option<usize> {
        let mut idx = 0;
        for b in &self.points {
            match b.cmp_rational(kappa) {
                std::cmp::Ordering::Less => idx += 1,
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Greater => break,
            }
        }
        Some(idx)
    }
}

/// A rational strictly between `a < b`.
/// Every parameter value where the number of real zeros of `H_k` or `Q_k`
/// may change, with the counts on each gap between them.
pub fn kappa_breakpoints_exact(p: &Poly) -> Result<Breakpoints> {
    let pencil = reduced_pencil(p)?;
    let mut points: Vec<AlgebraicNumber> = isolate_roots(&pencil.disc)?
        .roots
        .into_iter()
        .map(|r| match r.as_rational() {
            Some(v) => AlgebraicNumber::rational(v.clone(), 1),
            None => AlgebraicNumber::isolated(r.defining().clone(), r.lo().clone(), r.hi().clone(), 1),
        })
        .collect();
    for k in special_kappas(p)? {
        match points.iter().position(|b| b.cmp_rational(&k).is_eq()) {
            Some(i) => points[i] = AlgebraicNumber::rational(k, 1),
            None => points.push(AlgebraicNumber::rational(k, 1)),
        }
    }
    points.sort_by(|a, b| a.cmp_exact(b));

    let samples: Vec<Rational> = (0..=points.len())
        .map(|i| match (i.checked_sub(1).map(|j| &points[j]), points.get(i)) {
            (None, None) => Rational::zero(),
            (None, Some(b)) => b.lo().floor() - Rational::one(),
            (Some(a), None) => a.hi().ceil() + Rational::one(),
            (Some(a), Some(b)) => rational_between(a, b),
        })
        .collect();
    let gap_counts: Vec<Result<Option<(usize, usize)>>> =
        samples.par_iter().map(|k| counts_at(p, k)).collect();
    let mut gaps = Vec::with_capacity(samples.len());
    for (i, (sample, c)) in samples.into_iter().zip(gap_counts).enumerate() {
        let (z_r_h, z_r_q) = c?.expect("H cannot vanish off the breakpoint set");
        gaps.push(GapCount {
            lo: i.checked_sub(1).map(|j| points[j].clone()),
            hi: points.get(i).cloned(),
            sample,
            z_r_h,
            z_r_q,
        });
    }
    let at_points = points
        .par_iter()
        .map(|b| match b.as_rational() {
            Some(k) => counts_at(p, k),
            None => Ok(None),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Breakpoints {
        pencil,
        points,
        at_points,
        gaps,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DodgedCount {
    pub kappa: Kappa,
    pub z_r_h: usize,
    pub z_r_q: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub kappa: Kappa,
    /// `None` when `H` vanishes identically at this `k`.
    pub z_r_h: Option<usize>,
    pub z_r_q: Option<usize>,
    /// The leading coefficient `k n^2 - n(n-1)` vanishes.
    pub degree_drop: bool,
    pub on_breakpoint: bool,
    /// Counts at `k + step/997` for rows on a breakpoint.
    pub dodged: Option<DodgedCount>,
}

/// Exact counts on the grid `lo, lo + step, ..., <= hi`.
pub fn kappa_sweep_grid(
    p: &Poly,
    lo: &Rational,
    hi: &Rational,
    step: &Rational,
) -> Result<Vec<SweepRow>> {
    need_degree(p, 2)?;
    if lo >= hi || step <= &Rational::zero() {
        return Err(Error::InvalidParameter(
            "sweep needs lo < hi and step > 0".into(),
        ));
    }
    let n = p.degree() as i64;
    let drop_at = Rational::new((n - 1).into(), n.into());
    let specials = special_kappas(p)?;
    let disc = match reduced_pencil(p) {
        Ok(pc) => Some(pc.disc),
        Err(Error::PerfectPower) => None,
        Err(e) => return Err(e),
    };
    let mut grid = Vec::new();
    let mut k = lo.clone();
    while &k <= hi {
        grid.push(k.clone());
        k += step;
    }
    let dodge = step / int(997);
    grid.par_iter()
        .map(|k| {
            let on_breakpoint = specials.contains(k)
                || disc.as_ref().is_some_and(|d| d.eval(k).is_zero());
            let c = counts_at(p, k)?;
            let dodged = if on_breakpoint {
                let k2 = k + &dodge;
                counts_at(p, &k2)?.map(|(h, q)| DodgedCount {
                    kappa: k2,
                    z_r_h: h,
                    z_r_q: q,
                })
            } else {
                None
            };
            Ok(SweepRow {
                kappa: k.clone(),
                z_r_h: c.map(|x| x.0),
                z_r_q: c.map(|x| x.1),
                degree_drop: k == &drop_at,
                on_breakpoint,
                dodged,
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Rational enclosure `lo < C <= hi` of the smallest `k` at which `H_k`
/// acquires a zero on an infinite interval of the second type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdEnclosure {
    pub side: Side,
    pub lo: Rational,
    pub hi: Rational,
}

pub fn infinite_interval_threshold(
    p: &Poly,
    side: Side,
    width: &Rational,
) -> Result<ThresholdEnclosure> {
    need_degree(p, 2)?;
    if width <= &Rational::zero() {
        return Err(Error::InvalidParameter("width must be positive".into()));
    }
    let part = interval_partition(p)?;
    if part.poles.is_empty() {
        return Err(Error::NoThreshold(
            "M[p] has no poles, so there is no infinite interval bounded by one".into(),
        ));
    }
    let iv = match side {
        Side::Left => &part.intervals[0],
        Side::Right => part.intervals.last().expect("at least two intervals"),
    };
    if iv.kind == IntervalKind::First {
        return Err(Error::FirstTypeInterval);
    }
    let count = |k: &Rational| -> Result<usize> {
        let h = h_unchecked(p, k);
        Ok(RootCounter::new(&h)?.count(&iv.span))
    };
    let n = p.degree() as i64;
    let mut lo = rat(1, 2);
    let mut hi = Rational::new((n - 1).into(), n.into());
    if count(&lo)? != 0 {
        return Err(Error::NoThreshold(
            "H already has zeros on the interval at k = 1/2".into(),
        ));
    }
    if count(&hi)? == 0 {
        return Err(Error::NoThreshold(
            "H has no zeros on the interval at k = (n-1)/n".into(),
        ));
    }
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / int(2);
        if count(&mid)? >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(ThresholdEnclosure { side, lo, hi })
}
