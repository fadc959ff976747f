//! The poles of `M[p]` and the intervals between them.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::roots::{
    isolate_roots, multiplicity_at, sign_at, AlgebraicNumber, Endpoint, IntervalSpec, RootCounter,
    RootList,
};

use super::{h_unchecked, need_degree, q_reduced, Kappa};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalKind {
    /// Contains a real root of `p`.
    First,
    Second,
}

/// Classification of an interval end at a pole. `None` marks an infinite end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndTag {
    Right,
    Wrong,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionInterval {
    pub span: IntervalSpec,
    pub kind: IntervalKind,
    pub left_end: EndTag,
    pub right_end: EndTag,
}

impl PartitionInterval {
    pub fn is_finite(&self) -> bool {
        self.span.is_bounded()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalPartition {
    /// Real zeros of `p'` that are not zeros of `p`; multiplicities refer to `p'`.
    pub poles: RootList,
    pub intervals: Vec<PartitionInterval>,
    /// Distinct real roots of `p`, with multiplicities in `p`.
    pub p_roots: RootList,
}

impl IntervalPartition {
    /// Index of the interval containing the root `r` of `p` (or any number
    /// that is not a pole).
    pub fn interval_of(&self, r: &AlgebraicNumber) -> usize {
        self.poles
            .iter()
            .take_while(|xi| xi.cmp_exact(r).is_lt())
            .count()
    }

    pub fn first_type_count(&self) -> usize {
        self.intervals
            .iter()
            .filter(|i| i.kind == IntervalKind::First)
            .count()
    }
}

/// Tags of the two sides of a pole `xi` of `M[p]`, as (left side, right side).
fn pole_tags(p: &Poly, xi: &AlgebraicNumber) -> (EndTag, EndTag) {
    let s = xi.multiplicity() + 1;
    let sigma = sign_at(p, xi) * sign_at(&p.derivative(s), xi);
    let right = if sigma < 0 { EndTag::Right } else { EndTag::Wrong };
    let left_sign = if s % 2 == 0 { sigma } else { -sigma };
    let left = if left_sign < 0 { EndTag::Right } else { EndTag::Wrong };
    (left, right)
}

pub fn interval_partition(p: &Poly) -> Result<IntervalPartition> {
    need_degree(p, 2)?;
    let p_roots = isolate_roots(p)?;
    let crit = isolate_roots(&p.derivative(1))?;
    let poles = RootList {
        roots: crit
            .roots
            .into_iter()
            .filter(|xi| sign_at(p, xi) != 0)
            .collect(),
    };
    let tags: Vec<(EndTag, EndTag)> = poles.iter().map(|xi| pole_tags(p, xi)).collect();

    let mut ends: Vec<Endpoint> = vec![Endpoint::NegInf];
    ends.extend(poles.iter().map(|xi| match xi.as_rational() {
        Some(r) => Endpoint::At(r.clone()),
        None => Endpoint::Alg(xi.clone()),
    }));
    ends.push(Endpoint::PosInf);

    let mut has_root = vec![false; poles.len() + 1];
    let provisional = IntervalPartition {
        poles: poles.clone(),
        intervals: Vec::new(),
        p_roots: p_roots.clone(),
    };
    for r in p_roots.iter() {
        has_root[provisional.interval_of(r)] = true;
    }

    let intervals = (0..=poles.len())
        .map(|k| PartitionInterval {
            span: IntervalSpec::open(ends[k].clone(), ends[k + 1].clone()),
            kind: if has_root[k] {
                IntervalKind::First
            } else {
                IntervalKind::Second
            },
            left_end: if k == 0 { EndTag::None } else { tags[k - 1].1 },
            right_end: if k == poles.len() {
                EndTag::None
            } else {
                tags[k].0
            },
        })
        .collect();
    Ok(IntervalPartition {
        poles,
        intervals,
        p_roots,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalCount {
    pub index: usize,
    /// Zeros of `H` in the open interval, excluding those at multiple roots of `p`.
    pub count_h: usize,
    /// Zeros of `Q` (its reduced numerator) in the open interval.
    pub count_q: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub n: usize,
    pub kappa: Kappa,
    pub z_r_p: usize,
    pub z_c_p: usize,
    pub z_r_h: usize,
    pub z_r_q: usize,
    pub per_interval: Vec<IntervalCount>,
    /// Zeros of `H` located at poles, with multiplicity.
    pub at_poles_h: usize,
    /// Zeros of `H` located at multiple roots of `p`, with multiplicity.
    pub at_multiple_roots_h: usize,
    pub degenerate_h: bool,
}

impl CountReport {
    /// Whole-line totals agree with the per-interval decomposition.
    pub fn is_consistent(&self) -> bool {
        let h: usize = self.per_interval.iter().map(|c| c.count_h).sum();
        let q: usize = self.per_interval.iter().map(|c| c.count_q).sum();
        self.z_r_p + self.z_c_p == self.n
            && h + self.at_poles_h + self.at_multiple_roots_h == self.z_r_h
            && q == self.z_r_q
    }
}

/// Counts of `H_k` and `Q_k` zeros per interval of the partition.
pub fn per_interval_counts(p: &Poly, kappa: &Kappa) -> Result<CountReport> {
    let part = interval_partition(p)?;
    per_interval_counts_with(p, kappa, &part)
}

/// As [`per_interval_counts`], reusing a partition computed earlier.
pub fn per_interval_counts_with(
    p: &Poly,
    kappa: &Kappa,
    part: &IntervalPartition,
) -> Result<CountReport> {
    let hq = q_reduced(p, kappa)?;
    if hq.degenerate {
        return Err(Error::DegenerateH);
    }
    let h = &hq.h;
    let n = p.degree() as usize;
    let hc = RootCounter::new(h)?;
    let qc = RootCounter::new(&hq.q_num)?;
    let z_r_p = part.p_roots.total_multiplicity();

    let multiple: Vec<&AlgebraicNumber> =
        part.p_roots.iter().filter(|r| r.multiplicity() >= 2).collect();
    let mult_h: Vec<usize> = multiple.iter().map(|r| multiplicity_at(h, r)).collect();

    let per_interval = part
        .intervals
        .iter()
        .enumerate()
        .map(|(k, iv)| {
            let inside: usize = multiple
                .iter()
                .zip(&mult_h)
                .filter(|(r, _)| part.interval_of(r) == k)
                .map(|(_, m)| *m)
                .sum();
            IntervalCount {
                index: k,
                count_h: hc.count(&iv.span) - inside,
                count_q: qc.count(&iv.span),
            }
        })
        .collect();

    Ok(CountReport {
        n,
        kappa: kappa.clone(),
        z_r_p,
        z_c_p: n - z_r_p,
        z_r_h: hc.count_real(),
        z_r_q: qc.count_real(),
        per_interval,
        at_poles_h: part.poles.iter().map(|xi| multiplicity_at(h, xi)).sum(),
        at_multiple_roots_h: mult_h.iter().sum(),
        degenerate_h: false,
    })
}

/// Zeros of `H_k[p]` on the real line with multiplicity; `None` if `H` vanishes.
pub fn z_r_h(p: &Poly, kappa: &Kappa) -> Result<Option<usize>> {
    need_degree(p, 2)?;
    let h = h_unchecked(p, kappa);
    if h.is_zero() {
        return Ok(None);
    }
    Ok(Some(RootCounter::new(&h)?.count_real()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn partition_of_real_rooted_cubic() {
        let part = interval_partition(&p(&[0, -3, 0, 1])).unwrap();
        assert_eq!(part.poles.len(), 2);
        assert_eq!(part.intervals.len(), 3);
        assert!(part.intervals.iter().all(|i| i.kind == IntervalKind::First));
    }

    #[test]
    fn partition_with_tags() {
        let part = interval_partition(&p(&[3, -3, 0, 1])).unwrap();
        let kinds: Vec<_> = part.intervals.iter().map(|i| i.kind).collect();
        assert_eq!(kinds, [IntervalKind::First, IntervalKind::Second, IntervalKind::Second]);
        assert_eq!(part.intervals[1].left_end, EndTag::Right);
        assert_eq!(part.intervals[1].right_end, EndTag::Wrong);
        assert_eq!(part.intervals[0].left_end, EndTag::None);

        let part = interval_partition(&p(&[1, 0, 1])).unwrap();
        assert_eq!(part.poles.len(), 1);
        assert_eq!(part.intervals[0].right_end, EndTag::Wrong);
        assert_eq!(part.intervals[1].left_end, EndTag::Wrong);
        assert_eq!(part.first_type_count(), 0);
    }

    #[test]
    fn multiple_roots_are_not_poles() {
        let part = interval_partition(&p(&[0, 0, 0, -1, 1])).unwrap();
        // p' = x^2 (4x - 3): 0 is a root of p, 3/4 is the only pole
        assert_eq!(part.poles.len(), 1);
        assert_eq!(part.poles.roots[0].as_rational(), Some(&rat(3, 4)));
        assert_eq!(part.first_type_count(), 2);
    }

    #[test]
    fn counts_for_cubic() {
        let c = per_interval_counts(&p(&[3, -3, 0, 1]), &int(1)).unwrap();
        assert_eq!((c.z_r_h, c.z_c_p), (2, 2));
        assert_eq!(c.per_interval[0].count_h, 0);
        assert!(c.is_consistent());

        let c = per_interval_counts(&p(&[3, -3, 0, 1]), &int(0)).unwrap();
        assert_eq!(c.z_r_h, 2);
        let counts: Vec<usize> = c.per_interval.iter().map(|i| i.count_h).collect();
        assert_eq!(counts, [1, 1, 0]);

        let c = per_interval_counts(&p(&[0, -3, 0, 1]), &int(1)).unwrap();
        assert!(c.per_interval.iter().all(|i| i.count_h == 0));
    }

    #[test]
    fn counts_with_multiple_roots() {
        let q = p(&[0, 0, 1, 0, 1]);
        let c = per_interval_counts(&q, &rat(3, 4)).unwrap();
        assert_eq!(c.z_r_h, 4);
        assert_eq!(c.z_r_q, 2);
        assert_eq!(c.at_multiple_roots_h, 2);
        assert!(c.is_consistent());
        assert!(matches!(
            per_interval_counts(&p(&[0, 0, 1]), &rat(1, 2)),
            Err(Error::DegenerateH)
        ));
    }
}
