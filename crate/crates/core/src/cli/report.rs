//! JSON-facing views of the analysis types. Rationals are strings in the
//! polynomial text format; algebraic numbers carry an isolating interval.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::kappa::{
    Breakpoints, CountReport, EndTag, HQPair, IntervalKind, IntervalPartition, SweepRow,
};
use crate::poly::{format_rational, Poly};
use crate::roots::{AlgebraicNumber, Endpoint};
use crate::theorems::{FailureDump, Tally, TheoremId, TrialConfig, TrialRecord, TrialReport};

#[derive(Clone, Debug, Serialize)]
pub struct ReportEnvelope<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub input: BTreeMap<&'static str, String>,
    pub results: T,
    pub timing: Timing,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum NumberView {
    Infinite(&'static str),
    Exact {
        exact: String,
    },
    Isolated {
        lo: String,
        hi: String,
        approx: String,
    },
}

impl NumberView {
    pub fn of(a: &AlgebraicNumber) -> Self {
        match a.as_rational() {
            Some(r) => NumberView::Exact {
                exact: format_rational(r),
            },
            None => {
                let r = a.refine(&crate::poly::rat(1, 1 << 30));
                NumberView::Isolated {
                    lo: format_rational(r.lo()),
                    hi: format_rational(r.hi()),
                    approx: format!("{:.9}", r.to_f64()),
                }
            }
        }
    }

    fn of_endpoint(e: &Endpoint) -> Self {
        match e {
            Endpoint::NegInf => NumberView::Infinite("-inf"),
            Endpoint::PosInf => NumberView::Infinite("+inf"),
            Endpoint::At(r) => NumberView::Exact {
                exact: format_rational(r),
            },
            Endpoint::Alg(a) => NumberView::of(a),
        }
    }

    fn of_bound(a: &Option<AlgebraicNumber>, neg: bool) -> Self {
        match a {
            Some(a) => NumberView::of(a),
            None if neg => NumberView::Infinite("-inf"),
            None => NumberView::Infinite("+inf"),
        }
    }
}

impl std::fmt::Display for NumberView {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NumberView::Infinite(s) => f.write_str(s),
            NumberView::Exact { exact } => f.write_str(exact),
            NumberView::Isolated { approx, .. } => write!(f, "~{approx}"),
        }
    }
}

fn tag_str(t: EndTag) -> &'static str {
    match t {
        EndTag::Right => "right",
        EndTag::Wrong => "wrong",
        EndTag::None => "none",
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IntervalView {
    /// 1-based, left to right.
    pub index: usize,
    pub lo: NumberView,
    pub hi: NumberView,
    pub kind: &'static str,
    pub left_tag: &'static str,
    pub right_tag: &'static str,
    pub count_h: Option<usize>,
    pub count_q: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Totals {
    pub z_r_p: usize,
    pub z_c_p: usize,
    pub z_r_h: usize,
    pub z_r_q: usize,
    pub h_zeros_at_poles: usize,
    pub h_zeros_at_multiple_roots: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeResult {
    pub p: Poly,
    pub degree: usize,
    pub kappa: String,
    pub h: Poly,
    pub h_degenerate: bool,
    pub q_num: Poly,
    pub q_den: Poly,
    pub poles: Vec<NumberView>,
    pub p_roots: Vec<NumberView>,
    pub intervals: Vec<IntervalView>,
    pub totals: Option<Totals>,
}

impl AnalyzeResult {
    pub fn build(p: &Poly, hq: &HQPair, part: &IntervalPartition, counts: Option<&CountReport>) -> Self {
        let intervals = part
            .intervals
            .iter()
            .enumerate()
            .map(|(k, iv)| {
                let c = counts.map(|c| &c.per_interval[k]);
                IntervalView {
                    index: k + 1,
                    lo: NumberView::of_endpoint(&iv.span.lo),
                    hi: NumberView::of_endpoint(&iv.span.hi),
                    kind: match iv.kind {
                        IntervalKind::First => "first",
                        IntervalKind::Second => "second",
                    },
                    left_tag: tag_str(iv.left_end),
                    right_tag: tag_str(iv.right_end),
                    count_h: c.map(|c| c.count_h),
                    count_q: c.map(|c| c.count_q),
                }
            })
            .collect();
        AnalyzeResult {
            p: p.clone(),
            degree: p.degree() as usize,
            kappa: format_rational(&hq.kappa),
            h: hq.h.clone(),
            h_degenerate: hq.degenerate,
            q_num: hq.q_num.clone(),
            q_den: hq.q_den.clone(),
            poles: part.poles.iter().map(NumberView::of).collect(),
            p_roots: part.p_roots.iter().map(NumberView::of).collect(),
            intervals,
            totals: counts.map(|c| Totals {
                z_r_p: c.z_r_p,
                z_c_p: c.z_c_p,
                z_r_h: c.z_r_h,
                z_r_q: c.z_r_q,
                h_zeros_at_poles: c.at_poles_h,
                h_zeros_at_multiple_roots: c.at_multiple_roots_h,
            }),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GridRowView {
    pub kappa: String,
    pub z_r_h: Option<usize>,
    pub z_r_q: Option<usize>,
    pub degree_drop: bool,
    pub on_breakpoint: bool,
}

impl From<&SweepRow> for GridRowView {
    fn from(r: &SweepRow) -> Self {
        GridRowView {
            kappa: format_rational(&r.kappa),
            z_r_h: r.z_r_h,
            z_r_q: r.z_r_q,
            degree_drop: r.degree_drop,
            on_breakpoint: r.on_breakpoint,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BreakpointView {
    pub at: NumberView,
    pub z_r_h: Option<usize>,
    pub z_r_q: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GapView {
    pub lo: NumberView,
    pub hi: NumberView,
    pub sample: String,
    pub z_r_h: usize,
    pub z_r_q: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum SweepResult {
    Grid {
        p: Poly,
        rows: Vec<GridRowView>,
    },
    Exact {
        p: Poly,
        discriminant: Poly,
        breakpoints: Vec<BreakpointView>,
        gaps: Vec<GapView>,
    },
}

impl SweepResult {
    pub fn exact(p: &Poly, b: &Breakpoints) -> Self {
        SweepResult::Exact {
            p: p.clone(),
            discriminant: b.pencil.disc.clone(),
            breakpoints: b
                .points
                .iter()
                .zip(&b.at_points)
                .map(|(pt, c)| BreakpointView {
                    at: NumberView::of(pt),
                    z_r_h: c.map(|c| c.0),
                    z_r_q: c.map(|c| c.1),
                })
                .collect(),
            gaps: b
                .gaps
                .iter()
                .map(|g| GapView {
                    lo: NumberView::of_bound(&g.lo, true),
                    hi: NumberView::of_bound(&g.hi, false),
                    sample: format_rational(&g.sample),
                    z_r_h: g.z_r_h,
                    z_r_q: g.z_r_q,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialsResult {
    pub config: TrialConfig,
    pub tally: BTreeMap<TheoremId, Tally>,
    pub failure_count: usize,
    pub failures: Vec<FailureDump>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub records: Option<Vec<TrialRecord>>,
}

impl TrialsResult {
    pub fn new(r: TrialReport, keep_records: bool) -> Self {
        TrialsResult {
            failure_count: r.failure_count(),
            config: r.config,
            tally: r.tally,
            failures: r.failures,
            records: keep_records.then_some(r.records),
        }
    }
}
