//! Which counting statements apply to a polynomial, what they predict, and
//! whether the exact counts agree.
//!
//! Predictions are computed from [`Preconditions`] and `k` alone; the counts
//! being judged enter only in [`judge`].

mod checks;
mod trials;

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::kappa::{q_reduced, Kappa};
use crate::poly::{Poly, Rational};
use crate::roots::{count_distinct_roots, real_root_count, IntervalSpec};

pub use checks::{
    check_hawaii, check_inner_m_bound, check_interval_parity, check_laguerre,
    check_monomial_gap, check_polya_positivity, check_rolle_correspondence,
    check_shapiro_criterion, derivative_identities, expected_parity, monomial_gap_window,
    verify_all, Parity,
};
pub use trials::{
    random_polynomial, random_trials, Check, FailureDump, KappaChoice, RootMode, Tally,
    TrialConfig, TrialRecord, TrialReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// `H_1 > 0` for real-rooted `p` with simple zeros.
    Laguerre,
    /// `Z_R(H_1) <= Z_C(p)` when the real zeros of `p` are simple.
    Hawaii,
    /// `Z_R(H_k) = Z_C(p)` for `k >= (n-1)/n`.
    AboveDrop,
    /// `Z_R(H_k) = n + Z_R(p) - 2` for `k <= 0`.
    NonPositive,
    /// `Z_C(p) - 2 <= Z_R(H_k) <= n + Z_R(p) - 2` for `0 < k < 1/2`.
    SmallKappa,
    /// `2 <= Z_R(H_k) <= 2n - 2k` for real-rooted `p` in regime `k`.
    RealRootedRegime,
    /// Lower bounds on `Z_R(Q_k)` for arbitrary `p`.
    LowerBound,
    /// `Z_(a,b)(H_k[p]) <= Z_(a,b)(H_{2-1/k}[p']) + 1`.
    RolleCorrespondence,
    /// `M[p] < (n-s)/(n-s+1)` on the `s`-th interval from either end.
    InnerMBound,
    /// `Z_R(H_{(n-1)/n}) + Z_R(p) > 0` once some derivative is real-rooted.
    ShapiroCriterion,
    /// The Polya polynomials `G_k` are positive for real-rooted `p`.
    PolyaPositivity,
    /// Parity of `Z(Q_k)` on each interval of the partition.
    IntervalParity,
    /// `Z_R(Q_k) = 4` for `x^n + a x^(n-2)` across a window of `k`.
    MonomialGap,
}

impl TheoremId {
    pub fn tag(&self) -> &'static str {
        match self {
            TheoremId::Laguerre => "laguerre",
            TheoremId::Hawaii => "hawaii",
            TheoremId::AboveDrop => "above-drop",
            TheoremId::NonPositive => "non-positive",
            TheoremId::SmallKappa => "small-kappa",
            TheoremId::RealRootedRegime => "real-rooted-regime",
            TheoremId::LowerBound => "lower-bound",
            TheoremId::RolleCorrespondence => "rolle-correspondence",
            TheoremId::InnerMBound => "inner-m-bound",
            TheoremId::ShapiroCriterion => "shapiro-criterion",
            TheoremId::PolyaPositivity => "polya-positivity",
            TheoremId::IntervalParity => "interval-parity",
            TheoremId::MonomialGap => "monomial-gap",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    Inapplicable,
    /// The predicted range is empty, so nothing is asserted.
    DegenerateRange,
    /// `k` sits exactly on a regime boundary; reported, not asserted.
    Boundary,
    /// A claimed value that exact computation does not reproduce, surfaced
    /// as a known deviation rather than a failure.
    Discrepancy,
}

/// A predicted count. Bounds are signed because some formulas go negative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Prediction {
    Exact { value: i64 },
    Range { lo: i64, hi: i64 },
    AtLeast { value: i64 },
    AtMost { value: i64 },
}

impl Prediction {
    pub fn admits(&self, count: usize) -> bool {
        let c = count as i64;
        match *self {
            Prediction::Exact { value } => c == value,
            Prediction::Range { lo, hi } => lo <= c && c <= hi,
            Prediction::AtLeast { value } => c >= value,
            Prediction::AtMost { value } => c <= value,
        }
    }

    /// No count can satisfy it.
    pub fn is_vacuous(&self) -> bool {
        match *self {
            Prediction::Range { lo, hi } => lo > hi,
            Prediction::AtMost { value } => value < 0,
            Prediction::Exact { value } => value < 0,
            Prediction::AtLeast { .. } => false,
        }
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prediction::Exact { value } => write!(f, "= {value}"),
            Prediction::Range { lo, hi } => write!(f, "in [{lo}, {hi}]"),
            Prediction::AtLeast { value } => write!(f, ">= {value}"),
            Prediction::AtMost { value } => write!(f, "<= {value}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub id: TheoremId,
    #[serde(serialize_with = "crate::poly::opt_rational")]
    pub kappa: Option<Kappa>,
    pub applicable: bool,
    pub reason: String,
    pub predicted: Option<Prediction>,
    pub computed: Option<usize>,
    pub outcome: Outcome,
}

impl TheoremVerdict {
    /// `Some` only for verdicts that assert something.
    pub fn pass(&self) -> Option<bool> {
        match self.outcome {
            Outcome::Pass => Some(true),
            Outcome::Fail => Some(false),
            _ => None,
        }
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    pub(crate) fn inapplicable(id: TheoremId, kappa: Option<Kappa>, reason: impl Into<String>) -> Self {
        TheoremVerdict {
            id,
            kappa,
            applicable: false,
            reason: reason.into(),
            predicted: None,
            computed: None,
            outcome: Outcome::Inapplicable,
        }
    }

    pub(crate) fn decided(
        id: TheoremId,
        kappa: Option<Kappa>,
        predicted: Prediction,
        computed: usize,
        reason: impl Into<String>,
    ) -> Self {
        let outcome = if predicted.admits(computed) {
            Outcome::Pass
        } else {
            Outcome::Fail
        };
        TheoremVerdict {
            id,
            kappa,
            applicable: true,
            reason: reason.into(),
            predicted: Some(predicted),
            computed: Some(computed),
            outcome,
        }
    }
}

/// Root-structure facts that decide which statements apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Preconditions {
    pub degree: usize,
    /// `gcd(p, p')` has no real roots.
    pub p_real_roots_simple: bool,
    /// `p'` is square-free with `n - 1` real roots.
    pub p_prime_real_simple: bool,
    /// `p` is square-free with `n` real roots.
    pub p_real_rooted_simple: bool,
    /// `p = c (x - a)^n`.
    pub perfect_power: bool,
    pub z_r_p: usize,
    pub z_c_p: usize,
    /// Distinct real roots of `p`.
    pub distinct_real_p: usize,
    /// Distinct real roots of `p'`.
    pub distinct_real_dp: usize,
}

pub fn check_preconditions(p: &Poly) -> Result<Preconditions> {
    let n = p.degree();
    if n < 2 {
        return Err(crate::error::Error::DegreeTooLow { need: 2, got: n });
    }
    let n = n as usize;
    let dp = p.derivative(1);
    let line = IntervalSpec::real_line();
    let g = p.gcd(&dp)?;
    let p_real_roots_simple = g.is_constant() || count_distinct_roots(&g, &line)? == 0;
    let distinct_real_p = count_distinct_roots(p, &line)?;
    let distinct_real_dp = count_distinct_roots(&dp, &line)?;
    let z_r_p = real_root_count(p)?;
    Ok(Preconditions {
        degree: n,
        p_real_roots_simple,
        p_prime_real_simple: dp.is_squarefree() && distinct_real_dp == n - 1,
        p_real_rooted_simple: g.is_constant() && distinct_real_p == n,
        perfect_power: p.squarefree_part()?.degree() == 1,
        z_r_p,
        z_c_p: n - z_r_p,
        distinct_real_p,
        distinct_real_dp,
    })
}

/// What one statement says about a `(p, k)` pair before any counting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub id: TheoremId,
    pub applicable: bool,
    pub reason: String,
    pub predicted: Option<Prediction>,
    /// `k` is exactly the left end of its regime.
    pub boundary: bool,
    /// A case where the statement is known not to hold as written; a
    /// mismatch there is reported as a discrepancy with this note.
    pub deviation: Option<&'static str>,
}

impl Expectation {
    fn no(id: TheoremId, reason: impl Into<String>) -> Self {
        Expectation {
            id,
            applicable: false,
            reason: reason.into(),
            predicted: None,
            boundary: false,
            deviation: None,
        }
    }

    fn yes(id: TheoremId, predicted: Prediction, reason: impl Into<String>) -> Self {
        Expectation {
            id,
            applicable: true,
            reason: reason.into(),
            predicted: Some(predicted),
            boundary: false,
            deviation: None,
        }
    }
}

/// The largest `k >= 2` with `(k-1)/k <= kappa`, if `1/2 <= kappa < 1`.
pub fn regime_of(kappa: &Kappa) -> Option<usize> {
    let one = Rational::one();
    if kappa < &Rational::new(1.into(), 2.into()) || kappa >= &one {
        return None;
    }
    // (k-1)/k <= kappa  <=>  k <= 1/(1-kappa)
    let k = (one.clone() / (one - kappa)).floor();
    k.to_integer().try_into().ok()
}

/// Left end `(k-1)/k` of regime `k`.
pub fn regime_start(k: usize) -> Rational {
    Rational::new(((k - 1) as i64).into(), (k as i64).into())
}

/// Predictions for the statements that take a `k`, from preconditions only.
pub fn expectations(pre: &Preconditions, kappa: &Kappa) -> Vec<Expectation> {
    let n = pre.degree as i64;
    let (zr, zc) = (pre.z_r_p as i64, pre.z_c_p as i64);
    let drop = Rational::new((n - 1).into(), n.into());
    let zero = Rational::zero();
    let half = Rational::new(1.into(), 2.into());
    let simple_pair = pre.p_real_roots_simple && pre.p_prime_real_simple;
    let class_reason = "needs simple real zeros of p and real simple zeros of p'";
    let mut out = Vec::with_capacity(5);

    out.push(if !simple_pair {
        Expectation::no(TheoremId::AboveDrop, class_reason)
    } else if kappa < &drop {
        Expectation::no(TheoremId::AboveDrop, "k is below (n-1)/n")
    } else {
        let mut e = Expectation::yes(TheoremId::AboveDrop, Prediction::Exact { value: zc }, "Z_R(H) = Z_C(p)");
        if n == 2 && kappa == &drop {
            e.deviation = Some("for n = 2 at k = 1/2, H is a nonzero constant and has no zeros");
        }
        e
    });

    out.push(if !simple_pair {
        Expectation::no(TheoremId::NonPositive, class_reason)
    } else if kappa > &zero {
        Expectation::no(TheoremId::NonPositive, "k is positive")
    } else {
        Expectation::yes(
            TheoremId::NonPositive,
            Prediction::Exact { value: n + zr - 2 },
            "Z_R(H) = n + Z_R(p) - 2",
        )
    });

    out.push(if !simple_pair {
        Expectation::no(TheoremId::SmallKappa, class_reason)
    } else if kappa <= &zero || kappa >= &half {
        Expectation::no(TheoremId::SmallKappa, "k is outside (0, 1/2)")
    } else {
        Expectation::yes(
            TheoremId::SmallKappa,
            Prediction::Range { lo: zc - 2, hi: n + zr - 2 },
            "Z_C(p) - 2 <= Z_R(H) <= n + Z_R(p) - 2",
        )
    });

    out.push(if !pre.p_real_rooted_simple {
        Expectation::no(TheoremId::RealRootedRegime, "needs n simple real zeros")
    } else {
        match regime_of(kappa) {
            None => Expectation::no(TheoremId::RealRootedRegime, "k is outside [1/2, 1)"),
            Some(k) => {
                let k64 = k as i64;
                let mut e = Expectation::yes(
                    TheoremId::RealRootedRegime,
                    Prediction::Range { lo: 2, hi: 2 * n - 2 * k64 },
                    format!("regime k = {k}: 2 <= Z_R(H) <= 2n - 2k"),
                );
                if k64 > n - 1 {
                    e.reason = format!("regime k = {k} exceeds n - 1 = {}; range is empty", n - 1);
                }
                e.boundary = &regime_start(k) == kappa;
                e
            }
        }
    });

    let zp = pre.distinct_real_p as i64;
    let zd = pre.distinct_real_dp as i64;
    out.push(if kappa > &drop {
        Expectation::yes(
            TheoremId::LowerBound,
            Prediction::AtLeast { value: zd + 1 - zp },
            "Z_R(Q) >= #Z(p') + 1 - #Z(p) above (n-1)/n",
        )
    } else if kappa > &zero {
        Expectation::yes(
            TheoremId::LowerBound,
            Prediction::AtLeast { value: zd - 1 - zp },
            "Z_R(Q) >= #Z(p') - 1 - #Z(p) on (0, (n-1)/n]",
        )
    } else if pre.perfect_power {
        Expectation::no(TheoremId::LowerBound, "p = c (x - a)^n is excluded for k <= 0")
    } else {
        Expectation::yes(
            TheoremId::LowerBound,
            Prediction::AtLeast { value: zd - 1 + zp },
            "Z_R(Q) >= #Z(p') - 1 + #Z(p) for k <= 0",
        )
    });
    out
}

/// Exact counts at one `k`; `None` where `H` vanishes identically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComputedCounts {
    pub z_r_h: Option<usize>,
    pub z_r_q: Option<usize>,
}

pub fn computed_counts(p: &Poly, kappa: &Kappa) -> Result<ComputedCounts> {
    let hq = q_reduced(p, kappa)?;
    if hq.degenerate {
        return Ok(ComputedCounts { z_r_h: None, z_r_q: None });
    }
    Ok(ComputedCounts {
        z_r_h: Some(real_root_count(&hq.h)?),
        z_r_q: Some(real_root_count(&hq.q_num)?),
    })
}

/// Compares one expectation with the exact counts.
pub fn judge(e: &Expectation, kappa: &Kappa, counts: &ComputedCounts) -> TheoremVerdict {
    let k = Some(kappa.clone());
    let computed = if e.id == TheoremId::LowerBound {
        counts.z_r_q
    } else {
        counts.z_r_h
    };
    let (predicted, computed) = match (&e.predicted, computed) {
        (Some(pr), Some(c)) if e.applicable => (pr.clone(), c),
        (_, None) if e.applicable => {
            return TheoremVerdict::inapplicable(e.id, k, "H vanishes identically")
        }
        _ => {
            let mut v = TheoremVerdict::inapplicable(e.id, k, e.reason.clone());
            v.computed = computed;
            return v;
        }
    };
    let mut v = TheoremVerdict::decided(e.id, k, predicted.clone(), computed, e.reason.clone());
    if predicted.is_vacuous() {
        v.outcome = Outcome::DegenerateRange;
    } else if e.boundary {
        v.outcome = Outcome::Boundary;
        let inside = if predicted.admits(computed) { "inside" } else { "outside" };
        v.reason = format!("{}; k is a regime boundary, count {computed} lies {inside} the range", e.reason);
    } else if let (Some(note), Outcome::Fail) = (e.deviation, v.outcome) {
        v.outcome = Outcome::Discrepancy;
        v.reason = format!("{}; {note}", e.reason);
    }
    v
}

/// Every `k`-dependent verdict for `p` at `k`.
pub fn predict(p: &Poly, kappa: &Kappa) -> Result<Vec<TheoremVerdict>> {
    let pre = check_preconditions(p)?;
    let counts = computed_counts(p, kappa)?;
    Ok(expectations(&pre, kappa)
        .iter()
        .map(|e| judge(e, kappa, &counts))
        .collect())
}
