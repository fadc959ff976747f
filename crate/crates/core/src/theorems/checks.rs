use num_traits::{One, Zero};
use serde::Serialize;

use super::{
    check_preconditions, predict, Outcome, Prediction, TheoremId, TheoremVerdict,
};
use crate::error::{Error, Result};
use crate::kappa::{
    h_unchecked, interval_partition, per_interval_counts_with, polya_gk, IntervalKind, Kappa,
};
use crate::poly::{int, Poly, Rational};
use crate::roots::{
    count_distinct_roots, count_roots_with_multiplicity, interior_point, real_root_count,
    IntervalSpec,
};

fn positive_at(q: &Poly, x: &Rational) -> bool {
    q.eval(x) > Rational::zero()
}

/// Real-rooted `p` with simple zeros has `H_1[p] > 0` everywhere.
pub fn check_laguerre(p: &Poly) -> Result<TheoremVerdict> {
    let pre = check_preconditions(p)?;
    let id = TheoremId::Laguerre;
    if !pre.p_real_rooted_simple {
        return Ok(TheoremVerdict::inapplicable(id, Some(int(1)), "needs n simple real zeros"));
    }
    let h = h_unchecked(p, &int(1));
    let count = real_root_count(&h)?;
    let mut v = TheoremVerdict::decided(id, Some(int(1)), Prediction::Exact { value: 0 }, count, "H_1 has no real zeros");
    if !positive_at(&h, &Rational::zero()) {
        v.outcome = Outcome::Fail;
        v.reason = "H_1(0) is not positive".into();
    }
    Ok(v)
}

/// `Z_R(H_1[p]) <= Z_C(p)` when every real zero of `p` is simple.
pub fn check_hawaii(p: &Poly) -> Result<TheoremVerdict> {
    let pre = check_preconditions(p)?;
    let id = TheoremId::Hawaii;
    if !pre.p_real_roots_simple {
        return Ok(TheoremVerdict::inapplicable(id, Some(int(1)), "p has a multiple real zero"));
    }
    let count = real_root_count(&h_unchecked(p, &int(1)))?;
    Ok(TheoremVerdict::decided(
        id,
        Some(int(1)),
        Prediction::AtMost { value: pre.z_c_p as i64 },
        count,
        "Z_R(H_1) <= Z_C(p)",
    ))
}

/// The two differences that must vanish identically for `k != 0`:
/// `H'·p' - H_{2-1/k}[p']·p - ((2k-1)/k) H·p''` and
/// `H'·p'' - k H_{2-1/k}[p']·p' - H·p'''`, with `H = H_k[p]`.
pub fn derivative_identities(p: &Poly, kappa: &Kappa) -> Result<[Poly; 2]> {
    if kappa.is_zero() {
        return Err(Error::InvalidParameter("k must be nonzero".into()));
    }
    let (d1, d2, d3) = (p.derivative(1), p.derivative(2), p.derivative(3));
    let h = h_unchecked(p, kappa);
    let dh = h.derivative(1);
    let k2 = int(2) - Rational::one() / kappa;
    let hd = h_unchecked(&d1, &k2);
    let c = (int(2) * kappa - Rational::one()) / kappa;
    let first = &(&(&dh * &d1) - &(&hd * p)) - &(&h * &d2).scale(&c);
    let second = &(&(&dh * &d2) - &(&hd * &d1).scale(kappa)) - &(&h * &d3);
    Ok([first, second])
}

/// `Z_(a,b)(H_k[p]) <= Z_(a,b)(H_{2-1/k}[p']) + 1` on an interval whose
/// closure avoids the zeros of `p, p'` or of `p', p''`.
pub fn check_rolle_correspondence(p: &Poly, kappa: &Kappa, iv: &IntervalSpec) -> Result<TheoremVerdict> {
    let id = TheoremId::RolleCorrespondence;
    let k = Some(kappa.clone());
    if kappa.is_zero() {
        return Ok(TheoremVerdict::inapplicable(id, k, "k = 0"));
    }
    if p.degree() < 3 {
        return Ok(TheoremVerdict::inapplicable(id, k, "needs degree >= 3 so that H applies to p'"));
    }
    let closed = IntervalSpec::closed(iv.lo.clone(), iv.hi.clone());
    let (d1, d2) = (p.derivative(1), p.derivative(2));
    let free = |q: &Poly| count_distinct_roots(q, &closed).map(|c| c == 0);
    let d1_free = free(&d1)?;
    if !(d1_free && (free(p)? || free(&d2)?)) {
        return Ok(TheoremVerdict::inapplicable(id, k, "p' or both of p, p'' vanish on the closed interval"));
    }
    let h = h_unchecked(p, kappa);
    let hd = h_unchecked(&d1, &(int(2) - Rational::one() / kappa));
    if h.is_zero() || hd.is_zero() {
        return Ok(TheoremVerdict::inapplicable(id, k, "one side vanishes identically"));
    }
    let open = IntervalSpec::open(iv.lo.clone(), iv.hi.clone());
    let lhs = count_roots_with_multiplicity(&h, &open)?;
    let rhs = count_roots_with_multiplicity(&hd, &open)?;
    let mut v = TheoremVerdict::decided(
        id,
        k,
        Prediction::AtMost { value: rhs as i64 + 1 },
        lhs,
        format!("Z(H_k[p]) = {lhs}, Z(H_(2-1/k)[p']) = {rhs}"),
    );
    if derivative_identities(p, kappa)?.iter().any(|d| !d.is_zero()) {
        v.outcome = Outcome::Fail;
        v.reason = "derivative identities do not vanish".into();
    }
    Ok(v)
}

/// For real-rooted `p` with simple zeros and `s = 2..=(n+1)/2`, `M[p] <
/// (n-s)/(n-s+1)` on the `s`-th interval from each end, checked as `H_c > 0`.
pub fn check_inner_m_bound(p: &Poly) -> Result<TheoremVerdict> {
    let pre = check_preconditions(p)?;
    let id = TheoremId::InnerMBound;
    if !pre.p_real_rooted_simple {
        return Ok(TheoremVerdict::inapplicable(id, None, "needs n simple real zeros"));
    }
    let n = pre.degree;
    let part = interval_partition(p)?;
    let mut zeros = 0;
    let mut bad_sign = Vec::new();
    for s in 2..=(n + 1) / 2 {
        let c = Rational::new(((n - s) as i64).into(), ((n - s + 1) as i64).into());
        let h = h_unchecked(p, &c);
        let mut idx = vec![s - 1, n - s];
        idx.dedup();
        for i in idx {
            let span = &part.intervals[i].span;
            zeros += count_roots_with_multiplicity(&h, span)?;
            if !positive_at(&h, &interior_point(span)) {
                bad_sign.push(i + 1);
            }
        }
    }
    let reason = if n < 3 {
        "no inner intervals at this degree".to_string()
    } else {
        "H_c has no zeros on the inner intervals".to_string()
    };
    let mut v = TheoremVerdict::decided(id, None, Prediction::Exact { value: 0 }, zeros, reason);
    if !bad_sign.is_empty() {
        v.outcome = Outcome::Fail;
        v.reason = format!("H_c is not positive inside intervals {bad_sign:?}");
    }
    Ok(v)
}

/// For even `n >= 4` with some real-rooted `p^(k)`, `1 <= k <= n-2`:
/// `Z_R(H_{(n-1)/n}[p]) + Z_R(p) > 0`.
pub fn check_shapiro_criterion(p: &Poly) -> Result<TheoremVerdict> {
    let pre = check_preconditions(p)?;
    let n = pre.degree;
    let id = TheoremId::ShapiroCriterion;
    let c = Rational::new(((n - 1) as i64).into(), (n as i64).into());
    let k = Some(c.clone());
    if n % 2 == 1 || n < 4 {
        return Ok(TheoremVerdict::inapplicable(id, k, "needs even degree >= 4"));
    }
    let h = h_unchecked(p, &c);
    let sum = pre.z_r_p + if h.is_zero() { 0 } else { real_root_count(&h)? };
    let mut trigger = None;
    for j in 1..=n - 2 {
        if real_root_count(&p.derivative(j))? == n - j {
            trigger = Some(j);
            break;
        }
    }
    Ok(match trigger {
        Some(j) => TheoremVerdict::decided(
            id,
            k,
            Prediction::AtLeast { value: 1 },
            sum,
            format!("derivative of order {j} is real-rooted"),
        ),
        None => {
            let mut v = TheoremVerdict::inapplicable(id, k, "criterion not triggered: no derivative of order 1..n-2 is real-rooted");
            v.computed = Some(sum);
            v
        }
    })
}

/// `G_k > 0` for `k = 1..n-1` when `p` is real-rooted with simple zeros.
pub fn check_polya_positivity(p: &Poly) -> Result<TheoremVerdict> {
    let pre = check_preconditions(p)?;
    let id = TheoremId::PolyaPositivity;
    if !pre.p_real_rooted_simple {
        return Ok(TheoremVerdict::inapplicable(id, None, "needs n simple real zeros"));
    }
    let mut zeros = 0;
    let mut bad = Vec::new();
    for k in 1..pre.degree {
        let g = polya_gk(p, k)?;
        zeros += real_root_count(&g)?;
        if !positive_at(&g, &Rational::zero()) {
            bad.push(k);
        }
    }
    let mut v = TheoremVerdict::decided(id, None, Prediction::Exact { value: 0 }, zeros, "every G_k is zero-free");
    if !bad.is_empty() {
        v.outcome = Outcome::Fail;
        v.reason = format!("G_k not positive at 0 for k in {bad:?}");
    }
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(c: usize) -> Parity {
        if c % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Parity of `Z(Q_k)` on an interval, from its type, whether it is finite,
/// and where `k` sits relative to `(n-1)/n`. `None` for an infinite interval
/// at `k = (n-1)/n` exactly, where `Q` tends to zero at infinity and its
/// sign there depends on lower-order terms rather than on the type.
pub fn expected_parity(kind: IntervalKind, finite: bool, kappa: &Kappa, n: usize) -> Option<Parity> {
    let drop = Rational::new(((n - 1) as i64).into(), (n as i64).into());
    Some(match (kind, finite) {
        (IntervalKind::First, true) => Parity::Even,
        (IntervalKind::Second, true) => Parity::Odd,
        (_, false) if kappa == &drop => return None,
        (IntervalKind::First, false) if kappa > &drop => Parity::Even,
        (IntervalKind::First, false) => Parity::Odd,
        (IntervalKind::Second, false) if kappa > &drop => Parity::Odd,
        (IntervalKind::Second, false) => Parity::Even,
    })
}

/// Compares every per-interval count of `Q_k` with [`expected_parity`].
/// The computed value is the number of intervals with the wrong parity.
pub fn check_interval_parity(p: &Poly, kappa: &Kappa) -> Result<TheoremVerdict> {
    let id = TheoremId::IntervalParity;
    let k = Some(kappa.clone());
    let part = interval_partition(p)?;
    if part.poles.is_empty() {
        return Ok(TheoremVerdict::inapplicable(id, k, "M[p] has no poles"));
    }
    let report = match per_interval_counts_with(p, kappa, &part) {
        Ok(r) => r,
        Err(Error::DegenerateH) => return Ok(TheoremVerdict::inapplicable(id, k, "H vanishes identically")),
        Err(e) => return Err(e),
    };
    let n = p.degree() as usize;
    let wrong: Vec<usize> = part
        .intervals
        .iter()
        .zip(&report.per_interval)
        .filter(|(iv, c)| {
            expected_parity(iv.kind, iv.is_finite(), kappa, n)
                .is_some_and(|e| e != Parity::of(c.count_q))
        })
        .map(|(_, c)| c.index + 1)
        .collect();
    let checked = part
        .intervals
        .iter()
        .filter(|iv| expected_parity(iv.kind, iv.is_finite(), kappa, n).is_some())
        .count();
    let reason = if wrong.is_empty() {
        format!("{checked} of {} intervals checked", part.intervals.len())
    } else {
        format!("wrong parity on intervals {wrong:?}")
    };
    Ok(TheoremVerdict::decided(id, k, Prediction::Exact { value: 0 }, wrong.len(), reason))
}

/// The closed window `[(n-1)/n, (2n-3)^2 / (4n(n-2))]` for `x^n + a x^(n-2)`.
pub fn monomial_gap_window(n: usize) -> (Rational, Rational) {
    let n = n as i64;
    (
        Rational::new((n - 1).into(), n.into()),
        Rational::new(((2 * n - 3) * (2 * n - 3)).into(), (4 * n * (n - 2)).into()),
    )
}

fn monomial_gap_shape(p: &Poly) -> Option<usize> {
    let n = p.degree();
    if n < 3 {
        return None;
    }
    let n = n as usize;
    let c = p.coeffs();
    let others_zero = c.iter().enumerate().all(|(i, a)| i == n || i == n - 2 || a.is_zero());
    let ratio = &c[n - 2] / &c[n];
    (others_zero && ratio > Rational::zero()).then_some(n)
}

/// For `p = c (x^n + a x^(n-2))`, `a > 0`: `Z_R(Q_k) = 4` on the window.
/// At the window's ends a differing count is reported as a discrepancy.
/// `None` when `p` is not of that shape.
pub fn check_monomial_gap(p: &Poly, kappa: &Kappa) -> Result<Option<TheoremVerdict>> {
    let Some(n) = monomial_gap_shape(p) else {
        return Ok(None);
    };
    let id = TheoremId::MonomialGap;
    let k = Some(kappa.clone());
    let (lo, hi) = monomial_gap_window(n);
    if kappa < &lo || kappa > &hi {
        return Ok(Some(TheoremVerdict::inapplicable(id, k, "k is outside the window")));
    }
    let counts = super::computed_counts(p, kappa)?;
    let Some(z) = counts.z_r_q else {
        return Ok(Some(TheoremVerdict::inapplicable(id, k, "H vanishes identically")));
    };
    let mut v = TheoremVerdict::decided(id, k, Prediction::Exact { value: 4 }, z, "Z_R(Q) = 4 on the window");
    let endpoint = kappa == &lo || kappa == &hi;
    if endpoint && v.outcome == Outcome::Fail {
        v.outcome = Outcome::Discrepancy;
        v.reason = format!("closed-window claim not reproduced at the endpoint: Z_R(Q) = {z}");
    }
    Ok(Some(v))
}

/// Every verdict for `p`: the `k`-free checks once, then each `k`.
pub fn verify_all(p: &Poly, kappas: &[Kappa]) -> Result<Vec<TheoremVerdict>> {
    let mut out = vec![
        check_laguerre(p)?,
        check_hawaii(p)?,
        check_polya_positivity(p)?,
        check_inner_m_bound(p)?,
        check_shapiro_criterion(p)?,
    ];
    for k in kappas {
        out.extend(predict(p, k)?);
        out.push(check_interval_parity(p, k)?);
        if let Some(v) = check_monomial_gap(p, k)? {
            out.push(v);
        }
    }
    Ok(out)
}
