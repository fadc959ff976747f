//! Dyadic searches producing verified sharpness examples.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kappa::{h_unchecked, interval_partition, m_eval, q_reduced, Kappa};
use crate::poly::{format_rational, int, rat, rational_str, sign, Poly, Rational};
use crate::roots::{count_distinct_roots, real_root_count, AlgebraicNumber, IntervalSpec};

use super::{chebyshev_t, Claim, FamilyInstance};

const MAX_HALVINGS: u32 = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KappaCount {
    #[serde(serialize_with = "rational_str")]
    pub kappa: Kappa,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem7Search {
    pub n: usize,
    #[serde(serialize_with = "rational_str")]
    pub eps: Rational,
    /// The shift added to `T_(2n) - 1`.
    #[serde(serialize_with = "rational_str")]
    pub b: Rational,
    /// `B - 1`, the constant added to `T_(2n)`.
    #[serde(serialize_with = "rational_str")]
    pub c: Rational,
    pub p: Poly,
    pub attempts: usize,
    pub verification: Vec<KappaCount>,
}

impl Theorem7Search {
    pub fn into_instance(self) -> FamilyInstance {
        let target = 4 * self.n - 2;
        let mut inst = FamilyInstance::new(
            "theorem7",
            &[("n", int(self.n as i64)), ("eps", self.eps.clone())],
            self.p.clone(),
        );
        inst.claims.push(Claim::within("C = B - 1", &self.c, &int(-1), &int(0)));
        for row in &self.verification {
            inst.claims.push(Claim::count(
                format!("Z_R(Q) at k = {}", format_rational(&row.kappa)),
                target,
                row.count,
            ));
        }
        inst
    }
}

/// The sampled `k` values: `1/10`, `1/4` and `1/2 - eps`, without repeats.
fn theorem7_kappas(eps: &Rational) -> Vec<Kappa> {
    let mut ks = vec![rat(1, 10), rat(1, 4), rat(1, 2) - eps];
    ks.sort();
    ks.dedup();
    ks
}

/// Finds `B = 1/2^j` (`j >= 2`) such that `Z_R(Q_k[T_(2n) + B - 1]) = 4n - 2`
/// at every sampled `k`.
pub fn theorem7_search(n: usize, eps: &Rational) -> Result<Theorem7Search> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if !(eps > &Rational::zero() && eps < &rat(1, 2)) {
        return Err(Error::InvalidParameter(format!(
            "eps must lie in (0, 1/2); got {}",
            format_rational(eps)
        )));
    }
    let target = 4 * n - 2;
    let kappas = theorem7_kappas(eps);
    let t = chebyshev_t(2 * n);
    let mut b = rat(1, 4);
    for attempt in 1..=MAX_HALVINGS as usize - 1 {
        let c = &b - Rational::one();
        let p = &t + &Poly::constant(c.clone());
        let mut verification = Vec::with_capacity(kappas.len());
        for k in &kappas {
            let count = real_root_count(&q_reduced(&p, k)?.q_num)?;
            if count != target {
                break;
            }
            verification.push(KappaCount {
                kappa: k.clone(),
                count,
            });
        }
        if verification.len() == kappas.len() {
            return Ok(Theorem7Search {
                n,
                eps: eps.clone(),
                b,
                c,
                p,
                attempts: attempt,
                verification,
            });
        }
        b /= int(2);
    }
    Err(Error::SearchExhausted {
        step: 0,
        msg: format!("no B >= 2^-{MAX_HALVINGS} gives {target} zeros"),
    })
}

/// A point `y` of the interval `I_interval` (1-based) with `M[p](y) > bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub interval: usize,
    #[serde(serialize_with = "rational_str")]
    pub y: Rational,
    #[serde(serialize_with = "rational_str")]
    pub bound: Rational,
    #[serde(serialize_with = "rational_str")]
    pub m: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem10Build {
    pub n: usize,
    #[serde(serialize_with = "rational_str")]
    pub eps: Rational,
    pub p: Poly,
    /// Roots of `p` in ascending order.
    #[serde(serialize_with = "crate::poly::rational_strs")]
    pub roots: Vec<Rational>,
    pub witnesses: Vec<Witness>,
}

impl Theorem10Build {
    pub fn into_instance(self) -> FamilyInstance {
        let mut inst = FamilyInstance::new(
            "theorem10",
            &[("n", int(self.n as i64)), ("eps", self.eps.clone())],
            self.p.clone(),
        );
        let distinct = count_distinct_roots(&self.p, &IntervalSpec::real_line()).unwrap_or(0);
        inst.claims.push(Claim::count("distinct real roots", self.n, distinct));
        for w in &self.witnesses {
            let mut c = Claim::within(
                format!("M(y) on I_{} at y = {}", w.interval, format_rational(&w.y)),
                &w.m,
                &w.bound,
                &int(1),
            );
            c.expected = format!("> {}", format_rational(&w.bound));
            inst.claims.push(c);
        }
        inst
    }
}

/// `M[p] > c` throughout `[lo, hi]`, certified by `p'` having no zero there
/// and `c (p')^2 - p p''` having no zero and a negative value at the midpoint.
fn m_exceeds_on(p: &Poly, c: &Rational, lo: &Rational, hi: &Rational) -> Result<bool> {
    let iv = IntervalSpec::closed_rat(lo.clone(), hi.clone());
    if count_distinct_roots(&p.derivative(1), &iv)? != 0 {
        return Ok(false);
    }
    let h = h_unchecked(p, c);
    if h.is_zero() || count_distinct_roots(&h, &iv)? != 0 {
        return Ok(false);
    }
    Ok(sign(&h.eval(&((lo + hi) / int(2)))) < 0)
}

struct Carried {
    lo: Rational,
    hi: Rational,
    target: Rational,
    interval: usize,
}

/// Splits the multiple root of `x^(n-1)(x - 1)` at zero one root at a time,
/// keeping for each split a small interval where `M[p]` stays within `eps`
/// of the limit value it had before the split.
pub fn theorem10_build(n: usize, eps: &Rational) -> Result<Theorem10Build> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n must be at least 3; got {n}")));
    }
    if !(eps > &Rational::zero() && eps < &rat(1, 2)) {
        return Err(Error::InvalidParameter(format!(
            "eps must lie in (0, 1/2); got {}",
            format_rational(eps)
        )));
    }
    let zero = Rational::zero();
    // positive roots other than the cluster at zero, ascending
    let mut split: Vec<Rational> = vec![Rational::one()];
    let build = |zeros: usize, split: &[Rational]| {
        let mut roots = vec![zero.clone(); zeros];
        roots.extend(split.iter().cloned());
        Poly::from_roots(&roots, Rational::one())
    };
    let mut p = build(n - 1, &split);
    let mut carried: Vec<Carried> = Vec::new();
    let mut delta_prev = Rational::one();
    let half_eps = eps / int(2);

    for k in 1..=n - 2 {
        let m = (n - k) as i64;
        let target = rat(m - 1, m);

        let mut delta = &delta_prev / int(4);
        let mut found = false;
        for _ in 0..MAX_HALVINGS {
            if m_exceeds_on(&p, &(&target - &half_eps), &(&delta / int(4)), &(&delta / int(2)))? {
                found = true;
                break;
            }
            delta /= int(2);
        }
        if !found {
            return Err(Error::SearchExhausted {
                step: k,
                msg: "no check interval near zero keeps M above the limit".into(),
            });
        }
        carried.push(Carried {
            lo: &delta / int(4),
            hi: &delta / int(2),
            target,
            interval: n - k,
        });

        let mut xr = &delta / int(8);
        let mut next = None;
        for _ in 0..MAX_HALVINGS {
            let mut trial_split = vec![xr.clone()];
            trial_split.extend(split.iter().cloned());
            let cand = build(n - k - 1, &trial_split);
            let mut ok = true;
            for c in &carried {
                if !m_exceeds_on(&cand, &(&c.target - eps), &c.lo, &c.hi)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                next = Some((cand, trial_split));
                break;
            }
            xr /= int(2);
        }
        let Some((cand, trial_split)) = next else {
            return Err(Error::SearchExhausted {
                step: k,
                msg: "no split point keeps every carried interval above its bound".into(),
            });
        };
        p = cand;
        split = trial_split;
        delta_prev = delta;
    }

    let part = interval_partition(&p)?;
    let mut witnesses = Vec::with_capacity(carried.len());
    for (k, c) in carried.iter().enumerate() {
        let y = (&c.lo + &c.hi) / int(2);
        let bound = &c.target - eps;
        let m = m_eval(&p, &y)?;
        let at = part.interval_of(&AlgebraicNumber::rational(y.clone(), 1)) + 1;
        if at != c.interval || m <= bound {
            return Err(Error::SearchExhausted {
                step: k + 1,
                msg: format!(
                    "witness {} landed in I_{at} with M = {}; wanted I_{} above {}",
                    format_rational(&y),
                    format_rational(&m),
                    c.interval,
                    format_rational(&bound)
                ),
            });
        }
        witnesses.push(Witness {
            interval: c.interval,
            y,
            bound,
            m,
        });
    }
    witnesses.sort_by_key(|w| w.interval);

    let mut roots = vec![zero];
    roots.extend(split);
    Ok(Theorem10Build {
        n,
        eps: eps.clone(),
        p,
        roots,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::RootCounter;

    #[test]
    fn theorem7_small_cases() {
        for n in 1..=3 {
            let s = theorem7_search(n, &rat(1, 10)).unwrap();
            assert!(s.b <= rat(1, 4));
            assert_eq!(s.verification.len(), 3);
            // H shares no zero with p' here, so its own count must agree
            for row in &s.verification {
                let h = h_unchecked(&s.p, &row.kappa);
                assert!(h.gcd(&s.p.derivative(1)).unwrap().is_constant());
                assert_eq!(RootCounter::new(&h).unwrap().count_real(), 4 * n - 2);
            }
            assert!(s.into_instance().all_hold());
        }
        assert!(theorem7_search(2, &rat(1, 2)).is_err());
        assert!(theorem7_search(0, &rat(1, 10)).is_err());
    }

    #[test]
    fn theorem10_small_cases() {
        for n in 3..=5 {
            let eps = rat(1, 10);
            let b = theorem10_build(n, &eps).unwrap();
            assert_eq!(b.roots.len(), n);
            assert!(b.p.is_squarefree());
            assert_eq!(real_root_count(&b.p).unwrap(), n);
            assert_eq!(b.witnesses.len(), n - 2);
            for (i, w) in b.witnesses.iter().enumerate() {
                let k = i as i64 + 2;
                assert_eq!(w.interval, k as usize);
                assert_eq!(w.bound, rat(k - 1, k) - &eps);
                assert!(m_eval(&b.p, &w.y).unwrap() > w.bound);
            }
            assert!(b.into_instance().all_hold());
        }
        assert!(theorem10_build(2, &rat(1, 10)).is_err());
    }

    #[test]
    fn seed_limit() {
        for n in 3..=6 {
            let p0 = Poly::from_roots(&[vec![Rational::zero(); n - 1], vec![Rational::one()]].concat(), Rational::one());
            let lim = crate::kappa::m_limit_info(&p0).unwrap();
            let (_, at_zero) = &lim.at_multiple_roots[0];
            assert_eq!(at_zero, &rat(n as i64 - 2, n as i64 - 1));
        }
    }
}
