//! Named polynomial families with the exact facts claimed about them, and
//! the two constructive searches for sharpness examples.

mod search;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kappa::{h_kappa, m_eval, q_reduced, Kappa};
use crate::poly::{format_rational, int, parse_rational, rat, rational_str, Poly, Rational};
use crate::roots::{count_roots_with_multiplicity, isolate_roots, real_root_count, Endpoint, IntervalSpec};
use crate::theorems::monomial_gap_window;

pub use search::{theorem10_build, theorem7_search, KappaCount, Theorem10Build, Theorem7Search, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    /// Two polynomials agree coefficient by coefficient.
    Identity,
    /// A zero count.
    Count,
    /// A value lies in a stated window.
    Bound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Holds,
    Fails,
    /// A stated value the exact computation does not reproduce, reported
    /// rather than asserted.
    Discrepancy,
    /// Computed and shown, but outside the parameter range the claim covers.
    NotAsserted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub label: String,
    pub kind: ClaimKind,
    pub expected: String,
    pub observed: String,
    pub status: ClaimStatus,
}

impl Claim {
    pub fn identity(label: impl Into<String>, lhs: &Poly, rhs: &Poly) -> Claim {
        Claim {
            label: label.into(),
            kind: ClaimKind::Identity,
            expected: rhs.to_string(),
            observed: lhs.to_string(),
            status: holds(lhs == rhs),
        }
    }

    pub fn count(label: impl Into<String>, expected: usize, observed: usize) -> Claim {
        Claim {
            label: label.into(),
            kind: ClaimKind::Count,
            expected: expected.to_string(),
            observed: observed.to_string(),
            status: holds(expected == observed),
        }
    }

    /// `lo < value < hi`.
    pub fn within(label: impl Into<String>, value: &Rational, lo: &Rational, hi: &Rational) -> Claim {
        Claim {
            label: label.into(),
            kind: ClaimKind::Bound,
            expected: format!("({}, {})", format_rational(lo), format_rational(hi)),
            observed: format_rational(value),
            status: holds(lo < value && value < hi),
        }
    }

    fn not_asserted(mut self) -> Claim {
        self.status = ClaimStatus::NotAsserted;
        self
    }

    fn reported(mut self) -> Claim {
        if self.status == ClaimStatus::Fails {
            self.status = ClaimStatus::Discrepancy;
        }
        self
    }
}

fn holds(ok: bool) -> ClaimStatus {
    if ok {
        ClaimStatus::Holds
    } else {
        ClaimStatus::Fails
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Param {
    pub name: String,
    #[serde(serialize_with = "rational_str")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyInstance {
    pub name: String,
    pub params: Vec<Param>,
    pub p: Poly,
    pub claims: Vec<Claim>,
}

impl FamilyInstance {
    fn new(name: &str, params: &[(&str, Rational)], p: Poly) -> Self {
        FamilyInstance {
            name: name.to_string(),
            params: params
                .iter()
                .map(|(k, v)| Param {
                    name: k.to_string(),
                    value: v.clone(),
                })
                .collect(),
            p,
            claims: Vec::new(),
        }
    }

    /// No claim failed. Discrepancies and unasserted claims do not count.
    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|c| c.status != ClaimStatus::Fails)
    }

    pub fn claim(&self, label: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.label == label)
    }
}

fn lin(c0: Rational, c1: Rational) -> Poly {
    Poly::from_coeffs(vec![c0, c1])
}

fn z_r_q(p: &Poly, kappa: &Kappa) -> Result<usize> {
    let hq = q_reduced(p, kappa)?;
    if hq.degenerate {
        return Err(Error::DegenerateH);
    }
    real_root_count(&hq.q_num)
}

fn z_c(p: &Poly) -> Result<usize> {
    Ok(p.degree() as usize - real_root_count(p)?)
}

/// `(x^2 + a^2)(x + a^2)(x - 1)`: two real and two non-real zeros, yet
/// `H_{3/4}` is a product of two real squares.
pub fn family_shapiro1_deg4(a: &Rational) -> Result<FamilyInstance> {
    if a.is_zero() || a.abs().is_one() {
        return Err(Error::InvalidParameter(format!(
            "a must avoid -1, 0, 1; got {}",
            format_rational(a)
        )));
    }
    let one = Rational::one();
    let a2 = a * a;
    let p = &(&Poly::from_coeffs(vec![a2.clone(), Rational::zero(), one.clone()])
        * &lin(a2.clone(), one.clone()))
        * &lin(-one.clone(), one.clone());
    let kappa = rat(3, 4);
    let h = h_kappa(&p, &kappa)?;
    let f1 = lin(-(a * (a + &one)), a - &one);
    let f2 = lin(a * (a - &one), a + &one);
    let rhs = &(&f1 * &f1) * &(&f2 * &f2);

    let mut inst = FamilyInstance::new("shapiro1-deg4", &[("a", a.clone())], p.clone());
    inst.claims.push(Claim::identity("(4/3) H_3/4 = squared product", &h.scale(&rat(4, 3)), &rhs));
    inst.claims.push(Claim::count("Z_R(H_3/4)", 4, real_root_count(&h)?));
    inst.claims.push(Claim::count("Z_C(p)", 2, z_c(&p)?));
    Ok(inst)
}

/// `(x - 1)^n + (x + 1)^n`. The claims are asserted from degree five up;
/// smaller `n` is built and its values are shown.
pub fn family_binomial_sym(n: usize) -> Result<FamilyInstance> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2; got {n}")));
    }
    let p = &Poly::from_ints(&[-1, 1]).pow(n as u32) + &Poly::from_ints(&[1, 1]).pow(n as u32);
    let kappa = Rational::new((n as i64 - 1).into(), (n as i64).into());
    let h = h_kappa(&p, &kappa)?;
    let c = int(-4 * n as i64 * (n as i64 - 1));
    let rhs = Poly::from_ints(&[-1, 0, 1]).pow(n as u32 - 2).scale(&c);
    let zr = real_root_count(&h)?;
    let zc = z_c(&p)?;

    let mut claims = vec![
        Claim::identity("H_(n-1)/n = -4n(n-1)(x^2-1)^(n-2)", &h, &rhs),
        Claim::count("Z_R(H_(n-1)/n)", 2 * n - 4, zr),
        Claim::count("Z_C(p)", 2 * (n / 2), zc),
        Claim {
            label: "Z_R(H) > Z_C(p)".into(),
            kind: ClaimKind::Bound,
            expected: format!("> {zc}"),
            observed: zr.to_string(),
            status: holds(zr > zc),
        },
    ];
    if n < 5 {
        claims = claims.into_iter().map(Claim::not_asserted).collect();
    }
    let mut inst = FamilyInstance::new("binomial-sym", &[("n", int(n as i64))], p);
    inst.claims = claims;
    Ok(inst)
}

/// `x^n + a x^(n-2)` with `a > 0`: four real zeros of `Q_k` for `k` inside
/// the window. The endpoint counts are reported, not asserted.
pub fn family_monomial_gap(n: usize, a: &Rational) -> Result<FamilyInstance> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n must be at least 3; got {n}")));
    }
    if !a.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "a must be positive; got {}",
            format_rational(a)
        )));
    }
    let p = &Poly::monomial(Rational::one(), n) + &Poly::monomial(a.clone(), n - 2);
    let (lo, hi) = monomial_gap_window(n);
    let mid = (&lo + &hi) / int(2);
    let mut inst = FamilyInstance::new("monomial-gap", &[("n", int(n as i64)), ("a", a.clone())], p.clone());
    inst.claims.push(Claim::count(
        format!("Z_R(Q) at midpoint k = {}", format_rational(&mid)),
        4,
        z_r_q(&p, &mid)?,
    ));
    for (side, k) in [("left", &lo), ("right", &hi)] {
        inst.claims.push(
            Claim::count(
                format!("Z_R(Q) at {side} endpoint k = {}", format_rational(k)),
                4,
                z_r_q(&p, k)?,
            )
            .reported(),
        );
    }
    Ok(inst)
}

/// `x^(2n)/(2n) + x^2/2 + 1`: neither `p` nor `H_{(2n-1)/(2n)}` has a real zero.
pub fn family_shapiro2(n: usize) -> Result<FamilyInstance> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2; got {n}")));
    }
    let m = 2 * n;
    let ni = n as i64;
    let p = &(&Poly::monomial(rat(1, m as i64), m) + &Poly::monomial(rat(1, 2), 2)) + &Poly::one();
    let kappa = rat(m as i64 - 1, m as i64);
    let h = h_kappa(&p, &kappa)?;
    let lhs = h.scale(&int(-(m as i64)));
    let rhs = &(&(&Poly::monomial(int(2 * ni * ni - 5 * ni + 3), m)
        + &Poly::monomial(int(2 * ni * (2 * ni - 1)), m - 2))
        + &Poly::monomial(int(-(ni - 1)), 2))
        + &Poly::constant(int(2 * ni));

    let mut inst = FamilyInstance::new("shapiro2", &[("n", int(ni))], p.clone());
    inst.claims.push(Claim::identity("-2n H_(2n-1)/(2n) closed form", &lhs, &rhs));
    inst.claims.push(Claim::count("Z_R(H_(2n-1)/(2n))", 0, real_root_count(&h)?));
    inst.claims.push(Claim::count("Z_R(p)", 0, real_root_count(&p)?));
    Ok(inst)
}

/// `T_n` from `T_(k+1) = 2x T_k - T_(k-1)`.
pub fn chebyshev_t(n: usize) -> Poly {
    let two_x = Poly::monomial(int(2), 1);
    let (mut prev, mut cur) = (Poly::one(), Poly::x());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn chebyshev_instance(n: usize) -> Result<FamilyInstance> {
    let t = chebyshev_t(n);
    let mut inst = FamilyInstance::new("chebyshev", &[("n", int(n as i64))], t.clone());
    let lead = if n == 0 {
        Rational::one()
    } else {
        Rational::from_integer(BigInt::from(2).pow(n as u32 - 1))
    };
    inst.claims.push(Claim::identity(
        "leading coefficient 2^(n-1)",
        &Poly::constant(t.leading()),
        &Poly::constant(lead),
    ));
    let sign = if n.is_even() { int(1) } else { int(-1) };
    inst.claims.push(Claim::identity(
        "T_n(1), T_n(-1)",
        &Poly::from_coeffs(vec![t.eval(&int(1)), t.eval(&int(-1))]),
        &Poly::from_coeffs(vec![int(1), sign]),
    ));
    inst.claims.push(Claim::count("Z_R(T_n)", n, real_root_count(&t)?));
    Ok(inst)
}

/// `x^2 (x - 1)(x - 2)(x + 10) + 1/10`, the worked example with three zeros
/// of `Q_{2/3}` in one second-type interval.
pub fn section16_example() -> Result<FamilyInstance> {
    let p = Poly::from_coeffs(vec![rat(1, 10), int(0), int(20), int(-28), int(7), int(1)]);
    let dp = p.derivative(1);
    let crit = isolate_roots(&dp)?;
    let mut inst = FamilyInstance::new("section16", &[], p.clone());
    inst.claims.push(Claim::identity(
        "p' = 5x^4 + 28x^3 - 84x^2 + 40x",
        &dp,
        &Poly::from_ints(&[0, 40, -84, 28, 5]),
    ));
    inst.claims.push(Claim::count("real zeros of p'", 4, crit.total_multiplicity()));

    let tol = rat(1, 1000);
    let approx = [rat(-7865, 1000), int(0), rat(617, 1000), rat(1648, 1000)];
    for (i, (root, a)) in crit.iter().zip(&approx).enumerate() {
        let r = root.refine(&rat(1, 100_000));
        let mid = (r.lo() + r.hi()) / int(2);
        let mut c = Claim::within(format!("xi_{} near {}", i + 1, format_rational(a)), &mid, &(a - &tol), &(a + &tol));
        c.status = holds(r.lo() > &(a - &tol) && r.hi() < &(a + &tol));
        inst.claims.push(c);
    }

    let kappa = rat(2, 3);
    let hq = q_reduced(&p, &kappa)?;
    let count = match crit.iter().next() {
        Some(xi1) => count_roots_with_multiplicity(
            &hq.q_num,
            &IntervalSpec::open(Endpoint::Alg(xi1.clone()), Endpoint::At(int(0))),
        )?,
        None => 0,
    };
    inst.claims.push(Claim::count("zeros of Q_2/3 on (xi_1, 0)", 3, count));

    for (x, lo, hi) in [
        (rat(-11, 40), rat(641, 1000), rat(643, 1000)),
        (rat(-27, 20), rat(683, 1000), rat(685, 1000)),
    ] {
        let m = m_eval(&p, &x)?;
        inst.claims.push(Claim::within(format!("M({})", format_rational(&x)), &m, &lo, &hi));
    }
    Ok(inst)
}

/// Parameters for [`family_by_name`], keyed by name.
pub type Params = BTreeMap<String, Rational>;

pub const FAMILY_NAMES: [&str; 8] = [
    "shapiro1-deg4",
    "binomial-sym",
    "monomial-gap",
    "shapiro2",
    "chebyshev",
    "theorem7",
    "theorem10",
    "section16",
];

struct ParamReader<'a> {
    params: &'a Params,
    allowed: &'static [&'static str],
}

impl ParamReader<'_> {
    fn rational(&self, key: &str, default: &str) -> Result<Rational> {
        match self.params.get(key) {
            Some(v) => Ok(v.clone()),
            None => parse_rational(default),
        }
    }

    fn small(&self, key: &str, default: usize) -> Result<usize> {
        let Some(v) = self.params.get(key) else {
            return Ok(default);
        };
        let bad = || Error::InvalidParameter(format!("{key} must be a small non-negative integer"));
        if !v.is_integer() || v.is_negative() {
            return Err(bad());
        }
        usize::try_from(v.to_integer()).ok().filter(|&n| n <= 64).ok_or_else(bad)
    }

    fn check_keys(&self) -> Result<()> {
        match self.params.keys().find(|k| !self.allowed.contains(&k.as_str())) {
            Some(k) => Err(Error::InvalidParameter(format!(
                "unknown parameter `{k}`; expected one of [{}]",
                self.allowed.join(", ")
            ))),
            None => Ok(()),
        }
    }
}

/// Builds a family from its CLI name. Missing parameters take the defaults
/// listed in the README.
pub fn family_by_name(name: &str, params: &Params) -> Result<FamilyInstance> {
    let allowed: &'static [&'static str] = match name {
        "shapiro1-deg4" => &["a"],
        "binomial-sym" | "shapiro2" | "chebyshev" => &["n"],
        "monomial-gap" => &["n", "a"],
        "theorem7" | "theorem10" => &["n", "eps"],
        "section16" => &[],
        _ => return Err(Error::UnknownFamily(name.to_string())),
    };
    let r = ParamReader { params, allowed };
    r.check_keys()?;
    match name {
        "shapiro1-deg4" => family_shapiro1_deg4(&r.rational("a", "2")?),
        "binomial-sym" => family_binomial_sym(r.small("n", 5)?),
        "monomial-gap" => family_monomial_gap(r.small("n", 4)?, &r.rational("a", "1")?),
        "shapiro2" => family_shapiro2(r.small("n", 2)?),
        "chebyshev" => chebyshev_instance(r.small("n", 4)?),
        "theorem7" => Ok(theorem7_search(r.small("n", 2)?, &r.rational("eps", "1/10")?)?.into_instance()),
        "theorem10" => Ok(theorem10_build(r.small("n", 4)?, &r.rational("eps", "1/10")?)?.into_instance()),
        _ => section16_example(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_hold(inst: &FamilyInstance) {
        for c in &inst.claims {
            assert_eq!(c.status, ClaimStatus::Holds, "{}: {c:?}", inst.name);
        }
    }

    #[test]
    fn shapiro1_factorization() {
        let inst = family_shapiro1_deg4(&int(2)).unwrap();
        all_hold(&inst);
        // (x - 6)^2 (3x + 2)^2
        let f = &Poly::from_ints(&[-6, 1]).pow(2) * &Poly::from_ints(&[2, 3]).pow(2);
        assert_eq!(inst.claims[0].expected, f.to_string());
        all_hold(&family_shapiro1_deg4(&int(3)).unwrap());
        all_hold(&family_shapiro1_deg4(&rat(-1, 2)).unwrap());
        for a in [-1, 0, 1] {
            assert!(family_shapiro1_deg4(&int(a)).is_err());
        }
    }

    #[test]
    fn binomial_sym() {
        let inst = family_binomial_sym(5).unwrap();
        all_hold(&inst);
        assert_eq!(inst.claims[0].expected, Poly::from_ints(&[-1, 0, 1]).pow(3).scale(&int(-80)).to_string());
        assert_eq!(inst.claim("Z_R(H_(n-1)/n)").unwrap().observed, "6");
        let six = family_binomial_sym(6).unwrap();
        assert_eq!(six.claim("Z_R(H_(n-1)/n)").unwrap().observed, "8");
        assert_eq!(six.claim("Z_C(p)").unwrap().observed, "6");
        let four = family_binomial_sym(4).unwrap();
        assert!(four.claims.iter().all(|c| c.status == ClaimStatus::NotAsserted));
        assert_eq!(four.claim("Z_R(H_(n-1)/n)").unwrap().observed, "4");
    }

    #[test]
    fn monomial_gap_endpoints() {
        let four = family_monomial_gap(4, &int(1)).unwrap();
        assert_eq!(four.claims[0].status, ClaimStatus::Holds);
        assert_eq!(four.claims[1].status, ClaimStatus::Discrepancy);
        assert_eq!(four.claims[1].observed, "2");
        let three = family_monomial_gap(3, &int(1)).unwrap();
        assert_eq!(three.claims[2].status, ClaimStatus::Holds);
        assert!(family_monomial_gap(4, &int(0)).is_err());
        assert!(family_monomial_gap(2, &int(1)).is_err());
    }

    #[test]
    fn shapiro2_closed_form() {
        let two = family_shapiro2(2).unwrap();
        all_hold(&two);
        assert_eq!(two.claims[0].expected, "4,0,11,0,1");
        let three = family_shapiro2(3).unwrap();
        assert_eq!(three.claims[0].expected, "6,0,-2,0,30,0,6");
        for n in 4..=5 {
            all_hold(&family_shapiro2(n).unwrap());
        }
        assert!(family_shapiro2(1).is_err());
    }

    #[test]
    fn chebyshev() {
        assert_eq!(chebyshev_t(0), Poly::one());
        assert_eq!(chebyshev_t(2), Poly::from_ints(&[-1, 0, 2]));
        assert_eq!(chebyshev_t(4), Poly::from_ints(&[1, 0, -8, 0, 8]));
        // T_4 - 1 = 8 x^2 (x^2 - 1)
        let lhs = &chebyshev_t(4) - &Poly::one();
        assert_eq!(lhs, Poly::from_ints(&[0, 0, -8, 0, 8]));
        assert_eq!(chebyshev_t(6), chebyshev_t(2).compose(&chebyshev_t(3)));
        all_hold(&chebyshev_instance(7).unwrap());
    }

    #[test]
    fn worked_example() {
        let inst = section16_example().unwrap();
        all_hold(&inst);
        assert_eq!(inst.p.to_string(), "1/10,0,20,-28,7,1");
    }

    #[test]
    fn by_name() {
        let mut params = Params::new();
        params.insert("a".into(), int(2));
        assert!(family_by_name("shapiro1-deg4", &params).unwrap().all_hold());
        assert!(matches!(family_by_name("nope", &params), Err(Error::UnknownFamily(_))));
        assert!(matches!(family_by_name("shapiro2", &params), Err(Error::InvalidParameter(_))));
        params.clear();
        params.insert("n".into(), rat(5, 2));
        assert!(family_by_name("binomial-sym", &params).is_err());
        for name in FAMILY_NAMES {
            if name != "theorem10" && name != "theorem7" {
                assert!(family_by_name(name, &Params::new()).unwrap().all_hold(), "{name}");
            }
        }
    }
}
