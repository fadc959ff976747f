//! Seeded random campaigns. Every trial draws from its own ChaCha stream
//! keyed by the trial index, so results do not depend on scheduling.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    check_hawaii, check_inner_m_bound, check_interval_parity, check_laguerre,
    check_polya_positivity, check_preconditions, check_shapiro_criterion, predict, regime_start,
    Outcome, Preconditions, TheoremId, TheoremVerdict,
};
use crate::error::{Error, Result};
use crate::kappa::Kappa;
use crate::poly::{format_rational, Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootMode {
    /// Uniform integer coefficients; nothing is required of the roots.
    Arbitrary,
    /// Every real zero of `p` is simple.
    PRealSimple,
    /// `p'` has `n - 1` simple real zeros.
    PPrimeRealSimple,
    /// Both of the above.
    Both,
    /// `p` has `n` simple real zeros.
    RealRooted,
}

impl RootMode {
    /// The CLI spelling, as accepted by `from_str`.
    pub fn name(&self) -> &'static str {
        match self {
            RootMode::Arbitrary => "arbitrary",
            RootMode::PRealSimple => "p-real-simple",
            RootMode::PPrimeRealSimple => "p-prime-real-simple",
            RootMode::Both => "both",
            RootMode::RealRooted => "real-rooted",
        }
    }

    pub fn accepts(&self, pre: &Preconditions) -> bool {
        match self {
            RootMode::Arbitrary => true,
            RootMode::PRealSimple => pre.p_real_roots_simple,
            RootMode::PPrimeRealSimple => pre.p_prime_real_simple,
            RootMode::Both => pre.p_real_roots_simple && pre.p_prime_real_simple,
            RootMode::RealRooted => pre.p_real_rooted_simple,
        }
    }
}

impl FromStr for RootMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "arbitrary" => RootMode::Arbitrary,
            "p-real-simple" => RootMode::PRealSimple,
            "p-prime-real-simple" => RootMode::PPrimeRealSimple,
            "both" => RootMode::Both,
            "real-rooted" => RootMode::RealRooted,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown mode `{other}` (arbitrary, p-real-simple, p-prime-real-simple, both, real-rooted)"
                )))
            }
        })
    }
}

/// A `k` value that may depend on the degree of the drawn polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum KappaChoice {
    Fixed(#[serde(serialize_with = "crate::poly::rational_str")] Rational),
    /// `(n-1)/n + offset`.
    AboveDrop(#[serde(serialize_with = "crate::poly::rational_str")] Rational),
    /// One interior point of each regime `[(k-1)/k, k/(k+1))`, `k = 2..n-1`.
    RegimeMidpoints,
}

impl KappaChoice {
    pub fn resolve(&self, n: usize) -> Vec<Kappa> {
        match self {
            KappaChoice::Fixed(k) => vec![k.clone()],
            KappaChoice::AboveDrop(off) => {
                vec![Rational::new(((n - 1) as i64).into(), (n as i64).into()) + off]
            }
            KappaChoice::RegimeMidpoints => (2..n)
                .map(|k| (regime_start(k) + regime_start(k + 1)) / Rational::from_integer(2.into()))
                .collect(),
        }
    }
}

/// `drop`, `drop+r`, `drop-r`, `regimes`, or a rational.
impl FromStr for KappaChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "regimes" {
            return Ok(KappaChoice::RegimeMidpoints);
        }
        if let Some(rest) = s.strip_prefix("drop") {
            if rest.is_empty() {
                return Ok(KappaChoice::AboveDrop(Rational::zero()));
            }
            let off = crate::poly::parse_rational(rest)?;
            return Ok(KappaChoice::AboveDrop(off));
        }
        Ok(KappaChoice::Fixed(crate::poly::parse_rational(s)?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// The `k`-dependent count statements at every configured `k`.
    Predictions,
    IntervalParity,
    Laguerre,
    Hawaii,
    InnerMBound,
    ShapiroCriterion,
    PolyaPositivity,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Predictions,
        Check::IntervalParity,
        Check::Laguerre,
        Check::Hawaii,
        Check::InnerMBound,
        Check::ShapiroCriterion,
        Check::PolyaPositivity,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialConfig {
    pub min_degree: usize,
    pub max_degree: usize,
    /// Integer coefficients, roots and constants are drawn from `[-b, b]`.
    pub coeff_bound: i64,
    pub mode: RootMode,
    pub trials: usize,
    pub seed: u64,
    pub kappas: Vec<KappaChoice>,
    pub checks: Vec<Check>,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            min_degree: 2,
            max_degree: 8,
            coeff_bound: 10,
            mode: RootMode::Arbitrary,
            trials: 100,
            seed: 0,
            kappas: vec![
                KappaChoice::Fixed(Rational::from_integer((-1).into())),
                KappaChoice::Fixed(Rational::zero()),
                KappaChoice::Fixed(Rational::new(1.into(), 4.into())),
                KappaChoice::RegimeMidpoints,
                KappaChoice::AboveDrop(Rational::zero()),
                KappaChoice::Fixed(Rational::from_integer(1.into())),
            ],
            checks: Check::ALL.to_vec(),
        }
    }
}

impl TrialConfig {
    pub fn validate(&self) -> Result<()> {
        if self.min_degree < 2 || self.min_degree > self.max_degree {
            return Err(Error::InvalidParameter("degrees must satisfy 2 <= min <= max".into()));
        }
        if self.coeff_bound < 1 {
            return Err(Error::InvalidParameter("coefficient bound must be at least 1".into()));
        }
        let distinct = 4 * self.coeff_bound as usize + 1;
        if matches!(self.mode, RootMode::RealRooted | RootMode::PPrimeRealSimple | RootMode::Both)
            && self.max_degree > distinct
        {
            return Err(Error::InvalidParameter("coefficient bound too small for distinct roots".into()));
        }
        Ok(())
    }
}

fn nonzero_int(rng: &mut ChaCha8Rng, b: i64) -> i64 {
    loop {
        let c = rng.gen_range(-b..=b);
        if c != 0 {
            return c;
        }
    }
}

/// Distinct roots `a/2` with `|a| <= 2b`.
fn distinct_roots(rng: &mut ChaCha8Rng, count: usize, b: i64) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    while out.len() < count {
        let r = Rational::new(rng.gen_range(-2 * b..=2 * b).into(), 2.into());
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

fn draw(rng: &mut ChaCha8Rng, mode: RootMode, n: usize, b: i64) -> Poly {
    match mode {
        RootMode::Arbitrary | RootMode::PRealSimple => {
            let mut c: Vec<i64> = (0..n).map(|_| rng.gen_range(-b..=b)).collect();
            c.push(nonzero_int(rng, b));
            Poly::from_ints(&c)
        }
        RootMode::RealRooted => {
            let lc = Rational::from_integer(nonzero_int(rng, 3).into());
            Poly::from_roots(&distinct_roots(rng, n, b), lc)
        }
        RootMode::PPrimeRealSimple | RootMode::Both => {
            let lc = Rational::from_integer(nonzero_int(rng, 3).into());
            let dp = Poly::from_roots(&distinct_roots(rng, n - 1, b), lc);
            let den: i64 = rng.gen_range(1..=3);
            let c = Rational::new(rng.gen_range(-b * den..=b * den).into(), den.into());
            dp.antiderivative(c)
        }
    }
}

/// A polynomial of degree `n` satisfying `mode`, verified by exact
/// precondition checks and redrawn until it does.
pub fn random_polynomial(rng: &mut ChaCha8Rng, mode: RootMode, n: usize, coeff_bound: i64) -> Poly {
    loop {
        let p = draw(rng, mode, n, coeff_bound);
        if let Ok(pre) = check_preconditions(&p) {
            if mode.accepts(&pre) {
                return p;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub index: usize,
    pub poly: Poly,
    pub verdicts: Vec<TheoremVerdict>,
}

/// Outcome counts for one statement.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
    pub degenerate_range: usize,
    pub boundary: usize,
    pub discrepancy: usize,
}

impl Tally {
    fn add(&mut self, o: Outcome) {
        match o {
            Outcome::Pass => self.pass += 1,
            Outcome::Fail => self.fail += 1,
            Outcome::Inapplicable => self.inapplicable += 1,
            Outcome::DegenerateRange => self.degenerate_range += 1,
            Outcome::Boundary => self.boundary += 1,
            Outcome::Discrepancy => self.discrepancy += 1,
        }
    }
}

/// A failing input in replayable form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureDump {
    pub index: usize,
    pub id: TheoremId,
    pub poly: String,
    pub replay: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialReport {
    pub config: TrialConfig,
    pub tally: BTreeMap<TheoremId, Tally>,
    pub failures: Vec<FailureDump>,
    pub records: Vec<TrialRecord>,
}

impl TrialReport {
    pub fn failure_count(&self) -> usize {
        self.failures.len()
    }

    pub fn tally_of(&self, id: TheoremId) -> Tally {
        self.tally.get(&id).cloned().unwrap_or_default()
    }
}

fn run_one(cfg: &TrialConfig, index: usize) -> Result<TrialRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let n = rng.gen_range(cfg.min_degree..=cfg.max_degree);
    let p = random_polynomial(&mut rng, cfg.mode, n, cfg.coeff_bound);
    let kappas: Vec<Kappa> = cfg.kappas.iter().flat_map(|c| c.resolve(n)).collect();
    let mut verdicts = Vec::new();
    for check in &cfg.checks {
        match check {
            Check::Predictions => {
                for k in &kappas {
                    verdicts.extend(predict(&p, k)?);
                }
            }
            Check::IntervalParity => {
                for k in &kappas {
                    verdicts.push(check_interval_parity(&p, k)?);
                }
            }
            Check::Laguerre => verdicts.push(check_laguerre(&p)?),
            Check::Hawaii => verdicts.push(check_hawaii(&p)?),
            Check::InnerMBound => verdicts.push(check_inner_m_bound(&p)?),
            Check::ShapiroCriterion => verdicts.push(check_shapiro_criterion(&p)?),
            Check::PolyaPositivity => verdicts.push(check_polya_positivity(&p)?),
        }
    }
    Ok(TrialRecord { index, poly: p, verdicts })
}

/// Runs the campaign. Trials execute in parallel; records come back in
/// index order, so the report depends only on the configuration.
pub fn random_trials(cfg: &TrialConfig) -> Result<TrialReport> {
    cfg.validate()?;
    let records = (0..cfg.trials)
        .into_par_iter()
        .map(|i| run_one(cfg, i))
        .collect::<Result<Vec<_>>>()?;
    let mut tally: BTreeMap<TheoremId, Tally> = BTreeMap::new();
    let mut failures = Vec::new();
    for r in &records {
        for v in &r.verdicts {
            tally.entry(v.id).or_default().add(v.outcome);
            if v.failed() {
                let text = r.poly.to_string();
                let replay = match &v.kappa {
                    Some(k) => format!("hawaii verify {text} --kappa {}", format_rational(k)),
                    None => format!("hawaii verify {text}"),
                };
                failures.push(FailureDump {
                    index: r.index,
                    id: v.id,
                    poly: text,
                    replay,
                });
            }
        }
    }
    Ok(TrialReport {
        config: cfg.clone(),
        tally,
        failures,
        records,
    })
}
