// A seeded random campaign; the same seed gives the same report.

use hawaii::error::Result;
use hawaii::theorems::{random_trials, KappaChoice, RootMode, TheoremId, TrialConfig};

pub fn run_example() -> Result<()> {
    let cfg = TrialConfig {
        mode: RootMode::Both,
        trials: 25,
        seed: 11,
        max_degree: 6,
        kappas: vec!["-1".parse()?, "1/4".parse()?, KappaChoice::RegimeMidpoints, "drop+1/7".parse()?],
        ..TrialConfig::default()
    };
    let report = random_trials(&cfg)?;
    for (id, t) in &report.tally {
        println!("{:<22} pass {:>4}  fail {:>2}  n/a {:>4}", id.tag(), t.pass, t.fail, t.inapplicable);
    }
    println!("{} failures", report.failure_count());
    assert_eq!(report.tally_of(TheoremId::AboveDrop).fail, 0);

    let again = random_trials(&cfg)?;
    assert_eq!(report, again);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
