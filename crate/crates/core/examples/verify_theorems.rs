// Every applicable counting statement for a few polynomials, including
// one with a multiple root where the lower bounds fail.

use hawaii::error::Result;
use hawaii::poly::{format_rational, parse_poly, parse_rational_list};
use hawaii::theorems::{verify_all, Outcome, TheoremId};

pub fn run_example() -> Result<()> {
    let kappas = parse_rational_list("-1,0,1/4,3/5,1,2")?;
    for text in ["3,-3,0,1", "roots:-2,0,1,3;lc:1", "0,0,1,0,1"] {
        let p = parse_poly(text)?;
        let verdicts = verify_all(&p, &kappas)?;
        let decided = verdicts.iter().filter(|v| v.pass().is_some()).count();
        let failed = verdicts.iter().filter(|v| v.outcome == Outcome::Fail).count();
        println!("{p}: {} verdicts, {decided} decided, {failed} failed", verdicts.len());
        for v in verdicts.iter().filter(|v| v.pass().is_some()).take(4) {
            let pred = v.predicted.as_ref().map(|p| p.to_string()).unwrap_or_default();
            println!("  {:?} {} {pred} computed {:?}", v.outcome, v.id, v.computed);
        }
        // the lower bounds do not survive the double root of x^4 + x^2
        for v in verdicts.iter().filter(|v| v.outcome == Outcome::Fail) {
            assert_eq!(v.id, TheoremId::LowerBound);
            let k = v.kappa.as_ref().map(format_rational).unwrap_or_default();
            println!("  FAIL {} at k = {k}: {}", v.id, v.reason);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
