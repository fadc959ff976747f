// x^2 (x - 1)(x - 2)(x + 10) + 1/10: three zeros of Q_{2/3} in one
// second-type interval.

use hawaii::error::Result;
use hawaii::families::{section16_example, ClaimStatus};
use hawaii::kappa::{interval_partition, per_interval_counts_with};
use hawaii::poly::rat;

pub fn run_example() -> Result<()> {
    let inst = section16_example()?;
    println!("p = {}", inst.p);
    for c in &inst.claims {
        println!("  {:<34} expected {:<24} observed {}", c.label, c.expected, c.observed);
        assert_eq!(c.status, ClaimStatus::Holds);
    }

    let part = interval_partition(&inst.p)?;
    let counts = per_interval_counts_with(&inst.p, &rat(2, 3), &part)?;
    for (iv, c) in part.intervals.iter().zip(&counts.per_interval) {
        println!("  I_{} {:?}: Z(Q_2/3) = {}", c.index + 1, iv.kind, c.count_q);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
