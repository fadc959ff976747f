// H_k, the reduced Q_k and the per-interval zero counts for one cubic.

use hawaii::error::Result;
use hawaii::kappa::{interval_partition, per_interval_counts_with, q_reduced, IntervalKind};
use hawaii::poly::{parse_poly, parse_rational};

pub fn run_example() -> Result<()> {
    // x^3 - 3x + 3: one real zero, two non-real ones
    let p = parse_poly("3,-3,0,1")?;
    let k = parse_rational("1")?;

    let hq = q_reduced(&p, &k)?;
    println!("p   = {p}");
    println!("H_1 = {}", hq.h);
    println!("Q_1 = ({}) / ({})", hq.q_num, hq.q_den);

    let part = interval_partition(&p)?;
    let counts = per_interval_counts_with(&p, &k, &part)?;
    for (iv, c) in part.intervals.iter().zip(&counts.per_interval) {
        let kind = match iv.kind {
            IntervalKind::First => "first",
            IntervalKind::Second => "second",
        };
        println!(
            "I_{}: ({:.4}, {:.4}) {kind:<6} Z(H) = {} Z(Q) = {}",
            c.index + 1,
            iv.span.lo.approx_f64(),
            iv.span.hi.approx_f64(),
            c.count_h,
            c.count_q
        );
    }
    println!("Z_R(H) = {}, Z_C(p) = {}", counts.z_r_h, counts.z_c_p);
    assert_eq!(counts.z_r_h, counts.z_c_p);
    assert!(counts.is_consistent());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
