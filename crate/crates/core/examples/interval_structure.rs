// Poles of M[p], interval types, end tags, and the parity of Z(Q_k) on
// each interval.

use hawaii::error::Result;
use hawaii::kappa::{interval_partition, per_interval_counts_with};
use hawaii::poly::{rat, Poly};
use hawaii::theorems::{expected_parity, Parity};

pub fn run_example() -> Result<()> {
    let p = Poly::from_ints(&[1, -5, 0, 3, 0, 1]); // x^5 + 3x^3 - 5x + 1
    let n = p.degree() as usize;
    let part = interval_partition(&p)?;
    println!("{} poles, {} first-type intervals", part.poles.len(), part.first_type_count());

    for k in [rat(-1, 1), rat(1, 4), rat(9, 10)] {
        let counts = per_interval_counts_with(&p, &k, &part)?;
        for (iv, c) in part.intervals.iter().zip(&counts.per_interval) {
            let want = expected_parity(iv.kind, iv.is_finite(), &k, n);
            let got = Parity::of(c.count_q);
            println!(
                "k = {k:>4}  I_{}  {:?} {:?}/{:?}  Z(Q) = {}  expected {want:?}",
                c.index + 1,
                iv.kind,
                iv.left_end,
                iv.right_end,
                c.count_q
            );
            if let Some(w) = want {
                assert_eq!(w, got);
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
