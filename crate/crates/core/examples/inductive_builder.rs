// Real-rooted polynomials where M[p] comes within eps of (k-1)/k inside
// I_k, built by splitting a multiple root one step at a time.

use hawaii::error::Result;
use hawaii::families::theorem10_build;
use hawaii::kappa::m_eval;
use hawaii::poly::{format_rational, rat};
use hawaii::roots::ratio_to_f64;

pub fn run_example() -> Result<()> {
    let eps = rat(1, 10);
    for n in 3..=5 {
        let b = theorem10_build(n, &eps)?;
        let roots: Vec<String> = b.roots.iter().map(format_rational).collect();
        println!("n = {n}: roots [{}]", roots.join(", "));
        for w in &b.witnesses {
            println!(
                "   I_{}: M({}) = {:.5} > {}",
                w.interval,
                format_rational(&w.y),
                ratio_to_f64(&w.m),
                format_rational(&w.bound)
            );
            assert!(m_eval(&b.p, &w.y)? > w.bound);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
