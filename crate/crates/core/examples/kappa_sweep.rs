// How Z_R(H_k) and Z_R(Q_k) move with k: a rational grid, the exact
// breakpoints, and the threshold on an infinite interval.

use hawaii::error::Result;
use hawaii::kappa::{infinite_interval_threshold, kappa_breakpoints_exact, kappa_sweep_grid, Side};
use hawaii::poly::{format_rational, rat, Poly};
use hawaii::roots::ratio_to_f64;

pub fn run_example() -> Result<()> {
    let p = Poly::from_ints(&[0, 1, 0, 1]); // x^3 + x
    let grid = kappa_sweep_grid(&p, &rat(0, 1), &rat(1, 1), &rat(1, 20))?;
    for row in grid.iter().filter(|r| r.on_breakpoint || r.degree_drop) {
        println!("k = {:>5}  Z_R(Q) = {:?}  (breakpoint)", format_rational(&row.kappa), row.z_r_q);
    }

    let bp = kappa_breakpoints_exact(&p)?;
    for g in &bp.gaps {
        let show = |a: &Option<hawaii::roots::AlgebraicNumber>| a.as_ref().map_or("inf".to_string(), |a| format!("{:.4}", a.to_f64()));
        println!("({}, {})  Z_R(H) = {}  Z_R(Q) = {}", show(&g.lo), show(&g.hi), g.z_r_h, g.z_r_q);
    }
    let zq: Vec<usize> = bp.gaps.iter().map(|g| g.z_r_q).collect();
    assert_eq!(zq, [0, 2, 4, 0]);

    // x^2 (x - 1)(x - 2)(x + 10) + 1/10 has a second-type interval at -inf
    let q = Poly::from_coeffs(vec![rat(1, 10), rat(0, 1), rat(20, 1), rat(-28, 1), rat(7, 1), rat(1, 1)]);
    match infinite_interval_threshold(&q, Side::Left, &rat(1, 1000)) {
        Ok(t) => println!("left threshold in ({}, {}]", ratio_to_f64(&t.lo), ratio_to_f64(&t.hi)),
        Err(e) => println!("left interval: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
