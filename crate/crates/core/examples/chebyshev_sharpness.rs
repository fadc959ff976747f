// T_(2n) + C with C close to -1: the upper bound 4n - 2 on Z_R(Q_k) is
// attained for every sampled k below 1/2 - eps.

use hawaii::error::Result;
use hawaii::families::{chebyshev_t, theorem7_search};
use hawaii::poly::{format_rational, int, rat, Poly};

pub fn run_example() -> Result<()> {
    // T_4 - 1 = 8 x^2 (x^2 - 1)
    assert_eq!(&chebyshev_t(4) - &Poly::one(), Poly::from_ints(&[0, 0, -8, 0, 8]));

    for n in 1..=3 {
        let s = theorem7_search(n, &rat(1, 10))?;
        println!("n = {n}: B = {}, C = {} after {} attempt(s)", format_rational(&s.b), format_rational(&s.c), s.attempts);
        for row in &s.verification {
            println!("   k = {:>5}  Z_R(Q) = {}", format_rational(&row.kappa), row.count);
            assert_eq!(row.count, 4 * n - 2);
        }
        assert!(s.c > int(-1) && s.c < int(0));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
