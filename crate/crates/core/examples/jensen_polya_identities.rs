// Exact checks of the Jensen expansion of p(x+iy)p(x-iy), the Polya
// polynomials written through H, and the Laguerre inequality.

use hawaii::error::Result;
use hawaii::kappa::{h_kappa, jensen_pk, polya_gk, polya_gk_via_h, shapiro_polynomial};
use hawaii::poly::{factorial, int, rat, ComplexRational, Poly, Rational};
use hawaii::roots::real_root_count;

pub fn run_example() -> Result<()> {
    let p = Poly::from_roots(&[int(-3), rat(-1, 2), int(1), int(4)], int(2));
    let n = p.degree() as usize;
    let (x, y) = (rat(2, 3), rat(-5, 4));

    let lhs = {
        let a = p.eval_complex(&ComplexRational::new(x.clone(), y.clone()));
        let b = p.eval_complex(&ComplexRational::new(x.clone(), -y.clone()));
        let prod = &a.re * &b.re - &a.im * &b.im;
        assert!((&a.re * &b.im + &a.im * &b.re) == Rational::from_integer(0.into()));
        prod
    };
    let mut rhs = Rational::from_integer(0.into());
    for k in 0..=n {
        let y2k = (0..2 * k).fold(Rational::from_integer(1.into()), |acc, _| acc * &y);
        rhs += jensen_pk(&p, k)?.eval(&x) * y2k / factorial(2 * k);
    }
    println!("p(x+iy) p(x-iy) = {lhs} at x = {x}, y = {y}");
    assert_eq!(lhs, rhs);

    for k in 1..n {
        let g = polya_gk(&p, k)?;
        assert_eq!(g, polya_gk_via_h(&p, k)?);
        println!("G_{k} = {g}  real zeros: {}", real_root_count(&g)?);
    }
    let drop = rat(n as i64 - 1, n as i64);
    assert_eq!(shapiro_polynomial(&p)?, h_kappa(&p, &drop)?.scale(&int(n as i64)));

    let h1 = h_kappa(&p, &int(1))?;
    println!("H_1 = {h1}; real zeros: {}", real_root_count(&h1)?);
    assert_eq!(real_root_count(&h1)?, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
