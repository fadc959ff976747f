//! The differential polynomial `H_k[p] = k (p')^2 - p p''`, the rational
//! function `Q_k = H_k / (p')^2 = k - M[p]`, and the polynomials built from
//! them.

mod partition;
mod sweep;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{binomial, int, Poly, Rational};
use crate::roots::{isolate_roots, AlgebraicNumber};

pub use partition::{
    interval_partition, per_interval_counts, per_interval_counts_with, z_r_h, CountReport, EndTag, IntervalCount, IntervalKind,
    IntervalPartition, PartitionInterval,
};
pub use sweep::{
    infinite_interval_threshold, kappa_breakpoints_exact, kappa_sweep_grid, reduced_pencil,
    Breakpoints, GapCount, ReducedPencil, Side, SweepRow, ThresholdEnclosure,
};

/// The parameter. Every threshold used here is rational.
pub type Kappa = Rational;

fn need_degree(p: &Poly, d: isize) -> Result<()> {
    if p.degree() < d {
        return Err(Error::DegreeTooLow {
            need: d as usize,
            got: p.degree(),
        });
    }
    Ok(())
}

/// `k (p')^2 - p p''`. The zero polynomial comes back exactly when
/// `p = c (x - a)^m` and `k = (m-1)/m`.
pub fn h_kappa(p: &Poly, kappa: &Kappa) -> Result<Poly> {
    need_degree(p, 2)?;
    Ok(h_unchecked(p, kappa))
}

pub(crate) fn h_unchecked(p: &Poly, kappa: &Kappa) -> Poly {
    let d1 = p.derivative(1);
    &(&d1 * &d1).scale(kappa) - &(p * &p.derivative(2))
}

/// `H_k` together with `Q_k = q_num / q_den` in lowest terms, obtained by
/// dividing both by their monic gcd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HQPair {
    pub kappa: Kappa,
    pub h: Poly,
    pub q_num: Poly,
    pub q_den: Poly,
    /// `H` is identically zero; `q_num` is then zero and `q_den` is one.
    pub degenerate: bool,
}

pub fn q_reduced(p: &Poly, kappa: &Kappa) -> Result<HQPair> {
    need_degree(p, 2)?;
    let h = h_unchecked(p, kappa);
    let d1 = p.derivative(1);
    let den = &d1 * &d1;
    if h.is_zero() {
        return Ok(HQPair {
            kappa: kappa.clone(),
            h,
            q_num: Poly::zero(),
            q_den: Poly::one(),
            degenerate: true,
        });
    }
    let g = h.gcd(&den)?;
    Ok(HQPair {
        kappa: kappa.clone(),
        q_num: h.exact_div(&g),
        q_den: den.exact_div(&g),
        h,
        degenerate: false,
    })
}

/// `M[p](x) = p p'' / (p')^2`, extended continuously to removable points
/// (the multiple roots of `p`).
pub fn m_eval(p: &Poly, x: &Rational) -> Result<Rational> {
    need_degree(p, 2)?;
    let d1 = p.derivative(1);
    let num = p * &p.derivative(2);
    let den = &d1 * &d1;
    let dv = den.eval(x);
    if !dv.is_zero() {
        return Ok(num.eval(x) / dv);
    }
    let g = num.gcd(&den).unwrap_or_else(|_| Poly::one());
    let (n2, d2) = (num.exact_div(&g), den.exact_div(&g));
    let dv = d2.eval(x);
    if dv.is_zero() {
        return Err(Error::Pole {
            x: crate::poly::format_rational(x),
        });
    }
    Ok(n2.eval(x) / dv)
}

/// Limits of `M[p]`: `(n-1)/n` at both infinities and `(j-1)/j` at each
/// real root of multiplicity `j >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MLimits {
    pub at_infinity: Rational,
    pub at_multiple_roots: Vec<(AlgebraicNumber, Rational)>,
}

pub fn m_limit_info(p: &Poly) -> Result<MLimits> {
    need_degree(p, 2)?;
    let n = p.degree() as i64;
    let at_multiple_roots = isolate_roots(p)?
        .roots
        .into_iter()
        .filter(|r| r.multiplicity() >= 2)
        .map(|r| {
            let j = r.multiplicity() as i64;
            (r, Rational::new((j - 1).into(), j.into()))
        })
        .collect();
    Ok(MLimits {
        at_infinity: Rational::new((n - 1).into(), n.into()),
        at_multiple_roots,
    })
}

/// Coefficient of `y^(2k) / (2k)!` in `p(x+iy) p(x-iy)`:
/// `(-1)^k sum_{j=0}^{2k} (-1)^j C(2k, j) p^(j) p^(2k-j)`.
pub fn jensen_pk(p: &Poly, k: usize) -> Result<Poly> {
    let n = p.degree();
    if n < 0 || k as isize > n {
        return Err(Error::OutOfRange(format!(
            "Jensen index k = {k} must lie in 0..={}",
            n.max(0)
        )));
    }
    let derivs: Vec<Poly> = (0..=2 * k).map(|j| p.derivative(j)).collect();
    let mut acc = Poly::zero();
    for j in 0..=2 * k {
        let term = (&derivs[j] * &derivs[2 * k - j]).scale(&binomial(2 * k, j));
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    Ok(if k % 2 == 1 { -acc } else { acc })
}

fn check_polya_index(p: &Poly, k: usize) -> Result<usize> {
    let n = p.degree();
    if n < 2 || k < 1 || k as isize > n - 1 {
        return Err(Error::OutOfRange(format!(
            "Polya index k = {k} must lie in 1..={} (G_n vanishes identically)",
            (n - 1).max(0)
        )));
    }
    Ok(n as usize)
}

/// `G_k = (n-k) (p^(k))^2 - (n-k+1) p^(k-1) p^(k+1)` for `1 <= k <= n-1`.
pub fn polya_gk(p: &Poly, k: usize) -> Result<Poly> {
    let n = check_polya_index(p, k)?;
    let a = p.derivative(k);
    let lhs = (&a * &a).scale(&int((n - k) as i64));
    let rhs = (&p.derivative(k - 1) * &p.derivative(k + 1)).scale(&int((n - k + 1) as i64));
    Ok(&lhs - &rhs)
}

/// The same `G_k` through `(n-k+1) H_{(n-k)/(n-k+1)}[p^(k-1)]`.
pub fn polya_gk_via_h(p: &Poly, k: usize) -> Result<Poly> {
    let n = check_polya_index(p, k)?;
    let m = (n - k + 1) as i64;
    let c = Rational::new((m - 1).into(), m.into());
    Ok(h_unchecked(&p.derivative(k - 1), &c).scale(&int(m)))
}

/// `(n-1) (p')^2 - n p p''`, which equals `n H_{(n-1)/n}[p]`.
pub fn shapiro_polynomial(p: &Poly) -> Result<Poly> {
    need_degree(p, 2)?;
    let n = p.degree() as i64;
    let d1 = p.derivative(1);
    Ok(&(&d1 * &d1).scale(&int(n - 1)) - &(p * &p.derivative(2)).scale(&int(n)))
}

/// The leading coefficient of `H_k[p]` in degree `2n-2`: `(k n^2 - n(n-1)) lc(p)^2`.
pub fn h_leading_formula(p: &Poly, kappa: &Kappa) -> Rational {
    let n = int(p.degree() as i64);
    let lc = p.leading();
    (kappa * &n * &n - &n * (&n - Rational::one())) * &lc * &lc
}
