use super::Poly;
use crate::error::{Error, Result};

/// Yun's algorithm. Returns monic, square-free, pairwise coprime factors `f_i`
/// with multiplicities `m_i` such that `p = lc(p) * prod f_i^m_i`. Constant
/// input gives an empty list.
pub fn squarefree_decomposition(p: &Poly) -> Result<Vec<(Poly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if p.degree() == 0 {
        return Ok(out);
    }
    let dp = p.derivative(1);
    let a0 = p.gcd(&dp)?;
    let mut b = p.exact_div(&a0);
    let mut c = dp.exact_div(&a0);
    let mut d = &c - &b.derivative(1);
    let mut i = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d)?;
        if a.degree() > 0 {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a);
        c = d.exact_div(&a);
        d = &c - &b.derivative(1);
        i += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, Poly};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn yun_cases() {
        assert_eq!(
            squarefree_decomposition(&p(&[0, 0, 0, -1, 1])).unwrap(),
            vec![(p(&[-1, 1]), 1), (p(&[0, 1]), 3)]
        );
        assert_eq!(
            squarefree_decomposition(&p(&[-1, 0, 1])).unwrap(),
            vec![(p(&[-1, 0, 1]), 1)]
        );
        let h = p(&[-1, 0, 1]).pow(3).scale(&int(-80));
        assert_eq!(
            squarefree_decomposition(&h).unwrap(),
            vec![(p(&[-1, 0, 1]), 3)]
        );
        assert!(squarefree_decomposition(&Poly::zero()).is_err());
        assert!(squarefree_decomposition(&p(&[5])).unwrap().is_empty());
    }

    #[test]
    fn reassembles_input() {
        let q = &(&p(&[1, 1]).pow(2) * &p(&[-2, 0, 1]).pow(3)) * &p(&[3, 0, 0, 1]);
        let q = q.scale(&int(7));
        let parts = squarefree_decomposition(&q).unwrap();
        let mut prod = Poly::constant(q.leading());
        for (f, m) in &parts {
            prod = &prod * &f.pow(*m as u32);
        }
        assert_eq!(prod, q);
    }
}
