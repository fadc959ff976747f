use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::Rational;

/// Gaussian rational `re + i*im`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        ComplexRational { re, im }
    }

    pub fn zero() -> Self {
        Self::real(Rational::zero())
    }

    pub fn real(re: Rational) -> Self {
        ComplexRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn conj(&self) -> Self {
        ComplexRational::new(self.re.clone(), -&self.im)
    }

    /// `|z|^2`
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl Add for &ComplexRational {
    type Output = ComplexRational;
    fn add(self, o: &ComplexRational) -> ComplexRational {
        ComplexRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &ComplexRational {
    type Output = ComplexRational;
    fn sub(self, o: &ComplexRational) -> ComplexRational {
        ComplexRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &ComplexRational {
    type Output = ComplexRational;
    fn mul(self, o: &ComplexRational) -> ComplexRational {
        ComplexRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for &ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational::new(-&self.re, -&self.im)
    }
}
