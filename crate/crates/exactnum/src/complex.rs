use std::fmt;

use crate::{Coeff, Field, NumError, Scalar};

/// `re + i·im` over a real coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Complex<C> {
    pub re: C,
    pub im: C,
}

impl<C: Coeff> Complex<C> {
    pub fn new(re: C, im: C) -> Self {
        Complex { re, im }
    }

    pub fn real(re: C) -> Self {
        Complex { re, im: C::zero() }
    }

    pub fn i() -> Self {
        Complex { re: C::zero(), im: C::one() }
    }

    pub fn conj(&self) -> Self {
        Complex { re: self.re.clone(), im: self.im.negate() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl<C: Coeff> Coeff for Complex<C> {
    fn zero() -> Self {
        Complex::real(C::zero())
    }
    fn one() -> Self {
        Complex::real(C::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        Complex::new(self.re.plus(&o.re), self.im.plus(&o.im))
    }
    fn minus(&self, o: &Self) -> Self {
        Complex::new(self.re.minus(&o.re), self.im.minus(&o.im))
    }
    fn times(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return Complex::real(self.re.times(&o.re));
        }
        Complex::new(
            self.re.times(&o.re).minus(&self.im.times(&o.im)),
            self.re.times(&o.im).plus(&self.im.times(&o.re)),
        )
    }
    fn negate(&self) -> Self {
        Complex::new(self.re.negate(), self.im.negate())
    }
    fn from_scalar(s: Scalar) -> Self {
        Complex::real(C::from_scalar(s))
    }
    fn scale(&self, s: &Scalar) -> Self {
        Complex::new(self.re.scale(s), self.im.scale(s))
    }
}

impl Field for Complex<Scalar> {
    fn inverse(&self) -> Result<Self, NumError> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        let inv = norm.inv()?;
        Ok(Complex::new(&self.re * &inv, -(&self.im * &inv)))
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for Complex<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "i*({})", self.im)
        } else {
            write!(f, "{} + i*({})", self.re, self.im)
        }
    }
}
