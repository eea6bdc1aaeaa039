use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Ring;

/// First-order jet `value + derivative·ε` with `ε² = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jet<R> {
    pub value: R,
    pub derivative: R,
}

impl<R: Ring> Jet<R> {
    pub fn new(value: R, derivative: R) -> Self {
        Jet { value, derivative }
    }

    pub fn constant(value: R) -> Self {
        Jet { value, derivative: R::zero() }
    }

    /// `a + ε·b`: the affine curve `t ↦ a + t·b` at `t = 0`.
    pub fn affine(a: R, b: R) -> Self {
        Jet { value: a, derivative: b }
    }
}

impl<R: Ring> Add for Jet<R> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Jet { value: self.value + rhs.value, derivative: self.derivative + rhs.derivative }
    }
}

impl<R: Ring> Sub for Jet<R> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Jet { value: self.value - rhs.value, derivative: self.derivative - rhs.derivative }
    }
}

impl<R: Ring> Mul for Jet<R> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let derivative = self.value.clone() * rhs.derivative + self.derivative * rhs.value.clone();
        Jet { value: self.value * rhs.value, derivative }
    }
}

impl<R: Ring> Neg for Jet<R> {
    type Output = Self;

    fn neg(self) -> Self {
        Jet { value: -self.value, derivative: -self.derivative }
    }
}

impl<R: Ring> Zero for Jet<R> {
    fn zero() -> Self {
        Jet::constant(R::zero())
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.derivative.is_zero()
    }
}

impl<R: Ring> One for Jet<R> {
    fn one() -> Self {
        Jet::constant(R::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ratio, Rational};

    fn j(a: i64, b: i64) -> Jet<Rational> {
        Jet::new(ratio(a, 1), ratio(b, 1))
    }

    #[test]
    fn leibniz() {
        assert_eq!(j(2, 3) * j(5, 7), j(10, 29));
        assert_eq!(j(2, 3) + j(5, 7), j(7, 10));
        assert_eq!(j(2, 3) - j(5, 7), j(-3, -4));
        assert_eq!(-j(2, 3), j(-2, -3));
        let t = j(0, 1);
        assert_eq!(t.clone() * t.clone(), Jet::zero());
        assert_eq!(t.clone() * j(4, 0) + Jet::one(), j(1, 4));
    }

    #[test]
    fn ring_laws_on_samples() {
        let xs = [j(1, 2), j(-3, 5), j(0, 1), j(7, 0)];
        for a in &xs {
            for b in &xs {
                assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
                for c in &xs {
                    assert_eq!(
                        a.clone() * (b.clone() + c.clone()),
                        a.clone() * b.clone() + a.clone() * c.clone()
                    );
                    assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
                }
            }
        }
    }
}
