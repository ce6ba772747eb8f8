use super::{rat, Rat};
use num_traits::{One, Zero};
use std::fmt;

/// An element a + b*sqrt(p) of Q(sqrt p), with sqrt(p) kept formal so that
/// half-integral powers of p never touch floating point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtExt {
    pub p: u32,
    pub a: Rat,
    pub b: Rat,
}

impl SqrtExt {
    pub fn new(p: u32, a: Rat, b: Rat) -> Self {
        SqrtExt { p, a, b }
    }

    pub fn from_rat(p: u32, a: Rat) -> Self {
        SqrtExt { p, a, b: Rat::zero() }
    }

    pub fn int(p: u32, n: i64) -> Self {
        SqrtExt::from_rat(p, rat(n))
    }

    /// sqrt(p)^e for signed e, e.g. e = -1 gives sqrt(p)/p.
    pub fn sqrt_p_pow(p: u32, e: i64) -> Self {
        let half = e.rem_euclid(2);
        let whole = (e - half) / 2;
        let scale = crate::poly::rat_pow(&rat(p as i64), whole);
        if half == 0 {
            SqrtExt::from_rat(p, scale)
        } else {
            SqrtExt::new(p, Rat::zero(), scale)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &SqrtExt) -> SqrtExt {
        assert_eq!(self.p, o.p);
        SqrtExt::new(self.p, self.a.clone() + o.a.clone(), self.b.clone() + o.b.clone())
    }

    pub fn neg(&self) -> SqrtExt {
        SqrtExt::new(self.p, -self.a.clone(), -self.b.clone())
    }

    pub fn sub(&self, o: &SqrtExt) -> SqrtExt {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &SqrtExt) -> SqrtExt {
        assert_eq!(self.p, o.p);
        let p = rat(self.p as i64);
        SqrtExt::new(
            self.p,
            self.a.clone() * o.a.clone() + p * self.b.clone() * o.b.clone(),
            self.a.clone() * o.b.clone() + self.b.clone() * o.a.clone(),
        )
    }

    pub fn inv(&self) -> SqrtExt {
        assert!(!self.is_zero());
        let p = rat(self.p as i64);
        let norm = self.a.clone() * self.a.clone() - p * self.b.clone() * self.b.clone();
        assert!(!norm.is_zero(), "non-invertible element (norm zero)");
        SqrtExt::new(self.p, self.a.clone() / norm.clone(), -self.b.clone() / norm)
    }

    pub fn pow(&self, e: i64) -> SqrtExt {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = SqrtExt::from_rat(self.p, Rat::one());
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            n >>= 1;
        }
        acc
    }
}

impl fmt::Display for SqrtExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ({})*sqrt({})", self.a, self.b, self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    #[test]
    fn field_arithmetic() {
        // (1 - 1/sqrt(3)) = 1 - sqrt(3)/3
        let x = SqrtExt::int(3, 1).sub(&SqrtExt::new(3, rat(0), ratio(1, 3)));
        let inv = x.inv();
        assert_eq!(x.mul(&inv), SqrtExt::int(3, 1));
        // sqrt(3)^2 = 3, sqrt(3)^-2 = 1/3
        assert_eq!(SqrtExt::sqrt_p_pow(3, 2), SqrtExt::int(3, 3));
        assert_eq!(SqrtExt::sqrt_p_pow(3, -2), SqrtExt::from_rat(3, ratio(1, 3)));
    }
}
