use super::cyclotomic::Cyclotomic;
use super::valuation::{vp, Valuation};
use super::{rat, Rat};
use num_traits::Zero;
use std::fmt;

/// An exact scalar: a rational number or a cyclotomic field element.
/// Mixed arithmetic promotes to the cyclotomic side; results that land in Q
/// are normalised back down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rat(Rat),
    Cyc(Cyclotomic),
}

impl Scalar {
    pub fn int(n: i64) -> Scalar {
        Scalar::Rat(rat(n))
    }

    pub fn zero() -> Scalar {
        Scalar::Rat(Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Cyc(x) => x.is_zero(),
        }
    }

    pub fn normalize(self) -> Scalar {
        match self {
            Scalar::Cyc(c) => match c.as_rational() {
                Some(r) => Scalar::Rat(r),
                None => Scalar::Cyc(c),
            },
            s => s,
        }
    }

    pub fn as_rat(&self) -> Option<Rat> {
        match self {
            Scalar::Rat(x) => Some(x.clone()),
            Scalar::Cyc(c) => c.as_rational(),
        }
    }

    fn promote(&self, level: u32) -> Cyclotomic {
        match self {
            Scalar::Rat(x) => Cyclotomic::from_rat(level, x.clone()),
            Scalar::Cyc(c) => c.clone(),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a.clone() + b.clone()),
            (a, b) => {
                let level = a.level().max(b.level()).max(1);
                Scalar::Cyc(a.promote(level).add(&b.promote(level))).normalize()
            }
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a.clone()),
            Scalar::Cyc(a) => Scalar::Cyc(a.neg()),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a.clone() * b.clone()),
            (a, b) => {
                let level = a.level().max(b.level()).max(1);
                Scalar::Cyc(a.promote(level).mul(&b.promote(level))).normalize()
            }
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Cyc(a) => Scalar::Cyc(a.inv()).normalize(),
        }
    }

    pub fn pow(&self, e: i64) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(crate::poly::rat_pow(a, e)),
            Scalar::Cyc(a) => Scalar::Cyc(a.pow(e)).normalize(),
        }
    }

    fn level(&self) -> u32 {
        match self {
            Scalar::Rat(_) => 1,
            Scalar::Cyc(c) => c.level(),
        }
    }

    /// p-adic valuation; defined here only for rational values.
    pub fn valuation(&self, p: u32) -> Option<Valuation> {
        self.as_rat().map(|x| vp(&x, p))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(x) => write!(f, "{x}"),
            Scalar::Cyc(c) => write!(f, "{c}"),
        }
    }
}
