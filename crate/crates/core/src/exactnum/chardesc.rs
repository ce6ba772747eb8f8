use super::dirichlet::DirichletChar;
use super::valuation::{vp, Valuation};
use super::{rat, Rat, Scalar};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

/// A locally algebraic character descriptor: an integer power times an
/// optional finite-order Dirichlet character of p-power conductor,
/// x |-> x^k chi(x).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharDescriptor {
    pub power: i64,
    pub chi: Option<DirichletChar>,
}

impl CharDescriptor {
    pub fn power(k: i64) -> Self {
        CharDescriptor { power: k, chi: None }
    }

    pub fn new(power: i64, chi: Option<DirichletChar>) -> Self {
        let chi = chi.filter(|c| !c.is_trivial());
        CharDescriptor { power, chi }
    }

    pub fn is_pure_power(&self) -> bool {
        self.chi.is_none()
    }

    /// Value at a non-negative integer; the character part vanishes on
    /// multiples of p, and 0^0 = 1 by convention.
    pub fn eval_int(&self, n: i64) -> Result<Scalar, String> {
        if n == 0 {
            return match (self.power, &self.chi) {
                (k, _) if k < 0 => Err("negative power at zero".into()),
                (0, None) => Ok(Scalar::int(1)),
                (0, Some(_)) => Ok(Scalar::int(0)),
                _ => Ok(Scalar::int(0)),
            };
        }
        let pow = Scalar::Rat(crate::poly::rat_pow(&rat(n), self.power));
        match &self.chi {
            None => Ok(pow),
            Some(chi) => Ok(chi.eval(n).mul(&pow)),
        }
    }

    /// Value at a rational p-adic unit: the character part extends through
    /// chi(u/v) = chi(u) chi(v)^{-1}.
    pub fn eval_rat(&self, x: &Rat, p: u32) -> Result<Scalar, String> {
        if x.is_zero() {
            return Err("character value at zero".into());
        }
        let pow = Scalar::Rat(crate::poly::rat_pow(x, self.power));
        match &self.chi {
            None => Ok(pow),
            Some(chi) => {
                if vp(x, p) != Valuation::finite(0) {
                    return Err(format!("{x} is not a unit at p = {p}"));
                }
                let to_i64 = |b: &BigInt| -> Result<i64, String> {
                    i64::try_from(b.clone()).map_err(|_| "numerator too large".to_string())
                };
                let u = to_i64(x.numer())?;
                let v = to_i64(x.denom())?;
                Ok(chi.eval(u).mul(&chi.eval(v).inv()).mul(&pow))
            }
        }
    }

    /// Value at -1, always +1 or -1.
    pub fn parity(&self) -> i64 {
        let sign = if self.power % 2 == 0 { 1 } else { -1 };
        sign * self.chi.as_ref().map_or(1, |c| c.parity())
    }

    /// Pointwise product of descriptors (powers add, characters multiply).
    pub fn mul(&self, other: &CharDescriptor) -> CharDescriptor {
        let chi = match (&self.chi, &other.chi) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (Some(a), Some(b)) => Some(a.mul(b)),
        };
        CharDescriptor::new(self.power + other.power, chi)
    }

    pub fn neg_power(&self) -> CharDescriptor {
        CharDescriptor::new(-self.power, self.chi.as_ref().map(|c| c.inverse()))
    }
}

impl fmt::Display for CharDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.chi {
            None => write!(f, "x^{}", self.power),
            Some(chi) => write!(
                f,
                "x^{} * chi({};{})",
                self.power,
                chi.prime(),
                chi.cond_exp()
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    #[test]
    fn integer_and_rational_values() {
        let f = CharDescriptor::power(2);
        assert_eq!(f.eval_int(3).unwrap(), Scalar::int(9));
        assert_eq!(f.eval_int(0).unwrap(), Scalar::int(0));
        assert_eq!(CharDescriptor::power(0).eval_int(0).unwrap(), Scalar::int(1));

        let chi = DirichletChar::quadratic(5);
        let g = CharDescriptor::new(1, Some(chi));
        assert_eq!(g.eval_int(2).unwrap(), Scalar::int(-2));
        assert_eq!(g.eval_int(5).unwrap(), Scalar::int(0));
        // chi(2/3) = chi(2) chi(3)^{-1} = (-1)(-1)^{-1} = 1
        assert_eq!(g.eval_rat(&ratio(2, 3), 5).unwrap(), Scalar::Rat(ratio(2, 3)));
        assert!(g.eval_rat(&ratio(5, 3), 5).is_err());
    }

    #[test]
    fn parity_and_products() {
        let chi3 = DirichletChar::quadratic(3); // odd character
        let f = CharDescriptor::new(2, Some(chi3.clone()));
        assert_eq!(f.parity(), -1);
        assert_eq!(CharDescriptor::power(3).parity(), -1);
        let g = CharDescriptor::new(1, Some(chi3));
        let fg = f.mul(&g);
        assert_eq!(fg.power, 3);
        assert!(fg.chi.is_none(), "quadratic squared is trivial");
    }
}
