use crate::exactnum::{rat, CharDescriptor, Rat, Scalar};
use num_traits::Zero;

/// Support restriction for a locally analytic function on Z_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Support {
    All,
    Units,
}

/// The evaluation rule: a locally algebraic character-power, or a finite
/// Mahler (binomial-coefficient) expansion.
#[derive(Clone, Debug, PartialEq)]
pub enum LocAnRule {
    CharPower(CharDescriptor),
    Mahler { coeffs: Vec<Rat> },
}

/// A locally analytic function on Z_p, recorded through its evaluation rule
/// on non-negative integers, a support restriction, and an optional
/// analyticity radius exponent (the function is analytic on discs of radius
/// p^{-radius}).
#[derive(Clone, Debug, PartialEq)]
pub struct LocAnFunction {
    pub rule: LocAnRule,
    pub support: Support,
    pub radius: Option<u32>,
}

impl LocAnFunction {
    /// The identity function x |-> x.
    pub fn identity() -> Self {
        LocAnFunction {
            rule: LocAnRule::CharPower(CharDescriptor::power(1)),
            support: Support::All,
            radius: None,
        }
    }

    /// The indicator of the units.
    pub fn unit_indicator() -> Self {
        LocAnFunction {
            rule: LocAnRule::CharPower(CharDescriptor::power(0)),
            support: Support::Units,
            radius: None,
        }
    }

    pub fn one() -> Self {
        LocAnFunction {
            rule: LocAnRule::CharPower(CharDescriptor::power(0)),
            support: Support::All,
            radius: None,
        }
    }

    pub fn char_power(desc: CharDescriptor, support: Support) -> Self {
        LocAnFunction { rule: LocAnRule::CharPower(desc), support, radius: None }
    }

    pub fn with_radius(mut self, m: u32) -> Self {
        self.radius = Some(m);
        self
    }

    /// Exact value at a non-negative integer index.
    pub fn eval(&self, n: u64, p: u32) -> Scalar {
        if self.support == Support::Units && n % p as u64 == 0 {
            return Scalar::zero();
        }
        match &self.rule {
            LocAnRule::CharPower(desc) => desc
                .eval_int(n as i64)
                .expect("character-power undefined at this index"),
            LocAnRule::Mahler { coeffs } => {
                let mut acc = Rat::zero();
                for (k, c) in coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        acc += c.clone() * binomial(n, k as u64);
                    }
                }
                Scalar::Rat(acc)
            }
        }
    }

    /// Pointwise product; defined for character-power rules.
    pub fn mul(&self, other: &LocAnFunction) -> Result<LocAnFunction, String> {
        let (a, b) = match (&self.rule, &other.rule) {
            (LocAnRule::CharPower(a), LocAnRule::CharPower(b)) => (a, b),
            _ => return Err("products are only defined for character-power rules".into()),
        };
        let support = if self.support == Support::Units || other.support == Support::Units {
            Support::Units
        } else {
            Support::All
        };
        let radius = match (self.radius, other.radius) {
            (Some(x), Some(y)) => Some(x.max(y)),
            (r, None) | (None, r) => r,
        };
        Ok(LocAnFunction { rule: LocAnRule::CharPower(a.mul(b)), support, radius })
    }
}

fn binomial(n: u64, k: u64) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = rat(1);
    for i in 0..k {
        acc = acc * rat((n - i) as i64) / rat((i + 1) as i64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::DirichletChar;

    #[test]
    fn evaluation_rules() {
        let id = LocAnFunction::identity();
        assert_eq!(id.eval(7, 3), Scalar::int(7));
        assert_eq!(id.eval(0, 3), Scalar::int(0));
        let ind = LocAnFunction::unit_indicator();
        assert_eq!(ind.eval(6, 3), Scalar::int(0));
        assert_eq!(ind.eval(7, 3), Scalar::int(1));
        assert_eq!(ind.eval(0, 3), Scalar::int(0));
        // indicator squared is the indicator
        let sq = ind.mul(&ind).unwrap();
        for n in 0..20 {
            assert_eq!(sq.eval(n, 3), ind.eval(n, 3));
        }
    }

    #[test]
    fn character_and_mahler_rules() {
        let chi = DirichletChar::quadratic(5);
        let f = LocAnFunction::char_power(CharDescriptor::new(2, Some(chi)), Support::Units);
        assert_eq!(f.eval(2, 5), Scalar::int(-4));
        assert_eq!(f.eval(10, 5), Scalar::int(0));
        // Mahler rule evaluates binomials exactly: 3*C(n,2) - C(n,0)
        let g = LocAnFunction {
            rule: LocAnRule::Mahler { coeffs: vec![rat(-1), rat(0), rat(3)] },
            support: Support::All,
            radius: Some(1),
        };
        assert_eq!(g.eval(4, 3), Scalar::int(17));
    }
}
