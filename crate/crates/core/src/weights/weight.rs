use crate::exactnum::{rat, ratio, Rat};
use std::fmt;

/// An algebraic character (r1, r2; c) of the diagonal torus of GSp(4),
/// acting on diag(z1, z2, s/z2, s/z1) as z1^r1 z2^r2 s^c.
///
/// Half-integer entries are permitted (the half-sum of positive roots has
/// c = -3/2), so every coordinate is stored as a rational with denominator
/// dividing 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub r1: Rat,
    pub r2: Rat,
    pub c: Rat,
}

fn half_integral(x: &Rat) -> bool {
    (x.clone() * rat(2)).is_integer()
}

impl Weight {
    pub fn new(r1: Rat, r2: Rat, c: Rat) -> Self {
        let w = Weight { r1, r2, c };
        assert!(
            half_integral(&w.r1) && half_integral(&w.r2) && half_integral(&w.c),
            "weight coordinates must have denominator dividing 2: {w}"
        );
        w
    }

    pub fn int(r1: i64, r2: i64, c: i64) -> Self {
        Weight { r1: rat(r1), r2: rat(r2), c: rat(c) }
    }

    /// Shorthand for (r1, r2; c) with c given in halves: `halves(4, 2, -3)`
    /// is (2, 1; -3/2).
    pub fn halves(r1_x2: i64, r2_x2: i64, c_x2: i64) -> Self {
        Weight { r1: ratio(r1_x2, 2), r2: ratio(r2_x2, 2), c: ratio(c_x2, 2) }
    }

    pub fn zero() -> Self {
        Weight::int(0, 0, 0)
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight {
            r1: self.r1.clone() + o.r1.clone(),
            r2: self.r2.clone() + o.r2.clone(),
            c: self.c.clone() + o.c.clone(),
        }
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight {
            r1: self.r1.clone() - o.r1.clone(),
            r2: self.r2.clone() - o.r2.clone(),
            c: self.c.clone() - o.c.clone(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight { r1: -self.r1.clone(), r2: -self.r2.clone(), c: -self.c.clone() }
    }

    /// Dominance for GSp(4): r1 >= r2 >= 0 (the similitude part is free).
    pub fn is_dominant(&self) -> bool {
        self.r2 >= rat(0) && self.r1 >= self.r2
    }

    /// v_p of the value at diag(1, 1, p, p).
    pub fn vp_at_t_siegel(&self) -> Rat {
        self.c.clone()
    }

    /// v_p of the value at diag(1, p, p, p^2).
    pub fn vp_at_t_klingen(&self) -> Rat {
        self.r2.clone() + rat(2) * self.c.clone()
    }

    /// v_p of the value at the central element p * id.
    pub fn vp_at_center(&self) -> Rat {
        self.r1.clone() + self.r2.clone() + rat(2) * self.c.clone()
    }

    /// Exact character value at a diagonal torus element written in the
    /// coordinates (z1, z2, s). Requires integral exponents.
    pub fn eval(&self, z1: &Rat, z2: &Rat, s: &Rat) -> Rat {
        let pow = |x: &Rat, e: &Rat| -> Rat {
            assert!(e.is_integer(), "non-integral exponent in character value");
            crate::poly::rat_pow(x, int_val(e))
        };
        pow(z1, &self.r1) * pow(z2, &self.r2) * pow(s, &self.c)
    }
}

fn int_val(x: &Rat) -> i64 {
    let n = x.to_integer();
    let digits: Option<i64> = (&n).try_into().ok();
    digits.expect("exponent too large")
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |x: &Rat| -> String {
            if x.is_integer() {
                x.numer().to_string()
            } else {
                format!("{}/{}", x.numer(), x.denom())
            }
        };
        write!(f, "({},{};{})", show(&self.r1), show(&self.r2), show(&self.c))
    }
}

impl Weight {
    /// Parses "(r1,r2;c)" or "r1,r2,c" with rational entries.
    pub fn parse(s: &str) -> Result<Weight, String> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = t.split(|ch| ch == ',' || ch == ';').collect();
        if parts.len() != 3 {
            return Err(format!("expected three weight coordinates in {s:?}"));
        }
        let coord = |u: &str| crate::exactnum::rat_from_str(u);
        Ok(Weight::new(coord(parts[0])?, coord(parts[1])?, coord(parts[2])?))
    }
}

/// A GL(2) torus character (r; c): diag(z, s/z) acts as z^r s^c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GL2Weight {
    pub r: Rat,
    pub c: Rat,
}

impl GL2Weight {
    pub fn int(r: i64, c: i64) -> Self {
        GL2Weight { r: rat(r), c: rat(c) }
    }
}

impl fmt::Display for GL2Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.r, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominance_and_display() {
        assert!(Weight::int(3, 1, -4).is_dominant());
        assert!(!Weight::int(1, 3, 0).is_dominant());
        assert!(!Weight::int(2, -1, 0).is_dominant());
        assert_eq!(Weight::halves(4, 2, -3).to_string(), "(2,1;-3/2)");
        assert_eq!(Weight::parse("(3,-1;1)").unwrap(), Weight::int(3, -1, 1));
        assert_eq!(Weight::parse("3,1,0").unwrap(), Weight::int(3, 1, 0));
    }

    #[test]
    fn generator_valuations() {
        // kappa* = (r1, -(r2+2); r2+1) has v(t_S) = r2+1 and v(t_Kl) = r2
        for (r1, r2) in [(3i64, 1i64), (5, 0), (4, 4)] {
            let k = Weight::int(r1, -(r2 + 2), r2 + 1);
            assert_eq!(k.vp_at_t_siegel(), rat(r2 + 1));
            assert_eq!(k.vp_at_t_klingen(), rat(r2));
        }
    }
}
