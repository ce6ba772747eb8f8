use super::weight::{GL2Weight, Weight};
use super::weyl::{star_act, weyl_act, WeylElt};
use crate::exactnum::rat;

/// The dictionary of weights attached to a choice of (r1, r2, t1, t2, xi1):
/// the dominant weight nu_G, the auxiliary H-weight nu_H with
/// t1 + t2 = r1 - r2, the Levi weights kappa_G and kappa_H, and the GL(2)
/// pair (zeta_H1, zeta_H2) built from a splitting xi1 + xi2 = 1 - r2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SituationWeights {
    pub r1: i64,
    pub r2: i64,
    pub t1: i64,
    pub t2: i64,
    pub xi1: i64,
    pub xi2: i64,
    pub nu_g: Weight,
    pub nu_h: Weight,
    pub kappa_g: Weight,
    pub kappa_h: Weight,
    pub zeta_h1: GL2Weight,
    pub zeta_h2: GL2Weight,
}

/// kappa_G from nu_G by the twisted shifted action:
/// -(s2)^{-1} . (w1 * (-wmax . nu_G)).
fn kappa_g_from_nu(nu_g: &Weight) -> Weight {
    let inner = weyl_act(WeylElt::WMax, nu_g).neg();
    weyl_act(WeylElt::S2.inverse(), &star_act(WeylElt::S1, &inner)).neg()
}

/// The dual weight kappa_G^* = (r1, -(r2+2); r2+1) entering the slope and
/// semisimplification predicates.
pub fn kappa_g_star(r1: i64, r2: i64) -> Weight {
    Weight::int(r1, -(r2 + 2), r2 + 1)
}

pub fn situation_weights(
    r1: i64,
    r2: i64,
    t1: i64,
    t2: i64,
    xi1: i64,
) -> Result<SituationWeights, String> {
    if !(r1 >= r2 && r2 >= 0) {
        return Err(format!("not a dominant weight: ({r1},{r2})"));
    }
    if t1 < 0 || t2 < 0 || t1 + t2 != r1 - r2 {
        return Err("not a Situation weight tuple: t1 + t2 must equal r1 - r2".into());
    }
    let xi2 = 1 - r2 - xi1;
    let nu_g = Weight::int(r1, r2, -(r1 + r2));
    let nu_h = Weight::int(t1, t2, -r1);
    let kappa_g = kappa_g_from_nu(&nu_g);
    // kappa_H = wmax_H . nu_H + rho_H with wmax_H . (a,b;c) = (-a,-b;c+a+b)
    // and rho_H = (1,1;-1)
    let kappa_h = Weight::int(-t1, -t2, -r1 + t1 + t2).add(&Weight::int(1, 1, -1));
    let zeta_h1 = GL2Weight::int(-1 - t1, xi1);
    let zeta_h2 = GL2Weight::int(-1 - t2, xi2);
    let out = SituationWeights {
        r1,
        r2,
        t1,
        t2,
        xi1,
        xi2,
        nu_g,
        nu_h,
        kappa_g,
        kappa_h,
        zeta_h1,
        zeta_h2,
    };
    out.validate()?;
    Ok(out)
}

impl SituationWeights {
    /// Re-checks the defining closed forms.
    pub fn validate(&self) -> Result<(), String> {
        let (r1, r2, t1, t2) = (self.r1, self.r2, self.t1, self.t2);
        if self.kappa_g != Weight::int(r2 + 2, -r1, -r2 - 1) {
            return Err(format!("kappa_G mismatch: {}", self.kappa_g));
        }
        if self.kappa_h != Weight::int(1 - t1, 1 - t2, -r2 - 1) {
            return Err(format!("kappa_H mismatch: {}", self.kappa_h));
        }
        if self.xi1 + self.xi2 != 1 - r2 {
            return Err("xi1 + xi2 must equal 1 - r2".into());
        }
        if self.zeta_h1.r != rat(-1 - t1) || self.zeta_h2.r != rat(-1 - t2) {
            return Err("zeta weights mismatch".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn situation_examples() {
        let s = situation_weights(3, 1, 1, 1, 0).unwrap();
        assert_eq!(s.kappa_g, Weight::int(3, -3, -2));
        assert_eq!(s.kappa_h, Weight::int(0, 0, -2));
        assert_eq!(s.nu_h, Weight::int(1, 1, -3));
        assert_eq!(s.xi2, 0);

        let s = situation_weights(0, 0, 0, 0, 1).unwrap();
        assert_eq!(s.kappa_g, Weight::int(2, 0, -1));
        assert_eq!(s.kappa_h, Weight::int(1, 1, -1));

        assert!(situation_weights(2, 1, 1, 1, 0).is_err());
    }

    #[test]
    fn kappa_g_agrees_with_star_route_for_many_weights() {
        for r1 in 0..6 {
            for r2 in 0..=r1 {
                let s = situation_weights(r1, r2, r1 - r2, 0, 0).unwrap();
                assert_eq!(s.kappa_g, Weight::int(r2 + 2, -r1, -r2 - 1));
                // kappa* is -s2 . kappa_G
                let star = weyl_act(WeylElt::S2, &s.kappa_g).neg();
                assert_eq!(star, kappa_g_star(r1, r2));
            }
        }
    }
}
