//! Unipotent factorization at Iwahori level and the torus-monoid action on
//! the unipotent coordinates.

use super::group::UnipotentPoint;
use crate::exactnum::{rat, vp, Rat, Valuation};
use crate::matrix::{similitude, QMatrix};
use crate::poly::Poly;
use num_traits::Zero;

/// Result of a unipotent factorization g = n(z,a,b) x: the coordinates, the
/// complementary factor, and the depth predicates for the coordinates
/// (z in p^beta Z_p plus the level-n disc, a and b in the disc).
#[derive(Clone, Debug)]
pub struct FactorReport {
    pub point: UnipotentPoint,
    pub complement: QMatrix,
    pub z_in_depth: bool,
    pub a_in_disc: bool,
    pub b_in_disc: bool,
}

/// Positions that must vanish for membership in the twisted Borel: the
/// stabiliser of the flag <e1> < <e1,e3> < <e1,e3,e2>.
const COMPLEMENT_ZEROS: [(usize, usize); 6] = [(1, 0), (2, 0), (3, 0), (3, 1), (1, 2), (3, 2)];

/// Factor a group element as n(z,a,b) times an element of the twisted Borel.
///
/// Solves the three corner equations for (z, a, b) from the first column,
/// verifies that the complement lands in the twisted Borel (this is where
/// membership in the parabolic-times-Iwahori set is used), then reports the
/// valuation predicates for the prime p, depth beta and disc level n.
pub fn iwahori_factor(
    g: &QMatrix,
    p: u32,
    beta: u32,
    n_level: u32,
) -> Result<FactorReport, String> {
    if similitude(g).is_none() {
        return Err("matrix is not in the similitude group".into());
    }
    if g.0[0][0].is_zero() {
        return Err("no unipotent factorization: top-left entry vanishes (outside the big cell)"
            .into());
    }
    let g11 = g.0[0][0].clone();
    let z = g.0[1][0].clone() / g11.clone();
    let a = g.0[2][0].clone() / g11.clone();
    let b = (g.0[3][0].clone() - a.clone() * g.0[1][0].clone() + z.clone() * g.0[2][0].clone())
        / g11;
    let point = UnipotentPoint::new(z.clone(), a.clone(), b.clone());
    let complement = point.matrix().inverse().unwrap().mul(g);
    for (i, j) in COMPLEMENT_ZEROS {
        if !complement.0[i][j].is_zero() {
            return Err(format!(
                "no unipotent factorization: complement entry ({},{}) is nonzero",
                i + 1,
                j + 1
            ));
        }
    }
    let at_least = |x: &Rat, k: i64| -> bool {
        match vp(x, p) {
            Valuation::Infinity => true,
            Valuation::Finite(v) => v >= rat(k),
        }
    };
    let depth = std::cmp::min(beta as i64, n_level as i64);
    Ok(FactorReport {
        z_in_depth: at_least(&z, depth),
        a_in_disc: at_least(&a, n_level as i64),
        b_in_disc: at_least(&b, n_level as i64),
        point,
        complement,
    })
}

/// A torus element diag(t1, t2, nu/t2, nu/t1) with its monoid membership
/// tag: Plus requires every positive-root value to have non-negative
/// valuation, Minus non-positive, General none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusMonoidElt {
    pub t1: Rat,
    pub t2: Rat,
    pub nu: Rat,
    pub tag: MonoidTag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoidTag {
    Plus,
    Minus,
    General,
}

/// Which of the two conjugation conventions to apply to the unipotent
/// coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoidAction {
    /// Conjugate by the 2-3-swapped torus element: the new function at
    /// n(z,a,b) is the старый at (t^{-1} n t); coordinates scale by
    /// (t1 t2 / nu, t1 / t2, t1^2 / nu). Requires the Plus tag.
    PlusTwisted,
    /// The dual convention for the antidominant monoid: coordinates scale by
    /// the inverses (nu / (t1 t2), t2 / t1, nu / t1^2). Requires Minus.
    MinusDual,
}

impl TorusMonoidElt {
    pub fn new(t1: Rat, t2: Rat, nu: Rat, tag: MonoidTag) -> Result<Self, String> {
        if t1.is_zero() || t2.is_zero() || nu.is_zero() {
            return Err("torus parameters must be nonzero".into());
        }
        Ok(TorusMonoidElt { t1, t2, nu, tag })
    }

    /// diag(1,1,p,p).
    pub fn t_siegel(p: u32) -> TorusMonoidElt {
        TorusMonoidElt::new(rat(1), rat(1), rat(p as i64), MonoidTag::Minus).unwrap()
    }

    /// diag(1,p,p,p^2).
    pub fn t_klingen(p: u32) -> TorusMonoidElt {
        TorusMonoidElt::new(rat(1), rat(p as i64), rat((p * p) as i64), MonoidTag::Minus).unwrap()
    }

    pub fn matrix(&self) -> QMatrix {
        QMatrix::diag([
            self.t1.clone(),
            self.t2.clone(),
            self.nu.clone() / self.t2.clone(),
            self.nu.clone() / self.t1.clone(),
        ])
    }

    /// Verify the claimed monoid tag against the positive-root valuations
    /// v(t1/t2), v(t1 t2/nu), v(t2^2/nu), v(t1^2/nu).
    pub fn tag_is_consistent(&self, p: u32) -> bool {
        let roots = [
            self.t1.clone() / self.t2.clone(),
            self.t1.clone() * self.t2.clone() / self.nu.clone(),
            self.t2.clone() * self.t2.clone() / self.nu.clone(),
            self.t1.clone() * self.t1.clone() / self.nu.clone(),
        ];
        let vals: Vec<Rat> = roots
            .iter()
            .map(|x| match vp(x, p) {
                Valuation::Finite(v) => v,
                Valuation::Infinity => unreachable!("nonzero parameters"),
            })
            .collect();
        match self.tag {
            MonoidTag::Plus => vals.iter().all(|v| *v >= rat(0)),
            MonoidTag::Minus => vals.iter().all(|v| *v <= rat(0)),
            MonoidTag::General => true,
        }
    }
}

/// Act on a polynomial in the unipotent coordinates (z, a, b): each monomial
/// z^i a^j b^k rescales by lz^i la^j lb^k with the scale factors determined
/// by the conjugation convention.
pub fn monoid_act(
    t: &TorusMonoidElt,
    f: &Poly,
    action: MonoidAction,
    p: u32,
) -> Result<Poly, String> {
    assert_eq!(f.nvars, 3, "expected a polynomial in (z, a, b)");
    if !t.tag_is_consistent(p) {
        return Err("monoid tag inconsistent with the root valuations".into());
    }
    let needed = match action {
        MonoidAction::PlusTwisted => MonoidTag::Plus,
        MonoidAction::MinusDual => MonoidTag::Minus,
    };
    if t.tag != needed {
        return Err(format!("wrong monoid tag: action requires {needed:?}, element is {:?}", t.tag));
    }
    let (lz, la, lb) = match action {
        MonoidAction::PlusTwisted => (
            t.t1.clone() * t.t2.clone() / t.nu.clone(),
            t.t1.clone() / t.t2.clone(),
            t.t1.clone() * t.t1.clone() / t.nu.clone(),
        ),
        MonoidAction::MinusDual => (
            t.nu.clone() / (t.t1.clone() * t.t2.clone()),
            t.t2.clone() / t.t1.clone(),
            t.nu.clone() / (t.t1.clone() * t.t1.clone()),
        ),
    };
    let mut out = Poly::zero(3);
    for (exps, c) in f.terms() {
        let scale = crate::poly::rat_pow(&lz, exps[0] as i64)
            * crate::poly::rat_pow(&la, exps[1] as i64)
            * crate::poly::rat_pow(&lb, exps[2] as i64);
        out = out.add(&Poly::constant(3, c.clone() * scale).mul(&Poly::var_pow(3, 0, exps[0]))
            .mul(&Poly::var_pow(3, 1, exps[1]))
            .mul(&Poly::var_pow(3, 2, exps[2])));
    }
    Ok(out)
}
