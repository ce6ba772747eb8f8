use crate::exactnum::{rat, vp, Rat, SqrtExt, Valuation};
use crate::poly::rat_pow;
use crate::weights::WeylElt;
use num_traits::Zero;

/// Unramified Satake parameters (theta1, ..., theta4) subject to the
/// similitude relation theta1 theta4 = theta2 theta3, ordered so that
/// (theta1, theta2) is the pair attached to the Klingen eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatakeGSp4 {
    theta: [Rat; 4],
}

impl SatakeGSp4 {
    pub fn new(theta: [Rat; 4]) -> Result<Self, String> {
        if theta.iter().any(|t| t.is_zero()) {
            return Err("zero Satake parameter".into());
        }
        if theta[0].clone() * theta[3].clone() != theta[1].clone() * theta[2].clone() {
            return Err("similitude relation theta1 theta4 = theta2 theta3 fails".into());
        }
        Ok(SatakeGSp4 { theta })
    }

    pub fn from_i64(t: [i64; 4]) -> Result<Self, String> {
        SatakeGSp4::new([rat(t[0]), rat(t[1]), rat(t[2]), rat(t[3])])
    }

    pub fn theta(&self) -> &[Rat; 4] {
        &self.theta
    }

    /// The ordered pair whose product carries the Klingen eigenvalue.
    pub fn klingen_pair(&self) -> (Rat, Rat) {
        (self.theta[0].clone(), self.theta[1].clone())
    }

    /// Explicit passage from the arithmetic to the unitary normalisation
    /// for a weight-(r1, r2) representation: every parameter scales by the
    /// formal half-power p^{-(r1+r2)/2}.
    pub fn to_unitary(&self, r1: i64, r2: i64, p: u32) -> [SqrtExt; 4] {
        let scale = SqrtExt::sqrt_p_pow(p, -(r1 + r2));
        std::array::from_fn(|i| scale.mul(&SqrtExt::from_rat(p, self.theta[i].clone())))
    }
}

/// GL(2) Satake parameters (inverse roots of the Hecke polynomial at p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatakeGL2 {
    pub gamma1: Rat,
    pub gamma2: Rat,
}

impl SatakeGL2 {
    pub fn new(gamma1: Rat, gamma2: Rat) -> Result<Self, String> {
        if gamma1.is_zero() || gamma2.is_zero() {
            return Err("zero Satake parameter".into());
        }
        Ok(SatakeGL2 { gamma1, gamma2 })
    }

    pub fn from_i64(a: i64, b: i64) -> Result<Self, String> {
        SatakeGL2::new(rat(a), rat(b))
    }

    /// Explicit passage from the arithmetic to the unitary normalisation
    /// for weight 1 + t: both parameters scale by p^{(1+t)/2}.
    pub fn to_unitary(&self, t: i64, p: u32) -> [SqrtExt; 2] {
        let scale = SqrtExt::sqrt_p_pow(p, 1 + t);
        [
            scale.mul(&SqrtExt::from_rat(p, self.gamma1.clone())),
            scale.mul(&SqrtExt::from_rat(p, self.gamma2.clone())),
        ]
    }
}

/// Eigenvalues of the three standard operators at p together with the
/// weight, before or after the optimal normalisation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeEigenData {
    pub u_siegel: Rat,
    pub u_klingen: Rat,
    pub u_borel: Rat,
    pub r1: i64,
    pub r2: i64,
    pub normalized: bool,
}

/// The optimal normalisation: the Siegel eigenvalue is untouched, the
/// Klingen and Borel eigenvalues are divided by p^{r2}.
pub fn hecke_normalize(data: &HeckeEigenData, p: u32) -> HeckeEigenData {
    assert!(!data.normalized, "already normalised");
    let scale = rat_pow(&rat(p as i64), -data.r2);
    HeckeEigenData {
        u_siegel: data.u_siegel.clone(),
        u_klingen: data.u_klingen.clone() * scale.clone(),
        u_borel: data.u_borel.clone() * scale,
        r1: data.r1,
        r2: data.r2,
        normalized: true,
    }
}

impl HeckeEigenData {
    pub fn v_siegel(&self, p: u32) -> Valuation {
        vp(&self.u_siegel, p)
    }

    pub fn v_klingen(&self, p: u32) -> Valuation {
        vp(&self.u_klingen, p)
    }
}

/// An unramified character of the torus over Q_p, recorded by its values on
/// the three cocharacter generators (z1, z2, s) |-> (p,1,1), (1,p,1),
/// (1,1,p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnramifiedTorusChar {
    pub x_a: Rat,
    pub x_b: Rat,
    pub x_c: Rat,
}

impl UnramifiedTorusChar {
    pub fn new(x_a: Rat, x_b: Rat, x_c: Rat) -> Result<Self, String> {
        if x_a.is_zero() || x_b.is_zero() || x_c.is_zero() {
            return Err("character values must be nonzero".into());
        }
        Ok(UnramifiedTorusChar { x_a, x_b, x_c })
    }

    /// Value at the torus element with (z1, z2, s)-exponents (a, b, c).
    pub fn value(&self, a: i64, b: i64, c: i64) -> Rat {
        rat_pow(&self.x_a, a) * rat_pow(&self.x_b, b) * rat_pow(&self.x_c, c)
    }

    /// The twist by a Weyl element: (w . theta)(t) = theta(w^{-1} t w),
    /// computed by conjugating the exponent triple.
    pub fn weyl_twist_exponents(w: WeylElt, exps: (i64, i64, i64), p: u32) -> (i64, i64, i64) {
        let pr = rat(p as i64);
        let t = crate::repmodel::torus(
            &rat_pow(&pr, exps.0),
            &rat_pow(&pr, exps.1),
            &rat_pow(&pr, exps.2),
        );
        let m = w.matrix();
        let conj = m.inverse().unwrap().mul(&t).mul(&m);
        let v = |x: &Rat| -> i64 {
            match vp(x, p) {
                Valuation::Finite(k) => i64::try_from(k.to_integer()).unwrap(),
                Valuation::Infinity => unreachable!(),
            }
        };
        let z1 = v(&conj.0[0][0]);
        let z2 = v(&conj.0[1][1]);
        let s = v(&(conj.0[0][0].clone() * conj.0[3][3].clone()));
        (z1, z2, s)
    }
}

/// The semisimplified eigensystem: eight characters on the dominant torus
/// monoid, each recorded by its values (in the quadratic extension that
/// houses the square root of p) on the Siegel, Klingen and central
/// generators, with the pairwise-distinctness flag.
#[derive(Clone, Debug)]
pub struct SsEigensystem {
    pub entries: Vec<(WeylElt, [SqrtExt; 3])>,
    pub p_regular: bool,
}

/// The eight summands delta_B^{-1/2} (w . theta) of the semisimplified
/// Iwahori-invariants module, evaluated on the generators
/// diag(p,p,1,1), diag(p^2,p,p,1) and p*id. The modulus character is
/// |t1|^4 |t2|^2 |s|^{-3}, whose inverse square root contributes
/// half-integral powers of p.
pub fn ss_eigensystem(theta: &UnramifiedTorusChar, p: u32) -> SsEigensystem {
    // generator exponents in (z1, z2, s) coordinates
    let generators = [(1i64, 1i64, 1i64), (2, 1, 2), (1, 1, 2)];
    let mut entries = Vec::new();
    for w in crate::weights::weyl_all() {
        let mut vals = Vec::new();
        for &(a, b, c) in &generators {
            // delta_B(t)^{-1/2} = p^{(4 v(t1) + 2 v(t2) - 3 v(s))/2} with
            // t1-exponent a, t2-exponent b, s-exponent c
            let half_exp = 4 * a + 2 * b - 3 * c;
            let delta = SqrtExt::sqrt_p_pow(p, half_exp);
            let (ta, tb, tc) = UnramifiedTorusChar::weyl_twist_exponents(w, (a, b, c), p);
            let theta_val = theta.value(ta, tb, tc);
            vals.push(delta.mul(&SqrtExt::from_rat(p, theta_val)));
        }
        entries.push((w, [vals[0].clone(), vals[1].clone(), vals[2].clone()]));
    }
    let mut p_regular = true;
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            if entries[i].1 == entries[j].1 {
                p_regular = false;
            }
        }
    }
    SsEigensystem { entries, p_regular }
}
