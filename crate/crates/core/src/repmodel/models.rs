//! Function models: representations realised as polynomial functions of the
//! sixteen matrix entries, twisted by a power of the similitude factor.
//!
//! A vector of weight lambda transforms on the right by the model's twisted
//! character under the relevant Borel. Highest-weight vectors are normalised
//! to take the value 1 at J w1^{-1} (big group) or at the longest-Weyl
//! representative of the subgroup.

use super::group::j_w1_inv;
use crate::exactnum::{rat, Rat};
use crate::matrix::{form_j, similitude, QMatrix};
use crate::poly::{rat_pow, Poly};
use crate::weights::{weyl_act, Weight, WeylElt};
use num_traits::Zero;

pub const NVARS: usize = 16;

pub(crate) fn xvar(i: usize, j: usize) -> Poly {
    Poly::var(NVARS, 4 * i + j)
}

/// Which group the polynomial is a function on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelTag {
    /// The full similitude group.
    G,
    /// GL2 x_det GL2, embedded with the first factor on the outer corners.
    H,
    /// The Siegel Levi (block diagonal).
    MG,
    /// The diagonal torus.
    MH,
    /// A single GL2, read off the outer corners; the similitude symbol
    /// denotes its determinant.
    GL2,
}

/// A polynomial in the matrix entries times an integer power of the
/// similitude factor, tagged with the model it lives in and (when known)
/// its weight.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyVector {
    pub model: ModelTag,
    pub poly: Poly,
    pub s_exp: i64,
    pub weight: Option<Weight>,
}

impl PolyVector {
    pub fn new(model: ModelTag, poly: Poly, s_exp: i64, weight: Option<Weight>) -> Self {
        assert_eq!(poly.nvars, NVARS);
        PolyVector { model, poly, s_exp, weight }
    }

    pub fn constant(model: ModelTag, c: Rat) -> Self {
        PolyVector::new(model, Poly::constant(NVARS, c), 0, Some(Weight::zero()))
    }

    /// Exact evaluation at a 4x4 group element.
    pub fn eval(&self, g: &QMatrix) -> Rat {
        assert!(self.model != ModelTag::GL2, "use eval_gl2 for the 2x2 model");
        let point: Vec<Rat> = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .map(|(i, j)| g.0[i][j].clone())
            .collect();
        let base = self.poly.eval(&point);
        if self.s_exp == 0 {
            base
        } else {
            let s = similitude(g).expect("evaluation point not in the group");
            base * rat_pow(&s, self.s_exp)
        }
    }

    /// Evaluation for the 2x2 model: entries placed on the outer corners,
    /// similitude symbol read as the determinant.
    pub fn eval_gl2(&self, m: &[[Rat; 2]; 2]) -> Rat {
        assert_eq!(self.model, ModelTag::GL2);
        let mut point = vec![Rat::zero(); NVARS];
        point[0] = m[0][0].clone();
        point[3] = m[0][1].clone();
        point[12] = m[1][0].clone();
        point[15] = m[1][1].clone();
        let det = m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone();
        self.poly.eval(&point) * rat_pow(&det, self.s_exp)
    }

    pub fn scale(&self, c: &Rat) -> PolyVector {
        PolyVector { poly: self.poly.scale(c), ..self.clone() }
    }

    /// Left translate: (by . f)(x) = f(by^{-1} x), computed by substituting
    /// the entries of by^{-1} x into the variables.
    pub fn left_translate(&self, by: &QMatrix) -> PolyVector {
        let m = by.inverse().expect("translation by a singular matrix");
        let forms: Vec<Poly> = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .map(|(i, j)| {
                let mut acc = Poly::zero(NVARS);
                for k in 0..4 {
                    if !m.0[i][k].is_zero() {
                        acc = acc.add(&xvar(k, j).scale(&m.0[i][k]));
                    }
                }
                acc
            })
            .collect();
        // s(by^{-1} x) = s(by)^{-1} s(x): fold the constant into the poly
        let s_adjust = similitude(by).expect("translation element not in the group");
        let scale = rat_pow(&s_adjust, -self.s_exp);
        PolyVector {
            model: self.model,
            poly: self.poly.subst(&forms).scale(&scale),
            s_exp: self.s_exp,
            weight: self.weight.clone(),
        }
    }

    /// The right-transformation character of the model at weight lambda.
    pub fn law_character(model: ModelTag, lambda: &Weight) -> Weight {
        match model {
            ModelTag::G => weyl_act(WeylElt::S1, &weyl_act(WeylElt::WMax, lambda)),
            // longest element of the product group negates both entries
            ModelTag::H => Weight::new(
                -lambda.r1.clone(),
                -lambda.r2.clone(),
                lambda.c.clone() + lambda.r1.clone() + lambda.r2.clone(),
            ),
            ModelTag::MG => weyl_act(WeylElt::S2, lambda),
            ModelTag::MH => lambda.clone(),
            // (r; c) |-> (-r; c + r), with the GL2 pair packed as (r, 0; c)
            ModelTag::GL2 => Weight::new(
                -lambda.r1.clone(),
                Rat::zero(),
                lambda.c.clone() + lambda.r1.clone(),
            ),
        }
    }
}

/// An element of the similitude Lie algebra: X^t J + J X = c J.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElt {
    pub m: QMatrix,
    pub similitude_scalar: Rat,
}

fn mat_add(a: &QMatrix, b: &QMatrix) -> QMatrix {
    QMatrix(std::array::from_fn(|i| {
        std::array::from_fn(|j| a.0[i][j].clone() + b.0[i][j].clone())
    }))
}

impl LieElt {
    pub fn new(m: QMatrix) -> Result<LieElt, String> {
        let j = form_j();
        let lhs = mat_add(&m.transpose().mul(&j), &j.mul(&m));
        let c = lhs.0[0][3].clone();
        if lhs.sub(&j.scale(&c)).is_zero() {
            Ok(LieElt { m, similitude_scalar: c })
        } else {
            Err("matrix is not in the similitude Lie algebra".into())
        }
    }

    pub fn from_i64(rows: [[i64; 4]; 4]) -> LieElt {
        LieElt::new(QMatrix::from_i64(rows)).expect("not a Lie algebra element")
    }

    /// The short-root lowering element with entries at (2,1) and -(4,3).
    pub fn x21() -> LieElt {
        LieElt::from_i64([[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, -1, 0]])
    }

    /// The lowering element with entries at (3,1) and (4,2).
    pub fn z_lower() -> LieElt {
        LieElt::from_i64([[0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0]])
    }

    /// The root character of an adjoint torus eigenvector, if the nonzero
    /// entries all transform by the same character.
    pub fn root_weight(&self) -> Option<Weight> {
        let coords: [[i64; 3]; 4] = [[1, 0, 0], [0, 1, 0], [0, -1, 1], [-1, 0, 1]];
        let mut found: Option<[i64; 3]> = None;
        for i in 0..4 {
            for j in 0..4 {
                if self.m.0[i][j].is_zero() {
                    continue;
                }
                let e = [
                    coords[i][0] - coords[j][0],
                    coords[i][1] - coords[j][1],
                    coords[i][2] - coords[j][2],
                ];
                match &found {
                    None => found = Some(e),
                    Some(f) if *f == e => {}
                    Some(_) => return None,
                }
            }
        }
        found.map(|e| Weight::int(e[0], e[1], e[2]))
    }
}

/// Derivative of left translation: (X * f)(g) = d/dt f(exp(-tX) g) at t = 0.
///
/// On the polynomial part this is the directional derivative along
/// x_{ij} |-> -(X x)_{ij}; an s-exponent k contributes -k c_X f.
pub fn lie_act(x: &LieElt, f: &PolyVector) -> PolyVector {
    let mut deriv = Poly::zero(NVARS);
    for i in 0..4 {
        for j in 0..4 {
            let pd = f.poly.partial(4 * i + j);
            if pd.is_zero() {
                continue;
            }
            let mut dir = Poly::zero(NVARS);
            for k in 0..4 {
                if !x.m.0[i][k].is_zero() {
                    dir = dir.add(&xvar(k, j).scale(&x.m.0[i][k]));
                }
            }
            deriv = deriv.add(&pd.mul(&dir.neg()));
        }
    }
    if !x.similitude_scalar.is_zero() && f.s_exp != 0 {
        let c = -x.similitude_scalar.clone() * rat(f.s_exp);
        deriv = deriv.add(&f.poly.scale(&c));
    }
    let weight = match (&f.weight, x.root_weight()) {
        (Some(w), Some(r)) => Some(w.add(&r)),
        _ => None,
    };
    PolyVector { model: f.model, poly: deriv, s_exp: f.s_exp, weight }
}

/// Cartan product: the plain product of model functions; weights add.
pub fn cartan_product(f: &PolyVector, g: &PolyVector) -> Result<PolyVector, String> {
    if f.model != g.model {
        return Err("Cartan product across different models".into());
    }
    let weight = match (&f.weight, &g.weight) {
        (Some(a), Some(b)) => Some(a.add(b)),
        _ => None,
    };
    Ok(PolyVector {
        model: f.model,
        poly: f.poly.mul(&g.poly),
        s_exp: f.s_exp + g.s_exp,
        weight,
    })
}

fn as_int(x: &Rat) -> Result<i64, String> {
    if x.is_integer() {
        i64::try_from(x.to_integer()).map_err(|_| "weight too large".to_string())
    } else {
        Err(format!("non-integral weight coordinate {x}"))
    }
}

/// Highest-weight vector of the model at a dominant weight.
///
/// For the big group the fundamental polynomials are the corner entry -x41
/// and the rows-(3,4), columns-(1,3) minor; general weights are their Cartan
/// products with a similitude twist, normalised to 1 at J w1^{-1}. The pair
/// model takes the displayed closed form, equal to 1 at the embedded
/// longest-Weyl representative.
pub fn hw_vector(model: ModelTag, lambda: &Weight) -> Result<PolyVector, String> {
    match model {
        ModelTag::G => {
            let l1 = as_int(&lambda.r1)?;
            let l2 = as_int(&lambda.r2)?;
            let c = as_int(&lambda.c)?;
            if !(l1 >= l2 && l2 >= 0) {
                return Err(format!("non-dominant weight {lambda}"));
            }
            let v1 = xvar(3, 0).neg();
            let v2 = xvar(2, 0).mul(&xvar(3, 2)).sub(&xvar(2, 2).mul(&xvar(3, 0)));
            let poly = v1.pow((l1 - l2) as u32).mul(&v2.pow(l2 as u32));
            let pv = PolyVector::new(model, poly, -(c + l1 + l2), Some(lambda.clone()));
            debug_assert_eq!(pv.eval(&j_w1_inv()), rat(1));
            Ok(pv)
        }
        ModelTag::H => {
            let l1 = as_int(&lambda.r1)?;
            let l2 = as_int(&lambda.r2)?;
            let c = as_int(&lambda.c)?;
            if l1 < 0 || l2 < 0 {
                return Err(format!("non-dominant weight {lambda}"));
            }
            let sign = if (l1 + l2) % 2 == 0 { rat(1) } else { rat(-1) };
            let poly = xvar(3, 0).pow(l1 as u32).mul(&xvar(2, 1).pow(l2 as u32)).scale(&sign);
            Ok(PolyVector::new(model, poly, -(c + l1 + l2), Some(lambda.clone())))
        }
        ModelTag::MG => {
            let a = as_int(&lambda.r1)?;
            let b = as_int(&lambda.r2)?;
            let c = as_int(&lambda.c)?;
            if a < b {
                return Err(format!("non-dominant Levi weight {lambda}"));
            }
            // the lower-block determinant equals s^2 / det(upper block), so
            // negative powers of it trade for upper-block determinants
            let da = xvar(0, 0).mul(&xvar(1, 1)).sub(&xvar(0, 1).mul(&xvar(1, 0)));
            let d2 = xvar(2, 2).mul(&xvar(3, 3)).sub(&xvar(2, 3).mul(&xvar(3, 2)));
            let sign = if b.rem_euclid(2) == 0 { rat(1) } else { rat(-1) };
            let (det_part, s_exp) = if b >= 0 {
                (d2.pow(b as u32), -(a + b + c))
            } else {
                (da.pow((-b) as u32), -(a - b + c))
            };
            let poly = xvar(3, 2).pow((a - b) as u32).mul(&det_part).scale(&sign);
            Ok(PolyVector::new(model, poly, s_exp, Some(lambda.clone())))
        }
        ModelTag::MH => {
            // functions on the torus: the model line at weight lambda is
            // spanned by the monomial of lambda^{-1}, value 1 at the identity
            let a = as_int(&lambda.r1)?;
            let b = as_int(&lambda.r2)?;
            let c = as_int(&lambda.c)?;
            let poly = Poly::var_pow(NVARS, 0, (-(a + c)) as i32)
                .mul(&Poly::var_pow(NVARS, 5, (-b) as i32))
                .mul(&Poly::var_pow(NVARS, 15, (-c) as i32));
            Ok(PolyVector::new(model, poly, 0, Some(lambda.clone())))
        }
        ModelTag::GL2 => {
            let r = as_int(&lambda.r1)?;
            let c = as_int(&lambda.c)?;
            if r < 0 {
                return Err(format!("non-dominant weight {lambda}"));
            }
            let sign = if r % 2 == 0 { rat(1) } else { rat(-1) };
            let poly = xvar(3, 0).pow(r as u32).scale(&sign);
            Ok(PolyVector::new(model, poly, -(c + r), Some(lambda.clone())))
        }
    }
}

/// Weyl dimension formula for each model.
pub fn dim(model: ModelTag, lambda: &Weight) -> Result<Rat, String> {
    let (r1, r2) = (lambda.r1.clone(), lambda.r2.clone());
    match model {
        ModelTag::G => {
            if !lambda.is_dominant() {
                return Err(format!("non-dominant weight {lambda}"));
            }
            Ok((r1.clone() - r2.clone() + rat(1))
                * (r2.clone() + rat(1))
                * (r1.clone() + rat(2))
                * (r1 + r2 + rat(3))
                / rat(6))
        }
        ModelTag::H => Ok((r1 + rat(1)) * (r2 + rat(1))),
        ModelTag::MG => Ok(r1 - r2 + rat(1)),
        ModelTag::MH => Ok(rat(1)),
        ModelTag::GL2 => Ok(r1 + rat(1)),
    }
}

/// Law check: f(g b) = chi(b^{-1}) f(g) on sampled group points and Borel
/// elements of the model.
pub fn check_law(
    f: &PolyVector,
    lambda: &Weight,
    rng: &mut impl rand::Rng,
    samples: usize,
) -> bool {
    use super::group::*;
    let chi = PolyVector::law_character(f.model, lambda);
    for _ in 0..samples {
        let (g, b) = match f.model {
            ModelTag::G => {
                let w = w1();
                let b = w.mul(&random_borel_g(rng)).mul(&w.inverse().unwrap());
                (random_g_point(rng), b)
            }
            ModelTag::H => (random_h_point(rng), random_borel_h(rng)),
            ModelTag::MG => (random_mg_point(rng), random_borel_mg(rng)),
            ModelTag::MH | ModelTag::GL2 => {
                unimplemented!("law sampling wired for the 4x4 models")
            }
        };
        let lhs = f.eval(&g.mul(&b));
        let d1 = b.0[0][0].clone();
        let d2 = b.0[1][1].clone();
        let s = d1.clone() * b.0[3][3].clone();
        let rhs = f.eval(&g) / chi.eval(&d1, &d2, &s);
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Random block-diagonal Levi point: upper block A, lower block s K A^{-t} K.
pub fn random_mg_point(rng: &mut impl rand::Rng) -> QMatrix {
    loop {
        let a = [
            [rnd(rng), rnd(rng)],
            [rnd(rng), rnd(rng)],
        ];
        let det = a[0][0].clone() * a[1][1].clone() - a[0][1].clone() * a[1][0].clone();
        if det.is_zero() {
            continue;
        }
        let s = rnd_nonzero(rng);
        return levi_from_block(&a, &det, &s);
    }
}

/// Random upper-triangular Levi element.
pub fn random_borel_mg(rng: &mut impl rand::Rng) -> QMatrix {
    let a = [[rnd_nonzero(rng), rnd(rng)], [Rat::zero(), rnd_nonzero(rng)]];
    let det = a[0][0].clone() * a[1][1].clone();
    let s = rnd_nonzero(rng);
    levi_from_block(&a, &det, &s)
}

fn levi_from_block(a: &[[Rat; 2]; 2], det: &Rat, s: &Rat) -> QMatrix {
    // lower block (s/det) [[a11, -a12], [-a21, a22]]
    let f = s.clone() / det.clone();
    let z = Rat::zero();
    QMatrix::from_rows([
        [a[0][0].clone(), a[0][1].clone(), z.clone(), z.clone()],
        [a[1][0].clone(), a[1][1].clone(), z.clone(), z.clone()],
        [z.clone(), z.clone(), f.clone() * a[0][0].clone(), -f.clone() * a[0][1].clone()],
        [z.clone(), z.clone(), -f.clone() * a[1][0].clone(), f * a[1][1].clone()],
    ])
}

fn rnd(rng: &mut impl rand::Rng) -> Rat {
    crate::exactnum::ratio(rng.gen_range(-6..7), rng.gen_range(1..4))
}

fn rnd_nonzero(rng: &mut impl rand::Rng) -> Rat {
    loop {
        let x = rnd(rng);
        if !x.is_zero() {
            return x;
        }
    }
}
