//! Distinguished group elements and random sampling helpers.

use crate::exactnum::{rat, ratio, Rat};
use crate::matrix::QMatrix;
use num_traits::Zero;
use rand::Rng;

/// Parameters of the lower-unipotent matrix
/// n(z,a,b) = [[1,0,0,0],[z,1,0,0],[a,0,1,0],[b,a,-z,1]], which closes under
/// multiplication: n(z,a,b) n(z',a',b') = n(z+z', a+a', b+b'+az'-za').
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentPoint {
    pub z: Rat,
    pub a: Rat,
    pub b: Rat,
}

impl UnipotentPoint {
    pub fn new(z: Rat, a: Rat, b: Rat) -> Self {
        UnipotentPoint { z, a, b }
    }

    pub fn from_i64(z: i64, a: i64, b: i64) -> Self {
        UnipotentPoint::new(rat(z), rat(a), rat(b))
    }

    pub fn matrix(&self) -> QMatrix {
        let (z, a, b) = (self.z.clone(), self.a.clone(), self.b.clone());
        QMatrix::from_rows([
            [rat(1), rat(0), rat(0), rat(0)],
            [z.clone(), rat(1), rat(0), rat(0)],
            [a.clone(), rat(0), rat(1), rat(0)],
            [b, a, -z, rat(1)],
        ])
    }

    pub fn mul(&self, o: &UnipotentPoint) -> UnipotentPoint {
        UnipotentPoint::new(
            self.z.clone() + o.z.clone(),
            self.a.clone() + o.a.clone(),
            self.b.clone() + o.b.clone() + self.a.clone() * o.z.clone()
                - self.z.clone() * o.a.clone(),
        )
    }

    pub fn inverse(&self) -> UnipotentPoint {
        UnipotentPoint::new(-self.z.clone(), -self.a.clone(), -self.b.clone())
    }
}

pub fn n_zab(z: i64, a: i64, b: i64) -> QMatrix {
    UnipotentPoint::from_i64(z, a, b).matrix()
}

/// The length-one Weyl representative fixing e1 and e4.
pub fn w1() -> QMatrix {
    QMatrix::from_i64([[1, 0, 0, 0], [0, 0, 1, 0], [0, -1, 0, 0], [0, 0, 0, 1]])
}

/// Open-orbit representative in the Siegel Levi.
pub fn gamma() -> QMatrix {
    QMatrix::from_i64([[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, -1, 1]])
}

/// gamma * w1, the open-orbit representative for the full flag variety.
pub fn gamma_hat() -> QMatrix {
    gamma().mul(&w1())
}

/// The normalisation point J w1^{-1} for highest-weight vectors.
pub fn j_w1_inv() -> QMatrix {
    crate::matrix::form_j().mul(&w1().inverse().unwrap())
}

/// diag(z1, z2, s/z2, s/z1).
pub fn torus(z1: &Rat, z2: &Rat, s: &Rat) -> QMatrix {
    QMatrix::diag([
        z1.clone(),
        z2.clone(),
        s.clone() / z2.clone(),
        s.clone() / z1.clone(),
    ])
}

/// The embedding of a pair of 2x2 matrices with equal determinant: the first
/// factor occupies the outer corners, the second the inner block.
pub fn embed_h(a: &[[Rat; 2]; 2], b: &[[Rat; 2]; 2]) -> QMatrix {
    let z = Rat::zero();
    QMatrix::from_rows([
        [a[0][0].clone(), z.clone(), z.clone(), a[0][1].clone()],
        [z.clone(), b[0][0].clone(), b[0][1].clone(), z.clone()],
        [z.clone(), b[1][0].clone(), b[1][1].clone(), z.clone()],
        [a[1][0].clone(), z.clone(), z.clone(), a[1][1].clone()],
    ])
}

/// The lower-unipotent pair ((1,0;v,1),(1,0;u,1)) embedded in the big group.
pub fn lower_unipotent_h(v: &Rat, u: &Rat) -> QMatrix {
    let one = [[rat(1), rat(0)], [rat(0), rat(1)]];
    let mut outer = one.clone();
    outer[1][0] = v.clone();
    let mut inner = one;
    inner[1][0] = u.clone();
    embed_h(&outer, &inner)
}

fn nonzero_rat(rng: &mut impl Rng) -> Rat {
    loop {
        let x = ratio(rng.gen_range(-6..7), rng.gen_range(1..4));
        if !x.is_zero() {
            return x;
        }
    }
}

fn small_rat(rng: &mut impl Rng) -> Rat {
    ratio(rng.gen_range(-6..7), rng.gen_range(1..4))
}

/// A random element of the standard Borel: torus times the four positive
/// one-parameter root subgroups.
pub fn random_borel_g(rng: &mut impl Rng) -> QMatrix {
    let t = torus(&nonzero_rat(rng), &nonzero_rat(rng), &nonzero_rat(rng));
    let x = small_rat(rng);
    let y = small_rat(rng);
    let u = small_rat(rng);
    let v = small_rat(rng);
    let mut m = QMatrix::identity();
    // I + x (E12 - E34)
    m.0[0][1] = x.clone();
    m.0[2][3] = -x;
    let mut m2 = QMatrix::identity();
    m2.0[1][2] = u; // I + u E23
    let mut m3 = QMatrix::identity();
    m3.0[0][2] = y.clone();
    m3.0[1][3] = y; // I + y (E13 + E24)
    let mut m4 = QMatrix::identity();
    m4.0[0][3] = v; // I + v E14
    t.mul(&m).mul(&m2).mul(&m3).mul(&m4)
}

/// A random point of the big group inside the open cell: n(z,a,b) times a
/// Borel element conjugated by w1.
pub fn random_g_point(rng: &mut impl Rng) -> QMatrix {
    let n = UnipotentPoint::new(small_rat(rng), small_rat(rng), small_rat(rng)).matrix();
    let b = random_borel_g(rng);
    let w = w1();
    n.mul(&w.mul(&b).mul(&w.inverse().unwrap()))
}

/// A random point of the fibre product GL2 x_{det} GL2, embedded.
pub fn random_h_point(rng: &mut impl Rng) -> QMatrix {
    loop {
        let a = [[small_rat(rng), small_rat(rng)], [small_rat(rng), small_rat(rng)]];
        let det = a[0][0].clone() * a[1][1].clone() - a[0][1].clone() * a[1][0].clone();
        if det.is_zero() {
            continue;
        }
        // second factor with matching determinant
        let a2 = nonzero_rat(rng);
        let b2 = small_rat(rng);
        let c2 = small_rat(rng);
        let d2 = (det.clone() + b2.clone() * c2.clone()) / a2.clone();
        return embed_h(&a, &[[a2, b2], [c2, d2]]);
    }
}

/// A random upper-triangular element of the embedded fibre product.
pub fn random_borel_h(rng: &mut impl Rng) -> QMatrix {
    let alpha = nonzero_rat(rng);
    let delta = nonzero_rat(rng);
    let beta = small_rat(rng);
    let det = alpha.clone() * delta.clone();
    let alpha2 = nonzero_rat(rng);
    let beta2 = small_rat(rng);
    let delta2 = det / alpha2.clone();
    embed_h(
        &[[alpha, beta], [Rat::zero(), delta]],
        &[[alpha2, beta2], [Rat::zero(), delta2]],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{in_group, similitude};
    use rand::SeedableRng;

    #[test]
    fn distinguished_elements_are_in_the_group() {
        assert_eq!(similitude(&w1()), Some(rat(1)));
        assert_eq!(similitude(&gamma()), Some(rat(1)));
        assert_eq!(similitude(&gamma_hat()), Some(rat(1)));
        assert_eq!(similitude(&n_zab(2, -3, 5)), Some(rat(1)));
        assert_eq!(similitude(&j_w1_inv()), Some(rat(1)));
    }

    #[test]
    fn unipotent_group_law() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let a = UnipotentPoint::new(small_rat(&mut rng), small_rat(&mut rng), small_rat(&mut rng));
            let b = UnipotentPoint::new(small_rat(&mut rng), small_rat(&mut rng), small_rat(&mut rng));
            assert_eq!(a.mul(&b).matrix(), a.matrix().mul(&b.matrix()));
            assert_eq!(a.mul(&a.inverse()).matrix(), QMatrix::identity());
        }
    }

    #[test]
    fn random_points_are_in_the_group() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            assert!(in_group(&random_g_point(&mut rng)));
            assert!(in_group(&random_h_point(&mut rng)));
            assert!(in_group(&random_borel_h(&mut rng)));
            assert!(in_group(&random_borel_g(&mut rng)));
        }
    }
}
