//! The conjugation and commutation identities behind the unipotent
//! factorization and the equivariance of the branching maps, verified both
//! symbolically (entrywise zero after subtraction in the Laurent ring) and
//! on random rational samples.

use super::group::{gamma, lower_unipotent_h};
use crate::exactnum::{ratio, Rat};
use crate::matrix::{PMatrix, QMatrix};
use crate::poly::Poly;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub torus_conjugation_symbolic: bool,
    pub shift_conjugation_symbolic: bool,
    pub commutation_symbolic: bool,
    pub samples_checked: usize,
    pub samples_failed: usize,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.torus_conjugation_symbolic
            && self.shift_conjugation_symbolic
            && self.commutation_symbolic
            && self.samples_failed == 0
    }
}

// variable order for the symbolic ring: z, a, b, t1, t2, nu, u, v, c
const NV: usize = 9;
const Z: usize = 0;
const A: usize = 1;
const B: usize = 2;
const T1: usize = 3;
const T2: usize = 4;
const NU: usize = 5;
const U: usize = 6;
const V: usize = 7;
const C: usize = 8;

fn v(i: usize) -> Poly {
    Poly::var(NV, i)
}

fn vp_inv(i: usize) -> Poly {
    Poly::var_pow(NV, i, -1)
}

fn sym_n(z: &Poly, a: &Poly, b: &Poly) -> PMatrix {
    let one = Poly::one(NV);
    let zero = Poly::zero(NV);
    PMatrix {
        nvars: NV,
        entries: vec![
            one.clone(), zero.clone(), zero.clone(), zero.clone(),
            z.clone(), one.clone(), zero.clone(), zero.clone(),
            a.clone(), zero.clone(), one.clone(), zero.clone(),
            b.clone(), a.clone(), z.neg(), one,
        ],
    }
}

fn sym_diag(d: [Poly; 4]) -> PMatrix {
    let zero = Poly::zero(NV);
    let mut entries = vec![zero; 16];
    for (i, x) in d.into_iter().enumerate() {
        entries[i * 4 + i] = x;
    }
    PMatrix { nvars: NV, entries }
}

/// Symbolic torus conjugation: with h = diag(t1, t2, nu/t2, nu/t1),
/// gamma^{-1} h^{-1} gamma n(z,a,b) factors as n(z', a', b') times
/// diag(1/t1, 1/t2, t2/nu, t1/nu), where z' = (t1/t2)(1+z) - 1,
/// a' = (t1 t2 / nu) a, b' = (t1 t2 / nu) a + (t1^2/nu)(b - a).
fn torus_conjugation_identity() -> bool {
    let g = PMatrix::from_q(NV, &gamma());
    let ginv = PMatrix::from_q(NV, &gamma().inverse().unwrap());
    let hinv = sym_diag([
        vp_inv(T1),
        vp_inv(T2),
        v(T2).mul(&vp_inv(NU)),
        v(T1).mul(&vp_inv(NU)),
    ]);
    let n = sym_n(&v(Z), &v(A), &v(B));
    let lhs = ginv.mul(&hinv).mul(&g).mul(&n);

    let one = Poly::one(NV);
    let zp = v(T1).mul(&vp_inv(T2)).mul(&one.add(&v(Z))).sub(&one);
    let ap = v(T1).mul(&v(T2)).mul(&vp_inv(NU)).mul(&v(A));
    let bp = ap.add(&v(T1).pow(2).mul(&vp_inv(NU)).mul(&v(B).sub(&v(A))));
    let d = sym_diag([
        vp_inv(T1),
        vp_inv(T2),
        v(T2).mul(&vp_inv(NU)),
        v(T1).mul(&vp_inv(NU)),
    ]);
    let rhs = sym_n(&zp, &ap, &bp).mul(&d);
    lhs.sub(&rhs).is_zero()
}

/// Symbolic lower-unipotent conjugation: with h the embedded pair
/// ((1,0;v,1),(1,0;u,1)),
/// gamma^{-1} h^{-1} gamma n(z,a,b) = n(z, a - u(1+z), b - v - u(1+z)) C
/// where C differs from the identity only by -u at entry (3,2).
fn shift_conjugation_identity() -> bool {
    let g = PMatrix::from_q(NV, &gamma());
    let ginv = PMatrix::from_q(NV, &gamma().inverse().unwrap());
    // h^{-1} is the same shape with negated parameters
    let hinv = {
        let mut m = PMatrix::identity(NV);
        m.entries[2 * 4 + 1] = v(U).neg();
        m.entries[3 * 4] = v(V).neg();
        m
    };
    let n = sym_n(&v(Z), &v(A), &v(B));
    let lhs = ginv.mul(&hinv).mul(&g).mul(&n);

    let one = Poly::one(NV);
    let shift = v(U).mul(&one.add(&v(Z)));
    let rhs_n = sym_n(&v(Z), &v(A).sub(&shift), &v(B).sub(&v(V)).sub(&shift));
    let mut c = PMatrix::identity(NV);
    c.entries[2 * 4 + 1] = v(U).neg();
    lhs.sub(&rhs_n.mul(&c)).is_zero()
}

/// Symbolic commutation of the middle unipotent with the z-coordinate:
/// (I + c E32) n(z,0,0) = n(z, cz, 0) (I + c E32).
fn commutation_identity() -> bool {
    let zero = Poly::zero(NV);
    let mut cmat = PMatrix::identity(NV);
    cmat.entries[2 * 4 + 1] = v(C);
    let zmat = sym_n(&v(Z), &zero, &zero);
    let lhs = cmat.mul(&zmat);
    let rhs = sym_n(&v(Z), &v(C).mul(&v(Z)), &zero).mul(&cmat);
    lhs.sub(&rhs).is_zero()
}

/// Run all three identity checks symbolically, then re-check each at
/// `samples` random rational parameter tuples.
pub fn verify_matrix_identities(seed: u64, samples: usize) -> IdentityReport {
    let torus_conjugation_symbolic = torus_conjugation_identity();
    let shift_conjugation_symbolic = shift_conjugation_identity();
    let commutation_symbolic = commutation_identity();

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut failed = 0usize;
    let mut checked = 0usize;
    for _ in 0..samples {
        let mut nz = || loop {
            let x = ratio(rng.gen_range(-6..7), rng.gen_range(1..4));
            if !x.is_zero() {
                return x;
            }
        };
        let (t1, t2, nu) = (nz(), nz(), nz());
        let mut any = || ratio(rng.gen_range(-6..7), rng.gen_range(1..4));
        let (z, a, b, u, vv, c) = (any(), any(), any(), any(), any(), any());

        // torus conjugation at the sampled point
        let h = QMatrix::diag([
            t1.clone(),
            t2.clone(),
            nu.clone() / t2.clone(),
            nu.clone() / t1.clone(),
        ]);
        let n = super::group::UnipotentPoint::new(z.clone(), a.clone(), b.clone()).matrix();
        let g = gamma();
        let lhs =
            g.inverse().unwrap().mul(&h.inverse().unwrap()).mul(&g).mul(&n);
        let one = Rat::one();
        let zp = t1.clone() / t2.clone() * (one.clone() + z.clone()) - one.clone();
        let ap = t1.clone() * t2.clone() / nu.clone() * a.clone();
        let bp = ap.clone() + t1.clone() * t1.clone() / nu.clone() * (b.clone() - a.clone());
        let d = QMatrix::diag([
            one.clone() / t1.clone(),
            one.clone() / t2.clone(),
            t2.clone() / nu.clone(),
            t1.clone() / nu.clone(),
        ]);
        let rhs = super::group::UnipotentPoint::new(zp, ap, bp).matrix().mul(&d);
        checked += 1;
        if !lhs.sub(&rhs).is_zero() {
            failed += 1;
        }

        // shift conjugation at the sampled point
        let hh = lower_unipotent_h(&vv, &u);
        let lhs = g.inverse().unwrap().mul(&hh.inverse().unwrap()).mul(&g).mul(&n);
        let shift = u.clone() * (one.clone() + z.clone());
        let rhs_n = super::group::UnipotentPoint::new(
            z.clone(),
            a.clone() - shift.clone(),
            b.clone() - vv.clone() - shift,
        )
        .matrix();
        let mut cm = QMatrix::identity();
        cm.0[2][1] = -u.clone();
        checked += 1;
        if !lhs.sub(&rhs_n.mul(&cm)).is_zero() {
            failed += 1;
        }

        // commutation at the sampled point
        let mut cmat = QMatrix::identity();
        cmat.0[2][1] = c.clone();
        let zmat = super::group::UnipotentPoint::new(z.clone(), Rat::zero(), Rat::zero()).matrix();
        let lhs = cmat.mul(&zmat);
        let rhs = super::group::UnipotentPoint::new(z.clone(), c.clone() * z.clone(), Rat::zero())
            .matrix()
            .mul(&cmat);
        checked += 1;
        if !lhs.sub(&rhs).is_zero() {
            failed += 1;
        }
    }

    IdentityReport {
        torus_conjugation_symbolic,
        shift_conjugation_symbolic,
        commutation_symbolic,
        samples_checked: checked,
        samples_failed: failed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        let report = verify_matrix_identities(7, 100);
        assert!(report.torus_conjugation_symbolic);
        assert!(report.shift_conjugation_symbolic);
        assert!(report.commutation_symbolic);
        assert_eq!(report.samples_failed, 0);
        assert_eq!(report.samples_checked, 300);
        assert!(report.all_hold());
    }

    #[test]
    fn anchor_points() {
        // torus identity at (t1,t2,nu,z,a,b) = (2,3,6,1,1,1): both sides
        // agree entrywise; commutation at (c,z) = (1,1)
        let h = QMatrix::diag([
            ratio(2, 1),
            ratio(3, 1),
            ratio(2, 1), // 6/3
            ratio(3, 1), // 6/2
        ]);
        let n = super::super::group::n_zab(1, 1, 1);
        let g = gamma();
        let lhs = g.inverse().unwrap().mul(&h.inverse().unwrap()).mul(&g).mul(&n);
        // z' = (2/3)(2) - 1 = 1/3, a' = 1, b' = 1 + (4/6)(0) = 1
        let rhs = super::super::group::UnipotentPoint::new(ratio(1, 3), ratio(1, 1), ratio(1, 1))
            .matrix()
            .mul(&QMatrix::diag([ratio(1, 2), ratio(1, 3), ratio(1, 2), ratio(1, 3)]));
        assert!(lhs.sub(&rhs).is_zero());

        let mut cmat = QMatrix::identity();
        cmat.0[2][1] = ratio(1, 1);
        let lhs = cmat.mul(&super::super::group::n_zab(1, 0, 0));
        let rhs = super::super::group::n_zab(1, 1, 0).mul(&cmat);
        assert!(lhs.sub(&rhs).is_zero());

        // h = identity acts as the identity map on unipotent coordinates
        let e = lower_unipotent_h(&Rat::zero(), &Rat::zero());
        assert_eq!(e, QMatrix::identity());
    }
}
