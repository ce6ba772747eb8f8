use super::satake::{SatakeGL2, SatakeGSp4};
use crate::exactnum::{Rat, Scalar};

/// A local Euler polynomial in X = ell^{-s}, exact coefficients, constant
/// term 1.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerPoly {
    pub coeffs: Vec<Scalar>,
}

impl EulerPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            let cf = scalar_to_f64(c);
            acc = acc * x + cf;
        }
        acc
    }
}

fn scalar_to_f64(s: &Scalar) -> f64 {
    let r = s.as_rat().expect("numeric evaluation needs rational coefficients");
    rat_to_f64(&r)
}

pub(crate) fn rat_to_f64(r: &Rat) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap();
    let d: f64 = r.denom().to_string().parse().unwrap();
    n / d
}

/// The degree-8 local factor of the product of the four-dimensional spin
/// parameters with a GL(2) pair: prod over i, j of
/// (1 - chi(ell) theta_i gamma_j X).
pub fn spin_std_euler(
    theta: &SatakeGSp4,
    gamma: &SatakeGL2,
    chi_ell: &Scalar,
) -> EulerPoly {
    let mut coeffs = vec![Scalar::int(1)];
    let gammas = [gamma.gamma1.clone(), gamma.gamma2.clone()];
    for t in theta.theta() {
        for g in &gammas {
            let root = chi_ell.mul(&Scalar::Rat(t.clone() * g.clone()));
            // multiply by (1 - root X)
            let mut next = vec![Scalar::zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k] = next[k].add(c);
                next[k + 1] = next[k + 1].sub(&root.mul(c));
            }
            coeffs = next;
        }
    }
    EulerPoly { coeffs }
}

/// Per-prime Euler data for a truncated product: the Satake parameters and
/// the (rational) character value at that prime.
#[derive(Clone, Debug)]
pub struct PrimeEulerData {
    pub ell: u64,
    pub theta: SatakeGSp4,
    pub gamma: SatakeGL2,
    pub chi_value: Rat,
}

/// Truncated Euler product: the product over the listed primes ell <= bound
/// of 1 / P_ell(ell^{-s}), in double precision.
pub fn partial_l(data: &[PrimeEulerData], bound: u64, s: f64) -> f64 {
    let mut acc = 1.0;
    for d in data {
        if d.ell > bound {
            continue;
        }
        let poly = spin_std_euler(&d.theta, &d.gamma, &Scalar::Rat(d.chi_value.clone()));
        let x = (d.ell as f64).powf(-s);
        acc /= poly.eval_f64(x);
    }
    acc
}
