use super::archimedean::linf;
use super::epfactor::{ep_modifier_a, ep_modifier_b};
use super::euler::{partial_l, PrimeEulerData};
use super::satake::{SatakeGL2, SatakeGSp4};
use crate::exactnum::{DirichletChar, Rat, Scalar, SqrtExt};

/// The interpolation region for the 8-dimensional product, in the shifted
/// variable: 0 <= t2 <= r1 - r2 and 0 <= j <= r1 - r2 - t2.
pub fn region_f_a(r1: i64, r2: i64, t2: i64, j: i64) -> bool {
    assert!(r1 >= r2 && r2 >= 0, "dominant weight required");
    (0..=r1 - r2).contains(&t2) && (0..=r1 - r2 - t2).contains(&j)
}

/// The interpolation region for the triple product:
/// 0 <= d2 <= r1 - r2 and 0 <= d1 <= r1 - r2 - d2.
pub fn region_f_b(r1: i64, r2: i64, d1: i64, d2: i64) -> bool {
    assert!(r1 >= r2 && r2 >= 0, "dominant weight required");
    (0..=r1 - r2).contains(&d2) && (0..=r1 - r2 - d2).contains(&d1)
}

/// Minimal level depth admitting a conductor-p^c twist:
/// max(2 max(1,c), max(1,c) + 1).
pub fn beta_bound(c: u32) -> u32 {
    crate::zeta::min_beta(c)
}

/// An assembled right-hand side of the 8-dimensional interpolation formula:
/// the exact modified factor at p evaluated at the absolute critical
/// position, a truncated Euler-product surrogate for the completed value
/// away from p, the caller-supplied local-integral ratio, and the period
/// kept as an opaque unit symbol. The assembled value factors as
/// (z_s * ep) times the truncation over the symbolic period.
#[derive(Clone, Debug)]
pub struct InterpRecordA {
    pub ep: Scalar,
    pub lambda_truncation: f64,
    pub z_s: Rat,
    pub omega: String,
    pub exact_part: Scalar,
    pub numeric_over_omega: Option<f64>,
    pub weight: (i64, i64, i64),
    pub j_shifted: i64,
    pub j_absolute: i64,
    pub chi_conductor_exp: u32,
}

pub struct InterpInputsA<'a> {
    pub theta: &'a SatakeGSp4,
    pub mu: &'a SatakeGL2,
    pub chi: &'a DirichletChar,
    pub r1: i64,
    pub r2: i64,
    pub t2: i64,
    /// The shifted variable, 0 <= j <= r1 - r2 - t2 inside the region.
    pub j: i64,
    pub p: u32,
    pub z_s: Rat,
    pub euler_data: &'a [PrimeEulerData],
    pub truncation_bound: u64,
}

pub fn interp_rhs_a(inp: &InterpInputsA) -> Result<InterpRecordA, String> {
    if !region_f_a(inp.r1, inp.r2, inp.t2, inp.j) {
        return Err("not a critical specialization".into());
    }
    // the critical positions sit at j_abs in [r2+t2+2, r1+2]
    let j_abs = inp.j + inp.r2 + inp.t2 + 2;
    let ep = ep_modifier_a(inp.theta, inp.mu, inp.chi, j_abs, inp.p)?;
    let w = (inp.r1 + inp.r2 + inp.t2 + 3) as f64;
    let s = j_abs as f64 - w / 2.0;
    let arch = linf(inp.r1, inp.r2, inp.t2, s)?;
    let lambda_truncation = arch * partial_l(inp.euler_data, inp.truncation_bound, s);
    let exact_part = Scalar::Rat(inp.z_s.clone()).mul(&ep);
    let numeric_over_omega = exact_part
        .as_rat()
        .map(|r| super::euler::rat_to_f64(&r) * lambda_truncation);
    Ok(InterpRecordA {
        ep,
        lambda_truncation,
        z_s: inp.z_s.clone(),
        omega: "Omega_x".to_string(),
        exact_part,
        numeric_over_omega,
        weight: (inp.r1, inp.r2, inp.t2),
        j_shifted: inp.j,
        j_absolute: j_abs,
        chi_conductor_exp: inp.chi.cond_exp(),
    })
}

/// Assembled right-hand side of the triple-product formula at the central
/// point: the sqrt(p)-exact multiplier times the caller-supplied period
/// ratio, over the opaque unit.
#[derive(Clone, Debug)]
pub struct InterpRecordB {
    pub ep: SqrtExt,
    pub period_value: Rat,
    pub omega: String,
    pub exact_part: SqrtExt,
    pub weight: (i64, i64),
    pub d1: i64,
    pub d2: i64,
}

pub struct InterpInputsB<'a> {
    pub theta: &'a SatakeGSp4,
    pub mu1: &'a SatakeGL2,
    pub mu2: &'a SatakeGL2,
    pub r1: i64,
    pub r2: i64,
    pub d1: i64,
    pub d2: i64,
    pub p: u32,
    pub period_value: Rat,
}

pub fn interp_rhs_b(inp: &InterpInputsB) -> Result<InterpRecordB, String> {
    if !region_f_b(inp.r1, inp.r2, inp.d1, inp.d2) {
        return Err("not a critical specialization".into());
    }
    let ep = ep_modifier_b(inp.theta, inp.mu1, inp.mu2, inp.p)?;
    let exact_part = ep.mul(&SqrtExt::from_rat(inp.p, inp.period_value.clone()));
    Ok(InterpRecordB {
        ep,
        period_value: inp.period_value.clone(),
        omega: "Omega_x".to_string(),
        exact_part,
        weight: (inp.r1, inp.r2),
        d1: inp.d1,
        d2: inp.d2,
    })
}

impl InterpRecordA {
    pub fn assembled_is_zero(&self) -> bool {
        self.exact_part.is_zero()
    }
}

impl InterpRecordB {
    pub fn assembled_is_zero(&self) -> bool {
        self.exact_part.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn region_tables() {
        assert!(region_f_a(3, 1, 1, 1));
        assert!(!region_f_a(3, 1, 1, 2)); // j = r1-r2-t2+1 exceeds the window
        assert!(region_f_b(3, 0, 1, 2));
        assert!(!region_f_b(3, 0, 2, 2));
    }

    #[test]
    fn beta_bound_table() {
        assert_eq!(beta_bound(0), 2);
        assert_eq!(beta_bound(1), 2);
        assert_eq!(beta_bound(2), 4);
    }

    #[test]
    fn assemblers() {
        let theta = SatakeGSp4::from_i64([1, 2, 2, 4]).unwrap();
        let mu = SatakeGL2::from_i64(3, 5).unwrap();
        let chi = DirichletChar::quadratic(3);
        let inputs = InterpInputsA {
            theta: &theta,
            mu: &mu,
            chi: &chi,
            r1: 3,
            r2: 1,
            t2: 1,
            j: 1,
            p: 3,
            z_s: rat(0),
            euler_data: &[],
            truncation_bound: 100,
        };
        // vanishing local data zeroes the assembled product
        let rec = interp_rhs_a(&inputs).unwrap();
        assert!(rec.assembled_is_zero());
        assert_eq!(rec.numeric_over_omega, Some(0.0));
        // the absolute position is the shifted one moved past r2 + t2 + 2
        assert_eq!(rec.j_absolute, 5);
        // out-of-region requests are rejected
        let mut bad = InterpInputsA { j: 5, ..inputs };
        bad.z_s = rat(1);
        assert!(interp_rhs_a(&bad).is_err());

        // the triple-product side with a vanishing multiplier input
        let inp_b = InterpInputsB {
            theta: &theta,
            mu1: &mu,
            mu2: &mu,
            r1: 2,
            r2: 0,
            d1: 1,
            d2: 1,
            p: 3,
            period_value: rat(0),
        };
        let rec = interp_rhs_b(&inp_b).unwrap();
        assert!(rec.assembled_is_zero());
    }
}
