use crate::exactnum::{DirichletChar, Rat};
use statrs::function::gamma::gamma;

/// Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s).
pub fn gamma_c(s: f64) -> f64 {
    2.0 * (2.0 * std::f64::consts::PI).powf(-s) * gamma(s)
}

fn is_pole(arg: f64) -> bool {
    arg < 0.5 && (arg - arg.round()).abs() < 1e-9
}

/// The archimedean factor: the product of four Gamma_C values at the
/// arguments s + w/2 - r2 - t2 - 1, s + w/2 - r2 - 1, s + w/2 - t2,
/// s + w/2, where w = r1 + r2 + t2 + 3. Relative accuracy is that of the
/// underlying double-precision Gamma (about 1e-12). Arguments at
/// non-positive integers are poles and produce an error.
pub fn linf(r1: i64, r2: i64, t2: i64, s: f64) -> Result<f64, String> {
    let w = (r1 + r2 + t2 + 3) as f64;
    let args = [
        s + w / 2.0 - (r2 + t2 + 1) as f64,
        s + w / 2.0 - (r2 + 1) as f64,
        s + w / 2.0 - t2 as f64,
        s + w / 2.0,
    ];
    let mut acc = 1.0;
    for a in args {
        if is_pole(a) {
            return Err(format!("archimedean pole at Gamma_C({a})"));
        }
        acc *= gamma_c(a);
    }
    Ok(acc)
}

/// The critical strip in the j-variable: r2 + t2 + 2 <= j <= r1 + 2, with
/// the shifted window [0, r1 - r2 - t2]. Empty when t2 > r1 - r2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CritRange {
    pub j_min: i64,
    pub j_max: i64,
    pub shifted_max: i64,
}

pub fn crit_range(r1: i64, r2: i64, t2: i64) -> Option<CritRange> {
    assert!(r1 >= r2 && r2 >= 0 && t2 >= 0, "dominant weight data required");
    if t2 > r1 - r2 {
        return None;
    }
    Some(CritRange { j_min: r2 + t2 + 2, j_max: r1 + 2, shifted_max: r1 - r2 - t2 })
}

/// The functional-equation dual of a twist: (chi, s) goes to
/// ((chi chi0 chi2)^{-1}, 1 - s).
pub fn fe_dual(
    chi: &DirichletChar,
    s: &Rat,
    chi0: &DirichletChar,
    chi2: &DirichletChar,
) -> (DirichletChar, Rat) {
    let dual = chi.mul(chi0).mul(chi2).inverse();
    (dual, Rat::from_integer(1.into()) - s.clone())
}
