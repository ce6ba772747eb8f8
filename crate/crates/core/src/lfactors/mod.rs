//! Satake data, Euler polynomials, archimedean Gamma factors, critical
//! ranges, functional-equation duals, modified interpolation factors at p,
//! Hecke normalisations and semisimplified eigensystems, interpolation
//! regions, and the right-hand-side assemblers for the interpolation
//! formulas.

mod archimedean;
mod epfactor;
mod euler;
mod interp;
mod satake;

pub use archimedean::{crit_range, fe_dual, gamma_c, linf, CritRange};
pub use epfactor::{ep_modifier_a, ep_modifier_b};
pub use euler::{partial_l, spin_std_euler, EulerPoly, PrimeEulerData};
pub use interp::{
    beta_bound, interp_rhs_a, interp_rhs_b, region_f_a, region_f_b, InterpInputsA, InterpInputsB,
    InterpRecordA, InterpRecordB,
};
pub use satake::{
    hecke_normalize, ss_eigensystem, HeckeEigenData, SatakeGL2, SatakeGSp4, SsEigensystem,
    UnramifiedTorusChar,
};
