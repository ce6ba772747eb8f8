//! Truncated q-expansions with exact coefficients, the action of locally
//! analytic functions on the coefficient index (the identity function acts
//! as the weight-raising differential, the unit-indicator as p-depletion),
//! and the Eisenstein family given by depleted divisor sums.

mod eisenstein;
mod locan;
mod qexpansion;

pub use eisenstein::{eis_coeff, eis_expansion, eis_xi, half_power_nabla, EisensteinSpec, TameTag};
pub use locan::{LocAnFunction, LocAnRule, Support};
pub use qexpansion::{deplete, star_action, theta, QExpansion, WeightDesc};
