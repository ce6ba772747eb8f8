//! Weight-lattice and Weyl-group combinatorics for GSp(4): the closed-form
//! and matrix-conjugation Weyl actions, the shifted (dot) action, derived
//! weight dictionaries, small-slope and semisimplification predicates, and
//! the enumeration of the weights appearing in the nearly-algebraic dual.

mod nearly;
mod situation;
mod slope;
mod weight;
mod weyl;

pub use nearly::{nearly_weight_set, sigma_set, NearlyWeight};
pub use situation::{kappa_g_star, situation_weights, SituationWeights};
pub use slope::{slope_check, ss_condition, SlopeKind, SsKind, SsReport, ValuationTable};
pub use weight::{GL2Weight, Weight};
pub use weyl::{rho_g, star_act, weyl_act, weyl_act_matrix, weyl_all, WeylElt, ALL_WEYL};
