//! Function-model representations of GSp(4), GL(2) x GL(2) and their Levi
//! subgroups: highest-weight vectors as explicit polynomials in the matrix
//! entries, the Lie-algebra action by exact differentiation, Cartan
//! products, the normalised branching maps, unipotent factorization at
//! Iwahori level, the torus-monoid action on unipotent coordinates, and the
//! conjugation identities these constructions rest on.

mod branching;
mod factorization;
mod group;
mod identities;
mod models;

pub use branching::{
    branch_closed_form, branch_display, branch_m, branch_nan_eval, branch_via_lie, br_prime,
    levi_unipotent, restrict_to_unipotent, unipotent_branch_value, unipotent_target_poly,
};
pub use factorization::{iwahori_factor, monoid_act, FactorReport, MonoidAction, TorusMonoidElt};
pub use group::{
    embed_h, gamma, gamma_hat, j_w1_inv, lower_unipotent_h, n_zab, random_borel_g,
    random_borel_h, random_g_point, random_h_point, torus, w1, UnipotentPoint,
};
pub use identities::{verify_matrix_identities, IdentityReport};
pub use models::{
    cartan_product, check_law, dim, hw_vector, lie_act, random_borel_mg, random_mg_point,
    LieElt, ModelTag, PolyVector,
};
