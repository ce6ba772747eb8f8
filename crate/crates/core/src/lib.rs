//! Exact-arithmetic toolkit for the combinatorics underlying p-adic
//! L-functions of GSp(4) x GL(2): weight and Weyl-group bookkeeping,
//! finite-dimensional function models and their branching maps, truncated
//! q-expansions with the locally-analytic star action, Euler and
//! interpolation factors built from Satake data, local zeta-integral
//! closed forms at Iwahori level, and growth estimates for locally
//! analytic distributions on Z_p^x.
//!
//! Everything outside the explicitly floating-point helpers (the
//! archimedean Gamma factor and the analytic growth-constant oracle) is
//! computed over arbitrary-precision rationals and cyclotomic integers,
//! so identities are checked exactly rather than to a tolerance.

pub mod dist;
pub mod exactnum;
pub mod lfactors;
pub mod matrix;
pub mod poly;
pub mod qexp;
pub mod repmodel;
pub mod weights;
pub mod zeta;

pub use exactnum::{Rat, Scalar, Valuation};
