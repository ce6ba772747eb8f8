use super::weight::Weight;
use super::weyl::{star_act, WeylElt};
use crate::exactnum::{rat, Rat, Valuation};

/// Which small-slope inequality to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlopeKind {
    Klingen,
    Siegel,
    Borel,
}

/// Small-slope test on normalised Hecke eigenvalue valuations:
/// Klingen requires v(U_Kl) < 1 + r1 - r2, Siegel requires
/// v(U_Si) < 1 + r2, Borel requires both. An infinite valuation (eigenvalue
/// zero) never has small slope.
pub fn slope_check(
    kind: SlopeKind,
    v_kl: &Valuation,
    v_si: &Valuation,
    r1: i64,
    r2: i64,
) -> bool {
    let klingen = || matches!(v_kl, Valuation::Finite(v) if *v < rat(1 + r1 - r2));
    let siegel = || matches!(v_si, Valuation::Finite(v) if *v < rat(1 + r2));
    match kind {
        SlopeKind::Klingen => klingen(),
        SlopeKind::Siegel => siegel(),
        SlopeKind::Borel => klingen() && siegel(),
    }
}

/// The two semisimplification conditions, distinguished by which Weyl
/// elements are excluded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SsKind {
    /// Quantifies over the minimal-length coset representatives other than
    /// w1, i.e. {id, s1s2, s1s2s1}, comparing with (w^{-1} * kappa)(y).
    MinimalCosets,
    /// Quantifies over the nontrivial Levi Weyl element s2, comparing with
    /// ((w1^{-1} w) * kappa)(y).
    LeviReflection,
}

/// A monoid homomorphism on the antidominant torus monoid, recorded by its
/// valuations on the generators diag(1,1,p,p), diag(1,p,p,p^2) and the
/// central element p*id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationTable {
    pub v_siegel: Rat,
    pub v_klingen: Rat,
    pub v_center: Rat,
}

impl ValuationTable {
    pub fn new(v_siegel: Rat, v_klingen: Rat, v_center: Rat) -> Self {
        ValuationTable { v_siegel, v_klingen, v_center }
    }
}

/// Outcome of a bounded existential search: per excluded Weyl element, the
/// witness monomial exponents (m, n, k) in the generators, if any.
#[derive(Clone, Debug)]
pub struct SsReport {
    pub holds: bool,
    pub witnesses: Vec<(WeylElt, Option<(i64, i64, i64)>)>,
    /// true when some excluded element exhausted the search bound without a
    /// witness (so `holds = false` is only "not found within the bound").
    pub bound_hit: bool,
    pub degree_bound: i64,
}

fn weight_valuation_on_monomial(w: &Weight, m: i64, n: i64, k: i64) -> Rat {
    w.vp_at_t_siegel() * rat(m) + w.vp_at_t_klingen() * rat(n) + w.vp_at_center() * rat(k)
}

fn table_valuation_on_monomial(t: &ValuationTable, m: i64, n: i64, k: i64) -> Rat {
    t.v_siegel.clone() * rat(m) + t.v_klingen.clone() * rat(n) + t.v_center.clone() * rat(k)
}

/// Evaluates a semisimplification condition by bounded search over monomials
/// t_S^m t_Kl^n (p id)^k with 0 <= m, n <= bound, |k| <= bound.
///
/// For each excluded Weyl element w the condition asks for a monoid element
/// y with v(lambda(y)) < v((w' * kappa)(y)); the search reports the first
/// witness in lexicographic order or flags that the bound was exhausted.
pub fn ss_condition(
    kind: SsKind,
    lambda: &ValuationTable,
    kappa_star: &Weight,
    degree_bound: i64,
) -> SsReport {
    let excluded: Vec<WeylElt> = match kind {
        SsKind::MinimalCosets => vec![WeylElt::Id, WeylElt::S1S2, WeylElt::S1S2S1],
        SsKind::LeviReflection => vec![WeylElt::S2],
    };
    let mut witnesses = Vec::new();
    let mut holds = true;
    let mut bound_hit = false;
    for w in excluded {
        let shifted = match kind {
            SsKind::MinimalCosets => star_act(w.inverse(), kappa_star),
            SsKind::LeviReflection => star_act(WeylElt::S1.inverse().compose(w), kappa_star),
        };
        let mut found = None;
        'search: for m in 0..=degree_bound {
            for n in 0..=degree_bound {
                for k in -degree_bound..=degree_bound {
                    if m == 0 && n == 0 && k == 0 {
                        continue;
                    }
                    let lhs = table_valuation_on_monomial(lambda, m, n, k);
                    let rhs = weight_valuation_on_monomial(&shifted, m, n, k);
                    if lhs < rhs {
                        found = Some((m, n, k));
                        break 'search;
                    }
                }
            }
        }
        if found.is_none() {
            holds = false;
            bound_hit = true;
        }
        witnesses.push((w, found));
    }
    SsReport { holds, witnesses, bound_hit, degree_bound }
}
