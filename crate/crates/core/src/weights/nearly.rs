use super::situation::kappa_g_star;
use super::weight::Weight;

/// One member of the weight family of the nearly-algebraic dual, together
/// with the indices it came from. Distinct index tuples can produce the same
/// underlying weight; the family is enumerated with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearlyWeight {
    pub t1: i64,
    pub t2: i64,
    pub delta1: i64,
    pub delta2: i64,
    pub i: i64,
    pub j: i64,
    pub weight: Weight,
}

/// The index set Sigma: pairs (t1, t2) >= 0 with t1 + t2 = r1 + r2 mod 2,
/// r1 - r2 <= t1 + t2 <= r1 + r2 and |t1 - t2| <= r1 - r2.
pub fn sigma_set(r1: i64, r2: i64) -> Vec<(i64, i64)> {
    assert!(r1 >= r2 && r2 >= 0, "dominant weight required");
    let mut out = Vec::new();
    for t1 in 0..=(r1 + r2) {
        for t2 in 0..=(r1 + r2 - t1) {
            let s = t1 + t2;
            if (s - (r1 + r2)) % 2 == 0
                && s >= r1 - r2
                && s <= r1 + r2
                && (t1 - t2).abs() <= r1 - r2
            {
                out.push((t1, t2));
            }
        }
    }
    out
}

/// Enumerates the full weight family: for each (t1, t2) in Sigma, each split
/// delta1 + delta2 = 2 with 0 <= delta_i <= 2, and each 0 <= i <= t1,
/// 0 <= j <= t2 with 2(i + j) <= (t1 + t2) + (r1 - r2), the weight
/// (2i - t1 - delta1, 2j - t2 - delta2; xi) with
/// 2 xi = r1 + r2 + t1 + t2 - 2(i + j - 1).
pub fn nearly_weight_set(r1: i64, r2: i64) -> Vec<NearlyWeight> {
    let mut out = Vec::new();
    for (t1, t2) in sigma_set(r1, r2) {
        for (delta1, delta2) in [(0i64, 2i64), (1, 1), (2, 0)] {
            for i in 0..=t1 {
                for j in 0..=t2 {
                    if 2 * (i + j) > (t1 + t2) + (r1 - r2) {
                        continue;
                    }
                    let two_xi = r1 + r2 + t1 + t2 - 2 * (i + j - 1);
                    assert_eq!(two_xi % 2, 0, "xi must be integral");
                    let weight =
                        Weight::int(2 * i - t1 - delta1, 2 * j - t2 - delta2, two_xi / 2);
                    out.push(NearlyWeight { t1, t2, delta1, delta2, i, j, weight });
                }
            }
        }
    }
    out
}

impl NearlyWeight {
    /// Both generator-valuation inequalities v(kappa*(t)) <= v(kappa(t)),
    /// checked at diag(1,1,p,p) and diag(1,p,p,p^2).
    pub fn passes_valuation_inequalities(&self, r1: i64, r2: i64) -> bool {
        let ks = kappa_g_star(r1, r2);
        ks.vp_at_t_siegel() <= self.weight.vp_at_t_siegel()
            && ks.vp_at_t_klingen() <= self.weight.vp_at_t_klingen()
    }
}
