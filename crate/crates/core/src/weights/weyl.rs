use super::weight::Weight;
use crate::exactnum::{rat, Rat};
use crate::matrix::QMatrix;
use num_traits::Zero;
use std::fmt;

/// The Weyl group of GSp(4): eight elements, generated by the simple
/// reflections s1 and s2. The minimal-length Levi-coset representatives are
/// w0 = id, w1 = s1, w2 = s1 s2, w3 = s1 s2 s1, and the longest element is
/// (s1 s2)^2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeylElt {
    Id,
    S1,
    S2,
    S1S2,
    S2S1,
    S1S2S1,
    S2S1S2,
    WMax,
}

/// Iterate over all eight Weyl elements.
pub fn weyl_all() -> impl Iterator<Item = WeylElt> {
    ALL_WEYL.into_iter()
}

pub const ALL_WEYL: [WeylElt; 8] = [
    WeylElt::Id,
    WeylElt::S1,
    WeylElt::S2,
    WeylElt::S1S2,
    WeylElt::S2S1,
    WeylElt::S1S2S1,
    WeylElt::S2S1S2,
    WeylElt::WMax,
];

impl WeylElt {
    /// Reduced word in the generators (1 = s1, 2 = s2).
    pub fn word(self) -> &'static [u8] {
        match self {
            WeylElt::Id => &[],
            WeylElt::S1 => &[1],
            WeylElt::S2 => &[2],
            WeylElt::S1S2 => &[1, 2],
            WeylElt::S2S1 => &[2, 1],
            WeylElt::S1S2S1 => &[1, 2, 1],
            WeylElt::S2S1S2 => &[2, 1, 2],
            WeylElt::WMax => &[1, 2, 1, 2],
        }
    }

    pub fn length(self) -> usize {
        self.word().len()
    }

    /// Signed-permutation representative in the group, normalizing the
    /// diagonal torus.
    pub fn matrix(self) -> QMatrix {
        let s1 = QMatrix::from_i64([[1, 0, 0, 0], [0, 0, 1, 0], [0, -1, 0, 0], [0, 0, 0, 1]]);
        let s2 = QMatrix::from_i64([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]);
        let mut m = QMatrix::identity();
        for &g in self.word() {
            m = m.mul(if g == 1 { &s1 } else { &s2 });
        }
        m
    }

    pub fn inverse(self) -> WeylElt {
        match self {
            WeylElt::S1S2 => WeylElt::S2S1,
            WeylElt::S2S1 => WeylElt::S1S2,
            w => w, // id, the reflections, the braid words of length 3, wmax
        }
    }

    /// Group multiplication, resolved through the underlying permutations.
    pub fn compose(self, other: WeylElt) -> WeylElt {
        let target = perm_of(&self.matrix().mul(&other.matrix()));
        for w in ALL_WEYL {
            if perm_of(&w.matrix()) == target {
                return w;
            }
        }
        unreachable!("product left the group");
    }

    pub fn parse(s: &str) -> Result<WeylElt, String> {
        match s.to_ascii_lowercase().as_str() {
            "id" | "w0" | "e" => Ok(WeylElt::Id),
            "s1" | "w1" => Ok(WeylElt::S1),
            "s2" => Ok(WeylElt::S2),
            "s1s2" | "w2" => Ok(WeylElt::S1S2),
            "s2s1" => Ok(WeylElt::S2S1),
            "s1s2s1" | "w3" => Ok(WeylElt::S1S2S1),
            "s2s1s2" => Ok(WeylElt::S2S1S2),
            "wmax" | "w_max" | "wg" => Ok(WeylElt::WMax),
            other => Err(format!("unknown Weyl element {other:?}")),
        }
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            WeylElt::Id => "id",
            WeylElt::S1 => "s1",
            WeylElt::S2 => "s2",
            WeylElt::S1S2 => "s1s2",
            WeylElt::S2S1 => "s2s1",
            WeylElt::S1S2S1 => "s1s2s1",
            WeylElt::S2S1S2 => "s2s1s2",
            WeylElt::WMax => "wmax",
        };
        write!(f, "{name}")
    }
}

/// The permutation underlying a signed permutation matrix.
fn perm_of(m: &QMatrix) -> [usize; 4] {
    let mut perm = [0usize; 4];
    for j in 0..4 {
        let i = (0..4).find(|&i| !m.0[i][j].is_zero()).expect("not a permutation matrix");
        perm[j] = i;
    }
    perm
}

/// Half-sum of the positive roots: (2, 1; -3/2).
pub fn rho_g() -> Weight {
    Weight::halves(4, 2, -3)
}

/// Closed-form action of the Weyl group on torus characters.
pub fn weyl_act(w: WeylElt, k: &Weight) -> Weight {
    let (r1, r2, c) = (k.r1.clone(), k.r2.clone(), k.c.clone());
    let (a, b, d) = match w {
        WeylElt::Id => (r1, r2, c),
        WeylElt::S1 => (r1, -r2.clone(), c + r2),
        WeylElt::S2 => (r2, r1, c),
        WeylElt::S1S2 => (r2, -r1.clone(), c + r1),
        WeylElt::S2S1 => (-r2.clone(), r1, c + r2),
        WeylElt::S1S2S1 => (-r2.clone(), -r1.clone(), c + r1 + r2),
        WeylElt::S2S1S2 => (-r1.clone(), r2, c + r1),
        WeylElt::WMax => (-r1.clone(), -r2.clone(), c + r1 + r2),
    };
    Weight::new(a, b, d)
}

/// The same action computed from the matrix representative:
/// (w . k)(t) = k(w^{-1} t w). Conjugation permutes the diagonal entries
/// written as monomials in (z1, z2, s); the result is read off entries 1, 2
/// and the product of entries 1 and 4.
pub fn weyl_act_matrix(w: WeylElt, k: &Weight) -> Weight {
    // exponent rows of diag(z1, z2, s/z2, s/z1) in the basis (z1, z2, s)
    let entries: [[i64; 3]; 4] = [[1, 0, 0], [0, 1, 0], [0, -1, 1], [-1, 0, 1]];
    let m = w.matrix();
    let minv = m.inverse().expect("representative invertible");
    // sigma(i) = position of the torus entry landing at slot i of w^{-1} t w
    let mut sigma = [0usize; 4];
    for i in 0..4 {
        // (w^{-1} t w)_{ii} = sum_k (w^{-1})_{ik} t_{kk} w_{ki}; exactly one
        // k contributes for a signed permutation
        let k_idx = (0..4)
            .find(|&kk| !minv.0[i][kk].is_zero() && !m.0[kk][i].is_zero())
            .expect("conjugate not diagonal");
        sigma[i] = k_idx;
    }
    let row = |i: usize| entries[sigma[i]];
    let e1 = row(0);
    let e2 = row(1);
    let e4 = row(3);
    // new coordinates: z1' = entry 1, z2' = entry 2, s' = entry1 * entry4
    let z1p = e1;
    let z2p = e2;
    let sp = [e1[0] + e4[0], e1[1] + e4[1], e1[2] + e4[2]];
    // k(w^{-1} t w) = z1'^r1 z2'^r2 s'^c re-expressed in (z1, z2, s)
    let comb = |j: usize| -> Rat {
        k.r1.clone() * rat(z1p[j]) + k.r2.clone() * rat(z2p[j]) + k.c.clone() * rat(sp[j])
    };
    let (a, b, d0) = (comb(0), comb(1), comb(2));
    // exponents of z1 and z2 give r1', r2' directly; s-exponent gives c'
    Weight::new(a, b, d0)
}

/// The shifted action w * k = w(k + rho) - rho.
pub fn star_act(w: WeylElt, k: &Weight) -> Weight {
    weyl_act(w, &k.add(&rho_g())).sub(&rho_g())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{in_group, similitude};
    use rand::{Rng, SeedableRng};

    fn random_weight(rng: &mut impl Rng) -> Weight {
        Weight::halves(rng.gen_range(-20..21), rng.gen_range(-20..21), rng.gen_range(-20..21))
    }

    #[test]
    fn representatives_live_in_the_group() {
        for w in ALL_WEYL {
            let m = w.matrix();
            assert!(in_group(&m), "{w} not symplectic-similitude");
            assert_eq!(similitude(&m), Some(rat(1)));
        }
    }

    #[test]
    fn closed_form_matches_matrix_conjugation() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for w in ALL_WEYL {
            for _ in 0..50 {
                let k = random_weight(&mut rng);
                assert_eq!(weyl_act(w, &k), weyl_act_matrix(w, &k), "mismatch for {w} at {k}");
            }
        }
    }

    #[test]
    fn action_examples() {
        assert_eq!(weyl_act(WeylElt::S1, &Weight::int(3, 1, 0)), Weight::int(3, -1, 1));
        assert_eq!(weyl_act(WeylElt::Id, &Weight::int(5, 2, -7)), Weight::int(5, 2, -7));
        assert_eq!(weyl_act(WeylElt::WMax, &Weight::int(3, 1, 0)), Weight::int(-3, -1, 4));
    }

    #[test]
    fn star_action_examples() {
        // w1 * 0 = (0, -2; 1)
        assert_eq!(star_act(WeylElt::S1, &Weight::zero()), Weight::int(0, -2, 1));
        assert_eq!(star_act(WeylElt::Id, &Weight::int(4, 2, -1)), Weight::int(4, 2, -1));
        // -(s2 . (w1 * 0)) = (2, 0; -1)
        let tw = weyl_act(WeylElt::S2, &star_act(WeylElt::S1, &Weight::zero())).neg();
        assert_eq!(tw, Weight::int(2, 0, -1));
    }

    #[test]
    fn star_is_a_group_action() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        for v in ALL_WEYL {
            for w in ALL_WEYL {
                let vw = v.compose(w);
                for _ in 0..10 {
                    let k = random_weight(&mut rng);
                    assert_eq!(star_act(vw, &k), star_act(v, &star_act(w, &k)));
                }
            }
        }
    }

    #[test]
    fn reflections_are_involutions_and_group_closes() {
        assert_eq!(WeylElt::S1.compose(WeylElt::S1), WeylElt::Id);
        assert_eq!(WeylElt::S2.compose(WeylElt::S2), WeylElt::Id);
        for v in ALL_WEYL {
            assert_eq!(v.compose(v.inverse()), WeylElt::Id);
            for w in ALL_WEYL {
                // closure: compose() panics if the product is not one of the 8
                let _ = v.compose(w);
            }
        }
        // braid relation (s1 s2)^4 = id
        let s1s2 = WeylElt::S1.compose(WeylElt::S2);
        assert_eq!(s1s2.compose(s1s2), WeylElt::WMax);
        assert_eq!(WeylElt::WMax.compose(WeylElt::WMax), WeylElt::Id);
    }
}
