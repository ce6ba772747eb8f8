use super::{rat, Rat};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// A p-adic valuation value: a rational number or +infinity (the valuation
/// of zero). Normalised so that v_p(p) = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Valuation {
    Finite(Rat),
    Infinity,
}

impl Valuation {
    pub fn finite(v: i64) -> Self {
        Valuation::Finite(rat(v))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinity)
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    pub fn add(&self, other: &Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a.clone() + b.clone()),
            _ => Valuation::Infinity,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinity, Valuation::Infinity) => Ordering::Equal,
            (Valuation::Infinity, _) => Ordering::Greater,
            (_, Valuation::Infinity) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "+inf"),
        }
    }
}

/// v_p of a (non-zero) integer by repeated division.
pub fn vp_int(n: &BigInt, p: u32) -> Option<i64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0i64;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&n, &p);
        if r.is_zero() {
            v += 1;
            n = q;
        } else {
            return Some(v);
        }
    }
}

/// The exact p-adic valuation of a rational number; `Infinity` for zero.
pub fn vp(x: &Rat, p: u32) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinity;
    }
    let vn = vp_int(x.numer(), p).unwrap();
    let vd = vp_int(x.denom(), p).unwrap();
    Valuation::finite(vn - vd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{ratio, vp};
    use rand::{Rng, SeedableRng};

    #[test]
    fn valuation_examples() {
        // forced by the prime factorisation
        assert_eq!(vp(&ratio(9, 2), 3), Valuation::finite(2));
        // convention for zero
        assert_eq!(vp(&rat(0), 5), Valuation::Infinity);
        // repeated-division oracle: 50 = 2 * 5^2
        let mut n = 50i64;
        let mut v = 0;
        while n % 5 == 0 {
            n /= 5;
            v += 1;
        }
        assert_eq!(vp(&rat(50), 5), Valuation::finite(v));
    }

    #[test]
    fn valuation_axioms_on_random_rationals() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for p in [3u32, 5, 7] {
            for _ in 0..500 {
                let a = ratio(rng.gen_range(-400..400), rng.gen_range(1..300));
                let b = ratio(rng.gen_range(-400..400), rng.gen_range(1..300));
                let vab = vp(&(a.clone() * b.clone()), p);
                assert_eq!(vab, vp(&a, p).add(&vp(&b, p)));
                let vsum = vp(&(a.clone() + b.clone()), p);
                let m = std::cmp::min(vp(&a, p), vp(&b, p));
                assert!(vsum >= m, "ultrametric failed for {a} + {b} at p={p}");
            }
        }
    }
}
