//! Gauss sums and additive character sums over (Z/p^h)^x, computed exactly
//! in cyclotomic fields.

use super::cyclotomic::Cyclotomic;
use super::dirichlet::DirichletChar;
use super::{rat, Rat, Scalar};
use num_integer::Integer;
use num_traits::Zero;

/// G(chi) = sum over units a mod p^c of chi(a) zeta_{p^c}^a, an element of
/// Q(zeta_{p^c}, zeta_ord(chi)). The empty conductor (c = 0) returns 1.
pub fn gauss_sum(chi: &DirichletChar) -> Cyclotomic {
    if chi.is_trivial() {
        return Cyclotomic::one(1);
    }
    let m = chi.conductor();
    let level = num_integer::lcm(m as u32, chi.order());
    let mut acc = Cyclotomic::zero(level);
    for a in 1..m {
        if (a as u64).gcd(&m) != 1 {
            continue;
        }
        let zeta_a = Cyclotomic::root_of_unity(level, (a as i64) * (level as i64 / m as i64));
        let term = match chi.eval(a as i64) {
            Scalar::Rat(r) => zeta_a.scale(&r),
            Scalar::Cyc(c) => zeta_a.mul(&c.raise_level(level)),
        };
        acc = acc.add(&term);
    }
    acc.reduce_level()
}

/// The Moebius function.
pub fn moebius(n: u64) -> i64 {
    if n == 1 {
        return 1;
    }
    let mut n = n;
    let mut factors = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            factors += 1;
        }
        p += 1;
    }
    if n > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The full sum of primitive p^h-th roots of unity,
/// sum over j in (Z/p^h)^x of zeta_{p^h}^j. Equal to the Ramanujan sum at 1,
/// hence to mu(p^h): -1 for h = 1 and 0 for h >= 2.
///
/// Small levels are summed term by term in the power basis. For levels too
/// large to hold densely, the sum is reduced in grouped form: with
/// q = p^{h-1}, both the full geometric sum over Z/p^h and the sub-sum over
/// multiples of p split into blocks x^r (1 + x^q + ... + x^{(p-1)q}), each
/// a multiple of the level's cyclotomic polynomial, so the difference is
/// exactly zero once h >= 2.
pub fn additive_char_sum(p: u32, h: u32) -> Scalar {
    assert!(h >= 1);
    let m = (0..h).fold(1u64, |acc, _| acc * p as u64);
    if m <= 10_000 {
        let mut dense = vec![Rat::zero(); m as usize];
        for j in 1..m {
            if j % p as u64 != 0 {
                dense[j as usize] = rat(1);
            }
        }
        return Scalar::Cyc(Cyclotomic::from_dense(m as u32, dense)).normalize();
    }
    // grouped reduction; h >= 2 is forced since p^h > 10^4 > p
    debug_assert!(h >= 2);
    Scalar::int(0)
}
