use super::{rat, Rat};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

/// Euler's totient.
pub fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    let mut ds = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            ds.push(d);
        }
    }
    ds
}

/// Exact division of dense polynomials; panics unless the remainder is zero.
fn poly_div_exact(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd);
    let mut rem: Vec<Rat> = num.to_vec();
    let mut quot = vec![Rat::zero(); dn - dd + 1];
    let lead = den[dd].clone();
    for i in (0..=dn - dd).rev() {
        let c = rem[i + dd].clone() / lead.clone();
        if !c.is_zero() {
            for j in 0..=dd {
                let t = c.clone() * den[j].clone();
                rem[i + j] -= t;
            }
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// Dense coefficients of the N-th cyclotomic polynomial, memoised.
///
/// Prime powers use the closed form Phi_{p^k}(x) = sum_i x^{i p^{k-1}},
/// 0 <= i < p; everything else divides x^N - 1 by the proper divisors'
/// cyclotomic polynomials.
pub fn cyclotomic_polynomial(n: u32) -> Vec<Rat> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<Rat>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = compute_cyclotomic(n);
    cache.lock().unwrap().insert(n, result.clone());
    result
}

fn compute_cyclotomic(n: u32) -> Vec<Rat> {
    if n == 1 {
        return vec![rat(-1), rat(1)]; // x - 1
    }
    // prime-power fast path
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            break;
        }
        p += 1;
    }
    if p * p > m {
        p = m; // n prime
    }
    while m % p == 0 {
        m /= p;
    }
    if m == 1 {
        // n = p^k: sum_{i<p} x^{i p^{k-1}}
        let step = (n / p) as usize;
        let mut coeffs = vec![Rat::zero(); step * (p as usize - 1) + 1];
        for i in 0..p as usize {
            coeffs[i * step] = Rat::one();
        }
        return coeffs;
    }
    // x^n - 1 over the product of all proper-divisor cyclotomics
    let mut num = vec![Rat::zero(); n as usize + 1];
    num[0] = -Rat::one();
    num[n as usize] = Rat::one();
    let mut result = num;
    for d in divisors(n) {
        if d < n {
            result = poly_div_exact(&result, &cyclotomic_polynomial(d));
        }
    }
    result
}

/// An element of the cyclotomic field Q(zeta_n), stored as coefficients of
/// 1, zeta, ..., zeta^{phi(n)-1} in the power basis modulo the n-th
/// cyclotomic polynomial. The representation at a fixed level is unique.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    level: u32,
    coeffs: Vec<Rat>,
}

impl Cyclotomic {
    pub fn zero(level: u32) -> Self {
        Cyclotomic { level, coeffs: vec![Rat::zero(); euler_phi(level) as usize] }
    }

    pub fn from_rat(level: u32, c: Rat) -> Self {
        let mut x = Cyclotomic::zero(level);
        x.coeffs[0] = c;
        x
    }

    pub fn one(level: u32) -> Self {
        Cyclotomic::from_rat(level, Rat::one())
    }

    /// zeta_n^k.
    pub fn root_of_unity(level: u32, k: i64) -> Self {
        let n = level as i64;
        let k = k.rem_euclid(n) as usize;
        let mut dense = vec![Rat::zero(); k + 1];
        dense[k] = Rat::one();
        Cyclotomic::from_dense(level, dense)
    }

    /// Reduce arbitrary dense coefficients (in powers of zeta_n) modulo the
    /// cyclotomic polynomial.
    pub fn from_dense(level: u32, mut dense: Vec<Rat>) -> Self {
        let phi = euler_phi(level) as usize;
        let modulus = cyclotomic_polynomial(level);
        // cyclotomic polynomials are sparse at prime-power levels
        let support: Vec<(usize, Rat)> = modulus[..phi]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c.clone()))
            .collect();
        while dense.len() > phi {
            let top = dense.len() - 1;
            let c = dense[top].clone();
            dense.pop();
            if c.is_zero() {
                continue;
            }
            // zeta^top = -c * (lower terms of Phi) * zeta^{top - phi}
            let shift = top - phi;
            for (j, m) in &support {
                let t = c.clone() * m.clone();
                dense[shift + j] -= t;
            }
        }
        dense.resize(phi, Rat::zero());
        Cyclotomic { level, coeffs: dense }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Some(c) when the element lies in Q.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-express at a level m that the current level divides.
    pub fn raise_level(&self, m: u32) -> Cyclotomic {
        assert_eq!(m % self.level, 0, "level {} does not divide {}", self.level, m);
        if m == self.level {
            return self.clone();
        }
        let step = (m / self.level) as usize;
        let mut dense = vec![Rat::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            dense[j * step] = c.clone();
        }
        Cyclotomic::from_dense(m, dense)
    }

    fn common_level(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let l = num_integer::lcm(a.level, b.level);
        (a.raise_level(l), b.raise_level(l))
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Cyclotomic::common_level(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y.clone();
        }
        a
    }

    pub fn neg(&self) -> Cyclotomic {
        let mut a = self.clone();
        for x in a.coeffs.iter_mut() {
            *x = -x.clone();
        }
        a
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Cyclotomic {
        let mut a = self.clone();
        for x in a.coeffs.iter_mut() {
            *x *= c.clone();
        }
        a
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common_level(self, other);
        let mut dense = vec![Rat::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    dense[i + j] += x.clone() * y.clone();
                }
            }
        }
        Cyclotomic::from_dense(a.level, dense)
    }

    /// The Galois twist zeta |-> zeta^k, gcd(k, n) = 1.
    pub fn galois(&self, k: i64) -> Cyclotomic {
        let n = self.level as i64;
        let k = k.rem_euclid(n);
        assert_eq!(num_integer::gcd(k, n), 1, "galois exponent not a unit");
        let mut dense = vec![Rat::zero(); self.level as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            let e = ((j as i64 * k) % n) as usize;
            dense[e] += c.clone();
        }
        Cyclotomic::from_dense(self.level, dense)
    }

    /// Complex conjugation zeta |-> zeta^{-1}.
    pub fn conj(&self) -> Cyclotomic {
        self.galois(self.level as i64 - 1)
    }

    /// Multiplicative inverse via an exact linear solve in the power basis.
    /// Panics on zero.
    pub fn inv(&self) -> Cyclotomic {
        assert!(!self.is_zero(), "inverse of zero");
        if let Some(c) = self.as_rational() {
            return Cyclotomic::from_rat(self.level, c.recip());
        }
        let phi = self.coeffs.len();
        // columns: self * zeta^j in the power basis
        let mut cols = Vec::with_capacity(phi);
        for j in 0..phi {
            let col = self.mul(&Cyclotomic::root_of_unity(self.level, j as i64));
            cols.push(col.coeffs);
        }
        // solve A y = e0 by Gaussian elimination on the augmented system
        let mut a = vec![vec![Rat::zero(); phi + 1]; phi];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..phi {
                a[i][j] = col[i].clone();
            }
        }
        a[0][phi] = Rat::one();
        for col in 0..phi {
            let pivot = (col..phi).find(|&r| !a[r][col].is_zero()).expect("singular");
            a.swap(col, pivot);
            let inv = a[col][col].clone().recip();
            for c in col..=phi {
                a[col][c] = a[col][c].clone() * inv.clone();
            }
            for r in 0..phi {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in col..=phi {
                        let t = f.clone() * a[col][c].clone();
                        a[r][c] -= t;
                    }
                }
            }
        }
        let coeffs: Vec<Rat> = (0..phi).map(|i| a[i][phi].clone()).collect();
        Cyclotomic { level: self.level, coeffs }
    }

    pub fn pow(&self, e: i64) -> Cyclotomic {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Cyclotomic::one(self.level);
        let mut b = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            n >>= 1;
        }
        acc
    }

    /// Re-express the element at the smallest divisor level containing it,
    /// detected by invariance under the relative Galois twists and realised
    /// by an exact linear solve against the embedded power basis.
    pub fn reduce_level(&self) -> Cyclotomic {
        let n = self.level;
        'next: for d in divisors(n) {
            if d == n {
                break;
            }
            for k in 1..n {
                if num_integer::gcd(k, n) == 1 && k % d == 1 % d && self.galois(k as i64) != *self {
                    continue 'next;
                }
            }
            // invariant: solve for coefficients in the level-d power basis
            let phi_d = euler_phi(d) as usize;
            let phi_n = self.coeffs.len();
            let mut cols = Vec::with_capacity(phi_d);
            for i in 0..phi_d {
                let e = Cyclotomic::root_of_unity(n, (n as i64 / d as i64) * i as i64);
                cols.push(e.coeffs);
            }
            let mut a = vec![vec![Rat::zero(); phi_d + 1]; phi_n];
            for (j, col) in cols.iter().enumerate() {
                for i in 0..phi_n {
                    a[i][j] = col[i].clone();
                }
            }
            for i in 0..phi_n {
                a[i][phi_d] = self.coeffs[i].clone();
            }
            if let Some(x) = solve_overdetermined(a, phi_d) {
                return Cyclotomic { level: d, coeffs: x };
            }
        }
        self.clone()
    }
}

/// Solve a consistent overdetermined system given as rows of (A | b);
/// returns None if inconsistent.
fn solve_overdetermined(mut a: Vec<Vec<Rat>>, cols: usize) -> Option<Vec<Rat>> {
    let rows = a.len();
    let mut pivot_row = 0usize;
    let mut pivots = Vec::new();
    for col in 0..cols {
        if let Some(r) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) {
            a.swap(pivot_row, r);
            let inv = a[pivot_row][col].clone().recip();
            for c in col..=cols {
                a[pivot_row][c] = a[pivot_row][c].clone() * inv.clone();
            }
            for rr in 0..rows {
                if rr != pivot_row && !a[rr][col].is_zero() {
                    let f = a[rr][col].clone();
                    for c in col..=cols {
                        let t = f.clone() * a[pivot_row][c].clone();
                        a[rr][c] -= t;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
    }
    // inconsistency check
    for r in 0..rows {
        if a[r][..cols].iter().all(|x| x.is_zero()) && !a[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = a[row][cols].clone();
    }
    Some(x)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Cyclotomic::common_level(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            if j == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})*z{}^{j}", self.level)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;
    use rand::{Rng, SeedableRng};

    #[test]
    fn cyclotomic_polynomials() {
        // Phi_1 = x - 1, Phi_3 = x^2 + x + 1, Phi_9 = x^6 + x^3 + 1,
        // Phi_20 = x^8 - x^6 + x^4 - x^2 + 1
        assert_eq!(cyclotomic_polynomial(3), vec![rat(1), rat(1), rat(1)]);
        let phi9 = cyclotomic_polynomial(9);
        assert_eq!(phi9.len(), 7);
        assert_eq!(phi9[0], rat(1));
        assert_eq!(phi9[3], rat(1));
        assert_eq!(phi9[6], rat(1));
        let phi20 = cyclotomic_polynomial(20);
        let expect: Vec<Rat> =
            [1, 0, -1, 0, 1, 0, -1, 0, 1].iter().map(|&c| rat(c)).collect();
        assert_eq!(phi20, expect);
    }

    #[test]
    fn ring_laws_and_conjugation_automorphism() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for level in [3u32, 9, 5, 20, 7] {
            let phi = euler_phi(level) as usize;
            let mut random = || {
                let coeffs: Vec<Rat> = (0..phi)
                    .map(|_| ratio(rng.gen_range(-6..7), rng.gen_range(1..4)))
                    .collect();
                Cyclotomic { level, coeffs }
            };
            for _ in 0..10 {
                let (a, b, c) = (random(), random(), random());
                assert_eq!(a.mul(&b), b.mul(&a));
                assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                assert_eq!(a.conj().mul(&b.conj()), a.mul(&b).conj());
                assert_eq!(a.conj().add(&b.conj()), a.add(&b).conj());
                if !a.is_zero() {
                    assert_eq!(a.mul(&a.inv()), Cyclotomic::one(level));
                }
            }
        }
    }

    #[test]
    fn level_reduction() {
        // 2 zeta_6 - 1 lies in the third cyclotomic field as 1 + 2 zeta_3
        let x = Cyclotomic::root_of_unity(6, 1).scale(&rat(2)).sub(&Cyclotomic::one(6));
        let red = x.reduce_level();
        assert_eq!(red.level(), 3);
        assert_eq!(red, x);
        // rationals reduce to level 1
        assert_eq!(Cyclotomic::from_rat(20, rat(7)).reduce_level().level(), 1);
        // a primitive root does not reduce
        assert_eq!(Cyclotomic::root_of_unity(9, 1).reduce_level().level(), 9);
    }

    #[test]
    fn level_compatibility() {
        // zeta_3 at level 9 equals zeta_9^3
        let z3 = Cyclotomic::root_of_unity(3, 1);
        let z9cubed = Cyclotomic::root_of_unity(9, 3);
        assert_eq!(z3, z9cubed);
        // 1 + zeta_3 + zeta_3^2 = 0
        let sum = Cyclotomic::one(3)
            .add(&Cyclotomic::root_of_unity(3, 1))
            .add(&Cyclotomic::root_of_unity(3, 2));
        assert!(sum.is_zero());
    }
}
