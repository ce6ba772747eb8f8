//! Sparse multivariate Laurent polynomials over exact rationals.
//!
//! Exponents are signed, so torus parameters and their inverses live in the
//! same ring; this is what lets the matrix-identity checks run symbolically
//! (subtract both sides, ask for the zero polynomial) instead of relying on
//! sampled points alone.

use crate::exactnum::{rat, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A sparse polynomial in `nvars` variables with `Rat` coefficients and
/// integer (possibly negative) exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub nvars: usize,
    terms: BTreeMap<Vec<i32>, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rat::one())
    }

    pub fn int(nvars: usize, c: i64) -> Self {
        Poly::constant(nvars, rat(c))
    }

    /// The monomial `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Poly::var_pow(nvars, i, 1)
    }

    /// The monomial `x_i^e` (negative `e` allowed).
    pub fn var_pow(nvars: usize, i: usize, e: i32) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = e;
        let mut p = Poly::zero(nvars);
        p.terms.insert(exps, Rat::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Rat)> {
        self.terms.iter()
    }

    fn insert(&mut self, exps: Vec<i32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut out = Poly::zero(self.nvars);
        for (e, k) in &self.terms {
            out.terms.insert(e.clone(), k.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert(exps, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Evaluate at a rational point. Panics if a variable with negative
    /// exponent is evaluated at zero.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rat::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exps) {
                if e != 0 {
                    term *= rat_pow(x, e as i64);
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitute `forms[i]` for variable `i`. Requires all exponents of
    /// substituted variables to be non-negative.
    pub fn subst(&self, forms: &[Poly]) -> Poly {
        assert_eq!(forms.len(), self.nvars);
        let nv = forms[0].nvars;
        let mut out = Poly::zero(nv);
        for (exps, c) in &self.terms {
            let mut term = Poly::constant(nv, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                assert!(e >= 0, "substitution into negative exponent");
                term = term.mul(&forms[i].pow(e as u32));
            }
            out = out.add(&term);
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (exps, c) in &self.terms {
            let e = exps[i];
            if e == 0 {
                continue;
            }
            let mut ne = exps.clone();
            ne[i] = e - 1;
            out.insert(ne, c.clone() * rat(e as i64));
        }
        out
    }

    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum())
            .max()
            .unwrap_or(0)
    }
}

/// `x^e` for signed `e`.
pub fn rat_pow(x: &Rat, e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    let mut base = if e < 0 {
        assert!(!x.is_zero(), "zero to a negative power");
        x.recip()
    } else {
        x.clone()
    };
    let mut n = e.unsigned_abs();
    let mut acc = Rat::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= base.clone();
        }
        base = base.clone() * base;
        n >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    #[test]
    fn laurent_arithmetic() {
        // (x + 1/y)(x - 1/y) = x^2 - y^-2
        let x = Poly::var(2, 0);
        let yinv = Poly::var_pow(2, 1, -1);
        let lhs = x.add(&yinv).mul(&x.sub(&yinv));
        let rhs = x.pow(2).sub(&Poly::var_pow(2, 1, -2));
        assert!(lhs.sub(&rhs).is_zero());
    }

    #[test]
    fn eval_and_derivative() {
        // p = 3 z^2 a - 1/2 z
        let z = Poly::var(2, 0);
        let a = Poly::var(2, 1);
        let p = z.pow(2).mul(&a).scale(&rat(3)).sub(&z.scale(&ratio(1, 2)));
        assert_eq!(p.eval(&[rat(2), rat(5)]), rat(59)); // 60 - 1
        let dz = p.partial(0);
        assert_eq!(dz.eval(&[rat(2), rat(5)]), rat(60) - ratio(1, 2));
    }

    #[test]
    fn substitution() {
        // f(x,y) = x y, substitute x -> u+v, y -> u-v gives u^2 - v^2
        let f = Poly::var(2, 0).mul(&Poly::var(2, 1));
        let u = Poly::var(2, 0);
        let v = Poly::var(2, 1);
        let g = f.subst(&[u.add(&v), u.sub(&v)]);
        assert!(g.sub(&u.pow(2).sub(&v.pow(2))).is_zero());
    }
}
