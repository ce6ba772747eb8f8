use super::cyclotomic::Cyclotomic;
use super::Scalar;
use num_integer::Integer;

/// A primitive Dirichlet character of p-power conductor, p an odd prime.
///
/// The group (Z/p^c)^x is cyclic; the character is pinned down by the image
/// of a fixed generator, recorded as an exponent k with
/// chi(g) = exp(2 pi i k / phi(p^c)). Conductor exponent 0 is the trivial
/// character of modulus 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletChar {
    p: u32,
    cond_exp: u32,
    gen_image: u32,
}

/// Smallest g that generates (Z/p^c)^x for every c >= 1 (a primitive root
/// mod p and mod p^2).
pub fn standard_generator(p: u32) -> u32 {
    assert!(p > 2 && is_prime(p), "odd prime required");
    'outer: for g in 2..p * p {
        if g % p == 0 {
            continue;
        }
        if order_mod(g, p) != p - 1 {
            continue 'outer;
        }
        if order_mod(g, p * p) != p * (p - 1) {
            continue 'outer;
        }
        return g;
    }
    unreachable!("no primitive root found");
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn order_mod(g: u32, m: u32) -> u32 {
    let mut x = (g % m) as u64;
    let mut k = 1;
    while x != 1 {
        x = x * (g as u64) % (m as u64);
        k += 1;
    }
    k
}

fn pow_u32(p: u32, e: u32) -> u64 {
    (0..e).fold(1u64, |acc, _| acc * p as u64)
}

impl DirichletChar {
    /// Trivial character (conductor 1).
    pub fn trivial(p: u32) -> Self {
        DirichletChar { p, cond_exp: 0, gen_image: 0 }
    }

    /// Construct from the generator image; rejects non-primitive data.
    pub fn new(p: u32, cond_exp: u32, gen_image: u32) -> Result<Self, String> {
        assert!(p > 2 && is_prime(p), "odd prime required");
        if cond_exp == 0 {
            return if gen_image == 0 {
                Ok(DirichletChar::trivial(p))
            } else {
                Err("conductor 1 admits only the trivial character".into())
            };
        }
        let phi = euler_phi_pp(p, cond_exp);
        let k = gen_image % phi;
        let primitive = if cond_exp == 1 { k != 0 } else { k % p != 0 };
        if !primitive {
            return Err(format!(
                "character with generator image {k} mod {phi} has conductor smaller than {p}^{cond_exp}"
            ));
        }
        Ok(DirichletChar { p, cond_exp, gen_image: k })
    }

    /// The quadratic character of conductor p (or p^c when c is given and
    /// the character stays primitive, which forces c = 1 for odd p).
    pub fn quadratic(p: u32) -> Self {
        DirichletChar::new(p, 1, (p - 1) / 2).expect("quadratic character is primitive")
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn cond_exp(&self) -> u32 {
        self.cond_exp
    }

    pub fn gen_image(&self) -> u32 {
        self.gen_image
    }

    pub fn conductor(&self) -> u64 {
        pow_u32(self.p, self.cond_exp)
    }

    pub fn is_trivial(&self) -> bool {
        self.cond_exp == 0
    }

    fn phi(&self) -> u32 {
        euler_phi_pp(self.p, self.cond_exp)
    }

    /// Multiplicative order of the character.
    pub fn order(&self) -> u32 {
        if self.cond_exp == 0 {
            return 1;
        }
        let phi = self.phi();
        phi / phi.gcd(&self.gen_image)
    }

    pub fn inverse(&self) -> Self {
        if self.cond_exp == 0 {
            return self.clone();
        }
        let phi = self.phi();
        DirichletChar { p: self.p, cond_exp: self.cond_exp, gen_image: (phi - self.gen_image) % phi }
    }

    /// chi(-1), always +1 or -1.
    pub fn parity(&self) -> i64 {
        if self.cond_exp == 0 {
            return 1;
        }
        // -1 = g^{phi/2}; chi(-1) = exp(pi i k) = (-1)^k
        if self.gen_image % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn discrete_log(&self, a: u64) -> Option<u64> {
        let m = self.conductor();
        let a = a % m;
        if a.gcd(&m) != 1 {
            return None;
        }
        let g = standard_generator(self.p) as u64;
        let mut x = 1u64 % m;
        for e in 0..self.phi() as u64 {
            if x == a {
                return Some(e);
            }
            x = x * g % m;
        }
        unreachable!("generator does not generate");
    }

    /// chi(a) as an exact cyclotomic value; 0 on non-units mod p^c.
    pub fn eval(&self, a: i64) -> Scalar {
        if self.cond_exp == 0 {
            return Scalar::int(1);
        }
        let m = self.conductor() as i64;
        let a = a.rem_euclid(m) as u64;
        match self.discrete_log(a) {
            None => Scalar::int(0),
            Some(e) => {
                let ord = self.order() as u64;
                let phi = self.phi() as u64;
                // chi(a) = zeta_ord^{k e ord / phi}
                let exp = ((self.gen_image as u64 * e) % phi) * ord / phi;
                Scalar::Cyc(Cyclotomic::root_of_unity(ord as u32, exp as i64)).normalize()
            }
        }
    }

    /// Product of two characters of the same p, primitivised.
    pub fn mul(&self, other: &DirichletChar) -> DirichletChar {
        assert_eq!(self.p, other.p, "characters at different primes");
        let c = self.cond_exp.max(other.cond_exp);
        if c == 0 {
            return DirichletChar::trivial(self.p);
        }
        let phi = euler_phi_pp(self.p, c);
        let lift = |chr: &DirichletChar| -> u32 {
            if chr.cond_exp == 0 {
                0
            } else {
                chr.gen_image * (phi / chr.phi())
            }
        };
        let mut k = (lift(self) + lift(other)) % phi;
        let mut c = c;
        // strip imprimitivity: conductor drops while the exponent lifts from
        // the smaller level
        loop {
            if c == 0 || (c == 1 && k != 0) || (c >= 2 && k % self.p != 0) {
                break;
            }
            if c == 1 {
                // k == 0: trivial
                return DirichletChar::trivial(self.p);
            }
            c -= 1;
            k /= self.p;
        }
        DirichletChar { p: self.p, cond_exp: c, gen_image: k }
    }
}

pub(crate) fn euler_phi_pp(p: u32, c: u32) -> u32 {
    if c == 0 {
        1
    } else {
        (pow_u32(p, c - 1) * (p as u64 - 1)) as u32
    }
}
