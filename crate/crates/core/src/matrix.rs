//! Exact 4x4 matrices: rational entries for group elements, Laurent
//! polynomial entries for symbolic identity checking.

use crate::exactnum::{rat, Rat};
use crate::poly::Poly;
use num_traits::{One, Zero};

/// A 4x4 matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix(pub [[Rat; 4]; 4]);

impl QMatrix {
    pub fn zero() -> Self {
        QMatrix(std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero())))
    }

    pub fn identity() -> Self {
        let mut m = QMatrix::zero();
        for i in 0..4 {
            m.0[i][i] = Rat::one();
        }
        m
    }

    pub fn from_i64(rows: [[i64; 4]; 4]) -> Self {
        QMatrix(std::array::from_fn(|i| std::array::from_fn(|j| rat(rows[i][j]))))
    }

    pub fn from_rows(rows: [[Rat; 4]; 4]) -> Self {
        QMatrix(rows)
    }

    pub fn diag(d: [Rat; 4]) -> Self {
        let mut m = QMatrix::zero();
        for (i, x) in d.into_iter().enumerate() {
            m.0[i][i] = x;
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.0[i][j]
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        let mut out = QMatrix::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = Rat::zero();
                for k in 0..4 {
                    if !self.0[i][k].is_zero() && !other.0[k][j].is_zero() {
                        acc += self.0[i][k].clone() * other.0[k][j].clone();
                    }
                }
                out.0[i][j] = acc;
            }
        }
        out
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i].clone())))
    }

    pub fn scale(&self, c: &Rat) -> QMatrix {
        QMatrix(std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j].clone() * c.clone())))
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        QMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j].clone() - other.0[i][j].clone())
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|r| r.iter().all(|c| c.is_zero()))
    }

    /// Inverse by Gauss-Jordan elimination; None when singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        let mut a: Vec<Vec<Rat>> = (0..4)
            .map(|i| {
                let mut row: Vec<Rat> = self.0[i].to_vec();
                for j in 0..4 {
                    row.push(if i == j { Rat::one() } else { Rat::zero() });
                }
                row
            })
            .collect();
        for col in 0..4 {
            let pivot = (col..4).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            let inv = a[col][col].clone().recip();
            for c in col..8 {
                a[col][c] = a[col][c].clone() * inv.clone();
            }
            for r in 0..4 {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in col..8 {
                        let t = f.clone() * a[col][c].clone();
                        a[r][c] -= t;
                    }
                }
            }
        }
        let mut out = QMatrix::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = a[i][j + 4].clone();
            }
        }
        Some(out)
    }
}

/// The antidiagonal symplectic-similitude form: J(e1,e4) = J(e2,e3) = 1.
pub fn form_j() -> QMatrix {
    QMatrix::from_i64([[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]])
}

/// The similitude factor s with g^t J g = s J, when g belongs to the group;
/// None otherwise.
pub fn similitude(g: &QMatrix) -> Option<Rat> {
    let j = form_j();
    let gtjg = g.transpose().mul(&j).mul(g);
    // read s off the (1,4) slot, then verify proportionality
    let s = gtjg.0[0][3].clone();
    if gtjg.sub(&j.scale(&s)).is_zero() && !s.is_zero() {
        Some(s)
    } else {
        None
    }
}

pub fn in_group(g: &QMatrix) -> bool {
    similitude(g).is_some()
}

/// A 4x4 matrix over the Laurent polynomial ring, for symbolic checks.
#[derive(Clone, Debug)]
pub struct PMatrix {
    pub nvars: usize,
    pub entries: Vec<Poly>, // row-major, 16 entries
}

impl PMatrix {
    pub fn from_fn(nvars: usize, f: impl Fn(usize, usize) -> Poly) -> Self {
        let mut entries = Vec::with_capacity(16);
        for i in 0..4 {
            for j in 0..4 {
                let p = f(i, j);
                assert_eq!(p.nvars, nvars);
                entries.push(p);
            }
        }
        PMatrix { nvars, entries }
    }

    pub fn identity(nvars: usize) -> Self {
        PMatrix::from_fn(nvars, |i, j| if i == j { Poly::one(nvars) } else { Poly::zero(nvars) })
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * 4 + j]
    }

    pub fn mul(&self, other: &PMatrix) -> PMatrix {
        assert_eq!(self.nvars, other.nvars);
        PMatrix::from_fn(self.nvars, |i, j| {
            let mut acc = Poly::zero(self.nvars);
            for k in 0..4 {
                acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
            }
            acc
        })
    }

    pub fn sub(&self, other: &PMatrix) -> PMatrix {
        PMatrix::from_fn(self.nvars, |i, j| self.get(i, j).sub(other.get(i, j)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn from_q(nvars: usize, m: &QMatrix) -> Self {
        PMatrix::from_fn(nvars, |i, j| Poly::constant(nvars, m.0[i][j].clone()))
    }

    pub fn eval(&self, point: &[Rat]) -> QMatrix {
        let mut out = QMatrix::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = self.get(i, j).eval(point);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_is_symplectic_similitude() {
        let j = form_j();
        // J itself is in the group with similitude 1, and J^2 = -I
        assert_eq!(similitude(&j), Some(rat(1)));
        assert_eq!(j.mul(&j), QMatrix::identity().scale(&rat(-1)));
    }

    #[test]
    fn inverse_round_trip() {
        let m = QMatrix::from_i64([[1, 2, 0, 0], [0, 1, 0, 0], [3, 0, 1, 0], [0, 0, 5, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMatrix::identity());
    }
}
