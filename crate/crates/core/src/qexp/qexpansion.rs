use super::locan::LocAnFunction;
use crate::exactnum::{CharDescriptor, Scalar};

/// Weight metadata for a truncated expansion: a GL(2)-type pair of character
/// descriptors (r; c), which specialise to integers for classical forms.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightDesc {
    pub r: CharDescriptor,
    pub c: CharDescriptor,
}

impl WeightDesc {
    pub fn int(r: i64, c: i64) -> Self {
        WeightDesc { r: CharDescriptor::power(r), c: CharDescriptor::power(c) }
    }
}

/// A q-expansion truncated at q^N with exact coefficients. All arithmetic
/// is coefficientwise and valid to the stated truncation.
#[derive(Clone, Debug, PartialEq)]
pub struct QExpansion {
    pub p: u32,
    pub coeffs: Vec<Scalar>,
    pub weight: WeightDesc,
}

impl QExpansion {
    pub fn new(p: u32, coeffs: Vec<Scalar>, weight: WeightDesc) -> Self {
        QExpansion { p, coeffs, weight }
    }

    pub fn zero(p: u32, n: usize, weight: WeightDesc) -> Self {
        QExpansion { p, coeffs: vec![Scalar::zero(); n + 1], weight }
    }

    /// Truncation order N (coefficients run 0..=N).
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Scalar {
        &self.coeffs[n]
    }

    pub fn add(&self, other: &QExpansion) -> QExpansion {
        assert_eq!(self.p, other.p);
        let n = self.truncation().min(other.truncation());
        let coeffs = (0..=n).map(|i| self.coeffs[i].add(&other.coeffs[i])).collect();
        QExpansion { p: self.p, coeffs, weight: self.weight.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// The action of a locally analytic function on the coefficient index:
/// a_n |-> f(n) a_n. The identity function realises the weight-raising
/// differential q d/dq; the unit-indicator realises p-depletion.
pub fn star_action(f: &LocAnFunction, fq: &QExpansion) -> QExpansion {
    let coeffs = fq
        .coeffs
        .iter()
        .enumerate()
        .map(|(n, a)| f.eval(n as u64, fq.p).mul(a))
        .collect();
    QExpansion { p: fq.p, coeffs, weight: fq.weight.clone() }
}

/// Remove every coefficient with index divisible by p (including a_0).
pub fn deplete(fq: &QExpansion) -> QExpansion {
    star_action(&LocAnFunction::unit_indicator(), fq)
}

/// Multiply a_n by n.
pub fn theta(fq: &QExpansion) -> QExpansion {
    star_action(&LocAnFunction::identity(), fq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio, CharDescriptor, Scalar};
    use crate::qexp::locan::Support;
    use rand::{Rng, SeedableRng};

    fn series(p: u32, coeffs: &[i64]) -> QExpansion {
        QExpansion::new(
            p,
            coeffs.iter().map(|&c| Scalar::int(c)).collect(),
            WeightDesc::int(0, 0),
        )
    }

    #[test]
    fn theta_and_depletion_basics() {
        // q + q^2 maps to q + 2 q^2 under the differential
        let f = series(3, &[0, 1, 1]);
        assert_eq!(theta(&f).coeffs, vec![Scalar::int(0), Scalar::int(1), Scalar::int(2)]);
        // depleting the full geometric series zeroes indices 0, 3, 6, ...
        let g = series(3, &[1, 1, 1, 1, 1, 1, 1]);
        let d = deplete(&g);
        for (n, c) in d.coeffs.iter().enumerate() {
            let expect = if n % 3 == 0 { 0 } else { 1 };
            assert_eq!(c, &Scalar::int(expect));
        }
        // depletion is idempotent; theta of a constant vanishes
        assert_eq!(deplete(&d), d);
        assert!(theta(&series(3, &[5])).is_zero());
        // the constant function one changes nothing
        let one = LocAnFunction::one();
        assert_eq!(star_action(&one, &g), g);
    }

    #[test]
    fn theta_and_depletion_commute() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..20 {
            let coeffs: Vec<Scalar> = (0..30)
                .map(|_| Scalar::Rat(ratio(rng.gen_range(-9..10), rng.gen_range(1..5))))
                .collect();
            let f = QExpansion::new(5, coeffs, WeightDesc::int(2, 0));
            assert_eq!(theta(&deplete(&f)), deplete(&theta(&f)));
        }
    }

    #[test]
    fn star_action_is_a_ring_action() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(15);
        let coeffs: Vec<Scalar> = (0..25)
            .map(|_| Scalar::Rat(ratio(rng.gen_range(-9..10), rng.gen_range(1..5))))
            .collect();
        let fq = QExpansion::new(3, coeffs, WeightDesc::int(0, 0));
        let f = LocAnFunction::char_power(CharDescriptor::power(2), Support::All);
        let g = LocAnFunction::unit_indicator();
        // multiplicativity: (f g) * F = f * (g * F)
        let fg = f.mul(&g).unwrap();
        assert_eq!(star_action(&fg, &fq), star_action(&f, &star_action(&g, &fq)));
        // additivity holds coefficientwise: (f+g)(n) a_n = f(n) a_n + g(n) a_n
        for n in 0..=fq.truncation() {
            let lhs = f.eval(n as u64, 3).add(&g.eval(n as u64, 3)).mul(fq.coeff(n));
            let rhs = star_action(&f, &fq).coeff(n).add(star_action(&g, &fq).coeff(n));
            assert_eq!(lhs, rhs);
        }
        // identity-squared acts as the power-two character away from p... on
        // all of Z_p the identity composed twice is n^2
        let id = LocAnFunction::identity();
        let id2 = id.mul(&id).unwrap();
        assert_eq!(
            star_action(&id2, &fq),
            star_action(&id, &star_action(&id, &fq))
        );
        let _ = rat(0);
    }
}
