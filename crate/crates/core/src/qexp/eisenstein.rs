use super::locan::{LocAnFunction, LocAnRule, Support};
use super::qexpansion::{star_action, QExpansion, WeightDesc};
use crate::exactnum::{CharDescriptor, Scalar};

/// Tame level data for the Eisenstein family. Only the unramified tag is
/// computable here; anything else is recorded and rejected at evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TameTag {
    Unramified,
    Other(String),
}

/// Parameters of the two-character Eisenstein family: weight characters
/// kappa1, kappa2, the similitude twist xi, the parity of the tame character
/// at -1, and the tame-data tag.
#[derive(Clone, Debug, PartialEq)]
pub struct EisensteinSpec {
    pub kappa1: CharDescriptor,
    pub kappa2: CharDescriptor,
    pub xi: CharDescriptor,
    pub tame_parity: i64,
    pub tame: TameTag,
}

impl EisensteinSpec {
    pub fn unramified(kappa1: CharDescriptor, kappa2: CharDescriptor, xi: CharDescriptor) -> Self {
        EisensteinSpec { kappa1, kappa2, xi, tame_parity: 1, tame: TameTag::Unramified }
    }

    /// The family is supported on the locus where
    /// kappa1(-1) kappa2(-1) = -(tame parity).
    pub fn parity_ok(&self) -> bool {
        self.kappa1.parity() * self.kappa2.parity() == -self.tame_parity
    }
}

/// n-th coefficient of the depleted divisor-sum family:
/// a_n = sum over d e = n with p not dividing d or e of kappa1(d) kappa2(e),
/// and a_0 = 0.
pub fn eis_coeff(spec: &EisensteinSpec, p: u32, n: u64) -> Result<Scalar, String> {
    if let TameTag::Other(tag) = &spec.tame {
        return Err(format!("unsupported tame tag {tag:?}"));
    }
    if n == 0 {
        return Ok(Scalar::zero());
    }
    let mut acc = Scalar::zero();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let e = n / d;
        if d % p as u64 == 0 || e % p as u64 == 0 {
            continue;
        }
        let term = spec
            .kappa1
            .eval_int(d as i64)?
            .mul(&spec.kappa2.eval_int(e as i64)?);
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// The truncated family expansion with unset (raw) weight metadata.
pub fn eis_expansion(spec: &EisensteinSpec, p: u32, n: usize) -> Result<QExpansion, String> {
    let coeffs = (0..=n as u64)
        .map(|k| eis_coeff(spec, p, k))
        .collect::<Result<Vec<_>, _>>()?;
    let weight = WeightDesc {
        r: spec.kappa1.neg_power().mul(&spec.kappa2.neg_power()).mul(&CharDescriptor::power(-1)),
        c: spec.xi.clone(),
    };
    Ok(QExpansion::new(p, coeffs, weight))
}

/// The similitude-twisted family: coefficients of the raw family (the twist
/// trivialises at the cusp), weight (-kappa1-kappa2-1; xi). On the parity-
/// violating component the family is identically zero.
pub fn eis_xi(spec: &EisensteinSpec, p: u32, n: usize) -> Result<QExpansion, String> {
    let exp = eis_expansion(spec, p, n)?;
    if spec.parity_ok() {
        Ok(exp)
    } else {
        Ok(QExpansion::zero(p, n, exp.weight))
    }
}

/// Square-root twist: applies (rho * unit-indicator) to the coefficients
/// after checking that rho squares to the designated even-exponent character
/// on the units.
pub fn half_power_nabla(
    fq: &QExpansion,
    rho: &LocAnFunction,
    designated_exponent: i64,
) -> Result<QExpansion, String> {
    let desc = match &rho.rule {
        LocAnRule::CharPower(d) => d,
        _ => return Err("square-root twist needs a character-power rule".into()),
    };
    if 2 * desc.power != designated_exponent {
        return Err(format!(
            "rho^2 has exponent {} but the designated exponent is {designated_exponent}",
            2 * desc.power
        ));
    }
    if let Some(chi) = &desc.chi {
        if chi.order() > 2 {
            return Err("rho^2 carries a nontrivial character".into());
        }
    }
    let restricted = LocAnFunction {
        rule: rho.rule.clone(),
        support: Support::Units,
        radius: rho.radius,
    };
    Ok(star_action(&restricted, fq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, DirichletChar, Rat};
    use crate::poly::rat_pow;
    use crate::qexp::qexpansion::{deplete, theta};
    use num_integer::Integer;
    use num_traits::One;

    fn power_spec(a: i64, b: i64, xi: i64) -> EisensteinSpec {
        EisensteinSpec::unramified(
            CharDescriptor::power(a),
            CharDescriptor::power(b),
            CharDescriptor::power(xi),
        )
    }

    #[test]
    fn coefficient_examples() {
        // pairs (1,2) and (2,1) for n = 2, kappa = (1, 0)
        let spec = power_spec(1, 0, 0);
        assert_eq!(eis_coeff(&spec, 3, 2).unwrap(), Scalar::int(3));
        // depletion forces a_3 = 0 at p = 3
        assert_eq!(eis_coeff(&spec, 3, 3).unwrap(), Scalar::int(0));
        // single pair (1,1)
        assert_eq!(eis_coeff(&spec, 3, 1).unwrap(), Scalar::int(1));
        // unsupported tame data is rejected
        let mut bad = spec.clone();
        bad.tame = TameTag::Other("ramified".into());
        assert!(eis_coeff(&bad, 3, 1).is_err());
    }

    #[test]
    fn classical_specialisation_matches_brute_force() {
        // independent oracle: enumerate e | n directly with integer powers
        for (a, b) in [(1i64, 0i64), (3, 0), (2, 1)] {
            let spec = power_spec(a, b, 0);
            let f = eis_expansion(&spec, 3, 200).unwrap();
            for n in 1..=200u64 {
                let mut acc = Rat::from_integer(0.into());
                for e in 1..=n {
                    if n % e != 0 {
                        continue;
                    }
                    let d = n / e;
                    if d % 3 == 0 || e % 3 == 0 {
                        continue;
                    }
                    acc += rat_pow(&rat(d as i64), a) * rat_pow(&rat(e as i64), b);
                }
                assert_eq!(f.coeff(n as usize), &Scalar::Rat(acc), "n = {n}");
            }
        }
    }

    #[test]
    fn multiplicativity_on_coprime_indices() {
        let spec = power_spec(2, 1, 0);
        let f = eis_expansion(&spec, 5, 200).unwrap();
        for m in 1..=20u64 {
            for n in 1..=20u64 {
                if m * n > 200 || m.gcd(&n) != 1 {
                    continue;
                }
                let lhs = f.coeff((m * n) as usize);
                let rhs = f.coeff(m as usize).mul(f.coeff(n as usize));
                assert_eq!(*lhs, rhs, "multiplicativity failed at ({m},{n})");
            }
        }
    }

    #[test]
    fn integrality_of_integer_weight_coefficients() {
        let chi = DirichletChar::quadratic(5);
        let spec = EisensteinSpec::unramified(
            CharDescriptor::new(2, Some(chi)),
            CharDescriptor::power(1),
            CharDescriptor::power(0),
        );
        let f = eis_expansion(&spec, 5, 120).unwrap();
        for c in &f.coeffs {
            let r = c.as_rat().expect("quadratic values are rational");
            assert!(r.denom().is_one(), "non-integral coefficient {r}");
        }
    }

    #[test]
    fn weight_metadata_and_parity() {
        // Situation values: kappa1 = t1 - k, kappa2 = k gives weight
        // (-1-t1; 1-r2)
        let (t1, k, r2) = (2i64, 5i64, 1i64);
        let spec = power_spec(t1 - k, k, 1 - r2);
        let f = eis_expansion(&spec, 3, 5).unwrap();
        assert_eq!(f.weight.r, CharDescriptor::power(-1 - t1));
        assert_eq!(f.weight.c, CharDescriptor::power(1 - r2));

        // xi = kappa1 + kappa2 leaves the coefficients alone
        let spec2 = power_spec(1, 2, 3);
        let raw = eis_expansion(&spec2, 3, 40).unwrap();
        let twisted = eis_xi(&spec2, 3, 40).unwrap();
        assert_eq!(raw.coeffs, twisted.coeffs);

        // parity violation zeroes the family: a + b even against trivial
        // tame parity
        let bad = power_spec(1, 1, 0);
        assert!(!bad.parity_ok());
        let z = eis_xi(&bad, 3, 40).unwrap();
        assert!(z.is_zero());
        // and a + b odd passes
        assert!(power_spec(1, 0, 0).parity_ok());
    }

    #[test]
    fn square_root_twist() {
        let spec = power_spec(3, 0, 0);
        let f = eis_expansion(&spec, 3, 60).unwrap();
        // rho = identity on units is a square root of exponent 2, and on a
        // depleted series it acts exactly as the differential
        let rho = LocAnFunction::identity();
        let d = deplete(&f);
        let got = half_power_nabla(&d, &rho, 2).unwrap();
        assert_eq!(got, deplete(&theta(&f)));
        // applying rho = n^k twice equals the star action of n^{2k} on units
        let rho2 = LocAnFunction::char_power(CharDescriptor::power(2), Support::All);
        let twice = half_power_nabla(&half_power_nabla(&f, &rho2, 4).unwrap(), &rho2, 4).unwrap();
        let full = LocAnFunction::char_power(CharDescriptor::power(4), Support::Units);
        assert_eq!(twice, star_action(&full, &f));
        // rho vanishes on non-units
        for n in (0..=60).step_by(3) {
            assert!(got.coeff(n).is_zero());
        }
        // exponent mismatch is rejected
        assert!(half_power_nabla(&f, &rho2, 2).is_err());
    }
}
