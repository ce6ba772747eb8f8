//! Exact scalar arithmetic: arbitrary-precision rationals, p-adic
//! valuations, cyclotomic integers in the power basis, Dirichlet characters
//! of p-power conductor, and the character sums built from them.

mod chardesc;
mod cyclotomic;
mod dirichlet;
mod gauss;
mod scalar;
mod sqrt_ext;
mod valuation;

pub use chardesc::CharDescriptor;
pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use dirichlet::DirichletChar;
pub use gauss::{additive_char_sum, gauss_sum, moebius};
pub use scalar::Scalar;
pub use sqrt_ext::SqrtExt;
pub use valuation::{vp, vp_int, Valuation};

use num_bigint::BigInt;

/// Arbitrary-precision rational number, always kept in reduced form with a
/// positive denominator by the underlying crate.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer as a `Rat`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical `"num/den"` rendering used by every JSON surface.
pub fn rat_to_string(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `"num/den"` or a bare integer.
pub fn rat_from_str(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|e| format!("bad numerator {s:?}: {e}"))?;
    let d: BigInt = d.trim().parse().map_err(|e| format!("bad denominator {s:?}: {e}"))?;
    if d == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rat::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_string_round_trip() {
        for s in ["3/2", "-7/3", "5/1", "0/1"] {
            let x = rat_from_str(s).unwrap();
            assert_eq!(rat_to_string(&x), s);
        }
        assert_eq!(rat_from_str("4/6").unwrap(), ratio(2, 3));
        assert_eq!(rat_from_str("-9").unwrap(), rat(-9));
        assert!(rat_from_str("1/0").is_err());
    }
}
