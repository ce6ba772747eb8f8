use super::satake::{SatakeGL2, SatakeGSp4};
use crate::exactnum::{gauss_sum, rat, DirichletChar, Scalar, SqrtExt};
use crate::poly::rat_pow;
use num_traits::Zero;

/// The modified interpolation factor at p for the 8-dimensional product.
///
/// For the trivial twist this is the four-factor ratio
/// prod_{i,j <= 2} (1 - p^{j-1} / (theta_i mu_j)) / (1 - p^{-j} theta_i mu_j)
/// over the Klingen pair; a vanishing denominator is an interpolation pole.
/// For a twist of conductor p^c (c >= 1) it is
/// G(chi^{-1})^{-4} p^{4 c j} (theta1 theta2 mu1 mu2)^{-2c}.
pub fn ep_modifier_a(
    theta: &SatakeGSp4,
    mu: &SatakeGL2,
    chi: &DirichletChar,
    j: i64,
    p: u32,
) -> Result<Scalar, String> {
    let (t1, t2) = theta.klingen_pair();
    let mus = [mu.gamma1.clone(), mu.gamma2.clone()];
    if chi.is_trivial() {
        let mut acc = rat(1);
        for t in [&t1, &t2] {
            for m in &mus {
                let num = rat(1) - rat_pow(&rat(p as i64), j - 1) / (t.clone() * m.clone());
                let den = rat(1) - rat_pow(&rat(p as i64), -j) * t.clone() * m.clone();
                if den.is_zero() {
                    return Err("interpolation pole: denominator factor vanishes".into());
                }
                acc = acc * num / den;
            }
        }
        Ok(Scalar::Rat(acc))
    } else {
        let c = chi.cond_exp() as i64;
        let gauss_inv4 = Scalar::Cyc(gauss_sum(&chi.inverse())).pow(-4);
        let power = rat_pow(&rat(p as i64), 4 * c * j);
        let prod = t1 * t2 * mus[0].clone() * mus[1].clone();
        let sat = rat_pow(&prod, -2 * c);
        Ok(gauss_inv4.mul(&Scalar::Rat(power * sat)))
    }
}

/// The central-point multiplier for the 16-dimensional triple product:
/// prod over the Klingen pair and both GL(2) pairs of
/// (1 - p^{-1/2} / (theta_i gamma_j gamma_k)), exact in Q(sqrt p).
pub fn ep_modifier_b(
    theta: &SatakeGSp4,
    mu1: &SatakeGL2,
    mu2: &SatakeGL2,
    p: u32,
) -> Result<SqrtExt, String> {
    let (t1, t2) = theta.klingen_pair();
    let mut acc = SqrtExt::int(p, 1);
    let root = SqrtExt::sqrt_p_pow(p, -1); // p^{-1/2}
    for t in [&t1, &t2] {
        for g1 in [&mu1.gamma1, &mu1.gamma2] {
            for g2 in [&mu2.gamma1, &mu2.gamma2] {
                let denom = t.clone() * g1.clone() * g2.clone();
                if denom.is_zero() {
                    return Err("zero Satake parameter".into());
                }
                let factor =
                    SqrtExt::int(p, 1).sub(&root.mul(&SqrtExt::from_rat(p, denom.recip())));
                acc = acc.mul(&factor);
            }
        }
    }
    Ok(acc)
}
