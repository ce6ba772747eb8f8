//! Subcommand dispatch: parse flags into library calls, encode the results.

use crate::schema::*;
use crate::{Cli, Cmd, DistCmd, ExactnumCmd, LfacCmd, QexpCmd, RepCmd, VerifyCmd, WeightsCmd, ZetaCmd};
use gsp4l::exactnum::{additive_char_sum, gauss_sum, vp, Scalar};
use gsp4l::lfactors as lf;
use gsp4l::qexp;
use gsp4l::repmodel as rep;
use gsp4l::weights as wt;
use gsp4l::zeta;
use serde_json::{json, Value};

pub enum CliError {
    /// Malformed input: exit code 1.
    Input(String),
    /// Domain failure (pole, constraint, depth bound): exit code 2.
    Domain(String),
}

fn input<T>(r: Result<T, String>) -> Result<T, CliError> {
    r.map_err(CliError::Input)
}

fn domain<T>(r: Result<T, String>) -> Result<T, CliError> {
    r.map_err(CliError::Domain)
}

pub fn dispatch(cli: &Cli) -> Result<Value, CliError> {
    let p = cli.globals.p;
    let n_trunc = cli.globals.trunc;
    match &cli.cmd {
        Cmd::Exactnum { cmd } => match cmd {
            ExactnumCmd::Gauss { chi } => {
                let chi = input(parse_chi(chi, p))?;
                let g = gauss_sum(&chi);
                let square = Scalar::Cyc(g.clone()).mul(&Scalar::Cyc(g.clone()));
                Ok(json!({
                    "chi": { "p": chi.prime(), "c": chi.cond_exp(), "k": chi.gen_image() },
                    "gauss_sum": cyclotomic_json(&g),
                    "square": scalar_json(&square),
                }))
            }
            ExactnumCmd::Addsum { h } => {
                if *h == 0 {
                    return Err(CliError::Input("h must be at least 1".into()));
                }
                Ok(json!({ "p": p, "h": h, "value": scalar_json(&additive_char_sum(p, *h)) }))
            }
            ExactnumCmd::Vp { x } => {
                let x = input(parse_rat(x))?;
                Ok(json!({ "valuation": valuation_json(&vp(&x, p)) }))
            }
        },
        Cmd::Weights { cmd } => weights_cmd(cmd),
        Cmd::Rep { cmd } => rep_cmd(cmd, cli),
        Cmd::Qexp { cmd } => qexp_cmd(cmd, p, n_trunc),
        Cmd::Lfac { cmd } => lfac_cmd(cmd, p),
        Cmd::Zeta { cmd } => zeta_cmd(cmd, p),
        Cmd::Dist { cmd } => dist_cmd(cmd, p),
        Cmd::Verify { cmd } => match cmd {
            VerifyCmd::Identities { samples } => {
                let report = rep::verify_matrix_identities(cli.globals.seed, *samples);
                Ok(json!({
                    "checked": report.samples_checked,
                    "failed": report.samples_failed,
                    "symbolic": {
                        "torus_conjugation": report.torus_conjugation_symbolic,
                        "shift_conjugation": report.shift_conjugation_symbolic,
                        "commutation": report.commutation_symbolic,
                    },
                    "all_hold": report.all_hold(),
                }))
            }
        },
    }
}

fn weights_cmd(cmd: &WeightsCmd) -> Result<Value, CliError> {
    match cmd {
        WeightsCmd::Act { elt, weight } => {
            let w = input(wt::WeylElt::parse(elt))?;
            let k = input(parse_weight(weight))?;
            Ok(json!({ "weight": wt::weyl_act(w, &k).to_string() }))
        }
        WeightsCmd::Star { elt, weight } => {
            let w = input(wt::WeylElt::parse(elt))?;
            let k = input(parse_weight(weight))?;
            Ok(json!({ "weight": wt::star_act(w, &k).to_string() }))
        }
        WeightsCmd::Situation { r1, r2, t1, t2, xi1 } => {
            let s = domain(wt::situation_weights(*r1, *r2, *t1, *t2, *xi1))?;
            Ok(json!({
                "nu_G": s.nu_g.to_string(),
                "nu_H": s.nu_h.to_string(),
                "kappa_G": s.kappa_g.to_string(),
                "kappa_H": s.kappa_h.to_string(),
                "zeta_H1": s.zeta_h1.to_string(),
                "zeta_H2": s.zeta_h2.to_string(),
                "xi1": s.xi1,
                "xi2": s.xi2,
            }))
        }
        WeightsCmd::Slope { kind, v_kl, v_si, r1, r2 } => {
            let kind = match kind.to_ascii_lowercase().as_str() {
                "klingen" | "kl" => wt::SlopeKind::Klingen,
                "siegel" | "si" => wt::SlopeKind::Siegel,
                "borel" | "b" => wt::SlopeKind::Borel,
                other => return Err(CliError::Input(format!("unknown slope kind {other:?}"))),
            };
            let v_kl = input(parse_valuation(v_kl))?;
            let v_si = input(parse_valuation(v_si))?;
            Ok(json!({ "small_slope": wt::slope_check(kind, &v_kl, &v_si, *r1, *r2) }))
        }
        WeightsCmd::Ss { kind, v_siegel, v_klingen, v_center, r1, r2, bound } => {
            let kind = match kind.to_ascii_lowercase().as_str() {
                "minimal-cosets" | "m-w1" | "m" => wt::SsKind::MinimalCosets,
                "levi" | "m,w1" => wt::SsKind::LeviReflection,
                other => return Err(CliError::Input(format!("unknown ss kind {other:?}"))),
            };
            let table = wt::ValuationTable::new(
                input(parse_rat(v_siegel))?,
                input(parse_rat(v_klingen))?,
                input(parse_rat(v_center))?,
            );
            let kappa = wt::kappa_g_star(*r1, *r2);
            let report = wt::ss_condition(kind, &table, &kappa, *bound);
            let witnesses: Vec<Value> = report
                .witnesses
                .iter()
                .map(|(w, found)| {
                    json!({
                        "excluded": w.to_string(),
                        "witness": found.map(|(m, n, k)| json!([m, n, k])).unwrap_or(Value::Null),
                    })
                })
                .collect();
            Ok(json!({
                "holds": report.holds,
                "bound_hit": report.bound_hit,
                "degree_bound": report.degree_bound,
                "witnesses": witnesses,
            }))
        }
        WeightsCmd::SigmaSet { r1, r2 } => {
            if !(*r1 >= *r2 && *r2 >= 0) {
                return Err(CliError::Domain("dominant weight required".into()));
            }
            let sigma: Vec<Value> =
                wt::sigma_set(*r1, *r2).into_iter().map(|(a, b)| json!([a, b])).collect();
            let fam = wt::nearly_weight_set(*r1, *r2);
            let all_pass = fam.iter().all(|m| m.passes_valuation_inequalities(*r1, *r2));
            let family: Vec<Value> = fam
                .iter()
                .map(|m| {
                    json!({
                        "t1": m.t1, "t2": m.t2,
                        "delta": [m.delta1, m.delta2],
                        "i": m.i, "j": m.j,
                        "weight": m.weight.to_string(),
                    })
                })
                .collect();
            Ok(json!({
                "sigma": sigma,
                "cardinality": family.len(),
                "all_pass_valuation_inequalities": all_pass,
                "family": family,
            }))
        }
    }
}

fn rep_cmd(cmd: &RepCmd, cli: &Cli) -> Result<Value, CliError> {
    let p = cli.globals.p;
    match cmd {
        RepCmd::BranchEval { t1, t2, r2, z, a, b } => {
            let r1 = t1 + t2 + r2;
            let f = domain(rep::branch_closed_form(*t1, *t2, r1, *r2))?;
            let pt = rep::UnipotentPoint::new(
                input(parse_rat(z))?,
                input(parse_rat(a))?,
                input(parse_rat(b))?,
            );
            let value = f.eval(&pt.matrix());
            let formula = rep::unipotent_branch_value(*t1, *t2, *r2, &pt);
            Ok(json!({
                "value": rat_json(&value),
                "unipotent_formula": rat_json(&formula),
                "agree": value == formula,
            }))
        }
        RepCmd::Factor { matrix, beta, n } => {
            let m = input(parse_matrix(matrix))?;
            let report = domain(rep::iwahori_factor(&m, p, *beta, *n))?;
            Ok(json!({
                "z": rat_json(&report.point.z),
                "a": rat_json(&report.point.a),
                "b": rat_json(&report.point.b),
                "complement": matrix_json(&report.complement),
                "z_in_depth": report.z_in_depth,
                "a_in_disc": report.a_in_disc,
                "b_in_disc": report.b_in_disc,
            }))
        }
        RepCmd::Verify { samples } => {
            let report = rep::verify_matrix_identities(cli.globals.seed, *samples);
            Ok(json!({
                "checked": report.samples_checked,
                "failed": report.samples_failed,
                "all_hold": report.all_hold(),
            }))
        }
    }
}

fn qexp_cmd(cmd: &QexpCmd, p: u32, n_trunc: usize) -> Result<Value, CliError> {
    match cmd {
        QexpCmd::Eis { kappa1, kappa2, xi, tame_parity } => {
            if *tame_parity != 1 && *tame_parity != -1 {
                return Err(CliError::Input("tame parity must be +1 or -1".into()));
            }
            let mut spec = qexp::EisensteinSpec::unramified(
                input(parse_chardesc(kappa1, p))?,
                input(parse_chardesc(kappa2, p))?,
                input(parse_chardesc(xi, p))?,
            );
            spec.tame_parity = *tame_parity;
            let fam = domain(qexp::eis_xi(&spec, p, n_trunc))?;
            Ok(json!({
                "parity_ok": spec.parity_ok(),
                "expansion": qexp_json(&fam),
            }))
        }
        QexpCmd::Star { function, payload } => {
            let f = input(parse_locan(function, p))?;
            let fq = input(read_payload(payload).and_then(|v| qexp_from_json(&v)))?;
            Ok(json!({
                "function": locan_rule_json(&f),
                "expansion": qexp_json(&qexp::star_action(&f, &fq)),
            }))
        }
        QexpCmd::Deplete { payload } => {
            let fq = input(read_payload(payload).and_then(|v| qexp_from_json(&v)))?;
            Ok(json!({ "expansion": qexp_json(&qexp::deplete(&fq)) }))
        }
    }
}

fn parse_satake4(s: &str) -> Result<lf::SatakeGSp4, String> {
    let v = parse_rat_list(s, 4)?;
    lf::SatakeGSp4::new([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()])
}

fn parse_satake2(s: &str) -> Result<lf::SatakeGL2, String> {
    let v = parse_rat_list(s, 2)?;
    lf::SatakeGL2::new(v[0].clone(), v[1].clone())
}

fn lfac_cmd(cmd: &LfacCmd, p: u32) -> Result<Value, CliError> {
    match cmd {
        LfacCmd::Euler { theta, gamma, chi_value } => {
            let theta = domain(parse_satake4(theta))?;
            let gamma = domain(parse_satake2(gamma))?;
            let chi = Scalar::Rat(input(parse_rat(chi_value))?);
            let poly = lf::spin_std_euler(&theta, &gamma, &chi);
            Ok(json!({
                "degree": poly.degree(),
                "coeffs": poly.coeffs.iter().map(scalar_json).collect::<Vec<_>>(),
            }))
        }
        LfacCmd::Linf { r1, r2, t2, s } => {
            let v = domain(lf::linf(*r1, *r2, *t2, *s))?;
            Ok(json!({ "value": v }))
        }
        LfacCmd::Crit { r1, r2, t2 } => match lf::crit_range(*r1, *r2, *t2) {
            None => Ok(json!({ "empty": true })),
            Some(c) => Ok(json!({
                "empty": false,
                "j_min": c.j_min,
                "j_max": c.j_max,
                "shifted_max": c.shifted_max,
            })),
        },
        LfacCmd::EpA { theta, mu, chi, j } => {
            let theta = domain(parse_satake4(theta))?;
            let mu = domain(parse_satake2(mu))?;
            let chi = input(parse_chi(chi, p))?;
            let value = domain(lf::ep_modifier_a(&theta, &mu, &chi, *j, p))?;
            let mut out = json!({ "value": scalar_json(&value), "branch": if chi.is_trivial() { "trivial" } else { "ramified" } });
            if !chi.is_trivial() {
                let g4 = Scalar::Cyc(gauss_sum(&chi.inverse())).pow(-4);
                out["gauss_factor"] = scalar_json(&g4);
            }
            Ok(out)
        }
        LfacCmd::EpB { theta, mu1, mu2 } => {
            let theta = domain(parse_satake4(theta))?;
            let mu1 = domain(parse_satake2(mu1))?;
            let mu2 = domain(parse_satake2(mu2))?;
            let value = domain(lf::ep_modifier_b(&theta, &mu1, &mu2, p))?;
            Ok(json!({ "value": sqrtext_json(&value) }))
        }
        LfacCmd::Region { case, r1, r2, t2, j, d1, d2 } => {
            let inside = match case.to_ascii_lowercase().as_str() {
                "a" => lf::region_f_a(*r1, *r2, *t2, *j),
                "b" => lf::region_f_b(*r1, *r2, *d1, *d2),
                other => return Err(CliError::Input(format!("unknown case {other:?}"))),
            };
            Ok(json!({ "in_region": inside }))
        }
        LfacCmd::InterpA { theta, mu, chi, r1, r2, t2, j, zs, payload, bound } => {
            let theta = domain(parse_satake4(theta))?;
            let mu = domain(parse_satake2(mu))?;
            let chi = input(parse_chi(chi, p))?;
            let z_s = input(parse_rat(zs))?;
            let euler_data = match payload {
                None => Vec::new(),
                Some(path) => {
                    let v = input(read_payload(path))?;
                    input(parse_euler_data(&v))?
                }
            };
            let rec = domain(lf::interp_rhs_a(&lf::InterpInputsA {
                theta: &theta,
                mu: &mu,
                chi: &chi,
                r1: *r1,
                r2: *r2,
                t2: *t2,
                j: *j,
                p,
                z_s,
                euler_data: &euler_data,
                truncation_bound: *bound,
            }))?;
            Ok(json!({
                "ep": scalar_json(&rec.ep),
                "z_s": rat_json(&rec.z_s),
                "lambda_truncation": rec.lambda_truncation,
                "omega": rec.omega,
                "exact_part": scalar_json(&rec.exact_part),
                "numeric_over_omega": rec.numeric_over_omega,
                "j_shifted": rec.j_shifted,
                "j_absolute": rec.j_absolute,
                "assembled_is_zero": rec.assembled_is_zero(),
            }))
        }
        LfacCmd::InterpB { theta, mu1, mu2, r1, r2, d1, d2, period } => {
            let theta = domain(parse_satake4(theta))?;
            let mu1 = domain(parse_satake2(mu1))?;
            let mu2 = domain(parse_satake2(mu2))?;
            let period_value = input(parse_rat(period))?;
            let rec = domain(lf::interp_rhs_b(&lf::InterpInputsB {
                theta: &theta,
                mu1: &mu1,
                mu2: &mu2,
                r1: *r1,
                r2: *r2,
                d1: *d1,
                d2: *d2,
                p,
                period_value,
            }))?;
            Ok(json!({
                "ep": sqrtext_json(&rec.ep),
                "period": rat_json(&rec.period_value),
                "omega": rec.omega,
                "exact_part": sqrtext_json(&rec.exact_part),
                "assembled_is_zero": rec.assembled_is_zero(),
            }))
        }
    }
}

fn parse_euler_data(v: &Value) -> Result<Vec<lf::PrimeEulerData>, String> {
    let arr = v.as_array().ok_or("euler data payload must be an array")?;
    let mut out = Vec::new();
    for item in arr {
        let ell = item.get("ell").and_then(|x| x.as_u64()).ok_or("entry needs ell")?;
        let theta = item
            .get("theta")
            .and_then(|x| x.as_array())
            .ok_or("entry needs theta")?;
        let gamma = item
            .get("gamma")
            .and_then(|x| x.as_array())
            .ok_or("entry needs gamma")?;
        let as_rat = |x: &Value| -> Result<gsp4l::Rat, String> {
            parse_rat(x.as_str().ok_or("rationals travel as strings")?)
        };
        if theta.len() != 4 || gamma.len() != 2 {
            return Err("theta needs 4 entries and gamma 2".into());
        }
        let theta = lf::SatakeGSp4::new([
            as_rat(&theta[0])?,
            as_rat(&theta[1])?,
            as_rat(&theta[2])?,
            as_rat(&theta[3])?,
        ])?;
        let gamma = lf::SatakeGL2::new(as_rat(&gamma[0])?, as_rat(&gamma[1])?)?;
        let chi_value = match item.get("chi_value") {
            None => gsp4l::exactnum::rat(1),
            Some(x) => as_rat(x)?,
        };
        out.push(lf::PrimeEulerData { ell, theta, gamma, chi_value });
    }
    Ok(out)
}

fn zeta_cmd(cmd: &ZetaCmd, p: u32) -> Result<Value, CliError> {
    match cmd {
        ZetaCmd::Iwahori { alpha, mu, chi, beta, s } => {
            let a = input(parse_rat_list(alpha, 2))?;
            let m = input(parse_rat_list(mu, 2))?;
            let chi = input(parse_chi(chi, p))?;
            let inp = zeta::IwahoriZetaInput {
                alpha1: a[0].clone(),
                alpha2: a[1].clone(),
                mu1: m[0].clone(),
                mu2: m[1].clone(),
                chi,
                beta: *beta,
                p,
            };
            let res = domain(zeta::zeta_iwahori(&inp))?;
            let body = match &res.body {
                zeta::ZetaBody::Unramified(b) => {
                    let mut obj = json!({
                        "kind": "unramified",
                        "num": b.num.iter().map(rat_json).collect::<Vec<_>>(),
                        "den": b.den.iter().map(rat_json).collect::<Vec<_>>(),
                    });
                    if let Some(s) = s {
                        match b.eval_at(*s, p) {
                            Ok(v) => obj["value_at_s"] = rat_json(&v),
                            Err(e) => obj["value_at_s"] = json!({ "pole": e }),
                        }
                    }
                    obj
                }
                zeta::ZetaBody::Ramified(b) => {
                    let mut obj = json!({
                        "kind": "ramified",
                        "gauss_inverse_fourth": scalar_json(&b.gauss_inverse_fourth),
                        "conductor_exp": b.r,
                        "satake_power": rat_json(&b.satake_power),
                    });
                    if let Some(s) = s {
                        obj["value_at_s"] = scalar_json(&b.eval_at(*s, p));
                    }
                    obj
                }
            };
            Ok(json!({
                "prefactor_exp": res.prefactor_exp,
                "unit_ambiguous": res.unit_ambiguous,
                "body": body,
            }))
        }
        ZetaCmd::Minbeta { r } => Ok(json!({ "min_beta": zeta::min_beta(*r) })),
        ZetaCmd::Vanish { beta } => {
            if *beta == 0 {
                return Err(CliError::Input("beta must be at least 1".into()));
            }
            let r = zeta::whittaker_vanish(p, *beta);
            Ok(json!({ "value": scalar_json(&r.value), "warned": r.warned }))
        }
    }
}

fn dist_cmd(cmd: &DistCmd, p: u32) -> Result<Value, CliError> {
    match cmd {
        DistCmd::Order { norms } => {
            let parts: Vec<&str> = norms.split(',').collect();
            let log_norms = parts
                .iter()
                .map(|s| parse_rat(s))
                .collect::<Result<Vec<_>, _>>()
                .map_err(CliError::Input)?;
            let profile = gsp4l::dist::GrowthProfile { p, log_norms };
            let (h, log_c) = domain(gsp4l::dist::growth_order_estimate(&profile))?;
            Ok(json!({ "order": rat_json(&h), "log_c": rat_json(&log_c) }))
        }
        DistCmd::Eps { epsilon } => {
            let eps = input(parse_rat(epsilon))?;
            let c = domain(gsp4l::dist::epsilon_constants(p, &eps))?;
            Ok(json!({
                "p": c.p,
                "epsilon": rat_json(&c.epsilon),
                "upsilon": c.upsilon,
                "upsilon_floor": c.upsilon_floor,
                "c_eps_half": c.c_eps_half,
                "n_eps": c.n_eps,
                "m1": c.m1,
                "m2": c.m2,
                "level_inequality": c.level_inequality_holds(1e-9),
                "square_inequality": c.square_inequality_holds(1e-9),
            }))
        }
        DistCmd::Bound { epsilon, kmax } => {
            let eps = input(parse_rat(epsilon))?;
            let rep = domain(gsp4l::dist::binom_norm_bound_check(p, &eps, *kmax))?;
            Ok(json!({
                "ok": rep.ok,
                "discrete_max": rep.discrete_max,
                "analytic_sup": rep.analytic_sup,
                "c_eps_half": rep.c_eps_half,
            }))
        }
        DistCmd::Audit { payload, function, radius } => {
            let fq = input(read_payload(payload).and_then(|v| qexp_from_json(&v)))?;
            let f = input(parse_locan(function, p))?.with_radius(*radius);
            let rep = domain(gsp4l::dist::star_integrality_audit(&fq, &f, p))?;
            Ok(json!({
                "min_valuation": valuation_json(&rep.min_valuation),
                "bound": rat_json(&rep.bound),
                "ok": rep.ok,
            }))
        }
    }
}
