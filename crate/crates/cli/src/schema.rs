//! Flag parsing and JSON encoding for the library types. Rationals travel
//! as "num/den" strings in both directions.

use gsp4l::exactnum::{
    rat_from_str, rat_to_string, CharDescriptor, Cyclotomic, DirichletChar, Rat, Scalar, SqrtExt,
    Valuation,
};
use gsp4l::matrix::QMatrix;
use gsp4l::qexp::{LocAnFunction, LocAnRule, QExpansion, Support, WeightDesc};
use gsp4l::weights::Weight;
use serde_json::{json, Value};

pub fn parse_rat(s: &str) -> Result<Rat, String> {
    rat_from_str(s)
}

pub fn parse_rat_list(s: &str, expect: usize) -> Result<Vec<Rat>, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != expect {
        return Err(format!("expected {expect} comma-separated rationals, got {}", parts.len()));
    }
    parts.iter().map(|p| parse_rat(p)).collect()
}

/// Character syntax: "triv", "quad", or "<k>@<c>" for the character sending
/// the standard generator to the k-th power of the root of unity of order
/// phi(p^c).
pub fn parse_chi(s: &str, p: u32) -> Result<DirichletChar, String> {
    match s.trim() {
        "triv" | "trivial" | "1" => Ok(DirichletChar::trivial(p)),
        "quad" | "quadratic" => Ok(DirichletChar::quadratic(p)),
        other => {
            // tolerate "quad:<c>" for conductor-p quadratic characters
            if let Some(rest) = other.strip_prefix("quad:") {
                let c: u32 = rest.parse().map_err(|e| format!("bad conductor: {e}"))?;
                if c != 1 {
                    return Err("the quadratic character of an odd prime has conductor p".into());
                }
                return Ok(DirichletChar::quadratic(p));
            }
            let (k, c) = other
                .split_once('@')
                .ok_or_else(|| format!("unrecognised character {other:?}"))?;
            let k: u32 = k.parse().map_err(|e| format!("bad generator image: {e}"))?;
            let c: u32 = c.parse().map_err(|e| format!("bad conductor exponent: {e}"))?;
            DirichletChar::new(p, c, k)
        }
    }
}

/// Character-descriptor syntax: "<k>" or "<k>*quad" or "<k>*<g>@<c>".
pub fn parse_chardesc(s: &str, p: u32) -> Result<CharDescriptor, String> {
    match s.split_once('*') {
        None => {
            let k: i64 = s.trim().parse().map_err(|e| format!("bad power: {e}"))?;
            Ok(CharDescriptor::power(k))
        }
        Some((k, chi)) => {
            let k: i64 = k.trim().parse().map_err(|e| format!("bad power: {e}"))?;
            Ok(CharDescriptor::new(k, Some(parse_chi(chi, p)?)))
        }
    }
}

/// Locally analytic function syntax: "identity", "indicator", "one",
/// "power:<k>" (all of Z_p) or "power:<k>:quad" / "power:<k>:units".
pub fn parse_locan(s: &str, p: u32) -> Result<LocAnFunction, String> {
    match s.trim() {
        "identity" | "id" => Ok(LocAnFunction::identity()),
        "indicator" | "units" => Ok(LocAnFunction::unit_indicator()),
        "one" | "1" => Ok(LocAnFunction::one()),
        other => {
            let mut parts = other.split(':');
            if parts.next() != Some("power") {
                return Err(format!("unrecognised function {other:?}"));
            }
            let k: i64 = parts
                .next()
                .ok_or("missing exponent")?
                .parse()
                .map_err(|e| format!("bad exponent: {e}"))?;
            let mut desc = CharDescriptor::power(k);
            let mut support = Support::All;
            for extra in parts {
                match extra {
                    "units" => support = Support::Units,
                    chi => desc = CharDescriptor::new(desc.power, Some(parse_chi(chi, p)?)),
                }
            }
            Ok(LocAnFunction::char_power(desc, support))
        }
    }
}

pub fn parse_valuation(s: &str) -> Result<Valuation, String> {
    match s.trim() {
        "inf" | "+inf" | "infinity" => Ok(Valuation::Infinity),
        other => Ok(Valuation::Finite(parse_rat(other)?)),
    }
}

pub fn parse_weight(s: &str) -> Result<Weight, String> {
    Weight::parse(s)
}

/// Matrix syntax: four rows separated by ';', entries by ','.
pub fn parse_matrix(s: &str) -> Result<QMatrix, String> {
    let rows: Vec<&str> = s.split(';').collect();
    if rows.len() != 4 {
        return Err(format!("expected 4 rows, got {}", rows.len()));
    }
    let mut m = QMatrix::zero();
    for (i, row) in rows.iter().enumerate() {
        let entries = parse_rat_list(row, 4)?;
        for (j, e) in entries.into_iter().enumerate() {
            m.0[i][j] = e;
        }
    }
    Ok(m)
}

pub fn rat_json(x: &Rat) -> Value {
    Value::String(rat_to_string(x))
}

pub fn valuation_json(v: &Valuation) -> Value {
    match v {
        Valuation::Finite(x) => rat_json(x),
        Valuation::Infinity => Value::String("+inf".into()),
    }
}

fn prime_power_split(n: u32) -> Option<(u32, u32)> {
    if n == 1 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            break;
        }
        p += 1;
    }
    if p * p > n {
        p = n;
    }
    let mut c = 0;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        c += 1;
    }
    if m == 1 {
        Some((p, c))
    } else {
        None
    }
}

pub fn cyclotomic_json(c: &Cyclotomic) -> Value {
    let coeffs: Vec<Value> = c.coeffs().iter().map(rat_json).collect();
    let mut obj = json!({ "level": c.level(), "coeffs": coeffs });
    if let Some((p, e)) = prime_power_split(c.level()) {
        obj["p"] = json!(p);
        obj["c"] = json!(e);
    }
    obj
}

pub fn scalar_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rat(x) => rat_json(x),
        Scalar::Cyc(c) => cyclotomic_json(c),
    }
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar, String> {
    match v {
        Value::String(s) => Ok(Scalar::Rat(parse_rat(s)?)),
        Value::Number(n) => {
            let k = n.as_i64().ok_or("non-integer numeric coefficient")?;
            Ok(Scalar::int(k))
        }
        Value::Object(obj) => {
            let level = obj
                .get("level")
                .and_then(|l| l.as_u64())
                .ok_or("cyclotomic coefficient needs a level")? as u32;
            let coeffs = obj
                .get("coeffs")
                .and_then(|c| c.as_array())
                .ok_or("cyclotomic coefficient needs coeffs")?;
            let mut dense = Vec::with_capacity(coeffs.len());
            for c in coeffs {
                let s = c.as_str().ok_or("coefficients must be rational strings")?;
                dense.push(parse_rat(s)?);
            }
            Ok(Scalar::Cyc(Cyclotomic::from_dense(level, dense)).normalize())
        }
        _ => Err("unrecognised scalar encoding".into()),
    }
}

pub fn chardesc_json(d: &CharDescriptor) -> Value {
    match &d.chi {
        None => json!({ "power": d.power, "chi": Value::Null }),
        Some(chi) => json!({
            "power": d.power,
            "chi": { "p": chi.prime(), "c": chi.cond_exp(), "k": chi.gen_image() },
        }),
    }
}

pub fn chardesc_from_json(v: &Value) -> Result<CharDescriptor, String> {
    let power = v
        .get("power")
        .and_then(|x| x.as_i64())
        .ok_or("descriptor needs an integer power")?;
    let chi = match v.get("chi") {
        None | Some(Value::Null) => None,
        Some(obj) => {
            let p = obj.get("p").and_then(|x| x.as_u64()).ok_or("chi needs p")? as u32;
            let c = obj.get("c").and_then(|x| x.as_u64()).ok_or("chi needs c")? as u32;
            let k = obj.get("k").and_then(|x| x.as_u64()).ok_or("chi needs k")? as u32;
            Some(DirichletChar::new(p, c, k)?)
        }
    };
    Ok(CharDescriptor::new(power, chi))
}

pub fn qexp_json(f: &QExpansion) -> Value {
    json!({
        "p": f.p,
        "N": f.truncation(),
        "weight": { "r": chardesc_json(&f.weight.r), "c": chardesc_json(&f.weight.c) },
        "coeffs": f.coeffs.iter().map(scalar_json).collect::<Vec<_>>(),
    })
}

pub fn qexp_from_json(v: &Value) -> Result<QExpansion, String> {
    let p = v.get("p").and_then(|x| x.as_u64()).ok_or("expansion needs p")? as u32;
    let coeffs = v
        .get("coeffs")
        .and_then(|c| c.as_array())
        .ok_or("expansion needs coeffs")?;
    let n = v.get("N").and_then(|x| x.as_u64()).unwrap_or(coeffs.len() as u64 - 1) as usize;
    if coeffs.len() != n + 1 {
        return Err(format!("coeffs length {} does not match N = {n}", coeffs.len()));
    }
    let weight = match v.get("weight") {
        None => WeightDesc::int(0, 0),
        Some(w) => WeightDesc {
            r: chardesc_from_json(w.get("r").ok_or("weight needs r")?)?,
            c: chardesc_from_json(w.get("c").ok_or("weight needs c")?)?,
        },
    };
    let coeffs = coeffs.iter().map(scalar_from_json).collect::<Result<Vec<_>, _>>()?;
    Ok(QExpansion::new(p, coeffs, weight))
}

pub fn sqrtext_json(x: &SqrtExt) -> Value {
    json!({ "a": rat_to_string(&x.a), "b": rat_to_string(&x.b), "p": x.p })
}

pub fn matrix_json(m: &QMatrix) -> Value {
    let rows: Vec<Value> = (0..4)
        .map(|i| Value::Array((0..4).map(|j| rat_json(&m.0[i][j])).collect()))
        .collect();
    Value::Array(rows)
}

pub fn locan_rule_json(f: &LocAnFunction) -> Value {
    let rule = match &f.rule {
        LocAnRule::CharPower(d) => json!({ "char_power": chardesc_json(d) }),
        LocAnRule::Mahler { coeffs } => {
            json!({ "mahler": coeffs.iter().map(rat_json).collect::<Vec<_>>() })
        }
    };
    json!({
        "rule": rule,
        "support": match f.support { Support::All => "all", Support::Units => "units" },
        "radius": f.radius,
    })
}

pub fn read_payload(path: &str) -> Result<Value, String> {
    let text = if path == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
    };
    serde_json::from_str(&text).map_err(|e| format!("malformed JSON payload: {e}"))
}
