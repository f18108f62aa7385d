//! Subcommand implementations. Each returns a certificate whose checks are
//! the cross-checks between independently computed quantities.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use zariski::curves::{
    artal_shirane_type, cremona_map, degeneration_member, kummer_construct, verify_hat, verify_sigma,
    CurveError, CurveSpec, Family,
};
use zariski::cyclotomic::{arithmetic_tuple_size, enumerate_strata};
use zariski::groups::{
    abelianize, builtin_presentation, central_in_class_two, consequence_search, derive_k1hat,
    derived_series_finite, relation_matrix, smith_normal_form, todd_coxeter, AbelianInvariants,
    BuiltinName, Outcome, Presentation, SearchOptions, Word,
};
use zariski::holonomy::{lift_endpoint_check, linking_exact, linking_numeric, PathOptions, TriangleCycle};
use zariski::{CycloNumber, RootOfUnity};

use crate::args::{BatchArgs, Command, ConstructArgs, GroupArgs, LinkArgs};
use crate::certificate::{Certificate, Check};
use crate::corpus::{roots_of_minus_one, tau_string};
use crate::CliError;

/// Agreement required between the numeric and exact holonomy.
pub const NUMERIC_MATCH: f64 = 1e-8;
/// Agreement required between a run and the run with doubled steps.
pub const DOUBLING_MATCH: f64 = 1e-10;

pub fn run(cmd: &Command, argv: Vec<String>) -> Result<Certificate, CliError> {
    match cmd {
        Command::Strata { d } => strata(*d, argv),
        Command::Construct(a) => construct(a, argv),
        Command::Verify { curve } => verify(curve, argv),
        Command::Link(a) => link(a, argv),
        Command::Group(a) => group(a, argv),
        Command::Batch(a) => batch(a, argv),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<(T, Value), CliError> {
    let text = read_text(path)?;
    let json_err = |source| CliError::Json { path: path.to_path_buf(), source };
    let raw: Value = serde_json::from_str(&text).map_err(json_err)?;
    let parsed = serde_json::from_value(raw.clone()).map_err(json_err)?;
    Ok((parsed, raw))
}

/// Writes through a temporary file in the target directory and renames it.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let write_err = |source| CliError::Write { path: path.to_path_buf(), source };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(&dir).map_err(write_err)?;
    tmp.write_all(contents.as_bytes()).map_err(write_err)?;
    tmp.persist(path).map_err(|e| write_err(e.error))?;
    Ok(())
}

fn root_json(z: &RootOfUnity) -> Value {
    json!({ "root": tau_string(z), "display": z.to_string() })
}

// ---------------------------------------------------------------- strata

fn strata(d: u32, argv: Vec<String>) -> Result<Certificate, CliError> {
    let inputs = json!({ "d": d });
    let list = enumerate_strata(d)?;
    let mut checks = Vec::new();

    // exponents k with k/d in [0, 1/2]
    let expected = (0..d).filter(|k| 2 * k <= d).count();
    checks.push(Check::new(
        "stratum count",
        list.len() == expected && list.len() == (d / 2 + 1) as usize,
        format!("{} strata, floor(d/2)+1 = {}", list.len(), d / 2 + 1),
    ));
    let in_half_plane = list.iter().all(|s| s.zeta.is_dth_root(d) && s.zeta.im_nonneg());
    let distinct = (0..list.len()).all(|i| (i + 1..list.len()).all(|j| list[i].zeta != list[j].zeta));
    checks.push(Check::new(
        "labels",
        in_half_plane && distinct,
        "distinct d-th roots of unity with non-negative imaginary part",
    ));
    let flagged: Vec<String> = list.iter().filter(|s| !s.realizable).map(|s| s.zeta.to_string()).collect();
    let flag_ok = list.iter().all(|s| s.realizable != (d == 2 && s.zeta == RootOfUnity::one()));
    checks.push(Check::new(
        "realizability",
        flag_ok,
        if flagged.is_empty() { "all realizable".to_string() } else { format!("not realizable: {}", flagged.join(", ")) },
    ));

    let mut arithmetic = Vec::new();
    for m in (1..=d as u64).filter(|m| (d as u64) % m == 0 && !matches!(m, 1..=4 | 6)) {
        let size = arithmetic_tuple_size(m)?;
        let coprime = (1..m).filter(|k| k.gcd(&m) == 1).count() as u64;
        checks.push(Check::new(
            format!("arithmetic tuple m={m}"),
            2 * size == coprime,
            format!("phi({m})/2 = {size}, {coprime} residues coprime to {m}"),
        ));
        arithmetic.push(json!({ "m": m, "size": size }));
    }

    let results = json!({
        "d": d,
        "count": list.len(),
        "strata": list.iter().map(|s| json!({
            "zeta": root_json(&s.zeta),
            "realizable": s.realizable,
        })).collect::<Vec<_>>(),
        "arithmetic": arithmetic,
    });
    Ok(Certificate::new(argv, inputs, results, checks, 0))
}

// ------------------------------------------------------------- construct

fn parse_taus(a: &ConstructArgs) -> Result<[RootOfUnity; 3], CliError> {
    if a.taus.is_empty() {
        let roots = roots_of_minus_one(a.d.max(1));
        let pick = |i: usize| roots[i % roots.len()];
        return Ok(if a.variant == 1 && a.degeneration.is_none() {
            [pick(0); 3]
        } else {
            [pick(0), pick(1), pick(2)]
        });
    }
    if a.taus.len() != 3 {
        return Err(CliError::Usage(format!("--taus needs three values, got {}", a.taus.len())));
    }
    let mut out = [RootOfUnity::one(); 3];
    for (slot, s) in out.iter_mut().zip(&a.taus) {
        *slot = RootOfUnity::from_str(s)?;
    }
    Ok(out)
}

/// Membership checks shared by `construct` and `verify` for hat curves.
fn hat_checks(c: &CurveSpec, predicted: Option<RootOfUnity>, checks: &mut Vec<Check>) -> Value {
    let cert = match verify_hat(c) {
        Ok(cert) => cert,
        Err(e) => {
            checks.push(Check::new("hat membership", false, e.to_string()));
            return Value::Null;
        }
    };
    let label = cert.label.zeta;
    checks.push(Check::new("hat membership", true, format!("label {label}")));
    if let Some(p) = predicted {
        checks.push(Check::new("label equals prediction", label == p, format!("verified {label}, predicted {p}")));
    }
    let link = match linking_exact(c, false) {
        Ok(l) => {
            checks.push(Check::new(
                "linking class equals label",
                l.class == label,
                format!("holonomy {}, class {}", l.holonomy, l.class),
            ));
            to_value(&json!({ "holonomy": root_json(&l.holonomy), "class": root_json(&l.class) }))
        }
        Err(e) => {
            checks.push(Check::new("linking class equals label", false, e.to_string()));
            Value::Null
        }
    };
    let cremona = match cremona_map(c).and_then(|t| verify_sigma(&t).map(|s| (t, s))) {
        Ok((t, s)) => {
            checks.push(Check::new(
                "Cremona image label",
                s.label.zeta == label,
                format!("tilde curve of degree {} has label {}", t.total_degree(), s.label.zeta),
            ));
            json!({ "curve": to_value(&t), "label": root_json(&s.label.zeta), "warnings": s.warnings })
        }
        Err(e) => {
            checks.push(Check::new("Cremona image label", false, e.to_string()));
            Value::Null
        }
    };
    json!({
        "label": to_value(&cert.label),
        "membership": to_value(&cert),
        "linking": link,
        "cremona": cremona,
    })
}

fn construct(a: &ConstructArgs, argv: Vec<String>) -> Result<Certificate, CliError> {
    let taus = parse_taus(a)?;
    let inputs = json!({
        "d": a.d,
        "variant": a.variant,
        "taus": taus.iter().map(tau_string).collect::<Vec<_>>(),
        "degeneration": a.degeneration,
    });
    let mut checks = Vec::new();
    let (curve, results) = if let Some(t) = &a.degeneration {
        let t = BigRational::from_str(t)
            .map_err(|_| CliError::Usage(format!("cannot parse rational {t:?}")))?;
        let curve = degeneration_member(a.d, taus, t)?;
        let verified = hat_checks(&curve, Some(RootOfUnity::one()), &mut checks);
        let results = json!({
            "curve": to_value(&curve),
            "predicted": root_json(&RootOfUnity::one()),
            "degenerate": false,
            "verification": verified,
        });
        (curve, results)
    } else {
        let con = kummer_construct(a.d, taus, a.variant)?;
        let verified = if con.degenerate {
            let r = verify_hat(&con.curve);
            checks.push(Check::new(
                "concurrent lines rejected",
                matches!(r, Err(CurveError::NotTriangular)),
                match &r {
                    Ok(_) => "unexpectedly accepted".to_string(),
                    Err(e) => e.to_string(),
                },
            ));
            Value::Null
        } else {
            hat_checks(&con.curve, Some(con.predicted), &mut checks)
        };
        let results = json!({
            "curve": to_value(&con.curve),
            "predicted_raw": root_json(&con.predicted_raw),
            "predicted": root_json(&con.predicted),
            "degenerate": con.degenerate,
            "verification": verified,
        });
        (con.curve, results)
    };
    if let Some(path) = &a.curve_out {
        let text = serde_json::to_string_pretty(&curve).expect("curves serialize");
        write_atomic(path, &(text + "\n"))?;
    }
    Ok(Certificate::new(argv, inputs, results, checks, 0))
}

// ---------------------------------------------------------------- verify

fn verify(path: &Path, argv: Vec<String>) -> Result<Certificate, CliError> {
    let (curve, raw): (CurveSpec, Value) = read_json(path)?;
    let inputs = json!({ "curve": raw });
    if let Err(e) = curve.validate() {
        return Ok(Certificate::failure(argv, inputs, "curve specification", &e.to_string(), 0));
    }
    let mut checks = Vec::new();
    let results = match curve.family {
        Family::Hat => {
            let r = hat_checks(&curve, None, &mut checks);
            if r.is_null() {
                let err = checks[0].detail.clone();
                return Ok(Certificate::failure(argv, inputs, "hat membership", &err, 0));
            }
            r
        }
        Family::Sigma | Family::Tilde => match verify_sigma(&curve) {
            Ok(s) => {
                checks.push(Check::new("sigma membership", true, format!("label {}", s.label.zeta)));
                let mut cremona = Value::Null;
                if curve.family == Family::Tilde {
                    match cremona_map(&curve).and_then(|h| verify_hat(&h).map(|c| (h, c))) {
                        Ok((h, c)) => {
                            checks.push(Check::new(
                                "Cremona image label",
                                c.label.zeta == s.label.zeta,
                                format!("hat curve of degree {} has label {}", h.total_degree(), c.label.zeta),
                            ));
                            cremona = json!({ "curve": to_value(&h), "label": root_json(&c.label.zeta) });
                        }
                        Err(e) => checks.push(Check::new("Cremona image label", false, e.to_string())),
                    }
                }
                json!({ "label": to_value(&s.label), "membership": to_value(&s), "cremona": cremona })
            }
            Err(e) => return Ok(Certificate::failure(argv, inputs, "sigma membership", &e.to_string(), 0)),
        },
        Family::ArtalShirane => match artal_shirane_type(&curve) {
            Ok(t) => {
                for (i, m) in t.multiplicities.iter().enumerate() {
                    let total: usize = m.iter().sum();
                    checks.push(Check::new(
                        format!("line {} multiplicities", i + 1),
                        total == curve.d as usize,
                        format!("{m:?} sum to {total}"),
                    ));
                }
                json!({ "type": to_value(&t) })
            }
            Err(e) => return Ok(Certificate::failure(argv, inputs, "intersection type", &e.to_string(), 0)),
        },
    };
    Ok(Certificate::new(argv, inputs, results, checks, 0))
}

// ------------------------------------------------------------------ link

fn complex_dist(a: [f64; 2], b: (f64, f64)) -> f64 {
    (a[0] - b.0).hypot(a[1] - b.1)
}

fn link(a: &LinkArgs, argv: Vec<String>) -> Result<Certificate, CliError> {
    let (curve, raw): (CurveSpec, Value) = read_json(&a.curve)?;
    let steps = a.steps.or(a.numeric);
    let inputs = json!({
        "curve": raw,
        "steps": steps,
        "clearance": a.clearance,
        "tolerance": a.tolerance,
        "perturbations": a.perturbations,
        "reverse": a.reverse,
    });
    let exact = match linking_exact(&curve, a.reverse) {
        Ok(l) => l,
        Err(e) => return Ok(Certificate::failure(argv, inputs, "exact holonomy", &e.to_string(), a.seed)),
    };
    let label = exact.certificate.label.zeta;
    let mut checks = vec![Check::new(
        "linking class equals label",
        exact.class == label,
        format!("holonomy {}, class {}, label {label}", exact.holonomy, exact.class),
    )];
    let opposite = linking_exact(&curve, !a.reverse).map_err(|e| e.to_string());
    checks.push(Check::new(
        "reversal inverts holonomy",
        matches!(&opposite, Ok(o) if o.holonomy == exact.holonomy.inv()),
        match &opposite {
            Ok(o) => format!("reversed loop gives {}", o.holonomy),
            Err(e) => e.clone(),
        },
    ));

    // lifted endpoints in normalized coordinates
    let mut endpoints = Vec::new();
    let mut lifts = Vec::new();
    for seg in 1..=3 {
        match lift_endpoint_check(&curve, seg) {
            Ok(p) => {
                endpoints.push(format!("[{}:{}:{}:{}]", p[0], p[1], p[2], p[3]));
                lifts.push(p);
            }
            Err(e) => checks.push(Check::new(format!("lift of segment {seg}"), false, e.to_string())),
        }
    }
    if lifts.len() == 3 {
        let int = |v: [i64; 4]| -> [CycloNumber; 4] { v.map(CycloNumber::from_integer) };
        let first = lifts[0] == int([0, 0, 1, 1]) && lifts[1] == int([1, 0, 0, 1]);
        let last = &lifts[2];
        let zeta_ok = last[0].is_zero()
            && last[1].is_one()
            && last[2].is_zero()
            && zariski::cyclotomic::classify_root_of_unity(&last[3])
                .filter(|z| z.is_dth_root(curve.d))
                .and_then(|z| zariski::cyclotomic::half_plane_class(z, curve.d).ok())
                == Some(label);
        checks.push(Check::new(
            "lifted endpoints",
            first && zeta_ok,
            format!("{} (last t-coordinate in the class of {label})", endpoints.join(" ")),
        ));
    }

    let mut numeric = Value::Null;
    if let Some(steps) = steps {
        let cycle = TriangleCycle::from_curve(&curve).map_err(|e| CliError::Usage(e.to_string()))?;
        let target = exact.holonomy.to_complex();
        let target = (target.re, target.im);
        let base = PathOptions {
            steps,
            clearance: a.clearance,
            tolerance: a.tolerance,
            perturbation: None,
            reverse: a.reverse,
        };
        match linking_numeric(&curve, &cycle, &base) {
            Ok(n) => {
                let err = complex_dist(n.estimate, target);
                checks.push(Check::new(
                    "numeric matches exact",
                    err < NUMERIC_MATCH,
                    format!("|numeric - exact| = {err:.3e} with {steps} steps"),
                ));
                let doubled = linking_numeric(&curve, &cycle, &PathOptions { steps: 2 * steps, ..base.clone() });
                let doubled_value = match &doubled {
                    Ok(m) => {
                        let diff = complex_dist(m.estimate, (n.estimate[0], n.estimate[1]));
                        checks.push(Check::new(
                            "stable under step doubling",
                            diff < DOUBLING_MATCH,
                            format!("difference {diff:.3e} at {} steps", 2 * steps),
                        ));
                        json!(m.estimate)
                    }
                    Err(e) => {
                        checks.push(Check::new("stable under step doubling", false, e.to_string()));
                        Value::Null
                    }
                };
                let mut perturbed = Vec::new();
                for i in 0..a.perturbations as u64 {
                    let seed = a.seed.wrapping_add(i);
                    let opts = PathOptions { perturbation: Some(seed), ..base.clone() };
                    match linking_numeric(&curve, &cycle, &opts) {
                        Ok(m) => {
                            let err = complex_dist(m.estimate, target);
                            checks.push(Check::new(
                                format!("perturbed path {seed}"),
                                err < NUMERIC_MATCH,
                                format!("|numeric - exact| = {err:.3e}"),
                            ));
                            perturbed.push(json!({ "seed": seed, "estimate": m.estimate }));
                        }
                        Err(e) => checks.push(Check::new(format!("perturbed path {seed}"), false, e.to_string())),
                    }
                }
                numeric = json!({
                    "estimate": n.estimate,
                    "track": to_value(&n.track),
                    "doubled_estimate": doubled_value,
                    "perturbed": perturbed,
                });
            }
            Err(e) => checks.push(Check::new("numeric matches exact", false, e.to_string())),
        }
    }

    let results = json!({
        "holonomy": root_json(&exact.holonomy),
        "class": root_json(&exact.class),
        "unordered": exact.unordered.iter().map(root_json).collect::<Vec<_>>(),
        "label": to_value(&exact.certificate.label),
        "factors": to_value(&exact.factors),
        "cycle": to_value(&exact.cycle),
        "endpoints": endpoints,
        "numeric": numeric,
    });
    Ok(Certificate::new(argv, inputs, results, checks, a.seed))
}

// ----------------------------------------------------------------- group

/// Abelian invariants read off the relator families by hand.
pub fn expected_abelianization(name: BuiltinName, d: u32) -> AbelianInvariants {
    let d = d as i64;
    match name {
        BuiltinName::G => AbelianInvariants::new(5, vec![]),
        BuiltinName::Gtilde => AbelianInvariants::new(2, vec![d, d, d]),
        BuiltinName::K1hat => AbelianInvariants::new(2, vec![d]),
        BuiltinName::Ktilde => AbelianInvariants::new(d as usize + 1, vec![]),
        BuiltinName::Kh | BuiltinName::TriplePoint | BuiltinName::Artin244 => AbelianInvariants::new(3, vec![]),
        BuiltinName::B3S2 => AbelianInvariants::new(0, vec![4]),
    }
}

/// The commutators rewritten in the abelianness proof for `Kh`; all pairs
/// of generators otherwise.
fn witness_targets(p: &Presentation, builtin: Option<BuiltinName>) -> Vec<(String, String)> {
    if builtin == Some(BuiltinName::Kh) {
        return vec![("gl".into(), "tx0".into()), ("gl".into(), "ty".into()), ("tx0".into(), "ty".into())];
    }
    let g = p.gens();
    (0..g.len()).flat_map(|i| (i + 1..g.len()).map(move |j| (g[i].clone(), g[j].clone()))).collect()
}

fn load_presentation(a: &GroupArgs) -> Result<(Presentation, Option<BuiltinName>), CliError> {
    if let Some(src) = &a.presentation {
        let text = match src.strip_prefix('@') {
            Some(path) => read_text(Path::new(path))?,
            None => src.clone(),
        };
        let p = if text.trim_start().starts_with('{') {
            serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("malformed presentation JSON: {e}")))?
        } else {
            Presentation::from_str(text.trim())?
        };
        return Ok((p, None));
    }
    if a.name.eq_ignore_ascii_case("custom") {
        return Err(CliError::Usage("`custom` needs --presentation".into()));
    }
    let name = BuiltinName::from_str(&a.name)?;
    Ok((builtin_presentation(name, a.d, a.h)?, Some(name)))
}

fn outcome_check(name: String, p: &Presentation, w: &Word, outcome: &Outcome) -> Check {
    match outcome {
        Outcome::Consequence(c) => {
            let ok = c.verify(p, w);
            Check::new(
                name,
                ok,
                if ok {
                    format!("certified with {} conjugated relators", c.depth())
                } else {
                    "certificate does not multiply out".to_string()
                },
            )
        }
        Outcome::Unknown { explored } => Check::new(
            name,
            false,
            format!("unknown after {explored} states; not a refutation"),
        ),
    }
}

fn abelian_json(p: &Presentation) -> Value {
    let m = relation_matrix(p);
    let snf = smith_normal_form(&m, p.num_gens());
    let strings = |rows: &Vec<Vec<BigInt>>| -> Vec<Vec<String>> {
        rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
    };
    json!({
        "invariants": to_value(&abelianize(p)),
        "text": abelianize(p).to_string(),
        "relation_matrix": strings(&m),
        "snf": { "d": strings(&snf.d), "u": strings(&snf.u), "v": strings(&snf.v) },
    })
}

fn group(a: &GroupArgs, argv: Vec<String>) -> Result<Certificate, CliError> {
    let (p, builtin) = load_presentation(a)?;
    let opts = SearchOptions { depth: a.depth, max_states: a.max_states, ..SearchOptions::default() };
    let inputs = json!({
        "name": builtin.map(|b| b.to_string()).unwrap_or_else(|| "custom".into()),
        "d": a.d,
        "h": a.h,
        "presentation": p.to_string(),
        "depth": a.depth,
        "max_states": a.max_states,
        "coset_cap": a.coset_cap,
    });
    let mut checks = Vec::new();
    let mut results = serde_json::Map::new();
    results.insert("presentation".into(), to_value(&p));

    let ab = abelianize(&p);
    if let Some(name) = builtin {
        let expected = expected_abelianization(name, a.d);
        checks.push(Check::new("abelianization", ab == expected, format!("{ab}, expected {expected}")));
    }
    results.insert("abelianization".into(), abelian_json(&p));

    if a.order || a.derived_series {
        let t = todd_coxeter(&p, &[], a.coset_cap);
        checks.push(Check::new(
            "coset enumeration",
            t.complete,
            match t.index {
                Some(n) => format!("order {n}, {} cosets defined", t.defined),
                None => format!("incomplete at cap {}", t.cap),
            },
        ));
        if builtin == Some(BuiltinName::B3S2) {
            let got = t.index.map_or("unknown".to_string(), |n| n.to_string());
            checks.push(Check::new("order", t.index == Some(12), format!("{got}, expected 12")));
        }
        if a.derived_series && t.complete {
            match derived_series_finite(&t) {
                Ok(series) => {
                    if builtin == Some(BuiltinName::B3S2) {
                        checks.push(Check::new(
                            "derived series",
                            series == [12, 3, 1],
                            format!("{series:?}, expected [12, 3, 1]"),
                        ));
                    }
                    results.insert("derived_series".into(), json!(series));
                }
                Err(e) => checks.push(Check::new("derived series", false, e.to_string())),
            }
        }
        results.insert("cosets".into(), to_value(&t));
    }

    if a.rs {
        let derived = derive_k1hat(a.d)?;
        let target = builtin_presentation(BuiltinName::K1hat, a.d, None)?;
        let dab = abelianize(&derived);
        let tab = abelianize(&target);
        checks.push(Check::new(
            "derived kernel abelianization",
            dab == tab,
            format!("derived {dab}, builtin K1hat {tab}"),
        ));
        let mut outcomes = Vec::new();
        for (r, label) in target.rels().iter().zip(target.labels()) {
            let text = target.word_string(r);
            let w = derived.parse_word(&text)?;
            let outcome = consequence_search(&derived, &w, &opts);
            checks.push(outcome_check(format!("{label} in derived kernel"), &derived, &w, &outcome));
            outcomes.push(json!({ "label": label, "relator": text, "result": to_value(&outcome) }));
        }
        results.insert("reidemeister_schreier".into(), json!({
            "derived": to_value(&derived),
            "builtin": to_value(&target),
            "outcomes": outcomes,
        }));
    }

    if a.witness {
        let mut outcomes = Vec::new();
        for (u, v) in witness_targets(&p, builtin) {
            let text = format!("[{u},{v}]");
            let w = p.parse_word(&text)?;
            let outcome = consequence_search(&p, &w, &opts);
            checks.push(outcome_check(format!("commutator {text}"), &p, &w, &outcome));
            outcomes.push(json!({ "word": text, "result": to_value(&outcome) }));
        }
        results.insert("witness".into(), json!(outcomes));
    }

    if let Some(g) = &a.central {
        let idx = p.gen_index(g).ok_or_else(|| CliError::Usage(format!("unknown generator {g:?}")))?;
        let central = central_in_class_two(&p, idx);
        checks.push(Check::new(
            format!("{g} central in class-2 quotient"),
            central,
            if central { "every commutator with it lies in the relation lattice" } else { "not central" },
        ));
        results.insert("central".into(), json!({ "generator": g, "central": central }));
    }

    let mut consequences = Vec::new();
    for text in &a.consequence {
        let w = p.parse_word(text)?;
        let outcome = consequence_search(&p, &w, &opts);
        checks.push(outcome_check(format!("consequence {text}"), &p, &w, &outcome));
        consequences.push(json!({ "word": text, "result": to_value(&outcome) }));
    }
    if !consequences.is_empty() {
        results.insert("consequences".into(), json!(consequences));
    }
    Ok(Certificate::new(argv, inputs, Value::Object(results), checks, 0))
}

// ----------------------------------------------------------------- batch

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Job {
    pub name: String,
    pub args: Vec<String>,
}

fn batch(a: &BatchArgs, argv: Vec<String>) -> Result<Certificate, CliError> {
    let (jobs, raw): (Vec<Job>, Value) = read_json(&a.jobs)?;
    for (i, j) in jobs.iter().enumerate() {
        let bad = j.name.is_empty() || j.name.contains(['/', '\\']) || j.name.starts_with('.');
        if bad || jobs[..i].iter().any(|k| k.name == j.name) {
            return Err(CliError::Usage(format!("job name {:?} is empty, unsafe or repeated", j.name)));
        }
    }
    fs::create_dir_all(&a.out_dir).map_err(|source| CliError::Write { path: a.out_dir.clone(), source })?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.threads.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let outcomes: Vec<Result<(String, Certificate), CliError>> = pool.install(|| {
        jobs.par_iter()
            .map(|j| {
                let cert = crate::run_args(j.args.clone()).unwrap_or_else(|e| {
                    Certificate::failure(j.args.clone(), json!({ "args": j.args }), "invocation", &e.to_string(), 0)
                });
                let path = a.out_dir.join(format!("{}.json", j.name));
                write_atomic(&path, &(cert.to_json() + "\n"))?;
                Ok((path.display().to_string(), cert))
            })
            .collect()
    });
    let mut checks = Vec::new();
    let mut entries = Vec::new();
    for (j, r) in jobs.iter().zip(outcomes) {
        let (file, cert) = r?;
        checks.push(Check::new(
            format!("job {}", j.name),
            cert.ok,
            format!("{} of {} checks passed", cert.checks.iter().filter(|c| c.passed).count(), cert.checks.len()),
        ));
        entries.push(json!({ "name": j.name, "file": file, "ok": cert.ok, "inputs_digest": cert.inputs_digest }));
    }
    Ok(Certificate::new(argv, json!({ "jobs": raw }), json!({ "jobs": entries }), checks, 0))
}
