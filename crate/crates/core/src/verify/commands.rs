//! The `charlattice` subcommands as library functions. Each returns both
//! renderings and an exit code; the binary only parses arguments.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use super::allowed::cmd_allowed_pairs;
use super::cases::{cmd_verify, run_default_suite, CaseParams, CASE_IDS};
use super::charfile::CharacterFile;
use super::notation::parse_highest_weight;
use super::report::CaseReport;
use crate::abmultiset::{factorizations, GroupMultiset};
use crate::charmatch::same_formal_character;
use crate::error::{Error, Result};
use crate::reps::{is_multiplicity_free, multiplicity_free_catalog, weight_multiset, weyl_dimension, SemisimpleAlgebra};
use crate::rootsys::{build_root_system, diagram_automorphisms, equal_rank_subsystems, SimpleType};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    pub structured: Value,
    pub code: i32,
}

impl Output {
    fn ok(text: String, structured: Value) -> Self {
        Output {
            text,
            structured,
            code: EXIT_PASS,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(&self.structured).expect("json values serialize");
                s.push('\n');
                s
            }
        }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

fn parse_alg_hw(alg: &str, hw: &str) -> Result<(SemisimpleAlgebra, crate::reps::HighestWeight)> {
    let a: SemisimpleAlgebra = alg.parse()?;
    let h = parse_highest_weight(&a, hw)?;
    Ok((a, h))
}

pub fn dim(alg: &str, hw: &str) -> Result<Output> {
    let (a, h) = parse_alg_hw(alg, hw)?;
    let d = weyl_dimension(&a, &h)?;
    Ok(Output::ok(
        format!("{d}\n"),
        json!({ "algebra": a.to_string(), "highest_weight": h.0, "dim": d.to_string() }),
    ))
}

pub fn weights(alg: &str, hw: &str) -> Result<Output> {
    let (a, h) = parse_alg_hw(alg, hw)?;
    let fc = weight_multiset(&a, &h)?;
    let mut text = String::new();
    for (w, m) in &fc.weights {
        writeln!(text, "{w} {m}").expect("write to String");
    }
    Ok(Output::ok(text, to_value(&CharacterFile::from_character(&fc, None))))
}

/// The character file of an irreducible; `involution` names a diagram
/// involution to attach (`none`, `delta`, or `neg`).
pub fn character(alg: &str, hw: &str, involution: &str) -> Result<Output> {
    let (a, h) = parse_alg_hw(alg, hw)?;
    let fc = weight_multiset(&a, &h)?;
    let inv = match involution {
        "none" => None,
        "neg" => Some(crate::rootsys::LatticeInvolution::negation(fc.rank())),
        "delta" => {
            let [t] = a.factors.as_slice() else {
                return Err(Error::Parse("`delta` needs a simple algebra".into()));
            };
            let auts = diagram_automorphisms(*t)?;
            let d = auts
                .nontrivial_involutions()
                .next()
                .ok_or_else(|| Error::InvalidInvolution(format!("{t} has no diagram involution")))?;
            Some(d.clone())
        }
        other => return Err(Error::Parse(format!("unknown involution `{other}`"))),
    };
    let f = CharacterFile::from_character(&fc, inv.as_ref());
    let text = f.emit();
    Ok(Output::ok(text, to_value(&f)))
}

pub fn multfree(alg: &str, hw: &str) -> Result<Output> {
    let (a, h) = parse_alg_hw(alg, hw)?;
    let fc = weight_multiset(&a, &h)?;
    let mf = is_multiplicity_free(&fc);
    Ok(Output::ok(
        format!("{mf}\n"),
        json!({ "multiplicity_free": mf, "max_multiplicity": fc.max_multiplicity(), "dim": fc.dim() }),
    ))
}

pub fn samechar(file1: &Path, file2: &Path) -> Result<Output> {
    let c1 = CharacterFile::read(file1)?.character()?;
    let c2 = CharacterFile::read(file2)?.character()?;
    match same_formal_character(&c1, &c2) {
        Some(w) if w.verify() => {
            let rows: Vec<Vec<String>> = w.map.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
            let mut text = format!("same formal character: {} → {}\n", c1.algebra, c2.algebra);
            for r in &rows {
                writeln!(text, "  [{}]", r.join(" ")).expect("write to String");
            }
            Ok(Output::ok(
                text,
                json!({
                    "same": true,
                    "source": c1.algebra.to_string(),
                    "target": c2.algebra.to_string(),
                    "map": rows,
                    "matching": w.matching.iter().map(|(a, b)| json!([a.0, b.0])).collect::<Vec<_>>(),
                }),
            ))
        }
        _ => Ok(Output {
            text: "no isomorphism of formal characters\n".into(),
            structured: json!({ "same": false }),
            code: EXIT_FAIL,
        }),
    }
}

fn parse_profile(s: &str) -> Result<Vec<usize>> {
    s.split([',', 'x'])
        .map(|p| p.trim().parse().map_err(|_| Error::Parse(format!("bad profile `{s}`"))))
        .collect()
}

/// Factorizations of a weight multiset (from a character file) or of an
/// integer list such as `0,1,2,3`.
pub fn factorize(source: &str, profile: &str) -> Result<Output> {
    let profile = parse_profile(profile)?;
    let c = if Path::new(source).exists() {
        let fc = CharacterFile::read(Path::new(source))?.character()?;
        let vs = fc.expanded().into_iter().map(|w| w.0).collect();
        GroupMultiset::from_vectors(fc.rank(), vs)?
    } else {
        let xs = source
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("`{source}` is neither a file nor an integer list"))))
            .collect::<Result<Vec<_>>>()?;
        GroupMultiset::from_ints(&xs)
    };
    let decs = factorizations(&c, &profile)?;
    let mut text = String::new();
    for d in &decs {
        let fs: Vec<String> = d.factors.iter().map(|f| f.to_string()).collect();
        writeln!(text, "{}", fs.join(" · ")).expect("write to String");
    }
    writeln!(text, "{} decomposition(s)", decs.len()).expect("write to String");
    Ok(Output::ok(
        text,
        json!({
            "profile": profile,
            "count": decs.len(),
            "decompositions": decs.iter().map(|d| d.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        }),
    ))
}

pub fn subsystems(t: &str) -> Result<Output> {
    let t: SimpleType = t.parse()?;
    let rs = build_root_system(t)?;
    let subs = equal_rank_subsystems(&rs)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for s in &subs {
        writeln!(text, "{s}").expect("write to String");
        rows.push(json!({ "type": s.to_string(), "rank": s.rank(), "span_rank": s.span_rank(), "type_a": s.is_all_type_a() }));
    }
    Ok(Output::ok(text, json!({ "algebra": t.to_string(), "subsystems": rows })))
}

pub fn catalog(t: &str, max_dim: u128) -> Result<Output> {
    let t: SimpleType = t.parse()?;
    let cat = multiplicity_free_catalog(t, max_dim);
    let mut text = String::new();
    for e in &cat {
        writeln!(text, "{:?} {} {}", e.hw, e.dim, e.names.join(" = ")).expect("write to String");
    }
    Ok(Output::ok(text, to_value(&cat)))
}

pub fn allowed_pairs(n: u64) -> Result<Output> {
    let ap = cmd_allowed_pairs(n)?;
    let mut text = String::new();
    if ap.accepted() {
        writeln!(text, "n = {n}: admissible").expect("write to String");
    } else {
        writeln!(text, "n = {n}: rejected").expect("write to String");
        for v in &ap.gate_violations {
            writeln!(text, "  gate: {v}").expect("write to String");
        }
        for v in &ap.notes {
            writeln!(text, "  note: {v}").expect("write to String");
        }
        writeln!(text, "  would be admitted:").expect("write to String");
    }
    for p in &ap.pairs {
        writeln!(
            text,
            "{} {:?} dim {} [{}] — {}",
            p.stype,
            p.hw,
            p.dim,
            p.names.join(" = "),
            p.handled_by
        )
        .expect("write to String");
    }
    Ok(Output {
        code: if ap.accepted() { EXIT_PASS } else { EXIT_FAIL },
        structured: to_value(&ap),
        text,
    })
}

fn reports_output(reports: Vec<CaseReport>) -> Output {
    let all = reports.iter().all(|r| r.passed());
    let mut text = String::new();
    for r in &reports {
        text.push_str(&r.to_string());
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    writeln!(text, "{passed}/{} cases passed", reports.len()).expect("write to String");
    Output {
        structured: json!({ "passed": all, "reports": reports }),
        text,
        code: if all { EXIT_PASS } else { EXIT_FAIL },
    }
}

/// One case, or the whole default suite when `case` is `None`.
pub fn verify(case: Option<&str>, params: &CaseParams, seed: u64) -> Result<Output> {
    let reports = match case {
        None => run_default_suite(seed)?,
        Some(id) => {
            let mut p = params.clone();
            if id == "factorization-bound" {
                p.entry("seed".into()).or_insert_with(|| seed.to_string());
            }
            vec![cmd_verify(id, &p)?]
        }
    };
    Ok(reports_output(reports))
}

pub fn list_cases() -> Output {
    Output::ok(
        CASE_IDS.iter().map(|c| format!("{c}\n")).collect(),
        json!({ "cases": CASE_IDS }),
    )
}

/// `key=value` pairs.
pub fn parse_params(items: &[String]) -> Result<CaseParams> {
    items
        .iter()
        .map(|s| {
            s.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{s}`")))
        })
        .collect()
}

/// Exit code for a library error: bad input is a usage error.
pub fn error_code(_e: &Error) -> i32 {
    EXIT_USAGE
}
