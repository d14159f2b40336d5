use std::io::Read;
use std::path::Path;

use quatimm::document::{parse_matrix, quaternion_document};
use quatimm::immanant::{immanant, EvalOptions, Side};
use quatimm::verify::{run_suite, SuiteConfig, SuiteName};
use quatimm::{AlgebraParams, CharacterSpec, Error, MatrixH, Rational};
use serde_json::{json, Value};

use crate::Op;

type Outcome = Result<(Value, bool), Error>;

fn read_matrix(path: &Path) -> Result<MatrixH, Error> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parameter(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Parameter(format!("reading {}: {e}", path.display())))?
    };
    parse_matrix(&text)
}

fn op_name(op: Op) -> &'static str {
    match op {
        Op::Rimm => "rimm",
        Op::Cimm => "cimm",
        Op::Rdet => "rdet",
        Op::Cdet => "cdet",
        Op::Rper => "rper",
        Op::Cper => "cper",
        Op::All => "all",
    }
}

/// Resolves the weight: det/per fix it, otherwise `--char` (default sign).
fn resolve_char(op: Op, given: Option<CharacterSpec>) -> Result<CharacterSpec, Error> {
    let fixed = match op {
        Op::Rdet | Op::Cdet => Some(CharacterSpec::Sign),
        Op::Rper | Op::Cper => Some(CharacterSpec::Constant),
        _ => None,
    };
    match (fixed, given) {
        (Some(f), Some(g)) if f != g => Err(Error::Parameter(format!(
            "--op {} implies --char {f}, got {g}",
            op_name(op)
        ))),
        (Some(f), _) => Ok(f),
        (None, g) => Ok(g.unwrap_or(CharacterSpec::Sign)),
    }
}

fn side_label(side: Side) -> &'static str {
    match side {
        Side::Row => "row",
        Side::Column => "column",
    }
}

pub fn compute(
    input: &Path,
    character: Option<CharacterSpec>,
    op: Op,
    anchor: Option<usize>,
    parallel: bool,
) -> Outcome {
    let a = read_matrix(input)?;
    let chi = resolve_char(op, character)?;
    chi.check_size(a.n())?;
    let opts = EvalOptions {
        parallel,
        ..EvalOptions::default()
    };
    let side = match op {
        Op::Rimm | Op::Rdet | Op::Rper => Side::Row,
        Op::Cimm | Op::Cdet | Op::Cper => Side::Column,
        Op::All => {
            let mut values = Vec::with_capacity(2 * a.n());
            let mut first = None;
            let mut all_equal = true;
            for side in [Side::Row, Side::Column] {
                for m in 0..a.n() {
                    let v = immanant(&a, m, side, &chi, &opts)?.value;
                    match &first {
                        None => first = Some(v.clone()),
                        Some(f) => all_equal &= *f == v,
                    }
                    values.push(json!({
                        "side": side_label(side),
                        "anchor": m + 1,
                        "value": quaternion_document(&v),
                    }));
                }
            }
            let doc = json!({
                "op": "all",
                "char": chi,
                "values": values,
                "all_equal": all_equal,
            });
            return Ok((doc, true));
        }
    };
    let anchor = anchor.ok_or_else(|| {
        Error::Parameter(format!("--anchor is required for --op {}", op_name(op)))
    })?;
    if anchor == 0 || anchor > a.n() {
        return Err(Error::Parameter(format!(
            "--anchor {anchor} out of range 1..={}",
            a.n()
        )));
    }
    let r = immanant(&a, anchor - 1, side, &chi, &opts)?;
    let doc = json!({
        "value": quaternion_document(&r.value),
        "anchor": anchor,
        "op": op_name(op),
        "char": chi,
    });
    Ok((doc, true))
}

fn parse_algebra(text: &str) -> Result<AlgebraParams, Error> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| Error::Parameter(format!("--algebra expects `a,b`, got {text:?}")))?;
    AlgebraParams::new(a.trim().parse()?, b.trim().parse()?)
}

pub fn verify(
    suite: SuiteName,
    n: usize,
    algebra: &str,
    trials: usize,
    seed: u64,
    chars: Vec<CharacterSpec>,
) -> Outcome {
    let cfg = SuiteConfig::new(suite, n, parse_algebra(algebra)?)
        .trials(trials)
        .seed(seed)
        .characters(chars);
    let report = run_suite(&cfg)?;
    let passed = report.passed();
    let mut doc = serde_json::to_value(&report).expect("reports serialize");
    doc["passed"] = Value::Bool(passed);
    Ok((doc, passed))
}

pub fn repr(input: &Path, c: &Rational) -> Outcome {
    let a = read_matrix(input)?;
    let n = a.n();
    let mut blocks = vec![vec![String::new(); 2 * n]; 2 * n];
    for r in 0..n {
        for col in 0..n {
            let m = a.get(r, col).split_rep(c)?;
            for (dr, row) in m.rows().iter().enumerate() {
                for (dc, v) in row.iter().enumerate() {
                    blocks[2 * r + dr][2 * col + dc] = v.to_string();
                }
            }
        }
    }
    let mut doc = json!({
        "algebra": { "a": a.algebra().a(), "b": a.algebra().b() },
        "c": c,
        "blocks": blocks,
    });
    if n == 1 {
        let q = a.get(0, 0);
        doc["det"] = json!(q.split_rep(c)?.det());
        doc["norm"] = json!(q.norm());
    }
    Ok((doc, true))
}
