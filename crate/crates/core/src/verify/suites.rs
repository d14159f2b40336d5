//! Seeded property suites over the row and column immanants.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{AlgebraParams, Quaternion};
use crate::characters::CharacterSpec;
use crate::document::{algebra_document, quaternion_document, AlgebraDocument, MatrixDocument};
use crate::error::{param, Result};
use crate::immanant::{class_sums, classical_immanant, ClassSums, EvalOptions, Side};
use crate::matrix::MatrixH;

use super::generate::{
    build_col_zero_fixture, build_row_zero_fixture, gen_hermitian, gen_scalar_matrix,
    random_matrix, random_quaternion, Seed, DEFAULT_BOUND,
};
use super::lemma::{check_lemma_tn, MAX_LEMMA_N};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    ZeroRow,
    ZeroIdealRow,
    ZeroIdealCol,
    LeftScale,
    RightScale,
    Additivity,
    ConjTranspose,
    TnLemma,
    HermitianEquality,
    ScalarAgreement,
}

impl SuiteName {
    pub const ALL: [SuiteName; 10] = [
        SuiteName::ZeroRow,
        SuiteName::ZeroIdealRow,
        SuiteName::ZeroIdealCol,
        SuiteName::LeftScale,
        SuiteName::RightScale,
        SuiteName::Additivity,
        SuiteName::ConjTranspose,
        SuiteName::TnLemma,
        SuiteName::HermitianEquality,
        SuiteName::ScalarAgreement,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::ZeroRow => "zero-row",
            SuiteName::ZeroIdealRow => "zero-ideal-row",
            SuiteName::ZeroIdealCol => "zero-ideal-col",
            SuiteName::LeftScale => "left-scale",
            SuiteName::RightScale => "right-scale",
            SuiteName::Additivity => "additivity",
            SuiteName::ConjTranspose => "conj-transpose",
            SuiteName::TnLemma => "tn-lemma",
            SuiteName::HermitianEquality => "hermitian-equality",
            SuiteName::ScalarAgreement => "scalar-agreement",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| param(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: SuiteName,
    pub n: usize,
    pub algebra: AlgebraParams,
    /// Weights to check; empty means constant, sign and every `λ ⊢ n`.
    pub characters: Vec<CharacterSpec>,
    pub trials: usize,
    pub seed: Seed,
    pub bound: u32,
}

impl SuiteConfig {
    pub fn new(suite: SuiteName, n: usize, algebra: AlgebraParams) -> Self {
        SuiteConfig {
            suite,
            n,
            algebra,
            characters: Vec::new(),
            trials: 20,
            seed: Seed(0),
            bound: DEFAULT_BOUND,
        }
    }

    pub fn trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Seed(seed);
        self
    }

    pub fn characters(mut self, chars: Vec<CharacterSpec>) -> Self {
        self.characters = chars;
        self
    }
}

/// One failed check, with everything needed to reproduce it.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub trial: usize,
    pub seed: Seed,
    pub check: String,
    pub fixture: Value,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub n: usize,
    pub algebra: AlgebraDocument,
    pub characters: Vec<CharacterSpec>,
    pub master_seed: Seed,
    pub trials: usize,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Collects check outcomes for one trial.
struct Trial<'a> {
    index: usize,
    seed: Seed,
    chars: &'a [CharacterSpec],
    fixture: Value,
    checks: usize,
    failures: Vec<Failure>,
}

impl Trial<'_> {
    fn expect_eq(
        &mut self,
        check: impl FnOnce() -> String,
        expected: &Quaternion,
        actual: &Quaternion,
    ) {
        self.checks += 1;
        if expected != actual {
            self.fail(check(), format!("{expected:?}"), format!("{actual:?}"));
        }
    }

    fn expect(
        &mut self,
        ok: bool,
        check: impl FnOnce() -> String,
        expected: String,
        actual: String,
    ) {
        self.checks += 1;
        if !ok {
            self.fail(check(), expected, actual);
        }
    }

    fn fail(&mut self, check: String, expected: String, actual: String) {
        self.failures.push(Failure {
            trial: self.index,
            seed: self.seed,
            check,
            fixture: self.fixture.clone(),
            expected,
            actual,
        });
    }
}

fn matrix_value(a: &MatrixH) -> Value {
    serde_json::to_value(MatrixDocument::from_matrix(a)).expect("serializable")
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Row => "rImm",
        Side::Column => "cImm",
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    if cfg.n == 0 {
        return Err(param("n must be at least 1"));
    }
    if cfg.suite == SuiteName::TnLemma && cfg.n > MAX_LEMMA_N {
        return Err(param(format!("tn-lemma supports n ≤ {MAX_LEMMA_N}")));
    }
    let chars = if cfg.characters.is_empty() {
        CharacterSpec::all_for(cfg.n)
    } else {
        cfg.characters.clone()
    };
    if cfg.suite != SuiteName::TnLemma {
        for chi in &chars {
            chi.check_size(cfg.n)?;
        }
    }
    let outcomes = (0..cfg.trials)
        .into_par_iter()
        .map(|index| {
            let seed = cfg.seed.derive(index as u64);
            let mut trial = Trial {
                index,
                seed,
                chars: &chars,
                fixture: Value::Null,
                checks: 0,
                failures: Vec::new(),
            };
            run_trial(cfg, &mut trial)?;
            Ok((trial.checks, trial.failures))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut checks = 0;
    let mut failures = Vec::new();
    for (c, f) in outcomes {
        checks += c;
        failures.extend(f);
    }
    Ok(SuiteReport {
        suite: cfg.suite,
        n: cfg.n,
        algebra: algebra_document(&cfg.algebra),
        characters: chars,
        master_seed: cfg.seed,
        trials: cfg.trials,
        checks,
        failures,
    })
}

fn sums(a: &MatrixH, anchor: usize, side: Side) -> Result<ClassSums> {
    class_sums(a, anchor, side, &EvalOptions::default())
}

fn run_trial(cfg: &SuiteConfig, t: &mut Trial<'_>) -> Result<()> {
    let (n, alg) = (cfg.n, &cfg.algebra);
    let mut rng = t.seed.rng();
    match cfg.suite {
        SuiteName::ZeroRow => {
            let mut a = random_matrix(&mut rng, n, cfg.bound, alg);
            let line = rng.gen_range(0..n);
            let zeros = vec![alg.zero(); n];
            let as_row = rng.gen_bool(0.5);
            a = if as_row {
                a.with_row(line, &zeros)?
            } else {
                a.with_col(line, &zeros)?
            };
            t.fixture = matrix_value(&a);
            let zero = alg.zero();
            for side in [Side::Row, Side::Column] {
                for anchor in 0..n {
                    let s = sums(&a, anchor, side)?;
                    for chi in t.chars {
                        let v = s.weigh(chi)?;
                        t.expect_eq(
                            || format!("{}_{} with {chi} is zero", side_name(side), anchor + 1),
                            &zero,
                            &v,
                        );
                    }
                }
            }
        }
        SuiteName::ZeroIdealRow | SuiteName::ZeroIdealCol => {
            let k = rng.gen_range(0..n);
            let fixture_seed = Seed(rng.gen());
            let (a, side) = if cfg.suite == SuiteName::ZeroIdealRow {
                (build_row_zero_fixture(fixture_seed, n, k, alg)?, Side::Row)
            } else {
                (
                    build_col_zero_fixture(fixture_seed, n, k, alg)?,
                    Side::Column,
                )
            };
            t.fixture = json!({ "anchor": k + 1, "matrix": matrix_value(&a) });
            let s = sums(&a, k, side)?;
            let zero = alg.zero();
            for chi in t.chars {
                let v = s.weigh(chi)?;
                t.expect_eq(
                    || format!("{}_{} with {chi} is zero", side_name(side), k + 1),
                    &zero,
                    &v,
                );
            }
        }
        SuiteName::LeftScale => {
            let a = random_matrix(&mut rng, n, cfg.bound, alg);
            let i = rng.gen_range(0..n);
            let b = random_quaternion(&mut rng, cfg.bound, alg);
            let row: Vec<Quaternion> = a.row(i).iter().map(|q| &b * q).collect();
            let scaled = a.with_row(i, &row)?;
            t.fixture = json!({
                "row": i + 1,
                "factor": quaternion_document(&b),
                "matrix": matrix_value(&a),
            });
            let (before, after) = (sums(&a, i, Side::Row)?, sums(&scaled, i, Side::Row)?);
            for chi in t.chars {
                let expected = &b * &before.weigh(chi)?;
                let actual = after.weigh(chi)?;
                t.expect_eq(
                    || format!("rImm_{} with {chi} after left-scaling row {}", i + 1, i + 1),
                    &expected,
                    &actual,
                );
            }
        }
        SuiteName::RightScale => {
            let a = random_matrix(&mut rng, n, cfg.bound, alg);
            let j = rng.gen_range(0..n);
            let b = random_quaternion(&mut rng, cfg.bound, alg);
            let col: Vec<Quaternion> = a.col(j).iter().map(|q| q * &b).collect();
            let scaled = a.with_col(j, &col)?;
            t.fixture = json!({
                "column": j + 1,
                "factor": quaternion_document(&b),
                "matrix": matrix_value(&a),
            });
            let (before, after) = (sums(&a, j, Side::Column)?, sums(&scaled, j, Side::Column)?);
            for chi in t.chars {
                let expected = &before.weigh(chi)? * &b;
                let actual = after.weigh(chi)?;
                t.expect_eq(
                    || {
                        format!(
                            "cImm_{} with {chi} after right-scaling column {}",
                            j + 1,
                            j + 1
                        )
                    },
                    &expected,
                    &actual,
                );
            }
        }
        SuiteName::Additivity => {
            let a = random_matrix(&mut rng, n, cfg.bound, alg);
            let line = rng.gen_range(0..n);
            let b: Vec<Quaternion> = (0..n)
                .map(|_| random_quaternion(&mut rng, cfg.bound, alg))
                .collect();
            let c: Vec<Quaternion> = (0..n)
                .map(|_| random_quaternion(&mut rng, cfg.bound, alg))
                .collect();
            let bc: Vec<Quaternion> = b.iter().zip(&c).map(|(x, y)| x + y).collect();
            t.fixture = json!({
                "line": line + 1,
                "b": b.iter().map(quaternion_document).collect::<Vec<_>>(),
                "c": c.iter().map(quaternion_document).collect::<Vec<_>>(),
                "matrix": matrix_value(&a),
            });
            for (form, by_row) in [("row", true), ("column", false)] {
                let replace = |v: &[Quaternion]| {
                    if by_row {
                        a.with_row(line, v)
                    } else {
                        a.with_col(line, v)
                    }
                };
                let (ab, ac, abc) = (replace(&b)?, replace(&c)?, replace(&bc)?);
                for side in [Side::Row, Side::Column] {
                    for anchor in 0..n {
                        let (sb, sc, sbc) = (
                            sums(&ab, anchor, side)?,
                            sums(&ac, anchor, side)?,
                            sums(&abc, anchor, side)?,
                        );
                        for chi in t.chars {
                            let expected = &sb.weigh(chi)? + &sc.weigh(chi)?;
                            let actual = sbc.weigh(chi)?;
                            t.expect_eq(
                                || {
                                    format!(
                                        "{}_{} with {chi} additive in {form} {}",
                                        side_name(side),
                                        anchor + 1,
                                        line + 1
                                    )
                                },
                                &expected,
                                &actual,
                            );
                        }
                    }
                }
            }
        }
        SuiteName::ConjTranspose => {
            let a = random_matrix(&mut rng, n, cfg.bound, alg);
            t.fixture = matrix_value(&a);
            let star = a.conj_transpose();
            for anchor in 0..n {
                let (rs, cs) = (
                    sums(&star, anchor, Side::Row)?,
                    sums(&a, anchor, Side::Column)?,
                );
                for chi in t.chars {
                    let expected = cs.weigh(chi)?.conj();
                    let actual = rs.weigh(chi)?;
                    t.expect_eq(
                        || format!("rImm_{0}(A*) = conj(cImm_{0} A) with {chi}", anchor + 1),
                        &expected,
                        &actual,
                    );
                }
            }
        }
        SuiteName::TnLemma => {
            let h: Vec<Quaternion> = (0..n)
                .map(|_| random_quaternion(&mut rng, cfg.bound, alg))
                .collect();
            t.fixture = json!(h.iter().map(quaternion_document).collect::<Vec<_>>());
            let outcome = check_lemma_tn(&h)?;
            t.expect(
                outcome.holds(),
                || format!("T_{n} equals the product of traces"),
                format!("{:?}", outcome.trace_product),
                format!("{:?}", outcome.sum),
            );
        }
        SuiteName::HermitianEquality => {
            let a = gen_hermitian(Seed(rng.gen()), n, alg)?;
            t.fixture = matrix_value(&a);
            let all: Vec<(Side, usize, ClassSums)> = [Side::Row, Side::Column]
                .into_iter()
                .flat_map(|side| (0..n).map(move |m| (side, m)))
                .map(|(side, m)| sums(&a, m, side).map(|s| (side, m, s)))
                .collect::<Result<_>>()?;
            for chi in t.chars {
                let values = all
                    .iter()
                    .map(|(side, m, s)| s.weigh(chi).map(|v| (*side, *m, v)))
                    .collect::<Result<Vec<_>>>()?;
                let reference = values[0].2.clone();
                t.expect(
                    reference.is_scalar(),
                    || format!("rImm_1 with {chi} lies in the base field"),
                    "zero pure part".into(),
                    format!("{reference:?}"),
                );
                for (side, m, v) in &values[1..] {
                    t.expect_eq(
                        || format!("{}_{} with {chi} equals rImm_1", side_name(*side), m + 1),
                        &reference,
                        v,
                    );
                }
            }
        }
        SuiteName::ScalarAgreement => {
            let a = gen_scalar_matrix(Seed(rng.gen()), n, cfg.bound, alg)?;
            t.fixture = matrix_value(&a);
            let all: Vec<(Side, usize, ClassSums)> = [Side::Row, Side::Column]
                .into_iter()
                .flat_map(|side| (0..n).map(move |m| (side, m)))
                .map(|(side, m)| sums(&a, m, side).map(|s| (side, m, s)))
                .collect::<Result<_>>()?;
            for chi in t.chars {
                let expected = Quaternion::scalar(alg, classical_immanant(&a, chi)?);
                for (side, m, s) in &all {
                    let actual = s.weigh(chi)?;
                    t.expect_eq(
                        || {
                            format!(
                                "{}_{} with {chi} equals the classical immanant",
                                side_name(*side),
                                m + 1
                            )
                        },
                        &expected,
                        &actual,
                    );
                }
            }
        }
    }
    Ok(())
}
