//! Acceptance criteria. Every check is exact; there are no tolerances except
//! the wall-clock limits on criteria 1 and 8.
//!
//! Run with `cargo test -p quatimm-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use quatimm::characters::{partitions, CharacterEvaluator};
use quatimm::immanant::{class_sums, row_immanant_with};
use quatimm::permgroup::{enumerate_permutations, factorial};
use quatimm::verify::{gen_matrix, gen_quaternion, run_suite, Seed, SuiteConfig, SuiteName};
use quatimm::{AlgebraParams, CharacterSpec, CycleType, EvalOptions, Quaternion, Rational, Side};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn alg(a: i64, b: i64) -> AlgebraParams {
    AlgebraParams::from_ints(a, b).unwrap()
}

fn suite(
    name: SuiteName,
    n: usize,
    algebra: &AlgebraParams,
    trials: usize,
    seed: u64,
    chars: Vec<CharacterSpec>,
) -> Result<usize, String> {
    let cfg = SuiteConfig::new(name, n, algebra.clone())
        .trials(trials)
        .seed(seed)
        .characters(chars);
    let report = run_suite(&cfg).map_err(|e| format!("{name} n={n} {algebra}: {e}"))?;
    if let Some(f) = report.failures.first() {
        return Err(format!(
            "{name} n={n} {algebra}: {} failures; first: {} (seed {:?}) expected {} got {}",
            report.failures.len(),
            f.check,
            f.seed,
            f.expected,
            f.actual
        ));
    }
    Ok(report.checks)
}

/// Hermitian equality of all 2n immanants, every weight, n ≤ 5.
fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    for algebra in [alg(-1, -1), alg(-1, 1), alg(1, 1)] {
        for n in 1..=5 {
            let chars = CharacterSpec::all_for(n);
            checks += suite(
                SuiteName::HermitianEquality,
                n,
                &algebra,
                20,
                0x5eed_0001,
                chars,
            )?;
        }
    }
    let took = start.elapsed();
    if took > Duration::from_secs(120) {
        return Err(format!("took {took:?}, limit 120 s"));
    }
    Ok(format!("{checks} exact checks in {took:.2?}"))
}

/// Scalar-entry agreement with the commutative immanant.
fn criterion_2() -> Outcome {
    let mut checks = 0;
    for algebra in [alg(-1, -1), alg(-1, 1)] {
        for n in 1..=4 {
            checks += suite(
                SuiteName::ScalarAgreement,
                n,
                &algebra,
                50,
                0x5eed_0002,
                CharacterSpec::all_for(n),
            )?;
        }
    }
    Ok(format!("{checks} exact checks"))
}

/// Zero-row, scaling, additivity and conjugate-transpose suites.
fn criterion_3() -> Outcome {
    let mut checks = 0;
    let names = [
        SuiteName::ZeroRow,
        SuiteName::LeftScale,
        SuiteName::RightScale,
        SuiteName::Additivity,
        SuiteName::ConjTranspose,
    ];
    for name in names {
        for algebra in [alg(-1, 1), alg(-1, -1)] {
            for n in 2..=4 {
                checks += suite(
                    name,
                    n,
                    &algebra,
                    50,
                    0x5eed_0003,
                    CharacterSpec::all_for(n),
                )?;
            }
        }
    }
    Ok(format!("{checks} exact checks"))
}

/// Zero-ideal fixtures vanish at their anchor.
fn criterion_4() -> Outcome {
    let mut checks = 0;
    let algebra = alg(-1, 1);
    for name in [SuiteName::ZeroIdealRow, SuiteName::ZeroIdealCol] {
        for n in 2..=4 {
            let chars = vec![
                CharacterSpec::Sign,
                CharacterSpec::Constant,
                CharacterSpec::irreducible(vec![n - 1, 1]).unwrap(),
            ];
            checks += suite(name, n, &algebra, 25, 0x5eed_0004, chars)?;
        }
    }
    Ok(format!("{checks} exact checks"))
}

/// Sum over conjugation patterns equals the product of traces.
fn criterion_5() -> Outcome {
    let mut checks = 0;
    for algebra in [alg(-1, -1), alg(-1, 1), alg(1, 1), alg(2, 3)] {
        for n in 1..=10 {
            checks += suite(SuiteName::TnLemma, n, &algebra, 10, 0x5eed_0005, vec![])?;
        }
    }
    Ok(format!("{checks} tuples"))
}

/// Murnaghan–Nakayama against independent facts about S_n characters.
fn criterion_6() -> Outcome {
    let mut eval = CharacterEvaluator::new();
    // trivial and sign partitions, every cycle type, n ≤ 7
    for n in 1..=7 {
        let trivial = CharacterSpec::irreducible(vec![n]).unwrap();
        let sign = CharacterSpec::irreducible(vec![1; n]).unwrap();
        for mu in partitions(n) {
            let ct = CycleType::new(mu.parts().to_vec());
            let t = eval.evaluate(&trivial, &ct).unwrap();
            let s = eval.evaluate(&sign, &ct).unwrap();
            if t != eval.evaluate(&CharacterSpec::Constant, &ct).unwrap()
                || s != eval.evaluate(&CharacterSpec::Sign, &ct).unwrap()
            {
                return Err(format!("n={n}, μ={mu}: trivial {t}, sign {s}"));
            }
        }
    }
    // first orthogonality, summed over all of S_n
    for n in 1..=6 {
        let perms: Vec<CycleType> = enumerate_permutations(n)
            .unwrap()
            .map(|p| p.cycle_type())
            .collect();
        for lambda in partitions(n) {
            let chi = CharacterSpec::Irreducible {
                parts: lambda.clone(),
            };
            let total: i64 = perms
                .iter()
                .map(|ct| eval.evaluate(&chi, ct).unwrap().pow(2))
                .sum();
            if total as u128 != factorial(n) {
                return Err(format!("Σ χ_{lambda}(σ)² = {total} ≠ {n}!"));
            }
        }
    }
    // Σ f_λ² = n!, and f_λ = χ_λ(e)
    for n in 1..=7 {
        let mut total = BigInt::from(0);
        for lambda in partitions(n) {
            let f = lambda.dimension();
            let chi = CharacterSpec::Irreducible {
                parts: lambda.clone(),
            };
            let at_e = eval.evaluate(&chi, &CycleType::identity(n)).unwrap();
            if BigInt::from(at_e) != f {
                return Err(format!("f_{lambda} = {f} but χ(e) = {at_e}"));
            }
            total += &f * &f;
        }
        if total != BigInt::from(factorial(n)) {
            return Err(format!("Σ f² = {total} ≠ {n}!"));
        }
    }
    // χ_(2,1) = (fixed points) − 1 on S_3
    let standard = CharacterSpec::irreducible(vec![2, 1]).unwrap();
    for p in enumerate_permutations(3).unwrap() {
        let fixed = (0..3).filter(|&m| p.apply(m) == m).count() as i64;
        let v = eval.evaluate(&standard, &p.cycle_type()).unwrap();
        if v != fixed - 1 {
            return Err(format!(
                "χ_(2,1)({:?}) = {v}, expected {}",
                p.one_based(),
                fixed - 1
            ));
        }
    }
    let table: Vec<i64> = [vec![1, 1, 1], vec![2, 1], vec![3]]
        .into_iter()
        .map(|mu| eval.evaluate(&standard, &CycleType::new(mu)).unwrap())
        .collect();
    if table != [2, 0, -1] {
        return Err(format!("χ_(2,1) table {table:?}"));
    }
    Ok("table (2, 0, -1) for (2,1); orthogonality and dimensions hold".into())
}

/// Split representation is a unital homomorphism with det = norm.
fn criterion_7() -> Outcome {
    let cases = [
        (alg(-1, 1), Rational::from(1)),
        (alg(1, 1), Rational::from(-1)),
        (alg(2, 9), Rational::from(3)),
        (
            AlgebraParams::new(Rational::new(1, 2), Rational::new(4, 9)).unwrap(),
            Rational::new(2, 3),
        ),
    ];
    let mut trials = 0;
    for (algebra, c) in &cases {
        if algebra.one().split_rep(c).unwrap() != quatimm::Mat2::identity() {
            return Err(format!("{algebra}: 1 does not map to I"));
        }
        for s in 0..100 {
            let p = gen_quaternion(Seed(2 * s), 4, algebra);
            let q = gen_quaternion(Seed(2 * s + 1), 4, algebra);
            let (rp, rq) = (p.split_rep(c).unwrap(), q.split_rep(c).unwrap());
            let rpq = (&p * &q).split_rep(c).unwrap();
            if rpq != &rp * &rq {
                return Err(format!(
                    "{algebra}: rep(pq) ≠ rep(p)rep(q) for {p:?}, {q:?}"
                ));
            }
            if (&p + &q).split_rep(c).unwrap().e12 != &rp.e12 + &rq.e12 {
                return Err(format!("{algebra}: rep not additive"));
            }
            if rp.det() != p.norm() {
                return Err(format!("{algebra}: det rep ≠ n for {p:?}"));
            }
            trials += 1;
        }
    }
    let split = alg(-1, 1);
    let u = Quaternion::from_ints(&split, 1, 0, 1, 0);
    let v = Quaternion::from_ints(&split, 1, 0, -1, 0);
    if !(&u * &v).is_zero() {
        return Err("(1 + j)(1 - j) ≠ 0 in H(-1, 1)".into());
    }
    Ok(format!("{trials} random quaternions; (1 + j)(1 - j) = 0"))
}

/// One row immanant at n = 8 within 5 s single-threaded; parallel,
/// sequential and reference sums agree exactly.
fn criterion_8() -> Outcome {
    let algebra = alg(-1, 1);
    let a = gen_matrix(Seed(8), 8, 2, &algebra).unwrap();
    let chi = CharacterSpec::irreducible(vec![3, 3, 2]).unwrap();
    let start = Instant::now();
    let seq = row_immanant_with(&a, 3, &chi, &EvalOptions::default()).unwrap();
    let took = start.elapsed();
    if took > Duration::from_secs(5) {
        return Err(format!(
            "sequential n = 8 row immanant took {took:?}, limit 5 s"
        ));
    }
    let par = row_immanant_with(&a, 3, &chi, &EvalOptions::parallel()).unwrap();
    if par != seq {
        return Err(format!(
            "parallel {:?} ≠ sequential {:?}",
            par.value, seq.value
        ));
    }
    let seq_sums = class_sums(&a, 3, Side::Row, &EvalOptions::default()).unwrap();
    let ref_par = EvalOptions {
        parallel: true,
        ..EvalOptions::reference()
    };
    let ref_sums = class_sums(&a, 3, Side::Row, &ref_par).unwrap();
    if seq_sums != ref_sums {
        return Err("tree and reference class sums differ".into());
    }
    Ok(format!(
        "sequential {took:.2?}; parallel, sequential and reference agree"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("AC1 Hermitian immanant equality", criterion_1),
        ("AC2 scalar-entry oracle", criterion_2),
        (
            "AC3 zero-row, scaling, additivity, conjugate transpose",
            criterion_3,
        ),
        ("AC4 zero-ideal fixtures", criterion_4),
        ("AC5 conjugation-sum trace identity", criterion_5),
        ("AC6 character engine", criterion_6),
        ("AC7 split representation", criterion_7),
        ("AC8 n = 8 performance and parallel agreement", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
