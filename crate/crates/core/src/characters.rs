//! Class functions on S_n used as immanant weights.
//!
//! Irreducible characters are evaluated with the Murnaghan–Nakayama rule on
//! beta-sets: removing a border strip of length `r` moves one bead of the
//! beta-set from position `β` to an empty position `β - r`, and the strip's
//! leg length is the number of beads jumped over.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{param, Error, Result};
use crate::permgroup::{factorial, CycleType};
use crate::rational::Rational;

/// An integer partition `λ₁ ≥ λ₂ ≥ … ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(param(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(param(format!("partition {parts:?} is not nonincreasing")));
        }
        if parts.is_empty() {
            return Err(param("empty partition"));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of standard Young tableaux of shape `λ`, by the hook-length
    /// formula.
    pub fn dimension(&self) -> BigInt {
        let conj = conjugate(&self.parts);
        let mut hooks = BigInt::one();
        for (row, &len) in self.parts.iter().enumerate() {
            for (col, &height) in conj.iter().enumerate().take(len) {
                hooks *= (len - col) + (height - row) - 1;
            }
        }
        BigInt::from(factorial(self.size())) / hooks
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Partition::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn conjugate(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (0..width)
        .map(|col| parts.iter().take_while(|&&p| p > col).count())
        .collect()
}

/// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Which class function weights an immanant.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum CharacterSpec {
    /// `χ ≡ 1`: permanents.
    Constant,
    /// `χ = sign`: determinants.
    Sign,
    /// The irreducible character `χ_λ`.
    #[serde(rename = "partition")]
    Irreducible { parts: Partition },
}

impl CharacterSpec {
    pub fn irreducible(parts: Vec<usize>) -> Result<Self> {
        Ok(CharacterSpec::Irreducible {
            parts: Partition::new(parts)?,
        })
    }

    /// `{constant, sign}` followed by every irreducible character of S_n.
    pub fn all_for(n: usize) -> Vec<CharacterSpec> {
        let mut out = vec![CharacterSpec::Constant, CharacterSpec::Sign];
        out.extend(
            partitions(n)
                .into_iter()
                .map(|parts| CharacterSpec::Irreducible { parts }),
        );
        out
    }

    /// Checks that the character is defined on S_n.
    pub fn check_size(&self, n: usize) -> Result<()> {
        match self {
            CharacterSpec::Irreducible { parts } if parts.size() != n => Err(param(format!(
                "character {self} is defined on S_{}, not S_{n}",
                parts.size()
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for CharacterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterSpec::Constant => f.write_str("constant"),
            CharacterSpec::Sign => f.write_str("sign"),
            CharacterSpec::Irreducible { parts } => write!(f, "partition{parts}"),
        }
    }
}

/// Accepts `constant`, `sign`, a comma-separated partition such as `2,1,1`,
/// or the JSON object form.
impl FromStr for CharacterSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "constant" => return Ok(CharacterSpec::Constant),
            "sign" => return Ok(CharacterSpec::Sign),
            _ => {}
        }
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::Parse {
                location: "character".into(),
                message: e.to_string(),
            });
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| param(format!("unrecognized character {s:?}")))?;
        CharacterSpec::irreducible(parts)
    }
}

/// Murnaghan–Nakayama evaluator with a private memo table keyed by
/// (remaining shape, number of cycle lengths already consumed).
#[derive(Default)]
pub struct CharacterEvaluator {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl CharacterEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn evaluate(&mut self, spec: &CharacterSpec, ct: &CycleType) -> Result<i64> {
        match spec {
            CharacterSpec::Constant => Ok(1),
            CharacterSpec::Sign => Ok(ct.sign() as i64),
            CharacterSpec::Irreducible { parts } => {
                if parts.size() != ct.size() {
                    return Err(param(format!(
                        "character {spec} cannot be evaluated on a cycle type of S_{}",
                        ct.size()
                    )));
                }
                Ok(self.mn(parts.parts(), ct.parts()))
            }
        }
    }

    /// `χ_λ(μ)` with `μ` consumed from the front (nonincreasing).
    fn mn(&mut self, shape: &[usize], lengths: &[usize]) -> i64 {
        let Some((&r, rest)) = lengths.split_first() else {
            return i64::from(shape.is_empty());
        };
        let key = (shape.to_vec(), lengths.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let len = shape.len();
        let beta: Vec<usize> = shape
            .iter()
            .enumerate()
            .map(|(s, &p)| p + (len - 1 - s))
            .collect();
        let mut total = 0;
        for (s, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let target = b - r;
            let leg = beta.iter().filter(|&&x| target < x && x < b).count();
            let mut moved = beta.clone();
            moved[s] = target;
            moved.sort_unstable_by(|x, y| y.cmp(x));
            let next: Vec<usize> = moved
                .iter()
                .enumerate()
                .map(|(t, &x)| x - (len - 1 - t))
                .filter(|&p| p > 0)
                .collect();
            let v = self.mn(&next, rest);
            total += if leg % 2 == 0 { v } else { -v };
        }
        self.memo.insert(key, total);
        total
    }
}

/// `χ(μ)` embedded in ℚ. Always an integer.
pub fn evaluate(spec: &CharacterSpec, ct: &CycleType) -> Result<Rational> {
    CharacterEvaluator::new()
        .evaluate(spec, ct)
        .map(Rational::from_integer)
}

pub fn dimension(lambda: &Partition) -> BigInt {
    lambda.dimension()
}
