//! Row and column immanants over H(a, b).
//!
//! The `i`-th row immanant sums, over every `σ ∈ S_n`, the weight `χ(σ)`
//! times the product of the entries `a_{m σ(m)}` taken in the order fixed by
//! the left-ordered cycle notation of `σ` anchored at `i`. The column
//! immanant does the same with the right-ordered notation.
//!
//! Two evaluation routes are provided:
//!
//! * [`Strategy::Tree`] walks the cycle notation as a search tree, so
//!   permutations sharing a notation prefix share the partial product. The
//!   row walk extends the product on the right along `σ`; the column walk
//!   extends it on the left along `τ⁻¹`. Subtrees under a zero prefix are
//!   skipped.
//! * [`Strategy::Reference`] enumerates `S_n`, writes each permutation in
//!   ordered cycle notation, and multiplies out its monomial.
//!
//! Both accumulate one sum per cycle type ([`ClassSums`]); any class function
//! is then applied afterwards without repeating the `n!` enumeration.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{zero_coords, AlgebraParams, Coords, Quaternion};
use crate::characters::{CharacterEvaluator, CharacterSpec};
use crate::error::{param, Error, Result};
use crate::matrix::MatrixH;
use crate::permgroup::{
    enumerate_permutations_up_to, factorial, CycleType, OrderedCycles, Orientation, Permutations,
    DEFAULT_MAX_N,
};
use crate::rational::Rational;

/// Which family of immanants: anchored on a row or on a column.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Row,
    Column,
}

impl Side {
    pub fn orientation(self) -> Orientation {
        match self {
            Side::Row => Orientation::Left,
            Side::Column => Orientation::Right,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    #[default]
    Tree,
    Reference,
}

#[derive(Clone, Copy, Debug)]
pub struct EvalOptions {
    pub strategy: Strategy,
    pub parallel: bool,
    pub max_n: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            strategy: Strategy::Tree,
            parallel: false,
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl EvalOptions {
    pub fn parallel() -> Self {
        EvalOptions {
            parallel: true,
            ..Self::default()
        }
    }

    pub fn reference() -> Self {
        EvalOptions {
            strategy: Strategy::Reference,
            ..Self::default()
        }
    }
}

/// One computed row or column immanant. `anchor` is 0-based.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ImmanantResult {
    pub value: Quaternion,
    pub anchor: usize,
    pub side: Side,
    pub character: CharacterSpec,
}

/// Per-cycle-type sums of the ordered monomials for one anchor and side.
#[derive(Clone, Debug)]
pub struct ClassSums {
    algebra: AlgebraParams,
    n: usize,
    sums: BTreeMap<CycleType, Coords>,
}

impl ClassSums {
    fn new(algebra: &AlgebraParams, n: usize) -> Self {
        ClassSums {
            algebra: algebra.clone(),
            n,
            sums: BTreeMap::new(),
        }
    }

    fn add(&mut self, lengths: &[usize], value: &Coords) {
        let slot = self
            .sums
            .entry(CycleType::new(lengths.to_vec()))
            .or_insert_with(zero_coords);
        for (s, v) in slot.iter_mut().zip(value) {
            *s += v;
        }
    }

    fn merge(mut self, other: ClassSums) -> ClassSums {
        for (ct, v) in other.sums {
            let slot = self.sums.entry(ct).or_insert_with(zero_coords);
            for (s, x) in slot.iter_mut().zip(&v) {
                *s += x;
            }
        }
        self
    }

    /// Sum of the monomials of one cycle type, if any was nonzero.
    pub fn class_sum(&self, ct: &CycleType) -> Quaternion {
        let c = self.sums.get(ct).cloned().unwrap_or_else(zero_coords);
        Quaternion::from_coords(&self.algebra, c)
    }

    /// `Σ_μ χ(μ) · S_μ`.
    pub fn weigh(&self, chi: &CharacterSpec) -> Result<Quaternion> {
        chi.check_size(self.n)?;
        let mut eval = CharacterEvaluator::new();
        let mut total = zero_coords();
        for (ct, sum) in &self.sums {
            let w = eval.evaluate(chi, ct)?;
            if w == 0 {
                continue;
            }
            let w = Rational::from_integer(w);
            for (t, s) in total.iter_mut().zip(sum) {
                *t += &(s * &w);
            }
        }
        Ok(Quaternion::from_coords(&self.algebra, total))
    }
}

impl PartialEq for ClassSums {
    fn eq(&self, other: &Self) -> bool {
        let nonzero = |s: &ClassSums| -> BTreeMap<CycleType, Coords> {
            s.sums
                .iter()
                .filter(|(_, v)| !v.iter().all(Rational::is_zero))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect()
        };
        self.algebra == other.algebra && self.n == other.n && nonzero(self) == nonzero(other)
    }
}

fn check_orientation(oc: &OrderedCycles, want: Orientation, a: &MatrixH) -> Result<()> {
    if oc.orientation != want {
        return Err(param(format!(
            "expected {want:?}-ordered cycles, got {:?}-ordered",
            oc.orientation
        )));
    }
    if oc.size() != a.n() {
        return Err(param(format!(
            "cycle notation covers {} points but the matrix is {}×{}",
            oc.size(),
            a.n(),
            a.n()
        )));
    }
    Ok(())
}

fn product(algebra: &AlgebraParams, factors: impl Iterator<Item = Coords>) -> Quaternion {
    let mut acc: Option<Coords> = None;
    for f in factors {
        acc = Some(match acc {
            None => f,
            Some(p) => algebra.mul_coords(&p, &f),
        });
    }
    Quaternion::from_coords(algebra, acc.unwrap_or_else(|| algebra.one().into_coords()))
}

/// Row monomial of a left-ordered notation: for each written cycle
/// `(c_0 c_1 … c_l)`, left to right, the factors
/// `a_{c_0 c_1} a_{c_1 c_2} … a_{c_l c_0}`.
pub fn row_monomial(a: &MatrixH, oc: &OrderedCycles) -> Result<Quaternion> {
    check_orientation(oc, Orientation::Left, a)?;
    let factors = oc.cycles.iter().flat_map(|cycle| {
        (0..cycle.len()).map(move |t| {
            let (from, to) = (cycle[t], cycle[(t + 1) % cycle.len()]);
            a.get(from, to).coords().clone()
        })
    });
    Ok(product(a.algebra(), factors))
}

/// Column monomial of a right-ordered notation: for each written cycle
/// `(x_1 … x_m)` ending at its leader `x_m`, left to right, the factors
/// `a_{x_m x_1} a_{x_1 x_2} … a_{x_{m-1} x_m}`.
pub fn col_monomial(a: &MatrixH, oc: &OrderedCycles) -> Result<Quaternion> {
    check_orientation(oc, Orientation::Right, a)?;
    let factors = oc.cycles.iter().flat_map(|cycle| {
        let m = cycle.len();
        (0..m).map(move |t| {
            let from = cycle[(t + m - 1) % m];
            a.get(from, cycle[t]).coords().clone()
        })
    });
    Ok(product(a.algebra(), factors))
}

/// Sums the ordered monomials of every permutation, grouped by cycle type.
pub fn class_sums(a: &MatrixH, anchor: usize, side: Side, opts: &EvalOptions) -> Result<ClassSums> {
    a.check_index(anchor)?;
    if a.n() > opts.max_n {
        return Err(param(format!(
            "n = {} exceeds the configured maximum {}",
            a.n(),
            opts.max_n
        )));
    }
    Ok(match opts.strategy {
        Strategy::Tree => tree_sums(a, anchor, side, opts.parallel),
        Strategy::Reference => reference_sums(a, anchor, side, opts)?,
    })
}

fn reference_sums(a: &MatrixH, anchor: usize, side: Side, opts: &EvalOptions) -> Result<ClassSums> {
    let n = a.n();
    let run = |perms: Permutations| -> Result<ClassSums> {
        let mut sums = ClassSums::new(a.algebra(), n);
        for p in perms {
            let mono = match side {
                Side::Row => row_monomial(a, &p.left_ordered(anchor)?)?,
                Side::Column => col_monomial(a, &p.right_ordered(anchor)?)?,
            };
            sums.add(p.cycle_type().parts(), mono.coords());
        }
        Ok(sums)
    };
    if !opts.parallel {
        return run(enumerate_permutations_up_to(n, opts.max_n)?);
    }
    let total = factorial(n);
    let chunks = (rayon::current_num_threads() as u128 * 4).clamp(1, total);
    let step = total.div_ceil(chunks);
    (0..chunks)
        .into_par_iter()
        .map(|c| run(Permutations::range(n, c * step, (c + 1) * step)))
        .try_reduce(|| ClassSums::new(a.algebra(), n), |x, y| Ok(x.merge(y)))
}

/// Depth-first walk over ordered cycle notations sharing partial products.
struct Walk<'a> {
    a: &'a MatrixH,
    side: Side,
    n: usize,
    used: Vec<bool>,
    lengths: Vec<usize>,
    sums: ClassSums,
}

impl Walk<'_> {
    /// Factor contributed by the step `from → to` of the walk.
    fn factor(&self, from: usize, to: usize) -> &Coords {
        match self.side {
            Side::Row => self.a.get(from, to).coords(),
            Side::Column => self.a.get(to, from).coords(),
        }
    }

    fn extend(&self, prefix: Option<&Coords>, from: usize, to: usize) -> Option<Coords> {
        let f = self.factor(from, to);
        let next = match prefix {
            None => f.clone(),
            Some(p) => {
                let alg = self.a.algebra();
                match self.side {
                    Side::Row => alg.mul_coords(p, f),
                    Side::Column => alg.mul_coords(f, p),
                }
            }
        };
        if next.iter().all(Rational::is_zero) {
            None
        } else {
            Some(next)
        }
    }

    /// Continue the cycle led by `leader`, currently at `cur`, of length `len`.
    fn step(&mut self, prefix: Option<&Coords>, leader: usize, cur: usize, len: usize) {
        // close the cycle
        if let Some(p) = self.extend(prefix, cur, leader) {
            self.lengths.push(len);
            match self.used.iter().position(|&u| !u) {
                None => self.sums.add(&self.lengths, &p),
                Some(next_leader) => {
                    self.used[next_leader] = true;
                    self.step(Some(&p), next_leader, next_leader, 1);
                    self.used[next_leader] = false;
                }
            }
            self.lengths.pop();
        }
        // or extend it
        for next in 0..self.n {
            if self.used[next] {
                continue;
            }
            if let Some(p) = self.extend(prefix, cur, next) {
                self.used[next] = true;
                self.step(Some(&p), leader, next, len + 1);
                self.used[next] = false;
            }
        }
    }
}

fn tree_sums(a: &MatrixH, anchor: usize, side: Side, parallel: bool) -> ClassSums {
    let n = a.n();
    let new_walk = || {
        let mut used = vec![false; n];
        used[anchor] = true;
        Walk {
            a,
            side,
            n,
            used,
            lengths: Vec::with_capacity(n),
            sums: ClassSums::new(a.algebra(), n),
        }
    };
    if !parallel || n < 3 {
        let mut w = new_walk();
        w.step(None, anchor, anchor, 1);
        return w.sums;
    }
    // Split on the anchor's first step. Branch `None` closes the anchored
    // cycle as a fixed point; branch `Some(m)` moves to `m`.
    let branches: Vec<Option<usize>> = std::iter::once(None)
        .chain((0..n).filter(|&m| m != anchor).map(Some))
        .collect();
    branches
        .into_par_iter()
        .map(|branch| {
            let mut w = new_walk();
            match branch {
                None => {
                    if let Some(p) = w.extend(None, anchor, anchor) {
                        w.lengths.push(1);
                        let leader = w.used.iter().position(|&u| !u).unwrap();
                        w.used[leader] = true;
                        w.step(Some(&p), leader, leader, 1);
                    }
                }
                Some(m) => {
                    if let Some(p) = w.extend(None, anchor, m) {
                        w.used[m] = true;
                        w.step(Some(&p), anchor, m, 2);
                    }
                }
            }
            w.sums
        })
        .reduce(|| ClassSums::new(a.algebra(), n), ClassSums::merge)
}

pub fn row_immanant_with(
    a: &MatrixH,
    i: usize,
    chi: &CharacterSpec,
    opts: &EvalOptions,
) -> Result<ImmanantResult> {
    immanant(a, i, Side::Row, chi, opts)
}

pub fn col_immanant_with(
    a: &MatrixH,
    j: usize,
    chi: &CharacterSpec,
    opts: &EvalOptions,
) -> Result<ImmanantResult> {
    immanant(a, j, Side::Column, chi, opts)
}

pub fn immanant(
    a: &MatrixH,
    anchor: usize,
    side: Side,
    chi: &CharacterSpec,
    opts: &EvalOptions,
) -> Result<ImmanantResult> {
    chi.check_size(a.n())?;
    let value = class_sums(a, anchor, side, opts)?.weigh(chi)?;
    Ok(ImmanantResult {
        value,
        anchor,
        side,
        character: chi.clone(),
    })
}

/// `rImm_i A` with 0-based `i`.
pub fn row_immanant(a: &MatrixH, i: usize, chi: &CharacterSpec) -> Result<ImmanantResult> {
    row_immanant_with(a, i, chi, &EvalOptions::default())
}

/// `cImm_j A` with 0-based `j`.
pub fn col_immanant(a: &MatrixH, j: usize, chi: &CharacterSpec) -> Result<ImmanantResult> {
    col_immanant_with(a, j, chi, &EvalOptions::default())
}

pub fn row_det(a: &MatrixH, i: usize) -> Result<ImmanantResult> {
    row_immanant(a, i, &CharacterSpec::Sign)
}

pub fn col_det(a: &MatrixH, j: usize) -> Result<ImmanantResult> {
    col_immanant(a, j, &CharacterSpec::Sign)
}

pub fn row_per(a: &MatrixH, i: usize) -> Result<ImmanantResult> {
    row_immanant(a, i, &CharacterSpec::Constant)
}

pub fn col_per(a: &MatrixH, j: usize) -> Result<ImmanantResult> {
    col_immanant(a, j, &CharacterSpec::Constant)
}

/// Every row immanant followed by every column immanant, each computed
/// independently.
pub fn all_immanants(a: &MatrixH, chi: &CharacterSpec) -> Result<Vec<ImmanantResult>> {
    all_immanants_with(a, chi, &EvalOptions::default())
}

pub fn all_immanants_with(
    a: &MatrixH,
    chi: &CharacterSpec,
    opts: &EvalOptions,
) -> Result<Vec<ImmanantResult>> {
    chi.check_size(a.n())?;
    [Side::Row, Side::Column]
        .into_iter()
        .flat_map(|side| (0..a.n()).map(move |m| (side, m)))
        .map(|(side, m)| immanant(a, m, side, chi, opts))
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum VerifyLevel {
    #[default]
    None,
    Full,
}

/// The immanant of a Hermitian matrix, an element of the base field.
///
/// Computes `rImm_1 A`; with [`VerifyLevel::Full`] also checks that all `2n`
/// row and column immanants coincide.
pub fn hermitian_immanant(
    a: &MatrixH,
    chi: &CharacterSpec,
    level: VerifyLevel,
) -> Result<Rational> {
    if !a.is_hermitian() {
        return Err(Error::Precondition("matrix is not Hermitian".into()));
    }
    let first = row_immanant(a, 0, chi)?.value;
    if !first.is_scalar() {
        return Err(Error::Consistency(format!(
            "row immanant of a Hermitian matrix has nonzero pure part: {first}"
        )));
    }
    if level == VerifyLevel::Full {
        for r in all_immanants(a, chi)? {
            if r.value != first {
                return Err(Error::Consistency(format!(
                    "{:?} immanant at anchor {} is {} but the first row immanant is {}",
                    r.side,
                    r.anchor + 1,
                    r.value,
                    first
                )));
            }
        }
    }
    Ok(first.w().clone())
}

/// `Σ_σ χ(σ) Π_m a_{m σ(m)}` for a matrix with base-field entries.
pub fn classical_immanant(a: &MatrixH, chi: &CharacterSpec) -> Result<Rational> {
    if !a.is_scalar() {
        return Err(Error::Precondition(
            "classical immanant needs base-field entries".into(),
        ));
    }
    chi.check_size(a.n())?;
    let mut eval = CharacterEvaluator::new();
    let mut total = Rational::zero();
    for p in enumerate_permutations_up_to(a.n(), a.n().max(DEFAULT_MAX_N))? {
        let w = eval.evaluate(chi, &p.cycle_type())?;
        if w == 0 {
            continue;
        }
        let term = (0..a.n()).fold(Rational::from_integer(w), |acc, m| {
            acc * a.get(m, p.apply(m)).w()
        });
        total += &term;
    }
    Ok(total)
}
