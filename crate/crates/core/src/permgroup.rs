//! Permutations of `{0, …, n-1}`, their cycle structure, and the anchored
//! left- and right-ordered cycle notations that fix the factor order of
//! row and column immanant monomials.
//!
//! Library indices are 0-based. Serialized permutations and the `Display`
//! form of [`OrderedCycles`] are 1-based.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{param, Result};

/// Largest `n` accepted by [`enumerate_permutations`] (10! ≈ 3.6M terms).
pub const DEFAULT_MAX_N: usize = 10;

/// A bijection of `{0, …, n-1}`; `images[m]` is the image of `m`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &m in &images {
            if m >= n || std::mem::replace(&mut seen[m], true) {
                return Err(param(format!("{images:?} is not a permutation of 0..{n}")));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds from 1-based images such as `[3, 4, 1, 2]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(param("1-based permutation contains 0"));
        }
        Self::from_images(images.iter().map(|&m| m - 1).collect())
    }

    /// Builds from disjoint 0-based cycles; unmentioned points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (t, &m) in cycle.iter().enumerate() {
                if m >= n || std::mem::replace(&mut touched[m], true) {
                    return Err(param(format!(
                        "cycles {cycles:?} are not disjoint in 0..{n}"
                    )));
                }
                images[m] = cycle[(t + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, m: usize) -> usize {
        self.images[m]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&m| m + 1).collect()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (m, &im) in self.images.iter().enumerate() {
            inv[im] = m;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles, each starting at its smallest element, in increasing
    /// order of that element. Fixed points appear as singletons.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if !seen[start] {
                out.push(self.orbit(start, &mut seen));
            }
        }
        out
    }

    fn orbit(&self, start: usize, seen: &mut [bool]) -> Vec<usize> {
        let mut cycle = vec![start];
        seen[start] = true;
        let mut m = self.images[start];
        while m != start {
            seen[m] = true;
            cycle.push(m);
            m = self.images[m];
        }
        cycle
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(Vec::len).collect())
    }

    /// `(-1)^(n - r)` with `r` the number of cycles, fixed points included.
    pub fn sign(&self) -> i32 {
        let r = self.cycles().len();
        if (self.len() - r).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Anchored left-ordered cycle notation.
    pub fn left_ordered(&self, anchor: usize) -> Result<OrderedCycles> {
        self.check_anchor(anchor)?;
        let mut seen = vec![false; self.len()];
        let mut cycles = vec![self.orbit(anchor, &mut seen)];
        for start in 0..self.len() {
            if !seen[start] {
                cycles.push(self.orbit(start, &mut seen));
            }
        }
        Ok(OrderedCycles {
            cycles,
            anchor,
            orientation: Orientation::Left,
        })
    }

    /// Anchored right-ordered cycle notation: each cycle is written so that
    /// its leader (the anchor, or the cycle minimum) sits at the right end,
    /// non-anchored cycles in decreasing order of leader, anchored cycle
    /// rightmost.
    pub fn right_ordered(&self, anchor: usize) -> Result<OrderedCycles> {
        self.check_anchor(anchor)?;
        let mut seen = vec![false; self.len()];
        let ending_at = |leader: usize, seen: &mut [bool]| {
            let mut cycle = self.orbit(leader, seen);
            cycle.rotate_left(1);
            cycle
        };
        let anchored = ending_at(anchor, &mut seen);
        let mut cycles = Vec::new();
        for start in 0..self.len() {
            if !seen[start] {
                cycles.push(ending_at(start, &mut seen));
            }
        }
        cycles.reverse();
        cycles.push(anchored);
        Ok(OrderedCycles {
            cycles,
            anchor,
            orientation: Orientation::Right,
        })
    }

    fn check_anchor(&self, anchor: usize) -> Result<()> {
        if anchor >= self.len() {
            Err(param(format!(
                "anchor {} out of range 1..={}",
                anchor + 1,
                self.len()
            )))
        } else {
            Ok(())
        }
    }

    /// Number of inversions; its parity is an independent route to the sign.
    pub fn inversions(&self) -> usize {
        let p = &self.images;
        (0..p.len())
            .flat_map(|s| (s + 1..p.len()).map(move |t| (s, t)))
            .filter(|&(s, t)| p[s] > p[t])
            .count()
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_based(&v).map_err(serde::de::Error::custom)
    }
}

/// Multiset of cycle lengths, fixed points included, kept nonincreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    /// `{1, 1, …, 1}`, the class of the identity.
    pub fn identity(n: usize) -> Self {
        CycleType { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total number of points `n`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of cycles `r`.
    pub fn cycle_count(&self) -> usize {
        self.parts.len()
    }

    pub fn sign(&self) -> i32 {
        if (self.size() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Left,
    Right,
}

/// A permutation written in anchored ordered cycle notation.
///
/// `cycles` lists the cycles in written order, left to right. In each
/// written cycle `(x_1 … x_m)` the permutation maps `x_t ↦ x_{t+1}` and
/// `x_m ↦ x_1`, whatever the orientation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderedCycles {
    pub cycles: Vec<Vec<usize>>,
    pub anchor: usize,
    pub orientation: Orientation,
}

impl OrderedCycles {
    pub fn size(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    /// Reads the notation back into a permutation.
    pub fn to_permutation(&self) -> Result<Permutation> {
        Permutation::from_cycles(self.size(), &self.cycles)
    }
}

impl fmt::Display for OrderedCycles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            f.write_str("(")?;
            for (t, m) in cycle.iter().enumerate() {
                if t > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", m + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All `n!` permutations of `{0, …, n-1}` in lexicographic order of their
/// image arrays.
pub fn enumerate_permutations(n: usize) -> Result<Permutations> {
    enumerate_permutations_up_to(n, DEFAULT_MAX_N)
}

/// As [`enumerate_permutations`] with an explicit upper bound on `n`.
pub fn enumerate_permutations_up_to(n: usize, max_n: usize) -> Result<Permutations> {
    if n == 0 || n > max_n {
        return Err(param(format!("n = {n} outside 1..={max_n}")));
    }
    Ok(Permutations::range(n, 0, factorial(n)))
}

/// Lexicographic permutation stream over a contiguous rank range, so the
/// full enumeration can be split into independent chunks.
#[derive(Clone, Debug)]
pub struct Permutations {
    current: Option<Vec<usize>>,
    remaining: u128,
}

impl Permutations {
    /// Permutations with lexicographic rank in `start..end`.
    pub fn range(n: usize, start: u128, end: u128) -> Self {
        let end = end.min(factorial(n));
        if start >= end {
            return Permutations {
                current: None,
                remaining: 0,
            };
        }
        Permutations {
            current: Some(unrank(n, start)),
            remaining: end - start,
        }
    }
}

/// The permutation of lexicographic rank `rank` via the factorial number
/// system.
pub fn unrank(n: usize, mut rank: u128) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for m in (0..n).rev() {
        let f = factorial(m);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

fn next_lex(p: &mut [usize]) -> bool {
    let Some(s) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let t = p.iter().rposition(|&v| v > p[s]).unwrap();
    p.swap(s, t);
    p[s + 1..].reverse();
    true
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        let cur = self.current.as_mut()?;
        let out = Permutation {
            images: cur.clone(),
        };
        self.remaining -= 1;
        if self.remaining > 0 && !next_lex(cur) {
            self.remaining = 0;
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, Some(r))
    }
}
