//! Sum over all `2^n` ways of conjugating factors of an ordered product.

use crate::algebra::{AlgebraParams, Quaternion};
use crate::error::{param, Result};
use crate::rational::Rational;

pub const MAX_LEMMA_N: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaOutcome {
    /// `T_n`, summed term by term.
    pub sum: Quaternion,
    /// `t(h_1)·…·t(h_n)` as a scalar quaternion.
    pub trace_product: Quaternion,
    pub terms: usize,
}

impl LemmaOutcome {
    pub fn holds(&self) -> bool {
        self.sum == self.trace_product
    }
}

/// `T_n = Σ h'_1·h'_2·…·h'_n` over every choice `h'_m ∈ {h_m, conj(h_m)}`,
/// compared against the product of traces.
pub fn check_lemma_tn(h: &[Quaternion]) -> Result<LemmaOutcome> {
    let n = h.len();
    if n == 0 || n > MAX_LEMMA_N {
        return Err(param(format!("need 1 ≤ n ≤ {MAX_LEMMA_N}, got {n}")));
    }
    let alg: &AlgebraParams = h[0].algebra();
    let conj: Vec<Quaternion> = h.iter().map(Quaternion::conj).collect();
    let mut sum = alg.zero();
    for mask in 0u32..(1 << n) {
        let mut term = alg.one();
        for m in 0..n {
            let factor = if mask & (1 << m) != 0 {
                &conj[m]
            } else {
                &h[m]
            };
            term = term.checked_mul(factor)?;
        }
        sum = sum.checked_add(&term)?;
    }
    let traces = h
        .iter()
        .map(Quaternion::trace)
        .fold(Rational::one(), |acc, t| acc * t);
    Ok(LemmaOutcome {
        sum,
        trace_product: Quaternion::scalar(alg, traces),
        terms: 1 << n,
    })
}
