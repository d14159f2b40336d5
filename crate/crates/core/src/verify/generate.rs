//! Seeded generators for quaternions, matrices and zero-ideal fixtures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraParams, Quaternion};
use crate::error::{param, Error, Result};
use crate::matrix::MatrixH;
use crate::rational::Rational;

/// Default magnitude bound for generated numerators and denominators.
pub const DEFAULT_BOUND: u32 = 3;

/// Reproducible source of randomness for one fixture.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Seed(pub u64);

impl Seed {
    /// Seed of the `index`-th sub-stream (SplitMix64 finalizer).
    pub fn derive(self, index: u64) -> Seed {
        let mut z = self
            .0
            .wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        Seed(z ^ (z >> 31))
    }

    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

pub fn random_rational(rng: &mut impl Rng, bound: u32) -> Rational {
    let bound = i64::from(bound.max(1));
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound);
    Rational::new(num, den)
}

pub fn random_quaternion(rng: &mut impl Rng, bound: u32, alg: &AlgebraParams) -> Quaternion {
    let c = std::array::from_fn(|_| random_rational(rng, bound));
    Quaternion::from_coords(alg, c)
}

/// A quaternion whose coordinates have numerator and denominator of
/// magnitude at most `bound`.
pub fn gen_quaternion(seed: Seed, bound: u32, alg: &AlgebraParams) -> Quaternion {
    random_quaternion(&mut seed.rng(), bound, alg)
}

pub fn random_matrix(rng: &mut impl Rng, n: usize, bound: u32, alg: &AlgebraParams) -> MatrixH {
    MatrixH::from_fn(alg, n, |_, _| random_quaternion(rng, bound, alg)).expect("n ≥ 1")
}

pub fn gen_matrix(seed: Seed, n: usize, bound: u32, alg: &AlgebraParams) -> Result<MatrixH> {
    check_size(n)?;
    Ok(random_matrix(&mut seed.rng(), n, bound, alg))
}

/// A matrix with base-field entries.
pub fn gen_scalar_matrix(seed: Seed, n: usize, bound: u32, alg: &AlgebraParams) -> Result<MatrixH> {
    check_size(n)?;
    let mut rng = seed.rng();
    MatrixH::from_fn(alg, n, |_, _| {
        Quaternion::scalar(alg, random_rational(&mut rng, bound))
    })
}

/// Scalar diagonal, `a_ji = conj(a_ij)` off the diagonal.
pub fn gen_hermitian(seed: Seed, n: usize, alg: &AlgebraParams) -> Result<MatrixH> {
    check_size(n)?;
    let mut rng = seed.rng();
    let mut a = MatrixH::identity(alg, n)?;
    for r in 0..n {
        a.set(
            r,
            r,
            Quaternion::scalar(alg, random_rational(&mut rng, DEFAULT_BOUND)),
        )?;
        for c in r + 1..n {
            let q = random_quaternion(&mut rng, DEFAULT_BOUND, alg);
            a.set(c, r, q.conj())?;
            a.set(r, c, q)?;
        }
    }
    Ok(a)
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        Err(param("matrix size must be at least 1"))
    } else {
        Ok(())
    }
}

/// A fixed nonzero element of norm zero, when one of the known families
/// applies: `b = c²` gives `c + j`, `a = c²` gives `c + i`, `-ab = d²`
/// gives `d + k`, and `a + b = 0` gives `i + j`.
pub fn base_isotropic(alg: &AlgebraParams) -> Result<Quaternion> {
    let one = Rational::one;
    let zero = Rational::zero;
    if let Some(c) = alg.b().sqrt() {
        return Ok(Quaternion::new(alg, c, zero(), one(), zero()));
    }
    if let Some(c) = alg.a().sqrt() {
        return Ok(Quaternion::new(alg, c, one(), zero(), zero()));
    }
    if let Some(d) = (-alg.ab()).sqrt() {
        return Ok(Quaternion::new(alg, d, zero(), zero(), one()));
    }
    if (alg.a() + alg.b()).is_zero() {
        return Ok(Quaternion::new(alg, zero(), one(), one(), zero()));
    }
    Err(Error::UnsupportedAlgebra {
        a: alg.a().to_string(),
        b: alg.b().to_string(),
    })
}

/// A random nonzero isotropic element `h·u·g` built from [`base_isotropic`].
pub fn random_isotropic(rng: &mut impl Rng, alg: &AlgebraParams) -> Result<Quaternion> {
    let u = base_isotropic(alg)?;
    for _ in 0..16 {
        let h = random_quaternion(rng, DEFAULT_BOUND, alg);
        let g = random_quaternion(rng, DEFAULT_BOUND, alg);
        let q = &(&h * &u) * &g;
        if !q.is_zero() {
            return Ok(q);
        }
    }
    Ok(u)
}

pub fn gen_isotropic(seed: Seed, alg: &AlgebraParams) -> Result<Quaternion> {
    random_isotropic(&mut seed.rng(), alg)
}

/// Point whose cycle follows a fixed anchored cycle in the ordered notation:
/// the smallest index other than `k`.
fn next_leader(k: usize) -> usize {
    if k == 0 {
        1
    } else {
        0
    }
}

/// Isotropic elements `u_i` for every `i`, with `u_k` shared with the next
/// leader so that a fixed anchor is also annihilated.
fn isotropic_family(
    rng: &mut impl Rng,
    n: usize,
    k: usize,
    alg: &AlgebraParams,
) -> Result<Vec<Quaternion>> {
    if n < 2 {
        return Err(param("zero-ideal fixtures need n ≥ 2"));
    }
    if k >= n {
        return Err(param(format!("anchor {} out of range 1..={n}", k + 1)));
    }
    let mut u = (0..n)
        .map(|_| random_isotropic(rng, alg))
        .collect::<Result<Vec<_>>>()?;
    u[k] = u[next_leader(k)].clone();
    Ok(u)
}

/// Matrix whose row immanant at anchor `k` vanishes for every weight:
/// `a_{k i} ∈ H·u_i` and row `i ≠ k` lies in `conj(u_i)·H`, with every
/// `u_i` isotropic. Then each monomial begins with `a_{k i} a_{i m}`, a
/// multiple of `u_i·conj(u_i) = n(u_i) = 0`.
pub fn build_row_zero_fixture(
    seed: Seed,
    n: usize,
    k: usize,
    alg: &AlgebraParams,
) -> Result<MatrixH> {
    let mut rng = seed.rng();
    let u = isotropic_family(&mut rng, n, k, alg)?;
    let ubar: Vec<Quaternion> = u.iter().map(Quaternion::conj).collect();
    MatrixH::from_fn(alg, n, |r, c| {
        let h = random_quaternion(&mut rng, DEFAULT_BOUND, alg);
        if r == k {
            &h * &u[c]
        } else {
            &ubar[r] * &h
        }
    })
}

/// Mirror of [`build_row_zero_fixture`] for the column immanant at `k`:
/// `a_{i k} ∈ u_i·H` and column `i ≠ k` lies in `H·conj(u_i)`.
pub fn build_col_zero_fixture(
    seed: Seed,
    n: usize,
    k: usize,
    alg: &AlgebraParams,
) -> Result<MatrixH> {
    let mut rng = seed.rng();
    let u = isotropic_family(&mut rng, n, k, alg)?;
    let ubar: Vec<Quaternion> = u.iter().map(Quaternion::conj).collect();
    MatrixH::from_fn(alg, n, |r, c| {
        let h = random_quaternion(&mut rng, DEFAULT_BOUND, alg);
        if c == k {
            &u[r] * &h
        } else {
            &h * &ubar[c]
        }
    })
}
