//! The generalized quaternion algebra H(a, b) over ℚ.
//!
//! Basis `{1, i, j, k}` with `i² = a`, `j² = b`, `ij = k = -ji`. The rest of
//! the multiplication table follows by associativity:
//!
//! | ·     | i      | j     | k      |
//! |-------|--------|-------|--------|
//! | **i** | a      | k     | a·j    |
//! | **j** | -k     | b     | -b·i   |
//! | **k** | -a·j   | b·i   | -ab    |

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::rational::Rational;

/// Coordinates `(w, x, y, z)` of `w + x·i + y·j + z·k`.
pub type Coords = [Rational; 4];

#[derive(Debug, PartialEq, Eq, Hash)]
struct Params {
    a: Rational,
    b: Rational,
    ab: Rational,
}

/// Structure constants `(a, b)` of H(a, b). Cloning is cheap.
#[derive(Clone)]
pub struct AlgebraParams(Arc<Params>);

impl AlgebraParams {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(param(format!(
                "quaternion algebra parameters must be nonzero, got a = {a}, b = {b}"
            )));
        }
        let ab = &a * &b;
        Ok(AlgebraParams(Arc::new(Params { a, b, ab })))
    }

    /// Convenience constructor for integer parameters.
    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(a.into(), b.into())
    }

    /// Hamilton's quaternions H(-1, -1), a division algebra over ℚ.
    pub fn hamilton() -> Self {
        Self::from_ints(-1, -1).unwrap()
    }

    /// Cockle's split quaternions H(-1, 1).
    pub fn split() -> Self {
        Self::from_ints(-1, 1).unwrap()
    }

    pub fn a(&self) -> &Rational {
        &self.0.a
    }

    pub fn b(&self) -> &Rational {
        &self.0.b
    }

    pub fn ab(&self) -> &Rational {
        &self.0.ab
    }

    pub fn zero(&self) -> Quaternion {
        Quaternion::scalar(self, Rational::zero())
    }

    pub fn one(&self) -> Quaternion {
        Quaternion::scalar(self, Rational::one())
    }

    pub fn i(&self) -> Quaternion {
        self.basis(1)
    }

    pub fn j(&self) -> Quaternion {
        self.basis(2)
    }

    pub fn k(&self) -> Quaternion {
        self.basis(3)
    }

    fn basis(&self, slot: usize) -> Quaternion {
        let mut c = zero_coords();
        c[slot] = Rational::one();
        Quaternion::from_coords(self, c)
    }

    /// Product of two coordinate vectors in this algebra.
    pub fn mul_coords(&self, p: &Coords, q: &Coords) -> Coords {
        let [w1, x1, y1, z1] = p;
        let [w2, x2, y2, z2] = q;
        let p = &*self.0;
        let w = w1 * w2 + &p.a * &(x1 * x2) + &p.b * &(y1 * y2) - &p.ab * &(z1 * z2);
        let x = w1 * x2 + x1 * w2 + &p.b * &(z1 * y2 - y1 * z2);
        let y = w1 * y2 + y1 * w2 + &p.a * &(x1 * z2 - z1 * x2);
        let z = w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2;
        [w, x, y, z]
    }

    /// Norm form `w² - a·x² - b·y² + ab·z²`.
    pub fn norm_coords(&self, q: &Coords) -> Rational {
        let p = &*self.0;
        q[0].square() - &p.a * &q[1].square() - &p.b * &q[2].square() + &p.ab * &q[3].square()
    }
}

impl PartialEq for AlgebraParams {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.a == other.0.a && self.0.b == other.0.b)
    }
}

impl Eq for AlgebraParams {}

impl fmt::Debug for AlgebraParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({}, {})", self.0.a, self.0.b)
    }
}

impl fmt::Display for AlgebraParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct ParamsDoc {
    a: Rational,
    b: Rational,
}

impl Serialize for AlgebraParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ParamsDoc {
            a: self.a().clone(),
            b: self.b().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraParams {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = ParamsDoc::deserialize(d)?;
        AlgebraParams::new(doc.a, doc.b).map_err(serde::de::Error::custom)
    }
}

pub fn zero_coords() -> Coords {
    std::array::from_fn(|_| Rational::zero())
}

/// An element `w + x·i + y·j + z·k` of a fixed H(a, b).
///
/// Operator impls (`&p * &q` etc.) panic when the operands live in different
/// algebras; the `checked_*` methods report [`Error::AlgebraMismatch`].
#[derive(Clone, PartialEq, Eq)]
pub struct Quaternion {
    coords: Coords,
    algebra: AlgebraParams,
}

impl Quaternion {
    pub fn new(
        algebra: &AlgebraParams,
        w: Rational,
        x: Rational,
        y: Rational,
        z: Rational,
    ) -> Self {
        Self::from_coords(algebra, [w, x, y, z])
    }

    pub fn from_ints(algebra: &AlgebraParams, w: i64, x: i64, y: i64, z: i64) -> Self {
        Self::new(algebra, w.into(), x.into(), y.into(), z.into())
    }

    pub fn from_coords(algebra: &AlgebraParams, coords: Coords) -> Self {
        Quaternion {
            coords,
            algebra: algebra.clone(),
        }
    }

    pub fn scalar(algebra: &AlgebraParams, s: Rational) -> Self {
        let mut c = zero_coords();
        c[0] = s;
        Self::from_coords(algebra, c)
    }

    pub fn algebra(&self) -> &AlgebraParams {
        &self.algebra
    }

    pub fn coords(&self) -> &Coords {
        &self.coords
    }

    pub fn into_coords(self) -> Coords {
        self.coords
    }

    pub fn w(&self) -> &Rational {
        &self.coords[0]
    }

    pub fn x(&self) -> &Rational {
        &self.coords[1]
    }

    pub fn y(&self) -> &Rational {
        &self.coords[2]
    }

    pub fn z(&self) -> &Rational {
        &self.coords[3]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    /// True when the `i`, `j`, `k` components all vanish.
    pub fn is_scalar(&self) -> bool {
        self.coords[1..].iter().all(Rational::is_zero)
    }

    fn same_algebra(&self, other: &Quaternion) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn checked_add(&self, other: &Quaternion) -> Result<Quaternion> {
        self.same_algebra(other)?;
        let c = std::array::from_fn(|m| &self.coords[m] + &other.coords[m]);
        Ok(Self::from_coords(&self.algebra, c))
    }

    pub fn checked_sub(&self, other: &Quaternion) -> Result<Quaternion> {
        self.same_algebra(other)?;
        let c = std::array::from_fn(|m| &self.coords[m] - &other.coords[m]);
        Ok(Self::from_coords(&self.algebra, c))
    }

    pub fn checked_mul(&self, other: &Quaternion) -> Result<Quaternion> {
        self.same_algebra(other)?;
        let c = self.algebra.mul_coords(&self.coords, &other.coords);
        Ok(Self::from_coords(&self.algebra, c))
    }

    /// Multiplication by a central scalar.
    pub fn scale(&self, s: &Rational) -> Quaternion {
        let c = std::array::from_fn(|m| &self.coords[m] * s);
        Self::from_coords(&self.algebra, c)
    }

    /// The involution `x ↦ t(x) - x`.
    pub fn conj(&self) -> Quaternion {
        let [w, x, y, z] = &self.coords;
        Self::from_coords(&self.algebra, [w.clone(), -x, -y, -z])
    }

    /// `t(q) = q + conj(q) = 2w`.
    pub fn trace(&self) -> Rational {
        &self.coords[0] + &self.coords[0]
    }

    /// `n(q) = q·conj(q) = w² - a·x² - b·y² + ab·z²`.
    pub fn norm(&self) -> Rational {
        self.algebra.norm_coords(&self.coords)
    }

    /// True iff `n(q) = 0`. Includes `q = 0`.
    pub fn is_isotropic(&self) -> bool {
        self.norm().is_zero()
    }

    /// Image under the split-case isomorphism onto 2×2 matrices over ℚ,
    /// given `c` with `c² = b`:
    /// `i ↦ [[0, 1], [a, 0]]`, `j ↦ [[c, 0], [0, -c]]`, `k ↦ i·j`.
    pub fn split_rep(&self, c: &Rational) -> Result<Mat2> {
        if c.is_zero() || c.square() != *self.algebra.b() {
            return Err(param(format!(
                "{c} is not a square root of b = {}",
                self.algebra.b()
            )));
        }
        let a = self.algebra.a();
        let [w, x, y, z] = &self.coords;
        let cy = c * y;
        let cz = c * z;
        Ok(Mat2 {
            e11: w + &cy,
            e12: x - &cz,
            e21: a * &(x + &cz),
            e22: w - &cy,
        })
    }
}

/// Serialized as the coordinate 4-array `["w", "x", "y", "z"]`; the algebra
/// travels separately.
impl Serialize for Quaternion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [w, x, y, z] = &self.coords;
        write!(f, "({w}, {x}, {y}, {z})")
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, unit) in self.coords.iter().zip(["", "i", "j", "k"]) {
            if c.is_zero() {
                continue;
            }
            let mag = if c.is_negative() { -c } else { c.clone() };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if unit.is_empty() || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(unit);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl<'a> Add<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &'a Quaternion) -> Quaternion {
        self.checked_add(rhs).expect("quaternion algebra mismatch")
    }
}

impl<'a> Sub<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &'a Quaternion) -> Quaternion {
        self.checked_sub(rhs).expect("quaternion algebra mismatch")
    }
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &'a Quaternion) -> Quaternion {
        self.checked_mul(rhs).expect("quaternion algebra mismatch")
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        let c = std::array::from_fn(|m| -&self.coords[m]);
        Quaternion::from_coords(&self.algebra, c)
    }
}

/// A 2×2 matrix over ℚ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mat2 {
    pub e11: Rational,
    pub e12: Rational,
    pub e21: Rational,
    pub e22: Rational,
}

impl Mat2 {
    pub fn identity() -> Self {
        Mat2 {
            e11: Rational::one(),
            e12: Rational::zero(),
            e21: Rational::zero(),
            e22: Rational::one(),
        }
    }

    pub fn det(&self) -> Rational {
        &self.e11 * &self.e22 - &self.e12 * &self.e21
    }

    pub fn rows(&self) -> [[&Rational; 2]; 2] {
        [[&self.e11, &self.e12], [&self.e21, &self.e22]]
    }
}

impl<'a> Mul<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn mul(self, o: &'a Mat2) -> Mat2 {
        Mat2 {
            e11: &self.e11 * &o.e11 + &self.e12 * &o.e21,
            e12: &self.e11 * &o.e12 + &self.e12 * &o.e22,
            e21: &self.e21 * &o.e11 + &self.e22 * &o.e21,
            e22: &self.e21 * &o.e12 + &self.e22 * &o.e22,
        }
    }
}
