//! The quaternion algebra H over a generic scalar, and its complexification.
//!
//! Coordinates are taken with respect to the basis (1, i^, j^, k^) subject to
//! i^2 = j^2 = k^2 = i^ j^ k^ = -1.  With a complex scalar type this is the
//! complexified algebra H_C; the bar involution stays formal (it never
//! conjugates the scalars), matching the convention used throughout.
//!
//! Provides:
//! - [`Quaternion`]: arithmetic, conjugate / reduced norm / reduced trace
//! - [`Quaternion::inv`] and [`Quaternion::prime`] (q' = q^{-1} / N q)
//! - [`iota`]: the standard embedding of H into 2x2 complex matrices
//! - splitting along the distinguished C inside H: [`Quaternion::zw_parts`]

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::linalg::CMat;
use crate::scalar::{ComplexScalar, RealScalar, Scalar};

/// Quaternion with coordinates `t + x i^ + y j^ + z k^`.
#[derive(Clone, PartialEq, Debug)]
pub struct Quaternion<S> {
    pub t: S,
    pub x: S,
    pub y: S,
    pub z: S,
}

/// Element of the complexified algebra H_C (Gaussian-rational scalars).
pub type CQuaternion = Quaternion<crate::scalar::GRat>;

/// Division attempted with a zero-norm quaternion.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ZeroDivisor;

impl fmt::Display for ZeroDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quaternion with zero reduced norm is not invertible")
    }
}

impl<S: Scalar> Quaternion<S> {
    pub fn new(t: S, x: S, y: S, z: S) -> Self {
        Quaternion { t, x, y, z }
    }

    pub fn zero() -> Self {
        Quaternion::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn one() -> Self {
        Quaternion::new(S::one(), S::zero(), S::zero(), S::zero())
    }

    pub fn i() -> Self {
        Quaternion::new(S::zero(), S::one(), S::zero(), S::zero())
    }

    pub fn j() -> Self {
        Quaternion::new(S::zero(), S::zero(), S::one(), S::zero())
    }

    pub fn k() -> Self {
        Quaternion::new(S::zero(), S::zero(), S::zero(), S::one())
    }

    /// Basis element e_i for i in 0..4, in the order (1, i^, j^, k^).
    pub fn basis(i: usize) -> Self {
        match i {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::j(),
            3 => Self::k(),
            _ => panic!("basis index out of range"),
        }
    }

    pub fn from_real(t: S) -> Self {
        Quaternion::new(t, S::zero(), S::zero(), S::zero())
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_real(S::from_i64(n))
    }

    pub fn coords(&self) -> [S; 4] {
        [
            self.t.clone(),
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
        ]
    }

    pub fn coord(&self, i: usize) -> S {
        match i {
            0 => self.t.clone(),
            1 => self.x.clone(),
            2 => self.y.clone(),
            3 => self.z.clone(),
            _ => panic!("coordinate index out of range"),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// The standard involution q -> q bar.  Formal: scalars are untouched.
    pub fn conj(&self) -> Self {
        Quaternion::new(
            self.t.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
        )
    }

    /// Reduced norm N q = q qbar.
    pub fn norm(&self) -> S {
        self.t.clone() * self.t.clone()
            + self.x.clone() * self.x.clone()
            + self.y.clone() * self.y.clone()
            + self.z.clone() * self.z.clone()
    }

    /// Reduced trace T q = q + qbar.
    pub fn trace(&self) -> S {
        self.t.clone() + self.t.clone()
    }

    pub fn scale(&self, s: &S) -> Self {
        Quaternion::new(
            self.t.clone() * s.clone(),
            self.x.clone() * s.clone(),
            self.y.clone() * s.clone(),
            self.z.clone() * s.clone(),
        )
    }

    pub fn inv(&self) -> Result<Self, ZeroDivisor> {
        let n = self.norm();
        let ninv = n.inv().ok_or(ZeroDivisor)?;
        Ok(self.conj().scale(&ninv))
    }

    /// q' = q^{-1} / N q, the degree minus-three companion of inversion.
    pub fn prime(&self) -> Result<Self, ZeroDivisor> {
        let n = self.norm();
        let ninv = n.inv().ok_or(ZeroDivisor)?;
        Ok(self.inv()?.scale(&ninv))
    }

    /// Largest coordinate magnitude, for residual reporting.
    pub fn max_abs(&self) -> f64 {
        let mut m: f64 = 0.0;
        for c in self.coords() {
            let a = c.abs_f64();
            if a > m {
                m = a;
            }
        }
        m
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.clone() - other.clone()).max_abs()
    }
}

impl<S: RealScalar> Quaternion<S> {
    /// Numeric norm, for ball-membership checks in either mode.
    pub fn norm_f64(&self) -> f64 {
        self.norm().to_f64()
    }

    /// Lift into quaternions over a complex scalar with the same real part.
    pub fn complexify<C: ComplexScalar<Real = S>>(&self) -> Quaternion<C> {
        Quaternion::new(
            C::from_re(self.t.clone()),
            C::from_re(self.x.clone()),
            C::from_re(self.y.clone()),
            C::from_re(self.z.clone()),
        )
    }

    /// The pair (z, w) with q = z + w j^ under C = R + R i^, i.e.
    /// z = t + i x and w = y + i z.
    pub fn zw_parts<C: ComplexScalar<Real = S>>(&self) -> (C, C) {
        (
            C::new(self.t.clone(), self.x.clone()),
            C::new(self.y.clone(), self.z.clone()),
        )
    }
}

impl<C: ComplexScalar> Quaternion<C> {
    /// Complex conjugation of the scalars only (not the bar involution).
    pub fn conj_scalars(&self) -> Self {
        Quaternion::new(
            self.t.conj(),
            self.x.conj(),
            self.y.conj(),
            self.z.conj(),
        )
    }

    /// Components (q0, q1) of q = q0 + j^ q1 with q0, q1 in C = span(1, i^).
    ///
    /// j^ (c + d i^) = c j^ - d k^, so q0 = t + i x and q1 = y - i z.
    pub fn j_left_parts(&self) -> (C, C) {
        let i = C::i();
        (
            self.t.clone() + i.clone() * self.x.clone(),
            self.y.clone() - i * self.z.clone(),
        )
    }

    /// Rebuild q from its `j_left_parts`.
    pub fn from_j_left_parts(q0: &C, q1: &C) -> Self {
        Quaternion::new(
            C::from_re(q0.re()),
            C::from_re(q0.im()),
            C::from_re(q1.re()),
            C::from_re(-q1.im()),
        )
    }

    /// Embed a complex scalar along the distinguished C = span(1, i^).
    pub fn from_complex(c: &C) -> Self {
        Quaternion::new(
            C::from_re(c.re()),
            C::from_re(c.im()),
            C::zero(),
            C::zero(),
        )
    }
}

impl<S: Scalar> Add for Quaternion<S> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Quaternion::new(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<S: Scalar> Sub for Quaternion<S> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Quaternion::new(self.t - o.t, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<S: Scalar> Neg for Quaternion<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Quaternion::new(-self.t, -self.x, -self.y, -self.z)
    }
}

impl<S: Scalar> Mul for Quaternion<S> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<S: Scalar> Add for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn add(self, o: &Quaternion<S>) -> Quaternion<S> {
        self.clone() + o.clone()
    }
}

impl<S: Scalar> Sub for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn sub(self, o: &Quaternion<S>) -> Quaternion<S> {
        self.clone() - o.clone()
    }
}

impl<S: Scalar> Mul for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn mul(self, o: &Quaternion<S>) -> Quaternion<S> {
        let (a, b, c, d) = (&self.t, &self.x, &self.y, &self.z);
        let (e, f, g, h) = (&o.t, &o.x, &o.y, &o.z);
        Quaternion::new(
            a.clone() * e.clone()
                - b.clone() * f.clone()
                - c.clone() * g.clone()
                - d.clone() * h.clone(),
            a.clone() * f.clone() + b.clone() * e.clone() + c.clone() * h.clone()
                - d.clone() * g.clone(),
            a.clone() * g.clone() - b.clone() * h.clone()
                + c.clone() * e.clone()
                + d.clone() * f.clone(),
            a.clone() * h.clone() + b.clone() * g.clone() - c.clone() * f.clone()
                + d.clone() * e.clone(),
        )
    }
}

impl<S: Scalar> fmt::Display for Quaternion<S>
where
    S: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {} i + {} j + {} k", self.t, self.x, self.y, self.z)
    }
}

/// The standard embedding of H (or H_C) into 2x2 matrices over C:
/// z + w j^ maps to [[z, w], [-conj w, conj z]].
pub fn iota<C: ComplexScalar>(q: &Quaternion<C>) -> CMat<C> {
    let i = C::i();
    let z = q.t.clone() + i.clone() * q.x.clone();
    let w = q.y.clone() + i.clone() * q.z.clone();
    let zbar = q.t.clone() - i.clone() * q.x.clone();
    let wbar = q.y.clone() - i * q.z.clone();
    CMat::from_rows(2, 2, [z, w, -wbar, zbar])
}

/// Inverse of [`iota`] on its image.
pub fn iota_back<C: ComplexScalar>(m: &CMat<C>) -> Quaternion<C> {
    assert!(m.rows == 2 && m.cols == 2);
    let z = m.at(0, 0).clone();
    let w = m.at(0, 1).clone();
    let half = C::from_ratio(1, 2);
    let i = C::i();
    // t = (z + zbar)/2 recovered from the two diagonal entries, etc.
    let t = (z.clone() + m.at(1, 1).clone()) * half.clone();
    let x = (z - m.at(1, 1).clone()) * half.clone() * (-i.clone());
    let y = (w.clone() - m.at(1, 0).clone()) * half.clone();
    let zc = (w + m.at(1, 0).clone()) * half * (-i);
    Quaternion::new(t, x, y, zc)
}
