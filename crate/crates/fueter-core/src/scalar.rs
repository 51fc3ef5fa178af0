//! Scalar abstraction behind all algebraic types.
//!
//! Two families of instantiations:
//! - exact: [`Rat`] (arbitrary-precision rationals), [`Rad`] (the real field
//!   Q(sqrt2, sqrt3)), and their complexifications [`GRat`], [`K8`];
//! - floating point: `f64` and [`C64`].
//!
//! Exact scalars make every algebraic identity test a zero-residual test;
//! floats are reserved for quadrature and pointwise evaluation.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Float, Num, One, Zero};

/// Exact arbitrary-precision rational scalar.
pub type Rat = BigRational;

/// Gaussian rationals Q(i).
pub type GRat = Complex<Rat>;

/// The field Q(i, sqrt2, sqrt3), used for exactly-normalized root vectors.
pub type K8 = Complex<Rad>;

/// Complex floats.
pub type C64 = Complex<f64>;

/// Common interface for coefficient scalars.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic is exact and `is_zero` is a decision procedure.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse; `None` for zero (exact) or non-finite input.
    fn inv(&self) -> Option<Self>;
    /// Magnitude as a float, used for residual reporting.
    fn abs_f64(&self) -> f64;
}

/// Scalars that embed into the real line.
pub trait RealScalar: Scalar + PartialOrd {
    fn to_f64(&self) -> f64;
}

/// Scalars of the form `re + i im` over a real scalar.
pub trait ComplexScalar: Scalar {
    type Real: RealScalar;

    fn i() -> Self;
    fn conj(&self) -> Self;
    fn new(re: Self::Real, im: Self::Real) -> Self;
    fn re(&self) -> Self::Real;
    fn im(&self) -> Self::Real;

    fn from_re(re: Self::Real) -> Self {
        Self::new(re, Self::Real::zero())
    }
}

fn big_ratio(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        big_ratio(num, den)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn abs_f64(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl RealScalar for Rat {
    fn to_f64(&self) -> f64 {
        rat_to_f64(self)
    }
}

/// Rounded numeric value of a big rational.
pub fn rat_to_f64(r: &Rat) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn inv(&self) -> Option<Self> {
        if *self == 0.0 || !self.is_finite() {
            None
        } else {
            Some(1.0 / self)
        }
    }
    fn abs_f64(&self) -> f64 {
        Float::abs(*self)
    }
}

impl RealScalar for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl<T> Scalar for Complex<T>
where
    T: RealScalar + Num + Clone + Neg<Output = T>,
{
    const EXACT: bool = T::EXACT;

    fn zero() -> Self {
        Complex::new(<T as Scalar>::zero(), <T as Scalar>::zero())
    }
    fn one() -> Self {
        Complex::new(<T as Scalar>::one(), <T as Scalar>::zero())
    }
    fn from_i64(n: i64) -> Self {
        Complex::new(T::from_i64(n), <T as Scalar>::zero())
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(T::from_ratio(num, den), <T as Scalar>::zero())
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(&self.re) && Scalar::is_zero(&self.im)
    }
    fn inv(&self) -> Option<Self> {
        // 1/(a+bi) = (a-bi)/(a^2+b^2)
        let n = self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone();
        let ninv = Scalar::inv(&n)?;
        Some(Complex::new(
            self.re.clone() * ninv.clone(),
            -(self.im.clone() * ninv),
        ))
    }
    fn abs_f64(&self) -> f64 {
        let re = self.re.to_f64();
        let im = self.im.to_f64();
        libm::hypot(re, im)
    }
}

impl<T> ComplexScalar for Complex<T>
where
    T: RealScalar + Num + Clone + Neg<Output = T>,
{
    type Real = T;

    fn i() -> Self {
        Complex::new(<T as Scalar>::zero(), <T as Scalar>::one())
    }
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
    fn new(re: T, im: T) -> Self {
        Complex::new(re, im)
    }
    fn re(&self) -> T {
        self.re.clone()
    }
    fn im(&self) -> T {
        self.im.clone()
    }
}

/// The real field Q(sqrt2, sqrt3) with basis (1, sqrt2, sqrt3, sqrt6).
///
/// Root-vector normalizations involve 1/sqrt(-24) and 1/sqrt(-48); their
/// products stay inside Q(i, sqrt2, sqrt3), so carrying this field makes all
/// normalization identities exactly checkable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rad {
    /// Coordinates (a, b, c, d) for a + b sqrt2 + c sqrt3 + d sqrt6.
    pub c: [Rat; 4],
}

impl Rad {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        Rad { c: [a, b, c, d] }
    }

    pub fn from_rat(a: Rat) -> Self {
        Rad::new(a, Scalar::zero(), Scalar::zero(), Scalar::zero())
    }

    pub fn sqrt2() -> Self {
        Rad::new(
            Scalar::zero(),
            Scalar::one(),
            Scalar::zero(),
            Scalar::zero(),
        )
    }

    pub fn sqrt3() -> Self {
        Rad::new(
            Scalar::zero(),
            Scalar::zero(),
            Scalar::one(),
            Scalar::zero(),
        )
    }

    pub fn sqrt6() -> Self {
        Rad::new(
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::one(),
        )
    }

    /// Galois conjugate flipping the signs of sqrt2 and sqrt6.
    fn conj2(&self) -> Self {
        Rad::new(
            self.c[0].clone(),
            -self.c[1].clone(),
            self.c[2].clone(),
            -self.c[3].clone(),
        )
    }

    /// Galois conjugate flipping the signs of sqrt3 and sqrt6.
    fn conj3(&self) -> Self {
        Rad::new(
            self.c[0].clone(),
            self.c[1].clone(),
            -self.c[2].clone(),
            -self.c[3].clone(),
        )
    }
}

impl Add for Rad {
    type Output = Rad;
    fn add(self, o: Rad) -> Rad {
        let [a, b, c, d] = self.c;
        let [e, f, g, h] = o.c;
        Rad::new(a + e, b + f, c + g, d + h)
    }
}

impl Sub for Rad {
    type Output = Rad;
    fn sub(self, o: Rad) -> Rad {
        self + (-o)
    }
}

impl Neg for Rad {
    type Output = Rad;
    fn neg(self) -> Rad {
        let [a, b, c, d] = self.c;
        Rad::new(-a, -b, -c, -d)
    }
}

impl Mul for Rad {
    type Output = Rad;
    fn mul(self, o: Rad) -> Rad {
        // (1, s2, s3, s6) multiplication table: s2*s3 = s6, s2*s6 = 2 s3, ...
        let [a, b, c, d] = self.c;
        let [e, f, g, h] = o.c;
        let two = |r: &Rat| Rat::from_i64(2) * r.clone();
        let three = |r: &Rat| Rat::from_i64(3) * r.clone();
        let six = |r: &Rat| Rat::from_i64(6) * r.clone();
        Rad::new(
            a.clone() * e.clone()
                + two(&(b.clone() * f.clone()))
                + three(&(c.clone() * g.clone()))
                + six(&(d.clone() * h.clone())),
            a.clone() * f.clone()
                + b.clone() * e.clone()
                + three(&(c.clone() * h.clone()))
                + three(&(d.clone() * g.clone())),
            a.clone() * g.clone()
                + c.clone() * e.clone()
                + two(&(b.clone() * h.clone()))
                + two(&(d.clone() * f.clone())),
            a * h + d * e + b * g + c * f,
        )
    }
}

impl Rem for Rad {
    type Output = Rad;
    fn rem(self, _o: Rad) -> Rad {
        Scalar::zero()
    }
}

impl Div for Rad {
    type Output = Rad;
    fn div(self, o: Rad) -> Rad {
        Scalar::inv(&o).map(|v| self * v).expect("division by zero")
    }
}

impl Zero for Rad {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Rad {
    fn one() -> Self {
        Scalar::one()
    }
}

impl Num for Rad {
    type FromStrRadixErr = String;
    fn from_str_radix(_: &str, _: u32) -> Result<Self, String> {
        Err(String::from("unsupported"))
    }
}

impl Scalar for Rad {
    const EXACT: bool = true;

    fn zero() -> Self {
        Rad::from_rat(Scalar::zero())
    }
    fn one() -> Self {
        Rad::from_rat(Scalar::one())
    }
    fn from_i64(n: i64) -> Self {
        Rad::from_rat(Rat::from_i64(n))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rad::from_rat(big_ratio(num, den))
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|r| Zero::is_zero(r))
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            return None;
        }
        // Rationalize against the three nontrivial Galois conjugates; the
        // full product lands in Q.
        let p = self.conj2() * self.conj3() * (self.conj2().conj3());
        let n = self.clone() * p.clone();
        debug_assert!(n.c[1..].iter().all(|r| Zero::is_zero(r)));
        let ninv = Scalar::inv(&n.c[0])?;
        Some(p * Rad::from_rat(ninv))
    }
    fn abs_f64(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl PartialOrd for Rad {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        self.to_f64().partial_cmp(&other.to_f64())
    }
}

impl RealScalar for Rad {
    fn to_f64(&self) -> f64 {
        rat_to_f64(&self.c[0])
            + rat_to_f64(&self.c[1]) * core::f64::consts::SQRT_2
            + rat_to_f64(&self.c[2]) * 1.732_050_807_568_877_2
            + rat_to_f64(&self.c[3]) * 2.449_489_742_783_178
    }
}

impl fmt::Display for Rad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*s2 + {}*s3 + {}*s6",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}
