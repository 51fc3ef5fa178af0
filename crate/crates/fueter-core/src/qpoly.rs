//! Quaternion-coefficient polynomials in the four real coordinates of H.
//!
//! A [`QPolynomial`] is a finitely supported map from exponent tuples
//! (a, b, c, d) for t^a x^b y^c z^d to quaternion coefficients stored on the
//! left.  Monomials are real and central, so only coefficient order matters:
//! products multiply coefficients in operand order, and left/right scalar
//! actions act on the coefficients from the matching side.
//!
//! Wirtinger operators for the split q = z + w j^ (z = t + ix, w = y + iz)
//! are provided for the complex-valued subalgebra span(1, i^).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::quaternion::Quaternion;
use crate::scalar::Scalar;

/// Exponents of t, x, y, z.
pub type Exps = [u16; 4];

/// Sparse polynomial with quaternion coefficients on the left of real
/// monomials.
#[derive(Clone, PartialEq, Debug)]
pub struct QPolynomial<S> {
    pub terms: BTreeMap<Exps, Quaternion<S>>,
}

impl<S: Scalar> QPolynomial<S> {
    pub fn zero() -> Self {
        QPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(q: Quaternion<S>) -> Self {
        let mut p = Self::zero();
        p.insert([0; 4], q);
        p
    }

    pub fn one() -> Self {
        Self::constant(Quaternion::one())
    }

    /// The coordinate function t, x, y or z.
    pub fn variable(i: usize) -> Self {
        let mut e = [0u16; 4];
        e[i] = 1;
        let mut p = Self::zero();
        p.insert(e, Quaternion::one());
        p
    }

    /// The identity function q = t + x i^ + y j^ + z k^.
    pub fn identity() -> Self {
        let mut p = Self::zero();
        for i in 0..4 {
            let mut e = [0u16; 4];
            e[i] = 1;
            p.insert(e, Quaternion::basis(i));
        }
        p
    }

    pub fn insert(&mut self, e: Exps, q: Quaternion<S>) {
        if q.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                let sum = slot.clone() + q;
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(e, q);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, q) in &o.terms {
            out.insert(*e, q.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        QPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, q)| (*e, -q.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = [
                    e1[0] + e2[0],
                    e1[1] + e2[1],
                    e1[2] + e2[2],
                    e1[3] + e2[3],
                ];
                out.insert(e, c1 * c2);
            }
        }
        out
    }

    /// Left action of a quaternion scalar.
    pub fn scale_left(&self, q: &Quaternion<S>) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.insert(*e, q * c);
        }
        out
    }

    /// Right action of a quaternion scalar.
    pub fn scale_right(&self, q: &Quaternion<S>) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.insert(*e, c * q);
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.insert(*e, c.scale(s));
        }
        out
    }

    /// Partial derivative in coordinate i.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut en = *e;
            en[i] -= 1;
            out.insert(en, c.scale(&S::from_i64(e[i] as i64)));
        }
        out
    }

    /// Sum of second partials.
    pub fn laplacian(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            out = out.add(&self.partial(i).partial(i));
        }
        out
    }

    pub fn eval(&self, q: &Quaternion<S>) -> Quaternion<S> {
        let coords = q.coords();
        let mut acc = Quaternion::zero();
        for (e, c) in &self.terms {
            let mut m = S::one();
            for i in 0..4 {
                for _ in 0..e[i] {
                    m = m * coords[i].clone();
                }
            }
            acc = acc + c.scale(&m);
        }
        acc
    }

    /// The pointwise quaternion-conjugated function fbar(q) = conj(f(q)).
    pub fn conj_values(&self) -> Self {
        QPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, c.conj())).collect(),
        }
    }

    /// f-dagger(q) = f(qbar): substitute (x, y, z) -> (-x, -y, -z).
    pub fn dagger(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let flips = (e[1] + e[2] + e[3]) % 2;
            let coeff = if flips == 1 { -c.clone() } else { c.clone() };
            out.insert(*e, coeff);
        }
        out
    }

    /// f-star = (fbar)-dagger, q -> conj(f(qbar)).
    pub fn star(&self) -> Self {
        self.conj_values().dagger()
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| (e[0] + e[1] + e[2] + e[3]) as usize)
            .max()
            .unwrap_or(0)
    }

    /// True when every monomial has total degree d (the zero polynomial is
    /// homogeneous of every degree).
    pub fn is_homogeneous(&self, d: usize) -> bool {
        self.terms
            .keys()
            .all(|e| (e[0] + e[1] + e[2] + e[3]) as usize == d)
    }

    pub fn max_abs(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.max_abs())
            .fold(0.0, f64::max)
    }

    /// Compose with four real-valued polynomials (components must have
    /// coefficients in the real span of 1).
    pub fn compose(&self, comps: &[QPolynomial<S>; 4]) -> Self {
        for p in comps {
            debug_assert!(p
                .terms
                .values()
                .all(|c| c.x.is_zero() && c.y.is_zero() && c.z.is_zero()));
        }
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut m = Self::one();
            for i in 0..4 {
                for _ in 0..e[i] {
                    m = m.mul(&comps[i]);
                }
            }
            out = out.add(&m.scale_left(c));
        }
        out
    }

    /// All terms, for serialization.
    pub fn iter_terms(&self) -> impl Iterator<Item = (&Exps, &Quaternion<S>)> {
        self.terms.iter()
    }

    /// Left-multiply by the basis quaternion e_i and return (used by the
    /// Fueter operators).
    fn lmul_basis(&self, i: usize) -> Self {
        self.scale_left(&Quaternion::basis(i))
    }

    fn rmul_basis(&self, i: usize) -> Self {
        self.scale_right(&Quaternion::basis(i))
    }
}

/// Wirtinger-style variables for the split q = z + w j^.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WVar {
    Z,
    ZBar,
    W,
    WBar,
}

impl<S: Scalar> QPolynomial<S> {
    /// The complex coordinate polynomials z = t + i^ x, w = y + i^ z and
    /// their conjugates.
    pub fn complex_coordinate(v: WVar) -> Self {
        let i = Quaternion::<S>::i();
        let (re, im, sign) = match v {
            WVar::Z => (0, 1, false),
            WVar::ZBar => (0, 1, true),
            WVar::W => (2, 3, false),
            WVar::WBar => (2, 3, true),
        };
        let mut p = Self::variable(re);
        let imag = Self::variable(im).scale_left(&if sign { -i } else { i });
        p = p.add(&imag);
        p
    }

    /// Wirtinger derivative: d/dz = (d/dt - i^ d/dx)/2 acting on functions
    /// with coefficients in span(1, i^); the i^ multiplies from the left.
    pub fn wirtinger(&self, v: WVar) -> Self {
        let half = S::from_ratio(1, 2);
        let i = Quaternion::<S>::i();
        let (re, im, conj) = match v {
            WVar::Z => (0, 1, false),
            WVar::ZBar => (0, 1, true),
            WVar::W => (2, 3, false),
            WVar::WBar => (2, 3, true),
        };
        let ipart = self.partial(im).scale_left(&i);
        let combined = if conj {
            self.partial(re).add(&ipart)
        } else {
            self.partial(re).sub(&ipart)
        };
        combined.scale(&half)
    }
}

/// The four Fueter-type first-order operators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FueterOp {
    /// d/dt - i d/dx - j d/dy - k d/dz (left multiplication).
    DLeft,
    /// d/dt + i d/dx + j d/dy + k d/dz (left); kernel = left-regular.
    DBarLeft,
    /// right-sided variant with minus signs.
    DRight,
    /// right-sided variant with plus signs; kernel = right-regular.
    DBarRight,
}

/// Apply one of the four operators symbolically.
pub fn fueter_apply<S: Scalar>(f: &QPolynomial<S>, op: FueterOp) -> QPolynomial<S> {
    let mut out = f.partial(0);
    for i in 1..4 {
        let d = f.partial(i);
        let term = match op {
            FueterOp::DLeft => d.lmul_basis(i).neg(),
            FueterOp::DBarLeft => d.lmul_basis(i),
            FueterOp::DRight => d.rmul_basis(i).neg(),
            FueterOp::DBarRight => d.rmul_basis(i),
        };
        out = out.add(&term);
    }
    out
}

/// Divided power x^[n] = x^n/n! (zero for negative n, handled by callers).
pub fn divided_power<S: Scalar>(base: &QPolynomial<S>, n: i64) -> Option<QPolynomial<S>> {
    if n < 0 {
        return None;
    }
    let mut p = QPolynomial::one();
    let mut fact = 1i64;
    for k in 1..=n {
        p = p.mul(base);
        fact *= k;
    }
    Some(p.scale(&S::from_ratio(1, fact)))
}

/// Row Jacobian of a quaternion-valued polynomial map: the four partials as
/// quaternion-valued polynomials.
pub fn jacobian_row<S: Scalar>(f: &QPolynomial<S>) -> [QPolynomial<S>; 4] {
    [f.partial(0), f.partial(1), f.partial(2), f.partial(3)]
}

/// Evaluate the derivative of f along a curve: for a curve with position
/// g(x0) and velocity v, returns (Df o g)(x0) . [v] = sum_i df/dx_i (g) v_i.
pub fn curve_derivative<S: Scalar>(
    f: &QPolynomial<S>,
    position: &Quaternion<S>,
    velocity: &Quaternion<S>,
) -> Quaternion<S> {
    let jac = jacobian_row(f);
    let v = velocity.coords();
    let mut acc = Quaternion::zero();
    for i in 0..4 {
        acc = acc + jac[i].eval(position).scale(&v[i]);
    }
    acc
}
