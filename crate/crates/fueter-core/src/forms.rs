//! Noncommutative H-valued differential forms on R^4.
//!
//! A degree-k form stores one quaternion-polynomial coefficient per
//! increasing index tuple (a 4-bit mask); the real basis forms dx_I are
//! central, so a single left-stored coefficient suffices and right
//! multiplication acts on coefficients from the right.
//!
//! Provides:
//! - [`HForm`]: wedge, exterior derivative, two-sided scalar actions,
//!   pointwise evaluation on tangent vectors
//! - the distinguished forms [`dq_form`], [`dqbar_wedge_dq`], [`dq_big`]
//!   (the 3-form whose pairing with regular functions closes), and
//!   [`omega0`]
//! - [`PolyMap`] pullbacks (exact) and pointwise Moebius pullbacks
//! - [`mobius_closed_form`]: the closed-form right sides of the three
//!   Moebius pullback laws
//! - [`automorphic_forms_build`]: the matrix-of-forms attached to a pair of
//!   coordinate families, with its (1 - Nq)-power bookkeeping
//!
//! Sign conventions, fixed by the requirement d(Dq f) = (dbar_l f) omega0
//! and the positivity of the reproducing integral: Dq = dx^dy^dz
//! - i^ dt^dy^dz + j^ dt^dx^dz - k^ dt^dx^dy.  With these,
//! d(g Dq f) = ((dbar_r g) f + g (dbar_l f)) omega0.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::group::{mobius_act, GroupError, QMatrix2};
use crate::qpoly::{fueter_apply, FueterOp, QPolynomial};
use crate::quaternion::Quaternion;
use crate::scalar::Scalar;

/// Exterior form of degree 0..4 with quaternion-polynomial coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct HForm<S> {
    pub degree: usize,
    pub terms: BTreeMap<u8, QPolynomial<S>>,
}

/// Wedge would exceed the top degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DegreeOverflow;

fn popcount(m: u8) -> usize {
    (m & 0xf).count_ones() as usize
}

fn mask_bits(m: u8) -> Vec<usize> {
    (0..4).filter(|i| m & (1 << i) != 0).collect()
}

/// Sign of dx_{m1} ^ dx_{m2} relative to the sorted merge: parity of the
/// number of pairs (a in m1, b in m2) with a > b.
fn merge_sign(m1: u8, m2: u8) -> i32 {
    let mut inv = 0;
    for a in mask_bits(m1) {
        for b in mask_bits(m2) {
            if a > b {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

impl<S: Scalar> HForm<S> {
    pub fn zero(degree: usize) -> Self {
        HForm {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// A 0-form from a polynomial.
    pub fn from_function(f: QPolynomial<S>) -> Self {
        let mut form = Self::zero(0);
        form.insert(0, f);
        form
    }

    /// The coordinate 1-form dx_i.
    pub fn dx(i: usize) -> Self {
        let mut form = Self::zero(1);
        form.insert(1 << i, QPolynomial::one());
        form
    }

    pub fn insert(&mut self, mask: u8, coeff: QPolynomial<S>) {
        assert_eq!(popcount(mask), self.degree, "mask degree mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(slot) => {
                let sum = slot.add(&coeff);
                if sum.is_zero() {
                    self.terms.remove(&mask);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(mask, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.degree, o.degree);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.insert(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        HForm {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    /// Left multiplication by a function (or constant via a constant
    /// polynomial).
    pub fn scale_left(&self, f: &QPolynomial<S>) -> Self {
        let mut out = Self::zero(self.degree);
        for (m, c) in &self.terms {
            out.insert(*m, f.mul(c));
        }
        out
    }

    /// Right multiplication by a function.
    pub fn scale_right(&self, f: &QPolynomial<S>) -> Self {
        let mut out = Self::zero(self.degree);
        for (m, c) in &self.terms {
            out.insert(*m, c.mul(f));
        }
        out
    }

    pub fn wedge(&self, o: &Self) -> Result<Self, DegreeOverflow> {
        let degree = self.degree + o.degree;
        if degree > 4 {
            return Err(DegreeOverflow);
        }
        let mut out = Self::zero(degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                if m1 & m2 != 0 {
                    continue;
                }
                let sign = merge_sign(*m1, *m2);
                let coeff = c1.mul(c2);
                let coeff = if sign < 0 { coeff.neg() } else { coeff };
                out.insert(m1 | m2, coeff);
            }
        }
        Ok(out)
    }

    /// Exterior derivative; adds dx_i on the left of each term.
    pub fn exterior_d(&self) -> Self {
        assert!(self.degree < 4 || self.is_zero() || {
            // d of a top form is zero
            true
        });
        if self.degree >= 4 {
            return Self::zero(4).clone();
        }
        let mut out = Self::zero(self.degree + 1);
        for (m, c) in &self.terms {
            for i in 0..4 {
                let bit = 1u8 << i;
                if m & bit != 0 {
                    continue;
                }
                let below = (m & (bit - 1)).count_ones();
                let dc = c.partial(i);
                let signed = if below % 2 == 1 { dc.neg() } else { dc };
                out.insert(m | bit, signed);
            }
        }
        out
    }

    /// Evaluate the form at a point on a tuple of tangent vectors.
    pub fn eval_on(&self, q: &Quaternion<S>, vectors: &[Quaternion<S>]) -> Quaternion<S> {
        assert_eq!(vectors.len(), self.degree);
        let mut acc = Quaternion::zero();
        for (m, c) in &self.terms {
            let bits = mask_bits(*m);
            let d = det_minor(&bits, vectors);
            acc = acc + c.eval(q).scale(&d);
        }
        acc
    }

    pub fn max_abs(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.max_abs())
            .fold(0.0, f64::max)
    }

    /// Map coefficients (for scalar conversion).
    pub fn map_coeffs<T: Scalar>(
        &self,
        f: impl Fn(&QPolynomial<S>) -> QPolynomial<T>,
    ) -> HForm<T> {
        HForm {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (*m, f(c))).collect(),
        }
    }
}

fn det_minor<S: Scalar>(rows: &[usize], vectors: &[Quaternion<S>]) -> S {
    // determinant of the matrix with entry (a, b) = coordinate rows[a] of
    // vectors[b], by expansion (size <= 4)
    let k = rows.len();
    if k == 0 {
        return S::one();
    }
    if k == 1 {
        return vectors[0].coord(rows[0]);
    }
    let mut acc = S::zero();
    for b in 0..k {
        let top = vectors[b].coord(rows[0]);
        if top.is_zero() {
            continue;
        }
        let rest_rows: Vec<usize> = rows[1..].to_vec();
        let rest_vecs: Vec<Quaternion<S>> = (0..k)
            .filter(|i| *i != b)
            .map(|i| vectors[i].clone())
            .collect();
        let minor = det_minor(&rest_rows, &rest_vecs);
        let term = top * minor;
        acc = if b % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// dq = dt + i^ dx + j^ dy + k^ dz.
pub fn dq_form<S: Scalar>() -> HForm<S> {
    let mut form = HForm::zero(1);
    for i in 0..4 {
        form.insert(1 << i, QPolynomial::constant(Quaternion::basis(i)));
    }
    form
}

/// dqbar = dt - i^ dx - j^ dy - k^ dz.
pub fn dqbar_form<S: Scalar>() -> HForm<S> {
    let mut form = HForm::zero(1);
    form.insert(1, QPolynomial::one());
    for i in 1..4 {
        form.insert(1 << i, QPolynomial::constant(-Quaternion::basis(i)));
    }
    form
}

/// dqbar ^ dq, computed from the definitions.
pub fn dqbar_wedge_dq<S: Scalar>() -> HForm<S> {
    dqbar_form::<S>().wedge(&dq_form()).unwrap()
}

/// The distinguished 3-form Dq = dx^dy^dz - i^ dt^dy^dz + j^ dt^dx^dz
/// - k^ dt^dx^dy; on an outward-oriented 3-sphere it restricts to the unit
/// normal times the surface measure.
pub fn dq_big<S: Scalar>() -> HForm<S> {
    let mut form = HForm::zero(3);
    // masks: {x,y,z} = 1110, {t,y,z} = 1101, {t,x,z} = 1011, {t,x,y} = 0111
    form.insert(0b1110, QPolynomial::one());
    form.insert(
        0b1101,
        QPolynomial::constant(-Quaternion::<S>::i()),
    );
    form.insert(0b1011, QPolynomial::constant(Quaternion::<S>::j()));
    form.insert(
        0b0111,
        QPolynomial::constant(-Quaternion::<S>::k()),
    );
    form
}

/// The volume form dt^dx^dy^dz.
pub fn omega0<S: Scalar>() -> HForm<S> {
    let mut form = HForm::zero(4);
    form.insert(0b1111, QPolynomial::one());
    form
}

/// Polynomial self-map of R^4 with real-valued components.
#[derive(Clone, Debug)]
pub struct PolyMap<S> {
    pub comps: [QPolynomial<S>; 4],
}

impl<S: Scalar> PolyMap<S> {
    pub fn identity() -> Self {
        PolyMap {
            comps: core::array::from_fn(QPolynomial::variable),
        }
    }

    /// The linear map q -> u q v for fixed quaternions u, v.
    pub fn two_sided_mul(u: &Quaternion<S>, v: &Quaternion<S>) -> Self {
        let comps = core::array::from_fn(|j| {
            let mut p = QPolynomial::zero();
            for i in 0..4 {
                let image = &(u * &Quaternion::basis(i)) * v;
                let mut e = [0u16; 4];
                e[i] = 1;
                p.insert(e, Quaternion::from_real(image.coord(j)));
            }
            p
        });
        PolyMap { comps }
    }

    pub fn compose_after(&self, inner: &PolyMap<S>) -> Self {
        PolyMap {
            comps: core::array::from_fn(|j| self.comps[j].compose(&inner.comps)),
        }
    }

    /// Exact symbolic pullback through the map.
    pub fn pullback(&self, form: &HForm<S>) -> HForm<S> {
        let dphi: Vec<HForm<S>> = (0..4)
            .map(|j| HForm::from_function(self.comps[j].clone()).exterior_d())
            .collect();
        let mut out = HForm::zero(form.degree);
        for (m, c) in &form.terms {
            let bits = mask_bits(*m);
            let mut wedge = HForm::from_function(QPolynomial::one());
            for b in bits {
                wedge = wedge.wedge(&dphi[b]).unwrap();
            }
            let composed = c.compose(&self.comps);
            out = out.add(&wedge.scale_left(&composed));
        }
        out
    }
}

/// Derivative of the Moebius map of g at q, applied to the tangent vector h:
/// a h s - (aq+b) s c h s with s = (cq+d)^{-1}.  Built from the product and
/// inverse differentiation rules only.
pub fn mobius_differential<S: Scalar>(
    g: &QMatrix2<S>,
    q: &Quaternion<S>,
    h: &Quaternion<S>,
) -> Result<Quaternion<S>, GroupError> {
    let den = &(&g.c * q) + &g.d;
    let s = den.inv()?;
    let num = &(&g.a * q) + &g.b;
    let first = &(&g.a * h) * &s;
    let second = &(&(&(&num * &s) * &(&g.c * h)) * &s);
    Ok(first - second.clone())
}

/// Pointwise Moebius pullback: evaluates (gamma^* form) at q as a constant
/// form, by pushing the four coordinate frames through the differential.
pub fn mobius_pullback_at<S: Scalar>(
    g: &QMatrix2<S>,
    form: &HForm<S>,
    q: &Quaternion<S>,
) -> Result<HForm<S>, GroupError> {
    let gq = mobius_act(g, q)?;
    let k = form.degree;
    let mut out = HForm::zero(k);
    // coefficient of dx_I = evaluation on the frame (e_i)_{i in I}
    let masks: Vec<u8> = (0u8..16).filter(|m| popcount(*m) == k).collect();
    for m in masks {
        let bits = mask_bits(m);
        let mut vecs = Vec::with_capacity(k);
        for b in bits {
            vecs.push(mobius_differential(g, q, &Quaternion::basis(b))?);
        }
        let value = form.eval_on(&gq, &vecs);
        out.insert(m, QPolynomial::constant(value));
    }
    Ok(out)
}

/// Which distinguished form a closed-form Moebius pullback law refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PullbackLaw {
    /// gamma^*(dq) = (abar + q bbar)^{-1} dq (cq+d)^{-1}
    Dq,
    /// gamma^*(dqbar^dq) = conj(cq+d)^{-1} dqbar^dq (cq+d)^{-1} |cq+d|^{-2}.
    ///
    /// The norm factor is forced: conjugating the dq law and wedging leaves
    /// the real scalar 1/N(abar + q bbar) = 1/N(cq+d) in the middle.
    DqbarDq,
    /// gamma^*(Dq) = (abar + q bbar)' Dq (cq+d)'
    BigDq,
}

/// Evaluate the closed-form right side of the pullback law at q.
pub fn mobius_closed_form<S: Scalar>(
    g: &QMatrix2<S>,
    law: PullbackLaw,
    q: &Quaternion<S>,
) -> Result<HForm<S>, GroupError> {
    let den = &(&g.c * q) + &g.d;
    let left_base = &(q * &g.b.conj()) + &g.a.conj();
    let (l, r, base) = match law {
        PullbackLaw::Dq => (left_base.inv()?, den.inv()?, dq_form()),
        PullbackLaw::DqbarDq => {
            let ninv = den
                .norm()
                .inv()
                .ok_or(GroupError::SingularDenominator)?;
            (
                den.conj().inv()?.scale(&ninv),
                den.inv()?,
                dqbar_wedge_dq(),
            )
        }
        PullbackLaw::BigDq => (left_base.prime()?, den.prime()?, dq_big()),
    };
    let lp = QPolynomial::constant(l);
    let rp = QPolynomial::constant(r);
    Ok(base.scale_left(&lp).scale_right(&rp))
}

/// Which of the three associated differential forms to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AssociatedForm {
    /// g* dq f / (1 - Nq)^2
    Eta,
    /// g* dqbar^dq f / (1 - Nq)
    Theta,
    /// g* Dq f
    Omega,
}

/// Matrix of forms with an implicit (1 - Nq)^power denominator.
#[derive(Clone, Debug)]
pub struct WeightedFormMatrix<S> {
    pub entries: Vec<Vec<HForm<S>>>,
    pub inv_one_minus_nq_power: u32,
}

/// Build the matrix of forms with entries g_j^* xi f_i from two coordinate
/// families.
pub fn automorphic_forms_build<S: Scalar>(
    f: &[QPolynomial<S>],
    g: &[QPolynomial<S>],
    which: AssociatedForm,
) -> WeightedFormMatrix<S> {
    let (base, power): (HForm<S>, u32) = match which {
        AssociatedForm::Eta => (dq_form(), 2),
        AssociatedForm::Theta => (dqbar_wedge_dq(), 1),
        AssociatedForm::Omega => (dq_big(), 0),
    };
    let entries = f
        .iter()
        .map(|fi| {
            g.iter()
                .map(|gj| base.scale_left(&gj.star()).scale_right(fi))
                .collect()
        })
        .collect();
    WeightedFormMatrix {
        entries,
        inv_one_minus_nq_power: power,
    }
}
