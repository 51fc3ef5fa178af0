//! Regular-function families and the ball-side Dirac operator.
//!
//! Provides:
//! - [`p_kl`]: the complex-valued homogeneous family built from divided
//!   powers of z, zbar, w, wbar (q = z + w j^ with z = t + ix, w = y + iz);
//!   satisfies the Cauchy-Riemann-Fueter relations in the Wirtinger
//!   variables
//! - [`q_kl`]: Q^n_kl = P^n_kl - j^ P^n_{k-1,l}, left-regular
//! - [`VnFunction`]: tuples of quaternion polynomials as maps into the
//!   binary forms of degree n
//! - [`g_kn`], [`minimal_ktype`]: the degree-n family whose image under
//!   d/dX - j^ d/dY has left-regular coordinates
//! - [`dirac_lz`]: the Dirac operator computed along two independent routes
//!   (tensor decomposition + projection, and the Fueter operator applied to
//!   f_X - j^ f_Y scaled by 1/24), asserting they agree
//! - [`hwt_expression`]: the weight-transfer expression whose scalar-and-i
//!   components vanish exactly on coordinate tuples coming from a potential

use alloc::vec;
use alloc::vec::Vec;

use crate::qpoly::{divided_power, fueter_apply, FueterOp, QPolynomial, WVar};
use crate::quaternion::Quaternion;
use crate::scalar::Scalar;

/// P^n_{k,l}(z + w j^) = sum_r (-1)^r z^[n-k-l+r] zbar^[r] w^[k-r] wbar^[l-r].
///
/// Negative divided powers vanish, so the sum is finite and the result is
/// homogeneous of degree n or identically zero.  Values lie in span(1, i^).
pub fn p_kl<S: Scalar>(n: usize, k: i64, l: i64) -> QPolynomial<S> {
    let z = QPolynomial::complex_coordinate(WVar::Z);
    let zb = QPolynomial::complex_coordinate(WVar::ZBar);
    let w = QPolynomial::complex_coordinate(WVar::W);
    let wb = QPolynomial::complex_coordinate(WVar::WBar);
    let mut acc = QPolynomial::zero();
    for r in 0..=(n as i64) {
        let Some(t1) = divided_power(&z, n as i64 - k - l + r) else {
            continue;
        };
        let Some(t2) = divided_power(&zb, r) else {
            continue;
        };
        let Some(t3) = divided_power(&w, k - r) else {
            continue;
        };
        let Some(t4) = divided_power(&wb, l - r) else {
            continue;
        };
        let term = t1.mul(&t2).mul(&t3).mul(&t4);
        if r % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

/// Q^n_{k,l} = P^n_{k,l} - j^ P^n_{k-1,l}; left-regular by the CRF
/// relations.
pub fn q_kl<S: Scalar>(n: usize, k: i64, l: i64) -> QPolynomial<S> {
    let head = p_kl::<S>(n, k, l);
    let tail = p_kl::<S>(n, k - 1, l).scale_left(&Quaternion::j());
    head.sub(&tail)
}

/// Map into degree-n binary forms: coords[i] multiplies X^{n-i} Y^i.
#[derive(Clone, PartialEq, Debug)]
pub struct VnFunction<S> {
    pub n: usize,
    pub coords: Vec<QPolynomial<S>>,
}

impl<S: Scalar> VnFunction<S> {
    pub fn zero(n: usize) -> Self {
        VnFunction {
            n,
            coords: vec![QPolynomial::zero(); n + 1],
        }
    }

    pub fn from_coords(coords: Vec<QPolynomial<S>>) -> Self {
        assert!(!coords.is_empty());
        VnFunction {
            n: coords.len() - 1,
            coords,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Coefficient tuple of d/dX f (degree drops to n-1; n coordinates).
    pub fn diff_x(&self) -> Vec<QPolynomial<S>> {
        let n = self.n;
        (0..n)
            .map(|j| self.coords[j].scale(&S::from_i64((n - j) as i64)))
            .collect()
    }

    /// Coefficient tuple of d/dY f.
    pub fn diff_y(&self) -> Vec<QPolynomial<S>> {
        let n = self.n;
        (0..n)
            .map(|j| self.coords[j + 1].scale(&S::from_i64((j + 1) as i64)))
            .collect()
    }

    /// Coordinates of f_X - j^ f_Y, the weight-transfer of f (n entries of
    /// one lower polynomial degree in X, Y).
    pub fn weight_transfer(&self) -> Vec<QPolynomial<S>> {
        let fx = self.diff_x();
        let fy = self.diff_y();
        fx.iter()
            .zip(fy.iter())
            .map(|(a, b)| a.sub(&b.scale_left(&Quaternion::j())))
            .collect()
    }
}

/// g_k^n = sum_l P^n_{l,k} X^[l] Y^[n-l], in the standard monomial basis.
pub fn g_kn<S: Scalar>(n: usize, k: usize) -> VnFunction<S> {
    assert!(k <= n);
    let mut coords = Vec::with_capacity(n + 1);
    for i in 0..=n {
        // coefficient of X^{n-i} Y^i: l = n - i, divided by l! (n-l)!
        let l = n - i;
        let mut fact = 1i64;
        for m in 1..=(l as i64) {
            fact *= m;
        }
        for m in 1..=(i as i64) {
            fact *= m;
        }
        coords.push(p_kl::<S>(n, l as i64, k as i64).scale(&S::from_ratio(1, fact)));
    }
    VnFunction::from_coords(coords)
}

/// The pair (g_k^n, coordinates of h_k^n = (d/dX - j^ d/dY) g_k^n).
pub fn minimal_ktype<S: Scalar>(n: usize, k: usize) -> (VnFunction<S>, Vec<QPolynomial<S>>) {
    let g = g_kn::<S>(n, k);
    let h = g.weight_transfer();
    (g, h)
}

/// The two Dirac routes disagreed (impossible for well-formed inputs).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DiagramMismatch;

/// The Liu-Zhang-style Dirac operator on maps into degree-n forms, computed
/// two ways and cross-asserted:
///
/// (i) expand df over the four tensor slots of the isomorphism with
/// V_1 (x) V_1^*, apply the projection P^-, and pass to W_{n-1} by
/// X -> 1, Y -> -j^;
/// (ii) apply (1/24) dbar_l to the coordinates of f_X - j^ f_Y.
pub fn dirac_lz<S: Scalar>(f: &VnFunction<S>) -> Result<Vec<QPolynomial<S>>, DiagramMismatch> {
    assert!(f.n >= 1);
    let n = f.n;
    // route (ii)
    let h = f.weight_transfer();
    let scale = S::from_ratio(1, 24);
    let route2: Vec<QPolynomial<S>> = h
        .iter()
        .map(|c| fueter_apply(c, FueterOp::DBarLeft).scale(&scale))
        .collect();

    // route (i): the images of the basis quaternions in V_1 (x) V_1^* have
    // coefficients (X dX, X dY, Y dX, Y dY) as below, with i acting as i^
    // from the left.
    let i_unit = Quaternion::<S>::i();
    let one = Quaternion::<S>::one();
    // (c_xx, c_xy, c_yx, c_yy) per basis direction e_0..e_3
    let slots: [[Option<(Quaternion<S>, bool)>; 4]; 4] = [
        // e0 -> X dX + Y dY
        [
            Some((one.clone(), false)),
            None,
            None,
            Some((one.clone(), false)),
        ],
        // e1 -> i X dX - i Y dY
        [
            Some((i_unit.clone(), false)),
            None,
            None,
            Some((i_unit.clone(), true)),
        ],
        // e2 -> X dY - Y dX
        [
            None,
            Some((one.clone(), false)),
            Some((one.clone(), true)),
            None,
        ],
        // e3 -> i X dY + i Y dX
        [
            None,
            Some((i_unit.clone(), false)),
            Some((i_unit.clone(), false)),
            None,
        ],
    ];
    let mut x_part: Vec<QPolynomial<S>> = vec![QPolynomial::zero(); n];
    let mut y_part: Vec<QPolynomial<S>> = vec![QPolynomial::zero(); n];
    for dir in 0..4 {
        let df = VnFunction::from_coords(
            f.coords.iter().map(|c| c.partial(dir)).collect(),
        );
        let dfx = df.diff_x();
        let dfy = df.diff_y();
        let mut add_in = |part: &mut Vec<QPolynomial<S>>,
                          entry: &Option<(Quaternion<S>, bool)>,
                          vals: &Vec<QPolynomial<S>>| {
            if let Some((coef, negate)) = entry {
                for (slot, v) in part.iter_mut().zip(vals.iter()) {
                    let term = v.scale_left(coef);
                    *slot = if *negate {
                        slot.sub(&term)
                    } else {
                        slot.add(&term)
                    };
                }
            }
        };
        add_in(&mut x_part, &slots[dir][0], &dfx);
        add_in(&mut x_part, &slots[dir][1], &dfy);
        add_in(&mut y_part, &slots[dir][2], &dfx);
        add_in(&mut y_part, &slots[dir][3], &dfy);
    }
    let minus_j = -Quaternion::<S>::j();
    let route1: Vec<QPolynomial<S>> = x_part
        .iter()
        .zip(y_part.iter())
        .map(|(xp, yp)| xp.add(&yp.scale_left(&minus_j)).scale(&scale))
        .collect();

    if route1 != route2 {
        return Err(DiagramMismatch);
    }
    Ok(route2)
}

/// The weight-transfer test expression: for a coordinate tuple h_0..h_{n-1}
/// (coefficients of X^{n-1-i} Y^i), the entries (m+1) h_{m+1} -
/// (n-1-m) j^ h_m of (d/dY - j^ d/dX) applied to the tuple's form.
///
/// On tuples of the form f_X - j^ f_Y this equals -j^ (f_XX + f_YY), so its
/// values lie in j^ C: the 1- and i^-components of every coefficient vanish.
pub fn hwt_expression<S: Scalar>(h: &[QPolynomial<S>]) -> Vec<QPolynomial<S>> {
    let n = h.len(); // degree of the underlying weight (coords of V_{n-1})
    if n < 2 {
        return Vec::new();
    }
    let j = Quaternion::<S>::j();
    (0..n - 1)
        .map(|m| {
            let a = h[m + 1].scale(&S::from_i64((m + 1) as i64));
            let b = h[m]
                .scale_left(&j)
                .scale(&S::from_i64((n - 1 - m) as i64));
            a.sub(&b)
        })
        .collect()
}

/// Largest magnitude of the 1- and i^-components across the expression.
pub fn hwt_complex_part_max<S: Scalar>(expr: &[QPolynomial<S>]) -> f64 {
    let mut worst: f64 = 0.0;
    for p in expr {
        for (_, c) in p.iter_terms() {
            worst = worst.max(c.t.abs_f64()).max(c.x.abs_f64());
        }
    }
    worst
}
