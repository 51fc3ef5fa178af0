//! Quadrature over 3-spheres and boxes: reproducing integrals for regular
//! functions, Laurent-coefficient vanishing, and Stokes cross-checks.
//!
//! Sphere rules are hyperspherical product rules: Chebyshev (second kind) in
//! the polar angle (absorbing the sin^2 weight exactly), Gauss-Legendre in
//! the cosine of the second angle, and a uniform periodic rule in the last.
//! For polynomial integrands on the sphere such a rule is exact once the
//! per-axis counts exceed the degree, which is what makes the desk-scale
//! reproducing-kernel checks land at machine precision.
//!
//! Orientation: node frames are ordered so that (outward normal, frame) is
//! positively oriented; with the sign conventions of [`crate::forms`] the
//! 3-form pairing then evaluates to the outward normal on spheres and the
//! reproducing integral of the kernel comes out +2 pi^2.

use alloc::vec;
use alloc::vec::Vec;

use crate::forms::{dq_big, HForm};
use crate::qpoly::QPolynomial;
use crate::quaternion::Quaternion;
use crate::scalar::Scalar;

type Qf = Quaternion<f64>;

/// One node of a sphere rule.
#[derive(Clone, Debug)]
pub struct SphereNode {
    pub point: Qf,
    /// Surface-measure weight; the weights sum to 2 pi^2 r^3.
    pub weight: f64,
    /// Oriented orthonormal tangent frame.
    pub frame: [Qf; 3],
}

/// Product quadrature rule on a round 3-sphere.
#[derive(Clone, Debug)]
pub struct SphereRule {
    pub center: Qf,
    pub radius: f64,
    pub nodes: Vec<SphereNode>,
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
/// recurrence.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        // initial guess: Chebyshev-like
        let mut x = libm::cos(core::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5));
        for _ in 0..64 {
            // evaluate P_n and P_n' via recurrence
            let (mut p0, mut p1) = (1.0f64, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if libm::fabs(dx) < 1e-15 {
                break;
            }
        }
        let (mut p0, mut p1) = (1.0f64, x);
        for k in 2..=n {
            let kf = k as f64;
            let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
            p0 = p1;
            p1 = p2;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((x, w));
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}

/// Per-axis node counts for a level.
fn level_counts(level: usize) -> (usize, usize, usize) {
    let n = (1usize << level) + 2;
    (n, n, 2 * n)
}

/// Build the product rule of the given level on the sphere of `radius`
/// around `center`.
pub fn sphere_rule(center: &Qf, radius: f64, level: usize) -> SphereRule {
    assert!(radius > 0.0, "radius must be positive");
    let (nchi, ntheta, nphi) = level_counts(level);
    let pi = core::f64::consts::PI;
    // Chebyshev second kind: chi_i = i pi/(n+1), v_i = pi/(n+1) sin^2 chi_i
    let chi_rule: Vec<(f64, f64)> = (1..=nchi)
        .map(|i| {
            let chi = pi * i as f64 / (nchi as f64 + 1.0);
            let s = libm::sin(chi);
            (chi, pi / (nchi as f64 + 1.0) * s * s)
        })
        .collect();
    let theta_rule: Vec<(f64, f64)> = gauss_legendre(ntheta)
        .into_iter()
        .map(|(s, w)| (libm::acos(s), w))
        .collect();
    let phi_rule: Vec<(f64, f64)> = (0..nphi)
        .map(|k| (2.0 * pi * k as f64 / nphi as f64, 2.0 * pi / nphi as f64))
        .collect();

    let r3 = radius * radius * radius;
    let mut nodes = Vec::with_capacity(nchi * ntheta * nphi);
    for &(chi, wc) in &chi_rule {
        let (sc, cc) = (libm::sin(chi), libm::cos(chi));
        for &(theta, wt) in &theta_rule {
            let (st, ct) = (libm::sin(theta), libm::cos(theta));
            for &(phi, wp) in &phi_rule {
                let (sp, cp) = (libm::sin(phi), libm::cos(phi));
                let normal = Quaternion::new(cc, sc * ct, sc * st * cp, sc * st * sp);
                let point = center.clone() + normal.scale(&radius);
                let frame = [
                    Quaternion::new(-sc, cc * ct, cc * st * cp, cc * st * sp),
                    Quaternion::new(0.0, -st, ct * cp, ct * sp),
                    Quaternion::new(0.0, 0.0, -sp, cp),
                ];
                nodes.push(SphereNode {
                    point,
                    weight: wc * wt * wp * r3,
                    frame,
                });
            }
        }
    }
    SphereRule {
        center: center.clone(),
        radius,
        nodes,
    }
}

/// Deterministic pairwise sum of quaternion terms.
fn pairwise_sum(terms: &mut Vec<Qf>) -> Qf {
    if terms.is_empty() {
        return Quaternion::zero();
    }
    while terms.len() > 1 {
        let mut next = Vec::with_capacity(terms.len().div_ceil(2));
        for chunk in terms.chunks(2) {
            if chunk.len() == 2 {
                next.push(chunk[0].clone() + chunk[1].clone());
            } else {
                next.push(chunk[0].clone());
            }
        }
        *terms = next;
    }
    terms[0].clone()
}

/// Integrate a pointwise 3-form evaluation over the sphere: the integrand
/// receives the node point and oriented orthonormal frame.
pub fn integrate_3form<F>(rule: &SphereRule, integrand: F) -> Qf
where
    F: Fn(&Qf, &[Qf; 3]) -> Qf,
{
    let mut terms: Vec<Qf> = rule
        .nodes
        .iter()
        .map(|node| integrand(&node.point, &node.frame).scale(&node.weight))
        .collect();
    pairwise_sum(&mut terms)
}

/// Integrate an explicit 3-form field over the sphere.
pub fn integrate_form(rule: &SphereRule, form: &HForm<f64>) -> Qf {
    integrate_3form(rule, |q, frame| form.eval_on(q, frame))
}

/// The reproducing kernel G(q) = q^{-1}/Nq.
pub fn cf_kernel(q: &Qf) -> Qf {
    let n = q.norm();
    q.conj().scale(&(1.0 / (n * n)))
}

/// (1/2 pi^2) Int_{S_r(q0)} G(q - q0) Dq f(q); reproduces f(q0) for
/// functions regular on the closed ball.
pub fn cauchy_fueter_value(
    f: &QPolynomial<f64>,
    q0: &Qf,
    radius: f64,
    level: usize,
) -> Qf {
    let rule = sphere_rule(q0, radius, level);
    let dq3 = dq_big::<f64>();
    let total = integrate_3form(&rule, |q, frame| {
        let diff = q.clone() - q0.clone();
        let kernel = cf_kernel(&diff);
        let normal_weight = dq3.eval_on(q, frame);
        &(&kernel * &normal_weight) * &f.eval(q)
    });
    total.scale(&(0.5 / (core::f64::consts::PI * core::f64::consts::PI)))
}

/// The degree-1 two-sided-regular coordinates zeta_i = x_i - e_i t.
pub fn zeta<S: Scalar>(i: usize) -> QPolynomial<S> {
    assert!((1..4).contains(&i));
    let mut p = QPolynomial::variable(i);
    let mut t = [0u16; 4];
    t[0] = 1;
    p.insert(t, -Quaternion::basis(i));
    p
}

/// Symmetrized product of zeta's with multiplicities nu: the degree-|nu|
/// two-sided-regular polynomial used in the negative-part integrals.
pub fn fueter_polynomial<S: Scalar>(nu: [usize; 3]) -> QPolynomial<S> {
    let n = nu[0] + nu[1] + nu[2];
    if n == 0 {
        return QPolynomial::one();
    }
    // enumerate all words with the given letter counts
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &words {
            for letter in 0..3 {
                let used = w.iter().filter(|&&l| l == letter).count();
                if used < nu[letter] {
                    let mut w2 = w.clone();
                    w2.push(letter);
                    next.push(w2);
                }
            }
        }
        words = next;
    }
    let mut acc = QPolynomial::zero();
    for w in &words {
        let mut prod = QPolynomial::one();
        for &letter in w {
            prod = prod.mul(&zeta(letter + 1));
        }
        acc = acc.add(&prod);
    }
    // normalize by the number of words
    acc.scale(&S::from_ratio(1, words.len() as i64))
}

/// b_nu-style integral: (1/2 pi^2) Int P_nu(q - q0) Dq f(q) over the sphere;
/// vanishes when f is regular on the full ball.
pub fn laurent_b_integral(
    f: &QPolynomial<f64>,
    nu: [usize; 3],
    q0: &Qf,
    radius: f64,
    level: usize,
) -> Qf {
    let p = fueter_polynomial::<f64>(nu);
    let rule = sphere_rule(q0, radius, level);
    let dq3 = dq_big::<f64>();
    let total = integrate_3form(&rule, |q, frame| {
        let diff = q.clone() - q0.clone();
        let pv = p.eval(&diff);
        let normal_weight = dq3.eval_on(q, frame);
        &(&pv * &normal_weight) * &f.eval(q)
    });
    total.scale(&(0.5 / (core::f64::consts::PI * core::f64::consts::PI)))
}

/// Axis-aligned box with per-axis Gauss-Legendre counts.
#[derive(Clone, Debug)]
pub struct BoxRule {
    pub corner: [f64; 4],
    pub extents: [f64; 4],
    pub nodes_per_axis: usize,
}

impl BoxRule {
    pub fn new(corner: [f64; 4], extents: [f64; 4], nodes_per_axis: usize) -> Self {
        assert!(extents.iter().all(|e| *e > 0.0), "extents must be positive");
        BoxRule {
            corner,
            extents,
            nodes_per_axis,
        }
    }

    fn axis_rule(&self, i: usize) -> Vec<(f64, f64)> {
        gauss_legendre(self.nodes_per_axis)
            .into_iter()
            .map(|(x, w)| {
                let half = self.extents[i] / 2.0;
                (self.corner[i] + half * (x + 1.0), w * half)
            })
            .collect()
    }
}

/// Integral of a 4-form over the box.
pub fn integrate_box_4form(form: &HForm<f64>, rule: &BoxRule) -> Qf {
    assert_eq!(form.degree, 4);
    let axes: Vec<Vec<(f64, f64)>> = (0..4).map(|i| rule.axis_rule(i)).collect();
    let frame = [
        Quaternion::basis(0),
        Quaternion::basis(1),
        Quaternion::basis(2),
        Quaternion::basis(3),
    ];
    let mut terms = Vec::new();
    for &(t, wt) in &axes[0] {
        for &(x, wx) in &axes[1] {
            for &(y, wy) in &axes[2] {
                for &(z, wz) in &axes[3] {
                    let q = Quaternion::new(t, x, y, z);
                    terms.push(form.eval_on(&q, &frame).scale(&(wt * wx * wy * wz)));
                }
            }
        }
    }
    pairwise_sum(&mut terms)
}

/// Integral of a 3-form over the oriented boundary of the box.
pub fn integrate_box_boundary_3form(form: &HForm<f64>, rule: &BoxRule) -> Qf {
    assert_eq!(form.degree, 3);
    let axes: Vec<Vec<(f64, f64)>> = (0..4).map(|i| rule.axis_rule(i)).collect();
    let mut terms = Vec::new();
    for fixed in 0..4 {
        let others: Vec<usize> = (0..4).filter(|j| *j != fixed).collect();
        let frame = [
            Quaternion::basis(others[0]),
            Quaternion::basis(others[1]),
            Quaternion::basis(others[2]),
        ];
        // face orientation: (-1)^fixed (upper - lower)
        let face_sign = if fixed % 2 == 0 { 1.0 } else { -1.0 };
        for upper in [true, false] {
            let coord = if upper {
                rule.corner[fixed] + rule.extents[fixed]
            } else {
                rule.corner[fixed]
            };
            let sign = face_sign * if upper { 1.0 } else { -1.0 };
            for &(a, wa) in &axes[others[0]] {
                for &(b, wb) in &axes[others[1]] {
                    for &(c, wc) in &axes[others[2]] {
                        let mut coords = [0.0f64; 4];
                        coords[fixed] = coord;
                        coords[others[0]] = a;
                        coords[others[1]] = b;
                        coords[others[2]] = c;
                        let q = Quaternion::new(coords[0], coords[1], coords[2], coords[3]);
                        terms.push(
                            form.eval_on(&q, &frame)
                                .scale(&(sign * wa * wb * wc)),
                        );
                    }
                }
            }
        }
    }
    pairwise_sum(&mut terms)
}

/// Boundary integral minus bulk integral of the derivative; vanishes for
/// smooth data (Stokes), and is the global cross-check tying the boundary
/// orientation to the exterior-derivative sign conventions.
pub fn stokes_residual(form: &HForm<f64>, rule: &BoxRule) -> Qf {
    let boundary = integrate_box_boundary_3form(form, rule);
    let bulk = integrate_box_4form(&form.exterior_d(), rule);
    boundary - bulk
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fueter::q_kl;
    use crate::qpoly::{fueter_apply, FueterOp};
    use crate::rng::{to_f64_quat, Pcg};
    use crate::scalar::Rat;

    fn poly_to_f64(p: &QPolynomial<Rat>) -> QPolynomial<f64> {
        let mut out = QPolynomial::zero();
        for (e, c) in p.iter_terms() {
            out.insert(*e, to_f64_quat(c));
        }
        out
    }

    #[test]
    fn gauss_legendre_exactness() {
        let rule = gauss_legendre(6);
        // integrates x^k on [-1,1] exactly for k <= 11
        for k in 0..=11usize {
            let got: f64 = rule.iter().map(|(x, w)| w * libm::pow(*x, k as f64)).sum();
            let want = if k % 2 == 1 { 0.0 } else { 2.0 / (k as f64 + 1.0) };
            assert!((got - want).abs() < 1e-13, "k = {}", k);
        }
    }

    #[test]
    fn sphere_weights_sum_to_volume() {
        for (level, radius) in [(2usize, 1.0f64), (4, 0.5), (5, 2.0)] {
            let rule = sphere_rule(&Quaternion::zero(), radius, level);
            let total: f64 = rule.nodes.iter().map(|n| n.weight).sum();
            let want = 2.0 * core::f64::consts::PI * core::f64::consts::PI * radius * radius * radius;
            assert!(
                (total - want).abs() / want < 1e-12,
                "level {} radius {}",
                level,
                radius
            );
        }
    }

    #[test]
    fn sphere_nodes_antipodal_symmetry() {
        let rule = sphere_rule(&Quaternion::zero(), 1.0, 2);
        for node in &rule.nodes {
            let anti = -node.point.clone();
            let found = rule
                .nodes
                .iter()
                .any(|m| m.point.max_abs_diff(&anti) < 1e-12);
            assert!(found);
        }
    }

    #[test]
    fn frames_are_oriented_orthonormal() {
        let rule = sphere_rule(&Quaternion::zero(), 1.0, 1);
        for node in rule.nodes.iter().take(40) {
            let n = node.point.clone();
            let fr = &node.frame;
            for i in 0..3 {
                assert!((fr[i].norm() - 1.0).abs() < 1e-12);
                let dot: f64 = (0..4).map(|c| fr[i].coord(c) * n.coord(c)).sum();
                assert!(dot.abs() < 1e-12);
            }
            // evaluation of the distinguished 3-form on the frame is the
            // outward normal
            let val = dq_big::<f64>().eval_on(&n, fr);
            assert!(val.max_abs_diff(&n) < 1e-10);
        }
    }

    #[test]
    fn closed_form_integrals_vanish() {
        // Int Dq = 0 and Int Dq f = 0 for regular f over spheres
        let rule = sphere_rule(&Quaternion::zero(), 0.8, 4);
        let dq3 = dq_big::<f64>();
        let z = integrate_form(&rule, &dq3);
        assert!(z.max_abs() < 1e-8);
        let f = poly_to_f64(&q_kl::<Rat>(3, 1, 2));
        let z = integrate_3form(&rule, |q, fr| {
            let nw = dq3.eval_on(q, fr);
            &nw * &f.eval(q)
        });
        assert!(z.max_abs() < 1e-7);
    }

    #[test]
    fn kernel_normalization() {
        // (1/2 pi^2) Int G(q - q0) Dq = 1 over the sphere around q0
        let one = QPolynomial::one();
        for (q0, r) in [
            (Quaternion::zero(), 0.5f64),
            (Quaternion::new(0.2, -0.1, 0.3, 0.0), 0.25),
        ] {
            let v = cauchy_fueter_value(&one, &q0, r, 4);
            assert!(v.max_abs_diff(&Quaternion::one()) < 1e-10, "{:?}", v);
        }
    }

    #[test]
    fn reproduces_regular_polynomials() {
        let mut rng = Pcg::new(601);
        for degree in [2usize, 3] {
            // random right-H combination of the regular basis
            let mut f = QPolynomial::<Rat>::zero();
            for k in 0..=(degree as i64) {
                for l in 0..=(degree as i64) {
                    f = f.add(&q_kl::<Rat>(degree, k, l).scale_right(&rng.quaternion(2, 2)));
                }
            }
            let ff = poly_to_f64(&f);
            for _ in 0..3 {
                let q0 = to_f64_quat(&rng.ball_point()).scale(&0.3);
                let got = cauchy_fueter_value(&ff, &q0, 0.5, 5);
                let want = ff.eval(&q0);
                let scale = want.max_abs().max(1.0);
                assert!(
                    got.max_abs_diff(&want) / scale < 1e-5,
                    "degree {} err {}",
                    degree,
                    got.max_abs_diff(&want)
                );
            }
        }
    }

    #[test]
    fn quadrature_convergence_doubles() {
        // off-center kernel: smooth but not polynomial; doubling the level
        // must cut the error by at least 4x
        let f = poly_to_f64(&q_kl::<Rat>(3, 1, 1));
        let q0 = Quaternion::new(0.1, 0.05, -0.08, 0.02);
        let sphere_center = Quaternion::new(-0.15, 0.1, 0.1, -0.05);
        // q0 inside the sphere around sphere_center of radius 0.7?
        let want = f.eval(&q0);
        let err_at = |level: usize| -> f64 {
            let rule = sphere_rule(&sphere_center, 0.7, level);
            let dq3 = dq_big::<f64>();
            let total = integrate_3form(&rule, |q, frame| {
                let diff = q.clone() - q0.clone();
                let kernel = cf_kernel(&diff);
                let nw = dq3.eval_on(q, frame);
                &(&kernel * &nw) * &f.eval(q)
            })
            .scale(&(0.5 / (core::f64::consts::PI * core::f64::consts::PI)));
            total.max_abs_diff(&want)
        };
        let e1 = err_at(1);
        let e2 = err_at(2);
        let e4 = err_at(4);
        assert!(e1 / e2 >= 4.0 || e2 < 1e-12, "e1 = {}, e2 = {}", e1, e2);
        assert!(e2 / e4 >= 4.0 || e4 < 1e-12, "e2 = {}, e4 = {}", e2, e4);
    }

    #[test]
    fn fueter_polynomials_two_sided_regular() {
        for nu in [[1usize, 0, 0], [0, 1, 1], [2, 0, 0], [1, 1, 0], [0, 0, 2]] {
            let p = fueter_polynomial::<Rat>(nu);
            assert!(fueter_apply(&p, FueterOp::DBarLeft).is_zero(), "{:?}", nu);
            assert!(fueter_apply(&p, FueterOp::DBarRight).is_zero(), "{:?}", nu);
            let n = nu.iter().sum::<usize>();
            assert!(p.is_homogeneous(n));
        }
    }

    #[test]
    fn fueter_polynomials_inside_q_span() {
        // each degree-2 symmetrized product lies in the right-H span of the
        // regular basis of its degree (exact rank check)
        use crate::linalg::CMat;
        let mut family: Vec<QPolynomial<Rat>> = Vec::new();
        for k in 0..=2i64 {
            for l in k..=2i64 {
                let q = q_kl::<Rat>(2, k, l);
                if !q.is_zero() {
                    family.push(q);
                }
            }
        }
        for nu in [[2usize, 0, 0], [1, 1, 0], [0, 1, 1]] {
            let p = fueter_polynomial::<Rat>(nu);
            // rank of family (x) H must not grow when p is added
            let mut monos: Vec<crate::qpoly::Exps> = Vec::new();
            for f in family.iter().chain(core::iter::once(&p)) {
                for (e, _) in f.iter_terms() {
                    if !monos.contains(e) {
                        monos.push(*e);
                    }
                }
            }
            let flat = |fs: &[QPolynomial<Rat>]| -> CMat<Rat> {
                let rows = fs.len() * 4;
                let mut data = Vec::new();
                for f in fs {
                    for m in 0..4 {
                        let fm = f.scale_right(&Quaternion::basis(m));
                        for e in &monos {
                            let c = fm
                                .terms
                                .get(e)
                                .cloned()
                                .unwrap_or_else(Quaternion::zero);
                            data.extend(c.coords());
                        }
                    }
                }
                CMat::from_rows(rows, monos.len() * 4, data)
            };
            let base_rank = flat(&family).rank();
            let mut extended = family.clone();
            extended.push(p);
            assert_eq!(flat(&extended).rank(), base_rank, "{:?}", nu);
        }
    }

    #[test]
    fn laurent_negative_part_vanishes_for_regular() {
        let one = QPolynomial::<f64>::one();
        let q0 = Quaternion::new(0.1, 0.0, -0.1, 0.05);
        for nu in [[0usize, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0], [2, 0, 0]] {
            let b = laurent_b_integral(&one, nu, &q0, 0.4, 4);
            assert!(b.max_abs() < 1e-7, "nu = {:?}: {:?}", nu, b);
        }
        let f = poly_to_f64(&q_kl::<Rat>(2, 1, 1));
        for nu in [[0usize, 0, 0], [1, 0, 0], [0, 0, 1]] {
            let b = laurent_b_integral(&f, nu, &q0, 0.4, 4);
            assert!(b.max_abs() < 1e-7, "nu = {:?}", nu);
        }
        // non-regular input is detected
        let qbar = QPolynomial::<f64>::identity().conj_values();
        let b = laurent_b_integral(&qbar, [0, 0, 0], &q0, 0.4, 4);
        assert!(b.max_abs() > 1e-3);
    }

    #[test]
    fn stokes_identity_on_boxes() {
        let mut rng = Pcg::new(602);
        let rule = BoxRule::new([-0.3, -0.2, -0.25, -0.3], [0.5, 0.45, 0.5, 0.6], 16);
        // constant-coefficient 3-forms integrate to zero residual
        let dq3 = dq_big::<f64>();
        let r = stokes_residual(&dq3, &rule);
        assert!(r.max_abs() < 1e-12);
        // random polynomial 3-forms
        for _ in 0..5 {
            let mut form = HForm::<f64>::zero(3);
            for m in [0b0111u8, 0b1011, 0b1101, 0b1110] {
                let mut p = QPolynomial::zero();
                for _ in 0..3 {
                    let mut e = [0u16; 4];
                    let mut left = 3u16;
                    for item in e.iter_mut() {
                        let v = rng.below((left + 1) as u64) as u16;
                        *item = v;
                        left -= v;
                    }
                    p.insert(e, to_f64_quat(&rng.quaternion(2, 2)));
                }
                form.insert(m, p);
            }
            let r = stokes_residual(&form, &rule);
            assert!(r.max_abs() < 1e-8, "residual {:?}", r);
        }
        // omega_{f,g} for regular pairs: both terms vanish separately
        let (_, h) = crate::fueter::minimal_ktype::<Rat>(2, 1);
        let f0 = poly_to_f64(&h[0]);
        let g0 = poly_to_f64(&h[1]);
        let omega = dq_big::<f64>()
            .scale_left(&g0.star())
            .scale_right(&f0);
        let boundary = integrate_box_boundary_3form(&omega, &rule);
        let bulk = integrate_box_4form(&omega.exterior_d(), &rule);
        assert!(omega.exterior_d().is_zero());
        assert!(bulk.max_abs() < 1e-14);
        assert!(boundary.max_abs() < 1e-8);
    }

    #[test]
    fn integral_right_linearity() {
        // integration of Dq f is right-H-linear in the function factor
        let mut rng = Pcg::new(603);
        let rule = sphere_rule(&Quaternion::zero(), 0.6, 3);
        let dq3 = dq_big::<f64>();
        let f = poly_to_f64(&q_kl::<Rat>(2, 0, 1));
        let c = to_f64_quat(&rng.quaternion(2, 2));
        let lhs = integrate_3form(&rule, |q, fr| {
            let nw = dq3.eval_on(q, fr);
            &nw * &(&f.eval(q) * &c)
        });
        let base = integrate_3form(&rule, |q, fr| {
            let nw = dq3.eval_on(q, fr);
            &nw * &f.eval(q)
        });
        assert!(lhs.max_abs_diff(&(&base * &c)) < 1e-12);
    }
}
