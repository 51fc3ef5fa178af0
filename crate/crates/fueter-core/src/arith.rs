//! Rational structure: the Hurwitz order, integral group elements,
//! principal congruence subgroups, and the automorphy-condition checker.
//!
//! The quaternion algebra is the definite one ramified at {2, infinity}
//! (the Hamilton quaternions over Q) with the Hurwitz maximal order
//! Z<1, i^, j^, (1 + i^ + j^ + k^)/2>; this is the canonical smallest
//! choice and the only one wired in.
//!
//! Provides:
//! - [`hurwitz_coords`] / [`order_contains`]: exact order membership
//! - [`gz_residual`] / [`is_gz`]: membership in the integral group via the
//!   exact unitary condition g* diag(1,-1) g = diag(1,-1) over the order
//! - [`gamma_n_contains`]: principal congruence subgroups via entries of
//!   g - 1 lying in N O, plus the independent coordinate-reduction route
//! - [`search_gz`]: bounded-height elements from words in the integral
//!   generators
//! - [`automorphy_residual`]: the weight-n transformation defect of a
//!   polynomial coordinate tuple, on either the cq+d or the a+b qbar side
//! - [`symmetrize_diag_units`]: averaging over the diagonal unit subgroup,
//!   producing exact equivariant test data

use alloc::vec::Vec;

use crate::binform::rn_of_quaternion;
use crate::forms::PolyMap;
use crate::group::{mobius_act, GroupError, QMatrix2};
use crate::linalg::CMat;
use crate::qpoly::QPolynomial;
use crate::quaternion::Quaternion;
use crate::scalar::{GRat, Rat, Scalar};

type Q = Quaternion<Rat>;

/// Coordinates of a rational quaternion in the Hurwitz basis
/// (1, i^, j^, omega) with omega = (1 + i^ + j^ + k^)/2.
pub fn hurwitz_coords(q: &Q) -> [Rat; 4] {
    let two = Rat::from_i64(2);
    [
        q.t.clone() - q.z.clone(),
        q.x.clone() - q.z.clone(),
        q.y.clone() - q.z.clone(),
        q.z.clone() * two,
    ]
}

fn is_integer(r: &Rat) -> bool {
    use num_traits::One;
    r.denom().is_one()
}

/// Membership in the Hurwitz order.
pub fn order_contains(q: &Q) -> bool {
    hurwitz_coords(q).iter().all(is_integer)
}

/// Entrywise order membership plus the exact unitary condition
/// g* diag(1,-1) g = diag(1,-1); returns the max-norm defect (0 iff member).
pub fn gz_residual(g: &QMatrix2<Rat>) -> f64 {
    let mut worst: f64 = 0.0;
    for entry in [&g.a, &g.b, &g.c, &g.d] {
        if !order_contains(entry) {
            // distance to integrality, crude but nonzero
            worst = worst.max(
                hurwitz_coords(entry)
                    .iter()
                    .map(|r| {
                        let fr = r - r.round();
                        fr.abs_f64()
                    })
                    .fold(0.0, f64::max),
            );
        }
    }
    let eta = QMatrix2::diag(Q::one(), -Q::one());
    let defect = g.star().mul(&eta).mul(g).sub(&eta);
    worst.max(defect.max_abs())
}

/// Exact integral-group membership.
pub fn is_gz(g: &QMatrix2<Rat>) -> bool {
    gz_residual(g) == 0.0
}

/// g in Gamma(N): g in G(Z) and every entry of g - 1 lies in N O.
pub fn gamma_n_contains(g: &QMatrix2<Rat>, n: u32) -> bool {
    debug_assert!(is_gz(g));
    let ninv = Rat::from_ratio(1, n as i64);
    let id = QMatrix2::<Rat>::identity();
    let diff = g.sub(&id);
    [&diff.a, &diff.b, &diff.c, &diff.d]
        .iter()
        .all(|e| order_contains(&e.scale(&ninv)))
}

/// Independent route for Gamma(N): reduce the Hurwitz coordinates of g - 1
/// modulo N and test for zero.
pub fn gamma_n_contains_by_reduction(g: &QMatrix2<Rat>, n: u32) -> bool {
    debug_assert!(is_gz(g));
    let id = QMatrix2::<Rat>::identity();
    let diff = g.sub(&id);
    let nn = Rat::from_i64(n as i64);
    [&diff.a, &diff.b, &diff.c, &diff.d].iter().all(|e| {
        hurwitz_coords(e).iter().all(|c| {
            // entries of g - 1 are in O already; c mod n == 0
            is_integer(c) && Scalar::is_zero(&(c.clone() - (c / &nn).round() * nn.clone()))
        })
    })
}

/// Height of an integral element: the largest coordinate magnitude over the
/// sixteen rational coordinates.
pub fn height(g: &QMatrix2<Rat>) -> f64 {
    g.max_abs()
}

/// Breadth-first words in the integral generators, keeping elements of
/// height at most `bound`; duplicates removed exactly.
pub fn search_gz(bound: f64, max_word: usize) -> Vec<QMatrix2<Rat>> {
    let mut gens = crate::group::integral_generators::<Rat>();
    // diagonal Hurwitz units of order 6 widen the search beyond the
    // Lipschitz units
    let omega = Q::new(
        Rat::from_ratio(1, 2),
        Rat::from_ratio(1, 2),
        Rat::from_ratio(1, 2),
        Rat::from_ratio(1, 2),
    );
    gens.push(QMatrix2::diag(omega.clone(), Q::one()));
    gens.push(QMatrix2::diag(Q::one(), omega));
    let inverses: Vec<QMatrix2<Rat>> = gens.iter().map(|g| g.sp11_inverse()).collect();
    gens.extend(inverses);

    let key = |g: &QMatrix2<Rat>| -> Vec<Rat> {
        let mut v = Vec::with_capacity(16);
        for e in [&g.a, &g.b, &g.c, &g.d] {
            v.extend(e.coords());
        }
        v
    };
    let mut seen: Vec<Vec<Rat>> = Vec::new();
    let mut out: Vec<QMatrix2<Rat>> = Vec::new();
    let mut frontier = alloc::vec![QMatrix2::<Rat>::identity()];
    let mut push = |g: &QMatrix2<Rat>, out: &mut Vec<QMatrix2<Rat>>, seen: &mut Vec<Vec<Rat>>| {
        if height(g) > bound {
            return false;
        }
        let k = key(g);
        if seen.contains(&k) {
            return false;
        }
        seen.push(k);
        out.push(g.clone());
        true
    };
    push(&QMatrix2::identity(), &mut out, &mut seen);
    for _ in 0..max_word {
        let mut next = Vec::new();
        for g in &frontier {
            for gen in &gens {
                let h = g.mul(gen);
                if height(&h) <= bound && push(&h, &mut out, &mut seen) {
                    next.push(h);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    out
}

/// Side of the automorphy condition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AutomorphySide {
    /// factor built from cq + d
    CqPlusD,
    /// dagger-side factor built from a + b qbar
    APlusBQbar,
}

fn embed_grat(c: &GRat) -> Q {
    Quaternion::new(c.re.clone(), c.im.clone(), Rat::from_i64(0), Rat::from_i64(0))
}

/// Row-vector times complex matrix, complex scalars acting from the right.
pub fn row_times_matrix(h: &[Q], m: &CMat<GRat>) -> Vec<Q> {
    assert_eq!(h.len(), m.rows);
    (0..m.cols)
        .map(|j| {
            let mut acc = Q::zero();
            for (i, hi) in h.iter().enumerate() {
                acc = acc + hi * &embed_grat(m.at(i, j));
            }
            acc
        })
        .collect()
}

/// Max-norm of h(gamma.q) - |j|^2 j h(q) tR_{n-1}(j) at the point q, with
/// j = cq + d or a + b qbar according to the side.  h is given by its
/// polynomial coordinate tuple (weight n = h.len()).
///
/// The transpose on the right factor is what makes the factor of automorphy
/// a cocycle: row tuples compose matrices anti-homomorphically, and
/// [`rn_of_quaternion`] is a homomorphism in the row convention.
pub fn automorphy_residual(
    h: &[QPolynomial<Rat>],
    g: &QMatrix2<Rat>,
    q: &Q,
    side: AutomorphySide,
) -> Result<f64, GroupError> {
    let n = h.len();
    assert!(n >= 1);
    let gq = mobius_act(g, q)?;
    let j = match side {
        AutomorphySide::CqPlusD => &(&g.c * q) + &g.d,
        AutomorphySide::APlusBQbar => &(&g.b * &q.conj()) + &g.a,
    };
    let lhs: Vec<Q> = h.iter().map(|p| p.eval(&gq)).collect();
    let r = rn_of_quaternion(&j.complexify::<GRat>(), n - 1).transpose();
    let scaled: Vec<Q> = h
        .iter()
        .map(|p| {
            let v = p.eval(q);
            (&j * &v).scale(&j.norm())
        })
        .collect();
    let rhs = row_times_matrix(&scaled, &r);
    let mut worst: f64 = 0.0;
    for (a, b) in lhs.iter().zip(rhs.iter()) {
        worst = worst.max(a.max_abs_diff(b));
    }
    Ok(worst)
}

/// The weight action of a diagonal group element diag(u, v) (units) on a
/// polynomial coordinate tuple: h -> v . (h o (ubar q v)) . R_{n-1}(v).
pub fn weight_act_diag(u: &Q, v: &Q, h: &[QPolynomial<Rat>]) -> Vec<QPolynomial<Rat>> {
    let n = h.len();
    let subst = PolyMap::two_sided_mul(&u.conj(), v);
    let moved: Vec<QPolynomial<Rat>> = h
        .iter()
        .map(|p| p.compose(&subst.comps).scale_left(v))
        .collect();
    let r = rn_of_quaternion(&v.complexify::<GRat>(), n - 1).transpose();
    (0..n)
        .map(|jcol| {
            let mut acc = QPolynomial::zero();
            for (i, p) in moved.iter().enumerate() {
                acc = acc.add(&p.scale_right(&embed_grat(r.at(i, jcol))));
            }
            acc
        })
        .collect()
}

/// The eight Lipschitz units +-1, +-i^, +-j^, +-k^.
pub fn lipschitz_units() -> Vec<Q> {
    let mut out = Vec::with_capacity(8);
    for i in 0..4 {
        out.push(Quaternion::basis(i));
        out.push(-Quaternion::basis(i));
    }
    out
}

/// Average the tuple over the diagonal subgroup {diag(u, u)} of unit pairs;
/// the result transforms by the automorphy law for every element of that
/// subgroup.
///
/// The subgroup contains diag(-1, -1), which acts by (-1)^n on weight-n
/// tuples, so the average vanishes identically for odd weights; use even
/// weights for nontrivial equivariant data.
pub fn symmetrize_diag_units(h: &[QPolynomial<Rat>]) -> Vec<QPolynomial<Rat>> {
    let units = lipschitz_units();
    let n = h.len();
    let mut acc = alloc::vec![QPolynomial::<Rat>::zero(); n];
    for u in &units {
        let moved = weight_act_diag(u, u, h);
        for (slot, p) in acc.iter_mut().zip(moved.iter()) {
            *slot = slot.add(p);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::random_gz;
    use crate::rng::Pcg;

    fn qr(t: i64, x: i64, y: i64, z: i64, den: i64) -> Q {
        Quaternion::new(
            Rat::from_ratio(t, den),
            Rat::from_ratio(x, den),
            Rat::from_ratio(y, den),
            Rat::from_ratio(z, den),
        )
    }

    #[test]
    fn hurwitz_membership_examples() {
        assert!(order_contains(&Q::one()));
        assert!(order_contains(&qr(1, 1, 1, 1, 2)));
        assert!(!order_contains(&qr(1, 0, 0, 0, 2)));
        assert!(!order_contains(&qr(0, 1, 0, 0, 2)));
        assert!(order_contains(&qr(3, -2, 5, 1, 1)));
        // half-integers must have all-odd numerators
        assert!(order_contains(&qr(3, 1, -1, 5, 2)));
        assert!(!order_contains(&qr(3, 1, -1, 4, 2)));
    }

    #[test]
    fn order_closed_under_multiplication() {
        let mut rng = Pcg::new(701);
        let sample = |rng: &mut Pcg| -> Q {
            if rng.below(2) == 0 {
                qr(
                    rng.int_in(-3, 3),
                    rng.int_in(-3, 3),
                    rng.int_in(-3, 3),
                    rng.int_in(-3, 3),
                    1,
                )
            } else {
                // all-odd half-integer
                qr(
                    2 * rng.int_in(-2, 2) + 1,
                    2 * rng.int_in(-2, 2) + 1,
                    2 * rng.int_in(-2, 2) + 1,
                    2 * rng.int_in(-2, 2) + 1,
                    2,
                )
            }
        };
        for _ in 0..100 {
            let a = sample(&mut rng);
            let b = sample(&mut rng);
            assert!(order_contains(&(&a * &b)));
            assert!(is_integer(&a.norm()));
            assert!(is_integer(&a.trace()));
        }
    }

    #[test]
    fn gz_membership_examples() {
        assert!(is_gz(&QMatrix2::identity()));
        let bad = QMatrix2::new(Q::one(), Q::zero(), Q::zero(), Q::from_i64(2));
        assert!(gz_residual(&bad) > 0.0);
        // diagonal unit pairs
        let omega = qr(1, 1, 1, 1, 2);
        assert!(is_gz(&QMatrix2::diag(omega.clone(), Q::i())));
        // sigma-type generators
        let mut rng = Pcg::new(702);
        for _ in 0..20 {
            let g = random_gz::<Rat>(&mut rng, 4);
            assert!(is_gz(&g));
        }
    }

    #[test]
    fn gamma_levels() {
        let mut rng = Pcg::new(703);
        for _ in 0..30 {
            let g = random_gz::<Rat>(&mut rng, 3);
            // Gamma(1) = G(Z)
            assert!(gamma_n_contains(&g, 1));
        }
        // identity in every level
        for n in 1..=6u32 {
            assert!(gamma_n_contains(&QMatrix2::identity(), n));
        }
        // an element offset by i^ is not in Gamma(2)
        let g = QMatrix2::diag(Q::i(), Q::i());
        assert!(is_gz(&g));
        assert!(!gamma_n_contains(&g, 2));
    }

    #[test]
    fn gamma_subgroup_structure() {
        // closure under product and inverse on sampled Gamma(2) elements,
        // and Gamma(N) nesting for divisors
        let pool = search_gz(4.0, 4);
        let in_g2: Vec<&QMatrix2<Rat>> = pool
            .iter()
            .filter(|g| gamma_n_contains(g, 2))
            .collect();
        assert!(in_g2.len() > 1, "need nontrivial Gamma(2) samples");
        for a in in_g2.iter().take(6) {
            assert!(gamma_n_contains(&a.sp11_inverse(), 2));
            for b in in_g2.iter().take(6) {
                let prod = a.mul(b);
                assert!(gamma_n_contains(&prod, 2));
            }
        }
        for g in pool.iter().take(60) {
            if gamma_n_contains(g, 4) {
                assert!(gamma_n_contains(g, 2));
            }
            if gamma_n_contains(g, 6) {
                assert!(gamma_n_contains(g, 2));
                assert!(gamma_n_contains(g, 3));
            }
        }
    }

    #[test]
    fn gamma2_agrees_with_reduction_on_search() {
        let pool = search_gz(4.0, 4);
        assert!(pool.len() > 50, "search too small: {}", pool.len());
        for g in &pool {
            assert!(is_gz(g));
            let a = gamma_n_contains(g, 2);
            let b = gamma_n_contains_by_reduction(g, 2);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn automorphy_residual_identity_and_cocycle() {
        let (_, h) = crate::fueter::minimal_ktype::<Rat>(3, 1);
        let mut rng = Pcg::new(704);
        let q = rng.ball_point();
        let r = automorphy_residual(&h, &QMatrix2::identity(), &q, AutomorphySide::CqPlusD)
            .unwrap();
        assert_eq!(r, 0.0);
        // multiplicativity of the factor of automorphy, exactly: with
        // j(gamma, q) = cq + d, N and R_{n-1} chain through products
        for _ in 0..50 {
            let g1 = random_gz::<Rat>(&mut rng, 3);
            let g2 = random_gz::<Rat>(&mut rng, 3);
            let q = rng.ball_point();
            let g2q = mobius_act(&g2, &q).unwrap();
            let g12 = g1.mul(&g2);
            let j12 = &(&g12.c * &q) + &g12.d;
            let j1 = &(&g1.c * &g2q) + &g1.d;
            let j2 = &(&g2.c * &q) + &g2.d;
            assert_eq!(j12, &j1 * &j2);
            assert_eq!(j12.norm(), j1.norm() * j2.norm());
            let n = 3usize;
            let r12 = rn_of_quaternion(&j12.complexify::<GRat>(), n - 1);
            let r1 = rn_of_quaternion(&j1.complexify::<GRat>(), n - 1);
            let r2 = rn_of_quaternion(&j2.complexify::<GRat>(), n - 1);
            assert_eq!(r12, r1.mul(&r2));
        }
    }

    #[test]
    fn symmetrized_data_satisfies_the_law() {
        // average generic even-weight data over the diagonal units, then
        // check the automorphy law exactly for every element of that
        // subgroup.  (The h_k^2 family itself spans an irreducible with no
        // diagonal-unit invariants, so generic tuples are the right input.)
        let mut rng = Pcg::new(705);
        let h: Vec<QPolynomial<Rat>> = (0..2)
            .map(|_| {
                let mut p = QPolynomial::zero();
                for _ in 0..6 {
                    let mut e = [0u16; 4];
                    let mut left = 3u16;
                    for item in e.iter_mut() {
                        let v = rng.below((left + 1) as u64) as u16;
                        *item = v;
                        left -= v;
                    }
                    p.insert(e, rng.quaternion(2, 2));
                }
                p
            })
            .collect();
        let tilde = symmetrize_diag_units(&h);
        assert!(tilde.iter().any(|p| !p.is_zero()), "averaging collapsed");
        for u in lipschitz_units() {
            let g = QMatrix2::diag(u.clone(), u.clone());
            for _ in 0..4 {
                let q = rng.ball_point();
                let r =
                    automorphy_residual(&tilde, &g, &q, AutomorphySide::CqPlusD).unwrap();
                assert_eq!(r, 0.0, "unit {:?}", u);
            }
        }
        // a non-symmetrized tuple generically fails for a nontrivial unit
        let g = QMatrix2::diag(Q::i(), Q::i());
        let q = rng.ball_point();
        let r = automorphy_residual(&h, &g, &q, AutomorphySide::CqPlusD).unwrap();
        assert!(r > 0.0);
    }

    #[test]
    fn odd_weight_average_collapses() {
        // diag(-1,-1) acts by (-1)^n, so odd-weight averages vanish: the
        // classical parity obstruction for groups containing -1
        let (_, h) = crate::fueter::minimal_ktype::<Rat>(3, 0);
        let tilde = symmetrize_diag_units(&h);
        assert!(tilde.iter().all(|p| p.is_zero()));
    }

    #[test]
    fn dagger_side_law_via_dagger_data() {
        // if h satisfies the cq+d law for diag(u, u), then h-dagger
        // satisfies the a+b qbar law for the same (dagger-stable) subgroup
        let mut rng0 = Pcg::new(707);
        let h: Vec<QPolynomial<Rat>> = (0..2)
            .map(|_| {
                let mut p = QPolynomial::zero();
                for _ in 0..5 {
                    let mut e = [0u16; 4];
                    let mut left = 2u16;
                    for item in e.iter_mut() {
                        let v = rng0.below((left + 1) as u64) as u16;
                        *item = v;
                        left -= v;
                    }
                    p.insert(e, rng0.quaternion(2, 2));
                }
                p
            })
            .collect();
        let tilde = symmetrize_diag_units(&h);
        assert!(tilde.iter().any(|p| !p.is_zero()), "averaging collapsed");
        let dag: Vec<QPolynomial<Rat>> = tilde.iter().map(|p| p.dagger()).collect();
        let mut rng = Pcg::new(706);
        for u in lipschitz_units() {
            let g = QMatrix2::diag(u.clone(), u.clone());
            let q = rng.ball_point();
            let r = automorphy_residual(&dag, &g, &q, AutomorphySide::APlusBQbar).unwrap();
            assert_eq!(r, 0.0, "unit {:?}", u);
        }
    }
}
