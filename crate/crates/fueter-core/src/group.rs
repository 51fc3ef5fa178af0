//! The group Sp(1,1) inside M_2(H) and its action on the quaternionic ball.
//!
//! Provides:
//! - [`QMatrix2`]: 2x2 quaternion matrices gamma(a,b,c,d) with product,
//!   adjoint, and the order-two automorphism [`QMatrix2::dagger`]
//! - [`sp11_residual`]: membership defect against the defining relation
//!   gamma(a,b,c,d) gamma(abar,-cbar,-bbar,dbar) = 1
//! - [`mobius_act`]: q -> (aq+b)(cq+d)^{-1}, plus the norm identity
//!   1 - N(g.q) = (1 - N q)/N(cq+d) as a residual
//! - [`ScaledQMatrix`] and [`sigma`]: the section of the ball keeping the
//!   1/sqrt(1-Nq) prefactor symbolic, so sigma identities check exactly
//! - [`j_factor`]: the K-valued compact factor of gamma at q
//! - [`weight_cocycle`]: the scalar/quaternion/matrix triple entering the
//!   weight-n transformation laws

use crate::binform::rn_of_quaternion;
use crate::linalg::CMat;
use crate::quaternion::{Quaternion, ZeroDivisor};
use crate::scalar::{ComplexScalar, RealScalar, Scalar};

/// 2x2 quaternion matrix gamma(a,b,c,d).
#[derive(Clone, PartialEq, Debug)]
pub struct QMatrix2<S> {
    pub a: Quaternion<S>,
    pub b: Quaternion<S>,
    pub c: Quaternion<S>,
    pub d: Quaternion<S>,
}

/// Point of the quaternionic ball N q < 1.  Construction does not enforce
/// the bound (float-mode boundary experiments need outside points);
/// operations check their own preconditions.
pub type BallPoint<S> = Quaternion<S>;

/// Error type for Moebius-action style operations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupError {
    /// N(cq+d) = 0 at the evaluation point.
    SingularDenominator,
    /// Input outside the ball where the operation requires N q < 1.
    DomainError,
}

impl From<ZeroDivisor> for GroupError {
    fn from(_: ZeroDivisor) -> Self {
        GroupError::SingularDenominator
    }
}

impl core::fmt::Display for GroupError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GroupError::SingularDenominator => write!(f, "singular denominator cq+d"),
            GroupError::DomainError => write!(f, "point outside the unit ball"),
        }
    }
}

impl<S: Scalar> QMatrix2<S> {
    pub fn new(a: Quaternion<S>, b: Quaternion<S>, c: Quaternion<S>, d: Quaternion<S>) -> Self {
        QMatrix2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        QMatrix2::new(
            Quaternion::one(),
            Quaternion::zero(),
            Quaternion::zero(),
            Quaternion::one(),
        )
    }

    pub fn diag(a: Quaternion<S>, d: Quaternion<S>) -> Self {
        QMatrix2::new(a, Quaternion::zero(), Quaternion::zero(), d)
    }

    pub fn mul(&self, o: &Self) -> Self {
        QMatrix2::new(
            &(&self.a * &o.a) + &(&self.b * &o.c),
            &(&self.a * &o.b) + &(&self.b * &o.d),
            &(&self.c * &o.a) + &(&self.d * &o.c),
            &(&self.c * &o.b) + &(&self.d * &o.d),
        )
    }

    /// Entrywise conjugate transpose g* = t(gbar).
    pub fn star(&self) -> Self {
        QMatrix2::new(self.a.conj(), self.c.conj(), self.b.conj(), self.d.conj())
    }

    /// gamma(a,b,c,d) -> gamma(d,c,b,a), conjugation by the coordinate swap.
    pub fn dagger(&self) -> Self {
        QMatrix2::new(
            self.d.clone(),
            self.c.clone(),
            self.b.clone(),
            self.a.clone(),
        )
    }

    pub fn scale(&self, s: &S) -> Self {
        QMatrix2::new(
            self.a.scale(s),
            self.b.scale(s),
            self.c.scale(s),
            self.d.scale(s),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        QMatrix2::new(
            self.a.clone() - o.a.clone(),
            self.b.clone() - o.b.clone(),
            self.c.clone() - o.c.clone(),
            self.d.clone() - o.d.clone(),
        )
    }

    pub fn max_abs(&self) -> f64 {
        self.a
            .max_abs()
            .max(self.b.max_abs())
            .max(self.c.max_abs())
            .max(self.d.max_abs())
    }

    /// gamma(abar, -cbar, -bbar, dbar); the two-sided inverse when the
    /// element lies in Sp(1,1).
    pub fn sp11_inverse(&self) -> Self {
        QMatrix2::new(
            self.a.conj(),
            -self.c.conj(),
            -self.b.conj(),
            self.d.conj(),
        )
    }
}

/// Max-norm of gamma(a,b,c,d) gamma(abar,-cbar,-bbar,dbar) - 1; zero exactly
/// when g lies in Sp(1,1).
pub fn sp11_residual<S: Scalar>(g: &QMatrix2<S>) -> f64 {
    let prod = g.mul(&g.sp11_inverse());
    prod.sub(&QMatrix2::identity()).max_abs()
}

/// Exact membership test (exact scalars only).
pub fn is_sp11_exact<S: Scalar>(g: &QMatrix2<S>) -> bool {
    debug_assert!(S::EXACT);
    g.mul(&g.sp11_inverse()) == QMatrix2::identity()
}

/// The fractional linear action q -> (aq+b)(cq+d)^{-1}.
pub fn mobius_act<S: Scalar>(
    g: &QMatrix2<S>,
    q: &BallPoint<S>,
) -> Result<BallPoint<S>, GroupError> {
    let num = &(&g.a * q) + &g.b;
    let den = &(&g.c * q) + &g.d;
    let den_inv = den.inv()?;
    Ok(&num * &den_inv)
}

/// Difference of the two sides of 1 - N(g.q) = (1 - N q)/N(cq+d);
/// identically zero on Sp(1,1).
pub fn one_minus_norm_factor<S: Scalar>(
    g: &QMatrix2<S>,
    q: &BallPoint<S>,
) -> Result<S, GroupError> {
    let gq = mobius_act(g, q)?;
    let den = &(&g.c * q) + &g.d;
    let lhs = S::one() - gq.norm();
    let rhs = (S::one() - q.norm()) * den.norm().inv().ok_or(GroupError::SingularDenominator)?;
    Ok(lhs - rhs)
}

/// Group element with an implicit positive prefactor s^{-1/2}: the value is
/// s^{-1/2} mat.  Products multiply the prefactors, so identities about
/// sigma can be decided exactly over the rationals.
#[derive(Clone, PartialEq, Debug)]
pub struct ScaledQMatrix<S> {
    pub mat: QMatrix2<S>,
    /// The square of the inverse prefactor.
    pub inv_square: S,
}

impl<S: Scalar> ScaledQMatrix<S> {
    pub fn mul(&self, o: &Self) -> Self {
        ScaledQMatrix {
            mat: self.mat.mul(&o.mat),
            inv_square: self.inv_square.clone() * o.inv_square.clone(),
        }
    }

    /// Exact test for equality with the identity: mat must be r I with
    /// r^2 = inv_square.
    pub fn is_identity_exact(&self) -> bool {
        let r = &self.mat.a;
        if self.mat.b.is_zero()
            && self.mat.c.is_zero()
            && *r == self.mat.d
            && r.x.is_zero()
            && r.y.is_zero()
            && r.z.is_zero()
        {
            r.t.clone() * r.t.clone() == self.inv_square
        } else {
            false
        }
    }

    /// Exact Sp(1,1) membership: mat mat^{adj} = s I.
    pub fn is_sp11_exact(&self) -> bool {
        let prod = self.mat.mul(&self.mat.sp11_inverse());
        prod == QMatrix2::identity().scale(&self.inv_square)
    }
}

/// The section sigma(q) = (1 - Nq)^{-1/2} gamma(1, q, qbar, 1) of the ball.
pub fn sigma<S: Scalar + PartialOrd>(q: &BallPoint<S>) -> Result<ScaledQMatrix<S>, GroupError> {
    let nq = q.norm();
    let one_minus = S::one() - nq;
    if !(S::zero() < one_minus) {
        return Err(GroupError::DomainError);
    }
    Ok(ScaledQMatrix {
        mat: QMatrix2::new(Quaternion::one(), q.clone(), q.conj(), Quaternion::one()),
        inv_square: one_minus,
    })
}

/// Float-mode sigma as a plain matrix.
pub fn sigma_f64(q: &BallPoint<f64>) -> Result<QMatrix2<f64>, GroupError> {
    let nq = q.norm();
    if nq >= 1.0 {
        return Err(GroupError::DomainError);
    }
    let s = 1.0 / libm::sqrt(1.0 - nq);
    Ok(
        QMatrix2::new(Quaternion::one(), q.clone(), q.conj(), Quaternion::one()).scale(&s),
    )
}

/// The compact factor of gamma at q: the pair of unit quaternions
/// (a + b qbar)/|cq+d|, (cq+d)/|cq+d| together with the scale |cq+d|.
#[derive(Clone, PartialEq, Debug)]
pub struct KFactor {
    pub u_left: Quaternion<f64>,
    pub u_right: Quaternion<f64>,
    pub scale: f64,
}

impl KFactor {
    pub fn mul(&self, o: &KFactor) -> KFactor {
        KFactor {
            u_left: &self.u_left * &o.u_left,
            u_right: &self.u_right * &o.u_right,
            scale: self.scale * o.scale,
        }
    }

    pub fn max_abs_diff(&self, o: &KFactor) -> f64 {
        self.u_left
            .max_abs_diff(&o.u_left)
            .max(self.u_right.max_abs_diff(&o.u_right))
            .max((self.scale - o.scale).abs())
    }
}

/// j(gamma, q) = |cq+d|^{-1} diag(a + b qbar, cq + d) as a [`KFactor`].
pub fn j_factor(g: &QMatrix2<f64>, q: &BallPoint<f64>) -> Result<KFactor, GroupError> {
    let den = &(&g.c * q) + &g.d;
    let n = den.norm();
    if n <= 0.0 {
        return Err(GroupError::SingularDenominator);
    }
    let scale = libm::sqrt(n);
    let left = &(&g.b * &q.conj()) + &g.a;
    let inv = 1.0 / scale;
    Ok(KFactor {
        u_left: left.scale(&inv),
        u_right: den.scale(&inv),
        scale,
    })
}

/// Which side of the weight-action data to produce.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CocycleSide {
    /// Built from cq + d.
    Rho,
    /// Built from a + b qbar.
    Lambda,
}

/// The triple (N(j), j^{-1}, R_{n-1}(j^{-1})) with j = cq+d (rho side) or
/// j = a + b qbar (lambda side); exactly the factors entering the weight-n
/// transformation laws.
pub fn weight_cocycle<S, C>(
    g: &QMatrix2<S>,
    q: &BallPoint<S>,
    weight: usize,
    side: CocycleSide,
) -> Result<(S, Quaternion<S>, CMat<C>), GroupError>
where
    S: RealScalar,
    C: ComplexScalar<Real = S>,
{
    assert!(weight >= 1, "weight-n data uses R_{{n-1}}");
    let j = match side {
        CocycleSide::Rho => &(&g.c * q) + &g.d,
        CocycleSide::Lambda => &(&g.b * &q.conj()) + &g.a,
    };
    let jinv = j.inv()?;
    let r = rn_of_quaternion(&jinv.complexify::<C>(), weight - 1);
    Ok((j.norm(), jinv, r))
}

/// gamma(1+u, 1, 1, 1-u) for trace-zero u with N u = 1, and unit diagonals;
/// exact integral elements of Sp(1,1) used as generators for sampling.
pub fn integral_generators<S: Scalar>() -> alloc::vec::Vec<QMatrix2<S>> {
    let mut gens = alloc::vec::Vec::new();
    type Q<S> = Quaternion<S>;
    for u in [Q::<S>::i(), Q::j(), Q::k()] {
        gens.push(QMatrix2::new(
            Q::one() + u.clone(),
            Q::one(),
            Q::one(),
            Q::one() - u.clone(),
        ));
    }
    for u in [Q::<S>::i(), Q::j(), Q::k()] {
        gens.push(QMatrix2::diag(u.clone(), Q::one()));
        gens.push(QMatrix2::diag(Q::one(), u));
    }
    gens
}

/// Random word in the integral generators.
pub fn random_gz<S: Scalar>(rng: &mut crate::rng::Pcg, len: usize) -> QMatrix2<S> {
    let gens = integral_generators::<S>();
    let mut g = QMatrix2::identity();
    for _ in 0..len {
        let pick = rng.below(gens.len() as u64) as usize;
        g = g.mul(&gens[pick]);
    }
    g
}
