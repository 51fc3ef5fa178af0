//! Matrix realizations of the left action of M_2(H) on pairs of quaternions
//! and its symmetric powers: the mu / W / Z families and their
//! transformation laws.
//!
//! The building block is the coordinate row psi0(q) = (z, wbar) of
//! q = z + w j^ (so psi0(q) = (t + ix, y + iz)).  Right multiplication acts
//! through iota: psi0(q u) = psi0(q) iota(u), which is what makes the
//! R_n-transformation laws below hold on the nose.
//!
//! Left multiplication by a general quaternion is only real-linear, so it is
//! linearized on the four rows (psi0 x, psi0 y, psi0 jx, psi0 jy): that is
//! the 4x4 complexification [`complexify_qmat2`] of M_2(H), an exact algebra
//! embedding.  Degree-n objects are its symmetric powers:
//!
//! - [`w_matrix`]: W_n(x, y), rows indexed by degree-n monomials in the four
//!   rows, columns by X^{n-i} Y^i; satisfies W(xu, yu) = W(x, y) R_n(u)
//! - [`mu_matrix`]: mu_n(g) = Sym^n of the complexification; multiplicative
//!   on all of M_2(H), with mu(g) W(x, y) = W(ax+by, cx+dy)
//! - [`z_matrix`]: Z(q) = W(q, 1) with Z(gamma.q) R_n(cq+d) = mu(gamma) Z(q)
//!
//! The compact (2n+2)-row two-block display of mu/W (top and bottom pure
//! monomial blocks) is exposed as [`mu_display`] / [`w_display`]: it is the
//! corner submatrix of the full mu and is multiplicative only on the complex
//! and j-complex slices M_2(C) u j M_2(C) once n >= 2 (for n = 1 the two
//! agree up to basis order and work globally).  See the tests for a
//! counterexample pinning this down.

use alloc::vec::Vec;

use crate::binform::{monomials, sym_rows};
use crate::group::QMatrix2;
use crate::linalg::CMat;
use crate::quaternion::Quaternion;
use crate::scalar::{ComplexScalar, RealScalar, Scalar};

/// Coordinate row psi0(q) = (t + ix, y + iz) of a quaternion.
pub fn psi0<S, C>(q: &Quaternion<S>) -> [C; 2]
where
    S: RealScalar,
    C: ComplexScalar<Real = S>,
{
    [
        C::new(q.t.clone(), q.x.clone()),
        C::new(q.y.clone(), q.z.clone()),
    ]
}

/// The stacked 4x2 coordinate matrix with rows psi0(x), psi0(y), psi0(jx),
/// psi0(jy).
pub fn stacked_rows<S, C>(x: &Quaternion<S>, y: &Quaternion<S>) -> CMat<C>
where
    S: RealScalar,
    C: ComplexScalar<Real = S>,
{
    let j = Quaternion::<S>::j();
    let rows = [
        psi0::<S, C>(x),
        psi0::<S, C>(y),
        psi0::<S, C>(&(&j * x)),
        psi0::<S, C>(&(&j * y)),
    ];
    CMat::from_fn(4, 2, |i, k| rows[i][k].clone())
}

/// The exact complexification of a quaternion 2x2 matrix: the 4x4 complex
/// matrix acting on the stacked rows.  Blocks: [[g0, conj g1], [-g1, conj g0]]
/// where entry = g0 + j^ g1 splits along C + j^ C.
pub fn complexify_qmat2<S, C>(g: &QMatrix2<S>) -> CMat<C>
where
    S: RealScalar,
    C: ComplexScalar<Real = S>,
{
    let parts = |q: &Quaternion<S>| -> (C, C) {
        q.complexify::<C>().j_left_parts()
    };
    let (a0, a1) = parts(&g.a);
    let (b0, b1) = parts(&g.b);
    let (c0, c1) = parts(&g.c);
    let (d0, d1) = parts(&g.d);
    CMat::from_rows(
        4,
        4,
        [
            a0.clone(),
            b0.clone(),
            a1.conj(),
            b1.conj(),
            c0.clone(),
            d0.clone(),
            c1.conj(),
            d1.conj(),
            -a1.clone(),
            -b1.clone(),
            a0.conj(),
            b0.conj(),
            -c1.clone(),
            -d1.clone(),
            c0.conj(),
            d0.conj(),
        ],
    )
}

/// Number of rows of the degree-n objects: monomial count of 4 variables.
pub fn mu_rows(n: usize) -> usize {
    crate::binform::monomial_count(4, n)
}

/// W_n(x, y): (monomials-of-4 choose n) x (n+1), rows are coefficient rows
/// of products of the four stacked linear forms.
pub fn w_matrix<S, C>(x: &Quaternion<S>, y: &Quaternion<S>, n: usize) -> CMat<C>
where
    S: RealScalar,
    C: ComplexScalar<Real = S>,
{
    sym_rows(&stacked_rows::<S, C>(x, y), n)
}

/// mu_n(g): the degree-n symmetric power of the complexification;
/// multiplicative on M_2(H) and intertwining W-matrices.
pub fn mu_matrix<S, C>(g: &QMatrix2<S>, n: usize) -> CMat<C>
where
    S: RealScalar,
    C: ComplexScalar<Real = S>,
{
    sym_rows(&complexify_qmat2::<S, C>(g), n)
}

/// Z(q) = W(q, 1).
pub fn z_matrix<S, C>(q: &Quaternion<S>, n: usize) -> CMat<C>
where
    S: RealScalar,
    C: ComplexScalar<Real = S>,
{
    w_matrix::<S, C>(q, &Quaternion::one(), n)
}

/// Indices of the "pure" degree-n monomials: powers of the first two rows
/// only, then powers of the last two rows only (n+1 of each).
pub fn pure_block_indices(n: usize) -> Vec<usize> {
    let monos = monomials(4, n);
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for (i, m) in monos.iter().enumerate() {
        if m[2] == 0 && m[3] == 0 {
            top.push(i);
        } else if m[0] == 0 && m[1] == 0 {
            bottom.push(i);
        }
    }
    top.extend(bottom);
    top
}

/// The (2n+2) x (n+1) two-block stacked form of W: the pure-monomial rows.
/// Top block is the degree-n coordinate matrix of (x, y), bottom the one of
/// (jx, jy).
pub fn w_display<S, C>(x: &Quaternion<S>, y: &Quaternion<S>, n: usize) -> CMat<C>
where
    S: RealScalar,
    C: ComplexScalar<Real = S>,
{
    let w = w_matrix::<S, C>(x, y, n);
    let idx = pure_block_indices(n);
    CMat::from_fn(idx.len(), n + 1, |i, j| w.at(idx[i], j).clone())
}

/// The (2n+2) x (2n+2) corner submatrix of mu on the pure monomial rows and
/// columns.  Blockwise it equals [[R_n(g0), R_n(conj g1)], [(-1)^n R_n(g1),
/// R_n(conj g0)]]; it is a homomorphism only where no mixed monomials are
/// generated (all of M_2(H) for n = 1, the slices M_2(C) and j^ M_2(C) for
/// every n).
pub fn mu_display<S, C>(g: &QMatrix2<S>, n: usize) -> CMat<C>
where
    S: RealScalar,
    C: ComplexScalar<Real = S>,
{
    let m = mu_matrix::<S, C>(g, n);
    let idx = pure_block_indices(n);
    CMat::from_fn(idx.len(), idx.len(), |i, j| {
        m.at(idx[i], idx[j]).clone()
    })
}
