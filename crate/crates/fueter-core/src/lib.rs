//! Quaternionic analysis on the unit ball and the symplectic group Sp(1,1).
//!
//! The crate is `no_std` (with `alloc`) and splits into:
//! - [`scalar`]: scalar abstraction — exact rationals, Gaussian rationals,
//!   the field Q(i, sqrt2, sqrt3), and `f64` — behind one trait.
//! - [`quaternion`]: the algebra H over a generic scalar, its complexification,
//!   reduced norm/trace, and the embedding into 2x2 complex matrices.
//! - [`linalg`]: small dense matrices over exact or float complex scalars,
//!   with elimination-based rank/nullspace.
//! - [`group`]: Sp(1,1) inside M_2(H), the Moebius action on the ball, the
//!   section sigma, the compact factor, and weight-action cocycles.
//! - [`lie`]: bases and structure constants for su(2) and sp(1,1), Killing
//!   forms, the root system, and normalized root vectors.
//! - [`binform`]: binary forms C[X,Y]_n, the symmetric-power matrices R_n,
//!   the equivariant maps P+/P-, and the invariant hermitian form J_n.
//! - [`reps`]: the complexification of M_2(H), symmetric-power lifts, and the
//!   mu/W/Z matrices with their transformation laws.
//! - [`qpoly`]: quaternion-coefficient polynomials in the four real
//!   coordinates of H, the exact domain for all symbolic differential work.
//! - [`fueter`]: the four Fueter operators, the involutions, the regular
//!   P/Q/g/h families, and the ball-side Dirac operator.
//! - [`forms`]: noncommutative H-valued differential forms: wedge, exterior
//!   derivative, pullbacks, and the distinguished forms dq, Dq, omega0.
//! - [`quad`]: quadrature on 3-spheres and boxes, Cauchy-Fueter reproduction,
//!   and Stokes residuals.
//! - [`arith`]: the Hurwitz order, integral group elements, principal
//!   congruence subgroups, and the automorphy-condition checker.
//! - [`rng`]: a small deterministic PRNG and samplers for rational points,
//!   group elements, and polynomials.
//! - [`verify`]: the named check suites behind the verification CLI.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod scalar;
pub mod quaternion;
pub mod linalg;
pub mod rng;
pub mod group;
pub mod lie;
pub mod binform;
pub mod reps;
pub mod qpoly;
pub mod fueter;
pub mod forms;
pub mod quad;
pub mod arith;
pub mod verify;

pub use quaternion::Quaternion;
pub use scalar::{Rat, GRat, Scalar, ComplexScalar};
