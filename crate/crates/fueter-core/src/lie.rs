//! The Lie algebras su(2) and sp(1,1): ordered bases, structure constants,
//! Killing forms, the root system, and exactly normalized root vectors.
//!
//! All complex Lie-algebra coordinates live in the field Q(i, sqrt2, sqrt3)
//! ([`K8`]), which contains the normalizers 1/sqrt(-24) and 1/sqrt(-48), so
//! the normalization identities B(E_mu, E_-nu) = delta and [E_mu, E_-mu] =
//! H_mu are zero-residual rational checks.
//!
//! Ordered basis of the real form: S = S1 u S2 with
//! S1 = diag(i,0), diag(j,0), diag(k,0), diag(0,i), diag(0,j), diag(0,k)
//! and S2 = offdiag(b | bbar) for b = 1, i, j, k.

use alloc::vec::Vec;

use crate::group::QMatrix2;
use crate::linalg::CMat;
use crate::quaternion::Quaternion;
use crate::scalar::{Rad, Rat, Scalar, ComplexScalar, K8};

/// Dimension of sp(1,1).
pub const DIM: usize = 10;

/// Element of the real Lie algebra in S-coordinates.
pub type LieVector = [Rat; DIM];

/// Element of the complexification in S-coordinates over Q(i, sqrt2, sqrt3).
pub type ComplexLieVector = [K8; DIM];

/// Root rAlpha + sBeta.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RootLabel {
    pub r: i32,
    pub s: i32,
}

/// The eight roots of (g, h): {(+-2, 0), (0, +-2), (+-1, +-1)}.
pub const ROOTS: [RootLabel; 8] = [
    RootLabel { r: 2, s: 0 },
    RootLabel { r: -2, s: 0 },
    RootLabel { r: 0, s: 2 },
    RootLabel { r: 0, s: -2 },
    RootLabel { r: 1, s: -1 },
    RootLabel { r: -1, s: 1 },
    RootLabel { r: 1, s: 1 },
    RootLabel { r: -1, s: -1 },
];

/// The compact roots (root spaces inside k).
pub const COMPACT_ROOTS: [RootLabel; 4] = [
    RootLabel { r: 2, s: 0 },
    RootLabel { r: -2, s: 0 },
    RootLabel { r: 0, s: 2 },
    RootLabel { r: 0, s: -2 },
];

/// Error: a commutator left the span of the basis (cannot happen for
/// genuine Lie-algebra elements; indicates corrupted input).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BasisDecompositionError;

fn qs<S: Scalar>(t: i64, x: i64, y: i64, z: i64) -> Quaternion<S> {
    Quaternion::new(
        S::from_i64(t),
        S::from_i64(x),
        S::from_i64(y),
        S::from_i64(z),
    )
}

/// The ordered basis S as 2x2 quaternion matrices (entries are integers, so
/// any scalar works).
pub fn basis_matrices<S: Scalar>() -> Vec<QMatrix2<S>> {
    let zero = Quaternion::zero;
    let mut out = Vec::with_capacity(DIM);
    // S1: imaginary units in each diagonal slot
    for slot in 0..2 {
        for u in [qs(0, 1, 0, 0), qs(0, 0, 1, 0), qs(0, 0, 0, 1)] {
            out.push(if slot == 0 {
                QMatrix2::new(u.clone(), zero(), zero(), zero())
            } else {
                QMatrix2::new(zero(), zero(), zero(), u.clone())
            });
        }
    }
    // S2: offdiag(b | bbar)
    for b in [
        qs(1, 0, 0, 0),
        qs(0, 1, 0, 0),
        qs(0, 0, 1, 0),
        qs(0, 0, 0, 1),
    ] {
        out.push(QMatrix2::new(zero(), b.clone(), b.conj(), zero()));
    }
    out
}

/// Matrix from S-coordinates.
pub fn to_matrix(v: &ComplexLieVector) -> QMatrix2<K8> {
    let basis = basis_matrices::<K8>();
    let mut acc = QMatrix2::new(
        Quaternion::zero(),
        Quaternion::zero(),
        Quaternion::zero(),
        Quaternion::zero(),
    );
    for (c, b) in v.iter().zip(basis.iter()) {
        if !c.is_zero() {
            let sb = b.scale(c);
            acc = QMatrix2::new(acc.a + sb.a, acc.b + sb.b, acc.c + sb.c, acc.d + sb.d);
        }
    }
    acc
}

/// S-coordinates of a matrix in g, if it lies in the span.
pub fn decompose<S: Scalar>(m: &QMatrix2<S>) -> Result<[S; DIM], BasisDecompositionError> {
    // a, d must be trace-free; c must equal conj(b).
    if !m.a.t.is_zero() || !m.d.t.is_zero() || m.c != m.b.conj() {
        return Err(BasisDecompositionError);
    }
    Ok([
        m.a.x.clone(),
        m.a.y.clone(),
        m.a.z.clone(),
        m.d.x.clone(),
        m.d.y.clone(),
        m.d.z.clone(),
        m.b.t.clone(),
        m.b.x.clone(),
        m.b.y.clone(),
        m.b.z.clone(),
    ])
}

fn commutator<S: Scalar>(x: &QMatrix2<S>, y: &QMatrix2<S>) -> QMatrix2<S> {
    x.mul(y).sub(&y.mul(x))
}

/// [X, Y] computed as a matrix commutator and re-expressed in S.  The
/// table-driven [`Sp11Structure::bracket`] is the fast path; this one is the
/// independent route used to cross-check the table.
pub fn bracket_via_matrices(
    x: &ComplexLieVector,
    y: &ComplexLieVector,
) -> Result<ComplexLieVector, BasisDecompositionError> {
    decompose(&commutator(&to_matrix(x), &to_matrix(y)))
}

pub fn zero_vector() -> ComplexLieVector {
    core::array::from_fn(|_| K8::zero())
}

pub fn basis_vector(i: usize) -> ComplexLieVector {
    let mut v = zero_vector();
    v[i] = K8::one();
    v
}

pub fn add(x: &ComplexLieVector, y: &ComplexLieVector) -> ComplexLieVector {
    core::array::from_fn(|i| x[i].clone() + y[i].clone())
}

pub fn scale(x: &ComplexLieVector, s: &K8) -> ComplexLieVector {
    core::array::from_fn(|i| x[i].clone() * s.clone())
}

pub fn sub(x: &ComplexLieVector, y: &ComplexLieVector) -> ComplexLieVector {
    core::array::from_fn(|i| x[i].clone() - y[i].clone())
}

pub fn is_zero_vector(x: &ComplexLieVector) -> bool {
    x.iter().all(|c| c.is_zero())
}

/// Precomputed structure constants and Killing matrix of sp(1,1); build one
/// of these once and reuse it, the construction multiplies out all 100 basis
/// commutators.
pub struct Sp11Structure {
    /// table[i][j] = S-coordinates of [S_i, S_j]; the constants are rational
    /// (in fact integral).
    pub table: Vec<Vec<[Rat; DIM]>>,
    /// Killing matrix on basis pairs, from ad-traces.
    pub killing: CMat<Rat>,
}

impl Sp11Structure {
    pub fn new() -> Self {
        let basis = basis_matrices::<Rat>();
        let mut table = Vec::with_capacity(DIM);
        for i in 0..DIM {
            let mut row = Vec::with_capacity(DIM);
            for j in 0..DIM {
                let c = commutator(&basis[i], &basis[j]);
                row.push(decompose(&c).expect("basis brackets close in g"));
            }
            table.push(row);
        }
        let ads: Vec<CMat<Rat>> = (0..DIM)
            .map(|i| CMat::from_fn(DIM, DIM, |r, c| table[i][c][r].clone()))
            .collect();
        let killing = CMat::from_fn(DIM, DIM, |i, j| ads[i].mul(&ads[j]).trace());
        Sp11Structure { table, killing }
    }

    /// [X, Y] on the real form, expanded over the structure constants.
    pub fn bracket_real(&self, x: &LieVector, y: &LieVector) -> LieVector {
        let mut acc: LieVector = core::array::from_fn(|_| <Rat as Scalar>::zero());
        for i in 0..DIM {
            if Scalar::is_zero(&x[i]) {
                continue;
            }
            for j in 0..DIM {
                if Scalar::is_zero(&y[j]) {
                    continue;
                }
                let c = x[i].clone() * y[j].clone();
                for k in 0..DIM {
                    let t = &self.table[i][j][k];
                    if !Scalar::is_zero(t) {
                        acc[k] = acc[k].clone() + c.clone() * t.clone();
                    }
                }
            }
        }
        acc
    }

    /// [X, Y] on the complexification, expanded over the structure constants.
    pub fn bracket(&self, x: &ComplexLieVector, y: &ComplexLieVector) -> ComplexLieVector {
        let mut acc = zero_vector();
        for i in 0..DIM {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if y[j].is_zero() {
                    continue;
                }
                let c = x[i].clone() * y[j].clone();
                for k in 0..DIM {
                    let t = &self.table[i][j][k];
                    if !Scalar::is_zero(t) {
                        acc[k] = acc[k].clone() + scale_k8_by_rat(&c, t);
                    }
                }
            }
        }
        acc
    }

    /// ad of a real vector, from the table.
    pub fn ad_matrix_real(&self, x: &LieVector) -> CMat<Rat> {
        let mut acc: CMat<Rat> = CMat::zeros(DIM, DIM);
        for (i, coef) in x.iter().enumerate() {
            if !Scalar::is_zero(coef) {
                let adi = CMat::from_fn(DIM, DIM, |r, c| self.table[i][c][r].clone());
                acc = acc.add(&adi.scale(coef));
            }
        }
        acc
    }

    /// Killing form of two complexified vectors (C-bilinear extension).
    pub fn killing_form(&self, x: &ComplexLieVector, y: &ComplexLieVector) -> K8 {
        let mut acc = K8::zero();
        for i in 0..DIM {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if y[j].is_zero() {
                    continue;
                }
                let b = self.killing.at(i, j);
                if !Scalar::is_zero(b) {
                    let c = x[i].clone() * y[j].clone();
                    acc = acc + scale_k8_by_rat(&c, b);
                }
            }
        }
        acc
    }
}

fn scale_k8_by_rat(c: &K8, r: &Rat) -> K8 {
    let rr = Rad::from_rat(r.clone());
    K8::new(c.re.clone() * rr.clone(), c.im.clone() * rr)
}

impl Default for Sp11Structure {
    fn default() -> Self {
        Self::new()
    }
}

/// Which algebra to produce the Killing matrix for.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Algebra {
    Su2,
    Sp11,
}

/// Killing form B(X, Y) = tr(ad X ad Y) on basis pairs, computed from
/// structure constants (never from the closed form, so the comparison with
/// the expected matrix is a genuine test).
pub fn killing_matrix(algebra: Algebra) -> CMat<Rat> {
    match algebra {
        Algebra::Sp11 => Sp11Structure::new().killing,
        Algebra::Su2 => {
            // basis i, j, k of the trace-zero quaternions
            let basis: [Quaternion<Rat>; 3] = [Quaternion::i(), Quaternion::j(), Quaternion::k()];
            let br = |a: &Quaternion<Rat>, b: &Quaternion<Rat>| -> [Rat; 3] {
                let c = a * b - b * a;
                [c.x, c.y, c.z]
            };
            let ad = |a: &Quaternion<Rat>| -> CMat<Rat> {
                CMat::from_fn(3, 3, |r, c| br(a, &basis[c])[r].clone())
            };
            CMat::from_fn(3, 3, |i, j| ad(&basis[i]).mul(&ad(&basis[j])).trace())
        }
    }
}

/// Requested label is not a root.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NotARoot(pub RootLabel);

/// 1/sqrt(-24) = -i sqrt6/12 and 1/sqrt(-48) = -i sqrt3/12 in K8.
fn inv_sqrt_m24() -> K8 {
    K8::new(
        Rad::from_rat(<Rat as Scalar>::zero()),
        -(Rad::sqrt6() * Rad::from_ratio(1, 12)),
    )
}

fn inv_sqrt_m48() -> K8 {
    K8::new(
        Rad::from_rat(<Rat as Scalar>::zero()),
        -(Rad::sqrt3() * Rad::from_ratio(1, 12)),
    )
}

/// The normalized root vector E_mu.
pub fn root_vector(mu: RootLabel) -> Result<ComplexLieVector, NotARoot> {
    let i = K8::i();
    let c24 = inv_sqrt_m24();
    let c48 = inv_sqrt_m48();
    let mut v = zero_vector();
    match (mu.r, mu.s) {
        // diag(j -+ i k, 0) / sqrt(-24) and the lower-slot twins
        (2, 0) => {
            v[1] = c24.clone();
            v[2] = -(c24 * i);
        }
        (-2, 0) => {
            v[1] = c24.clone();
            v[2] = c24 * i;
        }
        (0, 2) => {
            v[4] = c24.clone();
            v[5] = -(c24 * i);
        }
        (0, -2) => {
            v[4] = c24.clone();
            v[5] = c24 * i;
        }
        // offdiag(1 -+ i i^ | 1 +- i i^) / sqrt(-48) with signs per root
        (1, -1) => {
            v[6] = -c48.clone();
            v[7] = c48 * i;
        }
        (-1, 1) => {
            v[6] = c48.clone();
            v[7] = c48 * i;
        }
        (1, 1) => {
            v[8] = -c48.clone();
            v[9] = c48 * i;
        }
        (-1, -1) => {
            v[8] = c48.clone();
            v[9] = c48 * i;
        }
        _ => return Err(NotARoot(mu)),
    }
    Ok(v)
}

/// H_mu = r H_alpha + s H_beta with H_alpha = -diag(i i^, 0)/12.
pub fn cartan_element(mu: RootLabel) -> ComplexLieVector {
    let i = K8::i();
    let coef = -(i * K8::from_ratio(1, 12));
    let mut v = zero_vector();
    v[0] = coef.clone() * K8::from_i64(mu.r as i64);
    v[3] = coef * K8::from_i64(mu.s as i64);
    v
}

/// mu(H) for H in the Cartan subalgebra spanned by diag(i^, 0), diag(0, i^):
/// alpha(diag(z i^, w i^)) = iz and beta(...) = iw.
pub fn root_value(mu: RootLabel, h: &ComplexLieVector) -> K8 {
    debug_assert!(h
        .iter()
        .enumerate()
        .all(|(k, c)| k == 0 || k == 3 || c.is_zero()));
    let i = K8::i();
    i * (h[0].clone() * K8::from_i64(mu.r as i64) + h[3].clone() * K8::from_i64(mu.s as i64))
}

/// The su(2)-side sl2 triple (e, f, h) = ((j - i k)/2, (-j - i k)/2, -i i^)
/// as complexified quaternions, mapped by iota onto the standard X, Y, H.
pub fn sl2_triple() -> (
    Quaternion<crate::scalar::GRat>,
    Quaternion<crate::scalar::GRat>,
    Quaternion<crate::scalar::GRat>,
) {
    use crate::scalar::GRat;
    let half = GRat::from_ratio(1, 2);
    let ihalf = GRat::i() * half.clone();
    let z = GRat::zero;
    let e = Quaternion::new(z(), z(), half.clone(), -ihalf.clone());
    let f = Quaternion::new(z(), z(), -half, -ihalf);
    let h = Quaternion::new(z(), -GRat::i(), z(), z());
    (e, f, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::iota;
    use crate::rng::Pcg;
    use crate::scalar::GRat;

    fn rand_vector(rng: &mut Pcg) -> ComplexLieVector {
        core::array::from_fn(|_| {
            K8::new(Rad::from_rat(rng.rat(3, 2)), Rad::from_rat(rng.rat(3, 2)))
        })
    }

    fn rand_real_vector(rng: &mut Pcg) -> LieVector {
        core::array::from_fn(|_| rng.rat(5, 2))
    }

    #[test]
    fn su2_killing_is_minus_eight() {
        let k = killing_matrix(Algebra::Su2);
        let want = CMat::<Rat>::identity(3).scale(&Rat::from_i64(-8));
        assert_eq!(k, want);
    }

    #[test]
    fn su2_adjoint_display() {
        // ad(a i + b j + c k) = [[0, -2c, 2b], [2c, 0, -2a], [-2b, 2a, 0]]
        let z = <Rat as Scalar>::zero;
        let (a, b, c) = (Rat::from_i64(2), Rat::from_ratio(-1, 3), Rat::from_i64(5));
        let v = Quaternion::new(z(), a.clone(), b.clone(), c.clone());
        let basis = [
            Quaternion::<Rat>::i(),
            Quaternion::<Rat>::j(),
            Quaternion::<Rat>::k(),
        ];
        let two = Rat::from_i64(2);
        let want = CMat::from_rows(
            3,
            3,
            [
                z(),
                -(two.clone() * c.clone()),
                two.clone() * b.clone(),
                two.clone() * c.clone(),
                z(),
                -(two.clone() * a.clone()),
                -(two.clone() * b.clone()),
                two.clone() * a.clone(),
                z(),
            ],
        );
        let got = CMat::from_fn(3, 3, |r, cix| {
            let w = &v * &basis[cix] - &basis[cix] * &v;
            [w.x.clone(), w.y.clone(), w.z.clone()][r].clone()
        });
        assert_eq!(got, want);
    }

    #[test]
    fn sp11_killing_matrix() {
        let k = killing_matrix(Algebra::Sp11);
        let want = CMat::from_fn(DIM, DIM, |i, j| {
            if i != j {
                <Rat as Scalar>::zero()
            } else if i < 6 {
                Rat::from_i64(-12)
            } else {
                Rat::from_i64(24)
            }
        });
        assert_eq!(k, want);
    }

    #[test]
    fn killing_symmetry_and_k_p_orthogonality() {
        let k = killing_matrix(Algebra::Sp11);
        assert_eq!(k, k.transpose());
        for i in 0..6 {
            for j in 6..DIM {
                assert!(Scalar::is_zero(k.at(i, j)));
            }
        }
    }

    #[test]
    fn brackets_antisymmetric_and_jacobi() {
        let st = Sp11Structure::new();
        let mut rng = Pcg::new(101);
        let zero = |v: &LieVector| v.iter().all(|c| Scalar::is_zero(c));
        let radd = |a: &LieVector, b: &LieVector| -> LieVector {
            core::array::from_fn(|i| a[i].clone() + b[i].clone())
        };
        for _ in 0..200 {
            let x = rand_real_vector(&mut rng);
            let y = rand_real_vector(&mut rng);
            let z = rand_real_vector(&mut rng);
            let xy = st.bracket_real(&x, &y);
            let yx = st.bracket_real(&y, &x);
            assert!(zero(&radd(&xy, &yx)));
            assert!(zero(&st.bracket_real(&x, &x)));
            // Jacobi
            let j1 = st.bracket_real(&x, &st.bracket_real(&y, &z));
            let j2 = st.bracket_real(&y, &st.bracket_real(&z, &x));
            let j3 = st.bracket_real(&z, &st.bracket_real(&x, &y));
            assert!(zero(&radd(&radd(&j1, &j2), &j3)));
        }
        // a few genuinely complex triples through the same table
        for _ in 0..5 {
            let x = rand_vector(&mut rng);
            let y = rand_vector(&mut rng);
            let z = rand_vector(&mut rng);
            let j1 = st.bracket(&x, &st.bracket(&y, &z));
            let j2 = st.bracket(&y, &st.bracket(&z, &x));
            let j3 = st.bracket(&z, &st.bracket(&x, &y));
            assert!(is_zero_vector(&add(&add(&j1, &j2), &j3)));
        }
    }

    #[test]
    fn table_bracket_matches_matrix_bracket() {
        let st = Sp11Structure::new();
        let mut rng = Pcg::new(105);
        for _ in 0..3 {
            let x = rand_vector(&mut rng);
            let y = rand_vector(&mut rng);
            assert_eq!(st.bracket(&x, &y), bracket_via_matrices(&x, &y).unwrap());
        }
    }

    #[test]
    fn top_left_block_su2_bracket() {
        // [diag(i,0), diag(j,0)] = 2 diag(k,0)
        let st = Sp11Structure::new();
        let got = st.bracket(&basis_vector(0), &basis_vector(1));
        let want = scale(&basis_vector(2), &K8::from_i64(2));
        assert_eq!(got, want);
    }

    #[test]
    fn ad_is_derivation() {
        let st = Sp11Structure::new();
        let mut rng = Pcg::new(102);
        for _ in 0..20 {
            let x = rand_real_vector(&mut rng);
            let y = rand_real_vector(&mut rng);
            let lhs = st.ad_matrix_real(&st.bracket_real(&x, &y));
            let rhs_m = st.ad_matrix_real(&x).mul(&st.ad_matrix_real(&y));
            let rhs = rhs_m.sub(&st.ad_matrix_real(&y).mul(&st.ad_matrix_real(&x)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn root_vectors_satisfy_root_equations() {
        let mut rng = Pcg::new(103);
        let st = Sp11Structure::new();
        for mu in ROOTS {
            let e = root_vector(mu).unwrap();
            for _ in 0..4 {
                // random Cartan element diag(z i^, w i^)
                let mut h = zero_vector();
                h[0] = K8::new(Rad::from_rat(rng.rat(3, 2)), Rad::from_rat(rng.rat(3, 2)));
                h[3] = K8::new(Rad::from_rat(rng.rat(3, 2)), Rad::from_rat(rng.rat(3, 2)));
                let lhs = st.bracket(&h, &e);
                let rhs = scale(&e, &root_value(mu, &h));
                assert!(is_zero_vector(&sub(&lhs, &rhs)), "root {:?}", mu);
            }
        }
    }

    #[test]
    fn root_vector_normalizations() {
        // B(E_mu, E_-nu) = delta_{mu nu} and [E_mu, E_-mu] = H_mu, exactly
        let st = Sp11Structure::new();
        for mu in ROOTS {
            for nu in ROOTS {
                let e = root_vector(mu).unwrap();
                let f = root_vector(RootLabel { r: -nu.r, s: -nu.s }).unwrap();
                let b = st.killing_form(&e, &f);
                let want = if mu == nu { K8::one() } else { K8::zero() };
                assert_eq!(b, want, "B(E_{:?}, E_-{:?})", mu, nu);
            }
            let e = root_vector(mu).unwrap();
            let f = root_vector(RootLabel { r: -mu.r, s: -mu.s }).unwrap();
            let br = st.bracket(&e, &f);
            assert_eq!(br, cartan_element(mu), "[E, E^-] for {:?}", mu);
        }
    }

    #[test]
    fn cartan_elements_represent_roots() {
        // B(H_mu, X) = mu(X) on the Cartan subalgebra, and linearity
        let st = Sp11Structure::new();
        let mut rng = Pcg::new(104);
        for mu in ROOTS {
            let hmu = cartan_element(mu);
            for _ in 0..4 {
                let mut x = zero_vector();
                x[0] = K8::new(Rad::from_rat(rng.rat(3, 2)), Rad::from_rat(<Rat as Scalar>::zero()));
                x[3] = K8::new(Rad::from_rat(rng.rat(3, 2)), Rad::from_rat(<Rat as Scalar>::zero()));
                assert_eq!(st.killing_form(&hmu, &x), root_value(mu, &x));
            }
        }
        let zero = cartan_element(RootLabel { r: 0, s: 0 });
        assert!(is_zero_vector(&zero));
        let hab = cartan_element(RootLabel { r: 1, s: 1 });
        let ha = cartan_element(RootLabel { r: 1, s: 0 });
        let hb = cartan_element(RootLabel { r: 0, s: 1 });
        assert_eq!(hab, add(&ha, &hb));
    }

    #[test]
    fn not_a_root_is_rejected() {
        assert!(root_vector(RootLabel { r: 1, s: 0 }).is_err());
        assert!(root_vector(RootLabel { r: 2, s: 2 }).is_err());
    }

    #[test]
    fn sl2_triple_images_and_brackets() {
        let (e, f, h) = sl2_triple();
        let o = <GRat as Scalar>::zero();
        let l = <GRat as Scalar>::one();
        assert_eq!(
            iota(&e),
            CMat::from_rows(2, 2, [o.clone(), l.clone(), o.clone(), o.clone()])
        );
        assert_eq!(
            iota(&f),
            CMat::from_rows(2, 2, [o.clone(), o.clone(), l.clone(), o.clone()])
        );
        assert_eq!(
            iota(&h),
            CMat::from_rows(2, 2, [l.clone(), o.clone(), o.clone(), -l.clone()])
        );
        // [h, e] = 2e, [h, f] = -2f, [e, f] = h in H0 (x) C
        let two = GRat::from_i64(2);
        let br = |a: &Quaternion<GRat>, b: &Quaternion<GRat>| a * b - b * a;
        assert_eq!(br(&h, &e), e.scale(&two));
        assert_eq!(br(&h, &f), -f.scale(&two));
        assert_eq!(br(&e, &f), h);
    }
}
