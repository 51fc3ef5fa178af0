//! Binary forms C[X,Y]_n and the SU(2)-side machinery built on them.
//!
//! Provides:
//! - [`BinaryForm`]: homogeneous degree-n polynomials as coefficient vectors
//!   over the monomials X^{n-i} Y^i
//! - [`poly_diff`]: the partial derivatives d/dX, d/dY
//! - [`monomials`], [`sym_rows`]: degree-n exponent tuples and the induced
//!   matrix of a substitution on coefficient rows; [`rn_matrix`] is the 2x2
//!   case, so R_n(gh) = R_n(g) R_n(h) holds by functoriality
//! - [`rn_of_quaternion`]: R_n composed with the standard embedding of H
//! - [`p_plus`], [`p_minus`]: the equivariant maps V_1* (x) V_k -> V_{k+1},
//!   V_{k-1}
//! - [`jn_solve`]: the hermitian matrix J_n with tR_n(u) J_n conj(R_n(u)) =
//!   J_n for unit quaternions u, found as the one-dimensional solution space
//!   of the invariance system over generators

use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::CMat;
use crate::quaternion::{iota, Quaternion};
use crate::scalar::{ComplexScalar, Scalar};

/// Variable of a binary form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    X,
    Y,
}

/// Homogeneous polynomial of degree n in (X, Y); `coeffs[i]` multiplies
/// X^{n-i} Y^i.
#[derive(Clone, PartialEq, Debug)]
pub struct BinaryForm<C> {
    pub n: usize,
    pub coeffs: Vec<C>,
}

impl<C: Scalar> BinaryForm<C> {
    pub fn zero(n: usize) -> Self {
        BinaryForm {
            n,
            coeffs: vec![C::zero(); n + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty());
        BinaryForm {
            n: coeffs.len() - 1,
            coeffs,
        }
    }

    /// The monomial X^{n-i} Y^i.
    pub fn monomial(n: usize, i: usize) -> Self {
        let mut f = Self::zero(n);
        f.coeffs[i] = C::one();
        f
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        BinaryForm {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        BinaryForm {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    /// Product of homogeneous forms (degrees add).
    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n + o.n;
        let mut coeffs = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                // X^{p-i}Y^i * X^{q-j}Y^j = X^{n-(i+j)} Y^{i+j}
                let k = i + j;
                coeffs[k] = coeffs[k].clone() + a.clone() * b.clone();
            }
        }
        BinaryForm { n, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Apply the substitution (X, Y) -> (m11 X + m12 Y, m21 X + m22 Y); the
    /// coefficient row transforms by R_n(m).
    pub fn substitute(&self, m: &CMat<C>) -> Self {
        let rn = sym_rows(m, self.n);
        let coeffs = (0..self.n + 1)
            .map(|j| {
                let mut acc = C::zero();
                for (i, c) in self.coeffs.iter().enumerate() {
                    acc = acc + c.clone() * rn.at(i, j).clone();
                }
                acc
            })
            .collect();
        BinaryForm { n: self.n, coeffs }
    }
}

/// d/dX or d/dY of a degree-n form; degree drops by one (n = 0 maps to the
/// zero constant).
pub fn poly_diff<C: Scalar>(f: &BinaryForm<C>, var: Var) -> BinaryForm<C> {
    if f.n == 0 {
        return BinaryForm::from_coeffs(vec![C::zero()]);
    }
    let n = f.n;
    let mut out: BinaryForm<C> = BinaryForm::zero(n - 1);
    for (i, c) in f.coeffs.iter().enumerate() {
        match var {
            Var::X => {
                if i < n {
                    let factor = C::from_i64((n - i) as i64);
                    out.coeffs[i] = out.coeffs[i].clone() + c.clone() * factor;
                }
            }
            Var::Y => {
                if i > 0 {
                    let factor = C::from_i64(i as i64);
                    out.coeffs[i - 1] = out.coeffs[i - 1].clone() + c.clone() * factor;
                }
            }
        }
    }
    out
}

/// Degree-n exponent tuples in `vars` variables, lexicographically
/// descending; for two variables this is X^n, X^{n-1}Y, ..., Y^n.
pub fn monomials(vars: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(vars: usize, n: usize, out: &mut Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        if vars == 1 {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=n).rev() {
            prefix.push(first);
            rec(vars - 1, n - first, out, prefix);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(vars, n, &mut out, &mut Vec::new());
    out
}

/// Number of degree-n monomials in `vars` variables.
pub fn monomial_count(vars: usize, n: usize) -> usize {
    monomials(vars, n).len()
}

/// The degree-n symmetric-power matrix of `m` in the row convention: each
/// row of `m` is a linear form in the column variables, and row mu of the
/// output expands prod_j (row_j)^{mu_j} over column monomials.
///
/// Functorial: sym_rows(a b, n) = sym_rows(a, n) sym_rows(b, n).
pub fn sym_rows<C: Scalar>(m: &CMat<C>, n: usize) -> CMat<C> {
    let row_monos = monomials(m.rows, n);
    let col_monos = monomials(m.cols, n);
    let col_index = |mono: &[usize]| -> usize {
        col_monos
            .iter()
            .position(|c| c.as_slice() == mono)
            .expect("monomial index")
    };
    let mut out = CMat::zeros(row_monos.len(), col_monos.len());
    for (ri, mu) in row_monos.iter().enumerate() {
        // multiply out prod_j (sum_k m[j,k] v_k)^{mu_j} over the column vars
        let mut acc: Vec<(Vec<usize>, C)> = vec![(vec![0; m.cols], C::one())];
        for (j, &e) in mu.iter().enumerate() {
            for _ in 0..e {
                let mut next: Vec<(Vec<usize>, C)> = Vec::new();
                for (mono, coef) in &acc {
                    for k in 0..m.cols {
                        let a = m.at(j, k);
                        if a.is_zero() {
                            continue;
                        }
                        let mut mo = mono.clone();
                        mo[k] += 1;
                        let c = coef.clone() * a.clone();
                        if let Some(slot) = next.iter_mut().find(|(m2, _)| *m2 == mo) {
                            slot.1 = slot.1.clone() + c;
                        } else {
                            next.push((mo, c));
                        }
                    }
                }
                acc = next;
            }
        }
        for (mono, coef) in acc {
            *out.at_mut(ri, col_index(&mono)) = coef;
        }
    }
    out
}

/// R_n(g) for 2x2 g, defined by the substitution action on coefficient rows;
/// row i lists the coefficients of (aX+bY)^{n-i} (cX+dY)^i.
pub fn rn_matrix<C: Scalar>(g: &CMat<C>, n: usize) -> CMat<C> {
    assert!(g.rows == 2 && g.cols == 2);
    sym_rows(g, n)
}

/// R_n(u) = R_n(iota(u)) for quaternions.
pub fn rn_of_quaternion<C: ComplexScalar>(u: &Quaternion<C>, n: usize) -> CMat<C> {
    rn_matrix(&iota(u), n)
}

/// P+ ((a dX + b dY) (x) f) = (bX - aY) f.
pub fn p_plus<C: Scalar>(a: &C, b: &C, f: &BinaryForm<C>) -> BinaryForm<C> {
    let lin = BinaryForm::from_coeffs(vec![b.clone(), -a.clone()]);
    lin.mul(f)
}

/// P- ((a dX + b dY) (x) f) = a f_X + b f_Y.
pub fn p_minus<C: Scalar>(a: &C, b: &C, f: &BinaryForm<C>) -> BinaryForm<C> {
    poly_diff(f, Var::X)
        .scale(a)
        .add(&poly_diff(f, Var::Y).scale(b))
}

/// Error from [`jn_solve`]: the invariance system did not cut out a line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SolverDegenerate(pub usize);

/// Solve for the hermitian J_n with tR_n(u) J_n conj(R_n(u)) = J_n over unit
/// quaternions, normalized so the (0,0) entry is 1.  The solution space is
/// required to be exactly one-dimensional.
pub fn jn_solve<C>(n: usize) -> Result<CMat<C>, SolverDegenerate>
where
    C: ComplexScalar,
{
    let d = n + 1;
    // Generators: i^, j^, and two generic exact unit quaternions q^2/Nq.
    let mut gens: Vec<Quaternion<C>> = vec![
        Quaternion::from_complex(&C::i()),
        Quaternion::new(C::zero(), C::zero(), C::one(), C::zero()),
    ];
    for q in [
        Quaternion::<C>::new(
            C::from_i64(1),
            C::from_i64(2),
            C::from_i64(-1),
            C::from_i64(3),
        ),
        Quaternion::<C>::new(
            C::from_i64(2),
            C::from_i64(-1),
            C::from_i64(1),
            C::from_i64(1),
        ),
    ] {
        let unit = (&q * &q).scale(&q.norm().inv().unwrap());
        gens.push(unit);
    }
    let mut rows: Vec<C> = Vec::new();
    let mut nrows = 0;
    for u in &gens {
        let r = rn_of_quaternion(u, n);
        // [tR J conj(R)]_{pq} - J_{pq} = sum_{kl} R_{kp} conj(R_{lq}) J_{kl} - J_{pq}
        for p in 0..d {
            for q in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut c = r.at(k, p).clone() * r.at(l, q).conj();
                        if k == p && l == q {
                            c = c - C::one();
                        }
                        rows.push(c);
                    }
                }
                nrows += 1;
            }
        }
    }
    let sys = CMat::from_rows(nrows, d * d, rows);
    let ns = sys.nullspace();
    if ns.len() != 1 {
        return Err(SolverDegenerate(ns.len()));
    }
    let v = &ns[0];
    let mut j = CMat::from_fn(d, d, |p, q| v[p * d + q].clone());
    let norm = j.at(0, 0).inv().ok_or(SolverDegenerate(0))?;
    j = j.scale(&norm);
    Ok(j)
}
