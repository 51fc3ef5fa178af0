//! Deterministic 64-bit PRNG and samplers for test points.
//!
//! All randomized checks in the crate draw from one seeded [`Pcg`] stream so
//! that identical configuration reproduces identical reports byte for byte.
//! Rational sample points use bounded denominators and stay inside the ball
//! of radius 3/4, keeping exact arithmetic small and points safely interior.

use crate::quaternion::Quaternion;
use crate::scalar::{Rat, RealScalar, Scalar};

/// PCG-XSH-RR 64/32, seeded splitmix-style.  Small, fast, reproducible.
#[derive(Clone, Debug)]
pub struct Pcg {
    state: u64,
}

impl Pcg {
    pub fn new(seed: u64) -> Self {
        Pcg {
            state: seed.wrapping_add(0x9E37_79B9_7F4A_7C15),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        // splitmix64 step
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in 0..n.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Uniform integer in [lo, hi] inclusive.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + self.below(span) as i64
    }

    /// Uniform float in [0, 1).
    pub fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform float in [-1, 1).
    pub fn sym_f64(&mut self) -> f64 {
        2.0 * self.unit_f64() - 1.0
    }

    /// Rational with numerator in [-num_bound, num_bound] and denominator
    /// in [1, den_bound].
    pub fn rat(&mut self, num_bound: i64, den_bound: i64) -> Rat {
        let d = self.int_in(1, den_bound);
        let n = self.int_in(-num_bound, num_bound);
        Rat::from_ratio(n, d)
    }

    /// Random rational quaternion with coordinates in [-b, b]-ish.
    pub fn quaternion(&mut self, num_bound: i64, den_bound: i64) -> Quaternion<Rat> {
        Quaternion::new(
            self.rat(num_bound, den_bound),
            self.rat(num_bound, den_bound),
            self.rat(num_bound, den_bound),
            self.rat(num_bound, den_bound),
        )
    }

    /// Nonzero rational quaternion.
    pub fn quaternion_nonzero(&mut self, num_bound: i64, den_bound: i64) -> Quaternion<Rat> {
        loop {
            let q = self.quaternion(num_bound, den_bound);
            if !q.is_zero() {
                return q;
            }
        }
    }

    /// Rational point strictly inside the ball of radius 3/4, denominators
    /// bounded by 32.
    pub fn ball_point(&mut self) -> Quaternion<Rat> {
        loop {
            let q = Quaternion::new(
                Rat::from_ratio(self.int_in(-20, 20), 32),
                Rat::from_ratio(self.int_in(-20, 20), 32),
                Rat::from_ratio(self.int_in(-20, 20), 32),
                Rat::from_ratio(self.int_in(-20, 20), 32),
            );
            if q.norm() < Rat::from_ratio(9, 16) {
                return q;
            }
        }
    }

    /// Float quaternion with coordinates in [-1, 1).
    pub fn quaternion_f64(&mut self) -> Quaternion<f64> {
        Quaternion::new(self.sym_f64(), self.sym_f64(), self.sym_f64(), self.sym_f64())
    }

    /// Float point inside the ball of radius 3/4.
    pub fn ball_point_f64(&mut self) -> Quaternion<f64> {
        loop {
            let q = self.quaternion_f64().scale(&0.75);
            if q.norm() < 0.5625 {
                return q;
            }
        }
    }

    /// Unit quaternion (float), by rejection from the cube.
    pub fn unit_quaternion_f64(&mut self) -> Quaternion<f64> {
        loop {
            let q = self.quaternion_f64();
            let n = q.norm();
            if n > 1e-3 && n <= 1.0 {
                let s = 1.0 / libm::sqrt(n);
                return q.scale(&s);
            }
        }
    }

    /// Exact unit-norm rational quaternion q^2 / N q for random rational q.
    pub fn unit_quaternion_rat(&mut self) -> Quaternion<Rat> {
        let q = self.quaternion_nonzero(6, 4);
        let n = q.norm();
        (&q * &q).scale(&n.inv().unwrap())
    }
}

/// Convert an exact quaternion to floats, for quadrature-side checks.
pub fn to_f64_quat<S: RealScalar>(q: &Quaternion<S>) -> Quaternion<f64> {
    Quaternion::new(q.t.to_f64(), q.x.to_f64(), q.y.to_f64(), q.z.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_stream() {
        let mut a = Pcg::new(7);
        let mut b = Pcg::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn ball_points_are_interior() {
        let mut rng = Pcg::new(1);
        for _ in 0..50 {
            let q = rng.ball_point();
            assert!(q.norm() < Rat::from_ratio(9, 16));
        }
    }

    #[test]
    fn exact_unit_quaternions() {
        let mut rng = Pcg::new(2);
        for _ in 0..20 {
            let u = rng.unit_quaternion_rat();
            assert_eq!(u.norm(), Rat::from_i64(1));
        }
    }
}
