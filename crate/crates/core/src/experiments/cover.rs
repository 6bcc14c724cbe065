//! Probability that random half-planes through fixed lines fail to cover
//! the plane.
//!
//! Site `i` sees one of the two closed half-planes bounded by its line.
//! The union misses a point exactly when some open face of the line
//! arrangement lies on the unseen side of every line, so the test reduces to
//! a lookup of the sampled side vector among the faces' sign vectors. The
//! sign vectors are computed exactly from the vertices of the arrangement.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{GenvorError, Result};
use crate::geom::rational::{format_rational, rat_from_f64, Rational};
use crate::geom::Point2;
use crate::models::FixedGeometry;

use super::stats::binomial_se;

/// `(k(k+1) + 2) / 2^(k+1)`.
pub fn lemma31_bound(k: u32) -> Rational {
    let k_big = BigInt::from(k);
    let num = &k_big * (&k_big + 1) + 2;
    Rational::new(num, BigInt::one() << (k + 1))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverTrial {
    pub k: usize,
    pub trials: u64,
    pub failures: u64,
    pub p_hat: f64,
    /// Exact bound as a decimal string.
    pub bound: String,
    pub bound_value: f64,
    pub std_err: f64,
}

impl CoverTrial {
    /// `p_hat <= bound + z * se`.
    pub fn within(&self, z: f64) -> bool {
        self.p_hat <= self.bound_value + z * self.std_err
    }
}

struct ExactLine {
    p: [Rational; 2],
    d: [Rational; 2],
}

impl ExactLine {
    fn new(p: &Point2, angle: f64) -> Self {
        ExactLine { p: [p.x.clone(), p.y.clone()], d: [rat_from_f64(angle.cos()), rat_from_f64(angle.sin())] }
    }

    /// Sign of `n . (x - p)` with `n = (-d_y, d_x)`, the normal of the
    /// left side.
    fn side(&self, x: &[Rational; 2]) -> i32 {
        let v = -&self.d[1] * (&x[0] - &self.p[0]) + &self.d[0] * (&x[1] - &self.p[1]);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    fn meet(&self, o: &ExactLine) -> Option<[Rational; 2]> {
        let den = &self.d[0] * &o.d[1] - &self.d[1] * &o.d[0];
        if den.is_zero() {
            return None;
        }
        let w = [&o.p[0] - &self.p[0], &o.p[1] - &self.p[1]];
        let t = (&w[0] * &o.d[1] - &w[1] * &o.d[0]) / den;
        Some([&self.p[0] + &t * &self.d[0], &self.p[1] + &t * &self.d[1]])
    }
}

/// Side vectors (bit `i` set when on the left of line `i`) of all faces.
pub fn face_masks(g: &FixedGeometry) -> Result<Vec<u64>> {
    let k = g.positions.len();
    if k == 0 || k > 63 || g.angles.len() != k {
        return Err(GenvorError::InvalidConfig("need 1..=63 sites with one angle each".into()));
    }
    let lines: Vec<ExactLine> = g.positions.iter().zip(&g.angles).map(|(p, &a)| ExactLine::new(p, a)).collect();
    if k == 1 {
        return Ok(vec![0, 1]);
    }
    let mut masks = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            let v = lines[a]
                .meet(&lines[b])
                .ok_or_else(|| GenvorError::DegenerateGeometry(format!("lines {a} and {b} are parallel")))?;
            let mut base = 0u64;
            for (c, l) in lines.iter().enumerate() {
                if c == a || c == b {
                    continue;
                }
                match l.side(&v) {
                    0 => return Err(GenvorError::DegenerateGeometry(format!("lines {a}, {b} and {c} are concurrent"))),
                    1 => base |= 1 << c,
                    _ => {}
                }
            }
            for q in 0..4u64 {
                masks.push(base | ((q & 1) << a) | ((q >> 1) << b));
            }
        }
    }
    masks.sort_unstable();
    masks.dedup();
    Ok(masks)
}

/// Exact failure probability under fair independent sides.
pub fn exact_failure_probability(g: &FixedGeometry) -> Result<Rational> {
    let masks = face_masks(g)?;
    Ok(Rational::new(BigInt::from(masks.len()), BigInt::one() << g.positions.len()))
}

/// Monte Carlo estimate of the cover-failure frequency: each trial draws
/// one fair side bit per site (bit set = right side visible).
pub fn estimate_cover_failure(g: &FixedGeometry, trials: u64, seed: u64) -> Result<CoverTrial> {
    let k = g.positions.len();
    let masks = face_masks(g)?;
    let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..trials {
        // a face is unseen iff it is on the left exactly of the lines whose
        // site looks right
        let sides = rng.next_u64() & full;
        if masks.binary_search(&sides).is_ok() {
            failures += 1;
        }
    }
    let p_hat = if trials == 0 { 0.0 } else { failures as f64 / trials as f64 };
    let bound = lemma31_bound(k as u32);
    Ok(CoverTrial {
        k,
        trials,
        failures,
        p_hat,
        bound: format_rational(&bound),
        bound_value: crate::geom::rational::rat_to_f64(&bound),
        std_err: binomial_se(p_hat, trials.max(1)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::random_geometry;

    #[test]
    fn bound_values() {
        assert_eq!(lemma31_bound(1), Rational::one());
        assert_eq!(lemma31_bound(3), Rational::new(14.into(), 16.into()));
        assert_eq!(lemma31_bound(10), Rational::new(112.into(), 2048.into()));
        assert_eq!(lemma31_bound(5), Rational::new(1.into(), 2.into()));
    }

    #[test]
    fn single_line_always_fails() {
        let g = random_geometry(1, 4);
        let t = estimate_cover_failure(&g, 1000, 1).unwrap();
        assert_eq!(t.failures, 1000);
    }

    #[test]
    fn perpendicular_pair_always_fails() {
        let g = FixedGeometry {
            positions: vec![Point2::from_f64(0.0, 0.0), Point2::from_f64(1.0, 0.0)],
            angles: vec![0.0, std::f64::consts::FRAC_PI_2],
        };
        assert_eq!(face_masks(&g).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(estimate_cover_failure(&g, 500, 2).unwrap().p_hat, 1.0);
    }

    #[test]
    fn parallel_lines_are_rejected() {
        let g = FixedGeometry {
            positions: vec![Point2::from_f64(0.0, 0.0), Point2::from_f64(0.0, 1.0)],
            angles: vec![0.3, 0.3],
        };
        assert!(matches!(face_masks(&g), Err(GenvorError::DegenerateGeometry(_))));
    }

    #[test]
    fn generic_arrangement_has_quadratic_faces() {
        for k in 2..=10 {
            let g = random_geometry(k, 100 + k as u64);
            let m = face_masks(&g).unwrap();
            assert_eq!(m.len(), 1 + k + k * (k - 1) / 2);
            assert_eq!(exact_failure_probability(&g).unwrap(), lemma31_bound(k as u32));
        }
    }
}
