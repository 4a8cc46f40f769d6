//! Straight chords between exact rational points on the inner circle.
//!
//! Boundary point at clockwise position q sits at angle
//! `90° + φ` on the unit circle with `φ = 90°/k - q·180°/k`, realized exactly
//! as `(-2t/(1 + t²), (1 - t²)/(1 + t²))` for a rational `t` close to
//! `tan(φ/2)`. The angle φ is never 180°, so `t` stays finite. A seeded jitter on `t` is redrawn whenever three chords
//! meet in a point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matching::{boundary_order, interleave, ChordMatching, Point};

pub type Coord = (BigRational, BigRational);

const SCALE: i64 = 10_000;
const JITTER: i64 = 40;
const MAX_ATTEMPTS: u64 = 1000;

#[derive(Clone, Debug)]
pub struct Chord {
    /// Endpoints, traversed from `ends.0` to `ends.1`.
    pub ends: (Point, Point),
    /// Crossing ids in order from `ends.0` to `ends.1`.
    pub crossings: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Crossing {
    pub chords: (usize, usize),
    pub point: Coord,
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    k: usize,
    /// Circle points indexed by clockwise boundary position.
    pub boundary: Vec<Coord>,
    pub chords: Vec<Chord>,
    pub crossings: Vec<Crossing>,
    /// Number of jitter draws rejected because of concurrent chords.
    pub rejected_attempts: u64,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn circle_point(t: &BigRational) -> Coord {
    let t2 = t * t;
    let den = BigRational::one() + &t2;
    let x = -(t + t) / &den;
    let y = (BigRational::one() - &t2) / &den;
    (x, y)
}

/// Difference of two points.
pub fn sub_coords(a: &Coord, b: &Coord) -> Coord {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn cross(a: &Coord, b: &Coord) -> BigRational {
    &a.0 * &b.1 - &a.1 * &b.0
}

/// Sign of the cross product of two direction vectors.
pub fn cross_sign(a: &Coord, b: &Coord) -> i32 {
    let c = cross(a, b);
    if c.is_positive() {
        1
    } else if c.is_negative() {
        -1
    } else {
        0
    }
}

pub fn to_f64(c: &Coord) -> (f64, f64) {
    (
        c.0.to_f64().unwrap_or(f64::NAN),
        c.1.to_f64().unwrap_or(f64::NAN),
    )
}

fn half_angle_parameters(k: usize, rng: &mut ChaCha8Rng) -> Vec<BigRational> {
    (0..2 * k)
        .map(|q| {
            let deg = 90.0 / k as f64 - q as f64 * 180.0 / k as f64;
            let mut deg = deg.rem_euclid(360.0);
            if deg > 180.0 {
                deg -= 360.0;
            }
            let t = (deg.to_radians() / 2.0).tan();
            let base = (t * SCALE as f64).round() as i64;
            let jitter = rng.gen_range(-JITTER..=JITTER);
            rat(base * 100 + jitter, SCALE * 100)
        })
        .collect()
}

/// The parameters must decrease along the clockwise order except at one wrap.
fn cyclically_ordered(ts: &[BigRational]) -> bool {
    let n = ts.len();
    let ascents = (0..n).filter(|&q| ts[(q + 1) % n] >= ts[q]).count();
    ascents == 1
}

impl Arrangement {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Coordinates of a boundary point.
    pub fn point(&self, p: Point) -> &Coord {
        &self.boundary[p.boundary_position(self.k)]
    }

    fn try_build(matching: &ChordMatching, ts: &[BigRational]) -> Option<Arrangement> {
        let k = matching.k();
        let boundary: Vec<Coord> = ts.iter().map(circle_point).collect();
        let pairs = matching.pairs();
        let mut chords: Vec<Chord> = pairs
            .iter()
            .map(|&(a, b)| Chord {
                ends: (a, b),
                crossings: Vec::new(),
            })
            .collect();
        let mut crossings = Vec::new();
        let mut params: Vec<Vec<(BigRational, usize)>> = vec![Vec::new(); chords.len()];
        for i in 0..pairs.len() {
            let p = &boundary[pairs[i].0.boundary_position(k)];
            let q = &boundary[pairs[i].1.boundary_position(k)];
            let d1 = sub_coords(q, p);
            for j in i + 1..pairs.len() {
                let r = &boundary[pairs[j].0.boundary_position(k)];
                let s = &boundary[pairs[j].1.boundary_position(k)];
                let d2 = sub_coords(s, r);
                let den = cross(&d1, &d2);
                let pos = |x: Point| x.boundary_position(k);
                let combinatorial = interleave(
                    (pos(pairs[i].0).min(pos(pairs[i].1)), pos(pairs[i].0).max(pos(pairs[i].1))),
                    (pos(pairs[j].0).min(pos(pairs[j].1)), pos(pairs[j].0).max(pos(pairs[j].1))),
                );
                if den.is_zero() {
                    assert!(!combinatorial, "parallel chords cannot interleave");
                    continue;
                }
                let rp = sub_coords(r, p);
                let t = cross(&rp, &d2) / &den;
                let u = cross(&rp, &d1) / &den;
                let zero = BigRational::zero();
                let one = BigRational::one();
                let geometric = t > zero && t < one && u > zero && u < one;
                assert_eq!(
                    geometric, combinatorial,
                    "points in convex position cross exactly when interleaved"
                );
                if !geometric {
                    continue;
                }
                let point = (&p.0 + &t * &d1.0, &p.1 + &t * &d1.1);
                let id = crossings.len();
                crossings.push(Crossing {
                    chords: (i, j),
                    point,
                });
                params[i].push((t, id));
                params[j].push((u, id));
            }
        }
        for (c, list) in params.iter_mut().enumerate() {
            list.sort_by(|a, b| a.0.cmp(&b.0));
            if list.windows(2).any(|w| w[0].0 == w[1].0) {
                return None;
            }
            chords[c].crossings = list.iter().map(|&(_, id)| id).collect();
        }
        Some(Arrangement {
            k,
            boundary,
            chords,
            crossings,
            rejected_attempts: 0,
        })
    }
}

/// Places the matching's chords as straight segments; crossings are exactly
/// the interleaving pairs. Deterministic for a given seed.
pub fn arrange_chords(matching: &ChordMatching, seed: u64) -> Arrangement {
    let k = matching.k();
    let mut rejected = 0;
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt);
        let ts = half_angle_parameters(k, &mut rng);
        if !cyclically_ordered(&ts) {
            rejected += 1;
            continue;
        }
        if let Some(mut a) = Arrangement::try_build(matching, &ts) {
            a.rejected_attempts = rejected;
            return a;
        }
        rejected += 1;
    }
    panic!("no generic chord placement found in {MAX_ATTEMPTS} attempts");
}

/// Boundary labels in clockwise order, as placed by an arrangement.
pub fn boundary_labels(k: usize) -> Vec<String> {
    boundary_order(k).iter().map(|p| p.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::super::matching::matching_from_sigma;
    use super::*;
    use crate::monodromy::MonodromyCandidate;

    #[test]
    fn example_has_five_crossings() {
        let s = MonodromyCandidate::parse("(1,-6,-4,2)(3,-5)(5,-3)(-2,4,6,-1)", 6).unwrap();
        let m = matching_from_sigma(&s);
        for seed in 0..5 {
            let a = arrange_chords(&m, seed);
            assert_eq!(a.crossing_count(), 5);
        }
    }

    #[test]
    fn points_lie_on_unit_circle_in_clockwise_order() {
        let s = MonodromyCandidate::identity(7).unwrap();
        let a = arrange_chords(&matching_from_sigma(&s), 3);
        for p in &a.boundary {
            assert_eq!(&p.0 * &p.0 + &p.1 * &p.1, BigRational::one());
        }
        let angles: Vec<f64> = a
            .boundary
            .iter()
            .map(|c| {
                let (x, y) = to_f64(c);
                y.atan2(x)
            })
            .collect();
        let n = angles.len();
        let descents = (0..n).filter(|&q| angles[(q + 1) % n] < angles[q]).count();
        assert_eq!(descents, n - 1);
    }
}
