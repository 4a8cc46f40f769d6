//! The relation ∼ on the boundary points {l_i, r_i} and the closed curves it induces.

use std::fmt;

use serde::Serialize;

use crate::monodromy::MonodromyCandidate;

/// One of the 2k boundary points l_1..l_k, r_1..r_k (indices are 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Point {
    L(usize),
    R(usize),
}

impl Point {
    /// Dense index: l_i ↦ i-1, r_i ↦ k+i-1.
    pub fn index(self, k: usize) -> usize {
        match self {
            Point::L(i) => i - 1,
            Point::R(i) => k + i - 1,
        }
    }

    pub fn from_index(k: usize, x: usize) -> Point {
        if x < k {
            Point::L(x + 1)
        } else {
            Point::R(x - k + 1)
        }
    }

    /// Position on the inner circle in the clockwise order
    /// r_1, l_k, r_2, l_1, ..., r_k, l_{k-1}.
    pub fn boundary_position(self, k: usize) -> usize {
        match self {
            Point::R(i) => 2 * (i - 1),
            Point::L(j) => (2 * j + 1) % (2 * k),
        }
    }

    /// The other end of the curve S_i through this point: r_i and l_{i+1} are joined.
    pub fn s_partner(self, k: usize) -> Point {
        match self {
            Point::R(i) => Point::L(i % k + 1),
            Point::L(j) => Point::R((j + k - 2) % k + 1),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::L(i) => write!(f, "l{i}"),
            Point::R(i) => write!(f, "r{i}"),
        }
    }
}

/// The clockwise sequence of boundary points on the inner circle.
pub fn boundary_order(k: usize) -> Vec<Point> {
    let mut out = vec![Point::L(1); 2 * k];
    for i in 1..=k {
        out[Point::R(i).boundary_position(k)] = Point::R(i);
        out[Point::L(i).boundary_position(k)] = Point::L(i);
    }
    out
}

/// A perfect matching on the boundary points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordMatching {
    k: usize,
    partner: Vec<usize>,
}

impl ChordMatching {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn partner(&self, p: Point) -> Point {
        Point::from_index(self.k, self.partner[p.index(self.k)])
    }

    /// The matched pairs, each listed once, ordered by their first point.
    pub fn pairs(&self) -> Vec<(Point, Point)> {
        let mut out = Vec::new();
        for x in 0..2 * self.k {
            let y = self.partner[x];
            if x < y {
                out.push((Point::from_index(self.k, x), Point::from_index(self.k, y)));
            }
        }
        out
    }

    /// Pairs as boundary positions `(a, b)` with `a < b`.
    pub fn chords_by_position(&self) -> Vec<(usize, usize)> {
        self.pairs()
            .into_iter()
            .map(|(p, q)| {
                let (a, b) = (p.boundary_position(self.k), q.boundary_position(self.k));
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// Number of chord pairs whose endpoints interleave on the circle.
    pub fn interleaving_count(&self) -> usize {
        let chords = self.chords_by_position();
        let mut count = 0;
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                if interleave(chords[i], chords[j]) {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn contains(&self, a: Point, b: Point) -> bool {
        self.partner(a) == b
    }
}

pub(crate) fn interleave(a: (usize, usize), b: (usize, usize)) -> bool {
    let inside = |x: usize| a.0 < x && x < a.1;
    inside(b.0) != inside(b.1)
}

/// Builds ∼ from σ: for σ(i) = j,
/// l_i ∼ r_j (i, j > 0), r_{-i} ∼ l_{-j} (i, j < 0),
/// l_i ∼ l_{-j} (i > 0 > j) and r_{-i} ∼ r_j (i < 0 < j).
pub fn matching_from_sigma(sigma: &MonodromyCandidate) -> ChordMatching {
    let k = sigma.k();
    let mut partner = vec![usize::MAX; 2 * k];
    for i in crate::monodromy::symbols(k) {
        let j = sigma.apply(i);
        let (a, b) = match (i > 0, j > 0) {
            (true, true) => (Point::L(i as usize), Point::R(j as usize)),
            (false, false) => (Point::R((-i) as usize), Point::L((-j) as usize)),
            (true, false) => (Point::L(i as usize), Point::L((-j) as usize)),
            (false, true) => (Point::R((-i) as usize), Point::R(j as usize)),
        };
        let (a, b) = (a.index(k), b.index(k));
        debug_assert!(a != b, "candidates never relate a point to itself");
        debug_assert!(partner[a] == usize::MAX || partner[a] == b);
        partner[a] = b;
        partner[b] = a;
    }
    ChordMatching { k, partner }
}

/// The closed curves formed by the chords and the curves S_1, ..., S_k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveSystem {
    /// Each curve lists its boundary points in order, starting at its smallest
    /// point and leaving it along its chord.
    pub curves: Vec<Vec<Point>>,
}

impl CurveSystem {
    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }
}

pub fn closed_curves(matching: &ChordMatching) -> CurveSystem {
    let k = matching.k();
    let mut seen = vec![false; 2 * k];
    let mut curves = Vec::new();
    for x in 0..2 * k {
        if seen[x] {
            continue;
        }
        let start = Point::from_index(k, x);
        let mut curve = Vec::new();
        let mut p = start;
        loop {
            let q = matching.partner(p);
            curve.push(p);
            curve.push(q);
            seen[p.index(k)] = true;
            seen[q.index(k)] = true;
            p = q.s_partner(k);
            if p == start {
                break;
            }
        }
        curves.push(curve);
    }
    CurveSystem { curves }
}
