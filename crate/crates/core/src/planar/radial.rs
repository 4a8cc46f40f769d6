//! Medial maps, chess colourings, radial maps and central circuits.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::map::{petrie_orbits, EdgeId, FaceId, Flag, FlagMap, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Color {
    B,
    W,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::B => Color::W,
            Color::W => Color::B,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RadialError {
    #[error("vertex {vertex} has degree {degree}; a 4-regular map is required")]
    NotFourRegular { vertex: VertexId, degree: usize },
    #[error("faces cannot be 2-coloured: edge {edge} has the same colour on both sides")]
    DualNotBipartite { edge: EdgeId },
}

/// A proper 2-colouring of the faces of a 4-regular map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChessColoring {
    colors: Vec<Color>,
}

impl ChessColoring {
    pub fn color(&self, f: FaceId) -> Color {
        self.colors[f.0]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn faces_of(&self, c: Color) -> impl Iterator<Item = FaceId> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter(move |(_, &x)| x == c)
            .map(|(i, _)| FaceId(i))
    }

    /// Swaps the two colours.
    pub fn flipped(&self) -> ChessColoring {
        ChessColoring {
            colors: self.colors.iter().map(|c| c.other()).collect(),
        }
    }
}

/// Colours the faces of a 4-regular map so that the two sides of every edge
/// differ, giving the face of `anchor` the colour `color`.
pub fn chess_coloring_with(
    m: &FlagMap,
    anchor: FaceId,
    color: Color,
) -> Result<ChessColoring, RadialError> {
    let c = m.cells();
    for v in c.vertices() {
        if c.degree(v) != 4 {
            return Err(RadialError::NotFourRegular {
                vertex: v,
                degree: c.degree(v),
            });
        }
    }
    let mut colors: Vec<Option<Color>> = vec![None; m.face_count()];
    colors[anchor.0] = Some(color);
    let mut stack = vec![anchor];
    while let Some(f) = stack.pop() {
        let cf = colors[f.0].unwrap();
        for &x in c.face_flags(f) {
            let g = c.face_of(m.s2(x));
            match colors[g.0] {
                None => {
                    colors[g.0] = Some(cf.other());
                    stack.push(g);
                }
                Some(cg) if cg == cf => {
                    return Err(RadialError::DualNotBipartite {
                        edge: c.edge_of(x),
                    })
                }
                Some(_) => {}
            }
        }
    }
    Ok(ChessColoring {
        colors: colors.into_iter().map(|c| c.expect("connected")).collect(),
    })
}

/// Chess colouring with face 0 coloured `B`.
pub fn chess_coloring(m: &FlagMap) -> Result<ChessColoring, RadialError> {
    chess_coloring_with(m, FaceId(0), Color::B)
}

/// A map extracted from a coloured 4-regular map together with the flag correspondence.
#[derive(Clone, Debug)]
pub struct Radial {
    pub map: FlagMap,
    /// Flag of the 4-regular map for each flag of the radial map.
    pub to_parent: Vec<Flag>,
    /// Inverse of `to_parent` where defined.
    pub from_parent: Vec<Option<Flag>>,
}

impl Radial {
    /// The vertex of the parent map corresponding to an edge of the radial map.
    pub fn parent_vertex_of_edge(&self, parent: &FlagMap, e: EdgeId) -> VertexId {
        let x = self.map.cells().edge_flags(e)[0];
        parent.cells().vertex_of(self.to_parent[x])
    }
}

/// The radial map R_c: one vertex per face of colour `c`, one edge per vertex
/// of the 4-regular map, one face per face of the other colour. Marks sitting
/// on flags of colour-`c` faces are carried over.
pub fn extract_radial(g: &FlagMap, coloring: &ChessColoring, c: Color) -> Radial {
    let n = g.flag_count();
    let mut from_parent = vec![None; n];
    let mut to_parent = Vec::new();
    for (x, slot) in from_parent.iter_mut().enumerate() {
        if coloring.color(g.cells().face_of(x)) == c {
            *slot = Some(to_parent.len());
            to_parent.push(x);
        }
    }
    let idx = |x: Flag| from_parent[x].expect("flag of the chosen colour");
    let s0: Vec<Flag> = to_parent.iter().map(|&x| idx(g.s2(g.s1(g.s2(x))))).collect();
    let s1: Vec<Flag> = to_parent.iter().map(|&x| idx(g.s0(x))).collect();
    let s2: Vec<Flag> = to_parent.iter().map(|&x| idx(g.s1(x))).collect();
    let marks: BTreeMap<String, Flag> = g
        .marks()
        .iter()
        .filter_map(|(k, &x)| from_parent[x].map(|y| (k.clone(), y)))
        .collect();
    let map = FlagMap::with_marks(s0, s1, s2, marks).expect("radial of a 4-regular map is valid");
    Radial {
        map,
        to_parent,
        from_parent,
    }
}

/// Medial map with its natural colouring (`B` on faces coming from vertices,
/// `W` on faces coming from faces). Flag `x` of the input becomes flags `x`
/// (in a `B` face) and `n + x` (in a `W` face). Marks stay on flag `x`.
pub fn medial(m: &FlagMap) -> (FlagMap, ChessColoring) {
    let n = m.flag_count();
    let mut s0 = vec![0; 2 * n];
    let mut s1 = vec![0; 2 * n];
    let mut s2 = vec![0; 2 * n];
    for x in 0..n {
        s0[x] = m.s1(x);
        s0[n + x] = n + m.s1(x);
        s1[x] = m.s2(x);
        s1[n + x] = n + m.s0(x);
        s2[x] = n + x;
        s2[n + x] = x;
    }
    let g = FlagMap::with_marks(s0, s1, s2, m.marks().clone()).expect("medial map is valid");
    let colors = (0..g.face_count())
        .map(|f| {
            if g.cells().face_flags(FaceId(f))[0] < n {
                Color::B
            } else {
                Color::W
            }
        })
        .collect();
    (g, ChessColoring { colors })
}

/// Canonical form of a cyclic sequence up to rotation and reversal.
pub(crate) fn canonical_cycle<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    let n = seq.len();
    let mut best: Option<Vec<T>> = None;
    let mut rev: Vec<T> = seq.to_vec();
    rev.reverse();
    for s in [seq.to_vec(), rev] {
        for r in 0..n {
            let cand: Vec<T> = s[r..].iter().chain(&s[..r]).cloned().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

fn minimal_period<T: PartialEq>(seq: &[T]) -> usize {
    let n = seq.len();
    (1..=n)
        .find(|&p| n.is_multiple_of(p) && (0..n).all(|i| seq[i] == seq[(i + p) % n]))
        .unwrap_or(n)
}

/// A central circuit: at every vertex it leaves along the edge opposite to
/// the one it arrived on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralCircuit {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

/// Central circuits of a 4-regular map, each listed once regardless of direction.
pub fn central_circuits(g: &FlagMap) -> Result<Vec<CentralCircuit>, RadialError> {
    let c = g.cells();
    for v in c.vertices() {
        if c.degree(v) != 4 {
            return Err(RadialError::NotFourRegular {
                vertex: v,
                degree: c.degree(v),
            });
        }
    }
    let step = |x: Flag| g.s0(g.s1(g.s2(g.s1(g.s2(x)))));
    let n = g.flag_count();
    let mut seen = vec![false; n];
    let mut found: BTreeMap<Vec<EdgeId>, CentralCircuit> = BTreeMap::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut flags = vec![start];
        seen[start] = true;
        let mut x = step(start);
        while x != start {
            seen[x] = true;
            flags.push(x);
            x = step(x);
        }
        // arrival flags: edge travelled is edge_of(x), vertex reached is vertex_of(x)
        let edges: Vec<EdgeId> = flags.iter().map(|&x| c.edge_of(x)).collect();
        let p = minimal_period(&edges);
        let edges = edges[..p].to_vec();
        let vertices: Vec<VertexId> = flags[..p].iter().map(|&x| c.vertex_of(x)).collect();
        found
            .entry(canonical_cycle(&edges))
            .or_insert(CentralCircuit { vertices, edges });
    }
    Ok(found.into_values().collect())
}

/// Checks that the zigzags of `R_b(g)` and the central circuits of `g`
/// coincide as unoriented cyclic sequences of vertices of `g`.
pub fn zigzags_match_central_circuits(g: &FlagMap, coloring: &ChessColoring) -> bool {
    let radial = extract_radial(g, coloring, Color::B);
    let circuits = match central_circuits(g) {
        Ok(c) => c,
        Err(_) => return false,
    };
    let mut from_circuits: Vec<Vec<VertexId>> = circuits
        .iter()
        .map(|c| canonical_cycle(&c.vertices))
        .collect();
    let mut from_zigzags: Vec<Vec<VertexId>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for z in petrie_orbits(&radial.map) {
        let edges = z.edges();
        let p = minimal_period(edges);
        let key = canonical_cycle(&edges[..p]);
        if !seen.insert(key) {
            continue;
        }
        let vs: Vec<VertexId> = edges[..p]
            .iter()
            .map(|&e| radial.parent_vertex_of_edge(g, e))
            .collect();
        from_zigzags.push(canonical_cycle(&vs));
    }
    from_circuits.sort();
    from_zigzags.sort();
    from_circuits == from_zigzags
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::*;

    #[test]
    fn medial_of_cube_is_cuboctahedron() {
        let (g, col) = medial(&cube_map());
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (12, 24, 14));
        assert_eq!(col.faces_of(Color::B).count(), 8);
        assert!(chess_coloring(&g).is_ok());
    }

    #[test]
    fn radials_of_medial() {
        for m in [cube_map(), bipyramid_map(3).unwrap(), tetrahedron_map()] {
            let (g, col) = medial(&m);
            let rb = extract_radial(&g, &col, Color::B);
            let rw = extract_radial(&g, &col, Color::W);
            assert!(is_isomorphic(&rb.map, &m));
            assert!(is_isomorphic(&rw.map, &m.dual()));
            assert!(zigzags_match_central_circuits(&g, &col));
        }
    }

    #[test]
    fn non_four_regular_rejected() {
        assert!(matches!(
            chess_coloring(&cube_map()),
            Err(RadialError::NotFourRegular { .. })
        ));
    }
}
