//! The 4-regular plane map G assembled from the outer circle, the spokes and the chords.
//!
//! Vertices are p_1..p_k on the outer circle C, a_1..a_k (a_i stands for
//! a_{i,i+1}) on the middle circle C', and the chord crossings. Segment
//! p_i–l_i and segment p_{i+1}–r_{i+1} cross at a_i; the chord leaving l_i
//! therefore starts at a_i and the chord leaving r_j starts at a_{j-1}.

use serde::Serialize;
use thiserror::Error;

use crate::map::{Dart, FaceId, FlagMap, MapError, RotationSystem, Side, VertexId};
use crate::monodromy::MonodromyCandidate;

use super::arrangement::{arrange_chords, cross_sign, sub_coords, to_f64, Arrangement};
use super::matching::{closed_curves, matching_from_sigma, ChordMatching, CurveSystem, Point};
use super::radial::{chess_coloring_with, ChessColoring, Color, RadialError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AssemblyError {
    #[error("internal degeneracy: {0}")]
    InternalDegeneracy(String),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Radial(#[from] RadialError),
}

/// Role of a vertex of G in the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VertexRole {
    /// p_i on the outer circle.
    P(usize),
    /// a_{i,i+1} on the middle circle.
    A(usize),
    /// Crossing of two chords (indices into the arrangement).
    Crossing(usize),
}

/// Mark names used on G and on the maps derived from it.
pub mod marks {
    /// Flag in the face of G bounded by p_1, a_12, p_2.
    pub const B_FACE: &str = "b_face";
    /// Flag in the outer face of G.
    pub const OUTER: &str = "outer";
    /// Base of the frame of the protected face.
    pub const E1: &str = "e1";
    /// Any flag of the protected face.
    pub const FACE_F: &str = "face_F";

    pub fn p(i: usize) -> String {
        format!("p{i}")
    }

    pub fn a(k: usize, i: usize) -> String {
        format!("a{}{}", i, i % k + 1)
    }
}

/// The plane 4-regular map of the construction with its chess colouring.
#[derive(Clone, Debug)]
pub struct MarkedQuadMap {
    pub k: usize,
    pub map: FlagMap,
    pub coloring: ChessColoring,
    pub outer_face: FaceId,
    /// Role of each vertex, indexed by vertex id.
    pub roles: Vec<VertexRole>,
    /// Drawing coordinates of each vertex, indexed by vertex id.
    pub coords: Vec<(f64, f64)>,
    /// Drawn shape of each edge, indexed by edge id: a polyline starting at
    /// the vertex `edge_paths[e].0`.
    pub edge_paths: Vec<(VertexId, Vec<(f64, f64)>)>,
    pub matching: ChordMatching,
    pub curves: CurveSystem,
    pub arrangement: Arrangement,
}

/// Radii of the circles C, C', C'' in drawing units.
pub const RADIUS_C: f64 = 3.0;
pub const RADIUS_C1: f64 = 2.25;
pub const RADIUS_C2: f64 = 1.5;

/// Points per drawn arc of C.
const ARC_SAMPLES: usize = 12;

fn polar(r: f64, deg: f64) -> (f64, f64) {
    let t = deg.to_radians();
    (r * t.cos(), r * t.sin())
}

/// Angle of p_i in degrees; the p_i run clockwise starting at 90° - 180°/k.
pub fn p_angle(k: usize, i: usize) -> f64 {
    90.0 - 180.0 / k as f64 - (i as f64 - 1.0) * 360.0 / k as f64
}

/// Angle of a_{i,i+1}, halfway between p_i and p_{i+1}.
pub fn a_angle(k: usize, i: usize) -> f64 {
    p_angle(k, i) - 180.0 / k as f64
}

/// Builds G from σ with the arrangement drawn for `seed`.
pub fn assemble_quad_map(sigma: &MonodromyCandidate, seed: u64) -> Result<MarkedQuadMap, AssemblyError> {
    let k = sigma.k();
    let matching = matching_from_sigma(sigma);
    let curves = closed_curves(&matching);
    let arrangement = arrange_chords(&matching, seed);

    let mut r = RotationSystem::new();
    let p: Vec<usize> = (0..k).map(|_| r.add_vertex()).collect();
    let a: Vec<usize> = (0..k).map(|_| r.add_vertex()).collect();
    let x: Vec<usize> = (0..arrangement.crossing_count()).map(|_| r.add_vertex()).collect();

    // arcs p_i -> p_{i+1}
    let mut arc_out = vec![0; k];
    let mut arc_in = vec![0; k];
    // spokes p_i - a_i and p_{i+1} - a_i
    let mut pa_left = vec![0; k];
    let mut ap_left = vec![0; k];
    let mut pa_right = vec![0; k];
    let mut ap_right = vec![0; k];
    for i in 0..k {
        let j = (i + 1) % k;
        (arc_out[i], arc_in[i]) = r.add_edge(p[i], p[j]);
        (pa_left[i], ap_left[i]) = r.add_edge(p[i], a[i]);
        (pa_right[i], ap_right[i]) = r.add_edge(p[j], a[i]);
    }

    let a_of = |pt: Point| -> usize {
        match pt {
            Point::L(i) => a[i - 1],
            Point::R(j) => a[(j + k - 2) % k],
        }
    };
    let boundary_xy = |pt: Point| -> (f64, f64) {
        let (px, py) = to_f64(arrangement.point(pt));
        (px * RADIUS_C2, py * RADIUS_C2)
    };
    let crossing_xy = |c: usize| -> (f64, f64) {
        let (px, py) = to_f64(&arrangement.crossings[c].point);
        (px * RADIUS_C2, py * RADIUS_C2)
    };
    // drawn shape of each dart's edge, starting at the dart's origin
    let mut paths: Vec<(Dart, Vec<(f64, f64)>)> = Vec::new();
    for i in 0..k {
        let (from, to) = (p_angle(k, i + 1), p_angle(k, i + 1) - 360.0 / k as f64);
        let arc = (0..=ARC_SAMPLES)
            .map(|s| polar(RADIUS_C, from + (to - from) * s as f64 / ARC_SAMPLES as f64))
            .collect();
        paths.push((arc_out[i], arc));
        let a_xy = polar(RADIUS_C1, a_angle(k, i + 1));
        paths.push((pa_left[i], vec![polar(RADIUS_C, p_angle(k, i + 1)), a_xy]));
        paths.push((pa_right[i], vec![polar(RADIUS_C, to), a_xy]));
    }
    let a_xy = |pt: Point| -> (f64, f64) {
        let i = match pt {
            Point::L(i) => i,
            Point::R(j) => (j + k - 2) % k + 1,
        };
        polar(RADIUS_C1, a_angle(k, i))
    };
    // dart at a(pt) starting the chord through pt
    let mut strand = vec![usize::MAX; 2 * k];
    // per crossing: darts towards (Q1, P1, Q2, P2) of its two chords
    let mut at_crossing: Vec<[Dart; 4]> = vec![[usize::MAX; 4]; x.len()];
    for (ci, chord) in arrangement.chords.iter().enumerate() {
        let (from, to) = chord.ends;
        let mut nodes = vec![a_of(from)];
        nodes.extend(chord.crossings.iter().map(|&c| x[c]));
        nodes.push(a_of(to));
        let mut points = vec![a_xy(from), boundary_xy(from)];
        points.extend(chord.crossings.iter().map(|&c| crossing_xy(c)));
        points.push(boundary_xy(to));
        points.push(a_xy(to));
        for s in 0..nodes.len() - 1 {
            let (d_fwd, d_back) = r.add_edge(nodes[s], nodes[s + 1]);
            // nodes[s] is drawn at points[s + 1], or at points[0] for the first node
            let start = if s == 0 { 0 } else { s + 1 };
            let end = if s == nodes.len() - 2 { points.len() } else { s + 3 };
            paths.push((d_fwd, points[start..end].to_vec()));
            if s == 0 {
                strand[from.index(k)] = d_fwd;
            } else {
                let c = chord.crossings[s - 1];
                let slot = if arrangement.crossings[c].chords.0 == ci { 0 } else { 2 };
                at_crossing[c][slot] = d_fwd;
            }
            if s == nodes.len() - 2 {
                strand[to.index(k)] = d_back;
            } else {
                let c = chord.crossings[s];
                let slot = if arrangement.crossings[c].chords.0 == ci { 1 } else { 3 };
                at_crossing[c][slot] = d_back;
            }
        }
    }

    for i in 0..k {
        let prev = (i + k - 1) % k;
        r.set_rotation_cw(p[i], vec![arc_out[i], pa_left[i], pa_right[prev], arc_in[prev]]);
        let l_i = strand[Point::L(i + 1).index(k)];
        let r_next = strand[Point::R((i + 1) % k + 1).index(k)];
        r.set_rotation_cw(a[i], vec![ap_right[i], l_i, r_next, ap_left[i]]);
    }
    for (c, cr) in arrangement.crossings.iter().enumerate() {
        let [q1, p1, q2, p2] = at_crossing[c];
        let c1 = &arrangement.chords[cr.chords.0];
        let c2 = &arrangement.chords[cr.chords.1];
        let d1 = sub_coords(arrangement.point(c1.ends.1), arrangement.point(c1.ends.0));
        let d2 = sub_coords(arrangement.point(c2.ends.1), arrangement.point(c2.ends.0));
        let rot = match cross_sign(&d1, &d2) {
            1 => vec![q1, p2, p1, q2],
            -1 => vec![q1, q2, p1, p2],
            _ => {
                return Err(AssemblyError::InternalDegeneracy(format!(
                    "crossing {c} of parallel chords"
                )))
            }
        };
        r.set_rotation_cw(x[c], rot);
    }

    for i in 0..k {
        r.set_mark(marks::p(i + 1), arc_out[i], Side::Plus);
        r.set_mark(marks::a(k, i + 1), ap_right[i], Side::Plus);
    }
    r.set_mark(marks::B_FACE, arc_out[0], Side::Plus);
    r.set_mark(marks::OUTER, arc_in[k - 1], Side::Plus);
    r.set_mark(marks::E1, arc_in[k - 1], Side::Minus);

    let (map, index) = r.to_flag_map_indexed()?;
    let cells = map.cells();
    let vertex_of_rot = |v: usize| -> VertexId {
        let d = r.rotation(v)[0];
        cells.vertex_of(RotationSystem::flag(index[d], Side::Plus))
    };
    let mut roles = vec![VertexRole::P(0); map.vertex_count()];
    let mut coords = vec![(0.0, 0.0); map.vertex_count()];
    for i in 0..k {
        let vp = vertex_of_rot(p[i]);
        roles[vp.0] = VertexRole::P(i + 1);
        coords[vp.0] = polar(RADIUS_C, p_angle(k, i + 1));
        let va = vertex_of_rot(a[i]);
        roles[va.0] = VertexRole::A(i + 1);
        coords[va.0] = polar(RADIUS_C1, a_angle(k, i + 1));
    }
    for (c, cr) in arrangement.crossings.iter().enumerate() {
        let v = vertex_of_rot(x[c]);
        roles[v.0] = VertexRole::Crossing(c);
        let (px, py) = to_f64(&cr.point);
        coords[v.0] = (px * RADIUS_C2, py * RADIUS_C2);
    }

    let mut edge_paths = vec![(VertexId(0), Vec::new()); map.edge_count()];
    for (d, path) in paths {
        let x = RotationSystem::flag(index[d], Side::Plus);
        edge_paths[cells.edge_of(x).0] = (cells.vertex_of(x), path);
    }

    let quad = finish(k, map, roles, coords, edge_paths, (matching, curves, arrangement))?;
    Ok(quad)
}

fn finish(
    k: usize,
    map: FlagMap,
    roles: Vec<VertexRole>,
    coords: Vec<(f64, f64)>,
    edge_paths: Vec<(VertexId, Vec<(f64, f64)>)>,
    (matching, curves, arrangement): (ChordMatching, CurveSystem, Arrangement),
) -> Result<MarkedQuadMap, AssemblyError> {
    let c = map.cells();
    let b_face = c.face_of(map.mark(marks::B_FACE).expect("mark set"));
    let outer_face = c.face_of(map.mark(marks::OUTER).expect("mark set"));
    let coloring = chess_coloring_with(&map, b_face, Color::B)?;
    let degeneracy = |msg: String| Err(AssemblyError::InternalDegeneracy(msg));
    if map.euler_characteristic() != 2 {
        return degeneracy(format!("Euler characteristic {}", map.euler_characteristic()));
    }
    if map.vertex_count() != 2 * k + arrangement.crossing_count() {
        return degeneracy(format!("unexpected vertex count {}", map.vertex_count()));
    }
    if coloring.color(outer_face) != Color::W {
        return degeneracy("outer face is not coloured w".to_string());
    }
    if c.face_size(outer_face) != k {
        return degeneracy(format!("outer face has {} sides", c.face_size(outer_face)));
    }
    for i in 1..=k {
        let x = map.mark(&marks::p(i)).expect("mark set");
        let f = c.face_of(x);
        if coloring.color(f) != Color::B || c.face_size(f) != 3 {
            return degeneracy(format!("face at p{i} is not a b-coloured triangle"));
        }
    }
    Ok(MarkedQuadMap {
        k,
        map,
        coloring,
        outer_face,
        roles,
        coords,
        edge_paths,
        matching,
        curves,
        arrangement,
    })
}

impl MarkedQuadMap {
    pub fn vertex_with_role(&self, role: VertexRole) -> Option<VertexId> {
        self.roles.iter().position(|&r| r == role).map(VertexId)
    }
}
