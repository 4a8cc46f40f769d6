//! Borromean rings drawn across an edge of a chess-coloured 4-regular map.
//!
//! The edge e runs from L to R with the w face F1 on its right and the b face
//! F2 on its left; it is subdivided as L, e1, e2, e3, e4, R. Three circles
//! are added, each listed in counter-clockwise order of its crossings:
//!
//! * B1: I12, I13, O12, e1, O13, e3,
//! * B2: O12, I23, I12, O23,
//! * B3: e4, O23, I13, I23, e2, O13.
//!
//! Every pair of circles crosses twice (I and O) and B1, B3 cross e twice.

use crate::map::{Dart, EdgeId, FaceId, Flag, FlagMap, RotationSystem, Side};
use crate::planar::{chess_coloring_with, ChessColoring, Color};

use super::SurfaceError;

/// The augmented map with its colouring.
#[derive(Clone, Debug)]
pub struct Augmented {
    pub map: FlagMap,
    pub coloring: ChessColoring,
    /// The edge that was crossed, in the input numbering.
    pub edge: EdgeId,
    /// A flag in a b face of `map` whose face in the radial map R_b is the
    /// triangle T of the gadget.
    pub triangle_flag: Flag,
}

/// The lowest edge separating a w face other than `protected` from a b face.
pub fn eligible_edge(
    g: &FlagMap,
    coloring: &ChessColoring,
    protected: FaceId,
) -> Option<EdgeId> {
    let c = g.cells();
    c.edges().find(|&e| {
        let faces: Vec<FaceId> = c.edge_flags(e).iter().map(|&x| c.face_of(x)).collect();
        let w = faces.iter().any(|&f| coloring.color(f) == Color::W && f != protected);
        let b = faces.iter().any(|&f| coloring.color(f) == Color::B);
        w && b && !faces.contains(&protected)
    })
}

#[derive(Clone, Copy)]
struct Arc {
    fwd: Dart,
    back: Dart,
}

/// Adds the circle through `vs` (in order) and returns, per vertex, the dart
/// leaving forwards and the dart leaving backwards.
fn circle(r: &mut RotationSystem, vs: &[usize]) -> Vec<Arc> {
    let n = vs.len();
    let mut fwd = vec![0; n];
    let mut back = vec![0; n];
    for i in 0..n {
        let (a, b) = r.add_edge(vs[i], vs[(i + 1) % n]);
        fwd[i] = a;
        back[(i + 1) % n] = b;
    }
    (0..n)
        .map(|i| Arc {
            fwd: fwd[i],
            back: back[i],
        })
        .collect()
}

/// Inserts the rings across `edge`, which must separate a w face other than
/// `protected` from a b face. The result is 4-regular with ten more vertices.
pub fn borromean_augment(
    g: &FlagMap,
    coloring: &ChessColoring,
    protected: FaceId,
    edge: Option<EdgeId>,
) -> Result<Augmented, SurfaceError> {
    let edge = match edge {
        Some(e) => e,
        None => eligible_edge(g, coloring, protected).ok_or(SurfaceError::NoEligibleEdge)?,
    };
    let c = g.cells();
    let x = c
        .edge_flags(edge)
        .iter()
        .copied()
        .find(|&x| {
            let f = c.face_of(x);
            coloring.color(f) == Color::W && f != protected
        })
        .ok_or(SurfaceError::NoEligibleEdge)?;
    if c
        .edge_flags(edge)
        .iter()
        .any(|&y| c.face_of(y) == protected)
    {
        return Err(SurfaceError::NoEligibleEdge);
    }
    let b_flag = c
        .edge_flags(edge)
        .iter()
        .copied()
        .find(|&y| coloring.color(c.face_of(y)) == Color::B)
        .ok_or(SurfaceError::NoEligibleEdge)?;

    let mut r = RotationSystem::from_flag_map(g)?;
    let (d, side) = g.dart_side(x).ok_or(crate::map::MapError::NonOrientable)?;
    let d_l = match side {
        Side::Plus => d,
        Side::Minus => r.twin(d),
    };
    let d_r = r.twin(d_l);
    let (l, rv) = (r.origin(d_l), r.origin(d_r));
    // anchor for the colouring, away from the edge being replaced
    let (bd, bs) = g.dart_side(b_flag).expect("orientable");
    let anchor_dart = match bs {
        Side::Plus => r.next(bd),
        Side::Minus => r.prev(bd),
    };
    let anchor_side = match bs {
        Side::Plus => Side::Minus,
        Side::Minus => Side::Plus,
    };

    let [i12, i13, i23, o12, o13, o23, e1, e2, e3, e4] = [(); 10].map(|_| r.add_vertex());
    let path = [l, e1, e2, e3, e4, rv];
    let mut e_fwd = [0; 6];
    let mut e_back = [0; 6];
    for i in 0..5 {
        let (a, b) = r.add_edge(path[i], path[i + 1]);
        e_fwd[i] = a;
        e_back[i + 1] = b;
    }
    r.replace_in_rotation(d_l, &[e_fwd[0]]);
    r.replace_in_rotation(d_r, &[e_back[5]]);
    r.remove_edge(d_l);

    let b1 = circle(&mut r, &[i12, i13, o12, e1, o13, e3]);
    let b2 = circle(&mut r, &[o12, i23, i12, o23]);
    let b3 = circle(&mut r, &[e4, o23, i13, i23, e2, o13]);
    let (b1_i12, b1_i13, b1_o12, b1_e1, b1_o13, b1_e3) = (b1[0], b1[1], b1[2], b1[3], b1[4], b1[5]);
    let (b2_o12, b2_i23, b2_i12, b2_o23) = (b2[0], b2[1], b2[2], b2[3]);
    let (b3_e4, b3_o23, b3_i13, b3_i23, b3_e2, b3_o13) = (b3[0], b3[1], b3[2], b3[3], b3[4], b3[5]);

    r.set_rotation_ccw(i12, vec![b2_i12.fwd, b1_i12.fwd, b2_i12.back, b1_i12.back]);
    r.set_rotation_ccw(i13, vec![b3_i13.back, b1_i13.fwd, b3_i13.fwd, b1_i13.back]);
    r.set_rotation_ccw(i23, vec![b3_i23.back, b2_i23.back, b3_i23.fwd, b2_i23.fwd]);
    r.set_rotation_ccw(o12, vec![b1_o12.back, b2_o12.back, b1_o12.fwd, b2_o12.fwd]);
    r.set_rotation_ccw(o23, vec![b2_o23.fwd, b3_o23.fwd, b2_o23.back, b3_o23.back]);
    r.set_rotation_ccw(o13, vec![b1_o13.fwd, b3_o13.back, b1_o13.back, b3_o13.fwd]);
    r.set_rotation_ccw(e1, vec![b1_e1.back, e_back[1], b1_e1.fwd, e_fwd[1]]);
    r.set_rotation_ccw(e2, vec![b3_e2.back, e_back[2], b3_e2.fwd, e_fwd[2]]);
    r.set_rotation_ccw(e3, vec![e_fwd[3], b1_e3.fwd, e_back[3], b1_e3.back]);
    r.set_rotation_ccw(e4, vec![e_fwd[4], b3_e4.fwd, e_back[4], b3_e4.back]);

    let anchor_name = "__augment_anchor";
    r.set_mark(anchor_name, anchor_dart, anchor_side);
    let (map, index) = r.to_flag_map_indexed()?;
    let anchor_flag = map.mark(anchor_name).expect("anchor survives");
    let mut marks = map.marks().clone();
    marks.remove(anchor_name);
    let map = map.replace_marks(marks)?;
    let anchor = map.cells().face_of(anchor_flag);
    let coloring = chess_coloring_with(&map, anchor, Color::B)
        .map_err(|e| SurfaceError::PatchContractViolation(e.to_string()))?;

    let new_vertex = |v: usize| [i12, i13, i23, o12, o13, o23, e1, e2, e3, e4].contains(&v);
    let mc = map.cells();
    let rot_vertex_of = |f: Flag| -> Option<usize> {
        // flags 2i and 2i+1 belong to the dart with new index i
        let dart = index.iter().position(|&i| i == f / 2)?;
        Some(r.origin(dart))
    };
    let all_new = |face: FaceId| -> bool {
        mc.face_flags(face)
            .iter()
            .all(|&y| rot_vertex_of(y).is_some_and(new_vertex))
    };
    let ring_only = |face: FaceId| -> bool {
        mc.face_flags(face).iter().all(|&y| {
            rot_vertex_of(y).is_some_and(|v| [i12, i13, i23, o12, o13, o23].contains(&v))
        })
    };
    let mut triangles = mc.faces().filter(|&f| {
        coloring.color(f) == Color::W
            && mc.face_size(f) == 3
            && ring_only(f)
            && mc
                .face_flags(f)
                .iter()
                .all(|&y| all_new(mc.face_of(map.s2(y))))
    });
    let t = triangles.next().ok_or_else(|| {
        SurfaceError::PatchContractViolation("gadget has no isolated triangle".into())
    })?;
    if triangles.next().is_some() {
        return Err(SurfaceError::PatchContractViolation(
            "gadget has several isolated triangles".into(),
        ));
    }
    let triangle_flag = map.s2(mc.face_flags(t)[0]);
    Ok(Augmented {
        map,
        coloring,
        edge,
        triangle_flag,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::{is_isomorphic, tetrahedron_map};
    use crate::planar::{central_circuits, extract_radial, medial};

    /// The gadget drawn directly on the radial map: five new vertices placed
    /// in a corner at vertex `v` of the tetrahedron.
    fn radial_oracle() -> FlagMap {
        let mut r = RotationSystem::from_flag_map(&tetrahedron_map()).unwrap();
        let d = r.rotation(0)[0];
        let v = r.origin(d);
        let [x2, x3, x4, x5, x6] = [(); 5].map(|_| r.add_vertex());
        let (v_x2, x2_v) = r.add_edge(v, x2);
        let (v_x3, x3_v) = r.add_edge(v, x3);
        let (v_x4, x4_v) = r.add_edge(v, x4);
        let (v_x6, x6_v) = r.add_edge(v, x6);
        let (x2_x3, x3_x2) = r.add_edge(x2, x3);
        let (x5_x2, x2_x5) = r.add_edge(x5, x2);
        let (x5_x3, x3_x5) = r.add_edge(x5, x3);
        let (x5_x4, x4_x5) = r.add_edge(x5, x4);
        let (x5_x6, x6_x5) = r.add_edge(x5, x6);
        let (x4_x6, x6_x4) = r.add_edge(x4, x6);
        r.insert_after(d, &[v_x6, v_x3, v_x2, v_x4]);
        r.set_rotation_ccw(x2, vec![x2_x3, x2_v, x2_x5]);
        r.set_rotation_ccw(x3, vec![x3_v, x3_x2, x3_x5]);
        r.set_rotation_ccw(x5, vec![x5_x3, x5_x2, x5_x4, x5_x6]);
        r.set_rotation_ccw(x4, vec![x4_x6, x4_x5, x4_v]);
        r.set_rotation_ccw(x6, vec![x6_v, x6_x5, x6_x4]);
        r.to_flag_map().unwrap()
    }

    fn augmented_tetrahedron() -> (FlagMap, Augmented) {
        let (g, coloring) = medial(&tetrahedron_map());
        let protected = coloring.faces_of(Color::W).next().unwrap();
        let aug = borromean_augment(&g, &coloring, protected, None).unwrap();
        (g, aug)
    }

    #[test]
    fn adds_ten_crossings_and_three_circuits() {
        let (g, aug) = augmented_tetrahedron();
        let m = &aug.map;
        assert_eq!(m.vertex_count(), g.vertex_count() + 10);
        assert!(m.cells().vertex_degrees().iter().all(|&d| d == 4));
        assert_eq!(m.euler_characteristic(), 2);
        let before = central_circuits(&g).unwrap().len();
        assert_eq!(central_circuits(m).unwrap().len(), before + 3);
    }

    #[test]
    fn triangle_is_isolated_from_the_crossed_circuit() {
        let (_, aug) = augmented_tetrahedron();
        let radial = extract_radial(&aug.map, &aug.coloring, Color::B);
        let m = &radial.map;
        assert!(m.satisfies_ss());
        let t = m.cells().face_of(radial.from_parent[aug.triangle_flag].unwrap());
        assert_eq!(m.cells().face_size(t), 3);
    }

    #[test]
    fn matches_the_gadget_drawn_on_the_radial_map() {
        let oracle = radial_oracle();
        assert_eq!(oracle.euler_characteristic(), 2);
        assert_eq!(oracle.vertex_count(), 9);
        let (_, aug) = augmented_tetrahedron();
        let radial = extract_radial(&aug.map, &aug.coloring, Color::B);
        assert!(is_isomorphic(&radial.map, &oracle));
    }
}
