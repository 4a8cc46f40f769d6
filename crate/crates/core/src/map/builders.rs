//! Fixture maps built from lists of face boundary cycles.

use std::collections::BTreeMap;

use super::{Flag, FlagMap, MapError};

/// Builds a map from faces given as cyclic vertex sequences.
///
/// Every edge (an unordered vertex pair) must occur on exactly two face sides,
/// which may belong to the same face. Loops and parallel edges cannot be
/// expressed this way; use [`super::RotationBuilder`] for those. Face
/// orientations need not be coherent, so non-orientable surfaces are allowed.
/// Each vertex `v` receives the mark `v:<v>` on one of its flags.
pub fn from_polygons(faces: &[Vec<usize>]) -> Result<FlagMap, MapError> {
    // Side s of a face carries flag 2s at its start vertex and 2s+1 at its end.
    let mut sides: Vec<(usize, usize)> = Vec::new();
    let mut side_index: Vec<Vec<usize>> = Vec::new();
    for (f, cycle) in faces.iter().enumerate() {
        if cycle.len() < 2 {
            return Err(MapError::BadPolygons(format!(
                "face {f} has fewer than two vertices"
            )));
        }
        let mut idx = Vec::new();
        for j in 0..cycle.len() {
            let (u, w) = (cycle[j], cycle[(j + 1) % cycle.len()]);
            if u == w {
                return Err(MapError::BadPolygons(format!("face {f} contains a loop at {u}")));
            }
            idx.push(sides.len());
            sides.push((u, w));
        }
        side_index.push(idx);
    }
    let n = 2 * sides.len();
    let mut s0 = vec![usize::MAX; n];
    let mut s1 = vec![usize::MAX; n];
    let mut s2 = vec![usize::MAX; n];
    for s in 0..sides.len() {
        s0[2 * s] = 2 * s + 1;
        s0[2 * s + 1] = 2 * s;
    }
    for idx in &side_index {
        let m = idx.len();
        for j in 0..m {
            let end = 2 * idx[j] + 1;
            let start_next = 2 * idx[(j + 1) % m];
            s1[end] = start_next;
            s1[start_next] = end;
        }
    }
    let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (s, &(u, w)) in sides.iter().enumerate() {
        by_edge.entry((u.min(w), u.max(w))).or_default().push(s);
    }
    for (&(a, b), list) in &by_edge {
        if list.len() != 2 {
            return Err(MapError::BadPolygons(format!(
                "edge {a}-{b} lies on {} face sides instead of 2",
                list.len()
            )));
        }
        let flag_at = |s: usize, v: usize| -> Flag {
            if sides[s].0 == v {
                2 * s
            } else {
                2 * s + 1
            }
        };
        for v in [a, b] {
            let x = flag_at(list[0], v);
            let y = flag_at(list[1], v);
            s2[x] = y;
            s2[y] = x;
        }
    }
    let mut marks = BTreeMap::new();
    for (s, &(u, _)) in sides.iter().enumerate() {
        marks.entry(format!("v:{u}")).or_insert(2 * s);
    }
    FlagMap::with_marks(s0, s1, s2, marks)
}

/// The cube Q3 with vertices 1..8: 1234 and 5678 are opposite faces, i joined to i+4.
pub fn cube_map() -> FlagMap {
    from_polygons(&[
        vec![1, 2, 3, 4],
        vec![5, 6, 7, 8],
        vec![1, 2, 6, 5],
        vec![2, 3, 7, 6],
        vec![3, 4, 8, 7],
        vec![4, 1, 5, 8],
    ])
    .expect("cube fixture is valid")
}

/// The tetrahedron on vertices 1..4.
pub fn tetrahedron_map() -> FlagMap {
    from_polygons(&[vec![1, 2, 3], vec![1, 4, 2], vec![2, 4, 3], vec![1, 3, 4]])
        .expect("tetrahedron fixture is valid")
}

/// The octahedron with vertices 1..6, where 1/2, 3/4 and 5/6 are antipodal.
pub fn octahedron_map() -> FlagMap {
    let mut faces = Vec::new();
    for x in [1, 2] {
        for y in [3, 4] {
            for z in [5, 6] {
                faces.push(vec![x, y, z]);
            }
        }
    }
    from_polygons(&faces).expect("octahedron fixture is valid")
}

/// The n-gonal bipyramid BP_n: equator 1..n, apexes n+1 and n+2.
pub fn bipyramid_map(n: usize) -> Result<FlagMap, MapError> {
    if n < 3 {
        return Err(MapError::BadPolygons(format!(
            "bipyramid needs n >= 3, got {n}"
        )));
    }
    let (a, b) = (n + 1, n + 2);
    let mut faces = Vec::new();
    for i in 1..=n {
        let j = i % n + 1;
        faces.push(vec![a, i, j]);
        faces.push(vec![b, j, i]);
    }
    from_polygons(&faces)
}

/// K7 triangulating the torus (vertices 0..6).
pub fn k7_torus_map() -> FlagMap {
    let mut faces = Vec::new();
    for i in 0..7 {
        faces.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        faces.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    from_polygons(&faces).expect("K7 fixture is valid")
}

/// K6 triangulating the projective plane (vertices 0..5).
pub fn k6_projective_map() -> FlagMap {
    from_polygons(&[
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 4],
        vec![0, 4, 5],
        vec![0, 5, 1],
        vec![1, 2, 4],
        vec![2, 3, 5],
        vec![3, 4, 1],
        vec![4, 5, 2],
        vec![5, 1, 3],
    ])
    .expect("K6 fixture is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipyramid_counts() {
        for n in 3..=8 {
            let m = bipyramid_map(n).unwrap();
            assert_eq!(m.vertex_count(), n + 2);
            assert_eq!(m.edge_count(), 3 * n);
            assert_eq!(m.face_count(), 2 * n);
            assert!(m.is_orientable());
        }
        assert!(bipyramid_map(2).is_err());
    }

    #[test]
    fn cube_cells() {
        let m = cube_map();
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (8, 12, 6));
        assert!(m.cells().face_sizes().iter().all(|&s| s == 4));
        assert!(m.cells().vertex_degrees().iter().all(|&d| d == 3));
        assert!(m.labelled_vertex("7").is_some());
    }

    #[test]
    fn bad_polygons() {
        assert!(from_polygons(&[vec![1, 2, 3]]).is_err());
        assert!(from_polygons(&[vec![1, 1, 2]]).is_err());
    }
}
