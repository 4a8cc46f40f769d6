//! Zigzags and z-monodromies checked against a walker that only knows the
//! faces as vertex cycles and never looks at flags.

use std::collections::{BTreeMap, BTreeSet};

use zmono_core::map::{
    bipyramid_map, cube_map, octahedron_map, petrie_orbits, tetrahedron_map,
    EdgeId, FaceId, FlagMap,
};
use zmono_core::monodromy::{z_monodromy, FaceFrame, SignedPerm};

type Edge = (usize, usize);

fn key(u: usize, v: usize) -> Edge {
    (u.min(v), u.max(v))
}

/// A polyhedral map described only by its face cycles.
struct Polygons {
    faces: Vec<Vec<usize>>,
    faces_of_edge: BTreeMap<Edge, Vec<usize>>,
}

/// Walk state: the directed edge u -> v and the face it shares with the
/// previous edge of the walk.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct State {
    face: usize,
    u: usize,
    v: usize,
}

impl Polygons {
    fn new(faces: Vec<Vec<usize>>) -> Self {
        let mut faces_of_edge: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
        for (f, cycle) in faces.iter().enumerate() {
            for j in 0..cycle.len() {
                let (u, v) = (cycle[j], cycle[(j + 1) % cycle.len()]);
                faces_of_edge.entry(key(u, v)).or_default().push(f);
            }
        }
        Polygons {
            faces,
            faces_of_edge,
        }
    }

    /// Cross to the other face of u -> v and leave v along its other edge there.
    fn step(&self, s: State) -> State {
        let pair = &self.faces_of_edge[&key(s.u, s.v)];
        let q = if pair[0] == s.face { pair[1] } else { pair[0] };
        let cycle = &self.faces[q];
        let n = cycle.len();
        let at = cycle.iter().position(|&x| x == s.v).unwrap();
        let (before, after) = (cycle[(at + n - 1) % n], cycle[(at + 1) % n]);
        let w = if before == s.u { after } else { before };
        State {
            face: q,
            u: s.v,
            v: w,
        }
    }

    /// Every zigzag as a cyclic sequence of edges, up to rotation and reversal.
    fn zigzags(&self) -> BTreeSet<Vec<Edge>> {
        let mut out = BTreeSet::new();
        for (f, cycle) in self.faces.iter().enumerate() {
            let n = cycle.len();
            for j in 0..n {
                for (u, v) in [(cycle[j], cycle[(j + 1) % n]), (cycle[(j + 1) % n], cycle[j])] {
                    let start = State { face: f, u, v };
                    let mut walk = vec![key(u, v)];
                    let mut s = self.step(start);
                    while s != start {
                        walk.push(key(s.u, s.v));
                        s = self.step(s);
                    }
                    out.insert(canonical(&walk));
                }
            }
        }
        out
    }

    /// M_F for the face cycle v_0 .. v_{k-1}, with e_i = v_{i-1} v_i.
    fn monodromy(&self, f: usize) -> SignedPerm {
        let cycle = &self.faces[f];
        let k = cycle.len();
        let vtx = |i: i64| cycle[i.rem_euclid(k as i64) as usize];
        let symbol = |u: usize, v: usize| -> Option<i32> {
            (1..=k as i64).find_map(|j| {
                if (u, v) == (vtx(j - 1), vtx(j)) {
                    Some(j as i32)
                } else if (u, v) == (vtx(j), vtx(j - 1)) {
                    Some(-(j as i32))
                } else {
                    None
                }
            })
        };
        SignedPerm::from_fn(k, |e| {
            let i = e.unsigned_abs() as i64;
            let (u, v) = if e > 0 { (vtx(i - 1), vtx(i)) } else { (vtx(i), vtx(i - 1)) };
            let mut s = self.step(State { face: f, u, v });
            loop {
                if let Some(x) = symbol(s.u, s.v) {
                    return x;
                }
                s = self.step(s);
            }
        })
        .expect("walker monodromy is a bijection")
    }
}

fn minimal_period<T: PartialEq>(seq: &[T]) -> usize {
    let n = seq.len();
    (1..=n)
        .find(|&p| n.is_multiple_of(p) && (0..n).all(|i| seq[i] == seq[(i + p) % n]))
        .unwrap()
}

fn canonical(walk: &[Edge]) -> Vec<Edge> {
    let walk = &walk[..minimal_period(walk)];
    let n = walk.len();
    let mut best: Option<Vec<Edge>> = None;
    for seq in [walk.to_vec(), walk.iter().rev().copied().collect()] {
        for s in 0..n {
            let rot: Vec<Edge> = (0..n).map(|i| seq[(i + s) % n]).collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap()
}

fn label(m: &FlagMap, v: zmono_core::map::VertexId) -> usize {
    m.vertex_label(v).unwrap().parse().unwrap()
}

fn edge_key(m: &FlagMap, e: EdgeId) -> Edge {
    let (a, b) = m.edge_ends(m.cells().edge_flags(e)[0]);
    key(label(m, a), label(m, b))
}

fn map_zigzags(m: &FlagMap) -> BTreeSet<Vec<Edge>> {
    petrie_orbits(m)
        .iter()
        .map(|z| {
            let walk: Vec<Edge> = z.edges().iter().map(|&e| edge_key(m, e)).collect();
            canonical(&walk)
        })
        .collect()
}

fn cube_faces() -> Vec<Vec<usize>> {
    vec![
        vec![1, 2, 3, 4],
        vec![5, 6, 7, 8],
        vec![1, 2, 6, 5],
        vec![2, 3, 7, 6],
        vec![3, 4, 8, 7],
        vec![4, 1, 5, 8],
    ]
}

fn tetrahedron_faces() -> Vec<Vec<usize>> {
    vec![vec![1, 2, 3], vec![1, 4, 2], vec![2, 4, 3], vec![1, 3, 4]]
}

fn octahedron_faces() -> Vec<Vec<usize>> {
    let mut faces = Vec::new();
    for x in [1, 2] {
        for y in [3, 4] {
            for z in [5, 6] {
                faces.push(vec![x, y, z]);
            }
        }
    }
    faces
}

fn bipyramid_faces(n: usize) -> Vec<Vec<usize>> {
    let (a, b) = (n + 1, n + 2);
    let mut faces = Vec::new();
    for i in 1..=n {
        let j = i % n + 1;
        faces.push(vec![a, i, j]);
        faces.push(vec![b, j, i]);
    }
    faces
}

fn fixtures() -> Vec<(&'static str, Vec<Vec<usize>>, FlagMap)> {
    let mut out = vec![
        ("cube", cube_faces(), cube_map()),
        ("tetrahedron", tetrahedron_faces(), tetrahedron_map()),
        ("octahedron", octahedron_faces(), octahedron_map()),
    ];
    for n in [3, 4, 5, 6] {
        out.push(("bipyramid", bipyramid_faces(n), bipyramid_map(n).unwrap()));
    }
    out
}

/// The face of `m` whose vertex labels are those of `cycle`.
fn face_with(m: &FlagMap, cycle: &[usize]) -> FaceId {
    let want: BTreeSet<usize> = cycle.iter().copied().collect();
    let c = m.cells();
    c.faces()
        .find(|&f| {
            let have: BTreeSet<usize> =
                c.face_flags(f).iter().map(|&x| label(m, c.vertex_of(x))).collect();
            have == want
        })
        .unwrap()
}

/// The frame with e_1 = cycle[0] -> cycle[1], matching the walker's labelling.
fn frame_for(m: &FlagMap, cycle: &[usize]) -> FaceFrame {
    let face = face_with(m, cycle);
    let c = m.cells();
    let edge = c.edges().find(|&e| edge_key(m, e) == key(cycle[0], cycle[1])).unwrap();
    let tail = c.vertices().find(|&v| label(m, v) == cycle[0]).unwrap();
    FaceFrame::new(m, face, edge, tail).unwrap()
}

#[test]
fn zigzags_agree_with_the_walker() {
    for (name, faces, m) in fixtures() {
        let walker = Polygons::new(faces);
        assert_eq!(map_zigzags(&m), walker.zigzags(), "{name}");
    }
}

#[test]
fn from_polygons_preserves_the_face_cycles() {
    for (name, faces, m) in fixtures() {
        assert_eq!(m.face_count(), faces.len(), "{name}");
        for cycle in &faces {
            let f = face_with(&m, cycle);
            assert_eq!(m.cells().face_size(f), cycle.len(), "{name}");
        }
    }
}

#[test]
fn tetrahedron_monodromy_matches_the_walker() {
    let m = tetrahedron_map();
    let walker = Polygons::new(tetrahedron_faces());
    for (f, cycle) in tetrahedron_faces().iter().enumerate() {
        let frame = frame_for(&m, cycle);
        assert_eq!(z_monodromy(&m, &frame).unwrap(), walker.monodromy(f), "face {cycle:?}");
    }
}

#[test]
fn every_fixture_monodromy_matches_the_walker() {
    for (name, faces, m) in fixtures() {
        let walker = Polygons::new(faces.clone());
        for (f, cycle) in faces.iter().enumerate() {
            let frame = frame_for(&m, cycle);
            assert_eq!(
                z_monodromy(&m, &frame).unwrap(),
                walker.monodromy(f),
                "{name} face {cycle:?}"
            );
            let mut reversed = cycle.clone();
            reversed.reverse();
            let frame = frame_for(&m, &reversed);
            let walker = Polygons::new(
                faces
                    .iter()
                    .enumerate()
                    .map(|(g, c)| if g == f { reversed.clone() } else { c.clone() })
                    .collect(),
            );
            assert_eq!(
                z_monodromy(&m, &frame).unwrap(),
                walker.monodromy(f),
                "{name} face {reversed:?}"
            );
        }
    }
}
