//! Vertex, edge and face orbits of a flag map.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::Flag;

macro_rules! cell_id {
    ($name:ident, $prefix:literal) => {
        #[derive(
            Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
        )]
        pub struct $name(pub usize);

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!($prefix, "{}"), self.0)
            }
        }
    };
}

cell_id!(VertexId, "v");
cell_id!(EdgeId, "e");
cell_id!(FaceId, "f");

/// An edge together with a direction of traversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrientedEdge {
    pub edge: EdgeId,
    pub tail: VertexId,
    pub head: VertexId,
}

/// Partition of the flags into cells. Cell ids are ordered by their smallest flag.
#[derive(Clone, Debug)]
pub struct Cells {
    vertex_of: Vec<usize>,
    edge_of: Vec<usize>,
    face_of: Vec<usize>,
    vertices: Vec<Vec<Flag>>,
    edges: Vec<Vec<Flag>>,
    faces: Vec<Vec<Flag>>,
}

fn orbits(a: &[Flag], b: &[Flag]) -> (Vec<usize>, Vec<Vec<Flag>>) {
    let n = a.len();
    let mut of = vec![usize::MAX; n];
    let mut lists = Vec::new();
    for start in 0..n {
        if of[start] != usize::MAX {
            continue;
        }
        let id = lists.len();
        let mut members = Vec::new();
        let mut stack = vec![start];
        of[start] = id;
        while let Some(x) = stack.pop() {
            members.push(x);
            for y in [a[x], b[x]] {
                if of[y] == usize::MAX {
                    of[y] = id;
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        lists.push(members);
    }
    (of, lists)
}

impl Cells {
    pub(crate) fn compute(inv: &[Vec<Flag>; 3]) -> Cells {
        let (vertex_of, vertices) = orbits(&inv[1], &inv[2]);
        let (edge_of, edges) = orbits(&inv[0], &inv[2]);
        let (face_of, faces) = orbits(&inv[0], &inv[1]);
        Cells {
            vertex_of,
            edge_of,
            face_of,
            vertices,
            edges,
            faces,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    #[inline]
    pub fn vertex_of(&self, x: Flag) -> VertexId {
        VertexId(self.vertex_of[x])
    }

    #[inline]
    pub fn edge_of(&self, x: Flag) -> EdgeId {
        EdgeId(self.edge_of[x])
    }

    #[inline]
    pub fn face_of(&self, x: Flag) -> FaceId {
        FaceId(self.face_of[x])
    }

    pub fn vertex_flags(&self, v: VertexId) -> &[Flag] {
        &self.vertices[v.0]
    }

    pub fn edge_flags(&self, e: EdgeId) -> &[Flag] {
        &self.edges[e.0]
    }

    pub fn face_flags(&self, f: FaceId) -> &[Flag] {
        &self.faces[f.0]
    }

    /// Number of edge-ends at `v` (a loop counts twice).
    pub fn degree(&self, v: VertexId) -> usize {
        self.vertices[v.0].len() / 2
    }

    /// Number of edge-sides on the boundary of `f`.
    pub fn face_size(&self, f: FaceId) -> usize {
        self.faces[f.0].len() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn faces(&self) -> impl Iterator<Item = FaceId> {
        (0..self.faces.len()).map(FaceId)
    }

    pub fn vertex_degrees(&self) -> Vec<usize> {
        self.vertices().map(|v| self.degree(v)).collect()
    }

    pub fn face_sizes(&self) -> Vec<usize> {
        self.faces().map(|f| self.face_size(f)).collect()
    }
}
