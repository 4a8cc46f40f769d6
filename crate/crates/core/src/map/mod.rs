//! Maps on closed surfaces encoded as flag systems (gems).
//!
//! A map is a set of flags together with three fixed-point-free involutions:
//! `s0` changes the vertex, `s1` changes the edge and `s2` changes the face of
//! a flag while keeping the other two cells. Vertices, edges and faces are the
//! orbits of `<s1, s2>`, `<s0, s2>` and `<s0, s1>` respectively. The encoding
//! is uniform for orientable and non-orientable surfaces and makes duality a
//! swap of `s0` and `s2`.

mod builders;
mod cells;
mod io;
mod iso;
mod rotation;
mod simple;
mod zigzag;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use builders::{
    bipyramid_map, cube_map, from_polygons, k6_projective_map, k7_torus_map, octahedron_map,
    tetrahedron_map,
};
pub use cells::{Cells, EdgeId, FaceId, OrientedEdge, VertexId};
pub use io::{MapFile, MapFileError};
pub use iso::{find_isomorphism, is_isomorphic};
pub use rotation::{Dart, RotationBuilder, RotationSystem, Side};
pub use simple::{SimplicityReport, SsReport, Witness, WitnessKind};
pub use zigzag::{petrie_orbits, trace_zigzags, Zigzag, ZigzagPair};

/// Index of a flag inside a [`FlagMap`].
pub type Flag = usize;

/// One of the three generating involutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Involution {
    S0,
    S1,
    S2,
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Involution::S0 => write!(f, "s0"),
            Involution::S1 => write!(f, "s1"),
            Involution::S2 => write!(f, "s2"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("map has no flags")]
    Empty,
    #[error("involution arrays have mismatched lengths (flags = {flags}, {involution} has {len})")]
    LengthMismatch {
        flags: usize,
        involution: Involution,
        len: usize,
    },
    #[error("{involution}[{flag}] = {value} is out of range")]
    IndexOutOfRange {
        involution: Involution,
        flag: Flag,
        value: usize,
    },
    #[error("{involution} is not an involution at flag {flag}")]
    NotInvolution { involution: Involution, flag: Flag },
    #[error("{involution} fixes flag {flag}")]
    FixedPointFlag { involution: Involution, flag: Flag },
    #[error("edge through flag {flag} does not carry exactly four flags (s0 and s2 must commute without fixed points)")]
    EdgeNotQuadrilateral { flag: Flag },
    #[error("flag {flag} is not reachable from flag 0; the map is disconnected")]
    Disconnected { flag: Flag },
    #[error("mark `{name}` refers to flag {flag}, which does not exist")]
    MarkOutOfRange { name: String, flag: Flag },
    #[error("invalid polygon list: {0}")]
    BadPolygons(String),
    #[error("invalid rotation system: {0}")]
    BadRotation(String),
    #[error("map is not orientable")]
    NonOrientable,
}

/// A connected map on a closed surface. Immutable once validated.
#[derive(Clone)]
pub struct FlagMap {
    inv: [Vec<Flag>; 3],
    marks: BTreeMap<String, Flag>,
    cells: Cells,
}

impl PartialEq for FlagMap {
    fn eq(&self, other: &Self) -> bool {
        self.inv == other.inv && self.marks == other.marks
    }
}

impl Eq for FlagMap {}

impl fmt::Debug for FlagMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FlagMap")
            .field("flags", &self.flag_count())
            .field("V", &self.cells.vertex_count())
            .field("E", &self.cells.edge_count())
            .field("F", &self.cells.face_count())
            .field("marks", &self.marks)
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientability {
    Orientable,
    NonOrientable,
}

impl FlagMap {
    /// Validates raw involution arrays. Errors name the first offending flag.
    pub fn new(s0: Vec<Flag>, s1: Vec<Flag>, s2: Vec<Flag>) -> Result<Self, MapError> {
        Self::with_marks(s0, s1, s2, BTreeMap::new())
    }

    pub fn with_marks(
        s0: Vec<Flag>,
        s1: Vec<Flag>,
        s2: Vec<Flag>,
        marks: BTreeMap<String, Flag>,
    ) -> Result<Self, MapError> {
        let n = s0.len();
        if n == 0 {
            return Err(MapError::Empty);
        }
        let inv = [s0, s1, s2];
        for (which, arr) in [Involution::S0, Involution::S1, Involution::S2]
            .into_iter()
            .zip(inv.iter())
        {
            if arr.len() != n {
                return Err(MapError::LengthMismatch {
                    flags: n,
                    involution: which,
                    len: arr.len(),
                });
            }
            for (flag, &value) in arr.iter().enumerate() {
                if value >= n {
                    return Err(MapError::IndexOutOfRange {
                        involution: which,
                        flag,
                        value,
                    });
                }
            }
        }
        for (which, arr) in [Involution::S0, Involution::S1, Involution::S2]
            .into_iter()
            .zip(inv.iter())
        {
            for (flag, &value) in arr.iter().enumerate() {
                if value == flag {
                    return Err(MapError::FixedPointFlag {
                        involution: which,
                        flag,
                    });
                }
                if arr[value] != flag {
                    return Err(MapError::NotInvolution {
                        involution: which,
                        flag,
                    });
                }
            }
        }
        for flag in 0..n {
            let a = inv[0][inv[2][flag]];
            let b = inv[2][inv[0][flag]];
            if a != b || a == flag {
                return Err(MapError::EdgeNotQuadrilateral { flag });
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for arr in &inv {
                let y = arr[x];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if let Some(flag) = seen.iter().position(|s| !s) {
            return Err(MapError::Disconnected { flag });
        }
        for (name, &flag) in &marks {
            if flag >= n {
                return Err(MapError::MarkOutOfRange {
                    name: name.clone(),
                    flag,
                });
            }
        }
        let cells = Cells::compute(&inv);
        Ok(FlagMap { inv, marks, cells })
    }

    pub fn flag_count(&self) -> usize {
        self.inv[0].len()
    }

    #[inline]
    pub fn s0(&self, x: Flag) -> Flag {
        self.inv[0][x]
    }

    #[inline]
    pub fn s1(&self, x: Flag) -> Flag {
        self.inv[1][x]
    }

    #[inline]
    pub fn s2(&self, x: Flag) -> Flag {
        self.inv[2][x]
    }

    pub fn involution(&self, which: Involution) -> &[Flag] {
        match which {
            Involution::S0 => &self.inv[0],
            Involution::S1 => &self.inv[1],
            Involution::S2 => &self.inv[2],
        }
    }

    pub fn cells(&self) -> &Cells {
        &self.cells
    }

    pub fn marks(&self) -> &BTreeMap<String, Flag> {
        &self.marks
    }

    pub fn mark(&self, name: &str) -> Option<Flag> {
        self.marks.get(name).copied()
    }

    /// Returns a copy with the given mark set (or replaced).
    pub fn with_mark(mut self, name: impl Into<String>, flag: Flag) -> Result<Self, MapError> {
        let name = name.into();
        if flag >= self.flag_count() {
            return Err(MapError::MarkOutOfRange { name, flag });
        }
        self.marks.insert(name, flag);
        Ok(self)
    }

    pub fn without_marks(mut self) -> Self {
        self.marks.clear();
        self
    }

    pub fn replace_marks(mut self, marks: BTreeMap<String, Flag>) -> Result<Self, MapError> {
        for (name, &flag) in &marks {
            if flag >= self.flag_count() {
                return Err(MapError::MarkOutOfRange {
                    name: name.clone(),
                    flag,
                });
            }
        }
        self.marks = marks;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.cells.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.cells.edge_count()
    }

    pub fn face_count(&self) -> usize {
        self.cells.face_count()
    }

    /// V - E + F.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Orientable iff the flags admit a 2-colouring swapped by every involution.
    pub fn orientability(&self) -> Orientability {
        if self.orientation_classes().is_some() {
            Orientability::Orientable
        } else {
            Orientability::NonOrientable
        }
    }

    pub fn is_orientable(&self) -> bool {
        self.orientability() == Orientability::Orientable
    }

    /// The 2-colouring behind [`Self::orientability`], with flag 0 coloured `false`.
    pub fn orientation_classes(&self) -> Option<Vec<bool>> {
        let n = self.flag_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        color[0] = Some(false);
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            let c = color[x].unwrap();
            for arr in &self.inv {
                let y = arr[x];
                match color[y] {
                    None => {
                        color[y] = Some(!c);
                        stack.push(y);
                    }
                    Some(d) if d == c => return None,
                    Some(_) => {}
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// The dual map: vertices and faces trade places. Marks are kept.
    pub fn dual(&self) -> FlagMap {
        let inv = [self.inv[2].clone(), self.inv[1].clone(), self.inv[0].clone()];
        let cells = Cells::compute(&inv);
        FlagMap {
            inv,
            marks: self.marks.clone(),
            cells,
        }
    }

    /// Renumbers flags so that `perm[old] = new`. Marks follow their flags.
    pub fn relabel(&self, perm: &[Flag]) -> Result<FlagMap, MapError> {
        let n = self.flag_count();
        if perm.len() != n {
            return Err(MapError::LengthMismatch {
                flags: n,
                involution: Involution::S0,
                len: perm.len(),
            });
        }
        let mut inv = [vec![0; n], vec![0; n], vec![0; n]];
        for (k, arr) in self.inv.iter().enumerate() {
            for x in 0..n {
                inv[k][perm[x]] = perm[arr[x]];
            }
        }
        let marks = self
            .marks
            .iter()
            .map(|(k, &v)| (k.clone(), perm[v]))
            .collect();
        let [s0, s1, s2] = inv;
        FlagMap::with_marks(s0, s1, s2, marks)
    }

    /// Flags of the face containing `x`, listed as the boundary walk
    /// `x, s0 x, s1 s0 x, ...` (alternating s0 and s1).
    pub fn face_walk(&self, x: Flag) -> Vec<Flag> {
        let mut out = vec![x];
        let mut cur = x;
        let mut use_s0 = true;
        loop {
            cur = if use_s0 { self.s0(cur) } else { self.s1(cur) };
            use_s0 = !use_s0;
            if cur == x {
                break;
            }
            out.push(cur);
        }
        out
    }

    /// Vertices at both ends of the edge carrying `x` (tail = vertex of `x`).
    pub fn edge_ends(&self, x: Flag) -> (VertexId, VertexId) {
        (self.cells.vertex_of(x), self.cells.vertex_of(self.s0(x)))
    }

    /// The oriented edge represented by flag `x`: its edge traversed away from the vertex of `x`.
    pub fn oriented_edge(&self, x: Flag) -> OrientedEdge {
        OrientedEdge {
            edge: self.cells.edge_of(x),
            tail: self.cells.vertex_of(x),
            head: self.cells.vertex_of(self.s0(x)),
        }
    }

    /// Finds a flag with the given vertex, edge and face, if any.
    pub fn flag_at(&self, vertex: VertexId, edge: EdgeId, face: FaceId) -> Option<Flag> {
        self.cells
            .edge_flags(edge)
            .iter()
            .copied()
            .find(|&x| self.cells.vertex_of(x) == vertex && self.cells.face_of(x) == face)
    }

    /// Label of `v` recorded as a mark named `v:<label>`, if any.
    pub fn vertex_label(&self, v: VertexId) -> Option<&str> {
        self.marks.iter().find_map(|(name, &flag)| {
            let label = name.strip_prefix("v:")?;
            (self.cells.vertex_of(flag) == v).then_some(label)
        })
    }

    /// Vertex carrying the mark `v:<label>`.
    pub fn labelled_vertex(&self, label: &str) -> Option<VertexId> {
        self.mark(&format!("v:{label}"))
            .map(|f| self.cells.vertex_of(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tet() -> FlagMap {
        tetrahedron_map()
    }

    #[test]
    fn tetrahedron_counts() {
        let m = tet();
        assert_eq!(m.flag_count(), 24);
        assert_eq!(
            (m.vertex_count(), m.edge_count(), m.face_count()),
            (4, 6, 4)
        );
        assert_eq!(m.euler_characteristic(), 2);
        assert!(m.is_orientable());
    }

    #[test]
    fn fixed_point_rejected() {
        let m = tet();
        let mut s0 = m.involution(Involution::S0).to_vec();
        let s1 = m.involution(Involution::S1).to_vec();
        let s2 = m.involution(Involution::S2).to_vec();
        let partner = s0[3];
        s0[3] = 3;
        s0[partner] = partner;
        let err = FlagMap::new(s0, s1, s2).unwrap_err();
        assert_eq!(
            err,
            MapError::FixedPointFlag {
                involution: Involution::S0,
                flag: 3.min(partner)
            }
        );
    }

    #[test]
    fn non_involution_rejected() {
        let m = tet();
        let s0 = m.involution(Involution::S0).to_vec();
        let mut s1 = m.involution(Involution::S1).to_vec();
        let s2 = m.involution(Involution::S2).to_vec();
        // 3-cycle on flags 0, s1(0), and some third flag
        let a = 0;
        let b = s1[0];
        let c = (0..24).find(|&c| c != a && c != b && s1[c] != a && s1[c] != b).unwrap();
        s1[a] = b;
        s1[b] = c;
        s1[c] = a;
        assert!(matches!(
            FlagMap::new(s0, s1, s2),
            Err(MapError::NotInvolution { involution: Involution::S1, .. })
        ));
    }

    #[test]
    fn s0_s2_must_commute() {
        let m = tet();
        let s0 = m.involution(Involution::S0).to_vec();
        let s1 = m.involution(Involution::S1).to_vec();
        let mut s2 = m.involution(Involution::S2).to_vec();
        // pair s2 with s0 on one edge so s0 s2 gains a fixed point
        let x = 0;
        let (old_a, old_b) = (s2[x], s2[s0[x]]);
        s2[x] = s0[x];
        s2[s0[x]] = x;
        s2[old_a] = old_b;
        s2[old_b] = old_a;
        assert!(matches!(
            FlagMap::new(s0, s1, s2),
            Err(MapError::EdgeNotQuadrilateral { .. })
        ));
    }

    #[test]
    fn disjoint_union_rejected() {
        let m = tet();
        let n = m.flag_count();
        let cat = |arr: &[Flag]| -> Vec<Flag> {
            arr.iter().copied().chain(arr.iter().map(|&x| x + n)).collect()
        };
        let err = FlagMap::new(
            cat(m.involution(Involution::S0)),
            cat(m.involution(Involution::S1)),
            cat(m.involution(Involution::S2)),
        )
        .unwrap_err();
        assert_eq!(err, MapError::Disconnected { flag: n });
    }

    #[test]
    fn dual_is_an_involution_on_encodings() {
        for m in [cube_map(), bipyramid_map(5).unwrap(), k6_projective_map()] {
            assert_eq!(m.dual().dual(), m);
            assert_eq!(m.dual().euler_characteristic(), m.euler_characteristic());
        }
    }

    #[test]
    fn dual_counts() {
        let d = cube_map().dual();
        assert_eq!((d.vertex_count(), d.edge_count(), d.face_count()), (6, 12, 8));
        assert!(is_isomorphic(&d, &octahedron_map()));
        assert!(is_isomorphic(&tet().dual(), &tet()));
    }

    #[test]
    fn surfaces() {
        let t = k7_torus_map();
        assert_eq!((t.vertex_count(), t.edge_count(), t.face_count()), (7, 21, 14));
        assert_eq!(t.euler_characteristic(), 0);
        assert!(t.is_orientable());
        let p = k6_projective_map();
        assert_eq!((p.vertex_count(), p.edge_count(), p.face_count()), (6, 15, 10));
        assert_eq!(p.euler_characteristic(), 1);
        assert_eq!(p.orientability(), Orientability::NonOrientable);
    }

    #[test]
    fn face_walk_alternates() {
        let m = cube_map();
        for f in 0..m.face_count() {
            let x = m.cells().face_flags(FaceId(f))[0];
            let walk = m.face_walk(x);
            assert_eq!(walk.len(), 8);
        }
    }
}
