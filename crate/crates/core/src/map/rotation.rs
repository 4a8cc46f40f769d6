//! Rotation systems: an editable view of orientable maps.
//!
//! Each edge contributes two darts (one per end). Every vertex lists its
//! darts in clockwise order. A dart `d` and its clockwise successor `next(d)`
//! bound a corner of the face lying to the right of `d`.
//!
//! The flag encoding uses flag `2i` for the dart with index `i` on its right
//! side ([`Side::Plus`]) and `2i + 1` for its left side ([`Side::Minus`]).

use std::collections::BTreeMap;

use super::{Flag, FlagMap, MapError};

pub type Dart = usize;

const DEAD: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// The flag in the face to the right of the dart.
    Plus,
    /// The flag in the face to the left of the dart.
    Minus,
}

/// An orientable map given by clockwise dart rotations at each vertex.
#[derive(Clone, Debug, Default)]
pub struct RotationSystem {
    rot: Vec<Vec<Dart>>,
    twin: Vec<Dart>,
    origin: Vec<usize>,
    marks: BTreeMap<String, (Dart, Side)>,
}

impl RotationSystem {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reads an orientable flag map. Flag 0 becomes a dart on its `Plus` side.
    pub fn from_flag_map(m: &FlagMap) -> Result<Self, MapError> {
        let classes = m.orientation_classes().ok_or(MapError::NonOrientable)?;
        let n = m.flag_count();
        let mut dart_of = vec![DEAD; n];
        let mut count = 0;
        for x in 0..n {
            if !classes[x] {
                dart_of[x] = count;
                count += 1;
            }
        }
        let positive: Vec<Flag> = (0..n).filter(|&x| !classes[x]).collect();
        let mut twin = vec![DEAD; count];
        let mut next = vec![DEAD; count];
        for (d, &x) in positive.iter().enumerate() {
            next[d] = dart_of[m.s2(m.s1(x))];
            twin[d] = dart_of[m.s2(m.s0(x))];
        }
        let mut origin = vec![DEAD; count];
        let mut rot = Vec::new();
        for d in 0..count {
            if origin[d] != DEAD {
                continue;
            }
            let v = rot.len();
            let mut list = vec![d];
            origin[d] = v;
            let mut e = next[d];
            while e != d {
                origin[e] = v;
                list.push(e);
                e = next[e];
            }
            rot.push(list);
        }
        let marks = m
            .marks()
            .iter()
            .map(|(k, &x)| {
                let v = if classes[x] {
                    (dart_of[m.s2(x)], Side::Minus)
                } else {
                    (dart_of[x], Side::Plus)
                };
                (k.clone(), v)
            })
            .collect();
        Ok(RotationSystem {
            rot,
            twin,
            origin,
            marks,
        })
    }

    /// Flag of `(dart, side)` in the encoding produced by [`Self::to_flag_map`]
    /// when no darts are dead.
    pub fn flag(d: Dart, side: Side) -> Flag {
        match side {
            Side::Plus => 2 * d,
            Side::Minus => 2 * d + 1,
        }
    }

    /// Builds the flag map, dropping deleted darts and vertices. Returns the
    /// map and, for every dart, its new index (`usize::MAX` for deleted darts).
    pub fn to_flag_map_indexed(&self) -> Result<(FlagMap, Vec<usize>), MapError> {
        let nd = self.twin.len();
        let mut pos = vec![DEAD; nd];
        let mut next = vec![DEAD; nd];
        for (v, list) in self.rot.iter().enumerate() {
            for (i, &d) in list.iter().enumerate() {
                if d >= nd || self.twin[d] == DEAD {
                    return Err(MapError::BadRotation(format!(
                        "vertex {v} lists unknown dart {d}"
                    )));
                }
                if pos[d] != DEAD {
                    return Err(MapError::BadRotation(format!("dart {d} listed twice")));
                }
                if self.origin[d] != v {
                    return Err(MapError::BadRotation(format!(
                        "dart {d} listed at vertex {v} but starts at {}",
                        self.origin[d]
                    )));
                }
                pos[d] = i;
                next[d] = list[(i + 1) % list.len()];
            }
        }
        let mut index = vec![DEAD; nd];
        let mut count = 0;
        for d in 0..nd {
            if self.twin[d] == DEAD {
                continue;
            }
            if pos[d] == DEAD {
                return Err(MapError::BadRotation(format!(
                    "dart {d} is not placed in any rotation"
                )));
            }
            index[d] = count;
            count += 1;
        }
        if count == 0 {
            return Err(MapError::Empty);
        }
        let mut s0 = vec![0; 2 * count];
        let mut s1 = vec![0; 2 * count];
        let mut s2 = vec![0; 2 * count];
        for d in 0..nd {
            if index[d] == DEAD {
                continue;
            }
            let i = index[d];
            let t = index[self.twin[d]];
            let nx = index[next[d]];
            s2[2 * i] = 2 * i + 1;
            s2[2 * i + 1] = 2 * i;
            s1[2 * i] = 2 * nx + 1;
            s1[2 * nx + 1] = 2 * i;
            s0[2 * i] = 2 * t + 1;
            s0[2 * t + 1] = 2 * i;
        }
        let marks = self
            .marks
            .iter()
            .filter(|(_, &(d, _))| index[d] != DEAD)
            .map(|(k, &(d, s))| (k.clone(), Self::flag(index[d], s)))
            .collect();
        let m = FlagMap::with_marks(s0, s1, s2, marks)?;
        Ok((m, index))
    }

    pub fn to_flag_map(&self) -> Result<FlagMap, MapError> {
        self.to_flag_map_indexed().map(|(m, _)| m)
    }

    /// Number of dart slots, including deleted ones.
    pub fn dart_capacity(&self) -> usize {
        self.twin.len()
    }

    pub fn vertex_capacity(&self) -> usize {
        self.rot.len()
    }

    pub fn is_alive(&self, d: Dart) -> bool {
        self.twin[d] != DEAD
    }

    pub fn twin(&self, d: Dart) -> Dart {
        self.twin[d]
    }

    pub fn origin(&self, d: Dart) -> usize {
        self.origin[d]
    }

    /// Darts at `v` in clockwise order.
    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rot[v]
    }

    fn position(&self, d: Dart) -> usize {
        self.rot[self.origin[d]]
            .iter()
            .position(|&x| x == d)
            .expect("dart is placed")
    }

    /// Clockwise successor of `d` around its origin.
    pub fn next(&self, d: Dart) -> Dart {
        let list = &self.rot[self.origin[d]];
        list[(self.position(d) + 1) % list.len()]
    }

    /// Counter-clockwise successor of `d` around its origin.
    pub fn prev(&self, d: Dart) -> Dart {
        let list = &self.rot[self.origin[d]];
        list[(self.position(d) + list.len() - 1) % list.len()]
    }

    /// The dart following `d` along the boundary of the face on the right of `d`.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.prev(self.twin[d])
    }

    /// Darts bounding the face on the right of `d`, starting with `d`.
    pub fn face_darts(&self, d: Dart) -> Vec<Dart> {
        let mut out = vec![d];
        let mut e = self.face_next(d);
        while e != d {
            out.push(e);
            e = self.face_next(e);
        }
        out
    }

    pub fn add_vertex(&mut self) -> usize {
        self.rot.push(Vec::new());
        self.rot.len() - 1
    }

    /// Creates an edge from `u` to `v`. The two darts still have to be placed
    /// into the rotations of `u` and `v`.
    pub fn add_edge(&mut self, u: usize, v: usize) -> (Dart, Dart) {
        let a = self.twin.len();
        let b = a + 1;
        self.twin.push(b);
        self.twin.push(a);
        self.origin.push(u);
        self.origin.push(v);
        (a, b)
    }

    /// Sets the rotation at `v` from a clockwise list.
    pub fn set_rotation_cw(&mut self, v: usize, darts: Vec<Dart>) {
        self.rot[v] = darts;
    }

    /// Sets the rotation at `v` from a counter-clockwise list.
    pub fn set_rotation_ccw(&mut self, v: usize, mut darts: Vec<Dart>) {
        darts.reverse();
        self.rot[v] = darts;
    }

    /// Replaces `old` in its rotation by `new`, listed clockwise.
    pub fn replace_in_rotation(&mut self, old: Dart, new: &[Dart]) {
        let v = self.origin[old];
        let i = self.position(old);
        self.rot[v].splice(i..=i, new.iter().copied());
    }

    /// Inserts `new` (listed clockwise) directly clockwise after `after`.
    pub fn insert_after(&mut self, after: Dart, new: &[Dart]) {
        let v = self.origin[after];
        let i = self.position(after);
        self.rot[v].splice(i + 1..i + 1, new.iter().copied());
    }

    /// Deletes the edge carrying `d`. Marks on its darts are dropped.
    pub fn remove_edge(&mut self, d: Dart) {
        let t = self.twin[d];
        for x in [d, t] {
            let v = self.origin[x];
            self.rot[v].retain(|&y| y != x);
            self.twin[x] = DEAD;
        }
        self.marks.retain(|_, (x, _)| *x != d && *x != t);
    }

    /// Moves the end `d` of its edge to the vertex `v`; the caller places it in the rotation.
    pub fn set_origin(&mut self, d: Dart, v: usize) {
        self.origin[d] = v;
    }

    pub fn marks(&self) -> &BTreeMap<String, (Dart, Side)> {
        &self.marks
    }

    pub fn set_mark(&mut self, name: impl Into<String>, d: Dart, side: Side) {
        self.marks.insert(name.into(), (d, side));
    }

    pub fn mark(&self, name: &str) -> Option<(Dart, Side)> {
        self.marks.get(name).copied()
    }

    /// All live darts.
    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.twin.len()).filter(|&d| self.twin[d] != DEAD)
    }
}

/// Incremental construction of a map from explicit rotations.
pub type RotationBuilder = RotationSystem;

impl FlagMap {
    /// Dart and side of flag `x` in the rotation system returned by
    /// [`RotationSystem::from_flag_map`] for this map.
    pub fn dart_side(&self, x: Flag) -> Option<(Dart, Side)> {
        let classes = self.orientation_classes()?;
        let mut dart_of = vec![DEAD; self.flag_count()];
        let mut c = 0;
        for (y, &neg) in classes.iter().enumerate() {
            if !neg {
                dart_of[y] = c;
                c += 1;
            }
        }
        Some(if classes[x] {
            (dart_of[self.s2(x)], Side::Minus)
        } else {
            (dart_of[x], Side::Plus)
        })
    }
}
