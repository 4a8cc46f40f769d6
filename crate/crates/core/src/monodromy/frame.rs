//! Face frames and the z-monodromy of a face.
//!
//! A frame fixes a face F, a base oriented edge e_1 of its boundary and the
//! direction of traversal. The oriented boundary edges are labelled
//! e_1, ..., e_k in that direction, and -e_i is e_i traversed backwards.
//! Internally e_1 is a flag `b` of F; e_{i+1} = s1 s0 e_i and -e_i = s0 e_i.

use serde::Serialize;
use thiserror::Error;

use crate::map::{EdgeId, FaceId, Flag, FlagMap, OrientedEdge, SsReport, VertexId};

use super::candidate::check_conditions;
use super::perm::{index_symbol, symbol_index, SignedPerm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonodromyError {
    #[error("face {face} has {k} sides; at least 3 are required")]
    FaceTooSmall { face: FaceId, k: usize },
    #[error("edge {edge} (from {tail}) is not on the boundary of face {face}")]
    EdgeNotOnFace {
        edge: EdgeId,
        tail: VertexId,
        face: FaceId,
    },
    #[error("no face {0} in the map")]
    NoSuchFace(usize),
    #[error("map has no mark named `{0}`")]
    NoSuchMark(String),
    #[error("the map or its dual is not simple: {0}")]
    SsViolated(String),
}

impl MonodromyError {
    fn ss(report: &SsReport) -> Self {
        MonodromyError::SsViolated(report.to_string())
    }
}

/// A labelled face: e_1, ..., e_k and their reversals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceFrame {
    face: FaceId,
    k: usize,
    /// Flags indexed by symbol index.
    flags: Vec<Flag>,
}

impl FaceFrame {
    /// Frame whose base oriented edge is represented by the flag `base`.
    pub fn from_flag(m: &FlagMap, base: Flag) -> Result<FaceFrame, MonodromyError> {
        let face = m.cells().face_of(base);
        let k = m.cells().face_size(face);
        if k < 3 {
            return Err(MonodromyError::FaceTooSmall { face, k });
        }
        let mut flags = vec![0; 2 * k];
        let mut x = base;
        for i in 1..=k as i32 {
            flags[symbol_index(k, i)] = x;
            flags[symbol_index(k, -i)] = m.s0(x);
            x = m.s1(m.s0(x));
        }
        Ok(FaceFrame { face, k, flags })
    }

    /// Frame of `face` with base edge `edge` traversed away from `tail`.
    pub fn new(
        m: &FlagMap,
        face: FaceId,
        edge: EdgeId,
        tail: VertexId,
    ) -> Result<FaceFrame, MonodromyError> {
        if face.0 >= m.face_count() {
            return Err(MonodromyError::NoSuchFace(face.0));
        }
        let x = m
            .flag_at(tail, edge, face)
            .ok_or(MonodromyError::EdgeNotOnFace { edge, tail, face })?;
        Self::from_flag(m, x)
    }

    /// Frame whose base flag is the mark `name`.
    pub fn from_mark(m: &FlagMap, name: &str) -> Result<FaceFrame, MonodromyError> {
        let x = m
            .mark(name)
            .ok_or_else(|| MonodromyError::NoSuchMark(name.to_string()))?;
        Self::from_flag(m, x)
    }

    /// Frame of `face` starting from its smallest flag.
    pub fn default_for(m: &FlagMap, face: FaceId) -> Result<FaceFrame, MonodromyError> {
        if face.0 >= m.face_count() {
            return Err(MonodromyError::NoSuchFace(face.0));
        }
        Self::from_flag(m, m.cells().face_flags(face)[0])
    }

    pub fn face(&self) -> FaceId {
        self.face
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Flag representing the oriented edge labelled `symbol`.
    pub fn flag(&self, symbol: i32) -> Flag {
        self.flags[symbol_index(self.k, symbol)]
    }

    pub fn base_flag(&self) -> Flag {
        self.flag(1)
    }

    pub fn oriented_edge(&self, m: &FlagMap, symbol: i32) -> OrientedEdge {
        m.oriented_edge(self.flag(symbol))
    }

    /// The tail vertices v_0, ..., v_{k-1} of e_1, ..., e_k.
    pub fn boundary_vertices(&self, m: &FlagMap) -> Vec<VertexId> {
        (1..=self.k as i32)
            .map(|i| m.cells().vertex_of(self.flag(i)))
            .collect()
    }

    pub fn symbol_of_flag(&self, x: Flag) -> Option<i32> {
        self.flags
            .iter()
            .position(|&y| y == x)
            .map(|i| index_symbol(self.k, i))
    }

    /// Same face, base edge moved `steps` positions along the orientation.
    pub fn rotated(&self, m: &FlagMap, steps: usize) -> FaceFrame {
        let i = (steps % self.k) as i32 + 1;
        Self::from_flag(m, self.flag(i)).expect("same face")
    }

    /// Same face, opposite orientation, with base edge -e_k.
    pub fn reversed(&self, m: &FlagMap) -> FaceFrame {
        Self::from_flag(m, self.flag(-(self.k as i32))).expect("same face")
    }

    /// D_F: e_i ↦ e_{i+1}, -e_i ↦ -e_{i-1} (indices mod k).
    pub fn rotation_df(&self) -> SignedPerm {
        let k = self.k as i32;
        SignedPerm::from_fn(self.k, |x| {
            if x > 0 {
                x % k + 1
            } else {
                let a = -x;
                -((a + k - 2) % k + 1)
            }
        })
        .expect("rotation is a bijection")
    }
}

/// z-monodromy images for every symbol, in symbol order. Does not require
/// (SS) and does not check bijectivity.
pub(crate) fn monodromy_images(m: &FlagMap, frame: &FaceFrame) -> Vec<i32> {
    let k = frame.k;
    let n = m.flag_count();
    let mut sym = vec![0i32; n];
    for (i, &x) in frame.flags.iter().enumerate() {
        sym[x] = index_symbol(k, i);
    }
    let mut on_face = vec![false; m.edge_count()];
    for &x in &frame.flags {
        on_face[m.cells().edge_of(x).0] = true;
    }
    let step = |x: Flag| m.s2(m.s1(m.s0(x)));
    let mut img = vec![0i32; 2 * k];
    for (i, &fe) in frame.flags.iter().enumerate() {
        let mut g = step(m.s2(fe));
        while !on_face[m.cells().edge_of(g).0] {
            g = step(g);
        }
        let r = if m.cells().face_of(g) == frame.face {
            g
        } else {
            m.s2(g)
        };
        img[i] = sym[r];
    }
    img
}

/// z-monodromy without the (SS) precondition; `None` if it is not a bijection.
pub fn z_monodromy_unchecked(m: &FlagMap, frame: &FaceFrame) -> Option<SignedPerm> {
    let img = monodromy_images(m, frame);
    if img.contains(&0) {
        return None;
    }
    SignedPerm::from_images(frame.k, img).ok()
}

/// The z-monodromy M_F of the framed face, as a permutation of symbols.
pub fn z_monodromy(m: &FlagMap, frame: &FaceFrame) -> Result<SignedPerm, MonodromyError> {
    let report = m.ss_report();
    if !report.holds() {
        return Err(MonodromyError::ss(&report));
    }
    Ok(z_monodromy_unchecked(m, frame).expect("z-monodromy of an (SS) map is bijective"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma1Violation {
    pub face: FaceId,
    pub reversed: bool,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Lemma1Report {
    pub frames_checked: usize,
    pub violations: Vec<Lemma1Violation>,
}

impl Lemma1Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, for every face and both orientations, that M_F is a bijection with
/// `M_F(e) = e' ⇒ M_F(-e') = -e` and `M_F(e) ≠ -e`.
pub fn check_lemma1(m: &FlagMap) -> Result<Lemma1Report, MonodromyError> {
    let report = m.ss_report();
    if !report.holds() {
        return Err(MonodromyError::ss(&report));
    }
    let mut out = Lemma1Report::default();
    for face in m.cells().faces() {
        let frame = FaceFrame::default_for(m, face)?;
        for (reversed, fr) in [(false, frame.clone()), (true, frame.reversed(m))] {
            out.frames_checked += 1;
            let img = monodromy_images(m, &fr);
            let perm = match SignedPerm::from_images(fr.k(), img) {
                Ok(p) => p,
                Err(_) => {
                    out.violations.push(Lemma1Violation {
                        face,
                        reversed,
                        message: "not a bijection".to_string(),
                    });
                    continue;
                }
            };
            if let Err(e) = check_conditions(&perm) {
                out.violations.push(Lemma1Violation {
                    face,
                    reversed,
                    message: e.to_string(),
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::*;

    #[test]
    fn df_has_two_cycles() {
        let m = cube_map();
        let fr = FaceFrame::default_for(&m, FaceId(0)).unwrap();
        let d = fr.rotation_df();
        assert_eq!(d.to_string(), "(1,2,3,4)(-4,-3,-2,-1)");
        for i in 1..=4 {
            let e = fr.oriented_edge(&m, i);
            let back = fr.oriented_edge(&m, -i);
            assert_eq!((e.tail, e.head, e.edge), (back.head, back.tail, back.edge));
            let nxt = fr.oriented_edge(&m, d.apply(i));
            assert_eq!(e.head, nxt.tail);
        }
    }

    #[test]
    fn rotation_and_reversal_relabel() {
        let m = bipyramid_map(5).unwrap();
        for face in m.cells().faces() {
            let fr = FaceFrame::default_for(&m, face).unwrap();
            let mf = z_monodromy(&m, &fr).unwrap();
            let rot = fr.rotated(&m, 1);
            assert_eq!(
                z_monodromy(&m, &rot).unwrap(),
                mf.conjugate_by(&super::super::rotation_relabel(3, 1))
            );
            let rev = fr.reversed(&m);
            assert_eq!(
                z_monodromy(&m, &rev).unwrap(),
                mf.conjugate_by(&super::super::reflection_relabel(3))
            );
        }
    }

    #[test]
    fn monodromy_conditions_on_fixtures() {
        for m in [cube_map(), bipyramid_map(3).unwrap(), tetrahedron_map(), k7_torus_map(), k6_projective_map()] {
            let r = check_lemma1(&m).unwrap();
            assert!(r.passed(), "{:?}", r);
            assert_eq!(r.frames_checked, 2 * m.face_count());
        }
    }

    #[test]
    fn edge_not_on_face() {
        let m = cube_map();
        let face = FaceId(0);
        let outside = m
            .cells()
            .edges()
            .find(|&e| m.cells().edge_flags(e).iter().all(|&x| m.cells().face_of(x) != face))
            .unwrap();
        let tail = m.cells().vertex_of(m.cells().edge_flags(outside)[0]);
        assert!(matches!(
            FaceFrame::new(&m, face, outside, tail),
            Err(MonodromyError::EdgeNotOnFace { .. })
        ));
    }
}
