//! Detection and repair of loops, multiple edges and their dual counterparts.
//!
//! A map fails (SS) through one of five local patterns, named from the side
//! on which they are observed:
//!
//! * `A1`: a loop that bounds a face,
//! * `A2`: a loop that does not bound a face,
//! * `B`: several edges joining the same two vertices,
//! * `C`: an edge lying on one face only,
//! * `D`: two faces sharing more than one edge.
//!
//! `C` and `D` on one side are `A` and `B` on the dual side. Repairs operate
//! on whichever side shows a loop or a multiple edge and keep the
//! z-monodromy of a protected face unchanged.

mod gadgets;
mod repair;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::map::{EdgeId, FaceId, FlagMap, MapError, RotationSystem, VertexId};

pub use gadgets::{expand_edge, insert_digon, remove_loop_face};
pub use repair::{repair, RepairAction, RepairOutcome, TraceRecord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimplifyError {
    #[error("edge {0} lies on the protected face")]
    EdgeOnProtectedFace(EdgeId),
    #[error("edge {0} is not a loop bounding a face")]
    NotAFaceLoop(EdgeId),
    #[error("edge {0} is a loop bounding a face; remove it instead of expanding")]
    FaceLoop(EdgeId),
    #[error("no edge {0} in the map")]
    NoSuchEdge(usize),
    #[error("faces {0} and {1} cannot be separated: {2}")]
    NotSeparable(FaceId, FaceId, String),
    #[error("patch check failed: {0}")]
    PatchContractViolation(String),
    #[error("repair did not finish within {budget} steps; history: {history}")]
    RepairBudgetExceeded { budget: usize, history: String },
    #[error("z-monodromy of the protected face changed at step {step} ({action})")]
    MonodromyChanged { step: usize, action: String },
    #[error("violation on the protected face: {0}")]
    ProtectedFaceViolation(String),
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ViolationKind {
    A1,
    A2,
    B,
    C,
    D,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The map on which a violation was observed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapSide {
    Primal,
    Dual,
}

/// One obstruction to (SS). Cell ids refer to the map named by `side`; the
/// dual's vertices are the primal faces and its edges keep their ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub side: MapSide,
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<VertexId>,
    pub faces: Vec<FaceId>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            MapSide::Primal => "primal",
            MapSide::Dual => "dual",
        };
        write!(f, "{} ({side}) edges", self.kind)?;
        for e in &self.edges {
            write!(f, " {e}")?;
        }
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        for x in &self.faces {
            write!(f, " {x}")?;
        }
        Ok(())
    }
}

/// Whether the loop `e` has a monogon on one of its sides.
pub(crate) fn loop_bounds_face(m: &FlagMap, e: EdgeId) -> bool {
    let c = m.cells();
    c.edge_flags(e)
        .iter()
        .any(|&x| c.face_size(c.face_of(x)) == 1)
}

fn loops_and_multi(m: &FlagMap, side: MapSide, out: &mut Vec<Violation>) {
    let r = m.simplicity();
    for e in r.loops {
        let v = m.cells().vertex_of(m.cells().edge_flags(e)[0]);
        let kind = if loop_bounds_face(m, e) {
            ViolationKind::A1
        } else {
            ViolationKind::A2
        };
        out.push(Violation {
            kind,
            side,
            edges: vec![e],
            vertices: vec![v],
            faces: vec![],
        });
    }
    for (u, v, es) in r.parallels {
        out.push(Violation {
            kind: ViolationKind::B,
            side,
            edges: es,
            vertices: vec![u, v],
            faces: vec![],
        });
    }
}

fn one_sided_and_shared(m: &FlagMap, side: MapSide, out: &mut Vec<Violation>) {
    let mut dual_view = Vec::new();
    loops_and_multi(&m.dual(), side, &mut dual_view);
    for v in dual_view {
        let kind = match v.kind {
            ViolationKind::B => ViolationKind::D,
            _ => ViolationKind::C,
        };
        out.push(Violation {
            kind,
            side,
            edges: v.edges,
            vertices: vec![],
            faces: v.vertices.iter().map(|x| FaceId(x.0)).collect(),
        });
    }
}

/// All violations seen on the map (`Primal`) and on its dual (`Dual`). Every
/// obstruction is listed once from each side. Empty exactly when (SS) holds.
pub fn find_violations(m: &FlagMap) -> Vec<Violation> {
    let mut out = Vec::new();
    loops_and_multi(m, MapSide::Primal, &mut out);
    one_sided_and_shared(m, MapSide::Primal, &mut out);
    let d = m.dual();
    loops_and_multi(&d, MapSide::Dual, &mut out);
    one_sided_and_shared(&d, MapSide::Dual, &mut out);
    out
}

/// Loop count plus the excess multiplicity of the edges.
pub fn multiplicity_excess(m: &FlagMap) -> usize {
    let r = m.simplicity();
    r.loops.len() + r.parallels.iter().map(|(_, _, es)| es.len() - 1).sum::<usize>()
}

pub(crate) fn rotation_of(m: &FlagMap) -> Result<RotationSystem, SimplifyError> {
    Ok(RotationSystem::from_flag_map(m)?)
}
