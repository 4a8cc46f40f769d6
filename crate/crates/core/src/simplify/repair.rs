//! The repair loop: one local operation at a time until (SS) holds.

use std::fmt;

use serde::Serialize;

use crate::map::{EdgeId, FaceId, Flag, FlagMap, VertexId};
use crate::monodromy::{z_monodromy_unchecked, FaceFrame, SignedPerm};

use super::gadgets::{expand_edge, insert_digon, on_face, remove_loop_face};
use super::{loop_bounds_face, MapSide, SimplifyError, ViolationKind};

const PROTECTED: &str = "__protected_base";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RepairAction {
    RemoveLoop,
    ExpandLoop,
    ExpandEdge,
    InsertDigon,
}

impl fmt::Display for RepairAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RepairAction::RemoveLoop => "remove_loop",
            RepairAction::ExpandLoop => "expand_loop",
            RepairAction::ExpandEdge => "expand_edge",
            RepairAction::InsertDigon => "insert_digon",
        };
        f.write_str(s)
    }
}

/// One line of the repair trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceRecord {
    pub step: usize,
    /// The violation as seen on the repaired map.
    pub kind: ViolationKind,
    pub action: RepairAction,
    /// The map the operation was applied to.
    pub side: MapSide,
    pub site: String,
    #[serde(rename = "V")]
    pub vertices: usize,
    #[serde(rename = "E")]
    pub edges: usize,
    #[serde(rename = "F")]
    pub faces: usize,
    pub monodromy_ok: bool,
}

#[derive(Clone, Debug)]
pub struct RepairOutcome {
    pub map: FlagMap,
    /// The protected frame's base flag in `map`.
    pub base: Flag,
    pub trace: Vec<TraceRecord>,
}

impl RepairOutcome {
    /// The trace as JSON lines.
    pub fn trace_jsonl(&self) -> String {
        self.trace
            .iter()
            .map(|r| serde_json::to_string(r).expect("trace records serialize") + "\n")
            .collect()
    }
}

#[derive(Clone, Debug)]
struct Step {
    kind: ViolationKind,
    action: RepairAction,
    side: MapSide,
    edge: EdgeId,
    digon: Option<(FaceId, EdgeId)>,
}

impl Step {
    fn site(&self) -> String {
        match self.digon {
            Some((w, e2)) => format!("{w}:{},{e2}", self.edge),
            None => self.edge.to_string(),
        }
    }
}

fn protected_face(m: &FlagMap) -> FaceId {
    m.cells()
        .face_of(m.mark(PROTECTED).expect("protected mark is kept"))
}

/// Picks the next operation: loops first, then multiple edges, on the map
/// and then on its dual. Faces sharing several edges with the protected
/// face are separated last.
fn next_step(m: &FlagMap) -> Result<Option<Step>, SimplifyError> {
    let f = protected_face(m);
    let primal = m.simplicity();
    if let Some(&e) = primal.loops.first() {
        if on_face(m, e, f) {
            return Err(SimplifyError::ProtectedFaceViolation(format!(
                "loop {e} on the protected face"
            )));
        }
        let (kind, action) = if loop_bounds_face(m, e) {
            (ViolationKind::A1, RepairAction::RemoveLoop)
        } else {
            (ViolationKind::A2, RepairAction::ExpandLoop)
        };
        return Ok(Some(Step {
            kind,
            action,
            side: MapSide::Primal,
            edge: e,
            digon: None,
        }));
    }
    if let Some((u, v, es)) = primal.parallels.first() {
        let e = es.iter().copied().find(|&e| !on_face(m, e, f)).ok_or_else(|| {
            SimplifyError::ProtectedFaceViolation(format!(
                "all edges between {u} and {v} lie on the protected face"
            ))
        })?;
        return Ok(Some(Step {
            kind: ViolationKind::B,
            action: RepairAction::ExpandEdge,
            side: MapSide::Primal,
            edge: e,
            digon: None,
        }));
    }
    let d = m.dual();
    let dual = d.simplicity();
    let fv = VertexId(f.0);
    if let Some(&e) = dual.loops.first() {
        let action = if loop_bounds_face(&d, e) {
            RepairAction::RemoveLoop
        } else {
            RepairAction::ExpandLoop
        };
        return Ok(Some(Step {
            kind: ViolationKind::C,
            action,
            side: MapSide::Dual,
            edge: e,
            digon: None,
        }));
    }
    let mut at_protected = None;
    for (u, v, es) in &dual.parallels {
        if *u == fv || *v == fv {
            if at_protected.is_none() {
                let w = if *u == fv { *v } else { *u };
                at_protected = Some((FaceId(w.0), es[0], es[1]));
            }
            continue;
        }
        return Ok(Some(Step {
            kind: ViolationKind::D,
            action: RepairAction::ExpandEdge,
            side: MapSide::Dual,
            edge: es[0],
            digon: None,
        }));
    }
    Ok(at_protected.map(|(w, e1, e2)| Step {
        kind: ViolationKind::D,
        action: RepairAction::InsertDigon,
        side: MapSide::Primal,
        edge: e1,
        digon: Some((w, e2)),
    }))
}

fn apply(m: &FlagMap, step: &Step) -> Result<FlagMap, SimplifyError> {
    let f = protected_face(m);
    let run = |g: &FlagMap, protected: Option<FaceId>| -> Result<FlagMap, SimplifyError> {
        match step.action {
            RepairAction::RemoveLoop => remove_loop_face(g, step.edge),
            RepairAction::ExpandLoop | RepairAction::ExpandEdge => {
                expand_edge(g, step.edge, protected)
            }
            RepairAction::InsertDigon => {
                let (w, e2) = step.digon.expect("digon step carries its face");
                insert_digon(g, w, step.edge, e2)
            }
        }
    };
    match step.side {
        MapSide::Primal => run(m, Some(f)),
        MapSide::Dual => Ok(run(&m.dual(), None)?.dual()),
    }
}

fn monodromy(m: &FlagMap) -> Option<SignedPerm> {
    let frame = FaceFrame::from_mark(m, PROTECTED).ok()?;
    z_monodromy_unchecked(m, &frame)
}

/// Removes every loop, multiple edge, one-sided edge and pair of faces
/// sharing several edges, keeping the z-monodromy of the face framed by
/// `base` unchanged. The input must be an orientable map; the result
/// satisfies (SS). The number of steps is bounded by ten times the initial
/// edge count.
pub fn repair(m: &FlagMap, base: Flag) -> Result<RepairOutcome, SimplifyError> {
    let mut cur = m.clone().with_mark(PROTECTED, base)?;
    let target = monodromy(&cur);
    let budget = 10 * m.edge_count();
    let mut trace: Vec<TraceRecord> = Vec::new();
    while let Some(step) = next_step(&cur)? {
        if trace.len() >= budget {
            let history = trace
                .iter()
                .map(|r| format!("{}:{}@{}", r.kind, r.action, r.site))
                .collect::<Vec<_>>()
                .join(" ");
            return Err(SimplifyError::RepairBudgetExceeded { budget, history });
        }
        cur = apply(&cur, &step)?;
        let ok = monodromy(&cur) == target;
        trace.push(TraceRecord {
            step: trace.len() + 1,
            kind: step.kind,
            action: step.action,
            side: step.side,
            site: step.site(),
            vertices: cur.vertex_count(),
            edges: cur.edge_count(),
            faces: cur.face_count(),
            monodromy_ok: ok,
        });
        if !ok {
            return Err(SimplifyError::MonodromyChanged {
                step: trace.len(),
                action: step.action.to_string(),
            });
        }
    }
    let base = cur.mark(PROTECTED).expect("protected mark is kept");
    let mut marks = cur.marks().clone();
    marks.remove(PROTECTED);
    let map = cur.replace_marks(marks)?;
    Ok(RepairOutcome { map, base, trace })
}
