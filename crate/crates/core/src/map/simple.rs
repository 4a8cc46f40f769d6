//! Simplicity of a map and of its dual, with witnesses.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{EdgeId, FaceId, FlagMap, VertexId};

/// Kind of obstruction to the (SS) condition, named from the primal side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum WitnessKind {
    /// An edge whose two ends are the same vertex.
    Loop,
    /// Several edges joining the same two vertices.
    Parallel,
    /// An edge lying on one face only (a loop of the dual).
    OneSidedEdge,
    /// Two faces sharing more than one edge (parallel edges of the dual).
    SharedEdges,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WitnessKind::Loop => "loop",
            WitnessKind::Parallel => "parallel edges",
            WitnessKind::OneSidedEdge => "edge on a single face",
            WitnessKind::SharedEdges => "faces sharing several edges",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<VertexId>,
    pub faces: Vec<FaceId>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: edges [", self.kind)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")?;
        if !self.vertices.is_empty() {
            f.write_str(" at")?;
            for v in &self.vertices {
                write!(f, " {v}")?;
            }
        }
        if !self.faces.is_empty() {
            f.write_str(" in")?;
            for x in &self.faces {
                write!(f, " {x}")?;
            }
        }
        Ok(())
    }
}

/// Loops and parallel classes of the underlying graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicityReport {
    pub loops: Vec<EdgeId>,
    /// Each class lists all edges joining the same pair of distinct vertices.
    pub parallels: Vec<(VertexId, VertexId, Vec<EdgeId>)>,
}

impl SimplicityReport {
    pub fn of(m: &FlagMap) -> SimplicityReport {
        let c = m.cells();
        let mut loops = Vec::new();
        let mut classes: BTreeMap<(VertexId, VertexId), Vec<EdgeId>> = BTreeMap::new();
        for e in c.edges() {
            let x = c.edge_flags(e)[0];
            let (u, v) = m.edge_ends(x);
            if u == v {
                loops.push(e);
            } else {
                classes.entry((u.min(v), u.max(v))).or_default().push(e);
            }
        }
        let parallels = classes
            .into_iter()
            .filter(|(_, es)| es.len() > 1)
            .map(|((u, v), es)| (u, v, es))
            .collect();
        SimplicityReport { loops, parallels }
    }

    pub fn is_simple(&self) -> bool {
        self.loops.is_empty() && self.parallels.is_empty()
    }
}

/// Simplicity of a map and its dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsReport {
    pub primal: SimplicityReport,
    /// Computed on the dual map, whose vertex ids are the face ids of the primal.
    pub dual: SimplicityReport,
}

impl SsReport {
    pub fn of(m: &FlagMap) -> SsReport {
        SsReport {
            primal: SimplicityReport::of(m),
            dual: SimplicityReport::of(&m.dual()),
        }
    }

    pub fn holds(&self) -> bool {
        self.primal.is_simple() && self.dual.is_simple()
    }

    /// All witnesses, named from the primal point of view.
    pub fn witnesses(&self) -> Vec<Witness> {
        let mut out = Vec::new();
        for &e in &self.primal.loops {
            out.push(Witness {
                kind: WitnessKind::Loop,
                edges: vec![e],
                vertices: vec![],
                faces: vec![],
            });
        }
        for (u, v, es) in &self.primal.parallels {
            out.push(Witness {
                kind: WitnessKind::Parallel,
                edges: es.clone(),
                vertices: vec![*u, *v],
                faces: vec![],
            });
        }
        for &e in &self.dual.loops {
            out.push(Witness {
                kind: WitnessKind::OneSidedEdge,
                edges: vec![e],
                vertices: vec![],
                faces: vec![],
            });
        }
        for (f, g, es) in &self.dual.parallels {
            out.push(Witness {
                kind: WitnessKind::SharedEdges,
                edges: es.clone(),
                vertices: vec![],
                faces: vec![FaceId(f.0), FaceId(g.0)],
            });
        }
        out
    }
}

impl fmt::Display for SsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.witnesses();
        if w.is_empty() {
            return f.write_str("map and dual are simple");
        }
        for (i, x) in w.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FlagMap {
    pub fn is_simple(&self) -> bool {
        SimplicityReport::of(self).is_simple()
    }

    pub fn simplicity(&self) -> SimplicityReport {
        SimplicityReport::of(self)
    }

    pub fn ss_report(&self) -> SsReport {
        SsReport::of(self)
    }

    /// Both the map and its dual are simple graphs.
    pub fn satisfies_ss(&self) -> bool {
        self.ss_report().holds()
    }
}
