//! The full planar pipeline: σ to a plane map with a face whose z-monodromy is σ.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::map::{Flag, FlagMap};
use crate::monodromy::{z_monodromy, FaceFrame, MonodromyCandidate, MonodromyError, SignedPerm};
use crate::simplify::{repair, SimplifyError, TraceRecord};

use super::quad::{assemble_quad_map, marks, AssemblyError, MarkedQuadMap};
use super::radial::{extract_radial, Color};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizeError {
    #[error(transparent)]
    Assembly(#[from] AssemblyError),
    #[error(transparent)]
    Repair(#[from] SimplifyError),
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
    #[error("verification failed: expected {expected}, found {found}")]
    VerificationMismatch { expected: String, found: String },
}

/// A plane map realizing σ together with the intermediate construction.
#[derive(Clone, Debug)]
pub struct Realization {
    pub sigma: MonodromyCandidate,
    /// Satisfies (SS) and carries the marks `e1`, `face_F`, `p1..pk`, `a12..ak1`.
    pub map: FlagMap,
    pub frame: FaceFrame,
    pub quad: MarkedQuadMap,
    pub trace: Vec<TraceRecord>,
}

impl Realization {
    pub fn k(&self) -> usize {
        self.sigma.k()
    }

    pub fn monodromy(&self) -> SignedPerm {
        z_monodromy(&self.map, &self.frame).expect("realizations satisfy (SS)")
    }
}

/// Puts the marks `p{j}` on e_j and `a{j}{j+1}` at the vertex between e_j
/// and e_{j+1}.
fn relocate_marks(m: FlagMap, frame: &FaceFrame) -> Result<FlagMap, RealizeError> {
    let k = frame.k();
    let mut named: BTreeMap<String, Flag> = BTreeMap::new();
    named.insert(marks::E1.to_string(), frame.base_flag());
    named.insert(marks::FACE_F.to_string(), frame.base_flag());
    for j in 1..=k {
        named.insert(marks::p(j), frame.flag(j as i32));
        named.insert(marks::a(k, j), frame.flag((j % k + 1) as i32));
    }
    Ok(m.replace_marks(named).map_err(AssemblyError::from)?)
}

/// Realizes σ on the sphere. The chord placement depends on `seed`; the
/// z-monodromy of the result does not.
pub fn realize_planar(sigma: &MonodromyCandidate, seed: u64) -> Result<Realization, RealizeError> {
    let quad = assemble_quad_map(sigma, seed)?;
    let radial = extract_radial(&quad.map, &quad.coloring, Color::B);
    let base = radial.map.mark(marks::E1).ok_or_else(|| {
        AssemblyError::InternalDegeneracy("frame base missing from the radial map".into())
    })?;
    let repaired = repair(&radial.map, base)?;
    let frame = FaceFrame::from_flag(&repaired.map, repaired.base)?;
    let map = relocate_marks(repaired.map, &frame)?;
    let found = z_monodromy(&map, &frame)?;
    if &found != sigma.perm() {
        return Err(RealizeError::VerificationMismatch {
            expected: sigma.perm().to_string(),
            found: found.to_string(),
        });
    }
    Ok(Realization {
        sigma: sigma.clone(),
        map,
        frame,
        quad,
        trace: repaired.trace,
    })
}
