//! Realizations on closed surfaces other than the sphere.
//!
//! A planar realization is turned back into its 4-regular medial map G,
//! Borromean rings are drawn across an edge of G away from the protected
//! face, and the radial map R_b of the result is glued to a base map of the
//! target surface along the isolated triangle T created by the rings.

mod borromean;
mod sum;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::map::{FaceId, FlagMap, MapError};
use crate::monodromy::{z_monodromy, FaceFrame, MonodromyCandidate, MonodromyError};
use crate::planar::{extract_radial, medial, realize_planar, Color, RealizeError, Realization};

pub use borromean::{borromean_augment, eligible_edge, Augmented};
pub use sum::{base_map, connected_sum, default_gluing, BASE_TRIANGLE, GLUINGS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("face {face} has {size} sides; a triangle is required")]
    FaceNotTriangular { face: FaceId, size: usize },
    #[error("gluing {0} is out of range (0..6)")]
    BadGluing(u8),
    #[error("no edge separates a b face from a w face other than the protected one")]
    NoEligibleEdge,
    #[error("patch check failed: {0}")]
    PatchContractViolation(String),
    #[error("connected sum along faces {} and {} is not (SS): {report}", faces.0, faces.1)]
    CompositionSsFailure {
        faces: (FaceId, FaceId),
        report: String,
    },
    #[error("the sphere needs no base map")]
    NoBaseForSphere,
    #[error("unusable base map: {0}")]
    BadBaseMap(String),
    #[error("invalid surface `{0}`; expected sphere, genus:<g> or cross:<h>")]
    Parse(String),
    #[error("verification failed: {0}")]
    VerificationMismatch(String),
    #[error(transparent)]
    Realize(#[from] RealizeError),
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
    #[error(transparent)]
    Map(#[from] MapError),
}

/// A closed surface: the sphere, the orientable surface of genus g ≥ 1 or the
/// non-orientable surface with h ≥ 1 crosscaps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SurfaceSpec {
    Sphere,
    Orientable(usize),
    NonOrientable(usize),
}

impl SurfaceSpec {
    pub fn euler_characteristic(self) -> i64 {
        match self {
            SurfaceSpec::Sphere => 2,
            SurfaceSpec::Orientable(g) => 2 - 2 * g as i64,
            SurfaceSpec::NonOrientable(h) => 2 - h as i64,
        }
    }

    pub fn is_orientable(self) -> bool {
        !matches!(self, SurfaceSpec::NonOrientable(_))
    }

    /// The surface a map lives on, read off its Euler characteristic and
    /// orientability.
    pub fn of_map(m: &FlagMap) -> SurfaceSpec {
        let chi = m.euler_characteristic();
        match (m.is_orientable(), chi) {
            (true, 2) => SurfaceSpec::Sphere,
            (true, _) => SurfaceSpec::Orientable(((2 - chi) / 2) as usize),
            (false, _) => SurfaceSpec::NonOrientable((2 - chi) as usize),
        }
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceSpec::Sphere => f.write_str("sphere"),
            SurfaceSpec::Orientable(g) => write!(f, "genus:{g}"),
            SurfaceSpec::NonOrientable(h) => write!(f, "cross:{h}"),
        }
    }
}

impl FromStr for SurfaceSpec {
    type Err = SurfaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || SurfaceError::Parse(s.to_string());
        if s == "sphere" || s == "genus:0" {
            return Ok(SurfaceSpec::Sphere);
        }
        let (kind, n) = s.split_once(':').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        match (kind.trim(), n) {
            ("genus", g) if g >= 1 => Ok(SurfaceSpec::Orientable(g)),
            ("cross", h) if h >= 1 => Ok(SurfaceSpec::NonOrientable(h)),
            _ => Err(bad()),
        }
    }
}

/// A map on the requested surface with a framed face realizing σ.
#[derive(Clone, Debug)]
pub struct SurfaceRealization {
    pub spec: SurfaceSpec,
    pub map: FlagMap,
    pub frame: FaceFrame,
    pub planar: Realization,
}

/// Realizes σ as the z-monodromy of a k-gonal face of a map on `spec`
/// satisfying (SS). Every stage is verified; the sphere case is the planar
/// realization itself.
pub fn realize_on_surface(
    sigma: &MonodromyCandidate,
    spec: SurfaceSpec,
    seed: u64,
) -> Result<SurfaceRealization, SurfaceError> {
    let planar = realize_planar(sigma, seed)?;
    if spec == SurfaceSpec::Sphere {
        return Ok(SurfaceRealization {
            spec,
            map: planar.map.clone(),
            frame: planar.frame.clone(),
            planar,
        });
    }
    let base = base_map(spec)?;
    let t2 = base.cells().face_of(base.mark(BASE_TRIANGLE).expect("base maps mark T"));
    glue_onto(planar, &base, t2, spec, sigma)
}

/// Realizes σ on the surface of a user-supplied base map, glued along its
/// triangular face carrying the mark [`BASE_TRIANGLE`]. The base map must
/// satisfy (SS).
pub fn realize_with_base_map(
    sigma: &MonodromyCandidate,
    base: &FlagMap,
    seed: u64,
) -> Result<SurfaceRealization, SurfaceError> {
    let x = base
        .mark(BASE_TRIANGLE)
        .ok_or_else(|| SurfaceError::BadBaseMap(format!("no face is marked `{BASE_TRIANGLE}`")))?;
    let t2 = base.cells().face_of(x);
    let size = base.cells().face_size(t2);
    if size != 3 {
        return Err(SurfaceError::FaceNotTriangular { face: t2, size });
    }
    let report = base.ss_report();
    if !report.holds() {
        return Err(SurfaceError::BadBaseMap(format!("not (SS): {report}")));
    }
    let spec = SurfaceSpec::of_map(base);
    let planar = realize_planar(sigma, seed)?;
    glue_onto(planar, base, t2, spec, sigma)
}

fn glue_onto(
    planar: Realization,
    base: &FlagMap,
    t2: FaceId,
    spec: SurfaceSpec,
    sigma: &MonodromyCandidate,
) -> Result<SurfaceRealization, SurfaceError> {
    let (g, coloring) = medial(&planar.map);
    let n = planar.map.flag_count();
    let protected = g.cells().face_of(n + planar.frame.base_flag());
    let aug = borromean_augment(&g, &coloring, protected, None)?;
    let radial = extract_radial(&aug.map, &aug.coloring, Color::B);
    let t_flag = radial.from_parent[aug.triangle_flag].ok_or_else(|| {
        SurfaceError::PatchContractViolation("triangle flag is not in a b face".into())
    })?;
    let gamma = radial.map;
    let base_flag = gamma
        .mark(crate::planar::quad::marks::E1)
        .ok_or_else(|| SurfaceError::PatchContractViolation("frame base lost".into()))?;
    let t = gamma.cells().face_of(t_flag);
    check_augmented(&gamma, base_flag, t, sigma)?;

    let gluing = default_gluing(&gamma, t, base, t2)?;
    let map = connected_sum(&gamma, t, base, t2, gluing)?;
    let frame = FaceFrame::from_mark(&map, crate::planar::quad::marks::E1)?;
    verify(&map, &frame, sigma, spec)?;
    Ok(SurfaceRealization {
        spec,
        map,
        frame,
        planar,
    })
}

/// Checks R_b of the augmented map: (SS), unchanged z-monodromy, and no
/// zigzag through the protected face touching T.
fn check_augmented(
    gamma: &FlagMap,
    base_flag: crate::map::Flag,
    t: FaceId,
    sigma: &MonodromyCandidate,
) -> Result<(), SurfaceError> {
    let report = gamma.ss_report();
    if !report.holds() {
        return Err(SurfaceError::PatchContractViolation(format!(
            "augmented radial map is not (SS): {report}"
        )));
    }
    let frame = FaceFrame::from_flag(gamma, base_flag)?;
    let found = z_monodromy(gamma, &frame)?;
    if &found != sigma.perm() {
        return Err(SurfaceError::VerificationMismatch(format!(
            "augmentation changed the z-monodromy to {found}"
        )));
    }
    if !zigzags_avoid(gamma, frame.face(), t) {
        return Err(SurfaceError::PatchContractViolation(
            "a zigzag through the protected face meets T".into(),
        ));
    }
    Ok(())
}

/// Whether every zigzag containing an edge of `f` avoids the edges of `t`.
pub fn zigzags_avoid(m: &FlagMap, f: FaceId, t: FaceId) -> bool {
    let c = m.cells();
    let edges_of = |face: FaceId| -> Vec<crate::map::EdgeId> {
        c.face_flags(face).iter().map(|&x| c.edge_of(x)).collect()
    };
    let (ef, et) = (edges_of(f), edges_of(t));
    crate::map::petrie_orbits(m).iter().all(|z| {
        let through_f = z.edges().iter().any(|e| ef.contains(e));
        !through_f || !z.edges().iter().any(|e| et.contains(e))
    })
}

fn verify(
    map: &FlagMap,
    frame: &FaceFrame,
    sigma: &MonodromyCandidate,
    spec: SurfaceSpec,
) -> Result<(), SurfaceError> {
    let report = map.ss_report();
    if !report.holds() {
        return Err(SurfaceError::VerificationMismatch(format!("result is not (SS): {report}")));
    }
    if map.euler_characteristic() != spec.euler_characteristic()
        || map.is_orientable() != spec.is_orientable()
    {
        return Err(SurfaceError::VerificationMismatch(format!(
            "result has Euler characteristic {} and is {}orientable, expected {spec}",
            map.euler_characteristic(),
            if map.is_orientable() { "" } else { "non-" }
        )));
    }
    let found = z_monodromy(map, frame)?;
    if &found != sigma.perm() {
        return Err(SurfaceError::VerificationMismatch(format!(
            "z-monodromy {found}, expected {}",
            sigma.perm()
        )));
    }
    Ok(())
}
