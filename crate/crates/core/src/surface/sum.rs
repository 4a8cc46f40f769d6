//! Connected sums along triangular faces and the base maps of closed surfaces.

use std::collections::BTreeMap;

use crate::map::{k6_projective_map, k7_torus_map, FaceId, Flag, FlagMap};

use super::{SurfaceError, SurfaceSpec};

/// Number of ways to identify the boundaries of two triangles vertex to vertex.
pub const GLUINGS: u8 = 6;

/// Mark naming a triangular face of a base map.
pub const BASE_TRIANGLE: &str = "T";

/// The six flags of a triangle, walked alternately by s0 and s1 from its first flag.
fn hexagon(m: &FlagMap, f: FaceId) -> Result<Vec<Flag>, SurfaceError> {
    let c = m.cells();
    if c.face_size(f) != 3 {
        return Err(SurfaceError::FaceNotTriangular {
            face: f,
            size: c.face_size(f),
        });
    }
    let mut out = vec![c.face_flags(f)[0]];
    for i in 0..5 {
        let x = out[i];
        out.push(if i % 2 == 0 { m.s0(x) } else { m.s1(x) });
    }
    Ok(out)
}

/// Removes the interiors of the triangles `t1` of `m1` and `t2` of `m2` and
/// identifies their boundaries. `gluing` (0..6) selects the flag of `t2`
/// matched with the first flag of `t1`; the vertex correspondence follows.
/// Marks of `m1` are kept, marks of `m2` are dropped.
pub fn connected_sum(
    m1: &FlagMap,
    t1: FaceId,
    m2: &FlagMap,
    t2: FaceId,
    gluing: u8,
) -> Result<FlagMap, SurfaceError> {
    if gluing >= GLUINGS {
        return Err(SurfaceError::BadGluing(gluing));
    }
    let h1 = hexagon(m1, t1)?;
    let h2 = hexagon(m2, t2)?;
    // φ sends h1[i] to the flag reached from h2[g] by the same word
    let g = gluing as usize;
    let mut phi: BTreeMap<Flag, Flag> = BTreeMap::new();
    let mut y = h2[g];
    for (i, &x) in h1.iter().enumerate() {
        phi.insert(x, y);
        y = if i % 2 == 0 { m2.s0(y) } else { m2.s1(y) };
    }
    let n1 = m1.flag_count();
    let n2 = m2.flag_count();
    let mut index1 = vec![usize::MAX; n1];
    let mut index2 = vec![usize::MAX; n2];
    let mut count = 0;
    for (x, slot) in index1.iter_mut().enumerate() {
        if m1.cells().face_of(x) != t1 {
            *slot = count;
            count += 1;
        }
    }
    for (x, slot) in index2.iter_mut().enumerate() {
        if m2.cells().face_of(x) != t2 {
            *slot = count;
            count += 1;
        }
    }
    let mut s = [vec![0; count], vec![0; count], vec![0; count]];
    for x in 0..n1 {
        let i = index1[x];
        if i == usize::MAX {
            continue;
        }
        s[0][i] = index1[m1.s0(x)];
        s[1][i] = index1[m1.s1(x)];
        let y = m1.s2(x);
        s[2][i] = match phi.get(&y) {
            Some(&z) => index2[m2.s2(z)],
            None => index1[y],
        };
    }
    let inverse: BTreeMap<Flag, Flag> = phi.iter().map(|(&a, &b)| (b, a)).collect();
    for x in 0..n2 {
        let i = index2[x];
        if i == usize::MAX {
            continue;
        }
        s[0][i] = index2[m2.s0(x)];
        s[1][i] = index2[m2.s1(x)];
        let y = m2.s2(x);
        s[2][i] = match inverse.get(&y) {
            Some(&z) => index1[m1.s2(z)],
            None => index2[y],
        };
    }
    let marks = m1
        .marks()
        .iter()
        .filter(|(_, &x)| index1[x] != usize::MAX)
        .map(|(k, &x)| (k.clone(), index1[x]))
        .collect();
    let [s0, s1, s2] = s;
    Ok(FlagMap::with_marks(s0, s1, s2, marks)?)
}

/// The gluing used by default: the first one whose result satisfies (SS),
/// or gluing 0 when none does.
pub fn default_gluing(
    m1: &FlagMap,
    t1: FaceId,
    m2: &FlagMap,
    t2: FaceId,
) -> Result<u8, SurfaceError> {
    for g in 0..GLUINGS {
        if connected_sum(m1, t1, m2, t2, g)?.satisfies_ss() {
            return Ok(g);
        }
    }
    Ok(0)
}

/// Connected sum with the default gluing, checked for (SS).
fn checked_sum(m1: &FlagMap, t1: FaceId, m2: &FlagMap, t2: FaceId) -> Result<FlagMap, SurfaceError> {
    let g = default_gluing(m1, t1, m2, t2)?;
    let out = connected_sum(m1, t1, m2, t2, g)?;
    let report = out.ss_report();
    if !report.holds() {
        return Err(SurfaceError::CompositionSsFailure {
            faces: (t1, t2),
            report: report.to_string(),
        });
    }
    Ok(out)
}

/// A map on the surface `spec` satisfying (SS) with a triangular face marked
/// [`BASE_TRIANGLE`]: K7 on the torus, K6 on the projective plane, and
/// connected sums of copies of these for higher genus.
pub fn base_map(spec: SurfaceSpec) -> Result<FlagMap, SurfaceError> {
    let (piece, copies) = match spec {
        SurfaceSpec::Sphere => return Err(SurfaceError::NoBaseForSphere),
        SurfaceSpec::Orientable(g) => (k7_torus_map(), g),
        SurfaceSpec::NonOrientable(h) => (k6_projective_map(), h),
    };
    let piece = piece.without_marks();
    let mut acc = piece.clone();
    for _ in 1..copies {
        // glue at a face of the copy added last, which is the highest face id
        let t1 = FaceId(acc.face_count() - 1);
        acc = checked_sum(&acc, t1, &piece, FaceId(0))?;
    }
    let t = acc.cells().face_flags(FaceId(0))[0];
    Ok(acc.with_mark(BASE_TRIANGLE, t)?)
}
