//! Local surgery: loop removal, the two expansion gadgets and digon insertion.

use crate::map::{Dart, EdgeId, FaceId, FlagMap, RotationSystem, Side};

use super::{loop_bounds_face, multiplicity_excess, rotation_of, SimplifyError};

fn dart_of_edge(m: &FlagMap, r: &RotationSystem, e: EdgeId) -> Result<Dart, SimplifyError> {
    if e.0 >= m.edge_count() {
        return Err(SimplifyError::NoSuchEdge(e.0));
    }
    let x = m.cells().edge_flags(e)[0];
    let (d, _) = m.dart_side(x).ok_or(crate::map::MapError::NonOrientable)?;
    debug_assert!(r.is_alive(d));
    Ok(d)
}

pub(crate) fn on_face(m: &FlagMap, e: EdgeId, f: FaceId) -> bool {
    m.cells()
        .edge_flags(e)
        .iter()
        .any(|&x| m.cells().face_of(x) == f)
}

/// Deletes a loop that bounds a monogon. The remaining faces, and every
/// zigzag avoiding the loop, are unchanged.
pub fn remove_loop_face(m: &FlagMap, e: EdgeId) -> Result<FlagMap, SimplifyError> {
    if e.0 >= m.edge_count() {
        return Err(SimplifyError::NoSuchEdge(e.0));
    }
    let (u, v) = m.edge_ends(m.cells().edge_flags(e)[0]);
    if u != v || !loop_bounds_face(m, e) {
        return Err(SimplifyError::NotAFaceLoop(e));
    }
    let mut r = rotation_of(m)?;
    let d = dart_of_edge(m, &r, e)?;
    r.remove_edge(d);
    Ok(r.to_flag_map()?)
}

/// Replaces the edge `e` by an expansion gadget: the five-vertex gadget when
/// the ends of `e` differ and the four-vertex gadget when `e` is a loop not
/// bounding a face. The two zigzag strands crossing `e` are rerouted through
/// the gadget with the same external ends.
pub fn expand_edge(
    m: &FlagMap,
    e: EdgeId,
    protected: Option<FaceId>,
) -> Result<FlagMap, SimplifyError> {
    if e.0 >= m.edge_count() {
        return Err(SimplifyError::NoSuchEdge(e.0));
    }
    if let Some(f) = protected {
        if on_face(m, e, f) {
            return Err(SimplifyError::EdgeOnProtectedFace(e));
        }
    }
    let mut r = rotation_of(m)?;
    let d = dart_of_edge(m, &r, e)?;
    let t = r.twin(d);
    let is_loop = r.origin(d) == r.origin(t);
    if is_loop {
        if r.next(d) == t || r.next(t) == d {
            return Err(SimplifyError::FaceLoop(e));
        }
        expand_loop(&mut r, d);
    } else {
        expand_link(&mut r, d);
    }
    let out = r.to_flag_map()?;
    check_patch(m, &out, is_loop)?;
    Ok(out)
}

fn check_patch(before: &FlagMap, after: &FlagMap, is_loop: bool) -> Result<(), SimplifyError> {
    let (dv, de, df) = if is_loop { (4, 8, 4) } else { (5, 11, 6) };
    let grew = (
        after.vertex_count() as i64 - before.vertex_count() as i64,
        after.edge_count() as i64 - before.edge_count() as i64,
        after.face_count() as i64 - before.face_count() as i64,
    );
    if grew != (dv, de, df) {
        return Err(SimplifyError::PatchContractViolation(format!(
            "cell counts changed by {grew:?}, expected {:?}",
            (dv, de, df)
        )));
    }
    let (x, y) = (multiplicity_excess(before), multiplicity_excess(after));
    if y >= x {
        return Err(SimplifyError::PatchContractViolation(format!(
            "loops and multiple edges did not decrease ({x} -> {y})"
        )));
    }
    Ok(())
}

/// Gadget for an edge `e = v'v''` with distinct ends. New vertices A..E and
/// twelve edges v'A, v'B, AB, AC, AE, CE, BD, CD, Cv'', Dv'', Ev'', Bv''.
fn expand_link(r: &mut RotationSystem, d: Dart) {
    let t = r.twin(d);
    let (v1, v2) = (r.origin(d), r.origin(t));
    let [a, b, c, dd, e] = [(); 5].map(|_| r.add_vertex());
    let (v1_a, a_v1) = r.add_edge(v1, a);
    let (v1_b, b_v1) = r.add_edge(v1, b);
    let (a_b, b_a) = r.add_edge(a, b);
    let (a_c, c_a) = r.add_edge(a, c);
    let (a_e, e_a) = r.add_edge(a, e);
    let (c_e, e_c) = r.add_edge(c, e);
    let (b_d, d_b) = r.add_edge(b, dd);
    let (c_d, d_c) = r.add_edge(c, dd);
    let (c_v2, v2_c) = r.add_edge(c, v2);
    let (d_v2, v2_d) = r.add_edge(dd, v2);
    let (e_v2, v2_e) = r.add_edge(e, v2);
    let (b_v2, v2_b) = r.add_edge(b, v2);
    r.replace_in_rotation(d, &[v1_a, v1_b]);
    r.replace_in_rotation(t, &[v2_b, v2_d, v2_c, v2_e]);
    r.remove_edge(d);
    r.set_rotation_ccw(a, vec![a_c, a_e, a_v1, a_b]);
    r.set_rotation_ccw(b, vec![b_d, b_a, b_v1, b_v2]);
    r.set_rotation_ccw(c, vec![c_e, c_a, c_d, c_v2]);
    r.set_rotation_ccw(dd, vec![d_v2, d_c, d_b]);
    r.set_rotation_ccw(e, vec![e_a, e_c, e_v2]);
}

/// Gadget for a loop at `v` with darts α = `d` and β = its twin. New vertices
/// S, P, Q, R; the loop becomes v-S (at α) and v-P (at β), with SP, QP, PR,
/// QS, SR, vQ, vR.
fn expand_loop(r: &mut RotationSystem, alpha: Dart) {
    let beta = r.twin(alpha);
    let v = r.origin(alpha);
    let mut ccw: Vec<Dart> = r.rotation(v).to_vec();
    ccw.reverse();
    let ia = ccw.iter().position(|&x| x == alpha).expect("dart at v");
    ccw.rotate_left(ia);
    let ib = ccw.iter().position(|&x| x == beta).expect("dart at v");
    let xs: Vec<Dart> = ccw[1..ib].to_vec();
    let ys: Vec<Dart> = ccw[ib + 1..].to_vec();
    let [s, p, q, rr] = [(); 4].map(|_| r.add_vertex());
    let (v_s, s_v) = r.add_edge(v, s);
    let (v_p, p_v) = r.add_edge(v, p);
    let (s_p, p_s) = r.add_edge(s, p);
    let (q_p, p_q) = r.add_edge(q, p);
    let (p_r, r_p) = r.add_edge(p, rr);
    let (q_s, s_q) = r.add_edge(q, s);
    let (s_r, r_s) = r.add_edge(s, rr);
    let (v_q, q_v) = r.add_edge(v, q);
    let (v_r, r_v) = r.add_edge(v, rr);
    let mut at_v = vec![v_s];
    at_v.extend(xs);
    at_v.extend([v_r, v_p, v_q]);
    at_v.extend(ys);
    r.set_rotation_ccw(v, at_v);
    r.remove_edge(alpha);
    r.set_rotation_ccw(s, vec![s_v, s_q, s_p, s_r]);
    r.set_rotation_ccw(p, vec![p_r, p_s, p_q, p_v]);
    r.set_rotation_ccw(q, vec![q_p, q_s, q_v]);
    r.set_rotation_ccw(rr, vec![r_s, r_p, r_v]);
}

/// Splits face `w` by two parallel chords into two faces and a digon so that
/// the edges `e1` and `e2` of `w` end up on different faces. The chords join
/// the ends reached after `e1` and after `e2` when walking around `w`.
/// Dually this pushes one strand of the medial map across another, which
/// leaves the z-monodromy of every face not equal to `w` unchanged.
pub fn insert_digon(
    m: &FlagMap,
    w: FaceId,
    e1: EdgeId,
    e2: EdgeId,
) -> Result<FlagMap, SimplifyError> {
    for e in [e1, e2] {
        if e.0 >= m.edge_count() {
            return Err(SimplifyError::NoSuchEdge(e.0));
        }
    }
    let mut r = rotation_of(m)?;
    let dart_with_w_right = |e: EdgeId| -> Result<Dart, SimplifyError> {
        let c = m.cells();
        let x = c
            .edge_flags(e)
            .iter()
            .copied()
            .find(|&x| c.face_of(x) == w)
            .ok_or_else(|| {
                SimplifyError::NotSeparable(w, w, format!("edge {e} is not on face {w}"))
            })?;
        let (d, side) = m.dart_side(x).ok_or(crate::map::MapError::NonOrientable)?;
        Ok(match side {
            Side::Plus => d,
            Side::Minus => r.twin(d),
        })
    };
    let d1 = dart_with_w_right(e1)?;
    let d2 = dart_with_w_right(e2)?;
    let a = r.face_next(d1);
    let b = r.face_next(d2);
    let (x, y) = (r.origin(a), r.origin(b));
    if x == y {
        return Err(SimplifyError::NotSeparable(
            w,
            w,
            format!("edges {e1} and {e2} lead to the same vertex"),
        ));
    }
    let (p1, q1) = r.add_edge(x, y);
    let (p2, q2) = r.add_edge(x, y);
    r.insert_after(a, &[p1, p2]);
    r.insert_after(b, &[q2, q1]);
    Ok(r.to_flag_map()?)
}
