//! Isomorphism of maps by anchored propagation.

use super::{Flag, FlagMap};

/// A flag bijection `phi` (indexed by flags of `a`) commuting with all three
/// involutions, if one exists. Marks are ignored.
pub fn find_isomorphism(a: &FlagMap, b: &FlagMap) -> Option<Vec<Flag>> {
    let n = a.flag_count();
    if n != b.flag_count()
        || a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.face_count() != b.face_count()
    {
        return None;
    }
    let mut da = a.cells().vertex_degrees();
    let mut db = b.cells().vertex_degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    let mut fa = a.cells().face_sizes();
    let mut fb = b.cells().face_sizes();
    fa.sort_unstable();
    fb.sort_unstable();
    if fa != fb {
        return None;
    }
    (0..n).find_map(|target| extend(a, b, target))
}

fn extend(a: &FlagMap, b: &FlagMap, target: Flag) -> Option<Vec<Flag>> {
    let n = a.flag_count();
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    phi[0] = target;
    used[target] = true;
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        let y = phi[x];
        for (xa, yb) in [
            (a.s0(x), b.s0(y)),
            (a.s1(x), b.s1(y)),
            (a.s2(x), b.s2(y)),
        ] {
            if phi[xa] == usize::MAX {
                if used[yb] {
                    return None;
                }
                phi[xa] = yb;
                used[yb] = true;
                stack.push(xa);
            } else if phi[xa] != yb {
                return None;
            }
        }
    }
    Some(phi)
}

pub fn is_isomorphic(a: &FlagMap, b: &FlagMap) -> bool {
    find_isomorphism(a, b).is_some()
}
