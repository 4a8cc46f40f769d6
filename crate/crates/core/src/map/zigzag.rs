//! Zigzags (Petrie walks).
//!
//! The traversal state is a flag `x`, read as the edge of `x` travelled from
//! the vertex of `x` towards the vertex of `s0 x`. One step is
//! `x -> s2 s1 s0 x`: cross the edge, turn onto the next edge inside the
//! current face, then switch to the other face of that new edge. The reversed
//! walk is the orbit of `s2 s0 x`.

use super::{EdgeId, Flag, FlagMap, OrientedEdge, SsReport};

/// One directed zigzag, stored as the flags visited in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zigzag {
    flags: Vec<Flag>,
    edges: Vec<EdgeId>,
}

/// A zigzag together with its reversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagPair {
    pub forward: Zigzag,
    pub reverse: Zigzag,
}

#[inline]
pub(crate) fn zigzag_step(m: &FlagMap, x: Flag) -> Flag {
    m.s2(m.s1(m.s0(x)))
}

#[inline]
pub(crate) fn zigzag_reverse_flag(m: &FlagMap, x: Flag) -> Flag {
    m.s2(m.s0(x))
}

impl Zigzag {
    fn from_start(m: &FlagMap, start: Flag) -> Zigzag {
        let mut flags = vec![start];
        let mut x = zigzag_step(m, start);
        while x != start {
            flags.push(x);
            x = zigzag_step(m, x);
        }
        let edges = flags.iter().map(|&f| m.cells().edge_of(f)).collect();
        Zigzag { flags, edges }
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    /// The cyclic edge sequence e_1, ..., e_n.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn oriented_edges(&self, m: &FlagMap) -> Vec<OrientedEdge> {
        self.flags.iter().map(|&x| m.oriented_edge(x)).collect()
    }

    /// The same walk in the opposite direction.
    pub fn reversed(&self, m: &FlagMap) -> Zigzag {
        let last = *self.flags.last().expect("zigzags are non-empty");
        Zigzag::from_start(m, zigzag_reverse_flag(m, last))
    }

    pub fn contains_flag(&self, x: Flag) -> bool {
        self.flags.contains(&x)
    }

    /// True if the two edge sequences agree up to a cyclic shift.
    pub fn same_cycle_as(&self, other: &[EdgeId]) -> bool {
        cyclic_eq(&self.edges, other)
    }
}

pub(crate) fn cyclic_eq<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|s| (0..a.len()).all(|i| a[(i + s) % a.len()] == b[i]))
}

/// All orbits of the zigzag step, without any simplicity requirement.
/// Orbits are listed by their smallest flag, each starting at that flag.
pub fn petrie_orbits(m: &FlagMap) -> Vec<Zigzag> {
    let n = m.flag_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let z = Zigzag::from_start(m, start);
        for &x in z.flags() {
            seen[x] = true;
        }
        out.push(z);
    }
    out
}

/// Zigzags grouped with their reversals. Requires the (SS) condition, under
/// which the continuation of any pair of consecutive edges is unique.
pub fn trace_zigzags(m: &FlagMap) -> Result<Vec<ZigzagPair>, SsReport> {
    let report = SsReport::of(m);
    if !report.holds() {
        return Err(report);
    }
    let orbits = petrie_orbits(m);
    let mut orbit_of = vec![usize::MAX; m.flag_count()];
    for (i, z) in orbits.iter().enumerate() {
        for &x in z.flags() {
            orbit_of[x] = i;
        }
    }
    let mut used = vec![false; orbits.len()];
    let mut out = Vec::new();
    for (i, z) in orbits.iter().enumerate() {
        if used[i] {
            continue;
        }
        let j = orbit_of[zigzag_reverse_flag(m, z.flags()[0])];
        used[i] = true;
        used[j] = true;
        out.push(ZigzagPair {
            forward: z.clone(),
            reverse: z.reversed(m),
        });
    }
    Ok(out)
}
