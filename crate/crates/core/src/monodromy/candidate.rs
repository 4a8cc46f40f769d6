//! Admissible z-monodromy candidates, their enumeration and classification.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use thiserror::Error;

use super::perm::{index_symbol, symbols, PermError, SignedPerm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CandidateError {
    #[error("k must be at least 3, got {0}")]
    KTooSmall(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("condition M1 fails: sigma({i}) = {j} but sigma({}) = {found} instead of {}", -j, -i)]
    M1Violation { i: i32, j: i32, found: i32 },
    #[error("condition M2 fails: sigma({i}) = {}", -i)]
    M2Violation { i: i32 },
}

/// A permutation of [k]± satisfying M1 (`σ(i) = j ⇒ σ(-j) = -i`) and M2 (`σ(i) ≠ -i`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonodromyCandidate {
    perm: SignedPerm,
}

/// Checks M1 and M2, reporting the first failing symbol in the order 1..k, -k..-1.
pub fn check_conditions(p: &SignedPerm) -> Result<(), CandidateError> {
    for i in symbols(p.k()) {
        let j = p.apply(i);
        let found = p.apply(-j);
        if found != -i {
            return Err(CandidateError::M1Violation { i, j, found });
        }
    }
    for i in symbols(p.k()) {
        if p.apply(i) == -i {
            return Err(CandidateError::M2Violation { i });
        }
    }
    Ok(())
}

impl MonodromyCandidate {
    pub fn new(perm: SignedPerm) -> Result<Self, CandidateError> {
        if perm.k() < 3 {
            return Err(CandidateError::KTooSmall(perm.k()));
        }
        check_conditions(&perm)?;
        Ok(MonodromyCandidate { perm })
    }

    pub fn parse(text: &str, k: usize) -> Result<Self, CandidateError> {
        if k < 3 {
            return Err(CandidateError::KTooSmall(k));
        }
        Self::new(SignedPerm::parse(text, k)?)
    }

    pub fn identity(k: usize) -> Result<Self, CandidateError> {
        Self::new(SignedPerm::identity(k))
    }

    pub fn k(&self) -> usize {
        self.perm.k()
    }

    pub fn apply(&self, x: i32) -> i32 {
        self.perm.apply(x)
    }

    pub fn perm(&self) -> &SignedPerm {
        &self.perm
    }

    pub fn into_perm(self) -> SignedPerm {
        self.perm
    }

    /// The involution `x ↦ -σ(x)`, fixed-point-free exactly for candidates.
    pub fn pairing(&self) -> SignedPerm {
        SignedPerm::from_fn(self.k(), |x| -self.apply(x)).expect("negation keeps bijectivity")
    }

    /// Candidate with `σ(x) = -ν(x)` for a fixed-point-free involution `ν`.
    pub fn from_pairing(nu: &SignedPerm) -> Result<Self, CandidateError> {
        Self::new(SignedPerm::from_fn(nu.k(), |x| -nu.apply(x))?)
    }

    /// A uniformly random candidate.
    pub fn random<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Result<Self, CandidateError> {
        if k < 3 {
            return Err(CandidateError::KTooSmall(k));
        }
        let digits: Vec<usize> = (0..k).map(|t| rng.gen_range(0..2 * (k - t) - 1)).collect();
        Ok(candidate_from_digits(k, &digits))
    }
}

impl fmt::Display for MonodromyCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.perm.fmt(f)
    }
}

impl fmt::Debug for MonodromyCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonodromyCandidate(k={}, {})", self.k(), self.perm)
    }
}

/// `(2k - 1)!!`, the number of candidates for a given k.
pub fn count_candidates(k: usize) -> u128 {
    (1..=k as u128).map(|t| 2 * t - 1).product()
}

/// Builds the candidate encoded by mixed-radix digits: at step t the smallest
/// unpaired symbol is paired with the `digits[t]`-th remaining unpaired one.
fn candidate_from_digits(k: usize, digits: &[usize]) -> MonodromyCandidate {
    let mut free: Vec<usize> = (0..2 * k).collect();
    let mut nu = vec![0usize; 2 * k];
    for &d in digits {
        let a = free.remove(0);
        let b = free.remove(d);
        nu[a] = b;
        nu[b] = a;
    }
    let img = (0..2 * k)
        .map(|i| -index_symbol(k, nu[i]))
        .collect::<Vec<_>>();
    MonodromyCandidate {
        perm: SignedPerm::from_images(k, img).expect("pairing gives a bijection"),
    }
}

/// Lazily enumerates all candidates for `k` in a fixed order.
pub struct CandidateIter {
    k: usize,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for CandidateIter {
    type Item = MonodromyCandidate;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = candidate_from_digits(self.k, &self.digits);
        let mut t = self.k;
        loop {
            if t == 0 {
                self.done = true;
                break;
            }
            t -= 1;
            let radix = 2 * (self.k - t) - 1;
            if self.digits[t] + 1 < radix {
                self.digits[t] += 1;
                break;
            }
            self.digits[t] = 0;
        }
        Some(out)
    }
}

pub fn enumerate_candidates(k: usize) -> Result<CandidateIter, CandidateError> {
    if k < 3 {
        return Err(CandidateError::KTooSmall(k));
    }
    Ok(CandidateIter {
        k,
        digits: vec![0; k],
        done: false,
    })
}

/// Generators of the relabelling group used by [`classify_candidates`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Symmetry {
    /// Moving the base edge along the face: conjugation by `i ↦ i + 1`.
    pub rotation: bool,
    /// Reversing the orientation of the face: conjugation by `i ↦ -(k + 1 - i)`.
    pub reflection: bool,
    /// Replacing σ by its inverse.
    pub reversal: bool,
}

impl Symmetry {
    pub const NONE: Symmetry = Symmetry {
        rotation: false,
        reflection: false,
        reversal: false,
    };
    pub const ALL: Symmetry = Symmetry {
        rotation: true,
        reflection: true,
        reversal: true,
    };

    /// Parses a comma-separated subset of `rotation`, `reflection`, `reversal`,
    /// or one of `none` / `all`.
    pub fn parse(text: &str) -> Option<Symmetry> {
        let mut s = Symmetry::NONE;
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "none" => {}
                "all" => s = Symmetry::ALL,
                "rotation" => s.rotation = true,
                "reflection" => s.reflection = true,
                "reversal" => s.reversal = true,
                _ => return None,
            }
        }
        Some(s)
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.rotation {
            parts.push("rotation");
        }
        if self.reflection {
            parts.push("reflection");
        }
        if self.reversal {
            parts.push("reversal");
        }
        if parts.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

/// Relabelling for a base edge moved `steps` positions forward: symbol i of
/// the new frame is symbol `i + steps` of the old one.
pub fn rotation_relabel(k: usize, steps: usize) -> SignedPerm {
    SignedPerm::from_fn(k, |x| {
        let a = x.unsigned_abs() as usize;
        let b = ((a - 1 + steps) % k + 1) as i32;
        if x > 0 {
            b
        } else {
            -b
        }
    })
    .expect("rotation is a bijection")
}

/// Relabelling for the reversed orientation with base edge `-e_k`:
/// symbol i of the new frame is symbol `-(k + 1 - i)` of the old one.
pub fn reflection_relabel(k: usize) -> SignedPerm {
    SignedPerm::from_fn(k, |x| {
        let a = x.unsigned_abs() as i32;
        let b = k as i32 + 1 - a;
        if x > 0 {
            -b
        } else {
            b
        }
    })
    .expect("reflection is a bijection")
}

/// One orbit of candidates under a symmetry group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateClass {
    /// The member with the lexicographically smallest image table.
    pub representative: MonodromyCandidate,
    pub members: Vec<MonodromyCandidate>,
}

/// Partitions all candidates for `k` into orbits of the chosen group.
/// Classes are ordered by representative.
pub fn classify_candidates(
    k: usize,
    symmetry: Symmetry,
) -> Result<Vec<CandidateClass>, CandidateError> {
    let all: Vec<MonodromyCandidate> = enumerate_candidates(k)?.collect();
    let index: BTreeMap<Vec<i32>, usize> = all
        .iter()
        .enumerate()
        .map(|(i, c)| (c.perm().images().to_vec(), i))
        .collect();
    let rot = rotation_relabel(k, 1);
    let refl = reflection_relabel(k);
    let mut class_of = vec![usize::MAX; all.len()];
    let mut classes = Vec::new();
    for start in 0..all.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![start];
        class_of[start] = id;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let p = all[i].perm();
            let mut images = Vec::new();
            if symmetry.rotation {
                images.push(p.conjugate_by(&rot));
            }
            if symmetry.reflection {
                images.push(p.conjugate_by(&refl));
            }
            if symmetry.reversal {
                images.push(p.inverse());
            }
            for q in images {
                let j = index[q.images()];
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    members.push(j);
                    stack.push(j);
                }
            }
        }
        members.sort_by(|&a, &b| all[a].perm().images().cmp(all[b].perm().images()));
        classes.push(members);
    }
    let mut out: Vec<CandidateClass> = classes
        .into_iter()
        .map(|members| CandidateClass {
            representative: all[members[0]].clone(),
            members: members.into_iter().map(|i| all[i].clone()).collect(),
        })
        .collect();
    out.sort_by(|a, b| {
        a.representative
            .perm()
            .images()
            .cmp(b.representative.perm().images())
    });
    Ok(out)
}
