//! Signed permutations of [k]±, admissible candidates and the z-monodromy of a face.

mod candidate;
mod frame;
mod perm;

pub use candidate::{
    check_conditions, classify_candidates, count_candidates, enumerate_candidates,
    reflection_relabel, rotation_relabel, CandidateClass, CandidateError, CandidateIter,
    MonodromyCandidate, Symmetry,
};
pub use frame::{
    check_lemma1, z_monodromy, z_monodromy_unchecked, FaceFrame, Lemma1Report, Lemma1Violation,
    MonodromyError,
};
pub use perm::{index_symbol, symbol_index, symbols, PermError, SignedPerm};
