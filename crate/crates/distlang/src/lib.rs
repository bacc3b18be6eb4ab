//! A regular-language toolkit built around distinguishability: the
//! languages of words separating pairs of left, right, or two-sided
//! quotients, their iteration to fixed points, the finite sets of minimal
//! distinguishing words, and reconstruction of a language from its
//! minimal distinguishing words plus a membership oracle.
//!
//! Every construction returns canonical minimal DFAs, so language
//! equality, fixed-point detection, and state-complexity readings are
//! exact. The [`oracle`] module carries independent brute-force
//! reference implementations for cross-checking, and [`witness`] exact
//! generators for the families the complexity bounds are tight on.

pub mod closures;
pub mod dfa;
pub mod dist;
pub mod doc;
pub mod learn;
pub mod min_words;
pub mod nfa;
pub mod oracle;
pub mod regex;
pub mod report;
pub mod witness;
pub mod word;

mod bitset;
mod minimize;

pub use closures::{closure, combinator, is_closed, ClosureKind};
pub use dfa::{dfa_from_edges, AutomatonError, Dfa, PartialDfa, Quotients};
pub use dist::{
    classify_fixed_point, dist, dist_direct, dist_pair, dist_via_combinator, iterate, DistError,
    DistKind, FixedPointClass, IterationTrace,
};
pub use min_words::{
    atom_signatures, dist_min, infix_dist_min_bruteforce, iterate_min, pref_dist_min,
    word_set_dfa, AtomSignatures, InfixMinResult, MinChain, WordSet,
};
pub use nfa::{reverse_dfa, reversed_min_dfa, Nfa};
pub use oracle::{bounded, random_reduced_dfa, BoundedLang};
pub use report::LangReport;
pub use witness::{generate, Family, WitnessError};
pub use word::Word;
