//! Suffix, prefix, and infix closure operators on regular languages, and
//! the combinator `O(L) = c(L) ∩ c(complement L)` they induce.
//!
//! The combinator is the single code path behind the three
//! distinguishability operations, so all of them share one audited
//! construction. Closures are computed on the minimal DFA, with the dead
//! state stripped before any state is promoted to initial or final;
//! promoting the dead state would wrongly let words that die in the sink
//! count as suffixes or infixes.

use crate::dfa::Dfa;
use crate::nfa::Nfa;

/// The three closure operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosureKind {
    Suffix,
    Prefix,
    Infix,
}

impl ClosureKind {
    pub const ALL: [ClosureKind; 3] = [
        ClosureKind::Suffix,
        ClosureKind::Prefix,
        ClosureKind::Infix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosureKind::Suffix => "suffix",
            ClosureKind::Prefix => "prefix",
            ClosureKind::Infix => "infix",
        }
    }
}

/// The closure of the language under `kind`, as a canonical minimal DFA.
pub fn closure(dfa: &Dfa, kind: ClosureKind) -> Dfa {
    let min = dfa.minimize();
    let dead = min.dead_states();
    let live: Vec<usize> = (0..min.num_states())
        .filter(|q| !dead.contains(q))
        .collect();
    match kind {
        ClosureKind::Prefix => {
            // every live state becomes final; stays deterministic
            let mut partial = crate::dfa::PartialDfa::new(
                min.alphabet_size(),
                min.num_states(),
                min.initial(),
            );
            for (q, row) in min.delta().iter().enumerate() {
                for (a, &r) in row.iter().enumerate() {
                    partial.set_transition(q, a, r);
                }
            }
            for &q in &live {
                partial.set_final(q);
            }
            partial.symbol_names = min.symbol_names().map(|n| n.to_vec());
            partial.complete().expect("total table").minimize()
        }
        ClosureKind::Suffix => {
            let nfa = Nfa::from_dfa(&min).with_initials(live);
            nfa.determinize().minimize()
        }
        ClosureKind::Infix => {
            let nfa = Nfa::from_dfa(&min)
                .with_initials(live.iter().copied())
                .with_finals(live);
            nfa.determinize().minimize()
        }
    }
}

/// Whether the language already equals its closure under `kind`.
pub fn is_closed(dfa: &Dfa, kind: ClosureKind) -> bool {
    dfa.minimize() == closure(dfa, kind)
}

/// `O(L) = c(L) ∩ c(complement L)` for the closure operator of `kind`,
/// as a canonical minimal DFA. With the suffix, prefix, and infix kinds
/// this computes the left, right, and two-sided distinguishability
/// languages respectively.
pub fn combinator(dfa: &Dfa, kind: ClosureKind) -> Dfa {
    let min = dfa.minimize();
    let closed = closure(&min, kind);
    let closed_comp = closure(&min.complement(), kind);
    closed
        .product(&closed_comp, |x, y| x && y)
        .expect("closures share the alphabet")
        .minimize()
}
