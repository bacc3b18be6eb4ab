//! Derived per-language metadata.

use crate::closures::{is_closed, ClosureKind};
use crate::dfa::Dfa;

/// Summary facts about a regular language, all computed from the minimal
/// complete DFA.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LangReport {
    /// Number of states of the minimal complete DFA.
    pub state_complexity: usize,
    /// The minimal DFA has a dead state, i.e. the empty language is a
    /// quotient.
    pub has_empty_quotient: bool,
    pub is_suffix_closed: bool,
    pub is_prefix_closed: bool,
    pub is_infix_closed: bool,
    pub is_empty: bool,
    pub is_universal: bool,
}

/// Computes a [`LangReport`] for the language of the automaton.
pub fn report(dfa: &Dfa) -> LangReport {
    let min = dfa.minimize();
    let state_complexity = min.num_states();
    LangReport {
        state_complexity,
        has_empty_quotient: !min.dead_states().is_empty(),
        is_suffix_closed: is_closed(&min, ClosureKind::Suffix),
        is_prefix_closed: is_closed(&min, ClosureKind::Prefix),
        is_infix_closed: is_closed(&min, ClosureKind::Infix),
        is_empty: state_complexity == 1 && min.finals().is_empty(),
        is_universal: state_complexity == 1 && !min.finals().is_empty(),
    }
}

impl Dfa {
    pub fn report(&self) -> LangReport {
        report(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfa::dfa_from_edges;
    use crate::witness::{generate, Family};

    #[test]
    fn report_on_the_epsilon_language() {
        let eps = dfa_from_edges(2, 2, 0, &[0], &[(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)])
            .unwrap();
        let r = eps.report();
        assert_eq!(r.state_complexity, 2);
        assert!(r.has_empty_quotient);
        assert!(r.is_suffix_closed && r.is_prefix_closed && r.is_infix_closed);
        assert!(!r.is_empty && !r.is_universal);
    }

    #[test]
    fn report_on_the_universal_witness() {
        let r = generate(Family::Universal, 4).unwrap().report();
        assert_eq!(r.state_complexity, 4);
        assert!(!r.is_suffix_closed);
        assert!(!r.has_empty_quotient);
    }

    #[test]
    fn report_on_the_ladder() {
        let r = generate(Family::SuffixLadder, 2).unwrap().report();
        assert_eq!(r.state_complexity, 5);
        assert!(r.is_suffix_closed);
        assert!(r.has_empty_quotient);
        assert!(!r.is_prefix_closed);
    }

    #[test]
    fn empty_and_universal_flags() {
        let sigma_star = dfa_from_edges(2, 1, 0, &[0], &[(0, 0, 0), (0, 1, 0)]).unwrap();
        assert!(sigma_star.report().is_universal);
        assert!(sigma_star.complement().report().is_empty);
        assert_eq!(sigma_star.report().state_complexity, 1);
    }
}
