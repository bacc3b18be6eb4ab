//! DFA minimization by Moore partition refinement.
//!
//! The result is the canonical minimal complete DFA: equivalent states are
//! merged, only reachable states are kept, and states are renumbered by a
//! breadth-first traversal from the initial state expanding symbols in
//! alphabet order. Equal languages therefore yield structurally equal
//! automata, which makes fixed-point detection and equivalence exact.

use std::collections::HashMap;

use crate::dfa::Dfa;

impl Dfa {
    /// Canonical minimal complete DFA for the same language.
    pub fn minimize(&self) -> Dfa {
        let trimmed = self.trim();
        let n = trimmed.num_states();
        let k = trimmed.alphabet_size();

        // initial partition: finality
        let mut class: Vec<usize> = (0..n)
            .map(|q| usize::from(trimmed.is_final(q)))
            .collect();
        let mut class_count = {
            let finals = trimmed.finals().len();
            if finals == 0 || finals == n {
                // single class; normalize ids
                class.iter_mut().for_each(|c| *c = 0);
                1
            } else {
                2
            }
        };

        // refine until stable; new ids assigned by first occurrence so the
        // partition is deterministic
        loop {
            let mut table: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            let mut next: Vec<usize> = Vec::with_capacity(n);
            for q in 0..n {
                let signature: Vec<usize> =
                    (0..k).map(|a| class[trimmed.delta()[q][a]]).collect();
                let id = table.len();
                let id = *table.entry((class[q], signature)).or_insert(id);
                next.push(id);
            }
            let next_count = table.len();
            class = next;
            if next_count == class_count {
                break;
            }
            class_count = next_count;
        }

        // quotient automaton over the classes
        let mut repr = vec![usize::MAX; class_count];
        for q in 0..n {
            if repr[class[q]] == usize::MAX {
                repr[class[q]] = q;
            }
        }
        let delta: Vec<Vec<usize>> = (0..class_count)
            .map(|c| {
                let q = repr[c];
                (0..k).map(|a| class[trimmed.delta()[q][a]]).collect()
            })
            .collect();
        let finals = (0..class_count).filter(|&c| trimmed.is_final(repr[c]));
        let mut quotient =
            Dfa::new(k, class[trimmed.initial()], finals, delta).expect("quotient is valid");
        if let Some(names) = trimmed.symbol_names() {
            quotient = quotient.with_symbol_names(names.to_vec());
        }
        quotient.canonicalize()
    }

    /// State complexity: the number of states of the minimal complete DFA.
    pub fn state_complexity(&self) -> usize {
        self.minimize().num_states()
    }
}

#[cfg(test)]
mod tests {
    use crate::dfa::{dfa_from_edges, Dfa};
    use crate::word::enumerate;

    #[test]
    fn minimize_empty_language_over_two_symbols() {
        let dfa = dfa_from_edges(2, 3, 0, &[], &[(0, 0, 1), (0, 1, 2), (1, 0, 1), (1, 1, 1), (2, 0, 2), (2, 1, 2)])
            .unwrap();
        let min = dfa.minimize();
        assert_eq!(min.num_states(), 1);
        assert!(min.finals().is_empty());
    }

    #[test]
    fn minimize_merges_equivalent_states() {
        // even number of a's, written with four redundant states
        let dfa = dfa_from_edges(
            1,
            4,
            0,
            &[0, 2],
            &[(0, 0, 1), (1, 0, 2), (2, 0, 3), (3, 0, 0)],
        )
        .unwrap();
        let min = dfa.minimize();
        assert_eq!(min.num_states(), 2);
        for w in enumerate(1, 8) {
            assert_eq!(min.accepts(&w), w.len() % 2 == 0);
        }
    }

    #[test]
    fn minimize_is_idempotent_and_language_preserving() {
        let dfa = dfa_from_edges(
            2,
            4,
            0,
            &[1, 3],
            &[
                (0, 0, 1),
                (0, 1, 2),
                (1, 0, 3),
                (1, 1, 0),
                (2, 0, 0),
                (2, 1, 3),
                (3, 0, 2),
                (3, 1, 1),
            ],
        )
        .unwrap();
        let min = dfa.minimize();
        assert_eq!(min.minimize(), min);
        for w in enumerate(2, 6) {
            assert_eq!(min.accepts(&w), dfa.accepts(&w));
        }
    }

    #[test]
    fn canonical_form_is_stable_under_state_permutation() {
        // same automaton with states listed in two different orders
        let a = dfa_from_edges(
            2,
            3,
            0,
            &[2],
            &[(0, 0, 1), (0, 1, 0), (1, 0, 2), (1, 1, 0), (2, 0, 2), (2, 1, 2)],
        )
        .unwrap();
        let b = dfa_from_edges(
            2,
            3,
            2,
            &[0],
            &[(2, 0, 1), (2, 1, 2), (1, 0, 0), (1, 1, 2), (0, 0, 0), (0, 1, 0)],
        )
        .unwrap();
        assert_eq!(a.minimize(), b.minimize());
        assert!(a.equivalent(&b).unwrap());
    }

    #[test]
    fn equivalence_distinguishes_different_languages() {
        let epsilon_only = dfa_from_edges(2, 2, 0, &[0], &[(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)])
            .unwrap();
        let empty = dfa_from_edges(2, 1, 0, &[], &[(0, 0, 0), (0, 1, 0)]).unwrap();
        assert!(!epsilon_only.equivalent(&empty).unwrap());
        assert!(epsilon_only.equivalent(&epsilon_only).unwrap());
    }

    #[test]
    fn minimal_dfa_has_at_most_one_dead_state() {
        let dfa = dfa_from_edges(2, 5, 0, &[1], &[(0, 0, 1), (0, 1, 2), (1, 0, 3), (1, 1, 4)])
            .unwrap();
        let min = dfa.minimize();
        assert!(min.dead_states().len() <= 1);
        let _ = Dfa::new(2, 0, [0], vec![vec![0, 0]]).unwrap();
    }
}
