//! Nondeterministic finite automata with multiple initial states,
//! the subset construction, and reversal.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::bitset::StateSet;
use crate::dfa::{AutomatonError, Dfa};
use crate::word::Word;

/// An NFA over the alphabet `{0, .., alphabet_size-1}`. No epsilon moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet_size: usize,
    initials: BTreeSet<usize>,
    finals: BTreeSet<usize>,
    /// `delta[q][a]` is the set of successors of `q` on symbol `a`.
    delta: Vec<Vec<BTreeSet<usize>>>,
    symbol_names: Option<Vec<String>>,
}

impl Nfa {
    pub fn new(
        alphabet_size: usize,
        initials: impl IntoIterator<Item = usize>,
        finals: impl IntoIterator<Item = usize>,
        delta: Vec<Vec<BTreeSet<usize>>>,
    ) -> Result<Self, AutomatonError> {
        let n = delta.len();
        if n == 0 {
            return Err(AutomatonError::NoStates);
        }
        if alphabet_size == 0 || alphabet_size > 256 {
            return Err(AutomatonError::BadAlphabet(alphabet_size));
        }
        let initials: BTreeSet<usize> = initials.into_iter().collect();
        let finals: BTreeSet<usize> = finals.into_iter().collect();
        for &q in initials.iter().chain(finals.iter()) {
            if q >= n {
                return Err(AutomatonError::BadState(q, n));
            }
        }
        for row in &delta {
            if row.len() != alphabet_size {
                return Err(AutomatonError::BadAlphabet(row.len()));
            }
            for set in row {
                if let Some(&q) = set.iter().find(|&&q| q >= n) {
                    return Err(AutomatonError::BadState(q, n));
                }
            }
        }
        Ok(Nfa {
            alphabet_size,
            initials,
            finals,
            delta,
            symbol_names: None,
        })
    }

    pub fn from_dfa(dfa: &Dfa) -> Nfa {
        let delta = dfa
            .delta()
            .iter()
            .map(|row| row.iter().map(|&r| BTreeSet::from([r])).collect())
            .collect();
        let mut nfa = Nfa::new(
            dfa.alphabet_size(),
            [dfa.initial()],
            dfa.finals().iter().copied(),
            delta,
        )
        .expect("DFA is a valid NFA");
        nfa.symbol_names = dfa.symbol_names().map(|n| n.to_vec());
        nfa
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn initials(&self) -> &BTreeSet<usize> {
        &self.initials
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn delta(&self) -> &[Vec<BTreeSet<usize>>] {
        &self.delta
    }

    pub fn symbol_names(&self) -> Option<&[String]> {
        self.symbol_names.as_deref()
    }

    pub fn with_symbol_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.alphabet_size, "one name per symbol");
        self.symbol_names = Some(names);
        self
    }

    /// Replaces the initial state set.
    pub fn with_initials(mut self, initials: impl IntoIterator<Item = usize>) -> Self {
        self.initials = initials.into_iter().collect();
        self
    }

    /// Replaces the final state set.
    pub fn with_finals(mut self, finals: impl IntoIterator<Item = usize>) -> Self {
        self.finals = finals.into_iter().collect();
        self
    }

    /// Direct subset simulation.
    pub fn accepts(&self, word: &Word) -> bool {
        let mut current: BTreeSet<usize> = self.initials.clone();
        for &a in word.symbols() {
            let mut next = BTreeSet::new();
            for &q in &current {
                next.extend(self.delta[q][a as usize].iter().copied());
            }
            current = next;
        }
        current.iter().any(|q| self.finals.contains(q))
    }

    /// Subset construction. Subsets are explored breadth-first with symbols
    /// in alphabet order, so the state numbering is reproducible. The empty
    /// subset, when reached, is the dead state.
    pub fn determinize(&self) -> Dfa {
        let n = self.num_states();
        let k = self.alphabet_size;
        let start = StateSet::from_iter(n, self.initials.iter().copied());
        let mut index: HashMap<StateSet, usize> = HashMap::new();
        let mut subsets: Vec<StateSet> = Vec::new();
        let mut queue = VecDeque::new();
        index.insert(start.clone(), 0);
        subsets.push(start);
        queue.push_back(0usize);
        let mut delta: Vec<Vec<usize>> = Vec::new();
        while let Some(id) = queue.pop_front() {
            let subset = subsets[id].clone();
            let mut row = Vec::with_capacity(k);
            for a in 0..k {
                let mut image = StateSet::empty(n);
                for q in subset.iter() {
                    for &r in &self.delta[q][a] {
                        image.insert(r);
                    }
                }
                let next_id = match index.get(&image) {
                    Some(&i) => i,
                    None => {
                        let i = subsets.len();
                        index.insert(image.clone(), i);
                        subsets.push(image);
                        queue.push_back(i);
                        i
                    }
                };
                row.push(next_id);
            }
            delta.push(row);
        }
        let finals: Vec<usize> = subsets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.iter().any(|q| self.finals.contains(&q)))
            .map(|(i, _)| i)
            .collect();
        let mut dfa = Dfa::new(k, 0, finals, delta).expect("subset construction is valid");
        if let Some(names) = &self.symbol_names {
            dfa = dfa.with_symbol_names(names.clone());
        }
        dfa
    }

    /// The reversal: initial and final states swap and every transition
    /// flips direction.
    pub fn reverse(&self) -> Nfa {
        let n = self.num_states();
        let k = self.alphabet_size;
        let mut delta: Vec<Vec<BTreeSet<usize>>> = vec![vec![BTreeSet::new(); k]; n];
        for (src, row) in self.delta.iter().enumerate() {
            for (a, dsts) in row.iter().enumerate() {
                for &dst in dsts {
                    delta[dst][a].insert(src);
                }
            }
        }
        Nfa {
            alphabet_size: k,
            initials: self.finals.clone(),
            finals: self.initials.clone(),
            delta,
            symbol_names: self.symbol_names.clone(),
        }
    }
}

/// Reversal of a DFA's language, as an NFA.
pub fn reverse_dfa(dfa: &Dfa) -> Nfa {
    Nfa::from_dfa(dfa).reverse()
}

/// Minimal DFA of the reversed language.
pub fn reversed_min_dfa(dfa: &Dfa) -> Dfa {
    reverse_dfa(dfa).determinize().minimize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfa::dfa_from_edges;
    use crate::word::enumerate;
    use crate::witness::{generate, Family};

    #[test]
    fn determinize_deterministic_input_is_isomorphic() {
        let dfa = dfa_from_edges(2, 2, 0, &[1], &[(0, 0, 1), (0, 1, 0), (1, 0, 1), (1, 1, 1)])
            .unwrap();
        let nfa = Nfa::from_dfa(&dfa);
        let det = nfa.determinize();
        assert!(det.isomorphic(&dfa).unwrap());
    }

    #[test]
    fn determinize_agrees_with_subset_simulation() {
        // 2-state NFA, both states initial, a-loop on each
        let delta = vec![
            vec![BTreeSet::from([0]), BTreeSet::from([1])],
            vec![BTreeSet::from([1]), BTreeSet::new()],
        ];
        let nfa = Nfa::new(2, [0, 1], [1], delta).unwrap();
        let dfa = nfa.determinize();
        for w in enumerate(2, 4) {
            assert_eq!(dfa.accepts(&w), nfa.accepts(&w), "word {w}");
        }
    }

    #[test]
    fn reverse_of_singleton_pair() {
        // {ab} over {a, b}
        let dfa = dfa_from_edges(2, 3, 0, &[2], &[(0, 0, 1), (1, 1, 2)]).unwrap();
        let rev = reverse_dfa(&dfa).determinize();
        for w in enumerate(2, 4) {
            let expected = w.to_string() == "10"; // "ba"
            assert_eq!(rev.accepts(&w), expected, "word {w}");
        }
    }

    #[test]
    fn reverse_is_an_involution_on_languages() {
        let dfa = generate(Family::Universal, 4).unwrap();
        let back = reverse_dfa(&reversed_min_dfa(&dfa)).determinize();
        for w in enumerate(3, 5) {
            assert_eq!(back.accepts(&w), dfa.accepts(&w), "word {w}");
        }
    }

    #[test]
    fn reversed_universal_witness_has_full_atom_complexity() {
        // all 2^4 - 1 nonempty subsets are reachable when determinizing
        // the reversal of the 4-state universal witness
        let dfa = generate(Family::Universal, 4).unwrap();
        let det = reverse_dfa(&dfa).determinize();
        // the empty subset shows up as the single dead state
        let nonempty = det.num_states() - det.dead_states().len();
        assert_eq!(nonempty, 15);
        // and the reversal agrees with brute-force word reversal
        let rev = reversed_min_dfa(&dfa);
        for w in enumerate(3, 6) {
            assert_eq!(rev.accepts(&w), dfa.accepts(&w.reversed()), "word {w}");
        }
    }
}
