//! Complete deterministic finite automata.
//!
//! A [`Dfa`] always has a total transition table; partial tables live in
//! [`PartialDfa`] (the ingestion form) and become complete automata via
//! [`PartialDfa::complete`], which adds at most one fresh dead state.
//!
//! Display names for symbols are carried along for printing only and do
//! not participate in equality, hashing, or canonical comparison.

use std::collections::{BTreeSet, VecDeque};
use std::hash::{Hash, Hasher};

use crate::word::Word;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AutomatonError {
    #[error("automaton must have at least one state")]
    NoStates,
    #[error("alphabet must have between 1 and 256 symbols, got {0}")]
    BadAlphabet(usize),
    #[error("state index {0} out of range ({1} states)")]
    BadState(usize, usize),
    #[error("alphabet sizes differ: {0} vs {1}")]
    AlphabetMismatch(usize, usize),
    #[error("state {0} is not reachable from the initial state")]
    Unreachable(usize),
}

/// A complete DFA over the alphabet `{0, .., alphabet_size-1}`.
#[derive(Clone)]
pub struct Dfa {
    alphabet_size: usize,
    initial: usize,
    finals: BTreeSet<usize>,
    /// `delta[q][a]` is the successor of `q` on symbol `a`; always total.
    delta: Vec<Vec<usize>>,
    symbol_names: Option<Vec<String>>,
}

impl PartialEq for Dfa {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet_size == other.alphabet_size
            && self.initial == other.initial
            && self.finals == other.finals
            && self.delta == other.delta
    }
}

impl Eq for Dfa {}

impl Hash for Dfa {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.alphabet_size.hash(state);
        self.initial.hash(state);
        self.finals.hash(state);
        self.delta.hash(state);
    }
}

impl std::fmt::Debug for Dfa {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Dfa")
            .field("alphabet_size", &self.alphabet_size)
            .field("states", &self.num_states())
            .field("initial", &self.initial)
            .field("finals", &self.finals)
            .field("delta", &self.delta)
            .finish()
    }
}

impl Dfa {
    pub fn new(
        alphabet_size: usize,
        initial: usize,
        finals: impl IntoIterator<Item = usize>,
        delta: Vec<Vec<usize>>,
    ) -> Result<Self, AutomatonError> {
        let n = delta.len();
        if n == 0 {
            return Err(AutomatonError::NoStates);
        }
        if alphabet_size == 0 || alphabet_size > 256 {
            return Err(AutomatonError::BadAlphabet(alphabet_size));
        }
        if initial >= n {
            return Err(AutomatonError::BadState(initial, n));
        }
        let finals: BTreeSet<usize> = finals.into_iter().collect();
        if let Some(&q) = finals.iter().find(|&&q| q >= n) {
            return Err(AutomatonError::BadState(q, n));
        }
        for row in &delta {
            if row.len() != alphabet_size {
                return Err(AutomatonError::BadAlphabet(row.len()));
            }
            if let Some(&q) = row.iter().find(|&&q| q >= n) {
                return Err(AutomatonError::BadState(q, n));
            }
        }
        Ok(Dfa {
            alphabet_size,
            initial,
            finals,
            delta,
            symbol_names: None,
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals.contains(&q)
    }

    pub fn delta(&self) -> &[Vec<usize>] {
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

    /// Re-roots the automaton at `q`, keeping everything else unchanged.
    pub fn rooted_at(&self, q: usize) -> Dfa {
        assert!(q < self.num_states());
        let mut dfa = self.clone();
        dfa.initial = q;
        dfa
    }

    pub fn step(&self, q: usize, symbol: u8) -> usize {
        self.delta[q][symbol as usize]
    }

    /// Runs the automaton on `word` starting from `q`.
    pub fn run(&self, q: usize, word: &Word) -> usize {
        word.symbols().iter().fold(q, |s, &a| self.step(s, a))
    }

    pub fn accepts(&self, word: &Word) -> bool {
        self.is_final(self.run(self.initial, word))
    }

    /// States reachable from the initial state, in BFS discovery order
    /// (symbols expanded in alphabet order).
    pub fn reachable_states(&self) -> Vec<usize> {
        let mut seen = vec![false; self.num_states()];
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        seen[self.initial] = true;
        queue.push_back(self.initial);
        while let Some(q) = queue.pop_front() {
            order.push(q);
            for a in 0..self.alphabet_size {
                let r = self.delta[q][a];
                if !seen[r] {
                    seen[r] = true;
                    queue.push_back(r);
                }
            }
        }
        order
    }

    /// Dead states: non-final states whose transitions are all self-loops.
    pub fn dead_states(&self) -> Vec<usize> {
        (0..self.num_states())
            .filter(|&q| !self.is_final(q) && self.delta[q].iter().all(|&r| r == q))
            .collect()
    }

    /// True if some state can reach a final state from `q` (per state).
    pub fn can_reach_final(&self) -> Vec<bool> {
        self.can_reach(|q| self.is_final(q))
    }

    /// True per state if some state satisfying `target` is reachable from it.
    pub fn can_reach(&self, target: impl Fn(usize) -> bool) -> Vec<bool> {
        let n = self.num_states();
        let mut reach: Vec<bool> = (0..n).map(&target).collect();
        // fixpoint over the reversed edges
        loop {
            let mut changed = false;
            for q in 0..n {
                if !reach[q] && self.delta[q].iter().any(|&r| reach[r]) {
                    reach[q] = true;
                    changed = true;
                }
            }
            if !changed {
                return reach;
            }
        }
    }

    /// Restricts to the states reachable from the initial state and merges
    /// duplicate dead states, leaving at most one. State order is preserved.
    pub fn trim(&self) -> Dfa {
        let reachable = {
            let mut sorted = self.reachable_states();
            sorted.sort_unstable();
            sorted
        };
        let mut renumber = vec![usize::MAX; self.num_states()];
        for (new, &old) in reachable.iter().enumerate() {
            renumber[old] = new;
        }
        let mut delta: Vec<Vec<usize>> = reachable
            .iter()
            .map(|&old| self.delta[old].iter().map(|&r| renumber[r]).collect())
            .collect();
        let mut finals: BTreeSet<usize> = self
            .finals
            .iter()
            .filter(|&&q| renumber[q] != usize::MAX)
            .map(|&q| renumber[q])
            .collect();
        let mut initial = renumber[self.initial];

        // merge duplicate dead states into the first one
        let dead: Vec<usize> = (0..delta.len())
            .filter(|&q| !finals.contains(&q) && delta[q].iter().all(|&r| r == q))
            .collect();
        if dead.len() > 1 {
            let keep = dead[0];
            let drop: BTreeSet<usize> = dead[1..].iter().copied().collect();
            let mut renumber2 = Vec::with_capacity(delta.len());
            let mut next = 0;
            for q in 0..delta.len() {
                if drop.contains(&q) {
                    renumber2.push(usize::MAX);
                } else {
                    renumber2.push(next);
                    next += 1;
                }
            }
            let map = |q: usize| {
                if drop.contains(&q) {
                    renumber2[keep]
                } else {
                    renumber2[q]
                }
            };
            delta = (0..delta.len())
                .filter(|q| !drop.contains(q))
                .map(|q| delta[q].iter().map(|&r| map(r)).collect())
                .collect();
            finals = finals.iter().map(|&q| map(q)).collect();
            initial = map(initial);
        }

        Dfa {
            alphabet_size: self.alphabet_size,
            initial,
            finals,
            delta,
            symbol_names: self.symbol_names.clone(),
        }
    }

    pub fn complement(&self) -> Dfa {
        let finals: BTreeSet<usize> = (0..self.num_states())
            .filter(|q| !self.finals.contains(q))
            .collect();
        Dfa {
            alphabet_size: self.alphabet_size,
            initial: self.initial,
            finals,
            delta: self.delta.clone(),
            symbol_names: self.symbol_names.clone(),
        }
    }

    /// Product automaton over the reachable pairs; a pair is final when
    /// `combine` holds of the two finality bits.
    pub fn product(
        &self,
        other: &Dfa,
        combine: impl Fn(bool, bool) -> bool,
    ) -> Result<Dfa, AutomatonError> {
        if self.alphabet_size != other.alphabet_size {
            return Err(AutomatonError::AlphabetMismatch(
                self.alphabet_size,
                other.alphabet_size,
            ));
        }
        let k = self.alphabet_size;
        let mut index = std::collections::HashMap::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut delta: Vec<Vec<usize>> = Vec::new();
        let start = (self.initial, other.initial);
        index.insert(start, 0);
        pairs.push(start);
        let mut head = 0;
        while head < pairs.len() {
            let (p, q) = pairs[head];
            let mut row = Vec::with_capacity(k);
            for a in 0..k {
                let next = (self.delta[p][a], other.delta[q][a]);
                let id = *index.entry(next).or_insert_with(|| {
                    pairs.push(next);
                    pairs.len() - 1
                });
                row.push(id);
            }
            delta.push(row);
            head += 1;
        }
        let finals: BTreeSet<usize> = pairs
            .iter()
            .enumerate()
            .filter(|(_, &(p, q))| combine(self.is_final(p), other.is_final(q)))
            .map(|(i, _)| i)
            .collect();
        Ok(Dfa {
            alphabet_size: k,
            initial: 0,
            finals,
            delta,
            symbol_names: self.symbol_names.clone(),
        })
    }

    /// Renumbers the reachable part in BFS discovery order. Unreachable
    /// states are dropped. Two automata are isomorphic on their reachable
    /// parts exactly when their canonical forms are equal.
    pub fn canonicalize(&self) -> Dfa {
        let order = self.reachable_states();
        let mut renumber = vec![usize::MAX; self.num_states()];
        for (new, &old) in order.iter().enumerate() {
            renumber[old] = new;
        }
        let delta: Vec<Vec<usize>> = order
            .iter()
            .map(|&old| self.delta[old].iter().map(|&r| renumber[r]).collect())
            .collect();
        let finals: BTreeSet<usize> = self
            .finals
            .iter()
            .filter(|&&q| renumber[q] != usize::MAX)
            .map(|&q| renumber[q])
            .collect();
        Dfa {
            alphabet_size: self.alphabet_size,
            initial: 0,
            finals,
            delta,
            symbol_names: self.symbol_names.clone(),
        }
    }

    /// Structural isomorphism of the reachable parts.
    pub fn isomorphic(&self, other: &Dfa) -> Result<bool, AutomatonError> {
        if self.alphabet_size != other.alphabet_size {
            return Err(AutomatonError::AlphabetMismatch(
                self.alphabet_size,
                other.alphabet_size,
            ));
        }
        Ok(self.canonicalize() == other.canonicalize())
    }

    /// Language equality, decided on canonical minimal forms.
    pub fn equivalent(&self, other: &Dfa) -> Result<bool, AutomatonError> {
        if self.alphabet_size != other.alphabet_size {
            return Err(AutomatonError::AlphabetMismatch(
                self.alphabet_size,
                other.alphabet_size,
            ));
        }
        Ok(self.minimize() == other.minimize())
    }

    /// The quasi-lex least accepted word, if the language is non-empty.
    pub fn min_accepted_word(&self) -> Option<Word> {
        // BFS discovers states in quasi-lex order of their access words,
        // so the first final state hit carries the least accepted word.
        let n = self.num_states();
        let mut seen = vec![false; n];
        let mut parent: Vec<Option<(usize, u8)>> = vec![None; n];
        let mut queue = VecDeque::new();
        seen[self.initial] = true;
        queue.push_back(self.initial);
        while let Some(q) = queue.pop_front() {
            if self.is_final(q) {
                let mut symbols = Vec::new();
                let mut cur = q;
                while let Some((prev, a)) = parent[cur] {
                    symbols.push(a);
                    cur = prev;
                }
                symbols.reverse();
                return Some(Word::from_symbols(symbols));
            }
            for a in 0..self.alphabet_size {
                let r = self.delta[q][a as usize];
                if !seen[r] {
                    seen[r] = true;
                    parent[r] = Some((q, a as u8));
                    queue.push_back(r);
                }
            }
        }
        None
    }

    /// Per-state access words: the quasi-lex least word reaching each state.
    /// Fails if some state is unreachable.
    pub fn access_words(&self) -> Result<Vec<Word>, AutomatonError> {
        let n = self.num_states();
        let mut labels: Vec<Option<Word>> = vec![None; n];
        labels[self.initial] = Some(Word::empty());
        let mut queue = VecDeque::new();
        queue.push_back(self.initial);
        while let Some(q) = queue.pop_front() {
            for a in 0..self.alphabet_size {
                let r = self.delta[q][a];
                if labels[r].is_none() {
                    let w = labels[q].as_ref().unwrap().child(a as u8);
                    labels[r] = Some(w);
                    queue.push_back(r);
                }
            }
        }
        labels
            .into_iter()
            .enumerate()
            .map(|(q, l)| l.ok_or(AutomatonError::Unreachable(q)))
            .collect()
    }

    /// True if the language is finite (no cycle among useful reachable states).
    pub fn is_finite_language(&self) -> bool {
        let useful = self.can_reach_final();
        let order = self.reachable_states();
        // DFS cycle detection restricted to useful reachable states
        let n = self.num_states();
        let mut color = vec![0u8; n]; // 0 unvisited, 1 on stack, 2 done
        for &start in &order {
            if !useful[start] || color[start] != 0 {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            color[start] = 1;
            while let Some(&mut (q, ref mut next_a)) = stack.last_mut() {
                if *next_a == self.alphabet_size {
                    color[q] = 2;
                    stack.pop();
                    continue;
                }
                let r = self.delta[q][*next_a];
                *next_a += 1;
                if !useful[r] {
                    continue;
                }
                match color[r] {
                    0 => {
                        color[r] = 1;
                        stack.push((r, 0));
                    }
                    1 => return false,
                    _ => {}
                }
            }
        }
        true
    }

    /// Enumerates the accepted words of a finite language in quasi-lex order.
    /// Returns `None` when the language is infinite.
    pub fn finite_language(&self) -> Option<Vec<Word>> {
        if !self.is_finite_language() {
            return None;
        }
        let mut words = Vec::new();
        // acyclic among useful states, so depth is bounded by their count
        let useful = self.can_reach_final();
        let depth_cap = useful.iter().filter(|&&u| u).count();
        let mut stack: Vec<(usize, Word)> = vec![(self.initial, Word::empty())];
        while let Some((q, w)) = stack.pop() {
            if self.is_final(q) {
                words.push(w.clone());
            }
            if w.len() >= depth_cap {
                continue;
            }
            for a in (0..self.alphabet_size).rev() {
                let r = self.delta[q][a];
                if useful[r] {
                    stack.push((r, w.child(a as u8)));
                }
            }
        }
        words.sort();
        Some(words)
    }
}

/// Quotient summary of a minimal DFA: one quotient per state.
#[derive(Debug, Clone)]
pub struct Quotients {
    /// Quasi-lex least access word per state (i.e. per quotient).
    pub access_words: Vec<Word>,
    /// The dead state, when the empty language is one of the quotients.
    pub empty_quotient: Option<usize>,
}

impl Quotients {
    pub fn count(&self) -> usize {
        self.access_words.len()
    }

    pub fn has_empty_quotient(&self) -> bool {
        self.empty_quotient.is_some()
    }
}

impl Dfa {
    /// The quotients of a minimal DFA, one per state; state `q` stands for
    /// the right language of `q`. Expects a minimal automaton.
    pub fn quotients(&self) -> Result<Quotients, AutomatonError> {
        let access_words = self.access_words()?;
        let empty_quotient = self.dead_states().first().copied();
        Ok(Quotients {
            access_words,
            empty_quotient,
        })
    }
}

/// A DFA under construction: the transition table may have holes.
#[derive(Debug, Clone)]
pub struct PartialDfa {
    pub alphabet_size: usize,
    pub initial: usize,
    pub finals: BTreeSet<usize>,
    pub delta: Vec<Vec<Option<usize>>>,
    pub symbol_names: Option<Vec<String>>,
}

impl PartialDfa {
    pub fn new(alphabet_size: usize, num_states: usize, initial: usize) -> Self {
        PartialDfa {
            alphabet_size,
            initial,
            finals: BTreeSet::new(),
            delta: vec![vec![None; alphabet_size]; num_states],
            symbol_names: None,
        }
    }

    pub fn set_final(&mut self, q: usize) {
        self.finals.insert(q);
    }

    pub fn set_transition(&mut self, src: usize, symbol: usize, dst: usize) {
        self.delta[src][symbol] = Some(dst);
    }

    /// Fills the missing transitions, adding at most one fresh dead state.
    /// An already-total table converts without adding anything.
    pub fn complete(&self) -> Result<Dfa, AutomatonError> {
        let n = self.delta.len();
        if n == 0 {
            return Err(AutomatonError::NoStates);
        }
        let has_hole = self.delta.iter().any(|row| row.iter().any(Option::is_none));
        let total = if has_hole { n + 1 } else { n };
        let sink = n; // only used when has_hole
        let mut delta = Vec::with_capacity(total);
        for row in &self.delta {
            delta.push(row.iter().map(|t| t.unwrap_or(sink)).collect::<Vec<_>>());
        }
        if has_hole {
            delta.push(vec![sink; self.alphabet_size]);
        }
        let mut dfa = Dfa::new(self.alphabet_size, self.initial, self.finals.clone(), delta)?;
        dfa.symbol_names = self.symbol_names.clone();
        Ok(dfa)
    }
}

/// Convenience constructor from an edge list; missing edges go to a fresh
/// dead state on `complete`.
pub fn dfa_from_edges(
    alphabet_size: usize,
    num_states: usize,
    initial: usize,
    finals: &[usize],
    edges: &[(usize, usize, usize)],
) -> Result<Dfa, AutomatonError> {
    let mut partial = PartialDfa::new(alphabet_size, num_states, initial);
    for &f in finals {
        partial.set_final(f);
    }
    for &(src, sym, dst) in edges {
        partial.set_transition(src, sym, dst);
    }
    partial.complete()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::word::{enumerate, Word};

    fn singleton_a() -> PartialDfa {
        // partial DFA for {a} over {a, b}: 2 states, only the a-edge
        let mut p = PartialDfa::new(2, 2, 0);
        p.set_transition(0, 0, 1);
        p.set_final(1);
        p
    }

    #[test]
    fn complete_empty_language() {
        // 1-state DFA over {a}, no transitions, non-final
        let p = PartialDfa::new(1, 1, 0);
        let dfa = p.complete().unwrap();
        assert_eq!(dfa.num_states(), 2);
        assert!(enumerate(1, 4).all(|w| !dfa.accepts(&w)));
    }

    #[test]
    fn complete_is_identity_on_total_tables() {
        let dfa = dfa_from_edges(1, 1, 0, &[0], &[(0, 0, 0)]).unwrap();
        let mut p = PartialDfa::new(1, 1, 0);
        p.set_final(0);
        p.set_transition(0, 0, 0);
        assert_eq!(p.complete().unwrap(), dfa);
        assert_eq!(dfa.num_states(), 1);
    }

    #[test]
    fn complete_partial_singleton() {
        let dfa = singleton_a().complete().unwrap();
        assert_eq!(dfa.num_states(), 3);
        // membership up to length 3 is exactly {a}
        let accepted: Vec<String> = oracle::bounded(&dfa, 3)
            .words()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(accepted, ["0"]);
    }

    #[test]
    fn product_self_xor_is_empty() {
        let dfa = singleton_a().complete().unwrap();
        let diff = dfa.product(&dfa, |x, y| x != y).unwrap();
        assert!(diff.min_accepted_word().is_none());
    }

    #[test]
    fn product_disjoint_intersection_is_empty() {
        // {a}* intersect {words containing b} = empty
        let a_star = dfa_from_edges(2, 2, 0, &[0], &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)])
            .unwrap();
        let has_b = dfa_from_edges(2, 2, 0, &[1], &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)])
            .unwrap();
        let both = a_star.product(&has_b, |x, y| x && y).unwrap();
        assert!(enumerate(2, 5).all(|w| !both.accepts(&w)));
    }

    #[test]
    fn product_obeys_truth_tables() {
        let a_star = dfa_from_edges(2, 2, 0, &[0], &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)])
            .unwrap();
        let has_b = dfa_from_edges(2, 2, 0, &[1], &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)])
            .unwrap();
        for w in enumerate(2, 6) {
            let (x, y) = (a_star.accepts(&w), has_b.accepts(&w));
            let and = a_star.product(&has_b, |x, y| x && y).unwrap();
            let or = a_star.product(&has_b, |x, y| x || y).unwrap();
            let xor = a_star.product(&has_b, |x, y| x != y).unwrap();
            assert_eq!(and.accepts(&w), x && y);
            assert_eq!(or.accepts(&w), x || y);
            assert_eq!(xor.accepts(&w), x != y);
        }
    }

    #[test]
    fn product_rejects_alphabet_mismatch() {
        let one = dfa_from_edges(1, 1, 0, &[0], &[(0, 0, 0)]).unwrap();
        let two = dfa_from_edges(2, 1, 0, &[0], &[(0, 0, 0), (0, 1, 0)]).unwrap();
        assert!(matches!(
            one.product(&two, |x, _| x),
            Err(AutomatonError::AlphabetMismatch(1, 2))
        ));
    }

    #[test]
    fn complement_involution() {
        let dfa = singleton_a().complete().unwrap();
        assert_eq!(dfa.complement().complement(), dfa);
        // complement of 1-state all-accepting DFA accepts nothing
        let all = dfa_from_edges(2, 1, 0, &[0], &[(0, 0, 0), (0, 1, 0)]).unwrap();
        let none = all.complement();
        assert!(enumerate(2, 3).all(|w| !none.accepts(&w)));
    }

    #[test]
    fn trim_merges_duplicate_dead_states() {
        // two separate dead states plus an unreachable state
        let dfa = Dfa::new(
            1,
            0,
            [0],
            vec![vec![1], vec![1], vec![2], vec![3]],
        )
        .unwrap();
        // state 1 dead, states 2 and 3 unreachable
        let trimmed = dfa.trim();
        assert_eq!(trimmed.num_states(), 2);
        assert!(trimmed.dead_states().len() <= 1);
    }

    #[test]
    fn access_words_require_reachability() {
        let dfa = Dfa::new(1, 0, [0], vec![vec![0], vec![1]]).unwrap();
        assert_eq!(dfa.access_words(), Err(AutomatonError::Unreachable(1)));
    }

    #[test]
    fn finite_language_enumeration() {
        let dfa = singleton_a().complete().unwrap();
        assert!(dfa.is_finite_language());
        let words: Vec<String> = dfa
            .finite_language()
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(words, ["0"]);
        let a_star = dfa_from_edges(1, 1, 0, &[0], &[(0, 0, 0)]).unwrap();
        assert!(!a_star.is_finite_language());
        assert!(a_star.finite_language().is_none());
    }

    #[test]
    fn min_accepted_word_is_quasi_lex_least() {
        let dfa = dfa_from_edges(
            2,
            3,
            0,
            &[2],
            &[(0, 0, 1), (0, 1, 2), (1, 0, 1), (1, 1, 2), (2, 0, 2), (2, 1, 2)],
        )
        .unwrap();
        assert_eq!(dfa.min_accepted_word(), Some(Word::from_digits("1")));
    }
}
