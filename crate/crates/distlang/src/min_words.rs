//! Finite sets of minimal distinguishing words.
//!
//! For each unordered pair of distinct quotients the quasi-lex least word
//! in their symmetric difference is found by a layered multi-source BFS
//! over the pair graph, so the whole set costs O(n²·k) edges. The
//! right-quotient analogue works through atom signatures: subsets
//! `S_x = {q | δ(q, x) ∈ F}` of the minimal DFA's states, reached by the
//! subset construction of the reversed automaton. Minimal witnesses per
//! signature need exact-length tracking because words extend on the left
//! there, and quasi-lex minima do not survive reversal.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::dfa::{Dfa, PartialDfa};
use crate::dist::DistKind;
use crate::word::Word;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MinWordsError {
    #[error("minimal-word iteration supports the left and right kinds only")]
    UnsupportedKind,
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

/// A deduplicated set of words, kept sorted in quasi-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordSet(BTreeSet<Word>);

impl WordSet {
    pub fn new() -> Self {
        WordSet(BTreeSet::new())
    }

    pub fn insert(&mut self, w: Word) {
        self.0.insert(w);
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.0.contains(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Ascending quasi-lexicographic iteration.
    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.0.iter()
    }

    pub fn max_word_len(&self) -> usize {
        self.0.iter().map(Word::len).max().unwrap_or(0)
    }

    /// Closed under taking suffixes of members.
    pub fn is_suffix_closed(&self) -> bool {
        self.0.iter().all(|w| w.suffixes().all(|s| self.0.contains(&s)))
    }

    /// Closed under taking prefixes of members.
    pub fn is_prefix_closed(&self) -> bool {
        self.0.iter().all(|w| w.prefixes().all(|p| self.0.contains(&p)))
    }
}

impl FromIterator<Word> for WordSet {
    fn from_iter<T: IntoIterator<Item = Word>>(iter: T) -> Self {
        WordSet(iter.into_iter().collect())
    }
}

impl std::fmt::Display for WordSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}}")
    }
}

fn pair_index(n: usize, p: usize, q: usize) -> usize {
    let (lo, hi) = if p < q { (p, q) } else { (q, p) };
    lo * n + hi
}

/// The set of minimal words distinguishing the quotients of the language:
/// for every pair of distinct states of the minimal DFA, the quasi-lex
/// least word sent to exactly one final state.
pub fn dist_min(dfa: &Dfa) -> WordSet {
    let min = dfa.minimize();
    let n = min.num_states();
    let k = min.alphabet_size();
    let mut out = WordSet::new();
    if n == 1 {
        return out;
    }

    // distance of each pair to a finality mismatch, by multi-source BFS
    // over the reversed pair graph
    let mut level: Vec<Option<usize>> = vec![None; n * n];
    let mut reverse_edges: Vec<Vec<usize>> = vec![Vec::new(); n * n];
    let mut queue = VecDeque::new();
    for p in 0..n {
        for q in p + 1..n {
            let id = pair_index(n, p, q);
            for a in 0..k {
                let (pa, qa) = (min.step(p, a as u8), min.step(q, a as u8));
                if pa != qa {
                    reverse_edges[pair_index(n, pa, qa)].push(id);
                }
            }
            if min.is_final(p) != min.is_final(q) {
                level[id] = Some(0);
                queue.push_back(id);
            }
        }
    }
    let mut by_level: Vec<Vec<usize>> = vec![queue.iter().copied().collect()];
    while let Some(id) = queue.pop_front() {
        let next_level = level[id].unwrap() + 1;
        for &pred in &reverse_edges[id] {
            if level[pred].is_none() {
                level[pred] = Some(next_level);
                if by_level.len() == next_level {
                    by_level.push(Vec::new());
                }
                by_level[next_level].push(pred);
                queue.push_back(pred);
            }
        }
    }

    // choose, per pair, the least symbol stepping down one level; the
    // resulting word is the quasi-lex minimum of the pair's symmetric
    // difference
    let mut choice: Vec<Option<(u8, usize)>> = vec![None; n * n];
    for (lvl, ids) in by_level.iter().enumerate().skip(1) {
        for &id in ids {
            let (p, q) = (id / n, id % n);
            let picked = (0..k).find_map(|a| {
                let (pa, qa) = (min.step(p, a as u8), min.step(q, a as u8));
                if pa != qa {
                    let child = pair_index(n, pa, qa);
                    (level[child] == Some(lvl - 1)).then_some((a as u8, child))
                } else {
                    None
                }
            });
            choice[id] = picked;
        }
    }

    for p in 0..n {
        for q in p + 1..n {
            let mut id = pair_index(n, p, q);
            assert!(
                level[id].is_some(),
                "states {p} and {q} of a minimal DFA must be distinguishable"
            );
            let mut symbols = Vec::new();
            while level[id] != Some(0) {
                let (a, child) = choice[id].expect("leveled pair has a chosen step");
                symbols.push(a);
                id = child;
            }
            out.insert(Word::from_symbols(symbols));
        }
    }
    out
}

/// The reachable atom signatures of the language, each with the quasi-lex
/// least witness word `x` such that `S_x = {q | δ(q, x) ∈ F}` equals the
/// signature. Signatures are subsets of the minimal DFA's states.
#[derive(Debug, Clone)]
pub struct AtomSignatures {
    /// Signature and least witness, sorted by witness.
    pub items: Vec<(BTreeSet<usize>, Word)>,
}

impl AtomSignatures {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn signatures(&self) -> impl Iterator<Item = &BTreeSet<usize>> {
        self.items.iter().map(|(s, _)| s)
    }

    pub fn witness(&self, sig: &BTreeSet<usize>) -> Option<&Word> {
        self.items.iter().find(|(s, _)| s == sig).map(|(_, w)| w)
    }
}

fn preimage(dfa: &Dfa, sig: &BTreeSet<usize>, a: usize) -> BTreeSet<usize> {
    (0..dfa.num_states())
        .filter(|&q| sig.contains(&dfa.step(q, a as u8)))
        .collect()
}

pub fn atom_signatures(dfa: &Dfa) -> AtomSignatures {
    let min = dfa.minimize();
    let k = min.alphabet_size();
    let initial: BTreeSet<usize> = min.finals().iter().copied().collect();

    // breadth-first closure under preimages: all reachable signatures and
    // the number of levels needed to see each at least once
    let mut distance: HashMap<BTreeSet<usize>, usize> = HashMap::new();
    distance.insert(initial.clone(), 0);
    let mut queue = VecDeque::from([initial.clone()]);
    let mut max_distance = 0;
    while let Some(sig) = queue.pop_front() {
        let d = distance[&sig];
        for a in 0..k {
            let pre = preimage(&min, &sig, a);
            if !distance.contains_key(&pre) {
                distance.insert(pre.clone(), d + 1);
                max_distance = max_distance.max(d + 1);
                queue.push_back(pre);
            }
        }
    }

    // exact-length minima per level: the least word of length L with a
    // given signature extends some least word of length L-1 on the left,
    // but not necessarily the signature's overall least witness, so every
    // level keeps its own map
    let mut first_witness: HashMap<BTreeSet<usize>, Word> = HashMap::new();
    first_witness.insert(initial.clone(), Word::empty());
    let mut level: HashMap<BTreeSet<usize>, Word> = HashMap::new();
    level.insert(initial, Word::empty());
    for _ in 1..=max_distance {
        let mut candidates: HashMap<BTreeSet<usize>, (u8, &Word)> = HashMap::new();
        for (sig, word) in &level {
            for a in 0..k {
                let pre = preimage(&min, sig, a);
                let cand = (a as u8, word);
                candidates
                    .entry(pre)
                    .and_modify(|best| {
                        if cand < *best {
                            *best = cand;
                        }
                    })
                    .or_insert(cand);
            }
        }
        let next: HashMap<BTreeSet<usize>, Word> = candidates
            .into_iter()
            .map(|(sig, (a, word))| (sig, word.prepend(a)))
            .collect();
        for (sig, word) in &next {
            first_witness.entry(sig.clone()).or_insert_with(|| word.clone());
        }
        level = next;
    }

    let mut items: Vec<(BTreeSet<usize>, Word)> = first_witness
        .into_iter()
        .map(|(s, w)| (s, w))
        .collect();
    items.sort_by(|(_, a), (_, b)| a.cmp(b));
    AtomSignatures { items }
}

/// The set of minimal words distinguishing the right quotients: for every
/// pair of distinct reachable signatures, the least access word among the
/// states where the signatures differ.
pub fn pref_dist_min(dfa: &Dfa) -> WordSet {
    let min = dfa.minimize();
    let access = min
        .access_words()
        .expect("minimal DFA has only reachable states");
    let signatures: Vec<BTreeSet<usize>> = atom_signatures(&min)
        .items
        .into_iter()
        .map(|(s, _)| s)
        .collect();
    let mut out = WordSet::new();
    for i in 0..signatures.len() {
        for j in i + 1..signatures.len() {
            let word = signatures[i]
                .symmetric_difference(&signatures[j])
                .map(|&q| &access[q])
                .min()
                .expect("distinct signatures differ somewhere");
            out.insert(word.clone());
        }
    }
    out
}

/// Result of the bounded search for the two-sided minimal words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfixMinResult {
    Complete(WordSet),
    /// The search bound ran out before every class pair was separated.
    Incomplete {
        found: WordSet,
        unseparated_pairs: usize,
    },
}

impl InfixMinResult {
    pub fn words(&self) -> &WordSet {
        match self {
            InfixMinResult::Complete(w) => w,
            InfixMinResult::Incomplete { found, .. } => found,
        }
    }

    pub fn is_complete(&self) -> bool {
        matches!(self, InfixMinResult::Complete(_))
    }
}

/// Desk-scale brute force for the minimal words separating two-sided
/// quotient classes. A class is a pair (state reached by the left
/// context, signature of the right context); classes are deduplicated by
/// the language they induce, and each pair is separated by a quasi-lex
/// scan bounded by `max_len` (default: sc + longest left minimal word
/// + 2). An exhausted bound is reported, never silently truncated.
pub fn infix_dist_min_bruteforce(dfa: &Dfa, max_len: Option<usize>) -> InfixMinResult {
    let min = dfa.minimize();
    let k = min.alphabet_size();
    let max_len =
        max_len.unwrap_or_else(|| min.num_states() + dist_min(&min).max_word_len() + 2);

    // representatives of the distinct two-sided quotient languages
    let signatures: Vec<BTreeSet<usize>> = atom_signatures(&min)
        .items
        .into_iter()
        .map(|(s, _)| s)
        .collect();
    let mut classes: Vec<(usize, BTreeSet<usize>)> = Vec::new();
    let mut seen: HashMap<Dfa, ()> = HashMap::new();
    for p in 0..min.num_states() {
        for sig in &signatures {
            let lang = Dfa::new(
                k,
                p,
                sig.iter().copied(),
                min.delta().to_vec(),
            )
            .expect("same table")
            .minimize();
            if seen.insert(lang, ()).is_none() {
                classes.push((p, sig.clone()));
            }
        }
    }

    let member = |class: &(usize, BTreeSet<usize>), w: &Word| class.1.contains(&min.run(class.0, w));
    let mut found = WordSet::new();
    let mut unseparated = 0usize;
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let sep = crate::word::enumerate(k, max_len)
                .find(|w| member(&classes[i], w) != member(&classes[j], w));
            match sep {
                Some(w) => found.insert(w),
                None => unseparated += 1,
            }
        }
    }
    if unseparated == 0 {
        InfixMinResult::Complete(found)
    } else {
        InfixMinResult::Incomplete {
            found,
            unseparated_pairs: unseparated,
        }
    }
}

/// A word set as a language: trie-shaped DFA, completed and minimized.
pub fn word_set_dfa(set: &WordSet, alphabet_size: usize) -> Dfa {
    let mut delta: Vec<Vec<Option<usize>>> = vec![vec![None; alphabet_size]];
    let mut finals = BTreeSet::new();
    for w in set.iter() {
        let mut state = 0usize;
        for &a in w.symbols() {
            state = match delta[state][a as usize] {
                Some(next) => next,
                None => {
                    delta.push(vec![None; alphabet_size]);
                    let next = delta.len() - 1;
                    delta[state][a as usize] = Some(next);
                    next
                }
            };
        }
        finals.insert(state);
    }
    let partial = PartialDfa {
        alphabet_size,
        initial: 0,
        finals,
        delta,
        symbol_names: None,
    };
    partial.complete().expect("trie is valid").minimize()
}

/// The chain of word sets obtained by re-applying the minimal-word
/// operator, with each set read back as a finite language.
#[derive(Debug, Clone)]
pub struct MinChain {
    /// Distinct sets, starting from the operator applied once to the
    /// input; the last entry is the fixed point.
    pub sets: Vec<WordSet>,
}

impl MinChain {
    pub fn fixed_point(&self) -> &WordSet {
        self.sets.last().expect("chain never empty")
    }

    /// Number of strict shrink steps observed between consecutive sets.
    pub fn strict_shrinks(&self) -> usize {
        self.sets.len() - 1
    }

    /// Operator applications performed, counting the one confirming the
    /// fixed point.
    pub fn applications(&self) -> usize {
        self.sets.len() + 1
    }
}

/// Iterates the left or right minimal-word operator until two consecutive
/// sets coincide. The left chain can shrink strictly at most sc - 2
/// times; exceeding that is an internal error.
pub fn iterate_min(dfa: &Dfa, which: DistKind) -> Result<MinChain, MinWordsError> {
    let op: fn(&Dfa) -> WordSet = match which {
        DistKind::Left => dist_min,
        DistKind::Right => pref_dist_min,
        DistKind::TwoSided => return Err(MinWordsError::UnsupportedKind),
    };
    let k = dfa.alphabet_size();
    let sc = dfa.state_complexity();
    let mut sets = vec![op(dfa)];
    let cap = sets[0].len() + 2;
    loop {
        let next = op(&word_set_dfa(sets.last().unwrap(), k));
        if next == *sets.last().unwrap() {
            break;
        }
        sets.push(next);
        if sets.len() > cap {
            return Err(MinWordsError::InternalInvariant(
                "minimal-word chain failed to shrink".into(),
            ));
        }
    }
    let chain = MinChain { sets };
    if which == DistKind::Left && chain.strict_shrinks() > sc.saturating_sub(2) {
        return Err(MinWordsError::InternalInvariant(format!(
            "left minimal-word chain shrank {} times with sc {}",
            chain.strict_shrinks(),
            sc
        )));
    }
    Ok(chain)
}
