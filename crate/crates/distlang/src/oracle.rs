//! Independent brute-force reference implementations over bounded word
//! sets, plus seeded random automata for property sweeps.
//!
//! Everything here recomputes memberships from first principles (direct
//! transition-table simulation and literal quantifier scans) so it can
//! serve as an oracle for the construction-based implementations. Context
//! quantifiers range over reachable states where the definitions allow it;
//! a literal word-pair scan is kept as the ur-oracle for tiny inputs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::StateSet;
use crate::closures::ClosureKind;
use crate::dfa::Dfa;
use crate::min_words::WordSet;
use crate::word::{enumerate, word_count, Word};

/// Membership of every word of length at most `max_len`, bit per word in
/// quasi-lexicographic rank order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedLang {
    alphabet_size: usize,
    max_len: usize,
    bits: Vec<bool>,
}

impl BoundedLang {
    fn collect(alphabet_size: usize, max_len: usize, mut member: impl FnMut(&Word) -> bool) -> Self {
        let bits = enumerate(alphabet_size, max_len)
            .map(|w| member(&w))
            .collect::<Vec<bool>>();
        debug_assert_eq!(bits.len(), word_count(alphabet_size, max_len));
        BoundedLang {
            alphabet_size,
            max_len,
            bits,
        }
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn contains(&self, word: &Word) -> bool {
        assert!(word.len() <= self.max_len, "word longer than the bound");
        self.bits[crate::word::rank(word, self.alphabet_size)]
    }

    /// Members in quasi-lexicographic order.
    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        enumerate(self.alphabet_size, self.max_len)
            .zip(self.bits.iter())
            .filter(|(_, &b)| b)
            .map(|(w, _)| w)
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

/// Memberships of `dfa` up to `max_len` by direct simulation.
pub fn bounded(dfa: &Dfa, max_len: usize) -> BoundedLang {
    BoundedLang::collect(dfa.alphabet_size(), max_len, |w| dfa.accepts(w))
}

fn image_of(dfa: &Dfa, start: &StateSet, word: &Word) -> StateSet {
    let n = dfa.num_states();
    let mut current = start.clone();
    for &a in word.symbols() {
        let mut next = StateSet::empty(n);
        for q in current.iter() {
            next.insert(dfa.step(q, a));
        }
        current = next;
    }
    current
}

/// Bounded membership of the closure of the language under `kind`,
/// computed from the definitions.
pub fn closure_bruteforce(dfa: &Dfa, kind: ClosureKind, max_len: usize) -> BoundedLang {
    let n = dfa.num_states();
    let reachable = StateSet::from_iter(n, dfa.reachable_states());
    let can_accept = dfa.can_reach_final();
    BoundedLang::collect(dfa.alphabet_size(), max_len, |w| match kind {
        // w is a suffix of a member iff some reachable state accepts w
        ClosureKind::Suffix => image_of(dfa, &reachable, w).iter().any(|q| dfa.is_final(q)),
        // w is a prefix of a member iff acceptance stays reachable after w
        ClosureKind::Prefix => can_accept[dfa.run(dfa.initial(), w)],
        ClosureKind::Infix => image_of(dfa, &reachable, w).iter().any(|q| can_accept[q]),
    })
}

/// Bounded membership of the left distinguishability language: a word is
/// in when, read from the reachable states, it both accepts and rejects.
pub fn dist_bruteforce(dfa: &Dfa, max_len: usize) -> BoundedLang {
    let n = dfa.num_states();
    let reachable = StateSet::from_iter(n, dfa.reachable_states());
    BoundedLang::collect(dfa.alphabet_size(), max_len, |w| {
        let image = image_of(dfa, &reachable, w);
        let mut accept = false;
        let mut reject = false;
        for q in image.iter() {
            if dfa.is_final(q) {
                accept = true;
            } else {
                reject = true;
            }
        }
        accept && reject
    })
}

/// The literal definition of the left distinguishability language, with
/// both context words scanned explicitly. Exponential; intended for tiny
/// inputs as the ur-oracle behind [`dist_bruteforce`].
pub fn dist_bruteforce_literal(dfa: &Dfa, max_len: usize) -> BoundedLang {
    let contexts: Vec<Word> =
        enumerate(dfa.alphabet_size(), dfa.num_states().saturating_sub(1)).collect();
    BoundedLang::collect(dfa.alphabet_size(), max_len, |w| {
        let accepts_some = contexts.iter().any(|x| dfa.accepts(&x.concat(w)));
        let rejects_some = contexts.iter().any(|y| !dfa.accepts(&y.concat(w)));
        accepts_some && rejects_some
    })
}

/// Bounded membership of the right distinguishability language: after
/// reading w, both acceptance and rejection must remain reachable.
pub fn pref_dist_bruteforce(dfa: &Dfa, max_len: usize) -> BoundedLang {
    let can_accept = dfa.can_reach_final();
    let can_reject = dfa.can_reach(|q| !dfa.is_final(q));
    BoundedLang::collect(dfa.alphabet_size(), max_len, |w| {
        let q = dfa.run(dfa.initial(), w);
        can_accept[q] && can_reject[q]
    })
}

/// Bounded membership of the two-sided distinguishability language: some
/// left context makes w extendable to a member, some to a non-member.
pub fn infix_dist_bruteforce(dfa: &Dfa, max_len: usize) -> BoundedLang {
    let n = dfa.num_states();
    let reachable = StateSet::from_iter(n, dfa.reachable_states());
    let can_accept = dfa.can_reach_final();
    let can_reject = dfa.can_reach(|q| !dfa.is_final(q));
    BoundedLang::collect(dfa.alphabet_size(), max_len, |w| {
        let image = image_of(dfa, &reachable, w);
        image.iter().any(|q| can_accept[q]) && image.iter().any(|q| can_reject[q])
    })
}

/// Brute-force set of minimal distinguishing words: for every pair of
/// states of the minimal DFA, scan words in quasi-lexicographic order for
/// the first separator. Every pair separates within `n - 1` symbols.
pub fn dist_min_bruteforce(dfa: &Dfa) -> WordSet {
    let min = dfa.minimize();
    let n = min.num_states();
    let mut out = WordSet::new();
    for p in 0..n {
        for q in p + 1..n {
            let sep = enumerate(min.alphabet_size(), n.saturating_sub(1))
                .find(|w| min.is_final(min.run(p, w)) != min.is_final(min.run(q, w)))
                .expect("distinct states of a minimal DFA must separate");
            out.insert(sep);
        }
    }
    out
}

/// Brute-force set of minimal words distinguishing right quotients. Right
/// classes are found by enumerating the transformations induced by words
/// (so this is exponential in the worst case; intended desk-scale), and
/// each class pair is separated by a literal quasi-lex scan on the left.
pub fn pref_dist_min_bruteforce(dfa: &Dfa) -> WordSet {
    let min = dfa.minimize();
    let n = min.num_states();
    let k = min.alphabet_size();

    // enumerate reachable transformations t_x : q -> δ(q, x)
    let mut seen = std::collections::HashSet::new();
    let mut queue = std::collections::VecDeque::new();
    let identity: Vec<usize> = (0..n).collect();
    let mut class_reps: Vec<(Vec<usize>, Word)> = Vec::new();
    let mut sig_seen = std::collections::HashSet::new();
    seen.insert(identity.clone());
    queue.push_back((identity, Word::empty()));
    while let Some((t, x)) = queue.pop_front() {
        let signature: Vec<bool> = (0..n).map(|q| min.is_final(t[q])).collect();
        if sig_seen.insert(signature) {
            class_reps.push((t.clone(), x.clone()));
        }
        for a in 0..k {
            let next: Vec<usize> = (0..n).map(|q| min.step(t[q], a as u8)).collect();
            if seen.insert(next.clone()) {
                queue.push_back((next, x.child(a as u8)));
            }
        }
    }

    let mut out = WordSet::new();
    for i in 0..class_reps.len() {
        for j in i + 1..class_reps.len() {
            let x = &class_reps[i].1;
            let y = &class_reps[j].1;
            let sep = enumerate(k, n.saturating_sub(1))
                .find(|w| min.accepts(&w.concat(x)) != min.accepts(&w.concat(y)))
                .expect("distinct right classes must separate");
            out.insert(sep);
        }
    }
    out
}

/// Seeded random complete DFA, trimmed to its reachable states. The same
/// seed always produces the same automaton.
pub fn random_reduced_dfa(seed: u64, n: usize, k: usize, final_density: f64) -> Dfa {
    assert!(n >= 1 && k >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let delta: Vec<Vec<usize>> = (0..n)
        .map(|_| (0..k).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen::<f64>() < final_density).collect();
    Dfa::new(k, 0, finals, delta)
        .expect("generated table is valid")
        .trim()
}
