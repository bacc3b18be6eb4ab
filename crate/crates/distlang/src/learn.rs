//! Reconstruction of a language from its set of minimal distinguishing
//! words plus a membership oracle.
//!
//! Words are enumerated in quasi-lexicographic order over the tree of
//! state access words. A word that no existing state's access word can
//! simulate becomes a new state; otherwise it only installs a transition,
//! and its descendants are never visited. The run stops once a whole
//! length level adds no state. Two words count as equivalent when *every*
//! word of the given set fails to separate them; testing any single
//! separator would merge distinguishable words, since each element of the
//! set only separates some of the quotient pairs.

use std::collections::BTreeSet;

use crate::dfa::Dfa;
use crate::min_words::WordSet;
use crate::word::{enumerate, Word};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("query {0} exceeds the trusted length {1} of the word-list oracle")]
    BeyondTrustedLength(Word, usize),
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LearnError {
    #[error("enumeration exceeded the hard cap {0}; the word set is inconsistent with the oracle")]
    HardCapExceeded(usize),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// A consistent membership oracle: the same word always gets the same
/// answer.
pub trait MembershipOracle {
    fn is_member(&mut self, word: &Word) -> Result<bool, OracleError>;
}

/// Membership oracle backed by a DFA.
#[derive(Debug, Clone)]
pub struct DfaOracle {
    dfa: Dfa,
    queries: u64,
}

impl DfaOracle {
    pub fn new(dfa: Dfa) -> Self {
        DfaOracle { dfa, queries: 0 }
    }

    pub fn queries(&self) -> u64 {
        self.queries
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }
}

impl MembershipOracle for DfaOracle {
    fn is_member(&mut self, word: &Word) -> Result<bool, OracleError> {
        self.queries += 1;
        Ok(self.dfa.accepts(word))
    }
}

/// Membership oracle backed by a finite word list, trusted only up to an
/// explicit length; longer queries are an error rather than a guess.
#[derive(Debug, Clone)]
pub struct WordListOracle {
    members: BTreeSet<Word>,
    trusted_len: usize,
    queries: u64,
}

impl WordListOracle {
    pub fn new(members: impl IntoIterator<Item = Word>, trusted_len: usize) -> Self {
        WordListOracle {
            members: members.into_iter().collect(),
            trusted_len,
            queries: 0,
        }
    }

    pub fn queries(&self) -> u64 {
        self.queries
    }
}

impl MembershipOracle for WordListOracle {
    fn is_member(&mut self, word: &Word) -> Result<bool, OracleError> {
        if word.len() > self.trusted_len {
            return Err(OracleError::BeyondTrustedLength(
                word.clone(),
                self.trusted_len,
            ));
        }
        self.queries += 1;
        Ok(self.members.contains(word))
    }
}

/// Outcome of a successful reconstruction.
#[derive(Debug, Clone)]
pub struct LearnResult {
    /// The reconstructed DFA; minimal whenever the input set really is
    /// the language's minimal distinguishing set.
    pub dfa: Dfa,
    /// Length of the last word that created a state; the language is an
    /// l-cover of its members up to this length.
    pub cover_length: usize,
    /// Longest word in the distinguishing set.
    pub d: usize,
    /// Oracle invocations made.
    pub queries: u64,
    /// Longest word the oracle was asked about.
    pub max_query_len: usize,
}

struct CountingOracle<'a> {
    inner: &'a mut dyn MembershipOracle,
    queries: u64,
    max_query_len: usize,
}

impl MembershipOracle for CountingOracle<'_> {
    fn is_member(&mut self, word: &Word) -> Result<bool, OracleError> {
        self.queries += 1;
        self.max_query_len = self.max_query_len.max(word.len());
        self.inner.is_member(word)
    }
}

/// Whether no word of `dmin` separates `x` from `y` under the oracle.
pub fn equivalent_words(
    x: &Word,
    y: &Word,
    dmin: &WordSet,
    oracle: &mut dyn MembershipOracle,
) -> Result<bool, OracleError> {
    for w in dmin.iter() {
        if oracle.is_member(&x.concat(w))? != oracle.is_member(&y.concat(w))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reconstructs the minimal DFA of the oracle's language, assuming `dmin`
/// is its set of minimal distinguishing words. `hard_cap` bounds the
/// enumerated word length defensively; exceeding it means the set and the
/// oracle do not belong to the same language.
///
/// If `dmin` is not the exact minimal set the run still completes, but
/// the result is only as good as the set: a set that fails to separate
/// some quotient pair merges states, which [`cover_check`] then flags.
pub fn learn(
    dmin: &WordSet,
    alphabet_size: usize,
    oracle: &mut dyn MembershipOracle,
    hard_cap: usize,
) -> Result<LearnResult, LearnError> {
    let k = alphabet_size;
    let mut counting = CountingOracle {
        inner: oracle,
        queries: 0,
        max_query_len: 0,
    };
    let mut labels: Vec<Word> = vec![Word::empty()];
    let mut delta: Vec<Vec<Option<usize>>> = vec![vec![None; k]];
    let mut last_created = 0usize;

    let mut length = 1usize;
    while length <= last_created + 1 {
        if length > hard_cap {
            return Err(LearnError::HardCapExceeded(hard_cap));
        }
        // parents in creation order, which is quasi-lex order of labels
        let parents: Vec<usize> = (0..labels.len())
            .filter(|&q| labels[q].len() == length - 1)
            .collect();
        for p in parents {
            for a in 0..k {
                let candidate = labels[p].child(a as u8);
                let mut target = None;
                for q in 0..labels.len() {
                    if equivalent_words(&candidate, &labels[q], dmin, &mut counting)? {
                        target = Some(q);
                        break;
                    }
                }
                match target {
                    Some(q) => delta[p][a] = Some(q),
                    None => {
                        labels.push(candidate);
                        delta.push(vec![None; k]);
                        delta[p][a] = Some(labels.len() - 1);
                        last_created = length;
                    }
                }
            }
        }
        length += 1;
    }

    let mut finals = Vec::new();
    for (q, label) in labels.iter().enumerate() {
        if counting.is_member(label)? {
            finals.push(q);
        }
    }
    let table: Vec<Vec<usize>> = delta
        .iter()
        .map(|row| {
            row.iter()
                .map(|t| t.expect("every state level was expanded"))
                .collect()
        })
        .collect();
    let dfa = Dfa::new(k, 0, finals, table).expect("learned table is valid");
    Ok(LearnResult {
        dfa,
        cover_length: last_created,
        d: dmin.max_word_len(),
        queries: counting.queries,
        max_query_len: counting.max_query_len,
    })
}

/// Checks the reconstruction against the oracle: memberships must agree
/// up to `sc + d + 1`, and no query during learning may have been longer
/// than that.
pub fn cover_check(
    result: &LearnResult,
    oracle: &mut dyn MembershipOracle,
) -> Result<bool, OracleError> {
    let sc = result.dfa.num_states();
    let depth = result.cover_length.max(sc + result.d + 1);
    if result.max_query_len > sc + result.d + 1 {
        return Ok(false);
    }
    for w in enumerate(result.dfa.alphabet_size(), depth) {
        if oracle.is_member(&w)? != result.dfa.accepts(&w) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfa::dfa_from_edges;
    use crate::min_words::dist_min;
    use crate::witness::{generate, Family};

    fn learn_from(dfa: &Dfa) -> (LearnResult, DfaOracle) {
        let dmin = dist_min(dfa);
        let mut oracle = DfaOracle::new(dfa.clone());
        let result = learn(&dmin, dfa.alphabet_size(), &mut oracle, 64).unwrap();
        (result, oracle)
    }

    #[test]
    fn learns_the_universal_witness_exactly() {
        let u4 = generate(Family::Universal, 4).unwrap();
        let (result, _) = learn_from(&u4);
        assert!(result.dfa.isomorphic(&u4.minimize()).unwrap());
        assert_eq!(result.dfa.num_states(), 4);
        assert_eq!(result.dfa.minimize(), result.dfa.canonicalize());
    }

    #[test]
    fn learns_the_epsilon_language() {
        let eps = dfa_from_edges(2, 2, 0, &[0], &[(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)])
            .unwrap();
        let (result, _) = learn_from(&eps);
        assert_eq!(result.dfa.num_states(), 2);
        assert!(result.dfa.equivalent(&eps).unwrap());
    }

    #[test]
    fn learns_the_ladder_with_the_right_complexity() {
        let w2 = generate(Family::SuffixLadder, 2).unwrap();
        let (result, _) = learn_from(&w2);
        assert_eq!(result.dfa.num_states(), 5);
        assert!(result.dfa.equivalent(&w2).unwrap());
    }

    #[test]
    fn query_lengths_stay_within_the_budget() {
        for family in [Family::Universal, Family::SuffixLadder, Family::CycleTrap] {
            let dfa = generate(family, 4).unwrap();
            let (result, mut oracle) = learn_from(&dfa);
            let sc = dfa.state_complexity();
            assert!(result.max_query_len <= sc + result.d + 1);
            assert_eq!(result.dfa.num_states(), sc);
            assert!(cover_check(&result, &mut oracle).unwrap());
        }
    }

    #[test]
    fn corrupted_word_set_fails_the_cover_check() {
        let u4 = generate(Family::Universal, 4).unwrap();
        let full = dist_min(&u4);
        // drop the longest word; the pair it separated now merges
        let longest = full.iter().last().unwrap().clone();
        let corrupted: WordSet = full.iter().filter(|w| **w != longest).cloned().collect();
        let mut oracle = DfaOracle::new(u4.clone());
        let result = learn(&corrupted, 3, &mut oracle, 64).unwrap();
        assert!(result.dfa.num_states() < 4);
        assert!(!cover_check(&result, &mut oracle).unwrap());
    }

    #[test]
    fn equivalent_words_basic_facts() {
        let u4 = generate(Family::Universal, 4).unwrap();
        let dmin = dist_min(&u4);
        let mut oracle = DfaOracle::new(u4.clone());
        let x = Word::from_digits("01");
        assert!(equivalent_words(&x, &x, &dmin, &mut oracle).unwrap());
        // words reaching the same state are equivalent
        assert!(equivalent_words(
            &Word::from_digits("2"),
            &Word::empty(),
            &dmin,
            &mut oracle
        )
        .unwrap());
        // ε and 0 reach different states
        assert!(!equivalent_words(
            &Word::empty(),
            &Word::from_digits("0"),
            &dmin,
            &mut oracle
        )
        .unwrap());
    }

    #[test]
    fn word_list_oracle_rejects_untrusted_lengths() {
        let mut oracle = WordListOracle::new([Word::from_digits("0")], 2);
        assert_eq!(oracle.is_member(&Word::from_digits("0")), Ok(true));
        assert!(oracle.is_member(&Word::from_digits("0000")).is_err());

        // learning with an insufficient trusted length surfaces the error
        let u4 = generate(Family::Universal, 4).unwrap();
        let dmin = dist_min(&u4);
        let members: Vec<Word> = crate::word::enumerate(3, 2)
            .filter(|w| u4.accepts(w))
            .collect();
        let mut small = WordListOracle::new(members, 2);
        assert!(matches!(
            learn(&dmin, 3, &mut small, 64),
            Err(LearnError::Oracle(OracleError::BeyondTrustedLength(_, 2)))
        ));
    }

    #[test]
    fn learns_single_quotient_languages() {
        let sigma_star = dfa_from_edges(2, 1, 0, &[0], &[(0, 0, 0), (0, 1, 0)]).unwrap();
        let (result, _) = learn_from(&sigma_star);
        assert_eq!(result.dfa.num_states(), 1);
        assert!(result.dfa.is_final(0));
        assert_eq!(result.cover_length, 0);
    }
}
