//! The distinguishability operations: left (D), right (E), and two-sided
//! (F), their iteration to a fixed point, and fixed-point classification.
//!
//! All results are canonical minimal DFAs, so iteration can detect fixed
//! points by structural equality. The left operation always fixes by the
//! second iterate; the two-sided one by the first extra application
//! whenever the result is not the universal language. No such bound is
//! claimed for the right operation here: the iterator records what it
//! observes and stops at `max_iters`.

use crate::closures::{closure, combinator, is_closed, ClosureKind};
use crate::dfa::Dfa;
use crate::nfa::reversed_min_dfa;
use crate::word::Word;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DistError {
    #[error("no fixed point within {0} iterations")]
    NoFixedPoint(usize),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
    #[error("pairwise distinguishing languages are defined for the left and right kinds only")]
    UnsupportedPairKind,
}

/// Which quotients are being distinguished.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DistKind {
    /// Left quotients; suffix closure.
    Left,
    /// Right quotients; prefix closure.
    Right,
    /// Two-sided quotients; infix closure.
    TwoSided,
}

impl DistKind {
    pub const ALL: [DistKind; 3] = [DistKind::Left, DistKind::Right, DistKind::TwoSided];

    pub fn closure_kind(self) -> ClosureKind {
        match self {
            DistKind::Left => ClosureKind::Suffix,
            DistKind::Right => ClosureKind::Prefix,
            DistKind::TwoSided => ClosureKind::Infix,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DistKind::Left => "left",
            DistKind::Right => "right",
            DistKind::TwoSided => "two-sided",
        }
    }
}

/// The distinguishability language of the given kind, as a canonical
/// minimal DFA.
///
/// The right kind goes through the reversal identity (reverse, take the
/// left language, reverse back); the prefix-side combinator computes the
/// same language and is kept as a cross-check, see
/// [`dist_via_combinator`].
pub fn dist(dfa: &Dfa, kind: DistKind) -> Dfa {
    match kind {
        DistKind::Left => combinator(dfa, ClosureKind::Suffix),
        DistKind::Right => {
            let reversed = reversed_min_dfa(dfa);
            let d = combinator(&reversed, ClosureKind::Suffix);
            reversed_min_dfa(&d)
        }
        DistKind::TwoSided => combinator(dfa, ClosureKind::Infix),
    }
}

/// The same three languages computed uniformly through the closure
/// combinator, with no reversal shortcut.
pub fn dist_via_combinator(dfa: &Dfa, kind: DistKind) -> Dfa {
    combinator(dfa, kind.closure_kind())
}

/// The direct subset construction for the left distinguishability
/// language: start from the full state set, take pointwise images, and
/// accept the subsets containing both a final and a non-final state.
/// Singleton subsets stay in the table as plain non-final states and are
/// merged away by the final minimization.
pub fn dist_direct(dfa: &Dfa) -> Dfa {
    let min = dfa.minimize();
    let n = min.num_states();
    let k = min.alphabet_size();
    let full = crate::bitset::StateSet::full(n);
    let mut index = std::collections::HashMap::new();
    let mut subsets = vec![full.clone()];
    index.insert(full, 0usize);
    let mut delta: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < subsets.len() {
        let current = subsets[head].clone();
        let mut row = Vec::with_capacity(k);
        for a in 0..k {
            let mut image = crate::bitset::StateSet::empty(n);
            for q in current.iter() {
                image.insert(min.step(q, a as u8));
            }
            let id = match index.get(&image) {
                Some(&i) => i,
                None => {
                    let i = subsets.len();
                    index.insert(image.clone(), i);
                    subsets.push(image);
                    i
                }
            };
            row.push(id);
        }
        delta.push(row);
        head += 1;
    }
    let finals: Vec<usize> = subsets
        .iter()
        .enumerate()
        .filter(|(_, s)| {
            let mut accept = false;
            let mut reject = false;
            for q in s.iter() {
                if min.is_final(q) {
                    accept = true;
                } else {
                    reject = true;
                }
            }
            accept && reject
        })
        .map(|(i, _)| i)
        .collect();
    Dfa::new(k, 0, finals, delta)
        .expect("subset table is valid")
        .minimize()
}

/// The language distinguishing the words `x` and `y`: the symmetric
/// difference of their quotients (left kind) or of their reverse-side
/// quotients (right kind).
pub fn dist_pair(dfa: &Dfa, x: &Word, y: &Word, kind: DistKind) -> Result<Dfa, DistError> {
    match kind {
        DistKind::Left => {
            let p = dfa.run(dfa.initial(), x);
            let q = dfa.run(dfa.initial(), y);
            let xor = dfa
                .rooted_at(p)
                .product(&dfa.rooted_at(q), |a, b| a != b)
                .expect("same automaton");
            Ok(xor.minimize())
        }
        DistKind::Right => {
            let reversed = reversed_min_dfa(dfa);
            let pair = dist_pair(&reversed, &x.reversed(), &y.reversed(), DistKind::Left)?;
            Ok(reversed_min_dfa(&pair))
        }
        DistKind::TwoSided => Err(DistError::UnsupportedPairKind),
    }
}

/// The chain `L, O(L), O²(L), ...` of minimized iterates up to and
/// including the first fixed point.
#[derive(Debug, Clone)]
pub struct IterationTrace {
    /// `stages[i]` is the canonical minimal DFA of the i-th iterate;
    /// `stages[0]` is the input language itself.
    pub stages: Vec<Dfa>,
    /// First `i` with `O^(i+1)(L) = O^i(L)`.
    pub fixed_point_index: usize,
}

/// Applies the operation until two consecutive results coincide. The left
/// kind always terminates by the second iterate, so for it the budget is
/// only a safety net; failing to fix there is an internal error.
pub fn iterate(dfa: &Dfa, kind: DistKind, max_iters: usize) -> Result<IterationTrace, DistError> {
    assert!(max_iters >= 2, "need at least two iterations");
    let budget = if kind == DistKind::Left {
        max_iters.max(3)
    } else {
        max_iters
    };
    let mut stages = vec![dfa.minimize()];
    for i in 0..budget {
        let next = dist(stages.last().unwrap(), kind);
        if next == *stages.last().unwrap() {
            return Ok(IterationTrace {
                stages,
                fixed_point_index: i,
            });
        }
        if kind == DistKind::Left && i >= 2 {
            return Err(DistError::InternalInvariant(
                "left distinguishability not fixed by the second iterate".into(),
            ));
        }
        stages.push(next);
    }
    Err(DistError::NoFixedPoint(budget))
}

/// Fixed-point classification of a language under one operation kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixedPointClass {
    /// `dist(L, kind) = L`.
    pub is_fixed_point: bool,
    /// The minimal DFA has a dead state.
    pub has_empty_quotient: bool,
    /// The language is closed under the matching closure operator.
    pub is_closed: bool,
}

/// Computes the three flags independently; the implications between them
/// (closed + empty quotient implies fixed, fixed implies empty quotient,
/// and for the two-sided kind fixed iff infix closed when L != Σ*) are
/// assertable from the result.
pub fn classify_fixed_point(dfa: &Dfa, kind: DistKind) -> FixedPointClass {
    let min = dfa.minimize();
    let d = dist(&min, kind);
    FixedPointClass {
        is_fixed_point: d == min,
        has_empty_quotient: !min.dead_states().is_empty(),
        is_closed: is_closed(&min, kind.closure_kind()),
    }
}

/// Left distinguishability expressed through the quotient formula: the
/// union of all quotients minus their intersection, computed by an n-way
/// product over the states of the minimal DFA. Kept as an independent
/// algebraic route for cross-checking `dist`.
pub fn dist_via_quotients(dfa: &Dfa) -> Dfa {
    let min = dfa.minimize();
    let n = min.num_states();
    // fold a product over all rootings: track per word the set of states
    // it reaches from each possible start, i.e. run the full tuple
    let union = (1..n).fold(min.rooted_at(0), |acc, q| {
        acc.product(&min.rooted_at(q), |a, b| a || b)
            .expect("same automaton")
    });
    let intersection = (1..n).fold(min.rooted_at(0), |acc, q| {
        acc.product(&min.rooted_at(q), |a, b| a && b)
            .expect("same automaton")
    });
    union
        .product(&intersection, |u, i| u && !i)
        .expect("same alphabet")
        .minimize()
}

/// Convenience: the suffix closure of the language (used by shortcuts and
/// reports; equals `dist` for languages with an empty quotient).
pub fn suffix_closure(dfa: &Dfa) -> Dfa {
    closure(dfa, ClosureKind::Suffix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfa::dfa_from_edges;
    use crate::oracle::{bounded, dist_bruteforce, infix_dist_bruteforce, pref_dist_bruteforce};
    use crate::witness::{generate, Family};

    fn sigma_star(k: usize) -> Dfa {
        let edges: Vec<(usize, usize, usize)> = (0..k).map(|a| (0, a, 0)).collect();
        dfa_from_edges(k, 1, 0, &[0], &edges).unwrap()
    }

    fn empty_lang(k: usize) -> Dfa {
        let edges: Vec<(usize, usize, usize)> = (0..k).map(|a| (0, a, 0)).collect();
        dfa_from_edges(k, 1, 0, &[], &edges).unwrap()
    }

    #[test]
    fn single_quotient_languages_have_empty_distinguishability() {
        for kind in DistKind::ALL {
            assert_eq!(dist(&sigma_star(2), kind).finals().len(), 0, "{kind:?}");
            assert_eq!(dist(&empty_lang(2), kind).finals().len(), 0, "{kind:?}");
        }
    }

    #[test]
    fn universal_witness_reaches_the_left_bound() {
        let u4 = generate(Family::Universal, 4).unwrap();
        let d = dist(&u4, DistKind::Left);
        assert_eq!(d.num_states(), 12); // 2^4 - 4
        assert_eq!(dist_direct(&u4), d);
    }

    #[test]
    fn right_distinguishability_of_ends_in_a_is_universal() {
        // (a+b)* a
        let dfa = dfa_from_edges(2, 2, 0, &[1], &[(0, 0, 1), (0, 1, 0), (1, 0, 1), (1, 1, 0)])
            .unwrap();
        let e = dist(&dfa, DistKind::Right);
        assert!(e.equivalent(&sigma_star(2)).unwrap());
    }

    #[test]
    fn two_sided_equals_infix_closure_on_languages_with_dead_state() {
        // finite language {ab}: has an empty quotient
        let dfa = dfa_from_edges(2, 3, 0, &[2], &[(0, 0, 1), (1, 1, 2)]).unwrap();
        let f = dist(&dfa, DistKind::TwoSided);
        let infix = closure(&dfa, ClosureKind::Infix);
        assert_eq!(f, infix);
    }

    #[test]
    fn dist_direct_trivial_cases() {
        assert_eq!(dist_direct(&sigma_star(2)).finals().len(), 0);
        let u4 = generate(Family::Universal, 4).unwrap();
        assert_eq!(dist_direct(&u4), dist(&u4, DistKind::Left));
    }

    #[test]
    fn fixed_point_demo_fixes_after_one_application() {
        let dfa = generate(Family::DemoFixedPoint, 0).unwrap();
        let trace = iterate(&dfa, DistKind::Left, 8).unwrap();
        assert_eq!(trace.fixed_point_index, 1);
        let d = dist(&dfa, DistKind::Left);
        assert_eq!(dist(&d, DistKind::Left), d);
        assert!(!dfa.equivalent(&d).unwrap());
    }

    #[test]
    fn dist_pair_trivial_cases() {
        let u4 = generate(Family::Universal, 4).unwrap();
        let x = Word::from_digits("01");
        let same = dist_pair(&u4, &x, &x, DistKind::Left).unwrap();
        assert!(same.finals().is_empty());

        // words reaching the same state have equal quotients
        let a = Word::from_digits("2");
        let b = Word::empty();
        let pair = dist_pair(&u4, &a, &b, DistKind::Left).unwrap();
        assert!(pair.finals().is_empty());
    }

    #[test]
    fn dist_pair_universal_witness_minimum_separator() {
        // the separating language of ε and 0 in the 4-state universal
        // witness is nonempty; its least word is 00 (read from states 0
        // and 1, two a-steps land in {2, 3} with exactly one final)
        let u4 = generate(Family::Universal, 4).unwrap();
        let pair = dist_pair(&u4, &Word::empty(), &Word::from_digits("0"), DistKind::Left)
            .unwrap();
        assert_eq!(pair.min_accepted_word(), Some(Word::from_digits("00")));
    }

    #[test]
    fn dist_pair_rejects_two_sided() {
        let u4 = generate(Family::Universal, 4).unwrap();
        assert_eq!(
            dist_pair(&u4, &Word::empty(), &Word::empty(), DistKind::TwoSided),
            Err(DistError::UnsupportedPairKind)
        );
    }

    #[test]
    fn iteration_traces_match_the_worked_examples() {
        // three-state demo: L, D(L), D²(L) = {ε}, fixed at index 2
        let l = generate(Family::DemoDChain, 0).unwrap();
        let trace = iterate(&l, DistKind::Left, 8).unwrap();
        assert_eq!(trace.fixed_point_index, 2);
        assert_eq!(trace.stages.len(), 3);
        let eps_only = dfa_from_edges(2, 2, 0, &[0], &[(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)])
            .unwrap()
            .minimize();
        assert_eq!(trace.stages[2].minimize(), eps_only);

        // nine-state demo: sc(D) = 7, D ≠ D², D² = D³
        let l = generate(Family::DemoDTwoStep, 0).unwrap();
        let trace = iterate(&l, DistKind::Left, 8).unwrap();
        assert_eq!(trace.fixed_point_index, 2);
        assert_eq!(trace.stages[1].num_states(), 7);

        // right-side demo: E(L) has 4 states, E² = Eⁿ has 3
        let l = generate(Family::DemoEChain, 0).unwrap();
        let trace = iterate(&l, DistKind::Right, 8).unwrap();
        assert_eq!(trace.fixed_point_index, 2);
        assert_eq!(trace.stages[1].num_states(), 4);
        assert_eq!(trace.stages[2].num_states(), 3);
    }

    #[test]
    fn classification_flags() {
        // suffix-closed with an empty quotient: a fixed point
        let w2 = generate(Family::SuffixLadder, 2).unwrap();
        let class = classify_fixed_point(&w2, DistKind::Left);
        assert!(class.is_fixed_point && class.has_empty_quotient && class.is_closed);

        // neither the demo nor its complement has a dead state, so its
        // two-sided language is universal, which is the one excluded
        // fixed-point case
        let f = dist(&generate(Family::DemoDChain, 0).unwrap(), DistKind::TwoSided);
        assert!(f.report().is_universal);
        let class = classify_fixed_point(&f, DistKind::TwoSided);
        assert!(!class.is_fixed_point);

        // infix-closed and not universal: fixed for the two-sided kind
        let f = dist(&generate(Family::SuffixLadder, 2).unwrap(), DistKind::TwoSided);
        let class = classify_fixed_point(&f, DistKind::TwoSided);
        assert!(class.is_fixed_point && class.is_closed && !f.report().is_universal);
    }

    #[test]
    fn dist_agrees_with_bruteforce_and_alternates() {
        let samples = [
            generate(Family::Universal, 3).unwrap(),
            generate(Family::DemoDChain, 0).unwrap(),
            generate(Family::DemoEChain, 0).unwrap(),
            generate(Family::CycleTrap, 4).unwrap(),
        ];
        for dfa in &samples {
            let d = dist(dfa, DistKind::Left);
            assert_eq!(bounded(&d, 6), dist_bruteforce(dfa, 6));
            assert_eq!(dist_via_combinator(dfa, DistKind::Left), d);
            assert_eq!(dist_via_quotients(dfa), d);
            assert_eq!(dist_direct(dfa), d);

            let e = dist(dfa, DistKind::Right);
            assert_eq!(bounded(&e, 6), pref_dist_bruteforce(dfa, 6));
            assert_eq!(dist_via_combinator(dfa, DistKind::Right), e);

            let f = dist(dfa, DistKind::TwoSided);
            assert_eq!(bounded(&f, 6), infix_dist_bruteforce(dfa, 6));

            // results are closed under their operators
            assert!(is_closed(&d, ClosureKind::Suffix));
            assert!(is_closed(&e, ClosureKind::Prefix));
            assert!(is_closed(&f, ClosureKind::Infix));
        }
    }

    #[test]
    fn representation_independence() {
        // any reduced automaton for the same language yields the same D
        let u3 = generate(Family::Universal, 3).unwrap();
        // build a redundant automaton: product with Σ*
        let redundant = u3.product(&sigma_star(3), |x, _| x).unwrap();
        assert_eq!(dist(&redundant, DistKind::Left), dist(&u3, DistKind::Left));
    }
}
