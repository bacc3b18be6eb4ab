//! Generators for the automaton families used as witnesses and worked
//! examples, so tests reference constructions instead of hand-typed
//! tables.
//!
//! Letter conventions: alphabet letters map to ordinals in order, so
//! a = 0, b = 1, c = 2 and the digits 0, 1 map to themselves.

use crate::dfa::{dfa_from_edges, Dfa};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("family {family} requires n >= {min}, got {n}")]
pub struct WitnessError {
    pub family: Family,
    pub n: usize,
    pub min: usize,
}

/// The generated families. Parameterized families take their size from
/// the `n` argument of [`generate`]; the fixed demo automata ignore it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Three-letter worst-case witness with n states: a cycles all
    /// states, b swaps the first two, c loops everywhere except the last
    /// state, which it sends home. Attains the 2^n - n bound for the
    /// left distinguishability operation.
    Universal,
    /// Two-letter family whose transition semigroup is the full symmetric
    /// group: a cycles all n states, b swaps the first two. Its left
    /// distinguishability language is universal.
    Symmetric,
    /// Suffixes of the single word 0^m 1. State complexity m + 3; steps
    /// down one rung per application of the left minimal-word operator.
    SuffixLadder,
    /// An (n-1)-cycle on a with a b-trap from the start; the dead state
    /// makes the empty language a quotient. Attains the 2^(n-1) bound for
    /// the left and two-sided operations.
    CycleTrap,
    /// The finite prefix-closed family {a^i | i <= n-2} over one letter;
    /// attains the bound n for the right operation.
    UnaryPrefixes,
    /// Three-state demo whose left distinguishability chain is
    /// L, (0 + 1*10)*, {ε}.
    DemoDChain,
    /// Nine-state demo with a 7-state first iterate and a strictly
    /// two-step left chain; its minimal-word chain shrinks twice.
    DemoDTwoStep,
    /// Eleven-state demo that is not a fixed point but whose first left
    /// iterate is.
    DemoFixedPoint,
    /// Five-state demo with a strictly two-step right chain.
    DemoEChain,
    /// aaΣ*ba*: shares its (universal) left distinguishability language
    /// with [`Family::TwinB`] while their minimal-word sets differ.
    TwinA,
    /// bbΣ*ab*: the mirror twin of [`Family::TwinA`].
    TwinB,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Universal,
        Family::Symmetric,
        Family::SuffixLadder,
        Family::CycleTrap,
        Family::UnaryPrefixes,
        Family::DemoDChain,
        Family::DemoDTwoStep,
        Family::DemoFixedPoint,
        Family::DemoEChain,
        Family::TwinA,
        Family::TwinB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Universal => "universal",
            Family::Symmetric => "symmetric",
            Family::SuffixLadder => "suffix-ladder",
            Family::CycleTrap => "cycle-trap",
            Family::UnaryPrefixes => "unary-prefixes",
            Family::DemoDChain => "demo-d-chain",
            Family::DemoDTwoStep => "demo-d-two-step",
            Family::DemoFixedPoint => "demo-fixed-point",
            Family::DemoEChain => "demo-e-chain",
            Family::TwinA => "twin-a",
            Family::TwinB => "twin-b",
        }
    }

    /// Whether `generate` takes its size from the parameter.
    pub fn is_parameterized(self) -> bool {
        matches!(
            self,
            Family::Universal
                | Family::Symmetric
                | Family::SuffixLadder
                | Family::CycleTrap
                | Family::UnaryPrefixes
        )
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
                format!("unknown family {s:?}; expected one of {}", names.join(", "))
            })
    }
}

/// Generates the family member of size `n` (ignored for the fixed demos).
pub fn generate(family: Family, n: usize) -> Result<Dfa, WitnessError> {
    let check = |min: usize| {
        if family.is_parameterized() && n < min {
            Err(WitnessError { family, n, min })
        } else {
            Ok(())
        }
    };
    let dfa = match family {
        Family::Universal => {
            check(2)?;
            let mut edges = Vec::new();
            for i in 0..n {
                edges.push((i, 0, (i + 1) % n));
                edges.push((i, 1, if i == 0 { 1 } else if i == 1 { 0 } else { i }));
                edges.push((i, 2, if i == n - 1 { 0 } else { i }));
            }
            dfa_from_edges(3, n, 0, &[n - 1], &edges)
        }
        Family::Symmetric => {
            check(3)?;
            let mut edges = Vec::new();
            for i in 0..n {
                edges.push((i, 0, (i + 1) % n));
                edges.push((i, 1, if i == 0 { 1 } else if i == 1 { 0 } else { i }));
            }
            dfa_from_edges(2, n, 0, &[0], &edges)
        }
        Family::SuffixLadder => {
            // n is the ladder height m >= 0
            let m = n;
            let accept = m + 1;
            let dead = m + 2;
            let mut edges = Vec::new();
            for i in 0..=m {
                edges.push((i, 0, if i < m { i + 1 } else { dead }));
                edges.push((i, 1, accept));
            }
            edges.push((accept, 0, dead));
            edges.push((accept, 1, dead));
            edges.push((dead, 0, dead));
            edges.push((dead, 1, dead));
            dfa_from_edges(2, m + 3, 0, &[0, accept], &edges)
        }
        Family::CycleTrap => {
            check(2)?;
            let trap = n - 1;
            let mut edges = Vec::new();
            for i in 0..n - 1 {
                edges.push((i, 0, (i + 1) % (n - 1)));
                let on_b = match i {
                    0 => trap,
                    1 => 0,
                    _ => i,
                };
                edges.push((i, 1, on_b));
            }
            edges.push((trap, 0, trap));
            edges.push((trap, 1, trap));
            dfa_from_edges(2, n, 0, &[0], &edges)
        }
        Family::UnaryPrefixes => {
            check(2)?;
            let dead = n - 1;
            let mut edges = Vec::new();
            for i in 0..n - 1 {
                edges.push((i, 0, if i + 1 < n - 1 { i + 1 } else { dead }));
            }
            edges.push((dead, 0, dead));
            let finals: Vec<usize> = (0..n - 1).collect();
            dfa_from_edges(1, n, 0, &finals, &edges)
        }
        Family::DemoDChain => dfa_from_edges(
            2,
            3,
            0,
            &[0, 2],
            &[(0, 0, 1), (0, 1, 2), (1, 0, 0), (1, 1, 0), (2, 0, 0), (2, 1, 0)],
        ),
        Family::DemoDTwoStep => dfa_from_edges(
            2,
            9,
            0,
            &[2, 4, 5, 8],
            &[
                (0, 0, 1),
                (0, 1, 5),
                (1, 0, 2),
                (1, 1, 1),
                (2, 0, 2),
                (2, 1, 3),
                (3, 0, 4),
                (3, 1, 4),
                (4, 0, 4),
                (4, 1, 1),
                (5, 0, 6),
                (5, 1, 6),
                (6, 0, 6),
                (6, 1, 7),
                (7, 0, 8),
                (7, 1, 7),
                (8, 0, 8),
                (8, 1, 5),
            ],
        ),
        Family::DemoFixedPoint => dfa_from_edges(
            2,
            11,
            0,
            &[0, 1, 2, 3, 4, 5, 6, 9],
            &[
                (0, 0, 1),
                (0, 1, 0),
                (1, 0, 1),
                (1, 1, 2),
                (2, 0, 6),
                (2, 1, 3),
                (3, 0, 1),
                (3, 1, 4),
                (4, 0, 5),
                (4, 1, 1),
                (5, 0, 5),
                (5, 1, 6),
                (6, 0, 7),
                (6, 1, 8),
                (7, 0, 7),
                (7, 1, 8),
                (8, 0, 6),
                (8, 1, 9),
                (9, 0, 10),
                (9, 1, 10),
                (10, 0, 5),
                (10, 1, 6),
            ],
        ),
        Family::DemoEChain => dfa_from_edges(
            2,
            5,
            0,
            &[0, 2],
            &[
                (0, 0, 1),
                (0, 1, 3),
                (1, 0, 2),
                (1, 1, 1),
                (2, 0, 1),
                (2, 1, 2),
                (3, 0, 0),
                (3, 1, 4),
                (4, 0, 4),
                (4, 1, 4),
            ],
        ),
        Family::TwinA => dfa_from_edges(
            2,
            5,
            0,
            &[3],
            &[
                (0, 0, 1),
                (0, 1, 4),
                (1, 0, 2),
                (1, 1, 4),
                (2, 0, 2),
                (2, 1, 3),
                (3, 0, 3),
                (3, 1, 3),
                (4, 0, 4),
                (4, 1, 4),
            ],
        ),
        Family::TwinB => dfa_from_edges(
            2,
            5,
            0,
            &[3],
            &[
                (0, 1, 1),
                (0, 0, 4),
                (1, 1, 2),
                (1, 0, 4),
                (2, 1, 2),
                (2, 0, 3),
                (3, 0, 3),
                (3, 1, 3),
                (4, 0, 4),
                (4, 1, 4),
            ],
        ),
    };
    Ok(dfa.expect("generator tables are valid"))
}
