//! A small regex front end: `+` for union, juxtaposition for
//! concatenation, `*` for iteration, `@` for the empty word, `#` for the
//! empty set, and parentheses. Symbols are the single-character names of
//! the declared alphabet. Compilation goes through the Glushkov position
//! automaton, so no epsilon transitions are needed.

use std::collections::BTreeSet;

use crate::dfa::Dfa;
use crate::nfa::Nfa;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("regex parse error at position {pos}: {msg}")]
pub struct RegexParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegexAst {
    Empty,
    Epsilon,
    Symbol(u8),
    Union(Box<RegexAst>, Box<RegexAst>),
    Concat(Box<RegexAst>, Box<RegexAst>),
    Star(Box<RegexAst>),
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    head: usize,
    symbols: &'a dyn Fn(char) -> Option<u8>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.head).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars
            .get(self.head)
            .map(|&(p, _)| p)
            .unwrap_or_else(|| self.chars.last().map(|&(p, c)| p + c.len_utf8()).unwrap_or(0))
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.head += 1;
        c
    }

    fn error(&self, msg: impl Into<String>) -> RegexParseError {
        RegexParseError {
            pos: self.pos(),
            msg: msg.into(),
        }
    }

    fn union(&mut self) -> Result<RegexAst, RegexParseError> {
        let mut node = self.concat()?;
        while self.peek() == Some('+') {
            self.bump();
            let rhs = self.concat()?;
            node = RegexAst::Union(Box::new(node), Box::new(rhs));
        }
        Ok(node)
    }

    fn concat(&mut self) -> Result<RegexAst, RegexParseError> {
        let mut node = self.postfix()?;
        while matches!(self.peek(), Some(c) if c != '+' && c != ')' && c != '*') {
            let rhs = self.postfix()?;
            node = RegexAst::Concat(Box::new(node), Box::new(rhs));
        }
        Ok(node)
    }

    fn postfix(&mut self) -> Result<RegexAst, RegexParseError> {
        let mut node = self.atom()?;
        while self.peek() == Some('*') {
            self.bump();
            node = RegexAst::Star(Box::new(node));
        }
        Ok(node)
    }

    fn atom(&mut self) -> Result<RegexAst, RegexParseError> {
        match self.peek() {
            None => Err(self.error("expected a symbol, @, #, or (")),
            Some('(') => {
                self.bump();
                let inner = self.union()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected )"));
                }
                self.bump();
                Ok(inner)
            }
            Some('@') => {
                self.bump();
                Ok(RegexAst::Epsilon)
            }
            Some('#') => {
                self.bump();
                Ok(RegexAst::Empty)
            }
            Some(c) if c == ')' || c == '*' || c == '+' => {
                Err(self.error(format!("unexpected {c:?}")))
            }
            Some(c) => match (self.symbols)(c) {
                Some(sym) => {
                    self.bump();
                    Ok(RegexAst::Symbol(sym))
                }
                None => Err(self.error(format!("unknown symbol {c:?}"))),
            },
        }
    }
}

/// Parses `text` over the given alphabet symbol names. Only
/// single-character names are addressable in a pattern.
pub fn parse_regex(text: &str, names: &[String]) -> Result<RegexAst, RegexParseError> {
    let lookup = |c: char| -> Option<u8> {
        names
            .iter()
            .position(|n| n.chars().count() == 1 && n.chars().next() == Some(c))
            .map(|i| i as u8)
    };
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    if chars.is_empty() {
        return Err(RegexParseError {
            pos: 0,
            msg: "empty pattern".into(),
        });
    }
    let mut parser = Parser {
        chars,
        head: 0,
        symbols: &lookup,
    };
    let ast = parser.union()?;
    if parser.peek().is_some() {
        return Err(parser.error("trailing input"));
    }
    Ok(ast)
}

struct Positions {
    symbol: Vec<u8>,
    follow: Vec<BTreeSet<usize>>,
}

struct Facts {
    nullable: bool,
    first: BTreeSet<usize>,
    last: BTreeSet<usize>,
}

fn analyze(node: &RegexAst, positions: &mut Positions) -> Facts {
    match node {
        RegexAst::Empty => Facts {
            nullable: false,
            first: BTreeSet::new(),
            last: BTreeSet::new(),
        },
        RegexAst::Epsilon => Facts {
            nullable: true,
            first: BTreeSet::new(),
            last: BTreeSet::new(),
        },
        RegexAst::Symbol(a) => {
            positions.symbol.push(*a);
            positions.follow.push(BTreeSet::new());
            let p = positions.symbol.len(); // positions are 1-based; 0 is the start state
            Facts {
                nullable: false,
                first: BTreeSet::from([p]),
                last: BTreeSet::from([p]),
            }
        }
        RegexAst::Union(l, r) => {
            let l = analyze(l, positions);
            let r = analyze(r, positions);
            Facts {
                nullable: l.nullable || r.nullable,
                first: l.first.union(&r.first).copied().collect(),
                last: l.last.union(&r.last).copied().collect(),
            }
        }
        RegexAst::Concat(l, r) => {
            let l = analyze(l, positions);
            let r = analyze(r, positions);
            for &p in &l.last {
                positions.follow[p - 1].extend(r.first.iter().copied());
            }
            let first = if l.nullable {
                l.first.union(&r.first).copied().collect()
            } else {
                l.first
            };
            let last = if r.nullable {
                r.last.union(&l.last).copied().collect()
            } else {
                r.last
            };
            Facts {
                nullable: l.nullable && r.nullable,
                first,
                last,
            }
        }
        RegexAst::Star(inner) => {
            let inner = analyze(inner, positions);
            for &p in &inner.last {
                positions.follow[p - 1].extend(inner.first.iter().copied());
            }
            Facts {
                nullable: true,
                first: inner.first,
                last: inner.last,
            }
        }
    }
}

/// Glushkov position NFA of the pattern.
pub fn regex_to_nfa(ast: &RegexAst, alphabet_size: usize) -> Nfa {
    let mut positions = Positions {
        symbol: Vec::new(),
        follow: Vec::new(),
    };
    let facts = analyze(ast, &mut positions);
    let m = positions.symbol.len();
    let mut delta: Vec<Vec<BTreeSet<usize>>> = vec![vec![BTreeSet::new(); alphabet_size]; m + 1];
    for &p in &facts.first {
        delta[0][positions.symbol[p - 1] as usize].insert(p);
    }
    for (q, follows) in positions.follow.iter().enumerate() {
        for &p in follows {
            delta[q + 1][positions.symbol[p - 1] as usize].insert(p);
        }
    }
    let mut finals: BTreeSet<usize> = facts.last;
    if facts.nullable {
        finals.insert(0);
    }
    Nfa::new(alphabet_size, [0], finals, delta).expect("position automaton is valid")
}

/// Compiles the pattern to a canonical minimal DFA.
pub fn regex_to_dfa(ast: &RegexAst, alphabet_size: usize) -> Dfa {
    regex_to_nfa(ast, alphabet_size).determinize().minimize()
}

/// Parses and compiles in one step, using the names' order as the
/// alphabet order.
pub fn compile(text: &str, names: &[String]) -> Result<Dfa, RegexParseError> {
    let ast = parse_regex(text, names)?;
    Ok(regex_to_dfa(&ast, names.len()))
}

/// Binary alphabet convenience used all over the tests and the CLI.
pub fn binary_names() -> Vec<String> {
    vec!["0".into(), "1".into()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfa::dfa_from_edges;
    use crate::witness::{generate, Family};
    use crate::word::{enumerate, Word};

    fn compile01(text: &str) -> Dfa {
        compile(text, &binary_names()).unwrap()
    }

    #[test]
    fn empty_set_and_epsilon() {
        let empty = compile01("#");
        assert_eq!(empty.num_states(), 1);
        assert!(empty.finals().is_empty());
        let eps = compile01("@");
        assert!(eps.accepts(&Word::empty()));
        assert_eq!(eps.num_states(), 2);
    }

    #[test]
    fn literal_word_accepts_exactly_itself() {
        let dfa = compile01("0110");
        for w in enumerate(2, 5) {
            assert_eq!(dfa.accepts(&w), w.to_string() == "0110", "{w}");
        }
    }

    #[test]
    fn paired_blocks_demo_language() {
        let dfa = compile01("((0+1)(0+1))*(@+1)");
        assert_eq!(dfa.num_states(), 3);
        let demo = generate(Family::DemoDChain, 0).unwrap();
        assert!(dfa.equivalent(&demo).unwrap());
    }

    #[test]
    fn two_state_iterate_language() {
        let dfa = compile01("(0+1*10)*");
        assert_eq!(dfa.num_states(), 2);
        let expected = dfa_from_edges(
            2,
            2,
            0,
            &[0],
            &[(0, 0, 0), (0, 1, 1), (1, 0, 0), (1, 1, 1)],
        )
        .unwrap();
        assert!(dfa.equivalent(&expected).unwrap());
    }

    #[test]
    fn union_concat_star_precedence() {
        // 0+10* is 0 + (1 0*), not (0+1)0*
        let dfa = compile01("0+10*");
        assert!(dfa.accepts(&Word::from_digits("0")));
        assert!(dfa.accepts(&Word::from_digits("1")));
        assert!(dfa.accepts(&Word::from_digits("100")));
        assert!(!dfa.accepts(&Word::from_digits("00")));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_regex("0+", &binary_names()).unwrap_err();
        assert_eq!(err.pos, 2);
        let err = parse_regex("(01", &binary_names()).unwrap_err();
        assert_eq!(err.pos, 3);
        let err = parse_regex("0x", &binary_names()).unwrap_err();
        assert!(err.msg.contains("unknown symbol"));
        assert!(parse_regex("", &binary_names()).is_err());
        assert!(parse_regex("*0", &binary_names()).is_err());
    }

    #[test]
    fn glushkov_matches_direct_simulation() {
        let ast = parse_regex("(0+1*10)*", &binary_names()).unwrap();
        let nfa = regex_to_nfa(&ast, 2);
        let dfa = regex_to_dfa(&ast, 2);
        for w in enumerate(2, 6) {
            assert_eq!(nfa.accepts(&w), dfa.accepts(&w), "{w}");
        }
    }
}
