//! The textual automaton document format, word files, and DOT export.
//!
//! A document looks like:
//!
//! ```text
//! dfa
//! alphabet: a b c
//! states: 4
//! initial: 0
//! finals: 3
//! 0 a 1
//! 0 b 1
//! 0 c 0
//! ```
//!
//! The first non-comment line is the kind (`dfa` or `nfa`; NFAs use
//! `initials:` with a list). `states:` is either a count (states are then
//! referred to by index) or a list of names. Transitions are
//! `src symbol dst` triples, one per line; symbols are referred to by
//! name. Comments start with `#`; blank lines are ignored. DFA documents
//! may omit transitions — loading completes them with a fresh dead state.
//! Emission is canonical (fixed field order, sorted transitions), and
//! canonical documents round-trip byte-for-byte.
//!
//! Word files hold one word per line: symbol names joined directly when
//! every name is a single character, comma-separated otherwise, and `@`
//! for the empty word.

use std::collections::BTreeSet;

use crate::dfa::{Dfa, PartialDfa};
use crate::nfa::Nfa;
use crate::word::Word;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct DocError {
    pub line: usize,
    pub msg: String,
}

fn err(line: usize, msg: impl Into<String>) -> DocError {
    DocError {
        line,
        msg: msg.into(),
    }
}

/// A parsed automaton document.
#[derive(Debug, Clone)]
pub enum AutomatonDoc {
    Dfa(PartialDfa),
    Nfa(Nfa),
}

impl AutomatonDoc {
    /// The automaton as a complete DFA, determinizing if necessary.
    pub fn into_dfa(self) -> Dfa {
        match self {
            AutomatonDoc::Dfa(partial) => partial.complete().expect("parsed document is valid"),
            AutomatonDoc::Nfa(nfa) => nfa.determinize(),
        }
    }
}

struct Lines<'a> {
    content: Vec<(usize, &'a str)>,
}

fn content_lines(text: &str) -> Lines<'_> {
    let content = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    Lines { content }
}

struct StateNames {
    names: Option<Vec<String>>,
    count: usize,
}

impl StateNames {
    fn resolve(&self, token: &str, line: usize) -> Result<usize, DocError> {
        match &self.names {
            Some(names) => names
                .iter()
                .position(|n| n == token)
                .ok_or_else(|| err(line, format!("unknown state {token:?}"))),
            None => {
                let q: usize = token
                    .parse()
                    .map_err(|_| err(line, format!("bad state index {token:?}")))?;
                if q >= self.count {
                    return Err(err(
                        line,
                        format!("state index {q} out of range ({} states)", self.count),
                    ));
                }
                Ok(q)
            }
        }
    }
}

/// Parses an automaton document.
pub fn parse_doc(text: &str) -> Result<AutomatonDoc, DocError> {
    let lines = content_lines(text);
    let mut iter = lines.content.iter().copied();
    let (kind_line, kind) = iter
        .next()
        .ok_or_else(|| err(0, "empty document"))?;
    if kind != "dfa" && kind != "nfa" {
        return Err(err(kind_line, format!("expected kind dfa or nfa, got {kind:?}")));
    }

    let mut alphabet: Option<(usize, Vec<String>)> = None;
    let mut states: Option<(usize, StateNames)> = None;
    let mut initials: Option<(usize, Vec<String>)> = None;
    let mut finals: Option<(usize, Vec<String>)> = None;
    let mut transitions: Vec<(usize, String, String, String)> = Vec::new();

    for (line, content) in iter {
        if let Some((key, rest)) = content.split_once(':') {
            let key = key.trim();
            let values: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            match key {
                "alphabet" => {
                    if values.is_empty() {
                        return Err(err(line, "alphabet must not be empty"));
                    }
                    alphabet = Some((line, values));
                }
                "states" => {
                    let named = if values.len() == 1 {
                        match values[0].parse::<usize>() {
                            Ok(count) => {
                                states = Some((
                                    line,
                                    StateNames {
                                        names: None,
                                        count,
                                    },
                                ));
                                true
                            }
                            Err(_) => false,
                        }
                    } else {
                        false
                    };
                    if !named {
                        let count = values.len();
                        if count == 0 {
                            return Err(err(line, "states must not be empty"));
                        }
                        states = Some((
                            line,
                            StateNames {
                                names: Some(values),
                                count,
                            },
                        ));
                    }
                }
                "initial" | "initials" => {
                    if key == "initial" && kind == "nfa" || key == "initials" && kind == "dfa" {
                        return Err(err(
                            line,
                            format!("{key}: does not match the document kind {kind}"),
                        ));
                    }
                    initials = Some((line, values));
                }
                "finals" => finals = Some((line, values)),
                other => return Err(err(line, format!("unknown field {other:?}"))),
            }
        } else {
            let fields: Vec<&str> = content.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(err(line, "expected a transition: src symbol dst"));
            }
            transitions.push((
                line,
                fields[0].to_string(),
                fields[1].to_string(),
                fields[2].to_string(),
            ));
        }
    }

    let (_, symbol_names) = alphabet.ok_or_else(|| err(kind_line, "missing alphabet:"))?;
    let (states_line, state_names) = states.ok_or_else(|| err(kind_line, "missing states:"))?;
    if state_names.count == 0 {
        return Err(err(states_line, "need at least one state"));
    }
    let (initials_line, initial_tokens) =
        initials.ok_or_else(|| err(kind_line, "missing initial state"))?;
    let (finals_line, final_tokens) = finals.ok_or_else(|| err(kind_line, "missing finals:"))?;

    let symbol_index = |token: &str, line: usize| -> Result<usize, DocError> {
        symbol_names
            .iter()
            .position(|n| n == token)
            .ok_or_else(|| err(line, format!("unknown symbol {token:?}")))
    };

    let final_states: BTreeSet<usize> = final_tokens
        .iter()
        .map(|t| state_names.resolve(t, finals_line))
        .collect::<Result<_, _>>()?;
    let initial_states: Vec<usize> = initial_tokens
        .iter()
        .map(|t| state_names.resolve(t, initials_line))
        .collect::<Result<_, _>>()?;

    let k = symbol_names.len();
    let n = state_names.count;

    if kind == "dfa" {
        if initial_states.len() != 1 {
            return Err(err(initials_line, "dfa needs exactly one initial state"));
        }
        let mut partial = PartialDfa::new(k, n, initial_states[0]);
        partial.finals = final_states;
        partial.symbol_names = Some(symbol_names.clone());
        for (line, src, sym, dst) in &transitions {
            let src = state_names.resolve(src, *line)?;
            let sym = symbol_index(sym, *line)?;
            let dst = state_names.resolve(dst, *line)?;
            if partial.delta[src][sym].is_some() {
                return Err(err(*line, "duplicate transition for this state and symbol"));
            }
            partial.delta[src][sym] = Some(dst);
        }
        Ok(AutomatonDoc::Dfa(partial))
    } else {
        let mut delta: Vec<Vec<BTreeSet<usize>>> = vec![vec![BTreeSet::new(); k]; n];
        for (line, src, sym, dst) in &transitions {
            let src = state_names.resolve(src, *line)?;
            let sym = symbol_index(sym, *line)?;
            let dst = state_names.resolve(dst, *line)?;
            delta[src][sym].insert(dst);
        }
        let nfa = Nfa::new(k, initial_states, final_states, delta)
            .map_err(|e| err(kind_line, e.to_string()))?
            .with_symbol_names(symbol_names);
        Ok(AutomatonDoc::Nfa(nfa))
    }
}

fn default_names(k: usize) -> Vec<String> {
    (0..k).map(|a| a.to_string()).collect()
}

fn names_of_dfa(dfa: &Dfa) -> Vec<String> {
    dfa.symbol_names()
        .map(|n| n.to_vec())
        .unwrap_or_else(|| default_names(dfa.alphabet_size()))
}

/// Canonical document for a DFA: fixed field order, all transitions,
/// sorted.
pub fn emit_dfa_doc(dfa: &Dfa) -> String {
    let names = names_of_dfa(dfa);
    let mut out = String::from("dfa\n");
    out.push_str(&format!("alphabet: {}\n", names.join(" ")));
    out.push_str(&format!("states: {}\n", dfa.num_states()));
    out.push_str(&format!("initial: {}\n", dfa.initial()));
    let finals: Vec<String> = dfa.finals().iter().map(|q| q.to_string()).collect();
    out.push_str(&format!("finals: {}\n", finals.join(" ")));
    for (src, row) in dfa.delta().iter().enumerate() {
        for (a, dst) in row.iter().enumerate() {
            out.push_str(&format!("{src} {} {dst}\n", names[a]));
        }
    }
    out
}

/// Canonical document for an NFA.
pub fn emit_nfa_doc(nfa: &Nfa) -> String {
    let names = nfa
        .symbol_names()
        .map(|n| n.to_vec())
        .unwrap_or_else(|| default_names(nfa.alphabet_size()));
    let mut out = String::from("nfa\n");
    out.push_str(&format!("alphabet: {}\n", names.join(" ")));
    out.push_str(&format!("states: {}\n", nfa.num_states()));
    let initials: Vec<String> = nfa.initials().iter().map(|q| q.to_string()).collect();
    out.push_str(&format!("initials: {}\n", initials.join(" ")));
    let finals: Vec<String> = nfa.finals().iter().map(|q| q.to_string()).collect();
    out.push_str(&format!("finals: {}\n", finals.join(" ")));
    for (src, row) in nfa.delta().iter().enumerate() {
        for (a, dsts) in row.iter().enumerate() {
            for dst in dsts {
                out.push_str(&format!("{src} {} {dst}\n", names[a]));
            }
        }
    }
    out
}

/// Graphviz rendering: initial state marked with an in-arrow, final
/// states double-circled, parallel edges merged into one label.
pub fn emit_dot(dfa: &Dfa) -> String {
    let names = names_of_dfa(dfa);
    let mut out = String::from("digraph {\n  rankdir=LR;\n  node [shape=point]; start;\n");
    if !dfa.finals().is_empty() {
        let finals: Vec<String> = dfa.finals().iter().map(|q| format!("q{q}")).collect();
        out.push_str(&format!(
            "  node [shape=doublecircle]; {};\n",
            finals.join(" ")
        ));
    }
    out.push_str("  node [shape=circle];\n");
    out.push_str(&format!("  start -> q{};\n", dfa.initial()));
    for (src, row) in dfa.delta().iter().enumerate() {
        let mut by_target: std::collections::BTreeMap<usize, Vec<&str>> =
            std::collections::BTreeMap::new();
        for (a, &dst) in row.iter().enumerate() {
            by_target.entry(dst).or_default().push(&names[a]);
        }
        for (dst, labels) in by_target {
            out.push_str(&format!(
                "  q{src} -> q{dst} [label=\"{}\"];\n",
                labels.join(",")
            ));
        }
    }
    out.push_str("}\n");
    out
}

/// Parses a word over the given symbol names: `@` is the empty word,
/// comma-separated names otherwise, or one name per character when every
/// name is a single character.
pub fn parse_word(text: &str, names: &[String], line: usize) -> Result<Word, DocError> {
    let text = text.trim();
    if text == "@" {
        return Ok(Word::empty());
    }
    let lookup = |token: &str| -> Result<u8, DocError> {
        names
            .iter()
            .position(|n| n == token)
            .map(|i| i as u8)
            .ok_or_else(|| err(line, format!("unknown symbol {token:?}")))
    };
    let symbols: Result<Vec<u8>, DocError> = if text.contains(',') {
        text.split(',').map(|t| lookup(t.trim())).collect()
    } else {
        text.chars().map(|c| lookup(&c.to_string())).collect()
    };
    Ok(Word::from_symbols(symbols?))
}

/// Parses a word file: one word per line, comments and blanks ignored.
pub fn parse_word_file(text: &str, names: &[String]) -> Result<Vec<Word>, DocError> {
    content_lines(text)
        .content
        .into_iter()
        .map(|(line, content)| parse_word(content, names, line))
        .collect()
}
