//! Line-oriented text formats for automata and graphs.
//!
//! Automaton:
//!
//! ```text
//! # a⁺
//! nfa 2
//! alphabet a
//! initial 0
//! final 1
//! trans 0 a 1
//! trans 1 a 1
//! ```
//!
//! Graph:
//!
//! ```text
//! graph 3
//! edge 0 1
//! edge 1 2
//! ```
//!
//! Lines whose first non-blank character is `#` are comments; blank lines are
//! ignored. The header must come first. `alphabet`, `initial` and `final` may
//! each appear at most once (missing means empty) and `alphabet` must precede
//! any `trans` line. Serialization is canonical: transitions are sorted by
//! source, symbol position and target, edges lexicographically with `u < v`.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::automata::{AutomatonError, Nfa, Symbol};
use crate::bitset::StateSet;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `{0}` header")]
    MissingHeader(&'static str),
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("duplicate `{0}` line")]
    DuplicateDirective(&'static str),
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("index {index} out of range (count {count})")]
    OutOfRange { index: usize, count: usize },
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),
    #[error("duplicate symbol {0}")]
    DuplicateSymbol(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn parse_index(line: usize, token: &str, count: usize) -> Result<usize, ParseError> {
    let index: usize = token.parse().map_err(|_| {
        err(
            line,
            ParseErrorKind::Malformed(format!("expected an index, found `{token}`")),
        )
    })?;
    if index >= count {
        return Err(err(line, ParseErrorKind::OutOfRange { index, count }));
    }
    Ok(index)
}

fn parse_header(line: usize, tokens: &[&str], keyword: &'static str) -> Result<usize, ParseError> {
    match tokens {
        [k, count] if *k == keyword => count.parse().map_err(|_| {
            err(
                line,
                ParseErrorKind::Malformed(format!("expected a count, found `{count}`")),
            )
        }),
        [k, ..] if *k == keyword => Err(err(
            line,
            ParseErrorKind::Malformed(format!("`{keyword}` takes exactly one count")),
        )),
        _ => Err(err(line, ParseErrorKind::MissingHeader(keyword))),
    }
}

pub fn parse_automaton(text: &str) -> Result<Nfa, ParseError> {
    let mut lines = content_lines(text);
    let (first, header) = lines
        .next()
        .ok_or_else(|| err(0, ParseErrorKind::MissingHeader("nfa")))?;
    let n = parse_header(first, &header, "nfa")?;

    let mut alphabet: Option<Vec<Symbol>> = None;
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut initial: Option<StateSet> = None;
    let mut final_states: Option<StateSet> = None;
    let mut transitions = Vec::new();

    for (line, tokens) in lines {
        let (directive, args) = tokens.split_first().expect("content lines are nonempty");
        match *directive {
            "nfa" => return Err(err(line, ParseErrorKind::DuplicateHeader)),
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateDirective("alphabet")));
                }
                let mut symbols = Vec::with_capacity(args.len());
                for &label in args {
                    if index.insert(label.to_owned(), symbols.len()).is_some() {
                        return Err(err(line, ParseErrorKind::DuplicateSymbol(label.to_owned())));
                    }
                    symbols.push(
                        Symbol::new(label).expect("whitespace-split tokens are valid labels"),
                    );
                }
                alphabet = Some(symbols);
            }
            "initial" | "final" => {
                let (slot, name) = if *directive == "initial" {
                    (&mut initial, "initial")
                } else {
                    (&mut final_states, "final")
                };
                if slot.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateDirective(name)));
                }
                let mut set = StateSet::new();
                for token in args {
                    set.insert(parse_index(line, token, n)?);
                }
                *slot = Some(set);
            }
            "trans" => {
                let [src, sym, dst] = args else {
                    return Err(err(
                        line,
                        ParseErrorKind::Malformed("`trans` takes <src> <symbol> <dst>".into()),
                    ));
                };
                let src = parse_index(line, src, n)?;
                let a = *index
                    .get(*sym)
                    .ok_or_else(|| err(line, ParseErrorKind::UnknownSymbol((*sym).to_owned())))?;
                let dst = parse_index(line, dst, n)?;
                transitions.push((src, a, dst));
            }
            other => {
                return Err(err(
                    line,
                    ParseErrorKind::UnknownDirective(other.to_owned()),
                ))
            }
        }
    }

    Nfa::new(
        n,
        alphabet.unwrap_or_default(),
        transitions,
        initial.unwrap_or_default(),
        final_states.unwrap_or_default(),
    )
    .map_err(|e| match e {
        // Everything is validated above; keep a sensible mapping regardless.
        AutomatonError::UnknownSymbol(s) => err(0, ParseErrorKind::UnknownSymbol(s)),
        other => err(0, ParseErrorKind::Malformed(other.to_string())),
    })
}

pub fn serialize_automaton(nfa: &Nfa) -> String {
    let mut out = String::new();
    let list = |set: &StateSet| set.iter().map(|q| format!(" {q}")).collect::<String>();
    writeln!(out, "nfa {}", nfa.state_count()).unwrap();
    out.push_str("alphabet");
    for sym in nfa.alphabet() {
        write!(out, " {sym}").unwrap();
    }
    out.push('\n');
    writeln!(out, "initial{}", list(nfa.initial())).unwrap();
    writeln!(out, "final{}", list(nfa.final_states())).unwrap();
    for (p, a, q) in nfa.transitions() {
        writeln!(out, "trans {p} {} {q}", nfa.alphabet()[a]).unwrap();
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (first, header) = lines
        .next()
        .ok_or_else(|| err(0, ParseErrorKind::MissingHeader("graph")))?;
    let n = parse_header(first, &header, "graph")?;
    let mut g = Graph::empty(n);
    for (line, tokens) in lines {
        match tokens.as_slice() {
            ["graph", ..] => return Err(err(line, ParseErrorKind::DuplicateHeader)),
            ["edge", u, v] => {
                let u = parse_index(line, u, n)?;
                let v = parse_index(line, v, n)?;
                g.add_edge(u, v).map_err(|e| match e {
                    GraphError::SelfLoop(v) => err(line, ParseErrorKind::SelfLoop(v)),
                    other => err(line, ParseErrorKind::Malformed(other.to_string())),
                })?;
            }
            ["edge", ..] => {
                return Err(err(
                    line,
                    ParseErrorKind::Malformed("`edge` takes <u> <v>".into()),
                ))
            }
            [other, ..] => {
                return Err(err(
                    line,
                    ParseErrorKind::UnknownDirective((*other).to_owned()),
                ))
            }
            [] => unreachable!("content lines are nonempty"),
        }
    }
    Ok(g)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        writeln!(out, "edge {u} {v}").unwrap();
    }
    out
}
