//! Lattice terms and inequalities.
//!
//! Concrete syntax: variables `x1`, `x2`, ..., join `\/`, meet `/\`, and
//! parentheses. Meet binds tighter than join; both associate to the left.
//! Terms are printed with every compound subterm parenthesized, so printing
//! and re-parsing always reproduces the same tree.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

/// Variable index, always `>= 1`.
pub type Var = u32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(Var),
    Join(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
}

impl Term {
    /// # Panics
    /// Panics if `index` is zero.
    pub fn var(index: Var) -> Term {
        assert!(index >= 1, "variable indices start at 1");
        Term::Var(index)
    }

    pub fn join(left: Term, right: Term) -> Term {
        Term::Join(Box::new(left), Box::new(right))
    }

    pub fn meet(left: Term, right: Term) -> Term {
        Term::Meet(Box::new(left), Box::new(right))
    }

    /// Right-associated join of a non-empty list: `t1 \/ (t2 \/ (...))`.
    pub fn join_all(mut terms: Vec<Term>) -> Term {
        let mut acc = terms.pop().expect("join of an empty list");
        while let Some(t) = terms.pop() {
            acc = Term::join(t, acc);
        }
        acc
    }

    /// Right-associated meet of a non-empty list.
    pub fn meet_all(mut terms: Vec<Term>) -> Term {
        let mut acc = terms.pop().expect("meet of an empty list");
        while let Some(t) = terms.pop() {
            acc = Term::meet(t, acc);
        }
        acc
    }

    /// Swaps join and meet at every node.
    pub fn dual(&self) -> Term {
        match self {
            Term::Var(i) => Term::Var(*i),
            Term::Join(l, r) => Term::meet(l.dual(), r.dual()),
            Term::Meet(l, r) => Term::join(l.dual(), r.dual()),
        }
    }

    /// Variable indices of the leaves, left to right.
    pub fn leaves(&self) -> Vec<Var> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Var>) {
        match self {
            Term::Var(i) => out.push(*i),
            Term::Join(l, r) | Term::Meet(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Join(l, r) | Term::Meet(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.leaves().into_iter().collect()
    }

    /// Occurrence count per variable.
    pub fn counts(&self) -> BTreeMap<Var, usize> {
        let mut counts = BTreeMap::new();
        for v in self.leaves() {
            *counts.entry(v).or_insert(0) += 1;
        }
        counts
    }

    pub fn is_repetition_free(&self) -> bool {
        self.counts().values().all(|&c| c == 1)
    }

    /// Replaces leaves left to right; `f` receives the variable and its
    /// 1-based occurrence number among leaves carrying that variable.
    pub fn map_leaves(&self, f: &mut impl FnMut(Var, usize) -> Term) -> Term {
        let mut seen = BTreeMap::new();
        self.map_leaves_inner(f, &mut seen)
    }

    fn map_leaves_inner(
        &self,
        f: &mut impl FnMut(Var, usize) -> Term,
        seen: &mut BTreeMap<Var, usize>,
    ) -> Term {
        match self {
            Term::Var(i) => {
                let k = seen.entry(*i).or_insert(0);
                *k += 1;
                f(*i, *k)
            }
            Term::Join(l, r) => {
                let l = l.map_leaves_inner(f, seen);
                Term::join(l, r.map_leaves_inner(f, seen))
            }
            Term::Meet(l, r) => {
                let l = l.map_leaves_inner(f, seen);
                Term::meet(l, r.map_leaves_inner(f, seen))
            }
        }
    }

    /// Renames variables through `rename`; variables absent from the map
    /// are kept.
    pub fn rename(&self, rename: &BTreeMap<Var, Var>) -> Term {
        self.map_leaves(&mut |v, _| Term::Var(*rename.get(&v).unwrap_or(&v)))
    }

    /// Evaluates the term over an arbitrary lattice given by its operations.
    pub fn eval<T: Copy>(
        &self,
        assign: &impl Fn(Var) -> T,
        join: &impl Fn(T, T) -> T,
        meet: &impl Fn(T, T) -> T,
    ) -> T {
        match self {
            Term::Var(i) => assign(*i),
            Term::Join(l, r) => join(l.eval(assign, join, meet), r.eval(assign, join, meet)),
            Term::Meet(l, r) => meet(l.eval(assign, join, meet), r.eval(assign, join, meet)),
        }
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(_) => write!(f, "{self}"),
            _ => write!(f, "({self})"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "x{i}"),
            Term::Join(l, r) => {
                l.fmt_operand(f)?;
                f.write_str(" \\/ ")?;
                r.fmt_operand(f)
            }
            Term::Meet(l, r) => {
                l.fmt_operand(f)?;
                f.write_str(" /\\ ")?;
                r.fmt_operand(f)
            }
        }
    }
}

impl Serialize for Term {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Term {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_term(&text).map_err(serde::de::Error::custom)
    }
}

/// The universally quantified inequality `lhs <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Identity { lhs, rhs }
    }

    /// The dual of `p <= q` is `dual(q) <= dual(p)`.
    pub fn dual(&self) -> Identity {
        Identity::new(self.rhs.dual(), self.lhs.dual())
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        let mut vars = self.lhs.variables();
        vars.extend(self.rhs.variables());
        vars
    }

    pub fn occurrences(&self) -> OccurrenceProfile {
        let mut counts: BTreeMap<Var, (usize, usize)> = BTreeMap::new();
        for v in self.lhs.leaves() {
            counts.entry(v).or_default().0 += 1;
        }
        for v in self.rhs.leaves() {
            counts.entry(v).or_default().1 += 1;
        }
        OccurrenceProfile { counts }
    }

    /// Every variable occurs exactly once on each side.
    pub fn is_one_balanced(&self) -> bool {
        self.occurrences().counts.values().all(|&c| c == (1, 1))
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <= {}", self.lhs, self.rhs)
    }
}

/// Per-variable occurrence counts `(in lhs, in rhs)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OccurrenceProfile {
    pub counts: BTreeMap<Var, (usize, usize)>,
}

impl OccurrenceProfile {
    pub fn get(&self, v: Var) -> (usize, usize) {
        self.counts.get(&v).copied().unwrap_or((0, 0))
    }

    pub fn swapped(&self) -> OccurrenceProfile {
        OccurrenceProfile {
            counts: self.counts.iter().map(|(&v, &(u, w))| (v, (w, u))).collect(),
        }
    }
}

pub fn occurrences(id: &Identity) -> OccurrenceProfile {
    id.occurrences()
}

pub fn is_one_balanced(id: &Identity) -> bool {
    id.is_one_balanced()
}

pub fn is_repetition_free(t: &Term) -> bool {
    t.is_repetition_free()
}

pub fn dual_term(t: &Term) -> Term {
    t.dual()
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Var(Var),
    Join,
    Meet,
    LParen,
    RParen,
    Leq,
    Eq,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Var(i) => write!(f, "'x{i}'"),
            Tok::Join => f.write_str("'\\/'"),
            Tok::Meet => f.write_str("'/\\'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Leq => f.write_str("'<='"),
            Tok::Eq => f.write_str("'='"),
        }
    }
}

/// Character positions are 0-based offsets into the input.
fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => toks.push((start, Tok::LParen)),
            ')' => toks.push((start, Tok::RParen)),
            '=' => toks.push((start, Tok::Eq)),
            '\\' | '/' | '<' => {
                let want = match c {
                    '\\' => '/',
                    '/' => '\\',
                    _ => '=',
                };
                if chars.get(i + 1) != Some(&want) {
                    return Err(ParseError::new(start, format!("unexpected character '{c}'")));
                }
                i += 1;
                toks.push((
                    start,
                    match c {
                        '\\' => Tok::Join,
                        '/' => Tok::Meet,
                        _ => Tok::Leq,
                    },
                ));
            }
            'x' => {
                let mut j = i + 1;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                if j == i + 1 {
                    return Err(ParseError::new(start, "variable 'x' must be followed by digits"));
                }
                if j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_') {
                    return Err(ParseError::new(start, "malformed variable token"));
                }
                let digits: String = chars[i + 1..j].iter().collect();
                let index: Var = digits
                    .parse()
                    .map_err(|_| ParseError::new(start, "variable index out of range"))?;
                if index == 0 {
                    return Err(ParseError::new(start, "variable indices start at 1"));
                }
                toks.push((start, Tok::Var(index)));
                i = j;
                continue;
            }
            _ => return Err(ParseError::new(start, format!("unexpected character '{c}'"))),
        }
        i += 1;
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: tokenize(text)?,
            pos: 0,
            end: text.chars().count(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        match self.toks.get(self.pos) {
            Some((p, t)) => ParseError::new(*p, format!("expected {expected}, found {t}")),
            None => ParseError::new(self.end, format!("expected {expected} at end of input")),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.meet_chain()?;
        while self.peek() == Some(&Tok::Join) {
            self.pos += 1;
            acc = Term::join(acc, self.meet_chain()?);
        }
        Ok(acc)
    }

    fn meet_chain(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.atom()?;
        while self.peek() == Some(&Tok::Meet) {
            self.pos += 1;
            acc = Term::meet(acc, self.atom()?);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.peek() {
            Some(Tok::Var(i)) => {
                let t = Term::Var(*i);
                self.pos += 1;
                Ok(t)
            }
            Some(Tok::LParen) => {
                let open = self.offset();
                self.pos += 1;
                let t = self.term()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(match self.peek() {
                        None => ParseError::new(open, "unmatched '('"),
                        Some(_) => self.unexpected("')'"),
                    });
                }
                self.pos += 1;
                Ok(t)
            }
            _ => Err(self.unexpected("variable or '('")),
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.toks.get(self.pos) {
            None => Ok(()),
            Some((p, Tok::RParen)) => Err(ParseError::new(*p, "unmatched ')'")),
            Some(_) => Err(self.unexpected("end of input")),
        }
    }
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut parser = Parser::new(text)?;
    let t = parser.term()?;
    parser.expect_end()?;
    Ok(t)
}

/// `p <= q` yields one inequality, `p = q` yields `p <= q` and `q <= p`.
pub fn parse_identity(text: &str) -> Result<Vec<Identity>, ParseError> {
    let mut parser = Parser::new(text)?;
    let lhs = parser.term()?;
    let relation = match parser.peek() {
        Some(Tok::Leq) => Tok::Leq,
        Some(Tok::Eq) => Tok::Eq,
        Some(_) => return Err(parser.unexpected("'<=' or '='")),
        None => return Err(ParseError::new(parser.end, "missing relation '<=' or '='")),
    };
    parser.pos += 1;
    let rhs = parser.term()?;
    parser.expect_end()?;
    Ok(match relation {
        Tok::Leq => vec![Identity::new(lhs, rhs)],
        _ => vec![
            Identity::new(lhs.clone(), rhs.clone()),
            Identity::new(rhs, lhs),
        ],
    })
}
