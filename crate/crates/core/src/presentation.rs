//! Finite presentations and the line-oriented `.grp` text format.
//!
//! ```text
//! name: T3            # optional
//! gens: a b
//! rel: [a,b]^3
//! ```
//!
//! Word expressions are sequences of terms separated by whitespace or `*`.
//! A term is an identifier, `1`, a parenthesised expression or a commutator
//! `[u,v]`, optionally followed by `^n` with `n` a (possibly negative) integer.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{format_word, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: duplicate generator `{name}`")]
    DuplicateGenerator { line: usize, name: String },
    #[error("line {line}, column {col}: unknown symbol `{name}`")]
    UnknownSymbol { line: usize, col: usize, name: String },
    #[error("missing `gens:` line")]
    MissingGens,
    #[error("line {line}: `gens:` given more than once")]
    RepeatedGens { line: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("`{0}` is not a valid generator name")]
    BadGeneratorName(String),
    #[error("relator {index} uses generator {generator} outside an alphabet of size {rank}")]
    LetterOutOfRange {
        index: usize,
        generator: usize,
        rank: usize,
    },
}

/// Generators plus relators. Relators are stored freely and cyclically
/// reduced and never empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPresentation")]
pub struct Presentation {
    name: String,
    alphabet: Vec<String>,
    relators: Vec<Word>,
}

#[derive(Deserialize)]
struct RawPresentation {
    #[serde(default)]
    name: String,
    alphabet: Vec<String>,
    relators: Vec<Word>,
}

impl TryFrom<RawPresentation> for Presentation {
    type Error = PresentationError;

    fn try_from(raw: RawPresentation) -> Result<Self, Self::Error> {
        Presentation::new(raw.name, raw.alphabet, raw.relators)
    }
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Presentation {
    /// Builds a presentation, cyclically reducing relators and dropping
    /// those that reduce to the identity.
    pub fn new(
        name: impl Into<String>,
        alphabet: Vec<String>,
        relators: Vec<Word>,
    ) -> Result<Self, PresentationError> {
        let mut seen = std::collections::HashSet::new();
        for g in &alphabet {
            if !is_identifier(g) {
                return Err(PresentationError::BadGeneratorName(g.clone()));
            }
            if !seen.insert(g.as_str()) {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        let rank = alphabet.len();
        let mut rels = Vec::with_capacity(relators.len());
        for (index, r) in relators.into_iter().enumerate() {
            if let Some(l) = r.letters().iter().find(|l| l.generator() >= rank) {
                return Err(PresentationError::LetterOutOfRange {
                    index,
                    generator: l.generator(),
                    rank,
                });
            }
            let (core, _) = r.cyclic_reduce();
            if !core.is_empty() {
                rels.push(core);
            }
        }
        Ok(Presentation {
            name: name.into(),
            alphabet,
            relators: rels,
        })
    }

    /// Free group on the given generator names.
    pub fn free<S: AsRef<str>>(name: &str, gens: &[S]) -> Self {
        Presentation::new(
            name,
            gens.iter().map(|g| g.as_ref().to_string()).collect(),
            Vec::new(),
        )
        .expect("free group generator names must be distinct identifiers")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.alphabet.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.alphabet.iter().position(|g| g == name)
    }

    pub fn format_word(&self, w: &Word) -> String {
        format_word(w, &self.alphabet)
    }

    /// Parses a word expression over this alphabet.
    pub fn parse_word(&self, text: &str) -> Result<Word, ParseError> {
        let index = self.symbol_table();
        parse_word_expr(text, 1, 1, &index)
    }

    fn symbol_table(&self) -> HashMap<&str, usize> {
        self.alphabet
            .iter()
            .enumerate()
            .map(|(i, g)| (g.as_str(), i))
            .collect()
    }

    /// Parses the `.grp` format.
    pub fn parse(text: &str) -> Result<Presentation, ParseError> {
        let mut name = String::new();
        let mut alphabet: Option<Vec<String>> = None;
        let mut pending: Vec<(usize, usize, &str)> = Vec::new();

        for (lineno, raw_line) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let line = match raw_line.find('#') {
                Some(i) => &raw_line[..i],
                None => raw_line,
            };
            let trimmed = line.trim_start();
            if trimmed.trim().is_empty() {
                continue;
            }
            let indent = line.len() - trimmed.len();
            if let Some(rest) = trimmed.strip_prefix("gens:") {
                if alphabet.is_some() {
                    return Err(ParseError::RepeatedGens { line: line_no });
                }
                let mut gens = Vec::new();
                let mut col = indent + "gens:".len() + 1;
                for tok in rest.split(|c: char| c.is_whitespace()) {
                    if !tok.is_empty() {
                        if !is_identifier(tok) {
                            return Err(ParseError::Syntax {
                                line: line_no,
                                col,
                                msg: format!("`{tok}` is not an identifier"),
                            });
                        }
                        if gens.iter().any(|g| g == tok) {
                            return Err(ParseError::DuplicateGenerator {
                                line: line_no,
                                name: tok.to_string(),
                            });
                        }
                        gens.push(tok.to_string());
                    }
                    col += tok.len() + 1;
                }
                alphabet = Some(gens);
            } else if let Some(rest) = trimmed.strip_prefix("rel:") {
                pending.push((line_no, indent + "rel:".len() + 1, rest));
            } else if let Some(rest) = trimmed.strip_prefix("name:") {
                name = rest.trim().to_string();
            } else {
                return Err(ParseError::Syntax {
                    line: line_no,
                    col: indent + 1,
                    msg: "expected `gens:`, `rel:` or `name:`".to_string(),
                });
            }
        }

        let alphabet = alphabet.ok_or(ParseError::MissingGens)?;
        let index: HashMap<&str, usize> = alphabet
            .iter()
            .enumerate()
            .map(|(i, g)| (g.as_str(), i))
            .collect();
        let mut relators = Vec::with_capacity(pending.len());
        for (line, col, body) in pending {
            relators.push(parse_word_expr(body, line, col, &index)?);
        }
        let alphabet_owned = alphabet.clone();
        Ok(Presentation::new(name, alphabet_owned, relators)
            .expect("parser validated generators and symbols"))
    }

    /// Emits the `.grp` form; re-parsing gives back an equal presentation.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        if !self.name.is_empty() {
            let _ = writeln!(out, "name: {}", self.name);
        }
        let _ = writeln!(out, "gens: {}", self.alphabet.join(" "));
        for r in &self.relators {
            let _ = writeln!(out, "rel: {}", self.format_word(r));
        }
        out
    }

    /// Sum of relator lengths.
    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }
}

impl std::fmt::Display for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// Convenience wrapper around [`Presentation::parse`].
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    Presentation::parse(text)
}

/// Convenience wrapper around [`Presentation::serialize`].
pub fn serialize_presentation(p: &Presentation) -> String {
    p.serialize()
}

struct WordParser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
    index: &'a HashMap<&'a str, usize>,
}

fn parse_word_expr(
    text: &str,
    line: usize,
    col0: usize,
    index: &HashMap<&str, usize>,
) -> Result<Word, ParseError> {
    let mut p = WordParser {
        chars: text.chars().collect(),
        pos: 0,
        line,
        col0,
        index,
    };
    let w = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected `{}`", p.chars[p.pos])));
    }
    Ok(w)
}

impl WordParser<'_> {
    fn error(&self, msg: String) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            col: self.col0 + self.pos,
            msg,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Word, ParseError> {
        let mut acc = Word::identity();
        let mut terms = 0;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') if terms > 0 => {
                    self.pos += 1;
                    self.skip_ws();
                    let t = self.term()?;
                    acc = acc.concat(&t);
                }
                Some(c) if c.is_ascii_alphabetic() || c == '_' || c == '(' || c == '[' || c == '1' => {
                    let t = self.term()?;
                    acc = acc.concat(&t);
                    terms += 1;
                }
                _ => break,
            }
        }
        if terms == 0 {
            return Err(self.error("expected a word".to_string()));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Word, ParseError> {
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.expr()?;
                self.skip_ws();
                self.expect(')')?;
                w
            }
            Some('[') => {
                self.pos += 1;
                let u = self.expr()?;
                self.skip_ws();
                self.expect(',')?;
                let v = self.expr()?;
                self.skip_ws();
                self.expect(']')?;
                Word::commutator(&u, &v)
            }
            Some('1') => {
                self.pos += 1;
                Word::identity()
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let id: String = self.chars[start..self.pos].iter().collect();
                match self.index.get(id.as_str()) {
                    Some(&g) => Word::letter(Letter::pos(g)),
                    None => {
                        return Err(ParseError::UnknownSymbol {
                            line: self.line,
                            col: self.col0 + start,
                            name: id,
                        })
                    }
                }
            }
            _ => return Err(self.error("expected a term".to_string())),
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            let n = self.integer()?;
            Ok(base.pow(n))
        } else {
            Ok(base)
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<i64>().map_err(|_| ParseError::Syntax {
            line: self.line,
            col: self.col0 + start,
            msg: format!("expected an integer exponent, found `{s}`"),
        })
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }
}
