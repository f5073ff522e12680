//! Text form of algebra elements.
//!
//! ```text
//! element := term (('+' | '-') term)*        (a leading sign is allowed; "0" is zero)
//! term    := [coeff '*'] path
//! coeff   := integer | integer '/' integer
//! path    := atom+
//! atom    := vertexId | edgeId '[' index ']' ['*']
//! ```
//!
//! A trailing `*` binds to the atom before it, so `e[1]* f[1]` is `e_1* f_1`.
//! Identifiers start with a letter or `_` and may contain letters, digits,
//! `_`, `#`, `.` and `'`.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use thiserror::Error;

use super::{Algebra, AlgebraElement, AlgebraError, Generator, Path, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("at column {}: {message}", .position + 1)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }

    /// The message with the input echoed and a caret under the offending spot.
    pub fn render(&self, input: &str) -> String {
        let col = input[..self.position.min(input.len())].chars().count();
        format!("{self}\n  {input}\n  {}^", " ".repeat(col))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Token {
    Int(BigInt),
    Ident(String),
    LBracket,
    RBracket,
    Star,
    Plus,
    Minus,
    Slash,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(n) => write!(f, "integer {n}"),
            Token::Ident(s) => write!(f, "identifier `{s}`"),
            Token::LBracket => f.write_str("`[`"),
            Token::RBracket => f.write_str("`]`"),
            Token::Star => f.write_str("`*`"),
            Token::Plus => f.write_str("`+`"),
            Token::Minus => f.write_str("`-`"),
            Token::Slash => f.write_str("`/`"),
        }
    }
}

fn ident_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '#' | '.' | '\'')
}

pub(crate) fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let single = match c {
            '[' => Some(Token::LBracket),
            ']' => Some(Token::RBracket),
            '*' => Some(Token::Star),
            '+' => Some(Token::Plus),
            '-' => Some(Token::Minus),
            '/' => Some(Token::Slash),
            _ => None,
        };
        if let Some(t) = single {
            chars.next();
            out.push((pos, t));
        } else if c.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(p, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = p + d.len_utf8();
                chars.next();
            }
            if matches!(chars.peek(), Some(&(_, d)) if ident_char(d)) {
                return Err(ParseError::new(
                    pos,
                    "identifiers may not start with a digit",
                ));
            }
            let n: BigInt = input[pos..end].parse().expect("digits");
            out.push((pos, Token::Int(n)));
        } else if ident_char(c) {
            let mut end = pos;
            while let Some(&(p, d)) = chars.peek() {
                if !ident_char(d) {
                    break;
                }
                end = p + d.len_utf8();
                chars.next();
            }
            out.push((pos, Token::Ident(input[pos..end].to_string())));
        } else {
            return Err(ParseError::new(pos, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

pub(crate) struct Cursor<'a> {
    tokens: Vec<(usize, Token)>,
    at: usize,
    input: &'a str,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(input: &'a str) -> Result<Self, ParseError> {
        Ok(Cursor {
            tokens: tokenize(input)?,
            at: 0,
            input,
        })
    }

    pub(crate) fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    pub(crate) fn position(&self) -> usize {
        self.tokens
            .get(self.at)
            .map_or(self.input.len(), |(p, _)| *p)
    }

    pub(crate) fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    pub(crate) fn at_end(&self) -> bool {
        self.at >= self.tokens.len()
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.position(), message)
    }

    pub(crate) fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {t}")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    pub(crate) fn expect(&mut self, t: Token, wanted: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&t) {
            self.next();
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }

    pub(crate) fn is_lone_zero(&self) -> bool {
        self.tokens.len() == 1
            && matches!(&self.tokens[0].1, Token::Int(n) if n == &BigInt::from(0))
    }
}

impl Algebra {
    /// Parses an element and reduces it to normal form.
    pub fn parse(&self, input: &str) -> Result<AlgebraElement, AlgebraError> {
        let raw = self.parse_raw(input)?;
        self.reduce(&raw)
    }

    /// Parses without reducing: one coefficient and generator word per term.
    pub fn parse_raw(&self, input: &str) -> Result<Vec<(Scalar, Vec<Generator>)>, ParseError> {
        let mut cur = Cursor::new(input)?;
        if cur.is_lone_zero() {
            return Ok(Vec::new());
        }
        let mut terms = Vec::new();
        let mut negate = match cur.peek() {
            Some(Token::Minus) => {
                cur.next();
                true
            }
            Some(Token::Plus) => {
                cur.next();
                false
            }
            _ => false,
        };
        loop {
            let (mut c, word) = self.parse_term(&mut cur)?;
            if negate {
                c = self.field.neg(&c);
            }
            terms.push((c, word));
            match cur.next() {
                None => break,
                Some(Token::Plus) => negate = false,
                Some(Token::Minus) => negate = true,
                Some(_) => {
                    cur.at -= 1;
                    return Err(cur.unexpected("`+`, `-` or end of input"));
                }
            }
        }
        Ok(terms)
    }

    /// Parses a single generator word such as `e[1]*f[1]`.
    pub fn parse_word(&self, input: &str) -> Result<Vec<Generator>, ParseError> {
        let mut cur = Cursor::new(input)?;
        let word = self.parse_path(&mut cur)?;
        if !cur.at_end() {
            return Err(cur.unexpected("end of input"));
        }
        Ok(word)
    }

    fn parse_term(&self, cur: &mut Cursor<'_>) -> Result<(Scalar, Vec<Generator>), ParseError> {
        let coeff = if let Some(Token::Int(_)) = cur.peek() {
            let start = cur.position();
            let Some(Token::Int(num)) = cur.next() else {
                unreachable!()
            };
            let den = if cur.peek() == Some(&Token::Slash) {
                cur.next();
                match cur.next() {
                    Some(Token::Int(d)) => d,
                    _ => {
                        cur.at -= 1;
                        return Err(cur.unexpected("denominator"));
                    }
                }
            } else {
                BigInt::from(1)
            };
            let c = self
                .field
                .ratio(&num, &den)
                .map_err(|e| ParseError::new(start, e.to_string()))?;
            cur.expect(Token::Star, "`*` after coefficient")?;
            c
        } else {
            self.field.one()
        };
        Ok((coeff, self.parse_path(cur)?))
    }

    fn parse_path(&self, cur: &mut Cursor<'_>) -> Result<Vec<Generator>, ParseError> {
        let mut word = Vec::new();
        while let Some(Token::Ident(_)) = cur.peek() {
            let start = cur.position();
            let Some(Token::Ident(id)) = cur.next() else {
                unreachable!()
            };
            if cur.peek() == Some(&Token::LBracket) {
                cur.next();
                let index_pos = cur.position();
                let index = match cur.next() {
                    Some(Token::Int(i)) => u32::try_from(i)
                        .map_err(|_| ParseError::new(index_pos, "index too large"))?,
                    _ => {
                        cur.at -= 1;
                        return Err(cur.unexpected("edge index"));
                    }
                };
                cur.expect(Token::RBracket, "`]`")?;
                let star = if cur.peek() == Some(&Token::Star) {
                    cur.next();
                    true
                } else {
                    false
                };
                let letter = self
                    .letter(&id, index, star)
                    .map_err(|e| ParseError::new(start, e.to_string()))?;
                word.push(Generator::Letter(letter));
            } else {
                let v = self
                    .graph
                    .vertex(&id)
                    .ok_or_else(|| ParseError::new(start, format!("unknown vertex `{id}`")))?;
                word.push(Generator::Vertex(v as u32));
            }
        }
        if word.is_empty() {
            return Err(cur.unexpected("a vertex or edge generator"));
        }
        Ok(word)
    }

    pub fn format_path(&self, p: &Path) -> String {
        match p {
            Path::Vertex(v) => self.graph.vertex_id(*v as usize).to_string(),
            Path::Word(w) => {
                let mut s = String::new();
                for l in w {
                    let _ = write!(s, "{}[{}]", self.graph.edge(l.edge as usize).id, l.index);
                    if l.star {
                        s.push('*');
                    }
                }
                s
            }
        }
    }

    /// Canonical text of `x`, in the same grammar [`parse`](Self::parse) reads.
    pub fn format(&self, x: &AlgebraElement) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (p, c)) in self.sorted_terms(x).into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let magnitude = c.abs();
            if !magnitude.is_one() {
                let _ = write!(out, "{magnitude}*");
            }
            out.push_str(&self.format_path(p));
        }
        out
    }
}
