//! Parser for the element text syntax produced by `Element::to_text`.
//!
//! An element is a sum of terms `coeff * [p] [q]`, where `coeff` is an
//! optional rational such as `-3/2` and each path is a list of edge ids or
//! `@v` for the vertex `v`. A bare vertex id stands for `[@v] [@v]`, a bare
//! coefficient for a multiple of the identity.

use std::sync::Arc;

use lpa_core::{Algebra, AlgebraError, Element, GraphError, Path, Scalar, ScalarError};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ElementSyntaxError {
    #[error("column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Num(String),
    Ident(String),
    Punct(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ElementSyntaxError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        let column = i + 1;
        if c.is_whitespace() {
            chars.next();
        } else if "[]*+-/@".contains(c) {
            chars.next();
            tokens.push((column, Token::Punct(c)));
        } else if c.is_ascii_alphanumeric() || c == '_' {
            let mut word = String::new();
            while let Some(&(_, c)) = chars.peek().filter(|(_, c)| c.is_ascii_alphanumeric() || *c == '_') {
                word.push(c);
                chars.next();
            }
            let token = if word.bytes().all(|b| b.is_ascii_digit()) {
                Token::Num(word)
            } else if lpa_core::graph::is_valid_id(&word) {
                Token::Ident(word)
            } else {
                return Err(syntax(column, &format!("invalid token `{word}`")));
            };
            tokens.push((column, token));
        } else {
            return Err(syntax(column, &format!("unexpected character `{c}`")));
        }
    }
    Ok(tokens)
}

fn syntax(column: usize, message: &str) -> ElementSyntaxError {
    ElementSyntaxError::Syntax { column, message: message.to_string() }
}

struct Parser<'a> {
    alg: &'a Arc<Algebra>,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Punct(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ElementSyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(syntax(self.column(), &format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Option<String> {
        match self.peek() {
            Some(Token::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Some(s)
            }
            _ => None,
        }
    }

    fn number(&mut self) -> Option<BigInt> {
        match self.peek() {
            Some(Token::Num(s)) => {
                let n = s.parse().expect("digits");
                self.pos += 1;
                Some(n)
            }
            _ => None,
        }
    }

    fn path(&mut self) -> Result<Path, ElementSyntaxError> {
        let g = self.alg.graph();
        self.expect('[')?;
        let path = if self.eat('@') {
            let column = self.column();
            let name = self.ident().ok_or_else(|| syntax(column, "expected a vertex id"))?;
            Path::vertex(g.vertex_id(&name)?)
        } else {
            let mut edges = Vec::new();
            while let Some(name) = self.ident() {
                edges.push(g.edge_id(&name)?);
            }
            if edges.is_empty() {
                return Err(syntax(self.column(), "expected edge ids or `@vertex`"));
            }
            Path::from_edges(g, &edges)?
        };
        self.expect(']')?;
        Ok(path)
    }

    /// `(p, q, coeff)`, where `None` paths mean the identity.
    fn term(&mut self, sign: bool) -> Result<(Option<(Path, Path)>, Scalar), ElementSyntaxError> {
        let field = self.alg.field();
        let mut coeff = field.one();
        let mut explicit = false;
        if let Some(num) = self.number() {
            let den = if self.eat('/') {
                let column = self.column();
                self.number().ok_or_else(|| syntax(column, "expected a denominator"))?
            } else {
                BigInt::from(1)
            };
            coeff = field.from_ratio(&num, &den)?;
            explicit = true;
            if !self.eat('*') {
                return Ok((None, if sign { -coeff } else { coeff }));
            }
        }
        let column = self.column();
        let paths = match self.peek() {
            Some(Token::Punct('[')) => {
                let p = self.path()?;
                let q = self.path()?;
                (p, q)
            }
            Some(Token::Ident(_)) => {
                let v = self.alg.graph().vertex_id(&self.ident().expect("ident"))?;
                (Path::vertex(v), Path::vertex(v))
            }
            _ => {
                let what = if explicit { "expected a monomial after `*`" } else { "expected a term" };
                return Err(syntax(column, what));
            }
        };
        Ok((Some(paths), if sign { -coeff } else { coeff }))
    }
}

/// Parses `text` as an element of `alg`, in normal form.
pub fn parse_element(alg: &Arc<Algebra>, text: &str) -> Result<Element, ElementSyntaxError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { alg, tokens, pos: 0, end: text.len() + 1 };
    let mut raw = Vec::new();
    let mut scalar_part = alg.field().zero();
    let mut first = true;
    while parser.peek().is_some() || first {
        let column = parser.column();
        let mut negative = false;
        let mut signs = 0;
        loop {
            if parser.eat('-') {
                negative = !negative;
            } else if !parser.eat('+') {
                break;
            }
            signs += 1;
        }
        if !first && signs == 0 {
            return Err(syntax(column, "expected `+` or `-` between terms"));
        }
        first = false;
        match parser.term(negative)? {
            (Some((p, q)), c) => raw.push((p, q, c)),
            (None, c) => scalar_part += &c,
        }
    }
    let element = alg.normal_form(raw)?;
    Ok(&element + &alg.one().scale(&scalar_part))
}
