use std::fmt;

use thiserror::Error;

use super::{BoxFormula, Formula, RIFormula};

/// Reserved words of the concrete syntax. They are reserved in both
/// languages, so none of them can be used as a variable name.
const KEYWORDS: &[&str] = &["true", "false", "box", "dia", "o", "bullet", "star"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: found {found}, expected one of: {}", .expected.join(", "))]
pub struct SyntaxError {
    pub offset: usize,
    pub found: String,
    pub expected: Vec<String>,
}

/// Parses a formula of the box language.
pub fn parse_box(text: &str) -> Result<BoxFormula, SyntaxError> {
    Parser::<BoxLang>::new(text)?.parse()
}

/// Parses a formula of the circle language (with `star`).
pub fn parse_ri(text: &str) -> Result<RIFormula, SyntaxError> {
    Parser::<RiLang>::new(text)?.parse()
}

trait Language {
    type F: Formula;
    const PREFIX: &'static [&'static str];
    fn prefix(op: &str, arg: Self::F) -> Self::F;
}

struct BoxLang;

impl Language for BoxLang {
    type F = BoxFormula;
    const PREFIX: &'static [&'static str] = &["box", "dia"];

    fn prefix(op: &str, arg: BoxFormula) -> BoxFormula {
        match op {
            "box" => arg.boxed(),
            "dia" => arg.dia(),
            _ => unreachable!("not a box-language operator: {op}"),
        }
    }
}

struct RiLang;

impl Language for RiLang {
    type F = RIFormula;
    const PREFIX: &'static [&'static str] = &["o", "bullet", "star"];

    fn prefix(op: &str, arg: RIFormula) -> RIFormula {
        match op {
            "o" => arg.circ(),
            "bullet" => arg.bullet(),
            "star" => arg.star(),
            _ => unreachable!("not a circle-language operator: {op}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Keyword(&'static str),
    Tilde,
    Amp,
    Bar,
    Arrow,
    DoubleArrow,
    LParen,
    RParen,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Keyword(k) => write!(f, "`{k}`"),
            Tok::Tilde => f.write_str("`~`"),
            Tok::Amp => f.write_str("`&`"),
            Tok::Bar => f.write_str("`|`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::DoubleArrow => f.write_str("`<->`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'~' => Tok::Tilde,
            b'&' => Tok::Amp,
            b'|' => Tok::Bar,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'<' if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') => {
                i += 2;
                Tok::DoubleArrow
            }
            b'a'..=b'z' => {
                while i + 1 < bytes.len() && matches!(bytes[i + 1], b'a'..=b'z' | b'0'..=b'9' | b'_') {
                    i += 1;
                }
                let word = &text[start..=i];
                match KEYWORDS.iter().find(|k| **k == word) {
                    Some(k) => Tok::Keyword(k),
                    None => Tok::Ident(word.to_string()),
                }
            }
            _ => {
                let found = text[start..].chars().next().unwrap_or('?');
                return Err(SyntaxError {
                    offset: start,
                    found: format!("character `{found}`"),
                    expected: vec!["a formula token".to_string()],
                });
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((text.len(), Tok::Eof));
    Ok(out)
}

struct Parser<L: Language> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    _lang: std::marker::PhantomData<L>,
}

impl<L: Language> Parser<L> {
    fn new(text: &str) -> Result<Self, SyntaxError> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            _lang: std::marker::PhantomData,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> SyntaxError {
        let (offset, tok) = &self.toks[self.pos];
        SyntaxError {
            offset: *offset,
            found: tok.to_string(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn operand_expected() -> Vec<&'static str> {
        let mut v = vec!["identifier", "`true`", "`false`", "`~`", "`(`"];
        v.extend(L::PREFIX.iter().map(|op| match *op {
            "box" => "`box`",
            "dia" => "`dia`",
            "o" => "`o`",
            "bullet" => "`bullet`",
            "star" => "`star`",
            other => other,
        }));
        v
    }

    fn parse(mut self) -> Result<L::F, SyntaxError> {
        let f = self.iff()?;
        if *self.peek() != Tok::Eof {
            return Err(self.error(&["`&`", "`|`", "`->`", "`<->`", "end of input"]));
        }
        Ok(f)
    }

    // Both arrows associate to the right.
    fn iff(&mut self) -> Result<L::F, SyntaxError> {
        let lhs = self.imp()?;
        if *self.peek() == Tok::DoubleArrow {
            self.bump();
            let rhs = self.iff()?;
            return Ok(lhs.iff(rhs));
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<L::F, SyntaxError> {
        let lhs = self.or()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.imp()?;
            return Ok(lhs.implies(rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<L::F, SyntaxError> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Bar {
            self.bump();
            let rhs = self.and()?;
            lhs = lhs.or(rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<L::F, SyntaxError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            let rhs = self.unary()?;
            lhs = lhs.and(rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<L::F, SyntaxError> {
        match self.peek().clone() {
            Tok::Tilde => {
                self.bump();
                Ok(self.unary()?.not())
            }
            Tok::Keyword(k) if L::PREFIX.contains(&k) => {
                self.bump();
                let arg = self.unary()?;
                Ok(L::prefix(k, arg))
            }
            Tok::Keyword("true") => {
                self.bump();
                Ok(L::F::top())
            }
            Tok::Keyword("false") => {
                self.bump();
                Ok(L::F::bot())
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(L::F::var(name))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.iff()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&["`)`", "`&`", "`|`", "`->`", "`<->`"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(&Self::operand_expected())),
        }
    }
}
