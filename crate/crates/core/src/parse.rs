//! Recursive-descent parser for the word syntax and the presentation DSL.
//!
//! ```text
//! pres     := "gens:" namelist ";" "rels:" rellist?
//! namelist := name ("," name)*
//! rellist  := word (";" word)*   |  word ("," word)*
//! word     := term ("*"? term)*
//! term     := name ("^" integer)? | "[" word "," word "]" | "(" word ")" ("^" integer)?
//! name     := letter (letter|digit|"_")* "'"*
//! ```
//!
//! Names may carry trailing primes so that primed copies (`a'`) round-trip.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::word::{Alphabet, Word};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Name(String),
    Int(i64),
    Caret,
    Star,
    Comma,
    Semi,
    Colon,
    LBracket,
    RBracket,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = text.chars().collect();
    // (line, column) of every char, plus one past the end
    let mut at = Vec::with_capacity(chars.len() + 1);
    let (mut line, mut column) = (1, 1);
    for &c in &chars {
        at.push((line, column));
        if c == '\n' {
            line += 1;
            column = 1;
        } else {
            column += 1;
        }
    }
    at.push((line, column));

    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (line, column) = at[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '^' => Some(Tok::Caret),
            '*' => Some(Tok::Star),
            ',' => Some(Tok::Comma),
            ';' => Some(Tok::Semi),
            ':' => Some(Tok::Colon),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, line, column });
            i += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_alphabetic() {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            while i < chars.len() && chars[i] == '\'' {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Spanned { tok: Tok::Name(s), line, column });
        } else if c.is_ascii_digit() || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let v = s.parse::<i64>().map_err(|_| Error::Syntax {
                line,
                column,
                message: format!("integer `{s}` out of range"),
            })?;
            out.push(Spanned { tok: Tok::Int(v), line, column });
        } else {
            return Err(Error::Syntax { line, column, message: format!("unexpected character `{c}`") });
        }
    }
    let (line, column) = at[chars.len()];
    out.push(Spanned { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    alphabet: Option<&'a Arc<Alphabet>>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self) -> (usize, usize) {
        let s = &self.toks[self.pos];
        (s.line, s.column)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        let (line, column) = self.here();
        Err(Error::Syntax { line, column, message: message.into() })
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Tok::Name(n) if n == kw => {
                self.bump();
                self.expect(Tok::Colon, "`:`")
            }
            _ => self.err(format!("expected `{kw}:`")),
        }
    }

    fn starts_term(&self) -> bool {
        matches!(self.peek(), Tok::Name(_) | Tok::LBracket | Tok::LParen)
    }

    fn exponent(&mut self) -> Result<i64> {
        if *self.peek() == Tok::Caret {
            self.bump();
            match *self.peek() {
                Tok::Int(k) => {
                    self.bump();
                    Ok(k)
                }
                _ => self.err("expected integer exponent"),
            }
        } else {
            Ok(1)
        }
    }

    fn word(&mut self) -> Result<Word> {
        let alphabet = self.alphabet.expect("alphabet set before parsing words");
        if !self.starts_term() {
            return self.err("expected a word");
        }
        let mut acc = Word::identity(alphabet);
        loop {
            let t = self.term()?;
            acc = acc.mul_unchecked(&t);
            if *self.peek() == Tok::Star {
                self.bump();
                if !self.starts_term() {
                    return self.err("expected a term after `*`");
                }
            } else if !self.starts_term() {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Word> {
        let alphabet = self.alphabet.expect("alphabet set before parsing words");
        match self.peek().clone() {
            Tok::Name(n) => {
                let g = alphabet.generator(&n).ok_or(Error::UnknownGenerator(n))?;
                self.bump();
                let k = self.exponent()?;
                Ok(Word::generator(alphabet, g).pow(k))
            }
            Tok::LBracket => {
                self.bump();
                let a = self.word()?;
                self.expect(Tok::Comma, "`,` inside commutator")?;
                let b = self.word()?;
                self.expect(Tok::RBracket, "`]`")?;
                let c = a.commutator(&b)?;
                let k = self.exponent()?;
                Ok(c.pow(k))
            }
            Tok::LParen => {
                self.bump();
                let a = self.word()?;
                self.expect(Tok::RParen, "`)`")?;
                let k = self.exponent()?;
                Ok(a.pow(k))
            }
            _ => self.err("expected a generator, `[` or `(`"),
        }
    }

    fn name(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Name(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.err("expected a generator name"),
        }
    }
}

/// Parses a single word over `alphabet`, e.g. `[x1,x2]*x3^-2`.
pub fn parse_word(text: &str, alphabet: &Arc<Alphabet>) -> Result<Word> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, alphabet: Some(alphabet) };
    let w = p.word()?;
    if *p.peek() != Tok::End {
        return p.err("trailing input after word");
    }
    Ok(w)
}

/// Parses the presentation DSL.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, alphabet: None };
    p.keyword("gens")?;
    let mut names = vec![p.name()?];
    while *p.peek() == Tok::Comma {
        p.bump();
        names.push(p.name()?);
    }
    p.expect(Tok::Semi, "`;` after the generator list")?;
    p.keyword("rels")?;
    let alphabet = Alphabet::new(names)?;
    p.alphabet = Some(&alphabet);

    let mut relators = Vec::new();
    if *p.peek() != Tok::End {
        relators.push(p.word()?);
        let sep = p.peek().clone();
        if sep == Tok::Semi || sep == Tok::Comma {
            while *p.peek() == sep {
                p.bump();
                if *p.peek() == Tok::End {
                    break;
                }
                relators.push(p.word()?);
            }
        }
        if *p.peek() != Tok::End {
            return p.err("expected `;`, `,` or end of input between relators");
        }
    }
    if let Some(index) = relators.iter().position(|r| r.is_identity()) {
        return Err(Error::EmptyRelator { index });
    }
    Presentation::new(alphabet, relators)
}
