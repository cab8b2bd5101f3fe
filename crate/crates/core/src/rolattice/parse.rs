//! Degree expressions: `d + s*sigma + c0*l0 + ...`, with `lam(s,m)` allowed.

use super::{reduce, Irreducible, RawRep, VirtualRep};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    Comma,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn lex(src: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut idx = 0;
    while idx < chars.len() {
        let ch = chars[idx];
        let (l0, c0) = (line, column);
        if ch == '\n' {
            line += 1;
            column = 1;
            idx += 1;
            continue;
        }
        if ch.is_whitespace() {
            column += 1;
            idx += 1;
            continue;
        }
        let single = match ch {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, line: l0, column: c0 });
            column += 1;
            idx += 1;
            continue;
        }
        if ch.is_ascii_digit() || ch.is_ascii_alphabetic() || ch == '_' {
            let start = idx;
            let numeric = ch.is_ascii_digit();
            while idx < chars.len()
                && (chars[idx].is_ascii_alphanumeric() || chars[idx] == '_')
                && (!numeric || chars[idx].is_ascii_digit())
            {
                idx += 1;
            }
            let word: String = chars[start..idx].iter().collect();
            column += idx - start;
            let tok = if numeric {
                Tok::Int(word.parse().map_err(|_| err(l0, c0, format!("integer `{word}` out of range")))?)
            } else {
                Tok::Ident(word)
            };
            out.push(Spanned { tok, line: l0, column: c0 });
            continue;
        }
        return Err(err(l0, c0, format!("unexpected character `{ch}`")));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    end: (usize, usize),
    n: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map(|t| (t.line, t.column)).unwrap_or(self.end)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        match self.peek() {
            Some(t) if t.tok == want => {
                self.pos += 1;
                Ok(())
            }
            _ => {
                let (l, c) = self.here();
                Err(err(l, c, format!("expected {what}")))
            }
        }
    }

    fn int(&mut self) -> Result<i64> {
        match self.peek() {
            Some(Spanned { tok: Tok::Int(v), .. }) => {
                let v = *v;
                self.pos += 1;
                Ok(v)
            }
            _ => {
                let (l, c) = self.here();
                Err(err(l, c, "expected an integer"))
            }
        }
    }

    fn atom(&mut self) -> Result<Irreducible> {
        let (line, column) = self.here();
        let Some(Spanned { tok: Tok::Ident(name), .. }) = self.peek().cloned() else {
            return Err(err(line, column, "expected `sigma`, `l<k>` or `lam(s,m)`"));
        };
        self.pos += 1;
        let irr = if name == "sigma" {
            Irreducible::Sigma
        } else if name == "lam" {
            self.expect(Tok::LParen, "`(`")?;
            let s = self.int()?;
            self.expect(Tok::Comma, "`,`")?;
            let m = self.int()?;
            self.expect(Tok::RParen, "`)`")?;
            if s <= 0 || m <= 0 {
                return Err(err(line, column, "lam(s,m) needs positive s and m"));
            }
            Irreducible::Lambda { s: s as u64, m: m as u64 }
        } else if let Some(k) = name.strip_prefix('l').and_then(|k| k.parse::<u32>().ok()) {
            if k as usize + 2 > self.n {
                let avail = if self.n >= 2 { format!("l0..l{}", self.n - 2) } else { "none".into() };
                return Err(err(line, column, format!("`{name}` is not defined for n = {} (available: {avail})", self.n)));
            }
            Irreducible::Lambda { s: 1, m: 1u64 << k }
        } else {
            return Err(err(line, column, format!("unknown symbol `{name}`")));
        };
        irr.validate(self.n).map_err(|e| err(line, column, e.to_string()))?;
        Ok(irr)
    }

    fn term(&mut self, sign: i64, raw: &mut RawRep) -> Result<()> {
        match self.peek().map(|t| &t.tok) {
            Some(Tok::Int(_)) => {
                let k = self.int()?;
                if matches!(self.peek().map(|t| &t.tok), Some(Tok::Star)) {
                    self.pos += 1;
                    let irr = self.atom()?;
                    raw.terms.push((irr, sign * k));
                } else {
                    raw.terms.push((Irreducible::Triv, sign * k));
                }
                Ok(())
            }
            Some(Tok::Ident(_)) => {
                let irr = self.atom()?;
                raw.terms.push((irr, sign));
                Ok(())
            }
            _ => {
                let (l, c) = self.here();
                Err(err(l, c, "expected a term"))
            }
        }
    }

    fn expr(&mut self) -> Result<RawRep> {
        let mut raw = RawRep::new(self.n);
        let mut sign = 1;
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::Minus)) {
            sign = -1;
            self.pos += 1;
        } else if matches!(self.peek().map(|t| &t.tok), Some(Tok::Plus)) {
            self.pos += 1;
        }
        self.term(sign, &mut raw)?;
        while let Some(t) = self.peek() {
            sign = match t.tok {
                Tok::Plus => 1,
                Tok::Minus => -1,
                _ => return Err(err(t.line, t.column, "expected `+` or `-`")),
            };
            self.pos += 1;
            self.term(sign, &mut raw)?;
        }
        Ok(raw)
    }
}

/// Parses a raw degree expression for `C_{2^n}` without reducing it.
pub fn parse_raw(n: usize, src: &str) -> Result<RawRep> {
    let toks = lex(src)?;
    let end = src.lines().enumerate().last().map(|(i, l)| (i + 1, l.chars().count() + 1)).unwrap_or((1, 1));
    let mut p = Parser { toks: &toks, pos: 0, end, n };
    p.expr()
}

/// Parses and reduces a degree expression, e.g. `2 - 1*l0` or `lam(3,1) - sigma`.
pub fn parse_degree(n: usize, src: &str) -> Result<VirtualRep> {
    reduce(&parse_raw(n, src)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        let v = parse_degree(3, "2 - 1*l0").unwrap();
        assert_eq!(v, VirtualRep::from_coords(3, &[2, 0, -1, 0]).unwrap());
        let v = parse_degree(2, " 1-1*sigma ").unwrap();
        assert_eq!(v, VirtualRep::from_coords(2, &[1, -1, 0]).unwrap());
        let v = parse_degree(3, "lam(3,1) + 2*lam(1,4) - l1").unwrap();
        assert_eq!(v, VirtualRep::from_coords(3, &[0, 4, 1, -1]).unwrap());
        assert_eq!(parse_degree(2, "-sigma").unwrap(), -VirtualRep::sigma(2));
        assert_eq!(parse_degree(2, "0").unwrap(), VirtualRep::zero(2));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_degree(2, "1 + foo") {
            Err(Error::Parse { line: 1, column: 5, message }) => assert!(message.contains("foo")),
            other => panic!("unexpected {other:?}"),
        }
        match parse_degree(2, "1 +\n  2*") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_degree(3, "lam(2,1)"), Err(Error::Parse { column: 1, .. })));
        assert!(matches!(parse_degree(2, "1 $"), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(parse_degree(2, "1 2"), Err(Error::Parse { column: 3, .. })));
    }
}
