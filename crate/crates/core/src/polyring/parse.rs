//! Text grammar for polynomials and ideal files.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := int ['/' int] | name ['^' int]
//! ```
//! Whitespace is ignored and `#` starts a comment running to end of line.
//! An ideal file starts with `vars: x, y, z` followed by one polynomial
//! per line.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::Rational;
use super::monomial::Monomial;
use super::poly::{MultiPoly, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            d if d.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            a if a.is_alphabetic() || a == '_' => {
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                    i += 1;
                }
                out.push((start, Tok::Name(chars[start..i].iter().collect())));
                continue;
            }
            other => {
                return Err(Error::Syntax { pos: start, msg: format!("unexpected character `{other}`") });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect_int(&mut self, what: &str) -> Result<BigInt> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(n),
            _ => Err(Error::Syntax { pos: at, msg: format!("expected {what}") }),
        }
    }

    fn poly(&mut self) -> Result<MultiPoly> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                -1
            }
            Some(Tok::Plus) => {
                self.bump();
                1
            }
            _ => 1,
        };
        loop {
            let (m, mut c) = self.term()?;
            if sign < 0 {
                c = -c;
            }
            terms.push((m, c));
            let at = self.here();
            match self.bump() {
                None => break,
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                Some(_) => {
                    return Err(Error::Syntax { pos: at, msg: "expected `+`, `-` or end of input".into() })
                }
            }
        }
        Ok(MultiPoly::from_terms(self.ring, terms))
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut exps = vec![0u32; self.ring.nvars()];
        let mut coeff = Rational::one();
        loop {
            let at = self.here();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let mut value = Rational::from_integer(n);
                    if self.peek() == Some(&Tok::Slash) {
                        self.bump();
                        let at_den = self.here();
                        let den = self.expect_int("denominator")?;
                        if den.is_zero() {
                            return Err(Error::Syntax { pos: at_den, msg: "zero denominator".into() });
                        }
                        value /= Rational::from_integer(den);
                    }
                    coeff *= value;
                }
                Some(Tok::Name(name)) => {
                    let idx = self.ring.var_index(&name).ok_or(Error::UnknownVariable(name))?;
                    let mut e = 1u32;
                    if self.peek() == Some(&Tok::Caret) {
                        self.bump();
                        let at_exp = self.here();
                        let k = self.expect_int("exponent")?;
                        e = u32::try_from(&k)
                            .ok()
                            .filter(|&k| k >= 1)
                            .ok_or(Error::Syntax { pos: at_exp, msg: "exponent must be a positive integer".into() })?;
                    }
                    exps[idx] += e;
                }
                _ => return Err(Error::Syntax { pos: at, msg: "expected a coefficient or a variable".into() }),
            }
            if self.peek() == Some(&Tok::Star) {
                self.bump();
            } else {
                break;
            }
        }
        Ok((Monomial::new(exps), coeff))
    }
}

impl MultiPoly<Rational> {
    /// Parses a polynomial over the rationals in `ring`.
    pub fn parse(ring: &Arc<Ring>, text: &str) -> Result<MultiPoly> {
        let toks = tokenize(text)?;
        if toks.is_empty() {
            return Err(Error::Syntax { pos: 0, msg: "empty polynomial".into() });
        }
        let mut p = Parser { toks, pos: 0, end: text.chars().count(), ring };
        p.poly()
    }
}

/// Parses a `vars: a, b, c` header; returns the variable names.
pub fn parse_vars_header(line: &str) -> Result<Vec<String>> {
    let body = strip_comment(line).trim();
    let rest = body
        .strip_prefix("vars:")
        .ok_or(Error::Syntax { pos: 0, msg: "expected `vars:` header".into() })?;
    let names: Vec<String> = rest
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    for (i, n) in names.iter().enumerate() {
        let ok = n.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
            && n.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'');
        if !ok {
            return Err(Error::Syntax { pos: 0, msg: format!("bad variable name `{n}`") });
        }
        if names[..i].contains(n) {
            return Err(Error::Syntax { pos: 0, msg: format!("duplicate variable `{n}`") });
        }
    }
    Ok(names)
}

/// Contents of an ideal file.
#[derive(Debug, Clone)]
pub struct IdealFile {
    pub ring: Arc<Ring>,
    pub polys: Vec<MultiPoly>,
}

/// Parses an ideal file. Errors carry the byte offset within the file.
pub fn parse_ideal_file(text: &str) -> Result<IdealFile> {
    let mut ring: Option<Arc<Ring>> = None;
    let mut polys = Vec::new();
    let mut offset = 0usize;
    for line in text.split_inclusive('\n') {
        let body = strip_comment(line);
        if !body.trim().is_empty() {
            match &ring {
                None => {
                    let vars = parse_vars_header(body).map_err(|e| shift(e, offset))?;
                    ring = Some(Ring::new(&vars));
                }
                Some(r) => {
                    let p = MultiPoly::parse(r, body).map_err(|e| shift(e, offset))?;
                    polys.push(p);
                }
            }
        }
        offset += line.chars().count();
    }
    let ring = ring.ok_or(Error::Syntax { pos: 0, msg: "missing `vars:` header".into() })?;
    Ok(IdealFile { ring, polys })
}

pub(crate) fn shift(e: Error, offset: usize) -> Error {
    match e {
        Error::Syntax { pos, msg } => Error::Syntax { pos: pos + offset, msg },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn ring() -> Arc<Ring> {
        Ring::new(&["x", "y", "z"])
    }

    #[test]
    fn parses_rational_terms() {
        let r = ring();
        let p = MultiPoly::parse(&r, "3/2*x^2*y - z + 1").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.to_string(), "3/2*x^2*y - z + 1");
        let x2y = Monomial::new(vec![2, 1, 0]);
        assert_eq!(p.coeff(&x2y), Rational::new(3.into(), 2.into()));
    }

    #[test]
    fn cancellation_gives_zero() {
        let p = MultiPoly::parse(&ring(), "x - x").unwrap();
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn syntax_errors() {
        let r = ring();
        assert!(matches!(MultiPoly::parse(&r, "("), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(MultiPoly::parse(&r, "x +"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(MultiPoly::parse(&r, "x^0"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(MultiPoly::parse(&r, "1/0"), Err(Error::Syntax { .. })));
        assert!(matches!(MultiPoly::parse(&r, "w"), Err(Error::UnknownVariable(v)) if v == "w"));
        assert!(matches!(MultiPoly::parse(&r, ""), Err(Error::Syntax { .. })));
    }

    #[test]
    fn comments_and_whitespace() {
        let r = ring();
        let p = MultiPoly::parse(&r, "  x ^ 2*y   # trailing comment").unwrap();
        assert_eq!(p.to_string(), "x^2*y");
        let q = MultiPoly::parse(&r, "-x*2").unwrap();
        assert_eq!(q.to_string(), "-2*x");
        assert!(MultiPoly::parse(&r, "0").unwrap().coeff(&Monomial::one(3)).is_zero());
    }

    #[test]
    fn ideal_file() {
        let text = "# twisted cubic\nvars: a, b, c, d\nb^2 - a*c\nb*c - a*d\n\nc^2 - b*d # last\n";
        let f = parse_ideal_file(text).unwrap();
        assert_eq!(f.ring.vars(), &["a", "b", "c", "d"]);
        assert_eq!(f.polys.len(), 3);
        let bad = parse_ideal_file("vars: x\nx +* 1\n").unwrap_err();
        assert!(matches!(bad, Error::Syntax { pos: 11, .. }), "{bad:?}");
        assert!(parse_ideal_file("x + 1\n").is_err());
        assert!(parse_ideal_file("vars: x, x\n").is_err());
    }
}
