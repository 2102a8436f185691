//! Regular expressions over single-character symbols.
//!
//! Surface grammar:
//!
//! ```text
//! expr := alt
//! alt  := cat ("|" cat)*
//! cat  := rep+
//! rep  := atom ("*" | "+" | "?")?
//! atom := literal | "~" | "(" expr ")"
//! ```
//!
//! `~` is λ. The empty set has no surface token; it only appears in trees
//! built programmatically.

use std::fmt;

use super::alphabet::Alphabet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regex {
    Empty,
    Epsilon,
    Literal(u8),
    Concat(Vec<Regex>),
    Union(Vec<Regex>),
    Star(Box<Regex>),
    Plus(Box<Regex>),
    Optional(Box<Regex>),
}

impl Regex {
    /// Parses `text`, requiring every literal to belong to `alphabet`.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Regex> {
        let re = Self::parse_unchecked(text)?;
        let mut bad = None;
        re.visit_literals(&mut |b| {
            if bad.is_none() && !alphabet.contains(b) {
                bad = Some(b);
            }
        });
        match bad {
            Some(b) => Err(Error::UnknownSymbol {
                symbol: b as char,
                alphabet: alphabet.to_string(),
            }),
            None => Ok(re),
        }
    }

    /// Parses `text` without an alphabet check.
    pub fn parse_unchecked(text: &str) -> Result<Regex> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        let re = p.alt()?;
        if p.pos < p.src.len() {
            let msg = if p.src[p.pos] == b')' {
                "unbalanced parenthesis"
            } else {
                "unexpected character"
            };
            return Err(Error::syntax(p.pos, msg));
        }
        Ok(re)
    }

    fn visit_literals(&self, f: &mut impl FnMut(u8)) {
        match self {
            Regex::Empty | Regex::Epsilon => {}
            Regex::Literal(b) => f(*b),
            Regex::Concat(xs) | Regex::Union(xs) => xs.iter().for_each(|x| x.visit_literals(f)),
            Regex::Star(x) | Regex::Plus(x) | Regex::Optional(x) => x.visit_literals(f),
        }
    }

    /// Distinct literal symbols in the tree.
    pub fn literals(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.visit_literals(&mut |b| {
            if !out.contains(&b) {
                out.push(b);
            }
        });
        out
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn alt(&mut self) -> Result<Regex> {
        let mut branches = vec![self.cat()?];
        while self.peek() == Some(b'|') {
            self.pos += 1;
            branches.push(self.cat()?);
        }
        Ok(if branches.len() == 1 {
            branches.pop().unwrap()
        } else {
            Regex::Union(branches)
        })
    }

    fn cat(&mut self) -> Result<Regex> {
        let mut items = Vec::new();
        while let Some(c) = self.peek() {
            if c == b'|' || c == b')' {
                break;
            }
            items.push(self.rep()?);
        }
        match items.len() {
            0 => Err(Error::syntax(self.pos, "expected an expression")),
            1 => Ok(items.pop().unwrap()),
            _ => Ok(Regex::Concat(items)),
        }
    }

    fn rep(&mut self) -> Result<Regex> {
        let atom = self.atom()?;
        Ok(match self.peek() {
            Some(b'*') => {
                self.pos += 1;
                Regex::Star(Box::new(atom))
            }
            Some(b'+') => {
                self.pos += 1;
                Regex::Plus(Box::new(atom))
            }
            Some(b'?') => {
                self.pos += 1;
                Regex::Optional(Box::new(atom))
            }
            _ => atom,
        })
    }

    fn atom(&mut self) -> Result<Regex> {
        let start = self.pos;
        match self.peek() {
            Some(b'~') => {
                self.pos += 1;
                Ok(Regex::Epsilon)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.alt()?;
                if self.peek() != Some(b')') {
                    return Err(Error::syntax(start, "unbalanced parenthesis"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphanumeric() => {
                self.pos += 1;
                Ok(Regex::Literal(c))
            }
            Some(_) => Err(Error::syntax(self.pos, "unexpected character")),
            None => Err(Error::syntax(self.pos, "unexpected end of input")),
        }
    }
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn wrap(r: &Regex, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match r {
                Regex::Literal(_) | Regex::Epsilon | Regex::Empty => write!(f, "{r}"),
                _ => write!(f, "({r})"),
            }
        }
        match self {
            // no surface token; `()` keeps the printout unambiguous
            Regex::Empty => f.write_str("()"),
            Regex::Epsilon => f.write_str("~"),
            Regex::Literal(b) => write!(f, "{}", *b as char),
            Regex::Concat(xs) => {
                for x in xs {
                    match x {
                        Regex::Union(_) | Regex::Concat(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
            Regex::Union(xs) => {
                let parts: Vec<String> = xs
                    .iter()
                    .map(|x| match x {
                        Regex::Union(_) => format!("({x})"),
                        _ => x.to_string(),
                    })
                    .collect();
                f.write_str(&parts.join("|"))
            }
            Regex::Star(x) => {
                wrap(x, f)?;
                f.write_str("*")
            }
            Regex::Plus(x) => {
                wrap(x, f)?;
                f.write_str("+")
            }
            Regex::Optional(x) => {
                wrap(x, f)?;
                f.write_str("?")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::from_letters("ab").unwrap()
    }

    fn lit(c: char) -> Regex {
        Regex::Literal(c as u8)
    }

    #[test]
    fn parses_nested_concat_with_star() {
        let re = Regex::parse("a(bb)(bb)*a", &ab()).unwrap();
        let bb = Regex::Concat(vec![lit('b'), lit('b')]);
        assert_eq!(
            re,
            Regex::Concat(vec![lit('a'), bb.clone(), Regex::Star(Box::new(bb)), lit('a')])
        );
    }

    #[test]
    fn tilde_is_epsilon() {
        let a = Alphabet::from_letters("a").unwrap();
        assert_eq!(Regex::parse("~", &a).unwrap(), Regex::Epsilon);
    }

    #[test]
    fn unbalanced_parenthesis_reports_position() {
        match Regex::parse("a(b", &ab()) {
            Err(Error::Syntax { position, message }) => {
                assert_eq!(position, 1);
                assert!(message.contains("unbalanced"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Regex::parse("ab)", &ab()),
            Err(Error::Syntax { position: 2, .. })
        ));
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "|a", "a|", "()", "*a", "a**", "a b"] {
            assert!(Regex::parse(bad, &ab()).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn literal_outside_alphabet() {
        assert!(matches!(
            Regex::parse("abc", &ab()),
            Err(Error::UnknownSymbol { symbol: 'c', .. })
        ));
    }

    #[test]
    fn display_reparses_to_same_tree() {
        for src in ["a(bb)(bb)*a", "(a|b)*b", "~|a|ab", "(ab)+c?", "a*|b*"] {
            let re = Regex::parse_unchecked(src).unwrap();
            let again = Regex::parse_unchecked(&re.to_string()).unwrap();
            assert_eq!(re, again, "{src}");
        }
    }
}
