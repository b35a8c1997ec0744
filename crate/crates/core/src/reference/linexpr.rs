//! Integer linear forms in free parameters `a_1, a_2, ...`, parsed from
//! strings such as `-a_1-a_4`, `4a_1+3a_2`, `-(a_1+a_2)` or `0`.

use std::collections::BTreeMap;
use std::iter::Peekable;
use std::str::Chars;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse {input:?}: {reason}")]
pub struct ExprError {
    pub input: String,
    pub reason: String,
}

/// `Σ coeff_i · a_i`; parameters are 1-based and zero coefficients are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinExpr {
    terms: BTreeMap<usize, i64>,
}

impl LinExpr {
    pub fn param(i: usize) -> Self {
        LinExpr {
            terms: BTreeMap::from([(i, 1)]),
        }
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.terms.get(&i).copied().unwrap_or(0)
    }

    pub fn max_param(&self) -> usize {
        self.terms.keys().next_back().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, k: i64) -> LinExpr {
        let mut out = LinExpr::default();
        out.add_scaled(self, k);
        out
    }

    fn add_scaled(&mut self, other: &LinExpr, k: i64) {
        for (&i, &c) in &other.terms {
            let e = self.terms.entry(i).or_default();
            *e += k * c;
            if *e == 0 {
                self.terms.remove(&i);
            }
        }
    }

    pub fn parse(input: &str) -> Result<LinExpr, ExprError> {
        let mut p = Parser {
            input,
            chars: input.chars().peekable(),
        };
        let e = p.expr()?;
        p.skip_ws();
        match p.chars.next() {
            None => Ok(e),
            Some(c) => Err(p.err(format!("unexpected {c:?}"))),
        }
    }
}

struct Parser<'a> {
    input: &'a str,
    chars: Peekable<Chars<'a>>,
}

impl Parser<'_> {
    fn err(&self, reason: impl Into<String>) -> ExprError {
        ExprError {
            input: self.input.to_string(),
            reason: reason.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn number(&mut self) -> Option<i64> {
        let mut s = String::new();
        while let Some(&c) = self.chars.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            s.push(c);
            self.chars.next();
        }
        s.parse().ok()
    }

    fn expr(&mut self) -> Result<LinExpr, ExprError> {
        let mut out = LinExpr::default();
        let mut first = true;
        loop {
            self.skip_ws();
            let sign = match self.chars.peek() {
                Some('+') => {
                    self.chars.next();
                    1
                }
                Some('-') => {
                    self.chars.next();
                    -1
                }
                _ if first => 1,
                _ => return Ok(out),
            };
            first = false;
            let (k, t) = self.term()?;
            out.add_scaled(&t, sign * k);
        }
    }

    /// `[number] atom` or a bare number (which must be 0, as forms are linear).
    fn term(&mut self) -> Result<(i64, LinExpr), ExprError> {
        self.skip_ws();
        let k = self.number();
        self.skip_ws();
        match self.chars.peek() {
            Some('a') => {
                self.chars.next();
                if self.chars.next() != Some('_') {
                    return Err(self.err("expected '_' after 'a'"));
                }
                let braced = self.chars.peek() == Some(&'{');
                if braced {
                    self.chars.next();
                }
                let i = self.number().ok_or_else(|| self.err("missing parameter index"))?;
                if braced && self.chars.next() != Some('}') {
                    return Err(self.err("unclosed '{'"));
                }
                if i == 0 {
                    return Err(self.err("parameters are numbered from 1"));
                }
                Ok((k.unwrap_or(1), LinExpr::param(i as usize)))
            }
            Some('(') => {
                self.chars.next();
                let e = self.expr()?;
                self.skip_ws();
                if self.chars.next() != Some(')') {
                    return Err(self.err("unclosed '('"));
                }
                Ok((k.unwrap_or(1), e))
            }
            _ => match k {
                Some(0) => Ok((1, LinExpr::default())),
                Some(c) => Err(self.err(format!("constant term {c}"))),
                None => Err(self.err("expected a term")),
            },
        }
    }
}
