//! A small language for trace forms over a single field.
//!
//! ```text
//! expr  := term ('+' term)*
//! term  := [uint ['*']] 'Tr' '(' mono ('+' mono)* ')' | uint
//! mono  := [coef ['*']] 'x' ['^' uint]
//! coef  := '-' coef | '(' poly ')' | [uint ['*']] 'g' ['^' uint] | poly
//! poly  := pterm (('+' | '-') pterm)*
//! pterm := uint ['*'] 'w' ['^' uint] | 'w' ['^' uint] | uint
//! ```
//!
//! `g` is the context's primitive element and `w` the root of its modulus.
//! Whitespace is ignored and integer literals are read mod p, so
//! `Tr(g^7 x^98)` and `Tr(g^10 x^22 + x^4)` are both valid.

use std::sync::Arc;

use super::PFunction;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Tr,
    X,
    W,
    G,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let mut v: u64 = 0;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(chars[i].1 as u64 - '0' as u64))
                        .ok_or_else(|| Error::Parse {
                            pos,
                            msg: "integer literal too large".into(),
                        })?;
                    i += 1;
                }
                out.push((pos, Tok::Int(v)));
                continue;
            }
            'T' if chars.get(i + 1).map(|c| c.1) == Some('r') => {
                i += 1;
                Tok::Tr
            }
            'x' => Tok::X,
            'w' => Tok::W,
            'g' => Tok::G,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        };
        out.push((pos, tok));
        i += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Coef {
    One,
    Neg(Box<Coef>),
    /// c * g^e
    Gen(u64, u64),
    /// sum c_i w^{e_i}
    Poly(Vec<(i64, u64)>),
}

#[derive(Clone, Debug)]
enum Term {
    Trace { scale: u64, monos: Vec<(Coef, u64)> },
    Const(u64),
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn uint(&mut self) -> Result<u64> {
        match self.peek() {
            Some(&Tok::Int(v)) => {
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn opt_exponent(&mut self) -> Result<u64> {
        if self.eat(&Tok::Caret) {
            self.uint()
        } else {
            Ok(1)
        }
    }

    fn expr(&mut self) -> Result<Vec<Term>> {
        let mut terms = vec![self.term()?];
        while self.eat(&Tok::Plus) {
            terms.push(self.term()?);
        }
        if self.pos != self.toks.len() {
            return self.err("unexpected trailing input");
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<Term> {
        let scale = match self.peek() {
            Some(&Tok::Int(v)) => {
                self.pos += 1;
                let starred = self.eat(&Tok::Star);
                if self.peek() != Some(&Tok::Tr) {
                    if starred {
                        return self.err("expected Tr after '*'");
                    }
                    return Ok(Term::Const(v));
                }
                v
            }
            _ => 1,
        };
        self.expect(Tok::Tr, "Tr")?;
        self.expect(Tok::LParen, "'('")?;
        let mut monos = vec![self.mono()?];
        while self.eat(&Tok::Plus) {
            monos.push(self.mono()?);
        }
        self.expect(Tok::RParen, "')'")?;
        Ok(Term::Trace { scale, monos })
    }

    fn mono(&mut self) -> Result<(Coef, u64)> {
        let coef = if self.peek() == Some(&Tok::X) {
            Coef::One
        } else {
            let c = self.coef()?;
            self.eat(&Tok::Star);
            c
        };
        self.expect(Tok::X, "'x'")?;
        Ok((coef, self.opt_exponent()?))
    }

    fn coef(&mut self) -> Result<Coef> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(Coef::Neg(Box::new(self.coef()?)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let p = self.poly()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(p)
            }
            Some(Tok::G) => {
                self.pos += 1;
                Ok(Coef::Gen(1, self.opt_exponent()?))
            }
            Some(Tok::Int(v)) => {
                let v = *v;
                let skip = if self.peek_at(1) == Some(&Tok::Star) {
                    2
                } else {
                    1
                };
                if self.peek_at(skip) == Some(&Tok::G) {
                    self.pos += skip + 1;
                    Ok(Coef::Gen(v, self.opt_exponent()?))
                } else {
                    self.poly()
                }
            }
            Some(Tok::W) => self.poly(),
            _ => self.err("expected a coefficient"),
        }
    }

    fn poly(&mut self) -> Result<Coef> {
        let mut terms = vec![self.pterm(1)?];
        loop {
            let sign = match (self.peek(), self.peek_at(1)) {
                (Some(Tok::Plus), Some(Tok::Int(_) | Tok::W)) => 1,
                (Some(Tok::Minus), Some(Tok::Int(_) | Tok::W)) => -1,
                _ => break,
            };
            self.pos += 1;
            terms.push(self.pterm(sign)?);
        }
        Ok(Coef::Poly(terms))
    }

    fn pterm(&mut self, sign: i64) -> Result<(i64, u64)> {
        let c = match self.peek() {
            Some(&Tok::Int(v)) => {
                self.pos += 1;
                let starred = self.eat(&Tok::Star);
                if self.peek() != Some(&Tok::W) {
                    if starred {
                        return self.err("expected 'w' after '*'");
                    }
                    return Ok((sign * (v % i64::MAX as u64) as i64, 0));
                }
                v
            }
            Some(Tok::W) => 1,
            _ => return self.err("expected a polynomial term in w"),
        };
        self.expect(Tok::W, "'w'")?;
        Ok((sign * (c % i64::MAX as u64) as i64, self.opt_exponent()?))
    }
}

fn eval_coef(ctx: &FieldCtx, c: &Coef) -> Result<FieldElement> {
    let q = ctx.size() as u64;
    Ok(match c {
        Coef::One => ctx.one(),
        Coef::Neg(inner) => ctx.neg(eval_coef(ctx, inner)?),
        Coef::Gen(scale, e) => {
            if *e >= q - 1 {
                return Err(Error::OutOfRange(format!(
                    "g exponent {e} must be below {}",
                    q - 1
                )));
            }
            let p = ctx.p() as u64;
            ctx.mul(
                ctx.from_int((scale % p) as i64),
                ctx.pow(ctx.primitive(), *e),
            )
        }
        Coef::Poly(terms) => {
            let p = ctx.p() as i64;
            terms.iter().fold(ctx.zero(), |acc, &(c, e)| {
                let term = ctx.mul(ctx.from_int(c.rem_euclid(p)), ctx.pow(ctx.w(), e));
                ctx.add(acc, term)
            })
        }
    })
}

/// Parses a single field element using the coefficient grammar, e.g.
/// `w^2 + 1`, `g^10`, `-g^30`, `2`.
pub fn parse_element(ctx: &FieldCtx, src: &str) -> Result<FieldElement> {
    let toks = lex(src)?;
    let mut parser = Parser {
        toks: &toks,
        pos: 0,
        end: src.len(),
    };
    let coef = parser.coef()?;
    if parser.pos != toks.len() {
        return parser.err("unexpected trailing input");
    }
    eval_coef(ctx, &coef)
}

impl PFunction {
    /// Truth table of a trace-form expression over `ctx`.
    pub fn from_expr(ctx: Arc<FieldCtx>, src: &str) -> Result<PFunction> {
        let toks = lex(src)?;
        if toks.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "empty expression".into(),
            });
        }
        let terms = Parser {
            toks: &toks,
            pos: 0,
            end: src.len(),
        }
        .expr()?;

        let p = ctx.p() as u64;
        let q = ctx.size() as u64;
        let mut constant = 0u64;
        let mut traced: Vec<(u64, FieldElement, u64)> = Vec::new();
        for t in &terms {
            match t {
                Term::Const(v) => constant = (constant + v % p) % p,
                Term::Trace { scale, monos } => {
                    for (coef, e) in monos {
                        if *e >= q {
                            return Err(Error::OutOfRange(format!(
                                "x exponent {e} must be below {q}"
                            )));
                        }
                        traced.push((scale % p, eval_coef(&ctx, coef)?, *e));
                    }
                }
            }
        }
        Ok(PFunction::from_field_fn(ctx.clone(), |x| {
            let mut acc = constant;
            for &(s, c, e) in &traced {
                acc += s * ctx.trace(ctx.mul(c, ctx.pow(x, e))) as u64;
            }
            (acc % p) as u32
        }))
    }
}
