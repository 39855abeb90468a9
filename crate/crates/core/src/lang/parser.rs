use num_traits::One;

use super::ast::{fold_div, Expr, ExprKind};
use super::lexer::{tokenize, Token, TokenKind};
use crate::error::{Error, Result};
use crate::exact::parse_rational;
use crate::interval::ElemFn;

struct Parser<'a> {
    toks: Vec<Token<'a>>,
    pos: usize,
    end: usize,
}

fn describe(kinds: &[&str]) -> String {
    format!("expected one of: {}", kinds.join(", "))
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token<'a>> {
        self.toks.get(self.pos)
    }

    fn peek_kind(&self) -> Option<TokenKind> {
        self.peek().map(|t| t.kind)
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.end, |t| t.offset)
    }

    fn bump(&mut self) -> Option<Token<'a>> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn syntax(&self, message: impl Into<String>) -> Error {
        Error::Syntax { offset: self.offset(), message: message.into() }
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<Token<'a>> {
        match self.peek() {
            Some(t) if t.kind == kind => Ok(self.bump().unwrap()),
            Some(t) => Err(self.syntax(format!("found {:?}, {}", t.text, describe(&[what])))),
            None => Err(self.syntax(format!("unexpected end of input, {}", describe(&[what])))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(k @ (TokenKind::Plus | TokenKind::Minus)) = self.peek_kind() {
            let off = self.bump().unwrap().offset;
            let rhs = self.term()?;
            let kind = if k == TokenKind::Plus {
                ExprKind::Add(Box::new(lhs), Box::new(rhs))
            } else {
                ExprKind::Sub(Box::new(lhs), Box::new(rhs))
            };
            lhs = Expr::new(kind, off);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(k @ (TokenKind::Star | TokenKind::Slash)) = self.peek_kind() {
            let off = self.bump().unwrap().offset;
            let rhs = self.unary()?;
            lhs = if k == TokenKind::Star {
                Expr::new(ExprKind::Mul(Box::new(lhs), Box::new(rhs)), off)
            } else {
                fold_div(lhs, rhs, off)
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek_kind() == Some(TokenKind::Minus) {
            let off = self.bump().unwrap().offset;
            let inner = self.unary()?;
            return Ok(Expr::new(ExprKind::Neg(Box::new(inner)), off));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        let mut exps = Vec::new();
        while self.peek_kind() == Some(TokenKind::Caret) {
            let off = self.bump().unwrap().offset;
            exps.push((self.int_exponent()?, off));
        }
        let Some(&(_, off)) = exps.first() else {
            return Ok(base);
        };
        // right-associative: a^b^c = a^(b^c)
        let mut n: i64 = exps.last().unwrap().0;
        for &(e, eoff) in exps.iter().rev().skip(1) {
            n = u32::try_from(n)
                .ok()
                .and_then(|p| e.checked_pow(p))
                .ok_or(Error::Syntax { offset: eoff, message: "exponent out of range".into() })?;
        }
        Ok(Expr::new(ExprKind::Pow(Box::new(base), n), off))
    }

    fn int_exponent(&mut self) -> Result<i64> {
        let start = self.offset();
        let parenthesized = self.peek_kind() == Some(TokenKind::LParen);
        if parenthesized {
            self.bump();
        }
        let negative = self.peek_kind() == Some(TokenKind::Minus);
        if negative {
            self.bump();
        }
        let not_int = || Error::Syntax {
            offset: start,
            message: "exponent must be an integer literal".into(),
        };
        let tok = match self.peek() {
            Some(t) if t.kind == TokenKind::Number => self.bump().unwrap(),
            _ => return Err(not_int()),
        };
        let q = parse_rational(tok.text).map_err(|_| not_int())?;
        if !q.denom().is_one() {
            return Err(not_int());
        }
        let mut n: i64 = q.numer().try_into().map_err(|_| not_int())?;
        if negative {
            n = -n;
        }
        if parenthesized && self.peek_kind() != Some(TokenKind::RParen) {
            return Err(not_int());
        }
        if parenthesized {
            self.bump();
        }
        Ok(n)
    }

    fn primary(&mut self) -> Result<Expr> {
        let Some(tok) = self.bump() else {
            return Err(Error::Syntax {
                offset: self.end,
                message: format!("unexpected end of input, {}", describe(&["number", "identifier", "("])),
            });
        };
        match tok.kind {
            TokenKind::Number => {
                let q = parse_rational(tok.text)
                    .map_err(|e| Error::Syntax { offset: tok.offset, message: e.to_string() })?;
                Ok(Expr::new(ExprKind::Lit(q), tok.offset))
            }
            TokenKind::LParen => {
                let inner = self.expr()?;
                self.expect(TokenKind::RParen, ")")?;
                Ok(inner)
            }
            TokenKind::Ident if self.peek_kind() == Some(TokenKind::LParen) => {
                let f: ElemFn = tok.text.parse().map_err(|_| Error::Syntax {
                    offset: tok.offset,
                    message: format!("unknown function {}", tok.text),
                })?;
                self.bump();
                let arg = self.expr()?;
                self.expect(TokenKind::RParen, ")")?;
                Ok(Expr::new(ExprKind::Apply(f, Box::new(arg)), tok.offset))
            }
            TokenKind::Ident => match tok.text {
                "x" => Ok(Expr::new(ExprKind::X, tok.offset)),
                "pi" => Ok(Expr::new(ExprKind::Pi, tok.offset)),
                other => Err(Error::Syntax {
                    offset: tok.offset,
                    message: format!("unknown identifier {other}"),
                }),
            },
            _ => Err(Error::Syntax {
                offset: tok.offset,
                message: format!("found {:?}, {}", tok.text, describe(&["number", "identifier", "("])),
            }),
        }
    }
}

/// Parses one expression over `x`, `pi`, rational literals, `+ - * / ^` and
/// the six elementary functions.
pub fn parse_expression(text: &str) -> Result<Expr> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len() };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(Error::Syntax {
            offset: t.offset,
            message: format!("unexpected {:?} after expression, {}", t.text, describe(&["+", "-", "*", "/", "^", "end of input"])),
        });
    }
    Ok(e)
}
