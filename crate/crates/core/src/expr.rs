//! Integer expressions used by catalog templates.
//!
//! Grammar, loosest binding first: `||`, `&&`, comparisons, `+ -`,
//! `* / %`, unary `-`, then integers, names and parentheses. Booleans are
//! 0 and 1. Division rounds toward negative infinity.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

pub type Env = BTreeMap<String, i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(i64),
    Var(String),
    Neg(Box<Expr>),
    Bin(Op, Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Rem,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    And,
    Or,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(&'static str),
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    const SYMS: [&str; 17] =
        ["==", "!=", "<=", ">=", "&&", "||", "<", ">", "+", "-", "*", "/", "%", "(", ")", "≤", "≥"];
    let mut out = Vec::new();
    let mut rest = src.trim_start();
    while !rest.is_empty() {
        let c = rest.chars().next().expect("non-empty");
        if c.is_ascii_digit() {
            let end = rest.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(rest.len());
            let v = rest[..end]
                .parse()
                .map_err(|_| Error::Catalog(format!("number too large in `{src}`")))?;
            out.push(Tok::Num(v));
            rest = &rest[end..];
        } else if c.is_alphabetic() || c == '_' {
            let end = rest
                .find(|ch: char| !(ch.is_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            out.push(Tok::Ident(rest[..end].to_string()));
            rest = &rest[end..];
        } else if let Some(s) = SYMS.iter().find(|s| rest.starts_with(**s)) {
            out.push(Tok::Sym(match *s {
                "≤" => "<=",
                "≥" => ">=",
                s => s,
            }));
            rest = &rest[s.len()..];
        } else {
            return Err(Error::Catalog(format!("unexpected `{c}` in expression `{src}`")));
        }
        rest = rest.trim_start();
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek_sym(&self) -> Option<&'static str> {
        match self.toks.get(self.pos) {
            Some(Tok::Sym(s)) => Some(s),
            _ => None,
        }
    }

    fn binary(&mut self, level: usize) -> Result<Expr> {
        const LEVELS: [&[(&str, Op)]; 5] = [
            &[("||", Op::Or)],
            &[("&&", Op::And)],
            &[("==", Op::Eq), ("!=", Op::Ne), ("<=", Op::Le), (">=", Op::Ge), ("<", Op::Lt), (">", Op::Gt)],
            &[("+", Op::Add), ("-", Op::Sub)],
            &[("*", Op::Mul), ("/", Op::Div), ("%", Op::Rem)],
        ];
        if level == LEVELS.len() {
            return self.unary();
        }
        let mut lhs = self.binary(level + 1)?;
        while let Some(op) = self
            .peek_sym()
            .and_then(|s| LEVELS[level].iter().find(|(t, _)| *t == s).map(|(_, o)| *o))
        {
            self.pos += 1;
            let rhs = self.binary(level + 1)?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Sym("-")) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Sym("(")) => {
                self.pos += 1;
                let e = self.binary(0)?;
                if self.peek_sym() != Some(")") {
                    return Err(Error::Catalog("missing `)`".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(Expr::Num(v))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Var(s))
            }
            other => Err(Error::Catalog(format!("unexpected token {other:?}"))),
        }
    }
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let toks = lex(src)?;
        if toks.is_empty() {
            return Err(Error::Catalog("empty expression".into()));
        }
        let mut p = Parser { toks, pos: 0 };
        let e = p.binary(0)?;
        if p.pos != p.toks.len() {
            return Err(Error::Catalog(format!("trailing input in `{src}`")));
        }
        Ok(e)
    }

    pub fn eval(&self, env: &Env) -> Result<i64> {
        Ok(match self {
            Expr::Num(v) => *v,
            Expr::Var(s) => *env
                .get(s)
                .ok_or_else(|| Error::Catalog(format!("unknown name `{s}`")))?,
            Expr::Neg(e) => -e.eval(env)?,
            Expr::Bin(op, a, b) => {
                let x = a.eval(env)?;
                // short-circuit so guards may protect later terms
                match op {
                    Op::And if x == 0 => return Ok(0),
                    Op::Or if x != 0 => return Ok(1),
                    _ => {}
                }
                let y = b.eval(env)?;
                match op {
                    Op::Add => x + y,
                    Op::Sub => x - y,
                    Op::Mul => x * y,
                    Op::Div | Op::Rem if y == 0 => {
                        return Err(Error::Catalog("division by zero".into()))
                    }
                    Op::Div => x.div_euclid(y),
                    Op::Rem => x.rem_euclid(y),
                    Op::Eq => (x == y) as i64,
                    Op::Ne => (x != y) as i64,
                    Op::Lt => (x < y) as i64,
                    Op::Le => (x <= y) as i64,
                    Op::Gt => (x > y) as i64,
                    Op::Ge => (x >= y) as i64,
                    Op::And => (y != 0) as i64,
                    Op::Or => (y != 0) as i64,
                }
            }
        })
    }

    pub fn holds(&self, env: &Env) -> Result<bool> {
        Ok(self.eval(env)? != 0)
    }
}

/// Replaces every `{expr}` in a template with its value.
pub fn substitute(template: &str, env: &Env) -> Result<String> {
    let mut out = String::with_capacity(template.len());
    let mut rest = template;
    while let Some(start) = rest.find('{') {
        out.push_str(&rest[..start]);
        let end = rest[start..]
            .find('}')
            .ok_or_else(|| Error::Catalog(format!("unclosed `{{` in `{template}`")))?;
        let v = Expr::parse(&rest[start + 1..start + end])?.eval(env)?;
        out.push_str(&v.to_string());
        rest = &rest[start + end + 1..];
    }
    out.push_str(rest);
    Ok(out)
}
