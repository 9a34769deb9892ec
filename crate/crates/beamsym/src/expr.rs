//! Closed-form expressions in one variable `x`: parser, printer, evaluators.
//!
//! Grammar (EBNF):
//!
//! ```text
//! expr   := term (("+"|"-") term)*
//! term   := unary (("*"|"/") unary)*
//! unary  := "-" unary | factor
//! factor := base ("^" unary)?
//! base   := NUMBER | "x" | IDENT "(" expr ")" | "(" expr ")"
//! IDENT  ∈ {exp, ln, sqrt, sin, cos}
//! ```
//!
//! `^` is right-associative and binds tighter than `*`/`/`, which bind
//! tighter than `+`/`-`; unary minus binds looser than `^`.  Parse errors
//! carry 1-based character offsets, with end-of-input reported at `len + 1`.

use crate::error::{Error, Result};
use crate::jet::Jet;
use std::fmt;

/// Binary operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

/// Built-in unary functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FunKind {
    Exp,
    Ln,
    Sqrt,
    Sin,
    Cos,
}

impl FunKind {
    fn name(self) -> &'static str {
        match self {
            FunKind::Exp => "exp",
            FunKind::Ln => "ln",
            FunKind::Sqrt => "sqrt",
            FunKind::Sin => "sin",
            FunKind::Cos => "cos",
        }
    }
}

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq)]
pub enum ExprAst {
    /// Non-negative number literal (negative constants appear as [`ExprAst::Neg`]).
    Num(f64),
    /// The variable `x`.
    Var,
    /// Unary negation.
    Neg(Box<ExprAst>),
    /// Binary operation.
    Bin(BinOp, Box<ExprAst>, Box<ExprAst>),
    /// Function application.
    Fun(FunKind, Box<ExprAst>),
}

impl ExprAst {
    /// Number literal; negative values are wrapped as `Neg(Num(|v|))` so that
    /// printing always round-trips structurally.
    pub fn num(v: f64) -> ExprAst {
        if v < 0.0 {
            ExprAst::Neg(Box::new(ExprAst::Num(-v)))
        } else {
            ExprAst::Num(v)
        }
    }

    /// Convenience constructor for binary nodes.
    pub fn bin(op: BinOp, l: ExprAst, r: ExprAst) -> ExprAst {
        ExprAst::Bin(op, Box::new(l), Box::new(r))
    }

    /// Convenience constructor for function application.
    pub fn fun(f: FunKind, a: ExprAst) -> ExprAst {
        ExprAst::Fun(f, Box::new(a))
    }

    fn prec(&self) -> u8 {
        match self {
            ExprAst::Num(_) | ExprAst::Var | ExprAst::Fun(..) => 5,
            ExprAst::Bin(BinOp::Pow, ..) => 4,
            ExprAst::Neg(_) => 3,
            ExprAst::Bin(BinOp::Mul, ..) | ExprAst::Bin(BinOp::Div, ..) => 2,
            ExprAst::Bin(BinOp::Add, ..) | ExprAst::Bin(BinOp::Sub, ..) => 1,
        }
    }
}

impl fmt::Display for ExprAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn wrap(f: &mut fmt::Formatter<'_>, e: &ExprAst, need: bool) -> fmt::Result {
            if need {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        }
        match self {
            ExprAst::Num(v) => write!(f, "{v}"),
            ExprAst::Var => write!(f, "x"),
            ExprAst::Neg(e) => {
                write!(f, "-")?;
                wrap(f, e, e.prec() <= 2)
            }
            ExprAst::Fun(k, a) => write!(f, "{}({})", k.name(), a),
            ExprAst::Bin(op, l, r) => {
                let (sym, p) = match op {
                    BinOp::Add => ("+", 1),
                    BinOp::Sub => ("-", 1),
                    BinOp::Mul => ("*", 2),
                    BinOp::Div => ("/", 2),
                    BinOp::Pow => ("^", 4),
                };
                if *op == BinOp::Pow {
                    // left operand of ^ must be a grammar `base` (atomic)
                    wrap(f, l, l.prec() < 5)?;
                    write!(f, "{sym}")?;
                    // right operand is a grammar `unary`
                    wrap(f, r, r.prec() <= 2)
                } else {
                    wrap(f, l, l.prec() < p)?;
                    write!(f, "{sym}")?;
                    wrap(f, r, r.prec() <= p)
                }
            }
        }
    }
}

// ------------------------------------------------------------------ lexer

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

/// (token, 1-based character offset of its first character)
fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let off = i + 1;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                toks.push((Tok::LParen, off));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, off));
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, off));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, off));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, off));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, off));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, off));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        i = j;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let text = &src[start..i];
                let v: f64 = text.parse().map_err(|_| Error::Parse {
                    offset: off,
                    message: format!("invalid number literal `{text}`"),
                })?;
                toks.push((Tok::Num(v), off));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(src[start..i].to_string()), off));
            }
            _ => {
                return Err(Error::Parse {
                    offset: off,
                    message: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(toks)
}

// ----------------------------------------------------------------- parser

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
    eof_offset: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks
            .get(self.i)
            .map(|&(_, o)| o)
            .unwrap_or(self.eof_offset)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|(t, _)| t.clone());
        if t.is_some() {
            self.i += 1;
        }
        t
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.offset(),
            message: message.into(),
        }
    }

    fn expect_rparen(&mut self) -> Result<()> {
        match self.peek() {
            Some(Tok::RParen) => {
                self.i += 1;
                Ok(())
            }
            Some(_) => Err(self.err("expected `)`")),
            None => Err(self.err("expected `)` before end of input")),
        }
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Plus) => BinOp::Add,
                Some(Tok::Minus) => BinOp::Sub,
                _ => break,
            };
            self.i += 1;
            let rhs = self.term()?;
            lhs = ExprAst::bin(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<ExprAst> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Star) => BinOp::Mul,
                Some(Tok::Slash) => BinOp::Div,
                _ => break,
            };
            self.i += 1;
            let rhs = self.unary()?;
            lhs = ExprAst::bin(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<ExprAst> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.i += 1;
            let inner = self.unary()?;
            return Ok(ExprAst::Neg(Box::new(inner)));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<ExprAst> {
        let base = self.base()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.i += 1;
            let exp = self.unary()?;
            return Ok(ExprAst::bin(BinOp::Pow, base, exp));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<ExprAst> {
        match self.bump() {
            Some(Tok::Num(v)) => Ok(ExprAst::Num(v)),
            Some(Tok::Ident(name)) => {
                if name == "x" {
                    return Ok(ExprAst::Var);
                }
                let fun = match name.as_str() {
                    "exp" => FunKind::Exp,
                    "ln" => FunKind::Ln,
                    "sqrt" => FunKind::Sqrt,
                    "sin" => FunKind::Sin,
                    "cos" => FunKind::Cos,
                    _ => {
                        self.i -= 1;
                        return Err(self.err(format!("unknown identifier `{name}`")));
                    }
                };
                match self.peek() {
                    Some(Tok::LParen) => {
                        self.i += 1;
                        let arg = self.expr()?;
                        self.expect_rparen()?;
                        Ok(ExprAst::fun(fun, arg))
                    }
                    _ => Err(self.err(format!("expected `(` after `{name}`"))),
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            Some(_) => {
                self.i -= 1;
                Err(self.err("expected a number, `x`, a function call, or `(`"))
            }
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses expression source text into an [`ExprAst`].
pub fn parse_expr(src: &str) -> Result<ExprAst> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        i: 0,
        eof_offset: src.chars().count() + 1,
    };
    let ast = p.expr()?;
    if p.i != p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(ast)
}

// -------------------------------------------------------------- evaluators

/// Evaluates the order-6 jet of the expression at `x0`.
///
/// Domain violations (division by zero, `ln`/`sqrt`/fractional power of a
/// non-positive value) are reported against `x0`.
pub fn eval_jet(ast: &ExprAst, x0: f64) -> Result<Jet> {
    fn go(ast: &ExprAst, x0: f64) -> Result<Jet> {
        Ok(match ast {
            ExprAst::Num(v) => Jet::constant(*v),
            ExprAst::Var => Jet::variable(x0),
            ExprAst::Neg(e) => -go(e, x0)?,
            ExprAst::Fun(k, a) => {
                let j = go(a, x0)?;
                match k {
                    FunKind::Exp => j.exp(),
                    FunKind::Ln => {
                        if j.value() <= 0.0 {
                            return Err(Error::domain(
                                x0,
                                format!("ln of non-positive value {}", j.value()),
                            ));
                        }
                        j.ln()
                    }
                    FunKind::Sqrt => {
                        if j.value() <= 0.0 {
                            return Err(Error::domain(
                                x0,
                                format!("sqrt of non-positive value {}", j.value()),
                            ));
                        }
                        j.sqrt()
                    }
                    FunKind::Sin => j.sin(),
                    FunKind::Cos => j.cos(),
                }
            }
            ExprAst::Bin(op, l, r) => {
                let a = go(l, x0)?;
                match op {
                    BinOp::Add => a + go(r, x0)?,
                    BinOp::Sub => a - go(r, x0)?,
                    BinOp::Mul => a * go(r, x0)?,
                    BinOp::Div => {
                        let b = go(r, x0)?;
                        if b.value() == 0.0 {
                            return Err(Error::domain(x0, "division by zero"));
                        }
                        a / b
                    }
                    BinOp::Pow => {
                        let b = go(r, x0)?;
                        let constant_exp = b.derivs().iter().all(|&d| d == 0.0);
                        if constant_exp {
                            let r = b.value();
                            let integer = r == r.round() && r.abs() <= 64.0;
                            if !integer && a.value() <= 0.0 {
                                return Err(Error::domain(
                                    x0,
                                    format!(
                                        "power {r} of non-positive base {}",
                                        a.value()
                                    ),
                                ));
                            }
                            a.powf(r)
                        } else {
                            if a.value() <= 0.0 {
                                return Err(Error::domain(
                                    x0,
                                    format!(
                                        "variable exponent needs positive base, got {}",
                                        a.value()
                                    ),
                                ));
                            }
                            (a.ln() * b).exp()
                        }
                    }
                }
            }
        })
    }
    go(ast, x0)
}

/// Plain scalar evaluation, used where derivative slots are not needed.
pub fn eval_f64(ast: &ExprAst, x: f64) -> Result<f64> {
    Ok(match ast {
        ExprAst::Num(v) => *v,
        ExprAst::Var => x,
        ExprAst::Neg(e) => -eval_f64(e, x)?,
        ExprAst::Fun(k, a) => {
            let v = eval_f64(a, x)?;
            match k {
                FunKind::Exp => v.exp(),
                FunKind::Ln => {
                    if v <= 0.0 {
                        return Err(Error::domain(x, format!("ln of non-positive value {v}")));
                    }
                    v.ln()
                }
                FunKind::Sqrt => {
                    if v < 0.0 {
                        return Err(Error::domain(x, format!("sqrt of negative value {v}")));
                    }
                    v.sqrt()
                }
                FunKind::Sin => v.sin(),
                FunKind::Cos => v.cos(),
            }
        }
        ExprAst::Bin(op, l, r) => {
            let a = eval_f64(l, x)?;
            let b = eval_f64(r, x)?;
            match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
                BinOp::Div => {
                    if b == 0.0 {
                        return Err(Error::domain(x, "division by zero"));
                    }
                    a / b
                }
                BinOp::Pow => {
                    let integer = b == b.round() && b.abs() <= 64.0;
                    if !integer && a <= 0.0 {
                        return Err(Error::domain(
                            x,
                            format!("power {b} of non-positive base {a}"),
                        ));
                    }
                    a.powf(b)
                }
            }
        }
    })
}
