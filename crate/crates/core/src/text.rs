//! Textual rendering and parsing for scalars, Laurent polynomials and
//! rational functions.
//!
//! The grammar is one small expression language shared by all three targets:
//! integers, the imaginary unit `i`, the variable (`t` or `q`), `+ - * / ^`
//! and parentheses. Parsers are total: any input yields a value or a
//! `SyntaxError`, never a panic, and a work budget bounds the cost of
//! adversarial inputs such as nested powers.

use crate::gaussian::GaussianRational;
use crate::laurent::LaurentPoly;
use crate::ratfunc::RatFunc;
use crate::unipoly::UniPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;
use thiserror::Error;

/// Parse failure with 1-based source position.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, col {col}: expected {expected}")]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub expected: String,
}

/// Power cap for structural bases; single-term bases may go higher.
const MAX_EXPONENT: i64 = 64;
const MAX_MONOMIAL_EXPONENT: i64 = 1024;
const MAX_DEPTH: usize = 128;
const WORK_BUDGET: u64 = 1 << 22;

// ---------------------------------------------------------------------------
// Tokenizer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Semi,
    Eq,
    Ge,
    Eof,
}

impl Tok {
    fn describe(&self) -> &'static str {
        match self {
            Tok::Int(_) => "integer",
            Tok::Ident(_) => "identifier",
            Tok::Plus => "'+'",
            Tok::Minus => "'-'",
            Tok::Star => "'*'",
            Tok::Slash => "'/'",
            Tok::Caret => "'^'",
            Tok::LParen => "'('",
            Tok::RParen => "')'",
            Tok::LBracket => "'['",
            Tok::RBracket => "']'",
            Tok::Comma => "','",
            Tok::Colon => "':'",
            Tok::Semi => "';'",
            Tok::Eq => "'='",
            Tok::Ge => "'>='",
            Tok::Eof => "end of input",
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Lexed {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub(crate) fn lex(src: &str) -> Result<Vec<Lexed>, SyntaxError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = src.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (tline, tcol) = (line, col);
        let bump = |c: char, line: &mut usize, col: &mut usize| {
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        if ch.is_whitespace() {
            chars.next();
            bump(ch, &mut line, &mut col);
            continue;
        }
        let tok = if ch.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    chars.next();
                    bump(c, &mut line, &mut col);
                } else {
                    break;
                }
            }
            Tok::Int(digits)
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let mut name = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    name.push(c);
                    chars.next();
                    bump(c, &mut line, &mut col);
                } else {
                    break;
                }
            }
            Tok::Ident(name)
        } else {
            chars.next();
            bump(ch, &mut line, &mut col);
            match ch {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                ':' => Tok::Colon,
                ';' => Tok::Semi,
                '=' => Tok::Eq,
                '>' => {
                    if chars.peek() == Some(&'=') {
                        chars.next();
                        bump('=', &mut line, &mut col);
                        Tok::Ge
                    } else {
                        return Err(SyntaxError {
                            line: tline,
                            col: tcol,
                            expected: "'>=' (found bare '>')".to_string(),
                        });
                    }
                }
                other => {
                    return Err(SyntaxError {
                        line: tline,
                        col: tcol,
                        expected: format!("token (found {other:?})"),
                    })
                }
            }
        };
        out.push(Lexed {
            tok,
            line: tline,
            col: tcol,
        });
    }
    out.push(Lexed {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

// ---------------------------------------------------------------------------
// Generic expression evaluation
// ---------------------------------------------------------------------------

/// A value domain the expression grammar can evaluate into.
pub(crate) trait ExprDomain: Sized + Clone {
    fn from_digits(digits: &str) -> Self;
    fn var(name: &str) -> Option<Self>;
    fn imaginary() -> Option<Self>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// None when the division is not exact in the domain.
    fn div(&self, o: &Self) -> Option<Self>;
    /// Cost measure charged against the work budget: term count weighted by
    /// coefficient word size, so big-integer growth is accounted for.
    fn size(&self) -> usize;
    /// Structural limits (degree bounds) a parsed value must stay within.
    fn within_limits(&self) -> bool;
}

fn coeff_words(c: &GaussianRational) -> usize {
    let bits = c.re().numer().bits()
        + c.re().denom().bits()
        + c.im().numer().bits()
        + c.im().denom().bits();
    1 + (bits / 64) as usize
}

pub(crate) struct Parser<'a> {
    toks: &'a [Lexed],
    pos: usize,
    budget: u64,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(toks: &'a [Lexed]) -> Self {
        Parser {
            toks,
            pos: 0,
            budget: WORK_BUDGET,
        }
    }

    pub(crate) fn peek(&self) -> &Lexed {
        &self.toks[self.pos.min(self.toks.len() - 1)]
    }

    pub(crate) fn next_tok(&mut self) -> Lexed {
        let t = self.peek().clone();
        if self.pos < self.toks.len() - 1 {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn error(&self, expected: impl Into<String>) -> SyntaxError {
        let at = self.peek();
        SyntaxError {
            line: at.line,
            col: at.col,
            expected: expected.into(),
        }
    }

    pub(crate) fn expect(&mut self, tok: Tok) -> Result<(), SyntaxError> {
        if self.peek().tok == tok {
            self.next_tok();
            Ok(())
        } else {
            Err(self.error(format!(
                "{} (found {})",
                tok.describe(),
                self.peek().tok.describe()
            )))
        }
    }

    pub(crate) fn at_eof(&self) -> bool {
        self.peek().tok == Tok::Eof
    }

    fn charge(&mut self, cost: u64) -> Result<(), SyntaxError> {
        if cost > self.budget {
            Err(self.error("a smaller expression (work budget exceeded)"))
        } else {
            self.budget -= cost;
            Ok(())
        }
    }

    /// Signed integer literal fitting in i64.
    pub(crate) fn parse_sint(&mut self) -> Result<i64, SyntaxError> {
        let negative = if self.peek().tok == Tok::Minus {
            self.next_tok();
            true
        } else {
            false
        };
        match self.next_tok().tok {
            Tok::Int(digits) => {
                let v: i64 = digits
                    .parse()
                    .map_err(|_| self.error("an integer in range"))?;
                Ok(if negative { -v } else { v })
            }
            _ => Err(self.error("integer")),
        }
    }

    fn checked<D: ExprDomain>(&self, v: D) -> Result<D, SyntaxError> {
        if v.within_limits() {
            Ok(v)
        } else {
            Err(self.error("a value within the size limits"))
        }
    }

    fn parse_expr<D: ExprDomain>(&mut self, depth: usize) -> Result<D, SyntaxError> {
        let mut acc = self.parse_term::<D>(depth)?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next_tok();
                    let rhs = self.parse_term::<D>(depth)?;
                    self.charge((acc.size() + rhs.size()) as u64)?;
                    acc = acc.add(&rhs);
                }
                Tok::Minus => {
                    self.next_tok();
                    let rhs = self.parse_term::<D>(depth)?;
                    self.charge((acc.size() + rhs.size()) as u64)?;
                    acc = acc.sub(&rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term<D: ExprDomain>(&mut self, depth: usize) -> Result<D, SyntaxError> {
        let mut acc = self.parse_unary::<D>(depth)?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.next_tok();
                    let rhs = self.parse_unary::<D>(depth)?;
                    self.charge((acc.size() * rhs.size()) as u64 + 1)?;
                    acc = self.checked(acc.mul(&rhs))?;
                }
                Tok::Slash => {
                    self.next_tok();
                    let rhs = self.parse_unary::<D>(depth)?;
                    self.charge((acc.size() * rhs.size()) as u64 + 4)?;
                    let quot = acc
                        .div(&rhs)
                        .ok_or_else(|| self.error("an exact nonzero divisor"))?;
                    acc = self.checked(quot)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_unary<D: ExprDomain>(&mut self, depth: usize) -> Result<D, SyntaxError> {
        if self.peek().tok == Tok::Minus {
            self.next_tok();
            let v = self.parse_unary::<D>(depth)?;
            return Ok(v.neg());
        }
        self.parse_power::<D>(depth)
    }

    fn parse_power<D: ExprDomain>(&mut self, depth: usize) -> Result<D, SyntaxError> {
        let mut base = self.parse_atom::<D>(depth)?;
        while self.peek().tok == Tok::Caret {
            self.next_tok();
            let exp = self.parse_sint()?;
            let cap = if base.size() <= 1 {
                MAX_MONOMIAL_EXPONENT
            } else {
                MAX_EXPONENT
            };
            if exp.abs() > cap {
                return Err(self.error("exponent within range"));
            }
            base = self.pow_charged(base, exp)?;
        }
        Ok(base)
    }

    fn pow_charged<D: ExprDomain>(&mut self, base: D, exp: i64) -> Result<D, SyntaxError> {
        if exp == 0 {
            return Ok(D::from_digits("1"));
        }
        let (base, n) = if exp < 0 {
            self.charge((base.size() * base.size()) as u64 + 4)?;
            let inv = D::from_digits("1")
                .div(&base)
                .ok_or_else(|| self.error("an invertible base for a negative power"))?;
            (inv, (-exp) as u64)
        } else {
            (base, exp as u64)
        };
        let mut acc = base.clone();
        for _ in 1..n {
            self.charge((acc.size() * base.size()) as u64 + 1)?;
            acc = self.checked(acc.mul(&base))?;
        }
        Ok(acc)
    }

    fn parse_atom<D: ExprDomain>(&mut self, depth: usize) -> Result<D, SyntaxError> {
        if depth == 0 {
            return Err(self.error("a shallower expression (nesting too deep)"));
        }
        match self.peek().tok.clone() {
            Tok::Int(digits) => {
                self.next_tok();
                self.charge((digits.len() / 8) as u64 + 1)?;
                Ok(D::from_digits(&digits))
            }
            Tok::Ident(name) => {
                self.next_tok();
                if name == "i" {
                    D::imaginary().ok_or_else(|| self.error("a real-valued atom"))
                } else {
                    D::var(&name).ok_or_else(|| self.error("the domain variable"))
                }
            }
            Tok::LParen => {
                self.next_tok();
                let v = self.parse_expr::<D>(depth - 1)?;
                self.expect(Tok::RParen)?;
                Ok(v)
            }
            _ => Err(self.error("integer, variable or '('")),
        }
    }
}

fn parse_complete<D: ExprDomain>(src: &str) -> Result<D, SyntaxError> {
    let toks = lex(src)?;
    let mut p = Parser::new(&toks);
    let v = p.parse_expr::<D>(MAX_DEPTH)?;
    if !p.at_eof() {
        return Err(p.error("end of input"));
    }
    Ok(v)
}

// ---------------------------------------------------------------------------
// Domain instances
// ---------------------------------------------------------------------------

fn big_from_digits(digits: &str) -> BigInt {
    BigInt::parse_bytes(digits.as_bytes(), 10).unwrap_or_else(|| BigInt::from(0))
}

impl ExprDomain for GaussianRational {
    fn from_digits(digits: &str) -> Self {
        GaussianRational::from_rational(BigRational::from_integer(big_from_digits(digits)))
    }
    fn var(_: &str) -> Option<Self> {
        None
    }
    fn imaginary() -> Option<Self> {
        Some(GaussianRational::i())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            None
        } else {
            Some(self / o)
        }
    }
    fn size(&self) -> usize {
        coeff_words(self)
    }
    fn within_limits(&self) -> bool {
        true
    }
}

impl ExprDomain for LaurentPoly {
    fn from_digits(digits: &str) -> Self {
        LaurentPoly::constant(GaussianRational::from_digits(digits))
    }
    fn var(name: &str) -> Option<Self> {
        (name == "t").then(|| LaurentPoly::t_pow(1))
    }
    fn imaginary() -> Option<Self> {
        Some(LaurentPoly::constant(GaussianRational::i()))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, o: &Self) -> Option<Self> {
        self.checked_div_unit(o)
    }
    fn size(&self) -> usize {
        self.terms().map(|(_, c)| coeff_words(c)).sum::<usize>().max(1)
    }
    fn within_limits(&self) -> bool {
        // No division machinery here, so a roomier degree bound is safe.
        self.min_exp().map_or(true, |m| m >= -2048)
            && self.max_exp().map_or(true, |m| m <= 2048)
    }
}

impl ExprDomain for RatFunc {
    fn from_digits(digits: &str) -> Self {
        RatFunc::constant(GaussianRational::from_digits(digits))
    }
    fn var(name: &str) -> Option<Self> {
        (name == "q").then(RatFunc::q)
    }
    fn imaginary() -> Option<Self> {
        Some(RatFunc::constant(GaussianRational::i()))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            None
        } else {
            Some(self / o)
        }
    }
    fn size(&self) -> usize {
        self.num()
            .terms()
            .chain(self.den().terms())
            .map(|(_, c)| coeff_words(c))
            .sum::<usize>()
            .max(1)
    }
    fn within_limits(&self) -> bool {
        // Every arithmetic step normalizes through a polynomial gcd, so keep
        // degrees small enough that the Euclidean chain stays cheap.
        self.num().degree().unwrap_or(0) <= 64 && self.den().degree().unwrap_or(0) <= 64
    }
}

pub fn parse_gaussian(src: &str) -> Result<GaussianRational, SyntaxError> {
    parse_complete(src)
}

pub fn parse_laurent(src: &str) -> Result<LaurentPoly, SyntaxError> {
    parse_complete(src)
}

pub fn parse_ratfunc(src: &str) -> Result<RatFunc, SyntaxError> {
    parse_complete(src)
}

/// Split a family literal such as `cB[-3]` into its name and index.
pub fn parse_family_parts(src: &str) -> Result<(String, i64), SyntaxError> {
    let toks = lex(src)?;
    let mut p = Parser::new(&toks);
    let name = match p.next_tok().tok {
        Tok::Ident(name) => name,
        _ => return Err(p.error("family name")),
    };
    p.expect(Tok::LBracket)?;
    let index = p.parse_sint()?;
    p.expect(Tok::RBracket)?;
    if !p.at_eof() {
        return Err(p.error("end of input"));
    }
    Ok((name, index))
}

impl FromStr for LaurentPoly {
    type Err = SyntaxError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_laurent(s)
    }
}

impl FromStr for RatFunc {
    type Err = SyntaxError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_ratfunc(s)
    }
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

/// One rendered monomial: extracted sign plus magnitude text.
fn render_term(exp: i64, coeff: &GaussianRational, var: &str) -> (bool, String) {
    let var_part = match exp {
        0 => None,
        1 => Some(var.to_string()),
        e => Some(format!("{var}^{e}")),
    };
    let (negative, mag) = if coeff.is_real() {
        let re = coeff.re();
        let neg = re.is_negative();
        let abs = if neg { -re.clone() } else { re.clone() };
        let mag = if abs.is_one() && var_part.is_some() {
            String::new()
        } else {
            abs.to_string()
        };
        (neg, mag)
    } else if coeff.re().is_zero() {
        let im = coeff.im();
        let neg = im.is_negative();
        let abs = if neg { -im.clone() } else { im.clone() };
        let mag = if abs.is_one() {
            "i".to_string()
        } else {
            format!("{abs}*i")
        };
        (neg, mag)
    } else {
        (false, format!("({coeff})"))
    };
    let text = match (mag.is_empty(), var_part) {
        (true, Some(v)) => v,
        (false, Some(v)) => format!("{mag}*{v}"),
        (_, None) => {
            if mag.is_empty() {
                "1".to_string()
            } else {
                mag
            }
        }
    };
    (negative, text)
}

fn render_sum<'a>(terms: impl Iterator<Item = (i64, &'a GaussianRational)>, var: &str) -> String {
    let mut out = String::new();
    for (i, (exp, coeff)) in terms.enumerate() {
        let (neg, text) = render_term(exp, coeff, var);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&text);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Render with exponents in decreasing order and the constant term last,
/// e.g. `t^2 + 3*t^-1` and `t^-2 - 1`.
pub fn render_laurent(p: &LaurentPoly) -> String {
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by_key(|(exp, _)| (*exp == 0, std::cmp::Reverse(*exp)));
    render_sum(terms.into_iter(), "t")
}

pub fn render_unipoly(p: &UniPoly) -> String {
    let mut terms: Vec<_> = p.terms().map(|(n, c)| (n as i64, c)).collect();
    terms.reverse();
    render_sum(terms.into_iter(), "q")
}

/// Render as `(num)/(den)`, or just the numerator when the denominator is 1.
pub fn render_ratfunc(f: &RatFunc) -> String {
    if f.den().is_one() {
        render_unipoly(f.num())
    } else {
        format!("({})/({})", render_unipoly(f.num()), render_unipoly(f.den()))
    }
}
