//! Surface syntax for polynomials and weights.
//!
//! Grammar (whitespace and newlines are insignificant):
//!
//! ```text
//! expr     := [+|-] term (( + | - ) term)*
//! term     := factor (* factor)*
//! factor   := atom [^ exponent]
//! atom     := var | number | ( expr )
//! var      := x<k>            k = 1..=nvars
//! number   := int [/ int]
//! exponent := [-] int | ( [+|-] int [/ int] )
//! ```
//!
//! Negative and fractional powers are accepted only on single terms; a
//! fractional power additionally needs coefficient 1. The text renderer
//! writes terms in decreasing lex order and its output parses back to the
//! same polynomial.

use std::fmt;

use itertools::Itertools;
use num::{BigInt, One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::laurent::{Exponent, ExponentVector, LaurentPoly, Rational};
use crate::schur::{schur_p, schur_s, GeneralWeight, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown variable x{index} at line {line}, column {col} (have {nvars} variables)")]
    UnknownVariable { index: usize, nvars: usize, line: usize, col: usize },
    #[error("malformed exponent at line {line}, column {col}: {msg}")]
    MalformedExponent { line: usize, col: usize, msg: String },
    #[error("invalid weight '{0}': {1}")]
    Weight(String, String),
    #[error("invalid JSON polynomial: {0}")]
    Json(String),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Var(usize),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Var(k) => write!(f, "x{k}"),
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Slash => write!(f, "'/'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let push = |out: &mut Vec<Token>, tok| out.push(Token { tok, line: tl, col: tc });
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
                col += 1;
            }
            push(&mut out, Tok::Int(digits.parse().expect("digits")));
            continue;
        }
        if c == 'x' {
            chars.next();
            col += 1;
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
                col += 1;
            }
            let index = digits.parse::<usize>().map_err(|_| ParseError::Syntax {
                line: tl,
                col: tc,
                msg: "expected a variable index after 'x'".into(),
            })?;
            push(&mut out, Tok::Var(index));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError::Syntax {
                    line: tl,
                    col: tc,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        };
        chars.next();
        col += 1;
        push(&mut out, tok);
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn syntax(&self, t: &Token, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax { line: t.line, col: t.col, msg: msg.into() }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        let t = self.next();
        if t.tok == tok {
            Ok(())
        } else {
            Err(self.syntax(&t, format!("expected {tok}, found {}", t.tok)))
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly, ParseError> {
        let negate = match self.peek().tok {
            Tok::Minus => {
                self.next();
                true
            }
            Tok::Plus => {
                self.next();
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.next();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.next();
        let k = self.exponent()?;
        power(&base, &k).map_err(|msg| ParseError::MalformedExponent {
            line: caret.line,
            col: caret.col,
            msg,
        })
    }

    fn atom(&mut self) -> Result<LaurentPoly, ParseError> {
        let t = self.next();
        match t.tok {
            Tok::Var(k) => {
                if k == 0 || k > self.nvars {
                    return Err(ParseError::UnknownVariable {
                        index: k,
                        nvars: self.nvars,
                        line: t.line,
                        col: t.col,
                    });
                }
                Ok(LaurentPoly::var(k - 1, self.nvars))
            }
            Tok::Int(n) => {
                let mut value = Rational::from_integer(n);
                if self.peek().tok == Tok::Slash {
                    self.next();
                    let d = self.next();
                    match d.tok {
                        Tok::Int(d) if !d.is_zero() => value /= Rational::from_integer(d),
                        Tok::Int(_) => return Err(self.syntax(&d, "division by zero")),
                        ref other => {
                            return Err(self.syntax(&d, format!("expected denominator, found {other}")))
                        }
                    }
                }
                Ok(LaurentPoly::constant(value, self.nvars))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            ref other => Err(self.syntax(&t, format!("expected a term, found {other}"))),
        }
    }

    fn small_int(&mut self) -> Result<i64, ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Int(n) => i64::try_from(n).map_err(|_| ParseError::MalformedExponent {
                line: t.line,
                col: t.col,
                msg: "exponent too large".into(),
            }),
            other => Err(ParseError::MalformedExponent {
                line: t.line,
                col: t.col,
                msg: format!("expected an integer, found {other}"),
            }),
        }
    }

    fn exponent(&mut self) -> Result<Exponent, ParseError> {
        match self.peek().tok {
            Tok::LParen => {
                self.next();
                let sign = match self.peek().tok {
                    Tok::Minus => {
                        self.next();
                        -1
                    }
                    Tok::Plus => {
                        self.next();
                        1
                    }
                    _ => 1,
                };
                let num = self.small_int()?;
                let mut den = 1;
                if self.peek().tok == Tok::Slash {
                    self.next();
                    let t = self.peek().clone();
                    den = self.small_int()?;
                    if den == 0 {
                        return Err(ParseError::MalformedExponent {
                            line: t.line,
                            col: t.col,
                            msg: "zero denominator".into(),
                        });
                    }
                }
                self.expect(Tok::RParen)?;
                Ok(Exponent::new(sign * num, den))
            }
            Tok::Minus => {
                self.next();
                Ok(Exponent::from_integer(-self.small_int()?))
            }
            _ => Ok(Exponent::from_integer(self.small_int()?)),
        }
    }
}

fn power(base: &LaurentPoly, k: &Exponent) -> Result<LaurentPoly, String> {
    if k.is_integer() && !k.is_negative() {
        let k = u32::try_from(*k.numer()).map_err(|_| "exponent too large".to_string())?;
        return Ok(base.pow(k));
    }
    if base.len() != 1 {
        return Err(format!("power {k} needs a single-term base"));
    }
    let (e, c) = base.leading_term().expect("one term");
    let coeff = if k.is_integer() {
        crate::laurent::pow_signed(c, *k.numer())
    } else if c.is_one() {
        Rational::one()
    } else {
        return Err(format!("fractional power {k} needs coefficient 1"));
    };
    let scaled: Vec<Exponent> = e.entries().iter().map(|x| x * k).collect();
    Ok(LaurentPoly::monomial(ExponentVector::new(&scaled), coeff))
}

/// Parse a polynomial in `x1 … x<nvars>`.
pub fn parse_poly(text: &str, nvars: usize) -> Result<LaurentPoly, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, nvars };
    let f = p.expr()?;
    let t = p.next();
    if t.tok != Tok::End {
        return Err(p.syntax(&t, format!("unexpected {}", t.tok)));
    }
    Ok(f)
}

/// Parse `3,1,0,0`-style integer vectors. The empty string is the empty
/// weight.
pub fn parse_weight_parts(text: &str) -> Result<Vec<i64>, ParseError> {
    let text = text.trim().trim_start_matches('(').trim_end_matches(')');
    if text.trim().is_empty() {
        return Ok(vec![]);
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|e| ParseError::Weight(text.to_string(), e.to_string()))
        })
        .collect()
}

pub fn parse_weight(text: &str) -> Result<Weight, ParseError> {
    let parts = parse_weight_parts(text)?;
    Weight::new(parts).map_err(|e| ParseError::Weight(text.to_string(), e.to_string()))
}

pub fn parse_general_weight(text: &str) -> Result<GeneralWeight, ParseError> {
    let parts = parse_weight_parts(text)?;
    GeneralWeight::new(parts).map_err(|e| ParseError::Weight(text.to_string(), e.to_string()))
}

/// Parse a polynomial, a JSON polynomial, or a basis shorthand
/// (`p:3,1,0,0` for `p_λ`, `s:2,1` for `s_λ`).
pub fn parse_input(text: &str, nvars: usize) -> Result<LaurentPoly, ParseError> {
    let trimmed = text.trim();
    let check_len = |n: usize| {
        if n == nvars {
            Ok(())
        } else {
            Err(ParseError::Weight(
                trimmed.to_string(),
                format!("has {n} parts but {nvars} variables were requested"),
            ))
        }
    };
    if let Some(rest) = trimmed.strip_prefix("p:") {
        let w = parse_weight(rest)?;
        check_len(w.n())?;
        return Ok(schur_p(&w));
    }
    if let Some(rest) = trimmed.strip_prefix("s:") {
        let w = parse_general_weight(rest)?;
        check_len(w.n())?;
        return Ok(schur_s(&w));
    }
    if trimmed.starts_with('{') {
        let f = from_json(trimmed)?;
        if f.nvars() != nvars {
            return Err(ParseError::Json(format!(
                "polynomial has {} variables, expected {nvars}",
                f.nvars()
            )));
        }
        return Ok(f);
    }
    parse_poly(text, nvars)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

pub fn render(f: &LaurentPoly, format: Format) -> String {
    match format {
        Format::Text => render_text(f),
        Format::Json => to_json(f).to_string(),
        Format::Latex => render_latex(f),
    }
}

fn text_exponent(e: &Exponent) -> String {
    if e.is_integer() && e.is_positive() {
        e.to_string()
    } else {
        format!("({e})")
    }
}

pub fn render_text(f: &LaurentPoly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (e, c)) in f.terms().rev().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let vars = (0..e.len())
            .filter(|&i| !e.get(i).is_zero())
            .map(|i| {
                let x = e.get(i);
                if x.is_one() {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, text_exponent(&x))
                }
            })
            .join("*");
        if vars.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&vars);
        } else {
            out.push_str(&format!("{abs}*{vars}"));
        }
    }
    out
}

fn latex_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

fn latex_exponent(e: &Exponent) -> String {
    if e.is_integer() {
        e.to_string()
    } else {
        let sign = if e.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", e.numer().abs(), e.denom())
    }
}

pub fn render_latex(f: &LaurentPoly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (e, c)) in f.terms().rev().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let vars = (0..e.len())
            .filter(|&i| !e.get(i).is_zero())
            .map(|i| {
                let x = e.get(i);
                if x.is_one() {
                    format!("x_{{{}}}", i + 1)
                } else {
                    format!("x_{{{}}}^{{{}}}", i + 1, latex_exponent(&x))
                }
            })
            .join(" ");
        if vars.is_empty() {
            out.push_str(&latex_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&vars);
        } else {
            out.push_str(&format!("{} {vars}", latex_rational(&abs)));
        }
    }
    out
}

/// `{"nvars": n, "terms": [{"coeff": "p/q", "exps": ["3", "-1", "1/2"]}]}`
/// with terms in decreasing lex order.
pub fn to_json(f: &LaurentPoly) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .rev()
        .map(|(e, c)| {
            json!({
                "coeff": c.to_string(),
                "exps": e.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "nvars": f.nvars(), "terms": terms })
}

fn parse_fraction<T: std::str::FromStr + From<u8>>(s: &str) -> Option<(T, T)> {
    match s.split_once('/') {
        Some((n, d)) => Some((n.trim().parse().ok()?, d.trim().parse().ok()?)),
        None => Some((s.trim().parse().ok()?, T::from(1u8))),
    }
}

pub fn from_json(text: &str) -> Result<LaurentPoly, ParseError> {
    let err = |m: &str| ParseError::Json(m.to_string());
    let v: Value = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let nvars = v["nvars"].as_u64().ok_or_else(|| err("missing nvars"))? as usize;
    let terms = v["terms"].as_array().ok_or_else(|| err("missing terms"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let coeff = t["coeff"].as_str().ok_or_else(|| err("coeff must be a string"))?;
        let (n, d): (BigInt, BigInt) =
            parse_fraction(coeff).ok_or_else(|| err("malformed coefficient"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        let exps = t["exps"].as_array().ok_or_else(|| err("exps must be an array"))?;
        let mut entries = Vec::with_capacity(exps.len());
        for x in exps {
            let s = x.as_str().ok_or_else(|| err("exponents must be strings"))?;
            let (n, d): (i64, i64) = parse_fraction(s).ok_or_else(|| err("malformed exponent"))?;
            if d == 0 {
                return Err(err("zero denominator"));
            }
            entries.push(Exponent::new(n, d));
        }
        out.push((ExponentVector::new(&entries), Rational::new(n, d)));
    }
    LaurentPoly::make(out, nvars).map_err(|e| ParseError::Json(e.to_string()))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_text(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::int;

    fn xp(e: &[i64]) -> LaurentPoly {
        LaurentPoly::x_pow(e)
    }

    #[test]
    fn parses_the_kernel_example() {
        let f = parse_poly("x1^3*x2 + 2*x1^2*x2^2 + x1*x2^3", 2).unwrap();
        assert_eq!(f, xp(&[3, 1]) + xp(&[2, 2]).scale(&int(2)) + xp(&[1, 3]));
    }

    #[test]
    fn parses_fractional_and_negative_powers() {
        let f = parse_poly("x1^(1/2)*x2^(1/2)", 2).unwrap();
        let half = Exponent::new(1, 2);
        assert_eq!(f, LaurentPoly::monomial(ExponentVector::new(&[half, half]), int(1)));
        assert_eq!(parse_poly("x1^(-1)", 2).unwrap(), xp(&[-1, 0]));
        assert_eq!(parse_poly("x1^-2", 2).unwrap(), xp(&[-2, 0]));
        assert_eq!(parse_poly("(2*x1)^(-1)", 1).unwrap(), xp(&[-1]).scale(&crate::laurent::rat(1, 2)));
        assert_eq!(parse_poly("(x1+x2)^2", 2).unwrap(), (xp(&[1, 0]) + xp(&[0, 1])).pow(2));
        assert_eq!(parse_poly("-3/2", 0).unwrap(), LaurentPoly::constant(crate::laurent::rat(-3, 2), 0));
    }

    #[test]
    fn reports_errors_with_position() {
        match parse_poly("x1 +", 2) {
            Err(ParseError::Syntax { line: 1, col: 5, msg }) => assert!(msg.contains("end of input")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_poly("x3", 2), Err(ParseError::UnknownVariable { index: 3, .. })));
        assert!(matches!(parse_poly("(x1+x2)^(1/2)", 2), Err(ParseError::MalformedExponent { .. })));
        assert!(matches!(parse_poly("x1^(1/0)", 2), Err(ParseError::MalformedExponent { .. })));
        assert!(matches!(parse_poly("x1\n  * $", 2), Err(ParseError::Syntax { line: 2, col: 5, .. })));
        assert!(matches!(parse_poly("(x1", 2), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn renders_canonically() {
        let f = parse_poly("x2^3 - 3/2*x1^(-1) + x1^(1/2)*x2^(1/2) - 7", 2).unwrap();
        let text = render_text(&f);
        assert_eq!(text, "x1^(1/2)*x2^(1/2) + x2^3 - 7 - 3/2*x1^(-1)");
        assert_eq!(parse_poly(&text, 2).unwrap(), f);
        assert_eq!(render_text(&-xp(&[1, 0])), "-x1");
        assert_eq!(render_text(&LaurentPoly::zero(3)), "0");
        assert_eq!(
            render_latex(&f),
            "x_{1}^{\\frac{1}{2}} x_{2}^{\\frac{1}{2}} + x_{2}^{3} - 7 - \\frac{3}{2} x_{1}^{-1}"
        );
    }

    #[test]
    fn json_roundtrip() {
        let f = parse_poly("x1^3*x2^(-1) + 3/2*x1^(1/2)*x2^(1/2)", 2).unwrap();
        let v = to_json(&f);
        assert_eq!(v["nvars"], 2);
        assert_eq!(v["terms"][0]["coeff"], "1");
        assert_eq!(v["terms"][0]["exps"], json!(["3", "-1"]));
        assert_eq!(v["terms"][1]["coeff"], "3/2");
        assert_eq!(v["terms"][1]["exps"], json!(["1/2", "1/2"]));
        assert_eq!(from_json(&v.to_string()).unwrap(), f);
    }

    #[test]
    fn basis_shorthand() {
        let p = parse_input("p:3,1", 2).unwrap();
        assert_eq!(p, xp(&[1, 1]) * (xp(&[1, 0]) + xp(&[0, 1])).pow(2));
        assert_eq!(parse_input("s:1,1", 2).unwrap(), xp(&[1, 1]));
        assert!(parse_input("p:2,2", 2).is_err());
        assert!(parse_input("p:3,1,0", 2).is_err());
        assert_eq!(parse_weight_parts("2,0,0,-1").unwrap(), vec![2, 0, 0, -1]);
        assert_eq!(parse_weight_parts("").unwrap(), Vec::<i64>::new());
    }
}
