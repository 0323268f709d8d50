//! Text grammar for polynomials and number-field elements: terms `c*x^k`,
//! `x^k`, `c` joined by `+`/`-`, with `c` an integer or `p/q`. The paper's
//! implicit-multiplication style `1/7(4a^2+9a+2)` is accepted alongside the
//! explicit `4/7*a^2+9/7*a+2/7`.

use super::polyq::PolyQ;
use super::{ArithError, Rat};
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str, var: char) -> Result<Vec<Tok>, ArithError> {
    let mut out = Vec::new();
    let mut it = s.chars().peekable();
    while let Some(&c) = it.peek() {
        match c {
            c if c.is_whitespace() => {
                it.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Num(digits.parse().unwrap()));
            }
            '+' => {
                out.push(Tok::Plus);
                it.next();
            }
            '-' | '−' => {
                out.push(Tok::Minus);
                it.next();
            }
            '*' => {
                out.push(Tok::Star);
                it.next();
            }
            '/' => {
                out.push(Tok::Slash);
                it.next();
            }
            '^' => {
                out.push(Tok::Caret);
                it.next();
            }
            '(' => {
                out.push(Tok::LParen);
                it.next();
            }
            ')' => {
                out.push(Tok::RParen);
                it.next();
            }
            c if c == var => {
                out.push(Tok::Var);
                it.next();
            }
            other => {
                return Err(ArithError::Parse(format!(
                    "unexpected character '{}' (variable is '{}')",
                    other, var
                )))
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<PolyQ, ArithError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
            }
            Some(Tok::Minus) => {
                negate = true;
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.add(&rhs);
                }
                Tok::Minus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<PolyQ, ArithError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs);
                }
                // implicit multiplication: a factor starts right here
                Some(Tok::Num(_)) | Some(Tok::Var) | Some(Tok::LParen) => {
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<PolyQ, ArithError> {
        let base = match self.bump() {
            Some(Tok::Num(n)) => {
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            PolyQ::constant(Rat::new(n, d))
                        }
                        _ => return Err(ArithError::Parse("expected nonzero denominator".into())),
                    }
                } else {
                    PolyQ::constant(Rat::from_integer(n))
                }
            }
            Some(Tok::Var) => PolyQ::x(),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => inner,
                    _ => return Err(ArithError::Parse("missing closing parenthesis".into())),
                }
            }
            other => {
                return Err(ArithError::Parse(format!("unexpected token {:?}", other)));
            }
        };
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            match self.bump() {
                Some(Tok::Num(e)) => {
                    let e: usize = e
                        .try_into()
                        .map_err(|_| ArithError::Parse("exponent out of range".into()))?;
                    if e > 64 {
                        return Err(ArithError::Parse("exponent out of range".into()));
                    }
                    let mut acc = PolyQ::one();
                    for _ in 0..e {
                        acc = acc.mul(&base);
                    }
                    Ok(acc)
                }
                _ => Err(ArithError::Parse("expected integer exponent".into())),
            }
        } else {
            Ok(base)
        }
    }
}

/// Parses an expression in a single variable into a polynomial.
pub fn parse_poly_expr(s: &str, var: char) -> Result<PolyQ, ArithError> {
    let toks = tokenize(s, var)?;
    if toks.is_empty() {
        return Err(ArithError::Parse("empty input".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ArithError::Parse("trailing input".into()));
    }
    Ok(out)
}

/// Splits a string at top-level commas (ignoring commas inside parentheses).
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// Parses `[a1,a2,a3,a4,a6]` with coefficients in the element syntax.
pub fn parse_curve_coeffs(s: &str, var: char) -> Result<[PolyQ; 5], ArithError> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| ArithError::Parse("curve syntax is [a1,a2,a3,a4,a6]".into()))?;
    let parts = split_top_level(inner);
    if parts.len() != 5 {
        return Err(ArithError::Parse(format!(
            "expected 5 coefficients, found {}",
            parts.len()
        )));
    }
    let mut out = Vec::with_capacity(5);
    for part in parts {
        out.push(parse_poly_expr(part, var)?);
    }
    Ok(out.try_into().unwrap())
}

/// Parses `(x, y)` with both coordinates in the element syntax.
pub fn parse_point(s: &str, var: char) -> Result<(PolyQ, PolyQ), ArithError> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| ArithError::Parse("point syntax is (x,y)".into()))?;
    let parts = split_top_level(inner);
    if parts.len() != 2 {
        return Err(ArithError::Parse("point syntax is (x,y)".into()));
    }
    Ok((
        parse_poly_expr(parts[0], var)?,
        parse_poly_expr(parts[1], var)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;

    #[test]
    fn poly_grammar() {
        assert_eq!(
            parse_poly_expr("x^4-x^3-x^2+x+1", 'x').unwrap(),
            PolyQ::from_int_coeffs(&[1, 1, -1, -1, 1])
        );
        assert_eq!(parse_poly_expr("3", 'x').unwrap(), PolyQ::constant(rat_int(3)));
        assert_eq!(
            parse_poly_expr("2*x^2 - 5", 'x').unwrap(),
            PolyQ::from_int_coeffs(&[-5, 0, 2])
        );
    }

    #[test]
    fn paper_element_style() {
        // implicit multiplication, both forms normalize identically
        let a = parse_poly_expr("1/7(4a^2+9a+2)", 'a').unwrap();
        let b = parse_poly_expr("4/7*a^2+9/7*a+2/7", 'a').unwrap();
        assert_eq!(a, b);
        let c = parse_poly_expr("(-1/4)a", 'a').unwrap();
        assert_eq!(c, PolyQ::new(vec![Rat::zero(), Rat::new((-1).into(), 4.into())]));
    }

    #[test]
    fn curve_and_point() {
        let cs = parse_curve_coeffs("[0,-1,-1,0,0]", 'a').unwrap();
        assert_eq!(cs[1], PolyQ::from_int_coeffs(&[-1]));
        assert_eq!(cs[4], PolyQ::zero());
        let (x, y) = parse_point("(-a, a^2 - a)", 'a').unwrap();
        assert_eq!(x, PolyQ::from_int_coeffs(&[0, -1]));
        assert_eq!(y, PolyQ::from_int_coeffs(&[0, -1, 1]));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly_expr("x +", 'x').is_err());
        assert!(parse_poly_expr("y^2", 'x').is_err());
        assert!(parse_poly_expr("1/0", 'x').is_err());
    }
}
