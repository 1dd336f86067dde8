//! Textual parser for skew polynomials and E-expressions.
//!
//! Accepts terms like `-3*x1^2*x2 + 1/2*x2`, and `E1*E2` for elements of the
//! invariant subring. `Display` output round-trips exactly.

use num_rational::BigRational;
use num_traits::One;

use super::{EExpression, Monomial, Q, SkewPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigRational),
    Var(usize),
    Star,
    Caret,
    Plus,
    Minus,
    Slash,
    End,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer { s: s.as_bytes(), pos: 0 }
    }

    fn next(&mut self, varname: u8) -> Result<Tok, ParseError> {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos == self.s.len() {
            return Ok(Tok::End);
        }
        let c = self.s[self.pos];
        self.pos += 1;
        match c {
            b'*' => Ok(Tok::Star),
            b'^' => Ok(Tok::Caret),
            b'+' => Ok(Tok::Plus),
            b'-' => Ok(Tok::Minus),
            b'/' => Ok(Tok::Slash),
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                let n: num_bigint::BigInt =
                    text.parse().map_err(|_| ParseError(format!("bad number `{}`", text)))?;
                Ok(Tok::Num(BigRational::from_integer(n)))
            }
            c if c == varname => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                let i: usize =
                    text.parse().map_err(|_| ParseError("variable needs an index".into()))?;
                if i == 0 {
                    return Err(ParseError("variable indices start at 1".into()));
                }
                Ok(Tok::Var(i - 1))
            }
            other => Err(ParseError(format!("unexpected character `{}`", other as char))),
        }
    }

    fn peek(&mut self, varname: u8) -> Result<Tok, ParseError> {
        let save = self.pos;
        let t = self.next(varname);
        self.pos = save;
        t
    }
}

/// Parses a sum of terms `[±] [coef] [* var^e ...]` over `nvars` variables.
fn parse_terms(input: &str, nvars: usize, varname: u8) -> Result<Vec<(Vec<u32>, Q)>, ParseError> {
    let mut lx = Lexer::new(input);
    let mut out = Vec::new();
    let mut tok = lx.next(varname)?;
    if tok == Tok::End {
        return Err(ParseError("empty input".into()));
    }
    loop {
        // sign
        let mut sign = Q::one();
        loop {
            match tok {
                Tok::Plus => {}
                Tok::Minus => sign = -sign,
                _ => break,
            }
            tok = lx.next(varname)?;
        }
        // coefficient
        let mut coef = sign;
        let mut saw_factor = false;
        if let Tok::Num(n) = &tok {
            let mut c = n.clone();
            if lx.peek(varname)? == Tok::Slash {
                lx.next(varname)?;
                match lx.next(varname)? {
                    Tok::Num(d) => c /= d,
                    _ => return Err(ParseError("expected denominator".into())),
                }
            }
            coef *= c;
            saw_factor = true;
            tok = lx.next(varname)?;
            if tok == Tok::Star {
                tok = lx.next(varname)?;
            }
        }
        // variable powers
        let mut exps = vec![0u32; nvars];
        loop {
            match tok {
                Tok::Var(i) => {
                    if i >= nvars {
                        return Err(ParseError(format!(
                            "variable index {} out of range (n = {})",
                            i + 1,
                            nvars
                        )));
                    }
                    let mut e = 1u32;
                    if lx.peek(varname)? == Tok::Caret {
                        lx.next(varname)?;
                        match lx.next(varname)? {
                            Tok::Num(n) => {
                                if !n.is_integer() {
                                    return Err(ParseError("exponent must be an integer".into()));
                                }
                                e = u32::try_from(n.to_integer())
                                    .map_err(|_| ParseError("exponent out of range".into()))?;
                            }
                            _ => return Err(ParseError("expected exponent".into())),
                        }
                    }
                    exps[i] += e;
                    saw_factor = true;
                    tok = lx.next(varname)?;
                    if tok == Tok::Star {
                        tok = lx.next(varname)?;
                    }
                }
                _ => break,
            }
        }
        if !saw_factor {
            return Err(ParseError("expected a term".into()));
        }
        out.push((exps, coef));
        match tok {
            Tok::End => break,
            Tok::Plus | Tok::Minus => continue,
            other => return Err(ParseError(format!("unexpected token {:?}", other))),
        }
    }
    Ok(out)
}

/// Parses a skew polynomial in variables `x1..xn`.
///
/// Note: a textual term denotes the normal-form monomial with the given
/// exponents, so `x2*x1` is read as x1^1 x2^1, not as the product x2·x1.
pub fn parse_poly(input: &str, nvars: usize) -> Result<SkewPoly, ParseError> {
    let mut p = SkewPoly::zero(nvars);
    for (exps, c) in parse_terms(input, nvars, b'x')? {
        p = p.add(&SkewPoly::monomial(Monomial::new(exps), c));
    }
    Ok(p)
}

/// Parses an E-expression in `E1`, `E2`.
pub fn parse_epoly(input: &str) -> Result<EExpression, ParseError> {
    let mut p = EExpression::zero();
    for (exps, c) in parse_terms(input, 2, b'E')? {
        p = p.add(&EExpression::monomial(exps[0], exps[1], c));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skewpoly::{degree_slice, q_int, RingTag};

    #[test]
    fn parses_examples() {
        let p = parse_poly("-3*x1^2*x2", 2).unwrap();
        assert_eq!(p, SkewPoly::from_terms(2, &[(&[2, 1], -3)]));
        let p = parse_poly("x1 - x2 + 1/2", 2).unwrap();
        assert_eq!(
            p,
            SkewPoly::var(2, 0)
                .sub(&SkewPoly::var(2, 1))
                .add(&SkewPoly::constant(2, q_int(1) / q_int(2)))
        );
        let e = parse_epoly("E1*E2").unwrap();
        assert_eq!(e, EExpression::monomial(1, 1, q_int(1)));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("x1 +", 2).is_err());
        assert!(parse_poly("x9", 2).is_err());
        assert!(parse_poly("", 2).is_err());
        assert!(parse_poly("y1", 2).is_err());
    }

    #[test]
    fn display_round_trips() {
        let mut polys = vec![
            SkewPoly::zero(2),
            SkewPoly::from_terms(2, &[(&[0, 0], -7)]),
            SkewPoly::from_terms(2, &[(&[2, 1], -3), (&[0, 1], 1)]),
        ];
        polys.extend(degree_slice(RingTag::Rs, 8));
        for p in polys {
            let printed = p.to_string();
            assert_eq!(parse_poly(&printed, 2).unwrap(), p, "round-trip of `{}`", printed);
        }
    }
}
