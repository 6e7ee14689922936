//! Text and JSON input formats for polynomials and rationals.
//!
//! Accepted polynomial text: `"x^4 - 2x^2 - 1"`, `"3*x^2 + 1/2 x - 7"`,
//! `"-(1/3)x"`. JSON: an ascending coefficient array whose entries are
//! integers or strings holding integers/fractions, e.g. `[-1, 0, -2, 0, 1]` or
//! `["3", "2"]`.

use rug::{Integer, Rational};
use serde_json::Value;

use super::{IntPoly, RatPoly};
use crate::error::{Error, Result};

/// Parses `"7"`, `"-3/4"`, `"0.25"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if let Some((int_part, frac)) = t.split_once('.') {
        let neg = int_part.starts_with('-');
        let ip = int_part.trim_start_matches(['-', '+']);
        if !frac.chars().all(|c| c.is_ascii_digit())
            || !ip.chars().all(|c| c.is_ascii_digit())
            || (ip.is_empty() && frac.is_empty())
        {
            return Err(Error::Parse(format!("bad decimal '{t}'")));
        }
        let digits = format!("{ip}{frac}");
        let n: Integer = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad decimal '{t}'")))?;
        let d = Integer::from(Integer::u_pow_u(10, frac.len() as u32));
        let r = Rational::from((n, d));
        return Ok(if neg { -r } else { r });
    }
    t.parse::<Rational>()
        .map_err(|_| Error::Parse(format!("bad rational '{t}'")))
}

fn json_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from(u))
            } else {
                // decimal literals are read from their textual form, not as f64
                parse_rational(&n.to_string())
            }
        }
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("expected number or string, got {other}"))),
    }
}

/// Parses a JSON array of rationals.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    let v: Value = serde_json::from_str(s.trim()).map_err(|e| Error::Parse(e.to_string()))?;
    match v {
        Value::Array(items) => items.iter().map(json_rational).collect(),
        Value::Object(map) => match map.get("coeffs") {
            Some(Value::Array(items)) => items.iter().map(json_rational).collect(),
            _ => Err(Error::Parse("expected an array or {\"coeffs\": [...]}".into())),
        },
        _ => Err(Error::Parse("expected a JSON array".into())),
    }
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn number(&mut self) -> Result<Rational> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && matches!(self.s[self.pos], b'0'..=b'9' | b'.') {
            self.pos += 1;
        }
        let mut text = String::from_utf8_lossy(&self.s[start..self.pos]).into_owned();
        let save = self.pos;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let ds = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if ds == self.pos {
                self.pos = save;
            } else {
                text.push('/');
                text.push_str(&String::from_utf8_lossy(&self.s[ds..self.pos]));
            }
        }
        parse_rational(&text)
    }

    fn exponent(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse("expected exponent after '^'".into()));
        }
        let e: usize = std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse("exponent too large".into()))?;
        if e > 4096 {
            return Err(Error::Parse(format!("exponent {e} too large")));
        }
        Ok(e)
    }
}

fn parse_text(s: &str) -> Result<RatPoly> {
    let mut lx = Lexer { s: s.as_bytes(), pos: 0 };
    let mut coeffs: Vec<Rational> = Vec::new();
    let mut first = true;
    loop {
        let mut sign = 1i32;
        match lx.peek() {
            None if !first => break,
            None => return Err(Error::Parse("empty polynomial".into())),
            Some(b'+') => {
                lx.bump();
            }
            Some(b'-') => {
                lx.bump();
                sign = -1;
            }
            Some(_) if first => {}
            Some(c) => return Err(Error::Parse(format!("unexpected '{}'", c as char))),
        }
        first = false;
        let mut coeff = Rational::from(1);
        let mut have_coeff = false;
        if lx.peek() == Some(b'(') {
            lx.bump();
            let mut inner_sign = 1;
            if lx.peek() == Some(b'-') {
                lx.bump();
                inner_sign = -1;
            } else if lx.peek() == Some(b'+') {
                lx.bump();
            }
            coeff = lx.number()? * inner_sign;
            if lx.bump() != Some(b')') {
                return Err(Error::Parse("expected ')'".into()));
            }
            have_coeff = true;
        } else if matches!(lx.peek(), Some(b'0'..=b'9' | b'.')) {
            coeff = lx.number()?;
            have_coeff = true;
        }
        if have_coeff && lx.peek() == Some(b'*') {
            lx.bump();
            if lx.peek() != Some(b'x') {
                return Err(Error::Parse("expected 'x' after '*'".into()));
            }
        }
        let mut power = 0usize;
        if lx.peek() == Some(b'x') {
            lx.bump();
            power = 1;
            if lx.peek() == Some(b'^') {
                lx.bump();
                power = lx.exponent()?;
            } else if lx.peek() == Some(b'*') {
                lx.pos += 1;
                if lx.peek() == Some(b'*') {
                    lx.bump();
                    power = lx.exponent()?;
                } else {
                    return Err(Error::Parse("unexpected '*'".into()));
                }
            }
        } else if !have_coeff {
            return Err(Error::Parse(format!("expected a term at byte {}", lx.pos)));
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Rational::new());
        }
        coeffs[power] += coeff * sign;
    }
    Ok(RatPoly::new(coeffs))
}

/// Parses a polynomial with rational coefficients from text or JSON.
pub fn parse_rat_poly(s: &str) -> Result<RatPoly> {
    let t = s.trim();
    if t.starts_with('[') || t.starts_with('{') {
        Ok(RatPoly::new(parse_rational_list(t)?))
    } else {
        parse_text(t)
    }
}

/// Parses a polynomial that must have integer coefficients.
pub fn parse_int_poly(s: &str) -> Result<IntPoly> {
    parse_rat_poly(s)?
        .to_int()
        .ok_or_else(|| Error::InvalidInput(format!("'{s}' has non-integer coefficients")))
}
