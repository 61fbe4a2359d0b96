//! Parser for ring and ambient elements written as polynomials in `x` and `u`.
//!
//! Accepts both the plain form printed by `Display` (`x^4 + (u^2 + 1)*x + 1`)
//! and LaTeX-ish input (`{x}^{4}{u}^{2} + ( {u}^{2}+1 ) x`). Juxtaposition
//! multiplies, `^` takes a non-negative integer exponent, and integer literals
//! are field elements by their integer encoding. The result is reduced with
//! `u^4 = 0` and `x^n = λ`.

use std::collections::BTreeMap;

use super::ambient::AmbientElement;
use super::ring::RingElement;
use crate::error::{Error, Result};
use crate::fieldpoly::{Field, FieldElement};

/// Sparse bivariate polynomial keyed by `(x-degree, u-degree)`, with `u^4` dropped.
type Terms = BTreeMap<(usize, usize), FieldElement>;

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    field: &'a Field,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

impl<'a> Parser<'a> {
    fn new(text: &str, field: &'a Field) -> Self {
        let chars = text.chars().filter(|c| !c.is_whitespace() && *c != '{' && *c != '}').collect();
        Parser { chars, pos: 0, field }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn add_into(&self, acc: &mut Terms, key: (usize, usize), c: FieldElement) {
        let slot = acc.entry(key).or_insert(FieldElement::ZERO);
        *slot = self.field.add(*slot, c);
        if slot.is_zero() {
            acc.remove(&key);
        }
    }

    fn mul(&self, a: &Terms, b: &Terms) -> Terms {
        let mut out = Terms::new();
        for (&(xa, ua), &ca) in a {
            for (&(xb, ub), &cb) in b {
                if ua + ub < 4 {
                    self.add_into(&mut out, (xa + xb, ua + ub), self.field.mul(ca, cb));
                }
            }
        }
        out
    }

    fn expr(&mut self) -> Result<Terms> {
        let mut acc = Terms::new();
        let mut negate = false;
        if self.peek() == Some('-') {
            self.pos += 1;
            negate = true;
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            for (k, c) in t {
                let c = if negate { self.field.neg(c) } else { c };
                self.add_into(&mut acc, k, c);
            }
            match self.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Terms> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => self.pos += 1,
                Some('(' | 'x' | 'u' | '0'..='9') => {}
                _ => return Ok(acc),
            }
            let f = self.factor()?;
            acc = self.mul(&acc, &f);
        }
    }

    fn factor(&mut self) -> Result<Terms> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.integer()?;
        let mut acc = Terms::from([((0, 0), self.field.one())]);
        for _ in 0..e {
            acc = self.mul(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Terms> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(bad(format!("expected ')' at position {}", self.pos)));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('x') => {
                self.pos += 1;
                Ok(Terms::from([((1, 0), self.field.one())]))
            }
            Some('u') => {
                self.pos += 1;
                Ok(Terms::from([((0, 1), self.field.one())]))
            }
            Some('0'..='9') => {
                let v = self.integer()?;
                let v = u32::try_from(v).map_err(|_| bad("coefficient too large"))?;
                let c = self.field.elem(v)?;
                let mut t = Terms::new();
                self.add_into(&mut t, (0, 0), c);
                Ok(t)
            }
            Some(c) => Err(bad(format!("unexpected '{c}' at position {}", self.pos))),
            None => Err(bad("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some('0'..='9')) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| bad(format!("expected an integer at position {start}")))
    }

    fn parse_all(mut self) -> Result<Terms> {
        let t = self.expr()?;
        if self.pos != self.chars.len() {
            return Err(bad(format!("trailing input at position {}", self.pos)));
        }
        Ok(t)
    }
}

/// Parses an element of `R = F_q[u]/⟨u⁴⟩`.
pub fn parse_ring(text: &str, field: &Field) -> Result<RingElement> {
    let terms = Parser::new(text, field).parse_all()?;
    let mut out = RingElement::ZERO;
    for ((xd, ud), c) in terms {
        if xd > 0 {
            return Err(bad("ring element must not contain x"));
        }
        out.0[ud] = field.add(out.0[ud], c);
    }
    Ok(out)
}

/// Parses an element of `R[x]/⟨x^n − λ⟩`.
pub fn parse_ambient(text: &str, n: usize, lambda: RingElement, field: &Field) -> Result<AmbientElement> {
    let terms = Parser::new(text, field).parse_all()?;
    let mut acc = AmbientElement::zero(n, lambda)?;
    for ((xd, ud), c) in terms {
        let mono = AmbientElement::x_pow(xd, n, lambda, field)?;
        let coeff = RingElement::monomial(c, ud);
        acc = acc.add(&mono.scale(&coeff, field), field)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trip() {
        let fd = Field::gf(3, 1).unwrap();
        let lam = RingElement::from_encs(&fd, [2, 0, 1, 0]).unwrap();
        let a = parse_ambient("2*x^3 + (u^3 + 2*u)*x + u^2 + 1", 4, lam, &fd).unwrap();
        assert_eq!(a.to_string(), "2*x^3 + (u^3 + 2*u)*x + u^2 + 1");
        assert_eq!(parse_ambient(&a.to_string(), 4, lam, &fd).unwrap(), a);
    }

    #[test]
    fn latex_style_and_reduction() {
        let fd = Field::gf(2, 1).unwrap();
        let lam = RingElement::from_encs(&fd, [1, 0, 1, 0]).unwrap();
        let a = parse_ambient("{x}^{4}{u}^{2}+x{u}^{2}+ ( {u}^{2}+1 ) x", 7, lam, &fd).unwrap();
        assert_eq!(a.to_string(), "u^2*x^4 + x");
        // x^7 = 1 + u^2, u^4 = 0
        let b = parse_ambient("x^7 + u^2 + u^4", 7, lam, &fd).unwrap();
        assert_eq!(b.to_string(), "1");
        assert_eq!(parse_ring("(u+1)^2", &fd).unwrap().to_string(), "u^2 + 1");
    }

    #[test]
    fn subtraction_and_errors() {
        let fd = Field::gf(5, 1).unwrap();
        assert_eq!(parse_ring("-u + 3", &fd).unwrap(), RingElement::from_encs(&fd, [3, 4, 0, 0]).unwrap());
        assert!(parse_ring("u + x", &fd).is_err());
        assert!(parse_ring("(u + 1", &fd).is_err());
        assert!(parse_ring("7", &fd).is_err());
        assert!(parse_ring("u ? 1", &fd).is_err());
    }
}
