//! Text input for polynomials: either an ascending coefficient list
//! `[c0,c1,...]` or an expression such as `X^4 + X^3 + w*X^2 + 1` or
//! `(X-5)(X-3)`. Products follow the ring's (noncommutative) order.

use crate::error::{Error, Result};
use crate::linalg::split_top_level;
use crate::poly::{RingCtx, SkewPoly};

pub fn parse_poly(ctx: &RingCtx, text: &str) -> Result<SkewPoly> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if t.starts_with('[') && t.ends_with(']') && matching_close(&t, 0) == Some(t.len() - 1) {
        let items = split_top_level(&t[1..t.len() - 1]);
        let coeffs = items.iter().map(|e| ctx.field().parse(e)).collect::<Result<Vec<_>>>()?;
        return ctx.poly(coeffs);
    }
    let mut p = Parser { s: t.as_bytes(), pos: 0, ctx };
    let out = p.expr()?;
    if p.pos != p.s.len() {
        return Err(Error::Parse(format!("unexpected `{}` at offset {}", &t[p.pos..], p.pos)));
    }
    Ok(out)
}

fn matching_close(s: &str, open: usize) -> Option<usize> {
    let mut depth = 0;
    for (i, ch) in s.char_indices().skip(open) {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    ctx: &'a RingCtx,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<SkewPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(op) = self.peek().filter(|c| *c == b'+' || *c == b'-') {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == b'+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SkewPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c == b'(' || c == b'[' || c == b'X' || c == b'x' || c == b'w' || c.is_ascii_digit() => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<SkewPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| Error::Parse("exponent too large".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected a number at offset {start}")));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::Parse("number too large".into()))
    }

    fn atom(&mut self) -> Result<SkewPoly> {
        let ctx = self.ctx;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::Parse(format!("missing `)` at offset {}", self.pos)));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'X') | Some(b'x') => {
                self.pos += 1;
                Ok(ctx.x())
            }
            Some(b'w') => {
                self.pos += 1;
                if ctx.field().is_prime_field() {
                    return Err(Error::Parse("`w` is not defined over a prime field".into()));
                }
                Ok(ctx.constant(ctx.field().primitive()))
            }
            Some(b'[') => {
                let text = std::str::from_utf8(self.s).expect("ascii input");
                let close = matching_close(text, self.pos).ok_or_else(|| Error::Parse("unbalanced `[`".into()))?;
                let c = ctx.field().parse(&text[self.pos..=close])?;
                self.pos = close + 1;
                Ok(ctx.constant(c))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(ctx.constant(ctx.field().from_int((n % ctx.field().p() as u64) as i64)))
            }
            _ => Err(Error::Parse(format!("unexpected input at offset {}", self.pos))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Elem, Field};

    #[test]
    fn expressions() {
        let f7 = Field::new(7, 1, None).unwrap();
        let c = RingCtx::commutative(&f7);
        assert_eq!(parse_poly(&c, "X^6-1").unwrap(), c.poly_from_ints(&[-1, 0, 0, 0, 0, 0, 1]));
        assert_eq!(parse_poly(&c, "(X-5)(X-3)").unwrap(), c.poly_from_ints(&[1, 6, 1]));
        assert_eq!(parse_poly(&c, "[1, 6, 1]").unwrap(), c.poly_from_ints(&[1, 6, 1]));
        assert_eq!(parse_poly(&c, "-x + 2*3").unwrap(), c.poly_from_ints(&[6, -1]));
        assert!(parse_poly(&c, "X^").is_err());
        assert!(parse_poly(&c, "(X").is_err());
        assert!(parse_poly(&c, "w").is_err());
    }

    #[test]
    fn extension_coefficients() {
        let f8 = Field::new(2, 3, None).unwrap();
        let c = RingCtx::new(&f8, 1, Elem::ZERO).unwrap();
        let w = f8.primitive();
        let f = parse_poly(&c, "X^4 + X^3 + w*X^2 + 1").unwrap();
        assert_eq!(f, c.poly(vec![Elem::ONE, Elem::ZERO, w, Elem::ONE, Elem::ONE]).unwrap());
        assert_eq!(parse_poly(&c, "[1,0,w,1,1]").unwrap(), f);
        assert_eq!(parse_poly(&c, &f.pretty()).unwrap(), f);
        assert_eq!(parse_poly(&c, "[[1,0,0],0,[0,1,0],1,1]").unwrap(), f);
        // X w = w^2 X when theta squares
        assert_eq!(parse_poly(&c, "X*w").unwrap(), parse_poly(&c, "w^2*X").unwrap());
    }
}
