//! Text forms accepted on the command line: polynomials in named
//! variables and points written as comma lists of rationals.

use crate::poly::Poly;
use crate::rational::{parse_q, Q};
use crate::{Error, Result};

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek(&mut self) -> Option<char> {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
        self.chars.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        let s: String = self.chars.iter().collect();
        Error::Input(format!("polynomial {s:?}: {what} at offset {}", self.pos))
    }

    fn expr(&mut self) -> Result<Poly> {
        let nvars = self.names.len();
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        debug_assert_eq!(acc.nvars(), nvars);
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                // implicit product: "2g1", "(g1+h)(g1-h)"
                Some(c) if c == '(' || c.is_alphabetic() => acc = &acc * &self.power()?,
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let e: String = self.chars[start..self.pos].iter().collect();
            let e: u32 = e.parse().map_err(|_| self.err("expected an exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let nvars = self.names.len();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let p = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit() || *c == '.' || *c == '/') {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                let q = parse_q(&s).ok_or_else(|| self.err("bad number"))?;
                Ok(Poly::constant(nvars, q))
            }
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_alphanumeric() || *c == '_') {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                let i = self
                    .names
                    .iter()
                    .position(|n| *n == s)
                    .ok_or_else(|| Error::Input(format!("unknown variable {s:?}; known: {}", self.names.join(", "))))?;
                Ok(Poly::var(nvars, i))
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

pub fn parse_poly(s: &str, names: &[String]) -> Result<Poly> {
    let mut p = Parser { chars: s.chars().collect(), pos: 0, names };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// "1/20,-1/20" or "(1/20, -1/20)".
pub fn parse_point(s: &str, dim: usize) -> Result<Vec<Q>> {
    let body = s.trim().trim_start_matches('(').trim_end_matches(')');
    let out: Vec<Q> = body
        .split(',')
        .map(|x| parse_q(x.trim()).ok_or_else(|| Error::Input(format!("point {s:?}: {x:?} is not rational"))))
        .collect::<Result<_>>()?;
    if out.len() != dim {
        return Err(Error::Input(format!("point {s:?} has {} coordinates, expected {dim}", out.len())));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::default_names;
    use crate::rational::{q, qi};

    #[test]
    fn polynomials() {
        let names = default_names(3);
        let g1 = Poly::var(3, 0);
        let h = Poly::var(3, 2);
        let want = &g1 * &(&g1 - &h.scale(&qi(2)));
        assert_eq!(parse_poly("g1*(g1 - 2*h)", &names).unwrap(), want);
        assert_eq!(parse_poly("g1^2-2g1 h", &names).unwrap(), want);
        assert_eq!(parse_poly(&want.fmt_with(&names), &names).unwrap(), want);
        assert_eq!(parse_poly("-1/2", &names).unwrap(), Poly::constant(3, q(-1, 2)));
        assert!(parse_poly("g4", &names).is_err());
        assert!(parse_poly("g1 +", &names).is_err());
        assert!(parse_poly("(g1", &names).is_err());
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("(1/20, -1/20)", 2).unwrap(), vec![q(1, 20), q(-1, 20)]);
        assert!(parse_point("1,2,3", 2).is_err());
        assert!(parse_point("a,b", 2).is_err());
    }
}
