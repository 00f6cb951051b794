//! Recursive-descent parser for polynomial expressions such as
//! `y^2*z - x^2*t`, `(x + 1)^3/2` or `3/4*x*y`.

use num_bigint::BigInt;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::poly::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push((Tok::Num(text.parse().unwrap()), start + 1));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), start + 1));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i + 1));
            i += 1;
        } else {
            return Err(AlgebraError::Parse(format!("column {}: unexpected character `{c}`", i + 1)));
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a Ring<F>,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    len: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.len + 1)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(AlgebraError::Parse(format!("column {}: {msg}", self.col())))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let col = self.col();
                let d = self.unary()?;
                if !d.is_unit() {
                    return Err(AlgebraError::Parse(format!(
                        "column {col}: division is only allowed by nonzero constants"
                    )));
                }
                let inv = self.ring.field().inv(&d.terms()[0].coef).unwrap();
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial<F>> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.primary()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| AlgebraError::Parse("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                _ => self.err("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Polynomial<F>> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(self.ring.constant(self.ring.field().from_bigint(&n)))
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(self.ring.var(i))
                }
                None => self.err(&format!("unknown variable `{name}`")),
            },
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_polynomial<F: Field>(ring: &Ring<F>, s: &str) -> Result<Polynomial<F>> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(AlgebraError::Parse("empty expression".into()));
    }
    let mut p = Parser { ring, toks, pos: 0, len: s.chars().count() };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use crate::field::Rationals;
    use crate::poly::Ring;

    #[test]
    fn parses_nested_expressions() {
        let r = Ring::new(Rationals, &["x", "y"]).unwrap();
        let p = r.parse("(x + y)^2 - 2*x*y").unwrap();
        assert_eq!(p.to_string(), "x^2 + y^2");
        let q = r.parse("3/4*x - -y/2").unwrap();
        assert_eq!(q.to_string(), "3/4*x + 1/2*y");
    }

    #[test]
    fn reports_columns() {
        let r = Ring::new(Rationals, &["x", "y"]).unwrap();
        let e = r.parse("x + w").unwrap_err().to_string();
        assert!(e.contains("column 5"), "{e}");
        assert!(r.parse("x / y").is_err());
        assert!(r.parse("x +").is_err());
        assert!(r.parse("(x").is_err());
        assert!(r.parse("x $ y").is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        let r = Ring::new(Rationals, &["x", "y", "z", "t"]).unwrap();
        for s in ["y^2*z - x^2*t", "-3/2*x*y^4*t + z^4 - 7", "0", "x"] {
            let p = r.parse(s).unwrap();
            assert_eq!(r.parse(&p.to_string()).unwrap(), p);
        }
    }
}
