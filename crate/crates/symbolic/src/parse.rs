//! Recursive-descent reader for polynomial expressions.
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*        (also '/' factor for rational functions)
//! factor   := '-'? base ('^' uint)?
//! base     := rational | ident | '(' expr ')'
//! rational := int ('/' uint)?
//! ident    := letter (letter | digit | '_')*
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::ParseError;
use crate::poly::{Chart, Polynomial};
use crate::ratfun::RatFun;
use crate::rational::Rational;

pub fn parse_poly(text: &str, chart: &Chart) -> Result<Polynomial, ParseError> {
    let out = parse(text, chart, false)?;
    Ok(out.as_polynomial().expect("division is disabled").clone())
}

/// Like [`parse_poly`] but a term may also divide by a factor, as in `(x + 1)/z2^2`.
pub fn parse_ratfun(text: &str, chart: &Chart) -> Result<RatFun, ParseError> {
    parse(text, chart, true)
}

fn parse(text: &str, chart: &Chart, allow_div: bool) -> Result<RatFun, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, chart, allow_div };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.syntax(format!("unexpected {:?}", p.src[p.pos] as char)));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    chart: &'a Chart,
    allow_div: bool,
}

impl Parser<'_> {
    fn syntax(&self, message: String) -> ParseError {
        ParseError::Syntax { position: self.pos, message }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFun, ParseError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFun, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = &acc * &rhs;
                }
                Some(b'/') if self.allow_div => {
                    self.pos += 1;
                    let at = self.pos;
                    let rhs = self.factor()?;
                    if rhs.is_zero() {
                        return Err(ParseError::Syntax { position: at, message: "division by zero".into() });
                    }
                    acc = &acc / &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFun, ParseError> {
        let negate = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let base = self.base()?;
        let mut out = base;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = {
                self.skip_ws();
                self.pos
            };
            match self.src.get(at) {
                Some(b'-') => {
                    return Err(ParseError::BadExponent {
                        position: at,
                        message: "negative exponent".into(),
                    })
                }
                Some(c) if c.is_ascii_digit() => {}
                _ => {
                    return Err(ParseError::BadExponent {
                        position: at,
                        message: "expected a non-negative integer exponent".into(),
                    })
                }
            }
            let digits = self.digits();
            let next_is_digit = matches!(self.src.get(self.pos + 1), Some(c) if c.is_ascii_digit());
            let fraction = match self.src.get(self.pos) {
                Some(b'.') => true,
                Some(b'/') => next_is_digit,
                _ => false,
            };
            if fraction {
                return Err(ParseError::BadExponent {
                    position: self.pos,
                    message: "fractional exponent".into(),
                });
            }
            let e: u32 = digits.parse().map_err(|_| ParseError::BadExponent {
                position: at,
                message: "exponent too large".into(),
            })?;
            out = out.pow(e);
        }
        Ok(if negate { -out } else { out })
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn base(&mut self) -> Result<RatFun, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digit run");
                let mut value = Rational::from_integer(num);
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                        // not a rational literal; a quotient is the caller's business
                        self.pos = save;
                        return Ok(RatFun::constant(self.chart, value));
                    }
                    let den: BigInt = self.digits().parse().expect("digit run");
                    if den.is_zero() {
                        return Err(self.syntax("zero denominator".into()));
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(RatFun::constant(self.chart, value))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                match self.chart.index_of(&name) {
                    Some(i) => Ok(RatFun::var(self.chart, i)),
                    None => Err(ParseError::UnknownIdentifier { name, position: start }),
                }
            }
            Some(c) => Err(self.syntax(format!("unexpected {:?}", c as char))),
            None => Err(self.syntax("unexpected end of input".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn chart() -> Chart {
        Chart::new(["x", "y0", "z0", "z1", "z2"])
    }

    #[test]
    fn reads_monomials_and_rationals() {
        let c = chart();
        let p = parse_poly("z2^2", &c).unwrap();
        assert_eq!(p, Polynomial::var(&c, 4).pow(2));
        let p = parse_poly("z2^2 + 3/2*z1*x", &c).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.eval(&[q(2), q(0), q(0), q(1), q(1)]), q(4));
        assert_eq!(parse_poly("-(x - 1/3)", &c).unwrap().eval(&[q(0), q(0), q(0), q(0), q(0)]), qf(1, 3));
    }

    #[test]
    fn reads_quotients() {
        let c = chart();
        let f = parse_ratfun("(x + 1)/z2^2 - 1/2*y0", &c).unwrap();
        assert_eq!(f.eval(&[q(1), q(4), q(0), q(0), q(2)]).unwrap(), qf(-3, 2));
        assert_eq!(parse_ratfun(&f.to_string(), &c).unwrap(), f);
        assert!(parse_ratfun("x/(z2 - z2)", &c).is_err());
        assert!(parse_poly("x/z2", &c).is_err());
        let g = parse_ratfun("z2^2/(1 + x^2)", &c).unwrap();
        assert_eq!(g.eval(&[q(1), q(0), q(0), q(0), q(2)]).unwrap(), q(2));
        assert!(parse_ratfun("x^2/3", &c).is_err());
    }

    #[test]
    fn reports_errors() {
        let c = chart();
        assert_eq!(
            parse_poly("z9", &c),
            Err(ParseError::UnknownIdentifier { name: "z9".into(), position: 0 })
        );
        assert!(matches!(parse_poly("x^-1", &c), Err(ParseError::BadExponent { .. })));
        assert!(matches!(parse_poly("x^1/2", &c), Err(ParseError::BadExponent { .. })));
        assert!(matches!(parse_poly("x +", &c), Err(ParseError::Syntax { position: 3, .. })));
        assert!(matches!(parse_poly("(x", &c), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("1/0", &c), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn printing_round_trips() {
        let c = chart();
        for text in ["z2^2 - 3/2*z1*x + 7", "-x*y0^3 + z0", "0"] {
            let p = parse_poly(text, &c).unwrap();
            assert_eq!(parse_poly(&p.to_string(), &c).unwrap(), p);
        }
    }
}
