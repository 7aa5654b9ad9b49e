//! Rational functions in lowest terms with a monic denominator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::SymbolicError;
use crate::poly::{forward_owned, gcd, Chart, Polynomial};
use crate::rational::Rational;

/// Default bound on the total degree of numerator and denominator.
pub const DEFAULT_DEGREE_BOUND: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Polynomial,
    den: Polynomial,
}

impl RatFun {
    /// `num / den` reduced to lowest terms. Panics on a zero denominator.
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero(num.chart());
        }
        if let Some(c) = den.constant_value() {
            let chart = num.chart().clone();
            return RatFun { num: num.scale(&c.recip()), den: Polynomial::one(&chart) };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coefficient();
        if lc.is_one() {
            RatFun { num, den }
        } else {
            let inv = lc.recip();
            RatFun { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn checked_new(num: Polynomial, den: Polynomial) -> Result<Self, SymbolicError> {
        if den.is_zero() {
            return Err(SymbolicError::DivisionByZero);
        }
        Ok(Self::new(num, den))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let chart = p.chart().clone();
        RatFun { num: p, den: Polynomial::one(&chart) }
    }

    pub fn zero(chart: &Chart) -> Self {
        Self::from_poly(Polynomial::zero(chart))
    }

    pub fn one(chart: &Chart) -> Self {
        Self::from_poly(Polynomial::one(chart))
    }

    pub fn constant(chart: &Chart, c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(chart, c))
    }

    pub fn var(chart: &Chart, i: usize) -> Self {
        Self::from_poly(Polynomial::var(chart, i))
    }

    pub fn chart(&self) -> &Chart {
        self.num.chart()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_polynomial() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.num.total_degree().max(self.den.total_degree())
    }

    /// Fails when numerator or denominator exceeds the total degree `bound`.
    pub fn check_degree(&self, bound: u32) -> Result<(), SymbolicError> {
        let degree = self.total_degree();
        if degree > bound {
            return Err(SymbolicError::DegreeBound { degree, bound });
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.chart());
        }
        RatFun { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        if self.is_polynomial() {
            return Self::from_poly(&self.num * p);
        }
        Self::new(&self.num * p, self.den.clone())
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::new(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFun { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn derivative(&self, var: usize) -> Self {
        if self.is_polynomial() {
            return Self::from_poly(self.num.derivative(var));
        }
        let n = &(&self.num.derivative(var) * &self.den) - &(&self.num * &self.den.derivative(var));
        Self::new(n, &self.den * &self.den)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, SymbolicError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(SymbolicError::Pole);
        }
        Ok(self.num.eval(point) / d)
    }

    pub fn substitute(&self, var: usize, value: &RatFun) -> Self {
        if value.is_polynomial() {
            return Self::new(self.num.substitute(var, &value.num), self.den.substitute(var, &value.num));
        }
        // homogenize by the denominator of value raised to the max degree in var
        let d = self.num.degree_in(var).max(self.den.degree_in(var));
        let hom = |p: &Polynomial| {
            let mut acc = Polynomial::zero(p.chart());
            for (m, c) in p.terms() {
                let e = m.exponents()[var];
                let mut k = m.exponents().to_vec();
                k[var] = 0;
                let base = Polynomial::term(p.chart(), crate::poly::Monomial::from_exponents(k), c.clone());
                let t = &(&base * &value.num.pow(e)) * &value.den.pow(d - e);
                acc = acc + t;
            }
            acc
        };
        Self::new(hom(&self.num), hom(&self.den))
    }

    pub fn rechart(&self, target: &Chart) -> Option<Self> {
        Some(RatFun { num: self.num.rechart(target)?, den: self.den.rechart(target)? })
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Polynomial| {
            if p.num_terms() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            if self.is_polynomial() {
                return RatFun::from_poly(&self.num + &rhs.num);
            }
            return RatFun::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatFun::from_poly(&self.num * &rhs.num);
        }
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    /// Panics when dividing by zero.
    fn div(self, rhs: &RatFun) -> RatFun {
        self * &rhs.recip().expect("division by the zero rational function")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

forward_owned!(Add, add, RatFun);
forward_owned!(Sub, sub, RatFun);
forward_owned!(Mul, mul, RatFun);
forward_owned!(Div, div, RatFun);

impl From<Polynomial> for RatFun {
    fn from(p: Polynomial) -> Self {
        RatFun::from_poly(p)
    }
}

/// `Σ a_i b_i`.
pub fn dot(a: &[RatFun], b: &[RatFun]) -> RatFun {
    assert_eq!(a.len(), b.len());
    let chart = a.first().map(|x| x.chart().clone()).expect("dot of empty vectors");
    let mut acc = RatFun::zero(&chart);
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

impl RatFun {
    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn normalizes_common_factors() {
        let c = Chart::new(["x", "y"]);
        let x = Polynomial::var(&c, 0);
        let y = Polynomial::var(&c, 1);
        let num = &(&x * &y) + &y.scale(&q(2));
        let den = (&x + &Polynomial::constant(&c, q(2))).scale(&q(-3));
        let r = RatFun::new(num, den);
        assert!(r.is_polynomial());
        assert_eq!(r.numerator(), &y.scale(&Rational::new((-1).into(), 3.into())));
    }

    #[test]
    fn quotient_rule() {
        let c = Chart::new(["x"]);
        let x = RatFun::var(&c, 0);
        let r = &RatFun::one(&c) / &x;
        let d = r.derivative(0);
        assert_eq!(d, -(&RatFun::one(&c) / &(&x * &x)));
        assert_eq!(d.eval(&[q(2)]).unwrap(), Rational::new((-1).into(), 4.into()));
        assert!(r.eval(&[q(0)]).is_err());
    }
}
