//! Vector fields with rational-function components.

use std::fmt;

use crate::error::SymbolicError;
use crate::poly::Chart;
use crate::ratfun::RatFun;
use crate::rational::{format_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorField {
    chart: Chart,
    components: Vec<RatFun>,
}

impl VectorField {
    pub fn new(chart: &Chart, components: Vec<RatFun>) -> Self {
        assert_eq!(components.len(), chart.len(), "one component per coordinate");
        VectorField { chart: chart.clone(), components }
    }

    pub fn zero(chart: &Chart) -> Self {
        Self::new(chart, vec![RatFun::zero(chart); chart.len()])
    }

    /// The coordinate field `∂/∂(chart[i])`.
    pub fn coordinate(chart: &Chart, i: usize) -> Self {
        let mut v = Self::zero(chart);
        v.components[i] = RatFun::one(chart);
        v
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn components(&self) -> &[RatFun] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &RatFun {
        &self.components[i]
    }

    pub fn set_component(&mut self, i: usize, value: RatFun) {
        self.components[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(RatFun::is_zero)
    }

    fn check_chart(&self, other: &Chart) -> Result<(), SymbolicError> {
        if &self.chart != other {
            return Err(SymbolicError::ChartMismatch(format!(
                "{:?} vs {:?}",
                self.chart.names(),
                other.names()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &VectorField) -> Result<VectorField, SymbolicError> {
        self.check_chart(&other.chart)?;
        Ok(VectorField {
            chart: self.chart.clone(),
            components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &VectorField) -> Result<VectorField, SymbolicError> {
        self.add(&other.scale(&-Rational::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Rational) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            components: self.components.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Multiplies every component by the function `f`.
    pub fn mul_fn(&self, f: &RatFun) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            components: self.components.iter().map(|a| a * f).collect(),
        }
    }

    /// `Σ_j X^j ∂_j f`.
    pub fn lie_derivative(&self, f: &RatFun) -> Result<RatFun, SymbolicError> {
        self.check_chart(f.chart())?;
        let mut acc = RatFun::zero(&self.chart);
        for (j, xj) in self.components.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            let df = f.derivative(j);
            if !df.is_zero() {
                acc = &acc + &(xj * &df);
            }
        }
        Ok(acc)
    }

    /// `[X, Y]^k = Σ_j (X^j ∂_j Y^k − Y^j ∂_j X^k)`.
    pub fn lie_bracket(&self, other: &VectorField) -> Result<VectorField, SymbolicError> {
        self.check_chart(&other.chart)?;
        let mut components = Vec::with_capacity(self.chart.len());
        for k in 0..self.chart.len() {
            let a = self.lie_derivative(&other.components[k])?;
            let b = other.lie_derivative(&self.components[k])?;
            components.push(&a - &b);
        }
        Ok(VectorField { chart: self.chart.clone(), components })
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Vec<Rational>, SymbolicError> {
        self.components.iter().map(|c| c.eval(point)).collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.components.iter().map(RatFun::total_degree).max().unwrap_or(0)
    }

    pub fn check_degree(&self, bound: u32) -> Result<(), SymbolicError> {
        self.components.iter().try_for_each(|c| c.check_degree(bound))
    }

    /// Re-expresses the field over a larger chart; new coordinates get zero components.
    pub fn rechart(&self, target: &Chart) -> Option<VectorField> {
        let mut components = vec![RatFun::zero(target); target.len()];
        for (i, c) in self.components.iter().enumerate() {
            let j = target.index_of(self.chart.name(i))?;
            components[j] = c.rechart(target)?;
        }
        Some(VectorField { chart: target.clone(), components })
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = format!("d/d{}", self.chart.name(i));
            match c.constant_value() {
                Some(v) if v == Rational::from_integer(1.into()) => parts.push(d),
                Some(v) => parts.push(format!("{}*{}", format_rational(&v), d)),
                None => parts.push(format!("({c})*{d}")),
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rational::q;

    #[test]
    fn bracket_of_coordinate_frame() {
        let c = Chart::new(["x", "z1", "z2"]);
        let f = |s: &str| RatFun::from_poly(parse_poly(s, &c).unwrap());
        let x = VectorField::new(&c, vec![f("1"), f("z2"), f("0")]);
        let y = VectorField::coordinate(&c, 2);
        let b = x.lie_bracket(&y).unwrap();
        assert_eq!(b, VectorField::coordinate(&c, 1).scale(&q(-1)));
    }

    #[test]
    fn lie_derivative_of_square() {
        let c = Chart::new(["x"]);
        let f = RatFun::from_poly(parse_poly("x^2", &c).unwrap());
        let d = VectorField::coordinate(&c, 0).lie_derivative(&f).unwrap();
        assert_eq!(d, RatFun::from_poly(parse_poly("2*x", &c).unwrap()));
        let k = RatFun::constant(&c, q(5));
        assert!(VectorField::coordinate(&c, 0).lie_derivative(&k).unwrap().is_zero());
    }

    #[test]
    fn chart_mismatch_is_an_error() {
        let a = VectorField::coordinate(&Chart::new(["x"]), 0);
        let b = VectorField::coordinate(&Chart::new(["y"]), 0);
        assert!(a.lie_bracket(&b).is_err());
    }
}
