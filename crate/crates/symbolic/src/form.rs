//! Differential forms with rational-function coefficients in coordinate bases.
//!
//! A term is keyed by a strictly increasing tuple of coordinate indices.
//! Evaluation follows `(α∧β)(X,Y) = α(X)β(Y) − α(Y)β(X)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::SymbolicError;
use crate::field::VectorField;
use crate::poly::Chart;
use crate::ratfun::RatFun;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiffForm {
    chart: Chart,
    degree: usize,
    terms: BTreeMap<Vec<usize>, RatFun>,
}

/// Sorts `indices`, returning the permutation sign, or `None` on a repeated index.
fn sort_with_sign(indices: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if indices.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

impl DiffForm {
    pub fn zero(chart: &Chart, degree: usize) -> Self {
        DiffForm { chart: chart.clone(), degree, terms: BTreeMap::new() }
    }

    /// The 0-form `f`.
    pub fn function(f: RatFun) -> Self {
        let mut w = Self::zero(f.chart(), 0);
        w.add_term(vec![], f);
        w
    }

    /// The 1-form `d(chart[i])`.
    pub fn dx(chart: &Chart, i: usize) -> Self {
        let mut w = Self::zero(chart, 1);
        w.add_term(vec![i], RatFun::one(chart));
        w
    }

    /// `f · dx_{i_1} ∧ … ∧ dx_{i_k}` for an arbitrary index order.
    pub fn monomial(f: RatFun, indices: &[usize]) -> Self {
        let chart = f.chart().clone();
        let mut w = Self::zero(&chart, indices.len());
        let mut idx = indices.to_vec();
        if let Some(sign) = sort_with_sign(&mut idx) {
            w.add_term(idx, f.scale(&Rational::from_integer(sign.into())));
        }
        w
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &RatFun)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, indices: &[usize]) -> RatFun {
        self.terms.get(indices).cloned().unwrap_or_else(|| RatFun::zero(&self.chart))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, indices: Vec<usize>, c: RatFun) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(indices.len(), self.degree);
        let next = match self.terms.remove(&indices) {
            Some(old) => &old + &c,
            None => c,
        };
        if !next.is_zero() {
            self.terms.insert(indices, next);
        }
    }

    fn check(&self, other: &DiffForm) -> Result<(), SymbolicError> {
        if self.chart != other.chart {
            return Err(SymbolicError::ChartMismatch(format!(
                "{:?} vs {:?}",
                self.chart.names(),
                other.chart.names()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &DiffForm) -> Result<DiffForm, SymbolicError> {
        self.check(other)?;
        if self.degree != other.degree {
            return Err(SymbolicError::DegreeMismatch(format!(
                "adding forms of degree {} and {}",
                self.degree, other.degree
            )));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DiffForm) -> Result<DiffForm, SymbolicError> {
        self.add(&other.scale(&-Rational::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Rational) -> DiffForm {
        let mut out = Self::zero(&self.chart, self.degree);
        for (k, a) in &self.terms {
            out.add_term(k.clone(), a.scale(c));
        }
        out
    }

    pub fn mul_fn(&self, f: &RatFun) -> DiffForm {
        let mut out = Self::zero(&self.chart, self.degree);
        for (k, a) in &self.terms {
            out.add_term(k.clone(), a * f);
        }
        out
    }

    pub fn wedge(&self, other: &DiffForm) -> Result<DiffForm, SymbolicError> {
        self.check(other)?;
        let mut out = Self::zero(&self.chart, self.degree + other.degree);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut idx: Vec<usize> = ka.iter().chain(kb).copied().collect();
                if let Some(sign) = sort_with_sign(&mut idx) {
                    out.add_term(idx, (ca * cb).scale(&Rational::from_integer(sign.into())));
                }
            }
        }
        Ok(out)
    }

    pub fn exterior_derivative(&self) -> DiffForm {
        let mut out = Self::zero(&self.chart, self.degree + 1);
        for (k, c) in &self.terms {
            for j in 0..self.chart.len() {
                if k.contains(&j) {
                    continue;
                }
                let dc = c.derivative(j);
                if dc.is_zero() {
                    continue;
                }
                let mut idx = Vec::with_capacity(k.len() + 1);
                idx.push(j);
                idx.extend(k);
                let sign = sort_with_sign(&mut idx).expect("distinct indices");
                out.add_term(idx, dc.scale(&Rational::from_integer(sign.into())));
            }
        }
        out
    }

    /// Interior product `ι_X ω`.
    pub fn contract(&self, x: &VectorField) -> Result<DiffForm, SymbolicError> {
        if x.chart() != &self.chart {
            return Err(SymbolicError::ChartMismatch("contracting with a field on another chart".into()));
        }
        if self.degree == 0 {
            return Ok(Self::zero(&self.chart, 0));
        }
        let mut out = Self::zero(&self.chart, self.degree - 1);
        for (k, c) in &self.terms {
            for (s, &i) in k.iter().enumerate() {
                let xi = x.component(i);
                if xi.is_zero() {
                    continue;
                }
                let mut rest = k.clone();
                rest.remove(s);
                let t = c * xi;
                out.add_term(rest, if s % 2 == 0 { t } else { -t });
            }
        }
        Ok(out)
    }

    /// `ω(X_1, …, X_k)` as a function.
    pub fn evaluate(&self, fields: &[&VectorField]) -> Result<RatFun, SymbolicError> {
        if fields.len() != self.degree {
            return Err(SymbolicError::DegreeMismatch(format!(
                "evaluating a {}-form on {} fields",
                self.degree,
                fields.len()
            )));
        }
        let mut w = self.clone();
        for x in fields {
            w = w.contract(x)?;
        }
        Ok(w.coefficient(&[]))
    }

    pub fn rechart(&self, target: &Chart) -> Option<DiffForm> {
        let mut out = Self::zero(target, self.degree);
        for (k, c) in &self.terms {
            let mut idx = Vec::with_capacity(k.len());
            for &i in k {
                idx.push(target.index_of(self.chart.name(i))?);
            }
            let sign = sort_with_sign(&mut idx)?;
            out.add_term(idx, c.rechart(target)?.scale(&Rational::from_integer(sign.into())));
        }
        Some(out)
    }
}

impl fmt::Display for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let basis: Vec<String> = k.iter().map(|&i| format!("d{}", self.chart.name(i))).collect();
                let basis = basis.join("^");
                match (c.constant_value(), basis.is_empty()) {
                    (_, true) => format!("({c})"),
                    (Some(v), false) if v == Rational::from_integer(1.into()) => basis,
                    _ => format!("({c})*{basis}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn chart() -> Chart {
        Chart::new(["x", "y", "z", "z1", "z2"])
    }

    fn f(c: &Chart, s: &str) -> RatFun {
        RatFun::from_poly(parse_poly(s, c).unwrap())
    }

    #[test]
    fn d_of_z1_dx() {
        let c = chart();
        let w = DiffForm::dx(&c, 0).mul_fn(&f(&c, "z1"));
        let dw = w.exterior_derivative();
        assert_eq!(dw, DiffForm::monomial(f(&c, "1"), &[3, 0]));
    }

    #[test]
    fn structure_equation_of_omega2() {
        // ω2 = dz1 − z2 dx, ω1 = −dx, ω1' = dz2: dω2 = ω1' ∧ ω1
        let c = chart();
        let w2 = DiffForm::dx(&c, 3).sub(&DiffForm::dx(&c, 0).mul_fn(&f(&c, "z2"))).unwrap();
        let w1 = DiffForm::dx(&c, 0).scale(&-Rational::from_integer(1.into()));
        let w1p = DiffForm::dx(&c, 4);
        assert_eq!(w2.exterior_derivative(), w1p.wedge(&w1).unwrap());
    }

    #[test]
    fn dx_wedge_dx_vanishes() {
        let c = chart();
        assert!(DiffForm::dx(&c, 0).wedge(&DiffForm::dx(&c, 0)).unwrap().is_zero());
    }

    #[test]
    fn evaluation_convention() {
        let c = chart();
        let w = DiffForm::dx(&c, 0).wedge(&DiffForm::dx(&c, 2)).unwrap();
        let x = VectorField::coordinate(&c, 0);
        let z = VectorField::coordinate(&c, 2);
        assert!(w.evaluate(&[&x, &z]).unwrap().is_one());
        assert_eq!(w.evaluate(&[&z, &x]).unwrap(), -RatFun::one(&c));
    }
}
