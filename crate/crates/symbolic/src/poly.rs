//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are keyed by exponent vectors in graded-lexicographic order; the first
//! chart variable is the most significant. Printing runs from the largest term down.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::rational::{format_rational, Rational};

/// Ordered coordinate names shared by polynomials, fields and forms.
#[derive(Clone, Debug)]
pub struct Chart(Arc<Vec<String>>);

impl Chart {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Chart(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// The chart with extra coordinates appended.
    pub fn extended<S: Into<String>>(&self, extra: impl IntoIterator<Item = S>) -> Chart {
        let mut names = self.0.as_ref().clone();
        names.extend(extra.into_iter().map(Into::into));
        Chart(Arc::new(names))
    }
}

impl PartialEq for Chart {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Chart {}

impl Hash for Chart {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

/// Exponent vector; ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    chart: Chart,
    terms: BTreeMap<Monomial, Rational>,
}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.chart.hash(state);
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl Polynomial {
    pub fn zero(chart: &Chart) -> Self {
        Polynomial { chart: chart.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(chart: &Chart, c: Rational) -> Self {
        let mut p = Self::zero(chart);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(chart.len()), c);
        }
        p
    }

    pub fn one(chart: &Chart) -> Self {
        Self::constant(chart, Rational::one())
    }

    /// The coordinate function of variable `i`.
    pub fn var(chart: &Chart, i: usize) -> Self {
        Self::term(chart, Monomial::var(chart.len(), i), Rational::one())
    }

    pub fn term(chart: &Chart, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), chart.len(), "monomial length does not match chart");
        let mut p = Self::zero(chart);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(chart: &Chart, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(chart);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    /// Largest term in graded-lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        assert_eq!(m.0.len(), self.chart.len(), "monomial length does not match chart");
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.chart);
        }
        Polynomial {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.chart);
        }
        Polynomial {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.chart);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(&self.chart);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut k = m.0.clone();
            k[var] -= 1;
            out.terms.insert(Monomial(k), c * Rational::from_integer(e.into()));
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.chart.len(), "point length does not match chart");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Replaces variable `var` by the polynomial `value` (same chart).
    pub fn substitute(&self, var: usize, value: &Polynomial) -> Self {
        let mut out = Self::zero(&self.chart);
        let mut powers: Vec<Polynomial> = vec![Self::one(&self.chart)];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut k = m.0.clone();
            k[var] = 0;
            out = out + powers[e].mul_monomial(&Monomial(k), c);
        }
        out
    }

    /// Re-expresses this polynomial over a chart containing all of its used variables.
    pub fn rechart(&self, target: &Chart) -> Option<Self> {
        let mut map = Vec::with_capacity(self.chart.len());
        for name in self.chart.names() {
            map.push(target.index_of(name));
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    e[map[i]?] += k;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Some(out)
    }

    /// Exact quotient when `divisor` divides `self`, otherwise `None`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if let Some(c) = divisor.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (lm, lc) = divisor.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.chart);
        while let Some((rm, rc)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&rm) {
                return None;
            }
            let qm = lm.quotient_of(&rm);
            let qc = &rc / &lc;
            rem = rem - divisor.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Coefficients of `self` viewed as a polynomial in `var`.
    fn to_univariate(&self, var: usize) -> Vec<Polynomial> {
        let d = self.degree_in(var) as usize;
        let mut coeffs = vec![Self::zero(&self.chart); d + 1];
        for (m, c) in &self.terms {
            let mut k = m.0.clone();
            let e = k[var] as usize;
            k[var] = 0;
            coeffs[e].terms.insert(Monomial(k), c.clone());
        }
        coeffs
    }

    fn from_univariate(chart: &Chart, var: usize, coeffs: &[Polynomial]) -> Self {
        let mut out = Self::zero(chart);
        for (e, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut k = m.0.clone();
                k[var] += e as u32;
                out.add_term(Monomial(k), a.clone());
            }
        }
        out
    }

}

/// Monic greatest common divisor. `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    assert_eq!(a.chart, b.chart, "gcd over different charts");
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(&a.chart);
    }
    if a == b {
        return a.monic();
    }
    // a variable missing from one side cannot occur in the gcd
    if let Some(var) = (0..a.chart.len()).find(|&v| a.uses_var(v) != b.uses_var(v)) {
        let (with, without) = if a.uses_var(var) { (a, b) } else { (b, a) };
        return gcd(&content_of(&with.to_univariate(var)), without);
    }
    let Some(var) = (0..a.chart.len()).find(|&v| a.uses_var(v) || b.uses_var(v)) else {
        return Polynomial::one(&a.chart);
    };
    let (ca, pa) = content_and_primitive(a, var);
    let (cb, pb) = content_and_primitive(b, var);
    let c = gcd(&ca, &cb);
    let g = primitive_prs(pa.to_univariate(var), pb.to_univariate(var), &a.chart);
    (&c * &Polynomial::from_univariate(&a.chart, var, &g)).monic()
}

fn content_of(coeffs: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::zero(coeffs[0].chart());
    for c in coeffs {
        acc = gcd(&acc, c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn content_and_primitive(p: &Polynomial, var: usize) -> (Polynomial, Polynomial) {
    let content = content_of(&p.to_univariate(var));
    let prim = p.div_exact(&content).expect("content divides its polynomial");
    (content, prim)
}

fn trim(coeffs: &mut Vec<Polynomial>) {
    while coeffs.len() > 1 && coeffs.last().is_some_and(Polynomial::is_zero) {
        coeffs.pop();
    }
}

fn primitive_part(coeffs: Vec<Polynomial>) -> Vec<Polynomial> {
    let content = content_of(&coeffs);
    let out: Vec<Polynomial> = coeffs
        .iter()
        .map(|c| c.div_exact(&content).expect("content divides coefficient"))
        .collect();
    let lead = out.last().map(|c| c.leading_coefficient()).unwrap_or_else(Rational::one);
    if lead.is_zero() || lead.is_one() {
        return out;
    }
    let inv = lead.recip();
    out.iter().map(|c| c.scale(&inv)).collect()
}

/// Pseudo-remainder of `a` by `b` (both univariate over the remaining variables).
fn pseudo_remainder(a: &[Polynomial], b: &[Polynomial], chart: &Chart) -> Vec<Polynomial> {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<Polynomial> = r.iter().map(|c| c * lcb).collect();
        for (i, bc) in b.iter().enumerate() {
            let t = &lcr * bc;
            next[i + shift] = &next[i + shift] - &t;
        }
        debug_assert!(next[dr].is_zero());
        next.pop();
        if next.is_empty() {
            next.push(Polynomial::zero(chart));
        }
        trim(&mut next);
        r = next;
    }
    r
}

fn primitive_prs(a: Vec<Polynomial>, b: Vec<Polynomial>, chart: &Chart) -> Vec<Polynomial> {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if b.len() == 1 {
        return vec![Polynomial::one(chart)];
    }
    a = primitive_part(a);
    b = primitive_part(b);
    loop {
        let r = pseudo_remainder(&a, &b, chart);
        if r.len() == 1 && r[0].is_zero() {
            return b;
        }
        if r.len() == 1 {
            return vec![Polynomial::one(chart)];
        }
        a = b;
        b = primitive_part(r);
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.chart.name(i).to_string()
                    } else {
                        format!("{}^{}", self.chart.name(i), e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.chart, rhs.chart, "adding polynomials over different charts");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.chart, rhs.chart, "subtracting polynomials over different charts");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.chart, rhs.chart, "multiplying polynomials over different charts");
        let mut out = Polynomial::zero(&self.chart);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident, $ty:ty) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}
pub(crate) use forward_owned;

forward_owned!(Add, add, Polynomial);
forward_owned!(Sub, sub, Polynomial);
forward_owned!(Mul, mul, Polynomial);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn chart() -> Chart {
        Chart::new(["x", "y", "z"])
    }

    fn x(c: &Chart, i: usize) -> Polynomial {
        Polynomial::var(c, i)
    }

    #[test]
    fn grlex_printing() {
        let c = chart();
        let p = &(&x(&c, 2) * &x(&c, 2)) + &x(&c, 0).scale(&qf(3, 2)) - Polynomial::one(&c);
        assert_eq!(p.to_string(), "z^2 + 3/2*x - 1");
    }

    #[test]
    fn gcd_of_products() {
        let c = chart();
        let (a, b, z) = (x(&c, 0), x(&c, 1), x(&c, 2));
        let common = &(&a * &b) + &z.scale(&q(2));
        let f = &common * &(&a + &Polynomial::one(&c));
        let g = &common * &(&b - &z);
        let h = gcd(&f, &g);
        assert_eq!(h, common.monic());
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn gcd_with_variable_only_in_one_argument() {
        let c = chart();
        let (a, b) = (x(&c, 0), x(&c, 1));
        let f = &(&a * &b) + &b;
        assert_eq!(gcd(&f, &b), b);
    }

    #[test]
    fn substitution_and_derivative() {
        let c = chart();
        let (a, b) = (x(&c, 0), x(&c, 1));
        let p = &(&a * &a) * &b;
        assert_eq!(p.derivative(0), (&a * &b).scale(&q(2)));
        let s = p.substitute(0, &(&b + &Polynomial::one(&c)));
        assert_eq!(s.eval(&[q(0), q(2), q(0)]), q(18));
    }
}
