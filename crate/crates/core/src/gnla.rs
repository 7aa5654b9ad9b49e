//! Graded Lie algebras given by structure constants.
//!
//! Brackets are stored only for basis pairs `i < j`; `[e_j, e_i]` is read as the
//! negative. A pure GNLA has only negative grades; Tanaka algebras reuse the same
//! type with non-negative grades added.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use symbolic::{format_rational, parse_rational, MatrixQ, Rational};

use crate::error::{invalid, CoreError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisElement {
    pub name: String,
    pub grade: i32,
}

#[derive(Clone, Debug)]
pub struct Gnla {
    basis: Vec<BasisElement>,
    brackets: BTreeMap<(usize, usize), Vec<Rational>>,
    tag: Option<String>,
    // sparse [e_i, e_j] for every ordered pair, row-major
    table: Vec<Vec<(usize, Rational)>>,
}

impl PartialEq for Gnla {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis && self.brackets == other.brackets
    }
}

impl Eq for Gnla {}

/// Dimensions per grade.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradeProfile {
    pub dims: BTreeMap<i32, usize>,
}

impl GradeProfile {
    /// Dimensions of `g_{-1}, g_{-2}, …` down to the deepest negative grade.
    pub fn by_depth(&self) -> Vec<usize> {
        let depth = self.dims.keys().filter(|&&g| g < 0).map(|g| -g).max().unwrap_or(0);
        (1..=depth).map(|d| self.dims.get(&-d).copied().unwrap_or(0)).collect()
    }

    /// Dimensions from the lowest grade to the highest.
    pub fn ascending(&self) -> Vec<usize> {
        match (self.dims.keys().next(), self.dims.keys().next_back()) {
            (Some(&lo), Some(&hi)) => (lo..=hi).map(|g| self.dims.get(&g).copied().unwrap_or(0)).collect(),
            _ => vec![],
        }
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }
}

impl fmt::Display for GradeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.by_depth().iter().map(ToString::to_string).collect();
        write!(f, "({})", v.join(","))
    }
}

/// Outcome of [`check_gnla`]; violations name the offending basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    /// Brackets respect grade additivity.
    pub grading_ok: bool,
    /// Every grade is negative.
    pub pure: bool,
    pub jacobi_ok: bool,
    pub fundamental: bool,
    pub nilpotent: bool,
    pub violations: Vec<String>,
}

impl CheckReport {
    pub fn all_ok(&self) -> bool {
        self.grading_ok && self.pure && self.jacobi_ok && self.fundamental && self.nilpotent
    }
}

impl Gnla {
    /// Builds an algebra from a basis and brackets for pairs `i < j`.
    /// Pairs with `i > j` are accepted and stored negated; `i == j` must be zero.
    pub fn new(
        basis: Vec<BasisElement>,
        brackets: impl IntoIterator<Item = ((usize, usize), Vec<Rational>)>,
        tag: Option<String>,
    ) -> Result<Self> {
        let n = basis.len();
        let mut seen = BTreeSet::new();
        for b in &basis {
            if !seen.insert(b.name.as_str()) {
                return Err(invalid(format!("duplicate basis name {:?}", b.name)));
            }
        }
        let mut stored: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
        for ((i, j), v) in brackets {
            if i >= n || j >= n || v.len() != n {
                return Err(invalid(format!("bracket ({i},{j}) out of range")));
            }
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            if i == j {
                return Err(invalid(format!("[{0},{0}] must vanish", basis[i].name)));
            }
            let (key, v) = if i < j { ((i, j), v) } else { ((j, i), v.into_iter().map(|c| -c).collect()) };
            let slot = stored.entry(key).or_insert_with(|| vec![Rational::zero(); n]);
            for (s, c) in slot.iter_mut().zip(v) {
                *s += c;
            }
        }
        stored.retain(|_, v| v.iter().any(|c| !c.is_zero()));
        Ok(Self::from_parts(basis, stored, tag))
    }

    fn from_parts(
        basis: Vec<BasisElement>,
        brackets: BTreeMap<(usize, usize), Vec<Rational>>,
        tag: Option<String>,
    ) -> Self {
        let n = basis.len();
        let mut table = vec![Vec::new(); n * n];
        for (&(i, j), v) in &brackets {
            let sparse: Vec<(usize, Rational)> =
                v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect();
            table[j * n + i] = sparse.iter().map(|(k, c)| (*k, -c.clone())).collect();
            table[i * n + j] = sparse;
        }
        Gnla { basis, brackets, tag, table }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn grade(&self, i: usize) -> i32 {
        self.basis[i].grade
    }

    pub fn tag(&self) -> Option<&str> {
        self.tag.as_deref()
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tag = Some(tag.into());
        self
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| invalid(format!("no basis element named {name:?}")))
    }

    /// Stored brackets for `i < j`.
    pub fn brackets(&self) -> &BTreeMap<(usize, usize), Vec<Rational>> {
        &self.brackets
    }

    /// Sparse `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let entries = &self.table[i * n + j];
                if entries.is_empty() {
                    continue;
                }
                let f = xi * yj;
                for (k, c) in entries {
                    out[*k] += &f * c;
                }
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    /// Matrix of `ad_x` acting on column vectors.
    pub fn ad(&self, x: &[Rational]) -> MatrixQ {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| self.bracket(x, &self.unit(j))).collect();
        MatrixQ::from_columns(&cols, n)
    }

    pub fn grades(&self) -> BTreeSet<i32> {
        self.basis.iter().map(|b| b.grade).collect()
    }

    pub fn indices_of_grade(&self, g: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].grade == g).collect()
    }

    /// Largest `d` with `g_{-d} ≠ 0`.
    pub fn depth(&self) -> i32 {
        self.basis.iter().map(|b| -b.grade).max().unwrap_or(0).max(0)
    }

    pub fn is_pure(&self) -> bool {
        self.basis.iter().all(|b| b.grade < 0)
    }

    pub fn grade_profile(&self) -> GradeProfile {
        let mut dims = BTreeMap::new();
        for b in &self.basis {
            *dims.entry(b.grade).or_insert(0) += 1;
        }
        GradeProfile { dims }
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// Dimension of the subalgebra generated by the grade −1 component.
    pub fn generated_by_degree_one(&self) -> usize {
        let n = self.dim();
        let gens: Vec<Vec<Rational>> = self.indices_of_grade(-1).iter().map(|&i| self.unit(i)).collect();
        let mut span: Vec<Vec<Rational>> = gens.clone();
        let mut frontier = gens.clone();
        loop {
            let mut next = Vec::new();
            for f in &frontier {
                for g in &gens {
                    let b = self.bracket(g, f);
                    if b.iter().all(Zero::is_zero) {
                        continue;
                    }
                    let mut trial = span.clone();
                    trial.push(b.clone());
                    if symbolic::matrix::rank_of(&trial, n) > span.len() {
                        span.push(b.clone());
                        next.push(b);
                    }
                }
            }
            if next.is_empty() {
                return span.len();
            }
            frontier = next;
        }
    }

    pub fn is_fundamental(&self) -> bool {
        self.is_pure() && self.generated_by_degree_one() == self.dim()
    }

    /// Lower central series reaches zero.
    pub fn is_nilpotent(&self) -> bool {
        let n = self.dim();
        let mut current: Vec<Vec<Rational>> = (0..n).map(|i| self.unit(i)).collect();
        while !current.is_empty() {
            let mut next = Vec::new();
            for i in 0..n {
                for c in &current {
                    let b = self.bracket(&self.unit(i), c);
                    if b.iter().any(|x| !x.is_zero()) {
                        next.push(b);
                    }
                }
            }
            let next = if next.is_empty() { next } else { MatrixQ::from_rows(next, n).rref().matrix.to_rows() };
            // C^{k+1} ⊆ C^k, so equal dimension means the series is stuck
            if next.len() == current.len() {
                return false;
            }
            current = next;
        }
        true
    }

    /// Quotient by the span of the given basis elements, which must be an ideal.
    pub fn quotient_by(&self, drop: &[usize]) -> Result<Gnla> {
        let keep: Vec<usize> = (0..self.dim()).filter(|i| !drop.contains(i)).collect();
        let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        for (&(i, j), v) in &self.brackets {
            let from_ideal = drop.contains(&i) || drop.contains(&j);
            if from_ideal && v.iter().enumerate().any(|(k, c)| !c.is_zero() && !drop.contains(&k)) {
                return Err(CoreError::Verification(format!(
                    "span of dropped elements is not an ideal: [{}, {}]",
                    self.name(i),
                    self.name(j)
                )));
            }
        }
        let basis: Vec<BasisElement> = keep.iter().map(|&i| self.basis[i].clone()).collect();
        let mut brackets = Vec::new();
        for (&(i, j), v) in &self.brackets {
            let (Some(&a), Some(&b)) = (pos.get(&i), pos.get(&j)) else { continue };
            let w: Vec<Rational> = keep.iter().map(|&k| v[k].clone()).collect();
            brackets.push(((a, b), w));
        }
        Gnla::new(basis, brackets, None)
    }

    /// Quotient by the deepest grade component (central in a pure algebra).
    pub fn quotient_top(&self) -> Result<Gnla> {
        let d = -self.depth();
        self.quotient_by(&self.indices_of_grade(d))
    }

    /// Re-expresses the algebra in the basis `b'_j = Σ_i p[(i,j)] b_i`.
    /// `p` must be invertible and map each grade to itself.
    pub fn change_basis(&self, p: &MatrixQ) -> Result<Gnla> {
        let n = self.dim();
        let inv = p.inverse().ok_or_else(|| invalid("change of basis is singular"))?;
        for i in 0..n {
            for j in 0..n {
                if !p[(i, j)].is_zero() && self.grade(i) != self.grade(j) {
                    return Err(invalid("change of basis does not preserve the grading"));
                }
            }
        }
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| p.column(j)).collect();
        let mut brackets = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let v = self.bracket(&cols[a], &cols[b]);
                brackets.push(((a, b), inv.mul_vec(&v)));
            }
        }
        Gnla::new(self.basis.clone(), brackets, self.tag.clone())
    }

    /// `[x, y]` expressed through basis names, for display.
    pub fn describe(&self, v: &[Rational]) -> String {
        describe_vector(v, |k| self.name(k).to_string())
    }

    pub fn to_json_value(&self) -> GnlaJson {
        GnlaJson {
            basis: self.basis.clone(),
            brackets: self
                .brackets
                .iter()
                .map(|(&(i, j), v)| BracketJson {
                    left: self.name(i).to_string(),
                    right: self.name(j).to_string(),
                    value: v
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| TermJson { b: self.name(k).to_string(), c: format_rational(c) })
                        .collect(),
                })
                .collect(),
            tag: self.tag.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json_value(j: &GnlaJson) -> Result<Gnla> {
        let n = j.basis.len();
        let index = |name: &str| {
            j.basis
                .iter()
                .position(|b| b.name == name)
                .ok_or_else(|| invalid(format!("bracket references unknown element {name:?}")))
        };
        let mut brackets = Vec::new();
        for b in &j.brackets {
            let (l, r) = (index(&b.left)?, index(&b.right)?);
            let mut v = vec![Rational::zero(); n];
            for t in &b.value {
                let c = parse_rational(&t.c).map_err(|e| invalid(e.to_string()))?;
                v[index(&t.b)?] += c;
            }
            brackets.push(((l, r), v));
        }
        Gnla::new(j.basis.clone(), brackets, j.tag.clone())
    }

    pub fn from_json(text: &str) -> Result<Gnla> {
        let j: GnlaJson = serde_json::from_str(text).map_err(|e| invalid(format!("GNLA JSON: {e}")))?;
        Self::from_json_value(&j)
    }
}

/// Linear combination printed as `2*e3 - e4p`.
pub fn describe_vector(v: &[Rational], name: impl Fn(usize) -> String) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if abs.is_one() {
            out.push_str(&name(k));
        } else {
            out.push_str(&format!("{}*{}", format_rational(&abs), name(k)));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl fmt::Display for Gnla {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.tag.as_deref().unwrap_or("algebra"), self.grade_profile())?;
        for (&(i, j), v) in &self.brackets {
            writeln!(f, "  [{}, {}] = {}", self.name(i), self.name(j), self.describe(v))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub b: String,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketJson {
    pub left: String,
    pub right: String,
    pub value: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GnlaJson {
    pub basis: Vec<BasisElement>,
    pub brackets: Vec<BracketJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<String>,
}

/// Validates grading, Jacobi, fundamentality and nilpotency.
pub fn check_gnla(a: &Gnla) -> CheckReport {
    let n = a.dim();
    let mut violations = Vec::new();
    let mut grading_ok = true;
    if a.basis().iter().any(|b| b.grade >= 0) {
        violations.push("non-negative grades present; algebra is not a pure GNLA".into());
    }
    for (&(i, j), v) in a.brackets() {
        let target = a.grade(i) + a.grade(j);
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() && a.grade(k) != target {
                grading_ok = false;
                violations.push(format!(
                    "grading: [{}, {}] has a component along {} of grade {} instead of {}",
                    a.name(i),
                    a.name(j),
                    a.name(k),
                    a.grade(k),
                    target
                ));
            }
        }
    }
    let mut jacobi_ok = true;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if let Some(msg) = jacobi_violation(a, i, j, k) {
                    jacobi_ok = false;
                    violations.push(msg);
                }
            }
        }
    }
    let generated = a.generated_by_degree_one();
    let fundamental = a.is_pure() && generated == n;
    if !fundamental {
        violations.push(format!("grade -1 component generates only {generated} of {n} dimensions"));
    }
    let nilpotent = a.is_nilpotent();
    if !nilpotent {
        violations.push("lower central series does not terminate".into());
    }
    CheckReport { grading_ok, pure: a.is_pure(), jacobi_ok, fundamental, nilpotent, violations }
}

fn jacobi_violation(a: &Gnla, i: usize, j: usize, k: usize) -> Option<String> {
    let (x, y, z) = (a.unit(i), a.unit(j), a.unit(k));
    let t1 = a.bracket(&x, &a.bracket(&y, &z));
    let t2 = a.bracket(&y, &a.bracket(&z, &x));
    let t3 = a.bracket(&z, &a.bracket(&x, &y));
    let sum: Vec<Rational> = (0..a.dim()).map(|c| &t1[c] + &t2[c] + &t3[c]).collect();
    if sum.iter().all(Zero::is_zero) {
        None
    } else {
        Some(format!(
            "jacobi: ({}, {}, {}) gives {}",
            a.name(i),
            a.name(j),
            a.name(k),
            a.describe(&sum)
        ))
    }
}

/// True when the Jacobi identity holds on all basis triples.
pub fn jacobi_holds(a: &Gnla) -> bool {
    let n = a.dim();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if jacobi_violation(a, i, j, k).is_some() {
                    return false;
                }
            }
        }
    }
    true
}

/// Result of [`check_homomorphism`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCheck {
    pub ok: bool,
    pub first_violation: Option<(String, String)>,
}

/// Checks `L[x,y] = [Lx, Ly]` on basis pairs; `l` is `dim B × dim A`.
pub fn check_homomorphism(a: &Gnla, b: &Gnla, l: &MatrixQ) -> Result<HomCheck> {
    if l.rows() != b.dim() || l.cols() != a.dim() {
        return Err(invalid(format!(
            "map has shape {}x{}, expected {}x{}",
            l.rows(),
            l.cols(),
            b.dim(),
            a.dim()
        )));
    }
    let images: Vec<Vec<Rational>> = (0..a.dim()).map(|i| l.column(i)).collect();
    for i in 0..a.dim() {
        for j in i + 1..a.dim() {
            let lhs = l.mul_vec(&a.bracket(&a.unit(i), &a.unit(j)));
            let rhs = b.bracket(&images[i], &images[j]);
            if lhs != rhs {
                return Ok(HomCheck {
                    ok: false,
                    first_violation: Some((a.name(i).to_string(), a.name(j).to_string())),
                });
            }
        }
    }
    Ok(HomCheck { ok: true, first_violation: None })
}

/// Small builder used by the catalog and tests.
#[derive(Default)]
pub struct GnlaBuilder {
    basis: Vec<BasisElement>,
    relations: Vec<(String, String, Vec<(String, Rational)>)>,
}

impl GnlaBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn element(mut self, name: impl Into<String>, grade: i32) -> Self {
        self.basis.push(BasisElement { name: name.into(), grade });
        self
    }

    pub fn push_element(&mut self, name: impl Into<String>, grade: i32) {
        self.basis.push(BasisElement { name: name.into(), grade });
    }

    /// Adds `c * target` to `[left, right]`.
    pub fn relation(mut self, left: &str, right: &str, target: &str, c: i64) -> Self {
        self.push_relation(left, right, target, Rational::from_integer(c.into()));
        self
    }

    pub fn push_relation(&mut self, left: &str, right: &str, target: &str, c: Rational) {
        self.relations.push((left.into(), right.into(), vec![(target.into(), c)]));
    }

    pub fn has(&self, name: &str) -> bool {
        self.basis.iter().any(|b| b.name == name)
    }

    pub fn build(self, tag: Option<String>) -> Result<Gnla> {
        let n = self.basis.len();
        let index = |name: &str| {
            self.basis
                .iter()
                .position(|b| b.name == name)
                .ok_or_else(|| invalid(format!("unknown element {name:?}")))
        };
        let mut brackets = Vec::new();
        for (l, r, terms) in &self.relations {
            let mut v = vec![Rational::zero(); n];
            for (t, c) in terms {
                v[index(t)?] += c;
            }
            brackets.push(((index(l)?, index(r)?), v));
        }
        Gnla::new(self.basis.clone(), brackets, tag)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grading_violation_is_reported() {
        let a = GnlaBuilder::new()
            .element("e1", -1)
            .element("e1p", -1)
            .element("e3", -3)
            .relation("e1", "e1p", "e3", 1)
            .build(None)
            .unwrap();
        let r = check_gnla(&a);
        assert!(!r.grading_ok);
        assert!(r.violations.iter().any(|v| v.starts_with("grading")));
    }

    #[test]
    fn abelian_algebra_is_not_fundamental() {
        let a = GnlaBuilder::new()
            .element("a", -1)
            .element("b", -1)
            .element("c", -2)
            .build(None)
            .unwrap();
        let r = check_gnla(&a);
        assert!(r.jacobi_ok);
        assert!(!r.fundamental);
        assert!(r.nilpotent);
    }

    #[test]
    fn json_round_trip() {
        let a = GnlaBuilder::new()
            .element("e1", -1)
            .element("e1p", -1)
            .element("e2", -2)
            .relation("e1p", "e1", "e2", -1)
            .build(Some("heis3".into()))
            .unwrap();
        let b = Gnla::from_json(&a.to_json()).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.bracket(&b.unit(0), &b.unit(1)), b.unit(2));
    }
}
