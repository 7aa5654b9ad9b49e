//! Infinitesimal symmetries of Monge equations and the explicit symmetry
//! algebra of the flat models `y^(m) = (z^(n))²`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use symbolic::{qf, MatrixQ, RatFun, Rational, VectorField};

use super::{cartan_distribution, sample_point, MongeEquation};
use crate::catalog::{e, ep, make_fmn};
use crate::cohomology::subsets;
use crate::error::{invalid, CoreError, Result};
use crate::gnla::{check_gnla, check_homomorphism, BasisElement, Gnla};
use crate::relations::{g0_name, tanaka_relations, verify_structure_relations, M1Coefficient};
use crate::tanaka::prolong;

/// `D_x = ∂x + y1∂y0 + … + F∂y{m-1} + z1∂z0 + … + z{n}∂z{n-1}` on the equation chart.
pub fn total_derivative(eq: &MongeEquation) -> VectorField {
    let chart = eq.chart();
    let mut v = VectorField::coordinate(chart, eq.x());
    for i in 0..eq.m {
        let c = if i + 1 < eq.m { RatFun::var(chart, eq.y(i + 1)) } else { eq.f.clone() };
        v.set_component(eq.y(i), c);
    }
    for j in 0..eq.n {
        v.set_component(eq.z(j), RatFun::var(chart, eq.z(j + 1)));
    }
    v
}

/// `D_x f`; undefined on the chart when `f` depends on the top coordinate `z{n}`.
fn total_derivative_of(eq: &MongeEquation, dx: &VectorField, f: &RatFun) -> Result<RatFun> {
    if !f.derivative(eq.z(eq.n)).is_zero() {
        return Err(invalid(format!("total derivative of {f} needs z{}", eq.n + 1)));
    }
    Ok(dx.lie_derivative(f)?)
}

/// Lie prolongation of `ξ∂x + φ∂y0 + ψ∂z0` to the equation chart.
///
/// The coefficient of a next-order coordinate `u_{k+1}` is `D_x(φ_k) − u_{k+1}·D_x(ξ)`;
/// `y{m}` never appears since it is replaced by `F` inside `D_x`.
pub fn prolong_vector_field(eq: &MongeEquation, base: &VectorField) -> Result<VectorField> {
    let chart = eq.chart();
    if base.chart() != chart {
        return Err(invalid("field must live on the equation chart"));
    }
    let allowed = [eq.x(), eq.y(0), eq.z(0)];
    if (0..chart.len()).any(|i| !allowed.contains(&i) && !base.component(i).is_zero()) {
        return Err(invalid("base field may only move x, y0 and z0"));
    }
    let dx = total_derivative(eq);
    let xi = base.component(eq.x()).clone();
    let dxi = total_derivative_of(eq, &dx, &xi)?;
    let mut out = base.clone();
    let mut chain = |coord: &dyn Fn(usize) -> usize, len: usize| -> Result<()> {
        for k in 0..len {
            let next = RatFun::var(chart, coord(k + 1));
            let c = &total_derivative_of(eq, &dx, out.component(coord(k)))? - &(&next * &dxi);
            out.set_component(coord(k + 1), c);
        }
        Ok(())
    };
    chain(&|i| eq.y(i), eq.m - 1)?;
    chain(&|j| eq.z(j), eq.n)?;
    Ok(out)
}

fn det(m: &[Vec<RatFun>]) -> RatFun {
    let n = m.len();
    let chart = m[0][0].chart();
    match n {
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = RatFun::zero(chart);
            for (j, pivot) in m[0].iter().enumerate() {
                if pivot.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<RatFun>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let t = pivot * &det(&minor);
                acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}

/// `w` lies in the span of `gens` over rational functions.
///
/// Picks columns where the generators have a nonzero maximal minor and tests
/// every bordered minor; with generic rank `r` this decides rank `≤ r`.
fn in_span(gens: &[VectorField], w: &VectorField) -> Result<bool> {
    let r = gens.len();
    let n = w.chart().len();
    let pivots = subsets(n, r)
        .into_iter()
        .find(|cols| {
            let m: Vec<Vec<RatFun>> =
                gens.iter().map(|g| cols.iter().map(|&c| g.component(c).clone()).collect()).collect();
            !det(&m).is_zero()
        })
        .ok_or_else(|| invalid("generators are dependent as rational vector fields"))?;
    let rows: Vec<&VectorField> = gens.iter().chain(std::iter::once(w)).collect();
    for c in (0..n).filter(|c| !pivots.contains(c)) {
        let cols: Vec<usize> = pivots.iter().copied().chain(std::iter::once(c)).collect();
        let m: Vec<Vec<RatFun>> = rows.iter().map(|g| cols.iter().map(|&k| g.component(k).clone()).collect()).collect();
        if !det(&m).is_zero() {
            return Ok(false);
        }
    }
    // pivot columns alone: w restricted there is always a combination
    Ok(true)
}

/// `[V, X]` stays in the Cartan distribution for both generators `X`.
pub fn is_symmetry(eq: &MongeEquation, v: &VectorField) -> Result<bool> {
    let d = cartan_distribution(eq);
    for g in &d.generators {
        if !in_span(&d.generators, &v.lie_bracket(g)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn factorial(k: u64) -> Rational {
    Rational::from_integer((1..=k).product::<u64>().into())
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn reject_exceptional(m: usize, n: usize) -> Result<()> {
    if m == 0 || m > n {
        return Err(invalid(format!("orders must satisfy 1 <= m <= n, got ({m},{n})")));
    }
    match (m, n) {
        (1, 1) => Err(CoreError::Exceptional(
            "(1,1) is the contact plane; its symmetry algebra is infinite-dimensional".into(),
        )),
        (1, 2) => Err(CoreError::Exceptional(
            "(1,2) has the 14-dimensional exceptional symmetry algebra; five of its generators are not of the model form"
                .into(),
        )),
        _ => Ok(()),
    }
}

/// Named generators `S0, S1, [S2,] R, Y0.., Z0..Z{2n-m}` of the model symmetry algebra, prolonged.
pub fn model_symmetries(m: usize, n: usize) -> Result<Vec<(String, VectorField)>> {
    reject_exceptional(m, n)?;
    let eq = MongeEquation::model(m, n)?;
    let chart = eq.chart().clone();
    let var = |i: usize| RatFun::var(&chart, i);
    let xpow = |k: usize| var(eq.x()).pow(k as u32).scale(&factorial(k as u64).recip());
    let zero = || RatFun::zero(&chart);
    let base = |xi: RatFun, phi: RatFun, psi: RatFun| {
        let mut v = VectorField::zero(&chart);
        v.set_component(eq.x(), xi);
        v.set_component(eq.y(0), phi);
        v.set_component(eq.z(0), psi);
        v
    };
    let (y, z) = (var(eq.y(0)), var(eq.z(0)));
    let mut out = vec![
        ("S0".to_string(), base(RatFun::one(&chart), zero(), zero())),
        (
            "S1".to_string(),
            base(var(eq.x()), y.scale(&Rational::from_integer((m as i64 - 1).into())), z.scale(&qf(2 * n as i64 - 1, 2))),
        ),
    ];
    if m == 1 {
        let nz = var(eq.z(n - 1)).scale(&Rational::from_integer((n as i64).into()));
        let c = Rational::from_integer((2 * n as i64 - 1).into());
        out.push(("S2".to_string(), base(var(eq.x()).pow(2), nz.pow(2), (&var(eq.x()) * &z).scale(&c))));
    }
    out.push(("R".to_string(), base(zero(), y.clone(), z.scale(&qf(1, 2)))));
    for i in 0..m {
        out.push((format!("Y{i}"), base(zero(), xpow(i), zero())));
    }
    for j in 0..n {
        out.push((format!("Z{j}"), base(zero(), zero(), xpow(j))));
    }
    for k in 0..=n - m {
        let mut phi = zero();
        for p in 0..=k {
            let c = 2 * (if p % 2 == 0 { 1 } else { -1 }) * binom((m + p - 1) as i64, p as i64);
            let term = (&xpow(k - p) * &var(eq.z(n - m - p))).scale(&Rational::from_integer(c.into()));
            phi = &phi + &term;
        }
        out.push((format!("Z{}", n + k), base(zero(), phi, xpow(n + k))));
    }
    out.into_iter().map(|(name, v)| Ok((name, prolong_vector_field(&eq, &v)?))).collect()
}

/// Grading weight of a model generator: `w(S_k) = k−1`, `w(R) = 0`, `w(Y_i) = i−m−2`, `w(Z_l) = l−n−1`.
fn weight(name: &str, m: usize, n: usize) -> i32 {
    let idx = |s: &str| s[1..].parse::<i32>().expect("indexed name");
    match &name[..1] {
        "S" => idx(name) - 1,
        "R" => 0,
        "Y" => idx(name) - m as i32 - 2,
        "Z" => idx(name) - n as i32 - 1,
        _ => unreachable!("generator names start with S, R, Y or Z"),
    }
}

/// Computed and expected commutators of the model generators, in their basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryTable {
    pub m: usize,
    pub n: usize,
    pub names: Vec<String>,
    pub weights: Vec<i32>,
    /// Nonzero `[V_i, V_j]`, `i < j`.
    pub brackets: BTreeMap<(usize, usize), Vec<Rational>>,
    /// Every bracket re-expands exactly in the generators.
    pub closed: bool,
    pub expected: BTreeMap<(usize, usize), Vec<Rational>>,
    pub mismatches: Vec<String>,
}

impl SymmetryTable {
    pub fn matches(&self) -> bool {
        self.closed && self.mismatches.is_empty()
    }
}

/// Constant coefficients `c` with `w = Σ c_k V_k`, verified symbolically.
fn expand(fields: &[VectorField], samples: &MatrixQ, points: &[Vec<Rational>], w: &VectorField) -> Result<Option<Vec<Rational>>> {
    let mut rhs = Vec::new();
    for p in points {
        rhs.extend(w.eval(p)?);
    }
    let Some(c) = samples.solve(&rhs) else { return Ok(None) };
    let mut rest = w.clone();
    for (f, ck) in fields.iter().zip(&c) {
        if !ck.is_zero() {
            rest = rest.sub(&f.scale(ck))?;
        }
    }
    Ok(rest.is_zero().then_some(c))
}

/// The nonzero commutators as read from the model formulas.
pub fn expected_commutators(m: usize, n: usize, names: &[String]) -> BTreeMap<(usize, usize), Vec<Rational>> {
    let dim = names.len();
    let index = |s: &str| names.iter().position(|x| x == s);
    let mut out: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
    let mut put = |a: &str, b: &str, target: &str, c: Rational| {
        let (Some(i), Some(j), Some(t)) = (index(a), index(b), index(target)) else { return };
        if c.is_zero() {
            return;
        }
        let (key, c) = if i < j { ((i, j), c) } else { ((j, i), -c) };
        out.entry(key).or_insert_with(|| vec![Rational::zero(); dim])[t] += c;
    };
    let qi = |x: i64| Rational::from_integer(x.into());
    let top = 2 * n - m;
    put("S0", "S1", "S0", qi(1));
    for i in 1..m {
        put("S0", &format!("Y{i}"), &format!("Y{}", i - 1), qi(1));
    }
    for l in 1..=top {
        put("S0", &format!("Z{l}"), &format!("Z{}", l - 1), qi(1));
    }
    for i in 0..m {
        let y = format!("Y{i}");
        put("S1", &y, &y, qi(i as i64 + 1 - m as i64));
        put(&y, "R", &y, qi(1));
    }
    for l in 0..=top {
        let z = format!("Z{l}");
        put("S1", &z, &z, qf(2 * l as i64 + 1 - 2 * n as i64, 2));
        put(&z, "R", &z, qf(1, 2));
    }
    for k in 0..=n - m {
        for j in (n - m - k)..(n - k) {
            let sign = if k % 2 == 0 { 2 } else { -2 };
            let c = sign * binom((n - j - 1) as i64, k as i64);
            put(&format!("Z{j}"), &format!("Z{}", n + k), &format!("Y{}", j + m + k - n), qi(c));
        }
    }
    if m == 1 {
        put("S0", "S2", "S1", qi(2));
        put("S1", "S2", "S2", qi(1));
        for l in 0..top {
            let c = (l as i64 + 1 - n as i64).pow(2) - (n as i64).pow(2);
            put("S2", &format!("Z{l}"), &format!("Z{}", l + 1), qi(c));
        }
    }
    out
}

pub fn symmetry_commutator_table(m: usize, n: usize) -> Result<SymmetryTable> {
    let gens = model_symmetries(m, n)?;
    let names: Vec<String> = gens.iter().map(|(s, _)| s.clone()).collect();
    let fields: Vec<VectorField> = gens.into_iter().map(|(_, v)| v).collect();
    let chart = fields[0].chart().clone();
    let dim = fields.len();
    let mut points = Vec::new();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for attempt in 0.. {
        let p = sample_point(&chart, attempt);
        let vals: Vec<Vec<Rational>> = fields.iter().map(|f| f.eval(&p)).collect::<std::result::Result<_, _>>()?;
        rows.extend((0..chart.len()).map(|r| vals.iter().map(|v| v[r].clone()).collect::<Vec<_>>()));
        points.push(p);
        if MatrixQ::from_rows(rows.clone(), dim).rank() == dim {
            break;
        }
        if attempt > dim {
            return Err(CoreError::Verification("model generators are linearly dependent".into()));
        }
    }
    let samples = MatrixQ::from_rows(rows, dim);
    let pairs: Vec<(usize, usize)> = (0..dim).flat_map(|i| (i + 1..dim).map(move |j| (i, j))).collect();
    let expanded: Vec<Option<Vec<Rational>>> = pairs
        .par_iter()
        .map(|&(i, j)| expand(&fields, &samples, &points, &fields[i].lie_bracket(&fields[j])?))
        .collect::<Result<_>>()?;
    let closed = expanded.iter().all(Option::is_some);
    let brackets: BTreeMap<(usize, usize), Vec<Rational>> = pairs
        .into_iter()
        .zip(expanded)
        .filter_map(|(k, v)| v.filter(|v| v.iter().any(|c| !c.is_zero())).map(|v| (k, v)))
        .collect();
    let expected = expected_commutators(m, n, &names);
    let mut mismatches = Vec::new();
    let zero = vec![Rational::zero(); dim];
    for key in brackets.keys().chain(expected.keys()).collect::<std::collections::BTreeSet<_>>() {
        let got = brackets.get(key).unwrap_or(&zero);
        let want = expected.get(key).unwrap_or(&zero);
        if got != want {
            let show = |v: &[Rational]| crate::gnla::describe_vector(v, |k| names[k].clone());
            mismatches.push(format!("[{},{}]: computed {}, expected {}", names[key.0], names[key.1], show(got), show(want)));
        }
    }
    Ok(SymmetryTable { m, n, weights: names.iter().map(|s| weight(s, m, n)).collect(), names, brackets, closed, expected, mismatches })
}

/// The computed symmetry algebra, graded by the generator weights.
pub fn symmetry_algebra(table: &SymmetryTable) -> Result<Gnla> {
    let basis = table.names.iter().zip(&table.weights).map(|(name, &grade)| BasisElement { name: name.clone(), grade }).collect();
    Gnla::new(basis, table.brackets.clone(), Some(format!("sym({},{})", table.m, table.n)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L3PlusReport {
    /// The weights grade the computed bracket table.
    pub weights_ok: bool,
    /// Each generator is sent into the Tanaka component of its weight.
    pub images_graded: bool,
    pub relations_consistent: bool,
    pub homomorphism: bool,
    pub bijective: bool,
    pub first_violation: Option<(String, String)>,
}

impl L3PlusReport {
    pub fn ok(&self) -> bool {
        self.weights_ok && self.images_graded && self.relations_consistent && self.homomorphism && self.bijective
    }
}

/// Normalization of the shift generators `Y_i`, `Z_j` (`j < n`) in the identification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identification {
    /// `Y_i = e'_{m+2-i}`, `Z_j = e_{n+1-j}`
    Stated,
    /// `Y_i = −2e'_{m+2-i}`, `Z_j = −2e_{n+1-j}`, matching `Z_n = −2e_1'`
    Rescaled,
}

/// Tanaka-algebra element assigned to a model generator, as `(element, coefficient)` terms.
pub fn identification(name: &str, m: usize, n: usize, variant: Identification) -> Vec<(String, Rational)> {
    let qi = |x: i64| Rational::from_integer(x.into());
    let low = match variant {
        Identification::Stated => qi(1),
        Identification::Rescaled => qi(-2),
    };
    let g0 = |a: i64, b: i64, c: i64| if m == n { g0_name(&[a, c]) } else { g0_name(&[a, b, c]) };
    let idx = |s: &str| s[1..].parse::<usize>().expect("indexed name");
    match &name[..1] {
        "S" => match idx(name) {
            0 => vec![("e1".into(), qi(1))],
            1 => vec![(g0(0, 0, 1), qf(1, 2)), (g0(1, 0, 0), qi(-1))],
            _ => vec![("em1_01".into(), qi(-1))],
        },
        "R" => vec![(g0(0, 0, 1), qf(-1, 2))],
        "Y" => vec![(ep(m + 2 - idx(name)), low)],
        _ => {
            let l = idx(name);
            if l < n {
                vec![(e(n + 1 - l), low)]
            } else if l == n {
                vec![("e1p".into(), qi(-2))]
            } else if l == n + 1 {
                vec![(g0(0, 1, 0), qi(2))]
            } else if l == n + 2 {
                vec![((if m == 1 { "em1_10" } else { "em1" }).into(), qi(-2))]
            } else {
                let k = l - n - 1;
                vec![(format!("em{k}"), qi(if k % 2 == 0 { 2 } else { -2 }))]
            }
        }
    }
}

/// Checks that the stated identification of model generators with Tanaka
/// elements is a graded Lie algebra isomorphism onto the computed Tanaka algebra.
pub fn l3plus_check(m: usize, n: usize, variant: Identification) -> Result<L3PlusReport> {
    let table = symmetry_commutator_table(m, n)?;
    let sym = symmetry_algebra(&table)?;
    let t = prolong(&make_fmn(m, n)?, None)?;
    let alg = t.algebra.as_ref().ok_or_else(|| invalid("Tanaka algebra is not finite"))?;
    let sol = verify_structure_relations(&t, &tanaka_relations(m as i64, n as i64, M1Coefficient::FromGeneralElement))?;
    let mut cols = Vec::new();
    let mut images_graded = sol.consistent;
    for (name, &w) in table.names.iter().zip(&table.weights) {
        let mut v = vec![Rational::zero(); alg.dim()];
        for (elem, c) in identification(name, m, n, variant) {
            let image = match alg.index_of(&elem) {
                Some(i) => alg.unit(i),
                None => sol.elements.get(&elem).cloned().ok_or_else(|| invalid(format!("no Tanaka element {elem}")))?,
            };
            for (s, x) in v.iter_mut().zip(image) {
                *s += &c * x;
            }
        }
        images_graded &= v.iter().enumerate().all(|(k, c)| c.is_zero() || alg.grade(k) == w);
        cols.push(v);
    }
    let l = MatrixQ::from_columns(&cols, alg.dim());
    let hom = check_homomorphism(&sym, alg, &l)?;
    Ok(L3PlusReport {
        weights_ok: check_gnla(&sym).grading_ok,
        images_graded,
        relations_consistent: sol.consistent,
        homomorphism: hom.ok,
        bijective: l.rows() == l.cols() && l.rank() == l.cols(),
        first_violation: hom.first_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use symbolic::parse_ratfun;

    #[test]
    fn prolonging_a_translation_adds_nothing() {
        let eq = MongeEquation::model(1, 3).unwrap();
        let s0 = VectorField::coordinate(eq.chart(), 0);
        assert_eq!(prolong_vector_field(&eq, &s0).unwrap(), s0);
    }

    #[test]
    fn prolongation_matches_direct_total_derivatives() {
        // x∂y0 on (2,3): the y1 coefficient is D_x(x) = 1
        let eq = MongeEquation::model(2, 3).unwrap();
        let c = eq.chart();
        let mut v = VectorField::zero(c);
        v.set_component(eq.y(0), RatFun::var(c, 0));
        let p = prolong_vector_field(&eq, &v).unwrap();
        assert_eq!(p.component(eq.y(1)), &RatFun::one(c));
        // x² ∂x + x z0 ∂z0: z1 coefficient D_x(x z0) − z1 D_x(x²) = z0 + x z1 − 2x z1,
        // y1 coefficient 0 − y1 D_x(x²)
        let mut w = VectorField::zero(c);
        w.set_component(0, parse_ratfun("x^2", c).unwrap());
        w.set_component(eq.z(0), parse_ratfun("x*z0", c).unwrap());
        let p = prolong_vector_field(&eq, &w).unwrap();
        assert_eq!(p.component(eq.z(1)), &parse_ratfun("z0 - x*z1", c).unwrap());
        assert_eq!(p.component(eq.y(1)), &parse_ratfun("-2*x*y1", c).unwrap());
        let mut bad = VectorField::zero(c);
        bad.set_component(eq.z(1), RatFun::one(c));
        assert!(prolong_vector_field(&eq, &bad).is_err());
    }

    /// The higher symmetry written out in all coordinates, with `binom(p-1, p) = δ_p^0`.
    fn higher_symmetry_closed_form(m: usize, n: usize, k: usize) -> VectorField {
        let eq = MongeEquation::model(m, n).unwrap();
        let c = eq.chart();
        let xpow = |d: usize| RatFun::var(c, 0).pow(d as u32).scale(&factorial(d as u64).recip());
        let mut v = VectorField::zero(c);
        for i in 0..m {
            let mut acc = RatFun::zero(c);
            for p in 0..=k {
                let b = if p == 0 { 1 } else { binom((m + p - 1 - i) as i64, p as i64) };
                let s = if p % 2 == 0 { 2 * b } else { -2 * b };
                let t = (&xpow(k - p) * &RatFun::var(c, eq.z(n - m - p + i))).scale(&Rational::from_integer(s.into()));
                acc = &acc + &t;
            }
            v.set_component(eq.y(i), acc);
        }
        for j in 0..=n {
            v.set_component(eq.z(j), xpow(n + k - j));
        }
        v
    }

    #[test]
    fn higher_symmetries_match_their_closed_form() {
        let syms: BTreeMap<String, VectorField> = model_symmetries(2, 3).unwrap().into_iter().collect();
        for k in 0..=1 {
            assert_eq!(syms[&format!("Z{}", 3 + k)], higher_symmetry_closed_form(2, 3, k), "k={k}");
        }
    }

    #[test]
    fn symmetry_test_on_small_fields() {
        let eq = MongeEquation::model(1, 3).unwrap();
        let syms: BTreeMap<String, VectorField> = model_symmetries(1, 3).unwrap().into_iter().collect();
        assert!(is_symmetry(&eq, &syms["S0"]).unwrap());
        assert!(is_symmetry(&eq, &syms["Z3"]).unwrap());
        assert!(is_symmetry(&eq, &syms["Z3"].scale(&qf(-3, 7))).unwrap());
        let c = eq.chart();
        let mut bad = VectorField::zero(c);
        bad.set_component(0, RatFun::var(c, eq.y(0)));
        assert!(!is_symmetry(&eq, &bad).unwrap());
        // its prolongation would need z4
        assert!(prolong_vector_field(&eq, &bad).is_err());
    }

    #[test]
    fn exceptional_orders_are_rejected() {
        assert!(matches!(model_symmetries(1, 2), Err(CoreError::Exceptional(_))));
        assert!(matches!(model_symmetries(1, 1), Err(CoreError::Exceptional(_))));
        assert!(model_symmetries(3, 2).is_err());
    }

    #[test]
    fn counts_and_symmetry() {
        for (m, n) in [(2, 2), (1, 3)] {
            let eq = MongeEquation::model(m, n).unwrap();
            let syms = model_symmetries(m, n).unwrap();
            assert_eq!(syms.len(), if m == 1 { 2 * n + 5 } else { 2 * n + 4 });
            for (name, v) in &syms {
                assert!(is_symmetry(&eq, v).unwrap(), "{name} on ({m},{n})");
            }
        }
    }

    #[test]
    fn small_commutator_tables() {
        let t = symmetry_commutator_table(2, 2).unwrap();
        assert!(t.closed);
        assert!(t.mismatches.is_empty(), "{:#?}", t.mismatches);
        let at = |a: &str, b: &str| {
            let i = t.names.iter().position(|x| x == a).unwrap();
            let j = t.names.iter().position(|x| x == b).unwrap();
            crate::gnla::describe_vector(&t.brackets[&(i, j)], |k| t.names[k].clone())
        };
        assert_eq!(at("S0", "S1"), "S0");
        assert_eq!(at("Z0", "Z2"), "2*Y0");
        assert_eq!(at("Z1", "Z2"), "2*Y1");
    }

    #[test]
    fn identification_with_the_tanaka_algebra() {
        let r = l3plus_check(2, 2, Identification::Rescaled).unwrap();
        assert!(r.ok(), "{r:?}");
    }
}
