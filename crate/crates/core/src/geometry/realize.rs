//! Realization of central extensions of `f(m,n)` as underdetermined ODE systems
//! over the flat model `y^(m) = (z^(n))²`.
//!
//! The frame `e1 = −D_x`, `e1' = ∂z{n}` and its iterated brackets satisfy the
//! structure equations of `f(m,n)` with constant coefficients; the dual coframe
//! turns a 2-cocycle into a closed polynomial 2-form `α`. A potential `β` with
//! `dβ = α`, gauged to have no `dz{n}` term, is `−g dx` modulo the annihilator of
//! the Cartan distribution, and the extension is `v' = g`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use symbolic::{Chart, DiffForm, Monomial, Polynomial, RatFun, Rational, VectorField};

use super::{carnot_at_sample, total_derivative, Distribution, MongeEquation};
use crate::catalog::{make_fmn, matching_targets};
use crate::cohomology::CochainSpace;
use crate::error::{invalid, CoreError, Result};
use crate::extensions::central_extend;
use crate::fingerprint::{catalog_fingerprints, fingerprint, match_name, Fingerprint};
use crate::gnla::Gnla;

/// Left-invariant frame and coframe of the flat model, indexed like the basis of `f(m,n)`.
#[derive(Clone, Debug)]
pub struct ModelCoframe {
    pub equation: MongeEquation,
    pub algebra: Gnla,
    pub frame: Vec<VectorField>,
    /// `coframe[i](frame[j]) = δ_ij`.
    pub coframe: Vec<DiffForm>,
}

fn one() -> Rational {
    Rational::from_integer(1.into())
}

/// Inverse of a square matrix of rational functions by Gauss–Jordan elimination.
fn invert(mut m: Vec<Vec<RatFun>>) -> Result<Vec<Vec<RatFun>>> {
    let n = m.len();
    let chart = m[0][0].chart().clone();
    let mut inv: Vec<Vec<RatFun>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { RatFun::one(&chart) } else { RatFun::zero(&chart) }).collect()).collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| CoreError::Verification("frame is not invertible".into()))?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].recip().expect("nonzero pivot");
        for j in 0..n {
            m[col][j] = &m[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..n {
                let a = &m[r][j] - &(&f * &m[col][j]);
                m[r][j] = a;
                let b = &inv[r][j] - &(&f * &inv[col][j]);
                inv[r][j] = b;
            }
        }
    }
    Ok(inv)
}

/// Builds the frame by brackets along the relations of `f(m,n)` and checks every
/// bracket against the structure constants exactly.
pub fn model_coframe(m: usize, n: usize) -> Result<ModelCoframe> {
    if (m, n) == (1, 1) {
        return Err(invalid("the (1,1) model has no f(m,n) frame; its symbol is 4-dimensional"));
    }
    let eq = MongeEquation::model(m, n)?;
    let alg = make_fmn(m, n)?;
    let chart = eq.chart().clone();
    let dim = alg.dim();
    if dim != eq.dim() {
        return Err(CoreError::Verification(format!("f({m},{n}) has dimension {dim}, the chart {}", eq.dim())));
    }
    let mut frame: Vec<Option<VectorField>> = vec![None; dim];
    frame[alg.require("e1")?] = Some(total_derivative(&eq).scale(&-one()));
    frame[alg.require("e1p")?] = Some(VectorField::coordinate(&chart, eq.z(n)));
    while frame.iter().any(Option::is_none) {
        let mut progress = false;
        for (&(i, j), _) in alg.brackets() {
            let target = match alg.bracket_basis(i, j) {
                [(t, c)] if c == &one() => *t,
                _ => continue,
            };
            if frame[target].is_some() {
                continue;
            }
            if let (Some(a), Some(b)) = (&frame[i], &frame[j]) {
                frame[target] = Some(a.lie_bracket(b)?);
                progress = true;
            }
        }
        if !progress {
            return Err(CoreError::Verification("frame does not reach every basis element".into()));
        }
    }
    let frame: Vec<VectorField> = frame.into_iter().map(Option::unwrap).collect();
    for i in 0..dim {
        for j in i + 1..dim {
            let mut want = VectorField::zero(&chart);
            for (k, c) in alg.bracket_basis(i, j) {
                want = want.add(&frame[*k].scale(c))?;
            }
            if frame[i].lie_bracket(&frame[j])? != want {
                return Err(CoreError::Verification(format!(
                    "frame bracket [{}, {}] differs from the structure constants",
                    alg.name(i),
                    alg.name(j)
                )));
            }
        }
    }
    // rows of the inverse of the column matrix are the dual forms
    let cols: Vec<Vec<RatFun>> = (0..dim).map(|r| frame.iter().map(|f| f.component(r).clone()).collect()).collect();
    let inv = invert(cols)?;
    let coframe = inv
        .iter()
        .map(|row| {
            let mut w = DiffForm::zero(&chart, 1);
            for (c, f) in row.iter().enumerate() {
                if !f.is_zero() {
                    w = w.add(&DiffForm::dx(&chart, c).mul_fn(f))?;
                }
            }
            Ok(w)
        })
        .collect::<std::result::Result<Vec<_>, symbolic::SymbolicError>>()?;
    Ok(ModelCoframe { equation: eq, algebra: alg, frame, coframe })
}

impl ModelCoframe {
    pub fn form(&self, name: &str) -> Result<&DiffForm> {
        Ok(&self.coframe[self.algebra.require(name)?])
    }

    /// The 2-form `Σ c(e_i, e_j) ω_i∧ω_j` over increasing pairs.
    pub fn cocycle_form(&self, space: &CochainSpace, c: &[Rational]) -> Result<DiffForm> {
        let chart = self.equation.chart();
        let mut out = DiffForm::zero(chart, 2);
        for ((t, _), x) in space.basis.iter().zip(c) {
            if x.is_zero() {
                continue;
            }
            out = out.add(&self.coframe[t[0]].wedge(&self.coframe[t[1]])?.scale(x))?;
        }
        Ok(out)
    }
}

/// Cochain coordinates of `Σ c·ω_a∧ω_b` for named basis elements.
pub fn cochain_from_wedges(a: &Gnla, space: &CochainSpace, wedges: &[(&str, &str, i64)]) -> Result<Vec<Rational>> {
    let mut v = vec![Rational::from_integer(0.into()); space.dim()];
    for &(x, y, c) in wedges {
        let (i, j) = (a.require(x)?, a.require(y)?);
        if i == j {
            continue;
        }
        let (key, sign) = if i < j { (vec![i, j], c) } else { (vec![j, i], -c) };
        let pos = space
            .basis
            .iter()
            .position(|(t, _)| *t == key)
            .ok_or_else(|| invalid(format!("{x}^{y} has the wrong weight for grading {}", space.weight)))?;
        v[pos] += Rational::from_integer(sign.into());
    }
    Ok(v)
}

/// Coboundary-class representatives of the three 6D extensions of `f(1,2)`.
pub fn named_class(name: &str) -> Result<&'static [(&'static str, &'static str, i64)]> {
    match name {
        "par" | "p6" => Ok(&[("e3", "e1", 1)]),
        "hyp" | "h6" => Ok(&[("e3", "e1p", 1), ("e3p", "e1", 1)]),
        "ell" | "ell6" => Ok(&[("e3", "e1", 1), ("e3p", "e1p", 1)]),
        _ => Err(invalid(format!("unknown class {name:?}; expected par, hyp or ell"))),
    }
}

/// `∫ p d(var)` with zero constant.
fn antiderivative(p: &Polynomial, var: usize) -> Polynomial {
    Polynomial::from_terms(
        p.chart(),
        p.terms().map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            e[var] += 1;
            (Monomial::from_exponents(e.clone()), c / Rational::from_integer(e[var].into()))
        }),
    )
}

fn polynomial_of(f: &RatFun) -> Result<&Polynomial> {
    f.as_polynomial().ok_or_else(|| invalid(format!("coefficient {f} is not polynomial")))
}

/// A primitive of a closed polynomial 2-form by fiber integration along the
/// highest coordinate present: `β_k = −Σ_j (∫ α_jk dx_k) dx_j` clears every
/// `dx_j∧dx_k` term, and the closed remainder no longer involves `x_k`.
pub fn potential(alpha: &DiffForm) -> Result<DiffForm> {
    if alpha.degree() != 2 {
        return Err(invalid("potential expects a 2-form"));
    }
    if !alpha.exterior_derivative().is_zero() {
        return Err(invalid("2-form is not closed"));
    }
    let chart = alpha.chart().clone();
    let mut beta = DiffForm::zero(&chart, 1);
    let mut rest = alpha.clone();
    while let Some(k) = rest.terms().map(|(idx, _)| idx[1]).max() {
        let mut step = DiffForm::zero(&chart, 1);
        for (idx, coeff) in rest.terms().filter(|(idx, _)| idx[1] == k) {
            let f = RatFun::from_poly(antiderivative(polynomial_of(coeff)?, k));
            step = step.sub(&DiffForm::dx(&chart, idx[0]).mul_fn(&f))?;
        }
        rest = rest.sub(&step.exterior_derivative())?;
        beta = beta.add(&step)?;
    }
    if beta.exterior_derivative() != *alpha {
        return Err(CoreError::Verification("potential does not integrate the form".into()));
    }
    Ok(beta)
}

/// Removes the `d(var)` component of `β` by subtracting `d∫β_var d(var)`.
pub fn gauge_out(beta: &DiffForm, var: usize) -> Result<DiffForm> {
    let c = beta.coefficient(&[var]);
    if c.is_zero() {
        return Ok(beta.clone());
    }
    let phi = RatFun::from_poly(antiderivative(polynomial_of(&c)?, var));
    Ok(beta.sub(&DiffForm::function(phi).exterior_derivative())?)
}

#[derive(Clone, Debug)]
pub struct RealizedExtension {
    pub m: usize,
    pub n: usize,
    pub grading: i32,
    pub cocycles: Vec<Vec<Rational>>,
    pub alphas: Vec<DiffForm>,
    /// Gauged potentials, `dβ_l = α_l`, no `dz{n}` term.
    pub betas: Vec<DiffForm>,
    /// `v_l' = g_l`.
    pub g: Vec<RatFun>,
    pub extended: Distribution,
    pub system: Vec<String>,
    pub realized_fingerprint: Fingerprint,
    pub algebraic_fingerprint: Fingerprint,
    pub fingerprint_match: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizedExtensionJson {
    pub system: Vec<String>,
    pub beta: String,
    #[serde(rename = "fingerprintMatch")]
    pub fingerprint_match: Option<String>,
    /// The realized system has the symbol of the algebraic extension.
    #[serde(rename = "symbolAgrees")]
    pub symbol_agrees: bool,
}

impl RealizedExtension {
    pub fn symbol_agrees(&self) -> bool {
        self.realized_fingerprint == self.algebraic_fingerprint
    }

    pub fn to_json_value(&self) -> RealizedExtensionJson {
        let beta: Vec<String> = self.betas.iter().map(|b| b.to_string()).collect();
        RealizedExtensionJson {
            system: self.system.clone(),
            beta: beta.join("; "),
            fingerprint_match: self.fingerprint_match.clone(),
            symbol_agrees: self.symbol_agrees(),
        }
    }
}

/// `u` with `k` primes, or `u^(k)` beyond three.
fn derivative_name(u: &str, k: usize) -> String {
    match k {
        0 => u.to_string(),
        1..=3 => format!("{u}{}", "'".repeat(k)),
        _ => format!("{u}^({k})"),
    }
}

/// `f` printed with jet names: `y{i}` as `y` with `i` primes, likewise `z`.
/// Primed names are parenthesized so powers read unambiguously.
pub fn jet_display(f: &RatFun) -> String {
    let names: Vec<String> = f
        .chart()
        .names()
        .iter()
        .map(|s| {
            for u in ["y", "z"] {
                if let Some(k) = s.strip_prefix(u).and_then(|r| r.parse::<usize>().ok()) {
                    let d = derivative_name(u, k);
                    return if k == 0 { d } else { format!("({d})") };
                }
            }
            s.clone()
        })
        .collect();
    let display = Chart::new(names);
    let move_to = |p: &Polynomial| Polynomial::from_terms(&display, p.terms().map(|(m, c)| (m.clone(), c.clone())));
    RatFun::new(move_to(f.numerator()), move_to(f.denominator())).to_string()
}

fn pretty_equation(lhs: &str, rhs: &str) -> String {
    format!("{lhs} = {rhs}")
}

/// Realizes the central extension of `f(m,n)` by `cocycles` (weight-`k`
/// 2-cochain coordinates) as `y^(m) = (z^(n))², v_l' = g_l`.
pub fn realize_extension_ode(m: usize, n: usize, k: i32, cocycles: &[Vec<Rational>]) -> Result<RealizedExtension> {
    if k <= 3 {
        return Err(invalid(format!("realization needs grading k > 3, got {k}")));
    }
    if cocycles.is_empty() {
        return Err(invalid("at least one cocycle is required"));
    }
    let cf = model_coframe(m, n)?;
    let ext = central_extend(&cf.algebra, k, cocycles)?;
    let eq = &cf.equation;
    let chart = eq.chart().clone();
    let zn = eq.z(n);
    let dx = total_derivative(eq);

    let mut alphas = Vec::new();
    let mut betas = Vec::new();
    let mut g = Vec::new();
    for c in cocycles {
        let alpha = cf.cocycle_form(&ext.space, c)?;
        let beta = gauge_out(&potential(&alpha)?, zn)?;
        if beta.exterior_derivative() != alpha {
            return Err(CoreError::Verification("gauged potential lost dβ = α".into()));
        }
        // β ≡ β(e1)ω1 + β(e1')ω1' modulo the annihilator, with β(e1') = 0
        let gl = -beta.evaluate(&[&dx])?;
        alphas.push(alpha);
        betas.push(beta);
        g.push(gl);
    }

    let vnames: Vec<String> =
        if cocycles.len() == 1 { vec!["v".into()] } else { (0..cocycles.len()).map(|l| format!("v{l}")).collect() };
    let big = chart.extended(vnames.iter().cloned());
    let lift = |f: &RatFun| f.rechart(&big).expect("chart extends the equation chart");
    let mut dx_big = VectorField::new(&big, dx.components().iter().map(lift).chain(vnames.iter().map(|_| RatFun::zero(&big))).collect());
    for (l, gl) in g.iter().enumerate() {
        dx_big.set_component(chart.len() + l, lift(gl));
    }
    let extended = Distribution::new(&big, vec![dx_big, VectorField::coordinate(&big, zn)])?;

    // ω_v = dv + β annihilates the extended distribution
    for (l, beta) in betas.iter().enumerate() {
        let w = DiffForm::dx(&big, chart.len() + l).add(&beta.rechart(&big).expect("chart extends"))?;
        for gen in &extended.generators {
            if !w.evaluate(&[gen])?.is_zero() {
                return Err(CoreError::Verification("dv + β does not vanish on the extended distribution".into()));
            }
        }
    }

    let carnot = carnot_at_sample(&extended, 0)?;
    let realized_fingerprint = fingerprint(&carnot.algebra)?;
    let algebraic_fingerprint = fingerprint(&ext.result)?;
    let mut targets = matching_targets();
    if m < n {
        targets.push(make_fmn(m + 1, n)?);
    }
    targets.push(make_fmn(m, n + 1)?);
    let fingerprint_match = match_name(&realized_fingerprint, &catalog_fingerprints(&targets)?);

    let mut system = vec![pretty_equation(&derivative_name("y", m), &jet_display(&eq.f))];
    for (name, gl) in vnames.iter().zip(&g) {
        system.push(pretty_equation(&format!("{name}'"), &jet_display(gl)));
    }
    Ok(RealizedExtension {
        m,
        n,
        grading: k,
        cocycles: cocycles.to_vec(),
        alphas,
        betas,
        g,
        extended,
        system,
        realized_fingerprint,
        algebraic_fingerprint,
        fingerprint_match,
    })
}

/// One of the three 6D extensions of the Hilbert–Cartan model by name.
pub fn realize_named(name: &str) -> Result<RealizedExtension> {
    let cf = model_coframe(1, 2)?;
    let space = CochainSpace::new(&cf.algebra, &crate::cohomology::Module::trivial(&cf.algebra), 2, 4);
    let c = cochain_from_wedges(&cf.algebra, &space, named_class(name)?)?;
    realize_extension_ode(1, 2, 4, &[c])
}

#[cfg(test)]
mod tests {
    use super::*;
    use symbolic::parse_ratfun;

    fn form(chart: &Chart, terms: &[(&str, &[&str])]) -> DiffForm {
        let mut w = DiffForm::zero(chart, terms[0].1.len());
        for (c, idx) in terms {
            let f = parse_ratfun(c, chart).unwrap();
            let idx: Vec<usize> = idx.iter().map(|s| chart.index_of(s).unwrap()).collect();
            w = w.add(&DiffForm::monomial(f, &idx)).unwrap();
        }
        w
    }

    #[test]
    fn hilbert_cartan_coframe() {
        let cf = model_coframe(1, 2).unwrap();
        let c = cf.equation.chart();
        assert_eq!(*cf.form("e1").unwrap(), form(c, &[("-1", &["x"])]));
        assert_eq!(*cf.form("e1p").unwrap(), form(c, &[("1", &["z2"])]));
        assert_eq!(*cf.form("e2").unwrap(), form(c, &[("1", &["z1"]), ("-z2", &["x"])]));
        assert_eq!(*cf.form("e3").unwrap(), form(c, &[("1", &["z0"]), ("-z1", &["x"])]));
        // ½(dy − z2² dx) − z2(dz1 − z2 dx)
        let w3p = form(c, &[("1/2", &["y0"]), ("1/2*z2^2", &["x"]), ("-z2", &["z1"])]);
        assert_eq!(*cf.form("e3p").unwrap(), w3p);
        // structure equations dω_k = −Σ c^k_ij ω_i∧ω_j
        let w = |s: &str| cf.form(s).unwrap().clone();
        assert_eq!(w("e2").exterior_derivative(), w("e1p").wedge(&w("e1")).unwrap());
        assert_eq!(w("e3").exterior_derivative(), w("e2").wedge(&w("e1")).unwrap());
        assert_eq!(w("e3p").exterior_derivative(), w("e2").wedge(&w("e1p")).unwrap());
        assert!(w("e1").exterior_derivative().is_zero());
    }

    #[test]
    fn coframes_of_larger_models() {
        for (m, n) in [(2, 2), (1, 3), (2, 3), (3, 4)] {
            let cf = model_coframe(m, n).unwrap();
            for (i, w) in cf.coframe.iter().enumerate() {
                for (j, f) in cf.frame.iter().enumerate() {
                    let v = w.evaluate(&[f]).unwrap();
                    assert_eq!(v.is_one(), i == j);
                    assert!(i == j || v.is_zero());
                }
            }
        }
        assert!(model_coframe(1, 1).is_err());
    }

    #[test]
    fn homotopy_potential() {
        let c = Chart::new(["x", "y", "z"]);
        let alpha = form(&c, &[("y", &["x", "z"]), ("x", &["y", "z"])]);
        let beta = potential(&alpha).unwrap();
        assert_eq!(beta.exterior_derivative(), alpha);
        let gauged = gauge_out(&beta, 2).unwrap();
        assert!(gauged.coefficient(&[2]).is_zero());
        assert_eq!(gauged.exterior_derivative(), alpha);
        assert!(potential(&form(&c, &[("z", &["x", "y"])])).is_err());
    }

    #[test]
    fn jet_names() {
        let c = super::super::equation_chart(1, 2);
        let f = parse_ratfun("z0 - z2^3 + 2*y0*z1", &c).unwrap();
        assert_eq!(jet_display(&f), "-(z'')^3 + 2*y*(z') + z");
        assert_eq!(derivative_name("y", 4), "y^(4)");
    }
}
