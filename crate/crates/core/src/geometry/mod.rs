//! Jet-space geometry of Monge equations `y^(m) = F(x, y, …, y^(m-1), z, …, z^(n))`.
//!
//! The equation manifold has the chart `(x, y0, …, y{m-1}, z0, …, z{n})` and
//! carries the rank-2 Cartan distribution spanned by the total derivative and
//! `∂z{n}`. Symbolic work happens over rational functions; pointwise questions
//! (ranks, flags, Carnot algebras) are decided by exact evaluation at a
//! rational point.

mod darboux;
mod flag;
mod realize;
mod symmetry;

pub use darboux::{darboux_triples, DarbouxTriple};
pub use flag::{
    carnot_at_point, carnot_at_sample, cauchy_characteristics, deprolongable, derived_flag, deprolongation_report,
    prolong_distribution, CarnotAtPoint, CauchyReport, DeprolongReport, FlagJson, FlagMode, FlagReport,
};
pub use realize::{
    cochain_from_wedges, gauge_out, jet_display, model_coframe, named_class, potential, realize_extension_ode,
    realize_named, ModelCoframe, RealizedExtension, RealizedExtensionJson,
};
pub use symmetry::{
    expected_commutators, is_symmetry, l3plus_check, model_symmetries, prolong_vector_field,
    symmetry_algebra, symmetry_commutator_table, total_derivative, Identification, L3PlusReport, SymmetryTable,
};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use symbolic::{parse_ratfun, Chart, MatrixQ, RatFun, Rational, VectorField};

use crate::error::{invalid, CoreError, Result};

/// A Monge equation `y^(m) = F` on its own chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MongeEquation {
    pub m: usize,
    pub n: usize,
    pub f: RatFun,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MongeEquationJson {
    pub m: usize,
    pub n: usize,
    #[serde(rename = "F")]
    pub f: String,
}

/// Coordinates `x, y0..y{m-1}, z0..z{n}`.
pub fn equation_chart(m: usize, n: usize) -> Chart {
    let mut names = vec!["x".to_string()];
    names.extend((0..m).map(|i| format!("y{i}")));
    names.extend((0..=n).map(|j| format!("z{j}")));
    Chart::new(names)
}

impl MongeEquation {
    pub fn new(m: usize, n: usize, f: RatFun) -> Result<Self> {
        if m == 0 || m > n {
            return Err(invalid(format!("orders must satisfy 1 <= m <= n, got ({m},{n})")));
        }
        if f.chart() != &equation_chart(m, n) {
            return Err(invalid("F must be written over the equation chart"));
        }
        Ok(MongeEquation { m, n, f })
    }

    /// Reads `F` from text over the chart `(x, y0.., z0..)`.
    pub fn parse(m: usize, n: usize, f: &str) -> Result<Self> {
        if m == 0 || m > n {
            return Err(invalid(format!("orders must satisfy 1 <= m <= n, got ({m},{n})")));
        }
        let chart = equation_chart(m, n);
        let f = parse_ratfun(f, &chart).map_err(|e| CoreError::Symbolic(e.into()))?;
        Self::new(m, n, f)
    }

    /// The flat model `y^(m) = (z^(n))²`.
    pub fn model(m: usize, n: usize) -> Result<Self> {
        Self::parse(m, n, &format!("z{n}^2"))
    }

    pub fn chart(&self) -> &Chart {
        self.f.chart()
    }

    pub fn x(&self) -> usize {
        0
    }

    pub fn y(&self, i: usize) -> usize {
        1 + i
    }

    pub fn z(&self, j: usize) -> usize {
        1 + self.m + j
    }

    pub fn dim(&self) -> usize {
        self.m + self.n + 2
    }

    pub fn to_json_value(&self) -> MongeEquationJson {
        MongeEquationJson { m: self.m, n: self.n, f: self.f.to_string() }
    }

    pub fn from_json_value(j: &MongeEquationJson) -> Result<Self> {
        Self::parse(j.m, j.n, &j.f)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: MongeEquationJson = serde_json::from_str(text).map_err(|e| invalid(e.to_string()))?;
        Self::from_json_value(&j)
    }
}

/// A distribution given by generating vector fields on a chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    pub chart: Chart,
    pub generators: Vec<VectorField>,
}

impl Distribution {
    pub fn new(chart: &Chart, generators: Vec<VectorField>) -> Result<Self> {
        if generators.iter().any(|g| g.chart() != chart) {
            return Err(invalid("generators must live on the distribution chart"));
        }
        Ok(Distribution { chart: chart.clone(), generators })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Generator values at `p`, one column per generator.
    pub fn eval_at(&self, p: &[Rational]) -> Result<MatrixQ> {
        let cols: Vec<Vec<Rational>> = self.generators.iter().map(|g| g.eval(p)).collect::<std::result::Result<_, _>>()?;
        Ok(MatrixQ::from_columns(&cols, self.chart.len()))
    }
}

/// `⟨D_x, ∂z{n}⟩` with `D_x = ∂x + y1∂y0 + … + F∂y{m-1} + z1∂z0 + … + z{n}∂z{n-1}`.
pub fn cartan_distribution(eq: &MongeEquation) -> Distribution {
    let chart = eq.chart();
    let dz_n = VectorField::coordinate(chart, eq.z(eq.n));
    Distribution { chart: chart.clone(), generators: vec![total_derivative(eq), dz_n] }
}

/// Exact value of `∂²F/∂z{n}²` at `p` being nonzero.
pub fn nondegenerate_at(eq: &MongeEquation, p: &[Rational]) -> Result<bool> {
    let zn = eq.z(eq.n);
    let f2 = eq.f.derivative(zn).derivative(zn);
    Ok(!f2.eval(p)?.is_zero())
}

/// Deterministic rational point: `x = 1`, `y{i} = i+2`, `z{j} = j+3`, other
/// coordinates `index + 2`; attempt `a` adds `a·(index+1)` to every coordinate.
pub fn sample_point(chart: &Chart, attempt: usize) -> Vec<Rational> {
    chart
        .names()
        .iter()
        .enumerate()
        .map(|(idx, name)| {
            let base = if name == "x" {
                1
            } else if let Some(i) = name.strip_prefix('y').and_then(|s| s.parse::<i64>().ok()) {
                i + 2
            } else if let Some(j) = name.strip_prefix('z').and_then(|s| s.parse::<i64>().ok()) {
                j + 3
            } else {
                idx as i64 + 2
            };
            Rational::from_integer((base + (attempt * (idx + 1)) as i64).into())
        })
        .collect()
}

/// Maximum number of sample points tried before a computation gives up on genericity.
pub const MAX_ATTEMPTS: usize = 5;
