//! Derived flags, Carnot algebras at a point, Cauchy characteristics and the
//! affine prolongation of rank-2 distributions.
//!
//! Every level of a flag is represented by a local frame: vector fields whose
//! values at the base point are independent. Independence at a point is an
//! open condition, so the frame spans the level near the point and brackets of
//! frame fields generate the next level there.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use symbolic::matrix::rank_of;
use symbolic::{format_rational, MatrixQ, RatFun, Rational, VectorField};

use super::{sample_point, Distribution, MAX_ATTEMPTS};
use crate::error::{invalid, CoreError, Result};
use crate::gnla::{check_gnla, BasisElement, Gnla};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FlagMode {
    /// `Δ_{i+1} = Δ_i + [Δ, Δ_i]`
    Weak,
    /// `∇_{i+1} = ∇_i + [∇_i, ∇_i]`
    Strong,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagReport {
    pub mode: FlagMode,
    pub point: Vec<(String, Rational)>,
    /// Rank of each level at the point; nondecreasing.
    pub ranks: Vec<usize>,
    /// Rank increments, starting with the rank of the distribution.
    pub growth: Vec<usize>,
    /// Frame fields added at each level.
    pub adapted: Vec<Vec<VectorField>>,
    /// The last level is the whole tangent space.
    pub full: bool,
    /// Stopped at the level cap while still growing.
    pub capped: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagJson {
    pub mode: FlagMode,
    pub growth: Vec<usize>,
    pub ranks: Vec<usize>,
    pub point: BTreeMap<String, String>,
    pub full: bool,
    pub capped: bool,
}

impl FlagReport {
    pub fn to_json_value(&self) -> FlagJson {
        FlagJson {
            mode: self.mode,
            growth: self.growth.clone(),
            ranks: self.ranks.clone(),
            point: self.point.iter().map(|(n, v)| (n.clone(), format_rational(v))).collect(),
            full: self.full,
            capped: self.capped,
        }
    }
}

#[derive(Default)]
struct Frame {
    values: Vec<Vec<Rational>>,
}

impl Frame {
    /// Adds the value of `v` at `p` if it is independent of the frame.
    fn try_add(&mut self, v: &VectorField, p: &[Rational]) -> Result<bool> {
        let value = v.eval(p)?;
        self.values.push(value);
        if rank_of(&self.values, p.len()) == self.values.len() {
            Ok(true)
        } else {
            self.values.pop();
            Ok(false)
        }
    }

    fn len(&self) -> usize {
        self.values.len()
    }
}

/// Grows the flag of `d` at `p` level by level, at most `cap` levels.
pub fn derived_flag(d: &Distribution, p: &[Rational], mode: FlagMode, cap: usize) -> Result<FlagReport> {
    let n = d.chart.len();
    if p.len() != n {
        return Err(invalid(format!("point has {} coordinates, chart has {n}", p.len())));
    }
    let mut frame = Frame::default();
    let mut levels: Vec<Vec<VectorField>> = vec![Vec::new()];
    for g in &d.generators {
        if !frame.try_add(g, p)? {
            return Err(invalid("generators are dependent at the point"));
        }
        levels[0].push(g.clone());
    }
    let mut capped = false;
    while frame.len() < n {
        if levels.len() >= cap {
            capped = true;
            break;
        }
        let last = levels.last().expect("nonempty");
        let mut candidates = Vec::new();
        match mode {
            FlagMode::Weak => {
                for a in &levels[0] {
                    for b in last {
                        candidates.push(a.lie_bracket(b)?);
                    }
                }
            }
            FlagMode::Strong => {
                // pairs inside older levels were bracketed already
                let older: Vec<&VectorField> = levels[..levels.len() - 1].iter().flatten().collect();
                for b in last {
                    for a in &older {
                        candidates.push(a.lie_bracket(b)?);
                    }
                }
                for (i, a) in last.iter().enumerate() {
                    for b in &last[i + 1..] {
                        candidates.push(a.lie_bracket(b)?);
                    }
                }
            }
        }
        let mut new = Vec::new();
        for c in candidates {
            if frame.try_add(&c, p)? {
                new.push(c);
            }
        }
        if new.is_empty() {
            break;
        }
        levels.push(new);
    }
    let growth: Vec<usize> = levels.iter().map(Vec::len).collect();
    let ranks = growth
        .iter()
        .scan(0, |acc, g| {
            *acc += g;
            Some(*acc)
        })
        .collect();
    Ok(FlagReport {
        mode,
        point: d.chart.names().iter().cloned().zip(p.iter().cloned()).collect(),
        ranks,
        growth,
        adapted: levels,
        full: frame.len() == n,
        capped,
    })
}

/// The graded nilpotent algebra of the weak flag at a point.
#[derive(Clone, Debug)]
pub struct CarnotAtPoint {
    pub point: Vec<Rational>,
    pub algebra: Gnla,
    /// Frame fields per grade `-1, -2, …`.
    pub frame: Vec<Vec<VectorField>>,
}

fn level_names(level: usize, count: usize) -> Vec<String> {
    if count == 1 {
        vec![format!("v{level}")]
    } else {
        (1..=count).map(|j| format!("v{level}_{j}")).collect()
    }
}

/// Structure constants of the adapted frame at `p`, reduced modulo lower levels.
pub fn carnot_at_point(d: &Distribution, p: &[Rational]) -> Result<CarnotAtPoint> {
    let n = d.chart.len();
    let flag = derived_flag(d, p, FlagMode::Weak, n + 1)?;
    if !flag.full {
        return Err(CoreError::Verification(format!(
            "the weak flag stops at rank {} of {n}",
            flag.ranks.last().copied().unwrap_or(0)
        )));
    }
    let mut basis = Vec::new();
    let mut fields = Vec::new();
    let mut level_of = Vec::new();
    for (i, level) in flag.adapted.iter().enumerate() {
        for (name, f) in level_names(i + 1, level.len()).into_iter().zip(level) {
            basis.push(BasisElement { name, grade: -(i as i32 + 1) });
            fields.push(f);
            level_of.push(i + 1);
        }
    }
    let values: Vec<Vec<Rational>> = fields.iter().map(|f| f.eval(p)).collect::<std::result::Result<_, _>>()?;
    let inv = MatrixQ::from_columns(&values, n).inverse().expect("frame is a basis at the point");
    let depth = flag.adapted.len();
    let mut brackets = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let target = level_of[a] + level_of[b];
            let br = fields[a].lie_bracket(fields[b])?;
            let coords = inv.mul_vec(&br.eval(p)?);
            for (k, c) in coords.iter().enumerate() {
                if level_of[k] > target && !num_traits::Zero::is_zero(c) {
                    return Err(CoreError::Verification(format!(
                        "[{}, {}] leaves the flag level {target}",
                        basis[a].name, basis[b].name
                    )));
                }
            }
            if target <= depth {
                let v: Vec<Rational> = coords
                    .into_iter()
                    .enumerate()
                    .map(|(k, c)| if level_of[k] == target { c } else { Rational::default() })
                    .collect();
                brackets.push(((a, b), v));
            }
        }
    }
    let algebra = Gnla::new(basis, brackets, None)?;
    let report = check_gnla(&algebra);
    if !report.all_ok() {
        return Err(CoreError::Verification(format!("Carnot algebra fails its checks: {:?}", report.violations)));
    }
    Ok(CarnotAtPoint { point: p.to_vec(), algebra, frame: flag.adapted })
}

/// [`carnot_at_point`] at the first of the deterministic sample points where it succeeds.
pub fn carnot_at_sample(d: &Distribution, first_attempt: usize) -> Result<CarnotAtPoint> {
    let mut last = String::new();
    for attempt in first_attempt..first_attempt + MAX_ATTEMPTS {
        match carnot_at_point(d, &sample_point(&d.chart, attempt)) {
            Ok(c) => return Ok(c),
            Err(e) => last = e.to_string(),
        }
    }
    Err(CoreError::Degenerate { attempts: MAX_ATTEMPTS, message: last })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchyReport {
    pub dim: usize,
    /// Tangent vectors at the point.
    pub basis: Vec<Vec<Rational>>,
}

/// Vectors `v ∈ D_p` with `[v, X](p) ∈ D_p` for every generator `X`.
///
/// For `v = Σ f_a X_a` the bracket `[v, X_b]` is `Σ f_a [X_a, X_b]` modulo `D`,
/// so the condition is linear in the values `f_a(p)`.
pub fn cauchy_characteristics(d: &Distribution, p: &[Rational]) -> Result<CauchyReport> {
    let r = d.rank();
    let dp = d.eval_at(p)?;
    if dp.rank() < r {
        return Err(invalid("generators are dependent at the point"));
    }
    let annihilator = dp.transpose().kernel();
    let mut rows = Vec::new();
    for b in 0..r {
        let brs: Vec<Vec<Rational>> = (0..r)
            .map(|a| Ok(d.generators[a].lie_bracket(&d.generators[b])?.eval(p)?))
            .collect::<Result<_>>()?;
        for w in &annihilator {
            rows.push(brs.iter().map(|br| w.iter().zip(br).map(|(x, y)| x * y).sum()).collect());
        }
    }
    let coeffs = if rows.is_empty() { MatrixQ::identity(r).to_rows() } else { MatrixQ::from_rows(rows, r).kernel() };
    let basis: Vec<Vec<Rational>> = coeffs.iter().map(|c| dp.mul_vec(c)).collect();
    Ok(CauchyReport { dim: basis.len(), basis })
}

/// Both de-prolongability criteria for a rank-2 distribution with rank-3 derived part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeprolongReport {
    pub growth: Vec<usize>,
    /// Dimension of `D_p ∩ Ch(D_2)_p`.
    pub cauchy_in_d: usize,
    pub via_cauchy: bool,
    /// Growth starts `(2,1,1,…)`, or is `(2,1)`: the contact plane is the prolongation of a plane.
    pub via_growth: bool,
}

impl DeprolongReport {
    pub fn agree(&self) -> bool {
        self.via_cauchy == self.via_growth
    }
}

pub fn deprolongation_report(d: &Distribution, p: &[Rational]) -> Result<DeprolongReport> {
    if d.rank() != 2 {
        return Err(invalid("de-prolongation is defined for rank-2 distributions"));
    }
    let flag = derived_flag(d, p, FlagMode::Weak, d.chart.len() + 1)?;
    if flag.growth.get(1) != Some(&1) {
        return Err(invalid(format!("derived distribution must have rank 3, growth is {:?}", flag.growth)));
    }
    let d2 = Distribution::new(&d.chart, flag.adapted[..2].concat())?;
    let ch = cauchy_characteristics(&d2, p)?;
    let dp = d.eval_at(p)?;
    let mut span = ch.basis.clone();
    span.extend((0..2).map(|j| dp.column(j)));
    let cauchy_in_d = ch.dim + 2 - rank_of(&span, d.chart.len());
    Ok(DeprolongReport {
        via_growth: flag.growth.get(2).map_or(true, |&g| g == 1),
        growth: flag.growth,
        cauchy_in_d,
        via_cauchy: cauchy_in_d > 0,
    })
}

/// Decides de-prolongability; the two criteria must agree.
pub fn deprolongable(d: &Distribution, p: &[Rational]) -> Result<bool> {
    let r = deprolongation_report(d, p)?;
    if !r.agree() {
        return Err(CoreError::Verification(format!("de-prolongation criteria disagree: {r:?}")));
    }
    Ok(r.via_cauchy)
}

/// `⟨U + t·V, ∂t⟩` on the chart extended by a fresh coordinate `t`, with `V` the generator at `vertical`.
pub fn prolong_distribution(d: &Distribution, vertical: usize) -> Result<Distribution> {
    if d.rank() != 2 || vertical > 1 {
        return Err(invalid("prolongation needs a rank-2 distribution and a vertical index 0 or 1"));
    }
    let name = std::iter::once("t".to_string())
        .chain((1..).map(|i| format!("t{i}")))
        .find(|s| d.chart.index_of(s).is_none())
        .expect("some name is free");
    let chart = d.chart.extended([name]);
    let t = chart.len() - 1;
    let lift = |v: &VectorField| v.rechart(&chart).expect("chart extends the old one");
    let v = lift(&d.generators[vertical]);
    let u = lift(&d.generators[1 - vertical]);
    let moved = u.add(&v.mul_fn(&RatFun::var(&chart, t)))?;
    Distribution::new(&chart, vec![moved, VectorField::coordinate(&chart, t)])
}

#[cfg(test)]
mod tests {
    use super::super::{cartan_distribution, MongeEquation};
    use super::*;
    use crate::catalog::{goursat, hcprol, make_fmn};
    use crate::fingerprint::fingerprint;
    use symbolic::Chart;

    fn model(m: usize, n: usize) -> Distribution {
        cartan_distribution(&MongeEquation::model(m, n).unwrap())
    }

    fn growth(d: &Distribution, mode: FlagMode) -> Vec<usize> {
        derived_flag(d, &sample_point(&d.chart, 0), mode, 20).unwrap().growth
    }

    #[test]
    fn model_growth_vectors() {
        assert_eq!(growth(&model(1, 2), FlagMode::Weak), vec![2, 1, 2]);
        assert_eq!(growth(&model(2, 3), FlagMode::Weak), vec![2, 1, 2, 2]);
        let origin = vec![Rational::default(); 5];
        assert_eq!(derived_flag(&model(1, 2), &origin, FlagMode::Weak, 20).unwrap().growth, vec![2, 1, 2]);
        // y' = z'' has the first integral y - z', so the flag stops short of the tangent space
        let degenerate = cartan_distribution(&MongeEquation::parse(1, 2, "z2").unwrap());
        let f = derived_flag(&degenerate, &sample_point(&degenerate.chart, 0), FlagMode::Weak, 20).unwrap();
        assert_eq!(f.growth, vec![2, 1, 1]);
        assert!(!f.full && !f.capped);
    }

    #[test]
    fn flag_json_and_cap() {
        let d = model(1, 2);
        let f = derived_flag(&d, &sample_point(&d.chart, 0), FlagMode::Weak, 2).unwrap();
        assert!(f.capped && !f.full);
        assert_eq!(f.ranks, vec![2, 3]);
        let j = serde_json::to_value(f.to_json_value()).unwrap();
        assert_eq!(j["mode"], "weak");
        assert_eq!(j["point"]["x"], "1");
    }

    #[test]
    fn carnot_algebra_of_the_hilbert_cartan_model() {
        let d = model(1, 2);
        let c = carnot_at_point(&d, &sample_point(&d.chart, 0)).unwrap();
        assert_eq!(c.algebra.grade_profile().by_depth(), vec![2, 1, 2]);
        assert_eq!(fingerprint(&c.algebra).unwrap(), fingerprint(&make_fmn(1, 2).unwrap()).unwrap());
    }

    #[test]
    fn prolonged_hilbert_cartan() {
        let d = prolong_distribution(&model(1, 2), 1).unwrap();
        assert_eq!(d.chart.names().last().map(String::as_str), Some("t"));
        assert_eq!(growth(&d, FlagMode::Weak), vec![2, 1, 1, 1, 1]);
        let c = carnot_at_sample(&d, 0).unwrap();
        assert_eq!(c.algebra.grade_profile().by_depth(), vec![2, 1, 1, 1, 1]);
        let fp = fingerprint(&c.algebra).unwrap();
        assert_eq!(fp, fingerprint(&hcprol()).unwrap());
        assert_eq!(fp.tanaka_dim, Some(14));
        assert!(deprolongable(&d, &sample_point(&d.chart, 0)).unwrap());

        let d2 = prolong_distribution(&d, 1).unwrap();
        assert_eq!(d2.chart.names().last().map(String::as_str), Some("t1"));
        assert_eq!(growth(&d2, FlagMode::Weak), vec![2, 1, 1, 1, 1, 1]);
        let c2 = carnot_at_sample(&d2, 0).unwrap();
        assert_eq!(c2.algebra.grade_profile().by_depth(), vec![2, 1, 1, 1, 1, 1]);
        assert_eq!(fingerprint(&c2.algebra).unwrap().tanaka_dim, None);
    }

    #[test]
    fn prolonging_the_plane_gives_the_contact_plane() {
        let chart = Chart::new(["x", "y"]);
        let plane = Distribution::new(&chart, vec![VectorField::coordinate(&chart, 0), VectorField::coordinate(&chart, 1)]).unwrap();
        let d = prolong_distribution(&plane, 1).unwrap();
        assert_eq!(growth(&d, FlagMode::Weak), vec![2, 1]);
        assert!(deprolongable(&d, &sample_point(&d.chart, 0)).unwrap());
    }

    #[test]
    fn cauchy_characteristics_of_derived_distributions() {
        // Goursat plane on J²(R,R): ⟨∂x + y1∂y + y2∂y1, ∂y2⟩
        let chart = Chart::new(["x", "y", "y1", "y2"]);
        let var = |i| RatFun::var(&chart, i);
        let one = RatFun::one(&chart);
        let zero = RatFun::zero(&chart);
        let dx = VectorField::new(&chart, vec![one, var(2), var(3), zero]);
        let c2 = Distribution::new(&chart, vec![dx, VectorField::coordinate(&chart, 3)]).unwrap();
        let p = sample_point(&chart, 0);
        let flag = derived_flag(&c2, &p, FlagMode::Weak, 10).unwrap();
        let derived = Distribution::new(&chart, flag.adapted[..2].concat()).unwrap();
        assert_eq!(cauchy_characteristics(&derived, &p).unwrap().dim, 1);
        assert!(deprolongable(&c2, &p).unwrap());

        let hc = model(1, 2);
        let p = sample_point(&hc.chart, 0);
        let flag = derived_flag(&hc, &p, FlagMode::Weak, 10).unwrap();
        let derived = Distribution::new(&hc.chart, flag.adapted[..2].concat()).unwrap();
        assert_eq!(cauchy_characteristics(&derived, &p).unwrap().dim, 0);
        assert!(!deprolongable(&hc, &p).unwrap());

        let whole = Distribution::new(&chart, (0..4).map(|i| VectorField::coordinate(&chart, i)).collect()).unwrap();
        assert_eq!(cauchy_characteristics(&whole, &sample_point(&chart, 0)).unwrap().dim, 4);
    }

    #[test]
    fn degenerate_equation_is_deprolongable() {
        let d = cartan_distribution(&MongeEquation::parse(1, 2, "z2").unwrap());
        let r = deprolongation_report(&d, &sample_point(&d.chart, 0)).unwrap();
        assert!(r.via_cauchy && r.via_growth);
        assert_eq!(r.growth, vec![2, 1, 1]);
        assert!(matches!(carnot_at_sample(&d, 0), Err(CoreError::Degenerate { .. })));
    }

    #[test]
    fn degenerate_equation_with_full_flag() {
        // y' = z0·z2 is degenerate but bracket generating: growth (2,1,1,1), a Goursat symbol
        let d = cartan_distribution(&MongeEquation::parse(1, 2, "z0*z2").unwrap());
        let c = carnot_at_sample(&d, 0).unwrap();
        assert_eq!(c.algebra.grade_profile(), goursat(4).unwrap().grade_profile());
        assert!(deprolongable(&d, &c.point).unwrap());
    }
}
