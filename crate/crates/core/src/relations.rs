//! Solving for named elements of a Tanaka algebra from bracket relations.
//!
//! Each relation reads `[U, k] = Σ c_i X_i` where `U` is an unknown element of a
//! declared grade, `k` a basis element of the algebra and every `X_i` either an
//! unknown or a basis element. The system is linear in the coordinates of the
//! unknowns; the relations hold simultaneously iff it is consistent.

use std::collections::BTreeMap;

use num_traits::Zero;
use symbolic::{MatrixQ, Rational};

use crate::error::{invalid, CoreError, Result};
use crate::gnla::Gnla;
use crate::tanaka::ProlongationResult;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSpec {
    pub left: String,
    pub right: String,
    pub value: Vec<(String, Rational)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StructureRelations {
    pub unknowns: Vec<(String, i32)>,
    pub relations: Vec<RelationSpec>,
}

impl StructureRelations {
    pub fn unknown(&mut self, name: impl Into<String>, grade: i32) {
        self.unknowns.push((name.into(), grade));
    }

    /// Adds `[left, right] = Σ c·x`; zero coefficients are dropped.
    pub fn relation(&mut self, left: &str, right: &str, value: &[(&str, Rational)]) {
        self.relations.push(RelationSpec {
            left: left.into(),
            right: right.into(),
            value: value.iter().filter(|(_, c)| !c.is_zero()).map(|(n, c)| (n.to_string(), c.clone())).collect(),
        });
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSolution {
    pub consistent: bool,
    /// One solution, in coordinates of the full algebra.
    pub elements: BTreeMap<String, Vec<Rational>>,
    /// Dimension of the solution space of the homogeneous system.
    pub nullity: usize,
}

/// Solves the relations inside the assembled Tanaka algebra of `t`.
pub fn verify_structure_relations(t: &ProlongationResult, rels: &StructureRelations) -> Result<RelationSolution> {
    let alg = t
        .algebra
        .as_ref()
        .ok_or_else(|| invalid("relations need a finite prolongation with a bracket table"))?;
    solve_relations(alg, rels)
}

pub fn solve_relations(alg: &Gnla, rels: &StructureRelations) -> Result<RelationSolution> {
    let n = alg.dim();
    let mut var_offset = BTreeMap::new();
    let mut var_basis: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    let mut nvars = 0;
    for (name, grade) in &rels.unknowns {
        if alg.index_of(name).is_some() {
            return Err(invalid(format!("unknown {name:?} clashes with a basis element")));
        }
        let idx = alg.indices_of_grade(*grade);
        var_offset.insert(name.as_str(), nvars);
        nvars += idx.len();
        var_basis.insert(name.as_str(), idx);
    }
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for rel in &rels.relations {
        let off = *var_offset
            .get(rel.left.as_str())
            .ok_or_else(|| invalid(format!("left side {:?} is not a declared unknown", rel.left)))?;
        let k = alg.require(&rel.right)?;
        let mut block = vec![vec![Rational::zero(); nvars]; n];
        let mut b = vec![Rational::zero(); n];
        for (s, &bi) in var_basis[rel.left.as_str()].iter().enumerate() {
            for (r, c) in alg.bracket_basis(bi, k) {
                block[*r][off + s] += c;
            }
        }
        for (name, c) in &rel.value {
            if let Some(&voff) = var_offset.get(name.as_str()) {
                for (s, &bi) in var_basis[name.as_str()].iter().enumerate() {
                    block[bi][voff + s] -= c;
                }
            } else {
                let i = alg
                    .index_of(name)
                    .ok_or_else(|| CoreError::InvalidInput(format!("relation mentions unknown symbol {name:?}")))?;
                b[i] += c;
            }
        }
        for (row, v) in block.into_iter().zip(b) {
            if row.iter().any(|c| !c.is_zero()) || !v.is_zero() {
                rows.push(row);
                rhs.push(v);
            }
        }
    }
    let m = MatrixQ::from_rows(rows, nvars);
    let Some(sol) = m.solve(&rhs) else {
        return Ok(RelationSolution { consistent: false, elements: BTreeMap::new(), nullity: 0 });
    };
    let nullity = nvars - m.rank();
    let mut elements = BTreeMap::new();
    for (name, _) in &rels.unknowns {
        let off = var_offset[name.as_str()];
        let mut v = vec![Rational::zero(); n];
        for (s, &bi) in var_basis[name.as_str()].iter().enumerate() {
            v[bi] = sol[off + s].clone();
        }
        elements.insert(name.clone(), v);
    }
    Ok(RelationSolution { consistent: true, elements, nullity })
}

fn qi(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn e(i: i64) -> String {
    format!("e{i}")
}

fn ep(i: i64) -> String {
    format!("e{i}p")
}

/// Name of the grade-0 element with parameters (a,b,c), or (a,c) when `m = n`.
pub fn g0_name(params: &[i64]) -> String {
    let s: Vec<String> = params.iter().map(ToString::to_string).collect();
    format!("e0_{}", s.join(""))
}

/// Which coefficient to use for `[e_{-1}^{01}, e_k]` in the `m = 1` relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum M1Coefficient {
    /// `n² − k² + 2k − 4`
    Stated,
    /// `(k−1)(3−k) + n² − 1 = n² − k² + 4k − 4`
    FromGeneralElement,
}

/// Bracket relations describing `g_0` and the positive part of `t_{m,n}`.
pub fn tanaka_relations(m: i64, n: i64, coefficient: M1Coefficient) -> StructureRelations {
    let mut r = StructureRelations::default();
    let has_e = |k: i64| (1..=n + 1).contains(&k);
    let has_ep = |k: i64| k == 1 || (3..=m + 2).contains(&k);
    let g0: Vec<Vec<i64>> = if m == n {
        vec![vec![1, 0], vec![0, 1]]
    } else {
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
    };
    for params in &g0 {
        let name = g0_name(params);
        r.unknown(&name, 0);
        let (a, b, c) = if m == n { (params[0], 0, params[1]) } else { (params[0], params[1], params[2]) };
        r.relation(&name, "e1", &[("e1", qi(a)), ("e1p", qi(b))]);
        r.relation(&name, "e1p", &[("e1p", qi(c))]);
        for k in 2..=n + 1 {
            let mut value = vec![(e(k), qi((k - 1) * a + c))];
            if has_ep(k) {
                value.push((ep(k), qi((k - 2) * b)));
            }
            let value: Vec<(&str, Rational)> = value.iter().map(|(x, c)| (x.as_str(), c.clone())).collect();
            r.relation(&name, &e(k), &value);
        }
        for k in 3..=m + 2 {
            r.relation(&name, &ep(k), &[(&ep(k), qi((k - 2) * a + 2 * c))]);
        }
    }
    if m == 1 && n > 2 {
        r.unknown("em1_10", 1);
        r.unknown("em1_01", 1);
        r.relation("em1_10", "e1", &[("e0_010", qi(1))]);
        r.relation("em1_10", "e4", &[("e3p", qi(1))]);
        r.relation("em1_01", "e1", &[("e0_001", qi(1)), ("e0_100", qi(-2))]);
        r.relation("em1_01", "e1p", &[("e0_010", qi(1 - n * n))]);
        for k in 2..=n + 1 {
            let c = match coefficient {
                M1Coefficient::Stated => n * n - k * k + 2 * k - 4,
                M1Coefficient::FromGeneralElement => n * n - k * k + 4 * k - 4,
            };
            // `[e_{-1}, e_2]` lands in the line of `e_1'`, not `e_1`
            let target = if k == 2 { ep(1) } else { e(k - 1) };
            r.relation("em1_01", &e(k), &[(&target, qi(c))]);
        }
        for p in 2..=n - 2 {
            let name = format!("em{p}");
            r.unknown(&name, p as i32);
            let prev = if p == 2 { "em1_10".to_string() } else { format!("em{}", p - 1) };
            r.relation(&name, "e1", &[(&prev, qi(1))]);
            if has_e(p + 3) {
                r.relation(&name, &e(p + 3), &[("e3p", qi(1))]);
            }
        }
    } else if n > m {
        for p in 1..=n - m - 1 {
            let name = format!("em{p}");
            r.unknown(&name, p as i32);
            let prev = if p == 1 { g0_name(&[0, 1, 0]) } else { format!("em{}", p - 1) };
            r.relation(&name, "e1", &[(&prev, qi(1))]);
            for k in p + 3..=m + p + 2 {
                if has_e(k) {
                    r.relation(&name, &e(k), &[(&ep(k - p), qi(binom(k - 2, p + 1)))]);
                }
            }
        }
    }
    r
}
