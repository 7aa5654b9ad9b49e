//! Tanaka prolongation of a fundamental GNLA `m`.
//!
//! `g_k` (k >= 0) is the space of degree-k derivations `u: m → m ⊕ g_0 ⊕ … ⊕ g_{k-1}`.
//! A derivation is determined by its restriction to `g_{-1}`; the unknowns are that
//! block only, and the value on `g_{-i}` is propagated through fixed spanning
//! brackets `[a, c]` with `a ∈ g_{-1}`, `c ∈ g_{-i+1}`. The derivation identity on
//! every basis pair of `m` gives the linear system whose kernel is `g_k`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use symbolic::{MatrixQ, Rational};

use crate::error::{CoreError, Result};
use crate::gnla::{jacobi_holds, BasisElement, Gnla, GnlaJson};

/// A degree-k graded derivation, stored per negative grade `g` as the matrix
/// `g_g → component(k + g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub degree: i32,
    pub blocks: BTreeMap<i32, MatrixQ>,
}

impl GradedMap {
    /// Restriction to `g_{-1}`, flattened column by column.
    pub fn degree_one_part(&self) -> Vec<Rational> {
        let b = &self.blocks[&-1];
        (0..b.cols()).flat_map(|c| b.column(c)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    /// `g_{K+1} = 0`; the top grade is `K`.
    Finite(i32),
    /// Components up to this grade are all nonzero.
    CappedAt(i32),
}

#[derive(Clone, Debug)]
pub struct ProlongationResult {
    pub base: Gnla,
    /// `components[k]` is a basis of `g_k`.
    pub components: Vec<Vec<GradedMap>>,
    pub status: Status,
    pub h0: usize,
    /// Full structure constants of `m ⊕ g_0 ⊕ … ⊕ g_K`; present when finite.
    pub algebra: Option<Gnla>,
}

impl ProlongationResult {
    pub fn graded_dims(&self) -> BTreeMap<i32, usize> {
        let mut dims = self.base.grade_profile().dims;
        for (k, c) in self.components.iter().enumerate() {
            if !c.is_empty() {
                dims.insert(k as i32, c.len());
            }
        }
        dims
    }

    /// Dimensions from the lowest grade up to the top computed grade.
    pub fn graded_sequence(&self) -> Vec<usize> {
        let dims = self.graded_dims();
        let lo = *dims.keys().next().unwrap_or(&0);
        let hi = *dims.keys().next_back().unwrap_or(&0);
        (lo..=hi).map(|g| dims.get(&g).copied().unwrap_or(0)).collect()
    }

    pub fn nonnegative_dims(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).take_while(|&d| d > 0).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.graded_dims().values().sum()
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.status, Status::Finite(_))
    }

    pub fn to_json(&self) -> ProlongationJson {
        ProlongationJson {
            graded_dims: self.graded_dims().into_iter().map(|(g, d)| (g.to_string(), d)).collect(),
            status: match self.status {
                Status::Finite(_) => "finite".into(),
                Status::CappedAt(_) => "capped".into(),
            },
            top: match self.status {
                Status::Finite(k) | Status::CappedAt(k) => k,
            },
            h0: self.h0,
            brackets: self.algebra.as_ref().map(Gnla::to_json_value),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ProlongationJson {
    pub graded_dims: BTreeMap<String, usize>,
    pub status: String,
    pub top: i32,
    pub h0: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brackets: Option<GnlaJson>,
}

/// Default grade cap: `2·depth + 4`.
pub fn default_cap(a: &Gnla) -> i32 {
    2 * a.depth() + 4
}

struct Prolonger<'a> {
    base: &'a Gnla,
    depth: i32,
    // position of a base element inside its grade component
    pos: Vec<usize>,
    by_grade: BTreeMap<i32, Vec<usize>>,
    // for each base element of grade <= -2: (a, c, λ) with b = Σ λ [a, c]
    tree: Vec<Vec<(usize, usize, Rational)>>,
    comps: Vec<Vec<GradedMap>>,
}

impl<'a> Prolonger<'a> {
    fn new(base: &'a Gnla) -> Result<Self> {
        if !base.is_pure() {
            return Err(CoreError::NotFundamental("grades must be negative".into()));
        }
        let mut by_grade: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        let mut pos = vec![0; base.dim()];
        for i in 0..base.dim() {
            let list = by_grade.entry(base.grade(i)).or_default();
            pos[i] = list.len();
            list.push(i);
        }
        let depth = base.depth();
        let mut p = Prolonger { base, depth, pos, by_grade, tree: vec![Vec::new(); base.dim()], comps: Vec::new() };
        p.build_tree()?;
        Ok(p)
    }

    fn grade_basis(&self, g: i32) -> &[usize] {
        self.by_grade.get(&g).map(Vec::as_slice).unwrap_or(&[])
    }

    fn build_tree(&mut self) -> Result<()> {
        if self.grade_basis(-1).is_empty() {
            return Err(CoreError::NotFundamental("grade -1 component is empty".into()));
        }
        for i in 2..=self.depth {
            let target = self.grade_basis(-i).to_vec();
            if target.is_empty() {
                return Err(CoreError::NotFundamental(format!("grade {} is empty", -i)));
            }
            let mut pairs = Vec::new();
            let mut cols = Vec::new();
            for &a in self.grade_basis(-1) {
                for &c in self.grade_basis(-i + 1) {
                    let v = self.base.bracket(&self.base.unit(a), &self.base.unit(c));
                    cols.push(target.iter().map(|&t| v[t].clone()).collect::<Vec<_>>());
                    pairs.push((a, c));
                }
            }
            let m = MatrixQ::from_columns(&cols, target.len());
            for (r, &b) in target.iter().enumerate() {
                let mut rhs = vec![Rational::zero(); target.len()];
                rhs[r] = Rational::from_integer(1.into());
                let sol = m.solve(&rhs).ok_or_else(|| {
                    CoreError::NotFundamental(format!(
                        "{} is not a bracket of grade -1 with grade {}",
                        self.base.name(b),
                        -i + 1
                    ))
                })?;
                self.tree[b] = pairs
                    .iter()
                    .zip(sol)
                    .filter(|(_, l)| !l.is_zero())
                    .map(|(&(a, c), l)| (a, c, l))
                    .collect();
            }
        }
        Ok(())
    }

    fn comp_dim(&self, j: i32) -> usize {
        if j < 0 {
            self.grade_basis(j).len()
        } else {
            self.comps.get(j as usize).map_or(0, Vec::len)
        }
    }

    /// Matrix of `w ↦ [w, x]` from component `j` to component `j + grade(x)`.
    fn l_matrix(&self, j: i32, x: usize) -> MatrixQ {
        let gx = self.base.grade(x);
        let rows = self.comp_dim(j + gx);
        let cols = self.comp_dim(j);
        let mut out = MatrixQ::zeros(rows, cols);
        if rows == 0 || cols == 0 {
            return out;
        }
        if j < 0 {
            for (s, &w) in self.grade_basis(j).iter().enumerate() {
                for (k, c) in self.base.bracket_basis(w, x) {
                    out[(self.pos[*k], s)] = c.clone();
                }
            }
        } else {
            for (s, u) in self.comps[j as usize].iter().enumerate() {
                let block = &u.blocks[&gx];
                for r in 0..rows {
                    out[(r, s)] = block[(r, self.pos[x])].clone();
                }
            }
        }
        out
    }

    /// Computes `g_k`, assuming `g_0 … g_{k-1}` are known.
    fn next_component(&self, k: i32) -> Vec<GradedMap> {
        let n1 = self.grade_basis(-1).len();
        let r1 = self.comp_dim(k - 1);
        let nunk = r1 * n1;
        if nunk == 0 {
            return Vec::new();
        }
        // U[b]: matrix (dim comp(k + grade b)) × nunk
        let mut u: Vec<Option<MatrixQ>> = vec![None; self.base.dim()];
        for (p, &a) in self.grade_basis(-1).iter().enumerate() {
            let mut sel = MatrixQ::zeros(r1, nunk);
            for r in 0..r1 {
                sel[(r, r * n1 + p)] = Rational::from_integer(1.into());
            }
            u[a] = Some(sel);
        }
        for i in 2..=self.depth {
            for &b in self.grade_basis(-i) {
                let mut acc = MatrixQ::zeros(self.comp_dim(k - i), nunk);
                for (a, c, lambda) in &self.tree[b] {
                    let ua = u[*a].as_ref().expect("grade -1 filled");
                    let uc = u[*c].as_ref().expect("shallower grade filled");
                    let t1 = self.l_matrix(k - 1, *c).mul(ua);
                    let t2 = self.l_matrix(k - i + 1, *a).mul(uc);
                    acc = acc.add(&t1.sub(&t2).scale(lambda));
                }
                u[b] = Some(acc);
            }
        }
        let u: Vec<MatrixQ> = u.into_iter().map(|m| m.expect("all grades filled")).collect();
        let mut system = MatrixQ::zeros(0, nunk);
        let n = self.base.dim();
        for x in 0..n {
            for y in x + 1..n {
                let target = k + self.base.grade(x) + self.base.grade(y);
                let rows = self.comp_dim(target);
                if rows == 0 {
                    continue;
                }
                let mut lhs = MatrixQ::zeros(rows, nunk);
                for (e, c) in self.base.bracket_basis(x, y) {
                    lhs = lhs.add(&u[*e].scale(c));
                }
                let t1 = self.l_matrix(k + self.base.grade(x), y).mul(&u[x]);
                let t2 = self.l_matrix(k + self.base.grade(y), x).mul(&u[y]);
                let eq = lhs.sub(&t1).add(&t2);
                for r in 0..rows {
                    if eq.row(r).iter().any(|c| !c.is_zero()) {
                        system.push_row(eq.row(r).to_vec());
                    }
                }
            }
        }
        let system = if system.rows() > 0 { system.rref().matrix } else { system };
        system
            .kernel()
            .into_iter()
            .map(|v| {
                let mut blocks = BTreeMap::new();
                for (&g, elems) in &self.by_grade {
                    let cols: Vec<Vec<Rational>> = elems.iter().map(|&b| u[b].mul_vec(&v)).collect();
                    blocks.insert(g, MatrixQ::from_columns(&cols, self.comp_dim(k + g)));
                }
                GradedMap { degree: k, blocks }
            })
            .collect()
    }
}

/// Basis of `g_0`, the grade-preserving derivations of `a`.
pub fn compute_g0(a: &Gnla) -> Result<Vec<GradedMap>> {
    let p = Prolonger::new(a)?;
    Ok(p.next_component(0))
}

/// Basis of `h_0 = { v ∈ g_0 : [v, g_r] = 0 for all r < -1 }`, as coefficient
/// vectors over the `g_0` basis.
pub fn compute_h0(a: &Gnla) -> Result<Vec<Vec<Rational>>> {
    let g0 = compute_g0(a)?;
    Ok(h0_of(&g0))
}

fn h0_of(g0: &[GradedMap]) -> Vec<Vec<Rational>> {
    if g0.is_empty() {
        return Vec::new();
    }
    let cols: Vec<Vec<Rational>> = g0
        .iter()
        .map(|u| {
            u.blocks
                .iter()
                .filter(|(&g, _)| g < -1)
                .flat_map(|(_, b)| (0..b.cols()).flat_map(move |c| b.column(c)))
                .collect()
        })
        .collect();
    let rows = cols[0].len();
    if rows == 0 {
        return MatrixQ::identity(g0.len()).to_rows();
    }
    MatrixQ::from_columns(&cols, rows).kernel()
}

/// Tanaka prolongation up to `cap` (default [`default_cap`]).
pub fn prolong(a: &Gnla, cap: Option<i32>) -> Result<ProlongationResult> {
    let cap = cap.unwrap_or_else(|| default_cap(a));
    if cap < 0 {
        return Err(crate::error::invalid("cap must be non-negative"));
    }
    let mut p = Prolonger::new(a)?;
    let mut status = Status::CappedAt(cap);
    for k in 0..=cap {
        let c = p.next_component(k);
        if c.is_empty() {
            status = Status::Finite(k - 1);
            break;
        }
        p.comps.push(c);
    }
    let h0 = p.comps.first().map_or(0, |g0| h0_of(g0).len());
    let algebra = match status {
        Status::Finite(_) => Some(assemble(&p)?),
        Status::CappedAt(_) => None,
    };
    Ok(ProlongationResult { base: a.clone(), components: p.comps, status, h0, algebra })
}

/// `dim t`, or `None` when the cap is reached first.
pub fn tanaka_dim(a: &Gnla, cap: Option<i32>) -> Result<Option<usize>> {
    let r = prolong(a, cap)?;
    Ok(r.is_finite().then(|| r.total_dim()))
}

struct Assembler<'p, 'a> {
    p: &'p Prolonger<'a>,
    memo: HashMap<(i32, usize, i32, usize), Vec<Rational>>,
}

impl Assembler<'_, '_> {
    fn top(&self) -> i32 {
        self.p.comps.len() as i32 - 1
    }

    /// `[u, w]` for `u = g_a[s]` and `w ∈ component(j)` given by coordinates.
    fn act(&mut self, a: i32, s: usize, j: i32, w: &[Rational]) -> Result<Vec<Rational>> {
        let dim = self.p.comp_dim(a + j);
        let mut out = vec![Rational::zero(); dim];
        if dim == 0 {
            return Ok(out);
        }
        if j < 0 {
            let block = &self.p.comps[a as usize][s].blocks[&j];
            return Ok(block.mul_vec(w));
        }
        for (q, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = self.g_bracket(a, s, j, q)?;
            for (o, x) in out.iter_mut().zip(v) {
                *o += c * x;
            }
        }
        Ok(out)
    }

    /// Coordinates of `[g_a[s], g_b[t]]` in `g_{a+b}`.
    fn g_bracket(&mut self, a: i32, s: usize, b: i32, t: usize) -> Result<Vec<Rational>> {
        if let Some(v) = self.memo.get(&(a, s, b, t)) {
            return Ok(v.clone());
        }
        let p = self.p;
        let mut restriction = Vec::new();
        for &x in p.grade_basis(-1) {
            let vx = p.comps[b as usize][t].blocks[&-1].column(p.pos[x]);
            let ux = p.comps[a as usize][s].blocks[&-1].column(p.pos[x]);
            let t1 = self.act(a, s, b - 1, &vx)?;
            let t2 = self.act(b, t, a - 1, &ux)?;
            restriction.extend(t1.iter().zip(&t2).map(|(x, y)| x - y));
        }
        let value = if a + b > self.top() {
            if restriction.iter().any(|c| !c.is_zero()) {
                return Err(CoreError::Verification(format!(
                    "bracket of grades {a} and {b} does not vanish beyond the top grade"
                )));
            }
            Vec::new()
        } else {
            let cols: Vec<Vec<Rational>> =
                p.comps[(a + b) as usize].iter().map(GradedMap::degree_one_part).collect();
            let m = MatrixQ::from_columns(&cols, restriction.len());
            m.solve(&restriction).ok_or_else(|| {
                CoreError::Verification(format!("bracket of grades {a} and {b} is not a derivation"))
            })?
        };
        self.memo.insert((a, s, b, t), value.clone());
        Ok(value)
    }
}

fn assemble(p: &Prolonger) -> Result<Gnla> {
    let base = p.base;
    let m = base.dim();
    let mut basis: Vec<BasisElement> = base.basis().to_vec();
    let mut offset = Vec::new();
    for (k, c) in p.comps.iter().enumerate() {
        offset.push(basis.len());
        for j in 0..c.len() {
            basis.push(BasisElement { name: format!("t{k}_{j}"), grade: k as i32 });
        }
    }
    let total = basis.len();
    let global = |g: i32, coords: &[Rational]| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); total];
        if g < 0 {
            for (q, c) in coords.iter().enumerate() {
                v[p.grade_basis(g)[q]] = c.clone();
            }
        } else {
            for (q, c) in coords.iter().enumerate() {
                v[offset[g as usize] + q] = c.clone();
            }
        }
        v
    };
    let mut brackets: Vec<((usize, usize), Vec<Rational>)> = Vec::new();
    for (&(i, j), v) in base.brackets() {
        let mut w = v.clone();
        w.resize(total, Rational::zero());
        brackets.push(((i, j), w));
    }
    let mut asm = Assembler { p, memo: HashMap::new() };
    for (a, comp) in p.comps.iter().enumerate() {
        let a = a as i32;
        for (s, u) in comp.iter().enumerate() {
            for x in 0..m {
                let gx = base.grade(x);
                if p.comp_dim(a + gx) == 0 {
                    continue;
                }
                let col = u.blocks[&gx].column(p.pos[x]);
                // stored as [x, u] = -u(x)
                let v: Vec<Rational> = global(a + gx, &col).into_iter().map(|c| -c).collect();
                brackets.push(((x, offset[a as usize] + s), v));
            }
        }
    }
    for a in 0..p.comps.len() as i32 {
        for b in a..p.comps.len() as i32 {
            for s in 0..p.comps[a as usize].len() {
                let t0 = if a == b { s + 1 } else { 0 };
                for t in t0..p.comps[b as usize].len() {
                    let v = asm.g_bracket(a, s, b, t)?;
                    if a + b <= asm.top() {
                        brackets.push(((offset[a as usize] + s, offset[b as usize] + t), global(a + b, &v)));
                    }
                }
            }
        }
    }
    let tag = base.tag().map(|t| format!("tanaka({t})"));
    let algebra = Gnla::new(basis, brackets, tag)?;
    if !jacobi_holds(&algebra) {
        return Err(CoreError::Verification("assembled Tanaka algebra violates Jacobi".into()));
    }
    Ok(algebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{goursat, heis3, make_fmn};

    #[test]
    fn g0_dimensions() {
        assert_eq!(compute_g0(&make_fmn(2, 2).unwrap()).unwrap().len(), 2);
        assert_eq!(compute_g0(&make_fmn(2, 3).unwrap()).unwrap().len(), 3);
        assert_eq!(compute_g0(&heis3()).unwrap().len(), 4);
    }

    #[test]
    fn h0_detects_infinite_type() {
        assert_eq!(compute_h0(&heis3()).unwrap().len(), 3);
        assert!(!compute_h0(&goursat(3).unwrap()).unwrap().is_empty());
        assert!(compute_h0(&make_fmn(1, 2).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn hilbert_cartan_is_g2() {
        let r = prolong(&make_fmn(1, 2).unwrap(), None).unwrap();
        assert_eq!(r.graded_sequence(), vec![2, 1, 2, 4, 2, 1, 2]);
        assert_eq!(r.status, Status::Finite(3));
        assert_eq!(r.algebra.as_ref().unwrap().dim(), 14);
    }

    #[test]
    fn non_fundamental_is_rejected() {
        let a = crate::gnla::GnlaBuilder::new()
            .element("a", -1)
            .element("b", -1)
            .element("c", -2)
            .build(None)
            .unwrap();
        assert!(matches!(compute_g0(&a), Err(CoreError::NotFundamental(_))));
    }
}
