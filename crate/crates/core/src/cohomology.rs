//! Graded Chevalley–Eilenberg cohomology of a pure GNLA `m`.
//!
//! A `q`-cochain with values in a graded module `V` is stored by its values on
//! increasing index tuples `i_1 < … < i_q`, one coordinate per module basis
//! vector. Its weight is `Σ |grade(e_i)| + grade(v)`; the differential preserves
//! weight, so every computation is done one weight at a time.
//!
//! The differential is the standard one,
//! `dω(x_0,…,x_q) = Σ_i (-1)^i x_i·ω(…x̂_i…) + Σ_{i<j} (-1)^{i+j} ω([x_i,x_j], …x̂_i…x̂_j…)`,
//! so on 1-cochains with trivial coefficients `dω(x,y) = -ω([x,y])`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use symbolic::{format_rational, MatrixQ, Rational};

use crate::error::{invalid, CoreError, Result};
use crate::gnla::Gnla;
use crate::tanaka::{compute_g0, GradedMap};

/// A finite-dimensional graded representation of a GNLA.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    pub names: Vec<String>,
    pub grades: Vec<i32>,
    /// `action[i]` is the matrix of `e_i`.
    pub action: Vec<MatrixQ>,
}

impl Module {
    /// The one-dimensional trivial module in grade 0.
    pub fn trivial(a: &Gnla) -> Module {
        Module { names: vec!["1".into()], grades: vec![0], action: vec![MatrixQ::zeros(1, 1); a.dim()] }
    }

    pub fn adjoint(a: &Gnla) -> Module {
        Module {
            names: a.basis().iter().map(|b| b.name.clone()).collect(),
            grades: a.basis().iter().map(|b| b.grade).collect(),
            action: (0..a.dim()).map(|i| a.ad(&a.unit(i))).collect(),
        }
    }

    /// The part of `t` below grade `below`, as an `m`-module through the bracket
    /// of `t`; `m` must occupy the first `a.dim()` basis slots of `t`.
    pub fn truncated(a: &Gnla, t: &Gnla, below: i32) -> Result<Module> {
        for i in 0..a.dim() {
            if t.name(i) != a.name(i) || t.grade(i) != a.grade(i) {
                return Err(invalid("the algebra is not the leading part of the larger one"));
            }
        }
        let idx: Vec<usize> = (0..t.dim()).filter(|&i| t.grade(i) < below).collect();
        let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut action = Vec::new();
        for x in 0..a.dim() {
            let mut m = MatrixQ::zeros(idx.len(), idx.len());
            for (col, &v) in idx.iter().enumerate() {
                for (r, c) in t.bracket_basis(x, v) {
                    let row = *pos.get(r).ok_or_else(|| invalid("the truncation is not a submodule"))?;
                    m[(row, col)] = c.clone();
                }
            }
            action.push(m);
        }
        Module::new(
            a,
            idx.iter().map(|&i| t.name(i).to_string()).collect(),
            idx.iter().map(|&i| t.grade(i)).collect(),
            action,
        )
    }

    /// Checks the shapes and `[ρ(x), ρ(y)] = ρ([x, y])` on all basis pairs.
    pub fn new(a: &Gnla, names: Vec<String>, grades: Vec<i32>, action: Vec<MatrixQ>) -> Result<Module> {
        let r = grades.len();
        if names.len() != r || action.len() != a.dim() || action.iter().any(|m| m.rows() != r || m.cols() != r) {
            return Err(invalid("module data has inconsistent sizes"));
        }
        for i in 0..a.dim() {
            for j in i + 1..a.dim() {
                let comm = action[i].mul(&action[j]).sub(&action[j].mul(&action[i]));
                let mut rhs = MatrixQ::zeros(r, r);
                for (k, c) in a.bracket_basis(i, j) {
                    rhs = rhs.add(&action[*k].scale(c));
                }
                if comm != rhs {
                    return Err(CoreError::Verification(format!(
                        "module action is not a representation on ({}, {})",
                        a.name(i),
                        a.name(j)
                    )));
                }
            }
        }
        Ok(Module { names, grades, action })
    }

    pub fn dim(&self) -> usize {
        self.grades.len()
    }

    fn is_trivial(&self) -> bool {
        self.dim() == 1 && self.action.iter().all(MatrixQ::is_zero)
    }
}

/// Basis of the weight-`w` part of `C^q(m, V)`: pairs (index tuple, module index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainSpace {
    pub q: usize,
    pub weight: i32,
    pub basis: Vec<(Vec<usize>, usize)>,
}

impl CochainSpace {
    pub fn new(a: &Gnla, module: &Module, q: usize, weight: i32) -> CochainSpace {
        let mut basis = Vec::new();
        for tuple in subsets(a.dim(), q) {
            let w: i32 = tuple.iter().map(|&i| -a.grade(i)).sum();
            for v in 0..module.dim() {
                if w + module.grades[v] == weight {
                    basis.push((tuple.clone(), v));
                }
            }
        }
        CochainSpace { q, weight, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn position(&self) -> BTreeMap<(Vec<usize>, usize), usize> {
        self.basis.iter().cloned().enumerate().map(|(p, k)| (k, p)).collect()
    }
}

/// All increasing `q`-tuples from `0..n` in lexicographic order.
pub fn subsets(n: usize, q: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(q);
    fn rec(start: usize, n: usize, q: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, q, cur, out);
            cur.pop();
        }
    }
    rec(0, n, q, &mut cur, &mut out);
    out
}

/// Inserts `k` into the sorted tuple; returns the sorted tuple and the sign of
/// moving `k` from the front into place, or `None` when `k` repeats.
fn insert_sorted(k: usize, rest: &[usize]) -> Option<(Vec<usize>, bool)> {
    let p = rest.partition_point(|&x| x < k);
    if rest.get(p) == Some(&k) {
        return None;
    }
    let mut t = rest.to_vec();
    t.insert(p, k);
    Some((t, p % 2 == 1))
}

/// Matrix of `d: C^q_w → C^{q+1}_w`.
pub fn ce_differential(a: &Gnla, module: &Module, q: usize, weight: i32) -> (CochainSpace, CochainSpace, MatrixQ) {
    let dom = CochainSpace::new(a, module, q, weight);
    let cod = CochainSpace::new(a, module, q + 1, weight);
    let pos = dom.position();
    let mut m = MatrixQ::zeros(cod.dim(), dom.dim());
    for (row, (tuple, b)) in cod.basis.iter().enumerate() {
        // module term
        if !module.is_trivial() {
            for i in 0..tuple.len() {
                let mut rest = tuple.clone();
                let x = rest.remove(i);
                let rho = &module.action[x];
                for a_idx in 0..module.dim() {
                    let c = &rho[(*b, a_idx)];
                    if c.is_zero() {
                        continue;
                    }
                    if let Some(&col) = pos.get(&(rest.clone(), a_idx)) {
                        let s = if i % 2 == 0 { c.clone() } else { -c.clone() };
                        m[(row, col)] += s;
                    }
                }
            }
        }
        // bracket term
        for i in 0..tuple.len() {
            for j in i + 1..tuple.len() {
                let rest: Vec<usize> =
                    tuple.iter().enumerate().filter(|&(p, _)| p != i && p != j).map(|(_, &x)| x).collect();
                for (k, c) in a.bracket_basis(tuple[i], tuple[j]) {
                    let Some((sorted, neg)) = insert_sorted(*k, &rest) else { continue };
                    let Some(&col) = pos.get(&(sorted, *b)) else { continue };
                    let flip = neg ^ ((i + j) % 2 == 1);
                    let s = if flip { -c.clone() } else { c.clone() };
                    m[(row, col)] += s;
                }
            }
        }
    }
    (dom, cod, m)
}

/// Weights in which `C^q(m, V)` is nonzero.
pub fn weights(a: &Gnla, module: &Module, q: usize) -> Vec<i32> {
    let mut ws = std::collections::BTreeSet::new();
    for tuple in subsets(a.dim(), q) {
        let w: i32 = tuple.iter().map(|&i| -a.grade(i)).sum();
        for g in &module.grades {
            ws.insert(w + g);
        }
    }
    ws.into_iter().collect()
}

/// One weight of `H^q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub weight: i32,
    pub space: CochainSpace,
    pub z: usize,
    pub b: usize,
    /// Reduced-echelon basis of the coboundaries.
    pub boundaries: Vec<Vec<Rational>>,
    /// Canonical class representatives: reduced modulo the coboundaries, then
    /// put in reduced-echelon form.
    pub reps: Vec<Vec<Rational>>,
}

impl GradedPiece {
    pub fn h(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates of the class of `cocycle` in the basis `reps`, or `None` if it
    /// is not a combination of cocycles of this weight.
    pub fn class_of(&self, cocycle: &[Rational]) -> Option<Vec<Rational>> {
        let cols: Vec<Vec<Rational>> = self.reps.iter().chain(&self.boundaries).cloned().collect();
        if cols.is_empty() {
            return cocycle.iter().all(Zero::is_zero).then(Vec::new);
        }
        let m = MatrixQ::from_columns(&cols, self.space.dim());
        let sol = m.solve(cocycle)?;
        Some(sol[..self.reps.len()].to_vec())
    }

    /// Canonical representative of the class with coordinates `c`.
    pub fn cocycle(&self, c: &[Rational]) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.space.dim()];
        for (r, x) in self.reps.iter().zip(c) {
            for (o, y) in v.iter_mut().zip(r) {
                *o += x * y;
            }
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub q: usize,
    pub by_weight: BTreeMap<i32, GradedPiece>,
}

impl CohomologyReport {
    pub fn total(&self) -> usize {
        self.by_weight.values().map(GradedPiece::h).sum()
    }

    /// Weights with nonzero cohomology and their dimensions.
    pub fn dims(&self) -> BTreeMap<i32, usize> {
        self.by_weight.iter().filter(|(_, p)| p.h() > 0).map(|(&w, p)| (w, p.h())).collect()
    }

    pub fn h_dim(&self, weight: i32) -> usize {
        self.by_weight.get(&weight).map_or(0, GradedPiece::h)
    }

    pub fn to_json(&self, a: &Gnla, module: &Module) -> CohomologyJson {
        let by_grading = self
            .by_weight
            .iter()
            .map(|(w, p)| {
                let reps = p.reps.iter().map(|r| cochain_terms(a, module, &p.space, r)).collect();
                (w.to_string(), PieceJson { z: p.z, b: p.b, h: p.h(), reps })
            })
            .collect();
        CohomologyJson { by_grading, total: self.total() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceJson {
    #[serde(rename = "Z")]
    pub z: usize,
    #[serde(rename = "B")]
    pub b: usize,
    #[serde(rename = "H")]
    pub h: usize,
    /// Each representative is a list of `[monomial, coefficient]` pairs.
    pub reps: Vec<Vec<(String, String)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CohomologyJson {
    pub by_grading: BTreeMap<String, PieceJson>,
    pub total: usize,
}

/// `e3` ↦ `w3`, `e1p` ↦ `w1p`; other names are wrapped as `w(name)`.
pub fn dual_name(name: &str) -> String {
    match name.strip_prefix('e') {
        Some(rest) => format!("w{rest}"),
        None => format!("w({name})"),
    }
}

/// Terms of a cochain as `("w3^w1", "1")`, highest basis index first.
pub fn cochain_terms(a: &Gnla, module: &Module, space: &CochainSpace, v: &[Rational]) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for ((tuple, m), c) in space.basis.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let q = tuple.len();
        // reversing a q-tuple has sign (-1)^{q(q-1)/2}
        let c = if (q * q.saturating_sub(1) / 2) % 2 == 1 { -c.clone() } else { c.clone() };
        let mut mon: Vec<String> = tuple.iter().rev().map(|&i| dual_name(a.name(i))).collect();
        if mon.is_empty() {
            mon.push("1".into());
        }
        let mut name = mon.join("^");
        if !module.is_trivial() {
            name = format!("{name}:{}", module.names[*m]);
        }
        out.push((name, format_rational(&c)));
    }
    out
}

fn graded_piece(a: &Gnla, module: &Module, q: usize, weight: i32) -> GradedPiece {
    let (space, _, dq) = ce_differential(a, module, q, weight);
    let z_basis = if space.dim() == 0 { Vec::new() } else { dq.kernel() };
    let boundaries = if q == 0 {
        Vec::new()
    } else {
        let (prev, _, dp) = ce_differential(a, module, q - 1, weight);
        if prev.dim() == 0 || space.dim() == 0 {
            Vec::new()
        } else {
            dp.transpose().rref().matrix.to_rows()
        }
    };
    let b = boundaries.len();
    let z = z_basis.len();
    let reps = reduce_modulo(&z_basis, &boundaries, space.dim());
    GradedPiece { weight, space, z, b, boundaries, reps }
}

/// Reduces `vs` modulo the reduced-echelon rows `basis` and returns the nonzero
/// rows of the echelon form of the result.
fn reduce_modulo(vs: &[Vec<Rational>], basis: &[Vec<Rational>], len: usize) -> Vec<Vec<Rational>> {
    let pivots: Vec<usize> =
        basis.iter().map(|r| r.iter().position(|c| !c.is_zero()).expect("nonzero row")).collect();
    let reduced: Vec<Vec<Rational>> = vs
        .iter()
        .map(|v| {
            let mut v = v.clone();
            for (row, &p) in basis.iter().zip(&pivots) {
                if !v[p].is_zero() {
                    let f = v[p].clone();
                    for (x, y) in v.iter_mut().zip(row) {
                        *x -= &f * y;
                    }
                }
            }
            v
        })
        .collect();
    if reduced.is_empty() {
        return Vec::new();
    }
    MatrixQ::from_rows(reduced, len).rref().matrix.to_rows()
}

/// `H^q(m, V)` in every weight where cochains exist.
pub fn cohomology(a: &Gnla, module: &Module, q: usize) -> CohomologyReport {
    let pieces: Vec<GradedPiece> =
        weights(a, module, q).into_par_iter().map(|w| graded_piece(a, module, q, w)).collect();
    CohomologyReport { q, by_weight: pieces.into_iter().map(|p| (p.weight, p)).collect() }
}

/// `H^2(m)` with trivial coefficients, by grading.
pub fn h2_graded(a: &Gnla) -> CohomologyReport {
    cohomology(a, &Module::trivial(a), 2)
}

/// One grading of `H^2(m)` with trivial coefficients.
pub fn h2_piece(a: &Gnla, k: i32) -> GradedPiece {
    graded_piece(a, &Module::trivial(a), 2, k)
}

/// Graded dimensions of `H^1(m, V)`.
pub fn h1_module(a: &Gnla, module: &Module) -> BTreeMap<i32, usize> {
    cohomology(a, module, 1).dims()
}

/// Basis of the closed 2-forms of the top grading `n - 1` of `p(n)`.
pub fn z2_maximal(pn: &Gnla) -> Result<(CochainSpace, Vec<Vec<Rational>>)> {
    let k = pn.depth() + 1;
    let (space, _, d) = ce_differential(pn, &Module::trivial(pn), 2, k);
    let z = if space.dim() == 0 { Vec::new() } else { d.kernel() };
    Ok((space, z))
}

/// A 2-cochain with trivial coefficients as an antisymmetric matrix `W_ij = ω(e_i, e_j)`.
pub fn cochain_matrix(a: &Gnla, space: &CochainSpace, v: &[Rational]) -> MatrixQ {
    let mut w = MatrixQ::zeros(a.dim(), a.dim());
    for ((t, _), c) in space.basis.iter().zip(v) {
        w[(t[0], t[1])] = c.clone();
        w[(t[1], t[0])] = -c.clone();
    }
    w
}

/// Coordinates of an antisymmetric matrix in `space`, or `None` if it has
/// components outside the space.
pub fn cochain_from_matrix(space: &CochainSpace, w: &MatrixQ) -> Option<Vec<Rational>> {
    let v: Vec<Rational> = space.basis.iter().map(|(t, _)| w[(t[0], t[1])].clone()).collect();
    let mut back = MatrixQ::zeros(w.rows(), w.cols());
    for ((t, _), c) in space.basis.iter().zip(&v) {
        back[(t[0], t[1])] = c.clone();
        back[(t[1], t[0])] = -c.clone();
    }
    (back == *w).then_some(v)
}

/// Full matrix of a grade-preserving map given by blocks.
pub fn derivation_matrix(a: &Gnla, u: &GradedMap) -> MatrixQ {
    let mut d = MatrixQ::zeros(a.dim(), a.dim());
    for (&g, block) in &u.blocks {
        let idx = a.indices_of_grade(g);
        for (c, &src) in idx.iter().enumerate() {
            for (r, &dst) in idx.iter().enumerate() {
                d[(dst, src)] = block[(r, c)].clone();
            }
        }
    }
    d
}

/// Infinitesimal action of `g_0` on one grading of `H^2(m)`.
#[derive(Clone, Debug)]
pub struct GaugeAction {
    pub piece: GradedPiece,
    /// One `h × h` matrix per `g_0` basis element, acting on class coordinates.
    pub matrices: Vec<MatrixQ>,
}

/// `(u·ω)(x, y) = -ω(ux, y) - ω(x, uy)` descended to `H^2_k`.
pub fn gauge_action(a: &Gnla, k: i32) -> Result<GaugeAction> {
    let piece = h2_piece(a, k);
    let g0 = compute_g0(a)?;
    let h = piece.h();
    let mut matrices = Vec::new();
    for u in &g0 {
        let d = derivation_matrix(a, u);
        let mut cols = Vec::new();
        for rep in &piece.reps {
            let w = cochain_matrix(a, &piece.space, rep);
            let image = d.transpose().mul(&w).add(&w.mul(&d)).scale(&-Rational::one());
            let v = cochain_from_matrix(&piece.space, &image)
                .ok_or_else(|| CoreError::Verification("gauge action leaves the grading".into()))?;
            let c = piece
                .class_of(&v)
                .ok_or_else(|| CoreError::Verification("gauge action does not preserve cocycles".into()))?;
            cols.push(c);
        }
        matrices.push(if h == 0 { MatrixQ::zeros(0, 0) } else { MatrixQ::from_columns(&cols, h) });
    }
    Ok(GaugeAction { piece, matrices })
}

impl GaugeAction {
    /// Dimension of `span{u·c}`, the tangent to the linear orbit of the class `c`.
    pub fn orbit_dim(&self, c: &[Rational]) -> usize {
        let vs: Vec<Vec<Rational>> = self.matrices.iter().map(|m| m.mul_vec(c)).collect();
        symbolic::matrix::rank_of(&vs, c.len())
    }

    /// Dimension of the orbit of the line through `c` in the projectivization.
    pub fn projective_orbit_dim(&self, c: &[Rational]) -> usize {
        if c.iter().all(Zero::is_zero) {
            return 0;
        }
        let mut vs: Vec<Vec<Rational>> = self.matrices.iter().map(|m| m.mul_vec(c)).collect();
        vs.push(c.to_vec());
        symbolic::matrix::rank_of(&vs, c.len()) - 1
    }

    pub fn is_fixed_line(&self, c: &[Rational]) -> bool {
        self.projective_orbit_dim(c) == 0 && c.iter().any(|x| !x.is_zero())
    }

    /// Lines fixed by every `g_0` element that are spanned by rational vectors:
    /// one basis vector per common rational eigenspace.
    pub fn fixed_lines(&self) -> Vec<Vec<Rational>> {
        let h = self.piece.h();
        if h == 0 {
            return Vec::new();
        }
        // common eigenvectors: intersect eigenspaces one matrix at a time
        let mut spaces: Vec<Vec<Vec<Rational>>> = vec![MatrixQ::identity(h).to_rows()];
        for m in &self.matrices {
            let eigenspaces: Vec<Vec<Vec<Rational>>> = rational_eigenvalues(m)
                .into_iter()
                .map(|lambda| m.sub(&MatrixQ::identity(h).scale(&lambda)).kernel())
                .collect();
            spaces = spaces
                .iter()
                .flat_map(|s| eigenspaces.iter().map(move |e| intersect(s, e, h)))
                .filter(|s| !s.is_empty())
                .collect();
        }
        let mut out: Vec<Vec<Rational>> = Vec::new();
        for s in spaces {
            for v in MatrixQ::from_rows(s, h).rref().matrix.to_rows() {
                if self.is_fixed_line(&v) && !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out
    }
}

/// Basis of `span(a) ∩ span(b)` in a space of dimension `n`.
fn intersect(a: &[Vec<Rational>], b: &[Vec<Rational>], n: usize) -> Vec<Vec<Rational>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // solve Σ x_i a_i − Σ y_j b_j = 0
    let mut cols: Vec<Vec<Rational>> = a.to_vec();
    cols.extend(b.iter().map(|v| v.iter().map(|c| -c.clone()).collect()));
    let m = MatrixQ::from_columns(&cols, n);
    let out: Vec<Vec<Rational>> = m
        .kernel()
        .iter()
        .map(|k| {
            let mut v = vec![Rational::zero(); n];
            for (x, ai) in k.iter().zip(a) {
                for (o, y) in v.iter_mut().zip(ai) {
                    *o += x * y;
                }
            }
            v
        })
        .collect();
    MatrixQ::from_rows(out, n).rref().matrix.to_rows()
}

/// Characteristic polynomial coefficients (highest first) by Faddeev–LeVerrier.
pub fn characteristic_polynomial(m: &MatrixQ) -> Vec<Rational> {
    let n = m.rows();
    let mut coeffs = vec![Rational::one()];
    let mut mk = MatrixQ::zeros(n, n);
    for k in 1..=n {
        let c_prev = coeffs.last().expect("nonempty").clone();
        mk = m.mul(&mk).add(&MatrixQ::identity(n).scale(&c_prev));
        let amk = m.mul(&mk);
        let trace: Rational = (0..n).map(|i| amk[(i, i)].clone()).sum();
        coeffs.push(-trace / Rational::from_integer((k as i64).into()));
    }
    coeffs
}

/// Distinct rational eigenvalues, ascending.
pub fn rational_eigenvalues(m: &MatrixQ) -> Vec<Rational> {
    let mut c = characteristic_polynomial(m);
    c.reverse();
    crate::univariate::rational_roots(&c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{heis3, make_fmn};

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(2, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn insertion_sign() {
        assert_eq!(insert_sorted(2, &[0, 1]), Some((vec![0, 1, 2], false)));
        assert_eq!(insert_sorted(1, &[0, 2]), Some((vec![0, 1, 2], true)));
        assert_eq!(insert_sorted(0, &[0, 2]), None);
    }

    #[test]
    fn heisenberg_h1_and_h2() {
        let a = heis3();
        let h1 = cohomology(&a, &Module::trivial(&a), 1);
        assert_eq!(h1.dims(), BTreeMap::from([(1, 2)]));
        let h2 = h2_graded(&a);
        assert_eq!(h2.dims(), BTreeMap::from([(3, 2)]));
    }

    #[test]
    fn charpoly() {
        let m = MatrixQ::from_i64(&[&[2, 1], &[0, 3]]);
        let c = characteristic_polynomial(&m);
        assert_eq!(c, vec![Rational::one(), Rational::from_integer((-5).into()), Rational::from_integer(6.into())]);
        assert_eq!(rational_eigenvalues(&m), vec![Rational::from_integer(2.into()), Rational::from_integer(3.into())]);
    }

    #[test]
    fn f12_one_form_differential() {
        // dω_2 = ω_1' ∧ ω_1: value −1 on (e1, e1p)
        let a = make_fmn(1, 2).unwrap();
        let triv = Module::trivial(&a);
        let (dom, cod, d) = ce_differential(&a, &triv, 1, 2);
        let i2 = dom.basis.iter().position(|(t, _)| t == &vec![a.require("e2").unwrap()]).unwrap();
        let j = cod.basis.iter().position(|(t, _)| t == &vec![0, 1]).unwrap();
        assert_eq!(d[(j, i2)], -Rational::one());
    }
}
