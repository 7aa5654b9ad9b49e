//! Isomorphism invariants of a fundamental GNLA. Equal fingerprints are
//! necessary for isomorphism, not sufficient.

use std::collections::BTreeMap;

use num_traits::One;
use serde::{Deserialize, Serialize};
use symbolic::{MatrixQ, Rational};

use crate::cohomology::h2_graded;
use crate::error::Result;
use crate::gnla::Gnla;
use crate::tanaka::prolong;
use crate::univariate;

/// Real directions `x ∈ P(g_{-1})` where `ad_x^steps: g_{-from} → g_{-from-steps}`
/// has rank below its generic value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NullCount {
    pub from: i32,
    pub steps: u32,
    pub generic_rank: usize,
    pub real_points: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub profile: Vec<usize>,
    pub h2: BTreeMap<i32, usize>,
    /// `None` when the prolongation reaches the cap.
    pub tanaka_dim: Option<usize>,
    pub h0: usize,
    pub g0: usize,
    pub null_counts: Vec<NullCount>,
}

impl Fingerprint {
    pub fn tanaka_label(&self) -> String {
        self.tanaka_dim.map_or_else(|| "capped".to_string(), |d| d.to_string())
    }
}

pub fn fingerprint(a: &Gnla) -> Result<Fingerprint> {
    let t = prolong(a, None)?;
    Ok(Fingerprint {
        profile: a.grade_profile().by_depth(),
        h2: h2_graded(a).dims(),
        tanaka_dim: t.is_finite().then(|| t.total_dim()),
        h0: t.h0,
        g0: t.components.first().map_or(0, Vec::len),
        null_counts: null_counts(a),
    })
}

/// Coefficients in `s` of `(sA + B)^j`, lowest power first.
fn power_pencil(a: &MatrixQ, b: &MatrixQ, j: u32) -> Vec<MatrixQ> {
    let n = a.rows();
    let mut acc = vec![MatrixQ::identity(n)];
    for _ in 0..j {
        let mut next = vec![MatrixQ::zeros(n, n); acc.len() + 1];
        for (p, m) in acc.iter().enumerate() {
            next[p + 1] = next[p + 1].add(&a.mul(m));
            next[p] = next[p].add(&b.mul(m));
        }
        acc = next;
    }
    acc
}

fn block(m: &MatrixQ, rows: &[usize], cols: &[usize]) -> MatrixQ {
    MatrixQ::from_rows(rows.iter().map(|&r| cols.iter().map(|&c| m[(r, c)].clone()).collect()).collect(), cols.len())
}

fn eval_pencil(coeffs: &[MatrixQ], s: &Rational) -> MatrixQ {
    let mut out = MatrixQ::zeros(coeffs[0].rows(), coeffs[0].cols());
    for m in coeffs.iter().rev() {
        out = out.scale(s).add(m);
    }
    out
}

/// Interpolates the polynomial of degree `< xs.len()` through the points, lowest power first.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    let n = xs.len();
    let vander = MatrixQ::from_rows(
        xs.iter()
            .map(|x| {
                let mut row = Vec::with_capacity(n);
                let mut p = Rational::one();
                for _ in 0..n {
                    row.push(p.clone());
                    p *= x;
                }
                row
            })
            .collect(),
        n,
    );
    univariate::trim(vander.solve(ys).expect("distinct nodes"))
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    crate::cohomology::subsets(n, r)
}

fn null_counts(a: &Gnla) -> Vec<NullCount> {
    let g1 = a.indices_of_grade(-1);
    if g1.len() != 2 {
        return Vec::new();
    }
    let ad0 = a.ad(&a.unit(g1[0]));
    let ad1 = a.ad(&a.unit(g1[1]));
    let depth = a.depth();
    let mut out = Vec::new();
    for from in 1..depth {
        for steps in 1..=(depth - from) as u32 {
            let cols = a.indices_of_grade(-from);
            let rows = a.indices_of_grade(-from - steps as i32);
            if cols.is_empty() || rows.is_empty() {
                continue;
            }
            // x = s·b0 + b1; the direction b0 is the point at infinity
            let pencil: Vec<MatrixQ> =
                power_pencil(&ad0, &ad1, steps).iter().map(|m| block(m, &rows, &cols)).collect();
            let at_infinity = pencil.last().expect("nonempty").clone();
            let n_nodes = rows.len().min(cols.len()) * steps as usize + 1;
            let nodes: Vec<Rational> = (0..n_nodes as i64).map(|i| Rational::from_integer(i.into())).collect();
            let generic_rank = nodes.iter().map(|s| eval_pencil(&pencil, s).rank()).max().unwrap_or(0);
            if generic_rank == 0 {
                continue;
            }
            let mut g: Vec<Rational> = Vec::new();
            let minor_nodes: Vec<Rational> =
                (0..(generic_rank * steps as usize + 1) as i64).map(|i| Rational::from_integer(i.into())).collect();
            let values: Vec<MatrixQ> = minor_nodes.iter().map(|s| eval_pencil(&pencil, s)).collect();
            'minors: for rs in combinations(rows.len(), generic_rank) {
                for cs in combinations(cols.len(), generic_rank) {
                    let ys: Vec<Rational> = values.iter().map(|m| block(m, &rs, &cs).determinant()).collect();
                    let poly = interpolate(&minor_nodes, &ys);
                    g = if g.is_empty() { univariate::monic(&poly) } else { univariate::gcd(&g, &poly) };
                    if univariate::degree(&g) == Some(0) {
                        break 'minors;
                    }
                }
            }
            let mut real_points = univariate::count_real_roots(&g);
            if at_infinity.rank() < generic_rank {
                real_points += 1;
            }
            out.push(NullCount { from, steps, generic_rank, real_points });
        }
    }
    out
}

/// First catalog target whose fingerprint equals `fp`.
pub fn match_name(fp: &Fingerprint, targets: &[(String, Fingerprint)]) -> Option<String> {
    targets.iter().find(|(_, t)| t == fp).map(|(n, _)| n.clone())
}

pub fn catalog_fingerprints(targets: &[Gnla]) -> Result<Vec<(String, Fingerprint)>> {
    targets
        .iter()
        .map(|g| Ok((g.tag().unwrap_or("?").to_string(), fingerprint(g)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{ell6, h6, make_fmn, p};

    #[test]
    fn separates_the_three_6d_models() {
        let fp = |g: &Gnla| fingerprint(g).unwrap();
        let (a, b, c) = (fp(&p(6).unwrap()), fp(&h6()), fp(&ell6()));
        assert_ne!(a, b);
        assert_ne!(b, c);
        assert_ne!(a, c);
        assert_eq!(b.tanaka_dim, Some(8));
        assert_eq!(a.tanaka_dim, Some(11));
        let f12 = fp(&make_fmn(1, 2).unwrap());
        assert_eq!(f12.profile, vec![2, 1, 2]);
        assert_eq!(f12.h2, BTreeMap::from([(4, 3)]));
        assert_eq!(f12.tanaka_dim, Some(14));
        assert_eq!(f12.h0, 0);
    }

    #[test]
    fn quadratic_null_directions() {
        let count = |g: &Gnla| {
            null_counts(g).into_iter().find(|c| c.from == 2 && c.steps == 2).map(|c| c.real_points)
        };
        assert_eq!(count(&h6()), Some(2));
        assert_eq!(count(&ell6()), Some(0));
        assert_eq!(count(&p(6).unwrap()), Some(1));
    }
}
