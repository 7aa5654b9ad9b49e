//! Central extensions of pure grading and their classification up to the
//! infinitesimal gauge action.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use symbolic::{MatrixQ, Rational};

use crate::catalog::{matching_targets, p, pprime};
use crate::cohomology::{
    ce_differential, cochain_terms, gauge_action, h2_graded, h2_piece, CochainSpace, Module,
};
use crate::error::{invalid, CoreError, Result};
use crate::fingerprint::{catalog_fingerprints, fingerprint, match_name, Fingerprint};
use crate::gnla::{check_gnla, check_homomorphism, BasisElement, Gnla};
use crate::tanaka::tanaka_dim;

#[derive(Clone, Debug)]
pub struct CentralExtension {
    pub base: Gnla,
    pub grading: i32,
    pub space: CochainSpace,
    pub cocycles: Vec<Vec<Rational>>,
    pub result: Gnla,
    pub new_elements: Vec<String>,
    /// The classes are linearly independent in `H^2_k`.
    pub nontrivial: bool,
}

/// Next free name for a generator of grade `-k`: `e{k}`, `e{k}p`, `e{k}pp`, then `a{k}_i`.
fn fresh_name(taken: &[String], k: i32) -> String {
    for cand in [format!("e{k}"), format!("e{k}p"), format!("e{k}pp")] {
        if !taken.contains(&cand) {
            return cand;
        }
    }
    (1..).map(|i| format!("a{k}_{i}")).find(|c| !taken.contains(c)).expect("unbounded")
}

/// Extends `a` by one central generator of grade `-k` per cocycle; cocycles are
/// coordinates in the weight-`k` 2-cochains. `[x, y]` gains `-Σ α_l(x, y) a_l`.
pub fn central_extend(a: &Gnla, k: i32, cocycles: &[Vec<Rational>]) -> Result<CentralExtension> {
    if k <= 0 {
        return Err(invalid("extension grading must be positive"));
    }
    let triv = Module::trivial(a);
    let (space, _, d) = ce_differential(a, &triv, 2, k);
    for c in cocycles {
        if c.len() != space.dim() {
            return Err(invalid(format!("cocycle has {} coordinates, grading {k} has {}", c.len(), space.dim())));
        }
        if d.mul_vec(c).iter().any(|x| !x.is_zero()) {
            return Err(invalid("cochain is not closed"));
        }
    }
    let n = a.dim();
    let mut basis: Vec<BasisElement> = a.basis().to_vec();
    let mut new_elements = Vec::new();
    for _ in cocycles {
        let taken: Vec<String> = basis.iter().map(|b| b.name.clone()).collect();
        let name = fresh_name(&taken, k);
        basis.push(BasisElement { name: name.clone(), grade: -k });
        new_elements.push(name);
    }
    let total = basis.len();
    let mut brackets: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
    for (&(i, j), v) in a.brackets() {
        let mut w = v.clone();
        w.resize(total, Rational::zero());
        brackets.insert((i, j), w);
    }
    for (l, c) in cocycles.iter().enumerate() {
        for ((t, _), x) in space.basis.iter().zip(c) {
            if x.is_zero() {
                continue;
            }
            let e = brackets.entry((t[0], t[1])).or_insert_with(|| vec![Rational::zero(); total]);
            e[n + l] -= x;
        }
    }
    let result = Gnla::new(basis, brackets, a.tag().map(|t| format!("{t}+ext{k}")))?;
    let report = check_gnla(&result);
    if !(report.grading_ok && report.jacobi_ok && report.pure) {
        return Err(CoreError::Verification(format!("extension is not a graded Lie algebra: {:?}", report.violations)));
    }
    let piece = h2_piece(a, k);
    let classes: Vec<Vec<Rational>> = cocycles
        .iter()
        .map(|c| piece.class_of(c).ok_or_else(|| CoreError::Verification("cocycle outside its grading".into())))
        .collect::<Result<_>>()?;
    let nontrivial = !classes.is_empty() && symbolic::matrix::rank_of(&classes, piece.h()) == classes.len();
    Ok(CentralExtension { base: a.clone(), grading: k, space, cocycles: cocycles.to_vec(), result, new_elements, nontrivial })
}

impl CentralExtension {
    /// The extension modulo its new generators; equals the base.
    pub fn quotient(&self) -> Result<Gnla> {
        let drop: Vec<usize> = (self.base.dim()..self.result.dim()).collect();
        self.result.quotient_by(&drop)
    }

    /// For a single coboundary cocycle `α = dφ`, the splitting homomorphism
    /// `x ↦ x + φ(x)·a` from the base into the extension, verified.
    pub fn splitting_map(&self) -> Result<Option<MatrixQ>> {
        if self.cocycles.len() != 1 {
            return Err(invalid("splitting is implemented for one-dimensional extensions"));
        }
        let triv = Module::trivial(&self.base);
        let (dom, _, d1) = ce_differential(&self.base, &triv, 1, self.grading);
        if dom.dim() == 0 {
            return Ok(self.cocycles[0].iter().all(Zero::is_zero).then(|| self.inclusion(&[])));
        }
        let Some(phi) = d1.solve(&self.cocycles[0]) else { return Ok(None) };
        let mut values = vec![Rational::zero(); self.base.dim()];
        for ((t, _), c) in dom.basis.iter().zip(&phi) {
            values[t[0]] = c.clone();
        }
        let l = self.inclusion(&values);
        let hom = check_homomorphism(&self.base, &self.result, &l)?;
        if !hom.ok {
            return Err(CoreError::Verification(format!("splitting map fails on {:?}", hom.first_violation)));
        }
        Ok(Some(l))
    }

    fn inclusion(&self, phi: &[Rational]) -> MatrixQ {
        let (n, total) = (self.base.dim(), self.result.dim());
        let mut l = MatrixQ::zeros(total, n);
        for i in 0..n {
            l[(i, i)] = Rational::one();
            if let Some(c) = phi.get(i) {
                l[(n, i)] = c.clone();
            }
        }
        l
    }
}

/// One gauge class of lines in `H^2_k`.
#[derive(Clone, Debug, Serialize)]
pub struct ExtensionClass {
    /// Coordinates in the canonical representatives of `H^2_k`.
    #[serde(serialize_with = "as_strings")]
    pub class: Vec<Rational>,
    pub cocycle_terms: Vec<(String, String)>,
    /// Dimension of the projectivized `g_0`-orbit through the class.
    pub orbit_dim: usize,
    pub fixed: bool,
    pub fingerprint: Fingerprint,
    pub profile: String,
    pub matched: Option<String>,
    /// Another class has the same fingerprint.
    pub unseparated: bool,
}

fn as_strings<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(symbolic::format_rational))
}

/// Primitive integer vectors in `[-r, r]^h` with positive first nonzero entry.
fn projective_grid(h: usize, r: i64) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    let side = (2 * r + 1) as usize;
    for code in 0..side.pow(h as u32) {
        let mut c = code;
        let mut v: Vec<i64> = (0..h)
            .map(|_| {
                let d = (c % side) as i64 - r;
                c /= side;
                d
            })
            .collect();
        v.reverse();
        let Some(first) = v.iter().find(|&&x| x != 0) else { continue };
        if *first < 0 || v.iter().fold(0i64, |g, &x| g.gcd(&x)) != 1 {
            continue;
        }
        out.push(v.into_iter().map(|x| Rational::from_integer(x.into())).collect());
    }
    out.sort_by(|a: &Vec<Rational>, b| {
        let norm = |v: &Vec<Rational>| v.iter().map(|x| x.abs()).sum::<Rational>();
        norm(a).cmp(&norm(b)).then_with(|| b.cmp(a))
    });
    out
}

/// Lines in `H^2_k(a)` up to the gauge action, as far as fingerprints separate
/// them. Candidates are the rational fixed lines and a grid of projective
/// points; candidates with equal orbit dimension and fingerprint are merged.
pub fn classify_pure_extensions(a: &Gnla, k: i32) -> Result<Vec<ExtensionClass>> {
    let action = gauge_action(a, k)?;
    let piece = &action.piece;
    if piece.h() == 0 {
        return Ok(Vec::new());
    }
    let mut candidates = action.fixed_lines();
    for v in projective_grid(piece.h(), 2) {
        if !candidates.contains(&v) {
            candidates.push(v);
        }
    }
    let targets = catalog_fingerprints(&matching_targets())?;
    let evaluated: Vec<(Vec<Rational>, usize, Fingerprint)> = candidates
        .into_par_iter()
        .map(|c| {
            let ext = central_extend(a, k, &[piece.cocycle(&c)])?;
            Ok((c.clone(), action.projective_orbit_dim(&c), fingerprint(&ext.result)?))
        })
        .collect::<Result<_>>()?;
    let triv = Module::trivial(a);
    let mut classes: Vec<ExtensionClass> = Vec::new();
    for (c, orbit_dim, fp) in evaluated {
        if classes.iter().any(|x| x.orbit_dim == orbit_dim && x.fingerprint == fp) {
            continue;
        }
        let cocycle = piece.cocycle(&c);
        classes.push(ExtensionClass {
            cocycle_terms: cochain_terms(a, &triv, &piece.space, &cocycle),
            fixed: orbit_dim == 0,
            profile: format!("{:?}", fp.profile),
            matched: match_name(&fp, &targets),
            class: c,
            orbit_dim,
            fingerprint: fp,
            unseparated: false,
        });
    }
    for i in 0..classes.len() {
        let dup = classes.iter().enumerate().any(|(j, c)| j != i && c.fingerprint == classes[i].fingerprint);
        classes[i].unseparated = dup;
    }
    Ok(classes)
}

/// One row of the maximal-grading extension table for `p(n)`.
#[derive(Clone, Debug, Serialize)]
pub struct TowerRow {
    pub n: usize,
    pub z2_max: usize,
    pub h2_max: usize,
    pub extensions: usize,
    /// Some class extends to an algebra with the fingerprint of `p(n+1)`.
    pub has_p_next: bool,
    /// Some class extends to an algebra with the fingerprint of `p'(n+1)` (even `n`).
    pub has_pprime_next: bool,
    /// `dim H^2` of `p'(n+1)` in its own maximal grading (even `n`).
    pub pprime_h2_max: Option<usize>,
    pub tanaka_p_next: Option<usize>,
    pub tanaka_pprime_next: Option<usize>,
}

pub fn parabolic_tower(n_max: usize) -> Result<Vec<TowerRow>> {
    if !(5..=16).contains(&n_max) {
        return Err(invalid("parabolic tower needs 5 <= nMax <= 16"));
    }
    (5..=n_max)
        .into_par_iter()
        .map(|n| {
            let pn = p(n)?;
            let k = n as i32 - 1;
            let (_, z) = crate::cohomology::z2_maximal(&pn)?;
            let h2_max = h2_piece(&pn, k).h();
            let classes = classify_pure_extensions(&pn, k)?;
            let p_next = fingerprint(&p(n + 1)?)?;
            let has_p_next = classes.iter().any(|c| c.fingerprint == p_next);
            let (mut has_pprime_next, mut pprime_h2_max, mut tanaka_pprime_next) = (false, None, None);
            if n % 2 == 0 && n >= 6 {
                let pp = pprime(n + 1)?;
                let fp = fingerprint(&pp)?;
                has_pprime_next = classes.iter().any(|c| c.fingerprint == fp);
                pprime_h2_max = Some(h2_piece(&pp, n as i32).h());
                tanaka_pprime_next = fp.tanaka_dim;
            }
            Ok(TowerRow {
                n,
                z2_max: z.len(),
                h2_max,
                extensions: classes.len(),
                has_p_next,
                has_pprime_next,
                pprime_h2_max,
                tanaka_p_next: tanaka_dim(&p(n + 1)?, None)?,
                tanaka_pprime_next,
            })
        })
        .collect()
}

/// Successive quotients by the top grade, from `a` down to the `(2,1,2)` algebra.
/// Each step is checked to be a central extension of the next.
pub fn hilbert_cartan_chain(a: &Gnla) -> Result<Vec<Gnla>> {
    let profile = a.grade_profile().by_depth();
    if profile.len() < 3 || profile[..3] != [2, 1, 2] || !a.is_fundamental() {
        return Err(invalid(format!("not a fundamental (2,1,2,…) algebra: profile {profile:?}")));
    }
    let mut chain = vec![a.clone()];
    while chain.last().expect("nonempty").depth() > 3 {
        let cur = chain.last().expect("nonempty");
        let top = cur.indices_of_grade(-cur.depth());
        for &t in &top {
            for x in 0..cur.dim() {
                if !cur.bracket_basis(t, x).is_empty() {
                    return Err(CoreError::Verification(format!("{} is not central", cur.name(t))));
                }
            }
        }
        let next = cur.quotient_top()?;
        chain.push(next);
    }
    Ok(chain)
}

/// `H^2` dims of an algebra, keyed by grading; convenience for reports.
pub fn h2_dims(a: &Gnla) -> BTreeMap<i32, usize> {
    h2_graded(a).dims()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{ell6, h6, make_fmn};

    fn cocycle(a: &Gnla, k: i32, terms: &[(&str, &str, i64)]) -> Vec<Rational> {
        // terms (x, y, c) mean c·ω_x∧ω_y
        let space = CochainSpace::new(a, &Module::trivial(a), 2, k);
        let mut v = vec![Rational::zero(); space.dim()];
        for &(x, y, c) in terms {
            let (i, j) = (a.require(x).unwrap(), a.require(y).unwrap());
            let (t, s) = if i < j { (vec![i, j], c) } else { (vec![j, i], -c) };
            let pos = space.basis.iter().position(|(u, _)| *u == t).unwrap();
            v[pos] += Rational::from_integer(s.into());
        }
        v
    }

    #[test]
    fn extensions_of_f12() {
        let a = make_fmn(1, 2).unwrap();
        let e = central_extend(&a, 4, &[cocycle(&a, 4, &[("e3", "e1", 1)])]).unwrap();
        assert_eq!(e.new_elements, vec!["e4"]);
        assert!(e.nontrivial);
        let c = &e.result;
        assert_eq!(c.describe(&c.bracket(&c.unit(0), &c.unit(c.require("e3").unwrap()))), "e4");
        assert_eq!(fingerprint(c).unwrap(), fingerprint(&p(6).unwrap()).unwrap());
        let h = central_extend(&a, 4, &[cocycle(&a, 4, &[("e3", "e1p", 1), ("e3p", "e1", 1)])]).unwrap();
        assert_eq!(h.result.brackets().len(), h6().brackets().len());
        assert_eq!(fingerprint(&h.result).unwrap(), fingerprint(&h6()).unwrap());
        assert_eq!(e.quotient().unwrap().brackets(), a.brackets());
    }

    #[test]
    fn zero_cocycle_splits() {
        let a = make_fmn(1, 2).unwrap();
        let space = CochainSpace::new(&a, &Module::trivial(&a), 2, 4);
        let e = central_extend(&a, 4, &[vec![Rational::zero(); space.dim()]]).unwrap();
        assert!(!e.nontrivial);
        assert!(!e.result.is_fundamental());
        assert!(e.splitting_map().unwrap().is_some());
    }

    #[test]
    fn coboundary_extension_splits() {
        // ω_2∧ω_1 = -dω_3 in grading 3 of f(1,2)
        let a = make_fmn(1, 2).unwrap();
        let e = central_extend(&a, 3, &[cocycle(&a, 3, &[("e2", "e1", 1)])]).unwrap();
        assert!(!e.nontrivial);
        assert!(e.splitting_map().unwrap().is_some());
        let nontrivial = central_extend(&a, 4, &[cocycle(&a, 4, &[("e3", "e1", 1)])]).unwrap();
        assert!(nontrivial.splitting_map().unwrap().is_none());
    }

    #[test]
    fn naming_rule() {
        let taken: Vec<String> = ["e4", "e4p"].iter().map(ToString::to_string).collect();
        assert_eq!(fresh_name(&taken, 4), "e4pp");
        let taken: Vec<String> = ["e4", "e4p", "e4pp"].iter().map(ToString::to_string).collect();
        assert_eq!(fresh_name(&taken, 4), "a4_1");
    }

    #[test]
    fn chain_to_hilbert_cartan() {
        let chain = hilbert_cartan_chain(&ell6()).unwrap();
        assert_eq!(chain.len(), 2);
        assert_eq!(chain[1].grade_profile().by_depth(), vec![2, 1, 2]);
        let chain = hilbert_cartan_chain(&make_fmn(2, 3).unwrap()).unwrap();
        assert_eq!(chain.last().unwrap().dim(), 5);
        assert!(hilbert_cartan_chain(&crate::catalog::goursat(3).unwrap()).is_err());
    }
}
