//! The reproduction suite: one exact check per claim, runnable by filter.
//!
//! A check returns an [`Outcome`]; criteria whose literal statement is known
//! not to hold carry an explanation in [`Criterion::known_failure`] and are
//! reported as such instead of silently weakened.

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use symbolic::matrix::rank_of;
use symbolic::{MatrixQ, Rational};

use crate::catalog::{ell6, goursat, h6, hcprol, heis3, make_fmn, matching_targets, p, pprime};
use crate::cohomology::{ce_differential, h2_graded, h2_piece, weights, z2_maximal, Module};
use crate::error::Result;
use crate::extensions::{central_extend, classify_pure_extensions, parabolic_tower};
use crate::fingerprint::fingerprint;
use crate::geometry::{
    carnot_at_point, cartan_distribution, darboux_triples, deprolongation_report, derived_flag, is_symmetry,
    l3plus_check, model_symmetries, prolong_distribution, realize_named, sample_point, symmetry_commutator_table,
    FlagMode, Identification, MongeEquation,
};
use crate::gnla::{check_gnla, check_homomorphism, Gnla};
use crate::tanaka::{compute_h0, prolong, tanaka_dim, GradedMap, Status};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    fn from_failures(failures: Vec<String>, ok_detail: impl Into<String>) -> Outcome {
        if failures.is_empty() {
            Outcome { passed: true, detail: ok_detail.into() }
        } else {
            Outcome { passed: false, detail: failures.join("; ") }
        }
    }
}

pub struct Criterion {
    pub id: usize,
    /// Short tag matched by `--filter`.
    pub key: &'static str,
    pub title: &'static str,
    /// Why the literal statement fails, when it is known to.
    pub known_failure: Option<&'static str>,
    run: fn() -> Result<Outcome>,
}

impl Criterion {
    pub fn run(&self) -> Outcome {
        (self.run)().unwrap_or_else(|e| Outcome { passed: false, detail: format!("error: {e}") })
    }

    pub fn matches(&self, filter: Option<&str>) -> bool {
        match filter {
            None => true,
            Some(f) => {
                let f = f.to_ascii_lowercase();
                self.key.contains(&f) || self.title.to_ascii_lowercase().contains(&f) || self.id.to_string() == f
            }
        }
    }
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, key: "tanaka", title: "Tanaka dimension grid", known_failure: None, run: tanaka_grid },
        Criterion { id: 2, key: "exceptional", title: "Exceptional prolongations", known_failure: None, run: exceptional },
        Criterion { id: 3, key: "h0", title: "h0 finiteness criterion", known_failure: None, run: h0_criterion },
        Criterion {
            id: 4,
            key: "cohomology",
            title: "Cohomology dimensions",
            known_failure: Some(
                "p(5) = f(1,2) has 3 independent maximal-grading cocycles (dim H^2_4(f(1,2)) = 3 with no coboundaries), \
                 so dim Z^2_4(p(5)) = 1 cannot hold; the pattern holds for 6 <= n <= 12",
            ),
            run: cohomology_dims,
        },
        Criterion { id: 5, key: "extensions", title: "Extension classification", known_failure: None, run: classification },
        Criterion { id: 6, key: "realization", title: "Realization as ODE systems", known_failure: None, run: realization },
        Criterion { id: 7, key: "tower", title: "Parabolic tower", known_failure: None, run: tower },
        Criterion { id: 8, key: "geometry", title: "Growth, Carnot algebras, de-prolongation", known_failure: None, run: geometry },
        Criterion { id: 9, key: "symmetries", title: "Model symmetries", known_failure: None, run: symmetries },
        Criterion { id: 10, key: "darboux", title: "Darboux triples", known_failure: None, run: darboux },
        Criterion { id: 11, key: "properties", title: "Property suites", known_failure: None, run: properties },
    ]
}

/// Graded dimensions of `t(m,n)` from the lowest grade to the top.
pub fn expected_tanaka_sequence(m: usize, n: usize) -> Vec<usize> {
    let mut s = Vec::new();
    if m == n {
        s.push(1);
        s.extend(std::iter::repeat(2).take(m - 1));
        s.extend([1, 2, 2]);
    } else if m > 1 {
        s.extend(std::iter::repeat(1).take(n - m - 1));
        s.extend(std::iter::repeat(2).take(m));
        s.extend([1, 2, 3]);
        s.extend(std::iter::repeat(1).take(n - m - 1));
    } else {
        s.extend(std::iter::repeat(1).take(n - 2));
        s.extend([2, 1, 2, 3, 2]);
        s.extend(std::iter::repeat(1).take(n - 3));
    }
    s
}

/// Growth vector of the Cartan distribution of a nondegenerate `(m,n)` equation.
pub fn expected_growth(m: usize, n: usize) -> Vec<usize> {
    let mut g = vec![2, 1];
    if m < n {
        g.extend(std::iter::repeat(2).take(m));
        g.extend(std::iter::repeat(1).take(n - m - 1));
    } else {
        g.extend(std::iter::repeat(2).take(n - 1));
        g.push(1);
    }
    g
}

fn grid() -> Vec<(usize, usize)> {
    (1..=6).flat_map(|n| (1..=n).map(move |m| (m, n))).collect()
}

fn regular_grid() -> Vec<(usize, usize)> {
    grid().into_iter().filter(|&c| c != (1, 1) && c != (1, 2)).collect()
}

fn tanaka_grid() -> Result<Outcome> {
    let cases = regular_grid();
    let failures: Vec<String> = cases
        .par_iter()
        .map(|&(m, n)| -> Result<Option<String>> {
            let r = prolong(&make_fmn(m, n)?, None)?;
            let want = if m == 1 { 2 * n + 5 } else { 2 * n + 4 };
            let seq = r.graded_sequence();
            Ok((r.total_dim() != want || seq != expected_tanaka_sequence(m, n))
                .then(|| format!("({m},{n}): dim {} sequence {seq:?}", r.total_dim())))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(Outcome::from_failures(failures, format!("{} cases match 2n+4 / 2n+5 and the graded sequences", cases.len())))
}

fn exceptional() -> Result<Outcome> {
    let mut failures = Vec::new();
    let r = prolong(&make_fmn(1, 2)?, None)?;
    if r.total_dim() != 14 || r.graded_sequence() != [2, 1, 2, 4, 2, 1, 2] {
        failures.push(format!("f(1,2): dim {} sequence {:?}", r.total_dim(), r.graded_sequence()));
    }
    let h = prolong(&heis3(), Some(8))?;
    let dims = h.nonnegative_dims();
    if h.status != Status::CappedAt(8) || dims != [4, 6, 9, 12, 16, 20, 25, 30, 36] {
        failures.push(format!("heis3: {:?} {dims:?}", h.status));
    }
    Ok(Outcome::from_failures(failures, "t(1,2) = (2,1,2,4,2,1,2), heis3 capped at 8 = (4,6,9,12,16,20,25,30,36)"))
}

fn h0_criterion() -> Result<Outcome> {
    let mut failures = Vec::new();
    for (m, n) in grid().into_iter().filter(|&c| c != (1, 1)) {
        let h = compute_h0(&make_fmn(m, n)?)?.len();
        if h != 0 {
            failures.push(format!("h0(f({m},{n})) = {h}"));
        }
    }
    for (name, a) in [("heis3", heis3()), ("goursat(3)", goursat(3)?)] {
        if compute_h0(&a)?.is_empty() {
            failures.push(format!("h0({name}) = 0"));
        }
    }
    Ok(Outcome::from_failures(failures, "h0 = 0 on the grid; nonzero for heis3 and goursat(3)"))
}

fn cohomology_dims() -> Result<Outcome> {
    let mut failures = Vec::new();
    let f12 = h2_graded(&make_fmn(1, 2)?).dims();
    if f12.into_iter().collect::<Vec<_>>() != [(4, 3)] {
        failures.push("H^2(f(1,2)) is not 3-dimensional in grading 4".to_string());
    }
    let p6 = h2_graded(&p(6)?).dims();
    if p6.into_iter().collect::<Vec<_>>() != [(4, 2), (5, 2)] {
        failures.push("H^2(p(6)) is not (2,2) in gradings 4,5".to_string());
    }
    let z: Vec<(usize, usize)> =
        (5..=12).into_par_iter().map(|n| Ok((n, z2_maximal(&p(n)?)?.1.len()))).collect::<Result<_>>()?;
    for (n, d) in z {
        let want = if n % 2 == 1 { 1 } else { 2 };
        if d != want {
            failures.push(format!("dim Z^2_{}(p({n})) = {d}, expected {want}", n - 1));
        }
    }
    for l in 3..=5usize {
        let h = h2_piece(&pprime(2 * l + 1)?, 2 * l as i32).h();
        if h != 0 {
            failures.push(format!("H^2_{}(pprime({})) = {h}", 2 * l, 2 * l + 1));
        }
    }
    Ok(Outcome::from_failures(failures, "all cohomology dimensions match"))
}

fn classification() -> Result<Outcome> {
    let mut failures = Vec::new();
    let classes = classify_pure_extensions(&make_fmn(1, 2)?, 4)?;
    let names: BTreeSet<String> = classes.iter().filter_map(|c| c.matched.clone()).collect();
    let want: BTreeSet<String> = ["p(6)", "h6", "ell6"].map(String::from).into();
    if classes.len() != 3 || classes.iter().any(|c| c.unseparated) || names != want {
        failures.push(format!("f(1,2), k=4: {} classes matching {names:?}", classes.len()));
    }
    let mut seven = BTreeSet::new();
    for k in [4, 5] {
        let cs = classify_pure_extensions(&p(6)?, k)?;
        if cs.len() != 2 || cs.iter().any(|c| c.unseparated || c.matched.is_none()) {
            failures.push(format!("p(6), k={k}: {} classes", cs.len()));
        }
        seven.extend(cs.into_iter().filter_map(|c| c.matched));
    }
    let targets: BTreeSet<String> =
        matching_targets().iter().filter(|g| g.dim() == 7).filter_map(|g| g.tag().map(String::from)).collect();
    if seven != targets {
        failures.push(format!("7D matches {seven:?}, catalog {targets:?}"));
    }
    Ok(Outcome::from_failures(failures, format!("3 classes over f(1,2) {want:?}; 2+2 over p(6) {seven:?}")))
}

fn realization() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut shown = Vec::new();
    for (class, target) in [("par", "p(6)"), ("hyp", "h6"), ("ell", "ell6")] {
        let r = realize_named(class)?;
        let exact = r.betas.iter().zip(&r.alphas).all(|(b, a)| b.exterior_derivative() == *a);
        if !exact || !r.symbol_agrees() || r.fingerprint_match.as_deref() != Some(target) {
            failures.push(format!("{class}: match {:?}, dβ = α {exact}", r.fingerprint_match));
        }
        shown.push(r.system[1].clone());
    }
    // explicit potential for the elliptic class
    let cf = crate::geometry::model_coframe(1, 2)?;
    let chart = cf.equation.chart();
    let f = |s: &str| symbolic::parse_ratfun(s, chart).map_err(|e| crate::CoreError::Symbolic(e.into()));
    let idx = |s: &str| chart.index_of(s).expect("chart coordinate");
    let beta = symbolic::DiffForm::monomial(f("-z0 - 1/6*z2^3")?, &[idx("x")])
        .add(&symbolic::DiffForm::monomial(f("-1/2*z2")?, &[idx("y0")]))?
        .add(&symbolic::DiffForm::monomial(f("1/2*z2^2")?, &[idx("z1")]))?;
    let w = |s: &str| cf.form(s).cloned();
    let alpha = w("e3")?.wedge(&w("e1")?)?.add(&w("e3p")?.wedge(&w("e1p")?)?)?;
    if beta.exterior_derivative() != alpha {
        failures.push("explicit ell6 potential does not integrate ω3∧ω1 + ω3'∧ω1'".into());
    }
    Ok(Outcome::from_failures(failures, format!("{} and the explicit ell6 β verified", shown.join(", "))))
}

fn tower() -> Result<Outcome> {
    let mut failures = Vec::new();
    for row in parabolic_tower(12)?.into_iter().filter(|r| r.n >= 6) {
        let want = if row.n % 2 == 1 { 1 } else { 2 };
        if row.extensions != want || !row.has_p_next || (row.n % 2 == 0 && !row.has_pprime_next) {
            failures.push(format!("n={}: {} extensions", row.n, row.extensions));
        }
        if row.n % 2 == 0 {
            if row.pprime_h2_max != Some(0) {
                failures.push(format!("n={}: H^2 of pprime({}) = {:?}", row.n, row.n + 1, row.pprime_h2_max));
            }
            let (a, b) = (row.tanaka_pprime_next, row.tanaka_p_next);
            if !matches!((a, b), (Some(x), Some(y)) if x < y) {
                failures.push(format!("n={}: tanaka dims pprime {a:?}, p {b:?}", row.n));
            }
        }
    }
    Ok(Outcome::from_failures(failures, "1 extension for odd n, 2 for even n (6..12); pprime less symmetric"))
}

fn geometry() -> Result<Outcome> {
    let failures: Vec<String> = grid()
        .par_iter()
        .map(|&(m, n)| -> Result<Vec<String>> {
            let mut out = Vec::new();
            let d = cartan_distribution(&MongeEquation::model(m, n)?);
            let target = if (m, n) == (1, 1) { goursat(3)? } else { make_fmn(m, n)? };
            let target = fingerprint(&target)?;
            for attempt in 0..3 {
                let pt = sample_point(&d.chart, attempt);
                let flag = derived_flag(&d, &pt, FlagMode::Weak, 20)?;
                if flag.growth != expected_growth(m, n) {
                    out.push(format!("({m},{n}) growth {:?}", flag.growth));
                }
                if fingerprint(&carnot_at_point(&d, &pt)?.algebra)? != target {
                    out.push(format!("({m},{n}) Carnot algebra at attempt {attempt}"));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .concat();
    let mut failures = failures;
    let hc = prolong_distribution(&cartan_distribution(&MongeEquation::model(1, 2)?), 1)?;
    let pt = sample_point(&hc.chart, 0);
    let growth = derived_flag(&hc, &pt, FlagMode::Weak, 20)?.growth;
    let fp = fingerprint(&carnot_at_point(&hc, &pt)?.algebra)?;
    if growth != [2, 1, 1, 1, 1] || fp.tanaka_dim != Some(14) || fp != fingerprint(&hcprol())? {
        failures.push(format!("prolonged Hilbert–Cartan: growth {growth:?}, tanaka {:?}", fp.tanaka_dim));
    }
    let degenerate = cartan_distribution(&MongeEquation::parse(1, 2, "z2")?);
    let rep = deprolongation_report(&degenerate, &sample_point(&degenerate.chart, 0))?;
    if !(rep.via_cauchy && rep.via_growth) {
        failures.push(format!("F = z2 not de-prolongable: {rep:?}"));
    }
    Ok(Outcome::from_failures(
        failures,
        "growth and Carnot fingerprints on 1<=m<=n<=6 at 3 points; prolonged HC (2,1,1,1,1) dim 14; F = z2 de-prolongs",
    ))
}

const SYMMETRY_CASES: [(usize, usize); 6] = [(2, 2), (1, 3), (2, 3), (3, 3), (1, 4), (2, 4)];

fn symmetries() -> Result<Outcome> {
    let failures: Vec<String> = SYMMETRY_CASES
        .par_iter()
        .map(|&(m, n)| -> Result<Vec<String>> {
            let mut out = Vec::new();
            let eq = MongeEquation::model(m, n)?;
            let syms = model_symmetries(m, n)?;
            let want = if m == 1 { 2 * n + 5 } else { 2 * n + 4 };
            if syms.len() != want {
                out.push(format!("({m},{n}): {} generators", syms.len()));
            }
            for (name, v) in &syms {
                if !is_symmetry(&eq, v)? {
                    out.push(format!("({m},{n}): {name} is not a symmetry"));
                }
            }
            let t = symmetry_commutator_table(m, n)?;
            if !t.matches() {
                out.push(format!("({m},{n}): table closed {} mismatches {:?}", t.closed, t.mismatches));
            }
            let r = l3plus_check(m, n, Identification::Rescaled)?;
            if !r.ok() {
                out.push(format!("({m},{n}): identification {:?}", r.first_violation));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .concat();
    Ok(Outcome::from_failures(failures, "6 models: generators, counts, commutator tables and identification"))
}

fn darboux() -> Result<Outcome> {
    let n = darboux_triples().len();
    Ok(Outcome { passed: n == 53, detail: format!("{n} admissible triples") })
}

/// Algebras the randomized suites draw from.
pub fn property_pool() -> Result<Vec<Gnla>> {
    Ok(vec![heis3(), make_fmn(1, 2)?, make_fmn(2, 2)?, make_fmn(1, 3)?, goursat(4)?, p(7)?, h6(), ell6()])
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Random invertible grade-preserving matrix: unit lower times upper
/// triangular per grade block, small integer entries.
pub fn random_graded_change(a: &Gnla, rng: &mut impl Rng) -> MatrixQ {
    let n = a.dim();
    let mut p = MatrixQ::zeros(n, n);
    for g in a.grades() {
        let idx = a.indices_of_grade(g);
        let k = idx.len();
        let mut l = MatrixQ::identity(k);
        let mut u = MatrixQ::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                if i > j {
                    l[(i, j)] = q(rng.gen_range(-3..=3));
                } else if i == j {
                    u[(i, j)] = q([-2, -1, 1, 2, 3][rng.gen_range(0..5)]);
                } else {
                    u[(i, j)] = q(rng.gen_range(-3..=3));
                }
            }
        }
        let block = l.mul(&u);
        for (r, &gi) in idx.iter().enumerate() {
            for (c, &gj) in idx.iter().enumerate() {
                p[(gi, gj)] = block[(r, c)].clone();
            }
        }
    }
    p
}

pub const PROPERTY_CASES: usize = 200;

fn properties() -> Result<Outcome> {
    let pool = property_pool()?;
    let suites: [(&str, fn(&[Gnla], u64) -> Result<Option<String>>); 5] = [
        ("extensions (Jacobi, quotient = base)", extension_case),
        ("d∘d = 0", dd_case),
        ("basis change (fingerprint, H^2)", basis_change_case),
        ("prolongation (transitivity, Jacobi)", prolongation_case),
        ("weak = strong flag", flag_case),
    ];
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for (name, case) in suites {
        let bad: Vec<String> = (0..PROPERTY_CASES as u64)
            .into_par_iter()
            .map(|seed| case(&pool, seed))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        counts.push(format!("{name} {}/{PROPERTY_CASES}", PROPERTY_CASES - bad.len()));
        failures.extend(bad.into_iter().take(3).map(|b| format!("{name}: {b}")));
    }
    Ok(Outcome::from_failures(failures, counts.join(", ")))
}

fn rng_for(suite: u64, seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(suite << 32 | seed)
}

fn extension_case(pool: &[Gnla], seed: u64) -> Result<Option<String>> {
    let mut rng = rng_for(1, seed);
    let a = &pool[rng.gen_range(0..pool.len())];
    let graded: Vec<i32> = h2_graded(a).dims().keys().copied().filter(|&k| k > 0).collect();
    let Some(&k) = graded.get(rng.gen_range(0..graded.len().max(1))) else { return Ok(None) };
    let piece = h2_piece(a, k);
    let c: Vec<Rational> = (0..piece.h()).map(|_| q(rng.gen_range(-3..=3))).collect();
    let mut cocycle = piece.cocycle(&c);
    // shift by a random coboundary
    let (_, _, d1) = ce_differential(a, &Module::trivial(a), 1, k);
    let phi: Vec<Rational> = (0..d1.cols()).map(|_| q(rng.gen_range(-2..=2))).collect();
    for (x, y) in cocycle.iter_mut().zip(d1.mul_vec(&phi)) {
        *x += y;
    }
    let ext = central_extend(a, k, &[cocycle])?;
    let rep = check_gnla(&ext.result);
    let back = ext.quotient()?;
    let nonzero = c.iter().any(|x| !x.is_zero());
    Ok((!(rep.grading_ok && rep.jacobi_ok)
        || back.basis() != a.basis()
        || back.brackets() != a.brackets()
        || ext.nontrivial != nonzero
        || rep.fundamental != nonzero)
        .then(|| format!("seed {seed}: {:?} grading {k}", a.tag())))
}

fn dd_case(pool: &[Gnla], seed: u64) -> Result<Option<String>> {
    let mut rng = rng_for(2, seed);
    let a = &pool[rng.gen_range(0..pool.len())];
    let module = if rng.gen_bool(0.5) { Module::adjoint(a) } else { Module::trivial(a) };
    let qd = rng.gen_range(0..3);
    let ws = weights(a, &module, qd);
    let w = ws[rng.gen_range(0..ws.len())];
    let (_, _, d0) = ce_differential(a, &module, qd, w);
    let (_, _, d1) = ce_differential(a, &module, qd + 1, w);
    Ok((!d1.mul(&d0).is_zero()).then(|| format!("seed {seed}: {:?} q={qd} weight {w}", a.tag())))
}

fn basis_change_case(pool: &[Gnla], seed: u64) -> Result<Option<String>> {
    let mut rng = rng_for(3, seed);
    let a = &pool[rng.gen_range(0..pool.len())];
    let p = random_graded_change(a, &mut rng);
    let b = a.change_basis(&p)?;
    let ok = check_gnla(&b).all_ok()
        && h2_graded(&b).dims() == h2_graded(a).dims()
        && fingerprint(&b)? == fingerprint(a)?
        && check_homomorphism(&b, a, &p)?.ok;
    Ok((!ok).then(|| format!("seed {seed}: {:?}", a.tag())))
}

fn prolongation_case(_: &[Gnla], seed: u64) -> Result<Option<String>> {
    let mut rng = rng_for(4, seed);
    let cases = [(1, 3), (2, 2), (1, 4), (2, 3), (3, 3), (2, 4)];
    let (m, n) = cases[rng.gen_range(0..cases.len())];
    let a = make_fmn(m, n)?;
    let b = a.change_basis(&random_graded_change(&a, &mut rng))?;
    let r = prolong(&b, None)?;
    let injective = r.components.iter().all(|comp| {
        let parts: Vec<Vec<Rational>> = comp.iter().map(GradedMap::degree_one_part).collect();
        comp.is_empty() || rank_of(&parts, parts[0].len()) == comp.len()
    });
    let jacobi = r.algebra.as_ref().is_some_and(|t| {
        let rep = check_gnla(t);
        rep.grading_ok && rep.jacobi_ok
    });
    let dim_ok = tanaka_dim(&b, None)? == Some(if m == 1 { 2 * n + 5 } else { 2 * n + 4 });
    Ok((!(injective && jacobi && dim_ok)).then(|| format!("seed {seed}: f({m},{n})")))
}

fn flag_case(_: &[Gnla], seed: u64) -> Result<Option<String>> {
    let mut rng = rng_for(5, seed);
    let cases = grid();
    let (m, n) = cases[rng.gen_range(0..cases.len())];
    let d = cartan_distribution(&MongeEquation::model(m, n)?);
    let pt: Vec<Rational> = (0..d.chart.len()).map(|_| Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into())).collect();
    let weak = derived_flag(&d, &pt, FlagMode::Weak, 20)?;
    let strong = derived_flag(&d, &pt, FlagMode::Strong, 20)?;
    Ok((weak.ranks != strong.ranks || weak.growth != expected_growth(m, n))
        .then(|| format!("seed {seed}: ({m},{n}) weak {:?} strong {:?}", weak.ranks, strong.ranks)))
}

/// Result of one criterion in a suite run.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: usize,
    pub title: &'static str,
    pub outcome: Outcome,
    pub known_failure: Option<&'static str>,
}

impl CriterionResult {
    /// `PASS`, `FAIL`, `FAIL (known)` or `PASS (unexpected)`.
    pub fn status(&self) -> &'static str {
        match (self.outcome.passed, self.known_failure.is_some()) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (false, true) => "FAIL (known)",
            (true, true) => "PASS (unexpected)",
        }
    }

    /// Agrees with the expectation: passes, or fails for the recorded reason.
    pub fn as_expected(&self) -> bool {
        self.outcome.passed != self.known_failure.is_some()
    }

    pub fn line(&self) -> String {
        format!("{} criterion {:>2} {}: {}", self.status(), self.id, self.title, self.outcome.detail)
    }
}

/// Runs the selected criteria in order.
pub fn run_suite(filter: Option<&str>) -> Vec<CriterionResult> {
    criteria()
        .into_iter()
        .filter(|c| c.matches(filter))
        .map(|c| CriterionResult { id: c.id, title: c.title, outcome: c.run(), known_failure: c.known_failure })
        .collect()
}
