use monge_core::catalog::{goursat, make_fmn};
use monge_core::fingerprint::fingerprint;
use monge_core::geometry::*;
use monge_core::tanaka::tanaka_dim;
use rayon::prelude::*;

/// Growth of the Cartan distribution of a nondegenerate equation, written out per case.
fn expected_growth(m: usize, n: usize) -> Vec<usize> {
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

#[test]
fn growth_vectors_over_the_grid() {
    grid().into_par_iter().for_each(|(m, n)| {
        let d = cartan_distribution(&MongeEquation::model(m, n).unwrap());
        let p = sample_point(&d.chart, 0);
        let weak = derived_flag(&d, &p, FlagMode::Weak, 20).unwrap();
        assert_eq!(weak.growth, expected_growth(m, n), "({m},{n})");
        assert!(weak.full);
        assert_eq!(weak.growth.iter().sum::<usize>(), m + n + 2);
    });
}

#[test]
fn weak_and_strong_flags_coincide_on_models() {
    grid().into_par_iter().for_each(|(m, n)| {
        let d = cartan_distribution(&MongeEquation::model(m, n).unwrap());
        for attempt in 0..3 {
            let p = sample_point(&d.chart, attempt);
            let weak = derived_flag(&d, &p, FlagMode::Weak, 20).unwrap();
            let strong = derived_flag(&d, &p, FlagMode::Strong, 20).unwrap();
            assert_eq!(weak.ranks, strong.ranks, "({m},{n}) at attempt {attempt}");
        }
    });
}

#[test]
fn carnot_algebras_are_point_independent() {
    grid().into_par_iter().for_each(|(m, n)| {
        let d = cartan_distribution(&MongeEquation::model(m, n).unwrap());
        // the (1,1) equation manifold is 4-dimensional, so its symbol is the Engel algebra
        let target = if (m, n) == (1, 1) { goursat(3) } else { make_fmn(m, n) };
        let target = fingerprint(&target.unwrap()).unwrap();
        for attempt in 0..3 {
            let c = carnot_at_point(&d, &sample_point(&d.chart, attempt)).unwrap();
            assert_eq!(fingerprint(&c.algebra).unwrap(), target, "({m},{n}) at attempt {attempt}");
        }
    });
}

#[test]
fn nonmodel_equation_has_the_model_symbol() {
    // a nondegenerate equation with a rational right side
    let eq = MongeEquation::parse(2, 3, "z3^2/(1 + x^2) + y1*z0").unwrap();
    let d = cartan_distribution(&eq);
    let target = fingerprint(&make_fmn(2, 3).unwrap()).unwrap();
    for attempt in 0..3 {
        let p = sample_point(&d.chart, attempt);
        assert!(nondegenerate_at(&eq, &p).unwrap());
        assert_eq!(fingerprint(&carnot_at_point(&d, &p).unwrap().algebra).unwrap(), target);
    }
}

const SYMMETRY_CASES: [(usize, usize); 6] = [(2, 2), (1, 3), (2, 3), (3, 3), (1, 4), (2, 4)];

#[test]
fn model_generators_are_symmetries() {
    SYMMETRY_CASES.par_iter().for_each(|&(m, n)| {
        let eq = MongeEquation::model(m, n).unwrap();
        let syms = model_symmetries(m, n).unwrap();
        assert_eq!(syms.len(), if m == 1 { 2 * n + 5 } else { 2 * n + 4 });
        for (name, v) in &syms {
            assert!(is_symmetry(&eq, v).unwrap(), "{name} on ({m},{n})");
        }
    });
}

#[test]
fn commutator_tables_match_and_close() {
    SYMMETRY_CASES.par_iter().for_each(|&(m, n)| {
        let t = symmetry_commutator_table(m, n).unwrap();
        assert!(t.closed, "({m},{n})");
        assert!(t.mismatches.is_empty(), "({m},{n}): {:#?}", t.mismatches);
        // the symmetry algebra realizes the Tanaka bound
        assert_eq!(Some(t.names.len()), tanaka_dim(&make_fmn(m, n).unwrap(), None).unwrap());
    });
}

#[test]
fn selected_commutators() {
    let show = |t: &SymmetryTable, a: &str, b: &str| {
        let i = t.names.iter().position(|x| x == a).unwrap();
        let j = t.names.iter().position(|x| x == b).unwrap();
        let key = (i.min(j), i.max(j));
        let mut v = t.brackets.get(&key).cloned().unwrap_or_else(|| vec![Default::default(); t.names.len()]);
        if i > j {
            v.iter_mut().for_each(|c| *c = -c.clone());
        }
        monge_core::gnla::describe_vector(&v, |k| t.names[k].clone())
    };
    let t13 = symmetry_commutator_table(1, 3).unwrap();
    // [S2, Z_l] = ((l+1-n)^2 - n^2) Z_{l+1}
    assert_eq!(show(&t13, "S2", "Z0"), "-5*Z1");
    assert_eq!(show(&t13, "S2", "Z1"), "-8*Z2");
    assert_eq!(show(&t13, "S2", "Z2"), "-9*Z3");
    let t33 = symmetry_commutator_table(3, 3).unwrap();
    for i in 0..3 {
        assert_eq!(show(&t33, &format!("Y{i}"), "R"), format!("Y{i}"));
    }
}

#[test]
fn identification_with_the_tanaka_algebra() {
    SYMMETRY_CASES.par_iter().for_each(|&(m, n)| {
        let r = l3plus_check(m, n, Identification::Rescaled).unwrap();
        assert!(r.ok(), "({m},{n}): {r:?}");
        let stated = l3plus_check(m, n, Identification::Stated).unwrap();
        assert!(!stated.homomorphism, "({m},{n})");
        assert!(stated.weights_ok && stated.images_graded && stated.bijective);
    });
}

#[test]
fn darboux_count() {
    let all = darboux_triples();
    assert_eq!(all.len(), 53);
    assert!(all.iter().all(DarbouxTriple::admissible));
    let mut sorted = all.clone();
    sorted.sort();
    assert_eq!(sorted, all);
}
