use monge_core::catalog::{goursat, hcprol, heis3, make_fmn, p, pprime};
use monge_core::gnla::{check_gnla, Gnla};
use monge_core::tanaka::{compute_g0, compute_h0, prolong, tanaka_dim, GradedMap, Status};
use num_traits::Zero;
use symbolic::matrix::rank_of;
use symbolic::Rational;

/// Graded dimensions from the lowest grade to the top, written out from the
/// three closed-form displays for `t_{m,n}`.
fn expected_sequence(m: usize, n: usize) -> Vec<usize> {
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

/// Applies a degree-0 map, given by its blocks, to a base vector.
fn apply_g0(a: &Gnla, u: &GradedMap, v: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.dim()];
    for (&g, block) in &u.blocks {
        let idx = a.indices_of_grade(g);
        for (col, &src) in idx.iter().enumerate() {
            if v[src].is_zero() {
                continue;
            }
            for (row, &dst) in idx.iter().enumerate() {
                out[dst] += &block[(row, col)] * &v[src];
            }
        }
    }
    out
}

#[test]
fn grid_dimensions_and_sequences() {
    for n in 1..=6 {
        for m in 1..=n {
            if (m, n) == (1, 1) || (m, n) == (1, 2) {
                continue;
            }
            let r = prolong(&make_fmn(m, n).unwrap(), None).unwrap();
            let want = if m == 1 { 2 * n + 5 } else { 2 * n + 4 };
            assert_eq!(r.total_dim(), want, "({m},{n})");
            assert_eq!(r.graded_sequence(), expected_sequence(m, n), "({m},{n})");
            assert_eq!(r.h0, 0, "({m},{n})");
        }
    }
}

#[test]
fn exceptional_cases() {
    let r = prolong(&make_fmn(1, 2).unwrap(), None).unwrap();
    assert_eq!(r.total_dim(), 14);
    assert_eq!(r.graded_sequence(), vec![2, 1, 2, 4, 2, 1, 2]);
    let h = prolong(&heis3(), Some(8)).unwrap();
    assert_eq!(h.status, Status::CappedAt(8));
    assert_eq!(h.nonnegative_dims(), vec![4, 6, 9, 12, 16, 20, 25, 30, 36]);
    assert!(h.algebra.is_none());
}

#[test]
fn h0_detects_infinite_cases() {
    assert_eq!(compute_h0(&heis3()).unwrap().len(), 3);
    assert!(!compute_h0(&goursat(3).unwrap()).unwrap().is_empty());
    assert!(compute_h0(&make_fmn(2, 4).unwrap()).unwrap().is_empty());
}

#[test]
fn g0_dimensions() {
    assert_eq!(compute_g0(&make_fmn(2, 2).unwrap()).unwrap().len(), 2);
    assert_eq!(compute_g0(&make_fmn(2, 3).unwrap()).unwrap().len(), 3);
    assert_eq!(compute_g0(&heis3()).unwrap().len(), 4);
}

#[test]
fn g0_elements_are_derivations() {
    for a in [make_fmn(1, 2).unwrap(), make_fmn(2, 4).unwrap(), heis3(), goursat(4).unwrap(), p(7).unwrap()] {
        for u in compute_g0(&a).unwrap() {
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let (x, y) = (a.unit(i), a.unit(j));
                    let lhs = apply_g0(&a, &u, &a.bracket(&x, &y));
                    let r1 = a.bracket(&apply_g0(&a, &u, &x), &y);
                    let r2 = a.bracket(&x, &apply_g0(&a, &u, &y));
                    let rhs: Vec<Rational> = r1.iter().zip(&r2).map(|(p, q)| p + q).collect();
                    assert_eq!(lhs, rhs, "{:?} on ({},{})", a.tag(), a.name(i), a.name(j));
                }
            }
        }
    }
}

#[test]
fn prolonged_hilbert_cartan_symbol() {
    let r = prolong(&hcprol(), None).unwrap();
    assert_eq!(r.graded_sequence(), vec![1, 1, 1, 1, 2, 2, 2, 1, 1, 1, 1]);
    assert_eq!(r.total_dim(), 14);
}

#[test]
fn pprime_is_less_symmetric_than_p() {
    for l in 3..=5usize {
        let k = 2 * l + 1;
        let small = tanaka_dim(&pprime(k).unwrap(), None).unwrap().unwrap();
        let big = tanaka_dim(&p(k).unwrap(), None).unwrap().unwrap();
        assert_eq!(small, 2 * l + 3);
        assert_eq!(big, 4 * l + 1);
    }
}

#[test]
fn transitivity_and_termination() {
    let algebras = [make_fmn(1, 2).unwrap(), make_fmn(2, 5).unwrap(), make_fmn(1, 5).unwrap(), hcprol(), pprime(9).unwrap()];
    for a in &algebras {
        let r = prolong(a, None).unwrap();
        for comp in &r.components {
            let len = comp[0].degree_one_part().len();
            let parts: Vec<Vec<Rational>> = comp.iter().map(GradedMap::degree_one_part).collect();
            assert_eq!(rank_of(&parts, len), comp.len());
        }
        let Status::Finite(top) = r.status else { panic!("{:?} not finite", a.tag()) };
        assert_eq!(prolong(a, Some(top)).unwrap().status, Status::CappedAt(top));
        assert_eq!(prolong(a, Some(top + 1)).unwrap().status, Status::Finite(top));
    }
}

#[test]
fn assembled_algebras_are_graded_lie_algebras() {
    for (m, n) in [(1, 2), (2, 2), (1, 4), (2, 5), (3, 4)] {
        let r = prolong(&make_fmn(m, n).unwrap(), None).unwrap();
        let t = r.algebra.clone().unwrap();
        assert_eq!(t.dim(), r.total_dim());
        let rep = check_gnla(&t);
        assert!(rep.grading_ok && rep.jacobi_ok, "({m},{n}): {:?}", rep.violations);
    }
}

#[test]
fn json_shape() {
    let r = prolong(&make_fmn(1, 2).unwrap(), None).unwrap();
    let v = serde_json::to_value(r.to_json()).unwrap();
    assert_eq!(v["status"], "finite");
    assert_eq!(v["gradedDims"]["-3"], 2);
    assert_eq!(v["gradedDims"]["3"], 2);
    assert_eq!(v["h0"], 0);
    let back = Gnla::from_json_value(&serde_json::from_value(v["brackets"].clone()).unwrap()).unwrap();
    assert_eq!(back.dim(), 14);
}
