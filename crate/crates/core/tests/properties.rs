use monge_core::catalog::{ell6, goursat, h6, heis3, make_fmn, p};
use monge_core::cohomology::{ce_differential, h2_graded, h2_piece, weights, Module};
use monge_core::extensions::central_extend;
use monge_core::fingerprint::fingerprint;
use monge_core::gnla::{check_gnla, check_homomorphism, Gnla};
use num_traits::Zero;
use proptest::prelude::*;
use symbolic::{MatrixQ, Rational};

fn pool() -> Vec<Gnla> {
    vec![
        heis3(),
        make_fmn(1, 2).unwrap(),
        make_fmn(2, 2).unwrap(),
        make_fmn(1, 3).unwrap(),
        goursat(4).unwrap(),
        p(5).unwrap(),
        h6(),
        ell6(),
    ]
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Invertible grade-preserving matrix: per grade block, unit lower triangular
/// times upper triangular with nonzero diagonal, entries drawn from `seed`.
fn graded_change(a: &Gnla, seed: &[i64]) -> MatrixQ {
    let n = a.dim();
    let mut next = seed.iter().cycle().copied();
    let mut p = MatrixQ::zeros(n, n);
    for g in a.grades() {
        let idx = a.indices_of_grade(g);
        let k = idx.len();
        let mut l = MatrixQ::identity(k);
        let mut u = MatrixQ::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                let v = next.next().unwrap();
                if i > j {
                    l[(i, j)] = q(v);
                } else if i == j {
                    u[(i, j)] = if v == 0 { q(1) } else { q(v) };
                } else {
                    u[(i, j)] = q(v);
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

fn seed() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 16)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn invariants_survive_graded_basis_change(which in 0usize..8, s in seed()) {
        let a = &pool()[which];
        let p = graded_change(a, &s);
        let b = a.change_basis(&p).unwrap();
        prop_assert!(check_gnla(&b).all_ok());
        prop_assert_eq!(h2_graded(&b).dims(), h2_graded(a).dims());
        prop_assert_eq!(fingerprint(&b).unwrap(), fingerprint(a).unwrap());
        // the columns of p send the new basis to the old one
        prop_assert!(check_homomorphism(&b, a, &p).unwrap().ok);
    }

    #[test]
    fn differential_squares_to_zero(which in 0usize..8, adjoint: bool, q in 0usize..3, pick in 0usize..64) {
        let a = &pool()[which];
        let module = if adjoint { Module::adjoint(a) } else { Module::trivial(a) };
        let ws = weights(a, &module, q);
        prop_assume!(!ws.is_empty());
        let w = ws[pick % ws.len()];
        let (_, _, d0) = ce_differential(a, &module, q, w);
        let (_, _, d1) = ce_differential(a, &module, q + 1, w);
        prop_assert!(d1.mul(&d0).is_zero());
    }

    #[test]
    fn extensions_are_lie_and_project_onto_the_base(
        which in 0usize..8,
        pick in 0usize..16,
        coeffs in prop::collection::vec(-3i64..=3, 8),
        shift in prop::collection::vec(-2i64..=2, 16),
    ) {
        let a = &pool()[which];
        let graded: Vec<i32> = h2_graded(a).dims().keys().copied().filter(|&k| k > 0).collect();
        prop_assume!(!graded.is_empty());
        let k = graded[pick % graded.len()];
        let piece = h2_piece(a, k);
        let c: Vec<Rational> = coeffs.iter().take(piece.h()).map(|&x| q(x)).collect();
        prop_assume!(c.len() == piece.h());
        let cocycle = piece.cocycle(&c);

        let ext = central_extend(a, k, &[cocycle.clone()]).unwrap();
        let rep = check_gnla(&ext.result);
        prop_assert!(rep.grading_ok && rep.jacobi_ok && rep.nilpotent);
        prop_assert_eq!(ext.nontrivial, c.iter().any(|x| !x.is_zero()));
        // the new generator is reached from degree one exactly when the class is nonzero
        prop_assert_eq!(rep.fundamental, ext.nontrivial);
        let back = ext.quotient().unwrap();
        prop_assert_eq!(back.basis(), a.basis());
        prop_assert_eq!(back.brackets(), a.brackets());

        // a cohomologous cocycle gives an isomorphic extension
        let (_, _, d1) = ce_differential(a, &Module::trivial(a), 1, k);
        let phi: Vec<Rational> = (0..d1.cols()).map(|i| q(shift[i % shift.len()])).collect();
        let moved: Vec<Rational> = cocycle.iter().zip(d1.mul_vec(&phi)).map(|(x, y)| x + y).collect();
        let other = central_extend(a, k, &[moved]).unwrap();
        prop_assert_eq!(other.nontrivial, ext.nontrivial);
        if ext.nontrivial {
            prop_assert_eq!(fingerprint(&other.result).unwrap(), fingerprint(&ext.result).unwrap());
        }
    }
}
