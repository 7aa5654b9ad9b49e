use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use symbolic::{gcd, Chart, DiffForm, MatrixQ, Monomial, Polynomial, RatFun, Rational, VectorField};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = MatrixQ> {
    // sparse-ish entries so that rank deficiency is common
    prop::collection::vec(prop_oneof![3 => Just(Rational::zero()), 2 => small_rational()], rows * cols)
        .prop_map(move |v| MatrixQ::from_rows(v.chunks(cols).map(<[_]>::to_vec).collect(), cols))
}

/// Rank by Bareiss fraction-free elimination on the integer matrix obtained by
/// clearing denominators row by row.
fn bareiss_rank(m: &MatrixQ) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let l = symbolic::rational::common_denominator(row.iter());
            row.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

fn chart() -> Chart {
    Chart::new(["x", "y", "z"])
}

fn poly(max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), small_rational()), 0..max_terms).prop_map(|ts| {
        let c = chart();
        Polynomial::from_terms(
            &c,
            ts.into_iter().map(|((a, b, d), k)| (Monomial::from_exponents(vec![a, b, d]), k)),
        )
    })
}

fn field() -> impl Strategy<Value = VectorField> {
    prop::collection::vec(poly(3), 3).prop_map(|ps| {
        let c = chart();
        VectorField::new(&c, ps.into_iter().map(RatFun::from_poly).collect())
    })
}

fn one_form() -> impl Strategy<Value = DiffForm> {
    prop::collection::vec(poly(3), 3).prop_map(|ps| {
        let c = chart();
        let mut w = DiffForm::zero(&c, 1);
        for (i, p) in ps.into_iter().enumerate() {
            w = w.add(&DiffForm::dx(&c, i).mul_fn(&RatFun::from_poly(p))).unwrap();
        }
        w
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn kernel_dimension_plus_rank_is_columns(m in matrix(6, 9)) {
        let k = m.kernel();
        prop_assert_eq!(k.len() + m.rank(), 9);
        prop_assert_eq!(m.rank(), bareiss_rank(&m));
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
        prop_assert_eq!(symbolic::matrix::rank_of(&k, 9), k.len());
    }

    #[test]
    fn consistent_systems_have_zero_residual(m in matrix(5, 7), x in prop::collection::vec(small_rational(), 7)) {
        let b = m.mul_vec(&x);
        let sol = m.solve(&b).expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&sol), b);
    }

    #[test]
    fn distributivity(a in poly(4), b in poly(4), c in poly(4)) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn gcd_divides_and_normalization_is_idempotent(a in poly(3), b in poly(3), c in poly(3)) {
        prop_assume!(!c.is_zero());
        let fa = &a * &c;
        let fb = &b * &c;
        let g = gcd(&fa, &fb);
        if !fa.is_zero() || !fb.is_zero() {
            prop_assert!(fa.div_exact(&g).is_some());
            prop_assert!(fb.div_exact(&g).is_some());
            prop_assert!(g.div_exact(&c.monic()).is_some() || fa.is_zero() || fb.is_zero());
        }
        prop_assume!(!fb.is_zero());
        let r = RatFun::new(fa.clone(), fb.clone());
        let again = RatFun::new(r.numerator().clone(), r.denominator().clone());
        prop_assert_eq!(&again, &r);
        prop_assert!(r.denominator().leading_coefficient().is_positive());
    }

    #[test]
    fn d_squared_vanishes(f in poly(5), w in one_form()) {
        let f = DiffForm::function(RatFun::from_poly(f));
        prop_assert!(f.exterior_derivative().exterior_derivative().is_zero());
        prop_assert!(w.exterior_derivative().exterior_derivative().is_zero());
    }

    #[test]
    fn wedge_is_graded_commutative_and_associative(a in one_form(), b in one_form(), c in one_form()) {
        let ab = a.wedge(&b).unwrap();
        prop_assert_eq!(&ab, &b.wedge(&a).unwrap().scale(&Rational::from_integer((-1).into())));
        let left = ab.wedge(&c).unwrap();
        let right = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let da = a.exterior_derivative();
        // Leibniz rule as an extra consistency check
        let lhs = ab.exterior_derivative();
        let rhs = da.wedge(&b).unwrap().sub(&a.wedge(&b.exterior_derivative()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi_identity(x in field(), y in field(), z in field()) {
        let t1 = x.lie_bracket(&y.lie_bracket(&z).unwrap()).unwrap();
        let t2 = y.lie_bracket(&z.lie_bracket(&x).unwrap()).unwrap();
        let t3 = z.lie_bracket(&x.lie_bracket(&y).unwrap()).unwrap();
        prop_assert!(t1.add(&t2).unwrap().add(&t3).unwrap().is_zero());
        let xy = x.lie_bracket(&y).unwrap();
        prop_assert_eq!(xy, y.lie_bracket(&x).unwrap().scale(&Rational::from_integer((-1).into())));
    }

    #[test]
    fn exterior_derivative_matches_cartan_formula(w in one_form(), x in field(), y in field()) {
        // dω(X,Y) = X ω(Y) − Y ω(X) − ω([X,Y])
        let lhs = w.exterior_derivative().evaluate(&[&x, &y]).unwrap();
        let wx = w.evaluate(&[&x]).unwrap();
        let wy = w.evaluate(&[&y]).unwrap();
        let rhs = &(&x.lie_derivative(&wy).unwrap() - &y.lie_derivative(&wx).unwrap())
            - &w.evaluate(&[&x.lie_bracket(&y).unwrap()]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
