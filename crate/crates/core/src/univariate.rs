//! Dense univariate polynomials over Q, coefficients lowest degree first.
//! Only what root counting needs: remainder, gcd, Sturm sequences, rational roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use symbolic::Rational;

pub fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Degree, with the zero polynomial at `None`.
pub fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn derivative(p: &[Rational]) -> Vec<Rational> {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer((i as i64).into())).collect())
}

pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default()).collect())
}

/// Quotient and remainder; panics on division by zero.
pub fn div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut r = trim(a.to_vec());
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] / &b[db];
        for (i, c) in b.iter().enumerate().take(db + 1) {
            r[dr - db + i] -= &f * c;
        }
        q[dr - db] = f;
        r = trim(r);
    }
    (trim(q), r)
}

pub fn monic(p: &[Rational]) -> Vec<Rational> {
    match degree(p) {
        None => Vec::new(),
        Some(d) => {
            let l = p[d].clone();
            p[..=d].iter().map(|c| c / &l).collect()
        }
    }
}

pub fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Number of distinct real roots, by a Sturm sequence evaluated at ±∞.
pub fn count_real_roots(p: &[Rational]) -> usize {
    let p = trim(p.to_vec());
    if degree(&p).unwrap_or(0) == 0 {
        return 0;
    }
    let mut seq = vec![p.clone(), derivative(&p)];
    loop {
        let n = seq.len();
        let (_, r) = div_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.iter().map(|c| -c.clone()).collect());
    }
    let sign_at = |neg_inf: bool| -> Vec<bool> {
        seq.iter()
            .map(|q| {
                let d = degree(q).expect("nonzero");
                let positive = q[d].is_positive();
                if neg_inf && d % 2 == 1 {
                    !positive
                } else {
                    positive
                }
            })
            .collect()
    };
    let changes = |s: Vec<bool>| s.windows(2).filter(|w| w[0] != w[1]).count();
    changes(sign_at(true)) - changes(sign_at(false))
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}

/// Distinct rational roots, ascending.
pub fn rational_roots(p: &[Rational]) -> Vec<Rational> {
    let mut p = trim(p.to_vec());
    let mut roots = Vec::new();
    if p.is_empty() {
        return roots;
    }
    if p[0].is_zero() {
        roots.push(Rational::zero());
        let k = p.iter().position(|c| !c.is_zero()).expect("nonzero");
        p.drain(..k);
    }
    if degree(&p).unwrap_or(0) > 0 {
        let l = symbolic::rational::common_denominator(p.iter());
        let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        let (lo, hi) = (&ints[0], ints.last().expect("nonempty"));
        for num in divisors(lo) {
            for den in divisors(hi) {
                for s in [1, -1] {
                    let x = Rational::new(&num * s, den.clone());
                    if eval(&p, &x).is_zero() && !roots.contains(&x) {
                        roots.push(x);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}
