//! Named fundamental GNLAs: the symbols `f(m,n)` of the Monge equations
//! `y^(m) = F(…, z^(n))`, the Heisenberg and Goursat symbols, the parabolic chain
//! `p(k)`, the hyperbolic/elliptic 6D algebras and the 7D extensions of `p(6)`.
//!
//! Naming: `e_i` has grade `-i`; a primed element `e_i'` is written `e{i}p`.

use num_traits::Zero;
use symbolic::Rational;

use crate::error::{invalid, CoreError, Result};
use crate::gnla::{Gnla, GnlaBuilder};

pub const CATALOG_NAMES: &[&str] = &[
    "f(m,n)",
    "heis3",
    "goursat(k)",
    "p(k)",
    "h6",
    "ell6",
    "pprime(2l+1)",
    "hcprol",
    "ext7_211211",
    "ext7_211212",
    "ext7_21221",
    "ext7_21222",
];

pub fn e(i: usize) -> String {
    format!("e{i}")
}

pub fn ep(i: usize) -> String {
    format!("e{i}p")
}

/// Symbol of `y^(m) = F(x, y, …, z^(n))` with `F_{z_n z_n} ≠ 0`.
///
/// `f(1,1)` is the 3D Heisenberg algebra.
pub fn make_fmn(m: usize, n: usize) -> Result<Gnla> {
    if m < 1 || m > n {
        return Err(invalid(format!("f(m,n) needs 1 <= m <= n, got ({m},{n})")));
    }
    if (m, n) == (1, 1) {
        return Ok(heis3().with_tag("f(1,1)"));
    }
    let mut b = GnlaBuilder::new();
    b.push_element(e(1), -1);
    b.push_element(ep(1), -1);
    for k in 2..=n + 1 {
        b.push_element(e(k), -(k as i32));
        if (3..=m + 2).contains(&k) {
            b.push_element(ep(k), -(k as i32));
        }
    }
    for k in n + 2..=m + 2 {
        b.push_element(ep(k), -(k as i32));
    }
    let one = Rational::from_integer(1.into());
    b.push_relation(&e(1), &ep(1), &e(2), one.clone());
    for k in 2..=n {
        b.push_relation(&e(1), &e(k), &e(k + 1), one.clone());
    }
    for k in 3..=m + 1 {
        b.push_relation(&e(1), &ep(k), &ep(k + 1), one.clone());
    }
    for k in 2..=m + 1 {
        b.push_relation(&ep(1), &e(k), &ep(k + 1), one.clone());
    }
    b.build(Some(format!("f({m},{n})")))
}

/// 3D Heisenberg algebra `[e1, e1p] = e2`.
pub fn heis3() -> Gnla {
    GnlaBuilder::new()
        .element("e1", -1)
        .element("e1p", -1)
        .element("e2", -2)
        .relation("e1", "e1p", "e2", 1)
        .build(Some("heis3".into()))
        .expect("valid")
}

/// Goursat symbol of depth `k`: growth `(2,1,…,1)` with `k` entries.
pub fn goursat(k: usize) -> Result<Gnla> {
    if k < 2 {
        return Err(invalid("goursat(k) needs k >= 2"));
    }
    let mut b = GnlaBuilder::new().element("e1", -1).element("e1p", -1);
    for i in 2..=k {
        b.push_element(e(i), -(i as i32));
    }
    let one = Rational::from_integer(1.into());
    b.push_relation("e1", "e1p", "e2", one.clone());
    for i in 2..k {
        b.push_relation("e1", &e(i), &e(i + 1), one.clone());
    }
    b.build(Some(format!("goursat({k})")))
}

/// Parabolic chain `p(k) = f(1, k-3)`, dimension `k`.
pub fn p(k: usize) -> Result<Gnla> {
    if k < 5 {
        return Err(invalid("p(k) needs k >= 5"));
    }
    Ok(make_fmn(1, k - 3)?.with_tag(format!("p({k})")))
}

/// Carnot algebra of the prolonged Hilbert–Cartan distribution, growth `(2,1,1,1,1)`.
///
/// `e1` is the new vertical direction and `e1p` the prolonged total derivative.
pub fn hcprol() -> Gnla {
    GnlaBuilder::new()
        .element("e1", -1)
        .element("e1p", -1)
        .element("e2", -2)
        .element("e3", -3)
        .element("e4", -4)
        .element("e5", -5)
        .relation("e1", "e1p", "e2", 1)
        .relation("e1p", "e2", "e3", 1)
        .relation("e1p", "e3", "e4", 1)
        .relation("e1", "e4", "e5", 1)
        .relation("e2", "e3", "e5", 1)
        .build(Some("hcprol".into()))
        .expect("valid")
}

fn extend(base: Gnla, new: &str, grade: i32, rels: &[(&str, &str, i64)], tag: &str) -> Result<Gnla> {
    let mut b = GnlaBuilder::new();
    for el in base.basis() {
        b.push_element(el.name.clone(), el.grade);
    }
    b.push_element(new, grade);
    for (&(i, j), v) in base.brackets() {
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                b.push_relation(base.name(i), base.name(j), base.name(k), c.clone());
            }
        }
    }
    for &(l, r, c) in rels {
        b.push_relation(l, r, new, Rational::from_integer(c.into()));
    }
    b.build(Some(tag.to_string()))
}

pub fn h6() -> Gnla {
    let base = make_fmn(1, 2).expect("valid");
    extend(base, "e4", -4, &[("e1", "e3p", 1), ("e1p", "e3", 1)], "h6").expect("valid")
}

pub fn ell6() -> Gnla {
    let base = make_fmn(1, 2).expect("valid");
    extend(base, "e4", -4, &[("e1", "e3", 1), ("e1p", "e3p", 1)], "ell6").expect("valid")
}

pub fn ext7(name: &str) -> Result<Gnla> {
    let base = p(6)?;
    match name {
        "ext7_211211" => extend(base, "e5", -5, &[("e1", "e4", 1)], name),
        "ext7_211212" => extend(base, "e5", -5, &[("e1p", "e4", 1), ("e3", "e2", 1)], name),
        "ext7_21221" => extend(base, "e4p", -4, &[("e1", "e3p", 1), ("e1p", "e3", 1)], name),
        "ext7_21222" => extend(base, "e4p", -4, &[("e1p", "e3p", 1)], name),
        _ => Err(CoreError::UnknownCatalogName(name.to_string())),
    }
}

/// `p'(2l+1)`: the second maximal-grading extension of `p(2l)`, `l >= 3`.
///
/// Adds `e_{2l-1}` with `[e1p, e_{2l-2}] = e_{2l-1}` and
/// `[e_i, e_{2l-1-i}] = (-1)^{i+1} e_{2l-1}` for `2 <= i <= l-1`.
pub fn pprime(k: usize) -> Result<Gnla> {
    if k % 2 == 0 || k < 7 {
        return Err(invalid("pprime(k) needs odd k >= 7"));
    }
    let n = k - 1;
    let l = n / 2;
    let top = e(n - 1);
    let mut rels: Vec<(String, String, i64)> = vec![(ep(1), e(n - 2), 1)];
    for i in 2..l {
        rels.push((e(i), e(n - 1 - i), if i % 2 == 0 { -1 } else { 1 }));
    }
    let rels_ref: Vec<(&str, &str, i64)> = rels.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), *c)).collect();
    extend(p(n)?, &top, -(n as i32 - 1), &rels_ref, &format!("pprime({k})"))
}

fn parse_args(s: &str, prefix: &str) -> Option<Vec<usize>> {
    let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|t| t.trim().parse().ok()).collect()
}

/// Looks up a catalog entry such as `f(1,2)`, `f:1,2`, `p(6)`, `ell6`, `pprime(7)`.
pub fn catalog(name: &str) -> Result<Gnla> {
    let name = name.trim();
    if let Some(rest) = name.strip_prefix("f:") {
        let v: Option<Vec<usize>> = rest.split(',').map(|t| t.trim().parse().ok()).collect();
        if let Some([m, n]) = v.as_deref() {
            return make_fmn(*m, *n);
        }
        return Err(invalid(format!("bad algebra spec {name:?}")));
    }
    if let Some(v) = parse_args(name, "f") {
        if let [m, n] = v[..] {
            return make_fmn(m, n);
        }
    }
    if let Some(v) = parse_args(name, "p") {
        if let [k] = v[..] {
            return p(k);
        }
    }
    if let Some(v) = parse_args(name, "pprime") {
        if let [k] = v[..] {
            return pprime(k);
        }
    }
    if let Some(v) = parse_args(name, "goursat") {
        if let [k] = v[..] {
            return goursat(k);
        }
    }
    match name {
        "heis3" => Ok(heis3()),
        "hcprol" => Ok(hcprol()),
        "h6" => Ok(h6()),
        "ell6" => Ok(ell6()),
        "p6" => p(6),
        n if n.starts_with("ext7_") => ext7(n),
        _ => Err(CoreError::UnknownCatalogName(name.to_string())),
    }
}

/// Concrete catalog entries used for matching extension fingerprints.
pub fn matching_targets() -> Vec<Gnla> {
    let mut out = vec![p(6).expect("valid"), h6(), ell6()];
    for n in ["ext7_211211", "ext7_211212", "ext7_21221", "ext7_21222"] {
        out.push(ext7(n).expect("valid"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gnla::check_gnla;

    #[test]
    fn f12_brackets() {
        let a = make_fmn(1, 2).unwrap();
        assert_eq!(a.dim(), 5);
        let br = |x: &str, y: &str| a.describe(&a.bracket(&a.unit(a.require(x).unwrap()), &a.unit(a.require(y).unwrap())));
        assert_eq!(br("e1", "e1p"), "e2");
        assert_eq!(br("e1", "e2"), "e3");
        assert_eq!(br("e1p", "e2"), "e3p");
        assert_eq!(br("e1", "e3"), "0");
    }

    #[test]
    fn profiles() {
        assert_eq!(make_fmn(2, 2).unwrap().grade_profile().by_depth(), vec![2, 1, 2, 1]);
        assert_eq!(make_fmn(2, 3).unwrap().grade_profile().by_depth(), vec![2, 1, 2, 2]);
        assert_eq!(make_fmn(1, 3).unwrap().grade_profile().by_depth(), vec![2, 1, 2, 1]);
        assert_eq!(make_fmn(2, 5).unwrap().grade_profile().by_depth(), vec![2, 1, 2, 2, 1, 1]);
        assert_eq!(make_fmn(1, 1).unwrap().dim(), 3);
        assert!(make_fmn(3, 2).is_err());
        assert!(make_fmn(0, 2).is_err());
    }

    #[test]
    fn every_catalog_entry_is_a_fundamental_gnla() {
        let names = [
            "f(1,2)", "f(2,2)", "f(3,5)", "heis3", "goursat(3)", "p(6)", "p(9)", "h6", "ell6", "pprime(7)",
            "pprime(9)", "pprime(11)", "hcprol", "ext7_211211", "ext7_211212", "ext7_21221", "ext7_21222",
        ];
        for name in names {
            let a = catalog(name).unwrap();
            let r = check_gnla(&a);
            assert!(r.all_ok(), "{name}: {:?}", r.violations);
        }
    }

    #[test]
    fn spec_forms() {
        assert_eq!(catalog("f:2,3").unwrap(), make_fmn(2, 3).unwrap());
        assert!(matches!(catalog("nope"), Err(CoreError::UnknownCatalogName(_))));
        assert_eq!(ext7("ext7_21221").unwrap().grade_profile(), make_fmn(2, 3).unwrap().grade_profile());
    }
}
