//! Admissible factor orders for Darboux-integrable quotients of two Monge
//! distributions with Carnot algebras `f(m1,n1)`, `f(m2,n2)`, `n2 = n1 + k`.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DarbouxTriple {
    pub m1: u32,
    pub m2: u32,
    pub k: u32,
}

impl DarbouxTriple {
    /// `δ = 1` when `m1 = m2 = 1`, or `m1 = 1` and `k > 0`.
    pub fn delta(&self) -> u32 {
        u32::from((self.m1 == 1 && self.m2 == 1) || (self.m1 == 1 && self.k > 0))
    }

    /// `m1 + m2 + k <= 7 + δ`, with `m1 <= m2` required when `k = 0`.
    pub fn admissible(&self) -> bool {
        self.m1 >= 1
            && self.m2 >= 1
            && (self.k > 0 || self.m1 <= self.m2)
            && self.m1 + self.m2 + self.k <= 7 + self.delta()
    }
}

/// All admissible triples, sorted.
pub fn darboux_triples() -> Vec<DarbouxTriple> {
    // the bound caps every entry at 8
    let mut out = Vec::new();
    for m1 in 1..=8 {
        for m2 in 1..=8 {
            for k in 0..=8 {
                let t = DarbouxTriple { m1, m2, k };
                if t.admissible() {
                    out.push(t);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_cases() {
        let t = |m1, m2, k| DarbouxTriple { m1, m2, k };
        assert!(t(3, 3, 1).admissible());
        assert!(!t(2, 2, 4).admissible());
        assert!(t(1, 1, 6).admissible());
        assert!(!t(2, 1, 0).admissible());
        assert!(t(2, 1, 1).admissible());
    }
}
