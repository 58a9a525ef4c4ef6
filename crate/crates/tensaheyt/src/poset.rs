//! Finite partial orders with named elements.

use crate::bitset::ElemSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("not a partial order: {a} and {b} are in a cycle")]
    NotAPartialOrder { a: String, b: String },
    #[error("poset has no elements")]
    Empty,
}

/// Partial order on elements `0..n`, stored as upper and lower cones.
#[derive(Clone, Debug)]
pub struct FinitePoset {
    names: Vec<String>,
    up: Vec<ElemSet>,
    dn: Vec<ElemSet>,
}

impl FinitePoset {
    /// Builds the reflexive-transitive closure of a set of `(lo, hi)`
    /// pairs and checks antisymmetry. The pairs are usually covering
    /// pairs but any generating relation works.
    pub fn from_pairs(names: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, PosetError> {
        let n = names.len();
        if n == 0 {
            return Err(PosetError::Empty);
        }
        let mut up: Vec<ElemSet> = (0..n).map(|i| ElemSet::singleton(n, i)).collect();
        for &(lo, hi) in pairs {
            assert!(lo < n && hi < n, "pair out of range");
            up[lo].insert(hi);
        }
        // Warshall closure over bitset rows.
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    let row = up[k].clone();
                    up[i].union_in(&row);
                }
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                if up[a].contains(b) && up[b].contains(a) {
                    return Err(PosetError::NotAPartialOrder {
                        a: names[a].clone(),
                        b: names[b].clone(),
                    });
                }
            }
        }
        let dn = transpose(&up);
        Ok(FinitePoset { names, up, dn })
    }

    /// Wraps precomputed upper cones that are already reflexive,
    /// transitive and antisymmetric, as in powerset or product orders.
    /// The caller owns the invariant; only row arity is checked.
    pub fn from_closed_rows(names: Vec<String>, up: Vec<ElemSet>) -> Self {
        let n = names.len();
        assert!(n > 0 && up.len() == n && up.iter().all(|r| r.universe() == n));
        debug_assert!((0..n).all(|i| up[i].contains(i)));
        let dn = transpose(&up);
        FinitePoset { names, up, dn }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// `{ b : a <= b }`
    pub fn up_cone(&self, a: usize) -> &ElemSet {
        &self.up[a]
    }

    /// `{ b : b <= a }`
    pub fn down_cone(&self, a: usize) -> &ElemSet {
        &self.dn[a]
    }

    pub fn upward_closure(&self, s: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.n());
        for x in s.iter() {
            out.union_in(&self.up[x]);
        }
        out
    }

    pub fn downward_closure(&self, s: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.n());
        for x in s.iter() {
            out.union_in(&self.dn[x]);
        }
        out
    }

    pub fn is_upset(&self, s: &ElemSet) -> bool {
        s.iter().all(|x| self.up[x].is_subset(s))
    }

    /// Covering pairs `(lo, hi)` of the order, in id order. Together
    /// with reflexive-transitive closure these regenerate the poset.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let strictly_between = (0..n)
                    .any(|z| z != a && z != b && self.leq(a, z) && self.leq(z, b));
                if !strictly_between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Every up-closed subset, sorted by bitmask value.
    pub fn upsets(&self) -> Vec<ElemSet> {
        self.upsets_capped(usize::MAX).unwrap()
    }

    /// Upset enumeration that gives up once more than `cap` distinct
    /// upsets exist, for posets wide enough to blow up exponentially.
    pub fn upsets_capped(&self, cap: usize) -> Option<Vec<ElemSet>> {
        let n = self.n();
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = vec![ElemSet::empty(n)];
        while let Some(u) = queue.pop() {
            if !seen.insert(u.clone()) {
                continue;
            }
            if seen.len() > cap {
                return None;
            }
            // Adding any maximal element of the complement keeps the set up-closed.
            for x in u.complement().iter() {
                if self.up[x].minus(&ElemSet::singleton(n, x)).is_subset(&u) {
                    let mut bigger = u.clone();
                    bigger.insert(x);
                    queue.push(bigger);
                }
            }
        }
        Some(seen.into_iter().collect())
    }
}

fn transpose(rows: &[ElemSet]) -> Vec<ElemSet> {
    let n = rows.len();
    let mut out = vec![ElemSet::empty(n); n];
    for (i, row) in rows.iter().enumerate() {
        for j in row.iter() {
            out[j].insert(i);
        }
    }
    out
}
