//! Ordered sets with an accessibility relation, the dual side of the
//! theory. Finiteness discharges the topological axiom, so validation
//! is the convexity condition S2 plus upset preservation S3.

use crate::bitset::ElemSet;
use crate::poset::FinitePoset;
use crate::report::{CheckReport, Clause};
use crate::tense::TenseOp;

#[derive(Clone, Debug)]
pub struct TenseHSpace {
    poset: FinitePoset,
    rel: Vec<ElemSet>,
    rel_inv: Vec<ElemSet>,
}

impl TenseHSpace {
    pub fn new(poset: FinitePoset, edges: &[(usize, usize)]) -> Self {
        let n = poset.n();
        let mut rel = vec![ElemSet::empty(n); n];
        let mut rel_inv = vec![ElemSet::empty(n); n];
        for &(x, y) in edges {
            assert!(x < n && y < n, "edge out of range");
            rel[x].insert(y);
            rel_inv[y].insert(x);
        }
        TenseHSpace { poset, rel, rel_inv }
    }

    pub fn from_rows(poset: FinitePoset, rel: Vec<ElemSet>) -> Self {
        let n = poset.n();
        assert!(rel.len() == n && rel.iter().all(|r| r.universe() == n));
        let mut rel_inv = vec![ElemSet::empty(n); n];
        for (x, row) in rel.iter().enumerate() {
            for y in row.iter() {
                rel_inv[y].insert(x);
            }
        }
        TenseHSpace { poset, rel, rel_inv }
    }

    pub fn n(&self) -> usize {
        self.poset.n()
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn name(&self, i: usize) -> &str {
        self.poset.name(i)
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.rel[x].contains(y)
    }

    pub fn successors(&self, x: usize) -> &ElemSet {
        &self.rel[x]
    }

    pub fn predecessors(&self, x: usize) -> &ElemSet {
        &self.rel_inv[x]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (x, row) in self.rel.iter().enumerate() {
            for y in row.iter() {
                out.push((x, y));
            }
        }
        out
    }

    /// The four set operators. Each looks at the complement of `u`:
    /// g and h ask for some related point outside, f and p ask for all
    /// related points outside, along the relation or its converse.
    pub fn set_op(&self, op: TenseOp, u: &ElemSet) -> ElemSet {
        let outside = u.complement();
        let rows = match op {
            TenseOp::G | TenseOp::F => &self.rel,
            TenseOp::H | TenseOp::P => &self.rel_inv,
        };
        let keep = |row: &ElemSet| match op {
            TenseOp::G | TenseOp::H => row.intersects(&outside),
            TenseOp::F | TenseOp::P => row.is_subset(&outside),
        };
        ElemSet::from_indices(self.n(), (0..self.n()).filter(|&x| keep(&rows[x])))
    }

    pub fn upsets(&self) -> Vec<ElemSet> {
        self.poset.upsets()
    }

    /// S1 is finiteness, free here. S2 requires each successor set to
    /// be order convex: `R(x)` equals the intersection of its downward
    /// and upward closures. S3 requires the four set operators to send
    /// upsets to upsets.
    pub fn validate(&self) -> CheckReport {
        let mut r = CheckReport::new();
        r.push(Clause::pass("S1"));
        let bad_s2 = (0..self.n()).find(|&x| {
            let s = &self.rel[x];
            let convex = self
                .poset
                .downward_closure(s)
                .intersect(&self.poset.upward_closure(s));
            convex != *s
        });
        r.push(match bad_s2 {
            None => Clause::pass("S2"),
            Some(x) => Clause::fail("S2", format!("x={}", self.name(x))),
        });
        let mut s3 = Clause::pass("S3");
        'outer: for u in self.upsets() {
            for op in TenseOp::ALL {
                if !self.poset.is_upset(&self.set_op(op, &u)) {
                    s3 = Clause::fail(
                        "S3",
                        format!("op={} U={}", op.symbol(), render_set(self, &u)),
                    );
                    break 'outer;
                }
            }
        }
        r.push(s3);
        r
    }
}

pub fn render_set(space: &TenseHSpace, s: &ElemSet) -> String {
    let names: Vec<&str> = s.iter().map(|i| space.name(i)).collect();
    format!("{{{}}}", names.join("."))
}
