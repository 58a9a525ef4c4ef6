//! The interior-style operators attached to each tense operator and
//! their combination `[N]`, the workhorse behind tense filters,
//! congruences and the deduction theorem.
//!
//! `[u](a)` is the meet over all `b` of `u(a /\ b) -> u(b)`; it
//! measures how far `u` is from treating `a` as neutral. `[N]` is the
//! meet of the four, and on these algebras it collapses to
//! `~g(a) /\ ~h(a)`. Both routes are computed here and kept side by
//! side so the collapse stays under test instead of being assumed.

use crate::tense::{TenseHAlgebra, TenseOp};

/// Table of `[u]` for one operator.
pub fn box_op(a: &TenseHAlgebra, u: TenseOp) -> Vec<u32> {
    let h = &a.alg;
    (0..a.n())
        .map(|x| {
            h.meet_all((0..a.n()).map(|b| {
                h.imp(a.op(u, h.meet(x, b)), a.op(u, b))
            })) as u32
        })
        .collect()
}

/// `[N]` with its two computation routes and the per-operator tables
/// they came from.
pub struct BoxN {
    pub per_op: [Vec<u32>; 4],
    /// Meet of the four per-operator tables; the defining route.
    pub table: Vec<u32>,
    /// `~g(a) /\ ~h(a)`; must agree with `table` on valid algebras.
    pub closed_form: Vec<u32>,
}

pub fn box_n(a: &TenseHAlgebra) -> BoxN {
    let h = &a.alg;
    let per_op = TenseOp::ALL.map(|u| box_op(a, u));
    let table = (0..a.n())
        .map(|x| {
            h.meet_all(per_op.iter().map(|t| t[x] as usize)) as u32
        })
        .collect();
    let closed_form = (0..a.n())
        .map(|x| h.meet(h.neg(a.g(x)), h.neg(a.h(x))) as u32)
        .collect();
    BoxN { per_op, table, closed_form }
}

impl BoxN {
    pub fn at(&self, x: usize) -> usize {
        self.table[x] as usize
    }

    /// First element where the defining meet and the closed form
    /// disagree; `None` on every valid tense H-algebra.
    pub fn route_disagreement(&self) -> Option<usize> {
        (0..self.table.len()).find(|&x| self.table[x] != self.closed_form[x])
    }

    /// Plain k-fold application `[N]^k(a)`.
    pub fn iterate(&self, a: usize, k: usize) -> usize {
        (0..k).fold(a, |x, _| self.at(x))
    }

    /// Meet of `[N]^0(a), ..., [N]^k(a)`. Monotone nonincreasing in k.
    pub fn cumulative(&self, alg: &TenseHAlgebra, a: usize, k: usize) -> usize {
        let mut acc = a;
        let mut x = a;
        for _ in 0..k {
            x = self.at(x);
            acc = alg.alg.meet(acc, x);
        }
        acc
    }

    /// The stable value of the cumulative meets and the first index
    /// reaching it. The iterates revisit a value within `n` steps, so
    /// the cumulative sequence is constant from index `n` on.
    pub fn sink(&self, alg: &TenseHAlgebra, a: usize) -> (usize, usize) {
        let n = alg.n();
        let limit = self.cumulative(alg, a, n);
        let k = (0..=n).find(|&k| self.cumulative(alg, a, k) == limit).unwrap();
        (limit, k)
    }
}
