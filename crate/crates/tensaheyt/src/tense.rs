//! Heyting algebras with the four negative tense operators and the
//! axiom scanners for them.
//!
//! The operator laws come in mirror pairs: `g` against `h` and `f`
//! against `p`, exchanged by reading the accessibility relation
//! backwards. Every scanner checks both halves of a pair under one
//! axiom tag and reports the least witness in element-id order.

use crate::filter::{enumerate_prime_filters, is_filter, is_ideal};
use crate::heyting::HeytingAlgebra;
use crate::report::{AxiomReport, CheckReport, Clause};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TenseError {
    #[error("operator table for {op} has {got} entries, carrier has {expected}")]
    BadTableArity { op: char, got: usize, expected: usize },
    #[error("degenerate algebra: carrier has fewer than two elements")]
    Degenerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TenseOp {
    G,
    H,
    F,
    P,
}

impl TenseOp {
    pub const ALL: [TenseOp; 4] = [TenseOp::G, TenseOp::H, TenseOp::F, TenseOp::P];

    pub fn symbol(self) -> char {
        match self {
            TenseOp::G => 'g',
            TenseOp::H => 'h',
            TenseOp::F => 'f',
            TenseOp::P => 'p',
        }
    }

    /// Position in [`TenseOp::ALL`], used to index per-operator tables.
    pub fn index(self) -> usize {
        match self {
            TenseOp::G => 0,
            TenseOp::H => 1,
            TenseOp::F => 2,
            TenseOp::P => 3,
        }
    }
}

/// A Heyting algebra with unary tables for g, h, f, p. Candidates that
/// break the axioms are representable; `check_axioms` classifies them.
#[derive(Clone, Debug)]
pub struct TenseHAlgebra {
    pub alg: HeytingAlgebra,
    tables: [Vec<u32>; 4],
}

impl TenseHAlgebra {
    pub fn new(alg: HeytingAlgebra, tables: [Vec<u32>; 4]) -> Result<Self, TenseError> {
        if alg.n() < 2 {
            return Err(TenseError::Degenerate);
        }
        for (op, t) in TenseOp::ALL.into_iter().zip(&tables) {
            if t.len() != alg.n() {
                return Err(TenseError::BadTableArity {
                    op: op.symbol(),
                    got: t.len(),
                    expected: alg.n(),
                });
            }
            assert!(t.iter().all(|&v| (v as usize) < alg.n()), "table entry out of range");
        }
        Ok(TenseHAlgebra { alg, tables })
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    pub fn name(&self, i: usize) -> &str {
        self.alg.name(i)
    }

    pub fn op(&self, u: TenseOp, a: usize) -> usize {
        self.tables[u.index()][a] as usize
    }

    pub fn table(&self, u: TenseOp) -> &[u32] {
        &self.tables[u.index()]
    }

    pub fn g(&self, a: usize) -> usize {
        self.op(TenseOp::G, a)
    }

    pub fn h(&self, a: usize) -> usize {
        self.op(TenseOp::H, a)
    }

    pub fn f(&self, a: usize) -> usize {
        self.op(TenseOp::F, a)
    }

    pub fn p(&self, a: usize) -> usize {
        self.op(TenseOp::P, a)
    }
}

fn w1(a: &TenseHAlgebra, x: usize) -> String {
    format!("x={}", a.name(x))
}

fn w2(a: &TenseHAlgebra, x: usize, y: usize) -> String {
    format!("x={} y={}", a.name(x), a.name(y))
}

fn scan1(a: &TenseHAlgebra, id: &str, ok: impl Fn(usize) -> bool) -> Clause {
    match (0..a.n()).find(|&x| !ok(x)) {
        None => Clause::pass(id),
        Some(x) => Clause::fail(id, w1(a, x)),
    }
}

fn scan2(a: &TenseHAlgebra, id: &str, ok: impl Fn(usize, usize) -> bool) -> Clause {
    for x in 0..a.n() {
        for y in 0..a.n() {
            if !ok(x, y) {
                return Clause::fail(id, w2(a, x, y));
            }
        }
    }
    Clause::pass(id)
}

/// Scans the defining axioms T1 through T8 and reports one clause per
/// tag. Violations are data, not errors.
pub fn check_axioms(a: &TenseHAlgebra) -> AxiomReport {
    let h = &a.alg;
    let top = h.top();
    let bot = h.bot();
    let mut r = CheckReport::new();
    r.push(if a.g(top) == bot && a.h(top) == bot {
        Clause::pass("T1")
    } else {
        Clause::fail("T1", w1(a, top))
    });
    r.push(if a.f(bot) == top && a.p(bot) == top {
        Clause::pass("T2")
    } else {
        Clause::fail("T2", w1(a, bot))
    });
    r.push(scan2(a, "T3", |x, y| {
        a.g(h.meet(x, y)) == h.join(a.g(x), a.g(y)) && a.h(h.meet(x, y)) == h.join(a.h(x), a.h(y))
    }));
    r.push(scan2(a, "T4", |x, y| {
        a.f(h.join(x, y)) == h.meet(a.f(x), a.f(y)) && a.p(h.join(x, y)) == h.meet(a.p(x), a.p(y))
    }));
    r.push(scan1(a, "T5", |x| {
        h.leq(a.g(a.h(x)), x) && h.leq(a.h(a.g(x)), x)
    }));
    r.push(scan1(a, "T6", |x| {
        h.leq(x, a.p(a.f(x))) && h.leq(x, a.f(a.p(x)))
    }));
    r.push(scan2(a, "T7", |x, y| {
        h.leq(h.meet(a.g(x), a.f(y)), a.g(h.join(x, y)))
            && h.leq(h.meet(a.h(x), a.p(y)), a.h(h.join(x, y)))
    }));
    r.push(scan2(a, "T8", |x, y| {
        h.leq(a.f(h.meet(x, y)), h.join(a.f(x), a.g(y)))
            && h.leq(a.p(h.meet(x, y)), h.join(a.p(x), a.h(y)))
    }));
    r
}

/// Scans the consequences T9 through T14: antitonicity, the adjunction
/// style equivalences, and the two composite inequalities.
pub fn check_derived_laws(a: &TenseHAlgebra) -> AxiomReport {
    let h = &a.alg;
    let mut r = CheckReport::new();
    r.push(scan2(a, "T9", |x, y| {
        !h.leq(x, y) || (h.leq(a.g(y), a.g(x)) && h.leq(a.h(y), a.h(x)))
    }));
    r.push(scan2(a, "T10", |x, y| {
        !h.leq(x, y) || (h.leq(a.f(y), a.f(x)) && h.leq(a.p(y), a.p(x)))
    }));
    r.push(scan2(a, "T11", |x, y| {
        h.leq(a.g(x), y) == h.leq(a.h(y), x)
    }));
    r.push(scan2(a, "T12", |x, y| {
        h.leq(x, a.p(y)) == h.leq(y, a.f(x))
    }));
    r.push(scan2(a, "T13", |x, y| {
        h.leq(a.h(h.imp(h.imp(a.g(x), y), y)), x)
            && h.leq(a.g(h.imp(h.imp(a.h(x), y), y)), x)
    }));
    r.push(scan2(a, "T14", |x, y| {
        h.leq(y, a.f(h.meet(x, a.p(y)))) && h.leq(y, a.p(h.meet(x, a.f(y))))
    }));
    r
}

/// For every prime filter S the preimages under f and p are ideals and
/// the complements of the preimages under g and h are filters.
pub fn check_prime_preimages(a: &TenseHAlgebra) -> CheckReport {
    let lat = a.alg.lattice();
    let primes = enumerate_prime_filters(lat);
    let shape_holds = |gen: usize, op: TenseOp| {
        let s = lat.poset().up_cone(gen);
        let pre = crate::bitset::ElemSet::from_indices(
            a.n(),
            (0..a.n()).filter(|&x| s.contains(a.op(op, x))),
        );
        match op {
            TenseOp::F | TenseOp::P => is_ideal(lat, &pre),
            TenseOp::G | TenseOp::H => is_filter(lat, &pre.complement()),
        }
    };
    let ids = [
        ("f-preimage-ideal", TenseOp::F),
        ("p-preimage-ideal", TenseOp::P),
        ("g-preimage-complement-filter", TenseOp::G),
        ("h-preimage-complement-filter", TenseOp::H),
    ];
    let mut r = CheckReport::new();
    for (id, op) in ids {
        let bad = primes.iter().find(|p| !shape_holds(p.generator, op));
        r.push(match bad {
            None => Clause::pass(id),
            Some(p) => Clause::fail(id, format!("S=up({})", a.name(p.generator))),
        });
    }
    r
}
