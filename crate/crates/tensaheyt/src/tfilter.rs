//! Tense filters: lattice filters that absorb the operators. Four
//! equivalent characterizations are evaluated independently on every
//! query; a split between them would mean a bug, not a property of the
//! input, and is surfaced as a hard error.

use crate::bitset::ElemSet;
use crate::boxn::{box_n, BoxN};
use crate::filter::{enumerate_filters, Filter};
use crate::tense::{TenseHAlgebra, TenseOp};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("characterizations disagree on filter up({generator}): {details}")]
pub struct RouteSplit {
    pub generator: String,
    pub details: String,
}

/// The four routes, in the order they are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TenseFilterRoute {
    /// `x -> y` in F forces `u(y) -> u(x)` in F for every operator.
    ImplicationTransport,
    /// `x <-> y` in F forces `u(x) <-> u(y)` in F.
    EquivalenceTransport,
    /// The four adjoint-style transports, e.g. `g(x) -> y` in F forces
    /// `h(y) -> x` in F.
    AdjointTransport,
    /// F is closed under `[N]`.
    BoxClosure,
}

#[derive(Clone, Debug)]
pub struct TenseFilterVerdict {
    pub is_tense: bool,
    /// First failing route with its witness, when not tense.
    pub failure: Option<(TenseFilterRoute, String)>,
}

fn implication_transport(a: &TenseHAlgebra, f: &Filter) -> Option<String> {
    let h = &a.alg;
    for x in 0..a.n() {
        for y in 0..a.n() {
            if !f.contains(h.imp(x, y)) {
                continue;
            }
            for u in TenseOp::ALL {
                if !f.contains(h.imp(a.op(u, y), a.op(u, x))) {
                    return Some(format!("x={} y={} u={}", a.name(x), a.name(y), u.symbol()));
                }
            }
        }
    }
    None
}

fn equivalence_transport(a: &TenseHAlgebra, f: &Filter) -> Option<String> {
    let h = &a.alg;
    for x in 0..a.n() {
        for y in 0..a.n() {
            if !f.contains(h.iff(x, y)) {
                continue;
            }
            for u in TenseOp::ALL {
                if !f.contains(h.iff(a.op(u, x), a.op(u, y))) {
                    return Some(format!("x={} y={} u={}", a.name(x), a.name(y), u.symbol()));
                }
            }
        }
    }
    None
}

fn adjoint_transport(a: &TenseHAlgebra, f: &Filter) -> Option<String> {
    let h = &a.alg;
    for x in 0..a.n() {
        for y in 0..a.n() {
            let cases: [(bool, bool, &str); 4] = [
                (f.contains(h.imp(a.g(x), y)), f.contains(h.imp(a.h(y), x)), "g->h"),
                (f.contains(h.imp(a.h(x), y)), f.contains(h.imp(a.g(y), x)), "h->g"),
                (f.contains(h.imp(x, a.p(y))), f.contains(h.imp(y, a.f(x))), "p->f"),
                (f.contains(h.imp(x, a.f(y))), f.contains(h.imp(y, a.p(x))), "f->p"),
            ];
            for (premise, conclusion, tag) in cases {
                if premise && !conclusion {
                    return Some(format!("x={} y={} case={}", a.name(x), a.name(y), tag));
                }
            }
        }
    }
    None
}

fn box_closure(a: &TenseHAlgebra, bn: &BoxN, f: &Filter) -> Option<String> {
    f.members
        .iter()
        .find(|&x| !f.contains(bn.at(x)))
        .map(|x| format!("x={}", a.name(x)))
}

/// Evaluates all four characterizations and insists they agree.
pub fn is_tense_filter(a: &TenseHAlgebra, f: &Filter) -> Result<TenseFilterVerdict, RouteSplit> {
    let bn = box_n(a);
    is_tense_filter_with(a, &bn, f)
}

/// Same check with a precomputed `[N]`, for callers scanning many filters.
pub fn is_tense_filter_with(
    a: &TenseHAlgebra,
    bn: &BoxN,
    f: &Filter,
) -> Result<TenseFilterVerdict, RouteSplit> {
    let results = [
        (TenseFilterRoute::ImplicationTransport, implication_transport(a, f)),
        (TenseFilterRoute::EquivalenceTransport, equivalence_transport(a, f)),
        (TenseFilterRoute::AdjointTransport, adjoint_transport(a, f)),
        (TenseFilterRoute::BoxClosure, box_closure(a, bn, f)),
    ];
    let verdicts: Vec<bool> = results.iter().map(|(_, w)| w.is_none()).collect();
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        let details = results
            .iter()
            .map(|(route, w)| format!("{:?}={}", route, if w.is_none() { "yes" } else { "no" }))
            .collect::<Vec<_>>()
            .join(" ");
        return Err(RouteSplit { generator: a.name(f.generator).to_string(), details });
    }
    let failure = results
        .into_iter()
        .find_map(|(route, w)| w.map(|witness| (route, witness)));
    Ok(TenseFilterVerdict { is_tense: failure.is_none(), failure })
}

/// All tense filters, sorted by generator id like `enumerate_filters`.
pub fn enumerate_tense_filters(a: &TenseHAlgebra) -> Result<Vec<Filter>, RouteSplit> {
    let bn = box_n(a);
    let mut out = Vec::new();
    for f in enumerate_filters(a.alg.lattice()) {
        if is_tense_filter_with(a, &bn, &f)?.is_tense {
            out.push(f);
        }
    }
    Ok(out)
}

/// Least tense filter containing `xs`: the cone of the stable
/// cumulative `[N]` meet of the meet of `xs`. The empty set generates
/// the trivial filter.
pub fn generated_tense_filter(a: &TenseHAlgebra, xs: &ElemSet) -> Filter {
    let lat = a.alg.lattice();
    if xs.is_empty() {
        return Filter::principal(lat, a.alg.top());
    }
    let m = a.alg.meet_all(xs.iter());
    let (limit, _) = box_n(a).sink(a, m);
    Filter::principal(lat, limit)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityVerdict {
    pub simple: bool,
    /// When not simple: an element below the top whose generated tense
    /// filter stays proper.
    pub witness: Option<usize>,
}

/// Simple means the only tense filters are the trivial one and the
/// whole algebra; equivalently every nontop element is driven to
/// bottom by cumulative `[N]` meets.
pub fn is_simple(a: &TenseHAlgebra) -> SimplicityVerdict {
    let bn = box_n(a);
    let bad = (0..a.n())
        .filter(|&x| x != a.alg.top())
        .find(|&x| bn.sink(a, x).0 != a.alg.bot());
    SimplicityVerdict { simple: bad.is_none(), witness: bad }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiVerdict {
    pub subdirectly_irreducible: bool,
    /// When SI: a nontop element over all the sinks, generating the
    /// least nontrivial tense filter.
    pub bound: Option<usize>,
}

/// Subdirect irreducibility: some nontop element lies above the sink
/// of every nontop element. The join of the sinks is then the least
/// such bound and the intersection of all nontrivial tense filters is
/// its cone.
pub fn is_subdirectly_irreducible(a: &TenseHAlgebra) -> SiVerdict {
    let bn = box_n(a);
    let join_of_sinks = a.alg.lattice().join_all(
        (0..a.n()).filter(|&x| x != a.alg.top()).map(|x| bn.sink(a, x).0),
    );
    if join_of_sinks != a.alg.top() {
        SiVerdict { subdirectly_irreducible: true, bound: Some(join_of_sinks) }
    } else {
        SiVerdict { subdirectly_irreducible: false, bound: None }
    }
}
