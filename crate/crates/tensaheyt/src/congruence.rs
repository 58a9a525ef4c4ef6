//! Congruences of tense H-algebras and their correspondence with tense
//! filters: F maps to the relation `x ~ y iff x <-> y in F`, and a
//! congruence maps back to the class of the top. On these algebras the
//! two directions are mutually inverse and order preserving, which
//! `congruence_lattice` rechecks on every call rather than assuming.

use crate::bitset::ElemSet;
use crate::filter::Filter;
use crate::heyting::HeytingAlgebra;
use crate::lattice::{FiniteLattice, OpTable};
use crate::poset::FinitePoset;
use crate::tense::{TenseHAlgebra, TenseOp};
use crate::tfilter::{enumerate_tense_filters, is_tense_filter, RouteSplit};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CongruenceError {
    #[error("not a tense filter: up({generator}) fails {route} at {witness}")]
    NotATenseFilter { generator: String, route: String, witness: String },
    #[error("not a congruence: {0}")]
    NotACongruence(String),
    #[error(transparent)]
    RouteSplit(#[from] RouteSplit),
    #[error("filter/congruence correspondence broke: {0}")]
    CorrespondenceBroken(String),
}

/// Partition of the carrier into classes, stored as the minimum member
/// id of each element's class. Two elements are congruent exactly when
/// their stored representatives are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    pub repr: Vec<u32>,
}

impl Congruence {
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.repr[x] == self.repr[y]
    }

    pub fn class_of(&self, x: usize) -> ElemSet {
        let n = self.repr.len();
        ElemSet::from_indices(n, (0..n).filter(|&y| self.related(x, y)))
    }

    /// Distinct class representatives in ascending order.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps: Vec<usize> = self.repr.iter().map(|&r| r as usize).collect();
        reps.sort_unstable();
        reps.dedup();
        reps
    }

    pub fn class_count(&self) -> usize {
        self.representatives().len()
    }

    pub fn is_identity(&self) -> bool {
        self.repr.iter().enumerate().all(|(i, &r)| r as usize == i)
    }

    /// Containment as relation sets: every class of `self` sits inside
    /// a class of `other`.
    pub fn refines(&self, other: &Congruence) -> bool {
        self.repr
            .iter()
            .enumerate()
            .all(|(i, &r)| other.related(i, r as usize))
    }

    fn from_relation(n: usize, related: impl Fn(usize, usize) -> bool) -> Self {
        let repr = (0..n)
            .map(|x| (0..n).find(|&y| related(x, y)).unwrap() as u32)
            .collect();
        Congruence { repr }
    }
}

/// Checks that a partition respects all eight operations and the
/// stored representatives are consistent.
pub fn validate_congruence(a: &TenseHAlgebra, c: &Congruence) -> Result<(), CongruenceError> {
    let n = a.n();
    if c.repr.len() != n {
        return Err(CongruenceError::NotACongruence(format!(
            "partition covers {} elements, carrier has {}",
            c.repr.len(),
            n
        )));
    }
    for x in 0..n {
        let r = c.repr[x] as usize;
        if r > x || c.repr[r] as usize != r {
            return Err(CongruenceError::NotACongruence(format!(
                "representative of {} is not the least member of its class",
                a.name(x)
            )));
        }
    }
    let h = &a.alg;
    let binary: [(&str, fn(&HeytingAlgebra, usize, usize) -> usize); 3] = [
        ("meet", HeytingAlgebra::meet),
        ("join", HeytingAlgebra::join),
        ("imp", HeytingAlgebra::imp),
    ];
    for x in 0..n {
        for xx in 0..n {
            if !c.related(x, xx) {
                continue;
            }
            for u in TenseOp::ALL {
                if !c.related(a.op(u, x), a.op(u, xx)) {
                    return Err(CongruenceError::NotACongruence(format!(
                        "{} breaks on x={} x'={}",
                        u.symbol(),
                        a.name(x),
                        a.name(xx)
                    )));
                }
            }
            for y in 0..n {
                for yy in 0..n {
                    if !c.related(y, yy) {
                        continue;
                    }
                    for (tag, op) in binary {
                        if !c.related(op(h, x, y), op(h, xx, yy)) {
                            return Err(CongruenceError::NotACongruence(format!(
                                "{tag} breaks on x={} x'={} y={} y'={}",
                                a.name(x),
                                a.name(xx),
                                a.name(y),
                                a.name(yy)
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn congruence_from_filter(
    a: &TenseHAlgebra,
    f: &Filter,
) -> Result<Congruence, CongruenceError> {
    let verdict = is_tense_filter(a, f)?;
    if let Some((route, witness)) = verdict.failure {
        return Err(CongruenceError::NotATenseFilter {
            generator: a.name(f.generator).to_string(),
            route: format!("{route:?}"),
            witness,
        });
    }
    Ok(Congruence::from_relation(a.n(), |x, y| f.contains(a.alg.iff(x, y))))
}

pub fn filter_from_congruence(
    a: &TenseHAlgebra,
    c: &Congruence,
) -> Result<Filter, CongruenceError> {
    validate_congruence(a, c)?;
    let top_class = c.class_of(a.alg.top());
    let generator = a.alg.meet_all(top_class.iter());
    let filter = Filter { generator, members: top_class };
    if filter.members != a.alg.lattice().poset().up_cone(generator).clone() {
        return Err(CongruenceError::CorrespondenceBroken(format!(
            "top class is not the cone of {}",
            a.name(generator)
        )));
    }
    Ok(filter)
}

/// All congruences, paired with their tense filters and sorted by
/// filter generator id. Verifies that the pairing is a bijection whose
/// both directions preserve inclusion.
pub fn congruence_lattice(
    a: &TenseHAlgebra,
) -> Result<Vec<(Filter, Congruence)>, CongruenceError> {
    let filters = enumerate_tense_filters(a)?;
    let mut pairs = Vec::with_capacity(filters.len());
    for f in filters {
        let c = congruence_from_filter(a, &f)?;
        let back = filter_from_congruence(a, &c)?;
        if back != f {
            return Err(CongruenceError::CorrespondenceBroken(format!(
                "round trip moved up({}) to up({})",
                a.name(f.generator),
                a.name(back.generator)
            )));
        }
        pairs.push((f, c));
    }
    for (f1, c1) in &pairs {
        for (f2, c2) in &pairs {
            let finc = f1.members.is_subset(&f2.members);
            let cinc = c1.refines(c2);
            if finc != cinc {
                return Err(CongruenceError::CorrespondenceBroken(format!(
                    "up({}) vs up({}): filter inclusion {} but congruence inclusion {}",
                    a.name(f1.generator),
                    a.name(f2.generator),
                    finc,
                    cinc
                )));
            }
        }
    }
    Ok(pairs)
}

/// Quotient algebra and the canonical surjection onto it. Classes are
/// numbered by ascending representative; class names carry brackets so
/// quotient elements stay distinguishable in printed output.
pub fn quotient(
    a: &TenseHAlgebra,
    c: &Congruence,
) -> Result<(TenseHAlgebra, Vec<u32>), CongruenceError> {
    validate_congruence(a, c)?;
    let reps = c.representatives();
    let n = reps.len();
    let class_index: Vec<u32> = (0..a.n())
        .map(|x| reps.binary_search(&(c.repr[x] as usize)).unwrap() as u32)
        .collect();
    let names = reps.iter().map(|&r| format!("[{}]", a.name(r))).collect();
    let h = &a.alg;
    let up = (0..n)
        .map(|i| {
            ElemSet::from_indices(
                n,
                (0..n).filter(|&j| {
                    let (x, y) = (reps[i], reps[j]);
                    class_index[h.meet(x, y)] as usize == i
                }),
            )
        })
        .collect();
    let poset = FinitePoset::from_closed_rows(names, up);
    let lift2 = |op: fn(&HeytingAlgebra, usize, usize) -> usize| {
        OpTable::build(n, |i, j| class_index[op(h, reps[i], reps[j])] as usize)
    };
    let meet = lift2(HeytingAlgebra::meet);
    let join = lift2(HeytingAlgebra::join);
    let imp = lift2(HeytingAlgebra::imp);
    let bot = class_index[h.bot()] as usize;
    let top = class_index[h.top()] as usize;
    let lat = FiniteLattice::from_parts(poset, meet, join, bot, top);
    let alg = HeytingAlgebra::from_parts(lat, imp);
    let tables = TenseOp::ALL.map(|u| {
        (0..n).map(|i| class_index[a.op(u, reps[i])]).collect()
    });
    let q = TenseHAlgebra::new(alg, tables).map_err(|e| {
        CongruenceError::NotACongruence(format!("quotient collapsed too far: {e}"))
    })?;
    Ok((q, class_index))
}
