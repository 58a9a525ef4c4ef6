//! Lattice filters and ideals. On a finite lattice every filter is the
//! upper cone of its meet, so enumeration is by generator.

use crate::bitset::ElemSet;
use crate::lattice::FiniteLattice;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeparationError {
    #[error("filter and ideal both contain {witness}")]
    NotDisjoint { witness: String },
    #[error("no prime filter separates the pair")]
    NoPrimeFilter,
}

/// Nonempty, upward closed, meet closed subset. `generator` is the meet
/// of the members, so `members = up_cone(generator)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filter {
    pub generator: usize,
    pub members: ElemSet,
}

/// Order dual of [`Filter`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    pub generator: usize,
    pub members: ElemSet,
}

impl Filter {
    pub fn principal(lat: &FiniteLattice, x: usize) -> Self {
        Filter { generator: x, members: lat.poset().up_cone(x).clone() }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_proper(&self, lat: &FiniteLattice) -> bool {
        !self.contains(lat.bot())
    }

    /// Smallest filter containing `set`, the cone of its meet. The
    /// empty set yields the trivial filter `{top}`.
    pub fn generated(lat: &FiniteLattice, set: &ElemSet) -> Self {
        Filter::principal(lat, lat.meet_all(set.iter()))
    }
}

impl Ideal {
    pub fn principal(lat: &FiniteLattice, x: usize) -> Self {
        Ideal { generator: x, members: lat.poset().down_cone(x).clone() }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }
}

/// Checks the filter conditions directly: nonempty, upward closed,
/// closed under meet.
pub fn is_filter(lat: &FiniteLattice, s: &ElemSet) -> bool {
    if s.is_empty() || !lat.poset().is_upset(s) {
        return false;
    }
    s.iter().all(|a| s.iter().all(|b| s.contains(lat.meet(a, b))))
}

pub fn is_ideal(lat: &FiniteLattice, s: &ElemSet) -> bool {
    if s.is_empty() {
        return false;
    }
    let down_closed = s.iter().all(|x| lat.poset().down_cone(x).is_subset(s));
    down_closed && s.iter().all(|a| s.iter().all(|b| s.contains(lat.join(a, b))))
}

/// All filters, sorted by generator id. Includes the improper filter
/// generated by bottom.
pub fn enumerate_filters(lat: &FiniteLattice) -> Vec<Filter> {
    (0..lat.n()).map(|x| Filter::principal(lat, x)).collect()
}

/// Definitional primality: proper, and `a \/ b` in the filter forces
/// `a` or `b` in. Equivalent to the generator being join-irreducible.
pub fn is_prime(lat: &FiniteLattice, f: &Filter) -> bool {
    if !f.is_proper(lat) {
        return false;
    }
    let n = lat.n();
    for a in 0..n {
        for b in 0..n {
            if f.contains(lat.join(a, b)) && !f.contains(a) && !f.contains(b) {
                return false;
            }
        }
    }
    true
}

pub fn enumerate_prime_filters(lat: &FiniteLattice) -> Vec<Filter> {
    enumerate_filters(lat).into_iter().filter(|f| is_prime(lat, f)).collect()
}

/// Finds a prime filter extending `f` and missing `i`, scanning prime
/// filters in generator order so the result is deterministic. Existence
/// is the finite separation property of distributive lattices; the
/// `NoPrimeFilter` arm is reachable only off that class.
pub fn filter_ideal_separation(
    lat: &FiniteLattice,
    f: &Filter,
    i: &Ideal,
) -> Result<Filter, SeparationError> {
    if f.members.intersects(&i.members) {
        let w = f.members.intersect(&i.members).first().unwrap();
        return Err(SeparationError::NotDisjoint { witness: lat.name(w).to_string() });
    }
    enumerate_prime_filters(lat)
        .into_iter()
        .find(|p| f.members.is_subset(&p.members) && !p.members.intersects(&i.members))
        .ok_or(SeparationError::NoPrimeFilter)
}
