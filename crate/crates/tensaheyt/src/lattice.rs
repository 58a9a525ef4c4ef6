//! Finite bounded lattices built from a partial order.

use crate::bitset::ElemSet;
use crate::poset::FinitePoset;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("not a lattice: {a} and {b} have no meet")]
    NoMeet { a: String, b: String },
    #[error("not a lattice: {a} and {b} have no join")]
    NoJoin { a: String, b: String },
}

/// Binary operation table over `0..n`, row-major.
#[derive(Clone, Debug)]
pub struct OpTable {
    n: usize,
    data: Vec<u32>,
}

impl OpTable {
    pub fn build(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                data.push(f(a, b) as u32);
            }
        }
        OpTable { n, data }
    }

    pub fn try_build<E>(
        n: usize,
        mut f: impl FnMut(usize, usize) -> Result<usize, E>,
    ) -> Result<Self, E> {
        let mut data = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                data.push(f(a, b)? as u32);
            }
        }
        Ok(OpTable { n, data })
    }

    pub fn at(&self, a: usize, b: usize) -> usize {
        self.data[a * self.n + b] as usize
    }
}

#[derive(Clone, Debug)]
pub struct FiniteLattice {
    poset: FinitePoset,
    meet: OpTable,
    join: OpTable,
    bot: usize,
    top: usize,
}

/// Largest element of `s`, if `s` has one inside itself.
fn greatest(poset: &FinitePoset, s: &ElemSet) -> Option<usize> {
    s.iter().find(|&m| s.is_subset(poset.down_cone(m)))
}

fn least(poset: &FinitePoset, s: &ElemSet) -> Option<usize> {
    s.iter().find(|&m| s.is_subset(poset.up_cone(m)))
}

/// Computes meet and join tables for a finite order, failing on the
/// first pair (in id order) with no greatest lower or least upper bound.
pub fn build_lattice(poset: FinitePoset) -> Result<FiniteLattice, LatticeError> {
    let n = poset.n();
    let meet = OpTable::try_build(n, |a, b| {
        let lower = poset.down_cone(a).intersect(poset.down_cone(b));
        greatest(&poset, &lower).ok_or_else(|| LatticeError::NoMeet {
            a: poset.name(a).to_string(),
            b: poset.name(b).to_string(),
        })
    })?;
    let join = OpTable::try_build(n, |a, b| {
        let upper = poset.up_cone(a).intersect(poset.up_cone(b));
        least(&poset, &upper).ok_or_else(|| LatticeError::NoJoin {
            a: poset.name(a).to_string(),
            b: poset.name(b).to_string(),
        })
    })?;
    let mut bot = 0;
    let mut top = 0;
    for x in 1..n {
        bot = meet.at(bot, x);
        top = join.at(top, x);
    }
    Ok(FiniteLattice { poset, meet, join, bot, top })
}

impl FiniteLattice {
    /// Assembles a lattice from tables known to be correct for the
    /// order, skipping the bound search. The caller owns the invariant.
    pub fn from_parts(poset: FinitePoset, meet: OpTable, join: OpTable, bot: usize, top: usize) -> Self {
        FiniteLattice { poset, meet, join, bot, top }
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

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet.at(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join.at(a, b)
    }

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bot, |acc, x| self.join(acc, x))
    }

    /// First triple (in id order) violating `x /\ (y \/ z) = (x /\ y) \/ (x /\ z)`.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }
}
