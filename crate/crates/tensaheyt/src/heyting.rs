//! Heyting algebras: distributive lattices carrying relative
//! pseudocomplement tables.

use crate::lattice::{FiniteLattice, OpTable};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HeytingError {
    #[error("not distributive: witness x={x} y={y} z={z}")]
    NotDistributive { x: String, y: String, z: String },
    #[error("no relative pseudocomplement for {a} -> {b}")]
    NoRelativePseudocomplement { a: String, b: String },
}

#[derive(Clone, Debug)]
pub struct HeytingAlgebra {
    lat: FiniteLattice,
    imp: OpTable,
}

/// Equips a finite distributive lattice with `a -> b`, the largest `c`
/// such that `a /\ c <= b`. Fails with a witness if the lattice is not
/// distributive (a relative pseudocomplement could then be missing).
pub fn heyting_implication(lat: FiniteLattice) -> Result<HeytingAlgebra, HeytingError> {
    if let Some((x, y, z)) = lat.distributivity_witness() {
        return Err(HeytingError::NotDistributive {
            x: lat.name(x).to_string(),
            y: lat.name(y).to_string(),
            z: lat.name(z).to_string(),
        });
    }
    let n = lat.n();
    let imp = OpTable::try_build(n, |a, b| {
        // The join of all candidates is the only possible maximum; it
        // qualifies itself exactly when the pseudocomplement exists.
        let c = lat.join_all((0..n).filter(|&c| lat.leq(lat.meet(a, c), b)));
        if lat.leq(lat.meet(a, c), b) {
            Ok(c)
        } else {
            Err(HeytingError::NoRelativePseudocomplement {
                a: lat.name(a).to_string(),
                b: lat.name(b).to_string(),
            })
        }
    })?;
    Ok(HeytingAlgebra { lat, imp })
}

impl HeytingAlgebra {
    /// Wraps a lattice and implication table that are already known to
    /// satisfy residuation, as in powerset algebras.
    pub fn from_parts(lat: FiniteLattice, imp: OpTable) -> Self {
        HeytingAlgebra { lat, imp }
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lat
    }

    pub fn n(&self) -> usize {
        self.lat.n()
    }

    pub fn name(&self, i: usize) -> &str {
        self.lat.name(i)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.lat.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.lat.meet(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.lat.join(a, b)
    }

    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        self.lat.meet_all(xs)
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        self.lat.join_all(xs)
    }

    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.imp.at(a, b)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.imp.at(a, self.lat.bot())
    }

    /// `(a -> b) /\ (b -> a)`
    pub fn iff(&self, a: usize, b: usize) -> usize {
        self.meet(self.imp(a, b), self.imp(b, a))
    }

    pub fn bot(&self) -> usize {
        self.lat.bot()
    }

    pub fn top(&self) -> usize {
        self.lat.top()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_lattice;
    use crate::poset::FinitePoset;

    fn lat(names: &[&str], pairs: &[(usize, usize)]) -> FiniteLattice {
        let p = FinitePoset::from_pairs(names.iter().map(|s| s.to_string()).collect(), pairs)
            .unwrap();
        build_lattice(p).unwrap()
    }

    #[test]
    fn three_chain_implication() {
        let h = heyting_implication(lat(&["0", "m", "1"], &[(0, 1), (1, 2)])).unwrap();
        assert_eq!(h.imp(2, 1), 1);
        assert_eq!(h.imp(1, 0), 0);
        assert_eq!(h.neg(1), 0);
        assert_eq!(h.neg(0), 2);
    }

    #[test]
    fn diamond_is_refused() {
        let l = lat(
            &["0", "x", "y", "z", "1"],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        );
        let err = heyting_implication(l).unwrap_err();
        assert_eq!(
            err,
            HeytingError::NotDistributive { x: "x".into(), y: "y".into(), z: "z".into() }
        );
    }

    #[test]
    fn residuation_on_a_boolean_square() {
        // Product of two 2-chains ordered componentwise.
        let h = heyting_implication(lat(
            &["00", "01", "10", "11"],
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        ))
        .unwrap();
        for a in 0..4 {
            for b in 0..4 {
                // a -> b = complement(a) \/ b in the Boolean case.
                let compl = h.neg(a);
                assert_eq!(h.imp(a, b), h.join(compl, b));
                for c in 0..4 {
                    assert_eq!(h.leq(h.meet(a, c), b), h.leq(c, h.imp(a, b)));
                }
            }
        }
    }
}
