//! Exhaustive local deduction detachment sweep: every pair of premise
//! sets with at most two elements each, every candidate conclusion.
//! Both sides of the equivalence are recomputed here from the raw
//! definitions and compared against the library verdict and witness.

use tensaheyt::builders::{chain, ej2, extreme, product, two_chain_extreme};
use tensaheyt::logic::{lddt_check, LddtOutcome};
use tensaheyt::tense::{TenseHAlgebra, TenseOp};

// all subsets with at most two elements, as index vectors, mask order
fn small_subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() <= 2)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

// member sets of tense filters, straight from the closure conditions
fn tense_filter_sets(a: &TenseHAlgebra) -> Vec<u32> {
    let n = a.n();
    let is_tense_filter = |m: u32| {
        let has = |x: usize| m >> x & 1 == 1;
        if !has(a.alg.top()) {
            return false;
        }
        for x in 0..n {
            for y in 0..n {
                if has(x) && a.alg.leq(x, y) && !has(y) {
                    return false;
                }
                if has(x) && has(y) && !has(a.alg.meet(x, y)) {
                    return false;
                }
                if has(a.alg.imp(x, y))
                    && TenseOp::ALL
                        .iter()
                        .any(|&u| !has(a.alg.imp(a.op(u, y), a.op(u, x))))
                {
                    return false;
                }
            }
        }
        true
    };
    (0u32..1 << n).filter(|&m| is_tense_filter(m)).collect()
}

// membership in the least tense filter containing s, by intersection
fn in_generated(sets: &[u32], s: &[usize], psi: usize) -> bool {
    sets.iter()
        .filter(|&&m| s.iter().all(|&x| m >> x & 1 == 1))
        .all(|&m| m >> psi & 1 == 1)
}

// the interior operator written out: negated g meet negated h
fn interior_table(a: &TenseHAlgebra) -> Vec<usize> {
    let neg = |x: usize| a.alg.imp(x, a.alg.bot());
    (0..a.n())
        .map(|x| a.alg.meet(neg(a.op(TenseOp::G, x)), neg(a.op(TenseOp::H, x))))
        .collect()
}

// meet of the first k + 1 interior iterates of m
fn cumulative(a: &TenseHAlgebra, bn: &[usize], m: usize, k: usize) -> usize {
    let mut acc = m;
    let mut x = m;
    for _ in 0..k {
        x = bn[x];
        acc = a.alg.meet(acc, x);
    }
    acc
}

// the detachment side: some depth and some nonempty part of delta turn
// the claim into an implication lying in the filter of gamma alone
fn rhs_holds(
    a: &TenseHAlgebra,
    sets: &[u32],
    bn: &[usize],
    gamma: &[usize],
    delta: &[usize],
    psi: usize,
) -> bool {
    for k in 0..=a.n() {
        for mask in 1u32..1 << delta.len() {
            let meet = (0..delta.len())
                .filter(|i| mask >> i & 1 == 1)
                .fold(a.alg.top(), |acc, i| a.alg.meet(acc, delta[i]));
            if in_generated(sets, gamma, a.alg.imp(cumulative(a, bn, meet, k), psi)) {
                return true;
            }
        }
    }
    false
}

#[test]
fn detachment_equivalence_is_exhaustive_for_small_premise_sets() {
    let algebras = [
        ("extreme-chain-3", extreme(chain(3)).unwrap()),
        ("ej2", ej2()),
        ("product-2x2", product(&two_chain_extreme(), &two_chain_extreme())),
    ];
    for (name, a) in &algebras {
        let n = a.n();
        let sets = tense_filter_sets(a);
        let bn = interior_table(a);
        let subsets = small_subsets(n);
        for gamma in &subsets {
            for delta in &subsets {
                for psi in 0..n {
                    let both: Vec<usize> = gamma.iter().chain(delta).copied().collect();
                    let lhs = in_generated(&sets, &both, psi);
                    let outcome = lddt_check(a, gamma, delta, psi);
                    if delta.is_empty() {
                        assert_eq!(
                            outcome,
                            LddtOutcome::DegenerateEmptyDelta { lhs },
                            "{name}: gamma={gamma:?} psi={psi}"
                        );
                        continue;
                    }
                    let rhs = rhs_holds(a, &sets, &bn, gamma, delta, psi);
                    assert_eq!(
                        lhs, rhs,
                        "{name}: equivalence broke at gamma={gamma:?} delta={delta:?} psi={psi}"
                    );
                    let LddtOutcome::Equivalent { lhs: got, witness } = outcome else {
                        panic!("{name}: degenerate outcome with nonempty delta");
                    };
                    assert_eq!(got, lhs, "{name}: gamma={gamma:?} delta={delta:?} psi={psi}");
                    assert_eq!(witness.is_some(), rhs);
                    if let Some(w) = witness {
                        assert!(w.k <= n && !w.subset.is_empty());
                        assert!(w.subset.iter().all(|x| delta.contains(x)));
                        let meet = w
                            .subset
                            .iter()
                            .fold(a.alg.top(), |acc, &x| a.alg.meet(acc, x));
                        assert!(
                            in_generated(&sets, gamma, a.alg.imp(cumulative(a, &bn, meet, w.k), psi)),
                            "{name}: reported witness does not certify its own claim"
                        );
                    }
                }
            }
        }
    }
}
