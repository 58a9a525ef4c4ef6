//! Stock algebras: the six-element model `ej2`, extreme operators over
//! any Heyting algebra, powerset algebras of a relational frame, and
//! binary products.

use crate::bitset::ElemSet;
use crate::heyting::{heyting_implication, HeytingAlgebra};
use crate::lattice::{build_lattice, FiniteLattice, OpTable};
use crate::poset::FinitePoset;
use crate::tense::{TenseHAlgebra, TenseOp};
use thiserror::Error;

/// Hard ceiling on carrier sizes produced by the powerset and dual
/// constructions, overridable per call. 2^12 subsets keeps the dense
/// n-by-n tables around 64 MiB; beyond that the scans stop being
/// interactive anyway.
pub const DEFAULT_MAX_ELEMENTS: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("carrier would have {requested} elements, cap is {cap}")]
    TooLarge { requested: usize, cap: usize },
    #[error("edge ({from},{to}) is outside the frame")]
    EdgeOutOfRange { from: usize, to: usize },
    #[error("frame must have at least one point")]
    EmptyFrame,
}

/// The six-element tense H-algebra with carrier 0 < a,b < c,d < 1
/// (a below c only, b below both c and d). Its operator tables make
/// `f` and `p` genuinely different from the negation composites, so it
/// separates the four operators from each other.
pub fn ej2() -> TenseHAlgebra {
    let names = ["0", "a", "b", "c", "d", "1"].map(String::from).to_vec();
    let covers = [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 5)];
    let poset = FinitePoset::from_pairs(names, &covers).unwrap();
    let alg = heyting_implication(build_lattice(poset).unwrap()).unwrap();
    let g = vec![4, 4, 4, 2, 4, 0];
    let h = vec![5, 5, 3, 3, 0, 0];
    let f = vec![5, 1, 3, 1, 1, 1];
    let p = vec![5, 5, 2, 2, 0, 0];
    TenseHAlgebra::new(alg, [g, h, f, p]).unwrap()
}

/// Chain with `n` elements. Middle elements are named c1, c2, ... so
/// that 0 and 1 keep their usual names.
pub fn chain(n: usize) -> HeytingAlgebra {
    assert!(n >= 1);
    let names: Vec<String> = (0..n)
        .map(|i| {
            if i == 0 {
                "0".to_string()
            } else if i == n - 1 {
                "1".to_string()
            } else {
                format!("c{i}")
            }
        })
        .collect();
    let pairs: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    let poset = FinitePoset::from_pairs(names, &pairs).unwrap();
    heyting_implication(build_lattice(poset).unwrap()).unwrap()
}

/// The extreme operators: g and h collapse everything under the top to
/// 0, f and p collapse everything above the bottom to 1's mirror.
/// These satisfy the tense axioms over any Heyting algebra with 0 != 1.
pub fn extreme(alg: HeytingAlgebra) -> Result<TenseHAlgebra, crate::tense::TenseError> {
    let n = alg.n();
    let top = alg.top() as u32;
    let bot = alg.bot() as u32;
    let gh: Vec<u32> = (0..n).map(|x| if x == top as usize { bot } else { top }).collect();
    let fp: Vec<u32> = (0..n).map(|x| if x == bot as usize { top } else { bot }).collect();
    TenseHAlgebra::new(alg, [gh.clone(), gh, fp.clone(), fp])
}

/// Extreme operators over the two-element chain; classical negation in
/// all four coordinates.
pub fn two_chain_extreme() -> TenseHAlgebra {
    extreme(chain(2)).unwrap()
}

fn subset_name(mask: u64, points: usize) -> String {
    let inside: Vec<String> = (0..points).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", inside.join("."))
}

/// Powerset algebra of the frame `(X, R)` with `X = {1..points}`.
/// Subsets are ordered by inclusion and numbered by bitmask, so element
/// id equals mask. The operators read the relation negatively:
/// g sees an R-successor outside the set, f sees no R-successor inside.
pub fn frame_algebra(
    points: usize,
    edges: &[(usize, usize)],
    cap: usize,
) -> Result<TenseHAlgebra, BuildError> {
    if points == 0 {
        return Err(BuildError::EmptyFrame);
    }
    if points >= 63 || (1usize << points) > cap {
        return Err(BuildError::TooLarge { requested: 1 << points.min(62), cap });
    }
    let mut succ = vec![0u64; points];
    let mut pred = vec![0u64; points];
    for &(from, to) in edges {
        if !(1..=points).contains(&from) || !(1..=points).contains(&to) {
            return Err(BuildError::EdgeOutOfRange { from, to });
        }
        succ[from - 1] |= 1 << (to - 1);
        pred[to - 1] |= 1 << (from - 1);
    }
    let n = 1usize << points;
    let full = (n - 1) as u64;
    let names = (0..n).map(|m| subset_name(m as u64, points)).collect();
    let up = (0..n)
        .map(|m| ElemSet::from_indices(n, (0..n).filter(|&b| (m & !b) == 0)))
        .collect();
    let poset = FinitePoset::from_closed_rows(names, up);
    let meet = OpTable::build(n, |x, y| x & y);
    let join = OpTable::build(n, |x, y| x | y);
    let lat = FiniteLattice::from_parts(poset, meet, join, 0, n - 1);
    let imp = OpTable::build(n, |x, y| (!(x as u64) | y as u64) as usize & full as usize);
    let alg = HeytingAlgebra::from_parts(lat, imp);

    let op_table = |rows: &[u64], keep: fn(u64, u64) -> bool| -> Vec<u32> {
        (0..n as u64)
            .map(|u| {
                let outside = !u & full;
                (0..points)
                    .filter(|&x| keep(rows[x], outside))
                    .fold(0u32, |acc, x| acc | 1 << x)
            })
            .collect()
    };
    let g = op_table(&succ, |row, outside| row & outside != 0);
    let h = op_table(&pred, |row, outside| row & outside != 0);
    let f = op_table(&succ, |row, outside| row & !outside == 0);
    let p = op_table(&pred, |row, outside| row & !outside == 0);
    Ok(TenseHAlgebra::new(alg, [g, h, f, p]).expect("powerset carrier has at least two subsets"))
}

/// Direct product with componentwise order and operators. Element
/// `(i, j)` of the factors becomes id `i * n2 + j`, named by joining
/// the factor names with a dot.
pub fn product(a: &TenseHAlgebra, b: &TenseHAlgebra) -> TenseHAlgebra {
    let (na, nb) = (a.n(), b.n());
    let n = na * nb;
    let id = |i: usize, j: usize| i * nb + j;
    let names = (0..na)
        .flat_map(|i| (0..nb).map(move |j| (i, j)))
        .map(|(i, j)| format!("({}.{})", a.name(i), b.name(j)))
        .collect();
    let up = (0..na)
        .flat_map(|i| (0..nb).map(move |j| (i, j)))
        .map(|(i, j)| {
            ElemSet::from_indices(
                n,
                (0..na).flat_map(|x| (0..nb).map(move |y| (x, y)))
                    .filter(|&(x, y)| a.alg.leq(i, x) && b.alg.leq(j, y))
                    .map(|(x, y)| id(x, y)),
            )
        })
        .collect();
    let poset = FinitePoset::from_closed_rows(names, up);
    let split = |v: usize| (v / nb, v % nb);
    let tab2 = |fa: fn(&HeytingAlgebra, usize, usize) -> usize| {
        OpTable::build(n, |x, y| {
            let ((xi, xj), (yi, yj)) = (split(x), split(y));
            id(fa(&a.alg, xi, yi), fa(&b.alg, xj, yj))
        })
    };
    let meet = tab2(HeytingAlgebra::meet);
    let join = tab2(HeytingAlgebra::join);
    let imp = tab2(HeytingAlgebra::imp);
    let bot = id(a.alg.bot(), b.alg.bot());
    let top = id(a.alg.top(), b.alg.top());
    let lat = FiniteLattice::from_parts(poset, meet, join, bot, top);
    let alg = HeytingAlgebra::from_parts(lat, imp);
    let tables = TenseOp::ALL.map(|u| {
        (0..n)
            .map(|x| {
                let (i, j) = split(x);
                id(a.op(u, i), b.op(u, j)) as u32
            })
            .collect()
    });
    TenseHAlgebra::new(alg, tables).expect("product of nondegenerate algebras is nondegenerate")
}
