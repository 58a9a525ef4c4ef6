//! Algebraic semantics for the formula language: evaluation, validity,
//! countermodel search over a fixed corpus, soundness of the Hilbert rules,
//! and the finite-algebra deduction-detachment equivalence.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::bitset::ElemSet;
use crate::boxn::box_n;
use crate::builders::{chain, ej2, extreme, frame_algebra, product, two_chain_extreme,
                      DEFAULT_MAX_ELEMENTS};
use crate::formula::Formula;
use crate::report::{CheckReport, Clause};
use crate::tense::TenseHAlgebra;
use crate::tfilter::generated_tense_filter;

/// Variable index to element id. The map must cover every variable of the
/// formula being evaluated.
pub type Assignment = BTreeMap<u32, usize>;

/// Evaluations allowed per validity query before giving up loudly.
pub const DEFAULT_EVAL_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable x{var} has no value in the assignment")]
    UnboundVariable { var: u32 },
    #[error("assignment space needs {needed} evaluations, cap is {cap}")]
    AssignmentSpaceTooLarge { needed: u128, cap: usize },
}

/// Homomorphic evaluation into the operation tables of `a`.
pub fn eval(f: &Formula, a: &TenseHAlgebra, m: &Assignment) -> Result<usize, EvalError> {
    Ok(match f {
        Formula::Bot => a.alg.bot(),
        Formula::Top => a.alg.top(),
        Formula::Var(i) => *m.get(i).ok_or(EvalError::UnboundVariable { var: *i })?,
        Formula::And(x, y) => a.alg.meet(eval(x, a, m)?, eval(y, a, m)?),
        Formula::Or(x, y) => a.alg.join(eval(x, a, m)?, eval(y, a, m)?),
        Formula::Imp(x, y) => a.alg.imp(eval(x, a, m)?, eval(y, a, m)?),
        Formula::Modal(u, x) => a.op(*u, eval(x, a, m)?),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    /// The lexicographically least falsifying assignment, ordering
    /// assignments by element id tuple over ascending variable index.
    Invalid { assignment: Assignment },
}

pub fn is_valid(f: &Formula, a: &TenseHAlgebra) -> Result<Validity, EvalError> {
    is_valid_capped(f, a, DEFAULT_EVAL_CAP)
}

/// Scans all `|A|^v` assignments in lexicographic order, so the reported
/// countermodel is the least one. Errors out before evaluating anything if
/// the assignment space exceeds `cap`.
pub fn is_valid_capped(f: &Formula, a: &TenseHAlgebra, cap: usize) -> Result<Validity, EvalError> {
    let vars: Vec<u32> = f.vars().into_iter().collect();
    let n = a.n();
    let needed = (n as u128)
        .checked_pow(vars.len() as u32)
        .unwrap_or(u128::MAX);
    if needed > cap as u128 {
        return Err(EvalError::AssignmentSpaceTooLarge { needed, cap });
    }
    let mut values = vec![0usize; vars.len()];
    loop {
        let m: Assignment = vars.iter().copied().zip(values.iter().copied()).collect();
        if eval(f, a, &m)? != a.alg.top() {
            return Ok(Validity::Invalid { assignment: m });
        }
        // odometer, last variable fastest: lexicographic ascending
        let mut i = values.len();
        loop {
            if i == 0 {
                return Ok(Validity::Valid);
            }
            i -= 1;
            values[i] += 1;
            if values[i] < n {
                break;
            }
            values[i] = 0;
        }
    }
}

/// A named algebra in the countermodel search order.
pub struct CorpusEntry {
    pub name: String,
    pub algebra: TenseHAlgebra,
}

fn frame_entries(points: usize, out: &mut Vec<CorpusEntry>) {
    let bits = points * points;
    for mask in 0u64..(1u64 << bits) {
        let mut edges = Vec::new();
        for i in 1..=points {
            for j in 1..=points {
                if mask >> ((i - 1) * points + (j - 1)) & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        let algebra = frame_algebra(points, &edges, DEFAULT_MAX_ELEMENTS)
            .expect("frame sizes here are far under the cap");
        out.push(CorpusEntry { name: format!("frame-{points}-r{mask}"), algebra });
    }
}

/// All complement-algebra frames on up to `max_points` points, every
/// relation, in bitmask order. Mask bit `(i-1)*n + (j-1)` is edge i->j.
pub fn frame_family(max_points: usize) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for points in 1..=max_points {
        frame_entries(points, &mut out);
    }
    out
}

/// The fixed search order: extreme chains, the six-element example, the
/// four-element product, then all frames on up to three points.
pub fn standard_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for k in 2..=6 {
        let algebra = extreme(chain(k)).expect("extreme tables satisfy the axioms");
        out.push(CorpusEntry { name: format!("extreme-chain-{k}"), algebra });
    }
    out.push(CorpusEntry { name: "ej2".to_string(), algebra: ej2() });
    let sq = product(&two_chain_extreme(), &two_chain_extreme());
    out.push(CorpusEntry { name: "product-2x2".to_string(), algebra: sq });
    for points in 1..=3 {
        frame_entries(points, &mut out);
    }
    out
}

/// First corpus entry falsifying `f`, with the least assignment in it.
pub fn countermodel_search(
    f: &Formula,
    corpus: &[CorpusEntry],
) -> Result<Option<(String, Assignment)>, EvalError> {
    for entry in corpus {
        if let Validity::Invalid { assignment } = is_valid(f, &entry.algebra)? {
            return Ok(Some((entry.name.clone(), assignment)));
        }
    }
    Ok(None)
}

/// The four modal axiom schemes, as formulas in x1, x2.
pub fn ign_axioms() -> Vec<(&'static str, Formula)> {
    [
        ("gf-join", "g x1 & f x2 -> g (x1 | x2)"),
        ("f-meet-split", "f (x1 & x2) -> f x1 | g x2"),
        ("hp-join", "h x1 & p x2 -> h (x1 | x2)"),
        ("p-meet-split", "p (x1 & x2) -> p x1 | h x2"),
    ]
    .into_iter()
    .map(|(id, src)| (id, Formula::parse(src).expect("axioms are well formed")))
    .collect()
}

/// A finite basis for the propositional part, one representative formula
/// per scheme.
pub fn ipl_axioms() -> Vec<(&'static str, Formula)> {
    [
        ("weakening", "x1 -> x2 -> x1"),
        ("self-distribution", "(x1 -> x2 -> x3) -> (x1 -> x2) -> x1 -> x3"),
        ("and-elim-left", "x1 & x2 -> x1"),
        ("and-elim-right", "x1 & x2 -> x2"),
        ("and-intro", "x1 -> x2 -> x1 & x2"),
        ("or-intro-left", "x1 -> x1 | x2"),
        ("or-intro-right", "x2 -> x1 | x2"),
        ("or-elim", "(x1 -> x3) -> (x2 -> x3) -> x1 | x2 -> x3"),
        ("ex-falso", "bot -> x1"),
    ]
    .into_iter()
    .map(|(id, src)| (id, Formula::parse(src).expect("axioms are well formed")))
    .collect()
}

/// Element-level soundness of the three inference rules: premises at value
/// 1 force the conclusion to value 1.
pub fn check_rules_soundness(a: &TenseHAlgebra) -> CheckReport {
    let n = a.n();
    let top = a.alg.top();
    let scan = |ok: &dyn Fn(usize, usize) -> bool| -> Option<String> {
        for x in 0..n {
            for y in 0..n {
                if !ok(x, y) {
                    return Some(format!("x={} y={}", a.name(x), a.name(y)));
                }
            }
        }
        None
    };
    let mut report = CheckReport::new();
    let mp = scan(&|x, y| !(x == top && a.alg.imp(x, y) == top) || y == top);
    report.push(match mp {
        None => Clause::pass("MP"),
        Some(w) => Clause::fail("MP", w),
    });
    let rn1 = scan(&|x, y| a.alg.imp(x, a.f(y)) != top || a.alg.imp(y, a.p(x)) == top);
    report.push(match rn1 {
        None => Clause::pass("RN1"),
        Some(w) => Clause::fail("RN1", w),
    });
    let rn2 = scan(&|x, y| a.alg.imp(a.g(x), y) != top || a.alg.imp(a.h(y), x) == top);
    report.push(match rn2 {
        None => Clause::pass("RN2"),
        Some(w) => Clause::fail("RN2", w),
    });
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LddtWitness {
    /// Interior-iteration depth, at most `|A|`.
    pub k: usize,
    /// The nonempty subset of delta whose meet carries the implication.
    pub subset: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LddtOutcome {
    /// Delta nonempty. `lhs` is membership of psi in the filter generated
    /// by gamma and delta together; the witness realises the equivalent
    /// implication-in-`[gamma)` form and is present exactly when `lhs`.
    Equivalent { lhs: bool, witness: Option<LddtWitness> },
    /// Delta empty: there is no nonempty subset to quantify over, so only
    /// the membership side is meaningful.
    DegenerateEmptyDelta { lhs: bool },
}

/// Both sides of the finite deduction-detachment equivalence.
///
/// LHS: psi lies in the tense filter generated by gamma and delta jointly.
/// RHS: some depth k and nonempty subset of delta put the guarded
/// implication inside the filter generated by gamma alone. The two agree
/// on every finite algebra; the witness search runs k ascending, then
/// subsets in ascending bitmask order over delta's given order.
pub fn lddt_check(a: &TenseHAlgebra, gamma: &[usize], delta: &[usize], psi: usize) -> LddtOutcome {
    let n = a.n();
    let mut both = ElemSet::empty(n);
    for &x in gamma.iter().chain(delta) {
        both.insert(x);
    }
    let lhs = generated_tense_filter(a, &both).contains(psi);
    if delta.is_empty() {
        return LddtOutcome::DegenerateEmptyDelta { lhs };
    }

    let mut gamma_set = ElemSet::empty(n);
    for &x in gamma {
        gamma_set.insert(x);
    }
    let gamma_filter = generated_tense_filter(a, &gamma_set);
    let bn = box_n(a);
    let mut witness = None;
    'search: for k in 0..=n {
        for mask in 1u64..(1u64 << delta.len()) {
            let subset: Vec<usize> = delta
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            let meet = subset.iter().fold(a.alg.top(), |acc, &x| a.alg.meet(acc, x));
            let guarded = bn.cumulative(a, meet, k);
            if gamma_filter.contains(a.alg.imp(guarded, psi)) {
                witness = Some(LddtWitness { k, subset });
                break 'search;
            }
        }
    }
    assert_eq!(
        lhs,
        witness.is_some(),
        "deduction-detachment equivalence broke on a finite algebra"
    );
    LddtOutcome::Equivalent { lhs, witness }
}
