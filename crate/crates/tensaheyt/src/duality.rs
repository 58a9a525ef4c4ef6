//! The finite duality. Prime filters of an algebra form a space whose
//! relation is carved out of f and g; upsets of a space form an algebra
//! under the four set operators. The canonical maps in both directions
//! are isomorphisms, and several crosschecks here verify that claim and
//! the bookkeeping lemmas around it on concrete instances.

use crate::bitset::ElemSet;
use crate::filter::{enumerate_prime_filters, Filter};
use crate::heyting::HeytingAlgebra;
use crate::lattice::{FiniteLattice, OpTable};
use crate::morphism::{
    check_space_heyting_morphism, check_tense_homomorphism, AlgebraMorphism, SpaceMorphism,
};
use crate::poset::FinitePoset;
use crate::report::{CheckReport, Clause};
use crate::space::{render_set, TenseHSpace};
use crate::tense::{TenseHAlgebra, TenseOp};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DualityError {
    #[error("space axioms fail: {}", first_failure(.0))]
    SpaceAxiomViolation(CheckReport),
    #[error("space has more than {cap} upsets")]
    TooManyUpsets { cap: usize },
    #[error("not a tense homomorphism: {}", first_failure(.0))]
    NotAHomomorphism(CheckReport),
    #[error("canonical map is not an isomorphism: {0}")]
    IsomorphismFailure(String),
    #[error("duality bookkeeping broke: {0}")]
    Internal(String),
}

fn first_failure(r: &CheckReport) -> String {
    r.failures().next().map(|c| c.render()).unwrap_or_else(|| "unknown clause".into())
}

/// Dual space of an algebra: points are the prime filters in generator
/// order, ordered by inclusion.
pub struct DualSpace {
    pub space: TenseHSpace,
    pub primes: Vec<Filter>,
}

impl DualSpace {
    pub fn point_of(&self, members: &ElemSet) -> Option<usize> {
        self.primes.iter().position(|p| p.members == *members)
    }
}

/// Does `(s, t)` belong to the dual relation, read off f and g: every
/// f-value in S keeps its argument out of T, and everything outside T
/// has its g-value in S.
fn rel_fg(a: &TenseHAlgebra, s: &Filter, t: &Filter) -> bool {
    (0..a.n()).all(|x| !s.contains(a.f(x)) || !t.contains(x))
        && (0..a.n()).all(|x| t.contains(x) || s.contains(a.g(x)))
}

/// The mirrored definition through p and h; equal to `rel_fg` by the
/// adjunction laws, which `check_relation_definitions` verifies.
fn rel_ph(a: &TenseHAlgebra, s: &Filter, t: &Filter) -> bool {
    (0..a.n()).all(|x| !t.contains(a.p(x)) || !s.contains(x))
        && (0..a.n()).all(|x| s.contains(x) || t.contains(a.h(x)))
}

pub fn dual_space(a: &TenseHAlgebra) -> DualSpace {
    let primes = enumerate_prime_filters(a.alg.lattice());
    let m = primes.len();
    let names = primes.iter().map(|p| format!("up_{}", a.name(p.generator))).collect();
    let up = (0..m)
        .map(|i| {
            ElemSet::from_indices(
                m,
                (0..m).filter(|&j| primes[i].members.is_subset(&primes[j].members)),
            )
        })
        .collect();
    let poset = FinitePoset::from_closed_rows(names, up);
    let rel = (0..m)
        .map(|i| {
            ElemSet::from_indices(
                m,
                (0..m).filter(|&j| rel_fg(a, &primes[i], &primes[j])),
            )
        })
        .collect();
    let space = TenseHSpace::from_rows(poset, rel);
    DualSpace { space, primes }
}

/// The f/g and p/h readings of the dual relation agree pointwise.
pub fn check_relation_definitions(a: &TenseHAlgebra) -> CheckReport {
    let d = dual_space(a);
    let mut r = CheckReport::new();
    let mut clause = Clause::pass("relation-fg-vs-ph");
    'outer: for (i, s) in d.primes.iter().enumerate() {
        for (j, t) in d.primes.iter().enumerate() {
            if rel_fg(a, s, t) != rel_ph(a, s, t) {
                clause = Clause::fail(
                    "relation-fg-vs-ph",
                    format!("S={} T={}", d.space.name(i), d.space.name(j)),
                );
                break 'outer;
            }
        }
    }
    r.push(clause);
    r
}

/// Upsets of a validated space under intersection, union, the cone
/// implication and the four set operators. Elements are numbered by
/// subset bitmask.
pub fn dual_algebra(x: &TenseHSpace, cap: usize) -> Result<TenseHAlgebra, DualityError> {
    let report = x.validate();
    if !report.passed() {
        return Err(DualityError::SpaceAxiomViolation(report));
    }
    let ups = x
        .poset()
        .upsets_capped(cap)
        .ok_or(DualityError::TooManyUpsets { cap })?;
    let n = ups.len();
    let index: std::collections::BTreeMap<&ElemSet, usize> =
        ups.iter().enumerate().map(|(i, u)| (u, i)).collect();
    let find = |set: &ElemSet| -> Result<usize, DualityError> {
        index.get(set).copied().ok_or_else(|| {
            DualityError::Internal(format!("operator left the upsets: {}", render_set(x, set)))
        })
    };
    let names = ups.iter().map(|u| render_set(x, u)).collect();
    let up_rows = (0..n)
        .map(|i| ElemSet::from_indices(n, (0..n).filter(|&j| ups[i].is_subset(&ups[j]))))
        .collect();
    let poset = FinitePoset::from_closed_rows(names, up_rows);
    let meet = OpTable::try_build(n, |i, j| find(&ups[i].intersect(&ups[j])))?;
    let join = OpTable::try_build(n, |i, j| find(&ups[i].union(&ups[j])))?;
    // U -> V holds at a point when every point above it in U is in V.
    let imp = OpTable::try_build(n, |i, j| {
        let members = (0..x.n()).filter(|&pt| {
            x.poset().up_cone(pt).intersect(&ups[i]).is_subset(&ups[j])
        });
        find(&ElemSet::from_indices(x.n(), members))
    })?;
    let bot = find(&ElemSet::empty(x.n()))?;
    let top = find(&ElemSet::full(x.n()))?;
    let lat = FiniteLattice::from_parts(poset, meet, join, bot, top);
    let alg = HeytingAlgebra::from_parts(lat, imp);
    let mut tables: [Vec<u32>; 4] = Default::default();
    for op in TenseOp::ALL {
        let mut t = Vec::with_capacity(n);
        for u in &ups {
            t.push(find(&x.set_op(op, u))? as u32);
        }
        tables[match op {
            TenseOp::G => 0,
            TenseOp::H => 1,
            TenseOp::F => 2,
            TenseOp::P => 3,
        }] = t;
    }
    TenseHAlgebra::new(alg, tables)
        .map_err(|e| DualityError::Internal(format!("dual algebra rejected: {e}")))
}

/// The canonical isomorphism of an algebra onto the dual of its dual.
pub struct SigmaIso {
    pub dual: DualSpace,
    pub double: TenseHAlgebra,
    pub map: AlgebraMorphism,
}

/// sigma(a) = the set of prime filters containing a, as an element of
/// the double dual. Verifies bijectivity and preservation of all eight
/// operations before returning.
pub fn sigma(a: &TenseHAlgebra, cap: usize) -> Result<SigmaIso, DualityError> {
    let dual = dual_space(a);
    let double = dual_algebra(&dual.space, cap)?;
    let ups = dual.space.poset().upsets();
    let index: std::collections::BTreeMap<&ElemSet, usize> =
        ups.iter().enumerate().map(|(i, u)| (u, i)).collect();
    let mut map = Vec::with_capacity(a.n());
    for e in 0..a.n() {
        let image = ElemSet::from_indices(
            dual.primes.len(),
            (0..dual.primes.len()).filter(|&i| dual.primes[i].contains(e)),
        );
        let idx = index.get(&image).copied().ok_or_else(|| {
            DualityError::IsomorphismFailure(format!(
                "sigma({}) is not an upset of the dual space",
                a.name(e)
            ))
        })?;
        map.push(idx as u32);
    }
    let map = AlgebraMorphism { map };
    if !map.is_bijective(double.n()) {
        return Err(DualityError::IsomorphismFailure("sigma is not a bijection".into()));
    }
    let hom = check_tense_homomorphism(a, &double, &map);
    if !hom.passed() {
        return Err(DualityError::IsomorphismFailure(format!(
            "sigma breaks {}",
            first_failure(&hom)
        )));
    }
    Ok(SigmaIso { dual, double, map })
}

/// The canonical isomorphism of a space onto the dual of its dual.
pub struct EpsilonIso {
    pub algebra: TenseHAlgebra,
    pub double: DualSpace,
    pub map: SpaceMorphism,
}

/// epsilon(x) = the set of upsets containing x, as a prime filter of
/// the dual algebra. Verifies bijectivity and that order and relation
/// transfer in both directions.
pub fn epsilon(x: &TenseHSpace, cap: usize) -> Result<EpsilonIso, DualityError> {
    let algebra = dual_algebra(x, cap)?;
    let double = dual_space(&algebra);
    let ups = x.poset().upsets();
    let mut map = Vec::with_capacity(x.n());
    for pt in 0..x.n() {
        let members = ElemSet::from_indices(
            algebra.n(),
            (0..algebra.n()).filter(|&i| ups[i].contains(pt)),
        );
        let idx = double.point_of(&members).ok_or_else(|| {
            DualityError::IsomorphismFailure(format!(
                "epsilon({}) is not a prime filter of the dual algebra",
                x.name(pt)
            ))
        })?;
        map.push(idx as u32);
    }
    let map = SpaceMorphism { map };
    let mut seen = vec![false; double.primes.len()];
    for &i in &map.map {
        if seen[i as usize] {
            return Err(DualityError::IsomorphismFailure("epsilon is not injective".into()));
        }
        seen[i as usize] = true;
    }
    if map.map.len() != double.primes.len() {
        return Err(DualityError::IsomorphismFailure("epsilon is not onto".into()));
    }
    for a in 0..x.n() {
        for b in 0..x.n() {
            if x.poset().leq(a, b) != double.space.poset().leq(map.at(a), map.at(b)) {
                return Err(DualityError::IsomorphismFailure(format!(
                    "order differs at x={} y={}",
                    x.name(a),
                    x.name(b)
                )));
            }
            if x.related(a, b) != double.space.related(map.at(a), map.at(b)) {
                return Err(DualityError::IsomorphismFailure(format!(
                    "relation differs at x={} y={}",
                    x.name(a),
                    x.name(b)
                )));
            }
        }
    }
    Ok(EpsilonIso { algebra, double, map })
}

/// Dual of a tense homomorphism: preimage on prime filters, running
/// against the arrow.
pub struct DualMorphism {
    /// Dual of the codomain algebra; domain of the point map.
    pub source: DualSpace,
    /// Dual of the domain algebra; codomain of the point map.
    pub target: DualSpace,
    pub map: SpaceMorphism,
}

pub fn dual_morphism(
    a1: &TenseHAlgebra,
    a2: &TenseHAlgebra,
    k: &AlgebraMorphism,
) -> Result<DualMorphism, DualityError> {
    let hom = check_tense_homomorphism(a1, a2, k);
    if !hom.passed() {
        return Err(DualityError::NotAHomomorphism(hom));
    }
    let source = dual_space(a2);
    let target = dual_space(a1);
    let mut map = Vec::with_capacity(source.primes.len());
    for s in &source.primes {
        let preimage = ElemSet::from_indices(
            a1.n(),
            (0..a1.n()).filter(|&x| s.contains(k.at(x))),
        );
        let idx = target.point_of(&preimage).ok_or_else(|| {
            DualityError::Internal(format!(
                "preimage of up({}) is not prime",
                a2.name(s.generator)
            ))
        })?;
        map.push(idx as u32);
    }
    Ok(DualMorphism { source, target, map: SpaceMorphism { map } })
}

/// Both presentations of the morphism laws evaluated independently:
/// the pointwise conditions m1..m5 and the operator exchange laws
/// M1..M5. For a Heyting morphism of valid spaces the two verdicts
/// must coincide.
pub struct MorphismEquivalence {
    pub heyting: CheckReport,
    pub pointwise: CheckReport,
    pub setwise: CheckReport,
}

impl MorphismEquivalence {
    pub fn verdicts_agree(&self) -> bool {
        self.pointwise.passed() == self.setwise.passed()
    }
}

pub fn check_morphism_equivalence(
    x1: &TenseHSpace,
    x2: &TenseHSpace,
    k: &SpaceMorphism,
) -> MorphismEquivalence {
    let heyting = check_space_heyting_morphism(x1, x2, k);
    let mut pointwise = CheckReport::new();
    let wit_inner = |x: usize, y: usize| format!("x={} y={}", x1.name(x), x1.name(y));
    let wit_cross = |x: usize, y: usize| format!("x={} y={}", x1.name(x), x2.name(y));
    let m1 = scan_pairs(x1.n(), x1.n(), |x, y| {
        !x1.related(x, y) || x2.related(k.at(x), k.at(y))
    });
    pointwise.push(clause("m1", m1.map(|(x, y)| wit_inner(x, y))));
    let m2 = scan_pairs(x1.n(), x2.n(), |x, y| {
        !x2.related(k.at(x), y)
            || x1.successors(x).iter().any(|z| x2.poset().leq(k.at(z), y))
    });
    pointwise.push(clause("m2", m2.map(|(x, y)| wit_cross(x, y))));
    let m3 = scan_pairs(x1.n(), x2.n(), |x, y| {
        !x2.related(y, k.at(x))
            || x1.predecessors(x).iter().any(|z| x2.poset().leq(k.at(z), y))
    });
    pointwise.push(clause("m3", m3.map(|(x, y)| wit_cross(x, y))));
    let m4 = scan_pairs(x1.n(), x2.n(), |x, y| {
        !x2.related(k.at(x), y)
            || x1.successors(x).iter().any(|z| x2.poset().leq(y, k.at(z)))
    });
    pointwise.push(clause("m4", m4.map(|(x, y)| wit_cross(x, y))));
    let m5 = scan_pairs(x1.n(), x2.n(), |x, y| {
        !x2.related(y, k.at(x))
            || x1.predecessors(x).iter().any(|z| x2.poset().leq(y, k.at(z)))
    });
    pointwise.push(clause("m5", m5.map(|(x, y)| wit_cross(x, y))));

    let mut setwise = CheckReport::new();
    setwise.push(clause("M1", m1.map(|(x, y)| wit_inner(x, y))));
    let pull = |u: &ElemSet| {
        ElemSet::from_indices(x1.n(), (0..x1.n()).filter(|&p| u.contains(k.at(p))))
    };
    let ups2 = x2.poset().upsets();
    for (tag, op) in [("M2", TenseOp::G), ("M3", TenseOp::H), ("M4", TenseOp::F), ("M5", TenseOp::P)] {
        let bad = ups2
            .iter()
            .find(|u| pull(&x2.set_op(op, u)) != x1.set_op(op, &pull(u)));
        setwise.push(match bad {
            None => Clause::pass(tag),
            Some(u) => Clause::fail(tag, format!("U={}", render_set(x2, u))),
        });
    }
    MorphismEquivalence { heyting, pointwise, setwise }
}

fn scan_pairs(n1: usize, n2: usize, ok: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
    for x in 0..n1 {
        for y in 0..n2 {
            if !ok(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

fn clause(id: &str, witness: Option<String>) -> Clause {
    match witness {
        None => Clause::pass(id),
        Some(w) => Clause::fail(id, w),
    }
}

/// Membership of g, h, f, p values in a prime filter, characterized by
/// quantifying over dual relation successors or predecessors.
pub fn check_relation_characterization(a: &TenseHAlgebra) -> CheckReport {
    let d = dual_space(a);
    let m = d.primes.len();
    let mut r = CheckReport::new();
    let mut push = |id: &str, bad: Option<(usize, usize)>| {
        r.push(match bad {
            None => Clause::pass(id),
            Some((i, e)) => {
                Clause::fail(id, format!("S={} a={}", d.space.name(i), a.name(e)))
            }
        });
    };
    push(
        "g-membership",
        scan_pairs(m, a.n(), |i, e| {
            let lhs = !d.primes[i].contains(a.g(e));
            let rhs = d.space.successors(i).iter().all(|j| d.primes[j].contains(e));
            lhs == rhs
        }),
    );
    push(
        "h-membership",
        scan_pairs(m, a.n(), |i, e| {
            let lhs = !d.primes[i].contains(a.h(e));
            let rhs = d.space.predecessors(i).iter().all(|j| d.primes[j].contains(e));
            lhs == rhs
        }),
    );
    push(
        "f-membership",
        scan_pairs(m, a.n(), |i, e| {
            let lhs = d.primes[i].contains(a.f(e));
            let rhs = d.space.successors(i).iter().all(|j| !d.primes[j].contains(e));
            lhs == rhs
        }),
    );
    push(
        "p-membership",
        scan_pairs(m, a.n(), |i, e| {
            let lhs = d.primes[i].contains(a.p(e));
            let rhs = d.space.predecessors(i).iter().all(|j| !d.primes[j].contains(e));
            lhs == rhs
        }),
    );
    r
}

/// The four halves of the relation definition, rewritten as composites
/// of the relation with inclusion. Composition is computed as a
/// boolean matrix product over the cone rows.
pub fn check_relation_compositions(a: &TenseHAlgebra) -> CheckReport {
    let d = dual_space(a);
    let m = d.primes.len();
    let poset = d.space.poset();
    let union_over = |starts: &ElemSet, row: &dyn Fn(usize) -> ElemSet| {
        let mut acc = ElemSet::empty(m);
        for q in starts.iter() {
            acc.union_in(&row(q));
        }
        acc
    };
    let rel_row = |i: usize| d.space.successors(i).clone();
    // Right-hand sides: R then inclusion, etc.
    let r_then_leq: Vec<ElemSet> =
        (0..m).map(|i| union_over(d.space.successors(i), &|q| poset.up_cone(q).clone())).collect();
    let geq_then_r: Vec<ElemSet> =
        (0..m).map(|i| union_over(poset.down_cone(i), &rel_row)).collect();
    let leq_then_r: Vec<ElemSet> =
        (0..m).map(|i| union_over(poset.up_cone(i), &rel_row)).collect();
    let r_then_geq: Vec<ElemSet> =
        (0..m).map(|i| union_over(d.space.successors(i), &|q| poset.down_cone(q).clone())).collect();
    // Left-hand sides from the algebra.
    let lhs_g = |i: usize, j: usize| {
        (0..a.n()).all(|e| d.primes[j].contains(e) || d.primes[i].contains(a.g(e)))
    };
    let lhs_h = |i: usize, j: usize| {
        (0..a.n()).all(|e| d.primes[i].contains(e) || d.primes[j].contains(a.h(e)))
    };
    let lhs_f = |i: usize, j: usize| {
        (0..a.n()).all(|e| !d.primes[i].contains(a.f(e)) || !d.primes[j].contains(e))
    };
    let lhs_p = |i: usize, j: usize| {
        (0..a.n()).all(|e| !d.primes[j].contains(a.p(e)) || !d.primes[i].contains(e))
    };
    let mut r = CheckReport::new();
    let mut push = |id: &str, lhs: &dyn Fn(usize, usize) -> bool, rhs: &Vec<ElemSet>| {
        let bad = scan_pairs(m, m, |i, j| lhs(i, j) == rhs[i].contains(j));
        r.push(match bad {
            None => Clause::pass(id),
            Some((i, j)) => {
                Clause::fail(id, format!("S={} T={}", d.space.name(i), d.space.name(j)))
            }
        });
    };
    push("g-composition", &lhs_g, &r_then_leq);
    push("h-composition", &lhs_h, &geq_then_r);
    push("f-composition", &lhs_f, &leq_then_r);
    push("p-composition", &lhs_p, &r_then_geq);
    r
}

/// How a non-related pair is separated: an upset whose f-image holds x
/// while the upset holds y, or an upset missing y whose g-image misses x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparationWitness {
    Forward(ElemSet),
    Backward(ElemSet),
}

/// First witness in upset order, forward kind preferred.
pub fn separation_witness(x: &TenseHSpace, a: usize, b: usize) -> Option<SeparationWitness> {
    let ups = x.poset().upsets();
    for u in &ups {
        if x.set_op(TenseOp::F, u).contains(a) && u.contains(b) {
            return Some(SeparationWitness::Forward(u.clone()));
        }
    }
    for v in &ups {
        if !v.contains(b) && !x.set_op(TenseOp::G, v).contains(a) {
            return Some(SeparationWitness::Backward(v.clone()));
        }
    }
    None
}

/// Every pair outside the relation is separated one way or the other.
pub fn check_separation(x: &TenseHSpace) -> CheckReport {
    let mut r = CheckReport::new();
    let bad = scan_pairs(x.n(), x.n(), |a, b| {
        x.related(a, b) || separation_witness(x, a, b).is_some()
    });
    r.push(match bad {
        None => Clause::pass("separation"),
        Some((a, b)) => {
            Clause::fail("separation", format!("x={} y={}", x.name(a), x.name(b)))
        }
    });
    r
}
