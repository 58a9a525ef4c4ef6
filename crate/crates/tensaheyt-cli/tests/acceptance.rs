//! The acceptance gate. One test per criterion, each printing a single
//! `ACCEPTANCE <n> PASS|FAIL <slug>` line (visible under
//! `cargo test -- --nocapture`) before asserting. The checks here stay
//! deliberately close to the definitions; the heavier independent
//! oracles live in the library's own test suite.

use assert_cmd::Command;
use std::collections::BTreeSet;
use tempfile::TempDir;
use tensaheyt::bitset::ElemSet;
use tensaheyt::boxn::{box_n, box_op};
use tensaheyt::builders::{ej2, product, two_chain_extreme, DEFAULT_MAX_ELEMENTS};
use tensaheyt::congruence::congruence_lattice;
use tensaheyt::duality::{check_morphism_equivalence, check_relation_characterization,
                         check_relation_compositions, check_relation_definitions,
                         check_separation, dual_algebra, dual_morphism, dual_space, epsilon,
                         sigma};
use tensaheyt::filter::enumerate_filters;
use tensaheyt::logic::{check_rules_soundness, ign_axioms, ipl_axioms, is_valid_capped,
                       lddt_check, standard_corpus, LddtOutcome, Validity};
use tensaheyt::morphism::{AlgebraMorphism, SpaceMorphism};
use tensaheyt::poset::FinitePoset;
use tensaheyt::space::TenseHSpace;
use tensaheyt::tense::{check_axioms, check_derived_laws, TenseHAlgebra, TenseOp};
use tensaheyt::text::serialize_algebra;
use tensaheyt::tfilter::{enumerate_tense_filters, generated_tense_filter, is_simple,
                         is_tense_filter};

const CAP: usize = DEFAULT_MAX_ELEMENTS;

fn conclude(n: usize, slug: &str, outcome: Result<(), String>) {
    match &outcome {
        Ok(()) => println!("ACCEPTANCE {n} PASS {slug}"),
        Err(why) => println!("ACCEPTANCE {n} FAIL {slug}: {why}"),
    }
    if let Err(why) = outcome {
        panic!("criterion {n} ({slug}): {why}");
    }
}

fn ensure(cond: bool, why: String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(why) }
}

fn bin() -> Command {
    Command::cargo_bin("tensaheyt").unwrap()
}

/// Directory with ej2.alg produced by the binary itself.
fn workdir() -> TempDir {
    let dir = TempDir::new().unwrap();
    bin()
        .current_dir(dir.path())
        .args(["gen-example", "ej2", "-o", "ej2.alg"])
        .assert()
        .success();
    dir
}

/// All element subsets of size at most two, as id lists.
fn small_subsets(n: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() <= 2)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Subsets closed under the definitional tense-filter conditions, as
/// bitmasks: contain the top, upward closed, closed under meets, and
/// closed under implication transport for each operator.
fn definitional_tense_sets(a: &TenseHAlgebra) -> Vec<u64> {
    let n = a.n();
    let h = &a.alg;
    (0u64..1 << n)
        .filter(|&s| {
            let has = |x: usize| s >> x & 1 == 1;
            has(h.top())
                && (0..n).all(|x| !has(x) || (0..n).all(|y| !h.leq(x, y) || has(y)))
                && (0..n).all(|x| !has(x) || (0..n).all(|y| !has(y) || has(h.meet(x, y))))
                && (0..n).all(|x| {
                    (0..n).all(|y| {
                        !has(h.imp(x, y))
                            || TenseOp::ALL
                                .iter()
                                .all(|&u| has(h.imp(a.op(u, y), a.op(u, x))))
                    })
                })
        })
        .collect()
}

#[test]
fn criterion_01_example_fidelity() {
    conclude(1, "example-fidelity", (|| {
        let a = ej2();
        let tables: [(TenseOp, [usize; 6]); 4] = [
            (TenseOp::G, [4, 4, 4, 2, 4, 0]),
            (TenseOp::H, [5, 5, 3, 3, 0, 0]),
            (TenseOp::F, [5, 1, 3, 1, 1, 1]),
            (TenseOp::P, [5, 5, 2, 2, 0, 0]),
        ];
        for (u, expect) in tables {
            for x in 0..6 {
                ensure(
                    a.op(u, x) == expect[x],
                    format!("{}({}) is {}", u.symbol(), a.name(x), a.name(a.op(u, x))),
                )?;
            }
        }
        let frozen = "elements: 0 a b c d 1\nleq: 0<a 0<b a<c b<c b<d c<1 d<1\n\
                      op g: 0->d a->d b->d c->b d->d 1->0\n\
                      op h: 0->1 a->1 b->c c->c d->0 1->0\n\
                      op f: 0->1 a->a b->c c->a d->a 1->a\n\
                      op p: 0->1 a->1 b->b c->b d->0 1->0\n";
        ensure(serialize_algebra(&a) == frozen, "serialization drifted".into())?;
        let ax = check_axioms(&a);
        ensure(ax.passed(), format!("T1..T8: {}", ax.render()))?;
        let derived = check_derived_laws(&a);
        ensure(derived.passed(), format!("T9..T14: {}", derived.render()))
    })());
}

#[test]
fn criterion_02_remark_reproduction() {
    conclude(2, "remark-reproduction", (|| {
        let a = ej2();
        let h = &a.alg;
        let b = 2;
        let facts = [
            (h.neg(a.g(h.neg(b))), 1, "~g~b"),
            (a.f(b), 3, "f b"),
            (h.neg(a.h(h.neg(b))), 0, "~h~b"),
            (a.p(b), 2, "p b"),
        ];
        for (got, want, label) in facts {
            ensure(got == want, format!("{label} is {}, not {}", a.name(got), a.name(want)))?;
        }
        let dir = workdir();
        for iff in [
            "(f x1 -> ~ g ~ x1) & (~ g ~ x1 -> f x1)",
            "(p x1 -> ~ h ~ x1) & (~ h ~ x1 -> p x1)",
        ] {
            let assert = bin()
                .current_dir(dir.path())
                .args(["valid", "ej2.alg", iff])
                .assert()
                .code(1);
            let out = String::from_utf8_lossy(&assert.get_output().stdout).into_owned();
            ensure(out == "VALID FAIL x1=b\n", format!("{iff:?} gave {out:?}"))?;
        }
        Ok(())
    })());
}

#[test]
fn criterion_03_box_operators_collapse() {
    conclude(3, "box-operator-collapse", (|| {
        for entry in standard_corpus() {
            let a = &entry.algebra;
            let h = &a.alg;
            let gs = box_op(a, TenseOp::G);
            let hs = box_op(a, TenseOp::H);
            let bn = box_n(a);
            for x in 0..a.n() {
                ensure(
                    gs[x] as usize == h.neg(a.g(x)),
                    format!("{}: [g]({}) is not ~g", entry.name, a.name(x)),
                )?;
                ensure(
                    hs[x] as usize == h.neg(a.h(x)),
                    format!("{}: [h]({}) is not ~h", entry.name, a.name(x)),
                )?;
                let closed = h.meet(h.neg(a.g(x)), h.neg(a.h(x)));
                ensure(
                    bn.at(x) == closed,
                    format!("{}: [N]({}) left the closed form", entry.name, a.name(x)),
                )?;
            }
            ensure(
                bn.route_disagreement().is_none(),
                format!("{}: meet route and closed form split", entry.name),
            )?;
        }
        Ok(())
    })());
}

#[test]
fn criterion_04_filter_characterizations() {
    conclude(4, "filter-characterizations", (|| {
        for entry in standard_corpus() {
            let a = &entry.algebra;
            let oracle = if a.n() <= 6 { Some(definitional_tense_sets(a)) } else { None };
            for f in enumerate_filters(a.alg.lattice()) {
                let verdict = is_tense_filter(a, &f)
                    .map_err(|e| format!("{}: routes split: {e:?}", entry.name))?;
                if let Some(sets) = &oracle {
                    let mask = f.members.iter().fold(0u64, |m, x| m | 1 << x);
                    ensure(
                        verdict.is_tense == sets.contains(&mask),
                        format!("{}: verdict on up({}) disagrees with the definitional scan",
                                entry.name, a.name(f.generator)),
                    )?;
                }
            }
        }
        let a = ej2();
        ensure(enumerate_filters(a.alg.lattice()).len() == 6, "ej2 must have 6 filters".into())?;
        let tense = enumerate_tense_filters(&a).map_err(|e| format!("{e:?}"))?;
        ensure(tense.len() == 2, format!("ej2 has {} tense filters", tense.len()))?;
        ensure(definitional_tense_sets(&a).len() == 2, "oracle count differs".into())
    })());
}

#[test]
fn criterion_05_generated_filter_oracle() {
    conclude(5, "generated-filter-oracle", (|| {
        for entry in standard_corpus().iter().filter(|e| e.algebra.n() <= 6) {
            let a = &entry.algebra;
            let n = a.n();
            let sets = definitional_tense_sets(a);
            for xs in 0u64..1 << n {
                let meet_of_containing: u64 = sets
                    .iter()
                    .filter(|&&s| s & xs == xs)
                    .fold((1 << n) - 1, |acc, &s| acc & s);
                let set = ElemSet::from_indices(n, (0..n).filter(|i| xs >> i & 1 == 1));
                let generated = generated_tense_filter(a, &set);
                let mask = generated.members.iter().fold(0u64, |m, x| m | 1 << x);
                ensure(
                    mask == meet_of_containing,
                    format!("{}: subset {xs:#b} generated {mask:#b}, oracle {meet_of_containing:#b}",
                            entry.name),
                )?;
            }
        }
        Ok(())
    })());
}

/// Restricted-growth enumeration of set partitions, filtered to the
/// ones every operation respects.
fn compatible_partition_count(a: &TenseHAlgebra) -> usize {
    let n = a.n();
    let h = &a.alg;
    let mut count = 0;
    let mut rgs = vec![0usize; n];
    loop {
        let same = |x: usize, y: usize| rgs[x] == rgs[y];
        let binary_ok = |op: &dyn Fn(usize, usize) -> usize| {
            (0..n).all(|x1| (0..n).all(|x2| {
                !same(x1, x2)
                    || (0..n).all(|y| same(op(x1, y), op(x2, y)) && same(op(y, x1), op(y, x2)))
            }))
        };
        let unary_ok = TenseOp::ALL.iter().all(|&u| {
            (0..n).all(|x1| (0..n).all(|x2| !same(x1, x2) || same(a.op(u, x1), a.op(u, x2))))
        });
        if unary_ok
            && binary_ok(&|x, y| h.meet(x, y))
            && binary_ok(&|x, y| h.join(x, y))
            && binary_ok(&|x, y| h.imp(x, y))
        {
            count += 1;
        }
        // next restricted growth string: digit i may rise to max(prefix)+1
        let mut i = n - 1;
        loop {
            if i == 0 {
                return count;
            }
            let ceil = rgs[..i].iter().max().unwrap() + 1;
            if rgs[i] < ceil {
                rgs[i] += 1;
                rgs[i + 1..].fill(0);
                break;
            }
            i -= 1;
        }
    }
}

#[test]
fn criterion_06_filter_congruence_isomorphism() {
    conclude(6, "filter-congruence-isomorphism", (|| {
        for entry in standard_corpus() {
            let a = &entry.algebra;
            let pairs = congruence_lattice(a).map_err(|e| format!("{}: {e:?}", entry.name))?;
            let filters = enumerate_tense_filters(a).map_err(|e| format!("{e:?}"))?;
            ensure(
                pairs.len() == filters.len(),
                format!("{}: {} pairs vs {} tense filters", entry.name, pairs.len(), filters.len()),
            )?;
            if a.n() <= 6 {
                let oracle = compatible_partition_count(a);
                ensure(
                    oracle == pairs.len(),
                    format!("{}: partition oracle found {oracle} congruences, lattice {}",
                            entry.name, pairs.len()),
                )?;
            }
        }
        let a = ej2();
        let pairs = congruence_lattice(&a).map_err(|e| format!("{e:?}"))?;
        ensure(pairs.len() == 2, format!("ej2 has {} congruences", pairs.len()))?;
        ensure(is_simple(&a).simple, "ej2 must be simple".into())
    })());
}

#[test]
fn criterion_07_duality_round_trips() {
    conclude(7, "duality-round-trips", (|| {
        for entry in standard_corpus() {
            let a = &entry.algebra;
            let iso = sigma(a, CAP).map_err(|e| format!("{}: sigma: {e}", entry.name))?;
            ensure(
                iso.double.n() == a.n() && iso.map.is_bijective(a.n()),
                format!("{}: sigma is not a bijection", entry.name),
            )?;
            let d = dual_space(a);
            let eps = epsilon(&d.space, CAP).map_err(|e| format!("{}: epsilon: {e}", entry.name))?;
            let image: BTreeSet<usize> = eps.map.map.iter().map(|&v| v as usize).collect();
            ensure(
                eps.double.space.n() == d.space.n() && image.len() == d.space.n(),
                format!("{}: epsilon is not a bijection", entry.name),
            )?;
        }
        let dd = dual_algebra(&dual_space(&ej2()).space, CAP).map_err(|e| format!("{e}"))?;
        ensure(dd.n() == 6, format!("double dual of ej2 has {} elements", dd.n()))
    })());
}

#[test]
fn criterion_08_relation_lemmas_and_morphisms() {
    conclude(8, "relation-lemmas-and-morphisms", (|| {
        for entry in standard_corpus() {
            let a = &entry.algebra;
            for report in [
                check_relation_definitions(a),
                check_relation_characterization(a),
                check_relation_compositions(a),
            ] {
                ensure(report.passed(), format!("{}: {}", entry.name, report.render()))?;
            }
            let d = dual_space(a);
            let sep = check_separation(&d.space);
            ensure(sep.passed(), format!("{}: {}", entry.name, sep.render()))?;

            let id = SpaceMorphism::identity(d.space.n());
            let eq = check_morphism_equivalence(&d.space, &d.space, &id);
            ensure(
                eq.pointwise.passed() && eq.setwise.passed() && eq.verdicts_agree(),
                format!("{}: identity split m from M", entry.name),
            )?;
            let eps = epsilon(&d.space, CAP).map_err(|e| format!("{e}"))?;
            let eq = check_morphism_equivalence(&d.space, &eps.double.space, &eps.map);
            ensure(
                eq.pointwise.passed() && eq.setwise.passed() && eq.verdicts_agree(),
                format!("{}: epsilon split m from M", entry.name),
            )?;
        }

        let factor = two_chain_extreme();
        let square = product(&factor, &factor);
        let proj = AlgebraMorphism {
            map: (0..square.n()).map(|i| (i / factor.n()) as u32).collect(),
        };
        let dm = dual_morphism(&square, &factor, &proj).map_err(|e| format!("{e:?}"))?;
        let eq = check_morphism_equivalence(&dm.source.space, &dm.target.space, &dm.map);
        ensure(
            eq.pointwise.passed() && eq.setwise.passed() && eq.verdicts_agree(),
            "projection dual split m from M".into(),
        )?;

        let two = |names: [&str; 2]| {
            FinitePoset::from_pairs(names.map(String::from).to_vec(), &[]).unwrap()
        };
        let x1 = TenseHSpace::new(two(["u", "v"]), &[]);
        let x2 = TenseHSpace::new(two(["u", "v"]), &[(0, 0)]);
        let swap = SpaceMorphism { map: vec![1, 0] };
        let eq = check_morphism_equivalence(&x1, &x2, &swap);
        ensure(
            !eq.pointwise.passed() && !eq.setwise.passed() && eq.verdicts_agree(),
            "broken swap must fail both presentations".into(),
        )
    })());
}

#[test]
fn criterion_09_ign_soundness() {
    conclude(9, "ign-soundness", (|| {
        for entry in standard_corpus() {
            let a = &entry.algebra;
            for (id, f) in ign_axioms().iter().chain(ipl_axioms().iter()) {
                match is_valid_capped(f, a, 1_000_000).map_err(|e| format!("{id}: {e}"))? {
                    Validity::Valid => {}
                    Validity::Invalid { assignment } => {
                        return Err(format!("{}: axiom {id} fails at {assignment:?}", entry.name));
                    }
                }
            }
            let rules = check_rules_soundness(a);
            ensure(rules.passed(), format!("{}: {}", entry.name, rules.render()))?;
        }
        Ok(())
    })());
}

#[test]
fn criterion_10_lddt_equivalence() {
    conclude(10, "lddt-equivalence", (|| {
        let factor = two_chain_extreme();
        let cases = [("ej2", ej2()), ("product-2x2", product(&factor, &factor))];
        for (name, a) in &cases {
            let n = a.n();
            let subsets = small_subsets(n);
            for gamma in &subsets {
                let mut gset = ElemSet::empty(n);
                for &x in gamma {
                    gset.insert(x);
                }
                let gamma_filter = generated_tense_filter(a, &gset);
                let bn = box_n(a);
                for delta in &subsets {
                    for psi in 0..n {
                        // the call itself hard-asserts lhs == rhs
                        match lddt_check(a, gamma, delta, psi) {
                            LddtOutcome::DegenerateEmptyDelta { .. } => {
                                ensure(delta.is_empty(), format!("{name}: spurious degenerate"))?;
                            }
                            LddtOutcome::Equivalent { lhs, witness } => {
                                ensure(!delta.is_empty(), format!("{name}: missed degenerate"))?;
                                ensure(lhs == witness.is_some(), format!("{name}: sides split"))?;
                                if let Some(w) = witness {
                                    let sub: BTreeSet<usize> = w.subset.iter().copied().collect();
                                    let del: BTreeSet<usize> = delta.iter().copied().collect();
                                    ensure(
                                        !sub.is_empty() && sub.is_subset(&del) && w.k <= n,
                                        format!("{name}: malformed witness {w:?}"),
                                    )?;
                                    let m = a.alg.meet_all(w.subset.iter().copied());
                                    let guarded = bn.cumulative(a, m, w.k);
                                    ensure(
                                        gamma_filter.contains(a.alg.imp(guarded, psi)),
                                        format!("{name}: witness does not certify {gamma:?} {delta:?} {psi}"),
                                    )?;
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_11_cli_determinism() {
    conclude(11, "cli-determinism", (|| {
        let dir = workdir();
        let runs: [(&[&str], &str, i32); 4] = [
            (&["check", "ej2.alg"], include_str!("golden/check.txt"), 0),
            (&["filters", "ej2.alg", "--tense"], include_str!("golden/filters_tense.txt"), 0),
            (&["roundtrip", "ej2.alg"], include_str!("golden/roundtrip.txt"), 0),
            (&["valid", "ej2.alg", "f x1 -> ~ g ~ x1"], include_str!("golden/valid.txt"), 1),
        ];
        for (args, golden, code) in runs {
            let mut outputs = Vec::new();
            for _ in 0..2 {
                let assert = bin().current_dir(dir.path()).args(args).assert().code(code);
                outputs.push(assert.get_output().stdout.clone());
            }
            ensure(
                outputs[0] == outputs[1],
                format!("{args:?}: two runs differ"),
            )?;
            ensure(
                outputs[0] == golden.as_bytes(),
                format!("{args:?}: drifted from the golden file: {:?}",
                        String::from_utf8_lossy(&outputs[0])),
            )?;
        }
        Ok(())
    })());
}
