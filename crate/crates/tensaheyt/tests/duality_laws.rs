//! Duality sweeps: for every corpus algebra the dual space must satisfy
//! the space axioms and relation lemmas, both canonical maps must be
//! isomorphisms, and the pointwise and set-level morphism conditions
//! must stand or fall together on the sample morphisms.

use tensaheyt::builders::{product, two_chain_extreme, DEFAULT_MAX_ELEMENTS};
use tensaheyt::duality::{check_morphism_equivalence, check_relation_characterization,
                         check_relation_compositions, check_relation_definitions,
                         check_separation, dual_algebra, dual_morphism, dual_space, epsilon,
                         separation_witness, sigma, SeparationWitness};
use tensaheyt::logic::standard_corpus;
use tensaheyt::morphism::{AlgebraMorphism, SpaceMorphism};
use tensaheyt::space::TenseHSpace;

const CAP: usize = DEFAULT_MAX_ELEMENTS;

#[test]
fn dual_spaces_satisfy_the_space_axioms() {
    for entry in standard_corpus() {
        let d = dual_space(&entry.algebra);
        let report = d.space.validate();
        assert!(report.passed(), "{}: {}", entry.name, report.render());
    }
}

#[test]
fn relation_lemmas_hold_on_every_dual_space() {
    for entry in standard_corpus() {
        let a = &entry.algebra;
        for report in [
            check_relation_definitions(a),
            check_relation_characterization(a),
            check_relation_compositions(a),
        ] {
            assert!(report.passed(), "{}: {}", entry.name, report.render());
        }
        let sep = check_separation(&dual_space(a).space);
        assert!(sep.passed(), "{}: {}", entry.name, sep.render());
    }
}

#[test]
fn sigma_is_an_isomorphism_everywhere() {
    for entry in standard_corpus() {
        let iso = sigma(&entry.algebra, CAP)
            .unwrap_or_else(|e| panic!("{}: {e}", entry.name));
        assert_eq!(iso.double.n(), entry.algebra.n(), "{}", entry.name);
    }
}

#[test]
fn epsilon_is_an_isomorphism_on_every_dual_space() {
    for entry in standard_corpus() {
        let d = dual_space(&entry.algebra);
        epsilon(&d.space, CAP).unwrap_or_else(|e| panic!("{}: {e}", entry.name));
    }
}

#[test]
fn separation_finds_a_witness_for_every_strict_nonpair() {
    for entry in standard_corpus() {
        let d = dual_space(&entry.algebra);
        let x = &d.space;
        for a in 0..x.n() {
            for b in 0..x.n() {
                let w = separation_witness(x, a, b);
                assert_eq!(w.is_some(), !x.related(a, b), "{} ({a}, {b})", entry.name);
                if let Some(SeparationWitness::Forward(u) | SeparationWitness::Backward(u)) = w {
                    assert!(x.poset().is_upset(&u), "{} witness not an upset", entry.name);
                }
            }
        }
    }
}

// the four sample morphisms of the equivalence check: identity, the
// epsilon map read as a space morphism, the dual of a product
// projection, and a deliberately broken swap
#[test]
fn pointwise_and_setwise_conditions_agree_on_identity() {
    for entry in standard_corpus() {
        let d = dual_space(&entry.algebra);
        let k = SpaceMorphism::identity(d.space.n());
        let eq = check_morphism_equivalence(&d.space, &d.space, &k);
        assert!(eq.heyting.passed(), "{}", entry.name);
        assert!(eq.pointwise.passed(), "{}: {}", entry.name, eq.pointwise.render());
        assert!(eq.setwise.passed(), "{}: {}", entry.name, eq.setwise.render());
        assert!(eq.verdicts_agree());
    }
}

#[test]
fn pointwise_and_setwise_conditions_agree_on_epsilon() {
    for entry in standard_corpus() {
        let d = dual_space(&entry.algebra);
        let iso = epsilon(&d.space, CAP).unwrap();
        let eq = check_morphism_equivalence(&d.space, &iso.double.space, &iso.map);
        assert!(eq.heyting.passed(), "{}", entry.name);
        assert!(eq.pointwise.passed(), "{}: {}", entry.name, eq.pointwise.render());
        assert!(eq.setwise.passed(), "{}: {}", entry.name, eq.setwise.render());
        assert!(eq.verdicts_agree());
    }
}

#[test]
fn dual_of_a_projection_passes_both_presentations() {
    let factor = two_chain_extreme();
    let square = product(&factor, &factor);
    // first projection of the product, as an algebra homomorphism
    let proj = AlgebraMorphism {
        map: (0..square.n()).map(|i| (i / factor.n()) as u32).collect(),
    };
    let dm = dual_morphism(&square, &factor, &proj).unwrap();
    let eq = check_morphism_equivalence(&dm.source.space, &dm.target.space, &dm.map);
    assert!(eq.heyting.passed(), "{}", eq.heyting.render());
    assert!(eq.pointwise.passed(), "{}", eq.pointwise.render());
    assert!(eq.setwise.passed(), "{}", eq.setwise.render());
    assert!(eq.verdicts_agree());
}

#[test]
fn a_broken_morphism_fails_both_presentations_in_step() {
    use tensaheyt::poset::FinitePoset;
    let two = |names: [&str; 2]| {
        FinitePoset::from_pairs(names.map(String::from).to_vec(), &[]).unwrap()
    };
    let x1 = TenseHSpace::new(two(["u", "v"]), &[]);
    let x2 = TenseHSpace::new(two(["u", "v"]), &[(0, 0)]);
    let k = SpaceMorphism { map: vec![1, 0] };
    let eq = check_morphism_equivalence(&x1, &x2, &k);
    assert!(eq.heyting.passed());
    assert!(!eq.pointwise.passed());
    assert!(!eq.setwise.passed());
    assert!(eq.verdicts_agree(), "the two presentations must fail together");
}

#[test]
fn double_dual_of_the_six_element_algebra_has_six_elements() {
    let a = tensaheyt::builders::ej2();
    let d = dual_space(&a);
    let dd = dual_algebra(&d.space, CAP).unwrap();
    assert_eq!(dd.n(), 6);
}
