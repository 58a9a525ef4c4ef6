//! Finite-model toolkit for Heyting algebras carrying the four negative
//! tense operators g, h, f, p.
//!
//! Everything here is exhaustive and finite: posets and lattices are dense
//! tables, operator laws are checked by full scans, and the dual-space
//! constructions enumerate prime filters and upsets outright. The crate is
//! organised bottom-up:
//!
//! * [`poset`], [`lattice`], [`heyting`] build the order-theoretic base,
//! * [`tense`] adds the operator layer and its law checkers,
//! * [`boxn`], [`tfilter`], [`congruence`] cover the interior operator
//!   `[N]`, tense filters, and the filter/congruence correspondence,
//! * [`space`], [`duality`], [`morphism`] implement the relational
//!   semantics and the finite duality,
//! * [`formula`], [`logic`] give the propositional front end,
//! * [`builders`], [`text`] construct and (de)serialize concrete instances.
//!
//! All scans that report a counterexample walk elements in id order, so
//! witnesses are deterministic and the lexicographically least one wins.

pub mod bitset;
pub mod boxn;
pub mod builders;
pub mod congruence;
pub mod duality;
pub mod filter;
pub mod formula;
pub mod heyting;
pub mod lattice;
pub mod logic;
pub mod morphism;
pub mod poset;
pub mod report;
pub mod space;
pub mod tense;
pub mod text;
pub mod tfilter;

pub use bitset::ElemSet;
pub use boxn::{box_n, box_op, BoxN};
pub use builders::{chain, ej2, extreme, frame_algebra, product, two_chain_extreme, BuildError,
                   DEFAULT_MAX_ELEMENTS};
pub use congruence::{congruence_from_filter, congruence_lattice, filter_from_congruence,
                     quotient, validate_congruence, Congruence, CongruenceError};
pub use duality::{check_morphism_equivalence, check_relation_characterization,
                  check_relation_compositions, check_relation_definitions, check_separation,
                  dual_algebra, dual_morphism, dual_space, epsilon, separation_witness, sigma,
                  DualMorphism, DualSpace, DualityError, EpsilonIso, MorphismEquivalence,
                  SeparationWitness, SigmaIso};
pub use filter::{enumerate_filters, enumerate_prime_filters, filter_ideal_separation, Filter,
                 Ideal, SeparationError};
pub use formula::{Formula, ParseError};
pub use heyting::{heyting_implication, HeytingAlgebra, HeytingError};
pub use lattice::{build_lattice, FiniteLattice, LatticeError, OpTable};
pub use logic::{check_rules_soundness, countermodel_search, eval, frame_family, ign_axioms,
                ipl_axioms, is_valid, is_valid_capped, lddt_check, standard_corpus, Assignment,
                CorpusEntry, EvalError, LddtOutcome, LddtWitness, Validity, DEFAULT_EVAL_CAP};
pub use morphism::{check_heyting_homomorphism, check_space_heyting_morphism,
                   check_tense_homomorphism, AlgebraMorphism, SpaceMorphism};
pub use poset::{FinitePoset, PosetError};
pub use report::{AxiomReport, CheckReport, Clause};
pub use space::TenseHSpace;
pub use tense::{TenseHAlgebra, TenseOp};
pub use text::{parse_algebra, parse_assignment, parse_map, parse_space, resolve_elements,
               serialize_algebra, serialize_space, AlgebraDoc, SpaceDoc, StructureError,
               TextError};
pub use tfilter::{enumerate_tense_filters, generated_tense_filter, is_simple,
                  is_subdirectly_irreducible, is_tense_filter, SiVerdict, SimplicityVerdict,
                  TenseFilterRoute, TenseFilterVerdict};
