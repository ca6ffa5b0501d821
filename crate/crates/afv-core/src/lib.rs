//! Abstract argumentation frameworks at desk scale.
//!
//! The crate models finite attack graphs and provides, on top of them:
//!
//! - exact extension enumeration for thirteen semantics (conflict-free,
//!   naive, stable, admissible, preferred, complete, grounded, semi-stable,
//!   stage, ideal, eager, strongly admissible, and the stable-stage
//!   intermediate "stagle");
//! - the five syntactic kernels deciding strong (expansion) equivalence,
//!   plus a bounded brute-force oracle that cross-checks them;
//! - neighborhood functions, their informativeness lattice, verification
//!   classes, and criteria recomputing each semantics from its class;
//! - exhaustive small-instance searches: rationality checks, verifiability
//!   counterexamples, minimal classes, and kernel/oracle agreement.
//!
//! Everything is pure and allocation-only (`no_std` + `alloc`); frameworks
//! are immutable after construction and safe to share across threads.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod af;
pub mod equivalence;
pub mod error;
pub mod kernels;
pub mod semantics;
pub mod set;
pub mod verification;

pub use af::{build_af, union_af, Af, ArgumentTable, ArgumentationFramework};
pub use error::Error;
pub use kernels::{apply_kernel, kernel_for, kernels_equal, KernelKind};
pub use semantics::{
    check_rational, extensions, grounded_fixpoint, is_strongly_admissible_recursive,
    strongly_admissible_sets, SemanticsKind,
};
pub use set::{ArgSet, ExtensionSet};
pub use verification::{
    canonicalization_confluent, canonicalize, cover_edges, eval_basic, exact_class_for,
    find_verifiability_counterexample, gamma, informativeness_oracle,
    lattice_agrees_with_oracle, minimal_classes, verification_class, BasicFn, ClassTuple,
    NeighborhoodFn, VerificationClass,
};
pub use equivalence::{
    check_intermediate_theorem, check_kernel_soundness, enumerate_afs,
    expansion_equivalent, expansion_equivalent_bounded, find_expansion_counterexample,
    standard_arg_names, standard_equivalent, EquivalenceVerdict, IntermediateReport,
    IntermediateViolation,
};
