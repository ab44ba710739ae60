//! Exact Hosoya and Merrifield-Simmons indices of random hexagonal cactus
//! chains.
//!
//! A chain `R_n` is built from `n` hexagons; each hexagon after the second is
//! glued to its predecessor at a vertex at cyclic distance 1, 2 or 3 (ortho,
//! meta, para) from the predecessor's own cut vertex. In the random model the
//! three attachments are chosen independently with probabilities `a`, `b`,
//! `c`.
//!
//! The crate provides:
//!
//! * [`graph`]: explicit construction of chains and the pendant-path auxiliary
//!   graphs, plus DOT export.
//! * [`count`]: three independent engines for the number of matchings and the
//!   number of independent sets.
//! * [`expectation`]: exact rational expected values via the coupled
//!   recurrences, the closed-form generating functions and full enumeration.
//! * [`asymptotics`]: dominant-pole growth laws in high precision.
//! * [`random_model`]: seeded Monte Carlo sampling of the model.
//! * [`cli`]: the `hexcactus` command-line front end.

pub mod asymptotics;
pub mod cli;
pub mod count;
pub mod error;
pub mod expectation;
pub mod graph;
pub mod random_model;
pub mod verify;

pub use error::{Error, Result};
pub use count::{count, count_brute, count_chain, count_recursive, BigCount, Engine, IndexKind};
pub use expectation::{
    expect_by_enumeration, expect_states, gf_closed_form, series_expand, special_case_gf,
    ExactRational, ExpectationState, ProbabilityTriple, RationalGF,
};
pub use graph::{
    build_aux, build_chain, reverse_sequence, to_dot, AttachmentSequence, AttachmentType,
    AuxVariant, CactusGraph,
};
