//! Exact arithmetic for quiver generating series of twist and double twist
//! knots.
//!
//! The crate walks one pipeline end to end:
//!
//! 1. start from a seed quiver with an auxiliary node ([`tower`]),
//! 2. grow it by repeated unlinking into the family member for a chosen
//!    parameter p,
//! 3. drop the auxiliary node, double to the unreduced quiver, frame it
//!    ([`quiver`]),
//! 4. expand the motivic generating series under a one-variable
//!    specialization and take the ratio of consecutive partition levels
//!    ([`series`]),
//! 5. read off the integer sequence at a = 0, q = 1.
//!
//! The [`lattice`] module supplies the two independent cross-checks:
//! Raney closed forms and a lattice-path counter under a rational slope
//! constraint. Coefficient arithmetic lives in [`qpoly`], [`qrat`] and
//! [`alaurent`]; all of it is exact, no floats anywhere.

pub mod alaurent;
pub mod error;
pub mod lattice;
pub mod qpoly;
pub mod qrat;
pub mod quiver;
pub mod seed;
pub mod series;
pub mod tower;

pub use alaurent::ALaurent;
pub use error::{Error, Result};
pub use lattice::{
    count_paths, enumerate_paths, family_path_model, family_raney_params, raney, tabulated_framings,
    torus_path_model, PathModel, RaneyParams, Step, Steps, Strictness,
};
pub use qpoly::{gauss_multinomial, poch_q2, QPoly};
pub use qrat::QRat;
pub use quiver::{AugmentedQuiver, GradedQuiver, NodeGrading, SymQuiver, UnreducedQuiver};
pub use seed::{load_seed, parse_seed, serialize_seed, LoadedSeed};
pub use series::{
    check_positivity, compute_sequence, limit_q1_a0, make_substitution, partition_series, ratio_y,
    AMode, Conventions, PositivityReport, QExpConvention, SequenceReport, SubstKind,
    SubstitutionAssignment, TruncatedXSeries,
};
pub use tower::{
    build_tower, builtin_seed_4_1, tower_steps, KnotFamily, KnotFamilySpec, Node0Rule, TargetRule,
    TowerStep,
};
