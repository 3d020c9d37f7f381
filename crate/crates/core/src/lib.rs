//! Exact symbolic kernel for the Onsager Lie algebra and its alternating
//! central extension.
//!
//! The two algebras are realized concretely inside the loop algebra of gl2
//! as 2x2 Laurent-polynomial matrices, so every structural claim about them
//! (bracket tables, bases, the center, direct-sum decompositions, the
//! presentations, and the q -> 1 degeneration of their q-counterparts)
//! becomes an executable, exact-arithmetic check. There is no floating
//! point anywhere: scalars are Gaussian rationals, coefficients of the
//! q-engine are exact rational functions, and every verification is a
//! zero-equality test.
//!
//! Layer map:
//! - [`gaussian`], [`unipoly`], [`ratfunc`], [`laurent`]: the exact
//!   arithmetic kernel;
//! - [`loop_algebra`]: matrices, the bracket, the symmetry maps and the
//!   named element families;
//! - [`window`], [`structure`]: windowed exact linear algebra, the center
//!   solver and the closure-spanning oracle;
//! - [`qlimit`], [`ncpoly`]: the free algebra over rational functions and
//!   the q -> 1 limit engine;
//! - [`dsl`]: the `.lrel` relation language and its evaluator;
//! - [`text`], [`report`]: parsing/rendering and JSON check reports.

pub mod dsl;
pub mod gaussian;
pub mod laurent;
pub mod loop_algebra;
pub mod ncpoly;
pub mod qlimit;
pub mod ratfunc;
pub mod report;
pub mod structure;
pub mod text;
pub mod unipoly;
pub mod window;

pub use gaussian::GaussianRational;
pub use laurent::LaurentPoly;
pub use loop_algebra::{bracket, fam, family, FamilyName, FamilyTag, LoopElement, Space};
pub use ncpoly::{comm, NcPoly, QSymbol};
pub use qlimit::{
    ace_relation, ace_relation_legs, pbw, pbw_limit_identity, q_dolan_grady, qcomm, qcomm_by,
    relation_weight, rescale_limit, validate_on_matrices, PbwRoot, QLimitError, RelationSide,
};
pub use ratfunc::RatFunc;
pub use structure::{
    center_solver, closure_span, decompose, iota, project_rho, CenterSpace, Decomposition,
    OnsagerCoords, StructureError,
};
pub use unipoly::UniPoly;
pub use window::{coords, span_rank, CoordVector, CoordError, Window};
