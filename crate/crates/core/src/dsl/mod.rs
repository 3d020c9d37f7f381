//! A small textual language for declaring indexed generator families and
//! bracket relations, plus an evaluator that instantiates the relations over
//! parameter ranges against the concrete matrix families.
//!
//! Suite files use the `.lrel` extension, UTF-8, with `#` comments.

pub mod ast;
pub mod eval;
pub mod parser;

pub use ast::{render_suite, AffineIndex, ExprTree, FamilyDecl, IndexDomain, Param, RelationDecl, SuiteAst};
pub use eval::{
    eval_instance, instantiate_and_check, Bindings, InstanceReport, InstanceStatus, SuiteError,
    SuiteReport,
};
pub use parser::{parse, ParseError};
