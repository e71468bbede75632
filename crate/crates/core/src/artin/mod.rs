//! Coxeter graphs, Artin-group normal forms and Deligne complexes.

pub mod coxeter;
pub mod deligne;
pub mod normal_form;

pub use coxeter::CoxeterGraph;
pub use deligne::{deligne_ball, BuiltinOracle, DeligneBall};
pub use normal_form::{Letter, NormalFormOracle, TraceOracle};
