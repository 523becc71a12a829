//! Search for positive integer solutions of power-sum Diophantine equations
//!
//! ```text
//! x1^p1 + x2^p2 + ... + xn^pn = N
//! ```
//!
//! using a three-layer feed-forward network whose input→hidden weights are
//! the candidate solution. The network output is `Σ w_i^{p_i}`; the sign of
//! the error is propagated back and the weights are updated with integer
//! steps, a single-coordinate correction on overshoot and a momentum kick at
//! the positivity boundary.
//!
//! - [`equation`]: equation and weight types, exact evaluation
//! - [`solver`]: the update rules, attempts and restarts
//! - [`oracle`]: exhaustive enumeration used as ground truth
//! - [`parse`]: the `x1^2 + x2^2 = 149` notation
//! - [`trace`]: per-iteration records, CSV/JSON export
//! - [`suite`]: built-in benchmark equations and multi-seed reports

pub mod equation;
pub mod error;
pub mod oracle;
pub mod parse;
pub mod solver;
pub mod suite;
pub mod trace;

pub use equation::{direction, DiophantineEquation, WeightVector};
pub use error::{Error, Result};
pub use oracle::{enumerate_solutions, integer_root, SolutionSet, DEFAULT_CAP};
pub use parse::{format_equation, parse_equation, ParseError, ParseErrorKind};
pub use solver::{solve, Case, SolveResult, SolveStatus, SolverConfig, SolverState};
pub use suite::{run_suite, suite, BenchCase, BenchReport};
pub use trace::TraceRecord;
