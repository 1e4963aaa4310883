//! O(n) solver for backward pentadiagonal linear systems `A X = Y`.
//!
//! The system is turned into an ordinary pentadiagonal one by reversing its
//! rows, factored as `L U` with three vectors of recurrences, and solved by
//! a forward sweep and a back substitution. Every routine is generic over
//! the [`Scalar`] field contract, so the same code runs in floating point,
//! in exact rationals, and over rational functions of a placeholder symbol
//! used to step around zero pivots.
//!
//! ```
//! use backpenta::{fixtures, solve, solve_symbolic, SolveError};
//!
//! let report = solve(&fixtures::five_by_five()).unwrap();
//! assert_eq!(report.det.to_string(), "160");
//!
//! // d_n = 0 stops the plain recurrences at the first pivot...
//! assert_eq!(solve(&fixtures::five_by_five_zero_lead()), Err(SolveError::ZeroPivot(1)));
//! // ...but the symbolic solve steps around it.
//! let report = solve_symbolic(&fixtures::five_by_five_zero_lead()).unwrap();
//! assert_eq!(report.det.to_string(), "88");
//! ```

pub mod banded;
pub mod fixtures;
pub mod oracle;
pub mod rational_fn;
pub mod scalar;
pub mod solver;
pub mod system_file;

pub use num_rational::BigRational;

pub use banded::{BackwardPentaSystem, Band, PentaSystem, SystemError};
pub use rational_fn::{poly_gcd, Polynomial, RationalFnError, RationalFunction};
pub use scalar::{Mode, Scalar};
pub use solver::{
    back_substitute, factor, factor_with_tolerance, forward_sweep, solve, solve_symbolic,
    solve_symbolic_unevaluated, solve_traced, solve_with_tolerance, LUFactors, SolveError,
    SolveReport, SymbolicSolution, Trace,
};

pub type FloatSystem = BackwardPentaSystem<f64>;
pub type ExactSystem = BackwardPentaSystem<BigRational>;
pub type SymbolicSystem = BackwardPentaSystem<RationalFunction>;
pub type FloatFactors = LUFactors<f64>;
pub type ExactFactors = LUFactors<BigRational>;
pub type SymbolicFactors = LUFactors<RationalFunction>;
