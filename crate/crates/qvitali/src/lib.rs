//! q-deformed arithmetic, q-calculus, and the nonextensive interval measure,
//! together with a verification harness for the deformed Vitali construction.
//!
//! The crate is organized around the deformation parameter `q <= 1`:
//!
//! * [`qalgebra`] — the deformed operations (q-sum, q-difference,
//!   q-product, q-division), the q-exponential/q-logarithm pair, and
//!   deformed numbers. Rational-valued operations are exact.
//! * [`qcalculus`] — the q-derivative and an adaptive-Simpson quadrature
//!   used as an independent oracle for every closed-form measure.
//! * [`qmeasure`] — the measure `mu_q(A) = \int_A dx / (1 + (1-q) x)` over
//!   finite unions of intervals with exact rational endpoints, plus
//!   q-translation, scaling, and the sigma-finiteness partition.
//! * [`vitali`] — the witness algebra of the deformed equivalence relation
//!   `x ~ y  iff  x = y (+)_q r`, the enumeration of the rationals in
//!   [-1, 1], containment/injectivity checks, and the bounds table with
//!   its divergence scan at the q -> 1/2 boundary.
//! * [`qexpr`] — tokenizer, parser, and evaluator for a small q-expression
//!   language (`o+`, `o-`, `o*`, `o/`, `qexp`, `qlog`, `dn`).
//! * [`verify`] — seeded, replayable property suites over all of the above.
//!
//! All rational arithmetic is arbitrary precision; all operations are pure
//! and safe to call concurrently.

pub mod error;
pub mod grid;
pub mod qalgebra;
pub mod qcalculus;
pub mod qexpr;
pub mod qmeasure;
pub mod qparam;
pub mod rational;
pub mod report;
pub mod verify;
pub mod vitali;

pub use error::Error;
pub use qparam::QParam;
pub use rational::Rational;
