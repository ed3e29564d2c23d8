//! Noncommutative algebra kernel: PBW monomials, normal ordering, series.

pub mod engine;
pub mod expr;
pub mod linear;
pub mod render;
pub mod series;
pub mod uea;

pub use engine::{Algebra, Presentation};
pub use linear::{Basis, Element, LinComb, Mono, Tensor};
pub use uea::Generator;
