//! Exact scalars, vectors, linear maps and structure-constant tensors.
//!
//! Every axiom check in the crate reduces to the contractions defined here.
//! Nothing in this module rounds: equality is exact equality of rationals.

mod linear;
mod rational;
mod tensor;

pub use linear::{compose, cyclic_map, swap_map, tensor_product, LinearMap, Vector};
pub use rational::Rational;
pub use tensor::{apply_bilinear, apply_coaction, ActionTensor, CoactionTensor, ComulTensor, MulTensor, Side};
