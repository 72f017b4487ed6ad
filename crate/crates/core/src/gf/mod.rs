//! Finite-field arithmetic over GF(2) and GF(4).

mod gf4;
mod hadamard;
mod matrix;

pub use gf4::{symplectic_inner_product, symplectic_to_gf4, trace_inner_product, Gf4};
pub use hadamard::{hadamard_transform, wht, wht2, wht4};
pub use matrix::{
    binary_rank, circulant, circulant_from_support, pack_bits, row_space_contains, shifted_identity,
    BinaryMatrix, BitMatrix, Gf4Matrix, RowSpace,
};
