//! Exact computation of critical (sandpile) groups of finite multigraphs.
//!
//! The general route takes the Smith normal form of the graph Laplacian over
//! the integers. For the family `K_m x C_n` the [`knc`] module provides closed
//! forms built from the integer sequences `u_p`, `v_p`, `tau_p`, which the test
//! suites cross-check against the general route.

pub mod critical_group;
pub mod error;
pub mod knc;
pub mod multigraph;
pub mod zmatrix;

pub use critical_group::{
    canonicalize, critical_group, group_order, groups_isomorphic, spanning_tree_count,
    AbelianGroup,
};
pub use error::{Error, Result};
pub use knc::{
    critical_group_closed, relation_matrix_a, sequence_point, tree_number_closed,
    verify_block_reduction, ClosedFormCase, ClosedFormResult, Parity, SequencePoint,
};
pub use multigraph::{Multigraph, VertexLabel};
pub use zmatrix::{
    block_diagonal, determinant, equivalent, is_unimodular, minors_gcd, smith_normal_form,
    IntMatrix, SmithDecomposition,
};
