//! Singular loci of Schubert varieties in the type A flag variety.
//!
//! The engine works purely combinatorially on permutations: it enumerates the
//! two families of point configurations in the graph of `w` that parametrize
//! the irreducible components of the singular locus of `X_w`, attaches to each
//! component its generic singularity type, Kazhdan–Lusztig polynomial and
//! multiplicity, and builds the quasi-resolutions used to prove completeness.
//! A brute-force tangent-space oracle provides independent ground truth.

pub mod cograssmann;
pub mod config;
pub mod error;
pub mod lambda_max;
pub mod oracle;
pub mod perm;
pub mod plane;
pub mod quasi_res;
pub mod sing_locus;

pub use error::{Error, Result};
pub use perm::{GraphPoint, Permutation};
