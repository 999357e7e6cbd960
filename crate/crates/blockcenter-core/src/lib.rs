//! Exact-arithmetic kernels for reconstructing and validating the invariants
//! of a 2-block of defect 16 with elementary abelian defect group.
//!
//! Everything in this crate is computed over `Z`, `Q` or a prime field; there
//! is no floating point anywhere.  The crate is `no_std` (with `alloc`) so the
//! algorithms can be reused from embedded or wasm hosts; all IO lives in the
//! companion CLI crate.
//!
//! Module map:
//!
//! * [`matrix`] — dense `BigInt` / `BigRational` matrices.
//! * [`snf`] — Smith normal form, elementary divisors, saturated integer
//!   kernels.
//! * [`plesken`] — enumeration of Gram decompositions `XᵀX = C` up to signed
//!   row permutations and automorphisms of `C`.
//! * [`gendec`] — subsection data, contribution matrices and the block-level
//!   consistency checks (orthogonality, `Σ Mᵘ = 1`, star congruences).
//! * [`center`] — the center lattice `D ∩ Q⁻¹ O^{k×k} Q`, its mod-`p`
//!   reduction and presentation matching.
//! * [`gfp`] — small prime field linear algebra (row spaces, kernels).
//! * [`fdalgebra`] — structure-constant algebras: radical & Loewy series,
//!   socles, commutator spaces, Külshammer spaces, symmetrizing forms.
//! * [`resolution`] — minimal projective resolutions over local algebras and
//!   the Fibonacci growth certificate.
//! * [`rng`] — a tiny deterministic generator for the sampling fallbacks.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod center;
pub mod fdalgebra;
pub mod gendec;
pub mod gf2;
pub mod gfp;
pub mod matrix;
pub mod plesken;
pub mod resolution;
pub mod rng;
pub mod snf;

pub use center::{
    center_equations, lattices_equal, match_presentation, verify_isomorphism, CenterError,
    CenterLattice, ModularCenter, Presentation, PresentationMatch,
};
pub use fdalgebra::{AlgebraError, FinDimAlgebra, LinearForm, Side};
pub use gendec::{
    assemble, check_block, contribution, simultaneous_permutation, transform_basic_set,
    BlockDatum, BlockReport, CheckResult, ContributionMatrix, GendecError, SubsectionDatum,
};
pub use resolution::{
    fibonacci_certificate, fibonacci_numbers, hypothesis_check, minimal_resolution_dims,
    verify_growth_hypothesis, HypothesisVerdict, HypothesisWitness, ModuleOverLocal,
    ResolutionError, ResolutionTrace,
};
pub use gfp::{GfpMat, Subspace};
pub use matrix::{IntMatrix, LinalgError, RatMatrix};
pub use plesken::{
    canonical_form, enumerate_ordinary_16x3, enumerate_rows, enumerate_solutions,
    gram_automorphisms, GramAutGroup, GramSolutionClass, PleskenError, RowCandidate,
};
pub use snf::{elementary_divisors, integer_kernel_basis, smith_normal_form, SmithNormalForm};
