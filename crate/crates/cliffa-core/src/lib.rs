//! Exact computer algebra for Clifford algebras of non-degenerate bilinear
//! forms and of antiautomorphisms of degree-2 central simple algebras over ℚ.
//!
//! Everything here is exact: scalars are arbitrary-precision rationals and
//! there is no numeric tolerance anywhere. The crate is `no_std`-compatible
//! (with `alloc`); the companion CLI crate carries IO and file formats.
//!
//! Module map:
//! - [`exactmath`]: rationals, square classes, dense exact linear algebra,
//!   minimal polynomials and invariant factors.
//! - [`tensor`]: finite-dimensional quotients of tensor algebras by two-sided
//!   ideals generated in degree ≤ 2, with certified multiplication tables.
//! - [`forms`]: non-degenerate bilinear forms, asymmetries, discriminants and
//!   the Clifford algebra C(V,b) with its even part.
//! - [`csa`]: 2×2 matrix and quaternion algebras by structure constants,
//!   antiautomorphisms, reduced trace/norm, the sandwich map and the
//!   discriminant of an antiautomorphism.
//! - [`clifford`]: the ideals J₁/J₂ of an antiautomorphism, C(A,σ), the
//!   degree-2 classification and the structural verification routines.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod clifford;
pub mod csa;
pub mod error;
pub mod exactmath;
pub mod forms;
pub mod tensor;

pub use error::{Error, Result};
pub use exactmath::{QMatrix, QPoly, Rational, SquareClass};
