//! Exact computation of exponential Hilbert series of flag varieties.
//!
//! For a simple, simply-connected complex group `G` and a dominant weight `λ`,
//! the homogeneous coordinate ring of the closed orbit `X_λ ⊂ P(L(λ))` is
//! `⊕ L(nλ)`. Its exponential Hilbert series `Σ dim L(nλ) xⁿ/n!` equals
//! `p(x)eˣ` for a polynomial `p` with rational coefficients, and `p` encodes
//! `dim X_λ` (its degree) and the degree of the embedding (`d!` times its
//! leading coefficient).
//!
//! ```
//! use exphilbert::{analyze, DominantWeight, DynkinFamily, DynkinType, RootSystem};
//!
//! let a2 = RootSystem::new(DynkinType::new(DynkinFamily::A, 2)?);
//! let data = analyze(&a2, &DominantWeight::new(vec![1, 0]))?;
//! assert_eq!(data.dim_variety, 2); // P²
//! assert_eq!(data.embedding_degree, 1u32.into());
//! assert_eq!(data.exp_polynomial.polynomial().to_string(), "1 + 2x + (1/2)x^2");
//! # Ok::<(), exphilbert::Error>(())
//! ```
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod combinatorics;
pub mod error;
pub mod identities;
pub mod rootsystem;
pub mod series;

pub use combinatorics::{BigRational, RationalPolynomial};
pub use error::{Error, Result};
pub use identities::{Identity, IdentityReport};
pub use rootsystem::{weyl_vector, DominantWeight, DynkinFamily, DynkinType, Root, RootSystem};
pub use series::{analyze, ExpPolynomial, HilbertData, OrdinarySeriesRep};

// The guide's code listings are compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/combinatorics.md")]
    pub struct Combinatorics;
    #[doc = include_str!("../../../book/src/root-systems.md")]
    pub struct RootSystems;
    #[doc = include_str!("../../../book/src/exponential-series.md")]
    pub struct ExponentialSeries;
    #[doc = include_str!("../../../book/src/invariants.md")]
    pub struct Invariants;
    #[doc = include_str!("../../../book/src/identities.md")]
    pub struct Identities;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
    #[doc = include_str!("../../../README.md")]
    pub struct Readme;
}
