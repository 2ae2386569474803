//! Graded commutative algebra over prime fields.
//!
//! The crate decides whether a finitely generated graded module F/U over
//! a polynomial ring is sequentially Cohen-Macaulay, by computing and
//! cross-checking three equivalent criteria: vanishing/Cohen-Macaulayness
//! of the Ext modules, Hilbert-function agreement of the Ext modules with
//! those of an initial module, and equality of arithmetic degrees.
//!
//! Layers, bottom to top:
//! - `field`, `monomial`, `polynomial`, `module`, `order`: exact
//!   arithmetic in F_p[x_1..x_n] and its graded free modules, plus the
//!   term orders.
//! - `groebner`: Buchberger's algorithm for submodules, normal forms,
//!   syzygies, colon and saturation.
//! - `hilbert`: Hilbert series, dimension, multiplicity.
//! - `ext`: free resolutions, duals, Ext modules and their series.
//! - `genericity`: random coordinate changes, generic initial modules,
//!   filter regular sequences.
//! - `seqcm`: the three criteria and the orchestrated verdict.
//! - `bruteforce`: slow degreewise linear-algebra references used for
//!   cross-checking.

pub mod bruteforce;
pub mod error;
pub mod ext;
pub mod field;
pub mod genericity;
pub mod groebner;
pub mod hilbert;
pub mod module;
pub mod monomial;
pub mod order;
pub mod polynomial;
pub mod seqcm;

pub use error::{EngineError, Result};
pub use field::{PolyRing, DEFAULT_PRIME};
pub use groebner::{GroebnerBasis, SubmoduleBasis};
pub use hilbert::{DimensionMultiplicity, HilbertSeries};
pub use module::{FreeModule, VectorElement};
pub use monomial::{Monomial, WeightVector};
pub use order::OrderTag;
pub use polynomial::Polynomial;
