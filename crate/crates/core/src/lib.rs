//! Exact combinatorics for promotion on semistandard tableaux.
//!
//! The crate covers jeu-de-taquin promotion, charge and cocharge, Kostka–Foulkes
//! polynomials, the stretched-hook/plane-partition bijection, ribbon tableaux,
//! and an exact cyclic (and bicyclic) sieving verifier. Every root-of-unity
//! evaluation is carried out in cyclotomic residue arithmetic; nothing here
//! touches floating point.
//!
//! Polynomials are generic over their integer coefficient ring (see
//! [`scalar::Coeff`]); the aliases below fix the arbitrary-precision choice
//! used throughout the verifier.

pub mod charge;
pub mod error;
pub mod planepart;
pub mod promotion;
pub mod qpoly;
pub mod ribbon;
pub mod scalar;
pub mod shapes;
pub mod sieve;
pub mod skewrsk;
pub mod tableaux;

pub use error::{Error, Result};
pub use shapes::{Composition, Partition, SkewShape};
pub use tableaux::{Tableau, Word};

/// Laurent polynomial in `q` with arbitrary-precision coefficients.
pub type QPoly = qpoly::LaurentPoly<num_bigint::BigInt>;
/// Laurent polynomial in `q` with machine-word coefficients.
pub type QPoly64 = qpoly::LaurentPoly<i64>;
/// Bivariate polynomial in `q` and `t` with arbitrary-precision coefficients.
pub type QTPoly = qpoly::BiPoly<num_bigint::BigInt>;
/// Exact value at a root of unity with arbitrary-precision coefficients.
pub type CycloValue = qpoly::CycloValue<num_bigint::BigInt>;
