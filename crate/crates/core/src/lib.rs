//! Young tableau calculus of types A and C.
//!
//! Schensted and Berele insertion, jeu de taquin, the RS/RSK correspondences
//! with oscillating and semistandard oscillating recording tableaux, Knuth
//! equivalence of both types, Bender-Knuth involutions, and exact
//! generating polynomials (Schur, symplectic Schur, SSOT) with both
//! expansions of the Cauchy product.

pub mod array;
pub mod bkinv;
pub mod correspondences;
pub mod enumerate;
pub mod error;
pub mod insertion;
pub mod knuth;
pub mod letter;
pub mod partition;
pub mod symfunc;
pub mod tableau;
pub mod verify;

pub use array::TwoLineArray;
pub use correspondences::{
    enumerate_ot, enumerate_ssot, inverse_rs_a, inverse_rs_c, inverse_rsk_a, inverse_rsk_c, rs_a, rs_c, rsk_a, rsk_c,
    OscillatingTableau, RskOutputC, Ssot,
};
pub use enumerate::{enumerate_kt, enumerate_skew, enumerate_ssyt, Alphabet};
pub use error::Error;
pub use insertion::{berele_insert, berele_reverse, row_insert, StepKind, StepRecord};
pub use letter::{symplectic_cmp, Letter, Word};
pub use partition::{is_horizontal_strip, Cell, Partition};
pub use tableau::{KingTableau, SkewTableau, Tableau};
