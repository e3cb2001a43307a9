//! Schensted row insertion, jeu de taquin, and Berele insertion.

mod berele;
mod jdt;
mod schensted;

pub use berele::{berele_insert, berele_insert_via_type_a, berele_insert_word, berele_reverse, StepKind, StepRecord};
pub use jdt::{forward_slide, jdt_rectifications, jdt_rectify, jdt_rectify_with, PuncturedTableau};
pub use schensted::{reverse_bump, row_insert};
