//! Domino tableaux in four families (plain, set-valued, shifted and shifted
//! set-valued), the bijections splitting them into pairs of ordinary
//! tableaux, and exact checks of the resulting product formulas for Schur,
//! stable Grothendieck, Q-Schur and K-theoretic Q-Schur functions.
//!
//! ```
//! use dominotab::{two_quotient, Partition};
//!
//! let lambda: Partition = "[4,2,2,1,1,1]".parse().unwrap();
//! let (mu, nu) = two_quotient(&lambda);
//! assert_eq!((mu.to_string(), nu.to_string()), ("[2,1]".into(), "[1]".into()));
//! ```

pub mod bijections;
pub mod domino_tableaux;
pub mod error;
pub mod format;
pub mod partitions;
pub mod pavings;
pub mod polyring;
pub mod render;
pub mod tableaux;
pub mod verify;

#[cfg(test)]
mod test_fixtures;

pub use bijections::{gamma_merge, gamma_split};
pub use domino_tableaux::{
    diagonal_reading, enumerate_domino_tableaux, for_each_domino_tableau, up_fingerprint,
    validate_domino_tableau, weakly_southeast, DominoTableau, FilledDomino, UpFingerprint,
};
pub use error::{Error, Result};
pub use format::{from_canonical, to_canonical, Document};
pub use partitions::{inverse_two_quotient, is_partition, is_pavable, two_quotient, Cell, Partition};
pub use pavings::{
    crossing_diagonal, domino_type, enumerate_pavings, is_shifted_pavable, is_shifted_paving,
    region_split, Domino, DominoType, Orientation, Paving, RegionSplit,
};
pub use polyring::{domino_genfun, genfun, poly_mul, Monomial, Polynomial};
pub use tableaux::{
    enumerate_tableaux, for_each_tableau, reading_word, tableau_from_reading_word, validate_tableau,
    CellFill, Family, Letter, LetterSet, ReadingWord, Tableau,
};
pub use verify::{cross_check_bijection, verify_identity, verify_sweep, Status, VerificationReport};
