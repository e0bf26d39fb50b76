//! Hamming and ternary Golay number-theoretic transforms over GF(p), the
//! linear codes they fix, and flower-shaped renderings of GF(p) words.
//!
//! ```
//! use flowerntt::{Transform, Word};
//!
//! let x = Word::parse("102010022101", 3).unwrap();
//! let y = Transform::Golay.apply(&x).unwrap();
//! assert_eq!(y.to_string(), "101021012210");
//! ```

pub mod codes;
pub mod error;
pub mod flowergeom;
pub mod gfield;
pub mod modlinalg;
pub mod ntt;
pub mod render;
pub mod verify;

pub use codes::{golay_code, hamming_code, hamming_generator, LinearCode};
pub use error::{Error, Result};
pub use flowergeom::{features, petal_shades, ConstellationPoint, FlowerShape, Shade};
pub use gfield::{FieldElement, Prime, Word};
pub use modlinalg::{Matrix, RrefResult};
pub use ntt::{
    apply_addition_only, eigen_spectrum, fixed_space, golay_ntt_matrix,
    golay_ntt_matrix_as_printed, hamming_ntt_matrix, EigenSpace, Transform,
};
pub use render::{Color, RenderSpec};
