//! Graded contractions of the real and complex Lie algebras `g2`, `b3` and `d4`
//! along their Z₂³-gradings built from octonions.

pub mod exactnum;
pub mod fano;
pub mod linalg;
pub mod octonion;
pub mod liealg;
pub mod contraction;
pub mod nicesets;
pub mod invariants;
