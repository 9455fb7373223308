//! Skew polynomial rings `F_q[X; theta, delta]` over finite fields and the
//! skew generalized cyclic codes they define.

pub mod bounds;
pub mod code;
pub mod error;
pub mod factor;
pub mod field;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod pseudo_linear;

pub use error::{Error, Result};
pub use field::{extend_field, Automorphism, Derivation, Elem, Embedding, Field};
pub use linalg::MatFq;
pub use parse::parse_poly;
pub use poly::{RingCtx, SkewPoly};
pub use pseudo_linear::PseudoLinearMap;
