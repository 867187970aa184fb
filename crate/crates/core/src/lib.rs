pub mod algebra;
pub mod catalog;
pub mod error;
pub mod field;
pub mod linalg;
pub mod spaces;
pub mod suite;
pub mod tensor;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
