//! Finite categories stored as explicit composition tables.
//!
//! A [`FinCat`] is immutable once validated. Objects and morphisms are
//! addressed by the index newtypes [`Obj`] and [`Mor`]; labels are only used
//! for input and output.

mod builder;
mod category;
mod concrete;
mod error;
mod pullback;
pub mod random;
mod raw;

pub use builder::CategoryBuilder;
pub use category::{FinCat, Mor, Morphism, Obj, DEFAULT_MAX_MORPHISMS};
pub use concrete::ConcreteBuilder;
pub use error::CategoryError;
pub use pullback::CommutativeSquare;
pub use raw::RawCategory;
