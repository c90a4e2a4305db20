pub mod colligation;
pub mod coset;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod relation;
pub mod verify;

pub use colligation::Colligation;
pub use coset::{Coset, KappaTable, Object, Window};
pub use error::{Error, Result};
pub use gf::{Elem, Gf, Scalar};
pub use linalg::{BlockLayout, Cell, Mat, Subspace};
pub use relation::LinRel;
