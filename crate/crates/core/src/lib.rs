//! Plane-based projective geometric algebra: a signature-generic Clifford
//! algebra engine, euclidean geometry in Cl(2,0,1) and Cl(3,0,1), rotors,
//! and rigid-body dynamics.

pub mod algebra;
pub mod dual_number;
pub mod duality;
pub mod dynamics;
pub mod error;
pub mod euclid;
pub mod multivector;
pub mod tolerance;
pub mod versor;

pub use algebra::{Algebra, Blade, Cell, Signature};
pub use dual_number::DualNumber;
pub use duality::{dual_j, join, meet};
pub use error::{PgaError, Result};
pub use euclid::{Bivector3, Pitch};
pub use multivector::Multivector;
pub use versor::ScrewLog;
