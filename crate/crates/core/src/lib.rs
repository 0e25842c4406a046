//! Classification engine for wonderful compactifications of adjoint
//! irreducible symmetric spaces.

pub mod catalog;
pub mod curves;
pub mod dynkin;
pub mod error;
pub mod expr;
pub mod involution;
pub mod kac;
pub mod linalg;
pub mod names;
pub mod record;
pub mod report;
pub mod restricted;
pub mod roots;
pub mod validate;
pub mod vmrt;

pub use error::{Error, Result};
pub use involution::{Involution, SatakeData, SimpleRootClass};
pub use restricted::{RestrictedRootSystem, RestrictedType};
pub use roots::{CartanType, Coweight, Family, LatticeMap, RootSystem, Weight};
