//! Ideal-counting zeta functions of reduced curve singularities over finite
//! fields, computed from the value semigroup alone. A brute-force oracle over
//! truncated algebras on prime fields recomputes the same numbers by counting.
//!
//! ```
//! use curve_zeta::{zeta::zeta_truncated, LatticePoint, ValueSemigroup};
//!
//! let node = ValueSemigroup::from_points(
//!     LatticePoint::from([1, 1]),
//!     [LatticePoint::from([0, 0]), LatticePoint::from([1, 1])],
//! )?;
//! assert_eq!(zeta_truncated(&node, 2)?.to_string(), "1 + (q - 1) t^2");
//! # Ok::<(), curve_zeta::Error>(())
//! ```

pub mod classify;
pub mod cli;
pub mod ell;
pub mod error;
pub mod lattice;
pub mod laurent;
pub mod oracle;
pub mod report;
pub mod semigroup;
pub mod zeta;

pub use error::{Error, Result};
pub use lattice::{IndexSet, LatticeBox, LatticePoint};
pub use laurent::LaurentPoly;
pub use semigroup::ValueSemigroup;
