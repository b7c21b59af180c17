//! Bordered Floer invariants of integer-framed knot complements.
//!
//! A knot is given by its reduced knot Floer complex over 𝔽₂\[U\]. From it
//! the crate builds the type D invariant of the framed complement, derives
//! the type A invariant, pairs two complements with the box tensor product
//! and reads off whether the spliced manifold is an L-space from the ℤ/2
//! graded homology.
//!
//! ```
//! use bordered_splice::{cfk::staircase, splice::{splice_report, Knot}, cfk::Sign};
//!
//! let trefoil = Knot::new("trefoil", staircase(&[1, 1], Sign::Plus).unwrap()).unwrap();
//! let report = splice_report(&trefoil, 3, &trefoil, 2).unwrap();
//! assert!(report.verdict);
//! assert_eq!(report.computed.euler_abs(), 5);
//! ```

pub mod algebra;
pub mod cfk;
pub mod error;
pub mod f2;
pub mod homology;
pub mod pairing;
pub mod splice;
pub mod type_a;
pub mod type_d;

pub use error::{Error, Result};
