//! Order-preserving semilattice operations on finite chains.
//!
//! A binary operation `F` on `X = {1..n}` that is associative, symmetric and
//! idempotent is the join of a semilattice order `⪯` (`x ⪯ y` iff
//! `F(x, y) = y`). This crate studies the ones that are also monotone for a
//! chain `≤` on `X`:
//!
//! - [`table`], [`order`]: operation tables, total/partial/semilattice orders,
//!   their properties and text/JSON formats;
//! - [`hasse`]: Hasse trees, the structure condition that characterises
//!   nondecreasing orders, DOT output;
//! - [`assoc`]: the fast recursive associativity test and contour plots;
//! - [`enumerate`]: the counting sequences with brute-force oracles;
//! - [`construction`]: total orders compatible with a binary tree;
//! - [`kary`]: k-ary extension and reduction.
//!
//! ```
//! use semichain::{assoc, OpTable};
//!
//! let op = OpTable::max(3);
//! let trace = assoc::fast_associativity_test(&op).unwrap();
//! assert!(trace.is_associative());
//! ```

pub mod assoc;
pub mod construction;
pub mod enumerate;
pub mod error;
pub mod hasse;
pub mod kary;
pub mod order;
pub mod report;
pub mod samples;
pub mod table;

pub use enumerate::BigCount;
pub use error::{Error, Result};
pub use kary::KaryOpTable;
pub use order::{PartialOrder, SemilatticeOrder, TotalOrder};
pub use table::OpTable;
