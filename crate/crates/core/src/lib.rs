//! Exact computations around braid groups, universal (half-)balanced braided monoidal
//! categories, Teichmuller groupoids in genus zero, and Grothendieck-Teichmuller actions,
//! with all completed objects realized at a finite truncation degree.

pub mod assoc;
pub mod braid;
pub mod catcore;
pub mod error;
pub mod exactalg;
pub mod freegroup;
pub mod gt;
pub mod liealg;
pub mod perm;
pub mod univcat;
pub mod verify;

pub use error::{Error, Result};
