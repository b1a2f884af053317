//! Double-star calculus for finite symmetric graphs.

pub mod action;
pub mod construct;
pub mod graph;
pub mod instance;
pub mod perm;
pub mod quotient;
pub mod report;
pub mod stars;
pub mod verify;
