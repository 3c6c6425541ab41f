pub mod boxmod;
pub mod format;
pub mod homological;
pub mod ideal;
pub mod lattice;
pub mod linalg;
pub mod harness;
