pub mod exact;
pub mod hyperseries;
pub mod inversion;
pub mod catalog;
pub mod verify;
pub mod selftest;

pub use exact::Rational;
