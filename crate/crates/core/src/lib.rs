//! Quantum circuits for multiplication over GF(2^n) with a subquadratic
//! number of CCZ/Toffoli gates.

pub mod bench;
pub mod bits;
pub mod catalog;
pub mod circuit;
pub mod gf2;
pub mod phase;
pub mod sim;
pub mod synth;
