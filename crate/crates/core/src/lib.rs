//! Exact symbolic engine for the Dirac oscillator.

pub mod clifford;
pub mod exactpoly;
pub mod gaugefields;
pub mod minkowski;
pub mod symbols;
pub mod lagrangian;
