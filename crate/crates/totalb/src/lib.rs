//! Total b-chromatic colourings.
//!
//! A total colouring colours vertices and edges together; an element is
//! b-chromatic when its total neighbourhood shows every colour but its own.
//! This crate verifies such colourings, computes phi_t exactly on small
//! graphs, builds optimal colourings of caterpillars constructively, and
//! implements the cubic-bipartite reduction gadget.

pub mod caterpillar;
pub mod colouring;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod io;
pub mod reduction;

pub use colouring::{verify, Colour, TotalColouring, Verdict, VerificationReport};
pub use graph::{Element, Graph};
