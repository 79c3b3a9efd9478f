//! String parametrizations of crystal bases, weighted string cones and
//! toric degeneration certificates for flag and Schubert varieties.
//!
//! The pipeline: build root data ([`cartan`]), realize `B(lambda)` by paths
//! ([`pathcrystal`]), peel crystal elements along a reduced word of `w0`
//! ([`strings`]), infer and certify the cone of weighted string data
//! ([`polyhedra`]), and bundle generators, relations and a separating
//! linear form into a report ([`degeneration`]). [`characters`] provides the
//! independent dimension and Demazure-character oracles.

pub mod cartan;
pub mod characters;
pub mod degeneration;
pub mod error;
pub mod pathcrystal;
pub mod polyhedra;
pub mod strings;

pub use cartan::{CartanDatum, TypeLabel, Weight, WeylWord};
pub use error::{Error, Result};
