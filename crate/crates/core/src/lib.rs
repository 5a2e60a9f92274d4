//! Exact lattice computations for Picard lattices of K3 surfaces.

pub mod cli;
pub mod error;
pub mod hilb2;
pub mod k3geom;
pub mod lattice;
pub mod matrix;
pub mod order;
pub mod poly;
pub mod products;
pub mod quadform;

pub use error::{Error, Result};
pub use lattice::{anti_involution, reflect, Isometry, Lattice, LatticeVector};
pub use matrix::IntMatrix;
pub use order::{order_certificate, GrowthWitness, OrderCertificate};
pub use poly::IntPolynomial;
