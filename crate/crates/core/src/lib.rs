//! Exact computations for the Dirac–Dunkl operator with Z2^3 reflection
//! group on R^3, its Bannai–Ito symmetry algebra and the associated
//! Cauchy–Kovalevskaia basis, wavefunctions and representations.

pub mod error;
pub mod exactnum;
pub mod birep;
pub mod ck;
pub mod closedform;
pub mod linalg;
pub mod operators;
pub mod poly;
pub mod suite;

pub use error::{Error, Result};
