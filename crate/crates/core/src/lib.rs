//! Exact symbolic construction and verification of locally trivial quantum
//! principal bundles over glued quantum spaces, their covariant calculi,
//! connections and curvature.

pub mod bundle;
pub mod connection;
pub mod dga;
pub mod error;
pub mod expr;
pub mod freealg;
pub mod hopf;
pub mod monopole;
pub mod report;
pub mod scalars;

pub use error::{Error, Result};
pub use scalars::{Param, Scalar};
