//! Decomposition classes of reductive Lie algebras.
//!
//! * [`root_datum`]: root data and the characteristic-dependent root
//!   vanishing tests (`Φ_y`, centres of Levis, stabiliser-type Levis).
//! * [`partition`]: dominance, transpose, centraliser dimensions and
//!   induction of nilpotent 𝔤𝔩ₙ-orbits.
//! * [`engine`]: GLₙ decomposition classes, their closure order, Hasse
//!   diagrams, level sets and sheets, and the transport to PGLₙ.
//! * [`oracle`]: exact matrix computations that check the engine
//!   independently.
//! * [`verify`]: engine-versus-oracle sweeps.

pub mod engine;
pub mod error;
pub mod field;
pub mod matrix;
pub mod oracle;
pub mod partition;
pub mod root_datum;
pub mod verify;

pub use error::{Error, Result};
