//! Decomposition classes of 𝔤𝔩ₙ (and 𝔭𝔤𝔩ₙ by transport): enumeration,
//! dimensions, closure order, Hasse diagrams, level sets and sheets.
//!
//! Stabiliser and centraliser levels coincide for GLₙ in every
//! characteristic, so a single `level` is reported.

mod closure;
mod datum;
mod poset;

pub use closure::closure_leq;
pub use datum::{
    class_dim, enumerate_classes, induce_orbit, level_of, sheet_nilpotent, GLDecompDatum, LeviShape,
};
pub use poset::{hasse, pgl_transport, sheets, ClassInfo, ClassPoset, Group, HasseDiagram, LevelSet};

/// Largest `n` for which the closure order is computed.
pub const MAX_CLOSURE_N: usize = 12;
