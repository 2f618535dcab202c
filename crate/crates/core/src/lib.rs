//! Braid monodromy presentations for Weierstrass-type hypersurface
//! families, with independent oracles for checking them.

pub mod error;
pub mod group;
pub mod hl;
pub mod lattice;
pub mod numerology;
pub mod polyalg;
pub mod presentation;
mod util;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_complex::Complex64;
pub use lattice::{LatticeGraph, MultiIndex, OrderTag};
pub use presentation::{
    build_elliptic, build_presentation, build_zariski, BuildOptions, Presentation, Relation,
    RelationKind, Variant, Word,
};
