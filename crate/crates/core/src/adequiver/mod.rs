//! The McKay correspondence: quivers from character data, their affine
//! A-D-E types, and root systems with their Dynkin diagrams.

mod ade;
mod iso;
mod quiver;
mod roots;

pub use ade::{identify_affine_ade, mckay_partner, AdeFamily, AffineAdeType};
pub use quiver::{mckay_quiver, quiver_checks, quiver_of_group, Quiver, QuiverReport};
pub use roots::{
    a_simple_roots, d_simple_roots, dynkin_from_simple_roots, e8_simple_roots, reflect,
    root_closure, DynkinDiagram, DynkinEdge, EdgeDirection, RootSystem, RootVector,
    DEFAULT_ROOT_CAP,
};
