//! Intersection semilattices of arrangements, their Möbius functions, and
//! characteristic polynomials.
//!
//! Two backends share the poset machinery: explicit coset products inside
//! finite abelian groups, small enough to test the complement formula by
//! direct counting, and the graphic tension-flow arrangement `{Ω_e}` whose
//! flats are tracked symbolically by the rational dimensions of their
//! tension and flow parts.

mod finite;
mod graphic;
mod poset;

pub use finite::{
    complement_count, disjoint_valuation, finite_characteristic_value, finite_semilattice, product_valuation, Coset,
    CosetProduct, FiniteArrangement, FiniteFlat,
};
pub use graphic::{graphic_characteristic_polynomial, graphic_semilattice, GraphicFlat};
pub use poset::IntersectionPoset;
