//! Tensions and flows over finite abelian groups and over the integers,
//! pair classification, and the brute-force counting oracles.
//!
//! A pair `(f, g)` is a tension `f` and a flow `g` on the same oriented
//! graph. Pair classes are named after the formulas they test; in
//! particular `supp f ⊆ ker g` and `ker f ⊆ supp g` are both called
//! "elliptic" in different parts of the literature, so no flag is named
//! after that word alone.

mod basis;
mod enumerate;
mod group;
mod integral;
mod ops;
mod pairs;

pub use enumerate::{enumerate_flows, enumerate_tensions};
pub use group::{
    integer_support, Coefficients, FiniteAbelianGroup, GroupElementFunction, IntegerEdgeFunction, Integers,
    TensionFlowPair,
};
pub use integral::{
    count_integral_flows, count_integral_tensions, enumerate_integral_flows, enumerate_integral_tensions,
    for_each_integral_flow, for_each_integral_tension, windows_for, EdgeWindow, SupportConstraints, WindowMode,
};
pub use ops::{boundary, coboundary, is_flow, is_tension, lattice_index, modular_reduce, reorient, EdgeFunction};
pub use pairs::{
    classify_pair, count_pairs, count_pairs_weighted, integral_pair_census, pair_census, PairCensus, PairFlags,
    PairPredicate,
};
