//! Rank generating and Tutte polynomials, by both Tutte routes.
//!
//! `cargo run --example tutte_whitney -- k4`

use tfpoly::invariants::{self, TutteRoute};
use tfpoly::{fixtures, Limits};

fn main() -> tfpoly::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "k4".into());
    let g = fixtures::by_name(&name).expect("unknown fixture");
    let l = Limits::default();
    println!("R({name}) = {}", invariants::whitney(&g, &l)?);
    let rec = invariants::tutte(&g, TutteRoute::Recursion, &l)?;
    let shift = invariants::tutte(&g, TutteRoute::Shift, &l)?;
    assert_eq!(rec, shift);
    println!("T({name}) = {rec}");
    Ok(())
}
