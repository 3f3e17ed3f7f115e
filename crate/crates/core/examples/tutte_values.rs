//! Tutte values at `(±p, ±q)` as signed counts of orientation, tension,
//! flow triples.

use num_bigint::BigInt;
use tfpoly::invariants::{self, Quadrant, TutteRoute};
use tfpoly::{fixtures, Limits, Var};

fn main() -> tfpoly::Result<()> {
    let g = fixtures::k3();
    let l = Limits::default();
    let t = invariants::tutte(&g, TutteRoute::Recursion, &l)?;
    let (p, q) = (2, 3);
    for quad in ["++", "-+", "+-", "--"] {
        let quad: Quadrant = quad.parse()?;
        let n = invariants::tutte_value_triples(&g, p, q, quad, &l)?;
        println!("{quad}: triples {n}");
    }
    println!(
        "T(2,3) = {}",
        t.evaluate(&[(Var::X, BigInt::from(p)), (Var::Y, BigInt::from(q))])?
    );
    Ok(())
}
