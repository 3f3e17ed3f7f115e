//! The hyperbolic tension-flow polynomial three ways: subset expansion,
//! the intersection poset of the arrangement, and counting pairs in
//! `A^E x B^E` for concrete groups.

use num_bigint::BigInt;
use tfpoly::invariants::{self, OmegaRoute};
use tfpoly::tensionflow::FiniteAbelianGroup;
use tfpoly::{fixtures, Limits, Var};

fn main() -> tfpoly::Result<()> {
    let g = fixtures::theta();
    let l = Limits::default();
    let w = invariants::omega(&g, OmegaRoute::Expansion, &l)?;
    assert_eq!(w, invariants::omega(&g, OmegaRoute::Arrangement, &l)?);
    println!("omega(theta) = {w}");

    let z2z2 = FiniteAbelianGroup::new(vec![2, 2])?;
    for (a, b) in [
        (FiniteAbelianGroup::cyclic(3)?, FiniteAbelianGroup::cyclic(2)?),
        (z2z2.clone(), FiniteAbelianGroup::cyclic(3)?),
    ] {
        let count = invariants::omega_brute(&g, &a, &b, &l)?;
        let at = w.evaluate(&[(Var::X, BigInt::from(a.order())), (Var::Y, BigInt::from(b.order()))])?;
        println!(
            "|A| = {}, |B| = {}: enumeration {count}, polynomial {at}",
            a.order(),
            b.order()
        );
    }
    Ok(())
}
