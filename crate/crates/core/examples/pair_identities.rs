//! Weighted sums over tension-flow pairs, and which reading of the first
//! identity's domain survives.

use tfpoly::invariants;
use tfpoly::{fixtures, Limits};

fn main() -> tfpoly::Result<()> {
    let l = Limits::default();
    for name in ["digon", "k3"] {
        let g = fixtures::by_name(name).unwrap();
        let r = invariants::pair_identities(&g, 2, 3, &l)?;
        println!("{name}: {} checks, passed: {}", r.report.items.len(), r.report.passed());
        for o in &r.readings {
            println!("  {:?} validates: {}", o.reading, o.validates);
        }
        // Pairs with both kernels empty: nowhere-zero tension and flow.
        let none = g.empty_subset();
        println!(
            "  nowhere-zero pairs at (2,3): {}",
            invariants::exact_level_count(&g, 2, 3, &none, &none, &l)?
        );
    }
    Ok(())
}
