//! Per-orientation complementary counts and the four weighted
//! complementary polynomials.

use tfpoly::invariants::{self, KappaMode, PsiKind};
use tfpoly::{fixtures, Limits};

fn main() -> tfpoly::Result<()> {
    let g = fixtures::k3();
    let l = Limits::default();
    for t in invariants::orientation_terms(&g, &l)? {
        // The open count is the product of the tension and flow windows.
        let open = invariants::kappa_rho(&g, &t.orientation, KappaMode::Open, &l)?;
        assert_eq!(open, t.kappa);
        println!(
            "{:?}: |B| = {}, |C| = {}, kappa = {open}, closed = {}",
            t.orientation.flips(),
            t.b.len(),
            t.c.len(),
            t.kappa_bar
        );
    }
    let fam = invariants::psi_all(&g, &l)?;
    for kind in PsiKind::ALL {
        println!("{} = {}", kind.name(), fam.get(kind));
    }
    Ok(())
}
