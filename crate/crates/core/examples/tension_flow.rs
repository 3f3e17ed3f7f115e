//! Modular and integral tension and flow polynomials, and the chromatic
//! polynomial. Integral ones may have fractional coefficients.

use tfpoly::invariants;
use tfpoly::{fixtures, Limits};

fn main() -> tfpoly::Result<()> {
    let l = Limits::default();
    for name in ["k3", "k4_minus_edge", "theta"] {
        let g = fixtures::by_name(name).unwrap();
        println!("{name}");
        println!("  tension          {}", invariants::tension_poly(&g, &l)?);
        println!("  flow             {}", invariants::flow_poly(&g, &l)?);
        println!("  integral tension {}", invariants::integral_tension_poly(&g, &l)?);
        println!("  integral flow    {}", invariants::integral_flow_poly(&g, &l)?);
        println!("  chromatic        {}", invariants::chromatic_poly(&g, &l)?);
    }
    Ok(())
}
