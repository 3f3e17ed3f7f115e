//! A finite arrangement of coset products: the characteristic value of its
//! intersection semilattice counts the complement.

use tfpoly::arrangements::{
    complement_count, finite_characteristic_value, finite_semilattice, Coset, CosetProduct, FiniteArrangement,
};
use tfpoly::tensionflow::FiniteAbelianGroup;
use tfpoly::Limits;

fn main() -> tfpoly::Result<()> {
    let z4 = FiniteAbelianGroup::cyclic(4)?;
    let z3 = FiniteAbelianGroup::cyclic(3)?;
    let ambient = vec![z4.clone(), z3.clone()];
    let members = vec![
        // {0, 2} x Z3
        CosetProduct::new(vec![Coset::new(&z4, &[vec![2]], &[0]), Coset::whole(&z3)]),
        // Z4 x {1}
        CosetProduct::new(vec![Coset::whole(&z4), Coset::new(&z3, &[], &[1])]),
        // {1, 3} x {2}
        CosetProduct::new(vec![Coset::new(&z4, &[vec![2]], &[1]), Coset::new(&z3, &[], &[2])]),
    ];
    let arr = FiniteArrangement::new(ambient, members)?;
    let l = Limits::default();
    let poset = finite_semilattice(&arr, &l)?;
    println!("flats: {}", poset.len());
    println!("characteristic value: {}", finite_characteristic_value(&poset, &arr));
    println!("complement by counting: {}", complement_count(&arr, &l)?);
    Ok(())
}
