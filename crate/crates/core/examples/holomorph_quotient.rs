//! Hol(E3) embeds into a power semigroup while its Rees quotient by
//! {ef} x Aut(E3) is the Brandt semigroup B(Z1,2), which does not.

use hypersemigroup::catalog;
use hypersemigroup::constructions::{automorphism_group, brandt, ideal_violation, rees_quotient, semidirect_product};
use hypersemigroup::search::is_isomorphic;
use hypersemigroup::Subset;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e3 = catalog::e3();
    let (aut, action) = automorphism_group(&e3)?;
    let hol = semidirect_product(&action)?;
    println!("|Aut(E3)| = {}, |Hol(E3)| = {}", aut.len(), hol.len());
    println!("Hol(E3): {}", hol.class_flags());

    let m = aut.len();
    let ideal = Subset::from_indices(hol.len(), (0..m).map(|g| 2 * m + g))?;
    println!("I = {ideal}, ideal: {}", ideal_violation(&hol, &ideal).is_none());
    let quotient = rees_quotient(&hol, &ideal)?;
    print!("Hol(E3)/I:\n{}", quotient.to_cayley());

    let b = brandt(&catalog::cyclic(1), 2)?;
    match is_isomorphic(&quotient, &b)?.found() {
        Some(iso) => println!("isomorphic to B(Z1,2) via {:?}", iso.map()),
        None => println!("not isomorphic to B(Z1,2)"),
    }
    println!("obstructions on Hol(E3): {}", hol.class_h_obstructions());
    for v in quotient.class_h_obstructions().violations() {
        println!("obstruction on the quotient: {}", v.describe(&quotient));
    }
    Ok(())
}
