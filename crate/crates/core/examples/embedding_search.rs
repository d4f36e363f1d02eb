//! Backtracking search for embeddings, isomorphisms and automorphisms.

use hypersemigroup::catalog;
use hypersemigroup::constructions::automorphism_group;
use hypersemigroup::hyperspace::PowerSemigroup;
use hypersemigroup::search::{find_embedding, SearchBudget};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = catalog::brandt_z1_2();
    for (name, g) in catalog::small_groups() {
        let power = PowerSemigroup::new(&g)?;
        let chain = find_embedding(&catalog::two_chain(), power.semigroup(), SearchBudget::default())?;
        let brandt = find_embedding(&b, power.semigroup(), SearchBudget::default())?;
        println!("exp({name}): 2chain {}, B(Z1,2) {}", chain.token(), brandt.token());
    }

    let tight = find_embedding(&catalog::e3(), &catalog::hol_e3(), SearchBudget::nodes(1))?;
    println!("E3 into Hol(E3) with a budget of one node: {}", tight.token());

    for (name, s) in catalog::named_semigroups() {
        let (aut, _) = automorphism_group(&s)?;
        println!("|Aut({name})| = {}", aut.len());
    }
    Ok(())
}
