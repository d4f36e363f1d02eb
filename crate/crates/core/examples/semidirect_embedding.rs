//! Extending an embedding E3 -> exp(Z2 x Z2) to the semidirect product of E3
//! with Z2 swapping e and f.

use hypersemigroup::catalog;
use hypersemigroup::constructions::{product_embedding, semidirect_hyper_embedding, GroupAction, HyperMap};
use hypersemigroup::hyperspace::PowerSemigroup;
use hypersemigroup::search::{find_embedding, SearchBudget};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z2 = catalog::cyclic(2);
    let boxes = product_embedding(&[z2.clone(), z2.clone()])?;
    println!(
        "exp(Z2) x exp(Z2) -> exp(Z2 x Z2): {} inputs, embedding={}",
        boxes.source().len(),
        boxes.verify().is_embedding()
    );

    let e3 = catalog::e3();
    let power = PowerSemigroup::new(&catalog::klein())?;
    let m = find_embedding(&e3, power.semigroup(), SearchBudget::default())?
        .found()
        .cloned()
        .ok_or("E3 does not embed")?;
    let f = HyperMap::from_morphism(&e3, &power, &m)?;
    for x in e3.elements() {
        println!("f({}) = {}", e3.label(x), f.image(x));
    }

    let swap = GroupAction::new(z2, e3, vec![vec![0, 1, 2], vec![1, 0, 2]])?;
    let lifted = semidirect_hyper_embedding(&f, &swap, false)?;
    for (x, (tuple, g)) in lifted.symbolic.iter().enumerate() {
        let parts: Vec<String> = tuple.iter().map(ToString::to_string).collect();
        println!("{} -> ({}) x {{{g}}}", lifted.source.label(x), parts.join(", "));
    }
    match &lifted.report {
        Some(report) => println!("verified: {}", report.is_embedding()),
        None => println!("H^G too large to materialize, verification skipped"),
    }
    Ok(())
}
