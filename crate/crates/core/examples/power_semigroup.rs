//! The power semigroup exp(G) and the coset form of its regular elements.
//!
//! `cargo run --example power_semigroup [z1|z2|z3|z4|klein|z5|z6|s3]`

use hypersemigroup::catalog;
use hypersemigroup::hyperspace::{classify_subset, subgroups, PowerSemigroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let wanted = std::env::args().nth(1).unwrap_or_else(|| "z3".into());
    let (name, group) = catalog::small_groups()
        .into_iter()
        .find(|(n, _)| *n == wanted)
        .ok_or_else(|| format!("unknown group {wanted}"))?;
    let power = PowerSemigroup::new(&group)?;
    let exp = power.semigroup();
    println!("exp({name}): {} elements, {}", power.len(), exp.class_flags());
    let subs: Vec<String> = subgroups(&group).iter().map(ToString::to_string).collect();
    println!("subgroups: {}", subs.join(" "));

    let mut regular = 0;
    for k in power.subsets() {
        let c = classify_subset(&group, &k)?;
        match (&c.coset, &c.unique_inverse) {
            (Some((h, x)), Some(inv)) => {
                regular += 1;
                let kind = if c.is_idempotent {
                    "idempotent"
                } else if c.is_group_element {
                    "group element"
                } else {
                    "regular"
                };
                println!("{k:>12}  {kind:<13} = {h}*{x}, inverse {inv}");
            }
            _ => println!("{k:>12}  not regular"),
        }
    }
    println!("{regular} of {} subsets are regular", power.len());
    Ok(())
}
