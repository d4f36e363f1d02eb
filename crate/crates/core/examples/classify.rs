//! Class flags, idempotent order and maximal subgroups of a semigroup.
//!
//! `cargo run --example classify [table.cay]`; without an argument every
//! catalog semigroup is classified.

use hypersemigroup::{catalog, parse_semigroup, FiniteSemigroup};

fn describe(name: &str, s: &FiniteSemigroup) {
    println!("{name} ({} elements)", s.len());
    println!("  {}", s.class_flags());
    let poset = s.idempotent_poset();
    for &e in poset.idempotents() {
        let h = s.maximal_subgroup(e).expect("idempotent");
        let up: Vec<String> = poset.up(e).iter().map(|&f| s.label(f)).collect();
        println!(
            "  idempotent {}: |H| = {}, filter {{{}}}",
            s.label(e),
            h.count(),
            up.join(", ")
        );
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    match std::env::args().nth(1) {
        Some(path) => describe(&path, &parse_semigroup(&std::fs::read_to_string(&path)?)?),
        None => {
            for (name, s) in catalog::named_semigroups() {
                describe(name, &s);
            }
        }
    }
    Ok(())
}
