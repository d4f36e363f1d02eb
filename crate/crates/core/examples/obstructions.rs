//! Necessary conditions for embedding into a power semigroup, checked on
//! every catalog semigroup.

use hypersemigroup::algebra::ObstructionReport;
use hypersemigroup::catalog;

fn main() {
    for (name, s) in catalog::named_semigroups() {
        let report = s.class_h_obstructions();
        println!("{name}: {report}");
        if let ObstructionReport::Checked(violations) = &report {
            for v in violations {
                println!("  {}", v.describe(&s));
            }
        }
    }
}
