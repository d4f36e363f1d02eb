//! Small named semigroups and groups used by the examples, tests and corpus.

use crate::algebra::{FiniteSemigroup, Group};
use crate::constructions::{attach_zero, brandt, direct_product, holomorph};

fn labelled(s: FiniteSemigroup, labels: &str) -> FiniteSemigroup {
    s.with_labels(labels.split_whitespace().map(String::from).collect())
        .expect("catalog labels are valid")
}

/// The cyclic group `Z_n` on `0..n` under addition mod `n`. `Z_1` is
/// labelled `e`.
pub fn cyclic(n: usize) -> Group {
    assert!(n >= 1, "cyclic group of order 0");
    let table = FiniteSemigroup::from_fn_trusted(n, |a, b| (a + b) % n);
    let table = if n == 1 { labelled(table, "e") } else { table };
    Group::new(table).expect("cyclic group")
}

/// `Z_2 x Z_2`.
pub fn klein() -> Group {
    let z2 = cyclic(2);
    Group::new(direct_product(&[z2.semigroup(), z2.semigroup()]).expect("small")).expect("group")
}

/// The symmetric group on three points. Elements are the permutations of
/// `(1,2,3)` in lexicographic order of their image words, composed right to
/// left: `(p q)(i) = p(q(i))`.
pub fn symmetric3() -> Group {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).expect("permutation");
    let table = FiniteSemigroup::from_fn_trusted(6, |a, b| {
        let (p, q) = (perms[a], perms[b]);
        index([p[q[0]], p[q[1]], p[q[2]]])
    });
    Group::new(labelled(table, "id (23) (12) (123) (132) (13)")).expect("group")
}

/// `Z_1, ..., Z_6`, the Klein group and `S_3`: every group of order at most 6
/// up to isomorphism.
pub fn small_groups() -> Vec<(&'static str, Group)> {
    vec![
        ("z1", cyclic(1)),
        ("z2", cyclic(2)),
        ("z3", cyclic(3)),
        ("z4", cyclic(4)),
        ("klein", klein()),
        ("z5", cyclic(5)),
        ("z6", cyclic(6)),
        ("s3", symmetric3()),
    ]
}

/// The semilattice `{e, f, ef}` with `e` and `f` incomparable.
pub fn e3() -> FiniteSemigroup {
    let table = FiniteSemigroup::new(vec![vec![0, 2, 2], vec![2, 1, 2], vec![2, 2, 2]]).expect("semilattice");
    labelled(table, "e f ef")
}

/// The chain `f < e`, with `f` at index 0.
pub fn two_chain() -> FiniteSemigroup {
    let table = FiniteSemigroup::new(vec![vec![0, 0], vec![0, 1]]).expect("semilattice");
    labelled(table, "f e")
}

pub fn z1_zero() -> FiniteSemigroup {
    attach_zero(cyclic(1).semigroup()).expect("small")
}

/// `Z_2` with a zero: identity `e`, generator `a`, zero `0`.
pub fn z2_zero() -> FiniteSemigroup {
    labelled(attach_zero(cyclic(2).semigroup()).expect("small"), "e a 0")
}

pub fn z3_zero() -> FiniteSemigroup {
    labelled(attach_zero(cyclic(3).semigroup()).expect("small"), "e a b 0")
}

/// The five-element Brandt semigroup over the trivial group.
pub fn brandt_z1_2() -> FiniteSemigroup {
    brandt(&cyclic(1), 2).expect("small")
}

/// `E_3` extended by its automorphism group.
pub fn hol_e3() -> FiniteSemigroup {
    holomorph(&e3()).expect("small")
}

/// The named corpus, in a fixed order.
pub fn named_semigroups() -> Vec<(&'static str, FiniteSemigroup)> {
    vec![
        ("z2", cyclic(2).into_semigroup()),
        ("z3", cyclic(3).into_semigroup()),
        ("z4", cyclic(4).into_semigroup()),
        ("klein", klein().into_semigroup()),
        ("s3", symmetric3().into_semigroup()),
        ("e3", e3()),
        ("2chain", two_chain()),
        ("z2_zero", z2_zero()),
        ("brandt_z1_2", brandt_z1_2()),
        ("hol_e3", hol_e3()),
    ]
}
