use crate::algebra::{FiniteSemigroup, Group};
use crate::error::Result;
use crate::limits::{check_cap, max_table};
use crate::search::{self, SearchBudget};

use super::GroupAction;

/// `S x G` with `(s, g)(s', g') = (s * g(s'), g g')`. The pair `(s, g)` has
/// index `s * |G| + g`. Associativity is re-checked on the result.
pub fn semidirect_product(action: &GroupAction) -> Result<FiniteSemigroup> {
    let s = action.target();
    let g = action.group();
    let m = g.len();
    check_cap("semidirect product", (s.len() * m) as u128, max_table())?;
    let table = FiniteSemigroup::from_fn(s.len() * m, |a, b| {
        let (s1, g1) = (a / m, a % m);
        let (s2, g2) = (b / m, b % m);
        s.mul(s1, action.act(g1, s2)) * m + g.mul(g1, g2)
    })?;
    let labels = (0..s.len() * m)
        .map(|x| format!("({},{})", s.label(x / m), g.label(x % m)))
        .collect();
    table.with_labels(labels)
}

/// The inverse of `(s, g)` in `S x G` for inverse `S`: `(g^-1(s^-1), g^-1)`.
pub fn semidirect_inverse(action: &GroupAction, s_inverse: &[usize], x: usize) -> usize {
    let m = action.group().len();
    let (s, g) = (x / m, x % m);
    let gi = action.group().inv(g);
    action.act(gi, s_inverse[s]) * m + gi
}

/// All automorphisms of `S`, found by backtracking search, as a permutation
/// group acting on `S` tautologically. Automorphisms are sorted
/// lexicographically, so the identity is element 0 and labelled `id`.
pub fn automorphism_group(s: &FiniteSemigroup) -> Result<(Group, GroupAction)> {
    let found = search::enumerate_isomorphisms(s, s, SearchBudget::default())?;
    let mut perms: Vec<Vec<usize>> = found.into_iter().map(|m| m.map().to_vec()).collect();
    perms.sort();
    let index_of = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("closed");
    let k = perms.len();
    let compose = |a: usize, b: usize| {
        let c: Vec<usize> = perms[b].iter().map(|&x| perms[a][x]).collect();
        index_of(&c)
    };
    let table = FiniteSemigroup::from_fn(k, compose)?;
    let labels = (0..k)
        .map(|i| if i == 0 { "id".to_string() } else { format!("a{i}") })
        .collect();
    let group = Group::new(table.with_labels(labels)?)?;
    let action = GroupAction::new(group.clone(), s.clone(), perms.clone())?;
    Ok((group, action))
}

/// `S x Aut(S)` under the tautological action.
pub fn holomorph(s: &FiniteSemigroup) -> Result<FiniteSemigroup> {
    let (_, action) = automorphism_group(s)?;
    semidirect_product(&action)
}
