//! Backtracking search for homomorphisms, embeddings and isomorphisms between
//! finite semigroups.
//!
//! Source elements are assigned images in a fixed order, idempotents first.
//! Whenever two assigned elements have an unassigned product, the product's
//! image is forced and propagated, so most of the tree collapses early.
//! Candidate images are tried in ascending order, which makes the first
//! result the least one in that order.

use std::collections::BTreeMap;

use crate::algebra::FiniteSemigroup;
use crate::error::{Error, Result};
use crate::morphism::Morphism;

const NONE: usize = usize::MAX;

/// Limit on the number of branching decisions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget { max_nodes }
    }

    pub fn unlimited() -> Self {
        SearchBudget { max_nodes: u64::MAX }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 10_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Morphism),
    /// The whole space was searched: no such map exists.
    NoneExhaustive,
    /// The budget ran out first; nothing is known.
    NoneBudget,
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&Morphism> {
        match self {
            SearchOutcome::Found(m) => Some(m),
            _ => None,
        }
    }

    pub fn token(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "found",
            SearchOutcome::NoneExhaustive => "none-exhaustive",
            SearchOutcome::NoneBudget => "none-budget",
        }
    }
}

/// Homomorphisms found by [`enumerate_homomorphisms`], with `truncated` set
/// when more existed than the cap allowed.
#[derive(Clone, Debug)]
pub struct Homomorphisms {
    pub morphisms: Vec<Morphism>,
    pub truncated: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Homomorphism,
    Embedding,
    Isomorphism,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
    Budget,
}

/// Per-element data compared when pruning candidate images.
struct Invariants {
    idempotent: Vec<bool>,
    index_period: Vec<(usize, usize)>,
    /// `|H_e|` for idempotents, 0 elsewhere.
    group_size: Vec<usize>,
}

impl Invariants {
    fn of(s: &FiniteSemigroup) -> Self {
        let idempotent: Vec<bool> = s.elements().map(|x| s.is_idempotent(x)).collect();
        let index_period = s.elements().map(|x| s.index_period(x)).collect();
        let group_size = s
            .elements()
            .map(|x| {
                if idempotent[x] {
                    s.maximal_subgroup(x).map_or(0, |h| h.count())
                } else {
                    0
                }
            })
            .collect();
        Invariants {
            idempotent,
            index_period,
            group_size,
        }
    }

    fn multiset(&self) -> BTreeMap<(bool, (usize, usize), usize), usize> {
        let mut out = BTreeMap::new();
        for x in 0..self.idempotent.len() {
            *out.entry((self.idempotent[x], self.index_period[x], self.group_size[x]))
                .or_insert(0) += 1;
        }
        out
    }
}

struct Search<'a> {
    s: &'a FiniteSemigroup,
    t: &'a FiniteSemigroup,
    injective: bool,
    order: Vec<usize>,
    allowed: Vec<Vec<bool>>,
    candidates: Vec<Vec<usize>>,
    map: Vec<usize>,
    preimage: Vec<usize>,
    trail: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

impl<'a> Search<'a> {
    fn new(s: &'a FiniteSemigroup, t: &'a FiniteSemigroup, kind: Kind, budget: SearchBudget) -> Self {
        let (si, ti) = (Invariants::of(s), Invariants::of(t));
        let compatible = |x: usize, y: usize| -> bool {
            if si.idempotent[x] && !ti.idempotent[y] {
                return false;
            }
            let (ix, px) = si.index_period[x];
            let (iy, py) = ti.index_period[y];
            match kind {
                Kind::Homomorphism => iy <= ix && px % py == 0,
                Kind::Embedding => {
                    ti.idempotent[y] == si.idempotent[x]
                        && (ix, px) == (iy, py)
                        && (!si.idempotent[x] || ti.group_size[y] % si.group_size[x] == 0)
                }
                Kind::Isomorphism => {
                    ti.idempotent[y] == si.idempotent[x] && (ix, px) == (iy, py) && si.group_size[x] == ti.group_size[y]
                }
            }
        };
        let allowed: Vec<Vec<bool>> = s
            .elements()
            .map(|x| t.elements().map(|y| compatible(x, y)).collect())
            .collect();
        let candidates = allowed
            .iter()
            .map(|row| (0..row.len()).filter(|&y| row[y]).collect())
            .collect();
        let mut order: Vec<usize> = s.elements().filter(|&x| si.idempotent[x]).collect();
        order.extend(s.elements().filter(|&x| !si.idempotent[x]));
        Search {
            s,
            t,
            injective: kind != Kind::Homomorphism,
            order,
            allowed,
            candidates,
            map: vec![NONE; s.len()],
            preimage: vec![NONE; t.len()],
            trail: Vec::with_capacity(s.len()),
            nodes: 0,
            max_nodes: budget.max_nodes,
        }
    }

    /// Assigns `x -> y` and every image it forces. Returns false on a
    /// contradiction, leaving partial assignments on the trail for `undo`.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            let current = self.map[x];
            if current != NONE {
                if current != y {
                    return false;
                }
                continue;
            }
            if !self.allowed[x][y] {
                return false;
            }
            if self.injective {
                if self.preimage[y] != NONE {
                    return false;
                }
                self.preimage[y] = x;
            }
            self.map[x] = y;
            self.trail.push(x);
            for i in 0..self.trail.len() {
                let z = self.trail[i];
                let w = self.map[z];
                for (a, b, ia, ib) in [(x, z, y, w), (z, x, w, y)] {
                    let p = self.s.mul(a, b);
                    let q = self.t.mul(ia, ib);
                    match self.map[p] {
                        NONE => queue.push((p, q)),
                        cur if cur != q => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("non-empty trail");
            if self.injective {
                self.preimage[self.map[x]] = NONE;
            }
            self.map[x] = NONE;
        }
    }

    fn descend(&mut self, on_found: &mut dyn FnMut(&[usize]) -> bool) -> Flow {
        let Some(&x) = self.order.iter().find(|&&x| self.map[x] == NONE) else {
            return if on_found(&self.map) {
                Flow::Stop
            } else {
                Flow::Continue
            };
        };
        for k in 0..self.candidates[x].len() {
            let y = self.candidates[x][k];
            if self.injective && self.preimage[y] != NONE {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Flow::Budget;
            }
            let mark = self.trail.len();
            if self.assign(x, y) {
                match self.descend(on_found) {
                    Flow::Continue => {}
                    flow => {
                        self.undo(mark);
                        return flow;
                    }
                }
            }
            self.undo(mark);
        }
        Flow::Continue
    }
}

fn checked(s: &FiniteSemigroup, t: &FiniteSemigroup, map: &[usize], kind: Kind) -> Result<Morphism> {
    let m = Morphism::new(s, t, map.to_vec())?;
    let ok = match kind {
        Kind::Homomorphism => m.is_homomorphism(),
        Kind::Embedding => m.is_embedding(),
        Kind::Isomorphism => m.is_isomorphism(),
    };
    if !ok {
        return Err(Error::InvalidEmbedding(format!(
            "search produced a map that fails independent verification: {map:?}"
        )));
    }
    Ok(m)
}

fn first(s: &FiniteSemigroup, t: &FiniteSemigroup, kind: Kind, budget: SearchBudget) -> Result<SearchOutcome> {
    let mut search = Search::new(s, t, kind, budget);
    let mut result = None;
    let flow = search.descend(&mut |map| {
        result = Some(map.to_vec());
        true
    });
    match (flow, result) {
        (_, Some(map)) => Ok(SearchOutcome::Found(checked(s, t, &map, kind)?)),
        (Flow::Budget, None) => Ok(SearchOutcome::NoneBudget),
        _ => Ok(SearchOutcome::NoneExhaustive),
    }
}

/// An injective homomorphism `S -> T`, if one exists within the budget.
pub fn find_embedding(s: &FiniteSemigroup, t: &FiniteSemigroup, budget: SearchBudget) -> Result<SearchOutcome> {
    if s.len() > t.len() {
        return Ok(SearchOutcome::NoneExhaustive);
    }
    first(s, t, Kind::Embedding, budget)
}

/// An isomorphism `S -> T` under the default budget.
pub fn is_isomorphic(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Result<SearchOutcome> {
    is_isomorphic_within(s, t, SearchBudget::default())
}

pub fn is_isomorphic_within(s: &FiniteSemigroup, t: &FiniteSemigroup, budget: SearchBudget) -> Result<SearchOutcome> {
    if s.len() != t.len() || Invariants::of(s).multiset() != Invariants::of(t).multiset() {
        return Ok(SearchOutcome::NoneExhaustive);
    }
    first(s, t, Kind::Isomorphism, budget)
}

/// Up to `cap` homomorphisms `S -> T` in search order.
pub fn enumerate_homomorphisms(s: &FiniteSemigroup, t: &FiniteSemigroup, cap: usize) -> Result<Homomorphisms> {
    let mut search = Search::new(s, t, Kind::Homomorphism, SearchBudget::unlimited());
    let mut maps = Vec::new();
    let mut truncated = false;
    search.descend(&mut |map| {
        if maps.len() == cap {
            truncated = true;
            return true;
        }
        maps.push(map.to_vec());
        false
    });
    let morphisms = maps
        .iter()
        .map(|m| checked(s, t, m, Kind::Homomorphism))
        .collect::<Result<Vec<_>>>()?;
    Ok(Homomorphisms { morphisms, truncated })
}

/// Every isomorphism `S -> T`; fails if the budget runs out.
pub fn enumerate_isomorphisms(s: &FiniteSemigroup, t: &FiniteSemigroup, budget: SearchBudget) -> Result<Vec<Morphism>> {
    if s.len() != t.len() || Invariants::of(s).multiset() != Invariants::of(t).multiset() {
        return Ok(Vec::new());
    }
    let mut search = Search::new(s, t, Kind::Isomorphism, budget);
    let mut maps = Vec::new();
    let flow = search.descend(&mut |map| {
        maps.push(map.to_vec());
        false
    });
    if flow == Flow::Budget {
        return Err(Error::CapExceeded {
            what: "isomorphism search nodes",
            size: budget.max_nodes as u128 + 1,
            cap: budget.max_nodes as u128,
        });
    }
    maps.iter().map(|m| checked(s, t, m, Kind::Isomorphism)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::hyperspace::PowerSemigroup;
    use crate::morphism::homomorphism_witness;

    /// All maps `S -> T`, filtered by the homomorphism property.
    fn brute_force_homs(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Vec<Vec<usize>> {
        let (n, m) = (s.len(), t.len());
        let mut out = Vec::new();
        let total = (m as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let map: Vec<usize> = (0..n)
                .map(|_| {
                    let d = (c % m as u64) as usize;
                    c /= m as u64;
                    d
                })
                .collect();
            if homomorphism_witness(s, t, &map).is_none() {
                out.push(map);
            }
        }
        out.sort();
        out
    }

    fn search_homs(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = enumerate_homomorphisms(s, t, usize::MAX)
            .unwrap()
            .morphisms
            .into_iter()
            .map(|m| m.map().to_vec())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn homomorphism_counts() {
        let z1_zero = catalog::z1_zero();
        assert_eq!(search_homs(&catalog::two_chain(), &z1_zero).len(), 3);
        let (z2, z3) = (catalog::cyclic(2), catalog::cyclic(3));
        assert_eq!(search_homs(z2.semigroup(), z3.semigroup()), vec![vec![0, 0]]);
        let trivial = catalog::cyclic(1);
        assert_eq!(search_homs(&catalog::e3(), trivial.semigroup()).len(), 1);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let sems = [
            catalog::two_chain(),
            catalog::e3(),
            catalog::z2_zero(),
            catalog::cyclic(3).into_semigroup(),
            catalog::brandt_z1_2(),
        ];
        for s in &sems {
            for t in &sems {
                if t.len().pow(s.len() as u32) > 200_000 {
                    continue;
                }
                assert_eq!(search_homs(s, t), brute_force_homs(s, t));
            }
        }
    }

    #[test]
    fn cap_truncates() {
        let r = enumerate_homomorphisms(&catalog::two_chain(), &catalog::z1_zero(), 2).unwrap();
        assert_eq!(r.morphisms.len(), 2);
        assert!(r.truncated);
    }

    #[test]
    fn chain_into_exp_z2() {
        let p = PowerSemigroup::new(&catalog::cyclic(2)).unwrap();
        let m = find_embedding(&catalog::two_chain(), p.semigroup(), SearchBudget::default()).unwrap();
        // f -> {0,1}, e -> {0}
        assert_eq!(m.found().unwrap().map(), &[2, 0]);
    }

    #[test]
    fn brandt_does_not_embed_in_small_power_semigroups() {
        let b = catalog::brandt_z1_2();
        for n in [2, 4] {
            let p = PowerSemigroup::new(&catalog::cyclic(n)).unwrap();
            assert_eq!(
                find_embedding(&b, p.semigroup(), SearchBudget::default()).unwrap(),
                SearchOutcome::NoneExhaustive
            );
        }
    }

    #[test]
    fn budget_is_reported() {
        let p = PowerSemigroup::new(&catalog::cyclic(4)).unwrap();
        let out = find_embedding(&catalog::brandt_z1_2(), p.semigroup(), SearchBudget::nodes(1)).unwrap();
        assert_eq!(out, SearchOutcome::NoneBudget);
    }

    #[test]
    fn isomorphism_checks() {
        let z4 = catalog::cyclic(4);
        let klein = catalog::klein();
        assert_eq!(
            is_isomorphic(z4.semigroup(), klein.semigroup()).unwrap(),
            SearchOutcome::NoneExhaustive
        );
        for s in catalog::named_semigroups() {
            let m = is_isomorphic(&s.1, &s.1).unwrap();
            let identity: Vec<usize> = s.1.elements().collect();
            assert_eq!(m.found().unwrap().map(), identity.as_slice(), "{}", s.0);
        }
    }

    #[test]
    fn automorphism_counts() {
        let count = |s: &FiniteSemigroup| enumerate_isomorphisms(s, s, SearchBudget::default()).unwrap().len();
        assert_eq!(count(&catalog::e3()), 2);
        assert_eq!(count(catalog::symmetric3().semigroup()), 6);
        assert_eq!(count(catalog::cyclic(5).semigroup()), 4);
        assert_eq!(count(&catalog::brandt_z1_2()), 2);
    }
}
