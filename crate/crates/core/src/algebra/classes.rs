//! Exhaustive decision procedures for the standard semigroup classes.

use crate::error::{Error, Result};
use crate::subset::Subset;

use super::FiniteSemigroup;

/// Which classical semigroup classes a table belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ClassFlags {
    pub commutative: bool,
    pub group: bool,
    pub semilattice: bool,
    pub regular: bool,
    pub inverse: bool,
    pub clifford: bool,
}

impl ClassFlags {
    pub fn clifford_inverse(&self) -> bool {
        self.clifford && self.inverse
    }
}

impl std::fmt::Display for ClassFlags {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        write!(
            f,
            "commutative={} group={} semilattice={} regular={} inverse={} clifford={}",
            yn(self.commutative),
            yn(self.group),
            yn(self.semilattice),
            yn(self.regular),
            yn(self.inverse),
            yn(self.clifford)
        )
    }
}

/// Idempotents with the natural order `e <= f` iff `e*f = e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentPoset {
    idempotents: Vec<usize>,
    position: Vec<Option<usize>>,
    /// `products[i][j]` is the product of the i-th and j-th idempotents.
    products: Vec<Vec<usize>>,
}

impl IdempotentPoset {
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn contains(&self, e: usize) -> bool {
        self.position.get(e).is_some_and(Option::is_some)
    }

    fn pos(&self, e: usize) -> usize {
        self.position
            .get(e)
            .copied()
            .flatten()
            .unwrap_or_else(|| panic!("{e} is not an idempotent"))
    }

    /// Product `e*f` of two idempotents, as an element of the semigroup.
    pub fn product(&self, e: usize, f: usize) -> usize {
        self.products[self.pos(e)][self.pos(f)]
    }

    pub fn leq(&self, e: usize, f: usize) -> bool {
        self.product(e, f) == e
    }

    /// The principal filter `{f : e*f = e}`, ascending.
    pub fn up(&self, e: usize) -> Vec<usize> {
        self.idempotents.iter().copied().filter(|&f| self.leq(e, f)).collect()
    }

    /// True iff `e*f` is neither `e` nor `f`.
    pub fn incomparable(&self, e: usize, f: usize) -> bool {
        let p = self.product(e, f);
        p != e && p != f
    }

    /// All strict relations `e < f`, in ascending order of `(e, f)`.
    pub fn strict_relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &e in &self.idempotents {
            for &f in &self.idempotents {
                if e != f && self.leq(e, f) {
                    out.push((e, f));
                }
            }
        }
        out
    }
}

impl FiniteSemigroup {
    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.len()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Two-sided identity, if any.
    pub fn identity(&self) -> Option<usize> {
        self.elements()
            .find(|&e| self.elements().all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// The idempotents `e`, `f` (least first) that fail to commute, if any.
    pub fn non_commuting_idempotents(&self) -> Option<(usize, usize)> {
        let idem = self.idempotents();
        for (i, &e) in idem.iter().enumerate() {
            for &f in &idem[i + 1..] {
                if self.mul(e, f) != self.mul(f, e) {
                    return Some((e, f));
                }
            }
        }
        None
    }

    /// All `y` with `x*y*x = x`.
    pub fn regular_witnesses(&self, x: usize) -> Vec<usize> {
        self.elements().filter(|&y| self.mul(self.mul(x, y), x) == x).collect()
    }

    /// All `y` with `x*y*x = x` and `y*x*y = y`.
    pub fn inverses(&self, x: usize) -> Vec<usize> {
        self.elements()
            .filter(|&y| self.mul(self.mul(x, y), x) == x && self.mul(self.mul(y, x), y) == y)
            .collect()
    }

    /// The unique inverse of `x`. Fails with all candidate inverses when there
    /// is not exactly one (none for non-regular `x`, several in a
    /// non-inverse semigroup).
    pub fn inverse_of(&self, x: usize) -> Result<usize> {
        self.check_element(x)?;
        let inv = self.inverses(x);
        match inv.as_slice() {
            [y] => Ok(*y),
            _ => Err(Error::NotInverse {
                element: x,
                witnesses: inv.into_iter().take(2).collect(),
            }),
        }
    }

    /// Inverse of every element, when every element has exactly one.
    pub fn inverse_table(&self) -> Result<Vec<usize>> {
        self.elements().map(|x| self.inverse_of(x)).collect()
    }

    /// Index and period of the cyclic subsemigroup generated by `x`: the
    /// powers are `x, x^2, ..., x^(index+period-1)` and then repeat with
    /// `x^(index+period) = x^index`.
    pub fn index_period(&self, x: usize) -> (usize, usize) {
        let mut seen = vec![usize::MAX; self.len()];
        let mut p = x;
        let mut k = 1;
        while seen[p] == usize::MAX {
            seen[p] = k;
            p = self.mul(p, x);
            k += 1;
        }
        (seen[p], k - seen[p])
    }

    /// The unique idempotent power of `x`.
    pub fn idempotent_power(&self, x: usize) -> usize {
        let mut p = x;
        while !self.is_idempotent(p) {
            p = self.mul(p, x);
        }
        p
    }

    /// The maximal subgroup at an idempotent `e`: all `x` with `x*e = e*x = x`
    /// that have a `y` with `x*y = y*x = e`.
    pub fn maximal_subgroup(&self, e: usize) -> Result<Subset> {
        self.check_element(e)?;
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent(e));
        }
        let members = self.elements().filter(|&x| {
            self.mul(x, e) == x
                && self.mul(e, x) == x
                && self.elements().any(|y| self.mul(x, y) == e && self.mul(y, x) == e)
        });
        Subset::from_indices(self.len(), members)
    }

    pub fn idempotent_poset(&self) -> IdempotentPoset {
        let idempotents = self.idempotents();
        let mut position = vec![None; self.len()];
        for (i, &e) in idempotents.iter().enumerate() {
            position[e] = Some(i);
        }
        let products = idempotents
            .iter()
            .map(|&e| idempotents.iter().map(|&f| self.mul(e, f)).collect())
            .collect();
        IdempotentPoset {
            idempotents,
            position,
            products,
        }
    }

    fn is_group_by_facts(&self) -> bool {
        match self.identity() {
            Some(e) => self
                .elements()
                .all(|x| self.elements().any(|y| self.mul(x, y) == e && self.mul(y, x) == e)),
            None => false,
        }
    }

    /// Every element lies in a subgroup: `x` belongs to the maximal subgroup
    /// at its idempotent power.
    pub fn is_clifford(&self) -> bool {
        self.elements().all(|x| {
            let e = self.idempotent_power(x);
            self.maximal_subgroup(e).map(|h| h.contains(x)).unwrap_or(false)
        })
    }

    pub fn class_flags(&self) -> ClassFlags {
        let commutative = self.is_commutative();
        let all_idempotent = self.elements().all(|x| self.is_idempotent(x));
        let regular = self
            .elements()
            .all(|x| self.elements().any(|y| self.mul(self.mul(x, y), x) == x));
        let inverse = regular && self.non_commuting_idempotents().is_none();
        ClassFlags {
            commutative,
            group: self.is_group_by_facts(),
            semilattice: commutative && all_idempotent,
            regular,
            inverse,
            clifford: self.is_clifford(),
        }
    }

    /// For an inverse semigroup: whether `x*x^-1 = x^-1*x` for all `x`.
    pub fn inverses_commute(&self) -> Result<bool> {
        let inv = self.inverse_table()?;
        Ok(self.elements().all(|x| self.mul(x, inv[x]) == self.mul(inv[x], x)))
    }

    /// Whether some `z` gives `x = z*y*z^-1` and `y = z^-1*x*z`.
    pub fn conjugated(&self, x: usize, y: usize) -> Result<bool> {
        Ok(self.conjugator(x, y)?.is_some())
    }

    /// The least `z` conjugating `y` to `x`, if any. Requires an inverse semigroup.
    pub fn conjugator(&self, x: usize, y: usize) -> Result<Option<usize>> {
        self.check_element(x)?;
        self.check_element(y)?;
        let inv = self.inverse_table()?;
        Ok(self
            .elements()
            .find(|&z| self.mul(self.mul(z, y), inv[z]) == x && self.mul(self.mul(inv[z], x), z) == y))
    }
}
