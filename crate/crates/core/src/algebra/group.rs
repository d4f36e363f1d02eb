use crate::error::{Error, Result};
use crate::subset::Subset;

use super::{FiniteSemigroup, Operation};

/// Identity and inverses of a semigroup that is a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFacts {
    pub identity: usize,
    pub inverse: Vec<usize>,
}

/// A finite semigroup known to be a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    table: FiniteSemigroup,
    facts: GroupFacts,
}

impl Group {
    pub fn new(table: FiniteSemigroup) -> Result<Self> {
        let identity = table
            .identity()
            .ok_or_else(|| Error::NotGroup("no identity element".into()))?;
        let inverse = table
            .elements()
            .map(|x| {
                table
                    .elements()
                    .find(|&y| table.mul(x, y) == identity && table.mul(y, x) == identity)
                    .ok_or_else(|| Error::NotGroup(format!("element {x} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Group {
            table,
            facts: GroupFacts { identity, inverse },
        })
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.table
    }

    pub fn into_semigroup(self) -> FiniteSemigroup {
        self.table
    }

    pub fn facts(&self) -> &GroupFacts {
        &self.facts
    }

    pub fn identity(&self) -> usize {
        self.facts.identity
    }

    pub fn inv(&self, x: usize) -> usize {
        self.facts.inverse[x]
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.mul(a, b)
    }

    pub fn label(&self, x: usize) -> String {
        self.table.label(x)
    }

    /// The least non-commuting pair, if any.
    pub fn non_commuting_pair(&self) -> Option<(usize, usize)> {
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if self.mul(a, b) != self.mul(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_abelian(&self) -> bool {
        self.non_commuting_pair().is_none()
    }

    /// Whether `h` is closed under multiplication (hence a subgroup, since the
    /// group is finite).
    pub fn is_subgroup(&self, h: &Subset) -> bool {
        h.ground_len() == self.len() && h.iter().all(|a| h.iter().all(|b| h.contains(self.mul(a, b))))
    }

    /// The subgroup generated by `gens` (closure under multiplication).
    pub fn generated(&self, gens: &Subset) -> Subset {
        let mut members = gens.clone();
        let mut frontier: Vec<usize> = gens.to_vec();
        let gens: Vec<usize> = gens.to_vec();
        while let Some(a) = frontier.pop() {
            for &g in &gens {
                let p = self.mul(a, g);
                if !members.contains(p) {
                    members.insert(p);
                    frontier.push(p);
                }
            }
        }
        members
    }

    /// Re-indexes the subgroup `h` as a group in its own right.
    pub fn subgroup(&self, h: &Subset) -> Result<(Group, Vec<usize>)> {
        let (table, old) = self.table.restrict(h)?;
        Ok((Group::new(table)?, old))
    }
}

impl Operation for Group {
    fn order(&self) -> usize {
        self.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table.mul(a, b)
    }
}

impl TryFrom<FiniteSemigroup> for Group {
    type Error = Error;

    fn try_from(s: FiniteSemigroup) -> Result<Self> {
        Group::new(s)
    }
}
