use crate::error::{Error, Result};
use crate::subset::Subset;

use super::Operation;

/// A finite semigroup on the elements `0..n`, given by its Cayley table.
///
/// Construction through [`FiniteSemigroup::new`] or [`FiniteSemigroup::from_fn`]
/// checks closure and all `n^3` associativity triples, so a value of this type
/// is always a semigroup.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteSemigroup {
    n: usize,
    table: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl FiniteSemigroup {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Syntax {
                    line: r + 1,
                    column: 1,
                    message: format!("row {r} has {} entries, expected {n}", row.len()),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::OutOfRange {
                        row: r,
                        column: c,
                        value: v,
                        n,
                    });
                }
                table.push(v as u32);
            }
        }
        let s = FiniteSemigroup { n, table, labels: None };
        s.check_associativity()?;
        Ok(s)
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut rows = vec![vec![0; n]; n];
        for (a, row) in rows.iter_mut().enumerate() {
            for (b, v) in row.iter_mut().enumerate() {
                *v = f(a, b);
            }
        }
        FiniteSemigroup::new(rows)
    }

    /// Builds a table whose associativity follows from how it was built
    /// (products, power semigroups). Closure is still asserted.
    pub(crate) fn from_fn_trusted(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        assert!(n > 0);
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let v = f(a, b);
                assert!(v < n, "product {a}*{b} = {v} outside 0..{n}");
                table.push(v as u32);
            }
        }
        FiniteSemigroup { n, table, labels: None }
    }

    /// Attaches display names. Names must be non-empty and whitespace-free.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Syntax {
                line: 0,
                column: 0,
                message: format!("{} names for {} elements", labels.len(), self.n),
            });
        }
        if let Some(bad) = labels
            .iter()
            .find(|l| l.is_empty() || l.chars().any(char::is_whitespace))
        {
            return Err(Error::Syntax {
                line: 0,
                column: 0,
                message: format!("element name {bad:?} is empty or contains whitespace"),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.table[a * self.n..(a + 1) * self.n].iter().map(|&v| v as usize)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label, or its index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x >= self.n {
            return Err(Error::ElementOutOfRange { element: x, n: self.n });
        }
        Ok(())
    }

    /// Checks every triple; the reported witness is the lexicographically
    /// least failing `(i, j, k)`.
    pub fn check_associativity(&self) -> Result<()> {
        for i in 0..self.n {
            for j in 0..self.n {
                let ij = self.mul(i, j);
                for k in 0..self.n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// The subsemigroup on `elements`, re-indexed in ascending order. Returns
    /// the restricted table and the map from new to old indices.
    pub fn restrict(&self, elements: &Subset) -> Result<(FiniteSemigroup, Vec<usize>)> {
        if elements.ground_len() != self.n {
            return Err(Error::GroundMismatch {
                left: self.n,
                right: elements.ground_len(),
            });
        }
        let old: Vec<usize> = elements.to_vec();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &x) in old.iter().enumerate() {
            new_index[x] = i;
        }
        for &a in &old {
            for &b in &old {
                if !elements.contains(self.mul(a, b)) {
                    return Err(Error::NotClosed { a, b });
                }
            }
        }
        let sub = FiniteSemigroup::from_fn_trusted(old.len(), |a, b| new_index[self.mul(old[a], old[b])]);
        let sub = match &self.labels {
            Some(l) => sub.with_labels(old.iter().map(|&x| l[x].clone()).collect())?,
            None => sub,
        };
        Ok((sub, old))
    }

    /// Same table with elements renamed by the permutation `perm` (old index
    /// `x` becomes `perm[x]`).
    pub fn permuted(&self, perm: &[usize]) -> Result<FiniteSemigroup> {
        let mut inv = vec![usize::MAX; self.n];
        for (x, &p) in perm.iter().enumerate() {
            if p >= self.n || inv[p] != usize::MAX {
                return Err(Error::InvalidEmbedding(format!(
                    "{perm:?} is not a permutation of 0..{}",
                    self.n
                )));
            }
            inv[p] = x;
        }
        let out = FiniteSemigroup::from_fn_trusted(self.n, |a, b| perm[self.mul(inv[a], inv[b])]);
        match &self.labels {
            Some(l) => out.with_labels(inv.iter().map(|&x| l[x].clone()).collect()),
            None => Ok(out),
        }
    }
}

impl Operation for FiniteSemigroup {
    fn order(&self) -> usize {
        self.n
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        FiniteSemigroup::mul(self, a, b)
    }
}
