//! Non-empty subsets of a finite carrier, stored as bit vectors.
//!
//! Bit `i` stands for element `i`. Subsets compare as the binary integers
//! their bit patterns spell, so `{0} < {1} < {0,1} < {2} < ...`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subset {
    len: usize,
    words: Vec<u64>,
}

impl Subset {
    /// An empty bit buffer; only for building a set that is non-empty
    /// before it escapes the crate.
    pub(crate) fn empty(len: usize) -> Self {
        Subset {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, elements: I) -> Result<Self> {
        let mut s = Subset::empty(len);
        for x in elements {
            if x >= len {
                return Err(Error::ElementOutOfRange { element: x, n: len });
            }
            s.insert(x);
        }
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(s)
    }

    pub fn singleton(len: usize, x: usize) -> Result<Self> {
        Subset::from_indices(len, [x])
    }

    pub fn full(len: usize) -> Result<Self> {
        Subset::from_indices(len, 0..len)
    }

    /// Builds a subset from the low `len` bits of `mask` (`len <= 64`).
    pub fn from_mask(len: usize, mask: u64) -> Result<Self> {
        if len > WORD || (len < WORD && mask >> len != 0) {
            return Err(Error::ElementOutOfRange {
                element: 63 - mask.leading_zeros() as usize,
                n: len,
            });
        }
        if mask == 0 {
            return Err(Error::EmptySubset);
        }
        let mut words = vec![0; len.div_ceil(WORD)];
        words[0] = mask;
        Ok(Subset { len, words })
    }

    /// The bit pattern as an integer, when the carrier has at most 64 elements.
    pub fn mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    /// Size of the carrier this subset lives in.
    pub fn ground_len(&self) -> usize {
        self.len
    }

    pub(crate) fn insert(&mut self, x: usize) {
        self.words[x / WORD] |= 1 << (x % WORD);
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub(crate) fn union_with(&mut self, other: &Subset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.len && self.words[x / WORD] >> (x % WORD) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.len == other.len && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Smallest element.
    pub fn first(&self) -> usize {
        self.iter().next().expect("subsets are non-empty")
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image under an element map into a carrier of size `len`.
    pub fn map(&self, len: usize, f: impl Fn(usize) -> usize) -> Result<Subset> {
        Subset::from_indices(len, self.iter().map(f))
    }

    /// Parses the text form `{i1,i2,...}` with strictly increasing indices.
    pub fn parse(len: usize, text: &str) -> Result<Subset> {
        let syntax = |message: &str| Error::Syntax {
            line: 1,
            column: 1,
            message: format!("{message} in subset {text:?}"),
        };
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| syntax("expected braces"))?;
        let mut elements = Vec::new();
        for part in inner.split(',') {
            let x: usize = part.trim().parse().map_err(|_| syntax("bad index"))?;
            if elements.last().is_some_and(|&last| last >= x) {
                return Err(syntax("indices must increase strictly"));
            }
            elements.push(x);
        }
        Subset::from_indices(len, elements)
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}
