use crate::algebra::FiniteSemigroup;
use crate::error::{Error, Result};

/// A map between two finite semigroups with its flags computed eagerly.
/// The semigroups themselves are not stored; `map[x]` is the image of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    map: Vec<usize>,
    homomorphism: bool,
    injective: bool,
    surjective: bool,
}

/// Least pair `(x, y)` with `map[xy] != map[x] map[y]`.
pub fn homomorphism_witness(
    source: &FiniteSemigroup,
    target: &FiniteSemigroup,
    map: &[usize],
) -> Option<(usize, usize)> {
    for x in source.elements() {
        for y in source.elements() {
            if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Least pair `x < y` with the same image.
pub fn injectivity_witness<T: Ord>(map: &[T]) -> Option<(usize, usize)> {
    let mut first = std::collections::BTreeMap::new();
    let mut best: Option<(usize, usize)> = None;
    for (y, img) in map.iter().enumerate() {
        if let Some(&x) = first.get(img) {
            if best.is_none_or(|b| (x, y) < b) {
                best = Some((x, y));
            }
        } else {
            first.insert(img, y);
        }
    }
    best
}

impl Morphism {
    pub fn new(source: &FiniteSemigroup, target: &FiniteSemigroup, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() {
            return Err(Error::InvalidEmbedding(format!(
                "map has {} entries for a source of {} elements",
                map.len(),
                source.len()
            )));
        }
        for &y in &map {
            target.check_element(y)?;
        }
        let homomorphism = homomorphism_witness(source, target, &map).is_none();
        let injective = injectivity_witness(&map).is_none();
        let mut hit = vec![false; target.len()];
        for &y in &map {
            hit[y] = true;
        }
        let surjective = hit.into_iter().all(|h| h);
        Ok(Morphism {
            map,
            homomorphism,
            injective,
            surjective,
        })
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_homomorphism(&self) -> bool {
        self.homomorphism
    }

    pub fn is_injective(&self) -> bool {
        self.injective
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn is_embedding(&self) -> bool {
        self.homomorphism && self.injective
    }

    pub fn is_isomorphism(&self) -> bool {
        self.homomorphism && self.injective && self.surjective
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn flags() {
        let z2 = catalog::cyclic(2);
        let z4 = catalog::cyclic(4);
        let m = Morphism::new(z2.semigroup(), z4.semigroup(), vec![0, 2]).unwrap();
        assert!(m.is_embedding() && !m.is_surjective());
        let bad = Morphism::new(z2.semigroup(), z4.semigroup(), vec![0, 1]).unwrap();
        assert!(!bad.is_homomorphism() && bad.is_injective());
        assert_eq!(
            homomorphism_witness(z2.semigroup(), z4.semigroup(), &[0, 1]),
            Some((1, 1))
        );
        assert!(Morphism::new(z2.semigroup(), z4.semigroup(), vec![0]).is_err());
        assert!(Morphism::new(z2.semigroup(), z4.semigroup(), vec![0, 4]).is_err());
    }

    #[test]
    fn injectivity_witness_is_least() {
        assert_eq!(injectivity_witness(&[3, 1, 1, 3]), Some((0, 3)));
        assert_eq!(injectivity_witness(&[2, 1, 1, 2]), Some((0, 3)));
        assert_eq!(injectivity_witness(&[0, 1, 2]), None);
    }
}
