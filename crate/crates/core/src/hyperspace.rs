//! The power semigroup `exp(G)` of a finite group: all non-empty subsets of
//! `G` under `AB = {ab : a in A, b in B}`, and the coset description of its
//! idempotents, regular elements and group elements.

use crate::algebra::{FiniteSemigroup, Group, Operation};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Setwise product `AB` in any operation.
pub fn subset_product<G: Operation + ?Sized>(group: &G, a: &Subset, b: &Subset) -> Result<Subset> {
    let n = group.order();
    for s in [a, b] {
        if s.ground_len() != n {
            return Err(Error::GroundMismatch {
                left: n,
                right: s.ground_len(),
            });
        }
    }
    let mut out = Subset::empty(n);
    for x in a.iter() {
        for y in b.iter() {
            out.insert(group.mul(x, y));
        }
    }
    Ok(out)
}

/// Setwise product in a group, short-circuiting when `|A| + |B| > |G|`
/// (then every `g` is some `ab`).
pub fn group_subset_product<G: Operation + ?Sized>(group: &G, a: &Subset, b: &Subset) -> Result<Subset> {
    if a.ground_len() == group.order() && b.ground_len() == group.order() && a.count() + b.count() > group.order() {
        return Subset::full(group.order());
    }
    subset_product(group, a, b)
}

/// `exp(G)` as a finite semigroup. Subset with bit pattern `m` has index `m - 1`.
#[derive(Clone, Debug)]
pub struct PowerSemigroup {
    base: Group,
    sem: FiniteSemigroup,
}

impl PowerSemigroup {
    /// Builds `exp(G)` when `2^|G| - 1` fits under the table cap, i.e. up to
    /// `|G| = 12` by default.
    pub fn new(group: &Group) -> Result<Self> {
        let cap = crate::limits::max_table() as u128;
        let max_order = (1..=20).take_while(|&k| (1u128 << k) - 1 <= cap).last().unwrap_or(1);
        PowerSemigroup::with_max_order(group, max_order)
    }

    /// Builds the full table; fails if `|G| > max_order`. Orders above 20 are
    /// never tabulated.
    pub fn with_max_order(group: &Group, max_order: usize) -> Result<Self> {
        let n = group.len();
        if n > max_order.min(20) {
            return Err(Error::CapExceeded {
                what: "power semigroup (use subset_product for on-demand products)",
                size: (1u128 << n.min(127)) - 1,
                cap: (1u128 << max_order.min(20)) - 1,
            });
        }
        let full = (1usize << n) - 1;
        // left[a][m] = a * (subset with mask m)
        let mut left = vec![vec![0u64; full + 1]; n];
        for (a, row) in left.iter_mut().enumerate() {
            for m in 1..=full {
                let low = m.trailing_zeros() as usize;
                row[m] = row[m & (m - 1)] | 1 << group.mul(a, low);
            }
        }
        let sem = FiniteSemigroup::from_fn_trusted(full, |i, j| {
            let (ma, mb) = (i + 1, j + 1);
            let mut out = 0u64;
            let mut rest = ma;
            while rest != 0 {
                let a = rest.trailing_zeros() as usize;
                out |= left[a][mb];
                rest &= rest - 1;
            }
            out as usize - 1
        });
        let labels = (1..=full)
            .map(|m| Subset::from_mask(n, m as u64).expect("non-empty").to_string())
            .collect();
        Ok(PowerSemigroup {
            base: group.clone(),
            sem: sem.with_labels(labels)?,
        })
    }

    pub fn base(&self) -> &Group {
        &self.base
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.sem
    }

    pub fn len(&self) -> usize {
        self.sem.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index_of(&self, k: &Subset) -> Result<usize> {
        if k.ground_len() != self.base.len() {
            return Err(Error::GroundMismatch {
                left: self.base.len(),
                right: k.ground_len(),
            });
        }
        Ok(k.mask().expect("order <= 20") as usize - 1)
    }

    pub fn subset(&self, index: usize) -> Subset {
        Subset::from_mask(self.base.len(), index as u64 + 1).expect("index in range")
    }

    pub fn subsets(&self) -> impl Iterator<Item = Subset> + '_ {
        (0..self.len()).map(|i| self.subset(i))
    }

    /// Singleton embedding `g -> {g}` as a list of indices.
    pub fn singletons(&self) -> Vec<usize> {
        (0..self.base.len()).map(|g| (1usize << g) - 1).collect()
    }
}

/// Every subgroup, in canonical subset order. Subgroups are generated as
/// joins, starting from the cyclic ones, until no new subgroup appears.
pub fn subgroups(group: &Group) -> Vec<Subset> {
    let n = group.len();
    let mut found: std::collections::BTreeSet<Subset> = (0..n)
        .map(|g| group.generated(&Subset::singleton(n, g).expect("in range")))
        .collect();
    let mut frontier: Vec<Subset> = found.iter().cloned().collect();
    let cyclic = frontier.clone();
    while let Some(h) = frontier.pop() {
        for c in &cyclic {
            if c.is_subset_of(&h) {
                continue;
            }
            let mut gens = h.clone();
            gens.union_with(c);
            let joined = group.generated(&gens);
            if found.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    found.into_iter().collect()
}

/// How a subset `K` of a group sits in `exp(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetClassification {
    /// `KK = K`, equivalently `K` is a subgroup.
    pub is_idempotent: bool,
    /// `(H, x)` with `K = Hx`, when `K` is a right coset. `x` is the identity
    /// when it lies in `K`, otherwise the least element of `K`.
    pub coset: Option<(Subset, usize)>,
    /// `K = Hx = xH`.
    pub is_group_element: bool,
    /// `x^-1 H`, the unique inverse of a coset in `exp(G)`.
    pub unique_inverse: Option<Subset>,
}

impl SubsetClassification {
    pub fn is_regular(&self) -> bool {
        self.coset.is_some()
    }
}

/// Coset classification of `K`. `K` is a right coset `Hx` exactly when
/// `H = K K^-1 = {a b^-1}` is a subgroup of the same size as `K`.
pub fn classify_subset(group: &Group, k: &Subset) -> Result<SubsetClassification> {
    let n = group.len();
    if k.ground_len() != n {
        return Err(Error::GroundMismatch {
            left: n,
            right: k.ground_len(),
        });
    }
    let is_idempotent = subset_product(group, k, k)? == *k;

    let mut quotient = Subset::empty(n);
    for a in k.iter() {
        for b in k.iter() {
            quotient.insert(group.mul(a, group.inv(b)));
        }
    }
    let coset = if quotient.count() == k.count() && group.is_subgroup(&quotient) {
        let x = if k.contains(group.identity()) {
            group.identity()
        } else {
            k.first()
        };
        let hx = quotient.map(n, |h| group.mul(h, x))?;
        debug_assert_eq!(&hx, k);
        Some((quotient, x))
    } else {
        None
    };

    let (is_group_element, unique_inverse) = match &coset {
        Some((h, x)) => {
            let xh = h.map(n, |y| group.mul(*x, y))?;
            let inv = h.map(n, |y| group.mul(group.inv(*x), y))?;
            (xh == *k, Some(inv))
        }
        None => (false, None),
    };
    Ok(SubsetClassification {
        is_idempotent,
        coset,
        is_group_element,
        unique_inverse,
    })
}

/// Whether `KAK = K` for some non-empty `A`, by scanning all of `exp(G)`.
pub fn regular_oracle(p: &PowerSemigroup, k: &Subset) -> Result<bool> {
    let ki = p.index_of(k)?;
    let s = p.semigroup();
    Ok(s.elements().any(|a| s.mul(s.mul(ki, a), ki) == ki))
}

/// The union of a family of subsets, checked to be closed under the
/// operation. For subsets of a finite group closure makes it a subgroup, and
/// every member lies in its power semigroup.
pub fn union_tighten<G: Operation + ?Sized>(group: &G, images: &[Subset]) -> Result<Subset> {
    let mut union = Subset::empty(group.order());
    for img in images {
        if img.ground_len() != group.order() {
            return Err(Error::GroundMismatch {
                left: group.order(),
                right: img.ground_len(),
            });
        }
        union.union_with(img);
    }
    if union.is_empty() {
        return Err(Error::EmptySubset);
    }
    for a in union.iter() {
        for b in union.iter() {
            if !union.contains(group.mul(a, b)) {
                return Err(Error::NotClosed { a, b });
            }
        }
    }
    Ok(union)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::from_indices(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn products_in_small_groups() {
        let z2 = catalog::cyclic(2);
        assert_eq!(subset_product(&z2, &set(2, &[1]), &set(2, &[1])).unwrap(), set(2, &[0]));
        assert_eq!(
            subset_product(&z2, &set(2, &[0, 1]), &set(2, &[1])).unwrap(),
            set(2, &[0, 1])
        );
        let z4 = catalog::cyclic(4);
        assert_eq!(
            subset_product(&z4, &set(4, &[1, 3]), &set(4, &[1, 3])).unwrap(),
            set(4, &[0, 2])
        );
        assert!(matches!(
            subset_product(&z4, &set(2, &[1]), &set(4, &[1])),
            Err(Error::GroundMismatch { .. })
        ));
    }

    #[test]
    fn shortcut_agrees() {
        let s3 = catalog::symmetric3();
        for a in 1u64..64 {
            for b in 1u64..64 {
                let (a, b) = (Subset::from_mask(6, a).unwrap(), Subset::from_mask(6, b).unwrap());
                assert_eq!(
                    group_subset_product(&s3, &a, &b).unwrap(),
                    subset_product(&s3, &a, &b).unwrap()
                );
            }
        }
    }

    #[test]
    fn power_semigroup_sizes() {
        assert_eq!(PowerSemigroup::new(&catalog::cyclic(2)).unwrap().len(), 3);
        assert_eq!(PowerSemigroup::new(&catalog::cyclic(3)).unwrap().len(), 7);
        assert_eq!(PowerSemigroup::new(&catalog::symmetric3()).unwrap().len(), 63);
        assert!(matches!(
            PowerSemigroup::with_max_order(&catalog::cyclic(5), 4),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn power_table_matches_subset_product() {
        let g = catalog::cyclic(4);
        let p = PowerSemigroup::new(&g).unwrap();
        p.semigroup().check_associativity().unwrap();
        for i in 0..p.len() {
            for j in 0..p.len() {
                let prod = subset_product(&g, &p.subset(i), &p.subset(j)).unwrap();
                assert_eq!(p.index_of(&prod).unwrap(), p.semigroup().mul(i, j));
            }
        }
        assert_eq!(p.semigroup().label(4), "{0,2}");
    }

    #[test]
    fn singletons_form_a_copy_of_g() {
        let g = catalog::symmetric3();
        let p = PowerSemigroup::new(&g).unwrap();
        let s = p.singletons();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(p.semigroup().mul(s[a], s[b]), s[g.mul(a, b)]);
            }
        }
        let c = classify_subset(&g, &p.subset(s[3])).unwrap();
        assert!(c.is_group_element);
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(
            subgroups(&catalog::cyclic(4)),
            vec![set(4, &[0]), set(4, &[0, 2]), set(4, &[0, 1, 2, 3])]
        );
        assert_eq!(subgroups(&catalog::klein()).len(), 5);
        assert_eq!(subgroups(&catalog::symmetric3()).len(), 6);
        assert_eq!(subgroups(&catalog::cyclic(1)).len(), 1);
    }

    #[test]
    fn classify_examples() {
        let z4 = catalog::cyclic(4);
        let c = classify_subset(&z4, &set(4, &[1, 3])).unwrap();
        assert_eq!(c.coset, Some((set(4, &[0, 2]), 1)));
        assert!(c.is_group_element && !c.is_idempotent);
        assert_eq!(c.unique_inverse, Some(set(4, &[1, 3])));

        let z3 = catalog::cyclic(3);
        let c = classify_subset(&z3, &set(3, &[0, 1])).unwrap();
        assert_eq!(c.coset, None);
        assert!(!c.is_group_element && c.unique_inverse.is_none());

        // S3 with id=0, (23)=1, (12)=2, (123)=3, (132)=4, (13)=5.
        let s3 = catalog::symmetric3();
        let h = set(6, &[0, 2]);
        let x = 5;
        let k = h.map(6, |y| s3.mul(y, x)).unwrap();
        let c = classify_subset(&s3, &k).unwrap();
        let (ch, cx) = c.coset.clone().unwrap();
        assert_eq!(ch, h);
        assert_eq!(ch.map(6, |y| s3.mul(y, cx)).unwrap(), k);
        assert!(!c.is_group_element);

        let sub = classify_subset(&s3, &h).unwrap();
        assert!(sub.is_idempotent);
        assert_eq!(sub.coset, Some((h.clone(), s3.identity())));
    }

    #[test]
    fn regular_oracle_examples() {
        let z2 = catalog::cyclic(2);
        let p = PowerSemigroup::new(&z2).unwrap();
        assert!(regular_oracle(&p, &set(2, &[1])).unwrap());
        let z3 = catalog::cyclic(3);
        let p = PowerSemigroup::new(&z3).unwrap();
        assert!(!regular_oracle(&p, &set(3, &[0, 1])).unwrap());
        let z4 = catalog::cyclic(4);
        let p = PowerSemigroup::new(&z4).unwrap();
        assert!(regular_oracle(&p, &set(4, &[1, 3])).unwrap());
    }

    #[test]
    fn exp_z2_poset() {
        let p = PowerSemigroup::new(&catalog::cyclic(2)).unwrap();
        let poset = p.semigroup().idempotent_poset();
        // {0} has index 0, {0,1} has index 2.
        assert_eq!(poset.idempotents(), &[0, 2]);
        assert!(poset.leq(2, 0));
        assert!(!poset.leq(0, 2));
    }

    #[test]
    fn union_tighten_examples() {
        let z2 = catalog::cyclic(2);
        let h = union_tighten(&z2, &[set(2, &[0]), set(2, &[0, 1])]).unwrap();
        assert!(h.is_full());
        let z4 = catalog::cyclic(4);
        assert_eq!(union_tighten(&z4, &[set(4, &[0, 2])]).unwrap(), set(4, &[0, 2]));
        assert!(matches!(
            union_tighten(&z4, &[set(4, &[1])]),
            Err(Error::NotClosed { a: 1, b: 1 })
        ));
    }
}
