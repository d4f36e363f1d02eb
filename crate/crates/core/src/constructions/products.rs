use crate::algebra::{FiniteSemigroup, Group, Operation};
use crate::error::{Error, Result};
use crate::limits::{check_cap, max_table};
use crate::subset::Subset;

/// Mixed-radix coordinates, rightmost coordinate fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedRadix {
    radices: Vec<usize>,
}

impl MixedRadix {
    pub fn new(radices: Vec<usize>) -> Self {
        MixedRadix { radices }
    }

    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    /// Number of encodable tuples, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        self.radices
            .iter()
            .try_fold(1u128, |acc, &r| acc.checked_mul(r as u128))
            .unwrap_or(u128::MAX)
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        debug_assert_eq!(digits.len(), self.radices.len());
        digits.iter().zip(&self.radices).fold(0, |acc, (&d, &r)| acc * r + d)
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut digits = vec![0; self.radices.len()];
        for (d, &r) in digits.iter_mut().zip(&self.radices).rev() {
            *d = index % r;
            index /= r;
        }
        digits
    }
}

fn tuple_label(parts: &[String]) -> String {
    format!("({})", parts.join(","))
}

/// Coordinatewise product. Element index is the mixed-radix encoding of the
/// coordinates, rightmost factor fastest.
pub fn direct_product(parts: &[&FiniteSemigroup]) -> Result<FiniteSemigroup> {
    if parts.is_empty() {
        return Err(Error::Empty);
    }
    let radix = MixedRadix::new(parts.iter().map(|p| p.len()).collect());
    check_cap("direct product", radix.size(), max_table())?;
    let n = radix.size() as usize;
    let coords: Vec<Vec<usize>> = (0..n).map(|i| radix.decode(i)).collect();
    let table = FiniteSemigroup::from_fn_trusted(n, |a, b| {
        let digits: Vec<usize> = parts
            .iter()
            .enumerate()
            .map(|(k, p)| p.mul(coords[a][k], coords[b][k]))
            .collect();
        radix.encode(&digits)
    });
    let labels = coords
        .iter()
        .map(|c| tuple_label(&c.iter().zip(parts).map(|(&x, p)| p.label(x)).collect::<Vec<_>>()))
        .collect();
    table.with_labels(labels)
}

/// `S` with a new absorbing element at index `n`.
pub fn attach_zero(s: &FiniteSemigroup) -> Result<FiniteSemigroup> {
    let n = s.len();
    check_cap("zero attachment", n as u128 + 1, max_table().max(n + 1))?;
    let table = FiniteSemigroup::from_fn_trusted(n + 1, |a, b| if a == n || b == n { n } else { s.mul(a, b) });
    let mut labels: Vec<String> = s.elements().map(|x| s.label(x)).collect();
    let mut zero = String::from("0");
    while labels.contains(&zero) {
        zero.push('\'');
    }
    labels.push(zero);
    table.with_labels(labels)
}

/// Direct product of groups with coordinatewise multiplication computed on
/// demand, for orders too large to tabulate.
#[derive(Clone, Debug)]
pub struct ProductGroup {
    factors: Vec<Group>,
    radix: MixedRadix,
    order: usize,
}

impl ProductGroup {
    pub fn new(factors: Vec<Group>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Empty);
        }
        let radix = MixedRadix::new(factors.iter().map(Group::len).collect());
        let size = radix.size();
        if size > usize::MAX as u128 / 2 {
            return Err(Error::CapExceeded {
                what: "product group",
                size,
                cap: usize::MAX as u128 / 2,
            });
        }
        Ok(ProductGroup {
            factors,
            order: size as usize,
            radix,
        })
    }

    pub fn factors(&self) -> &[Group] {
        &self.factors
    }

    pub fn radix(&self) -> &MixedRadix {
        &self.radix
    }

    pub fn identity(&self) -> usize {
        let digits: Vec<usize> = self.factors.iter().map(Group::identity).collect();
        self.radix.encode(&digits)
    }

    /// Tabulates the product as a [`Group`], subject to the table cap.
    pub fn materialize(&self) -> Result<Group> {
        let parts: Vec<&FiniteSemigroup> = self.factors.iter().map(Group::semigroup).collect();
        Group::new(direct_product(&parts)?)
    }
}

impl Operation for ProductGroup {
    fn order(&self) -> usize {
        self.order
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut scale = 1;
        for (f, &r) in self.factors.iter().zip(self.radix.radices()).rev() {
            out += f.mul(a % r, b % r) * scale;
            scale *= r;
            a /= r;
            b /= r;
        }
        out
    }
}

/// The box product `K_1 x K_2 x ... x K_m` of one subset per factor, as a
/// subset of the product carrier (mixed radix, rightmost fastest). As a map
/// from the product of power semigroups it is an injective homomorphism.
pub fn box_product(factors: &[Subset]) -> Result<Subset> {
    if factors.is_empty() {
        return Err(Error::Empty);
    }
    let radix = MixedRadix::new(factors.iter().map(Subset::ground_len).collect());
    check_cap("box product carrier", radix.size(), usize::MAX / 2)?;
    let mut indices = vec![0usize];
    for (k, f) in factors.iter().enumerate() {
        let r = radix.radices()[k];
        indices = indices
            .iter()
            .flat_map(|&prefix| f.iter().map(move |x| prefix * r + x))
            .collect();
    }
    Subset::from_indices(radix.size() as usize, indices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn klein_from_z2_squared() {
        let z2 = catalog::cyclic(2);
        let k = direct_product(&[z2.semigroup(), z2.semigroup()]).unwrap();
        assert_eq!(k.len(), 4);
        let g = Group::new(k.clone()).unwrap();
        assert!(g.is_abelian());
        assert!((0..4).all(|x| k.mul(x, x) == g.identity()));
    }

    #[test]
    fn product_with_trivial_is_isomorphic() {
        let z1 = catalog::cyclic(1);
        let e3 = catalog::e3();
        let p = direct_product(&[z1.semigroup(), &e3]).unwrap();
        assert_eq!(p.clone().without_labels(), e3.clone().without_labels());
    }

    #[test]
    fn e3_times_z2_flags() {
        let p = direct_product(&[&catalog::e3(), catalog::cyclic(2).semigroup()]).unwrap();
        assert_eq!(p.len(), 6);
        p.check_associativity().unwrap();
        let f = p.class_flags();
        assert!(f.inverse && f.clifford);
    }

    #[test]
    fn attach_zero_examples() {
        let z2z = attach_zero(catalog::cyclic(2).semigroup()).unwrap();
        assert_eq!(z2z.len(), 3);
        z2z.check_associativity().unwrap();
        let f = z2z.class_flags();
        assert!(f.inverse && f.clifford);

        let twice = attach_zero(&z2z).unwrap();
        assert_eq!(twice.len(), 4);
        // The newest zero lies below the previous one.
        let poset = twice.idempotent_poset();
        assert!(poset.leq(3, 2));
        assert_eq!(twice.label(3), "0''");

        let e3z = attach_zero(&catalog::e3()).unwrap();
        assert!(e3z.class_flags().semilattice);
    }

    #[test]
    fn box_products() {
        let a = Subset::singleton(2, 0).unwrap();
        let b = Subset::full(2).unwrap();
        // {(0,0),(0,1)}
        assert_eq!(box_product(&[a.clone(), b]).unwrap().to_vec(), vec![0, 1]);
        let s = Subset::singleton(3, 2).unwrap();
        assert_eq!(box_product(&[a, s]).unwrap().to_vec(), vec![2]);
    }

    #[test]
    fn product_group_agrees_with_table() {
        let pg = ProductGroup::new(vec![catalog::cyclic(3), catalog::symmetric3()]).unwrap();
        let table = pg.materialize().unwrap();
        for a in 0..pg.order() {
            for b in 0..pg.order() {
                assert_eq!(Operation::mul(&pg, a, b), table.mul(a, b));
            }
        }
        assert_eq!(pg.identity(), table.identity());
    }

    #[test]
    fn mixed_radix_round_trip() {
        let r = MixedRadix::new(vec![3, 1, 4]);
        for i in 0..12 {
            assert_eq!(r.encode(&r.decode(i)), i);
        }
        assert_eq!(r.decode(5), vec![1, 0, 1]);
    }
}
