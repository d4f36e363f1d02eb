use crate::algebra::{FiniteSemigroup, Group, Operation};
use crate::error::{Error, Result};
use crate::hyperspace::{group_subset_product, union_tighten, PowerSemigroup};
use crate::limits::max_table;
use crate::morphism::{injectivity_witness, Morphism};
use crate::subset::Subset;

use super::{attach_zero, box_product, direct_product, semidirect_product, GroupAction, MixedRadix, ProductGroup};

/// A map from a finite semigroup into the power semigroup of a group, given
/// by one non-empty subset per source element.
#[derive(Clone, Debug)]
pub struct HyperMap<G> {
    source: FiniteSemigroup,
    group: G,
    images: Vec<Subset>,
}

/// Outcome of re-checking a [`HyperMap`]: the least failing pairs, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapReport {
    /// Least `(x, y)` with `image(xy) != image(x) image(y)`.
    pub homomorphism_witness: Option<(usize, usize)>,
    /// Least `x < y` with equal images.
    pub injectivity_witness: Option<(usize, usize)>,
}

impl MapReport {
    pub fn is_embedding(&self) -> bool {
        self.homomorphism_witness.is_none() && self.injectivity_witness.is_none()
    }
}

impl<G: Operation> HyperMap<G> {
    pub fn new(source: FiniteSemigroup, group: G, images: Vec<Subset>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::InvalidEmbedding(format!(
                "{} images for a source of {} elements",
                images.len(),
                source.len()
            )));
        }
        for img in &images {
            if img.ground_len() != group.order() {
                return Err(Error::GroundMismatch {
                    left: group.order(),
                    right: img.ground_len(),
                });
            }
            if img.is_empty() {
                return Err(Error::EmptySubset);
            }
        }
        Ok(HyperMap { source, group, images })
    }

    pub fn source(&self) -> &FiniteSemigroup {
        &self.source
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    pub fn images(&self) -> &[Subset] {
        &self.images
    }

    pub fn image(&self, x: usize) -> &Subset {
        &self.images[x]
    }

    /// Recomputes every product `image(x) image(y)` setwise.
    pub fn verify(&self) -> MapReport {
        let mut homomorphism_witness = None;
        'outer: for x in self.source.elements() {
            for y in self.source.elements() {
                let prod = group_subset_product(&self.group, &self.images[x], &self.images[y])
                    .expect("grounds checked at construction");
                if prod != self.images[self.source.mul(x, y)] {
                    homomorphism_witness = Some((x, y));
                    break 'outer;
                }
            }
        }
        MapReport {
            homomorphism_witness,
            injectivity_witness: injectivity_witness(&self.images),
        }
    }

    /// The union of all images; a subgroup whose power semigroup already
    /// contains the image.
    pub fn tightened_target(&self) -> Result<Subset> {
        union_tighten(&self.group, &self.images)
    }
}

impl HyperMap<Group> {
    /// Reads a morphism into a tabulated power semigroup as subsets.
    pub fn from_morphism(source: &FiniteSemigroup, power: &PowerSemigroup, m: &Morphism) -> Result<Self> {
        let images = m.map().iter().map(|&i| power.subset(i)).collect();
        HyperMap::new(source.clone(), power.base().clone(), images)
    }

    /// `g -> {g}`.
    pub fn singletons(group: &Group) -> Self {
        let n = group.len();
        let images = (0..n).map(|g| Subset::singleton(n, g).expect("in range")).collect();
        HyperMap {
            source: group.semigroup().clone(),
            group: group.clone(),
            images,
        }
    }
}

impl<G: Operation + Clone> HyperMap<G> {
    /// Extends an embedding `S -> exp(G)` to `S^0` by sending the zero to
    /// all of `G`. Needs the images to span a proper subgroup of `G`.
    pub fn zero_embedding(&self) -> Result<HyperMap<G>> {
        let h = self.tightened_target()?;
        if h.is_full() {
            return Err(Error::InvalidEmbedding(
                "the images already cover the whole group, so the zero would collide".into(),
            ));
        }
        let mut images = self.images.clone();
        images.push(Subset::full(self.group.order())?);
        let extended = HyperMap {
            source: attach_zero(&self.source)?,
            group: self.group.clone(),
            images,
        };
        let report = extended.verify();
        if !report.is_embedding() {
            return Err(Error::InvalidEmbedding(format!(
                "zero extension fails verification: {report:?}"
            )));
        }
        Ok(extended)
    }
}

/// The embedding `prod exp(H_i) -> exp(prod H_i)` by box products. The source
/// is the direct product of the power semigroups.
pub fn product_embedding(groups: &[Group]) -> Result<HyperMap<ProductGroup>> {
    let powers = groups.iter().map(PowerSemigroup::new).collect::<Result<Vec<_>>>()?;
    let parts: Vec<&FiniteSemigroup> = powers.iter().map(PowerSemigroup::semigroup).collect();
    let source = direct_product(&parts)?;
    let radix = MixedRadix::new(parts.iter().map(|p| p.len()).collect());
    let images = source
        .elements()
        .map(|x| {
            let tuple: Vec<Subset> = radix
                .decode(x)
                .into_iter()
                .zip(&powers)
                .map(|(k, p)| p.subset(k))
                .collect();
            box_product(&tuple)
        })
        .collect::<Result<Vec<_>>>()?;
    HyperMap::new(source, ProductGroup::new(groups.to_vec())?, images)
}

/// `K -> K x {g}` into the carrier of `H x| G`, where `(h, g)` has index
/// `h * |G| + g`.
pub fn coset_lift(k: &Subset, g: usize, g_order: usize) -> Result<Subset> {
    if g >= g_order {
        return Err(Error::ElementOutOfRange { element: g, n: g_order });
    }
    k.map(k.ground_len() * g_order, |h| h * g_order + g)
}

/// The action of `G` on `exp(S)` induced by an action on `S`.
pub fn induced_action(action: &GroupAction, power: &PowerSemigroup) -> Result<GroupAction> {
    let n = action.target().len();
    if power.base().len() != n {
        return Err(Error::GroundMismatch {
            left: n,
            right: power.base().len(),
        });
    }
    let perm = action
        .permutations()
        .iter()
        .map(|p| {
            power
                .subsets()
                .map(|k| power.index_of(&k.map(n, |s| p[s])?))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    GroupAction::new(action.group().clone(), power.semigroup().clone(), perm)
}

/// `s -> (f(alpha s))_alpha`, one coordinate per element `alpha` of `G`.
pub fn equivariant_lift<G: Operation>(f: &HyperMap<G>, action: &GroupAction, s: usize) -> Vec<Subset> {
    (0..action.group().len())
        .map(|alpha| f.image(action.act(alpha, s)).clone())
        .collect()
}

/// `(g t)_alpha = t_{g alpha}` on tuples indexed by the elements of `G`.
pub fn shift<T: Clone>(group: &Group, g: usize, tuple: &[T]) -> Vec<T> {
    (0..group.len())
        .map(|alpha| tuple[group.mul(g, alpha)].clone())
        .collect()
}

/// `H^G x| G` under the coordinate shift, with products computed on demand.
/// A tuple `t` in `H^G` is encoded mixed radix with coordinate `alpha` at
/// position `alpha`; the pair `(t, g)` has index `t * |G| + g`.
#[derive(Clone, Debug)]
pub struct PowerShiftGroup {
    h: Group,
    g: Group,
    radix: MixedRadix,
    power_order: usize,
}

impl PowerShiftGroup {
    pub fn new(h: Group, g: Group) -> Result<Self> {
        let radix = MixedRadix::new(vec![h.len(); g.len()]);
        let size = radix.size().saturating_mul(g.len() as u128);
        if size > (usize::MAX / 2) as u128 {
            return Err(Error::CapExceeded {
                what: "power-shift group",
                size,
                cap: (usize::MAX / 2) as u128,
            });
        }
        Ok(PowerShiftGroup {
            power_order: radix.size() as usize,
            h,
            g,
            radix,
        })
    }

    pub fn coordinates(&self) -> &MixedRadix {
        &self.radix
    }

    pub fn power_order(&self) -> usize {
        self.power_order
    }

    pub fn encode(&self, tuple: &[usize], g: usize) -> usize {
        self.radix.encode(tuple) * self.g.len() + g
    }

    pub fn decode(&self, x: usize) -> (Vec<usize>, usize) {
        (self.radix.decode(x / self.g.len()), x % self.g.len())
    }
}

impl Operation for PowerShiftGroup {
    fn order(&self) -> usize {
        self.power_order * self.g.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let (t, g) = self.decode(a);
        let (u, g2) = self.decode(b);
        let shifted = shift(&self.g, g, &u);
        let prod: Vec<usize> = t.iter().zip(&shifted).map(|(&x, &y)| self.h.mul(x, y)).collect();
        self.encode(&prod, self.g.mul(g, g2))
    }
}

/// The embedding of `S x| G` into `exp(H^G x| G)` built from an embedding
/// `f: S -> exp(H)`.
#[derive(Clone, Debug)]
pub struct SemidirectEmbedding {
    /// `S x| G`, pairs `(s, g)` at index `s * |G| + g`.
    pub source: FiniteSemigroup,
    /// Per source element: the tuple `(f(alpha s))_alpha` and `g`.
    pub symbolic: Vec<(Vec<Subset>, usize)>,
    /// The materialized map, when `H^G` fits under the table cap.
    pub map: Option<HyperMap<PowerShiftGroup>>,
    pub report: Option<MapReport>,
}

impl SemidirectEmbedding {
    pub fn is_verified(&self) -> bool {
        self.report.as_ref().is_some_and(MapReport::is_embedding)
    }
}

/// Composes the equivariant lift, the box product and the coset lift.
/// `G` must be abelian unless `allow_nonabelian` is set, in which case the
/// result is whatever verification says.
pub fn semidirect_hyper_embedding(
    f: &HyperMap<Group>,
    action: &GroupAction,
    allow_nonabelian: bool,
) -> Result<SemidirectEmbedding> {
    if action.target() != f.source() {
        return Err(Error::InvalidAction(
            "the action is on a different semigroup than the embedding".into(),
        ));
    }
    let g = action.group();
    if let Some((a, b)) = g.non_commuting_pair() {
        if !allow_nonabelian {
            return Err(Error::NotAbelian { a, b });
        }
    }
    let source = semidirect_product(action)?;
    let m = g.len();
    let symbolic: Vec<(Vec<Subset>, usize)> = source
        .elements()
        .map(|x| (equivariant_lift(f, action, x / m), x % m))
        .collect();

    let target = PowerShiftGroup::new(f.group().clone(), g.clone())?;
    if target.power_order() > max_table() {
        return Ok(SemidirectEmbedding {
            source,
            symbolic,
            map: None,
            report: None,
        });
    }
    let images = symbolic
        .iter()
        .map(|(tuple, gx)| coset_lift(&box_product(tuple)?, *gx, m))
        .collect::<Result<Vec<_>>>()?;
    let map = HyperMap::new(source.clone(), target, images)?;
    let report = map.verify();
    Ok(SemidirectEmbedding {
        source,
        symbolic,
        map: Some(map),
        report: Some(report),
    })
}
