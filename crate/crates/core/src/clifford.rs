//! Embedding finite Clifford inverse semigroups into power semigroups.
//!
//! `S` splits into maximal subgroups `H_e`, one per idempotent. Each
//! idempotent gives a homomorphism `h_e: S -> H_e^0`, `s -> es` when
//! `ss^-1` lies above `e` and `0` otherwise, and together they embed `S` into
//! `prod H_e^0`. Sending `h` to `{h}` and `0` to the whole group embeds
//! `H_e^0` into `exp(H~_e)`, where `H~_e` is `H_e` made non-trivial
//! (trivial groups are replaced by `Z_2`). Box products then land in
//! `exp(prod H~_e)`.

use std::fmt;

use crate::algebra::{FiniteSemigroup, Group};
use crate::catalog;
use crate::constructions::{attach_zero, box_product, direct_product, HyperMap, MixedRadix, ProductGroup};
use crate::error::{Error, Result};
use crate::hyperspace::subset_product;
use crate::morphism::{injectivity_witness, Morphism};
use crate::subset::Subset;

/// Largest target group order for which certificate images are written as
/// subsets of the full product. Larger targets are kept factor by factor.
pub const MATERIALIZE_CAP: usize = 1 << 20;

/// The idempotents, the retraction `x -> x x^-1`, maximal subgroups and
/// principal filters of a Clifford inverse semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordDecomposition {
    idempotents: Vec<usize>,
    pi: Vec<usize>,
    groups: Vec<Subset>,
    filters: Vec<Vec<usize>>,
}

impl CliffordDecomposition {
    pub fn new(s: &FiniteSemigroup) -> Result<Self> {
        let inverses = s
            .inverse_table()
            .map_err(|e| Error::NotClifford(format!("not inverse ({e})")))?;
        if let Some(x) = s.elements().find(|&x| s.mul(x, inverses[x]) != s.mul(inverses[x], x)) {
            return Err(Error::NotClifford(format!(
                "inverse, but x x^-1 != x^-1 x for x={}",
                s.label(x)
            )));
        }
        let poset = s.idempotent_poset();
        let idempotents = poset.idempotents().to_vec();
        let pi = s.elements().map(|x| s.mul(x, inverses[x])).collect();
        let groups = idempotents
            .iter()
            .map(|&e| s.maximal_subgroup(e))
            .collect::<Result<Vec<_>>>()?;
        let filters = idempotents.iter().map(|&e| poset.up(e)).collect();
        Ok(CliffordDecomposition {
            idempotents,
            pi,
            groups,
            filters,
        })
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    /// Idempotents whose principal filter is open. Every filter of a finite
    /// discrete semilattice is open, so this is all of them.
    pub fn locally_minimal(&self) -> &[usize] {
        &self.idempotents
    }

    /// `x x^-1`.
    pub fn pi(&self, x: usize) -> usize {
        self.pi[x]
    }

    fn position(&self, e: usize) -> Result<usize> {
        self.idempotents.binary_search(&e).map_err(|_| Error::NotIdempotent(e))
    }

    pub fn group(&self, e: usize) -> Result<&Subset> {
        Ok(&self.groups[self.position(e)?])
    }

    /// The idempotents `f` with `ef = e`.
    pub fn filter(&self, e: usize) -> Result<&[usize]> {
        Ok(&self.filters[self.position(e)?])
    }
}

/// A value of `h_e`: an element of `H_e` (as an element of `S`) or the
/// adjoined zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComponentValue {
    Element(usize),
    Zero,
}

/// `h_e(x)`: `ex` if `x x^-1` lies in the filter of `e`, else the zero.
pub fn component_hom(s: &FiniteSemigroup, dec: &CliffordDecomposition, e: usize, x: usize) -> ComponentValue {
    if s.mul(e, dec.pi(x)) == e {
        ComponentValue::Element(s.mul(e, x))
    } else {
        ComponentValue::Zero
    }
}

/// All component values, one row per element of `S` and one column per
/// idempotent. Fails if two rows coincide.
pub fn diagonal(s: &FiniteSemigroup, dec: &CliffordDecomposition) -> Result<Vec<Vec<ComponentValue>>> {
    let rows: Vec<Vec<ComponentValue>> = s
        .elements()
        .map(|x| dec.idempotents().iter().map(|&e| component_hom(s, dec, e, x)).collect())
        .collect();
    if let Some((x, y)) = injectivity_witness(&rows) {
        return Err(Error::InvalidEmbedding(format!(
            "diagonal map identifies {} and {}",
            s.label(x),
            s.label(y)
        )));
    }
    Ok(rows)
}

/// An idempotent `e` telling `x` and `y` apart: `h_e(x) = 0 != h_e(y)` or
/// the reverse when `x x^-1 != y y^-1`, `ex != ey` otherwise.
pub fn separation_witness(s: &FiniteSemigroup, dec: &CliffordDecomposition, x: usize, y: usize) -> Option<usize> {
    let zero = ComponentValue::Zero;
    dec.idempotents().iter().copied().find(|&e| {
        let (hx, hy) = (component_hom(s, dec, e, x), component_hom(s, dec, e, y));
        if dec.pi(x) != dec.pi(y) {
            (hx == zero) != (hy == zero)
        } else {
            s.mul(e, x) != s.mul(e, y)
        }
    })
}

/// The diagonal map materialized as a morphism into `prod H_e^0`, factors
/// in ascending idempotent order.
pub fn diagonal_embedding(s: &FiniteSemigroup, dec: &CliffordDecomposition) -> Result<(FiniteSemigroup, Morphism)> {
    let rows = diagonal(s, dec)?;
    let mut factors = Vec::new();
    let mut positions = Vec::new();
    for &e in dec.idempotents() {
        let (h, old) = s.restrict(dec.group(e)?)?;
        factors.push(attach_zero(&h)?);
        positions.push(old);
    }
    let parts: Vec<&FiniteSemigroup> = factors.iter().collect();
    let target = direct_product(&parts)?;
    let radix = MixedRadix::new(factors.iter().map(FiniteSemigroup::len).collect());
    let map = rows
        .iter()
        .map(|row| {
            let digits: Vec<usize> = row
                .iter()
                .zip(&positions)
                .map(|(v, old)| match v {
                    ComponentValue::Element(x) => old.binary_search(x).expect("h_e lands in H_e"),
                    ComponentValue::Zero => old.len(),
                })
                .collect();
            radix.encode(&digits)
        })
        .collect();
    let m = Morphism::new(s, &target, map)?;
    Ok((target, m))
}

/// `H~_e` together with the inclusion of `H_e`.
#[derive(Clone, Debug)]
pub struct PaddedGroup {
    pub idempotent: usize,
    pub group: Group,
    pub padded: bool,
    /// Sorted elements of `H_e` in `S`; the `i`-th maps to element `i` of
    /// `group` (to the identity when padded).
    pub members: Vec<usize>,
}

impl PaddedGroup {
    /// `group=` descriptor in certificates: `Z2` for padding, otherwise the
    /// elements of `H_e` in `S`.
    pub fn descriptor(&self) -> String {
        if self.padded {
            format!("Z{}", self.group.len())
        } else {
            let listed: Vec<String> = self.members.iter().map(usize::to_string).collect();
            format!("H{{{}}}", listed.join(","))
        }
    }

    fn embed(&self, x: usize) -> usize {
        if self.padded {
            self.group.identity()
        } else {
            self.members.binary_search(&x).expect("element of H_e")
        }
    }
}

/// `H~_e = H_e` when non-trivial, `Z_2` otherwise.
pub fn pad_groups(s: &FiniteSemigroup, dec: &CliffordDecomposition) -> Result<Vec<PaddedGroup>> {
    dec.idempotents()
        .iter()
        .map(|&e| {
            let h = dec.group(e)?;
            let members = h.to_vec();
            if members.len() >= 2 {
                let (table, _) = s.restrict(h)?;
                Ok(PaddedGroup {
                    idempotent: e,
                    group: Group::new(table)?,
                    padded: false,
                    members,
                })
            } else {
                Ok(PaddedGroup {
                    idempotent: e,
                    group: catalog::cyclic(2),
                    padded: true,
                    members,
                })
            }
        })
        .collect()
}

/// `f_e`: `{h}` for a group element, all of `H~_e` for the zero.
pub fn singleton_embedding(pad: &PaddedGroup, v: ComponentValue) -> Subset {
    let n = pad.group.len();
    match v {
        ComponentValue::Element(x) => Subset::singleton(n, pad.embed(x)).expect("in range"),
        ComponentValue::Zero => Subset::full(n).expect("non-empty group"),
    }
}

/// How the map of a certificate is stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateMap {
    /// Subsets of `prod H~_e`, mixed radix with the first factor slowest.
    Product(Vec<Subset>),
    /// One subset of each `H~_e` per source element; the image is their box.
    Factorwise(Vec<Vec<Subset>>),
}

/// An embedding of `S` into `exp(prod H~_e)` with enough data to re-check it.
#[derive(Clone, Debug)]
pub struct EmbeddingCertificate {
    pub source: FiniteSemigroup,
    pub factors: Vec<PaddedGroup>,
    pub map: CertificateMap,
    /// `h_e(x)` per element and idempotent; absent for parsed certificates.
    pub trace: Option<Vec<Vec<ComponentValue>>>,
    pub homomorphism: bool,
    pub injective: bool,
}

impl EmbeddingCertificate {
    pub fn target_order(&self) -> u128 {
        MixedRadix::new(self.factors.iter().map(|f| f.group.len()).collect()).size()
    }

    pub fn target_group(&self) -> Result<ProductGroup> {
        ProductGroup::new(self.factors.iter().map(|f| f.group.clone()).collect())
    }

    /// The certificate as a [`HyperMap`], for product-mode certificates.
    pub fn hyper_map(&self) -> Result<HyperMap<ProductGroup>> {
        match &self.map {
            CertificateMap::Product(images) => HyperMap::new(self.source.clone(), self.target_group()?, images.clone()),
            CertificateMap::Factorwise(_) => Err(Error::CapExceeded {
                what: "certificate target group",
                size: self.target_order(),
                cap: MATERIALIZE_CAP as u128,
            }),
        }
    }
}

/// Runs the whole pipeline on a Clifford inverse semigroup.
pub fn embed_clifford(s: &FiniteSemigroup) -> Result<EmbeddingCertificate> {
    embed_clifford_with_cap(s, MATERIALIZE_CAP)
}

/// As [`embed_clifford`], writing product-mode images only when the target
/// has at most `cap` elements.
pub fn embed_clifford_with_cap(s: &FiniteSemigroup, cap: usize) -> Result<EmbeddingCertificate> {
    let dec = CliffordDecomposition::new(s)?;
    let rows = diagonal(s, &dec)?;
    let factors = pad_groups(s, &dec)?;
    let factorwise: Vec<Vec<Subset>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .zip(&factors)
                .map(|(&v, pad)| singleton_embedding(pad, v))
                .collect()
        })
        .collect();
    let order = MixedRadix::new(factors.iter().map(|f| f.group.len()).collect()).size();
    let map = if order <= cap as u128 {
        CertificateMap::Product(factorwise.iter().map(|t| box_product(t)).collect::<Result<Vec<_>>>()?)
    } else {
        CertificateMap::Factorwise(factorwise)
    };
    let mut cert = EmbeddingCertificate {
        source: s.clone(),
        factors,
        map,
        trace: Some(rows),
        homomorphism: false,
        injective: false,
    };
    let report = verify_certificate(&cert)?;
    if !report.passed() {
        return Err(Error::InvalidEmbedding(format!(
            "constructed map fails verification: {report}"
        )));
    }
    cert.homomorphism = true;
    cert.injective = true;
    Ok(cert)
}

/// Result of [`verify_certificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateReport {
    pub homomorphism_witness: Option<(usize, usize)>,
    pub injectivity_witness: Option<(usize, usize)>,
    /// Union of all images, a subgroup of the target. Only computed for
    /// product-mode certificates.
    pub tightened_target: Option<Subset>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.homomorphism_witness.is_none() && self.injectivity_witness.is_none()
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        write!(
            f,
            "homomorphism={} injective={}",
            yes_no(self.homomorphism_witness.is_none()),
            yes_no(self.injectivity_witness.is_none())
        )?;
        if let Some((x, y)) = self.homomorphism_witness {
            write!(f, "\nhomomorphism fails at ({x}, {y})")?;
        }
        if let Some((x, y)) = self.injectivity_witness {
            write!(f, "\nelements {x} and {y} share an image")?;
        }
        Ok(())
    }
}

/// Re-checks a certificate from its source table and image subsets alone.
/// Factorwise certificates are checked coordinate by coordinate, which is
/// equivalent because box products multiply coordinatewise and are injective.
pub fn verify_certificate(cert: &EmbeddingCertificate) -> Result<CertificateReport> {
    let s = &cert.source;
    match &cert.map {
        CertificateMap::Product(images) => {
            let map = HyperMap::new(s.clone(), cert.target_group()?, images.clone())?;
            let report = map.verify();
            let tightened_target = if report.homomorphism_witness.is_none() {
                Some(map.tightened_target()?)
            } else {
                None
            };
            Ok(CertificateReport {
                homomorphism_witness: report.homomorphism_witness,
                injectivity_witness: report.injectivity_witness,
                tightened_target,
            })
        }
        CertificateMap::Factorwise(tuples) => {
            if tuples.len() != s.len() || tuples.iter().any(|t| t.len() != cert.factors.len()) {
                return Err(Error::InvalidCertificate("factorwise map has the wrong shape".into()));
            }
            let mut homomorphism_witness = None;
            'outer: for x in s.elements() {
                for y in s.elements() {
                    let xy = s.mul(x, y);
                    for (k, pad) in cert.factors.iter().enumerate() {
                        if subset_product(&pad.group, &tuples[x][k], &tuples[y][k])? != tuples[xy][k] {
                            homomorphism_witness = Some((x, y));
                            break 'outer;
                        }
                    }
                }
            }
            Ok(CertificateReport {
                homomorphism_witness,
                injectivity_witness: injectivity_witness(tuples),
                tightened_target: None,
            })
        }
    }
}

/// The union of all images of a verified product-mode certificate.
pub fn union_tighten(cert: &EmbeddingCertificate) -> Result<Subset> {
    cert.hyper_map()?.tightened_target()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl EmbeddingCertificate {
    pub fn to_text(&self) -> String {
        let mut out = String::from("embedding-certificate v1\n");
        out.push_str(&format!("source: {}\n", self.source.len()));
        let mode = match self.map {
            CertificateMap::Product(_) => "product",
            CertificateMap::Factorwise(_) => "product-factorwise",
        };
        out.push_str(&format!("target: {mode}\n"));
        for f in &self.factors {
            out.push_str(&format!(
                "factor e={} group={} padded={}\n",
                f.idempotent,
                f.descriptor(),
                yes_no(f.padded)
            ));
        }
        out.push_str("map:\n");
        match &self.map {
            CertificateMap::Product(images) => {
                for (i, k) in images.iter().enumerate() {
                    out.push_str(&format!("{i} -> {k}\n"));
                }
            }
            CertificateMap::Factorwise(tuples) => {
                for (i, t) in tuples.iter().enumerate() {
                    let parts: Vec<String> = t.iter().map(Subset::to_string).collect();
                    out.push_str(&format!("{i} -> {}\n", parts.join(" x ")));
                }
            }
        }
        out.push_str(&format!(
            "verified: homomorphism={} injective={}\n",
            yes_no(self.homomorphism),
            yes_no(self.injective)
        ));
        out
    }

    /// Reads a certificate written by [`EmbeddingCertificate::to_text`]. The
    /// source table is supplied separately; `H{...}` factors are rebuilt from it.
    pub fn parse(text: &str, source: &FiniteSemigroup) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let syntax = |line: usize, message: String| Error::Syntax {
            line,
            column: 1,
            message,
        };
        let mut next = |what: &str| lines.next().ok_or_else(|| syntax(0, format!("missing {what}")));

        let (ln, header) = next("header")?;
        if header != "embedding-certificate v1" {
            return Err(syntax(ln, format!("unknown header {header:?}")));
        }
        let (ln, src) = next("source line")?;
        let n: usize = src
            .strip_prefix("source:")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| syntax(ln, "expected `source: <n>`".into()))?;
        if n != source.len() {
            return Err(Error::InvalidCertificate(format!(
                "certificate is for {n} elements but the source has {}",
                source.len()
            )));
        }
        let (ln, target) = next("target line")?;
        let factorwise = match target {
            "target: product" => false,
            "target: product-factorwise" => true,
            _ => return Err(syntax(ln, format!("unknown target {target:?}"))),
        };

        let mut factors = Vec::new();
        let mut line = next("map")?;
        while let Some(rest) = line.1.strip_prefix("factor ") {
            factors.push(parse_factor(line.0, rest, source)?);
            line = next("map")?;
        }
        if line.1 != "map:" {
            return Err(syntax(line.0, format!("expected `map:`, found {:?}", line.1)));
        }
        if factors.is_empty() {
            return Err(syntax(line.0, "no factors".into()));
        }
        let radix = MixedRadix::new(factors.iter().map(|f: &PaddedGroup| f.group.len()).collect());
        let order = radix.size();
        if !factorwise && order > usize::MAX as u128 / 2 {
            return Err(Error::InvalidCertificate("product target too large".into()));
        }

        let mut products = Vec::new();
        let mut tuples = Vec::new();
        for i in 0..n {
            let (ln, l) = next("map entry")?;
            let (lhs, rhs) = l
                .split_once("->")
                .ok_or_else(|| syntax(ln, "expected `i -> {...}`".into()))?;
            if lhs.trim().parse::<usize>().ok() != Some(i) {
                return Err(syntax(ln, format!("expected entry for element {i}")));
            }
            let bad = |e: Error| syntax(ln, e.to_string());
            if factorwise {
                let parts: Vec<&str> = rhs.split(" x ").collect();
                if parts.len() != factors.len() {
                    return Err(syntax(ln, format!("expected {} factors", factors.len())));
                }
                let t = parts
                    .iter()
                    .zip(&factors)
                    .map(|(p, f)| Subset::parse(f.group.len(), p.trim()).map_err(bad))
                    .collect::<Result<Vec<_>>>()?;
                tuples.push(t);
            } else {
                products.push(Subset::parse(order as usize, rhs.trim()).map_err(bad)?);
            }
        }
        let (ln, footer) = next("verified line")?;
        let flags = footer
            .strip_prefix("verified:")
            .ok_or_else(|| syntax(ln, "expected `verified: ...`".into()))?;
        let mut homomorphism = None;
        let mut injective = None;
        for kv in flags.split_whitespace() {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| syntax(ln, format!("bad flag {kv:?}")))?;
            let v = match v {
                "yes" => true,
                "no" => false,
                _ => return Err(syntax(ln, format!("bad flag value {v:?}"))),
            };
            match k {
                "homomorphism" => homomorphism = Some(v),
                "injective" => injective = Some(v),
                _ => return Err(syntax(ln, format!("unknown flag {k:?}"))),
            }
        }
        if let Some((ln, extra)) = lines.next() {
            return Err(syntax(ln, format!("unexpected content {extra:?}")));
        }
        Ok(EmbeddingCertificate {
            source: source.clone(),
            factors,
            map: if factorwise {
                CertificateMap::Factorwise(tuples)
            } else {
                CertificateMap::Product(products)
            },
            trace: None,
            homomorphism: homomorphism.ok_or_else(|| syntax(ln, "missing homomorphism flag".into()))?,
            injective: injective.ok_or_else(|| syntax(ln, "missing injective flag".into()))?,
        })
    }
}

fn parse_factor(line: usize, rest: &str, source: &FiniteSemigroup) -> Result<PaddedGroup> {
    let syntax = |message: String| Error::Syntax {
        line,
        column: 1,
        message,
    };
    let mut e = None;
    let mut group = None;
    let mut padded = None;
    for kv in rest.split_whitespace() {
        match kv.split_once('=') {
            Some(("e", v)) => e = v.parse::<usize>().ok(),
            Some(("group", v)) => group = Some(v),
            Some(("padded", "yes")) => padded = Some(true),
            Some(("padded", "no")) => padded = Some(false),
            _ => return Err(syntax(format!("bad factor field {kv:?}"))),
        }
    }
    let (Some(e), Some(desc), Some(padded)) = (e, group, padded) else {
        return Err(syntax("factor needs e=, group= and padded=".into()));
    };
    source.check_element(e)?;
    if !source.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    let members = source.maximal_subgroup(e)?.to_vec();
    if padded {
        let k: usize = desc
            .strip_prefix('Z')
            .and_then(|k| k.parse().ok())
            .filter(|&k| k >= 2)
            .ok_or_else(|| syntax(format!("padding group must be Z<k> with k >= 2, got {desc:?}")))?;
        if members.len() != 1 {
            return Err(Error::InvalidCertificate(format!(
                "factor e={e} is padded but H_e is non-trivial"
            )));
        }
        return Ok(PaddedGroup {
            idempotent: e,
            group: catalog::cyclic(k),
            padded,
            members,
        });
    }
    let listed = desc
        .strip_prefix('H')
        .ok_or_else(|| syntax(format!("unpadded group must be H{{...}}, got {desc:?}")))?;
    let h = Subset::parse(source.len(), listed).map_err(|err| syntax(err.to_string()))?;
    if h.to_vec() != members {
        return Err(Error::InvalidCertificate(format!("factor e={e} does not list H_e")));
    }
    let (table, _) = source.restrict(&h)?;
    Ok(PaddedGroup {
        idempotent: e,
        group: Group::new(table)?,
        padded,
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperspace::classify_subset;

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::from_indices(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn decomposition_of_z2_zero() {
        let s = catalog::z2_zero();
        let dec = CliffordDecomposition::new(&s).unwrap();
        assert_eq!(dec.idempotents(), &[0, 2]);
        assert_eq!(dec.group(0).unwrap().to_vec(), vec![0, 1]);
        assert_eq!(dec.group(2).unwrap().to_vec(), vec![2]);
        assert_eq!(dec.filter(2).unwrap(), &[0, 2]);
        assert_eq!(dec.filter(0).unwrap(), &[0]);
        assert_eq!(dec.locally_minimal(), dec.idempotents());
    }

    #[test]
    fn decomposition_of_e3() {
        let s = catalog::e3();
        let dec = CliffordDecomposition::new(&s).unwrap();
        assert_eq!(dec.filter(2).unwrap(), &[0, 1, 2]);
        assert_eq!(dec.filter(0).unwrap(), &[0]);
        assert_eq!(dec.filter(1).unwrap(), &[1]);
        assert!((0..3).all(|e| dec.group(e).unwrap().count() == 1));
    }

    #[test]
    fn rejects_brandt() {
        let err = CliffordDecomposition::new(&catalog::brandt_z1_2()).unwrap_err();
        assert!(matches!(err, Error::NotClifford(_)));
        assert!(embed_clifford(&catalog::brandt_z1_2()).is_err());
        let left_zero = FiniteSemigroup::new(vec![vec![0, 0], vec![1, 1]]).unwrap();
        let err = CliffordDecomposition::new(&left_zero).unwrap_err();
        assert!(err.to_string().contains("not inverse"));
    }

    #[test]
    fn component_values() {
        let s = catalog::z2_zero();
        let dec = CliffordDecomposition::new(&s).unwrap();
        assert_eq!(component_hom(&s, &dec, 0, 1), ComponentValue::Element(1));
        assert_eq!(component_hom(&s, &dec, 0, 2), ComponentValue::Zero);
        for x in 0..3 {
            assert_eq!(component_hom(&s, &dec, 2, x), ComponentValue::Element(2));
        }
    }

    #[test]
    fn component_homs_are_homomorphisms() {
        for (name, s) in catalog::named_semigroups() {
            let Ok(dec) = CliffordDecomposition::new(&s) else {
                continue;
            };
            for &e in dec.idempotents() {
                let h = |x| component_hom(&s, &dec, e, x);
                for x in s.elements() {
                    for y in s.elements() {
                        let expected = match (h(x), h(y)) {
                            (ComponentValue::Element(a), ComponentValue::Element(b)) => {
                                ComponentValue::Element(s.mul(a, b))
                            }
                            _ => ComponentValue::Zero,
                        };
                        assert_eq!(h(s.mul(x, y)), expected, "{name} e={e} ({x},{y})");
                    }
                }
            }
        }
    }

    #[test]
    fn diagonal_embeddings() {
        let s = catalog::z2_zero();
        let dec = CliffordDecomposition::new(&s).unwrap();
        let (target, m) = diagonal_embedding(&s, &dec).unwrap();
        assert_eq!(target.len(), 6);
        assert!(m.is_embedding());

        let e3 = catalog::e3();
        let dec = CliffordDecomposition::new(&e3).unwrap();
        let (target, m) = diagonal_embedding(&e3, &dec).unwrap();
        assert_eq!(target.len(), 8);
        assert!(m.is_embedding());

        let z3 = catalog::cyclic(3).into_semigroup();
        let dec = CliffordDecomposition::new(&z3).unwrap();
        let rows = diagonal(&z3, &dec).unwrap();
        assert_eq!(
            rows,
            vec![
                vec![ComponentValue::Element(0)],
                vec![ComponentValue::Element(1)],
                vec![ComponentValue::Element(2)]
            ]
        );
    }

    #[test]
    fn separation_witnesses_exist() {
        for (name, s) in catalog::named_semigroups() {
            let Ok(dec) = CliffordDecomposition::new(&s) else {
                continue;
            };
            for x in s.elements() {
                for y in s.elements().filter(|&y| y != x) {
                    assert!(separation_witness(&s, &dec, x, y).is_some(), "{name}: {x} {y}");
                }
            }
        }
    }

    #[test]
    fn padding() {
        let s = direct_product(&[catalog::cyclic(3).semigroup(), &catalog::two_chain()]).unwrap();
        let dec = CliffordDecomposition::new(&s).unwrap();
        let pads = pad_groups(&s, &dec).unwrap();
        let orders: Vec<usize> = pads.iter().map(|p| p.group.len()).collect();
        assert_eq!(orders, vec![3, 3]);
        let z = catalog::z2_zero();
        let pads = pad_groups(&z, &CliffordDecomposition::new(&z).unwrap()).unwrap();
        assert_eq!(pads.iter().map(|p| p.padded).collect::<Vec<_>>(), vec![false, true]);
        assert_eq!(pads[0].descriptor(), "H{0,1}");
        assert_eq!(pads[1].descriptor(), "Z2");
    }

    #[test]
    fn singleton_embedding_is_a_homomorphism_on_z2_zero() {
        let z = catalog::z2_zero();
        let dec = CliffordDecomposition::new(&z).unwrap();
        let pad = &pad_groups(&z, &dec).unwrap()[0];
        let value = |x: usize| {
            if x == 2 {
                ComponentValue::Zero
            } else {
                ComponentValue::Element(x)
            }
        };
        for u in 0..3 {
            for v in 0..3 {
                let lhs = singleton_embedding(pad, value(z.mul(u, v)));
                let rhs = subset_product(
                    &pad.group,
                    &singleton_embedding(pad, value(u)),
                    &singleton_embedding(pad, value(v)),
                )
                .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(singleton_embedding(pad, ComponentValue::Zero), set(2, &[0, 1]));
    }

    #[test]
    fn z2_zero_certificate() {
        let cert = embed_clifford(&catalog::z2_zero()).unwrap();
        assert_eq!(
            cert.map,
            CertificateMap::Product(vec![set(4, &[0]), set(4, &[2]), set(4, &[0, 2])])
        );
        let report = verify_certificate(&cert).unwrap();
        assert!(report.passed());
        assert_eq!(report.tightened_target, Some(set(4, &[0, 2])));
        assert_eq!(union_tighten(&cert).unwrap(), set(4, &[0, 2]));
        assert_eq!(
            cert.to_text(),
            "embedding-certificate v1\nsource: 3\ntarget: product\n\
             factor e=0 group=H{0,1} padded=no\nfactor e=2 group=Z2 padded=yes\n\
             map:\n0 -> {0}\n1 -> {2}\n2 -> {0,2}\nverified: homomorphism=yes injective=yes\n"
        );
    }

    #[test]
    fn e3_certificate() {
        let cert = embed_clifford(&catalog::e3()).unwrap();
        assert_eq!(cert.target_order(), 8);
        assert!(cert.factors.iter().all(|f| f.padded));
        assert!(verify_certificate(&cert).unwrap().passed());
    }

    #[test]
    fn corrupted_certificates_fail() {
        let mut cert = embed_clifford(&catalog::z2_zero()).unwrap();
        if let CertificateMap::Product(images) = &mut cert.map {
            images.swap(0, 1);
        }
        let report = verify_certificate(&cert).unwrap();
        assert!(!report.passed());
        assert!(report.homomorphism_witness.is_some());

        let mut cert = embed_clifford(&catalog::z2_zero()).unwrap();
        if let CertificateMap::Product(images) = &mut cert.map {
            images[1] = images[0].clone();
        }
        let report = verify_certificate(&cert).unwrap();
        assert_eq!(report.injectivity_witness, Some((0, 1)));
    }

    #[test]
    fn group_certificate_tightens_to_the_group() {
        let s3 = catalog::symmetric3().into_semigroup();
        let cert = embed_clifford(&s3).unwrap();
        let report = verify_certificate(&cert).unwrap();
        assert!(report.passed());
        assert!(report.tightened_target.unwrap().is_full());
    }

    #[test]
    fn factorwise_mode_agrees() {
        let s = direct_product(&[&catalog::e3(), catalog::cyclic(2).semigroup()]).unwrap();
        let full = embed_clifford(&s).unwrap();
        let split = embed_clifford_with_cap(&s, 4).unwrap();
        let CertificateMap::Factorwise(tuples) = &split.map else {
            panic!("expected factorwise mode")
        };
        let CertificateMap::Product(images) = &full.map else {
            panic!("expected product mode")
        };
        for (t, k) in tuples.iter().zip(images) {
            assert_eq!(&box_product(t).unwrap(), k);
        }
        assert!(verify_certificate(&split).unwrap().passed());
    }

    #[test]
    fn text_round_trip() {
        for s in [
            catalog::z2_zero(),
            catalog::e3(),
            direct_product(&[&catalog::z2_zero(), &catalog::two_chain()]).unwrap(),
        ] {
            for cap in [MATERIALIZE_CAP, 1] {
                let cert = embed_clifford_with_cap(&s, cap).unwrap();
                let parsed = EmbeddingCertificate::parse(&cert.to_text(), &s).unwrap();
                assert_eq!(parsed.to_text(), cert.to_text());
                assert_eq!(parsed.map, cert.map);
                assert!(verify_certificate(&parsed).unwrap().passed());
            }
        }
    }

    #[test]
    fn parse_rejects_bad_certificates() {
        let s = catalog::z2_zero();
        let text = embed_clifford(&s).unwrap().to_text();
        assert!(EmbeddingCertificate::parse(&text.replace("v1", "v2"), &s).is_err());
        assert!(EmbeddingCertificate::parse(&text.replace("H{0,1}", "H{0}"), &s).is_err());
        assert!(EmbeddingCertificate::parse(&text, &catalog::e3()).is_err());
        assert!(EmbeddingCertificate::parse(&text.replace("2 -> {0,2}\n", ""), &s).is_err());
    }

    #[test]
    fn idempotents_map_to_subgroups_and_elements_to_cosets() {
        let s = direct_product(&[&catalog::z2_zero(), &catalog::two_chain()]).unwrap();
        let cert = embed_clifford(&s).unwrap();
        let g = cert.target_group().unwrap().materialize().unwrap();
        let CertificateMap::Product(images) = &cert.map else {
            panic!()
        };
        for x in s.elements() {
            let c = classify_subset(&g, &images[x]).unwrap();
            assert_eq!(c.is_idempotent, s.is_idempotent(x));
            assert!(c.is_group_element);
        }
    }
}
