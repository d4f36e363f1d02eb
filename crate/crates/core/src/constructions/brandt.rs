use crate::algebra::{FiniteSemigroup, Group};
use crate::error::{Error, Result};
use crate::limits::{check_cap, max_table};
use crate::subset::Subset;

/// The Brandt semigroup over `h` with `kappa` indices: triples
/// `(alpha, x, beta)` plus a zero, where `(a, x, b)(c, y, d)` is
/// `(a, xy, d)` when `b = c` and zero otherwise.
///
/// The triple `(alpha, x, beta)` has index `(alpha * |H| + x) * kappa + beta`;
/// the zero comes last.
pub fn brandt(h: &Group, kappa: usize) -> Result<FiniteSemigroup> {
    if kappa == 0 {
        return Err(Error::Empty);
    }
    let m = h.len();
    let size = (kappa as u128) * (kappa as u128) * (m as u128) + 1;
    check_cap("Brandt semigroup", size, max_table())?;
    let zero = kappa * kappa * m;
    let split = |i: usize| (i / (m * kappa), (i / kappa) % m, i % kappa);
    let table = FiniteSemigroup::from_fn(zero + 1, |a, b| {
        if a == zero || b == zero {
            return zero;
        }
        let (a1, x, b1) = split(a);
        let (a2, y, b2) = split(b);
        if b1 != a2 {
            zero
        } else {
            (a1 * m + h.mul(x, y)) * kappa + b2
        }
    })?;
    let mut labels: Vec<String> = (0..zero)
        .map(|i| {
            let (a, x, b) = split(i);
            format!("({a},{},{b})", h.label(x))
        })
        .collect();
    labels.push("0".into());
    table.with_labels(labels)
}

/// Whether `i` is a two-sided ideal; returns the least offending pair otherwise.
pub fn ideal_violation(s: &FiniteSemigroup, ideal: &Subset) -> Option<(usize, usize)> {
    for a in s.elements() {
        for b in ideal.iter() {
            if !ideal.contains(s.mul(a, b)) {
                return Some((a, b));
            }
            if !ideal.contains(s.mul(b, a)) {
                return Some((b, a));
            }
        }
    }
    None
}

/// Collapses the ideal `ideal` to a single zero. Surviving elements keep their
/// relative order; the zero is appended last.
pub fn rees_quotient(s: &FiniteSemigroup, ideal: &Subset) -> Result<FiniteSemigroup> {
    if ideal.ground_len() != s.len() {
        return Err(Error::GroundMismatch {
            left: s.len(),
            right: ideal.ground_len(),
        });
    }
    if let Some((a, b)) = ideal_violation(s, ideal) {
        return Err(Error::NotIdeal { a, b });
    }
    let kept: Vec<usize> = s.elements().filter(|&x| !ideal.contains(x)).collect();
    let zero = kept.len();
    let mut new_index = vec![zero; s.len()];
    for (i, &x) in kept.iter().enumerate() {
        new_index[x] = i;
    }
    let table = FiniteSemigroup::from_fn(zero + 1, |a, b| {
        if a == zero || b == zero {
            zero
        } else {
            new_index[s.mul(kept[a], kept[b])]
        }
    })?;
    let mut labels: Vec<String> = kept.iter().map(|&x| s.label(x)).collect();
    let mut z = String::from("0");
    while labels.contains(&z) {
        z.push('\'');
    }
    labels.push(z);
    table.with_labels(labels)
}
