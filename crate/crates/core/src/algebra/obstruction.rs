//! Necessary conditions for a regular finite semigroup to embed into the
//! power semigroup of a group.
//!
//! A regular subsemigroup of such a power semigroup is inverse, an element
//! `x` is idempotent as soon as `x^2 x^-1` is, and distinct conjugate
//! idempotents are incomparable. Each failed condition is reported with its
//! least witness. An empty report proves nothing about embeddability.

use std::fmt;

use super::FiniteSemigroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Two idempotents that do not commute.
    NonCommutingIdempotents { e: usize, f: usize },
    /// An element with several inverses.
    NonUniqueInverse { x: usize, first: usize, second: usize },
    /// `x` is not idempotent but `x^2 x^-1 = witness` is.
    SquareInverseIdempotent { x: usize, witness: usize },
    /// Distinct idempotents `e = z f z^-1`, `f = z^-1 e z` with `e`, `f` comparable.
    ConjugateComparable { e: usize, f: usize, z: usize },
}

impl Violation {
    /// Stable short token used in reports.
    pub fn token(&self) -> &'static str {
        match self {
            Violation::NonCommutingIdempotents { .. } | Violation::NonUniqueInverse { .. } => "not-inverse",
            Violation::SquareInverseIdempotent { .. } => "square-inverse-idempotent",
            Violation::ConjugateComparable { .. } => "conjugate-comparable",
        }
    }

    pub fn describe(&self, s: &FiniteSemigroup) -> String {
        let l = |x: usize| s.label(x);
        let detail = match *self {
            Violation::NonCommutingIdempotents { e, f } => {
                format!("idempotents {} and {} do not commute", l(e), l(f))
            }
            Violation::NonUniqueInverse { x, first, second } => {
                format!("x={} has inverses {} and {}", l(x), l(first), l(second))
            }
            Violation::SquareInverseIdempotent { x, witness } => {
                format!("x={} is not idempotent but x^2 x^-1 = {} is", l(x), l(witness))
            }
            Violation::ConjugateComparable { e, f, z } => format!(
                "idempotents {} and {} are conjugate via z={} and comparable",
                l(e),
                l(f),
                l(z)
            ),
        };
        format!("violation {}: {}", self.token(), detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObstructionReport {
    /// The semigroup is not regular, so none of the conditions apply.
    NotApplicable,
    /// Violated conditions; empty when no obstruction was found.
    Checked(Vec<Violation>),
}

impl ObstructionReport {
    pub fn violations(&self) -> &[Violation] {
        match self {
            ObstructionReport::NotApplicable => &[],
            ObstructionReport::Checked(v) => v,
        }
    }

    pub fn is_clear(&self) -> bool {
        matches!(self, ObstructionReport::Checked(v) if v.is_empty())
    }
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionReport::NotApplicable => f.write_str("not applicable: not regular"),
            ObstructionReport::Checked(v) if v.is_empty() => f.write_str("no obstruction found"),
            ObstructionReport::Checked(v) => write!(f, "{} violation(s)", v.len()),
        }
    }
}

impl FiniteSemigroup {
    pub fn class_h_obstructions(&self) -> ObstructionReport {
        if !self.class_flags().regular {
            return ObstructionReport::NotApplicable;
        }
        let mut found = Vec::new();

        if let Some((e, f)) = self.non_commuting_idempotents() {
            found.push(Violation::NonCommutingIdempotents { e, f });
        }
        let mut inverse = Vec::with_capacity(self.len());
        for x in self.elements() {
            match self.inverses(x).as_slice() {
                [y] => inverse.push(*y),
                [first, second, ..] => {
                    found.push(Violation::NonUniqueInverse {
                        x,
                        first: *first,
                        second: *second,
                    });
                    break;
                }
                [] => unreachable!("regular elements have an inverse"),
            }
        }
        if !found.is_empty() {
            return ObstructionReport::Checked(found);
        }

        if let Some(x) = self
            .elements()
            .find(|&x| !self.is_idempotent(x) && self.is_idempotent(self.mul(self.mul(x, x), inverse[x])))
        {
            found.push(Violation::SquareInverseIdempotent {
                x,
                witness: self.mul(self.mul(x, x), inverse[x]),
            });
        }

        // Conjugate idempotents are D-related, and D-related idempotents of a
        // finite inverse semigroup are incomparable, so on finite input this
        // scan only confirms the condition.
        let poset = self.idempotent_poset();
        'outer: for &e in poset.idempotents() {
            for &f in poset.idempotents() {
                if e == f || poset.incomparable(e, f) {
                    continue;
                }
                let z = self
                    .elements()
                    .find(|&z| self.mul(self.mul(z, f), inverse[z]) == e && self.mul(self.mul(inverse[z], e), z) == f);
                if let Some(z) = z {
                    found.push(Violation::ConjugateComparable { e, f, z });
                    break 'outer;
                }
            }
        }
        ObstructionReport::Checked(found)
    }
}
