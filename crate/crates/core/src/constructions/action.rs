use crate::algebra::{FiniteSemigroup, Group};
use crate::error::{Error, Result};
use crate::search;

/// A homomorphism from a finite group into the automorphisms of a semigroup,
/// stored as one permutation of the semigroup per group element:
/// `perm[g][s]` is the image of `s` under `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    group: Group,
    target: FiniteSemigroup,
    perm: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(group: Group, target: FiniteSemigroup, perm: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidAction(msg));
        if perm.len() != group.len() {
            return bad(format!(
                "{} permutations for a group of order {}",
                perm.len(),
                group.len()
            ));
        }
        let n = target.len();
        for (g, p) in perm.iter().enumerate() {
            let mut seen = vec![false; n];
            if p.len() != n || p.iter().any(|&x| x >= n || std::mem::replace(&mut seen[x], true)) {
                return bad(format!("image list of group element {g} is not a permutation"));
            }
            for a in 0..n {
                for b in 0..n {
                    if p[target.mul(a, b)] != target.mul(p[a], p[b]) {
                        return bad(format!("group element {g} is not an automorphism: fails on ({a}, {b})"));
                    }
                }
            }
        }
        let id = group.identity();
        if perm[id].iter().enumerate().any(|(s, &t)| s != t) {
            return bad("the identity does not act trivially".into());
        }
        for g in 0..group.len() {
            for h in 0..group.len() {
                let gh = group.mul(g, h);
                if (0..n).any(|s| perm[gh][s] != perm[g][perm[h][s]]) {
                    return bad(format!("action of {gh} differs from {g} after {h}"));
                }
            }
        }
        Ok(GroupAction { group, target, perm })
    }

    pub fn trivial(group: Group, target: FiniteSemigroup) -> Self {
        let perm = vec![target.elements().collect(); group.len()];
        GroupAction { group, target, perm }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn target(&self) -> &FiniteSemigroup {
        &self.target
    }

    pub fn permutations(&self) -> &[Vec<usize>] {
        &self.perm
    }

    #[inline]
    pub fn act(&self, g: usize, s: usize) -> usize {
        self.perm[g][s]
    }

    /// Whether every group element fixes every idempotent.
    pub fn fixes_idempotents(&self) -> bool {
        let idem = self.target.idempotents();
        self.perm.iter().all(|p| idem.iter().all(|&e| p[e] == e))
    }

    /// Every action of `group` on `target`: all homomorphisms into the
    /// automorphism group, in the deterministic order of the search.
    pub fn enumerate(group: &Group, target: &FiniteSemigroup) -> Result<Vec<GroupAction>> {
        let (aut, taut) = super::automorphism_group(target)?;
        let homs = search::enumerate_homomorphisms(group.semigroup(), aut.semigroup(), usize::MAX)?;
        homs.morphisms
            .iter()
            .map(|m| {
                let perm = m.map().iter().map(|&a| taut.permutations()[a].clone()).collect();
                GroupAction::new(group.clone(), target.clone(), perm)
            })
            .collect()
    }

    /// One line per group element: `g: p0 p1 ... p_{n-1}`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (g, p) in self.perm.iter().enumerate() {
            let images: Vec<String> = p.iter().map(usize::to_string).collect();
            out.push_str(&format!("{g}: {}\n", images.join(" ")));
        }
        out
    }

    pub fn parse(group: Group, target: FiniteSemigroup, text: &str) -> Result<Self> {
        let mut perm = vec![None; group.len()];
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let syntax = |message: String| Error::Syntax {
                line: line_no,
                column: 1,
                message,
            };
            let (head, rest) = trimmed
                .split_once(':')
                .ok_or_else(|| syntax("expected `g: p0 p1 ...`".into()))?;
            let g: usize = head
                .trim()
                .parse()
                .map_err(|_| syntax(format!("bad group element {head:?}")))?;
            if g >= group.len() {
                return Err(syntax(format!("group element {g} out of range")));
            }
            let images = rest
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| syntax(format!("bad image {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if perm[g].replace(images).is_some() {
                return Err(syntax(format!("group element {g} listed twice")));
            }
        }
        let perm = perm
            .into_iter()
            .enumerate()
            .map(|(g, p)| p.ok_or_else(|| Error::InvalidAction(format!("no line for group element {g}"))))
            .collect::<Result<Vec<_>>>()?;
        GroupAction::new(group, target, perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn swap_e3() -> GroupAction {
        GroupAction::new(catalog::cyclic(2), catalog::e3(), vec![vec![0, 1, 2], vec![1, 0, 2]]).unwrap()
    }

    #[test]
    fn swap_action_is_valid() {
        let a = swap_e3();
        assert!(!a.fixes_idempotents());
        assert_eq!(a.act(1, 0), 1);
    }

    #[test]
    fn rejects_non_automorphism() {
        // Moving ef to e does not respect e*f = ef.
        let err = GroupAction::new(catalog::cyclic(2), catalog::e3(), vec![vec![0, 1, 2], vec![2, 1, 0]]);
        assert!(matches!(err, Err(Error::InvalidAction(_))));
    }

    #[test]
    fn rejects_non_homomorphism() {
        // Z3 cannot act by the swap: 1+1+1 = 0 would need swap^3 = id.
        let err = GroupAction::new(
            catalog::cyclic(3),
            catalog::e3(),
            vec![vec![0, 1, 2], vec![1, 0, 2], vec![1, 0, 2]],
        );
        assert!(matches!(err, Err(Error::InvalidAction(_))));
    }

    #[test]
    fn text_round_trip() {
        let a = swap_e3();
        assert_eq!(a.to_text(), "0: 0 1 2\n1: 1 0 2\n");
        let b = GroupAction::parse(catalog::cyclic(2), catalog::e3(), &a.to_text()).unwrap();
        assert_eq!(a, b);
        assert!(GroupAction::parse(catalog::cyclic(2), catalog::e3(), "0: 0 1 2\n").is_err());
    }

    #[test]
    fn enumerates_all_actions() {
        // Z2 on E3: trivial and swap.
        let acts = GroupAction::enumerate(&catalog::cyclic(2), &catalog::e3()).unwrap();
        assert_eq!(acts.len(), 2);
        // Z3 on E3: only trivial.
        assert_eq!(
            GroupAction::enumerate(&catalog::cyclic(3), &catalog::e3())
                .unwrap()
                .len(),
            1
        );
        // Z3 on Klein: Aut = S3 has one subgroup of order 3, so 1 + 2 homomorphisms.
        assert_eq!(
            GroupAction::enumerate(&catalog::cyclic(3), catalog::klein().semigroup())
                .unwrap()
                .len(),
            3
        );
    }
}
