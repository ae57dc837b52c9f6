//! Transfer maps between coinvariant spaces.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{add_term, GradedBasis, LinearMap, Vector};
use crate::scalar;

use super::table::FiniteGroupTable;

/// A left action of a group on a finite set of labeled points:
/// `images[h][x] = h·x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationAction {
    points: Vec<String>,
    images: Vec<Vec<usize>>,
}

impl PermutationAction {
    pub fn new(group: &FiniteGroupTable, points: Vec<String>, images: Vec<Vec<usize>>) -> Result<Self> {
        let m = points.len();
        if images.len() != group.order() {
            return Err(Error::Precondition(format!(
                "action lists {} permutations for a group of order {}",
                images.len(),
                group.order()
            )));
        }
        for (h, img) in images.iter().enumerate() {
            let distinct: BTreeSet<usize> = img.iter().copied().collect();
            if img.len() != m || distinct.len() != m || img.iter().any(|&x| x >= m) {
                return Err(Error::InvalidPermutation(format!(
                    "action of `{}` is not a permutation of the {m} points",
                    group.label(h)
                )));
            }
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                let ab = group.mul(a, b);
                if (0..m).any(|x| images[ab][x] != images[a][images[b][x]]) {
                    return Err(Error::Precondition(format!(
                        "not an action: ({}·{})·x differs from {}·({}·x)",
                        group.label(a),
                        group.label(b),
                        group.label(a),
                        group.label(b)
                    )));
                }
            }
        }
        Ok(PermutationAction { points, images })
    }

    pub fn trivial(group: &FiniteGroupTable, points: Vec<String>) -> Self {
        let m = points.len();
        PermutationAction {
            points,
            images: vec![(0..m).collect(); group.order()],
        }
    }

    /// Conjugation `h·x = h x h⁻¹` on the group's own elements.
    pub fn conjugation(group: &FiniteGroupTable) -> Self {
        let n = group.order();
        PermutationAction {
            points: group.elements().to_vec(),
            images: (0..n).map(|h| (0..n).map(|x| group.conjugate(h, x)).collect()).collect(),
        }
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn act(&self, h: usize, x: usize) -> usize {
        self.images[h][x]
    }

    /// Orbits under the elements `within`, each listed in index order,
    /// ordered by their smallest point.
    fn orbits(&self, within: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
        let m = self.points.len();
        let mut orbit_of = vec![usize::MAX; m];
        let mut orbits = Vec::new();
        for x in 0..m {
            if orbit_of[x] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = within.iter().map(|&h| self.act(h, x)).collect();
            members.sort_unstable();
            members.dedup();
            for &y in &members {
                orbit_of[y] = orbits.len();
            }
            orbits.push(members);
        }
        (orbits, orbit_of)
    }

    fn orbit_basis(&self, orbits: &[Vec<usize>]) -> Result<Arc<GradedBasis>> {
        Ok(Arc::new(GradedBasis::new(
            orbits.iter().map(|o| (format!("[{}]", self.points[o[0]]), 0)),
        )?))
    }
}

/// Which element represents each right coset `Gh`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetChoice {
    SmallestIndex,
    LargestIndex,
}

/// Right cosets `G h` of `subgroup` in `group`, in order of their smallest
/// element.
fn right_cosets(group: &FiniteGroupTable, subgroup: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; group.order()];
    let mut cosets = Vec::new();
    for h in 0..group.order() {
        if seen[h] {
            continue;
        }
        let mut coset: Vec<usize> = subgroup.iter().map(|&g| group.mul(g, h)).collect();
        coset.sort_unstable();
        for &x in &coset {
            seen[x] = true;
        }
        cosets.push(coset);
    }
    cosets
}

/// `tr([x]_H) = Σ_{Gh ∈ G\H} [h·x]_G`, from `H`-coinvariants to
/// `G`-coinvariants, with coset representatives chosen as the smallest
/// index. The result is also computed with the largest-index choice and the
/// two maps must agree.
pub fn transfer(group: &FiniteGroupTable, subgroup: &[usize], action: &PermutationAction) -> Result<LinearMap> {
    let map = transfer_with_representatives(group, subgroup, action, CosetChoice::SmallestIndex)?;
    let alt = transfer_with_representatives(group, subgroup, action, CosetChoice::LargestIndex)?;
    if map != alt {
        return Err(Error::Precondition(
            "transfer depends on the choice of coset representatives".into(),
        ));
    }
    Ok(map)
}

pub fn transfer_with_representatives(
    group: &FiniteGroupTable,
    subgroup: &[usize],
    action: &PermutationAction,
    choice: CosetChoice,
) -> Result<LinearMap> {
    if action.images.len() != group.order() {
        return Err(Error::Precondition("action is not over the given group".into()));
    }
    let sub: BTreeSet<usize> = subgroup.iter().copied().collect();
    if sub.iter().any(|&x| x >= group.order()) || !group.is_subgroup(&sub) {
        return Err(Error::Precondition("the given subset is not a subgroup".into()));
    }
    let sub: Vec<usize> = sub.into_iter().collect();
    let all: Vec<usize> = (0..group.order()).collect();
    let (big_orbits, _) = action.orbits(&all);
    let (small_orbits, small_of) = action.orbits(&sub);
    let source = action.orbit_basis(&big_orbits)?;
    let target = action.orbit_basis(&small_orbits)?;

    let reps: Vec<usize> = right_cosets(group, &sub)
        .into_iter()
        .map(|c| match choice {
            CosetChoice::SmallestIndex => c[0],
            CosetChoice::LargestIndex => *c.last().expect("nonempty coset"),
        })
        .collect();
    let columns = big_orbits
        .iter()
        .map(|orbit| {
            let mut v = Vector::new();
            for &h in &reps {
                add_term(&mut v, small_of[action.act(h, orbit[0])], scalar::one());
            }
            v
        })
        .collect();
    Ok(LinearMap::from_columns(&source, &target, columns))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin_group;
    use crate::scalar::int;

    fn a3(g: &FiniteGroupTable) -> Vec<usize> {
        (0..g.order()).filter(|&x| g.element_order(x) != 2).collect()
    }

    #[test]
    fn s3_conjugation_splits_three_cycles() {
        let g = builtin_group("S3").unwrap();
        let act = PermutationAction::conjugation(&g);
        let t = transfer(&g, &a3(&g), &act).unwrap();
        let img = t.image_of("[(1 2 3)]").unwrap();
        assert_eq!(img.coeff("[(1 2 3)]"), int(1));
        assert_eq!(img.coeff("[(1 3 2)]"), int(1));
        assert_eq!(img.len(), 2);
        assert_eq!(t.image_of("[(1 2)]").unwrap().coeff("[(1 2)]"), int(2));
    }

    #[test]
    fn whole_group_gives_identity() {
        let g = builtin_group("D4").unwrap();
        let act = PermutationAction::conjugation(&g);
        let all: Vec<usize> = (0..8).collect();
        let t = transfer(&g, &all, &act).unwrap();
        assert_eq!(t, LinearMap::identity(t.source()));
    }

    #[test]
    fn trivial_action_index_two() {
        let g = builtin_group("Z4").unwrap();
        let act = PermutationAction::trivial(&g, vec!["p".into(), "q".into()]);
        let t = transfer(&g, &[0, 2], &act).unwrap();
        assert_eq!(t.image_of("[p]").unwrap().coeff("[p]"), int(2));
        assert_eq!(t.image_of("[q]").unwrap().coeff("[q]"), int(2));
    }

    #[test]
    fn rejects_non_subgroup_and_non_action() {
        let g = builtin_group("S3").unwrap();
        let act = PermutationAction::conjugation(&g);
        assert!(transfer(&g, &[0, 1, 2], &act).is_err());
        let mut images = vec![vec![0, 1]; 6];
        images[1] = vec![1, 0];
        assert!(PermutationAction::new(&g, vec!["a".into(), "b".into()], images).is_err());
    }
}
