use super::{AbelianGroup, FiniteGroup, GroupError};
use crate::snf::IntMat;

/// An action of a group on another group by automorphisms: one permutation of
/// the target per source element.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAction {
    group: FiniteGroup,
    target: FiniteGroup,
    perms: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(
        group: FiniteGroup,
        target: FiniteGroup,
        perms: Vec<Vec<usize>>,
    ) -> Result<Self, GroupError> {
        validate_perms(&group, &target, &perms)?;
        Ok(GroupAction { group, target, perms })
    }

    pub fn trivial(group: FiniteGroup, target: FiniteGroup) -> Self {
        let id: Vec<usize> = (0..target.order()).collect();
        let perms = vec![id; group.order()];
        GroupAction { group, target, perms }
    }

    /// Conjugation of a group on itself.
    pub fn conjugation(group: FiniteGroup) -> Self {
        let perms = (0..group.order())
            .map(|g| (0..group.order()).map(|h| group.conj(g, h)).collect())
            .collect();
        GroupAction { group: group.clone(), target: group, perms }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    #[inline]
    pub fn apply(&self, g: usize, h: usize) -> usize {
        self.perms[g][h]
    }
}

impl std::fmt::Debug for GroupAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupAction(|G|={}, |H|={})", self.group.order(), self.target.order())
    }
}

/// An action of a group on an abelian coefficient module. This is the ambient
/// data `(G, A, rho)` that every cochain computation runs over.
#[derive(Clone, PartialEq, Eq)]
pub struct GAction {
    group: FiniteGroup,
    module: AbelianGroup,
    perms: Vec<Vec<usize>>,
}

impl GAction {
    pub fn new(
        group: FiniteGroup,
        module: AbelianGroup,
        perms: Vec<Vec<usize>>,
    ) -> Result<Self, GroupError> {
        validate_perms(&group, module.group(), &perms)?;
        Ok(GAction { group, module, perms })
    }

    pub fn trivial(group: FiniteGroup, module: AbelianGroup) -> Self {
        let id: Vec<usize> = (0..module.order()).collect();
        let perms = vec![id; group.order()];
        GAction { group, module, perms }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn module(&self) -> &AbelianGroup {
        &self.module
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    #[inline]
    pub fn apply(&self, g: usize, a: usize) -> usize {
        self.perms[g][a]
    }

    pub fn is_trivial(&self) -> bool {
        self.perms.iter().all(|p| p.iter().enumerate().all(|(i, &x)| i == x))
    }

    /// The automorphism `rho(g)` as an integer matrix on cyclic coordinates:
    /// column `j` holds the coordinates of `rho(g)` applied to the `j`-th
    /// generator.
    pub fn matrix_of(&self, g: usize) -> IntMat {
        let k = self.module.num_factors();
        let mut m = IntMat::zeros(k, k);
        for j in 0..k {
            let image = self.apply(g, self.module.generator(j));
            for (i, &c) in self.module.coords(image).iter().enumerate() {
                m.set(i, j, c as i64);
            }
        }
        m
    }
}

impl std::fmt::Debug for GAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GAction(|G|={}, A={})", self.group.order(), self.module.describe())
    }
}

fn validate_perms(
    group: &FiniteGroup,
    target: &FiniteGroup,
    perms: &[Vec<usize>],
) -> Result<(), GroupError> {
    if perms.len() != group.order() {
        return Err(GroupError::BadHomShape { expected: group.order(), got: perms.len() });
    }
    let n = target.order();
    for (g, p) in perms.iter().enumerate() {
        if p.len() != n {
            return Err(GroupError::BadHomShape { expected: n, got: p.len() });
        }
        let mut seen = vec![false; n];
        for &x in p {
            if x >= n || seen[x] {
                return Err(GroupError::NotAutomorphism { g });
            }
            seen[x] = true;
        }
        for a in 0..n {
            for b in 0..n {
                if p[target.mul(a, b)] != target.mul(p[a], p[b]) {
                    return Err(GroupError::NotAutomorphism { g });
                }
            }
        }
    }
    for g in 0..group.order() {
        for h in 0..group.order() {
            let gh = group.mul(g, h);
            for x in 0..n {
                if perms[gh][x] != perms[g][perms[h][x]] {
                    return Err(GroupError::NotFunctorial { g, h });
                }
            }
        }
    }
    if (0..n).any(|x| perms[0][x] != x) {
        return Err(GroupError::NotAutomorphism { g: 0 });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_action_validates() {
        let z2 = FiniteGroup::cyclic(2);
        let a = AbelianGroup::from_moduli(&[2]);
        let act = GAction::trivial(z2.clone(), a.clone());
        GAction::new(z2, a, act.perms().to_vec()).unwrap();
    }

    #[test]
    fn negation_action_of_z2_on_z4() {
        // negation is an automorphism of Z/4 and squares to the identity
        let z2 = FiniteGroup::cyclic(2);
        let z4 = AbelianGroup::from_moduli(&[4]);
        let act =
            GAction::new(z2, z4, vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]]).unwrap();
        assert!(!act.is_trivial());
        assert_eq!(act.apply(1, 1), 3);
    }

    #[test]
    fn constant_map_is_not_an_automorphism() {
        let z2 = FiniteGroup::cyclic(2);
        let z3 = AbelianGroup::from_moduli(&[3]);
        let err =
            GAction::new(z2, z3, vec![vec![0, 1, 2], vec![0, 0, 0]]).unwrap_err();
        assert_eq!(err, GroupError::NotAutomorphism { g: 1 });
    }

    #[test]
    fn functoriality_enforced() {
        // Two perms that are each automorphisms of Z/3 but do not compose.
        let z4 = FiniteGroup::cyclic(4);
        let z3 = AbelianGroup::from_moduli(&[3]);
        let id = vec![0, 1, 2];
        let neg = vec![0, 2, 1];
        let err = GAction::new(z4, z3, vec![id.clone(), neg, id.clone(), id]).unwrap_err();
        assert!(matches!(err, GroupError::NotFunctorial { .. }));
    }

    #[test]
    fn matrix_of_negation() {
        let z2 = FiniteGroup::cyclic(2);
        let z4 = AbelianGroup::from_moduli(&[4]);
        let act = GAction::new(z2, z4, vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]]).unwrap();
        let m = act.matrix_of(1);
        assert_eq!(m.at(0, 0), 3);
    }

    #[test]
    fn conjugation_action_on_s3() {
        let s3 = crate::fixtures::s3();
        let act = GroupAction::conjugation(s3.clone());
        GroupAction::new(s3, act.target().clone(), act.perms().to_vec()).unwrap();
    }
}
