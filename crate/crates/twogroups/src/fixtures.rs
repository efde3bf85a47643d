//! Standard small groups and categories used across tests, benches, and the
//! examples in the documentation.

use crate::cohomology::Cochain;
use crate::fingroup::{AbelianGroup, FiniteGroup, GAction, GroupAction, GroupHom};
use crate::grcat::SkeletalGrCategory;
use crate::xmod::CrossedModule;

/// The symmetric group on three letters with a fixed element order:
/// 0 = id, 1 = (12), 2 = (01), 3 = (02), 4 = (012), 5 = (021),
/// composed right-to-left. The same table is published as a fixture file.
pub const S3_TABLE: [[usize; 6]; 6] = [
    [0, 1, 2, 3, 4, 5],
    [1, 0, 5, 4, 3, 2],
    [2, 4, 0, 5, 1, 3],
    [3, 5, 4, 0, 2, 1],
    [4, 2, 3, 1, 5, 0],
    [5, 3, 1, 2, 0, 4],
];

pub fn s3() -> FiniteGroup {
    FiniteGroup::from_table(S3_TABLE.iter().map(|r| r.to_vec()).collect())
        .expect("S3 fixture table")
}

/// The Klein four-group as the canonical product `Z/2 x Z/2`.
pub fn klein() -> FiniteGroup {
    FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2))
}

pub fn z_mod(n: usize) -> AbelianGroup {
    AbelianGroup::from_moduli(&[n])
}

/// `(Z/2, Z/2, trivial)` ambient, the smallest interesting coefficient setup.
pub fn ambient_z2_z2() -> GAction {
    GAction::trivial(FiniteGroup::cyclic(2), z_mod(2))
}

pub fn ambient_z2_z3() -> GAction {
    GAction::trivial(FiniteGroup::cyclic(2), z_mod(3))
}

pub fn ambient_z3_z3() -> GAction {
    GAction::trivial(FiniteGroup::cyclic(3), z_mod(3))
}

/// The generator of `H^3(Z/2, Z/2)`: `a(x, y, z) = x y z`.
pub fn xyz_cocycle() -> Cochain {
    Cochain::from_fn(&ambient_z2_z2(), 3, |t| t[0] * t[1] * t[2]).expect("xyz table")
}

/// The carry cocycle over `(Z/m, Z/m, trivial)`:
/// `a(i, j, k) = i` when `j + k` wraps past `m`, else 0. A generator of
/// `H^3(Z/m, Z/m)`.
pub fn carry_cocycle(m: usize) -> Cochain {
    let act = GAction::trivial(FiniteGroup::cyclic(m), z_mod(m));
    Cochain::from_fn(&act, 3, |t| if t[1] + t[2] >= m { t[0] } else { 0 })
        .expect("carry table")
}

/// `(Z/2, Z/2, trivial, 0)`.
pub fn zero_cat() -> SkeletalGrCategory {
    let act = ambient_z2_z2();
    let zero = Cochain::zero(&act, 3);
    SkeletalGrCategory::build(act, zero).expect("zero associator")
}

/// `(Z/2, Z/2, trivial, xyz)`: the nonzero Sinh class over the smallest
/// ambient.
pub fn xyz_cat() -> SkeletalGrCategory {
    SkeletalGrCategory::build(ambient_z2_z2(), xyz_cocycle()).expect("xyz is a cocycle")
}

/// `(Z/m, Z/m, trivial, carry)`.
pub fn carry_cat(m: usize) -> SkeletalGrCategory {
    let act = GAction::trivial(FiniteGroup::cyclic(m), z_mod(m));
    SkeletalGrCategory::build(act, carry_cocycle(m)).expect("carry is a cocycle")
}

/// The negation action of `Z/2` on `Z/4`.
pub fn negation_action() -> GAction {
    GAction::new(
        FiniteGroup::cyclic(2),
        z_mod(4),
        vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]],
    )
    .expect("negation is an automorphism of Z/4 of order 2")
}

/// `(Z/2, Z/4, negation, 0)`: nontrivial action, zero class.
pub fn negation_cat() -> SkeletalGrCategory {
    let act = negation_action();
    let zero = Cochain::zero(&act, 3);
    SkeletalGrCategory::build(act, zero).expect("zero associator")
}

/// `(Z/2, Z/4, trivial, 0)`: same groups as [`negation_cat`] but with the
/// trivial action.
pub fn negation_like_trivial_cat() -> SkeletalGrCategory {
    let act = GAction::trivial(FiniteGroup::cyclic(2), z_mod(4));
    let zero = Cochain::zero(&act, 3);
    SkeletalGrCategory::build(act, zero).expect("zero associator")
}

/// `{0, 2}` inside `Z/4` with conjugation.
pub fn xm_normal_z4() -> CrossedModule {
    CrossedModule::from_normal_subgroup(&FiniteGroup::cyclic(4), &[0, 2])
        .expect("index-2 subgroups are normal")
}

/// The 3-cycle subgroup inside S3 with conjugation.
pub fn xm_normal_s3() -> CrossedModule {
    CrossedModule::from_normal_subgroup(&s3(), &[0, 4, 5]).expect("A3 is normal in S3")
}

pub fn xm_modact_z2_z2() -> CrossedModule {
    CrossedModule::from_module_action(&ambient_z2_z2())
}

pub fn xm_modact_z2_z4_negation() -> CrossedModule {
    CrossedModule::from_module_action(&negation_action())
}

/// The reduction `Z/4 -> Z/2` as a central extension.
pub fn xm_central_z4_to_z2() -> CrossedModule {
    let t = GroupHom::new(FiniteGroup::cyclic(4), FiniteGroup::cyclic(2), vec![0, 1, 0, 1])
        .expect("reduction mod 2");
    CrossedModule::from_central_extension(t).expect("abelian H is central")
}

/// `(Z/4, Z/4, doubling, odd elements negate)`: both homotopy groups are
/// `Z/2` and the Sinh class is nonzero.
pub fn xm_twisted() -> CrossedModule {
    let z4 = FiniteGroup::cyclic(4);
    let t = GroupHom::new(z4.clone(), z4.clone(), vec![0, 2, 0, 2]).expect("doubling");
    let id = vec![0, 1, 2, 3];
    let neg = vec![0, 3, 2, 1];
    let action =
        GroupAction::new(z4.clone(), z4, vec![id.clone(), neg.clone(), id, neg])
            .expect("negation on odd elements is an action");
    CrossedModule::new(t, action).expect("twisted doubling is a crossed module")
}

/// `(Z/4, Z/6, h -> 2h mod 4, odd elements negate)`: both the boundary and
/// the kernel are nontrivial and pi0 = Z/2 acts on pi1 = Z/3 by negation,
/// so the skeletalization cocycle lives over a twisted ambient.
pub fn xm_twisted_z6() -> CrossedModule {
    let z4 = FiniteGroup::cyclic(4);
    let z6 = FiniteGroup::cyclic(6);
    let t = GroupHom::new(z6.clone(), z4.clone(), vec![0, 2, 0, 2, 0, 2])
        .expect("doubling mod 4");
    let id = vec![0, 1, 2, 3, 4, 5];
    let neg = vec![0, 5, 4, 3, 2, 1];
    let action = GroupAction::new(z4, z6, vec![id.clone(), neg.clone(), id, neg])
        .expect("negation on odd elements is an action");
    CrossedModule::new(t, action).expect("equivariance and Peiffer hold")
}

/// Every crossed module used in cross-cutting tests.
pub fn crossed_module_fixtures() -> Vec<CrossedModule> {
    vec![
        CrossedModule::from_normal_subgroup(&FiniteGroup::trivial(), &[0])
            .expect("trivial crossed module"),
        xm_normal_z4(),
        xm_normal_s3(),
        xm_modact_z2_z2(),
        xm_modact_z2_z4_negation(),
        xm_central_z4_to_z2(),
        xm_twisted(),
        xm_twisted_z6(),
    ]
}
