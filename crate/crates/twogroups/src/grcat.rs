//! Skeletal Gr-categories and their classification data.
//!
//! A skeletal Gr-category is stored as its classifying 4-tuple: a group of
//! objects `G`, the abelian group `A` of automorphisms of the unit, an action
//! `rho` of `G` on `A`, and a normalized associator table `a: G^3 -> A`. The
//! pentagon identity is exactly the 3-cocycle condition on `a`, so `build`
//! validates it through the cohomology module. Unitors are strictified away
//! by normalization and carry no runtime data.

use crate::cohomology::{
    class_equal, cocycle_witness, transport_class, Cochain, CohomologyClass, CohomologyError,
};
use crate::exec;
use crate::fingroup::{isomorphisms_bounded, GAction, GroupError, GroupHom, DEFAULT_ORDER_BOUND};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrError {
    #[error("pentagon fails: associator is not a cocycle at {witness:?}")]
    NotCocycle { witness: Vec<usize> },
    #[error("associator is not normalized")]
    NotNormalized,
    #[error("associator table does not fit the ambient")]
    MismatchedAmbient,
    #[error("morphisms live over different objects: {left} vs {right}")]
    ObjectMismatch { left: usize, right: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

/// The classifying data `(G, A, rho, a)` of a skeletal Gr-category.
#[derive(Clone, PartialEq, Eq)]
pub struct SkeletalGrCategory {
    action: GAction,
    assoc: Cochain,
}

impl SkeletalGrCategory {
    /// Validates the pentagon (cocycle condition) and normalization.
    pub fn build(action: GAction, assoc: Cochain) -> Result<Self, GrError> {
        if assoc.degree() != 3 || !assoc.matches(&action) {
            return Err(GrError::MismatchedAmbient);
        }
        if let Some(witness) = cocycle_witness(&action, &assoc)? {
            return Err(GrError::NotCocycle { witness });
        }
        if !assoc.is_normalized() {
            return Err(GrError::NotNormalized);
        }
        Ok(SkeletalGrCategory { action, assoc })
    }

    /// Skips validation. For feeding deliberately broken tables to the
    /// coherence checker; anything built this way may violate the pentagon.
    pub fn from_parts_unchecked(action: GAction, assoc: Cochain) -> Self {
        SkeletalGrCategory { action, assoc }
    }

    pub fn action(&self) -> &GAction {
        &self.action
    }

    pub fn group(&self) -> &crate::fingroup::FiniteGroup {
        self.action.group()
    }

    pub fn module(&self) -> &crate::fingroup::AbelianGroup {
        self.action.module()
    }

    pub fn associator(&self) -> &Cochain {
        &self.assoc
    }

    pub fn assoc_at(&self, x: usize, y: usize, z: usize) -> usize {
        self.assoc.value_at(&[x, y, z])
    }

    pub fn identity_morphism(&self, g: usize) -> SkeletalMorphism {
        SkeletalMorphism { object: g, component: 0 }
    }

    /// Composition of two automorphisms of the same object.
    pub fn compose(
        &self,
        m1: SkeletalMorphism,
        m2: SkeletalMorphism,
    ) -> Result<SkeletalMorphism, GrError> {
        if m1.object != m2.object {
            return Err(GrError::ObjectMismatch { left: m1.object, right: m2.object });
        }
        Ok(SkeletalMorphism {
            object: m1.object,
            component: self.module().add(m1.component, m2.component),
        })
    }

    /// `(g1, a1) tensor (g2, a2) = (g1 g2, a1 + rho(g1) a2)`: the left factor
    /// twists, the right does not.
    pub fn tensor(&self, m1: SkeletalMorphism, m2: SkeletalMorphism) -> SkeletalMorphism {
        SkeletalMorphism {
            object: self.group().mul(m1.object, m2.object),
            component: self
                .module()
                .add(m1.component, self.action.apply(m1.object, m2.component)),
        }
    }

    pub fn inverse_morphism(&self, m: SkeletalMorphism) -> SkeletalMorphism {
        SkeletalMorphism { object: m.object, component: self.module().neg(m.component) }
    }

    /// The class of the associator in `H^3(G, A)`.
    pub fn sinh_invariant(&self) -> Result<CohomologyClass, GrError> {
        Ok(CohomologyClass::of(&self.action, &self.assoc)?)
    }

    /// Decides equivalence with `other` by searching isomorphism pairs
    /// `(phi, psi)` for one that intertwines the actions and transports the
    /// associator class onto `other`'s.
    pub fn equivalent(&self, other: &SkeletalGrCategory) -> Result<Equivalence, GrError> {
        self.equivalent_bounded(other, DEFAULT_ORDER_BOUND)
    }

    pub fn equivalent_bounded(
        &self,
        other: &SkeletalGrCategory,
        bound: usize,
    ) -> Result<Equivalence, GrError> {
        let phis = isomorphisms_bounded(self.group(), other.group(), bound)?;
        if phis.is_empty() {
            return Ok(Equivalence::Inequivalent(InequivalenceReason::ObjectGroups));
        }
        let psis = isomorphisms_bounded(self.module().group(), other.module().group(), bound)?;
        if psis.is_empty() {
            return Ok(Equivalence::Inequivalent(InequivalenceReason::ModuleGroups));
        }

        // rho'(phi g)(psi a) = psi(rho(g) a), for every pair (g, a)
        let compatible: Vec<(&GroupHom, &GroupHom)> = phis
            .iter()
            .flat_map(|phi| psis.iter().map(move |psi| (phi, psi)))
            .filter(|(phi, psi)| {
                self.group().elements().all(|g| {
                    self.module().group().elements().all(|a| {
                        other.action.apply(phi.apply(g), psi.apply(a))
                            == psi.apply(self.action.apply(g, a))
                    })
                })
            })
            .collect();
        if compatible.is_empty() {
            return Ok(Equivalence::Inequivalent(InequivalenceReason::NoCompatibleActionPair));
        }

        // Lexicographically first pair whose transported class matches.
        let hit = exec::find_map_first(&compatible, |(phi, psi)| {
            let moved = transport_class(&self.assoc, phi, psi).ok()?;
            match class_equal(&other.action, &moved, &other.assoc) {
                Ok(Some(correction)) => Some(EquivalenceWitness {
                    object_iso: (*phi).clone(),
                    module_iso: (*psi).clone(),
                    correction,
                }),
                _ => None,
            }
        });
        Ok(match hit {
            Some(w) => Equivalence::Equivalent(Box::new(w)),
            None => Equivalence::Inequivalent(InequivalenceReason::ClassMismatch),
        })
    }
}

impl std::fmt::Debug for SkeletalGrCategory {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SkeletalGrCategory(|G|={}, A={})",
            self.group().order(),
            self.module().describe()
        )
    }
}

/// An automorphism of the object `g`, stored as its transported component in
/// `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkeletalMorphism {
    pub object: usize,
    pub component: usize,
}

#[derive(Clone, Debug)]
pub enum Equivalence {
    Equivalent(Box<EquivalenceWitness>),
    Inequivalent(InequivalenceReason),
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent(_))
    }

    pub fn witness(&self) -> Option<&EquivalenceWitness> {
        match self {
            Equivalence::Equivalent(w) => Some(w),
            Equivalence::Inequivalent(_) => None,
        }
    }
}

/// `(phi, psi, f)`: the group isomorphisms and the 2-cochain with
/// `df = a' - transport(a)`.
#[derive(Clone, Debug)]
pub struct EquivalenceWitness {
    pub object_iso: GroupHom,
    pub module_iso: GroupHom,
    pub correction: Cochain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InequivalenceReason {
    ObjectGroups,
    ModuleGroups,
    NoCompatibleActionPair,
    ClassMismatch,
}

impl InequivalenceReason {
    pub fn describe(&self) -> &'static str {
        match self {
            InequivalenceReason::ObjectGroups => "object groups are not isomorphic",
            InequivalenceReason::ModuleGroups => "automorphism groups are not isomorphic",
            InequivalenceReason::NoCompatibleActionPair => {
                "no isomorphism pair intertwines the actions"
            }
            InequivalenceReason::ClassMismatch => {
                "associator classes differ under every compatible pair"
            }
        }
    }
}

/// Checks a claimed equivalence witness from scratch: both maps must be
/// isomorphisms, they must intertwine the actions, and `df` must equal
/// `a' - transport(a)`.
pub fn verify_witness(
    from: &SkeletalGrCategory,
    to: &SkeletalGrCategory,
    w: &EquivalenceWitness,
) -> bool {
    if !w.object_iso.is_bijective() || !w.module_iso.is_bijective() {
        return false;
    }
    let intertwines = from.group().elements().all(|g| {
        from.module().group().elements().all(|a| {
            to.action.apply(w.object_iso.apply(g), w.module_iso.apply(a))
                == w.module_iso.apply(from.action.apply(g, a))
        })
    });
    if !intertwines {
        return false;
    }
    let Ok(moved) = transport_class(&from.assoc, &w.object_iso, &w.module_iso) else {
        return false;
    };
    let Ok(diff) = to.assoc.sub(&to.action, &moved) else {
        return false;
    };
    match crate::cohomology::coboundary(&to.action, &w.correction) {
        Ok(df) => df.values() == diff.values(),
        Err(_) => false,
    }
}
