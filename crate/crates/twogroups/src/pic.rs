//! Pic-categories modelled on 2-term chain complexes.
//!
//! A 2-term chain complex `C0 <-d- C1` of abelian groups presents a strict
//! Pic-category: objects are elements of `C0`, a morphism `g -> g'` is an
//! element `h` of `C1` with `dh = g' - g`, composition and tensor are
//! addition, and the symmetry is the identity. Restrained Pic-categories are
//! classified by the pair `(pi0, pi1) = (coker d, ker d)`, so equivalence is
//! decided on those invariants alone.

use crate::cohomology::{class_equal, Cochain};
use crate::fingroup::{
    isomorphisms_bounded, AbelianGroup, FiniteGroup, GroupAction, GroupError, GroupHom,
    DEFAULT_ORDER_BOUND,
};
use crate::grcat::SkeletalGrCategory;
use crate::xmod::{CrossedModule, XModError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PicError {
    #[error("boundary map does not run C1 -> C0")]
    MismatchedParts,
    #[error("symmetry table has length {got}, expected {expected}")]
    BadSymmetryShape { expected: usize, got: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    XMod(#[from] XModError),
}

/// `C0 <-d- C1`: two abelian groups and a homomorphism between them. With
/// two terms the chain condition `d . d = 0` is vacuous.
#[derive(Clone, PartialEq, Eq)]
pub struct ChainComplex2 {
    c0: AbelianGroup,
    c1: AbelianGroup,
    d: GroupHom,
}

impl ChainComplex2 {
    pub fn new(c0: AbelianGroup, c1: AbelianGroup, d: GroupHom) -> Result<Self, PicError> {
        if d.source() != c1.group() || d.target() != c0.group() {
            return Err(PicError::MismatchedParts);
        }
        Ok(ChainComplex2 { c0, c1, d })
    }

    pub fn c0(&self) -> &AbelianGroup {
        &self.c0
    }

    pub fn c1(&self) -> &AbelianGroup {
        &self.c1
    }

    pub fn boundary(&self) -> &GroupHom {
        &self.d
    }
}

impl std::fmt::Debug for ChainComplex2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ChainComplex2({} <- {})", self.c0.describe(), self.c1.describe())
    }
}

/// A morphism of the model: `level` in `C1`, from `source` to
/// `source + d(level)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PicMorphism {
    pub level: usize,
    pub source: usize,
}

/// The category presented by a 2-term chain complex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PicCategoryModel {
    complex: ChainComplex2,
}

/// Builds the model category of a complex; composition adds in `C1`, tensor
/// adds on both levels, the symmetry is the identity.
pub fn pic_from_chain(complex: ChainComplex2) -> PicCategoryModel {
    PicCategoryModel { complex }
}

impl PicCategoryModel {
    pub fn complex(&self) -> &ChainComplex2 {
        &self.complex
    }

    pub fn objects(&self) -> std::ops::Range<usize> {
        self.complex.c0.group().elements()
    }

    pub fn target_of(&self, m: PicMorphism) -> usize {
        self.complex.c0.add(m.source, self.complex.d.apply(m.level))
    }

    pub fn identity(&self, g: usize) -> PicMorphism {
        PicMorphism { level: 0, source: g }
    }

    /// All `h` with `dh = g' - g`.
    pub fn morphisms_between(&self, g: usize, g2: usize) -> Vec<usize> {
        let want = self.complex.c0.sub(g2, g);
        self.complex
            .c1
            .group()
            .elements()
            .filter(|&h| self.complex.d.apply(h) == want)
            .collect()
    }

    /// `m1` then `m2` by addition in `C1`, defined when the endpoints meet.
    pub fn compose(&self, m1: PicMorphism, m2: PicMorphism) -> Option<PicMorphism> {
        (self.target_of(m1) == m2.source).then(|| PicMorphism {
            level: self.complex.c1.add(m1.level, m2.level),
            source: m1.source,
        })
    }

    pub fn tensor(&self, m1: PicMorphism, m2: PicMorphism) -> PicMorphism {
        PicMorphism {
            level: self.complex.c1.add(m1.level, m2.level),
            source: self.complex.c0.add(m1.source, m2.source),
        }
    }

    /// `S_{g,g'}: g + g' -> g' + g` is the identity morphism; the model is
    /// restrained by construction.
    pub fn symmetry(&self, g: usize, g2: usize) -> PicMorphism {
        self.identity(self.complex.c0.add(g, g2))
    }

    /// `(pi0, pi1) = (C0 / im d, ker d)` with cyclic decompositions.
    pub fn invariants(&self) -> Result<(AbelianGroup, AbelianGroup), PicError> {
        let c0 = self.complex.c0.group();
        let image = self.complex.d.image_elems();
        let sq = c0.normal_subgroup(&image)?;
        let pi0 = AbelianGroup::new(sq.quotient)?;

        let kernel = self.complex.d.kernel_elems();
        let pos = |e: usize| kernel.binary_search(&e).expect("kernel is closed");
        let table: Vec<Vec<usize>> = kernel
            .iter()
            .map(|&a| {
                kernel.iter().map(|&b| pos(self.complex.c1.group().mul(a, b))).collect()
            })
            .collect();
        let pi1 = AbelianGroup::new(FiniteGroup::from_table(table)?)?;
        Ok((pi0, pi1))
    }

    /// The crossed module `d: C1 -> C0` with the trivial action; its
    /// skeletalization always carries the zero class.
    pub fn to_crossed_module(&self) -> CrossedModule {
        let t = self.complex.d.clone();
        let action = GroupAction::trivial(
            self.complex.c0.group().clone(),
            self.complex.c1.group().clone(),
        );
        CrossedModule::new(t, action)
            .expect("abelian groups with trivial action satisfy both axioms")
    }
}

/// Equivalence of restrained models: both invariant pairs isomorphic.
pub fn restrained_equivalent(
    m1: &PicCategoryModel,
    m2: &PicCategoryModel,
) -> Result<bool, PicError> {
    let (p0, p1) = m1.invariants()?;
    let (q0, q1) = m2.invariants()?;
    let pi0_iso =
        !isomorphisms_bounded(p0.group(), q0.group(), DEFAULT_ORDER_BOUND)?.is_empty();
    let pi1_iso =
        !isomorphisms_bounded(p1.group(), q1.group(), DEFAULT_ORDER_BOUND)?.is_empty();
    Ok(pi0_iso && pi1_iso)
}

/// A complex realizing the invariant pair `(G, A)`: `G <-0- A`.
pub fn realize_chain(g: &AbelianGroup, a: &AbelianGroup) -> ChainComplex2 {
    let d = GroupHom::zero(a.group().clone(), g.group().clone());
    ChainComplex2::new(g.clone(), a.clone(), d).expect("zero map always fits")
}

/// Skeletal Pic data: a skeletal Gr-category together with a symmetry table
/// `c: G^2 -> A`.
#[derive(Clone, Debug)]
pub struct PicSkeletalData {
    cat: SkeletalGrCategory,
    symmetry: Vec<usize>,
}

impl PicSkeletalData {
    pub fn new(cat: SkeletalGrCategory, symmetry: Vec<usize>) -> Result<Self, PicError> {
        let expected = cat.group().order() * cat.group().order();
        if symmetry.len() != expected {
            return Err(PicError::BadSymmetryShape { expected, got: symmetry.len() });
        }
        let a = cat.module().order();
        if let Some(&v) = symmetry.iter().find(|&&v| v >= a) {
            return Err(PicError::BadSymmetryShape { expected: a, got: v });
        }
        Ok(PicSkeletalData { cat, symmetry })
    }

    pub fn cat(&self) -> &SkeletalGrCategory {
        &self.cat
    }

    pub fn symmetry_at(&self, g: usize, g2: usize) -> usize {
        self.symmetry[g * self.cat.group().order() + g2]
    }
}

/// One axiom's verdict, with the first violating tuple when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub ok: bool,
    pub witness: Option<Vec<usize>>,
}

impl AxiomCheck {
    fn pass() -> Self {
        AxiomCheck { ok: true, witness: None }
    }

    fn fail(witness: Vec<usize>) -> Self {
        AxiomCheck { ok: false, witness: Some(witness) }
    }
}

/// Per-axiom report for skeletal Pic data.
#[derive(Clone, Debug)]
pub struct PicReport {
    pub abelian_objects: AxiomCheck,
    pub trivial_action: AxiomCheck,
    pub zero_class: AxiomCheck,
    pub hexagon: AxiomCheck,
    pub involution: AxiomCheck,
    pub restrained: AxiomCheck,
}

impl PicReport {
    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|(_, c)| c.ok)
    }

    pub fn checks(&self) -> [(&'static str, &AxiomCheck); 6] {
        [
            ("abelian-objects", &self.abelian_objects),
            ("trivial-action", &self.trivial_action),
            ("zero-class", &self.zero_class),
            ("hexagon", &self.hexagon),
            ("involution", &self.involution),
            ("restrained", &self.restrained),
        ]
    }
}

/// Checks each restrained-Pic axiom independently: abelian objects, trivial
/// action, zero associator class, the additive hexagon
/// `c(g, h + k) = c(g, h) + c(g, k)`, the involution `c(g, h) + c(h, g) = 0`,
/// and `c(g, g) = 0`.
pub fn validate_pic_data(data: &PicSkeletalData) -> PicReport {
    let cat = data.cat();
    let g = cat.group();
    let a = cat.module();

    let abelian_objects = match g.abelian_violation() {
        None => AxiomCheck::pass(),
        Some((i, j)) => AxiomCheck::fail(vec![i, j]),
    };

    let mut trivial_action = AxiomCheck::pass();
    'action: for x in g.elements() {
        for v in a.group().elements() {
            if cat.action().apply(x, v) != v {
                trivial_action = AxiomCheck::fail(vec![x, v]);
                break 'action;
            }
        }
    }

    let zero_class = {
        let zero = Cochain::zero(cat.action(), 3);
        match class_equal(cat.action(), &zero, cat.associator()) {
            Ok(Some(_)) => AxiomCheck::pass(),
            _ => AxiomCheck { ok: false, witness: None },
        }
    };

    let mut hexagon = AxiomCheck::pass();
    'hex: for x in g.elements() {
        for y in g.elements() {
            for z in g.elements() {
                let lhs = data.symmetry_at(x, g.mul(y, z));
                let rhs = a.add(data.symmetry_at(x, y), data.symmetry_at(x, z));
                if lhs != rhs {
                    hexagon = AxiomCheck::fail(vec![x, y, z]);
                    break 'hex;
                }
            }
        }
    }

    let mut involution = AxiomCheck::pass();
    'inv: for x in g.elements() {
        for y in g.elements() {
            if a.add(data.symmetry_at(x, y), data.symmetry_at(y, x)) != 0 {
                involution = AxiomCheck::fail(vec![x, y]);
                break 'inv;
            }
        }
    }

    let restrained = match g.elements().find(|&x| data.symmetry_at(x, x) != 0) {
        None => AxiomCheck::pass(),
        Some(x) => AxiomCheck::fail(vec![x]),
    };

    PicReport { abelian_objects, trivial_action, zero_class, hexagon, involution, restrained }
}
