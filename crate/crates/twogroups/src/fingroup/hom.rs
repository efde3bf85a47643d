use super::{FiniteGroup, GroupError, DEFAULT_ORDER_BOUND};

/// A homomorphism between finite groups, stored as the image of every source
/// element.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    images: Vec<usize>,
}

impl GroupHom {
    pub fn new(
        source: FiniteGroup,
        target: FiniteGroup,
        images: Vec<usize>,
    ) -> Result<Self, GroupError> {
        if images.len() != source.order() {
            return Err(GroupError::BadHomShape {
                expected: source.order(),
                got: images.len(),
            });
        }
        for &im in &images {
            if im >= target.order() {
                return Err(GroupError::ImageOutOfRange { image: im, order: target.order() });
            }
        }
        if images[0] != 0 {
            return Err(GroupError::NotHomomorphic { i: 0, j: 0 });
        }
        for i in 0..source.order() {
            for j in 0..source.order() {
                if images[source.mul(i, j)] != target.mul(images[i], images[j]) {
                    return Err(GroupError::NotHomomorphic { i, j });
                }
            }
        }
        Ok(GroupHom { source, target, images })
    }

    pub fn identity(group: FiniteGroup) -> Self {
        let images = (0..group.order()).collect();
        GroupHom { source: group.clone(), target: group, images }
    }

    /// The constant map to the identity.
    pub fn zero(source: FiniteGroup, target: FiniteGroup) -> Self {
        let images = vec![0; source.order()];
        GroupHom { source, target, images }
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.images[g]
    }

    /// `self` then `other`; panics if the groups do not line up.
    pub fn then(&self, other: &GroupHom) -> GroupHom {
        assert_eq!(
            self.target, other.source,
            "composition needs matching middle group"
        );
        let images = self.images.iter().map(|&g| other.apply(g)).collect();
        GroupHom { source: self.source.clone(), target: other.target.clone(), images }
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.order() != self.target.order() {
            return false;
        }
        let mut seen = vec![false; self.target.order()];
        for &im in &self.images {
            if seen[im] {
                return false;
            }
            seen[im] = true;
        }
        true
    }

    /// The inverse homomorphism, when bijective.
    pub fn inverse(&self) -> Option<GroupHom> {
        if !self.is_bijective() {
            return None;
        }
        let mut images = vec![0; self.target.order()];
        for (g, &im) in self.images.iter().enumerate() {
            images[im] = g;
        }
        Some(GroupHom { source: self.target.clone(), target: self.source.clone(), images })
    }

    /// Sorted elements of the kernel.
    pub fn kernel_elems(&self) -> Vec<usize> {
        (0..self.source.order()).filter(|&g| self.images[g] == 0).collect()
    }

    /// Sorted elements of the image.
    pub fn image_elems(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self.images.clone();
        im.sort_unstable();
        im.dedup();
        im
    }

    pub fn is_surjective(&self) -> bool {
        self.image_elems().len() == self.target.order()
    }
}

impl std::fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupHom{:?}", self.images)
    }
}

/// All isomorphisms `src -> tgt`, deterministically ordered by their image
/// vectors; empty when the groups are not isomorphic.
///
/// Below order 9 this enumerates permutations directly; at or above it backs
/// off to backtracking over generator images.
pub fn isomorphisms(src: &FiniteGroup, tgt: &FiniteGroup) -> Result<Vec<GroupHom>, GroupError> {
    isomorphisms_bounded(src, tgt, DEFAULT_ORDER_BOUND)
}

pub fn isomorphisms_bounded(
    src: &FiniteGroup,
    tgt: &FiniteGroup,
    bound: usize,
) -> Result<Vec<GroupHom>, GroupError> {
    let n = src.order();
    if n > bound || tgt.order() > bound {
        return Err(GroupError::OrderBound { order: n.max(tgt.order()), bound });
    }
    if n != tgt.order() {
        return Ok(Vec::new());
    }
    let mut found = if n < 9 {
        permutation_search(src, tgt)
    } else {
        generator_search(src, tgt)
    };
    found.sort_by(|a, b| a.images.cmp(&b.images));
    Ok(found)
}

/// All automorphisms of `g` (with the default order bound).
pub fn automorphisms(g: &FiniteGroup) -> Result<Vec<GroupHom>, GroupError> {
    isomorphisms(g, g)
}

fn permutation_search(src: &FiniteGroup, tgt: &FiniteGroup) -> Vec<GroupHom> {
    let n = src.order();
    let mut images = vec![0usize; n];
    let mut used = vec![false; n];
    used[0] = true;
    let mut out = Vec::new();
    fn rec(
        src: &FiniteGroup,
        tgt: &FiniteGroup,
        pos: usize,
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<GroupHom>,
    ) {
        let n = src.order();
        if pos == n {
            if let Ok(h) = GroupHom::new(src.clone(), tgt.clone(), images.clone()) {
                out.push(h);
            }
            return;
        }
        for cand in 0..n {
            if used[cand] || src.element_order(pos) != tgt.element_order(cand) {
                continue;
            }
            // Partial homomorphism check against already-assigned elements.
            let ok = (0..pos).all(|q| {
                let p1 = src.mul(pos, q);
                let p2 = src.mul(q, pos);
                (p1 >= pos || tgt.mul(cand, images[q]) == images[p1])
                    && (p2 >= pos || tgt.mul(images[q], cand) == images[p2])
            });
            if !ok {
                continue;
            }
            images[pos] = cand;
            used[cand] = true;
            rec(src, tgt, pos + 1, images, used, out);
            used[cand] = false;
        }
    }
    rec(src, tgt, 1, &mut images, &mut used, &mut out);
    out
}

fn generator_search(src: &FiniteGroup, tgt: &FiniteGroup) -> Vec<GroupHom> {
    let gens = src.minimal_generators();
    let n = src.order();
    let mut out = Vec::new();
    let mut images: Vec<Option<usize>> = vec![None; n];
    images[0] = Some(0);
    let mut used = vec![false; n];
    used[0] = true;

    fn close(
        src: &FiniteGroup,
        tgt: &FiniteGroup,
        images: &mut [Option<usize>],
        used: &mut [bool],
        seed: usize,
    ) -> Option<Vec<usize>> {
        // Returns newly-defined elements for rollback, or None on conflict.
        let mut added: Vec<usize> = Vec::new();
        let mut queue = vec![seed];
        while let Some(e) = queue.pop() {
            let known: Vec<usize> =
                (0..src.order()).filter(|&k| images[k].is_some()).collect();
            for k in known {
                for (p, q) in [
                    (src.mul(e, k), tgt.mul(images[e].unwrap(), images[k].unwrap())),
                    (src.mul(k, e), tgt.mul(images[k].unwrap(), images[e].unwrap())),
                ] {
                    match images[p] {
                        Some(existing) if existing != q => {
                            for &a in &added {
                                used[images[a].unwrap()] = false;
                                images[a] = None;
                            }
                            return None;
                        }
                        Some(_) => {}
                        None => {
                            if used[q] {
                                for &a in &added {
                                    used[images[a].unwrap()] = false;
                                    images[a] = None;
                                }
                                return None;
                            }
                            images[p] = Some(q);
                            used[q] = true;
                            added.push(p);
                            queue.push(p);
                        }
                    }
                }
            }
        }
        Some(added)
    }

    fn rec(
        src: &FiniteGroup,
        tgt: &FiniteGroup,
        gens: &[usize],
        gi: usize,
        images: &mut [Option<usize>],
        used: &mut [bool],
        out: &mut Vec<GroupHom>,
    ) {
        if gi == gens.len() {
            if images.iter().all(Option::is_some) {
                let full: Vec<usize> = images.iter().map(|o| o.unwrap()).collect();
                if let Ok(h) = GroupHom::new(src.clone(), tgt.clone(), full) {
                    if h.is_bijective() {
                        out.push(h);
                    }
                }
            }
            return;
        }
        let g = gens[gi];
        if images[g].is_some() {
            rec(src, tgt, gens, gi + 1, images, used, out);
            return;
        }
        for cand in 0..tgt.order() {
            if used[cand] || tgt.element_order(cand) != src.element_order(g) {
                continue;
            }
            images[g] = Some(cand);
            used[cand] = true;
            if let Some(added) = close(src, tgt, images, used, g) {
                rec(src, tgt, gens, gi + 1, images, used, out);
                for a in added {
                    used[images[a].unwrap()] = false;
                    images[a] = None;
                }
            }
            used[cand] = false;
            images[g] = None;
        }
    }

    rec(src, tgt, &gens, 0, &mut images, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn identity_hom_on_z2() {
        let z2 = FiniteGroup::cyclic(2);
        let h = GroupHom::new(z2.clone(), z2, vec![0, 1]).unwrap();
        assert!(h.is_bijective());
    }

    #[test]
    fn doubling_on_z4() {
        let z4 = FiniteGroup::cyclic(4);
        let h = GroupHom::new(z4.clone(), z4, vec![0, 2, 0, 2]).unwrap();
        assert_eq!(h.kernel_elems(), vec![0, 2]);
        assert_eq!(h.image_elems(), vec![0, 2]);
    }

    #[test]
    fn z2_into_z3_rejected() {
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        let err = GroupHom::new(z2, z3, vec![0, 1]).unwrap_err();
        assert!(matches!(err, GroupError::NotHomomorphic { .. }));
    }

    #[test]
    fn trivial_and_z2_automorphisms() {
        assert_eq!(automorphisms(&FiniteGroup::trivial()).unwrap().len(), 1);
        assert_eq!(automorphisms(&FiniteGroup::cyclic(2)).unwrap().len(), 1);
    }

    #[test]
    fn z4_has_two_automorphisms() {
        // Oracle: brute force over all 4! permutations fixing 0.
        let z4 = FiniteGroup::cyclic(4);
        let mut count = 0;
        let perms = [
            [0, 1, 2, 3],
            [0, 1, 3, 2],
            [0, 2, 1, 3],
            [0, 2, 3, 1],
            [0, 3, 1, 2],
            [0, 3, 2, 1],
        ];
        for p in perms {
            if GroupHom::new(z4.clone(), z4.clone(), p.to_vec()).is_ok() {
                count += 1;
            }
        }
        assert_eq!(count, 2);
        let autos = automorphisms(&z4).unwrap();
        assert_eq!(autos.len(), 2);
        assert_eq!(autos[0].images(), &[0, 1, 2, 3]);
        assert_eq!(autos[1].images(), &[0, 3, 2, 1]);
    }

    #[test]
    fn z4_and_klein_not_isomorphic() {
        let z4 = FiniteGroup::cyclic(4);
        let klein = FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2));
        assert!(isomorphisms(&z4, &klein).unwrap().is_empty());
    }

    #[test]
    fn z3_self_isomorphisms() {
        let z3 = FiniteGroup::cyclic(3);
        assert_eq!(isomorphisms(&z3, &z3).unwrap().len(), 2);
    }

    #[test]
    fn s3_has_six_automorphisms() {
        let autos = automorphisms(&fixtures::s3()).unwrap();
        assert_eq!(autos.len(), 6);
    }

    #[test]
    fn automorphisms_form_a_group() {
        for g in [FiniteGroup::cyclic(6), fixtures::s3(), fixtures::klein()] {
            let autos = automorphisms(&g).unwrap();
            for a in &autos {
                assert!(autos.contains(&a.inverse().unwrap()));
                for b in &autos {
                    assert!(autos.contains(&a.then(b)));
                }
            }
        }
    }

    #[test]
    fn generator_search_agrees_with_permutations() {
        // Order >= 9 uses the generator path; force both on an order-8 group
        // and compare.
        let g = FiniteGroup::cyclic(8);
        let via_perm = permutation_search(&g, &g);
        let via_gens = generator_search(&g, &g);
        let mut a: Vec<_> = via_perm.iter().map(|h| h.images().to_vec()).collect();
        let mut b: Vec<_> = via_gens.iter().map(|h| h.images().to_vec()).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        assert_eq!(a.len(), 4);
    }

    #[test]
    fn order_bound_enforced() {
        let big = FiniteGroup::cyclic(30);
        assert!(matches!(
            isomorphisms(&big, &big),
            Err(GroupError::OrderBound { .. })
        ));
        assert_eq!(isomorphisms_bounded(&big, &big, 30).unwrap().len(), 8);
    }
}
