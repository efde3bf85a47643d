use super::{GroupError, GroupHom};

/// A finite group as a multiplication table over element indices `0..order`,
/// with the identity at index 0 and inverses precomputed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a multiplication table: closure, associativity, identity at
    /// index 0, and inverses. Errors name the first violating tuple.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n) {
            return Err(GroupError::BadShape);
        }
        for (i, row) in table.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e >= n {
                    return Err(GroupError::NotClosed { row: i, col: j, entry: e, order: n });
                }
            }
        }
        let flat: Vec<usize> = table.concat();
        let mul = |a: usize, b: usize| flat[a * n + b];
        for i in 0..n {
            if mul(0, i) != i || mul(i, 0) != i {
                return Err(GroupError::NoIdentityAtZero { elem: i });
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if mul(mul(i, j), k) != mul(i, mul(j, k)) {
                        return Err(GroupError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for (i, slot) in inverse.iter_mut().enumerate() {
            match (0..n).find(|&j| mul(i, j) == 0 && mul(j, i) == 0) {
                Some(j) => *slot = j,
                None => return Err(GroupError::MissingInverse { elem: i }),
            }
        }
        Ok(FiniteGroup { order: n, table: flat, inverse })
    }

    /// The one-element group.
    pub fn trivial() -> Self {
        FiniteGroup { order: 1, table: vec![0], inverse: vec![0] }
    }

    /// The cyclic group of order `n` with addition mod `n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group order must be positive");
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = (i + j) % n;
            }
        }
        let inverse = (0..n).map(|i| (n - i) % n).collect();
        FiniteGroup { order: n, table, inverse }
    }

    /// Direct product, indexed by `a * other.order + b`.
    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let n = self.order * other.order;
        let mut table = vec![0; n * n];
        let idx = |a: usize, b: usize| a * other.order + b;
        for a1 in 0..self.order {
            for b1 in 0..other.order {
                for a2 in 0..self.order {
                    for b2 in 0..other.order {
                        table[idx(a1, b1) * n + idx(a2, b2)] =
                            idx(self.mul(a1, a2), other.mul(b1, b2));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|e| idx(self.inv(e / other.order), other.inv(e % other.order)))
            .collect();
        FiniteGroup { order: n, table, inverse }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `g * h * g^{-1}`
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut acc = g;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, g);
            k += 1;
        }
        k
    }

    pub fn abelian_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.order {
            for j in i + 1..self.order {
                if self.mul(i, j) != self.mul(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian_violation().is_none()
    }

    /// Smallest subgroup containing `seed`, as a sorted element list.
    pub fn closure_of(&self, seed: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        let mut members = vec![0];
        let mut queue: Vec<usize> = seed.iter().copied().filter(|&g| g < self.order).collect();
        while let Some(g) = queue.pop() {
            if in_set[g] {
                continue;
            }
            in_set[g] = true;
            members.push(g);
            for &m in &members {
                for p in [self.mul(g, m), self.mul(m, g)] {
                    if !in_set[p] {
                        queue.push(p);
                    }
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Subgroup generated by all commutators, as a sorted element list.
    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let mut comms = Vec::new();
        for g in 0..self.order {
            for h in 0..self.order {
                let c = self.mul(self.mul(g, h), self.mul(self.inv(g), self.inv(h)));
                comms.push(c);
            }
        }
        self.closure_of(&comms)
    }

    /// Quotient by the commutator subgroup.
    pub fn abelianization(&self) -> SubgroupQuotient {
        self.normal_subgroup(&self.commutator_subgroup())
            .expect("commutator subgroup is normal")
    }

    /// A small generating sequence, greedy by element index.
    pub fn minimal_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.closure_of(&[]);
        while span.len() < self.order {
            let next = (0..self.order)
                .find(|g| span.binary_search(g).is_err())
                .expect("span is proper");
            gens.push(next);
            span = self.closure_of(&gens);
        }
        gens
    }

    /// Checks that `elems` is a normal subgroup and returns it together with
    /// its inclusion, the quotient group, and the projection.
    ///
    /// Cosets are named after their smallest member, so the identity coset is
    /// index 0 of the quotient.
    pub fn normal_subgroup(&self, elems: &[usize]) -> Result<SubgroupQuotient, GroupError> {
        let mut members: Vec<usize> = elems.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) {
            return Err(GroupError::NotSubgroup { i: 0, j: 0 });
        }
        let mut in_set = vec![false; self.order];
        for &m in &members {
            if m >= self.order {
                return Err(GroupError::NotSubgroup { i: m, j: m });
            }
            in_set[m] = true;
        }
        // A finite subset containing the identity and closed under the
        // product is a subgroup.
        for &a in &members {
            for &b in &members {
                if !in_set[self.mul(a, b)] {
                    return Err(GroupError::NotSubgroup { i: a, j: b });
                }
            }
        }
        for g in 0..self.order {
            for &h in &members {
                if !in_set[self.conj(g, h)] {
                    return Err(GroupError::NotNormal { g, h });
                }
            }
        }

        let pos_of = |e: usize| members.binary_search(&e).expect("closed");
        let sub_table: Vec<Vec<usize>> = members
            .iter()
            .map(|&a| members.iter().map(|&b| pos_of(self.mul(a, b))).collect())
            .collect();
        let subgroup = FiniteGroup::from_table(sub_table).expect("subgroup table is a group");
        let inclusion = GroupHom::new(subgroup.clone(), self.clone(), members.clone())
            .expect("inclusion is a homomorphism");

        // Left cosets, represented by their minimal element.
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &h in &members {
                coset_of[self.mul(g, h)] = id;
            }
        }
        let q = reps.len();
        let q_table: Vec<Vec<usize>> = (0..q)
            .map(|i| (0..q).map(|j| coset_of[self.mul(reps[i], reps[j])]).collect())
            .collect();
        let quotient = FiniteGroup::from_table(q_table).expect("quotient table is a group");
        let projection = GroupHom::new(self.clone(), quotient.clone(), coset_of.clone())
            .expect("projection is a homomorphism");

        Ok(SubgroupQuotient { subgroup, inclusion, quotient, projection, reps })
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order={})", self.order)
    }
}

/// A normal subgroup with its inclusion, plus the quotient with its
/// projection. `reps` holds the minimal representative of each coset.
#[derive(Clone, Debug)]
pub struct SubgroupQuotient {
    pub subgroup: FiniteGroup,
    pub inclusion: GroupHom,
    pub quotient: FiniteGroup,
    pub projection: GroupHom,
    pub reps: Vec<usize>,
}
