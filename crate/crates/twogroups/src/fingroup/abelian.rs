use super::{FiniteGroup, GroupError};

/// A finite abelian group together with a cyclic decomposition: moduli
/// `(m_1, ..., m_k)` in divisor-chain order (`m_1 | m_2 | ...`) and a group
/// isomorphism between element indices and tuples in `Z/m_1 x ... x Z/m_k`.
///
/// Tuples are ranked mixed-radix with the first coordinate most significant,
/// so tuple rank order is tuple lexicographic order.
#[derive(Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    group: FiniteGroup,
    moduli: Vec<usize>,
    elem_to_tuple: Vec<Vec<usize>>,
    tuple_to_elem: Vec<usize>,
}

impl AbelianGroup {
    /// Decomposes a commutative multiplication table into cyclic factors.
    pub fn new(group: FiniteGroup) -> Result<Self, GroupError> {
        if let Some((i, j)) = group.abelian_violation() {
            return Err(GroupError::NotAbelian { i, j });
        }
        let moduli = invariant_moduli(&group);
        debug_assert_eq!(moduli.iter().product::<usize>(), group.order());
        let gens = find_generators(&group, &moduli)
            .expect("every finite abelian group decomposes over its invariant moduli");

        let order = group.order();
        let k = moduli.len();
        let mut elem_to_tuple = vec![Vec::new(); order];
        let mut tuple_to_elem = vec![0usize; order];
        for (rank, slot) in tuple_to_elem.iter_mut().enumerate() {
            let tuple = unrank(rank, &moduli);
            let mut e = 0;
            for j in 0..k {
                e = group.mul(e, group.pow(gens[j], tuple[j]));
            }
            elem_to_tuple[e] = tuple;
            *slot = e;
        }
        Ok(AbelianGroup { group, moduli, elem_to_tuple, tuple_to_elem })
    }

    /// The product `Z/m_1 x ... x Z/m_k`, mixed-radix indexed, decomposed on
    /// the way in so the stored moduli are always in divisor-chain order
    /// even when the input list is not.
    pub fn from_moduli(moduli: &[usize]) -> Self {
        let moduli: Vec<usize> = moduli.iter().copied().filter(|&m| m > 1).collect();
        assert!(moduli.iter().all(|&m| m > 0));
        let order: usize = moduli.iter().product();
        let mut table = vec![0; order * order];
        for a in 0..order {
            let ta = unrank(a, &moduli);
            for b in 0..order {
                let tb = unrank(b, &moduli);
                let sum: Vec<usize> =
                    ta.iter().zip(&tb).zip(&moduli).map(|((&x, &y), &m)| (x + y) % m).collect();
                table[a * order + b] = rank(&sum, &moduli);
            }
        }
        let rows: Vec<Vec<usize>> =
            (0..order).map(|i| table[i * order..(i + 1) * order].to_vec()).collect();
        let group = FiniteGroup::from_table(rows).expect("product of cyclic groups");
        AbelianGroup::new(group).expect("products of cyclic groups are abelian")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn moduli(&self) -> &[usize] {
        &self.moduli
    }

    pub fn num_factors(&self) -> usize {
        self.moduli.len()
    }

    pub fn zero(&self) -> usize {
        0
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.group.mul(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.group.inv(a)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.group.mul(a, self.group.inv(b))
    }

    pub fn coords(&self, a: usize) -> &[usize] {
        &self.elem_to_tuple[a]
    }

    pub fn from_coords(&self, tuple: &[usize]) -> usize {
        self.tuple_to_elem[rank(tuple, &self.moduli)]
    }

    /// Reduces arbitrary integer coordinates mod the moduli and maps them to
    /// an element.
    pub fn from_int_coords(&self, coords: &[i64]) -> usize {
        let tuple: Vec<usize> = coords
            .iter()
            .zip(&self.moduli)
            .map(|(&c, &m)| c.rem_euclid(m as i64) as usize)
            .collect();
        self.from_coords(&tuple)
    }

    /// The element with coordinate tuple `e_j`.
    pub fn generator(&self, j: usize) -> usize {
        let mut t = vec![0; self.moduli.len()];
        t[j] = 1;
        self.from_coords(&t)
    }

    /// Renders the decomposition, e.g. `Z/2 x Z/4`, or `0` when trivial.
    pub fn describe(&self) -> String {
        if self.moduli.is_empty() {
            "0".to_string()
        } else {
            self.moduli.iter().map(|m| format!("Z/{m}")).collect::<Vec<_>>().join(" x ")
        }
    }
}

impl std::fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AbelianGroup({})", self.describe())
    }
}

fn rank(tuple: &[usize], moduli: &[usize]) -> usize {
    let mut r = 0;
    for (t, m) in tuple.iter().zip(moduli) {
        r = r * m + t;
    }
    r
}

fn unrank(mut r: usize, moduli: &[usize]) -> Vec<usize> {
    let mut tuple = vec![0; moduli.len()];
    for j in (0..moduli.len()).rev() {
        tuple[j] = r % moduli[j];
        r /= moduli[j];
    }
    tuple
}

/// Invariant factors in divisor-chain order, by repeatedly splitting off a
/// maximal-order cyclic subgroup (always a direct summand in an abelian
/// group) and recursing on the quotient.
fn invariant_moduli(g: &FiniteGroup) -> Vec<usize> {
    if g.order() == 1 {
        return Vec::new();
    }
    let top = g
        .elements()
        .max_by_key(|&e| (g.element_order(e), std::cmp::Reverse(e)))
        .expect("nonempty");
    let m = g.element_order(top);
    let sub = g.closure_of(&[top]);
    let quot = g.normal_subgroup(&sub).expect("abelian subgroups are normal");
    let mut moduli = invariant_moduli(&quot.quotient);
    moduli.push(m);
    moduli
}

/// Searches for generators realizing the invariant moduli, largest factor
/// first, smallest element index first; the partial span must stay injective.
fn find_generators(g: &FiniteGroup, moduli: &[usize]) -> Option<Vec<usize>> {
    let k = moduli.len();
    let mut gens = vec![0usize; k];

    fn span_size(g: &FiniteGroup, gens: &[usize], moduli: &[usize], from: usize) -> usize {
        let mut seen = vec![false; g.order()];
        let mut count = 0;
        let ranges: Vec<usize> = moduli[from..].to_vec();
        let total: usize = ranges.iter().product();
        for r in 0..total {
            let tuple = unrank(r, &ranges);
            let mut e = 0;
            for (j, &t) in tuple.iter().enumerate() {
                e = g.mul(e, g.pow(gens[from + j], t));
            }
            if !seen[e] {
                seen[e] = true;
                count += 1;
            }
        }
        count
    }

    fn rec(g: &FiniteGroup, moduli: &[usize], slot: usize, gens: &mut Vec<usize>) -> bool {
        for cand in g.elements() {
            if g.element_order(cand) != moduli[slot] {
                continue;
            }
            gens[slot] = cand;
            let want: usize = moduli[slot..].iter().product();
            if span_size(g, gens, moduli, slot) == want {
                if slot == 0 {
                    return true;
                }
                if rec(g, moduli, slot - 1, gens) {
                    return true;
                }
            }
        }
        false
    }

    if k == 0 {
        return Some(gens);
    }
    if rec(g, moduli, k - 1, &mut gens) {
        Some(gens)
    } else {
        None
    }
}
