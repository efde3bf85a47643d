//! Cochains `G^n -> A`, the coboundary operator, cohomology groups up to
//! degree 3, and coboundary membership.
//!
//! Two independent computation routes exist. The main route expresses the
//! coboundary operator as an integer matrix on cyclic coordinates of the
//! normalized cochain complex (values vanish when any argument is the
//! identity) and reduces with Smith normal form, appending the coefficient
//! moduli as extra relations so non-cyclic `A` works unchanged. The
//! brute-force route enumerates the full unnormalized complex and is only
//! feasible for the smallest ambients; it exists so the two can be checked
//! against each other.

use crate::fingroup::{GAction, GroupError, GroupHom};
use crate::snf::IntMat;
use thiserror::Error;

/// Column bound for the Smith-normal-form route: `|G|^n * (cyclic factors)`.
pub const DEFAULT_LINALG_BOUND: usize = 4096;
/// Bound on the number of cochains the brute-force route may enumerate.
pub const DEFAULT_ENUM_BOUND: u128 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("degree {degree} not supported (cap is 3)")]
    DegreeUnsupported { degree: usize },
    #[error("problem size {size} exceeds the bound {bound}")]
    SizeBound { size: u128, bound: u128 },
    #[error("cochains live over different (G, A, rho)")]
    MismatchedAmbient,
    #[error("cochain is not normalized")]
    NotNormalized,
    #[error("not a cocycle; first violation at {witness:?}")]
    NotCocycle { witness: Vec<usize> },
    #[error("value table has length {got}, expected {expected}")]
    BadShape { expected: usize, got: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A map `G^n -> A` as a value table indexed by tuples in lexicographic
/// order.
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    group_order: usize,
    module_order: usize,
    values: Vec<usize>,
}

impl Cochain {
    pub fn from_values(
        action: &GAction,
        degree: usize,
        values: Vec<usize>,
    ) -> Result<Self, CohomologyError> {
        let expected = action.group().order().pow(degree as u32);
        if values.len() != expected {
            return Err(CohomologyError::BadShape { expected, got: values.len() });
        }
        let module_order = action.module().order();
        if let Some(&v) = values.iter().find(|&&v| v >= module_order) {
            return Err(CohomologyError::BadShape { expected: module_order, got: v });
        }
        Ok(Cochain { degree, group_order: action.group().order(), module_order, values })
    }

    pub fn from_fn(
        action: &GAction,
        degree: usize,
        f: impl Fn(&[usize]) -> usize,
    ) -> Result<Self, CohomologyError> {
        let n = action.group().order();
        let count = n.pow(degree as u32);
        let values = (0..count).map(|idx| f(&tuple_unrank(idx, degree, n))).collect();
        Cochain::from_values(action, degree, values)
    }

    pub fn zero(action: &GAction, degree: usize) -> Self {
        let count = action.group().order().pow(degree as u32);
        Cochain {
            degree,
            group_order: action.group().order(),
            module_order: action.module().order(),
            values: vec![0; count],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn module_order(&self) -> usize {
        self.module_order
    }

    #[inline]
    pub fn value_at(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.degree);
        self.values[tuple_rank(tuple, self.group_order)]
    }

    /// True when the value is 0 whenever any argument is the identity.
    pub fn is_normalized(&self) -> bool {
        for (idx, &v) in self.values.iter().enumerate() {
            if v != 0 && tuple_unrank(idx, self.degree, self.group_order).contains(&0) {
                return false;
            }
        }
        true
    }

    pub fn matches(&self, action: &GAction) -> bool {
        self.group_order == action.group().order()
            && self.module_order == action.module().order()
    }

    pub fn add(&self, action: &GAction, other: &Cochain) -> Result<Cochain, CohomologyError> {
        self.zip(action, other, |m, a, b| m.add(a, b))
    }

    pub fn sub(&self, action: &GAction, other: &Cochain) -> Result<Cochain, CohomologyError> {
        self.zip(action, other, |m, a, b| m.sub(a, b))
    }

    fn zip(
        &self,
        action: &GAction,
        other: &Cochain,
        f: impl Fn(&crate::fingroup::AbelianGroup, usize, usize) -> usize,
    ) -> Result<Cochain, CohomologyError> {
        if self.degree != other.degree || !self.matches(action) || !other.matches(action) {
            return Err(CohomologyError::MismatchedAmbient);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| f(action.module(), a, b))
            .collect();
        Ok(Cochain { values, ..self.clone() })
    }
}

impl std::fmt::Debug for Cochain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cochain(deg={}, values={:?})", self.degree, self.values)
    }
}

pub(crate) fn tuple_rank(tuple: &[usize], order: usize) -> usize {
    tuple.iter().fold(0, |acc, &g| acc * order + g)
}

pub(crate) fn tuple_unrank(mut idx: usize, len: usize, order: usize) -> Vec<usize> {
    let mut tuple = vec![0; len];
    for slot in (0..len).rev() {
        tuple[slot] = idx % order;
        idx /= order;
    }
    tuple
}

/// The bar-resolution coboundary
/// `(dh)(g_0,..,g_n) = rho(g_0) h(g_1,..,g_n)
///   + sum_i (-1)^i h(.., g_{i-1} g_i, ..) + (-1)^{n+1} h(g_0,..,g_{n-1})`.
///
/// For degree-2 inputs this is exactly the 3-coboundary formula; input
/// degrees above 3 are rejected.
pub fn coboundary(action: &GAction, c: &Cochain) -> Result<Cochain, CohomologyError> {
    if c.degree > 3 {
        return Err(CohomologyError::DegreeUnsupported { degree: c.degree });
    }
    if !c.matches(action) {
        return Err(CohomologyError::MismatchedAmbient);
    }
    Ok(differential(action, c))
}

fn differential(action: &GAction, c: &Cochain) -> Cochain {
    let g = action.group();
    let module = action.module();
    let n = c.degree;
    let order = g.order();
    let out_len = order.pow((n + 1) as u32);
    let mut values = vec![0usize; out_len];
    for (idx, slot) in values.iter_mut().enumerate() {
        let tuple = tuple_unrank(idx, n + 1, order);
        let mut acc = action.apply(tuple[0], c.value_at(&tuple[1..]));
        for i in 1..=n {
            let mut merged = Vec::with_capacity(n);
            merged.extend_from_slice(&tuple[..i - 1]);
            merged.push(g.mul(tuple[i - 1], tuple[i]));
            merged.extend_from_slice(&tuple[i + 1..]);
            let term = c.value_at(&merged);
            acc = if i % 2 == 1 { module.sub(acc, term) } else { module.add(acc, term) };
        }
        let last = c.value_at(&tuple[..n]);
        acc = if (n + 1) % 2 == 1 { module.sub(acc, last) } else { module.add(acc, last) };
        *slot = acc;
    }
    Cochain { degree: n + 1, group_order: order, module_order: module.order(), values }
}

/// `None` when `dc = 0`; otherwise the first tuple (lexicographically) where
/// the cocycle identity fails.
pub fn cocycle_witness(
    action: &GAction,
    c: &Cochain,
) -> Result<Option<Vec<usize>>, CohomologyError> {
    let d = coboundary(action, c)?;
    Ok(d.values
        .iter()
        .position(|&v| v != 0)
        .map(|idx| tuple_unrank(idx, c.degree + 1, c.group_order)))
}

pub fn is_cocycle(action: &GAction, c: &Cochain) -> Result<bool, CohomologyError> {
    Ok(cocycle_witness(action, c)?.is_none())
}

/// A cohomology class, carried by a normalized representative cocycle.
#[derive(Clone, Debug)]
pub struct CohomologyClass {
    representative: Cochain,
    is_zero: bool,
}

impl CohomologyClass {
    pub fn of(action: &GAction, cocycle: &Cochain) -> Result<Self, CohomologyError> {
        let zero = Cochain::zero(action, cocycle.degree());
        let is_zero = class_equal(action, &zero, cocycle)?.is_some();
        Ok(CohomologyClass { representative: cocycle.clone(), is_zero })
    }

    pub fn representative(&self) -> &Cochain {
        &self.representative
    }

    pub fn is_zero(&self) -> bool {
        self.is_zero
    }
}

/// `H^n` as invariant-factor moduli with one representative cocycle per
/// generator.
#[derive(Clone, Debug)]
pub struct CohomologyGroupReport {
    pub degree: usize,
    pub invariant_factors: Vec<u64>,
    pub generators: Vec<Cochain>,
}

impl CohomologyGroupReport {
    pub fn order(&self) -> u128 {
        self.invariant_factors.iter().map(|&m| m as u128).product()
    }

    pub fn describe(&self) -> String {
        if self.invariant_factors.is_empty() {
            "0".to_string()
        } else {
            self.invariant_factors
                .iter()
                .map(|m| format!("Z/{m}"))
                .collect::<Vec<_>>()
                .join(" x ")
        }
    }
}

/// Normalized tuples (no identity entries) of the given length, in
/// lexicographic order.
fn normalized_tuples(len: usize, order: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    if order <= 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut tuple = vec![1usize; len];
    loop {
        out.push(tuple.clone());
        let mut slot = len;
        loop {
            if slot == 0 {
                return out;
            }
            slot -= 1;
            if tuple[slot] + 1 < order {
                tuple[slot] += 1;
                for t in &mut tuple[slot + 1..] {
                    *t = 1;
                }
                break;
            }
        }
    }
}

/// Integer matrix of `d_n` on the normalized complex, in cyclic coordinates.
/// Rows are (target tuple, factor), columns (source tuple, factor).
fn differential_matrix(action: &GAction, n: usize) -> IntMat {
    let g = action.group();
    let order = g.order();
    let k = action.module().num_factors();
    let src_tuples = normalized_tuples(n, order);
    let dst_tuples = normalized_tuples(n + 1, order);
    let src_pos = |tuple: &[usize]| -> Option<usize> {
        if tuple.contains(&0) {
            return None;
        }
        // Rank among normalized tuples: digits in 1..order.
        let mut r = 0;
        for &t in tuple {
            r = r * (order - 1) + (t - 1);
        }
        Some(r)
    };
    let mut m = IntMat::zeros(dst_tuples.len() * k, src_tuples.len() * k);
    for (r, tuple) in dst_tuples.iter().enumerate() {
        // rho(g_0) h(g_1, ..., g_n): always normalized.
        let head = src_pos(&tuple[1..]).expect("tail of a normalized tuple");
        let rho = action.matrix_of(tuple[0]);
        for i in 0..k {
            for j in 0..k {
                let v = m.at(r * k + i, head * k + j) + rho.at(i, j);
                m.set(r * k + i, head * k + j, v);
            }
        }
        for step in 1..=n {
            let mut merged = Vec::with_capacity(n);
            merged.extend_from_slice(&tuple[..step - 1]);
            merged.push(g.mul(tuple[step - 1], tuple[step]));
            merged.extend_from_slice(&tuple[step + 1..]);
            if let Some(p) = src_pos(&merged) {
                let sign = if step % 2 == 1 { -1 } else { 1 };
                for i in 0..k {
                    let v = m.at(r * k + i, p * k + i) + sign;
                    m.set(r * k + i, p * k + i, v);
                }
            }
        }
        let last = src_pos(&tuple[..n]).expect("head of a normalized tuple");
        let sign = if (n + 1) % 2 == 1 { -1 } else { 1 };
        for i in 0..k {
            let v = m.at(r * k + i, last * k + i) + sign;
            m.set(r * k + i, last * k + i, v);
        }
    }
    m
}

fn coordinate_moduli(action: &GAction, tuples: usize) -> Vec<i64> {
    let k = action.module().num_factors();
    let mut out = Vec::with_capacity(tuples * k);
    for _ in 0..tuples {
        for &m in action.module().moduli() {
            out.push(m as i64);
        }
    }
    out
}

/// Appends `diag(moduli)` columns to a matrix.
fn augment_with_moduli(m: &IntMat, moduli: &[i64]) -> IntMat {
    let rows = m.rows();
    assert_eq!(rows, moduli.len());
    let mut out = IntMat::zeros(rows, m.cols() + rows);
    for (i, &modulus) in moduli.iter().enumerate() {
        for j in 0..m.cols() {
            out.set(i, j, m.at(i, j));
        }
        out.set(i, m.cols() + i, modulus);
    }
    out
}

pub fn cohomology_group(
    action: &GAction,
    degree: usize,
) -> Result<CohomologyGroupReport, CohomologyError> {
    cohomology_group_bounded(action, degree, DEFAULT_LINALG_BOUND)
}

/// `H^n(G, A)` by integer linear algebra on the normalized complex.
pub fn cohomology_group_bounded(
    action: &GAction,
    degree: usize,
    bound: usize,
) -> Result<CohomologyGroupReport, CohomologyError> {
    if degree > 3 {
        return Err(CohomologyError::DegreeUnsupported { degree });
    }
    let order = action.group().order();
    let k = action.module().num_factors();
    let size = order.pow(degree as u32).saturating_mul(k.max(1));
    if size > bound {
        return Err(CohomologyError::SizeBound { size: size as u128, bound: bound as u128 });
    }

    let src_count = normalized_tuples(degree, order).len();
    let n_coords = src_count * k;
    if n_coords == 0 {
        // Trivial coefficient module or no normalized tuples: H^n = 0.
        return Ok(CohomologyGroupReport {
            degree,
            invariant_factors: Vec::new(),
            generators: Vec::new(),
        });
    }

    // Kernel lattice of d_n modulo the target moduli.
    let d_up = differential_matrix(action, degree);
    let up_moduli = coordinate_moduli(action, normalized_tuples(degree + 1, order).len());
    let augmented = augment_with_moduli(&d_up, &up_moduli);
    let mut kernel_gens: Vec<Vec<i64>> = augmented
        .kernel_basis()
        .into_iter()
        .map(|v| v[..n_coords].to_vec())
        .collect();
    let own_moduli = coordinate_moduli(action, src_count);
    for (i, &m) in own_moduli.iter().enumerate() {
        let mut v = vec![0i64; n_coords];
        v[i] = m;
        kernel_gens.push(v);
    }
    let kernel_mat = IntMat::from_columns(n_coords, &kernel_gens);
    let basis = kernel_mat.column_span_basis();
    assert_eq!(basis.len(), n_coords, "cocycle lattice has full rank");
    let basis_mat = IntMat::from_columns(n_coords, &basis);

    // Coboundary sublattice: image of d_{n-1} plus the moduli relations.
    let mut boundary_gens: Vec<Vec<i64>> = Vec::new();
    if degree > 0 {
        let d_down = differential_matrix(action, degree - 1);
        for j in 0..d_down.cols() {
            boundary_gens.push(d_down.column(j));
        }
    }
    for (i, &m) in own_moduli.iter().enumerate() {
        let mut v = vec![0i64; n_coords];
        v[i] = m;
        boundary_gens.push(v);
    }

    // Express the boundary generators in the kernel basis and diagonalize.
    let in_basis: Vec<Vec<i64>> = boundary_gens
        .iter()
        .map(|col| basis_mat.solve(col).expect("coboundaries are cocycles"))
        .collect();
    let x = IntMat::from_columns(n_coords, &in_basis);
    let s = x.smith();
    assert_eq!(s.rank, n_coords, "quotient of full-rank lattices is finite");

    let new_basis = basis_mat.mul(&s.u_inv);
    let mut invariant_factors = Vec::new();
    let mut generators = Vec::new();
    for i in 0..s.rank {
        let d = s.d.at(i, i).unsigned_abs();
        if d <= 1 {
            continue;
        }
        invariant_factors.push(d);
        generators.push(cochain_from_coords(action, degree, &new_basis.column(i)));
    }
    Ok(CohomologyGroupReport { degree, invariant_factors, generators })
}

/// Turns a coordinate vector over normalized tuples into a (normalized)
/// cochain.
fn cochain_from_coords(action: &GAction, degree: usize, coords: &[i64]) -> Cochain {
    let order = action.group().order();
    let module = action.module();
    let k = module.num_factors();
    let mut values = vec![0usize; order.pow(degree as u32)];
    for (p, tuple) in normalized_tuples(degree, order).iter().enumerate() {
        let elem = module.from_int_coords(&coords[p * k..(p + 1) * k]);
        values[tuple_rank(tuple, order)] = elem;
    }
    Cochain { degree, group_order: order, module_order: module.order(), values }
}

/// `H^n` by enumerating every cochain of the full (unnormalized) complex.
/// Only feasible for the smallest ambients; the independent check for the
/// linear-algebra route.
pub fn cohomology_group_exhaustive(
    action: &GAction,
    degree: usize,
) -> Result<CohomologyGroupReport, CohomologyError> {
    if degree > 3 {
        return Err(CohomologyError::DegreeUnsupported { degree });
    }
    let order = action.group().order();
    let a = action.module().order();
    let n_tuples = order.pow(degree as u32);
    let cochains = (a as u128).checked_pow(n_tuples as u32).unwrap_or(u128::MAX);
    let lower_cochains = if degree == 0 {
        0
    } else {
        (a as u128)
            .checked_pow(order.pow((degree - 1) as u32) as u32)
            .unwrap_or(u128::MAX)
    };
    let size = cochains.max(lower_cochains);
    if size > DEFAULT_ENUM_BOUND {
        return Err(CohomologyError::SizeBound { size, bound: DEFAULT_ENUM_BOUND });
    }

    // All coboundaries, canonically sorted.
    let mut boundaries: Vec<Vec<usize>> = if degree == 0 {
        vec![vec![0; n_tuples]]
    } else {
        enumerate_tables(a, order.pow((degree - 1) as u32))
            .map(|values| {
                let c =
                    Cochain { degree: degree - 1, group_order: order, module_order: a, values };
                differential(action, &c).values
            })
            .collect()
    };
    boundaries.sort_unstable();
    boundaries.dedup();

    // All cocycles, reduced to canonical (minimal) coset representatives.
    let module = action.module();
    let canon = |v: &[usize]| -> Vec<usize> {
        boundaries
            .iter()
            .map(|b| {
                v.iter().zip(b).map(|(&x, &y)| module.add(x, y)).collect::<Vec<usize>>()
            })
            .min()
            .expect("at least the zero boundary")
    };
    let mut reps: Vec<Vec<usize>> = Vec::new();
    for values in enumerate_tables(a, n_tuples) {
        let c = Cochain { degree, group_order: order, module_order: a, values };
        if !differential(action, &c).values.iter().all(|&v| v == 0) {
            continue;
        }
        let r = canon(&c.values);
        if !reps.contains(&r) {
            reps.push(r);
        }
    }
    reps.sort_unstable();

    // The quotient as a multiplication table over the representatives. The
    // zero cochain is a boundary, so the identity coset sorts first.
    let table: Vec<Vec<usize>> = reps
        .iter()
        .map(|x| {
            reps.iter()
                .map(|y| {
                    let sum: Vec<usize> =
                        x.iter().zip(y).map(|(&p, &q)| module.add(p, q)).collect();
                    reps.binary_search(&canon(&sum)).expect("closed under addition")
                })
                .collect()
        })
        .collect();
    let quotient = crate::fingroup::FiniteGroup::from_table(table)
        .expect("cocycles mod coboundaries form a group");
    let decomposed = crate::fingroup::AbelianGroup::new(quotient)?;

    let invariant_factors: Vec<u64> = decomposed.moduli().iter().map(|&m| m as u64).collect();
    let generators: Vec<Cochain> = (0..decomposed.num_factors())
        .map(|j| {
            let rep = &reps[decomposed.generator(j)];
            Cochain { degree, group_order: order, module_order: a, values: rep.clone() }
        })
        .collect();
    Ok(CohomologyGroupReport { degree, invariant_factors, generators })
}

/// Iterator over all value tables of the given length over `0..radix`.
fn enumerate_tables(radix: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (radix as u128).pow(len as u32);
    (0..total).map(move |mut idx| {
        let mut v = vec![0usize; len];
        for slot in (0..len).rev() {
            v[slot] = (idx % radix as u128) as usize;
            idx /= radix as u128;
        }
        v
    })
}

/// Decides whether `a2 - a` is a coboundary; on success returns one
/// normalized 2-cochain witness `f` with `df = a2 - a`.
///
/// Both inputs must be normalized 3-cocycles over the same ambient.
pub fn class_equal(
    action: &GAction,
    a: &Cochain,
    a2: &Cochain,
) -> Result<Option<Cochain>, CohomologyError> {
    for c in [a, a2] {
        if c.degree != 3 {
            return Err(CohomologyError::DegreeUnsupported { degree: c.degree });
        }
        if !c.matches(action) {
            return Err(CohomologyError::MismatchedAmbient);
        }
        if !c.is_normalized() {
            return Err(CohomologyError::NotNormalized);
        }
        if let Some(witness) = cocycle_witness(action, c)? {
            return Err(CohomologyError::NotCocycle { witness });
        }
    }
    let diff = a2.sub(action, a)?;

    let order = action.group().order();
    let module = action.module();
    let k = module.num_factors();
    if k == 0 {
        return Ok(Some(Cochain::zero(action, 2)));
    }
    let target_tuples = normalized_tuples(3, order);
    let mut rhs = Vec::with_capacity(target_tuples.len() * k);
    for tuple in &target_tuples {
        for &c in module.coords(diff.value_at(tuple)) {
            rhs.push(c as i64);
        }
    }
    let d2 = differential_matrix(action, 2);
    let moduli = coordinate_moduli(action, target_tuples.len());
    let augmented = augment_with_moduli(&d2, &moduli);
    match augmented.solve(&rhs) {
        None => Ok(None),
        Some(solution) => {
            let cols = d2.cols();
            let f = cochain_from_coords(action, 2, &solution[..cols]);
            debug_assert_eq!(
                differential(action, &f).values,
                diff.values,
                "witness must satisfy df = a2 - a"
            );
            Ok(Some(f))
        }
    }
}

/// Pushes a cochain forward along isomorphisms `phi: G -> G'` and
/// `psi: A -> A'`: `a'(g') = psi(a(phi^{-1} g'_1, ..., phi^{-1} g'_n))`.
pub fn transport_class(
    a: &Cochain,
    phi: &GroupHom,
    psi: &GroupHom,
) -> Result<Cochain, CohomologyError> {
    if !phi.is_bijective() || !psi.is_bijective() {
        return Err(GroupError::NotIsomorphism.into());
    }
    if phi.source().order() != a.group_order || psi.source().order() != a.module_order {
        return Err(CohomologyError::MismatchedAmbient);
    }
    let phi_inv = phi.inverse().expect("bijective");
    let order = phi.target().order();
    let n = a.degree;
    let values = (0..order.pow(n as u32))
        .map(|idx| {
            let tuple = tuple_unrank(idx, n, order);
            let back: Vec<usize> = tuple.iter().map(|&g| phi_inv.apply(g)).collect();
            psi.apply(a.value_at(&back))
        })
        .collect();
    Ok(Cochain { degree: n, group_order: order, module_order: psi.target().order(), values })
}
