//! Truncated simplicial nerves and their low-dimensional homology.
//!
//! Two gluing constructions: the nerve of a group (one simplex per tuple of
//! elements, faces by dropping or multiplying adjacent entries) and the
//! nerve of a strict 2-group (one vertex, an edge per object, a triangle per
//! morphism `g (x) h -> k`, and a tetrahedron per commuting label
//! quadruple). Every simplex of the truncation is stored, with degenerate
//! ones flagged; homology uses the normalized chain complex, where a
//! degenerate face contributes zero, and reduces integer boundary matrices
//! by Smith normal form.
//!
//! Dimension `N` of an `N`-truncation has no reliable homology (its boundary
//! in from dimension `N + 1` is missing), so reports stop at `N - 1`.

use crate::cohomology::{tuple_rank, tuple_unrank};
use crate::fingroup::{FiniteGroup, GroupError};
use crate::snf::IntMat;
use crate::xmod::StrictTwoGroup;
use thiserror::Error;

/// Cap on stored simplices per construction.
pub const DEFAULT_SIZE_BOUND: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NerveError {
    #[error("construction would store {size} simplices, bound is {bound}")]
    SizeBound { size: u128, bound: u128 },
    #[error("truncation depth {depth} not supported (cap is {cap})")]
    DepthUnsupported { depth: usize, cap: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// One dimension level: all simplices of the truncation (degenerate ones
/// flagged) with face maps into the previous level.
#[derive(Clone, Debug)]
pub struct DimLevel {
    pub labels: Vec<String>,
    pub degenerate: Vec<bool>,
    /// `faces[s][i]` is the index of `d_i s` in the previous level; empty
    /// vectors at dimension 0.
    pub faces: Vec<Vec<usize>>,
}

impl DimLevel {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn nondegenerate_count(&self) -> usize {
        self.degenerate.iter().filter(|&&d| !d).count()
    }
}

/// A simplicial set truncated at a fixed dimension.
#[derive(Clone, Debug)]
pub struct TruncatedSimplicialSet {
    dims: Vec<DimLevel>,
}

impl TruncatedSimplicialSet {
    pub fn depth(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn level(&self, dim: usize) -> &DimLevel {
        &self.dims[dim]
    }

    pub fn levels(&self) -> &[DimLevel] {
        &self.dims
    }
}

/// The classifying-space nerve of a group: one `n`-simplex per `n`-tuple,
/// with `d_0` dropping the head, `d_n` dropping the tail, and inner faces
/// multiplying adjacent entries. Tuples containing the identity are the
/// degenerate simplices.
pub fn nerve_group(
    group: &FiniteGroup,
    depth: usize,
) -> Result<TruncatedSimplicialSet, NerveError> {
    if depth > 4 {
        return Err(NerveError::DepthUnsupported { depth, cap: 4 });
    }
    let order = group.order();
    let total: u128 = (0..=depth).map(|k| (order as u128).pow(k as u32)).sum();
    if total > DEFAULT_SIZE_BOUND as u128 {
        return Err(NerveError::SizeBound { size: total, bound: DEFAULT_SIZE_BOUND as u128 });
    }

    let mut dims = Vec::with_capacity(depth + 1);
    for k in 0..=depth {
        let count = order.pow(k as u32);
        let mut labels = Vec::with_capacity(count);
        let mut degenerate = Vec::with_capacity(count);
        let mut faces = Vec::with_capacity(count);
        for idx in 0..count {
            let tuple = tuple_unrank(idx, k, order);
            labels.push(format!(
                "({})",
                tuple.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
            ));
            degenerate.push(tuple.contains(&0));
            if k == 0 {
                faces.push(Vec::new());
            } else {
                let mut fs = Vec::with_capacity(k + 1);
                for i in 0..=k {
                    let reduced: Vec<usize> = if i == 0 {
                        tuple[1..].to_vec()
                    } else if i == k {
                        tuple[..k - 1].to_vec()
                    } else {
                        let mut t = Vec::with_capacity(k - 1);
                        t.extend_from_slice(&tuple[..i - 1]);
                        t.push(group.mul(tuple[i - 1], tuple[i]));
                        t.extend_from_slice(&tuple[i + 1..]);
                        t
                    };
                    fs.push(tuple_rank(&reduced, order));
                }
                faces.push(fs);
            }
        }
        dims.push(DimLevel { labels, degenerate, faces });
    }
    Ok(TruncatedSimplicialSet { dims })
}

/// A triangle of the 2-group nerve: edges `g` and `h` with a 2-cell
/// `m: g (x) h -> tgt(m)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Triangle {
    g: usize,
    h: usize,
    m: usize,
}

/// The classifying-space nerve of a strict 2-group, truncated at `depth <= 3`:
/// one vertex, an edge per object, a triangle per 2-cell `g (x) h -> k`, and
/// a tetrahedron for each commuting quadruple of triangle labels (the fourth
/// face is solved from the other three, which is exactly the commutation
/// constraint).
pub fn nerve_two_group(
    t2g: &StrictTwoGroup,
    depth: usize,
) -> Result<TruncatedSimplicialSet, NerveError> {
    if depth > 3 {
        return Err(NerveError::DepthUnsupported { depth, cap: 3 });
    }
    let ng = t2g.objects().order();
    let nm = t2g.morphisms().order();
    let fiber = nm / ng; // morphisms with a fixed source
    let triangle_count = ng * ng * fiber;
    let tet_count = (ng as u128).pow(3) * (fiber as u128).pow(3);
    let total = 1 + ng as u128
        + if depth >= 2 { triangle_count as u128 } else { 0 }
        + if depth >= 3 { tet_count } else { 0 };
    if total > DEFAULT_SIZE_BOUND as u128 {
        return Err(NerveError::SizeBound { size: total, bound: DEFAULT_SIZE_BOUND as u128 });
    }

    let mut dims = Vec::with_capacity(depth + 1);
    dims.push(DimLevel {
        labels: vec!["*".to_string()],
        degenerate: vec![false],
        faces: vec![Vec::new()],
    });
    if depth >= 1 {
        dims.push(DimLevel {
            labels: (0..ng).map(|g| format!("({g})")).collect(),
            degenerate: (0..ng).map(|g| g == 0).collect(),
            faces: (0..ng).map(|_| vec![0, 0]).collect(),
        });
    }

    let mut triangles: Vec<Triangle> = Vec::new();
    if depth >= 2 {
        for g in 0..ng {
            for h in 0..ng {
                let source = t2g.objects().mul(g, h);
                for m in 0..nm {
                    if t2g.src_of(m) == source {
                        triangles.push(Triangle { g, h, m });
                    }
                }
            }
        }
        let degenerate: Vec<bool> = triangles
            .iter()
            .map(|t| {
                (t.g == 0 && t.m == t2g.identity_of(t.h))
                    || (t.h == 0 && t.m == t2g.identity_of(t.g))
            })
            .collect();
        let faces: Vec<Vec<usize>> = triangles
            .iter()
            .map(|t| vec![t.h, t2g.tgt_of(t.m), t.g])
            .collect();
        let labels = triangles
            .iter()
            .map(|t| format!("({},{};{})", t.g, t.h, t.m))
            .collect();
        dims.push(DimLevel { labels, degenerate, faces });
    }

    if depth >= 3 {
        let tri_index = |g: usize, h: usize, m: usize| -> usize {
            triangles
                .binary_search(&Triangle { g, h, m })
                .expect("every 2-cell triangle is enumerated")
        };
        // Degenerate tetrahedra: images of the three degeneracies applied to
        // each triangle, identified by their face quadruples.
        let mut degenerate_quads: Vec<[usize; 4]> = Vec::new();
        for t in &triangles {
            let k_edge = t2g.tgt_of(t.m);
            let own = tri_index(t.g, t.h, t.m);
            let s0 = [
                own,
                own,
                tri_index(0, k_edge, t2g.identity_of(k_edge)),
                tri_index(0, t.g, t2g.identity_of(t.g)),
            ];
            let s1 = [
                tri_index(0, t.h, t2g.identity_of(t.h)),
                own,
                own,
                tri_index(t.g, 0, t2g.identity_of(t.g)),
            ];
            let s2 = [
                tri_index(t.h, 0, t2g.identity_of(t.h)),
                tri_index(k_edge, 0, t2g.identity_of(k_edge)),
                own,
                own,
            ];
            degenerate_quads.extend([s0, s1, s2]);
        }
        degenerate_quads.sort_unstable();
        degenerate_quads.dedup();

        let mut labels = Vec::new();
        let mut degenerate = Vec::new();
        let mut faces = Vec::new();
        // A tetrahedron is determined by the back faces a: gh -> l,
        // b: hk -> m and the front face c: g(x)m -> n; the remaining front
        // face d: l(x)k -> n is solved from commutation.
        for a in &triangles {
            let g = a.g;
            let h = a.h;
            let l_edge = t2g.tgt_of(a.m);
            for b in &triangles {
                if b.g != h {
                    continue;
                }
                let k_edge = b.h;
                let m_edge = t2g.tgt_of(b.m);
                for c in &triangles {
                    if c.g != g || c.h != m_edge {
                        continue;
                    }
                    // route2 = (1_g (x) b) ; c : ghk -> n
                    let whisker_b = t2g.tensor(t2g.identity_of(g), b.m);
                    let route2 =
                        t2g.compose(whisker_b, c.m).expect("endpoints meet by construction");
                    // d = (a (x) 1_k)^{-1} ; route2 : lk -> n
                    let whisker_a = t2g.tensor(a.m, t2g.identity_of(k_edge));
                    let d_m = t2g
                        .compose(t2g.compose_inverse(whisker_a), route2)
                        .expect("endpoints meet by construction");
                    let quad = [
                        tri_index(b.g, b.h, b.m),
                        tri_index(l_edge, k_edge, d_m),
                        tri_index(c.g, c.h, c.m),
                        tri_index(a.g, a.h, a.m),
                    ];
                    labels.push(format!(
                        "(t{},t{},t{},t{})",
                        quad[0], quad[1], quad[2], quad[3]
                    ));
                    degenerate.push(degenerate_quads.binary_search(&quad).is_ok());
                    faces.push(quad.to_vec());
                }
            }
        }
        dims.push(DimLevel { labels, degenerate, faces });
    }
    Ok(TruncatedSimplicialSet { dims })
}

/// Outcome of the simplicial-identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialReport {
    /// First violation `(dim, simplex, i, j)` of `d_i d_j = d_{j-1} d_i`.
    pub witness: Option<(usize, usize, usize, usize)>,
}

impl SimplicialReport {
    pub fn ok(&self) -> bool {
        self.witness.is_none()
    }
}

/// Verifies `d_i d_j = d_{j-1} d_i` for `i < j` on every stored simplex.
pub fn check_simplicial(s: &TruncatedSimplicialSet) -> SimplicialReport {
    for dim in 2..=s.depth() {
        let level = s.level(dim);
        let below = s.level(dim - 1);
        for simplex in 0..level.len() {
            for j in 1..=dim {
                for i in 0..j {
                    let lhs = below.faces[level.faces[simplex][j]][i];
                    let rhs = below.faces[level.faces[simplex][i]][j - 1];
                    if lhs != rhs {
                        return SimplicialReport { witness: Some((dim, simplex, i, j)) };
                    }
                }
            }
        }
    }
    SimplicialReport { witness: None }
}

/// One homology group: free rank plus torsion invariant factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub dim: usize,
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn describe(&self) -> String {
        let mut parts = vec!["Z".to_string(); self.free_rank];
        parts.extend(self.torsion.iter().map(|m| format!("Z/{m}")));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" x ")
        }
    }
}

#[derive(Clone, Debug)]
pub struct HomologyReport {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyReport {
    pub fn group(&self, dim: usize) -> Option<&HomologyGroup> {
        self.groups.iter().find(|g| g.dim == dim)
    }
}

/// Boundary matrix of the normalized chain complex at dimension `k`:
/// nondegenerate simplices only, degenerate faces contributing zero.
fn boundary_matrix(s: &TruncatedSimplicialSet, k: usize) -> IntMat {
    let level = s.level(k);
    let below = s.level(k - 1);
    let row_index: Vec<Option<usize>> = {
        let mut next = 0;
        below
            .degenerate
            .iter()
            .map(|&d| {
                if d {
                    None
                } else {
                    let i = next;
                    next += 1;
                    Some(i)
                }
            })
            .collect()
    };
    let rows = below.nondegenerate_count();
    let cols = level.nondegenerate_count();
    let mut m = IntMat::zeros(rows, cols);
    let mut col = 0;
    for simplex in 0..level.len() {
        if level.degenerate[simplex] {
            continue;
        }
        for (i, &face) in level.faces[simplex].iter().enumerate() {
            if let Some(row) = row_index[face] {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                m.set(row, col, m.at(row, col) + sign);
            }
        }
        col += 1;
    }
    m
}

/// Homology of the normalized complex for dimensions `0..=upto`, capped at
/// `depth - 1`.
pub fn homology(
    s: &TruncatedSimplicialSet,
    upto: usize,
) -> Result<HomologyReport, NerveError> {
    let cap = s.depth().saturating_sub(1);
    let top = upto.min(cap);
    // rank of each boundary map d_k for k = 1 ..= top + 1
    let mut ranks = vec![0usize; top + 2];
    let mut torsion: Vec<Vec<u64>> = vec![Vec::new(); top + 2];
    for k in 1..=top + 1 {
        let m = boundary_matrix(s, k);
        let smith = m.smith();
        ranks[k] = smith.rank;
        torsion[k] = smith
            .invariant_factors()
            .into_iter()
            .filter(|&d| d > 1)
            .collect();
    }
    let groups = (0..=top)
        .map(|k| {
            let chains = s.level(k).nondegenerate_count();
            let rank_in = ranks[k + 1];
            let rank_out = if k == 0 { 0 } else { ranks[k] };
            HomologyGroup {
                dim: k,
                free_rank: chains - rank_out - rank_in,
                torsion: torsion[k + 1].clone(),
            }
        })
        .collect();
    Ok(HomologyReport { groups })
}

/// The line-oriented export: nondegenerate simplices with renumbered ids,
/// faces pointing at ids or marked `degenerate`.
pub fn export(s: &TruncatedSimplicialSet) -> String {
    let mut out = String::new();
    let ids: Vec<Vec<Option<usize>>> = s
        .levels()
        .iter()
        .map(|level| {
            let mut next = 0;
            level
                .degenerate
                .iter()
                .map(|&d| {
                    if d {
                        None
                    } else {
                        let i = next;
                        next += 1;
                        Some(i)
                    }
                })
                .collect()
        })
        .collect();
    for (dim, level) in s.levels().iter().enumerate() {
        for simplex in 0..level.len() {
            let Some(id) = ids[dim][simplex] else { continue };
            out.push_str(&format!("simplex {dim} {id} : {}\n", level.labels[simplex]));
            for (i, &face) in level.faces[simplex].iter().enumerate() {
                match ids[dim - 1][face] {
                    Some(fid) => out.push_str(&format!("face {i} -> {fid}\n")),
                    None => out.push_str(&format!("face {i} -> degenerate\n")),
                }
            }
        }
    }
    out
}
