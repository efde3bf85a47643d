//! Parenthesized tensor words, rotation paths, and executable coherence
//! checks.
//!
//! A parenthesization is a binary tree; the elementary move is the right
//! rotation `((x y) z) -> (x (y z))`, the skeletal associator. Evaluating a
//! path of moves in a skeletal Gr-category sums one associator value per
//! move, twisted by the action of everything to the left of the move site.
//! Path independence of this evaluation is coherence made executable: for a
//! valid category the sum depends only on the endpoints, and the pentagon is
//! the smallest instance.
//!
//! Unit leaves are stripped before any path computation; strictified unitors
//! contribute nothing.

use crate::exec;
use crate::fingroup::GroupError;
use crate::grcat::SkeletalGrCategory;
use crate::rng::Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoherenceError {
    #[error("syntax error at byte {pos}: {reason}")]
    Syntax { pos: usize, reason: String },
    #[error("leaf label {label} is not an object index below {order}")]
    LabelOutOfRange { label: usize, order: usize },
    #[error("assignment has {got} labels, tree has {expected} leaves")]
    LeafCountMismatch { expected: usize, got: usize },
    #[error("move address does not point at a rotatable node")]
    BadAddress,
    #[error("paths must share endpoints")]
    EndpointMismatch,
    #[error("word length {n} exceeds the bound {bound}")]
    SizeBound { n: usize, bound: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Longest word the exhaustive checker will accept; tree pairs grow with the
/// square of a Catalan number.
pub const MAX_WORD_LENGTH: usize = 6;

/// A parenthesized expression over named objects and the unit token `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParenTree {
    Unit,
    Leaf(String),
    Tensor(Box<ParenTree>, Box<ParenTree>),
}

impl ParenTree {
    /// Non-unit leaf names, left to right.
    pub fn leaf_names(&self) -> Vec<&str> {
        match self {
            ParenTree::Unit => Vec::new(),
            ParenTree::Leaf(name) => vec![name.as_str()],
            ParenTree::Tensor(l, r) => {
                let mut out = l.leaf_names();
                out.extend(r.leaf_names());
                out
            }
        }
    }
}

/// Parses `expr := atom ('*' atom)?`, `atom := ident | 'I' | '(' expr ')'`.
/// Nested products must be parenthesized, so printing inverts parsing.
pub fn parse(input: &str) -> Result<ParenTree, CoherenceError> {
    let bytes = input.as_bytes();
    let mut pos = 0usize;
    let tree = parse_expr(bytes, &mut pos)?;
    skip_ws(bytes, &mut pos);
    if pos != bytes.len() {
        return Err(CoherenceError::Syntax { pos, reason: "trailing input".into() });
    }
    Ok(tree)
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_expr(bytes: &[u8], pos: &mut usize) -> Result<ParenTree, CoherenceError> {
    let first = parse_atom(bytes, pos)?;
    skip_ws(bytes, pos);
    if *pos < bytes.len() && bytes[*pos] == b'*' {
        *pos += 1;
        let second = parse_atom(bytes, pos)?;
        Ok(ParenTree::Tensor(Box::new(first), Box::new(second)))
    } else {
        Ok(first)
    }
}

fn parse_atom(bytes: &[u8], pos: &mut usize) -> Result<ParenTree, CoherenceError> {
    skip_ws(bytes, pos);
    if *pos >= bytes.len() {
        return Err(CoherenceError::Syntax {
            pos: *pos,
            reason: "unexpected end of input".into(),
        });
    }
    match bytes[*pos] {
        b'(' => {
            *pos += 1;
            let inner = parse_expr(bytes, pos)?;
            skip_ws(bytes, pos);
            if *pos >= bytes.len() || bytes[*pos] != b')' {
                return Err(CoherenceError::Syntax {
                    pos: *pos,
                    reason: "expected ')'".into(),
                });
            }
            *pos += 1;
            Ok(inner)
        }
        c if c.is_ascii_alphabetic() || c == b'_' => {
            let start = *pos;
            while *pos < bytes.len()
                && (bytes[*pos].is_ascii_alphanumeric() || bytes[*pos] == b'_')
            {
                *pos += 1;
            }
            let name = std::str::from_utf8(&bytes[start..*pos]).expect("ascii");
            if name == "I" {
                Ok(ParenTree::Unit)
            } else {
                Ok(ParenTree::Leaf(name.to_string()))
            }
        }
        _ => Err(CoherenceError::Syntax { pos: *pos, reason: "expected atom".into() }),
    }
}

/// Inverse of [`parse`] up to whitespace.
pub fn print(tree: &ParenTree) -> String {
    fn atom(tree: &ParenTree) -> String {
        match tree {
            ParenTree::Unit => "I".to_string(),
            ParenTree::Leaf(name) => name.clone(),
            ParenTree::Tensor(_, _) => format!("({})", top(tree)),
        }
    }
    fn top(tree: &ParenTree) -> String {
        match tree {
            ParenTree::Tensor(l, r) => format!("{}*{}", atom(l), atom(r)),
            other => atom(other),
        }
    }
    top(tree)
}

/// A unit-free parenthesization shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Leaf,
    Node(Box<Shape>, Box<Shape>),
}

impl Shape {
    pub fn leaves(&self) -> usize {
        match self {
            Shape::Leaf => 1,
            Shape::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Drops unit leaves; `None` when the word is all units.
    pub fn from_tree(tree: &ParenTree) -> Option<Shape> {
        match tree {
            ParenTree::Unit => None,
            ParenTree::Leaf(_) => Some(Shape::Leaf),
            ParenTree::Tensor(l, r) => match (Shape::from_tree(l), Shape::from_tree(r)) {
                (None, other) | (other, None) => other,
                (Some(a), Some(b)) => Some(Shape::Node(Box::new(a), Box::new(b))),
            },
        }
    }

    /// The fully right-nested shape with `n` leaves.
    pub fn right_comb(n: usize) -> Shape {
        assert!(n >= 1);
        let mut shape = Shape::Leaf;
        for _ in 1..n {
            shape = Shape::Node(Box::new(Shape::Leaf), Box::new(shape));
        }
        shape
    }

    /// Every shape with `n` leaves, deterministically ordered (left subtree
    /// size ascending, recursively).
    pub fn enumerate(n: usize) -> Vec<Shape> {
        assert!(n >= 1);
        if n == 1 {
            return vec![Shape::Leaf];
        }
        let mut out = Vec::new();
        for left in 1..n {
            for l in Shape::enumerate(left) {
                for r in Shape::enumerate(n - left) {
                    out.push(Shape::Node(Box::new(l.clone()), Box::new(r)));
                }
            }
        }
        out
    }

    /// Renders with positional leaf names `x1..xn`.
    pub fn describe(&self) -> String {
        fn go(shape: &Shape, next: &mut usize, top: bool) -> String {
            match shape {
                Shape::Leaf => {
                    let s = format!("x{next}");
                    *next += 1;
                    s
                }
                Shape::Node(l, r) => {
                    let body =
                        format!("{}*{}", go(l, next, false), go(r, next, false));
                    if top {
                        body
                    } else {
                        format!("({body})")
                    }
                }
            }
        }
        let mut next = 1;
        go(self, &mut next, true)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Left,
    Right,
}

/// One rotation: at the node addressed from the root, apply
/// `((x y) z) -> (x (y z))`, or its inverse when `inverse` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub addr: Vec<Step>,
    pub inverse: bool,
}

/// Applies a single rotation, rebuilding the spine above the site.
pub fn rotate(shape: &Shape, addr: &[Step], inverse: bool) -> Result<Shape, CoherenceError> {
    match addr.split_first() {
        None => {
            if inverse {
                match shape {
                    Shape::Node(x, yz) => match yz.as_ref() {
                        Shape::Node(y, z) => Ok(Shape::Node(
                            Box::new(Shape::Node(x.clone(), y.clone())),
                            z.clone(),
                        )),
                        Shape::Leaf => Err(CoherenceError::BadAddress),
                    },
                    Shape::Leaf => Err(CoherenceError::BadAddress),
                }
            } else {
                match shape {
                    Shape::Node(xy, z) => match xy.as_ref() {
                        Shape::Node(x, y) => Ok(Shape::Node(
                            x.clone(),
                            Box::new(Shape::Node(y.clone(), z.clone())),
                        )),
                        Shape::Leaf => Err(CoherenceError::BadAddress),
                    },
                    Shape::Leaf => Err(CoherenceError::BadAddress),
                }
            }
        }
        Some((step, rest)) => match shape {
            Shape::Leaf => Err(CoherenceError::BadAddress),
            Shape::Node(l, r) => match step {
                Step::Left => {
                    Ok(Shape::Node(Box::new(rotate(l, rest, inverse)?), r.clone()))
                }
                Step::Right => {
                    Ok(Shape::Node(l.clone(), Box::new(rotate(r, rest, inverse)?)))
                }
            },
        },
    }
}

/// All legal moves out of a shape, in preorder address order with forward
/// rotations before inverse ones at the same node.
pub fn legal_moves(shape: &Shape) -> Vec<Move> {
    fn walk(shape: &Shape, addr: &mut Vec<Step>, out: &mut Vec<Move>) {
        if let Shape::Node(l, r) = shape {
            if matches!(l.as_ref(), Shape::Node(_, _)) {
                out.push(Move { addr: addr.clone(), inverse: false });
            }
            if matches!(r.as_ref(), Shape::Node(_, _)) {
                out.push(Move { addr: addr.clone(), inverse: true });
            }
            addr.push(Step::Left);
            walk(l, addr, out);
            addr.pop();
            addr.push(Step::Right);
            walk(r, addr, out);
            addr.pop();
        }
    }
    let mut out = Vec::new();
    walk(shape, &mut Vec::new(), &mut out);
    out
}

/// A rotation path: a start shape and a list of moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocPath {
    pub start: Shape,
    pub moves: Vec<Move>,
}

impl AssocPath {
    pub fn empty(start: Shape) -> Self {
        AssocPath { start, moves: Vec::new() }
    }

    /// The shape after applying every move.
    pub fn end(&self) -> Result<Shape, CoherenceError> {
        let mut shape = self.start.clone();
        for m in &self.moves {
            shape = rotate(&shape, &m.addr, m.inverse)?;
        }
        Ok(shape)
    }

    /// The same path walked backwards.
    pub fn reversed(&self) -> Result<AssocPath, CoherenceError> {
        let start = self.end()?;
        let moves = self
            .moves
            .iter()
            .rev()
            .map(|m| Move { addr: m.addr.clone(), inverse: !m.inverse })
            .collect();
        Ok(AssocPath { start, moves })
    }

    /// `self` then `other`; endpoints must meet.
    pub fn concat(&self, other: &AssocPath) -> Result<AssocPath, CoherenceError> {
        if self.end()? != other.start {
            return Err(CoherenceError::EndpointMismatch);
        }
        let mut moves = self.moves.clone();
        moves.extend(other.moves.iter().cloned());
        Ok(AssocPath { start: self.start.clone(), moves })
    }
}

/// Canonical normalization: repeatedly rotate at the first rotatable node in
/// preorder (the root first), ending at the right comb.
pub fn path_to_right_comb(shape: &Shape) -> AssocPath {
    fn first_rotatable(shape: &Shape, addr: &mut Vec<Step>) -> Option<Vec<Step>> {
        match shape {
            Shape::Leaf => None,
            Shape::Node(l, r) => {
                if matches!(l.as_ref(), Shape::Node(_, _)) {
                    return Some(addr.clone());
                }
                addr.push(Step::Left);
                if let Some(found) = first_rotatable(l, addr) {
                    addr.pop();
                    return Some(found);
                }
                addr.pop();
                addr.push(Step::Right);
                let found = first_rotatable(r, addr);
                addr.pop();
                found
            }
        }
    }
    let mut current = shape.clone();
    let mut moves = Vec::new();
    while let Some(addr) = first_rotatable(&current, &mut Vec::new()) {
        current = rotate(&current, &addr, false).expect("rotatable by construction");
        moves.push(Move { addr, inverse: false });
    }
    debug_assert_eq!(current, Shape::right_comb(shape.leaves()));
    AssocPath { start: shape.clone(), moves }
}

/// The canonical path `s -> t` through the right comb.
pub fn canonical_path(s: &Shape, t: &Shape) -> Result<AssocPath, CoherenceError> {
    if s.leaves() != t.leaves() {
        return Err(CoherenceError::LeafCountMismatch {
            expected: s.leaves(),
            got: t.leaves(),
        });
    }
    path_to_right_comb(s).concat(&path_to_right_comb(t).reversed()?)
}

/// A random path `s -> t`: a seeded random walk away from `s`, then the
/// canonical path from wherever it lands.
pub fn random_path(
    s: &Shape,
    t: &Shape,
    rng: &mut Rng,
    walk_length: usize,
) -> Result<AssocPath, CoherenceError> {
    let mut current = s.clone();
    let mut moves = Vec::new();
    for _ in 0..walk_length {
        let options = legal_moves(&current);
        if options.is_empty() {
            break;
        }
        let m = options[rng.below(options.len())].clone();
        current = rotate(&current, &m.addr, m.inverse)?;
        moves.push(m);
    }
    let walk = AssocPath { start: s.clone(), moves };
    walk.concat(&canonical_path(&current, t)?)
}

/// Evaluates a path in a skeletal Gr-category: each move contributes
/// `rho(u)(a(x, y, z))` where `x, y, z` are the products of the three
/// subtrees at the site and `u` is the product of all leaves strictly to the
/// left; inverse moves contribute the negative.
pub fn evaluate_path(
    cat: &SkeletalGrCategory,
    path: &AssocPath,
    leaves: &[usize],
) -> Result<usize, CoherenceError> {
    let order = cat.group().order();
    if leaves.len() != path.start.leaves() {
        return Err(CoherenceError::LeafCountMismatch {
            expected: path.start.leaves(),
            got: leaves.len(),
        });
    }
    if let Some(&bad) = leaves.iter().find(|&&l| l >= order) {
        return Err(CoherenceError::LabelOutOfRange { label: bad, order });
    }
    let product = |from: usize, count: usize| -> usize {
        leaves[from..from + count].iter().fold(0, |acc, &g| cat.group().mul(acc, g))
    };

    let mut shape = path.start.clone();
    let mut total = cat.module().zero();
    for m in &path.moves {
        // Walk to the site, accumulating the left context.
        let mut cursor: &Shape = &shape;
        let mut offset = 0usize;
        let mut left_context = 0usize;
        for step in &m.addr {
            match cursor {
                Shape::Leaf => return Err(CoherenceError::BadAddress),
                Shape::Node(l, r) => match step {
                    Step::Left => cursor = l,
                    Step::Right => {
                        left_context =
                            cat.group().mul(left_context, product(offset, l.leaves()));
                        offset += l.leaves();
                        cursor = r;
                    }
                },
            }
        }
        let (x, y, z) = match (m.inverse, cursor) {
            (false, Shape::Node(xy, z)) => match xy.as_ref() {
                Shape::Node(x, y) => (x, y, z),
                Shape::Leaf => return Err(CoherenceError::BadAddress),
            },
            (true, Shape::Node(x, yz)) => match yz.as_ref() {
                Shape::Node(y, z) => (x, y, z),
                Shape::Leaf => return Err(CoherenceError::BadAddress),
            },
            (_, Shape::Leaf) => return Err(CoherenceError::BadAddress),
        };
        let xv = product(offset, x.leaves());
        let yv = product(offset + x.leaves(), y.leaves());
        let zv = product(offset + x.leaves() + y.leaves(), z.leaves());
        let raw = cat.assoc_at(xv, yv, zv);
        let twisted = cat.action().apply(left_context, raw);
        total = if m.inverse {
            cat.module().sub(total, twisted)
        } else {
            cat.module().add(total, twisted)
        };
        shape = rotate(&shape, &m.addr, m.inverse)?;
    }
    Ok(total)
}

/// Options for the exhaustive sweep.
#[derive(Clone, Copy, Debug)]
pub struct CoherenceOptions {
    pub seed: u64,
    /// Random alternate paths evaluated per (pair, assignment).
    pub random_paths: usize,
    /// Cap on leaf assignments; above it a seeded sample is used.
    pub max_assignments: usize,
}

impl Default for CoherenceOptions {
    fn default() -> Self {
        CoherenceOptions { seed: 0, random_paths: 3, max_assignments: 4096 }
    }
}

/// One ordered pair of parenthesizations and the first discrepancy found for
/// it, if any.
#[derive(Clone, Debug)]
pub struct PairOutcome {
    pub left: String,
    pub right: String,
    pub failure: Option<Discrepancy>,
}

#[derive(Clone, Debug)]
pub struct Discrepancy {
    pub assignment: Vec<usize>,
    pub expected: usize,
    pub got: usize,
}

#[derive(Clone, Debug)]
pub struct CoherenceReport {
    pub word_length: usize,
    pub assignments: usize,
    pub evaluations: usize,
    pub outcomes: Vec<PairOutcome>,
    /// When any pair disagrees, the first pentagon (cocycle) violation of
    /// the associator table.
    pub pentagon_witness: Option<Vec<usize>>,
}

impl CoherenceReport {
    pub fn coherent(&self) -> bool {
        self.outcomes.iter().all(|o| o.failure.is_none())
    }
}

/// Checks path independence for every ordered pair of parenthesizations of
/// an `n`-fold word: the canonical path value must match every sampled
/// alternate path value, for every (or a seeded sample of) leaf assignments.
pub fn coherence_check(
    cat: &SkeletalGrCategory,
    n: usize,
    opts: CoherenceOptions,
) -> Result<CoherenceReport, CoherenceError> {
    if n == 0 || n > MAX_WORD_LENGTH {
        return Err(CoherenceError::SizeBound { n, bound: MAX_WORD_LENGTH });
    }
    let order = cat.group().order();
    let total_assignments = order.checked_pow(n as u32).unwrap_or(usize::MAX);
    let assignments: Vec<Vec<usize>> = if total_assignments <= opts.max_assignments {
        (0..total_assignments)
            .map(|idx| crate::cohomology::tuple_unrank(idx, n, order))
            .collect()
    } else {
        let mut rng = Rng::fork(opts.seed, 0x5eed);
        (0..opts.max_assignments)
            .map(|_| (0..n).map(|_| rng.below(order)).collect())
            .collect()
    };

    let shapes = Shape::enumerate(n);
    let pairs: Vec<(usize, usize)> = (0..shapes.len())
        .flat_map(|i| (0..shapes.len()).map(move |j| (i, j)))
        .collect();

    let outcomes = exec::map_collect(&pairs, |&(i, j)| {
        let s = &shapes[i];
        let t = &shapes[j];
        let canonical = canonical_path(s, t).expect("equal leaf counts");
        let mut failure = None;
        'sweep: for (a_idx, assignment) in assignments.iter().enumerate() {
            let expected =
                evaluate_path(cat, &canonical, assignment).expect("canonical path evaluates");
            for k in 0..opts.random_paths {
                let tag = ((i * shapes.len() + j) as u64) << 32
                    | (a_idx as u64) << 8
                    | k as u64;
                let mut rng = Rng::fork(opts.seed, tag);
                let alt = random_path(s, t, &mut rng, n).expect("random path construction");
                let got = evaluate_path(cat, &alt, assignment).expect("alternate evaluates");
                if got != expected {
                    failure = Some(Discrepancy {
                        assignment: assignment.clone(),
                        expected,
                        got,
                    });
                    break 'sweep;
                }
            }
        }
        PairOutcome { left: s.describe(), right: t.describe(), failure }
    });

    let evaluations = pairs.len() * assignments.len() * (1 + opts.random_paths);
    let pentagon_witness = if outcomes.iter().any(|o| o.failure.is_some()) {
        crate::cohomology::cocycle_witness(cat.action(), cat.associator())
            .ok()
            .flatten()
    } else {
        None
    };
    Ok(CoherenceReport {
        word_length: n,
        assignments: assignments.len(),
        evaluations,
        outcomes,
        pentagon_witness,
    })
}

/// Checks path independence between two specific parenthesizations: the
/// canonical path through the right comb must evaluate like every sampled
/// alternate path, for each assignment.
pub fn compare_words(
    cat: &SkeletalGrCategory,
    left: &ParenTree,
    right: &ParenTree,
    opts: CoherenceOptions,
) -> Result<PairOutcome, CoherenceError> {
    let ls = Shape::from_tree(left);
    let rs = Shape::from_tree(right);
    let outcome_names = (print(left), print(right));
    let (ls, rs) = match (ls, rs) {
        (None, None) => {
            return Ok(PairOutcome {
                left: outcome_names.0,
                right: outcome_names.1,
                failure: None,
            })
        }
        (Some(a), Some(b)) => (a, b),
        (a, b) => {
            return Err(CoherenceError::LeafCountMismatch {
                expected: a.map_or(0, |s| s.leaves()),
                got: b.map_or(0, |s| s.leaves()),
            })
        }
    };
    if ls.leaves() != rs.leaves() {
        return Err(CoherenceError::LeafCountMismatch {
            expected: ls.leaves(),
            got: rs.leaves(),
        });
    }
    let n = ls.leaves();
    if n > MAX_WORD_LENGTH {
        return Err(CoherenceError::SizeBound { n, bound: MAX_WORD_LENGTH });
    }
    let order = cat.group().order();
    let total = order
        .checked_pow(n as u32)
        .unwrap_or(usize::MAX)
        .min(opts.max_assignments);
    let canonical = canonical_path(&ls, &rs)?;
    let mut failure = None;
    'sweep: for idx in 0..total {
        let assignment = crate::cohomology::tuple_unrank(idx, n, order);
        let expected = evaluate_path(cat, &canonical, &assignment)?;
        for k in 0..opts.random_paths {
            let mut rng = Rng::fork(opts.seed, (idx as u64) << 8 | k as u64);
            let alt = random_path(&ls, &rs, &mut rng, n)?;
            let got = evaluate_path(cat, &alt, &assignment)?;
            if got != expected {
                failure = Some(Discrepancy { assignment, expected, got });
                break 'sweep;
            }
        }
    }
    Ok(PairOutcome { left: outcome_names.0, right: outcome_names.1, failure })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::Cochain;
    use crate::fixtures;

    #[test]
    fn parse_left_and_right_combs() {
        let left = parse("(a*b)*c").unwrap();
        assert_eq!(print(&left), "(a*b)*c");
        assert_eq!(left.leaf_names(), vec!["a", "b", "c"]);
        let right = parse("a*(b*c)").unwrap();
        assert_eq!(print(&right), "a*(b*c)");
        assert_ne!(left, right);
    }

    #[test]
    fn parse_rejects_unbalanced() {
        let err = parse("(a*b").unwrap_err();
        assert!(matches!(err, CoherenceError::Syntax { pos: 4, .. }));
    }

    #[test]
    fn parse_rejects_flat_triple() {
        // nested products must be parenthesized
        assert!(parse("a*b*c").is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        for text in ["a", "I", "a*b", "(a*b)*c", "a*(b*c)", "((w*x)*y)*z", "(I*a)*(b*I)"] {
            let tree = parse(text).unwrap();
            assert_eq!(parse(&print(&tree)).unwrap(), tree);
        }
    }

    #[test]
    fn unit_stripping() {
        let tree = parse("(I*a)*(b*I)").unwrap();
        let shape = Shape::from_tree(&tree).unwrap();
        assert_eq!(shape.leaves(), 2);
        assert!(Shape::from_tree(&parse("I*I").unwrap()).is_none());
    }

    #[test]
    fn catalan_counts() {
        assert_eq!(Shape::enumerate(1).len(), 1);
        assert_eq!(Shape::enumerate(2).len(), 1);
        assert_eq!(Shape::enumerate(3).len(), 2);
        assert_eq!(Shape::enumerate(4).len(), 5);
        assert_eq!(Shape::enumerate(5).len(), 14);
        assert_eq!(Shape::enumerate(6).len(), 42);
    }

    #[test]
    fn comb_path_lengths() {
        // right comb: empty path; left comb of 3: one rotation
        assert!(path_to_right_comb(&Shape::right_comb(4)).moves.is_empty());
        let left3 = Shape::from_tree(&parse("(a*b)*c").unwrap()).unwrap();
        assert_eq!(path_to_right_comb(&left3).moves.len(), 1);
    }

    #[test]
    fn left_comb_four_rotates_at_root_first() {
        // ((w*x)*y)*z reaches the comb in two moves via (w*x)*(y*z).
        let shape = Shape::from_tree(&parse("((w*x)*y)*z").unwrap()).unwrap();
        let path = path_to_right_comb(&shape);
        assert_eq!(path.moves.len(), 2);
        assert!(path.moves.iter().all(|m| m.addr.is_empty() && !m.inverse));
        assert_eq!(path.end().unwrap(), Shape::right_comb(4));
        // The pentagon's other side takes three moves; both reach the comb.
        let inner_first = AssocPath {
            start: shape.clone(),
            moves: vec![
                Move { addr: vec![Step::Left], inverse: false },
                Move { addr: vec![], inverse: false },
                Move { addr: vec![Step::Right], inverse: false },
            ],
        };
        assert_eq!(inner_first.end().unwrap(), Shape::right_comb(4));
    }

    #[test]
    fn empty_path_evaluates_to_zero() {
        let cat = fixtures::xyz_cat();
        let comb = Shape::right_comb(3);
        let value = evaluate_path(&cat, &AssocPath::empty(comb), &[1, 1, 1]).unwrap();
        assert_eq!(value, 0);
    }

    #[test]
    fn single_root_rotation_reads_associator() {
        let cat = fixtures::xyz_cat();
        let left3 = Shape::from_tree(&parse("(a*b)*c").unwrap()).unwrap();
        let path = path_to_right_comb(&left3);
        assert_eq!(evaluate_path(&cat, &path, &[1, 1, 1]).unwrap(), 1);
        assert_eq!(evaluate_path(&cat, &path, &[1, 0, 1]).unwrap(), 0);
    }

    #[test]
    fn pentagon_two_sides_agree_exhaustively() {
        // Both pentagon paths for all 16 assignments over Z2; equality is
        // the cocycle identity.
        let cat = fixtures::xyz_cat();
        let shape = Shape::from_tree(&parse("((w*x)*y)*z").unwrap()).unwrap();
        let short = path_to_right_comb(&shape);
        let long = AssocPath {
            start: shape.clone(),
            moves: vec![
                Move { addr: vec![Step::Left], inverse: false },
                Move { addr: vec![], inverse: false },
                Move { addr: vec![Step::Right], inverse: false },
            ],
        };
        for idx in 0..16 {
            let assignment = crate::cohomology::tuple_unrank(idx, 4, 2);
            assert_eq!(
                evaluate_path(&cat, &short, &assignment).unwrap(),
                evaluate_path(&cat, &long, &assignment).unwrap(),
                "pentagon disagrees at {assignment:?}"
            );
        }
    }

    #[test]
    fn reversal_cancels() {
        let cat = fixtures::carry_cat(3);
        let shape = Shape::from_tree(&parse("((w*x)*y)*z").unwrap()).unwrap();
        let path = path_to_right_comb(&shape);
        let round = path.concat(&path.reversed().unwrap()).unwrap();
        for idx in 0..81 {
            let assignment = crate::cohomology::tuple_unrank(idx, 4, 3);
            assert_eq!(evaluate_path(&cat, &round, &assignment).unwrap(), 0);
        }
    }

    #[test]
    fn concatenation_is_additive() {
        let cat = fixtures::carry_cat(3);
        let shapes = Shape::enumerate(4);
        let s = &shapes[0];
        let mid = &shapes[2];
        let t = &shapes[4];
        let p1 = canonical_path(s, mid).unwrap();
        let p2 = canonical_path(mid, t).unwrap();
        let joined = p1.concat(&p2).unwrap();
        for idx in 0..81 {
            let assignment = crate::cohomology::tuple_unrank(idx, 4, 3);
            let lhs = evaluate_path(&cat, &joined, &assignment).unwrap();
            let rhs = cat.module().add(
                evaluate_path(&cat, &p1, &assignment).unwrap(),
                evaluate_path(&cat, &p2, &assignment).unwrap(),
            );
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn path_independence_exhaustive_small_words() {
        // Any two paths with equal endpoints agree, for every fixture
        // category and every assignment at n <= 4.
        for cat in [
            fixtures::zero_cat(),
            fixtures::xyz_cat(),
            fixtures::carry_cat(3),
            fixtures::negation_cat(),
        ] {
            for n in 2..=4 {
                let report = coherence_check(&cat, n, CoherenceOptions::default()).unwrap();
                assert!(report.coherent(), "{cat:?} incoherent at n={n}");
                assert!(report.pentagon_witness.is_none());
            }
        }
    }

    #[test]
    fn sampled_longer_words_stay_coherent() {
        let cat = fixtures::xyz_cat();
        let opts = CoherenceOptions { seed: 11, random_paths: 2, max_assignments: 12 };
        for n in 5..=6 {
            let report = coherence_check(&cat, n, opts).unwrap();
            assert!(report.coherent());
        }
    }

    #[test]
    fn injected_non_cocycle_is_caught_with_pentagon_witness() {
        let act = fixtures::ambient_z2_z2();
        let bad = Cochain::from_fn(&act, 3, |t| usize::from(t == [1, 1, 0])).unwrap();
        let cat = crate::grcat::SkeletalGrCategory::from_parts_unchecked(act, bad);
        let report = coherence_check(&cat, 4, CoherenceOptions::default()).unwrap();
        assert!(!report.coherent());
        let witness = report.pentagon_witness.expect("witness quadruple");
        assert_eq!(witness.len(), 4);
    }

    #[test]
    fn word_length_two_is_vacuous() {
        let cat = fixtures::xyz_cat();
        let report = coherence_check(&cat, 2, CoherenceOptions::default()).unwrap();
        assert_eq!(report.outcomes.len(), 1);
        assert!(report.coherent());
    }

    #[test]
    fn size_bound_enforced() {
        let cat = fixtures::zero_cat();
        assert!(matches!(
            coherence_check(&cat, 7, CoherenceOptions::default()),
            Err(CoherenceError::SizeBound { n: 7, .. })
        ));
    }

    #[test]
    fn compare_words_happy_and_mismatch() {
        let cat = fixtures::xyz_cat();
        let left = parse("((w*x)*y)*z").unwrap();
        let right = parse("w*(x*(y*z))").unwrap();
        let outcome = compare_words(&cat, &left, &right, CoherenceOptions::default()).unwrap();
        assert!(outcome.failure.is_none());
        let shorter = parse("a*b").unwrap();
        assert!(matches!(
            compare_words(&cat, &left, &shorter, CoherenceOptions::default()),
            Err(CoherenceError::LeafCountMismatch { .. })
        ));
    }

    #[test]
    fn determinism_of_reports() {
        let cat = fixtures::xyz_cat();
        let opts = CoherenceOptions { seed: 33, random_paths: 4, max_assignments: 4096 };
        let a = coherence_check(&cat, 4, opts).unwrap();
        let b = coherence_check(&cat, 4, opts).unwrap();
        assert_eq!(format!("{a:?}"), format!("{b:?}"));
    }
}
