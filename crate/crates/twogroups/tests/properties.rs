//! Cross-module property tests.

use proptest::prelude::*;

use twogroups::codec;
use twogroups::coherence::{canonical_path, evaluate_path, legal_moves, rotate, AssocPath, Shape};
use twogroups::cohomology::{class_equal, coboundary, Cochain};
use twogroups::fingroup::{AbelianGroup, FiniteGroup, GAction};
use twogroups::fixtures;

fn groups() -> Vec<FiniteGroup> {
    vec![
        FiniteGroup::trivial(),
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        fixtures::klein(),
        fixtures::s3(),
    ]
}

fn modules() -> Vec<AbelianGroup> {
    vec![
        fixtures::z_mod(2),
        fixtures::z_mod(3),
        fixtures::z_mod(4),
        AbelianGroup::from_moduli(&[2, 2]),
    ]
}

fn ambient_strategy() -> impl Strategy<Value = GAction> {
    // Trivial actions over a grid of small groups, plus the negation action.
    (0..groups().len(), 0..modules().len(), proptest::bool::ANY).prop_map(
        |(gi, mi, negation)| {
            if negation {
                fixtures::negation_action()
            } else {
                GAction::trivial(groups()[gi].clone(), modules()[mi].clone())
            }
        },
    )
}

fn cochain_strategy(
    max_degree: usize,
) -> impl Strategy<Value = (GAction, Cochain)> {
    (ambient_strategy(), 0..=max_degree).prop_flat_map(|(act, degree)| {
        let len = act.group().order().pow(degree as u32);
        let a = act.module().order();
        (
            Just(act.clone()),
            proptest::collection::vec(0..a, len)
                .prop_map(move |values| Cochain::from_values(&act, degree, values).unwrap()),
        )
    })
}

proptest! {
    #[test]
    fn d_squared_is_zero((act, c) in cochain_strategy(2)) {
        let dd = coboundary(&act, &coboundary(&act, &c).unwrap()).unwrap();
        prop_assert!(dd.values().iter().all(|&v| v == 0));
    }

    #[test]
    fn coboundary_of_normalized_is_normalized((act, c) in cochain_strategy(2)) {
        prop_assume!(c.degree() >= 1);
        // Zero the identity-containing positions to normalize the input.
        let order = act.group().order();
        let normalized = Cochain::from_fn(&act, c.degree(), |tuple| {
            if tuple.contains(&0) {
                0
            } else {
                c.values()[tuple.iter().fold(0, |acc, &g| acc * order + g)]
            }
        })
        .unwrap();
        prop_assert!(coboundary(&act, &normalized).unwrap().is_normalized());
    }

    #[test]
    fn group_codec_round_trips(moduli in proptest::collection::vec(2usize..6, 1..3)) {
        let a = AbelianGroup::from_moduli(&moduli);
        let decoded = codec::decode_group(&codec::encode_group(a.group())).unwrap();
        prop_assert_eq!(&decoded, a.group());
    }

    #[test]
    fn cochain_codec_round_trips((act, c) in cochain_strategy(3)) {
        let text = codec::encode_cochain(&c);
        let decoded = codec::decode_cochain(&text, &act).unwrap();
        prop_assert_eq!(decoded.values(), c.values());
    }

    #[test]
    fn random_walks_agree_with_canonical_paths(
        n in 3usize..=5,
        picks in proptest::collection::vec(0usize..64, 0..8),
        assignment_seed in 0usize..1000,
    ) {
        // Build a random path s -> comb by walking `picks` and then
        // normalizing; it must evaluate like the canonical path.
        let cat = fixtures::xyz_cat();
        let shapes = Shape::enumerate(n);
        let s = shapes[picks.first().copied().unwrap_or(0) % shapes.len()].clone();
        let comb = Shape::right_comb(n);

        let mut current = s.clone();
        let mut moves = Vec::new();
        for &p in &picks {
            let options = legal_moves(&current);
            if options.is_empty() { break; }
            let m = options[p % options.len()].clone();
            current = rotate(&current, &m.addr, m.inverse).unwrap();
            moves.push(m);
        }
        let wander = AssocPath { start: s.clone(), moves };
        let path = wander.concat(&canonical_path(&current, &comb).unwrap()).unwrap();
        let canonical = canonical_path(&s, &comb).unwrap();

        let order = cat.group().order();
        let assignment: Vec<usize> =
            (0..n).map(|i| (assignment_seed >> i) % order).collect();
        prop_assert_eq!(
            evaluate_path(&cat, &path, &assignment).unwrap(),
            evaluate_path(&cat, &canonical, &assignment).unwrap()
        );
    }
}

#[test]
fn class_equal_is_an_equivalence_relation() {
    // A fixture set of normalized cocycles over (Z2, Z2, trivial): the two
    // classes and coboundary shifts of each.
    let act = fixtures::ambient_z2_z2();
    let xyz = fixtures::xyz_cocycle();
    let zero = Cochain::zero(&act, 3);
    let shift = |base: &Cochain, f_val: usize| {
        let f = Cochain::from_values(&act, 2, vec![0, 0, 0, f_val]).unwrap();
        base.add(&act, &coboundary(&act, &f).unwrap()).unwrap()
    };
    let set = [zero.clone(), shift(&zero, 1), xyz.clone(), shift(&xyz, 1)];

    let related = |a: &Cochain, b: &Cochain| class_equal(&act, a, b).unwrap().is_some();
    for (i, a) in set.iter().enumerate() {
        assert!(related(a, a), "reflexivity at {i}");
        for (j, b) in set.iter().enumerate() {
            assert_eq!(related(a, b), related(b, a), "symmetry at ({i},{j})");
            for (k, c) in set.iter().enumerate() {
                if related(a, b) && related(b, c) {
                    assert!(related(a, c), "transitivity at ({i},{j},{k})");
                }
            }
        }
    }
    // The set splits into the two known classes.
    assert!(related(&set[0], &set[1]));
    assert!(related(&set[2], &set[3]));
    assert!(!related(&set[0], &set[2]));
}
