use std::collections::BTreeSet;

use doublestar::action::NamedGroup;
use doublestar::perm::{audit, PermGroup, Permutation, PointSet, Tuple};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn perms(n: usize, k: usize) -> impl Strategy<Value = Vec<Permutation>> {
    prop::collection::vec(perm(n), 1..=k)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_and_associativity((a, b, c) in (perm(7), perm(7), perm(7))) {
        prop_assert!(a.then(&a.inverse()).is_identity());
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert_eq!(a.then(&b).inverse(), b.inverse().then(&a.inverse()));
    }

    #[test]
    fn cycle_notation_round_trips(p in perm(9)) {
        prop_assert_eq!(Permutation::parse(&p.to_string(), 9).unwrap(), p);
    }

    #[test]
    fn closure_is_a_group(gens in perms(6, 3)) {
        let g = PermGroup::closure(6, gens.clone(), 1000).unwrap();
        prop_assert_eq!(factorial(6) % g.order(), 0);
        prop_assert!(gens.iter().all(|x| g.contains(x)));
        for a in g.elements().iter().take(20) {
            prop_assert!(g.contains(&a.inverse()));
            for b in g.elements().iter().take(20) {
                prop_assert!(g.contains(&a.then(b)));
            }
        }
    }

    #[test]
    fn orbit_stabilizer_and_bfs_agree(gens in perms(6, 3), pts in prop::collection::btree_set(0usize..6, 1..4)) {
        let g = PermGroup::closure(6, gens, 1000).unwrap();
        let seed = PointSet::new(pts.into_iter().collect());
        let bfs: BTreeSet<PointSet> = g.orbit(&seed).unwrap().into_iter().collect();
        let filt: BTreeSet<PointSet> = g.orbit_by_elements(&seed).unwrap().into_iter().collect();
        prop_assert_eq!(&bfs, &filt);
        prop_assert_eq!(bfs.len() * g.stabilizer(&seed).unwrap().order(), g.order());
    }

    #[test]
    fn stabilizer_conjugation(gens in perms(6, 2), pick in any::<usize>(), t in prop::collection::vec(0usize..6, 1..4)) {
        let g = PermGroup::closure(6, gens, 1000).unwrap();
        let x = &g.elements()[pick % g.order()];
        let seed = Tuple(t);
        let image = Tuple(seed.0.iter().map(|&p| x.apply(p)).collect());
        let lhs = g.stabilizer(&image).unwrap();
        let rhs = g.stabilizer(&seed).unwrap().conjugate(x);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn orbits_partition_points(gens in perms(7, 2)) {
        let g = PermGroup::closure(7, gens, 10_000).unwrap();
        let orbits: Vec<BTreeSet<usize>> = (0..7)
            .map(|p| g.orbit(&p).unwrap().into_iter().collect())
            .collect();
        for a in &orbits {
            for b in &orbits {
                prop_assert!(a == b || a.is_disjoint(b));
            }
        }
    }
}

#[test]
fn named_group_orders() {
    assert_eq!(NamedGroup::Alternating(5).closure(100).unwrap().order(), 60);
    assert_eq!(NamedGroup::Alternating(7).closure(10_000).unwrap().order(), 2520);
    assert_eq!(NamedGroup::Wreath(3).closure(1000).unwrap().order(), 72);
    assert_eq!(NamedGroup::Wreath(4).closure(10_000).unwrap().order(), 1152);
    assert!(NamedGroup::Alternating(7).closure(100).is_err());
}

#[test]
fn cycle_generators_give_a5() {
    let gens = ["(1 2 3 4 5)", "(1 2 3)"]
        .iter()
        .map(|s| Permutation::parse(s, 5).unwrap())
        .collect();
    let g = PermGroup::closure(5, gens, 100).unwrap();
    assert_eq!(g.order(), 60);
    assert!(g.is_transitive_on(&(0..5).collect::<Vec<_>>()).unwrap());
}

#[test]
fn audit_sees_no_violation() {
    let g = NamedGroup::Symmetric(5).closure(200).unwrap();
    g.orbit(&PointSet::new(vec![0, 1])).unwrap();
    if cfg!(debug_assertions) {
        assert!(audit::orbits_checked() > 0);
    }
    assert_eq!(audit::violations(), 0);
}
