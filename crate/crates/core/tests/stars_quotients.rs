use std::collections::BTreeSet;

use doublestar::action::{NamedGroup, VertexAction};
use doublestar::construct::{coset_oracle, double_star_graph, grow_orbit, stabilizer_chain};
use doublestar::graph::catalog::{complete, complete_bipartite, odd_graph, DEFAULT_VERTEX_CAP};
use doublestar::graph::{Graph, DEFAULT_ISO_CAP};
use doublestar::perm::PermGroup;
use doublestar::quotient::{
    gcd, params, prime_exponent_sum, reconstruct, refinement_series, Partition, QuotientError, SeriesOptions,
};
use doublestar::stars::{enumerate_double_star_orbits, is_double_star, stars_at, StarParams, ThetaOrbit};
use proptest::prelude::*;

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn vertex_group(g: &Graph, named: NamedGroup) -> PermGroup {
    let points = named.closure(100_000).unwrap();
    VertexAction::new(g, points).unwrap().vertices().clone()
}

fn symmetric_orbits(g: &Graph, x: &PermGroup, l: usize, r: usize) -> Vec<ThetaOrbit> {
    enumerate_double_star_orbits(g, x, StarParams::new(l, r), Default::default())
        .unwrap()
        .into_iter()
        .filter(ThetaOrbit::is_x_symmetric)
        .collect()
}

/// (v, k, r, b, d) read off one arc of the quotient, by direct counting.
fn naive_params(g: &Graph, p: &Partition) -> (usize, usize, usize, usize, usize) {
    let n = g.vertex_count();
    let adj = |a: usize, b: usize| g.neighbors(a).contains(&b);
    let (u, w) = g.edges()[0];
    let (bb, cc) = (p.block_of(u), p.block_of(w));
    let in_b: Vec<usize> = (0..n).filter(|&x| p.block_of(x) == bb).collect();
    let in_c: Vec<usize> = (0..n).filter(|&x| p.block_of(x) == cc).collect();
    let k = in_b.iter().filter(|&&x| in_c.iter().any(|&y| adj(x, y))).count();
    let r = (0..n)
        .filter(|&y| adj(u, y))
        .map(|y| p.block_of(y))
        .collect::<BTreeSet<_>>()
        .len();
    let b = (0..p.len())
        .filter(|&c| c != bb && in_b.iter().any(|&x| (0..n).any(|y| p.block_of(y) == c && adj(x, y))))
        .count();
    let d = in_c.iter().filter(|&&y| adj(u, y)).count();
    (in_b.len(), k, r, b, d)
}

#[test]
fn one_star_counts_in_complete_graphs() {
    for n in 3..=6 {
        let g = complete(n, DEFAULT_VERTEX_CAP).unwrap();
        for r in 1..n {
            let found = stars_at(&g, 0, StarParams::new(1, r), 100_000).unwrap();
            assert_eq!(found.len(), binomial(n - 1, r), "K_{n}, r = {r}");
        }
    }
}

#[test]
fn two_star_counts_in_complete_graphs() {
    // Each of the r first steps extends by r-1 of the n-2 remaining vertices.
    for n in 4..=5 {
        let g = complete(n, DEFAULT_VERTEX_CAP).unwrap();
        for r in 1..n {
            let found = stars_at(&g, 0, StarParams::new(2, r), 100_000).unwrap();
            let expect = binomial(n - 1, r) * binomial(n - 2, r - 1).pow(r as u32);
            assert_eq!(found.len(), expect, "K_{n}, r = {r}");
        }
    }
}

#[test]
fn orbits_are_disjoint_and_sized_by_stabilizers() {
    let g = complete(5, DEFAULT_VERTEX_CAP).unwrap();
    let x = vertex_group(&g, NamedGroup::Symmetric(5));
    let orbits = enumerate_double_star_orbits(&g, &x, StarParams::new(1, 2), Default::default()).unwrap();
    let mut seen = BTreeSet::new();
    for t in &orbits {
        for pair in t.members() {
            assert!(is_double_star(&g, &pair.0, &pair.1));
            assert!(seen.insert(pair.clone()), "pair in two orbits");
        }
        let rep = t.representative();
        let stab = x.stabilizer(&rep.left).unwrap().stabilizer(&rep.right).unwrap();
        assert_eq!(t.len() * stab.order(), x.order());
    }
}

fn survey() -> Vec<(&'static str, Graph, PermGroup, usize, usize)> {
    let k5 = complete(5, DEFAULT_VERTEX_CAP).unwrap();
    let o3 = odd_graph(3, DEFAULT_VERTEX_CAP).unwrap();
    let k33 = complete_bipartite(3, DEFAULT_VERTEX_CAP).unwrap();
    let a5 = vertex_group(&k5, NamedGroup::Alternating(5));
    let s5 = vertex_group(&k5, NamedGroup::Symmetric(5));
    let o3x = vertex_group(&o3, NamedGroup::Alternating(5));
    let w3 = vertex_group(&k33, NamedGroup::Wreath(3));
    vec![
        ("K5/A5", k5.clone(), a5.clone(), 1, 2),
        ("K5/A5", k5.clone(), a5, 1, 3),
        ("K5/S5", k5.clone(), s5.clone(), 1, 2),
        ("K5/S5", k5, s5, 2, 3),
        ("O3/A5", o3.clone(), o3x.clone(), 1, 2),
        ("O3/A5", o3, o3x, 2, 2),
        ("K33/wreath", k33.clone(), w3.clone(), 1, 2),
        ("K33/wreath", k33, w3, 2, 2),
    ]
}

#[test]
fn double_star_graphs_match_counting_and_cosets() {
    for (name, g, x, l, r) in survey() {
        for theta in symmetric_orbits(&g, &x, l, r) {
            let pi = double_star_graph(&g, &theta).unwrap();
            let stab = x.stabilizer(&theta.representative().left).unwrap();
            assert_eq!(pi.graph().vertex_count() * stab.order(), x.order(), "{name}");
            let partners = theta.len() / pi.graph().vertex_count();
            assert_eq!(pi.graph().valency(), Some(partners), "{name}");
            let iso = coset_oracle(&pi, DEFAULT_ISO_CAP).unwrap();
            assert!(iso.is_some(), "{name}: Π is not the coset graph");
            let p = params(pi.graph(), pi.action(), pi.center_partition()).unwrap();
            assert_eq!((p.v, p.k, p.r, p.b, p.d), naive_params(pi.graph(), pi.center_partition()), "{name}");
            assert_eq!(p.b, g.valency().unwrap(), "{name}");
            assert_eq!(p.r, r, "{name}");
        }
    }
}

#[test]
fn series_arithmetic_holds_on_surveyed_graphs() {
    for (name, g, x, l, r) in survey() {
        for theta in symmetric_orbits(&g, &x, l, r) {
            let pi = double_star_graph(&g, &theta).unwrap();
            let p0 = params(pi.graph(), pi.action(), pi.center_partition()).unwrap();
            if !p0.in_script_g() {
                continue;
            }
            let series =
                refinement_series(pi.graph(), pi.action(), pi.center_partition(), SeriesOptions::default()).unwrap();
            assert!(series.checks.iter().all(|c| c.passed()), "{name}: {:?}", series.checks);
            assert!(series.m >= 1 && series.m <= series.bound, "{name}");
            assert!(series.h >= 1 && series.h <= series.m, "{name}");
            for w in series.levels.windows(2) {
                assert!(w[1].partition.refines(&w[0].partition), "{name}");
                assert!(w[1].partition.len() > w[0].partition.len(), "{name}");
            }
        }
    }
}

#[test]
fn growth_criterion_agrees_with_star_test() {
    for (name, g, x, l, r) in survey() {
        if r < 2 {
            continue;
        }
        for theta in symmetric_orbits(&g, &x, l, r) {
            let chain = stabilizer_chain(&g, &theta).unwrap();
            let grown = grow_orbit(&g, &theta).unwrap();
            assert_eq!(grown.is_some(), chain.criterion[l - 1], "{name} l = {l}");
        }
    }
}

#[test]
fn spread_instances_refuse_higher_reconstruction() {
    let g = complete_bipartite(3, DEFAULT_VERTEX_CAP).unwrap();
    let x = vertex_group(&g, NamedGroup::Wreath(3));
    let theta = symmetric_orbits(&g, &x, 1, 2)
        .into_iter()
        .find(|t| {
            let pi = double_star_graph(&g, t).unwrap();
            params(pi.graph(), pi.action(), pi.center_partition()).unwrap().d == 2
        })
        .expect("a d = 2 orbit");
    let pi = double_star_graph(&g, &theta).unwrap();
    let err = reconstruct(pi.graph(), pi.action(), pi.center_partition(), 2, DEFAULT_ISO_CAP).unwrap_err();
    assert!(matches!(err, QuotientError::HypothesisViolated(_)), "{err}");
}

#[test]
fn series_bound_examples() {
    assert_eq!(gcd(12, 9), 3);
    assert_eq!(prime_exponent_sum(4) + 1, 3);
    assert_eq!(prime_exponent_sum(1) + 1, 1);
    assert_eq!(prime_exponent_sum(360), 6);
}

proptest! {
    #[test]
    fn exponent_sum_is_additive(a in 1usize..2000, b in 1usize..2000) {
        prop_assert_eq!(prime_exponent_sum(a * b), prime_exponent_sum(a) + prime_exponent_sum(b));
    }

    #[test]
    fn gcd_divides_both(a in 1usize..10_000, b in 1usize..10_000) {
        let g = gcd(a, b);
        prop_assert_eq!(a % g, 0);
        prop_assert_eq!(b % g, 0);
        prop_assert_eq!(gcd(a / g, b / g), 1);
    }
}
