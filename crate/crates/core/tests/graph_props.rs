use doublestar::graph::catalog::{complete, complete_bipartite, cycle, odd_graph, DEFAULT_VERTEX_CAP};
use doublestar::graph::io::{from_graph6, from_json, to_graph6, to_json};
use doublestar::graph::{are_isomorphic, Graph, DEFAULT_ISO_CAP};
use proptest::prelude::*;

fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn relabel(g: &Graph, map: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (map[u], map[v])).collect();
    Graph::from_edges(g.vertex_count(), &edges).unwrap()
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn graph6_and_json_round_trip(g in random_graph(20)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap().edges(), g.edges());
        prop_assert_eq!(from_json(&to_json(&g)).unwrap().edges(), g.edges());
    }

    #[test]
    fn relabelled_graphs_are_isomorphic((g, map) in random_graph(12).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), shuffled(n))
    })) {
        let h = relabel(&g, &map);
        let iso = are_isomorphic(&g, &h, DEFAULT_ISO_CAP).unwrap().expect("relabelling is an isomorphism");
        prop_assert!(iso.verify(&g, &h));
    }

    #[test]
    fn double_cover_shape(g in random_graph(12)) {
        let d = g.bipartite_double_cover();
        prop_assert_eq!(d.vertex_count(), 2 * g.vertex_count());
        prop_assert_eq!(d.edge_count(), 2 * g.edge_count());
        prop_assert!(d.is_bipartite());
    }

    #[test]
    fn arc_counts_of_regular_graphs(n in 3usize..9, l in 1usize..4) {
        // K_n has n (n-1) (n-2)^(l-1) l-arcs.
        let g = complete(n, DEFAULT_VERTEX_CAP).unwrap();
        prop_assert_eq!(g.l_arcs(l).len(), n * (n - 1) * (n - 2).pow(l as u32 - 1));
        prop_assert!(g.l_arcs(l).iter().all(|a| g.is_l_arc(a)));
    }
}

#[test]
fn cycle_isomorphism_rejects_different_lengths() {
    let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
    let hexagon = cycle(6, 10).unwrap();
    assert!(are_isomorphic(&two_triangles, &hexagon, DEFAULT_ISO_CAP).unwrap().is_none());
}

#[test]
fn odd_graph_counts() {
    let o3 = odd_graph(3, DEFAULT_VERTEX_CAP).unwrap();
    assert_eq!((o3.vertex_count(), o3.valency(), o3.girth()), (10, Some(3), Some(5)));
    let o4 = odd_graph(4, DEFAULT_VERTEX_CAP).unwrap();
    assert_eq!((o4.vertex_count(), o4.valency(), o4.girth()), (35, Some(4), Some(6)));
    let d = o3.bipartite_double_cover();
    assert_eq!((d.vertex_count(), d.girth(), d.is_connected()), (20, Some(6), true));
}

#[test]
fn k33_minus_matching_is_a_hexagon() {
    let k = complete_bipartite(3, 10).unwrap();
    let edges: Vec<(usize, usize)> = k.edges().into_iter().filter(|&(u, v)| v != u + 3).collect();
    let g = Graph::from_edges(6, &edges).unwrap();
    assert!(are_isomorphic(&g, &cycle(6, 10).unwrap(), DEFAULT_ISO_CAP).unwrap().is_some());
}
