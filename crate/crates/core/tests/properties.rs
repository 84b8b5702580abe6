use std::collections::HashSet;

use graphdim::cayley::{best_translate, counting_identity, translate, AbelianGroup};
use graphdim::coloring::{chromatic_number, decomposition_coloring, greedy_coloring, Coloring};
use graphdim::embedding::eht_embed;
use graphdim::io::{encode_edge_list, encode_graph6, parse_edge_list, parse_graph6};
use graphdim::verify::enumerate_labeled_graphs;
use graphdim::vertex_set::binomial;
use graphdim::{dim_bounds, dim_exact, subdim, subdim_naive, subsets_of_size, Graph, VertexSet};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let len = pairs.len();
        subsequence(pairs, 0..=len).prop_map(move |edges| Graph::from_edges(n, edges).unwrap())
    })
}

fn arb_graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(1, max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn arb_set(n: usize) -> impl Strategy<Value = VertexSet> {
    any::<u64>().prop_map(move |b| VertexSet::from_bits(b).intersection(VertexSet::full(n)))
}

/// χ by trying every assignment with `k` colors, for increasing `k`.
fn chi_brute(g: &Graph) -> usize {
    let n = g.n();
    let edges = g.edges();
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let colors: Vec<usize> = (0..n)
                .map(|_| {
                    let x = c % k;
                    c /= k;
                    x
                })
                .collect();
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
        }
    }
    0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn delta_is_monotone(g in arb_graph(1, 12), a in any::<u64>(), b in any::<u64>()) {
        let all = g.vertices();
        let small = VertexSet::from_bits(a & b).intersection(all);
        let big = VertexSet::from_bits(a).intersection(all);
        prop_assert!(g.max_degree_within(small) <= g.max_degree_within(big));
    }

    #[test]
    fn graph6_roundtrip(g in arb_graph(0, 20)) {
        let enc = encode_graph6(&g);
        prop_assert_eq!(parse_graph6(&enc).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&encode_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn subsets_are_distinct_and_complete(n in 0usize..=12, s in 0usize..=12) {
        let s = s.min(n);
        let all: Vec<_> = subsets_of_size(n, s).collect();
        let uniq: HashSet<_> = all.iter().copied().collect();
        prop_assert_eq!(all.len() as u64, binomial(n as u64, s as u64));
        prop_assert_eq!(uniq.len(), all.len());
        prop_assert!(all.iter().all(|t| t.len() == s));
    }

    #[test]
    fn subdim_matches_naive(g in arb_graph(1, 10), bits in any::<u64>()) {
        let host = VertexSet::from_bits(bits).intersection(g.vertices());
        let host = if host.is_empty() { g.vertices() } else { host };
        let fast = subdim(&g, host).unwrap();
        let slow = subdim_naive(&g, host).unwrap();
        prop_assert_eq!(&fast, &slow);
        prop_assert!(fast.verify(&g));
        prop_assert!(fast.value <= g.max_degree_within(host));
    }

    #[test]
    fn isomorphism_invariance((g, perm) in arb_graph_with_perm(8)) {
        let h = g.permuted(&perm).unwrap();
        prop_assert_eq!(dim_exact(&g).unwrap().value, dim_exact(&h).unwrap().value);
        prop_assert_eq!(
            subdim(&g, g.vertices()).unwrap().value,
            subdim(&h, h.vertices()).unwrap().value
        );
        prop_assert_eq!(chromatic_number(&g).unwrap().0, chromatic_number(&h).unwrap().0);
    }

    #[test]
    fn dim_certificate_and_bounds(g in arb_graph(0, 10)) {
        let c = dim_exact(&g).unwrap();
        prop_assert!(c.verify(&g));
        let (lo, hi) = dim_bounds(&g);
        prop_assert!(lo <= c.value && c.value <= hi);
        prop_assert_eq!(c.value >= 1, g.edge_count() > 0);
    }

    #[test]
    fn greedy_never_beats_chi(g in arb_graph(1, 9), seed in any::<u64>()) {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        // cheap deterministic shuffle from the seed
        let mut s = seed | 1;
        for i in (1..n).rev() {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            order.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let greedy = greedy_coloring(&g, &order).unwrap();
        prop_assert!(greedy.is_proper(&g));
        prop_assert!(greedy.palette_size <= g.max_degree() + 1);
        let (chi, col) = chromatic_number(&g).unwrap();
        prop_assert!(chi <= greedy.palette_size);
        prop_assert!(col.is_proper(&g));
    }

    #[test]
    fn decomposition_chunks_bounded_by_dim(g in arb_graph(1, 10)) {
        let dim = dim_exact(&g).unwrap().value;
        let (col, trace) = decomposition_coloring(&g).unwrap();
        prop_assert!(col.is_proper(&g) && trace.is_consistent(&g));
        prop_assert!(trace.rounds.iter().all(|r| r.chunk_delta <= dim));
    }

    #[test]
    fn embedding_edges_are_unit(g in arb_graph(1, 14), seed in any::<u64>()) {
        let n = g.n();
        let order: Vec<usize> = (0..n).map(|i| (i + seed as usize) % n).collect();
        let col = greedy_coloring(&g, &order).unwrap();
        let emb = eht_embed(&g, &col).unwrap();
        prop_assert_eq!(emb.ambient_dim, 2 * col.palette_size);
        for (u, v) in g.edges() {
            let sq: f64 = emb.points[u].iter().zip(&emb.points[v]).map(|(a, b)| (a - b) * (a - b)).sum();
            prop_assert!((sq - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn translation_identities(
        orders in proptest::collection::vec(1usize..=8, 1..=2),
        wb in any::<u64>(),
        sb in any::<u64>(),
        a in any::<usize>(),
    ) {
        let grp = AbelianGroup::new(orders).unwrap();
        let n = grp.size();
        let w = VertexSet::from_bits(wb).intersection(grp.elements());
        let s = VertexSet::from_bits(sb).intersection(grp.elements());
        let a = a % n;
        prop_assert_eq!(translate(&grp, translate(&grp, w, a), grp.neg(a)), w);
        prop_assert!(counting_identity(&grp, w, s).holds());
        let (_, overlap) = best_translate(&grp, w, s);
        prop_assert!(overlap * n >= w.len() * s.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dim_is_monotone_on_nested_sets(g in arb_graph(1, 9), a in any::<u64>(), b in any::<u64>()) {
        let all = g.vertices();
        let big = VertexSet::from_bits(a).intersection(all);
        let small = VertexSet::from_bits(a & b).intersection(all);
        let dim_of = |s: VertexSet| dim_exact(&g.induced_subgraph(s).0).unwrap().value;
        prop_assert!(dim_of(small) <= dim_of(big));
    }

    #[test]
    fn threshold_size_suffices(g in arb_graph(1, 8), s in arb_set(8)) {
        let host = s.intersection(g.vertices());
        let host = if host.is_empty() { g.vertices() } else { host };
        let need = host.len() / 2 + 1;
        let mut best = usize::MAX;
        let h = host.bits();
        let mut t = h;
        loop {
            if t.count_ones() as usize >= need {
                best = best.min(g.max_degree_within(VertexSet::from_bits(t)));
            }
            if t == 0 { break; }
            t = (t - 1) & h;
        }
        prop_assert_eq!(best, subdim(&g, host).unwrap().value);
    }
}

#[test]
fn chromatic_number_matches_brute_force_on_all_small_graphs() {
    for n in 1..=5 {
        for g in enumerate_labeled_graphs(n).unwrap() {
            assert_eq!(chromatic_number(&g).unwrap().0, chi_brute(&g), "{g:?}");
        }
    }
}

#[test]
fn known_chromatic_numbers() {
    for n in (3..=15).step_by(2) {
        assert_eq!(chromatic_number(&Graph::cycle(n).unwrap()).unwrap().0, 3);
    }
    for n in 1..=12 {
        assert_eq!(chromatic_number(&Graph::complete(n).unwrap()).unwrap().0, n);
    }
    for d in 1..=4 {
        assert_eq!(
            chromatic_number(&Graph::hypercube(d).unwrap()).unwrap().0,
            2
        );
    }
}

#[test]
fn large_color_class_stays_separated() {
    let g = Graph::empty(64).unwrap();
    let emb = eht_embed(&g, &Coloring::from_colors(vec![0; 64])).unwrap();
    let chk = graphdim::embedding::verify_embedding(&g, &emb, 1e-9);
    assert!(chk.passed());
    assert!(chk.min_point_distance.unwrap() > 1e-6);
}
