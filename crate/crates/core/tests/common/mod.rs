#![allow(dead_code)]

use proptest::prelude::*;
use satgraph_core::{Graph, Step, ThresholdSequence};

/// Random labelled graph on `lo..=hi` vertices; each pair is an edge with
/// probability one half.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|&(_, b)| b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

pub fn sequence(max_len: usize) -> impl Strategy<Value = ThresholdSequence> {
    proptest::collection::vec(prop_oneof![Just(Step::Isolated), Just(Step::Dominating)], 0..=max_len)
        .prop_map(ThresholdSequence::new)
}

/// All labelled graphs on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Does some injective map send every edge of `h` to an edge of `g`?
/// Tries all of them.
pub fn brute_contains(g: &Graph, h: &Graph) -> bool {
    fn go(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let u = map.len();
        if u == h.order() {
            return h.edges().all(|(a, b)| g.has_edge(map[a], map[b]));
        }
        for x in 0..g.order() {
            if !used[x] {
                used[x] = true;
                map.push(x);
                let found = go(g, h, map, used);
                map.pop();
                used[x] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    h.order() <= g.order() && go(g, h, &mut Vec::new(), &mut vec![false; g.order()])
}

/// Isomorphism by trying every relabelling.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && permutations(a.order()).iter().any(|p| a.relabel(p).unwrap() == *b)
}

/// `sat(h, n)` by scanning every labelled graph on `n` vertices.
pub fn brute_sat(h: &Graph, n: usize) -> Option<usize> {
    all_graphs(n)
        .into_iter()
        .filter(|g| !brute_contains(g, h) && g.non_edges().all(|(x, y)| brute_contains(&g.with_edge(x, y).unwrap(), h)))
        .map(|g| g.size())
        .min()
}

/// `K_k` with one pendant edge hanging off vertex `k - 1`.
pub fn clique_with_pendant(k: usize) -> Graph {
    Graph::complete(k).add_isolated().with_edge(k - 1, k).unwrap()
}
