#![allow(dead_code)] // each test binary uses its own subset of the oracles

//! Independent brute-force oracles shared by the property and acceptance
//! suites. Everything here stays deliberately dumb: exhaustive matrices,
//! permutation dedup, subset scans. None of it touches the library's
//! canonical-labeling or search paths.

use cei_core::graph::Graph;

/// All C(n,2) vertex pairs in a fixed order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            out.push((u, v));
        }
    }
    out
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    for (i, &(u, v)) in pairs(n).iter().enumerate() {
        if mask >> i & 1 == 1 {
            g = g.add_edge(u, v).unwrap();
        }
    }
    g
}

fn mask_of(g: &Graph) -> u64 {
    let mut mask = 0;
    for (i, &(u, v)) in pairs(g.n()).iter().enumerate() {
        if g.has_edge(u, v) {
            mask |= 1 << i;
        }
    }
    mask
}

pub fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    heap(n, &mut perm, f);
}

fn heap(k: usize, perm: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        f(perm);
        return;
    }
    for i in 0..k {
        heap(k - 1, perm, f);
        if k % 2 == 0 {
            perm.swap(i, k - 1);
        } else {
            perm.swap(0, k - 1);
        }
    }
}

/// Minimum edge-mask over all relabelings: a canonical key computed without
/// the library's canonical_form.
pub fn min_mask_key(g: &Graph) -> u64 {
    let mut best = u64::MAX;
    for_each_permutation(g.n(), &mut |perm| {
        best = best.min(mask_of(&g.permuted(perm)));
    });
    best
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, by scanning all 2^C(n,2) matrices with permutation dedup.
/// Only sane for n <= 6.
pub fn dumb_connected_graphs(n: usize) -> Vec<Graph> {
    let bits = n * (n - 1) / 2;
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << bits) {
        let g = graph_from_mask(n, mask);
        if g.is_connected().unwrap() && seen.insert(min_mask_key(&g)) {
            out.push(g);
        }
    }
    out
}

/// κ by scanning all vertex subsets: the minimum |A| with G−A disconnected
/// or a single vertex.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.n();
    assert!(n >= 2);
    for size in 0..n {
        for subset in 0u32..(1 << n) {
            if subset.count_ones() as usize != size {
                continue;
            }
            let keep: Vec<usize> = (0..n).filter(|&v| subset >> v & 1 == 0).collect();
            if keep.len() == 1 {
                return size;
            }
            let h = g.induced_subgraph(&keep.iter().copied().collect()).unwrap();
            if !h.is_connected().unwrap() {
                return size;
            }
        }
    }
    n - 1
}

/// α by scanning all 2^n vertex subsets.
pub fn brute_independence(g: &Graph) -> usize {
    let n = g.n();
    let adj: Vec<u32> = (0..n)
        .map(|v| {
            let mut m = 0u32;
            for u in g.neighbors(v) {
                m |= 1 << u;
            }
            m
        })
        .collect();
    let mut best = 0;
    for subset in 0u32..(1 << n) {
        if (0..n).all(|v| subset >> v & 1 == 0 || adj[v] & subset == 0) {
            best = best.max(subset.count_ones() as usize);
        }
    }
    best
}

/// Eccentricities via an all-pairs shortest-path matrix (Floyd-Warshall).
pub fn matrix_eccentricities(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX / 2;
    let mut dist = vec![inf; n * n];
    for v in 0..n {
        dist[v * n + v] = 0;
    }
    for (u, v) in g.edges() {
        dist[u * n + v] = 1;
        dist[v * n + u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = dist[i * n + k] + dist[k * n + j];
                if via < dist[i * n + j] {
                    dist[i * n + j] = via;
                }
            }
        }
    }
    let mut ecc = Vec::with_capacity(n);
    for v in 0..n {
        let e = (0..n).map(|u| dist[v * n + u]).max().unwrap();
        if e >= inf {
            return None; // disconnected
        }
        ecc.push(e);
    }
    Some(ecc)
}

pub fn random_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for (u, v) in pairs(n) {
        if rng.gen_bool(p) {
            g = g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub fn random_connected_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected().unwrap() {
            return g;
        }
    }
}
