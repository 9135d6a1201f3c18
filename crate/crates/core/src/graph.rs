//! Undirected simple graphs as packed adjacency bit-matrices, plus the
//! composition operators (disjoint union, join, sequential join) the
//! extremal constructions are built from.
//!
//! Graphs are immutable values: every operation returns a fresh graph and
//! leaves its inputs untouched, so they are freely shareable across threads.

use crate::error::Error;
use crate::Result;

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Undirected simple graph on vertices `0..n`. The adjacency matrix is
/// symmetric with a zero diagonal; rows are packed 64 vertices per word.
///
/// `n = 0` is permitted as the identity element for join and union
/// composition; invariant computations require at least one vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// Path with edges following index order: 0-1-2-...-(n-1).
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.set_edge(u - 1, u);
        }
        g
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::CycleTooSmall(n));
        }
        let mut g = Graph::path(n);
        g.set_edge(n - 1, 0);
        Ok(g)
    }

    /// Star with center 0 and leaves 1..n.
    pub fn star(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(0, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty_order(&self) -> bool {
        self.n == 0
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = self.bits.iter().map(|w| w.count_ones()).sum();
        total as usize / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Packed adjacency row of vertex `v` (`self.words()` words).
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        (0..self.n).filter(move |&u| row[u / WORD] >> (u % WORD) & 1 == 1)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| ((u + 1)..self.n).filter_map(move |v| {
            if self.has_edge(u, v) {
                Some((u, v))
            } else {
                None
            }
        }))
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.bits[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.bits[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    fn clear_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.bits[v * self.words + u / WORD] &= !(1 << (u % WORD));
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    /// New graph with the edge `uv` added; `u` and `v` must be non-adjacent.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::AlreadyAdjacent(u, v));
        }
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    /// New graph with the edge `uv` removed; `u` and `v` must be adjacent.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAdjacent(u, v));
        }
        let mut g = self.clone();
        g.clear_edge(u, v);
        Ok(g)
    }

    /// Subgraph induced by `set`, vertices re-indexed in ascending original
    /// order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph> {
        let members: Vec<usize> = set.iter().collect();
        if members.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(&v) = members.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut g = Graph::empty(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Relabel by `perm`: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// Vertex sets concatenated, `self`'s indices first; no edges added.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Disjoint union of `m` copies of `self`; `copies(0)` is the order-0
    /// identity graph.
    pub fn copies(&self, m: usize) -> Graph {
        let mut g = Graph::empty(self.n * m);
        for c in 0..m {
            let off = c * self.n;
            for (u, v) in self.edges() {
                g.set_edge(off + u, off + v);
            }
        }
        g
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set_edge(u, self.n + v);
            }
        }
        g
    }

    /// True iff one traversal from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut visited = vec![0u64; self.words];
        let mut frontier = vec![0u64; self.words];
        frontier[0] = 1;
        visited[0] = 1;
        loop {
            let mut next = vec![0u64; self.words];
            for v in 0..self.n {
                if frontier[v / WORD] >> (v % WORD) & 1 == 1 {
                    for (w, r) in next.iter_mut().zip(self.row(v)) {
                        *w |= r;
                    }
                }
            }
            for (nw, vw) in next.iter_mut().zip(visited.iter()) {
                *nw &= !vw;
            }
            if next.iter().all(|&w| w == 0) {
                break;
            }
            for (vw, nw) in visited.iter_mut().zip(next.iter()) {
                *vw |= nw;
            }
            frontier = next;
        }
        let reached: u32 = visited.iter().map(|w| w.count_ones()).sum();
        Ok(reached as usize == self.n)
    }

    /// Breadth-first distances from `src`; unreachable vertices get `None`.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut visited = vec![0u64; self.words];
        let mut frontier = vec![0u64; self.words];
        frontier[src / WORD] |= 1 << (src % WORD);
        visited[src / WORD] |= 1 << (src % WORD);
        dist[src] = Some(0);
        let mut d = 0;
        loop {
            d += 1;
            let mut next = vec![0u64; self.words];
            for v in 0..self.n {
                if frontier[v / WORD] >> (v % WORD) & 1 == 1 {
                    for (w, r) in next.iter_mut().zip(self.row(v)) {
                        *w |= r;
                    }
                }
            }
            for (nw, vw) in next.iter_mut().zip(visited.iter()) {
                *nw &= !vw;
            }
            if next.iter().all(|&w| w == 0) {
                break;
            }
            for v in 0..self.n {
                if next[v / WORD] >> (v % WORD) & 1 == 1 {
                    dist[v] = Some(d);
                }
            }
            for (vw, nw) in visited.iter_mut().zip(next.iter()) {
                *vw |= nw;
            }
            frontier = next;
        }
        dist
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Sequential join of `parts`: edges within each part, plus complete
/// bipartite edges between consecutive parts only. Order-0 parts are
/// dropped before composing. Vertex labels follow part order.
pub fn sequential_join(parts: &[Graph]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::EmptyJoinList);
    }
    let parts: Vec<&Graph> = parts.iter().filter(|p| p.n > 0).collect();
    let total: usize = parts.iter().map(|p| p.n).sum();
    let mut g = Graph::empty(total);
    let mut offsets = Vec::with_capacity(parts.len());
    let mut off = 0;
    for p in &parts {
        offsets.push(off);
        for (u, v) in p.edges() {
            g.set_edge(off + u, off + v);
        }
        off += p.n;
    }
    for i in 1..parts.len() {
        for u in 0..parts[i - 1].n {
            for v in 0..parts[i].n {
                g.set_edge(offsets[i - 1] + u, offsets[i] + v);
            }
        }
    }
    Ok(g)
}

/// Subset of the vertices of a host graph, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexSet {
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet { bits: Vec::new() }
    }

    pub fn insert(&mut self, v: usize) {
        let w = v / WORD;
        if w >= self.bits.len() {
            self.bits.resize(w + 1, 0);
        }
        self.bits[w] |= 1 << (v % WORD);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits
            .get(v / WORD)
            .is_some_and(|w| w >> (v % WORD) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(i, &w)| {
            (0..WORD).filter_map(move |b| if w >> b & 1 == 1 { Some(i * WORD + b) } else { None })
        })
    }
}

impl Default for VertexSet {
    fn default() -> Self {
        Self::new()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_cases() {
        assert_eq!(Graph::empty(0).n(), 0);
        assert_eq!(Graph::empty(3).edge_count(), 0);
        assert_eq!((0..5).map(|v| Graph::empty(5).degree(v)).max(), Some(0));
    }

    #[test]
    fn standard_graphs() {
        assert_eq!(Graph::complete(4).edge_count(), 6);
        let p4 = Graph::path(4);
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        let s4 = Graph::star(4);
        let mut degs: Vec<usize> = (0..4).map(|v| s4.degree(v)).collect();
        assert_eq!(degs.remove(0), 3);
        assert!(degs.iter().all(|&d| d == 1));
        assert_eq!(Graph::cycle(2), Err(Error::CycleTooSmall(2)));
    }

    #[test]
    fn add_remove_edge() {
        let p4 = Graph::path(4);
        let c4 = p4.add_edge(0, 3).unwrap();
        assert_eq!(c4, Graph::cycle(4).unwrap());
        let back = c4.remove_edge(0, 1).unwrap();
        assert_eq!(back.edge_count(), 3);
        assert!(back.is_connected().unwrap());
        assert_eq!(
            Graph::complete(3).add_edge(0, 1),
            Err(Error::AlreadyAdjacent(0, 1))
        );
        assert_eq!(p4.add_edge(0, 0), Err(Error::SelfLoop(0)));
        assert!(matches!(
            p4.add_edge(0, 9),
            Err(Error::VertexOutOfRange { .. })
        ));
        // value semantics: the input is unchanged
        assert_eq!(p4.edge_count(), 3);
    }

    #[test]
    fn induced_subgraphs() {
        let k3 = Graph::complete(5)
            .induced_subgraph(&[0, 1, 2].into_iter().collect())
            .unwrap();
        assert_eq!(k3, Graph::complete(3));
        let iso = Graph::path(4)
            .induced_subgraph(&[0, 3].into_iter().collect())
            .unwrap();
        assert_eq!(iso.edge_count(), 0);
        let p3 = Graph::cycle(5)
            .unwrap()
            .induced_subgraph(&[0, 1, 2].into_iter().collect())
            .unwrap();
        assert_eq!(p3, Graph::path(3));
        assert_eq!(
            Graph::path(4).induced_subgraph(&VertexSet::new()),
            Err(Error::EmptyVertexSet)
        );
    }

    #[test]
    fn unions_and_copies() {
        assert_eq!(Graph::complete(1).copies(3), Graph::empty(3));
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!((two_k2.n(), two_k2.edge_count()), (4, 2));
        let two_c3 = Graph::cycle(3).unwrap().copies(2);
        assert_eq!((two_c3.n(), two_c3.edge_count()), (6, 6));
        assert!(!two_c3.is_connected().unwrap());
    }

    #[test]
    fn joins() {
        assert_eq!(Graph::complete(1).join(&Graph::complete(1)), Graph::complete(2));
        let h = Graph::path(4);
        assert_eq!(Graph::empty(0).join(&h), h);
        let g = Graph::complete(2).join(&Graph::complete(1).copies(3));
        let mut degs: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 2, 4, 4]);
    }

    #[test]
    fn sequential_joins() {
        let k1 = Graph::complete(1);
        assert_eq!(sequential_join(&[k1.clone(), k1.clone(), k1.clone()]).unwrap(), Graph::path(3));
        let g = sequential_join(&[k1.clone(), Graph::complete(2), k1.clone()]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 5));
        assert_eq!(sequential_join(&[]), Err(Error::EmptyJoinList));
        // two parts degenerate to a plain join
        let a = Graph::path(3);
        let b = Graph::complete(2);
        assert_eq!(sequential_join(&[a.clone(), b.clone()]).unwrap(), a.join(&b));
    }

    #[test]
    fn no_edges_between_nonconsecutive_parts() {
        let parts = [
            Graph::complete(1),
            Graph::complete(2),
            Graph::complete(1),
            Graph::complete(2),
        ];
        let g = sequential_join(&parts).unwrap();
        let bounds = [0, 1, 3, 4, 6];
        let part_of = |v: usize| (0..4).find(|&i| v >= bounds[i] && v < bounds[i + 1]).unwrap();
        for (u, v) in g.edges() {
            assert!(part_of(u).abs_diff(part_of(v)) <= 1, "edge {u}-{v} skips a part");
        }
    }

    #[test]
    fn connectivity_check() {
        assert!(Graph::path(5).is_connected().unwrap());
        assert!(!Graph::complete(2).copies(2).is_connected().unwrap());
        assert!(Graph::complete(1).is_connected().unwrap());
        assert_eq!(Graph::empty(0).is_connected(), Err(Error::EmptyGraph));
    }
}
