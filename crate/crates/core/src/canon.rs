//! Canonical labeling for small graphs: degree/neighborhood partition
//! refinement followed by backtracking over within-class individualizations,
//! keeping the lexicographically minimal adjacency bit-string. Two graphs
//! receive the same label iff they are isomorphic.

use crate::error::Error;
use crate::graph::Graph;
use crate::graph6;
use crate::Result;

/// Default cap on the order of graphs accepted by [`canonical_form`].
pub const DEFAULT_CANON_CAP: usize = 10;

/// Hard limit of the labeling backend (adjacency codes are packed into
/// 128 bits: C(16,2) = 120).
pub const CANON_MAX_N: usize = 16;

/// Canonical graph6 string of a graph: the representative of its
/// isomorphism class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct CanonicalLabel(String);

impl CanonicalLabel {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// The distinguished representative graph itself.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical labels are valid graph6")
    }
}

impl std::fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalLabel> {
    canonical_form_with_cap(g, DEFAULT_CANON_CAP)
}

pub fn canonical_form_with_cap(g: &Graph, cap: usize) -> Result<CanonicalLabel> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > cap.min(CANON_MAX_N) {
        return Err(Error::CanonCapExceeded { n, cap: cap.min(CANON_MAX_N) });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| {
            let mut m = 0u32;
            for u in g.neighbors(v) {
                m |= 1 << u;
            }
            m
        })
        .collect();
    let mut best: Option<(u128, Vec<usize>)> = None;
    let initial = refine(&adj, n, degree_partition(&adj, n));
    search(&adj, n, g, initial, &mut best);
    let (_, order) = best.expect("n >= 1 yields at least one leaf");
    // order[p] = original vertex placed at position p
    let mut perm = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        perm[v] = p;
    }
    Ok(CanonicalLabel(graph6::encode(&g.permuted(&perm))))
}

fn degree_partition(adj: &[u32], n: usize) -> Vec<Vec<usize>> {
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        cells[adj[v].count_ones() as usize].push(v);
    }
    cells.into_iter().filter(|c| !c.is_empty()).collect()
}

/// Split cells by neighbor counts against every cell until stable; cell
/// order (ascending count within a split) is deterministic.
fn refine(adj: &[u32], n: usize, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut changed = true;
    while changed && cells.len() < n {
        changed = false;
        'pass: for s in 0..cells.len() {
            let mask: u32 = cells[s].iter().fold(0, |m, &v| m | 1 << v);
            for c in 0..cells.len() {
                if cells[c].len() < 2 {
                    continue;
                }
                let counts: Vec<u32> =
                    cells[c].iter().map(|&v| (adj[v] & mask).count_ones()).collect();
                if counts.windows(2).all(|w| w[0] == w[1]) {
                    continue;
                }
                let mut pairs: Vec<(u32, usize)> =
                    counts.into_iter().zip(cells[c].iter().copied()).collect();
                pairs.sort_unstable();
                let mut split: Vec<Vec<usize>> = Vec::new();
                for (cnt, v) in pairs {
                    match split.last_mut() {
                        Some(last) if (adj[last[0]] & mask).count_ones() == cnt => last.push(v),
                        _ => split.push(vec![v]),
                    }
                }
                cells.splice(c..=c, split);
                changed = true;
                break 'pass;
            }
        }
    }
    cells
}

fn search(adj: &[u32], n: usize, g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    if cells.len() == n {
        let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let code = leaf_code(g, &order);
        match best {
            Some((b, _)) if *b <= code => {}
            _ => *best = Some((code, order)),
        }
        return;
    }
    let target = cells.iter().position(|c| c.len() > 1).expect("non-discrete");
    for &v in &cells[target] {
        let mut child = cells.clone();
        let rest: Vec<usize> = child[target].iter().copied().filter(|&u| u != v).collect();
        child.splice(target..=target, [vec![v], rest]);
        let refined = refine(adj, n, child);
        search(adj, n, g, refined, best);
    }
}

/// Upper-triangle bits in graph6 column order under the candidate labeling,
/// packed so that lexicographically smaller bit-strings compare smaller.
fn leaf_code(g: &Graph, order: &[usize]) -> u128 {
    let n = order.len();
    let mut code = 0u128;
    let mut shift = 127;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                code |= 1 << shift;
            }
            shift -= 1;
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn relabelings_agree() {
        let p3 = Graph::path(3); // 0-1-2
        let p3b = Graph::path(3).permuted(&[1, 0, 2]); // 1-0-2
        assert_eq!(canonical_form(&p3).unwrap(), canonical_form(&p3b).unwrap());
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        assert_ne!(
            canonical_form(&Graph::complete(3)).unwrap(),
            canonical_form(&Graph::path(3)).unwrap()
        );
    }

    #[test]
    fn all_relabelings_of_c5_collapse() {
        let c5 = Graph::cycle(5).unwrap();
        let mut labels = std::collections::HashSet::new();
        permute_all(5, &mut |perm| {
            labels.insert(canonical_form(&c5.permuted(perm)).unwrap());
        });
        assert_eq!(labels.len(), 1);
    }

    #[test]
    fn respects_cap() {
        assert!(matches!(
            canonical_form(&Graph::path(11)),
            Err(Error::CanonCapExceeded { .. })
        ));
        assert!(canonical_form_with_cap(&Graph::path(12), 16).is_ok());
    }

    #[test]
    fn symmetric_extremes() {
        // worst case for the backtracker: refinement never splits
        for g in [Graph::empty(8), Graph::complete(8)] {
            let l = canonical_form(&g).unwrap();
            assert_eq!(l.to_graph(), g);
        }
    }

    fn permute_all(n: usize, f: &mut impl FnMut(&[usize])) {
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
}
