//! The four extremal families: sequential joins of cliques maximizing CEI
//! over graphs with fixed connectivity and diameter (even and odd cases),
//! the fixed independence-number family, and the fixed minimum-degree
//! family. Constructors validate feasibility and reject parameters that
//! would build an out-of-class graph.

use crate::error::Error;
use crate::graph::{sequential_join, Graph};
use crate::Result;

fn infeasible(msg: impl Into<String>) -> Error {
    Error::Infeasible(msg.into())
}

/// Even-diameter maximizer: K_1 ∨ [(d−2)/2]K_k ∨ K_{n−kd+2k−2} ∨
/// [(d−2)/2]K_k ∨ K_1, a sequential join with layer sizes
/// (1, k, ..., k, n−kd+2k−2, k, ..., k, 1).
pub fn build_g_nkd(n: usize, k: usize, d: usize) -> Result<Graph> {
    if k < 1 {
        return Err(infeasible("k >= 1 required"));
    }
    if d % 2 != 0 || d < 4 {
        return Err(infeasible(format!("d must be even with d >= 4, got d = {d}")));
    }
    let middle = n as i64 - (k * d) as i64 + 2 * k as i64 - 2;
    if middle < k as i64 {
        return Err(infeasible(format!(
            "middle layer n - kd + 2k - 2 = {middle} must be >= k = {k}"
        )));
    }
    let side = (d - 2) / 2;
    let mut parts = vec![Graph::complete(1)];
    parts.extend(std::iter::repeat_with(|| Graph::complete(k)).take(side));
    parts.push(Graph::complete(middle as usize));
    parts.extend(std::iter::repeat_with(|| Graph::complete(k)).take(side));
    parts.push(Graph::complete(1));
    let g = sequential_join(&parts)?;
    debug_assert_eq!(g.n(), n);
    debug_assert_eq!(crate::invariants::diameter(&g).unwrap(), d);
    debug_assert_eq!(crate::invariants::vertex_connectivity(&g).unwrap(), k);
    Ok(g)
}

/// Split budget s + t of the odd-diameter family: n − kd + 3k − 4.
pub fn h_split_budget(n: usize, k: usize, d: usize) -> Result<i64> {
    if k < 1 {
        return Err(infeasible("k >= 1 required"));
    }
    if d % 2 != 1 || d < 3 {
        return Err(infeasible(format!("d must be odd with d >= 3, got d = {d}")));
    }
    Ok(n as i64 - (k * d) as i64 + 3 * k as i64 - 4)
}

/// Odd-diameter family member: K_1 ∨ [(d−3)/2]K_k ∨ K_{s+1} ∨ K_{t+1} ∨
/// [(d−3)/2]K_k ∨ K_1 with s, t ≥ k−1 and s + t = n − kd + 3k − 4.
pub fn build_h_nkd(n: usize, k: usize, d: usize, s: usize) -> Result<Graph> {
    let budget = h_split_budget(n, k, d)?;
    let t = budget - s as i64;
    if (s as i64) < k as i64 - 1 {
        return Err(infeasible(format!("s = {s} violates s >= k - 1 = {}", k - 1)));
    }
    if t < k as i64 - 1 {
        return Err(infeasible(format!(
            "t = n - kd + 3k - 4 - s = {t} violates t >= k - 1 = {}",
            k - 1
        )));
    }
    let side = (d - 3) / 2;
    let mut parts = vec![Graph::complete(1)];
    parts.extend(std::iter::repeat_with(|| Graph::complete(k)).take(side));
    parts.push(Graph::complete(s + 1));
    parts.push(Graph::complete(t as usize + 1));
    parts.extend(std::iter::repeat_with(|| Graph::complete(k)).take(side));
    parts.push(Graph::complete(1));
    let g = sequential_join(&parts)?;
    debug_assert_eq!(g.n(), n);
    debug_assert_eq!(crate::invariants::diameter(&g).unwrap(), d);
    // κ can exceed k when d = 3 and both splits are >= k
    debug_assert!(crate::invariants::vertex_connectivity(&g).unwrap() >= k);
    Ok(g)
}

/// All members of the odd-diameter family, one per valid split s, ascending.
/// Isomorphic (s, t) / (t, s) duplicates are kept; collapse them by
/// canonical form if needed.
pub fn enumerate_h_family(n: usize, k: usize, d: usize) -> Result<Vec<Graph>> {
    let budget = h_split_budget(n, k, d)?;
    let lo = k as i64 - 1;
    let hi = budget - (k as i64 - 1);
    if lo > hi {
        return Err(Error::EmptyFamily(format!(
            "no split with s, t >= {} and s + t = {budget}",
            k - 1
        )));
    }
    (lo..=hi).map(|s| build_h_nkd(n, k, d, s as usize)).collect()
}

/// Fixed independence-number maximizer: K_k ∨ (K_1 ∪ (K_{n−k−α} ∨ (α−1)K_1)).
/// At the boundary n = k + α the middle clique vanishes and the result is
/// K_k ∨ αK_1.
pub fn build_s_nalpha(n: usize, k: usize, alpha: usize) -> Result<Graph> {
    if k < 1 {
        return Err(infeasible("k >= 1 required"));
    }
    if alpha < 2 {
        return Err(infeasible(format!("alpha >= 2 required, got {alpha}")));
    }
    if n < k + alpha {
        return Err(infeasible(format!("n >= k + alpha = {} required, got n = {n}", k + alpha)));
    }
    let middle = Graph::complete(n - k - alpha).join(&Graph::complete(1).copies(alpha - 1));
    let g = Graph::complete(k).join(&Graph::complete(1).disjoint_union(&middle));
    debug_assert_eq!(g.n(), n);
    debug_assert_eq!(crate::invariants::independence_number(&g), alpha);
    debug_assert_eq!(crate::invariants::vertex_connectivity(&g).unwrap(), k);
    Ok(g)
}

/// Fixed minimum-degree maximizer: K_k ∨ (K_{δ−k+1} ∪ K_{n−δ−1}).
pub fn build_m_ndelta(n: usize, k: usize, delta: usize) -> Result<Graph> {
    if k < 1 {
        return Err(infeasible("k >= 1 required"));
    }
    if delta < k {
        return Err(infeasible(format!("delta >= k required, got delta = {delta}, k = {k}")));
    }
    if n < k + 2 {
        return Err(infeasible(format!("n >= k + 2 = {} required, got n = {n}", k + 2)));
    }
    if n < 2 * delta - k + 2 {
        return Err(infeasible(format!(
            "n >= 2*delta - k + 2 = {} required, got n = {n}",
            2 * delta - k + 2
        )));
    }
    let g = Graph::complete(k)
        .join(&Graph::complete(delta - k + 1).disjoint_union(&Graph::complete(n - delta - 1)));
    debug_assert_eq!(g.n(), n);
    debug_assert_eq!(crate::invariants::min_degree(&g), delta);
    debug_assert_eq!(crate::invariants::vertex_connectivity(&g).unwrap(), k);
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::invariants::{cei, diameter, rational, vertex_connectivity};

    #[test]
    fn g_nkd_values() {
        let g = build_g_nkd(6, 1, 4).unwrap();
        assert_eq!(cei(&g).unwrap(), rational(11, 2));
        let g = build_g_nkd(8, 2, 4).unwrap();
        assert_eq!(diameter(&g).unwrap(), 4);
        assert_eq!(vertex_connectivity(&g).unwrap(), 2);
        assert!(matches!(build_g_nkd(6, 1, 3), Err(Error::Infeasible(_))));
    }

    #[test]
    fn g_nkd_matches_plain_sequential_join() {
        let parts: Vec<Graph> = [1, 1, 2, 1, 1].iter().map(|&s| Graph::complete(s)).collect();
        assert_eq!(build_g_nkd(6, 1, 4).unwrap(), sequential_join(&parts).unwrap());
    }

    #[test]
    fn h_nkd_values() {
        assert_eq!(cei(&build_h_nkd(8, 1, 3, 2).unwrap()).unwrap(), rational(20, 1));
        assert_eq!(cei(&build_h_nkd(8, 1, 3, 0).unwrap()).unwrap(), rational(20, 1));
        assert!(matches!(build_h_nkd(7, 2, 3, 0), Err(Error::Infeasible(_))));
    }

    #[test]
    fn h_family_enumeration() {
        let fam = enumerate_h_family(8, 1, 3).unwrap();
        assert_eq!(fam.len(), 5);
        let labels: std::collections::BTreeSet<_> =
            fam.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(labels.len(), 3);
        for g in &fam {
            assert_eq!(cei(g).unwrap(), rational(20, 1));
        }

        let fam = enumerate_h_family(7, 2, 3).unwrap();
        assert_eq!(fam.len(), 2); // s in {1, 2}
        let labels: std::collections::BTreeSet<_> =
            fam.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(labels.len(), 1);
    }

    #[test]
    fn s_nalpha_values() {
        let g = build_s_nalpha(6, 2, 2).unwrap();
        assert_eq!(cei(&g).unwrap(), rational(17, 1));
        assert_eq!(crate::invariants::independence_number(&g), 2);
        assert_eq!(vertex_connectivity(&g).unwrap(), 2);
        // boundary n = k + alpha: K_2 ∨ 3K_1
        let g = build_s_nalpha(5, 2, 3).unwrap();
        assert_eq!(
            g,
            Graph::complete(2).join(&Graph::complete(1).copies(3))
        );
        assert_eq!(cei(&g).unwrap(), rational(11, 1));
    }

    #[test]
    fn m_ndelta_values() {
        let g = build_m_ndelta(6, 2, 3).unwrap();
        assert_eq!(cei(&g).unwrap(), rational(16, 1));
        let g = build_m_ndelta(7, 2, 2).unwrap();
        assert_eq!(cei(&g).unwrap(), rational(23, 1));
        match build_m_ndelta(6, 1, 4) {
            Err(Error::Infeasible(msg)) => assert!(msg.contains("2*delta - k + 2")),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }
}
