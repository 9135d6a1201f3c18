//! Exact computation of the graph parameters quantified over by the
//! extremal results: degrees, eccentricities, diameter, radius, the
//! connective eccentricity index (CEI) and eccentric connectivity index
//! (ECI), vertex connectivity, and independence number.
//!
//! CEI values are exact rationals; every comparison is cross-multiplication
//! on integers, never floating point.

use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

/// Exact fraction in lowest terms; the value domain of CEI.
pub type Rational = num::BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Degree and eccentricity of one vertex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct VertexProfile {
    pub degree: usize,
    pub eccentricity: usize,
}

pub fn degrees(g: &Graph) -> Vec<usize> {
    (0..g.n()).map(|v| g.degree(v)).collect()
}

/// Per-vertex eccentricity via one breadth-first search per vertex.
pub fn eccentricities(g: &Graph) -> Result<Vec<usize>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    (0..g.n())
        .map(|v| {
            g.bfs_distances(v)
                .into_iter()
                .map(|d| d.ok_or(Error::Disconnected))
                .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
        })
        .collect()
}

pub fn vertex_profiles(g: &Graph) -> Result<Vec<VertexProfile>> {
    let ecc = eccentricities(g)?;
    Ok(ecc
        .into_iter()
        .enumerate()
        .map(|(v, eccentricity)| VertexProfile {
            degree: g.degree(v),
            eccentricity,
        })
        .collect())
}

pub fn diameter(g: &Graph) -> Result<usize> {
    Ok(eccentricities(g)?.into_iter().max().unwrap())
}

pub fn radius(g: &Graph) -> Result<usize> {
    Ok(eccentricities(g)?.into_iter().min().unwrap())
}

/// Connective eccentricity index: Σ_v deg(v)/ecc(v), exact.
pub fn cei(g: &Graph) -> Result<Rational> {
    if g.n() < 2 {
        return Err(if g.n() == 0 { Error::EmptyGraph } else { Error::Disconnected });
    }
    let mut sum = Rational::from_integer(BigInt::from(0));
    for p in vertex_profiles(g)? {
        sum += Rational::new(BigInt::from(p.degree), BigInt::from(p.eccentricity));
    }
    Ok(sum)
}

/// Eccentric connectivity index: Σ_v deg(v)·ecc(v).
pub fn eci(g: &Graph) -> Result<usize> {
    Ok(vertex_profiles(g)?
        .into_iter()
        .map(|p| p.degree * p.eccentricity)
        .sum())
}

/// Vertex connectivity κ: the minimum number of vertices whose removal
/// disconnects the graph or leaves a single vertex. `n - 1` for complete
/// graphs; otherwise the minimum over non-adjacent pairs of the maximum
/// number of internally vertex-disjoint paths (unit-capacity max flow on
/// the vertex-split digraph).
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n < 2 {
        return Err(if n == 0 { Error::EmptyGraph } else { Error::Disconnected });
    }
    if !g.is_connected()? {
        return Err(Error::Disconnected);
    }
    if g.edge_count() == n * (n - 1) / 2 {
        return Ok(n - 1);
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in (s + 1)..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t, best));
            }
        }
    }
    Ok(best)
}

/// True iff κ(G) ≥ k, with flow computations cut off at `k` paths.
pub fn is_k_connected(g: &Graph, k: usize) -> Result<bool> {
    let n = g.n();
    if k == 0 {
        return Ok(g.is_connected()?);
    }
    if n < 2 {
        return Err(if n == 0 { Error::EmptyGraph } else { Error::Disconnected });
    }
    if !g.is_connected()? {
        return Ok(false);
    }
    if g.edge_count() == n * (n - 1) / 2 {
        return Ok(n - 1 >= k);
    }
    if n - 1 < k {
        return Ok(false);
    }
    for s in 0..n {
        for t in (s + 1)..n {
            if !g.has_edge(s, t) && local_connectivity(g, s, t, k) < k {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Max number of internally vertex-disjoint s-t paths, stopping once
/// `cutoff` paths are found. Vertex v splits into v_in = 2v, v_out = 2v+1.
fn local_connectivity(g: &Graph, s: usize, t: usize, cutoff: usize) -> usize {
    let n = g.n();
    let nn = 2 * n;
    let mut cap = vec![0u8; nn * nn];
    for v in 0..n {
        cap[(2 * v) * nn + 2 * v + 1] = 1;
    }
    for (u, v) in g.edges() {
        cap[(2 * u + 1) * nn + 2 * v] = 1;
        cap[(2 * v + 1) * nn + 2 * u] = 1;
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    while flow < cutoff {
        // BFS for an augmenting path in the residual digraph
        let mut prev = vec![usize::MAX; nn];
        let mut queue = std::collections::VecDeque::from([source]);
        prev[source] = source;
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..nn {
                if prev[y] == usize::MAX && cap[x * nn + y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            cap[x * nn + y] -= 1;
            cap[y * nn + x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

/// Exact independence number α via branch and bound: branch on a
/// maximum-degree vertex (exclude it, or include it and drop its closed
/// neighborhood), pruned with a greedy clique-cover bound.
pub fn independence_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let words = g.words();
    let rows: Vec<&[u64]> = (0..n).map(|v| g.row(v)).collect();
    let mut remaining = vec![u64::MAX; words];
    // mask off bits beyond n
    if n % 64 != 0 {
        remaining[words - 1] = (1u64 << (n % 64)) - 1;
    }
    let mut best = 0;
    branch(&rows, n, remaining, 0, &mut best);
    best
}

fn bit(set: &[u64], v: usize) -> bool {
    set[v / 64] >> (v % 64) & 1 == 1
}

fn popcount(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

fn branch(rows: &[&[u64]], n: usize, mut remaining: Vec<u64>, mut size: usize, best: &mut usize) {
    // take vertices of residual degree <= 1 greedily; they are always in
    // some maximum independent set
    loop {
        let mut progress = false;
        for v in 0..n {
            if !bit(&remaining, v) {
                continue;
            }
            let deg = remaining
                .iter()
                .zip(rows[v])
                .map(|(r, a)| (r & a).count_ones() as usize)
                .sum::<usize>();
            if deg == 0 {
                remaining[v / 64] &= !(1 << (v % 64));
                size += 1;
                progress = true;
            } else if deg == 1 {
                for (r, a) in remaining.iter_mut().zip(rows[v]) {
                    *r &= !a;
                }
                remaining[v / 64] &= !(1 << (v % 64));
                size += 1;
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    if popcount(&remaining) == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + clique_cover_bound(rows, n, &remaining) <= *best {
        return;
    }
    let v = (0..n)
        .filter(|&v| bit(&remaining, v))
        .max_by_key(|&v| {
            remaining
                .iter()
                .zip(rows[v])
                .map(|(r, a)| (r & a).count_ones() as usize)
                .sum::<usize>()
        })
        .unwrap();
    // include v
    let mut incl = remaining.clone();
    for (r, a) in incl.iter_mut().zip(rows[v]) {
        *r &= !a;
    }
    incl[v / 64] &= !(1 << (v % 64));
    branch(rows, n, incl, size + 1, best);
    // exclude v
    remaining[v / 64] &= !(1 << (v % 64));
    branch(rows, n, remaining, size, best);
}

/// Greedy clique cover of the residual vertices; its size bounds α from above.
fn clique_cover_bound(rows: &[&[u64]], n: usize, remaining: &[u64]) -> usize {
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if !bit(remaining, v) {
            continue;
        }
        match cliques
            .iter_mut()
            .find(|c| c.iter().all(|&u| bit(rows[v], u)))
        {
            Some(c) => c.push(v),
            None => cliques.push(vec![v]),
        }
    }
    cliques.len()
}

pub fn min_degree(g: &Graph) -> usize {
    degrees(g).into_iter().min().unwrap_or(0)
}

pub fn max_degree(g: &Graph) -> usize {
    degrees(g).into_iter().max().unwrap_or(0)
}

/// Every parameter the extremal results quantify over, in one record.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantSummary {
    pub n: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub radius: usize,
    pub diameter: usize,
    pub connectivity: usize,
    pub independence_number: usize,
    pub cei: Rational,
    pub eci: usize,
}

pub fn summarize(g: &Graph) -> Result<InvariantSummary> {
    if g.n() < 2 {
        return Err(if g.n() == 0 { Error::EmptyGraph } else { Error::Disconnected });
    }
    let ecc = eccentricities(g)?;
    let degs = degrees(g);
    let mut cei_sum = Rational::from_integer(BigInt::from(0));
    let mut eci_sum = 0;
    for (&d, &e) in degs.iter().zip(&ecc) {
        cei_sum += Rational::new(BigInt::from(d), BigInt::from(e));
        eci_sum += d * e;
    }
    Ok(InvariantSummary {
        n: g.n(),
        edges: g.edge_count(),
        min_degree: degs.iter().copied().min().unwrap(),
        max_degree: degs.iter().copied().max().unwrap(),
        radius: ecc.iter().copied().min().unwrap(),
        diameter: ecc.iter().copied().max().unwrap(),
        connectivity: vertex_connectivity(g)?,
        independence_number: independence_number(g),
        cei: cei_sum,
        eci: eci_sum,
    })
}

/// Which parameter is fixed alongside connectivity.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    /// graphs of order n with κ ≥ k and diameter = value
    Diameter,
    /// graphs of order n with κ = k and independence number = value
    Independence,
    /// graphs of order n with κ = k and minimum degree >= value
    MinDegree,
}

/// One of the three parameterized graph classes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassSpec {
    pub kind: ClassKind,
    pub n: usize,
    pub k: usize,
    pub value: usize,
}

impl ClassSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidSpec(format!("n >= 2 required, got {}", self.n)));
        }
        if self.k < 1 {
            return Err(Error::InvalidSpec("k >= 1 required".into()));
        }
        match self.kind {
            ClassKind::Diameter | ClassKind::Independence => {
                if self.value < 1 {
                    return Err(Error::InvalidSpec("value >= 1 required".into()));
                }
            }
            ClassKind::MinDegree => {
                if self.value < self.k {
                    return Err(Error::InvalidSpec(format!(
                        "minimum degree {} below connectivity k = {}",
                        self.value, self.k
                    )));
                }
            }
        }
        Ok(())
    }
}

/// True iff κ(G) = k exactly, with flow computations cut off at `k + 1`.
pub fn connectivity_equals(g: &Graph, k: usize) -> Result<bool> {
    let n = g.n();
    if n < 2 {
        return Err(if n == 0 { Error::EmptyGraph } else { Error::Disconnected });
    }
    if !g.is_connected()? {
        return Ok(false);
    }
    if g.edge_count() == n * (n - 1) / 2 {
        return Ok(n - 1 == k);
    }
    let mut min = n - 1;
    for s in 0..n {
        for t in (s + 1)..n {
            if !g.has_edge(s, t) {
                let local = local_connectivity(g, s, t, k + 1);
                if local < k {
                    return Ok(false);
                }
                min = min.min(local);
            }
        }
    }
    Ok(min == k)
}

/// Membership test. The diameter class reads "k-connected" as κ(G) ≥ k.
/// The independence (for α ≥ 2) and minimum-degree classes require a
/// k-vertex cut, i.e. κ(G) = k exactly; with α = 1 the class holds only
/// the complete graph, which is admitted with κ ≥ k.
pub fn is_member(g: &Graph, spec: &ClassSpec) -> Result<bool> {
    if g.n() != spec.n {
        return Err(Error::OrderMismatch { got: g.n(), expected: spec.n });
    }
    let ok = match spec.kind {
        ClassKind::Diameter => diameter(g)? == spec.value && is_k_connected(g, spec.k)?,
        ClassKind::Independence => {
            independence_number(g) == spec.value
                && if spec.value == 1 {
                    is_k_connected(g, spec.k)?
                } else {
                    connectivity_equals(g, spec.k)?
                }
        }
        ClassKind::MinDegree => min_degree(g) >= spec.value && connectivity_equals(g, spec.k)?,
    };
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_lists() {
        assert_eq!(degrees(&Graph::complete(4)), vec![3, 3, 3, 3]);
        assert_eq!(degrees(&Graph::star(4)), vec![3, 1, 1, 1]);
        assert_eq!(degrees(&Graph::path(4)), vec![1, 2, 2, 1]);
    }

    #[test]
    fn eccentricity_lists() {
        assert_eq!(eccentricities(&Graph::path(5)).unwrap(), vec![4, 3, 2, 3, 4]);
        assert_eq!(eccentricities(&Graph::complete(6)).unwrap(), vec![1; 6]);
        assert_eq!(eccentricities(&Graph::cycle(5).unwrap()).unwrap(), vec![2; 5]);
        assert_eq!(eccentricities(&Graph::complete(1)).unwrap(), vec![0]);
        assert_eq!(
            eccentricities(&Graph::complete(2).copies(2)),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn diameter_radius() {
        assert_eq!(diameter(&Graph::path(5)).unwrap(), 4);
        assert_eq!(diameter(&Graph::complete(6)).unwrap(), 1);
        assert_eq!(radius(&Graph::path(5)).unwrap(), 2);
    }

    #[test]
    fn cei_values() {
        assert_eq!(cei(&Graph::complete(4)).unwrap(), rational(12, 1));
        assert_eq!(cei(&Graph::cycle(5).unwrap()).unwrap(), rational(5, 1));
        assert_eq!(cei(&Graph::path(4)).unwrap(), rational(8, 3));
        assert_eq!(cei(&Graph::complete(1)), Err(Error::Disconnected));
    }

    #[test]
    fn eci_values() {
        assert_eq!(eci(&Graph::complete(4)).unwrap(), 12);
        assert_eq!(eci(&Graph::cycle(5).unwrap()).unwrap(), 20);
        assert_eq!(eci(&Graph::path(4)).unwrap(), 14);
    }

    #[test]
    fn connectivity_values() {
        assert_eq!(vertex_connectivity(&Graph::complete(5)).unwrap(), 4);
        assert_eq!(vertex_connectivity(&Graph::path(4)).unwrap(), 1);
        assert_eq!(vertex_connectivity(&Graph::cycle(5).unwrap()).unwrap(), 2);
        assert!(is_k_connected(&Graph::cycle(5).unwrap(), 2).unwrap());
        assert!(!is_k_connected(&Graph::cycle(5).unwrap(), 3).unwrap());
    }

    #[test]
    fn independence_values() {
        assert_eq!(independence_number(&Graph::complete(4)), 1);
        assert_eq!(independence_number(&Graph::star(6)), 5);
        assert_eq!(independence_number(&Graph::cycle(5).unwrap()), 2);
    }

    #[test]
    fn summaries() {
        let s = summarize(&Graph::complete(4)).unwrap();
        assert_eq!(
            (s.min_degree, s.max_degree, s.connectivity, s.independence_number, s.diameter),
            (3, 3, 3, 1, 1)
        );
        assert_eq!(s.cei, rational(12, 1));
        let s = summarize(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!((s.connectivity, s.independence_number, s.diameter), (2, 2, 2));
        assert_eq!(s.cei, rational(5, 1));
        let s = summarize(&Graph::path(4)).unwrap();
        assert_eq!((s.connectivity, s.independence_number, s.diameter), (1, 2, 3));
        assert_eq!(s.cei, rational(8, 3));
    }

    #[test]
    fn membership() {
        let diam = |n, k, value| ClassSpec { kind: ClassKind::Diameter, n, k, value };
        assert!(is_member(&Graph::cycle(5).unwrap(), &diam(5, 2, 2)).unwrap());
        assert!(!is_member(&Graph::path(4), &diam(4, 2, 3)).unwrap());
        let alpha = ClassSpec { kind: ClassKind::Independence, n: 4, k: 1, value: 1 };
        assert!(is_member(&Graph::complete(4), &alpha).unwrap());
        assert!(matches!(
            is_member(&Graph::path(3), &alpha),
            Err(Error::OrderMismatch { .. })
        ));
    }
}
