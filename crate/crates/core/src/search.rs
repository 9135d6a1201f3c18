//! Isomorphism-free enumeration of small connected graphs, class filtering,
//! exhaustive max-CEI search, and mechanical verification of the extremal
//! claims (and the edge-addition monotonicity lemma they rest on).
//!
//! Enumeration grows graphs one vertex at a time and keeps exactly one
//! representative per isomorphism class via canonical forms. All search
//! output is sorted by canonical label, so serial and parallel runs are
//! byte-identical.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form_with_cap, CanonicalLabel, CANON_MAX_N};
use crate::error::Error;
use crate::graph::Graph;
use crate::graph6;
use crate::invariants::{cei, diameter, is_member, min_degree, ClassKind, ClassSpec, Rational};
use crate::Result;

/// Default order cap for enumeration.
pub const DEFAULT_ENUM_CAP: usize = 9;

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    /// Largest graph order the enumerator will generate.
    pub cap: usize,
    /// Worker thread count; 0 means all available parallelism.
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { cap: DEFAULT_ENUM_CAP, workers: 0 }
    }
}

impl SearchConfig {
    fn pool(&self) -> rayon::ThreadPool {
        let mut b = rayon::ThreadPoolBuilder::new();
        if self.workers > 0 {
            b = b.num_threads(self.workers);
        }
        b.build().expect("thread pool")
    }
}

mod opt_rational {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(|r| r.to_string()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let text: Option<String> = Option::deserialize(d)?;
        text.map(|t| Rational::from_str(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Outcome of one exhaustive max-CEI search over a class.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub spec: ClassSpec,
    /// Non-isomorphic members of the class.
    pub class_size: usize,
    #[serde(with = "opt_rational")]
    pub max_cei: Option<Rational>,
    /// All maximizers up to isomorphism, sorted by canonical label.
    pub maximizers: Vec<CanonicalLabel>,
    pub runtime_ms: u64,
}

impl SearchReport {
    /// Equality of everything except the timing field.
    pub fn same_result(&self, other: &SearchReport) -> bool {
        self.spec == other.spec
            && self.class_size == other.class_size
            && self.max_cei == other.max_cei
            && self.maximizers == other.maximizers
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Theorem {
    T1,
    T2,
    T3,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Confirmed,
    Refuted,
    EmptyClass,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TheoremParams {
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
}

/// Outcome of checking one extremal claim against exhaustive search.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub params: TheoremParams,
    /// Canonical labels of the predicted maximizers.
    pub expected: Vec<CanonicalLabel>,
    pub observed: SearchReport,
    pub verdict: Verdict,
    /// On refutation: a graph in the symmetric difference of expected and
    /// observed maximizer sets.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl VerificationReport {
    pub fn same_result(&self, other: &VerificationReport) -> bool {
        self.theorem == other.theorem
            && self.params == other.params
            && self.expected == other.expected
            && self.observed.same_result(&other.observed)
            && self.verdict == other.verdict
            && self.witness == other.witness
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Violation {
    pub graph6: String,
    pub u: usize,
    pub v: usize,
}

/// Outcome of the edge-addition monotonicity sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Report {
    pub max_n: usize,
    pub graphs_checked: usize,
    pub pairs_checked: usize,
    pub violations: Vec<Lemma1Violation>,
}

fn canon(g: &Graph) -> CanonicalLabel {
    canonical_form_with_cap(g, CANON_MAX_N).expect("order within enumeration range")
}

/// One representative per isomorphism class of graphs on `n` vertices
/// (connected or not), sorted by canonical label.
fn enumerate_all(n: usize, cfg: &SearchConfig) -> Result<Vec<Graph>> {
    if n < 1 || n > cfg.cap {
        return Err(Error::EnumCapExceeded { n, cap: cfg.cap });
    }
    if cfg.cap > CANON_MAX_N {
        return Err(Error::EnumCapExceeded { n, cap: CANON_MAX_N });
    }
    let pool = cfg.pool();
    pool.install(|| {
        let mut level = vec![Graph::empty(1)];
        for m in 1..n {
            let labels = level
                .par_iter()
                .map(|parent| {
                    let mut local = std::collections::BTreeSet::new();
                    for mask in 0u64..(1 << m) {
                        let mut child = parent.disjoint_union(&Graph::empty(1));
                        for u in 0..m {
                            if mask >> u & 1 == 1 {
                                child = child.add_edge(u, m).expect("fresh vertex");
                            }
                        }
                        local.insert(canon(&child));
                    }
                    local
                })
                .reduce(std::collections::BTreeSet::new, |mut a, b| {
                    a.extend(b);
                    a
                });
            level = labels.into_iter().map(|l| l.to_graph()).collect();
        }
        Ok(level)
    })
}

/// One representative per isomorphism class of *connected* graphs on `n`
/// vertices, sorted by canonical label. Each representative is its own
/// canonical form.
pub fn enumerate_connected(n: usize, cfg: &SearchConfig) -> Result<Vec<Graph>> {
    let mut graphs = enumerate_all(n, cfg)?;
    graphs.retain(|g| g.is_connected().expect("n >= 1"));
    Ok(graphs)
}

/// Connected pool of order `spec.n`: either the built-in enumeration or an
/// externally supplied stream, canonicalized and deduplicated.
fn member_pool(spec: &ClassSpec, cfg: &SearchConfig, external: Option<&[Graph]>) -> Result<Vec<Graph>> {
    match external {
        None => enumerate_connected(spec.n, cfg),
        Some(graphs) => {
            let mut labels = std::collections::BTreeSet::new();
            for g in graphs {
                if g.n() != spec.n {
                    return Err(Error::OrderMismatch { got: g.n(), expected: spec.n });
                }
                if g.is_connected()? {
                    labels.insert(canonical_form_with_cap(g, CANON_MAX_N)?);
                }
            }
            Ok(labels.into_iter().map(|l| l.to_graph()).collect())
        }
    }
}

/// Non-isomorphic members of the class, sorted by canonical label. Cheap
/// filters (degree, diameter, independence) run before the connectivity
/// flow computation.
pub fn enumerate_class(
    spec: &ClassSpec,
    cfg: &SearchConfig,
    external: Option<&[Graph]>,
) -> Result<Vec<Graph>> {
    spec.validate()?;
    let pool = member_pool(spec, cfg, external)?;
    let spec = *spec;
    let members = cfg.pool().install(|| {
        pool.into_par_iter()
            .filter(|g| {
                // cheap rejections before the connectivity flow inside is_member
                let plausible = match spec.kind {
                    ClassKind::Diameter => diameter(g).expect("connected") == spec.value,
                    ClassKind::Independence => min_degree(g) >= spec.k,
                    ClassKind::MinDegree => min_degree(g) >= spec.value,
                };
                plausible && is_member(g, &spec).expect("order matches")
            })
            .collect()
    });
    Ok(members)
}

/// Exhaustive maximum-CEI search over a class: the exact maximum and all
/// maximizers up to isomorphism.
pub fn max_cei_search(
    spec: &ClassSpec,
    cfg: &SearchConfig,
    external: Option<&[Graph]>,
) -> Result<SearchReport> {
    let start = Instant::now();
    let members = enumerate_class(spec, cfg, external)?;
    let valued: Vec<(Rational, CanonicalLabel)> = cfg.pool().install(|| {
        members
            .par_iter()
            .map(|g| (cei(g).expect("connected, n >= 2"), canon(g)))
            .collect()
    });
    let max_cei = valued.iter().map(|(v, _)| v).max().cloned();
    let mut maximizers: Vec<CanonicalLabel> = match &max_cei {
        None => Vec::new(),
        Some(m) => valued
            .iter()
            .filter(|(v, _)| v == m)
            .map(|(_, l)| l.clone())
            .collect(),
    };
    maximizers.sort();
    Ok(SearchReport {
        spec: *spec,
        class_size: members.len(),
        max_cei,
        maximizers,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

fn verdict_against(expected: &[CanonicalLabel], observed: &SearchReport) -> (Verdict, Option<String>) {
    if observed.class_size == 0 {
        return (Verdict::EmptyClass, None);
    }
    if expected == observed.maximizers.as_slice() {
        (Verdict::Confirmed, None)
    } else {
        let witness = observed
            .maximizers
            .iter()
            .find(|l| !expected.contains(l))
            .or_else(|| expected.iter().find(|l| !observed.maximizers.contains(l)))
            .map(|l| l.as_str().to_string());
        (Verdict::Refuted, witness)
    }
}

/// Check the fixed-diameter claim: the unique even-d maximizer, or the
/// odd-d family as a set.
pub fn verify_theorem1(
    n: usize,
    k: usize,
    d: usize,
    cfg: &SearchConfig,
    external: Option<&[Graph]>,
) -> Result<VerificationReport> {
    if d < 3 {
        return Err(Error::Infeasible(format!("d >= 3 required, got {d}")));
    }
    let expected_graphs = if d % 2 == 0 {
        vec![crate::constructions::build_g_nkd(n, k, d)?]
    } else {
        crate::constructions::enumerate_h_family(n, k, d)?
    };
    let mut expected: Vec<CanonicalLabel> = expected_graphs.iter().map(canon).collect();
    expected.sort();
    expected.dedup();
    let spec = ClassSpec { kind: ClassKind::Diameter, n, k, value: d };
    let observed = max_cei_search(&spec, cfg, external)?;
    let (verdict, witness) = verdict_against(&expected, &observed);
    Ok(VerificationReport {
        theorem: Theorem::T1,
        params: TheoremParams { n, k, d: Some(d), alpha: None, delta: None },
        expected,
        observed,
        verdict,
        witness,
    })
}

/// Check the fixed-independence-number claim: a singleton maximizer.
pub fn verify_theorem2(
    n: usize,
    k: usize,
    alpha: usize,
    cfg: &SearchConfig,
    external: Option<&[Graph]>,
) -> Result<VerificationReport> {
    let expected = vec![canon(&crate::constructions::build_s_nalpha(n, k, alpha)?)];
    let spec = ClassSpec { kind: ClassKind::Independence, n, k, value: alpha };
    let observed = max_cei_search(&spec, cfg, external)?;
    let (verdict, witness) = verdict_against(&expected, &observed);
    Ok(VerificationReport {
        theorem: Theorem::T2,
        params: TheoremParams { n, k, d: None, alpha: Some(alpha), delta: None },
        expected,
        observed,
        verdict,
        witness,
    })
}

/// Check the fixed-minimum-degree claim: a singleton maximizer.
pub fn verify_theorem3(
    n: usize,
    k: usize,
    delta: usize,
    cfg: &SearchConfig,
    external: Option<&[Graph]>,
) -> Result<VerificationReport> {
    let expected = vec![canon(&crate::constructions::build_m_ndelta(n, k, delta)?)];
    let spec = ClassSpec { kind: ClassKind::MinDegree, n, k, value: delta };
    let observed = max_cei_search(&spec, cfg, external)?;
    let (verdict, witness) = verdict_against(&expected, &observed);
    Ok(VerificationReport {
        theorem: Theorem::T3,
        params: TheoremParams { n, k, d: None, alpha: None, delta: Some(delta) },
        expected,
        observed,
        verdict,
        witness,
    })
}

/// Sweep every connected graph up to `max_n` and every non-adjacent pair,
/// asserting that adding the edge strictly increases CEI.
pub fn check_lemma1(max_n: usize, cfg: &SearchConfig) -> Result<Lemma1Report> {
    if max_n < 2 || max_n > cfg.cap {
        return Err(Error::EnumCapExceeded { n: max_n, cap: cfg.cap });
    }
    let mut report = Lemma1Report {
        max_n,
        graphs_checked: 0,
        pairs_checked: 0,
        violations: Vec::new(),
    };
    for n in 2..=max_n {
        let graphs = enumerate_connected(n, cfg)?;
        let results: Vec<(usize, Vec<Lemma1Violation>)> = cfg.pool().install(|| {
            graphs
                .par_iter()
                .map(|g| {
                    let base = cei(g).expect("connected");
                    let mut pairs = 0;
                    let mut violations = Vec::new();
                    for u in 0..n {
                        for v in (u + 1)..n {
                            if g.has_edge(u, v) {
                                continue;
                            }
                            pairs += 1;
                            let bigger = cei(&g.add_edge(u, v).expect("non-adjacent")).unwrap();
                            if bigger <= base {
                                violations.push(Lemma1Violation {
                                    graph6: graph6::encode(g),
                                    u,
                                    v,
                                });
                            }
                        }
                    }
                    (pairs, violations)
                })
                .collect()
        });
        report.graphs_checked += graphs.len();
        for (pairs, violations) in results {
            report.pairs_checked += pairs;
            report.violations.extend(violations);
        }
    }
    Ok(report)
}
