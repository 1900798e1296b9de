//! Generators for standard graph families, edge signings, and exhaustive
//! enumeration of small connected graphs.
//!
//! Everything here is deterministic: random signings and random graphs
//! take explicit seeds or caller-provided generators, so verification
//! sweeps are reproducible run to run.

use rand::prelude::*;

use crate::combinat::{binomial, KSubset};
use crate::{Error, Result, Sign, SignedGraph, SwitchingVector};

/// Largest n accepted by [`connected_graph_enumerator`].
pub const MAX_ENUMERATION_N: usize = 6;

/// Cap on vertex counts produced by [`generate`].
const MAX_FAMILY_VERTICES: usize = 100_000;

/// A named graph family with parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// Vertices are d-bit strings (as integers), edges at Hamming
    /// distance 1.
    Hypercube { dim: usize },
    /// Vertices are the k-subsets of an n-set in rank order, edges
    /// between subsets with intersection of size l.
    Johnson { n: usize, k: usize, l: usize },
}

/// How to assign signs to the generated edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Signing {
    AllPositive,
    AllNegative,
    /// Exactly one negative edge: the given one, or (0, n-1) when it
    /// exists (the wrap edge of a cycle), otherwise the last canonical
    /// edge.
    OneNegative { edge: Option<(usize, usize)> },
    /// Explicit signs for the listed edges; unlisted edges stay positive.
    Explicit(Vec<(usize, usize, Sign)>),
    /// Independent uniform signs from a seeded generator.
    Random { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub signing: Signing,
}

/// Generate a signed graph from a family spec. Deterministic, including
/// the `Random` signing.
pub fn generate(spec: &FamilySpec) -> Result<SignedGraph> {
    let (n, pairs) = underlying_edges(&spec.family)?;
    let base = SignedGraph::all_positive(n, pairs)?;
    apply_signing(&base, &spec.signing)
}

fn underlying_edges(family: &Family) -> Result<(usize, Vec<(usize, usize)>)> {
    match *family {
        Family::Path { n } => {
            if n < 1 {
                return Err(Error::InvalidFamily("path needs n >= 1".into()));
            }
            Ok((n, (0..n - 1).map(|i| (i, i + 1)).collect()))
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidFamily("cycle needs n >= 3".into()));
            }
            Ok((n, (0..n).map(|i| (i, (i + 1) % n)).collect()))
        }
        Family::Complete { n } => {
            if n < 1 {
                return Err(Error::InvalidFamily("complete graph needs n >= 1".into()));
            }
            Ok((n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()))
        }
        Family::Hypercube { dim } => {
            if dim < 1 || dim > 16 {
                return Err(Error::InvalidFamily(format!(
                    "hypercube dimension {dim} outside 1..=16"
                )));
            }
            let n = 1usize << dim;
            let pairs = (0..n)
                .flat_map(|v| (0..dim).map(move |b| (v, v ^ (1 << b))))
                .filter(|&(v, w)| v < w)
                .collect();
            Ok((n, pairs))
        }
        Family::Johnson { n, k, l } => {
            if !(1 <= l && l <= k && k <= n) {
                return Err(Error::InvalidFamily(format!(
                    "johnson needs n >= k >= l >= 1, got n={n} k={k} l={l}"
                )));
            }
            let count = binomial(n, k);
            if count > MAX_FAMILY_VERTICES {
                return Err(Error::InvalidFamily(format!(
                    "johnson graph would have {count} vertices"
                )));
            }
            let subsets = KSubset::all(n, k)?;
            let mut pairs = Vec::new();
            for i in 0..subsets.len() {
                for j in i + 1..subsets.len() {
                    let inter = subsets[i]
                        .elems()
                        .iter()
                        .filter(|&&x| subsets[j].contains(x))
                        .count();
                    if inter == l {
                        pairs.push((i, j));
                    }
                }
            }
            Ok((count, pairs))
        }
    }
}

fn apply_signing(base: &SignedGraph, signing: &Signing) -> Result<SignedGraph> {
    match signing {
        Signing::AllPositive => Ok(base.clone()),
        Signing::AllNegative => Ok(base.negate()),
        Signing::OneNegative { edge } => {
            let (u, v) = match *edge {
                Some((u, v)) => {
                    if !base.has_edge(u, v) {
                        return Err(Error::InvalidFamily(format!(
                            "signing references non-edge ({u}, {v})"
                        )));
                    }
                    (u.min(v), u.max(v))
                }
                None => {
                    if base.num_edges() == 0 {
                        return Err(Error::InvalidFamily(
                            "one-negative signing needs at least one edge".into(),
                        ));
                    }
                    let wrap = (0, base.n() - 1);
                    if base.has_edge(wrap.0, wrap.1) {
                        wrap
                    } else {
                        base.edges().map(|(a, b, _)| (a, b)).last().unwrap()
                    }
                }
            };
            SignedGraph::from_edges(
                base.n(),
                base.edges().map(|(a, b, _)| {
                    let s = if (a, b) == (u, v) { Sign::Minus } else { Sign::Plus };
                    (a, b, s)
                }),
            )
        }
        Signing::Explicit(list) => {
            let mut signs: std::collections::BTreeMap<(usize, usize), Sign> =
                base.edges().map(|(a, b, _)| ((a, b), Sign::Plus)).collect();
            for &(u, v, s) in list {
                let key = (u.min(v), u.max(v));
                if !signs.contains_key(&key) {
                    return Err(Error::InvalidFamily(format!(
                        "signing references non-edge ({u}, {v})"
                    )));
                }
                signs.insert(key, s);
            }
            SignedGraph::from_edges(base.n(), signs.into_iter().map(|((a, b), s)| (a, b, s)))
        }
        Signing::Random { seed } => {
            let mut rng = StdRng::seed_from_u64(*seed);
            Ok(random_signing(base, &mut rng))
        }
    }
}

/// Re-sign every edge of `g` independently and uniformly at random.
pub fn random_signing(g: &SignedGraph, rng: &mut impl Rng) -> SignedGraph {
    SignedGraph::from_edges(
        g.n(),
        g.edges().map(|(u, v, _)| {
            (u, v, if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus })
        }),
    )
    .expect("edges stay valid")
}

/// A uniformly random (all-positive) graph on n labeled vertices.
pub fn random_graph(n: usize, rng: &mut impl Rng) -> SignedGraph {
    let pairs = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.random_bool(0.5))
        .collect::<Vec<_>>();
    SignedGraph::all_positive(n, pairs).expect("edges stay valid")
}

/// Rejection-sample a connected random graph.
pub fn random_connected_graph(n: usize, rng: &mut impl Rng) -> SignedGraph {
    loop {
        let g = random_graph(n, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// A connected random graph with uniform random signs.
pub fn random_signed_graph(n: usize, rng: &mut impl Rng) -> SignedGraph {
    let g = random_connected_graph(n, rng);
    random_signing(&g, rng)
}

/// A uniformly random switching vector.
pub fn random_switching(n: usize, rng: &mut impl Rng) -> SwitchingVector {
    SwitchingVector::from_signs(
        (0..n)
            .map(|_| if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus })
            .collect(),
    )
}

/// A uniformly random vertex relabeling (permutation of 0..n).
pub fn random_relabeling(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut map: Vec<usize> = (0..n).collect();
    map.shuffle(rng);
    map
}

/// All 2^|E| signings of the underlying graph of `g`, in mask order over
/// the canonical edge list (bit i negative means edge i negative).
pub fn all_signings(g: &SignedGraph) -> AllSignings {
    AllSignings {
        n: g.n(),
        pairs: g.edges().map(|(u, v, _)| (u, v)).collect(),
        next: 0,
    }
}

pub struct AllSignings {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
}

impl Iterator for AllSignings {
    type Item = SignedGraph;

    fn next(&mut self) -> Option<SignedGraph> {
        if self.next >= 1 << self.pairs.len() {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        Some(
            SignedGraph::from_edges(
                self.n,
                self.pairs.iter().enumerate().map(|(i, &(u, v))| {
                    (u, v, if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus })
                }),
            )
            .expect("edges stay valid"),
        )
    }
}

/// Whether `map` carries the underlying edge set of `g1` exactly onto
/// that of `g2`. Signs are ignored; the map must be a bijection of the
/// vertex sets.
pub fn edge_sets_equal_under_map(
    g1: &SignedGraph,
    g2: &SignedGraph,
    map: &[usize],
) -> Result<bool> {
    if map.len() != g1.n() || g1.n() != g2.n() {
        return Err(Error::NonBijectiveMap(format!(
            "map length {} for graphs on {} and {} vertices",
            map.len(),
            g1.n(),
            g2.n()
        )));
    }
    let mut seen = vec![false; g2.n()];
    for &im in map {
        if im >= g2.n() {
            return Err(Error::NonBijectiveMap(format!("image {im} out of range")));
        }
        if seen[im] {
            return Err(Error::NonBijectiveMap(format!("image {im} repeated")));
        }
        seen[im] = true;
    }
    if g1.num_edges() != g2.num_edges() {
        return Ok(false);
    }
    Ok(g1.edges().all(|(u, v, _)| g2.has_edge(map[u], map[v])))
}

/// All connected labeled graphs on n vertices (all positive), streamed
/// in edge-mask order. Bounded by [`MAX_ENUMERATION_N`].
pub fn connected_graph_enumerator(n: usize) -> Result<ConnectedGraphEnumerator> {
    if n < 1 {
        return Err(Error::InvalidFamily("enumeration needs n >= 1".into()));
    }
    if n > MAX_ENUMERATION_N {
        return Err(Error::EnumerationTooLarge {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(ConnectedGraphEnumerator {
        n,
        end: 1 << pairs.len(),
        pairs,
        next: 0,
    })
}

pub struct ConnectedGraphEnumerator {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl Iterator for ConnectedGraphEnumerator {
    type Item = SignedGraph;

    fn next(&mut self) -> Option<SignedGraph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let g = SignedGraph::all_positive(
                self.n,
                self.pairs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p),
            )
            .expect("edges stay valid");
            if g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}
