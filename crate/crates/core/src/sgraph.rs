//! Signed graphs: simple undirected graphs with ±1 edge signs.
//!
//! The central notions are *switching* (negating all edges at a chosen
//! vertex set, which preserves cycle signs) and *balance* (every cycle
//! positive). [`SignedGraph::is_balanced`] always returns a certificate:
//! a switching that makes every edge positive, or a negative cycle.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use itertools::Itertools;

use crate::{Error, Result, Sign};

/// A ±1 value per vertex. Switching by `d` replaces each edge sign s(u,v)
/// with d(u)·s(u,v)·d(v).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingVector {
    values: Vec<Sign>,
}

impl SwitchingVector {
    pub fn all_positive(n: usize) -> Self {
        SwitchingVector {
            values: vec![Sign::Plus; n],
        }
    }

    pub fn from_signs(values: Vec<Sign>) -> Self {
        SwitchingVector { values }
    }

    /// -1 exactly on the listed vertices.
    pub fn from_negative_set(n: usize, negatives: &[usize]) -> Result<Self> {
        let mut values = vec![Sign::Plus; n];
        for &v in negatives {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            values[v] = Sign::Minus;
        }
        Ok(SwitchingVector { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> Sign {
        self.values[v]
    }

    pub fn values(&self) -> &[Sign] {
        &self.values
    }

    /// Product of the entries over a vertex list.
    pub fn product_over(&self, vs: impl IntoIterator<Item = usize>) -> Sign {
        vs.into_iter().fold(Sign::Plus, |acc, v| acc * self.values[v])
    }

    /// Entrywise product; switching by the result equals switching by
    /// `self` and then by `other`.
    pub fn entrywise(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                got: other.len(),
                want: self.len(),
            });
        }
        Ok(SwitchingVector {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| a * b)
                .collect(),
        })
    }
}

impl fmt::Display for SwitchingVector {
    /// Space-separated entries, e.g. `+1 -1 +1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.values.iter().join(" "))
    }
}

/// Outcome of a balance test, always carrying a checkable certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BalanceReport {
    /// A switching that makes every edge positive.
    Balanced(SwitchingVector),
    /// A cycle (as a vertex sequence, consecutive entries adjacent, last
    /// adjacent to first) whose sign is -1.
    Unbalanced(Vec<usize>),
}

impl BalanceReport {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceReport::Balanced(_))
    }

    pub fn switching(&self) -> Option<&SwitchingVector> {
        match self {
            BalanceReport::Balanced(d) => Some(d),
            BalanceReport::Unbalanced(_) => None,
        }
    }

    pub fn negative_cycle(&self) -> Option<&[usize]> {
        match self {
            BalanceReport::Balanced(_) => None,
            BalanceReport::Unbalanced(c) => Some(c),
        }
    }
}

/// A simple undirected graph on vertices 0..n with a ±1 sign on every
/// edge. Edges are stored canonically with u < v; the structure is
/// immutable after construction.
#[derive(Debug, Clone)]
pub struct SignedGraph {
    n: usize,
    edges: BTreeMap<(usize, usize), Sign>,
    adj: Vec<Vec<(usize, Sign)>>,
}

impl PartialEq for SignedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for SignedGraph {}

impl SignedGraph {
    /// The edgeless graph on n vertices.
    pub fn new(n: usize) -> Self {
        SignedGraph {
            n,
            edges: BTreeMap::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Build from signed edges. Endpoint order within a pair is
    /// irrelevant; self-loops, duplicates, and out-of-range vertices are
    /// rejected.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, Sign)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (a, b, s) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop { v: a });
            }
            let key = (a.min(b), a.max(b));
            if map.insert(key, s).is_some() {
                return Err(Error::DuplicateEdge { u: key.0, v: key.1 });
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (&(u, v), &s) in &map {
            adj[u].push((v, s));
            adj[v].push((u, s));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(SignedGraph { n, edges: map, adj })
    }

    /// Build with every edge positive.
    pub fn all_positive(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::from_edges(n, pairs.into_iter().map(|(u, v)| (u, v, Sign::Plus)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: (u, v, sign) with u < v, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.edges.iter().map(|(&(u, v), &s)| (u, v, s))
    }

    /// Sign of the edge between u and v, in either endpoint order.
    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.sign(u, v).is_some()
    }

    /// Neighbors of u with edge signs, sorted by neighbor.
    pub fn neighbors(&self, u: usize) -> &[(usize, Sign)] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    /// The same graph with every sign made positive.
    pub fn underlying(&self) -> SignedGraph {
        SignedGraph::all_positive(self.n, self.edges.keys().copied()).expect("edges stay valid")
    }

    /// The same graph with every sign negated.
    pub fn negate(&self) -> SignedGraph {
        SignedGraph::from_edges(self.n, self.edges().map(|(u, v, s)| (u, v, -s)))
            .expect("edges stay valid")
    }

    /// Switch by a ±1 vertex vector: s(u,v) becomes d(u)·s(u,v)·d(v).
    pub fn switch(&self, d: &SwitchingVector) -> Result<SignedGraph> {
        if d.len() != self.n {
            return Err(Error::LengthMismatch {
                got: d.len(),
                want: self.n,
            });
        }
        SignedGraph::from_edges(
            self.n,
            self.edges().map(|(u, v, s)| (u, v, d.get(u) * s * d.get(v))),
        )
    }

    /// Rename vertices: vertex v becomes `map[v]`. The map must be a
    /// permutation of 0..n.
    pub fn relabel(&self, map: &[usize]) -> Result<SignedGraph> {
        if map.len() != self.n {
            return Err(Error::LengthMismatch {
                got: map.len(),
                want: self.n,
            });
        }
        let mut seen = vec![false; self.n];
        for &im in map {
            if im >= self.n {
                return Err(Error::NonBijectiveMap(format!(
                    "image {im} out of range for {} vertices",
                    self.n
                )));
            }
            if seen[im] {
                return Err(Error::NonBijectiveMap(format!("image {im} repeated")));
            }
            seen[im] = true;
        }
        SignedGraph::from_edges(self.n, self.edges().map(|(u, v, s)| (map[u], map[v], s)))
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            let mut comp = vec![root];
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// True for the empty graph and any graph with a single component.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether the underlying graph is 2-colorable.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![None; self.n];
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!color[v].unwrap());
                            queue.push_back(w);
                        }
                        Some(c) => {
                            if c == color[v].unwrap() {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// True when some vertex has degree at least 3, i.e. the underlying
    /// graph contains a claw K_{1,3} as a subgraph.
    pub fn contains_claw(&self) -> bool {
        self.max_degree() >= 3
    }

    /// Underlying graph is a path (connected, n-1 edges, max degree 2).
    /// The one-vertex graph counts as a path.
    pub fn is_path_graph(&self) -> bool {
        self.n >= 1
            && self.num_edges() == self.n - 1
            && self.max_degree() <= 2
            && self.is_connected()
    }

    /// Underlying graph is a single cycle (connected and 2-regular).
    pub fn is_cycle_graph(&self) -> bool {
        self.n >= 3 && self.is_connected() && (0..self.n).all(|v| self.degree(v) == 2)
    }

    /// Product of edge signs around a cycle given as a distinct vertex
    /// sequence; the edge from the last vertex back to the first is
    /// included.
    pub fn sign_of_cycle(&self, cycle: &[usize]) -> Result<Sign> {
        if cycle.len() < 3 {
            return Err(Error::InvalidCycle(format!(
                "length {} is below 3",
                cycle.len()
            )));
        }
        let mut sorted = cycle.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCycle("repeated vertex".into()));
        }
        let mut product = Sign::Plus;
        for i in 0..cycle.len() {
            let u = cycle[i];
            let v = cycle[(i + 1) % cycle.len()];
            if u >= self.n {
                return Err(Error::VertexOutOfRange { v: u, n: self.n });
            }
            match self.sign(u, v) {
                Some(s) => product *= s,
                None => {
                    return Err(Error::InvalidCycle(format!(
                        "consecutive vertices {u} and {v} are not adjacent"
                    )))
                }
            }
        }
        Ok(product)
    }

    /// Decide balance. Balanced graphs yield a switching making every
    /// edge positive; unbalanced graphs yield a negative cycle. The
    /// result is deterministic: a breadth-first forest is grown from the
    /// smallest vertex of each component and the first violating
    /// non-tree edge in canonical order closes the certificate cycle.
    pub fn is_balanced(&self) -> BalanceReport {
        let mut value = vec![None; self.n];
        let mut parent: Vec<Option<usize>> = vec![None; self.n];
        for root in 0..self.n {
            if value[root].is_some() {
                continue;
            }
            value[root] = Some(Sign::Plus);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &(w, s) in &self.adj[v] {
                    if value[w].is_none() {
                        value[w] = Some(value[v].unwrap() * s);
                        parent[w] = Some(v);
                        queue.push_back(w);
                    }
                }
            }
        }
        for (&(u, v), &s) in &self.edges {
            if parent[v] == Some(u) || parent[u] == Some(v) {
                continue;
            }
            if value[u].unwrap() * value[v].unwrap() != s {
                let cycle = fundamental_cycle(&parent, u, v);
                debug_assert_eq!(self.sign_of_cycle(&cycle), Ok(Sign::Minus));
                return BalanceReport::Unbalanced(cycle);
            }
        }
        BalanceReport::Balanced(SwitchingVector::from_signs(
            value.into_iter().map(|s| s.unwrap()).collect(),
        ))
    }

    /// Decide anti-balance: whether the negation is balanced
    /// (equivalently, some switching makes every edge negative). The
    /// certificate refers to the negated graph.
    pub fn is_antibalanced(&self) -> BalanceReport {
        self.negate().is_balanced()
    }

    /// Find a switching carrying `other` to `self`, if one exists. Both
    /// graphs must share the underlying graph; `Some(d)` satisfies
    /// `other.switch(&d) == self`.
    pub fn switching_equivalent(&self, other: &Self) -> Result<Option<SwitchingVector>> {
        if self.n != other.n
            || self.edges.len() != other.edges.len()
            || !self.edges.keys().eq(other.edges.keys())
        {
            return Err(Error::UnderlyingMismatch);
        }
        let product = SignedGraph::from_edges(
            self.n,
            self.edges()
                .map(|(u, v, s)| (u, v, s * other.sign(u, v).unwrap())),
        )?;
        match product.is_balanced() {
            BalanceReport::Balanced(d) => Ok(Some(d)),
            BalanceReport::Unbalanced(_) => Ok(None),
        }
    }
}

impl fmt::Display for SignedGraph {
    /// Compact one-line rendering, e.g. `n=3 m=2: 0-1:+ 1-2:-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} m={}:", self.n, self.num_edges())?;
        for (u, v, s) in self.edges() {
            write!(
                f,
                " {u}-{v}:{}",
                if s.is_positive() { '+' } else { '-' }
            )?;
        }
        Ok(())
    }
}

/// Close the cycle formed by the non-tree edge (u, v) and the two tree
/// paths to their lowest common ancestor.
fn fundamental_cycle(parent: &[Option<usize>], u: usize, v: usize) -> Vec<usize> {
    let path_up = |mut x: usize| {
        let mut path = vec![x];
        while let Some(p) = parent[x] {
            path.push(p);
            x = p;
        }
        path
    };
    let au = path_up(u);
    let av = path_up(v);
    let on_au: std::collections::HashSet<usize> = au.iter().copied().collect();
    let j_lca = av
        .iter()
        .position(|x| on_au.contains(x))
        .expect("u and v share a component");
    let lca = av[j_lca];
    let i_lca = au.iter().position(|&x| x == lca).unwrap();
    let mut cycle = au[..=i_lca].to_vec();
    cycle.extend(av[..j_lca].iter().rev());
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> SignedGraph {
        SignedGraph::all_positive(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: usize) -> SignedGraph {
        SignedGraph::all_positive(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// C5 with its single negative edge on (0, 4).
    fn c5_one_negative() -> SignedGraph {
        SignedGraph::from_edges(
            5,
            [
                (0, 1, Sign::Plus),
                (1, 2, Sign::Plus),
                (2, 3, Sign::Plus),
                (3, 4, Sign::Plus),
                (0, 4, Sign::Minus),
            ],
        )
        .unwrap()
    }

    fn k4(sign: Sign) -> SignedGraph {
        SignedGraph::from_edges(
            4,
            (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v, sign))),
        )
        .unwrap()
    }

    /// Exhaustive reference for switching equivalence on small graphs.
    fn equivalent_by_search(a: &SignedGraph, b: &SignedGraph) -> Option<SwitchingVector> {
        for mask in 0u32..1 << a.n() {
            let d = SwitchingVector::from_signs(
                (0..a.n())
                    .map(|v| Sign::from_parity((mask >> v & 1) as usize))
                    .collect(),
            );
            if &b.switch(&d).unwrap() == a {
                return Some(d);
            }
        }
        None
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(
            SignedGraph::all_positive(3, [(0, 0)]).unwrap_err(),
            Error::SelfLoop { v: 0 }
        );
        assert_eq!(
            SignedGraph::all_positive(3, [(0, 1), (1, 0)]).unwrap_err(),
            Error::DuplicateEdge { u: 0, v: 1 }
        );
        assert_eq!(
            SignedGraph::all_positive(3, [(0, 3)]).unwrap_err(),
            Error::VertexOutOfRange { v: 3, n: 3 }
        );
    }

    #[test]
    fn accessors_are_symmetric_and_sorted() {
        let g = c5_one_negative();
        assert_eq!(g.n(), 5);
        assert_eq!(g.num_edges(), 5);
        assert_eq!(g.sign(4, 0), Some(Sign::Minus));
        assert_eq!(g.sign(0, 4), Some(Sign::Minus));
        assert_eq!(g.sign(0, 2), None);
        assert_eq!(g.neighbors(0), &[(1, Sign::Plus), (4, Sign::Minus)]);
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.to_string(), "n=5 m=5: 0-1:+ 0-4:- 1-2:+ 2-3:+ 3-4:+");
    }

    #[test]
    fn cycle_signs() {
        let g = cycle(3);
        assert_eq!(g.sign_of_cycle(&[0, 1, 2]), Ok(Sign::Plus));
        let c5 = c5_one_negative();
        assert_eq!(c5.sign_of_cycle(&[0, 1, 2, 3, 4]), Ok(Sign::Minus));
        // Rotations and reflections agree.
        assert_eq!(c5.sign_of_cycle(&[3, 2, 1, 0, 4]), Ok(Sign::Minus));
        // A hexagon signed -,+,-,+,+,- has product -1.
        let hex = SignedGraph::from_edges(
            6,
            [
                (0, 1, Sign::Minus),
                (1, 2, Sign::Plus),
                (2, 3, Sign::Minus),
                (3, 4, Sign::Plus),
                (4, 5, Sign::Plus),
                (0, 5, Sign::Minus),
            ],
        )
        .unwrap();
        assert_eq!(hex.sign_of_cycle(&[0, 1, 2, 3, 4, 5]), Ok(Sign::Minus));
        assert!(matches!(
            c5.sign_of_cycle(&[0, 1, 2]),
            Err(Error::InvalidCycle(_))
        ));
        assert!(matches!(
            c5.sign_of_cycle(&[0, 1, 0, 4]),
            Err(Error::InvalidCycle(_))
        ));
        assert!(matches!(
            c5.sign_of_cycle(&[0, 1]),
            Err(Error::InvalidCycle(_))
        ));
    }

    #[test]
    fn all_positive_graphs_are_balanced_with_trivial_witness() {
        for g in [path(5), cycle(6), k4(Sign::Plus)] {
            match g.is_balanced() {
                BalanceReport::Balanced(d) => {
                    assert_eq!(d, SwitchingVector::all_positive(g.n()));
                }
                BalanceReport::Unbalanced(_) => panic!("expected balanced"),
            }
        }
    }

    #[test]
    fn unbalanced_cycle_yields_negative_cycle_witness() {
        let g = c5_one_negative();
        let report = g.is_balanced();
        assert!(!report.is_balanced());
        let witness = report.negative_cycle().unwrap();
        assert_eq!(witness.len(), 5);
        assert_eq!(g.sign_of_cycle(witness), Ok(Sign::Minus));
    }

    #[test]
    fn balanced_witness_switches_to_all_positive() {
        // A balanced but not all-positive graph: switch C6 by a random-ish set.
        let d = SwitchingVector::from_negative_set(6, &[1, 4, 5]).unwrap();
        let g = cycle(6).switch(&d).unwrap();
        let report = g.is_balanced();
        let w = report.switching().unwrap();
        let back = g.switch(w).unwrap();
        assert!(back.edges().all(|(_, _, s)| s.is_positive()));
    }

    #[test]
    fn antibalance_examples() {
        assert!(k4(Sign::Minus).is_antibalanced().is_balanced());
        // Even cycles, all positive, are anti-balanced; odd ones are not.
        assert!(cycle(4).is_antibalanced().is_balanced());
        assert!(!cycle(3).is_antibalanced().is_balanced());
        assert!(cycle(3).is_balanced().is_balanced());
    }

    #[test]
    fn switching_by_all_positive_is_identity() {
        let g = c5_one_negative();
        assert_eq!(g.switch(&SwitchingVector::all_positive(5)).unwrap(), g);
    }

    #[test]
    fn switching_star_center_negates_every_edge() {
        let star = SignedGraph::all_positive(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let d = SwitchingVector::from_negative_set(4, &[0]).unwrap();
        assert_eq!(star.switch(&d).unwrap(), star.negate());
    }

    #[test]
    fn switching_moves_negative_edge_around_cycle() {
        let g = c5_one_negative();
        let d = SwitchingVector::from_negative_set(5, &[0]).unwrap();
        let expected = SignedGraph::from_edges(
            5,
            [
                (0, 1, Sign::Minus),
                (1, 2, Sign::Plus),
                (2, 3, Sign::Plus),
                (3, 4, Sign::Plus),
                (0, 4, Sign::Plus),
            ],
        )
        .unwrap();
        assert_eq!(g.switch(&d).unwrap(), expected);
        // Cycle sign is a switching invariant.
        assert_eq!(
            g.switch(&d).unwrap().sign_of_cycle(&[0, 1, 2, 3, 4]),
            Ok(Sign::Minus)
        );
    }

    #[test]
    fn switching_is_an_involution() {
        let g = c5_one_negative();
        let d = SwitchingVector::from_negative_set(5, &[1, 3]).unwrap();
        assert_eq!(g.switch(&d).unwrap().switch(&d).unwrap(), g);
        assert_eq!(
            g.switch(&SwitchingVector::all_positive(3)).unwrap_err(),
            Error::LengthMismatch { got: 3, want: 5 }
        );
    }

    #[test]
    fn switching_equivalence_finds_a_valid_witness() {
        let g = c5_one_negative();
        let d = SwitchingVector::from_negative_set(5, &[0, 2]).unwrap();
        let h = g.switch(&d).unwrap();
        let found = g.switching_equivalent(&h).unwrap().unwrap();
        assert_eq!(h.switch(&found).unwrap(), g);
    }

    #[test]
    fn inequivalent_signings_of_c4() {
        let pos = cycle(4);
        let one_neg = SignedGraph::from_edges(
            4,
            [
                (0, 1, Sign::Minus),
                (1, 2, Sign::Plus),
                (2, 3, Sign::Plus),
                (0, 3, Sign::Plus),
            ],
        )
        .unwrap();
        assert_eq!(pos.switching_equivalent(&one_neg).unwrap(), None);
        assert_eq!(equivalent_by_search(&pos, &one_neg), None);
        // Different underlying graphs are an error, not a "no".
        assert_eq!(
            pos.switching_equivalent(&path(4)).unwrap_err(),
            Error::UnderlyingMismatch
        );
    }

    #[test]
    fn k4_signings_with_equal_triangle_signs_are_equivalent() {
        use rand::prelude::*;
        let mut rng = StdRng::seed_from_u64(7);
        let triangles: [[usize; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
        let mut found = 0;
        while found < 10 {
            let a = random_k4(&mut rng);
            let b = random_k4(&mut rng);
            let same = triangles
                .iter()
                .all(|t| a.sign_of_cycle(t).unwrap() == b.sign_of_cycle(t).unwrap());
            if !same {
                continue;
            }
            found += 1;
            let d = a.switching_equivalent(&b).unwrap().expect("equivalent");
            assert_eq!(b.switch(&d).unwrap(), a);
            // Exhaustive search over all 2^4 switchings agrees.
            assert!(equivalent_by_search(&a, &b).is_some());
        }
    }

    fn random_k4(rng: &mut impl rand::Rng) -> SignedGraph {
        SignedGraph::from_edges(
            4,
            (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).map(|(u, v)| {
                (u, v, if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus })
            }),
        )
        .unwrap()
    }

    #[test]
    fn equivalence_relation_laws() {
        let g = c5_one_negative();
        // Reflexive.
        let d = g.switching_equivalent(&g).unwrap().unwrap();
        assert_eq!(g.switch(&d).unwrap(), g);
        // Symmetric and transitive via entrywise products.
        let d12 = SwitchingVector::from_negative_set(5, &[2]).unwrap();
        let d23 = SwitchingVector::from_negative_set(5, &[0, 4]).unwrap();
        let g2 = g.switch(&d12).unwrap();
        let g3 = g2.switch(&d23).unwrap();
        let combined = d12.entrywise(&d23).unwrap();
        assert_eq!(g.switch(&combined).unwrap(), g3);
        assert!(g3.switching_equivalent(&g).unwrap().is_some());
        assert!(g.switching_equivalent(&g3).unwrap().is_some());
    }

    #[test]
    fn negate_and_underlying() {
        let g = c5_one_negative();
        assert_eq!(g.negate().negate(), g);
        assert!(g.underlying().edges().all(|(_, _, s)| s.is_positive()));
        assert!(g.underlying().is_balanced().is_balanced());
        // An odd cycle made all-negative is unbalanced.
        assert!(!cycle(3).negate().is_balanced().is_balanced());
    }

    #[test]
    fn shape_predicates() {
        assert!(path(5).is_path_graph());
        assert!(!path(5).is_cycle_graph());
        assert!(!path(5).contains_claw());
        assert!(cycle(6).is_cycle_graph());
        assert!(!cycle(6).is_path_graph());
        let star = SignedGraph::all_positive(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(star.contains_claw());
        assert!(!star.is_path_graph());
        assert!(SignedGraph::new(1).is_path_graph());
        // Disconnected forest with n-1 edges is not a path.
        let two_parts =
            SignedGraph::all_positive(4, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(!two_parts.is_path_graph());
    }

    #[test]
    fn connectivity_and_bipartiteness() {
        assert!(path(4).is_connected());
        assert!(path(4).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert!(cycle(6).is_bipartite());
        let disjoint = SignedGraph::all_positive(5, [(0, 1), (2, 3)]).unwrap();
        assert!(!disjoint.is_connected());
        assert_eq!(
            disjoint.components(),
            vec![vec![0, 1], vec![2, 3], vec![4]]
        );
        assert!(SignedGraph::new(0).is_connected());
        assert!(SignedGraph::new(1).is_connected());
    }

    #[test]
    fn relabel_moves_edges_and_validates() {
        let g = c5_one_negative();
        let rho = [4, 3, 2, 1, 0];
        let h = g.relabel(&rho).unwrap();
        assert_eq!(h.sign(4, 3), Some(Sign::Plus));
        assert_eq!(h.sign(4, 0), Some(Sign::Minus));
        assert!(matches!(
            g.relabel(&[0, 0, 1, 2, 3]),
            Err(Error::NonBijectiveMap(_))
        ));
        assert!(matches!(
            g.relabel(&[0, 1, 2]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn balance_is_switching_invariant_on_random_graphs() {
        use rand::prelude::*;
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..50 {
            let n = rng.random_range(2..=7);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.5) {
                        let s = if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus };
                        edges.push((u, v, s));
                    }
                }
            }
            let g = SignedGraph::from_edges(n, edges).unwrap();
            let d = SwitchingVector::from_signs(
                (0..n)
                    .map(|_| if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus })
                    .collect(),
            );
            let h = g.switch(&d).unwrap();
            assert_eq!(g.is_balanced().is_balanced(), h.is_balanced().is_balanced());
            // The found witness always checks out.
            if let BalanceReport::Balanced(w) = h.is_balanced() {
                assert!(h.switch(&w).unwrap().edges().all(|(_, _, s)| s.is_positive()));
            } else if let BalanceReport::Unbalanced(c) = h.is_balanced() {
                assert_eq!(h.sign_of_cycle(&c), Ok(Sign::Minus));
            }
        }
    }
}
