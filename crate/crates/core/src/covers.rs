//! Gain graphs over the symmetric group and their covers.
//!
//! The connecting permutations of an exterior power assemble into a gain
//! graph: each edge of the underlying power carries an element of S_k.
//! Its |S_k|-cover has one vertex per (subset, permutation) pair, and the
//! cover is isomorphic to the k-fold Cartesian power of the base graph
//! with the diagonal (tuples with repeated coordinates) deleted. The map
//! sends (u, π) to the tuple whose j-th coordinate is u[π(j)];
//! [`verify_cover_isomorphism`] checks mechanically that this is a graph
//! isomorphism.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::algebra::DEFAULT_MAX_ROWS;
use crate::combinat::{factorial, KSubset, Permutation};
use crate::exterior::wedge_power;
use crate::{Error, Result, SignedGraph};

/// A graph whose edges carry permutations: the base is the underlying
/// exterior power, the gain of an edge is its connecting permutation.
/// Gains are stored on the orientation from the smaller to the larger
/// subset rank; the reverse direction is the inverse.
#[derive(Debug, Clone)]
pub struct GainGraph {
    n: usize,
    k: usize,
    base: SignedGraph,
    subsets: Vec<KSubset>,
    gains: BTreeMap<(usize, usize), Permutation>,
}

impl GainGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The underlying (all-positive) exterior power.
    pub fn base(&self) -> &SignedGraph {
        &self.base
    }

    pub fn subsets(&self) -> &[KSubset] {
        &self.subsets
    }

    /// Gain of the edge from `from` to `to` (subset ranks), inverted when
    /// traversed against the stored orientation.
    pub fn gain(&self, from: usize, to: usize) -> Option<Permutation> {
        if from < to {
            self.gains.get(&(from, to)).cloned()
        } else {
            self.gains.get(&(to, from)).map(|p| p.inverse())
        }
    }

    /// Stored gains in canonical orientation (u < v by rank).
    pub fn gains(&self) -> impl Iterator<Item = (usize, usize, &Permutation)> + '_ {
        self.gains.iter().map(|(&(u, v), p)| (u, v, p))
    }
}

/// The gain graph of the exterior k-th power of `g`. Signs of `g` play
/// no role here; only the underlying graph matters.
pub fn gain_graph(g: &SignedGraph, k: usize) -> Result<GainGraph> {
    let w = wedge_power(g, k)?;
    let gains = w
        .edges()
        .iter()
        .map(|e| ((e.u_rank, e.v_rank), e.perm.clone()))
        .collect();
    Ok(GainGraph {
        n: g.n(),
        k,
        base: w.graph().underlying(),
        subsets: w.subsets().to_vec(),
        gains,
    })
}

/// The |S_k|-cover of a gain graph: vertices are (subset, permutation)
/// pairs, and each base edge u→v with gain g lifts to the k! edges
/// (u, g∘τ) ~ (v, τ).
#[derive(Debug, Clone)]
pub struct CoverGraph {
    n: usize,
    k: usize,
    vertices: Vec<(KSubset, Permutation)>,
    graph: SignedGraph,
}

impl CoverGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Vertex labels; index is subset-rank-major, permutation-minor with
    /// permutations in lexicographic order.
    pub fn vertices(&self) -> &[(KSubset, Permutation)] {
        &self.vertices
    }

    /// The cover as a plain (all-positive) graph.
    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    /// Vertex id of a (subset rank, permutation index) pair.
    pub fn vertex_id(&self, rank: usize, perm_index: usize) -> usize {
        rank * factorial(self.k) + perm_index
    }
}

/// Build the |S_k|-cover of a gain graph.
pub fn build_cover(phi: &GainGraph) -> Result<CoverGraph> {
    let k = phi.k();
    let perms = Permutation::all(k);
    let kfact = perms.len();
    let perm_index: HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.images(), i))
        .collect();
    let vertices: Vec<(KSubset, Permutation)> = phi
        .subsets()
        .iter()
        .flat_map(|s| perms.iter().map(move |p| (s.clone(), p.clone())))
        .collect();
    let mut edges = BTreeSet::new();
    for (u, v, g) in phi.gains() {
        for (ti, tau) in perms.iter().enumerate() {
            let lifted = g.compose(tau)?;
            let li = perm_index[lifted.images()];
            let a = u * kfact + li;
            let b = v * kfact + ti;
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let graph = SignedGraph::all_positive(vertices.len(), edges)?;
    Ok(CoverGraph {
        n: phi.n(),
        k,
        vertices,
        graph,
    })
}

/// The k-fold Cartesian power of a signed graph restricted to tuples
/// with pairwise distinct coordinates. Edge signs are inherited from the
/// base edge that the differing coordinate traverses.
#[derive(Debug, Clone)]
pub struct DeletedPower {
    n: usize,
    k: usize,
    tuples: Vec<Vec<usize>>,
    graph: SignedGraph,
}

impl DeletedPower {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Repeated-free tuples in tuple-index order; index is the vertex id.
    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }
}

/// Build the diagonal-deleted k-fold Cartesian power.
pub fn diagonal_deleted_power(g: &SignedGraph, k: usize) -> Result<DeletedPower> {
    diagonal_deleted_power_bounded(g, k, DEFAULT_MAX_ROWS)
}

pub fn diagonal_deleted_power_bounded(
    g: &SignedGraph,
    k: usize,
    max_rows: usize,
) -> Result<DeletedPower> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, max: n });
    }
    let space = n
        .checked_pow(k as u32)
        .filter(|&rows| rows <= max_rows)
        .ok_or(Error::SizeLimit {
            rows: usize::MAX,
            max: max_rows,
        })?;
    let _ = space;
    // Enumerate repeated-free tuples in tuple-index order.
    let mut tuples: Vec<Vec<usize>> = Vec::with_capacity(n.pow(k as u32).min(max_rows));
    let mut stack = vec![Vec::new()];
    // Depth-first in lexicographic order equals tuple-index order.
    while let Some(t) = stack.pop() {
        if t.len() == k {
            tuples.push(t);
            continue;
        }
        for x in (0..n).rev() {
            if !t.contains(&x) {
                let mut next = t.clone();
                next.push(x);
                stack.push(next);
            }
        }
    }
    let index: HashMap<&[usize], usize> = tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    let mut edges = Vec::new();
    for (i, t) in tuples.iter().enumerate() {
        for j in 0..k {
            for &(w, s) in g.neighbors(t[j]) {
                if t.contains(&w) {
                    continue;
                }
                let mut other = t.clone();
                other[j] = w;
                let oi = index[other.as_slice()];
                if i < oi {
                    edges.push((i, oi, s));
                }
            }
        }
    }
    let graph = SignedGraph::from_edges(tuples.len(), edges)?;
    Ok(DeletedPower {
        n,
        k,
        tuples,
        graph,
    })
}

/// Check mechanically that (u, π) ↦ (u[π(0)], …, u[π(k-1)]) is an
/// isomorphism from the |S_k|-cover of the wedge gain graph onto the
/// diagonal-deleted k-fold Cartesian power. Returns whether every part
/// of the check (bijectivity and edge preservation in both directions)
/// succeeds.
pub fn verify_cover_isomorphism(g: &SignedGraph, k: usize) -> Result<bool> {
    verify_cover_isomorphism_bounded(g, k, DEFAULT_MAX_ROWS)
}

pub fn verify_cover_isomorphism_bounded(
    g: &SignedGraph,
    k: usize,
    max_rows: usize,
) -> Result<bool> {
    let phi = gain_graph(g, k)?;
    let cover = build_cover(&phi)?;
    let ddp = diagonal_deleted_power_bounded(g, k, max_rows)?;
    let tuple_id: HashMap<&[usize], usize> = ddp
        .tuples()
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    // Vertex map and its injectivity.
    let images: Vec<usize> = cover
        .vertices()
        .iter()
        .map(|(subset, perm)| {
            let tuple = perm.permute(subset.elems());
            tuple_id.get(tuple.as_slice()).copied()
        })
        .collect::<Option<Vec<usize>>>()
        .unwrap_or_default();
    if images.len() != cover.graph().n() || ddp.graph().n() != cover.graph().n() {
        return Ok(false);
    }
    let distinct: BTreeSet<usize> = images.iter().copied().collect();
    if distinct.len() != images.len() {
        return Ok(false);
    }
    // Every cover edge maps onto a deleted-power edge; equal counts then
    // force the converse.
    if cover.graph().num_edges() != ddp.graph().num_edges() {
        return Ok(false);
    }
    let preserved = cover
        .graph()
        .edges()
        .all(|(a, b, _)| ddp.graph().has_edge(images[a], images[b]));
    Ok(preserved)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Sign;

    fn path(n: usize) -> SignedGraph {
        SignedGraph::all_positive(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: usize) -> SignedGraph {
        SignedGraph::all_positive(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> SignedGraph {
        SignedGraph::all_positive(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .unwrap()
    }

    #[test]
    fn first_power_gains_are_trivial() {
        let phi = gain_graph(&cycle(5), 1).unwrap();
        assert_eq!(phi.base(), &cycle(5).underlying());
        for (_, _, p) in phi.gains() {
            assert_eq!(p, &Permutation::identity(1));
        }
    }

    #[test]
    fn path_gains_are_all_identity() {
        for n in 2..=6usize {
            for k in 1..n {
                let phi = gain_graph(&path(n), k).unwrap();
                assert!(phi.gains().all(|(_, _, p)| p.is_identity()), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn cycle_gains_are_k_cycles_exactly_on_wrap_edges() {
        for n in 3..=6usize {
            for k in 2..n {
                let phi = gain_graph(&cycle(n), k).unwrap();
                let mut wraps = 0;
                for (u, v, p) in phi.gains() {
                    let su = &phi.subsets()[u];
                    let sv = &phi.subsets()[v];
                    let wrap = su.contains(0) && sv.contains(n - 1) && !su.contains(n - 1)
                        || sv.contains(0) && su.contains(n - 1) && !sv.contains(n - 1);
                    // More precisely: the base edge is {0, n-1}.
                    let diff: Vec<usize> = (0..n)
                        .filter(|&x| su.contains(x) != sv.contains(x))
                        .collect();
                    if diff == [0, n - 1] {
                        assert_eq!(p, &Permutation::k_cycle(k), "wrap edge n={n} k={k}");
                        wraps += 1;
                        assert!(wrap);
                    } else {
                        assert!(p.is_identity(), "inner edge n={n} k={k}");
                    }
                }
                assert!(wraps > 0);
            }
        }
    }

    #[test]
    fn gain_reversal_inverts() {
        let phi = gain_graph(&cycle(4), 2).unwrap();
        for (u, v, p) in phi.gains() {
            assert_eq!(phi.gain(v, u).unwrap(), p.inverse());
            assert_eq!(phi.gain(u, v).unwrap(), p.clone());
        }
        assert_eq!(phi.gain(0, 5), None);
    }

    #[test]
    fn identity_gains_cover_is_disjoint_copies() {
        // All gains of a path power are identities, so the cover is k!
        // disjoint copies of the base.
        let phi = gain_graph(&path(3), 2).unwrap();
        let cover = build_cover(&phi).unwrap();
        assert_eq!(cover.graph().n(), 6);
        assert_eq!(cover.graph().num_edges(), 4);
        let comps = cover.graph().components();
        assert_eq!(comps.len(), 2);
        for comp in comps {
            assert_eq!(comp.len(), 3);
        }
    }

    #[test]
    fn cover_of_triangle_square_is_a_hexagon() {
        let phi = gain_graph(&cycle(3), 2).unwrap();
        let cover = build_cover(&phi).unwrap();
        assert_eq!(cover.graph().n(), 6);
        assert!(cover.graph().is_cycle_graph());
        assert_eq!(cover.vertex_id(2, 1), 5);
    }

    #[test]
    fn cover_fibers_project_onto_base_edges() {
        let g = complete(4);
        for k in 1..=3usize {
            let phi = gain_graph(&g, k).unwrap();
            let cover = build_cover(&phi).unwrap();
            let kfact = factorial(k);
            assert_eq!(cover.graph().n(), phi.base().n() * kfact);
            assert_eq!(cover.graph().num_edges(), phi.base().num_edges() * kfact);
            // Every cover edge projects to a base edge, and each base edge
            // receives exactly k! cover edges.
            let mut fiber: BTreeMap<(usize, usize), usize> = BTreeMap::new();
            for (a, b, _) in cover.graph().edges() {
                let (ra, rb) = (a / kfact, b / kfact);
                assert!(phi.base().has_edge(ra, rb), "k={k} edge ({a},{b})");
                let key = (ra.min(rb), ra.max(rb));
                *fiber.entry(key).or_insert(0) += 1;
            }
            assert!(fiber.values().all(|&c| c == kfact));
        }
    }

    #[test]
    fn square_cover_is_the_signed_double_cover() {
        // For k=2 the cover construction specializes to the classical
        // double cover of the signed exterior square: positive edges stay
        // within a sheet, negative edges cross.
        for g in [path(4), cycle(4), cycle(5), complete(4)] {
            let w = wedge_power(&g, 2).unwrap();
            let phi = gain_graph(&g, 2).unwrap();
            let cover = build_cover(&phi).unwrap();
            let mut expected = BTreeSet::new();
            for e in w.edges() {
                match e.sign {
                    Sign::Plus => {
                        expected.insert((2 * e.u_rank, 2 * e.v_rank));
                        expected.insert((2 * e.u_rank + 1, 2 * e.v_rank + 1));
                    }
                    Sign::Minus => {
                        expected.insert((2 * e.u_rank, 2 * e.v_rank + 1));
                        expected.insert((2 * e.u_rank + 1, 2 * e.v_rank));
                    }
                }
            }
            let expected: BTreeSet<(usize, usize)> = expected
                .into_iter()
                .map(|(a, b): (usize, usize)| (a.min(b), a.max(b)))
                .collect();
            let got: BTreeSet<(usize, usize)> =
                cover.graph().edges().map(|(a, b, _)| (a, b)).collect();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn deleted_power_examples() {
        // k=1 keeps the graph as-is, signs included.
        let c5 = SignedGraph::from_edges(
            5,
            (0..5).map(|i| {
                (i, (i + 1) % 5, if i == 0 { Sign::Minus } else { Sign::Plus })
            }),
        )
        .unwrap();
        let d1 = diagonal_deleted_power(&c5, 1).unwrap();
        assert_eq!(d1.graph(), &c5);

        let d = diagonal_deleted_power(&path(3), 2).unwrap();
        assert_eq!(d.graph().n(), 6);
        // Tuples in index order.
        assert_eq!(
            d.tuples(),
            &[
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![1, 2],
                vec![2, 0],
                vec![2, 1]
            ]
        );
        let dk4 = diagonal_deleted_power(&complete(4), 2).unwrap();
        assert_eq!(dk4.graph().n(), 12);
        assert!(matches!(
            diagonal_deleted_power(&path(3), 4),
            Err(Error::KOutOfRange { .. })
        ));
        assert!(matches!(
            diagonal_deleted_power_bounded(&complete(5), 3, 100),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn deleted_power_inherits_signs() {
        let g = SignedGraph::from_edges(
            3,
            [(0, 1, Sign::Minus), (1, 2, Sign::Plus), (0, 2, Sign::Plus)],
        )
        .unwrap();
        let d = diagonal_deleted_power(&g, 2).unwrap();
        // Edge between (0,2) and (1,2) differs in the first coordinate by
        // the negative base edge (0,1).
        let i02 = d.tuples().iter().position(|t| t == &[0, 2]).unwrap();
        let i12 = d.tuples().iter().position(|t| t == &[1, 2]).unwrap();
        assert_eq!(d.graph().sign(i02, i12), Some(Sign::Minus));
    }

    #[test]
    fn cover_isomorphism_on_fixed_examples() {
        assert!(verify_cover_isomorphism(&path(4), 2).unwrap());
        assert!(verify_cover_isomorphism(&cycle(5), 2).unwrap());
        // 24 vertices on both sides.
        assert!(verify_cover_isomorphism(&complete(4), 3).unwrap());
        let cover = build_cover(&gain_graph(&complete(4), 3).unwrap()).unwrap();
        assert_eq!(cover.graph().n(), 24);
        assert_eq!(
            diagonal_deleted_power(&complete(4), 3).unwrap().graph().n(),
            24
        );
    }

    #[test]
    fn deleted_power_edge_count_is_k_factorial_times_wedge() {
        for g in [path(4), cycle(5), complete(4)] {
            for k in 1..g.n().min(4) {
                let w = wedge_power(&g, k).unwrap();
                let d = diagonal_deleted_power(&g, k).unwrap();
                assert_eq!(d.graph().num_edges(), w.edges().len() * factorial(k));
            }
        }
    }
}
