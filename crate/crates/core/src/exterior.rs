//! The exterior k-th power of a signed graph, built combinatorially.
//!
//! Vertices of the power are the k-element vertex subsets of the base
//! graph in lexicographic order. Two subsets u, v are adjacent exactly
//! when their symmetric difference is a single base edge {a, b}; the
//! shared k-1 elements then align under a unique *connecting permutation*
//! π, and the edge sign is sgn(π)·σ(a, b).
//!
//! Every produced edge keeps its provenance (π and the base edge), which
//! the cover construction in [`crate::covers`] reuses as gains.

use itertools::Itertools;

use crate::combinat::{binomial, KSubset, Permutation};
use crate::{Error, Result, Sign, SignedGraph, SwitchingVector};

/// How the permutation factor enters an edge sign.
///
/// `Standard` is the definition. `NegatedPermutationSign` deliberately
/// flips that factor; it exists so verification suites can demonstrate
/// they would catch a faulty sign rule, and has no other use.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum WedgeSignRule {
    #[default]
    Standard,
    NegatedPermutationSign,
}

/// The unique permutation aligning two k-subsets that differ in exactly
/// one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    /// π with u[π(j)] = v[j] for every position j except the one holding
    /// the differing element.
    pub perm: Permutation,
    /// (a, b) with u \ v = {a} and v \ u = {b}.
    pub base: (usize, usize),
    /// sgn(π), computed in closed form as (-1)^(p+q) where p and q are
    /// the zero-based positions of a within u and b within v.
    pub perm_sign: Sign,
}

/// Compute the connecting permutation of u and v, or `None` when the
/// subsets do not differ in exactly one element.
pub fn connecting_permutation(u: &KSubset, v: &KSubset) -> Result<Option<Connection>> {
    if u.k() != v.k() {
        return Err(Error::PermSizeMismatch { a: u.k(), b: v.k() });
    }
    let k = u.k();
    let only_u: Vec<usize> = u.elems().iter().copied().filter(|&x| !v.contains(x)).collect();
    if only_u.len() != 1 {
        return Ok(None);
    }
    let only_v: Vec<usize> = v.elems().iter().copied().filter(|&x| !u.contains(x)).collect();
    debug_assert_eq!(only_v.len(), 1);
    let (a, b) = (only_u[0], only_v[0]);
    let p = u.position(a).unwrap();
    let q = v.position(b).unwrap();
    let images: Vec<usize> = (0..k)
        .map(|j| {
            if j == q {
                p
            } else {
                u.position(v.elems()[j]).unwrap()
            }
        })
        .collect();
    let perm = Permutation::new(images).expect("aligned positions form a bijection");
    let perm_sign = Sign::from_parity(p + q);
    debug_assert_eq!(perm.sign(), perm_sign);
    Ok(Some(Connection {
        perm,
        base: (a, b),
        perm_sign,
    }))
}

/// One edge of an exterior power, with provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeEdge {
    /// Rank of the lexicographically smaller endpoint subset.
    pub u_rank: usize,
    pub v_rank: usize,
    pub u: KSubset,
    pub v: KSubset,
    /// The base edge {a, b} = u △ v, oriented (a, b) with a ∈ u, b ∈ v.
    pub base: (usize, usize),
    /// The connecting permutation from u to v.
    pub perm: Permutation,
    /// sgn(perm) · σ(base), under the rule the power was built with.
    pub sign: Sign,
}

/// The exterior k-th power of a signed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgePower {
    n: usize,
    k: usize,
    rule: WedgeSignRule,
    subsets: Vec<KSubset>,
    edges: Vec<WedgeEdge>,
    graph: SignedGraph,
}

impl WedgePower {
    /// Number of vertices of the base graph.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rule(&self) -> WedgeSignRule {
        self.rule
    }

    /// Vertex subsets in lexicographic order; index equals rank.
    pub fn subsets(&self) -> &[KSubset] {
        &self.subsets
    }

    pub fn subset(&self, rank: usize) -> &KSubset {
        &self.subsets[rank]
    }

    /// Edges with provenance, sorted by (u_rank, v_rank).
    pub fn edges(&self) -> &[WedgeEdge] {
        &self.edges
    }

    /// The power as a plain signed graph on C(n, k) vertices.
    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    pub fn into_graph(self) -> SignedGraph {
        self.graph
    }
}

/// Build the exterior k-th power of `g` with the standard sign rule.
pub fn wedge_power(g: &SignedGraph, k: usize) -> Result<WedgePower> {
    wedge_power_with_rule(g, k, WedgeSignRule::Standard)
}

/// Build the exterior k-th power under an explicit sign rule.
pub fn wedge_power_with_rule(g: &SignedGraph, k: usize, rule: WedgeSignRule) -> Result<WedgePower> {
    let n = g.n();
    if k == 0 || n == 0 || k > n - 1 {
        return Err(Error::KOutOfRange {
            k,
            max: n.saturating_sub(1),
        });
    }
    let subsets = KSubset::all(n, k)?;
    let mut edges = Vec::with_capacity(g.num_edges() * binomial(n - 2, k - 1));
    for (a, b, s) in g.edges() {
        // Every wedge edge over base edge (a, b) is S∪{a} ~ S∪{b} for a
        // (k-1)-subset S of the remaining vertices.
        let rest: Vec<usize> = (0..n).filter(|&x| x != a && x != b).collect();
        for shared in rest.into_iter().combinations(k - 1) {
            let mut ue = shared.clone();
            ue.push(a);
            ue.sort_unstable();
            let mut ve = shared;
            ve.push(b);
            ve.sort_unstable();
            let (mut u, mut v) = (KSubset::new(ue)?, KSubset::new(ve)?);
            let (mut u_rank, mut v_rank) = (u.rank(n)?, v.rank(n)?);
            if u_rank > v_rank {
                std::mem::swap(&mut u, &mut v);
                std::mem::swap(&mut u_rank, &mut v_rank);
            }
            let conn = connecting_permutation(&u, &v)?
                .expect("endpoints differ in exactly one element");
            let perm_factor = match rule {
                WedgeSignRule::Standard => conn.perm_sign,
                WedgeSignRule::NegatedPermutationSign => -conn.perm_sign,
            };
            edges.push(WedgeEdge {
                u_rank,
                v_rank,
                u,
                v,
                base: conn.base,
                perm: conn.perm,
                sign: perm_factor * s,
            });
        }
    }
    edges.sort_by_key(|e| (e.u_rank, e.v_rank));
    let graph = SignedGraph::from_edges(
        subsets.len(),
        edges.iter().map(|e| (e.u_rank, e.v_rank, e.sign)),
    )?;
    Ok(WedgePower {
        n,
        k,
        rule,
        subsets,
        edges,
        graph,
    })
}

/// Complement map on subsets: u over n vertices goes to V \ u. An
/// involution carrying the underlying exterior k-th power onto the
/// underlying (n-k)-th power.
pub fn mirror_map(u: &KSubset, n: usize) -> Result<KSubset> {
    u.complement(n)
}

/// Reindex a power built from a relabeled base graph back onto the
/// subset ranks of the original labeling: if `w` is the power of
/// `g.relabel(rho)`, the result lives on the same vertex set as the
/// power of `g`, with each subset T renamed to rho^{-1}(T).
///
/// Comparing the result against the power of `g` isolates the effect of
/// the labeling on signs: underlying graphs always agree, and the signed
/// graphs agree up to switching.
pub fn relabel_power_back(w: &WedgePower, rho: &[usize]) -> Result<SignedGraph> {
    let n = w.n();
    if rho.len() != n {
        return Err(Error::LengthMismatch {
            got: rho.len(),
            want: n,
        });
    }
    let mut inv = vec![usize::MAX; n];
    for (x, &im) in rho.iter().enumerate() {
        if im >= n || inv[im] != usize::MAX {
            return Err(Error::InvalidPermutation(format!(
                "relabeling image {im} out of range or repeated"
            )));
        }
        inv[im] = x;
    }
    let back = |s: &KSubset| -> Result<usize> {
        let mut elems: Vec<usize> = s.elems().iter().map(|&x| inv[x]).collect();
        elems.sort_unstable();
        KSubset::new(elems)?.rank(n)
    };
    let mut edges = Vec::with_capacity(w.edges().len());
    for e in w.edges() {
        edges.push((back(&e.u)?, back(&e.v)?, e.sign));
    }
    SignedGraph::from_edges(w.graph().n(), edges)
}

/// Lift a switching of the base graph to the exterior power: the lifted
/// value on a subset is the product of the base values over its elements.
/// Switching the base then wedging equals wedging then switching by the
/// lift, as an exact equality of signed edge sets.
pub fn induced_switching(d: &SwitchingVector, k: usize) -> Result<SwitchingVector> {
    let n = d.len();
    if k == 0 || n == 0 || k > n - 1 {
        return Err(Error::KOutOfRange {
            k,
            max: n.saturating_sub(1),
        });
    }
    let values = KSubset::all(n, k)?
        .iter()
        .map(|s| d.product_over(s.elems().iter().copied()))
        .collect();
    Ok(SwitchingVector::from_signs(values))
}
