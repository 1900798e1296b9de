//! The algebraic route to exterior powers: exact integer matrices.
//!
//! The k-fold Cartesian power of a signed graph acts on n^k tuples; the
//! anti-symmetrizer maps the C(n, k) subset space into that tuple space.
//! Conjugating the Cartesian power by the anti-symmetrizer recovers the
//! adjacency matrix of the exterior power built combinatorially in
//! [`crate::exterior`]. [`verify_exterior_identities`] checks the three
//! identities making that precise, in exact `i64` arithmetic with
//! overflow detection.
//!
//! The anti-symmetrizer's true normalization is 1/√k!; to stay rational
//! everything here works with the unnormalized ±1 matrix and carries the
//! squared factor k! explicitly (see [`ScaledMatrix`]).

use std::collections::HashMap;

use crate::combinat::{binomial, factorial, KSubset, Permutation};
use crate::exterior::{wedge_power, WedgePower};
use crate::{Error, Result, SignedGraph};

/// Default cap on tuple-space dimensions (n^k) accepted by the builders.
pub const DEFAULT_MAX_ROWS: usize = 1_000_000;

/// A sparse integer matrix with exact `i64` entries. Rows store sorted
/// (column, value) pairs with no explicit zeros. All arithmetic is
/// checked; overflow surfaces as [`Error::Overflow`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(m: usize) -> Self {
        Self::scaled_identity(m, 1)
    }

    /// c times the identity.
    pub fn scaled_identity(m: usize, c: i64) -> Self {
        let data = (0..m)
            .map(|i| if c == 0 { Vec::new() } else { vec![(i, c)] })
            .collect();
        IntMatrix {
            rows: m,
            cols: m,
            data,
        }
    }

    /// Build from dense rows, which must all have the same length.
    pub fn from_dense(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    got: row.len(),
                    want: cols,
                });
            }
            data.push(
                row.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(j, &v)| (j, v))
                    .collect(),
            );
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Build from (row, col, value) triplets; repeated positions
    /// accumulate.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self> {
        let mut per_row: Vec<HashMap<usize, i64>> = vec![HashMap::new(); rows];
        for (i, j, v) in triplets {
            if i >= rows || j >= cols {
                return Err(Error::DimensionMismatch(i, j, rows, cols));
            }
            let slot = per_row[i].entry(j).or_insert(0);
            *slot = slot.checked_add(v).ok_or(Error::Overflow)?;
        }
        let data = per_row
            .into_iter()
            .map(|m| {
                let mut row: Vec<(usize, i64)> =
                    m.into_iter().filter(|&(_, v)| v != 0).collect();
                row.sort_unstable_by_key(|&(j, _)| j);
                row
            })
            .collect();
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of stored (nonzero) entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i]
            .binary_search_by_key(&j, |&(c, _)| c)
            .map(|pos| self.data[i][pos].1)
            .unwrap_or(0)
    }

    pub fn row(&self, i: usize) -> &[(usize, i64)] {
        &self.data[i]
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<Vec<(usize, i64)>> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for &(j, v) in row {
                data[j].push((i, v));
            }
        }
        // Row-major iteration above yields sorted columns already.
        IntMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        let mut data = Vec::with_capacity(self.rows);
        for (ra, rb) in self.data.iter().zip(&other.data) {
            let mut merged: Vec<(usize, i64)> = Vec::with_capacity(ra.len() + rb.len());
            let (mut ia, mut ib) = (0, 0);
            while ia < ra.len() || ib < rb.len() {
                let next = match (ra.get(ia), rb.get(ib)) {
                    (Some(&(ja, va)), Some(&(jb, _))) if ja < jb => {
                        ia += 1;
                        (ja, va)
                    }
                    (Some(&(ja, _)), Some(&(jb, vb))) if jb < ja => {
                        ib += 1;
                        (jb, vb)
                    }
                    (Some(&(ja, va)), Some(&(_, vb))) => {
                        ia += 1;
                        ib += 1;
                        (ja, va.checked_add(vb).ok_or(Error::Overflow)?)
                    }
                    (Some(&(ja, va)), None) => {
                        ia += 1;
                        (ja, va)
                    }
                    (None, Some(&(jb, vb))) => {
                        ib += 1;
                        (jb, vb)
                    }
                    (None, None) => unreachable!(),
                };
                if next.1 != 0 {
                    merged.push(next);
                }
            }
            data.push(merged);
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: i64) -> Result<Self> {
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut out = Vec::with_capacity(row.len());
            for &(j, v) in row {
                let scaled = v.checked_mul(c).ok_or(Error::Overflow)?;
                if scaled != 0 {
                    out.push((j, scaled));
                }
            }
            data.push(out);
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Exact sparse product.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        let mut scratch: Vec<i64> = vec![0; other.cols];
        let mut touched: Vec<usize> = Vec::new();
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            for &(j, a) in row {
                for &(l, b) in &other.data[j] {
                    let prod = a.checked_mul(b).ok_or(Error::Overflow)?;
                    scratch[l] = scratch[l].checked_add(prod).ok_or(Error::Overflow)?;
                    touched.push(l);
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let out: Vec<(usize, i64)> = touched
                .iter()
                .filter(|&&l| scratch[l] != 0)
                .map(|&l| (l, scratch[l]))
                .collect();
            for &l in &touched {
                scratch[l] = 0;
            }
            touched.clear();
            data.push(out);
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        self.data
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().all(|&(j, v)| self.get(j, i) == v))
    }

    pub fn row_sum(&self, i: usize) -> Result<i64> {
        self.data[i]
            .iter()
            .try_fold(0i64, |acc, &(_, v)| acc.checked_add(v).ok_or(Error::Overflow))
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols]; self.rows];
        for (i, row) in self.data.iter().enumerate() {
            for &(j, v) in row {
                out[i][j] = v;
            }
        }
        out
    }
}

/// A rational matrix kept exact as an integer matrix over a positive
/// integer denominator.
#[derive(Debug, Clone)]
pub struct ScaledMatrix {
    pub mat: IntMatrix,
    pub denom: i64,
}

impl ScaledMatrix {
    pub fn new(mat: IntMatrix, denom: i64) -> Result<Self> {
        if denom <= 0 {
            return Err(Error::UnsupportedPartition(format!(
                "denominator {denom} must be positive"
            )));
        }
        Ok(ScaledMatrix { mat, denom })
    }

    /// Exact equality as rational matrices, by cross-multiplication.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.mat.scale(other.denom)? == other.mat.scale(self.denom)?)
    }

    /// Divide through, which must leave every entry an integer.
    pub fn to_int_matrix(&self) -> Result<IntMatrix> {
        let mut data = Vec::with_capacity(self.mat.rows());
        for i in 0..self.mat.rows() {
            let mut row = Vec::with_capacity(self.mat.row(i).len());
            for &(j, v) in self.mat.row(i) {
                if v % self.denom != 0 {
                    return Err(Error::UnsupportedPartition(format!(
                        "entry {v} not divisible by denominator {}",
                        self.denom
                    )));
                }
                row.push((j, v / self.denom));
            }
            data.push(row);
        }
        Ok(IntMatrix {
            rows: self.mat.rows(),
            cols: self.mat.cols(),
            data,
        })
    }
}

/// Signed adjacency matrix: entry (u, v) is the edge sign, 0 when
/// non-adjacent.
pub fn adjacency_matrix(g: &SignedGraph) -> IntMatrix {
    let mut data: Vec<Vec<(usize, i64)>> = vec![Vec::new(); g.n()];
    for u in 0..g.n() {
        // Neighbor lists are already sorted.
        data[u] = g
            .neighbors(u)
            .iter()
            .map(|&(v, s)| (v, s.as_i64()))
            .collect();
    }
    IntMatrix {
        rows: g.n(),
        cols: g.n(),
        data,
    }
}

/// Index of a tuple in the n-ary mixed-radix order, leftmost coordinate
/// most significant.
pub fn tuple_index(t: &[usize], n: usize) -> usize {
    t.iter().fold(0, |acc, &x| {
        debug_assert!(x < n);
        acc * n + x
    })
}

/// Inverse of [`tuple_index`].
pub fn index_to_tuple(mut idx: usize, n: usize, k: usize) -> Vec<usize> {
    let mut t = vec![0; k];
    for j in (0..k).rev() {
        t[j] = idx % n;
        idx /= n;
    }
    t
}

fn checked_tuple_space(n: usize, k: usize, max_rows: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::KOutOfRange { k, max: n });
    }
    let rows = n
        .checked_pow(k as u32)
        .ok_or(Error::SizeLimit { rows: usize::MAX, max: max_rows })?;
    if rows > max_rows {
        return Err(Error::SizeLimit { rows, max: max_rows });
    }
    Ok(rows)
}

/// Adjacency matrix of the k-fold Cartesian power: the sum over
/// coordinates of I ⊗ … ⊗ A ⊗ … ⊗ I acting on n^k tuples.
pub fn cartesian_power(g: &SignedGraph, k: usize) -> Result<IntMatrix> {
    cartesian_power_bounded(g, k, DEFAULT_MAX_ROWS)
}

pub fn cartesian_power_bounded(g: &SignedGraph, k: usize, max_rows: usize) -> Result<IntMatrix> {
    let n = g.n();
    let rows = checked_tuple_space(n, k, max_rows)?;
    let mut data = Vec::with_capacity(rows);
    let mut t = vec![0usize; k];
    for idx in 0..rows {
        // Tuples adjacent to t differ in exactly one coordinate by an
        // edge of g, so the targets are pairwise distinct.
        let mut row: Vec<(usize, i64)> = Vec::new();
        for j in 0..k {
            // idx = prefix * n^(k-j) + t[j] * n^(k-1-j) + suffix.
            let place = n.pow((k - 1 - j) as u32);
            for &(w, s) in g.neighbors(t[j]) {
                let target = idx + place * w - place * t[j];
                row.push((target, s.as_i64()));
            }
        }
        row.sort_unstable_by_key(|&(j, _)| j);
        data.push(row);
        // Advance the tuple odometer.
        for j in (0..k).rev() {
            t[j] += 1;
            if t[j] < n {
                break;
            }
            t[j] = 0;
        }
    }
    Ok(IntMatrix {
        rows,
        cols: rows,
        data,
    })
}

/// The unnormalized anti-symmetrizer from the C(n, k) subset space into
/// the n^k tuple space: column u has entry sgn(τ) at the row indexed by
/// the tuple τ applied to u's sorted elements, for every τ.
///
/// The returned denominator is k!, the *square* of the true
/// normalization: the operator with orthonormal columns is mat/√k!, and
/// all identity checks are phrased against the square to stay in integer
/// arithmetic.
pub fn alternator(n: usize, k: usize) -> Result<ScaledMatrix> {
    alternator_bounded(n, k, DEFAULT_MAX_ROWS)
}

pub fn alternator_bounded(n: usize, k: usize, max_rows: usize) -> Result<ScaledMatrix> {
    if k > n {
        return Err(Error::KOutOfRange { k, max: n });
    }
    let rows = checked_tuple_space(n, k, max_rows)?;
    let cols = binomial(n, k);
    let perms = Permutation::all(k);
    let mut triplets = Vec::with_capacity(cols * perms.len());
    for (rank, subset) in KSubset::all(n, k)?.iter().enumerate() {
        for tau in &perms {
            let tuple = tau.permute(subset.elems());
            triplets.push((tuple_index(&tuple, n), rank, tau.sign().as_i64()));
        }
    }
    let mat = IntMatrix::from_triplets(rows, cols, triplets)?;
    ScaledMatrix::new(mat, factorial(k) as i64)
}

/// Orbits of the symmetric group acting on repeated-free k-tuples by
/// coordinate permutation, as tuple-index cells in subset-rank order.
/// Every cell has size k!.
pub fn sk_orbit_partition(n: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, max: n });
    }
    let perms = Permutation::all(k);
    KSubset::all(n, k)?
        .iter()
        .map(|subset| {
            let mut cell: Vec<usize> = perms
                .iter()
                .map(|tau| tuple_index(&tau.permute(subset.elems()), n))
                .collect();
            cell.sort_unstable();
            Ok(cell)
        })
        .collect()
}

/// Sum matrix entries over the blocks of a partition into equal-size
/// disjoint cells, returning block sums over the cell size. Rows and
/// columns outside every cell are dropped.
pub fn quotient_by_uniform_partition(a: &IntMatrix, cells: &[Vec<usize>]) -> Result<ScaledMatrix> {
    if a.rows() != a.cols() {
        return Err(Error::DimensionMismatch(a.rows(), a.cols(), a.rows(), a.rows()));
    }
    if cells.is_empty() || cells[0].is_empty() {
        return Err(Error::UnsupportedPartition("no cells".into()));
    }
    let m = cells[0].len();
    let mut cell_of: HashMap<usize, usize> = HashMap::new();
    for (ci, cell) in cells.iter().enumerate() {
        if cell.len() != m {
            return Err(Error::UnsupportedPartition(format!(
                "cell {ci} has size {} but expected {m}",
                cell.len()
            )));
        }
        for &row in cell {
            if row >= a.rows() {
                return Err(Error::UnsupportedPartition(format!(
                    "cell element {row} out of range"
                )));
            }
            if cell_of.insert(row, ci).is_some() {
                return Err(Error::UnsupportedPartition(format!(
                    "element {row} appears in two cells"
                )));
            }
        }
    }
    let mut triplets = Vec::new();
    for (&row, &ci) in &cell_of {
        for &(col, v) in a.row(row) {
            if let Some(&cj) = cell_of.get(&col) {
                triplets.push((ci, cj, v));
            }
        }
    }
    let sums = IntMatrix::from_triplets(cells.len(), cells.len(), triplets)?;
    ScaledMatrix::new(sums, m as i64)
}

/// Which of the three exterior identities hold for a given graph and k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExteriorIdentityReport {
    /// NᵀN = k!·I — the anti-symmetrizer has orthogonal columns of
    /// squared norm k!.
    pub orthogonality: bool,
    /// NNᵀ commutes with the Cartesian-power adjacency matrix.
    pub commutation: bool,
    /// NᵀA(G^□k)N = k!·A(∧^k G) — conjugation recovers the combinatorial
    /// exterior power exactly.
    pub quotient_equal: bool,
}

impl ExteriorIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.orthogonality && self.commutation && self.quotient_equal
    }
}

/// Check all three exterior identities for `g` and `k` in exact integer
/// arithmetic. The wedge side comes from [`crate::exterior::wedge_power`];
/// nothing is shared with the tuple-space side except the subset order.
pub fn verify_exterior_identities(g: &SignedGraph, k: usize) -> Result<ExteriorIdentityReport> {
    verify_exterior_identities_bounded(g, k, DEFAULT_MAX_ROWS)
}

pub fn verify_exterior_identities_bounded(
    g: &SignedGraph,
    k: usize,
    max_rows: usize,
) -> Result<ExteriorIdentityReport> {
    let n = g.n();
    if k == 0 || n == 0 || k > n - 1 {
        return Err(Error::KOutOfRange {
            k,
            max: n.saturating_sub(1),
        });
    }
    let alt = alternator_bounded(n, k, max_rows)?;
    let kfact = alt.denom;
    let m = &alt.mat;
    let mt = m.transpose();
    let a_box = cartesian_power_bounded(g, k, max_rows)?;

    let orthogonality = mt.matmul(m)? == IntMatrix::scaled_identity(binomial(n, k), kfact);

    let projector = m.matmul(&mt)?;
    let commutation = projector.matmul(&a_box)? == a_box.matmul(&projector)?;

    let wedge: WedgePower = wedge_power(g, k)?;
    let conjugated = mt.matmul(&a_box)?.matmul(m)?;
    let quotient_equal = conjugated == adjacency_matrix(wedge.graph()).scale(kfact)?;

    Ok(ExteriorIdentityReport {
        orthogonality,
        commutation,
        quotient_equal,
    })
}
