//! Ranked k-subsets and signed permutations.
//!
//! Subsets of {0, …, n-1} of fixed size k are kept sorted and identified
//! with their zero-based rank in lexicographic order; ranks index the
//! vertices of exterior powers. Permutations act on positions and carry
//! their sign.

use itertools::Itertools;

use crate::{Error, Result, Sign};

/// C(n, k), zero when k > n. Panics only on overflow past `usize`, which
/// cannot happen at the graph sizes this crate accepts.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc.try_into().expect("binomial coefficient overflows usize")
}

/// k!, with the same overflow policy as [`binomial`].
pub fn factorial(k: usize) -> usize {
    (1..=k).product::<usize>()
}

/// A k-element subset of {0, …, n-1}, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset {
    elems: Vec<usize>,
}

impl KSubset {
    /// Build from a strictly increasing, non-empty element list.
    pub fn new(elems: Vec<usize>) -> Result<Self> {
        if elems.is_empty() {
            return Err(Error::InvalidKSubset("empty subset".into()));
        }
        if !elems.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidKSubset(format!(
                "elements {elems:?} are not strictly increasing"
            )));
        }
        Ok(KSubset { elems })
    }

    pub fn k(&self) -> usize {
        self.elems.len()
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn contains(&self, v: usize) -> bool {
        self.elems.binary_search(&v).is_ok()
    }

    /// Position of `v` within the sorted element list.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.elems.binary_search(&v).ok()
    }

    /// Zero-based rank in lexicographic order among all k-subsets of
    /// {0, …, n-1}.
    pub fn rank(&self, n: usize) -> Result<usize> {
        let k = self.k();
        if *self.elems.last().unwrap() >= n {
            return Err(Error::VertexOutOfRange {
                v: *self.elems.last().unwrap(),
                n,
            });
        }
        let mut rank = 0;
        let mut lo = 0;
        for (i, &c) in self.elems.iter().enumerate() {
            for v in lo..c {
                rank += binomial(n - 1 - v, k - 1 - i);
            }
            lo = c + 1;
        }
        Ok(rank)
    }

    /// Inverse of [`KSubset::rank`].
    pub fn unrank(mut rank: usize, n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::KOutOfRange { k, max: n });
        }
        let count = binomial(n, k);
        if rank >= count {
            return Err(Error::RankOutOfRange { rank, count });
        }
        let mut elems = Vec::with_capacity(k);
        let mut v = 0;
        for i in 0..k {
            loop {
                debug_assert!(v < n, "unrank ran past the ground set");
                let c = binomial(n - 1 - v, k - 1 - i);
                if rank < c {
                    elems.push(v);
                    v += 1;
                    break;
                }
                rank -= c;
                v += 1;
            }
        }
        Ok(KSubset { elems })
    }

    /// All k-subsets of {0, …, n-1} in lexicographic (= rank) order.
    pub fn all(n: usize, k: usize) -> Result<Vec<Self>> {
        if k == 0 || k > n {
            return Err(Error::KOutOfRange { k, max: n });
        }
        Ok((0..n)
            .combinations(k)
            .map(|elems| KSubset { elems })
            .collect())
    }

    /// The complement within {0, …, n-1}. Errors when the complement would
    /// be empty.
    pub fn complement(&self, n: usize) -> Result<Self> {
        if *self.elems.last().unwrap() >= n {
            return Err(Error::VertexOutOfRange {
                v: *self.elems.last().unwrap(),
                n,
            });
        }
        let elems: Vec<usize> = (0..n).filter(|v| !self.contains(*v)).collect();
        if elems.is_empty() {
            return Err(Error::InvalidKSubset(
                "complement of the full set is empty".into(),
            ));
        }
        Ok(KSubset { elems })
    }

    /// The subset with `out` removed and `inn` inserted (re-sorted).
    pub fn replace(&self, out: usize, inn: usize) -> Result<Self> {
        if !self.contains(out) {
            return Err(Error::InvalidKSubset(format!("{out} is not an element")));
        }
        if inn != out && self.contains(inn) {
            return Err(Error::InvalidKSubset(format!("{inn} is already an element")));
        }
        let mut elems: Vec<usize> = self
            .elems
            .iter()
            .copied()
            .map(|v| if v == out { inn } else { v })
            .collect();
        elems.sort_unstable();
        Ok(KSubset { elems })
    }
}

impl std::fmt::Display for KSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{}}}", self.elems.iter().join(","))
    }
}

/// A permutation of {0, …, k-1}, stored as its image list: `p` maps
/// position `j` to `p.images()[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Build from an image list, which must be a bijection on 0..k.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        if k == 0 {
            return Err(Error::InvalidPermutation("empty image list".into()));
        }
        let mut seen = vec![false; k];
        for &im in &images {
            if im >= k {
                return Err(Error::InvalidPermutation(format!(
                    "image {im} out of range for size {k}"
                )));
            }
            if seen[im] {
                return Err(Error::InvalidPermutation(format!("image {im} repeated")));
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
        }
    }

    /// The cycle (0 1 … k-1): position j maps to j+1 mod k. Its sign is
    /// (-1)^(k-1).
    pub fn k_cycle(k: usize) -> Self {
        Permutation {
            images: (0..k).map(|j| (j + 1) % k).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, j: usize) -> usize {
        self.images[j]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &im)| j == im)
    }

    /// Sign by inversion parity.
    pub fn sign(&self) -> Sign {
        let k = self.images.len();
        let mut inversions = 0;
        for i in 0..k {
            for j in i + 1..k {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        Sign::from_parity(inversions)
    }

    /// Composition acting left-to-right on positions:
    /// `(self ∘ other)(j) = self(other(j))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::PermSizeMismatch {
                a: self.size(),
                b: other.size(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (j, &im) in self.images.iter().enumerate() {
            inv[im] = j;
        }
        Permutation { images: inv }
    }

    /// Rearrange a slice: entry `j` of the result is `items[self(j)]`.
    /// The slice length must equal the permutation size.
    pub fn permute<T: Copy>(&self, items: &[T]) -> Vec<T> {
        assert_eq!(items.len(), self.size(), "permute length mismatch");
        self.images.iter().map(|&j| items[j]).collect()
    }

    /// All permutations of size k in lexicographic order of image lists.
    /// The identity comes first.
    pub fn all(k: usize) -> Vec<Self> {
        (0..k)
            .permutations(k)
            .map(|images| Permutation { images })
            .collect()
    }
}
