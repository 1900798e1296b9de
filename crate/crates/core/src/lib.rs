//! Exact arithmetic for exterior powers of signed graphs.
//!
//! A signed graph assigns +1 or -1 to every edge of a simple graph. Its
//! exterior k-th power has the k-element vertex subsets as vertices; two
//! subsets are adjacent when they differ in exactly one element and that
//! swapped pair is an edge of the base graph. The sign of such an edge is
//! the sign of the permutation realigning the two subsets times the sign
//! of the base edge.
//!
//! The crate provides:
//!
//! * [`sgraph`] — signed graphs, switching, balance and anti-balance with
//!   certificates, switching equivalence.
//! * [`combinat`] — ranked k-subsets and permutations with signs.
//! * [`exterior`] — the wedge power itself, built combinatorially.
//! * [`algebra`] — the same operator built algebraically: integer adjacency
//!   matrices, Cartesian powers, the anti-symmetrizer, and the identities
//!   tying the two routes together.
//! * [`covers`] — the symmetric-group cover of the wedge gain graph and its
//!   isomorphism with the diagonal-deleted Cartesian power.
//! * [`families`] — generators for named families, signings, and exhaustive
//!   enumeration of small connected graphs.
//! * [`oracle`] — mechanically checked verification sweeps over those
//!   families, reporting counterexamples if any exist.
//! * [`io`] — a small text format for signed graphs plus JSON/DOT export.
//!
//! Everything is exact: signs are units, matrices have `i64` entries with
//! overflow detection, and rational scaling factors are carried as explicit
//! denominators. No floating point is involved anywhere.

pub mod algebra;
pub mod combinat;
pub mod covers;
mod error;
pub mod exterior;
pub mod families;
pub mod io;
pub mod oracle;
pub mod sgraph;
mod sign;

pub use error::{Error, Result};
pub use sgraph::{BalanceReport, SignedGraph, SwitchingVector};
pub use sign::Sign;
pub use combinat::{KSubset, Permutation};
pub use exterior::{WedgePower, WedgeSignRule};
