//! Bounded-word combinatorics: cliff posets, their Fuss-Catalan subfamilies,
//! and the graded algebras they carry.
//!
//! The crate is organized bottom-up:
//!
//! * [`range_map`]: finitely presented bound maps and their shape predicates;
//! * [`words`]: words under the bound condition, componentwise order;
//! * [`subset`]: graded subsets, monotone projections, elevation maps;
//! * [`poset`]: finite posets, covers, lattices, doubling, isomorphism;
//! * [`shelling`]: edge labelings and the increasing-chain certificates;
//! * [`doubling`]: derivations, nestedness, contraction sequences;
//! * [`families`]: avalanche, hill and canyon families with their counting
//!   and the wing bijections;
//! * [`perm`]: permutations, inversion codes, the weak order bridge;
//! * [`algebra`]: graded products over the families, prime decompositions,
//!   presentations and generator counting.

pub mod algebra;
pub mod doubling;
pub mod error;
pub mod families;
pub mod perm;
pub mod poset;
pub mod range_map;
pub mod shelling;
pub mod subset;
pub mod words;

pub use error::{CliffError, Result};
pub use range_map::{Classification, RangeMap, Tail};
pub use words::Word;
