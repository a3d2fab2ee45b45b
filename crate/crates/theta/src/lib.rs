//! Exact-integer models of simple omega-categories as chain complexes.
//!
//! The crate implements the chain-complex description of the category of
//! simple (strict) omega-categories and its surroundings:
//!
//! * [`rep`] — the equivalent object representations (dimension sequences,
//!   up-and-down vectors, level trees, graded ordered sets) and the explicit
//!   bijections among them;
//! * [`adc`] — augmented directed complexes with prescribed bases, chain
//!   morphisms, and the unital / loop-free / strongly loop-free predicates;
//! * [`simple`] — simple augmented directed complexes, separated sequences,
//!   bridging, morphism validation, and exhaustive hom-set enumeration;
//! * [`oracle`] — independent brute-force matrix searches used to cross-check
//!   the combinatorial enumerators;
//! * [`cells`] — the omega-category of cells carried by a complex: identities,
//!   composition, atoms, and desk-scale cell enumeration;
//! * [`disc`] — the dual description by coaugmented cochain complexes;
//! * [`wreath`] — wreath products over the simplex category and the joined
//!   suspension functor, with full-faithfulness checks;
//! * [`catalog`], [`text`], [`suite`] — the built-in object catalog, the
//!   line-oriented text formats, and the property-check runner behind the
//!   `suite` subcommand.
//!
//! All arithmetic is exact (arbitrary-precision integers); all values are
//! immutable after construction and safe to share across threads.

pub mod adc;
pub mod catalog;
pub mod cells;
pub mod disc;
pub mod oracle;
pub mod rep;
pub mod simple;
pub mod suite;
pub mod text;
pub mod wreath;

pub use adc::{AugmentedDirectedComplex, Chain, ChainMorphism, Coeff, PositiveChain};
pub use cells::Cell;
pub use rep::{DimensionSequence, GradedOrderedSet, LevelTree, UpDownVector};
pub use simple::{Convention, SimpleAdc};
pub use wreath::{WreathMorphism, WreathObject};
