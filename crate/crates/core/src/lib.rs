//! Exact computations with finitely generated modules over artinian local
//! algebras `k[x…]/I`: duals and biduals, the natural map into the
//! bidual, Auslander transposes, minimal free resolutions, Ext lengths,
//! dual towers, and tri-state reflexivity verdicts.

pub mod algebra;
pub mod classify;
pub mod corpus;
pub mod error;
pub mod groebner;
pub mod hom;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod random;
pub mod resolution;
pub mod scalar;
pub mod verdict;
pub mod wire;

pub use algebra::{AlgebraInvariants, ArtinianAlgebra};
pub use error::{Error, Result};
pub use classify::{classify, classify_ring, ClassReport, RingReport};
pub use groebner::{buchberger, GroebnerBasis};
pub use hom::{
    aus_transpose, dual, dual_map, dual_tower, dual_triple, hom_module, natural_map, reflexivity_flags, DualTriple,
    HomSpace, ReflexivityFlags, Tower,
};
pub use module::{
    canonical, direct_sum, free, ideal, max_ideal, residue_field, Cover, ModuleMap, Presentation, RealizedModule,
};
pub use poly::{parse_poly, Monomial, MonomialOrder, Poly, PolyOp};
pub use resolution::{betti_bound_checks, ext_lengths, min_resolution, ExtLengths, FreeMap, Resolution};
pub use scalar::{Field, Scalar};
pub use verdict::{Status, Verdict, Witness};
pub use wire::{ModuleSpec, RingSpec};
