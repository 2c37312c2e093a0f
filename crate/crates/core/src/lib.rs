//! Combinatorial invariants of matroids at desk scale: expected
//! codimension via Möbius-weighted set families, positroid structure
//! through cyclic rank matrices and bounded affine permutations, the
//! valuative polynomial `s_M` with its Tutte specialization, and a
//! shift-and-split engine that expands Richardson positions into Schubert
//! classes, cross-checked by an independent tableau oracle.

pub mod codim;
pub mod family;
pub mod fixtures;
pub mod interval;
pub mod matroid;
pub mod partition;
pub mod poly;
pub mod positroid;
pub mod sample;
pub mod schur;
pub mod subset;

pub use codim::{ec, ec_from_s, ec_report, flacets, s_polynomial, tutte_polynomial, CodimError, EcReport};
pub use family::{mobius, FamilyError, MobiusTable, SetFamily};
pub use interval::{
    apply_shift, codimension, essential_intervals, essential_set, irm_from_conditions, lr_expand,
    richardson, schubert_partition, select_shift, split_components, EssentialSet,
    IntervalCondition, IntervalRankMatrix, IrmError, ShiftTrace, TraceNode, TraceStep,
};
pub use matroid::{Matroid, MatroidError, NotAMatroidReason, RankCondition};
pub use partition::{Partition, SchubertExpansion};
pub use poly::{BivariatePoly, TrivariatePoly};
pub use positroid::{
    affine_permutation, is_positroid, permutation_to_matroid, positroid_ec,
    BoundedAffinePermutation, CyclicInterval, CyclicRankMatrix, PositroidError,
};
pub use schur::{lr_coefficient, schur_product_by_monomials, schur_product_in_box};
pub use subset::Subset;
