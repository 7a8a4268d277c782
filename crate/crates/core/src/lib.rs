//! Exact computations with the level-one `sl_n` conformal blocks divisors
//! `D^n_{1,j}` on the moduli space of stable `n`-pointed rational curves:
//! divisor classes, F-curve intersection numbers, extremality certificates in
//! the symmetric nef cone, and compatibility with Hassett contractions.

pub mod basis;
pub mod divisors;
pub mod error;
pub mod extremality;
pub mod hassett;
pub mod intersection;
pub mod linalg;
pub mod moduli;

pub use basis::{
    gamma_closed_form, gamma_ikk_special, gamma_terms, gamma_via_solve, matrix_m, matrix_n,
    matrix_p, PiecewiseAB, SymCurveClass,
};
pub use divisors::{
    a_vector, divisor_class, f_cone_check, zero_intersection_shapes, CbDivisorSpec, FConeReport,
};
pub use error::{Error, Result};
pub use extremality::{
    build_family, certify, coefficient_matrix, det_formula_check, drop_to_chat, nonunit_minor,
    pair_sequence, t_set, CurveFamily, CurveTag, ExtremalityCertificate, Method, PairSequence,
    Verdict,
};
pub use hassett::{
    is_contracted, minimal_hassett, theorem_a_check, HassettWeights, Sample, TheoremAReport,
    WeightVector,
};
pub use intersection::{
    f11_intersect, f11_vanishes, fakh_sym_intersect, general_weight_vanishing, kappa, km_intersect,
    nu_profile_symmetric, NuProfile, SymDivisorClass,
};
pub use linalg::{Rat, RatMatrix};
pub use moduli::{FCurveShape, ModuliContext, SetPartition4, DEFAULT_PARTITION_CAP};
