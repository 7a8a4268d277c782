//! Curve families with zero intersection against `D^n_{1,j}` and the
//! certificates built from them.

mod certify;
mod family;
mod sequence;

pub use certify::{
    certify, det_formula, det_formula_check, CertificateSummary, Checks, DetFormulaReport,
    ExtremalityCertificate, Method, Verdict,
};
pub use family::{
    build_family, coefficient_matrix, drop_to_chat, family_distinct, family_zero_check,
    nonunit_minor, t_set, CurveFamily, CurveTag, FamilyEntry, Regime,
};
pub use sequence::{pair_sequence, PairSequence, SequenceKind};
