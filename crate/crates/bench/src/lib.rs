//! Shared inputs for the benchmarks.

use cbnef::CbDivisorSpec;

/// `(n, j)` pairs covering each family regime: `j = 2`, `j | n`, `k >= 3`
/// and `k = 2`.
pub const CERTIFY_CASES: &[(u32, u32)] = &[(30, 2), (30, 5), (25, 7), (48, 17), (60, 23)];

pub fn spec(n: u32, j: u32) -> CbDivisorSpec {
    CbDivisorSpec::new(n, j).expect("benchmark inputs are valid")
}
