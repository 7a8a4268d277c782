//! Reference values transcribed from the published worked examples, plus
//! small helpers shared by the integration tests.

#![allow(dead_code)]

use cbnef::{Rat, RatMatrix};

pub fn ints(rows: &[&[i64]]) -> RatMatrix {
    RatMatrix::from_i64_rows(rows).unwrap()
}

pub fn scaled(k: i64, rows: &[&[i64]]) -> RatMatrix {
    ints(rows).scale(&Rat::new(1, k))
}

pub fn m13() -> RatMatrix {
    ints(&[
        &[3, -1, 0, 0, 0],
        &[0, 2, -1, 0, 0],
        &[1, -1, 2, -1, 0],
        &[1, 0, -1, 2, -1],
        &[1, 0, 0, -1, 1],
    ])
}

pub fn n13() -> RatMatrix {
    scaled(
        6,
        &[
            &[1, 1, 1, 1, 1],
            &[-3, 3, 3, 3, 3],
            &[-6, 0, 6, 6, 6],
            &[-8, -2, 4, 10, 10],
            &[-9, -3, 3, 9, 15],
        ],
    )
}

pub fn m12() -> RatMatrix {
    ints(&[
        &[3, -1, 0, 0, 0],
        &[0, 2, -1, 0, 0],
        &[1, -1, 2, -1, 0],
        &[1, 0, -1, 2, -1],
        &[1, 0, 0, -2, 2],
    ])
}

pub fn n12() -> RatMatrix {
    scaled(
        11,
        &[
            &[2, 2, 2, 2, 1],
            &[-5, 6, 6, 6, 3],
            &[-10, 1, 12, 12, 6],
            &[-13, -2, 9, 20, 10],
            &[-14, -3, 8, 19, 15],
        ],
    )
}

pub fn p12() -> RatMatrix {
    scaled(
        11,
        &[
            &[2, -5, -10, -13, -14],
            &[2, 6, 1, -2, -3],
            &[2, 6, 12, 9, 8],
            &[2, 6, 12, 20, 19],
            &[1, 3, 6, 10, 15],
        ],
    )
}

/// `B_{r+1} . F_{1,2,2,7}` for `n = 12`, `r = 1..5`.
pub const N12_F1227_INTERSECTIONS: [i64; 5] = [-2, 2, 1, -1, 0];
pub const N12_F1227_GAMMA: [i64; 5] = [-1, 1, 1, 0, 0];

/// `F_{16,7,7}` at `n = 62`.
pub const N62_I16_K7: [i64; 30] = [
    -2, -3, -4, -5, -6, -7, -6, -5, -4, -3, -2, -1, 0, 0, 0, 1, 2, 3, 4, 5, 6, 7, 6, 5, 4, 3, 2, 1,
    0, 0,
];

/// `F_{19,9,9}` at `n = 62`.
pub const N62_I19_K9: [i64; 30] = [
    -2, -3, -4, -5, -6, -7, -8, -9, -8, -7, -6, -5, -4, -3, -2, -1, 0, 0, 1, 2, 3, 4, 5, 6, 8, 10,
    12, 12, 12, 6,
];

/// `D^20_{1,6} . F_{m,1,1}`, `m = 1..9`, as printed.
pub const TABLE_20_6: [i64; 9] = [0, 4, 2, 0, 4, 2, 0, 0, 6];

/// `D^28_{1,11} . F_{m,1,1}`, `m = 1..13`, as printed.
pub const TABLE_28_11: [i64; 13] = [5, 6, 0, 10, 1, 4, 7, 0, 9, 2, 3, 8, 0];

/// Replacement-curve values `(n, j, i, m, value)` for `F_{i,m,m} . D^n_{1,j}`.
pub const REPLACEMENTS: &[(u32, u32, u32, u32, i64)] = &[
    (20, 6, 2, 3, 0),
    (20, 6, 3, 3, 0),
    (20, 6, 5, 3, 0),
    (20, 6, 6, 3, 0),
    (20, 6, 9, 3, 0),
    (28, 11, 1, 2, 1),
    (28, 11, 1, 3, 0),
    (28, 11, 2, 2, 0),
    (28, 11, 4, 2, 0),
    (28, 11, 5, 2, 0),
    (28, 11, 6, 2, 2),
    (28, 11, 6, 3, 0),
    (28, 11, 7, 2, 0),
    (28, 11, 9, 2, 0),
    (28, 11, 10, 2, 0),
    (28, 11, 11, 2, 3),
    (28, 11, 11, 3, 0),
    (28, 11, 12, 2, 0),
];

pub fn c_25_7() -> RatMatrix {
    ints(&[
        &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[-2, -2, 0, 2, 2, 1, 0, 0, 0, 0, 0],
        &[-2, -3, -1, 1, 3, 2, 1, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        &[-2, -3, -2, -1, 0, 1, 2, 3, 2, 1, 0],
        &[-2, -3, -2, -1, 0, 0, 1, 2, 3, 2, 1],
        &[0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
        &[-2, -3, -2, -1, 0, 0, 0, 0, 1, 3, 5],
        &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ])
}

pub fn chat_25_7() -> RatMatrix {
    ints(&[
        &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[-2, -2, 0, 2, 2, 1, 0, 0, 0, 0],
        &[-2, -3, -1, 1, 3, 2, 1, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
        &[-2, -3, -2, -1, 0, 1, 2, 3, 2, 0],
        &[-2, -3, -2, -1, 0, 0, 1, 2, 3, 1],
        &[0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
        &[-2, -3, -2, -1, 0, 0, 0, 0, 1, 5],
        &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ])
}

pub fn minor_25_7() -> RatMatrix {
    ints(&[
        &[-2, 0, 1, 0, 0],
        &[-3, -1, 2, 1, 0],
        &[-3, -2, 1, 2, 2],
        &[-3, -2, 0, 1, 3],
        &[-3, -2, 0, 0, 1],
    ])
}

/// The row-reduced minor printed for `n = 48`, `j = 17`.
pub fn reduced_minor_48_17() -> RatMatrix {
    ints(&[
        &[1, 2, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2],
        &[0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1],
        &[0, 0, 1, 2, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, -2],
        &[0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1],
        &[0, 0, 0, 0, 1, 2, 2, 1, 0, 0, 0, 0, 0, 0, -2],
        &[0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, -1, -1],
        &[0, 0, 0, 0, 0, 0, 1, 2, 2, 1, 0, 0, 0, 0, -2],
        &[0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, -1],
        &[0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1, 0, 0, -1, -1],
        &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1, 0, -1, -1],
        &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 1, -2],
        &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, -1, -1],
        &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 0],
        &[-2, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
        &[-2, -3, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2],
    ])
}

/// Family for `n = 20`, `j = 6` as `(index, multiplicity)`, last one dropped.
pub const FAMILY_20_6: [(u32, u32); 9] = [
    (1, 1),
    (2, 3),
    (3, 3),
    (4, 1),
    (5, 3),
    (6, 3),
    (7, 1),
    (8, 1),
    (9, 3),
];

/// Reduced family for `n = 28`, `j = 11`.
pub const FAMILY_HAT_28_11: [(u32, u32); 12] = [
    (1, 3),
    (2, 2),
    (3, 1),
    (4, 2),
    (5, 2),
    (6, 3),
    (7, 2),
    (8, 1),
    (9, 2),
    (10, 2),
    (11, 3),
    (13, 1),
];

/// Three-case determinant formula, written independently of the library.
pub fn det_expected(j: u32, r: u32) -> Rat {
    assert!(r != 0);
    if j.is_multiple_of(2) {
        Rat::new(j as i64, 2)
    } else if r.is_multiple_of(2) {
        Rat::from_int(j as i64) - Rat::new(r as i64, 2)
    } else {
        Rat::new((j - r) as i64, 2)
    }
}
