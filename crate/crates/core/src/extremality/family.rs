use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::basis::gamma_closed_form;
use crate::divisors::CbDivisorSpec;
use crate::error::{Error, Result};
use crate::intersection::fakh_unchecked;
use crate::linalg::{Rat, RatMatrix};
use crate::moduli::FCurveShape;

/// Which curve sits at index `i` of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveTag {
    /// `F_{i,1,1}`
    OneOne,
    /// `F_{i,k,k}` with `k = floor(n/j)`
    KK,
    /// `F_{i,2,2}`
    TwoTwo,
    /// `F_{i,3,3}`
    ThreeThree,
}

impl CurveTag {
    fn multiplicity(self, k: u32) -> u32 {
        match self {
            CurveTag::OneOne => 1,
            CurveTag::KK => k,
            CurveTag::TwoTwo => 2,
            CurveTag::ThreeThree => 3,
        }
    }
}

/// How a family was constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `j = 2`: the curves `F_{i,1,1}`, `i < g`.
    JTwo,
    /// `j | n`: `F_{i,k,k}` whenever `k | i+1`.
    Divisible,
    /// `k >= 3`, `r > 0`.
    KAtLeastThree,
    /// `k = 2`, `r > 0`, `j >= 5`.
    KTwo,
    /// Hand-assembled family.
    Custom,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub index: u32,
    pub tag: CurveTag,
    /// The repeated block size `m` of `F_{i,m,m}`.
    pub mult: u32,
    pub shape: FCurveShape,
}

impl fmt::Display for FamilyEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.mult;
        write!(f, "F_{{{},{m},{m}}}", self.index)
    }
}

/// The indexed list of F-curves attached to `D^n_{1,j}`. Removing the dropped
/// entry leaves the `g - 1` curves whose independence certifies extremality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveFamily {
    spec: CbDivisorSpec,
    regime: Regime,
    entries: Vec<FamilyEntry>,
    dropped: Option<u32>,
    dropped_column: u32,
}

impl CurveFamily {
    /// Assembles a family from `(index, tag)` pairs. The column deleted from
    /// `C` is the dropped index, or `g` if nothing is dropped.
    pub fn from_entries(
        spec: CbDivisorSpec,
        entries: &[(u32, CurveTag)],
        dropped: Option<u32>,
    ) -> Result<Self> {
        Self::assemble(spec, Regime::Custom, entries, dropped)
    }

    fn assemble(
        spec: CbDivisorSpec,
        regime: Regime,
        entries: &[(u32, CurveTag)],
        dropped: Option<u32>,
    ) -> Result<Self> {
        let g = spec.g();
        let mut built = Vec::with_capacity(entries.len());
        for &(index, tag) in entries {
            if index == 0 || index > g {
                return Err(Error::Structure(format!("index {index} outside 1..={g}")));
            }
            let m = tag.multiplicity(spec.k());
            let shape = spec.ctx().try_ikk(index, m).ok_or_else(|| {
                Error::Structure(format!(
                    "F_{{{index},{m},{m}}} does not exist for n={}",
                    spec.n()
                ))
            })?;
            built.push(FamilyEntry {
                index,
                tag,
                mult: m,
                shape,
            });
        }
        built.sort_by_key(|e| e.index);
        if built.windows(2).any(|w| w[0].index == w[1].index) {
            return Err(Error::Structure("repeated index".into()));
        }
        if let Some(p) = dropped {
            if !built.iter().any(|e| e.index == p) {
                return Err(Error::Structure(format!("dropped index {p} not in family")));
            }
        }
        Ok(CurveFamily {
            spec,
            regime,
            entries: built,
            dropped,
            dropped_column: dropped.unwrap_or(g),
        })
    }

    pub fn spec(&self) -> &CbDivisorSpec {
        &self.spec
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    /// Every entry, ordered by index.
    pub fn entries(&self) -> &[FamilyEntry] {
        &self.entries
    }

    pub fn dropped(&self) -> Option<u32> {
        self.dropped
    }

    /// One-based index of the column removed from `C`.
    pub fn dropped_column(&self) -> u32 {
        self.dropped_column
    }

    /// The entries without the dropped one.
    pub fn hat(&self) -> impl Iterator<Item = &FamilyEntry> {
        self.entries
            .iter()
            .filter(move |e| Some(e.index) != self.dropped)
    }

    pub fn tag_string(&self) -> String {
        self.entries
            .iter()
            .map(|e| {
                let mark = if Some(e.index) == self.dropped {
                    "~"
                } else {
                    ""
                };
                format!("{mark}{e}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// `{t*n/gcd(j,r) : 1 <= t <= gcd(j,r)/2}` restricted to `1..=g`; empty when
/// `r = 1`.
pub fn t_set(n: u32, j: u32) -> Result<Vec<u32>> {
    if j == 0 || j > n {
        return Err(Error::OutOfRange(format!("j={j} for n={n}")));
    }
    let r = n % j;
    if r == 0 {
        return Err(Error::OutOfRange(format!("j={j} divides n={n}; no T set")));
    }
    if r == 1 {
        return Ok(Vec::new());
    }
    let gg = j.gcd(&r);
    let g = n / 2 - 1;
    Ok((1..=gg / 2)
        .map(|t| t * n / gg)
        .filter(|&x| x >= 1 && x <= g)
        .collect())
}

fn zero(spec: &CbDivisorSpec, s: Option<FCurveShape>) -> bool {
    s.is_some_and(|s| fakh_unchecked(spec.n(), spec.j(), &s) == 0)
}

/// Builds the family for `D^n_{1,j}`. Refuses `n < 6`, `j = 1`, and `k = 2`
/// with `j <= 4`; those cases go through the brute-force search instead.
pub fn build_family(spec: &CbDivisorSpec) -> Result<CurveFamily> {
    let (n, j, g, k, r) = (spec.n(), spec.j(), spec.g(), spec.k(), spec.r());
    if n < 6 {
        return Err(Error::Unsupported(format!("degenerate: n={n} < 6")));
    }
    if j == 1 {
        return Err(Error::Unsupported("trivial divisor".into()));
    }
    if j == 2 {
        let entries: Vec<_> = (1..g).map(|i| (i, CurveTag::OneOne)).collect();
        return CurveFamily::assemble(*spec, Regime::JTwo, &entries, None);
    }
    if k == 2 && j <= 4 {
        return Err(Error::Unsupported(format!(
            "no structured family for n={n}, j={j}; use brute force"
        )));
    }
    let ctx = spec.ctx();
    let mut entries = Vec::with_capacity(g as usize);
    let regime = if r == 0 {
        for i in 1..=g {
            let tag = if (i + 1) % k == 0 {
                CurveTag::KK
            } else {
                CurveTag::OneOne
            };
            entries.push((i, tag));
        }
        Regime::Divisible
    } else if k >= 3 {
        let t = t_set(n, j)?;
        for i in 1..=g {
            let tag = if t.contains(&i) || !zero(spec, ctx.try_ikk(i, 1)) {
                CurveTag::KK
            } else {
                CurveTag::OneOne
            };
            entries.push((i, tag));
        }
        Regime::KAtLeastThree
    } else {
        for i in 1..=g {
            let tag = if ((i + 2) * j) % n == 0 {
                CurveTag::ThreeThree
            } else if zero(spec, ctx.try_ikk(i, 1)) {
                CurveTag::OneOne
            } else if zero(spec, ctx.try_ikk(i, 2)) {
                CurveTag::TwoTwo
            } else {
                CurveTag::ThreeThree
            };
            entries.push((i, tag));
        }
        Regime::KTwo
    };
    let dropped = entries
        .iter()
        .rev()
        .find(|(_, t)| *t != CurveTag::OneOne)
        .map(|&(i, _)| i)
        .ok_or_else(|| Error::Structure(format!("no replacement curve for n={n}, j={j}")))?;
    CurveFamily::assemble(*spec, regime, &entries, Some(dropped))
}

/// True iff every curve of the family, dropped one included, meets
/// `D^n_{1,j}` in degree zero.
pub fn family_zero_check(f: &CurveFamily) -> bool {
    f.entries()
        .iter()
        .all(|e| fakh_unchecked(f.spec.n(), f.spec.j(), &e.shape) == 0)
}

/// True iff no two curves of the reduced family share a shape.
pub fn family_distinct(f: &CurveFamily) -> bool {
    let mut seen = HashSet::new();
    f.hat().all(|e| seen.insert(e.shape))
}

/// Rows are the expansions of the reduced family's curves on `F_{q,1,1}`,
/// ordered by index.
pub fn coefficient_matrix(f: &CurveFamily) -> RatMatrix {
    let ctx = f.spec.ctx();
    let rows: Vec<Vec<Rat>> = f
        .hat()
        .map(|e| {
            gamma_closed_form(ctx, &e.shape)
                .expect("family shapes sum to n")
                .to_rats()
        })
        .collect();
    if rows.is_empty() {
        return RatMatrix::zeros(0, ctx.g() as usize);
    }
    RatMatrix::from_rows(rows).expect("rows have length g")
}

/// Removes the dropped column from `C`; the result must be square.
pub fn drop_to_chat(f: &CurveFamily, c: &RatMatrix) -> Result<RatMatrix> {
    let col = f.dropped_column as usize;
    if col == 0 || col > c.cols() {
        return Err(Error::DimensionMismatch(format!(
            "column {col} outside 1..={}",
            c.cols()
        )));
    }
    let chat = c.without_col(col - 1);
    if !chat.is_square() {
        return Err(Error::NotSquare {
            rows: chat.rows(),
            cols: chat.cols(),
        });
    }
    Ok(chat)
}

/// The submatrix of `Ĉ` on the rows of curves other than `F_{i,1,1}` and
/// the columns carrying those curves' own indices.
pub fn nonunit_minor(f: &CurveFamily, chat: &RatMatrix) -> RatMatrix {
    let p = f.dropped_column;
    let (rows, cols): (Vec<usize>, Vec<usize>) = f
        .hat()
        .enumerate()
        .filter(|(_, e)| e.tag != CurveTag::OneOne)
        .map(|(row, e)| {
            let col = if e.index < p {
                e.index - 1
            } else {
                e.index - 2
            };
            (row, col as usize)
        })
        .unzip();
    chat.submatrix(&rows, &cols)
}
