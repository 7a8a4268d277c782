//! Change of basis between boundary divisors and the curves `F_{j,1,1}`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intersection::{km_intersect, SymDivisorClass};
use crate::linalg::{Rat, RatMatrix};
use crate::moduli::{FCurveShape, ModuliContext};

/// A symmetric curve class `sum_j gammas[j-1] * F_{j,1,1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymCurveClass {
    ctx: ModuliContext,
    gammas: Vec<i64>,
}

impl SymCurveClass {
    pub fn new(ctx: ModuliContext, gammas: Vec<i64>) -> Result<Self> {
        if gammas.len() != ctx.g() as usize {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for g={}",
                gammas.len(),
                ctx.g()
            )));
        }
        Ok(SymCurveClass { ctx, gammas })
    }

    pub fn ctx(&self) -> &ModuliContext {
        &self.ctx
    }

    pub fn gammas(&self) -> &[i64] {
        &self.gammas
    }

    /// Coefficient on `F_{j,1,1}`, `1 <= j <= g`.
    pub fn gamma(&self, j: u32) -> i64 {
        self.gammas[j as usize - 1]
    }

    pub fn to_rats(&self) -> Vec<Rat> {
        self.gammas.iter().map(|&v| Rat::from_int(v)).collect()
    }

    pub fn into_gammas(self) -> Vec<i64> {
        self.gammas
    }
}

fn require_six(ctx: &ModuliContext) -> Result<()> {
    if ctx.n() < 6 {
        return Err(Error::InvalidN(ctx.n()));
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Which {
    M,
    N,
}

type Cache = RwLock<HashMap<(Which, u32), Arc<RatMatrix>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached(which: Which, n: u32, build: impl FnOnce() -> RatMatrix) -> Arc<RatMatrix> {
    let key = (which, n);
    if let Some(m) = cache().read().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return m.clone();
    }
    let built = Arc::new(build());
    let mut guard = cache().write().unwrap_or_else(|e| e.into_inner());
    guard.entry(key).or_insert(built).clone()
}

/// `M[p][q] = B_{q+2} . F_{p+1,1,1}` (zero-based `p`, `q`).
pub fn matrix_m(ctx: &ModuliContext) -> Result<Arc<RatMatrix>> {
    require_six(ctx)?;
    Ok(cached(Which::M, ctx.n(), || build_m(ctx)))
}

fn build_m(ctx: &ModuliContext) -> RatMatrix {
    let g = ctx.g() as usize;
    let basis: Vec<SymDivisorClass> = (2..=ctx.g() + 1)
        .map(|k| SymDivisorClass::boundary(*ctx, k).expect("k in range"))
        .collect();
    RatMatrix::from_fn(g, g, |p, q| {
        let s = ctx.one_one(p as u32 + 1).expect("i <= g");
        km_intersect(&basis[q], &s).expect("shape sums to n")
    })
}

/// The inverse of `M`, from its closed form.
pub fn matrix_n(ctx: &ModuliContext) -> Result<Arc<RatMatrix>> {
    require_six(ctx)?;
    Ok(n_closed_form(ctx))
}

pub(crate) fn n_closed_form(ctx: &ModuliContext) -> Arc<RatMatrix> {
    cached(Which::N, ctx.n(), || build_n(ctx))
}

fn build_n(ctx: &ModuliContext) -> RatMatrix {
    let g = ctx.g() as i64;
    let even = ctx.is_even();
    RatMatrix::from_fn(g as usize, g as usize, |r0, s0| {
        let (r, s) = (r0 as i64 + 1, s0 as i64 + 1);
        let tri = r * (r + 1);
        if !even {
            let base = Rat::new(tri, 2 * (g + 1));
            if s < r {
                base - Rat::from_int(r - s)
            } else {
                base
            }
        } else if s == g {
            Rat::new(tri, 2 * (2 * g + 1))
        } else {
            let base = Rat::new(tri, 2 * g + 1);
            if s < r {
                base - Rat::from_int(r - s)
            } else {
                base
            }
        }
    })
}

/// `P = N^t`.
pub fn matrix_p(ctx: &ModuliContext) -> Result<RatMatrix> {
    Ok(matrix_n(ctx)?.transpose())
}

/// The two pieces of the closed-form expansion: the shape-dependent constant
/// `A` and the per-index values `B(j)`, `j = 1..g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiecewiseAB {
    pub a: i64,
    pub b: Vec<i64>,
}

pub fn gamma_terms(ctx: &ModuliContext, s: &FCurveShape) -> Result<PiecewiseAB> {
    s.check_context(ctx)?;
    let n = ctx.n() as i64;
    let g1 = ctx.g() as i64 + 1;
    let [a, b, c, d] = s.parts().map(|x| x as i64);
    let big_a = if d > g1 {
        0
    } else if a + d <= g1 {
        2 * a
    } else if a + c <= g1 {
        n - 2 * d
    } else if a + b <= g1 {
        2 * b
    } else {
        n - 2 * a
    };
    let f = |x: i64| ctx.fold_unchecked(x as u32) as i64;
    let plus = [a, b, c, d].map(f);
    let minus = [a + b, a + c, a + d].map(f);
    let big_b = (1..=ctx.g() as i64)
        .map(|j| {
            let term = |v: &i64| (v - 1 - j).max(0);
            plus.iter().map(term).sum::<i64>() - minus.iter().map(term).sum::<i64>()
        })
        .collect();
    Ok(PiecewiseAB { a: big_a, b: big_b })
}

/// Coefficients of `F_{a,b,c,d}` on the curves `F_{j,1,1}`, by closed form.
pub fn gamma_closed_form(ctx: &ModuliContext, s: &FCurveShape) -> Result<SymCurveClass> {
    let t = gamma_terms(ctx, s)?;
    let g = ctx.g() as usize;
    let gammas =
        t.b.iter()
            .enumerate()
            .map(|(idx, &b)| {
                if ctx.is_even() && idx + 1 == g {
                    // A is even whenever n is.
                    t.a / 2 + b
                } else {
                    t.a + b
                }
            })
            .collect();
    SymCurveClass::new(*ctx, gammas)
}

/// The same coefficients as [`gamma_closed_form`], computed as
/// `P * (B_{r+1} . F)_r`.
pub fn gamma_via_solve(ctx: &ModuliContext, s: &FCurveShape) -> Result<SymCurveClass> {
    s.check_context(ctx)?;
    let p = matrix_p(ctx)?;
    let rhs = (2..=ctx.g() + 1)
        .map(|k| km_intersect(&SymDivisorClass::boundary(*ctx, k)?, s))
        .collect::<Result<Vec<Rat>>>()?;
    let gammas = p
        .mul_vec(&rhs)?
        .iter()
        .map(|v| {
            v.to_i64()
                .ok_or_else(|| Error::Structure(format!("non-integral coefficient {v} for {s}")))
        })
        .collect::<Result<Vec<i64>>>()?;
    SymCurveClass::new(*ctx, gammas)
}

/// Closed forms for `F_{i,k,k}` in the two regimes where the expansion
/// specializes to short piecewise-linear formulas. Any other `(i, k)` is
/// refused; use [`gamma_closed_form`] instead.
pub fn gamma_ikk_special(ctx: &ModuliContext, i: u32, k: u32) -> Result<SymCurveClass> {
    require_six(ctx)?;
    let (n, g) = (ctx.n() as i64, ctx.g() as i64);
    let (i, k) = (i as i64, k as i64);
    if i < 1 || k < 1 || n - i - 2 * k < 1 {
        return Err(Error::InvalidShape(format!(
            "F_{{{i},{k},{k}}} does not exist for n={n}"
        )));
    }
    let even = n % 2 == 0;
    let small = 2 * k < g + 1 - 2 * k && i + 2 * k <= g + 1 && !(even && i == g + 1 - 2 * k);
    let large = i + k <= g + 1
        && g + 1 < i + 2 * k
        && 2 * k <= i
        && i <= n - i - 2 * k
        && n - i - 2 * k <= i + k
        && !(even && i == g + 1 - k);
    let gammas: Vec<i64> = if small {
        (1..=g).map(|j| ikk_small(i, k, j)).collect()
    } else if large {
        (1..=g).map(|j| ikk_large(n, g, i, k, j)).collect()
    } else {
        return Err(Error::Unsupported(format!(
            "no special formula for F_{{{i},{k},{k}}} at n={n}; use gamma_closed_form"
        )));
    };
    SymCurveClass::new(*ctx, gammas)
}

fn ikk_small(i: i64, k: i64, j: i64) -> i64 {
    if i < k {
        if j < i {
            -j - 1
        } else if j < k {
            -i
        } else if j < i + k {
            2 * j + 2 - i - 2 * k
        } else if j < 2 * k {
            i
        } else if j < i + 2 * k {
            i + 2 * k - j - 1
        } else {
            0
        }
    } else if i < 2 * k {
        if j < k {
            -j - 1
        } else if j < i {
            j + 1 - 2 * k
        } else if j < 2 * k {
            2 * j + 2 - i - 2 * k
        } else if j < i + k {
            j + 1 - i
        } else if j < i + 2 * k {
            i + 2 * k - j - 1
        } else {
            0
        }
    } else if j < k {
        -j - 1
    } else if j < 2 * k {
        j + 1 - 2 * k
    } else if j < i {
        0
    } else if j < i + k {
        j + 1 - i
    } else if j < i + 2 * k {
        i + 2 * k - j - 1
    } else {
        0
    }
}

fn ikk_large(n: i64, g: i64, i: i64, k: i64, j: i64) -> i64 {
    if j < k {
        -j - 1
    } else if j < 2 * k {
        j + 1 - 2 * k
    } else if j < i {
        0
    } else if j < n - i - 2 * k {
        j + 1 - i
    } else if j < i + k {
        2 * k + 2 * j - n + 2
    } else if j < g || n % 2 == 1 {
        2 * i + 4 * k - n
    } else {
        i + 2 * k - g - 1
    }
}
