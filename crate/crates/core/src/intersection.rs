//! Intersection numbers of symmetric divisors with F-curves.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Rat;
use crate::moduli::{FCurveShape, ModuliContext, SetPartition4};

/// A symmetric divisor class `sum_r coeffs[r-1] * B_{r+1}` for `r = 1..g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymDivisorClass {
    ctx: ModuliContext,
    coeffs: Vec<Rat>,
}

impl SymDivisorClass {
    pub fn new(ctx: ModuliContext, coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.len() != ctx.g() as usize {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for g={}",
                coeffs.len(),
                ctx.g()
            )));
        }
        Ok(SymDivisorClass { ctx, coeffs })
    }

    pub fn zero(ctx: ModuliContext) -> Self {
        SymDivisorClass {
            ctx,
            coeffs: vec![Rat::zero(); ctx.g() as usize],
        }
    }

    /// The boundary class `B_k`, `2 <= k <= g+1`.
    pub fn boundary(ctx: ModuliContext, k: u32) -> Result<Self> {
        if k < 2 || k > ctx.g() + 1 {
            return Err(Error::OutOfRange(format!(
                "B_{k} is not a basis class for n={}",
                ctx.n()
            )));
        }
        let mut coeffs = vec![Rat::zero(); ctx.g() as usize];
        coeffs[(k - 2) as usize] = Rat::one();
        Ok(SymDivisorClass { ctx, coeffs })
    }

    pub fn ctx(&self) -> &ModuliContext {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// The coefficient `alpha_t` on `B_t`, with `alpha_0 = alpha_1 = 0` and
    /// `alpha_t = alpha_{n-t}` above `g+1`.
    pub fn alpha(&self, t: u32) -> Rat {
        let t = if t > self.ctx.n() / 2 {
            self.ctx.n() - t
        } else {
            t
        };
        if t <= 1 {
            Rat::zero()
        } else {
            self.coeffs[(t - 2) as usize].clone()
        }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        SymDivisorClass {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn add(&self, other: &SymDivisorClass) -> Result<Self> {
        if self.ctx != other.ctx {
            return Err(Error::DimensionMismatch(format!(
                "adding classes for n={} and n={}",
                self.ctx.n(),
                other.ctx.n()
            )));
        }
        Ok(SymDivisorClass {
            ctx: self.ctx,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

/// Keel–McKernan intersection of a symmetric divisor with the F-curve of
/// shape `(a,b,c,d)`.
pub fn km_intersect(d: &SymDivisorClass, s: &FCurveShape) -> Result<Rat> {
    s.check_context(d.ctx())?;
    let [a, b, c, e] = s.parts();
    let al = |t| d.alpha(t);
    Ok(-al(a) - al(b) - al(c) - al(e) + al(a + b) + al(a + c) + al(a + e))
}

/// Residues of the block weight sums mod `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NuProfile {
    pub values: [u32; 4],
    pub sum: u32,
    pub max: u32,
    pub min: u32,
}

impl NuProfile {
    fn from_values(values: [u32; 4]) -> Self {
        NuProfile {
            values,
            sum: values.iter().sum(),
            max: *values.iter().max().unwrap(),
            min: *values.iter().min().unwrap(),
        }
    }
}

pub(crate) fn check_j(n: u32, j: u32) -> Result<()> {
    if j == 0 || j > n / 2 {
        return Err(Error::OutOfRange(format!(
            "j={j} outside 1..={} for n={n}",
            n / 2
        )));
    }
    Ok(())
}

fn check_shape_n(n: u32, s: &FCurveShape) -> Result<()> {
    if s.n() != n {
        return Err(Error::InvalidShape(format!(
            "{s} sums to {} but n={n}",
            s.n()
        )));
    }
    Ok(())
}

/// `nu_i = j * n_i mod n` over the parts of `s`.
pub fn nu_profile_symmetric(n: u32, j: u32, s: &FCurveShape) -> Result<NuProfile> {
    check_j(n, j)?;
    check_shape_n(n, s)?;
    Ok(nu_symmetric(n, j, s))
}

fn nu_symmetric(n: u32, j: u32, s: &FCurveShape) -> NuProfile {
    let (n64, j64) = (n as u64, j as u64);
    NuProfile::from_values(s.parts().map(|p| ((j64 * p as u64) % n64) as u32))
}

/// `D^n_{1,j} . F` for a symmetric F-curve of shape `s`.
pub fn fakh_sym_intersect(n: u32, j: u32, s: &FCurveShape) -> Result<i64> {
    check_j(n, j)?;
    check_shape_n(n, s)?;
    Ok(fakh_unchecked(n, j, s))
}

pub(crate) fn fakh_unchecked(n: u32, j: u32, s: &FCurveShape) -> i64 {
    let nu = nu_symmetric(n, j, s);
    if nu.sum != 2 * n {
        0
    } else if nu.max + nu.min <= n {
        nu.min as i64
    } else {
        (n - nu.max) as i64
    }
}

/// `n - (i*j mod n)`.
pub fn kappa(n: u32, j: u32, i: u32) -> u32 {
    n - ((i as u64 * j as u64) % n as u64) as u32
}

/// `D^n_{1,j} . F_{1,1,i}` by the floor-sum gate and `kappa`.
pub fn f11_intersect(n: u32, j: u32, i: u32) -> Result<i64> {
    if j < 2 || j > n / 2 {
        return Err(Error::OutOfRange(format!(
            "j={j} outside 2..={} for n={n}",
            n / 2
        )));
    }
    let g = n / 2 - 1;
    if i == 0 || i > g {
        return Err(Error::OutOfRange(format!("i={i} outside 1..={g}")));
    }
    let (n, j, i) = (n as i64, j as i64, i as i64);
    let gate = (i * j).div_euclid(n) + ((n - i - 2) * j).div_euclid(n) == j - 2;
    if !gate {
        return Ok(0);
    }
    let k = kappa(n as u32, j as u32, i as u32) as i64;
    Ok(if 1 <= k && k <= j {
        k
    } else if j <= k && k < 2 * j {
        2 * j - k
    } else {
        0
    })
}

/// True iff no integer lies strictly between `ij/n` and `(i+2)j/n`, i.e.
/// `D^n_{1,j} . F_{1,1,i} = 0`.
pub fn f11_vanishes(n: u32, j: u32, i: u32) -> bool {
    let (n, j, i) = (n as u64, j as u64, i as u64);
    // Least p with p*n > i*j.
    let p = i * j / n + 1;
    p * n >= (i + 2) * j
}

/// The profile `nu_k = (sum of weights in block k) mod n`.
pub fn nu_profile_weighted(n: u32, weights: &[u32], p: &SetPartition4) -> Result<NuProfile> {
    if weights.len() != n as usize || p.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "{} weights and a partition of {} points for n={n}",
            weights.len(),
            p.n()
        )));
    }
    if let Some(w) = weights.iter().find(|&&w| w >= n) {
        return Err(Error::InvalidWeights(format!(
            "weight index {w} outside 0..{n}"
        )));
    }
    let values = [0, 1, 2, 3].map(|k| {
        let s: u64 = p.blocks()[k]
            .iter()
            .map(|&i| weights[i as usize - 1] as u64)
            .sum();
        (s % n as u64) as u32
    });
    Ok(NuProfile::from_values(values))
}

/// One-sided vanishing certificate for `D^n_{1,w} . F_{N1..N4}`: true when
/// the sum of the nu values differs from `2n` or some `nu_k` is zero.
pub fn general_weight_vanishing(n: u32, weights: &[u32], p: &SetPartition4) -> Result<bool> {
    let nu = nu_profile_weighted(n, weights, p)?;
    Ok(nu.sum != 2 * n || nu.min == 0)
}
