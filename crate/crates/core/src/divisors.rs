//! The divisors `D^n_{1,j}` and F-cone membership.

use serde::{Deserialize, Serialize};

use crate::basis::n_closed_form;
use crate::error::{Error, Result};
use crate::intersection::{f11_intersect, fakh_unchecked, km_intersect, SymDivisorClass};
use crate::linalg::Rat;
use crate::moduli::{FCurveShape, ModuliContext};

/// The level-one divisor `D^n_{1,j}` with all weights `omega_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CbDivisorSpec {
    ctx: ModuliContext,
    j: u32,
}

impl CbDivisorSpec {
    pub fn new(n: u32, j: u32) -> Result<Self> {
        let ctx = ModuliContext::new(n)?;
        if j == 0 || j > ctx.g() + 1 {
            return Err(Error::OutOfRange(format!(
                "j={j} outside 1..={} for n={n}",
                ctx.g() + 1
            )));
        }
        Ok(CbDivisorSpec { ctx, j })
    }

    pub fn ctx(&self) -> &ModuliContext {
        &self.ctx
    }

    pub fn n(&self) -> u32 {
        self.ctx.n()
    }

    pub fn g(&self) -> u32 {
        self.ctx.g()
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    /// `floor(n/j)`.
    pub fn k(&self) -> u32 {
        self.n() / self.j
    }

    /// `n - j*k`.
    pub fn r(&self) -> u32 {
        self.n() % self.j
    }

    /// `D^n_{1,j} . F` for a shape summing to `n`.
    pub fn intersect(&self, s: &FCurveShape) -> Result<i64> {
        s.check_context(&self.ctx)?;
        Ok(fakh_unchecked(self.n(), self.j, s))
    }
}

/// `a_l = D^n_{1,j} . F_{1,1,l}` for `l = 1..g`; zero for `j = 1`.
pub fn a_vector(spec: &CbDivisorSpec) -> Vec<i64> {
    if spec.j() == 1 {
        return vec![0; spec.g() as usize];
    }
    (1..=spec.g())
        .map(|l| f11_intersect(spec.n(), spec.j(), l).expect("parameters validated by spec"))
        .collect()
}

/// The class of `D^n_{1,j}` on `B_2..B_{g+1}`, as `N * a`.
pub fn divisor_class(spec: &CbDivisorSpec) -> SymDivisorClass {
    let a: Vec<Rat> = a_vector(spec).into_iter().map(Rat::from_int).collect();
    let b = n_closed_form(spec.ctx()).mul_vec(&a).expect("N is g x g");
    SymDivisorClass::new(*spec.ctx(), b).expect("length g")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FConeReport {
    pub is_in_cone: bool,
    pub violations: Vec<FCurveShape>,
}

/// Checks `d . F >= 0` on every F-curve shape.
pub fn f_cone_check(d: &SymDivisorClass) -> FConeReport {
    let violations: Vec<FCurveShape> = d
        .ctx()
        .shapes()
        .into_iter()
        .filter(|s| {
            km_intersect(d, s)
                .expect("shape from context")
                .is_negative()
        })
        .collect();
    FConeReport {
        is_in_cone: violations.is_empty(),
        violations,
    }
}

/// Every shape `s` with `D^n_{1,j} . F_s = 0`, in lexicographic order.
pub fn zero_intersection_shapes(spec: &CbDivisorSpec) -> Vec<FCurveShape> {
    spec.ctx()
        .shapes()
        .into_iter()
        .filter(|s| fakh_unchecked(spec.n(), spec.j(), s) == 0)
        .collect()
}
