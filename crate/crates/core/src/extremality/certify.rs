use std::fmt;

use serde::{Deserialize, Serialize};

use super::family::{
    build_family, coefficient_matrix, drop_to_chat, family_distinct, family_zero_check,
    nonunit_minor, CurveFamily,
};
use crate::basis::gamma_closed_form;
use crate::divisors::{divisor_class, f_cone_check, zero_intersection_shapes, CbDivisorSpec};
use crate::error::{Error, Result};
use crate::linalg::{Rat, RatMatrix};
use crate::moduli::FCurveShape;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Structured,
    #[serde(rename = "bruteforce")]
    BruteForce,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Structured => "structured",
            Method::BruteForce => "bruteforce",
        })
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "structured" => Ok(Method::Structured),
            "bruteforce" | "brute-force" | "brute_force" => Ok(Method::BruteForce),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Extremal,
    NotCertified,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    /// Every curve used meets the divisor in degree zero.
    pub zeros: bool,
    /// The curves used have pairwise distinct shapes.
    pub distinct: bool,
    /// The divisor meets every F-curve nonnegatively.
    pub nef: bool,
}

/// Evidence that `D^n_{1,j}` spans an extremal ray of the symmetric F-cone:
/// `g - 1` curves with zero intersection whose classes are independent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalityCertificate {
    pub spec: CbDivisorSpec,
    pub method: Method,
    /// Present for structured certificates.
    pub family: Option<CurveFamily>,
    /// Shapes chosen by the brute-force search, in selection order.
    pub chosen: Vec<FCurveShape>,
    pub c_matrix: Option<RatMatrix>,
    pub c_hat: Option<RatMatrix>,
    /// Determinant of the minor on the curves other than `F_{i,1,1}`.
    pub minor_det: Option<Rat>,
    pub det_expected: Option<Rat>,
    pub rank: usize,
    pub checks: Checks,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl ExtremalityCertificate {
    fn empty(spec: CbDivisorSpec, method: Method) -> Self {
        ExtremalityCertificate {
            spec,
            method,
            family: None,
            chosen: Vec::new(),
            c_matrix: None,
            c_hat: None,
            minor_det: None,
            det_expected: None,
            rank: 0,
            checks: Checks {
                zeros: false,
                distinct: false,
                nef: false,
            },
            verdict: Verdict::NotCertified,
            notes: Vec::new(),
        }
    }

    pub fn is_extremal(&self) -> bool {
        self.verdict == Verdict::Extremal
    }

    /// `|det|` of the non-unit minor.
    pub fn minor_det_abs(&self) -> Option<Rat> {
        self.minor_det.as_ref().map(Rat::abs)
    }

    /// The flat record written by the command-line tool.
    pub fn summary(&self) -> CertificateSummary {
        let family = match &self.family {
            Some(f) => f.entries().iter().map(|e| e.to_string()).collect(),
            None => self.chosen.iter().map(|s| format!("F({s})")).collect(),
        };
        CertificateSummary {
            n: self.spec.n(),
            j: self.spec.j(),
            k: self.spec.k(),
            r: self.spec.r(),
            method: self.method,
            family,
            dropped: self.family.as_ref().and_then(CurveFamily::dropped),
            rank: self.rank,
            minor_det: self.minor_det.clone(),
            det_expected: self.det_expected.clone(),
            verdict: self.verdict,
            checks: self.checks,
            notes: self.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub n: u32,
    pub j: u32,
    pub k: u32,
    pub r: u32,
    pub method: Method,
    pub family: Vec<String>,
    pub dropped: Option<u32>,
    pub rank: usize,
    pub minor_det: Option<Rat>,
    pub det_expected: Option<Rat>,
    pub verdict: Verdict,
    pub checks: Checks,
    pub notes: Vec<String>,
}

/// `j/2` for even `j`; `j - r/2` for odd `j`, even `r`; `(j-r)/2` for odd
/// `j`, odd `r`. `None` when `r = 0`.
pub fn det_formula(j: u32, r: u32) -> Option<Rat> {
    let (j, r) = (j as i64, r as i64);
    match (r, j % 2, r % 2) {
        (0, _, _) => None,
        (_, 0, _) => Some(Rat::new(j, 2)),
        (_, _, 0) => Some(Rat::new(2 * j - r, 2)),
        _ => Some(Rat::new(j - r, 2)),
    }
}

pub fn certify(spec: &CbDivisorSpec, method: Method) -> ExtremalityCertificate {
    let mut cert = ExtremalityCertificate::empty(*spec, method);
    if spec.n() < 6 {
        cert.notes.push("degenerate: n < 6".into());
        return cert;
    }
    if spec.j() == 1 {
        cert.notes.push("trivial divisor".into());
        return cert;
    }
    match method {
        Method::BruteForce => brute_force(spec, cert),
        Method::Structured => match build_family(spec) {
            Ok(family) => structured(family, cert),
            Err(Error::Unsupported(why)) => {
                cert.notes.push(why);
                cert.method = Method::BruteForce;
                brute_force(spec, cert)
            }
            Err(e) => {
                cert.notes.push(e.to_string());
                cert
            }
        },
    }
}

fn structured(family: CurveFamily, mut cert: ExtremalityCertificate) -> ExtremalityCertificate {
    let spec = *family.spec();
    let g = spec.g() as usize;
    cert.checks = Checks {
        zeros: family_zero_check(&family),
        distinct: family_distinct(&family),
        nef: f_cone_check(&divisor_class(&spec)).is_in_cone,
    };
    let c = coefficient_matrix(&family);
    match drop_to_chat(&family, &c) {
        Ok(chat) => {
            cert.rank = chat.rank();
            let minor = nonunit_minor(&family, &chat);
            cert.minor_det = Some(minor.det().expect("minor is square"));
            cert.c_hat = Some(chat);
        }
        Err(e) => cert.notes.push(e.to_string()),
    }
    cert.c_matrix = Some(c);
    cert.det_expected = det_formula(spec.j(), spec.r());
    let ok = cert.checks.zeros && cert.checks.distinct && cert.checks.nef && cert.rank + 1 == g;
    cert.verdict = if ok {
        Verdict::Extremal
    } else {
        Verdict::NotCertified
    };
    cert.family = Some(family);
    cert
}

fn brute_force(spec: &CbDivisorSpec, mut cert: ExtremalityCertificate) -> ExtremalityCertificate {
    let ctx = spec.ctx();
    let target = spec.g() as usize - 1;
    let mut basis = RowReducer::new(spec.g() as usize);
    let mut rows = Vec::new();
    for s in zero_intersection_shapes(spec) {
        if basis.rank() == target {
            break;
        }
        let row = gamma_closed_form(ctx, &s)
            .expect("shape sums to n")
            .to_rats();
        if basis.insert(&row) {
            rows.push(row);
            cert.chosen.push(s);
        }
    }
    cert.rank = basis.rank();
    cert.checks = Checks {
        zeros: cert
            .chosen
            .iter()
            .all(|s| spec.intersect(s).is_ok_and(|v| v == 0)),
        distinct: true,
        nef: f_cone_check(&divisor_class(spec)).is_in_cone,
    };
    if !rows.is_empty() {
        cert.c_matrix = Some(RatMatrix::from_rows(rows).expect("rows have length g"));
    }
    let ok = cert.checks.zeros && cert.checks.nef && cert.rank == target;
    cert.verdict = if ok {
        Verdict::Extremal
    } else {
        Verdict::NotCertified
    };
    cert
}

/// Incremental row echelon basis.
struct RowReducer {
    rows: Vec<(usize, Vec<Rat>)>,
    width: usize,
}

impl RowReducer {
    fn new(width: usize) -> Self {
        RowReducer {
            rows: Vec::new(),
            width,
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the rows so far.
    fn insert(&mut self, v: &[Rat]) -> bool {
        debug_assert_eq!(v.len(), self.width);
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            // Stored rows are normalized to 1 at their pivot.
            let factor = v[*pivot].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&factor * y);
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        self.rows.push((pivot, v));
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetFormulaReport {
    pub expected: Rat,
    pub actual: Rat,
    pub pass: bool,
}

/// Compares `|det|` of the non-unit minor with [`det_formula`].
pub fn det_formula_check(spec: &CbDivisorSpec) -> Result<DetFormulaReport> {
    let expected = det_formula(spec.j(), spec.r())
        .ok_or_else(|| Error::Unsupported(format!("j={} divides n={}", spec.j(), spec.n())))?;
    let family = build_family(spec)?;
    let chat = drop_to_chat(&family, &coefficient_matrix(&family))?;
    let actual = nonunit_minor(&family, &chat).det()?.abs();
    Ok(DetFormulaReport {
        pass: actual == expected,
        expected,
        actual,
    })
}
