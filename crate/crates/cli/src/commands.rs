use std::fmt::Write as _;
use std::fs;

use cbnef::hassett::theorem_a_check_with_cap;
use cbnef::{
    certify, divisor_class, f_cone_check, fakh_sym_intersect, gamma_closed_form,
    general_weight_vanishing, is_contracted, matrix_m, matrix_n, matrix_p, minimal_hassett,
    nu_profile_symmetric, CbDivisorSpec, ExtremalityCertificate, FCurveShape, Method,
    ModuliContext, Rat, Sample, SetPartition4, WeightVector, DEFAULT_PARTITION_CAP,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::*;
use crate::golden;

/// A failure attributable to the invocation rather than to the mathematics.
#[derive(Debug)]
pub struct UsageError(pub String);

impl From<cbnef::Error> for UsageError {
    fn from(e: cbnef::Error) -> Self {
        UsageError(e.to_string())
    }
}

impl From<std::io::Error> for UsageError {
    fn from(e: std::io::Error) -> Self {
        UsageError(e.to_string())
    }
}

type Result<T> = std::result::Result<T, UsageError>;

pub struct Outcome {
    pub command: &'static str,
    pub params: Value,
    pub result: Value,
    pub text: String,
    /// Printed verbatim instead of the envelope, whatever the format.
    pub raw: Option<String>,
    /// False when a requested check found a violation.
    pub ok: bool,
}

impl Outcome {
    fn new(command: &'static str, params: Value, result: Value, text: String) -> Self {
        Outcome {
            command,
            params,
            result,
            text,
            raw: None,
            ok: true,
        }
    }

    /// Keys come out sorted because `serde_json::Map` is ordered.
    pub fn envelope(&self) -> Value {
        json!({
            "command": self.command,
            "format_version": "1",
            "params": self.params,
            "result": self.result,
        })
    }

    pub fn render(&self, format: Format) -> String {
        if let Some(raw) = &self.raw {
            return raw.clone();
        }
        match format {
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.envelope()).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Text => self.text.clone(),
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("values serialize")
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Class(a) => class(*a),
        Command::Intersect(a) => intersect(a),
        Command::Extremal(a) => extremal(a),
        Command::Nef(a) => nef(*a),
        Command::Basis(a) => basis(a),
        Command::Gamma(a) => gamma(a),
        Command::Hassett(a) => hassett(a),
        Command::Survey(a) => survey(a),
        Command::Golden(a) => golden::write_all(&a.out),
    }
}

fn class(a: NJ) -> Result<Outcome> {
    let spec = CbDivisorSpec::new(a.n, a.j)?;
    let d = divisor_class(&spec);
    let coeffs = d.coeffs();
    let mut text = format!("D^{}_{{1,{}}} =", a.n, a.j);
    for (i, c) in coeffs.iter().enumerate() {
        let _ = write!(
            text,
            "{}({c}) B_{}",
            if i == 0 { " " } else { " + " },
            i + 2
        );
    }
    text.push('\n');
    Ok(Outcome::new(
        "class",
        json!({"n": a.n, "j": a.j}),
        json!({"g": spec.g(), "basis_start": 2, "coefficients": to_value(&coeffs)}),
        text,
    ))
}

fn intersect(a: &IntersectArgs) -> Result<Outcome> {
    let n = a.n;
    match (a.j, &a.weights, &a.shape, &a.partition) {
        (Some(j), None, Some(shape), None) => {
            let s: FCurveShape = shape.parse()?;
            let v = fakh_sym_intersect(n, j, &s)?;
            let nu = nu_profile_symmetric(n, j, &s)?;
            Ok(Outcome::new(
                "intersect",
                json!({"n": n, "j": j, "shape": s.to_string()}),
                json!({"value": v, "nu": nu.values, "nu_sum": nu.sum}),
                format!("D^{n}_{{1,{j}}} . F({s}) = {v}\n"),
            ))
        }
        (Some(j), None, None, Some(p)) => {
            let p: SetPartition4 = p.parse()?;
            check_partition(n, &p)?;
            let s = p.shape();
            let v = fakh_sym_intersect(n, j, &s)?;
            Ok(Outcome::new(
                "intersect",
                json!({"n": n, "j": j, "partition": p.to_string()}),
                json!({"value": v, "shape": s.to_string()}),
                format!("D^{n}_{{1,{j}}} . F({p}) = {v}\n"),
            ))
        }
        (None, Some(w), None, Some(p)) => {
            let w = WeightVector::parse(n, w)?;
            let p: SetPartition4 = p.parse()?;
            check_partition(n, &p)?;
            let zero = general_weight_vanishing(n, w.indices(), &p)?;
            Ok(Outcome::new(
                "intersect",
                json!({"n": n, "weights": w.to_string(), "partition": p.to_string()}),
                json!({"certified_zero": zero}),
                format!(
                    "D^{n}_{{1,w}} . F({p}): {}\n",
                    if zero {
                        "certified zero"
                    } else {
                        "not certified zero"
                    }
                ),
            ))
        }
        (None, Some(_), Some(_), _) => Err(UsageError(
            "--weights needs --partition: general weights see more than the shape".into(),
        )),
        _ => Err(UsageError(
            "give one of --j/--weights and one of --shape/--partition".into(),
        )),
    }
}

fn check_partition(n: u32, p: &SetPartition4) -> Result<()> {
    if p.n() != n {
        return Err(UsageError(format!(
            "partition covers {} points, n={n}",
            p.n()
        )));
    }
    Ok(())
}

fn certificate_text(c: &ExtremalityCertificate) -> String {
    let s = c.summary();
    let verdict = if s.n < 6 {
        "degenerate (n < 6)".to_string()
    } else {
        s.verdict.to_string()
    };
    let mut t = format!(
        "D^{}_{{1,{}}}  (k={}, r={}), method {}\nverdict: {verdict}\n",
        s.n, s.j, s.k, s.r, s.method
    );
    let _ = writeln!(t, "rank {} of {}", s.rank, c.spec.g().saturating_sub(1));
    if let Some(f) = &c.family {
        let _ = writeln!(t, "family: {}", f.tag_string());
    } else if !s.family.is_empty() {
        let _ = writeln!(t, "curves: {}", s.family.join(" "));
    }
    if let Some(d) = c.minor_det_abs() {
        let _ = write!(t, "|det| of minor: {d}");
        if let Some(e) = &s.det_expected {
            let _ = write!(t, " (expected {e})");
        }
        t.push('\n');
    }
    let _ = writeln!(
        t,
        "checks: zeros={} distinct={} nef={}",
        s.checks.zeros, s.checks.distinct, s.checks.nef
    );
    for note in &s.notes {
        let _ = writeln!(t, "note: {note}");
    }
    t
}

fn extremal(a: &ExtremalArgs) -> Result<Outcome> {
    let spec = CbDivisorSpec::new(a.nj.n, a.nj.j)?;
    let method: Method = a.method.into();
    let cert = certify(&spec, method);
    let mut result = to_value(&cert.summary());
    result["degenerate"] = json!(spec.n() < 6);
    let mut out = Outcome::new(
        "extremal",
        json!({"n": a.nj.n, "j": a.nj.j, "method": method.to_string()}),
        result,
        certificate_text(&cert),
    );
    out.ok = !a.expect_extremal || cert.is_extremal();
    Ok(out)
}

fn nef(a: NJ) -> Result<Outcome> {
    let spec = CbDivisorSpec::new(a.n, a.j)?;
    let rep = f_cone_check(&divisor_class(&spec));
    let violations: Vec<String> = rep.violations.iter().map(ToString::to_string).collect();
    let text = if rep.is_in_cone {
        format!(
            "D^{}_{{1,{}}} meets every F-curve nonnegatively\n",
            a.n, a.j
        )
    } else {
        format!("negative on: {}\n", violations.join(" "))
    };
    let mut out = Outcome::new(
        "nef",
        json!({"n": a.n, "j": a.j}),
        json!({"in_f_cone": rep.is_in_cone, "violations": violations}),
        text,
    );
    out.ok = rep.is_in_cone;
    Ok(out)
}

fn basis(a: &BasisArgs) -> Result<Outcome> {
    let ctx = ModuliContext::new(a.n)?;
    let (name, m) = match a.which {
        Which::M => ("M", (*matrix_m(&ctx)?).clone()),
        Which::N => ("N", (*matrix_n(&ctx)?).clone()),
        Which::P => ("P", matrix_p(&ctx)?),
    };
    Ok(Outcome::new(
        "basis",
        json!({"n": a.n, "which": name}),
        json!({"rows": m.rows(), "cols": m.cols(), "entries": to_value(&m)}),
        format!("{name}({}):\n{}", a.n, m),
    ))
}

fn gamma(a: &GammaArgs) -> Result<Outcome> {
    let ctx = ModuliContext::new(a.n)?;
    let s: FCurveShape = a.shape.parse()?;
    let c = gamma_closed_form(&ctx, &s)?;
    Ok(Outcome::new(
        "gamma",
        json!({"n": a.n, "shape": s.to_string()}),
        json!({"gammas": c.gammas()}),
        format!("F({s}) = ({})\n", join(c.gammas())),
    ))
}

fn partition_cap() -> Result<u32> {
    match std::env::var("CBNEF_PARTITION_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("CBNEF_PARTITION_CAP={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_PARTITION_CAP),
    }
}

fn weights(n: u32, s: &str) -> Result<WeightVector> {
    if s.contains(',') {
        Ok(WeightVector::parse(n, s)?)
    } else {
        let j = s
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("bad weight {s:?}")))?;
        Ok(WeightVector::symmetric(n, j)?)
    }
}

fn hassett(a: &HassettArgs) -> Result<Outcome> {
    let n = a.n;
    let w = weights(n, &a.weights)?;
    if let Some(p) = &a.partition {
        let p: SetPartition4 = p.parse()?;
        check_partition(n, &p)?;
        let h = minimal_hassett(n, &w)?;
        let contracted = is_contracted(&h, &p)?;
        let zero = general_weight_vanishing(n, w.indices(), &p)?;
        let mut result = json!({"contracted": contracted, "certified_zero": zero});
        if let Some(j) = w.symmetric_index() {
            result["value"] = json!(fakh_sym_intersect(n, j, &p.shape())?);
        }
        let mut out = Outcome::new(
            "hassett",
            json!({"n": n, "weights": w.to_string(), "partition": p.to_string()}),
            result,
            format!("F({p}): contracted={contracted}, certified zero={zero}\n"),
        );
        out.ok = !contracted || zero;
        return Ok(out);
    }
    let sample = match a.samples {
        Some(count) => Sample::Random {
            count,
            seed: a.seed,
        },
        None => Sample::Exhaustive,
    };
    let rep = theorem_a_check_with_cap(n, &w, sample, partition_cap()?).map_err(|e| match e {
        cbnef::Error::PartitionCapExceeded { .. } => {
            UsageError(format!("{e}; pass --samples or raise CBNEF_PARTITION_CAP"))
        }
        e => e.into(),
    })?;
    let violations: Vec<String> = rep.violations.iter().map(ToString::to_string).collect();
    let mut params = json!({"n": n, "weights": w.to_string()});
    match sample {
        Sample::Exhaustive => params["sample"] = json!("exhaustive"),
        Sample::Random { count, seed } => {
            params["samples"] = json!(count);
            params["seed"] = json!(seed);
        }
    }
    let text = format!(
        "checked {} partitions, {} contracted, {} violations\n",
        rep.checked,
        rep.contracted,
        violations.len()
    );
    let mut out = Outcome::new(
        "hassett",
        params,
        json!({
            "checked": rep.checked,
            "contracted": rep.contracted,
            "cross_checked": rep.cross_checked,
            "violations": violations,
        }),
        text,
    );
    out.ok = rep.passed();
    Ok(out)
}

#[derive(Debug, Serialize)]
struct SurveyRow {
    n: u32,
    j: u32,
    k: u32,
    r: u32,
    method: String,
    verdict: String,
    minor_det: String,
    det_expected: String,
    nef: bool,
    family: String,
}

fn survey_row(n: u32, j: u32, method: Method) -> SurveyRow {
    let spec = CbDivisorSpec::new(n, j).expect("range checked");
    let cert = certify(&spec, method);
    let opt = |r: Option<Rat>| r.map(|v| v.to_string()).unwrap_or_default();
    let family = match &cert.family {
        Some(f) => f.tag_string(),
        None => cert.summary().family.join(" "),
    };
    SurveyRow {
        n,
        j,
        k: spec.k(),
        r: spec.r(),
        method: cert.method.to_string(),
        verdict: if n < 6 {
            "degenerate".into()
        } else {
            cert.verdict.to_string()
        },
        minor_det: opt(cert.minor_det_abs()),
        det_expected: opt(cert.det_expected.clone()),
        nef: f_cone_check(&divisor_class(&spec)).is_in_cone,
        family,
    }
}

fn survey(a: &SurveyArgs) -> Result<Outcome> {
    if a.n_min < 4 || a.n_min > a.n_max {
        return Err(UsageError(format!(
            "need 4 <= n-min <= n-max, got {}..{}",
            a.n_min, a.n_max
        )));
    }
    let cases: Vec<(u32, u32)> = (a.n_min..=a.n_max)
        .flat_map(|n| (2..=n / 2).map(move |j| (n, j)))
        .collect();
    let method: Method = a.method.into();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = a.jobs {
        if jobs == 0 {
            return Err(UsageError("--jobs must be positive".into()));
        }
        pool = pool.num_threads(jobs);
    }
    let pool = pool
        .build()
        .map_err(|e| UsageError(format!("thread pool: {e}")))?;
    // Indexed collect keeps the row order independent of scheduling.
    let rows: Vec<SurveyRow> = pool.install(|| {
        cases
            .par_iter()
            .map(|&(n, j)| survey_row(n, j, method))
            .collect()
    });
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in &rows {
        w.serialize(row).map_err(|e| UsageError(e.to_string()))?;
    }
    let csv = String::from_utf8(w.into_inner().map_err(|e| UsageError(e.to_string()))?)
        .expect("csv is utf-8");
    let extremal = rows.iter().filter(|r| r.verdict == "Extremal").count();
    let all_ok = rows.iter().all(|r| r.verdict == "Extremal" && r.nef);
    let mut out = Outcome::new(
        "survey",
        json!({"n_min": a.n_min, "n_max": a.n_max, "method": method.to_string()}),
        json!({"rows": rows.len(), "extremal": extremal}),
        format!("{} rows, {extremal} extremal\n", rows.len()),
    );
    match &a.out {
        Some(path) => {
            fs::write(path, &csv)?;
            out.params["out"] = json!(path.display().to_string());
        }
        None => out.raw = Some(csv),
    }
    out.ok = !a.expect_extremal || all_ok;
    Ok(out)
}
