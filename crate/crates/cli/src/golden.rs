use std::fs;
use std::path::Path;

use clap::Parser;
use serde_json::json;

use crate::args::{Cli, Format};
use crate::commands::{run, Outcome, UsageError};

/// File stem and arguments of every golden case.
pub const CASES: &[(&str, &[&str])] = &[
    ("class_n8_j2", &["class", "--n", "8", "--j", "2"]),
    ("class_n13_j1", &["class", "--n", "13", "--j", "1"]),
    ("class_n5_j2", &["class", "--n", "5", "--j", "2"]),
    (
        "intersect_n20_j6",
        &["intersect", "--n", "20", "--j", "6", "--shape", "1,1,2,16"],
    ),
    (
        "intersect_n8_weights",
        &[
            "intersect",
            "--n",
            "8",
            "--weights",
            "2,2,2,2,2,2,2,2",
            "--partition",
            "1|2|3|4,5,6,7,8",
        ],
    ),
    ("extremal_n25_j7", &["extremal", "--n", "25", "--j", "7"]),
    ("extremal_n48_j17", &["extremal", "--n", "48", "--j", "17"]),
    (
        "extremal_n20_j6_bruteforce",
        &[
            "extremal",
            "--n",
            "20",
            "--j",
            "6",
            "--method",
            "bruteforce",
        ],
    ),
    ("nef_n20_j6", &["nef", "--n", "20", "--j", "6"]),
    ("basis_n13_M", &["basis", "--n", "13", "--which", "M"]),
    ("basis_n12_N", &["basis", "--n", "12", "--which", "N"]),
    ("basis_n12_P", &["basis", "--n", "12", "--which", "P"]),
    ("gamma_n12", &["gamma", "--n", "12", "--shape", "1,2,2,7"]),
    ("gamma_n62", &["gamma", "--n", "62", "--shape", "9,9,19,25"]),
    ("hassett_n8_j2", &["hassett", "--n", "8", "--weights", "2"]),
    (
        "hassett_n10_mixed",
        &["hassett", "--n", "10", "--weights", "3,3,3,3,2,2,2,2,2,2"],
    ),
    (
        "hassett_n12_sampled",
        &[
            "hassett",
            "--n",
            "12",
            "--weights",
            "2",
            "--samples",
            "2000",
            "--seed",
            "7",
        ],
    ),
    (
        "survey_n6_n16",
        &["survey", "--n-min", "6", "--n-max", "16"],
    ),
];

pub fn render_case(args: &[&str]) -> Result<(String, &'static str), UsageError> {
    let argv = std::iter::once("cbnef").chain(args.iter().copied());
    let cli = Cli::try_parse_from(argv).map_err(|e| UsageError(e.to_string()))?;
    let out = run(&cli)?;
    let ext = if out.raw.is_some() { "csv" } else { "json" };
    Ok((out.render(Format::Json), ext))
}

pub fn write_all(dir: &Path) -> Result<Outcome, UsageError> {
    fs::create_dir_all(dir)?;
    let mut files = Vec::new();
    for (name, args) in CASES {
        let (body, ext) = render_case(args)?;
        let file = format!("{name}.{ext}");
        fs::write(dir.join(&file), body)?;
        files.push(file);
    }
    let text = format!("wrote {} files to {}\n", files.len(), dir.display());
    Ok(Outcome {
        command: "golden",
        params: json!({"out": dir.display().to_string()}),
        result: json!({"files": files}),
        text,
        raw: None,
        ok: true,
    })
}
