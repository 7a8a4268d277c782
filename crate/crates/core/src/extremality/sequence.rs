use serde::{Deserialize, Serialize};

use super::family::{CurveFamily, CurveTag, Regime};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceKind {
    /// `k >= 3`: adjacent pairs of `F_{i,k,k}` separated by `k-1` or `k-2`
    /// one-one curves.
    Pairs,
    /// `k = 2`: groups `321` and `22` of curve multiplicities.
    Groups,
}

/// The grouping read off a family.
///
/// For [`SequenceKind::Pairs`], `leading` counts the one-one curves before the
/// first pair and `values[i]` is the number of one-one curves after pair `i`.
/// For [`SequenceKind::Groups`], `values` holds the labels `321` or `22` and
/// `betas[i]` counts the `321` groups among `values[..i]`. In both cases
/// `ending` spells out the trailing entries, multiplicities joined, with `~`
/// before the dropped curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSequence {
    pub kind: SequenceKind,
    pub leading: u32,
    pub values: Vec<u32>,
    pub ending: String,
    pub betas: Vec<u32>,
}

fn spell(f: &CurveFamily, from: usize) -> String {
    f.entries()[from..]
        .iter()
        .map(|e| {
            let mark = if Some(e.index) == f.dropped() {
                "~"
            } else {
                ""
            };
            format!("{mark}{}", e.mult)
        })
        .collect()
}

pub fn pair_sequence(f: &CurveFamily) -> Result<PairSequence> {
    match f.regime() {
        Regime::KAtLeastThree => pairs(f),
        Regime::KTwo => groups(f),
        other => Err(Error::Unsupported(format!(
            "no pair sequence for a {other:?} family"
        ))),
    }
}

fn pairs(f: &CurveFamily) -> Result<PairSequence> {
    let k = f.spec().k();
    let bad = |msg: String| Err(Error::Structure(msg));
    let kk: Vec<u32> = f
        .entries()
        .iter()
        .filter(|e| e.tag != CurveTag::OneOne)
        .map(|e| e.index)
        .collect();
    let mut runs: Vec<Vec<u32>> = Vec::new();
    for &i in &kk {
        match runs.last_mut() {
            Some(run) if *run.last().unwrap() + 1 == i => run.push(i),
            _ => runs.push(vec![i]),
        }
    }
    let Some((last, body)) = runs.split_last() else {
        return bad("no k,k-curves".into());
    };
    if let Some(run) = body.iter().find(|r| r.len() != 2) {
        return bad(format!("run {run:?} is not a pair"));
    }
    if last.len() > 2 {
        return bad(format!("final run {last:?} is longer than a pair"));
    }
    let gaps: Vec<u32> = runs
        .windows(2)
        .map(|w| w[1][0] - w[0].last().unwrap() - 1)
        .collect();
    if let Some(gap) = gaps.iter().find(|&&g| g + 1 != k && g + 2 != k) {
        return bad(format!("{gap} one-one curves between pairs, k={k}"));
    }
    let start = (last[0] - 1) as usize;
    Ok(PairSequence {
        kind: SequenceKind::Pairs,
        leading: kk[0] - 1,
        values: gaps,
        ending: spell(f, start),
        betas: Vec::new(),
    })
}

fn groups(f: &CurveFamily) -> Result<PairSequence> {
    let entries = f.entries();
    let mults: Vec<u32> = entries.iter().map(|e| e.mult).collect();
    let dropped_in = |from: usize, len: usize| {
        entries[from..(from + len).min(entries.len())]
            .iter()
            .any(|e| Some(e.index) == f.dropped())
    };
    let mut values = Vec::new();
    let mut pos = 0;
    while pos < entries.len() {
        if mults[pos..].starts_with(&[3, 2, 1]) && !dropped_in(pos, 3) {
            values.push(321);
            pos += 3;
        } else if mults[pos..].starts_with(&[2, 2]) && !dropped_in(pos, 2) {
            values.push(22);
            pos += 2;
        } else {
            break;
        }
    }
    if pos == entries.len() {
        return Err(Error::Structure("family has no final group".into()));
    }
    if !dropped_in(pos, entries.len() - pos) {
        return Err(Error::Structure(format!(
            "cannot group entries from index {}",
            entries[pos].index
        )));
    }
    let mut betas = vec![0];
    for &v in &values {
        betas.push(betas.last().unwrap() + (v == 321) as u32);
    }
    Ok(PairSequence {
        kind: SequenceKind::Groups,
        leading: 0,
        values,
        ending: spell(f, pos),
        betas,
    })
}
