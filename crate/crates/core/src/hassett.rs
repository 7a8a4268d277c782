//! Minimal Hassett weights for `D^n_{1,w}` and the contraction check.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intersection::{fakh_unchecked, general_weight_vanishing};
use crate::linalg::Rat;
use crate::moduli::{ModuliContext, SetPartition4, DEFAULT_PARTITION_CAP};

/// Fundamental-weight indices `(j_1, ..., j_n)` with `1 <= j_i <= n/2` and
/// `sum j_i >= 2n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    n: u32,
    indices: Vec<u32>,
}

impl WeightVector {
    pub fn new(n: u32, indices: Vec<u32>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidWeights(msg));
        if indices.len() != n as usize {
            return bad(format!("{} weights for n={n}", indices.len()));
        }
        if let Some(&j) = indices.iter().find(|&&j| j == 0 || j > n / 2) {
            return bad(format!("index {j} outside 1..={}", n / 2));
        }
        let sum: u32 = indices.iter().sum();
        if sum < 2 * n {
            return bad(format!("sum of indices {sum} < 2n = {}", 2 * n));
        }
        Ok(WeightVector { n, indices })
    }

    /// `(j, ..., j)`.
    pub fn symmetric(n: u32, j: u32) -> Result<Self> {
        Self::new(n, vec![j; n as usize])
    }

    /// Parses comma-separated indices.
    pub fn parse(n: u32, s: &str) -> Result<Self> {
        let indices = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad weight list {s:?}")))?;
        Self::new(n, indices)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    /// `Some(j)` when every index equals `j`.
    pub fn symmetric_index(&self) -> Option<u32> {
        let first = self.indices[0];
        self.indices.iter().all(|&j| j == first).then_some(first)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Hassett weights `a_i = j_i / n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HassettWeights {
    n: u32,
    a: Vec<Rat>,
}

impl HassettWeights {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn weights(&self) -> &[Rat] {
        &self.a
    }

    pub fn total(&self) -> Rat {
        self.a.iter().sum()
    }

    fn block_weights(&self, p: &SetPartition4) -> Result<[Rat; 4]> {
        if p.n() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "partition of {} points for n={}",
                p.n(),
                self.n
            )));
        }
        Ok([0, 1, 2, 3].map(|k| p.blocks()[k].iter().map(|&i| &self.a[i as usize - 1]).sum()))
    }
}

pub fn minimal_hassett(n: u32, w: &WeightVector) -> Result<HassettWeights> {
    let w = WeightVector::new(n, w.indices.clone())?;
    let a = w
        .indices
        .iter()
        .map(|&j| Rat::new(j as i64, n as i64))
        .collect();
    Ok(HassettWeights { n, a })
}

/// True iff the three blocks of least cardinality carry total weight at most
/// one. Ties in cardinality keep the partition's block order.
pub fn is_contracted(a: &HassettWeights, p: &SetPartition4) -> Result<bool> {
    let weights = a.block_weights(p)?;
    let mut order = [0usize, 1, 2, 3];
    order.sort_by_key(|&k| p.blocks()[k].len());
    let three: Rat = order[..3].iter().map(|&k| &weights[k]).sum();
    Ok(three <= 1)
}

/// Integer form of [`is_contracted`] for weights `j_i / n`: the three
/// smallest blocks carry at most `n` in total index.
fn contracted_by_indices(n: u32, indices: &[u32], p: &SetPartition4) -> bool {
    let blocks = p.blocks();
    let mut order = [0usize, 1, 2, 3];
    order.sort_by_key(|&k| blocks[k].len());
    let three: u64 = order[..3]
        .iter()
        .flat_map(|&k| &blocks[k])
        .map(|&i| indices[i as usize - 1] as u64)
        .sum();
    three <= n as u64
}

/// Variant of [`is_contracted`] that takes the three blocks of least weight
/// rather than least cardinality. This ordering is not the one used in the
/// contraction criterion and is provided for comparison only.
pub fn is_contracted_by_weight(a: &HassettWeights, p: &SetPartition4) -> Result<bool> {
    let mut weights = a.block_weights(p)?;
    weights.sort();
    let three: Rat = weights[..3].iter().sum();
    Ok(three <= 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sample {
    Exhaustive,
    Random { count: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremAReport {
    pub checked: u64,
    pub contracted: u64,
    /// Contracted partitions whose symmetric intersection was also computed.
    pub cross_checked: u64,
    pub violations: Vec<SetPartition4>,
}

impl TheoremAReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every partition contracted by the minimal Hassett weights, the
/// intersection must be certified zero. With symmetric weights the exact
/// intersection number is checked as well.
pub fn theorem_a_check(n: u32, w: &WeightVector, sample: Sample) -> Result<TheoremAReport> {
    theorem_a_check_with_cap(n, w, sample, DEFAULT_PARTITION_CAP)
}

pub fn theorem_a_check_with_cap(
    n: u32,
    w: &WeightVector,
    sample: Sample,
    cap: u32,
) -> Result<TheoremAReport> {
    let ctx = ModuliContext::new(n)?;
    let w = WeightVector::new(n, w.indices.clone())?;
    let mut report = TheoremAReport {
        checked: 0,
        contracted: 0,
        cross_checked: 0,
        violations: Vec::new(),
    };
    let mut visit = |p: SetPartition4| -> Result<()> {
        report.checked += 1;
        if !contracted_by_indices(n, w.indices(), &p) {
            return Ok(());
        }
        report.contracted += 1;
        let mut ok = general_weight_vanishing(n, w.indices(), &p)?;
        if let Some(j) = w.symmetric_index() {
            report.cross_checked += 1;
            ok &= fakh_unchecked(n, j, &p.shape()) == 0;
        }
        if !ok {
            report.violations.push(p);
        }
        Ok(())
    };
    match sample {
        Sample::Exhaustive => {
            for p in ctx.set_partitions_with_cap(cap)? {
                visit(p)?;
            }
        }
        Sample::Random { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                visit(ctx.random_set_partition(&mut rng))?;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> SetPartition4 {
        s.parse().unwrap()
    }

    #[test]
    fn weight_validation() {
        assert!(WeightVector::symmetric(8, 2).is_ok());
        assert!(WeightVector::symmetric(8, 1).is_err());
        assert!(WeightVector::symmetric(8, 5).is_err());
        assert!(WeightVector::new(8, vec![2; 7]).is_err());
        let w = WeightVector::parse(10, "3,3,3,3,2,2,2,2,2,2").unwrap();
        assert_eq!(w.symmetric_index(), None);
        assert_eq!(w.to_string(), "3,3,3,3,2,2,2,2,2,2");
    }

    #[test]
    fn minimal_weights() {
        let a = minimal_hassett(8, &WeightVector::symmetric(8, 2).unwrap()).unwrap();
        assert!(a.weights().iter().all(|x| *x == Rat::new(1, 4)));
        assert_eq!(a.total(), 2);
        let a = minimal_hassett(20, &WeightVector::symmetric(20, 6).unwrap()).unwrap();
        assert_eq!(a.weights()[0], Rat::new(3, 10));
    }

    #[test]
    fn contraction() {
        let a = minimal_hassett(8, &WeightVector::symmetric(8, 2).unwrap()).unwrap();
        assert!(is_contracted(&a, &part("1|2|3|4,5,6,7,8")).unwrap());
        assert!(!is_contracted(&a, &part("1,2|3,4|5,6|7,8")).unwrap());
        assert!(is_contracted(&a, &part("1|2|3,4|5,6,7,8")).unwrap());
    }

    #[test]
    fn orderings_can_disagree() {
        // Block {1,2} is small by count but heavy by weight.
        let w = WeightVector::new(8, vec![4, 4, 1, 1, 1, 1, 2, 2]).unwrap();
        let a = minimal_hassett(8, &w).unwrap();
        let p = part("1,2|3|4|5,6,7,8");
        assert!(!is_contracted(&a, &p).unwrap());
        assert!(is_contracted_by_weight(&a, &p).unwrap());
    }

    #[test]
    fn integer_and_rational_tests_agree() {
        for idx in [
            vec![2u32; 8],
            vec![4, 4, 1, 1, 1, 1, 2, 2],
            vec![3, 1, 2, 4, 1, 3, 2, 4],
        ] {
            let w = WeightVector::new(8, idx).unwrap();
            let a = minimal_hassett(8, &w).unwrap();
            for p in ModuliContext::new(8).unwrap().set_partitions().unwrap() {
                assert_eq!(
                    contracted_by_indices(8, w.indices(), &p),
                    is_contracted(&a, &p).unwrap()
                );
            }
        }
    }

    #[test]
    fn small_exhaustive_runs() {
        let w = WeightVector::symmetric(8, 2).unwrap();
        let rep = theorem_a_check(8, &w, Sample::Exhaustive).unwrap();
        assert_eq!(rep.checked, 1701);
        assert!(rep.passed());
        assert!(rep.cross_checked > 0);
    }
}
