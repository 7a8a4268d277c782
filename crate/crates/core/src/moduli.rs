//! Marked-point counts, F-curve shapes and four-block set partitions.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default largest `n` for which all four-block set partitions are enumerated.
pub const DEFAULT_PARTITION_CAP: u32 = 12;

/// The number of marked points together with `g = floor(n/2) - 1`, the
/// dimension of the symmetric divisor and curve class spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct ModuliContext {
    n: u32,
    g: u32,
}

impl ModuliContext {
    pub fn new(n: u32) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidN(n));
        }
        Ok(ModuliContext { n, g: n / 2 - 1 })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn is_even(&self) -> bool {
        self.n.is_multiple_of(2)
    }

    /// `x` if `x <= g+1`, otherwise `n - x`.
    pub fn fold(&self, x: u32) -> Result<u32> {
        if x > self.n {
            return Err(Error::OutOfRange(format!(
                "fold argument {x} outside 0..={}",
                self.n
            )));
        }
        Ok(self.fold_unchecked(x))
    }

    pub(crate) fn fold_unchecked(&self, x: u32) -> u32 {
        if x <= self.g + 1 {
            x
        } else {
            self.n - x
        }
    }

    /// All shapes `a <= b <= c <= d` with `a + b + c + d = n`, in
    /// lexicographic order.
    pub fn shapes(&self) -> Vec<FCurveShape> {
        let n = self.n;
        let mut out = Vec::new();
        for a in 1..=n / 4 {
            for b in a..=(n - a) / 3 {
                for c in b..=(n - a - b) / 2 {
                    let d = n - a - b - c;
                    out.push(FCurveShape {
                        parts: [a, b, c, d],
                    });
                }
            }
        }
        out
    }

    /// The shape of `F_{i,1,1}`, i.e. `(1, 1, i, n-i-2)` sorted.
    pub fn one_one(&self, i: u32) -> Result<FCurveShape> {
        self.ikk(i, 1)
    }

    /// The shape of `F_{i,k,k}`, i.e. `(i, k, k, n-i-2k)` sorted.
    pub fn ikk(&self, i: u32, k: u32) -> Result<FCurveShape> {
        self.try_ikk(i, k).ok_or_else(|| {
            Error::InvalidShape(format!("F_{{{i},{k},{k}}} does not exist for n={}", self.n))
        })
    }

    pub(crate) fn try_ikk(&self, i: u32, k: u32) -> Option<FCurveShape> {
        if i == 0 || k == 0 || i + 2 * k >= self.n {
            return None;
        }
        Some(FCurveShape::sorted([i, k, k, self.n - i - 2 * k]))
    }

    /// Iterates all partitions of `{1..n}` into four unordered nonempty blocks.
    /// Refuses `n` above [`DEFAULT_PARTITION_CAP`].
    pub fn set_partitions(&self) -> Result<SetPartitions> {
        self.set_partitions_with_cap(DEFAULT_PARTITION_CAP)
    }

    pub fn set_partitions_with_cap(&self, cap: u32) -> Result<SetPartitions> {
        if self.n > cap {
            return Err(Error::PartitionCapExceeded { n: self.n, cap });
        }
        Ok(SetPartitions::new(self.n))
    }

    /// A uniformly random four-block partition of `{1..n}`.
    pub fn random_set_partition<R: Rng + ?Sized>(&self, rng: &mut R) -> SetPartition4 {
        // Surjections onto four labels map 24-to-1 onto unordered partitions,
        // so rejection sampling on labelings is uniform.
        loop {
            let mut blocks: [Vec<u32>; 4] = Default::default();
            for i in 1..=self.n {
                blocks[rng.gen_range(0..4usize)].push(i);
            }
            if blocks.iter().all(|b| !b.is_empty()) {
                return SetPartition4::canonical(self.n, blocks);
            }
        }
    }
}

impl TryFrom<u32> for ModuliContext {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        ModuliContext::new(n)
    }
}

impl From<ModuliContext> for u32 {
    fn from(ctx: ModuliContext) -> u32 {
        ctx.n
    }
}

/// Block sizes `(a, b, c, d)` of an F-curve, sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FCurveShape {
    parts: [u32; 4],
}

impl FCurveShape {
    /// Builds a shape from four positive parts in any order.
    pub fn new(parts: [u32; 4]) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        Ok(Self::sorted(parts))
    }

    /// Like [`FCurveShape::new`] but rejects parts that are not already
    /// ascending.
    pub fn from_sorted(parts: [u32; 4]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not sorted")));
        }
        Self::new(parts)
    }

    fn sorted(mut parts: [u32; 4]) -> Self {
        parts.sort_unstable();
        FCurveShape { parts }
    }

    pub fn parts(&self) -> [u32; 4] {
        self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn a(&self) -> u32 {
        self.parts[0]
    }

    pub fn b(&self) -> u32 {
        self.parts[1]
    }

    pub fn c(&self) -> u32 {
        self.parts[2]
    }

    pub fn d(&self) -> u32 {
        self.parts[3]
    }

    /// Errors unless the parts sum to `ctx.n()`.
    pub fn check_context(&self, ctx: &ModuliContext) -> Result<()> {
        if self.n() == ctx.n() {
            Ok(())
        } else {
            Err(Error::InvalidShape(format!(
                "{self} sums to {} but n={}",
                self.n(),
                ctx.n()
            )))
        }
    }
}

impl fmt::Display for FCurveShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.parts;
        write!(f, "{a},{b},{c},{d}")
    }
}

impl FromStr for FCurveShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<u32> = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| Error::Parse(format!("bad shape {s:?}")))?;
        let parts: [u32; 4] = parts
            .try_into()
            .map_err(|_| Error::Parse(format!("shape {s:?} needs exactly four parts")))?;
        FCurveShape::new(parts)
    }
}

impl Serialize for FCurveShape {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FCurveShape {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A partition of `{1..n}` into four nonempty blocks.
///
/// Stored canonically: each block ascending, blocks ordered by their least
/// element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition4 {
    n: u32,
    blocks: [Vec<u32>; 4],
}

impl SetPartition4 {
    pub fn new(n: u32, blocks: [Vec<u32>; 4]) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidPartition(msg));
        if blocks.iter().any(Vec::is_empty) {
            return bad("empty block".into());
        }
        let mut seen = vec![false; n as usize + 1];
        for &x in blocks.iter().flatten() {
            if x == 0 || x > n {
                return bad(format!("element {x} outside 1..={n}"));
            }
            if std::mem::replace(&mut seen[x as usize], true) {
                return bad(format!("element {x} appears twice"));
            }
        }
        if let Some(missing) = (1..=n).find(|&x| !seen[x as usize]) {
            return bad(format!("element {missing} is missing"));
        }
        Ok(Self::canonical(n, blocks))
    }

    fn canonical(n: u32, mut blocks: [Vec<u32>; 4]) -> Self {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        SetPartition4 { n, blocks }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u32>; 4] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> [u32; 4] {
        [0, 1, 2, 3].map(|i| self.blocks[i].len() as u32)
    }

    pub fn shape(&self) -> FCurveShape {
        FCurveShape::sorted(self.block_sizes())
    }
}

impl fmt::Display for SetPartition4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            let items: Vec<String> = block.iter().map(u32::to_string).collect();
            f.write_str(&items.join(","))?;
        }
        Ok(())
    }
}

/// Parses `"1,2|3|4|5,6"`; `n` is taken to be the number of elements.
impl FromStr for SetPartition4 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks: Vec<Vec<u32>> = s
            .split('|')
            .map(|b| {
                b.split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| t.trim().parse::<u32>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<_, _>>()
            .map_err(|_| Error::Parse(format!("bad partition {s:?}")))?;
        let blocks: [Vec<u32>; 4] = blocks
            .try_into()
            .map_err(|_| Error::Parse(format!("partition {s:?} needs exactly four blocks")))?;
        let n = blocks.iter().map(Vec::len).sum::<usize>() as u32;
        SetPartition4::new(n, blocks)
    }
}

impl Serialize for SetPartition4 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SetPartition4 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Four-block set partitions in lexicographic order of their restricted
/// growth strings.
#[derive(Debug, Clone)]
pub struct SetPartitions {
    rgs: Vec<u8>,
    done: bool,
}

impl SetPartitions {
    fn new(n: u32) -> Self {
        let n = n as usize;
        if n < 4 {
            return SetPartitions {
                rgs: Vec::new(),
                done: true,
            };
        }
        // Smallest string: all zeros, then 1, 2, 3 at the tail.
        let mut rgs = vec![0u8; n];
        rgs[n - 3] = 1;
        rgs[n - 2] = 2;
        rgs[n - 1] = 3;
        SetPartitions { rgs, done: false }
    }

    fn current(&self) -> SetPartition4 {
        let mut blocks: [Vec<u32>; 4] = Default::default();
        for (idx, &l) in self.rgs.iter().enumerate() {
            blocks[l as usize].push(idx as u32 + 1);
        }
        SetPartition4 {
            n: self.rgs.len() as u32,
            blocks,
        }
    }

    fn advance(&mut self) {
        let n = self.rgs.len();
        let mut prefix_max = vec![0u8; n];
        let mut m = 0;
        for (i, &v) in self.rgs.iter().enumerate() {
            m = m.max(v);
            prefix_max[i] = m;
        }
        for i in (1..n).rev() {
            let bound = (prefix_max[i - 1] + 1).min(3);
            let next = self.rgs[i] + 1;
            if next > bound {
                continue;
            }
            let new_max = prefix_max[i - 1].max(next);
            let rest = n - 1 - i;
            let need = (3 - new_max) as usize;
            if need > rest {
                continue;
            }
            self.rgs[i] = next;
            for slot in &mut self.rgs[i + 1..] {
                *slot = 0;
            }
            for t in 0..need {
                self.rgs[n - need + t] = new_max + 1 + t as u8;
            }
            return;
        }
        self.done = true;
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition4;

    fn next(&mut self) -> Option<SetPartition4> {
        if self.done {
            return None;
        }
        let out = self.current();
        self.advance();
        Some(out)
    }
}
