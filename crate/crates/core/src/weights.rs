use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("parts {0:?} are not a partition")]
    NotPartition(Vec<i32>),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i32>),
}

/// Weakly decreasing sequence of nonnegative integers, stored without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct Partition(Vec<i32>);

impl Partition {
    pub fn new(mut parts: Vec<i32>) -> Result<Self, WeightError> {
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(WeightError::NotPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[i32] {
        &self.0
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> i32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn padded(&self, width: usize) -> Vec<i32> {
        (0..width.max(self.len())).map(|i| self.part(i)).collect()
    }

    /// Young diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Accepts "311" (single-digit parts) or "3,1,1".
    pub fn parse_compact(s: &str) -> Result<Self, WeightError> {
        let s = s.trim();
        let parts: Option<Vec<i32>> = if s.contains(',') || s.contains(' ') {
            s.split([',', ' ']).filter(|t| !t.is_empty()).map(|t| t.parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as i32)).collect()
        };
        let parts = parts.ok_or_else(|| WeightError::Parse(s.to_string()))?;
        Partition::new(parts).map_err(|_| WeightError::Parse(s.to_string()))
    }

    /// Compact notation: digits padded with zeros to `width` parts.
    pub fn compact(&self, width: usize) -> String {
        let padded = self.padded(width);
        if padded.iter().all(|&p| p < 10) {
            padded.iter().map(|p| p.to_string()).collect()
        } else {
            let v: Vec<String> = padded.iter().map(|p| p.to_string()).collect();
            format!("({})", v.join(","))
        }
    }

    pub fn to_weight(&self, r: usize) -> Result<WeightVec, WeightError> {
        if self.len() > r {
            return Err(WeightError::LengthMismatch { expected: r, found: self.len() });
        }
        Ok(WeightVec(self.padded(r)))
    }
}

impl TryFrom<Vec<i32>> for Partition {
    type Error = WeightError;
    fn try_from(v: Vec<i32>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<i32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{}", self.compact(0))
    }
}

/// Integer weight of fixed rank. Entries may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVec(pub Vec<i32>);

impl WeightVec {
    pub fn zero(r: usize) -> Self {
        WeightVec(vec![0; r])
    }

    /// The unit vector e_i, 1-based.
    pub fn unit(r: usize, i: usize) -> Self {
        let mut v = vec![0; r];
        v[i - 1] = 1;
        WeightVec(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn add(&self, other: &WeightVec) -> Result<WeightVec, WeightError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &WeightVec) -> Result<WeightVec, WeightError> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, k: i32) -> WeightVec {
        WeightVec(self.0.iter().map(|a| a * k).collect())
    }

    fn zip_with(&self, other: &WeightVec, f: impl Fn(i32, i32) -> i32) -> Result<WeightVec, WeightError> {
        if self.rank() != other.rank() {
            return Err(WeightError::LengthMismatch { expected: self.rank(), found: other.rank() });
        }
        Ok(WeightVec(self.0.iter().zip(&other.0).map(|(&a, &b)| f(a, b)).collect()))
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 0) && self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_partition(&self) -> Result<Partition, WeightError> {
        if !self.is_dominant() {
            return Err(WeightError::NotDominant(self.0.clone()));
        }
        Partition::new(self.0.clone())
    }

    pub fn negative_count(&self) -> usize {
        self.0.iter().filter(|&&a| a < 0).count()
    }
}

/// Absolute values sorted decreasingly: the dominant element of the signed-permutation orbit.
pub fn dominant_representative(w: &WeightVec) -> Partition {
    let mut v: Vec<i32> = w.0.iter().map(|a| a.abs()).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(v).expect("sorted absolute values form a partition")
}

fn rowwise(p: &Partition, q: &Partition, f: impl Fn(i32, i32) -> i32) -> Partition {
    let n = p.len().max(q.len());
    Partition::new((0..n).map(|i| f(p.part(i), q.part(i))).collect()).expect("rowwise op keeps partitions")
}

pub fn union_parts(p: &Partition, q: &Partition) -> Partition {
    rowwise(p, q, |a, b| a + b)
}

pub fn intersect_parts(p: &Partition, q: &Partition) -> Partition {
    rowwise(p, q, i32::min)
}

/// `outer / inner` has at most one cell in each row.
pub fn is_vertical_strip(inner: &Partition, outer: &Partition) -> bool {
    outer.contains(inner) && (0..outer.len()).all(|i| outer.part(i) - inner.part(i) <= 1)
}

/// `outer / inner` has at most one cell in each column.
pub fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    outer.contains(inner) && (0..outer.len()).all(|i| inner.part(i) >= outer.part(i + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    Equal,
    /// 1-based row.
    AddBox(usize),
    RemoveBox(usize),
    VerticalStrip,
    HorizontalStrip,
    Other,
}

/// How `q` relates to `p`. Strips are only reported for growth (q ⊇ p).
pub fn step_classify(p: &Partition, q: &Partition) -> StepKind {
    if p == q {
        return StepKind::Equal;
    }
    let n = p.len().max(q.len());
    let diffs: Vec<(usize, i32)> = (0..n).map(|i| (i, q.part(i) - p.part(i))).filter(|&(_, d)| d != 0).collect();
    if let [(row, d)] = diffs[..] {
        if d == 1 {
            return StepKind::AddBox(row + 1);
        }
        if d == -1 {
            return StepKind::RemoveBox(row + 1);
        }
    }
    if is_vertical_strip(p, q) {
        StepKind::VerticalStrip
    } else if is_horizontal_strip(p, q) {
        StepKind::HorizontalStrip
    } else {
        StepKind::Other
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootType {
    B,
    C,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemData {
    pub root_type: RootType,
    pub rank: usize,
    pub simple_roots: Vec<WeightVec>,
}

impl RootSystemData {
    pub fn new(root_type: RootType, rank: usize) -> Self {
        let simple_roots = (1..=rank)
            .map(|i| {
                if i < rank {
                    WeightVec::unit(rank, i).sub(&WeightVec::unit(rank, i + 1)).unwrap()
                } else {
                    match root_type {
                        RootType::B => WeightVec::unit(rank, rank),
                        RootType::C => WeightVec::unit(rank, rank).scale(2),
                    }
                }
            })
            .collect();
        RootSystemData { root_type, rank, simple_roots }
    }

    pub fn simple_root(&self, i: usize) -> &WeightVec {
        &self.simple_roots[i - 1]
    }
}
