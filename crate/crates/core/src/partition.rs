use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use thiserror::Error;

/// One shard of a sweep: block `index` of `count` contiguous blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partition {
    index: usize,
    count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid partition {0:?}: expected k/m with 1 <= k <= m")]
pub struct PartitionError(pub String);

impl Partition {
    pub const WHOLE: Partition = Partition { index: 0, count: 1 };

    /// Block `index` (0-based) of `count`.
    pub fn new(index: usize, count: usize) -> Option<Self> {
        (count > 0 && index < count).then_some(Partition { index, count })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// The sub-range of `0..total` owned by this shard. Shards tile the range.
    pub fn range(&self, total: u64) -> Range<u64> {
        let lo = total as u128 * self.index as u128 / self.count as u128;
        let hi = total as u128 * (self.index as u128 + 1) / self.count as u128;
        lo as u64..hi as u64
    }
}

impl Default for Partition {
    fn default() -> Self {
        Partition::WHOLE
    }
}

/// Parses the 1-based `k/m` notation used on the command line.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PartitionError(s.to_string());
        let (k, m) = s.split_once('/').ok_or_else(err)?;
        let k: usize = k.trim().parse().map_err(|_| err())?;
        let m: usize = m.trim().parse().map_err(|_| err())?;
        if k == 0 {
            return Err(err());
        }
        Partition::new(k - 1, m).ok_or_else(err)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.index + 1, self.count)
    }
}
