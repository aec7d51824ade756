//! Allocations of a fixed budget across `k` categories, and enumeration of
//! every legal allocation under a cap.
//!
//! An [`Allocation`] is ordered (category identity preserved). A [`Partition`]
//! is its canonical non-increasing form; matchup counts only depend on the
//! multiset of values, so partitions index the dominance graph.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default ceiling on the number of strategies any enumeration may produce.
pub const DEFAULT_SPACE_LIMIT: u64 = 100_000_000;

/// Environment variable that overrides [`DEFAULT_SPACE_LIMIT`] in the CLI.
pub const SPACE_LIMIT_ENV: &str = "CAPCYCLE_MAX_SPACE";

/// Upper bound on strategy-space size, checked before anything is enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceLimit(pub u64);

impl Default for SpaceLimit {
    fn default() -> Self {
        SpaceLimit(DEFAULT_SPACE_LIMIT)
    }
}

impl SpaceLimit {
    fn check(self, size: u128) -> Result<()> {
        if size > u128::from(self.0) {
            Err(Error::SpaceTooLarge { size, limit: self.0 })
        } else {
            Ok(())
        }
    }
}

/// One team's strategy: nonnegative integer salaries, one per category.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Allocation {
    values: Vec<u64>,
    budget: u64,
}

impl Allocation {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyAllocation);
        }
        let budget = values
            .iter()
            .try_fold(0u64, |acc, &v| acc.checked_add(v))
            .ok_or(Error::Overflow("allocation budget exceeds u64"))?;
        Ok(Allocation { values, budget })
    }

    /// Validates signed input, rejecting any negative entry.
    pub fn from_signed(values: &[i64]) -> Result<Self> {
        let values = values
            .iter()
            .enumerate()
            .map(|(index, &value)| {
                u64::try_from(value).map_err(|_| Error::NegativeEntry { index, value })
            })
            .collect::<Result<Vec<_>>>()?;
        Allocation::new(values)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// Number of categories.
    pub fn k(&self) -> usize {
        self.values.len()
    }

    pub fn canonicalize(&self) -> Partition {
        let mut values = self.values.clone();
        values.sort_unstable_by(|a, b| b.cmp(a));
        Partition(Allocation {
            values,
            budget: self.budget,
        })
    }

    /// Parenthesised form, e.g. `(4,1,1)`.
    pub fn tuple(&self) -> String {
        format!("({self})")
    }
}

impl fmt::Display for Allocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parses the comma-separated text form, e.g. `"1,1,4"`. Whitespace around
/// entries is ignored.
impl FromStr for Allocation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::EmptyAllocation);
        }
        let parse_err = |reason: String| Error::Parse {
            input: s.to_string(),
            reason,
        };
        let signed = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(parse_err("empty entry".into()));
                }
                tok.parse::<i64>()
                    .map_err(|e| parse_err(format!("{tok:?} is not a whole number ({e})")))
            })
            .collect::<Result<Vec<_>>>()?;
        Allocation::from_signed(&signed)
    }
}

/// Canonical (non-increasing) representative of an allocation's permutation
/// class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Allocation);

impl Partition {
    /// Canonical partition of arbitrary values.
    pub fn new(values: Vec<u64>) -> Result<Self> {
        let a = Allocation::new(values)?;
        Ok(a.canonicalize())
    }

    pub fn as_allocation(&self) -> &Allocation {
        &self.0
    }

    pub fn into_allocation(self) -> Allocation {
        self.0
    }

    pub fn canonicalize(&self) -> Partition {
        self.clone()
    }
}

impl Deref for Partition {
    type Target = Allocation;

    fn deref(&self) -> &Allocation {
        &self.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Exact number of ordered `k`-tuples of nonnegative integers summing to
/// `budget`, i.e. `C(budget + k - 1, k - 1)`.
pub fn composition_count(budget: u64, k: usize) -> Result<u64> {
    let c = composition_count_wide(budget, k)?;
    u64::try_from(c).map_err(|_| Error::Overflow("composition count exceeds u64"))
}

fn composition_count_wide(budget: u64, k: usize) -> Result<u128> {
    if k == 0 {
        return Err(Error::EmptyAllocation);
    }
    let r = (k - 1) as u128;
    let n = budget as u128 + r;
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 1..=r {
        // acc * (n - r + i) is divisible by i at every step
        acc = acc
            .checked_mul(n - r + i)
            .ok_or(Error::Overflow("composition count exceeds u128"))?
            / i;
    }
    Ok(acc)
}

/// Number of partitions of `budget` into exactly `k` nonnegative parts,
/// saturating once it passes `cap`.
pub fn partition_count_capped(budget: u64, k: usize, cap: u64) -> u128 {
    let cap = u128::from(cap) + 1;
    match k {
        0 => return 0,
        1 => return 1,
        2 => return (u128::from(budget) / 2 + 1).min(cap),
        _ => {
            // p(B, <=3 parts) = round((B+3)^2 / 12) bounds the count from below
            let b = u128::from(budget);
            if (b + 3).saturating_mul(b + 3).saturating_add(6) / 12 >= cap {
                return cap;
            }
        }
    }
    let n = budget as usize;
    let parts = k.min(n.max(1));
    // ways[m] = partitions of m into parts of size <= j (equivalently at most j parts)
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for j in 1..=parts {
        for m in j..=n {
            ways[m] = (ways[m] + ways[m - j]).min(cap);
        }
        if ways[n] >= cap {
            return cap;
        }
    }
    ways[n]
}

/// All ordered allocations of `budget` over `k` categories, in
/// lexicographically descending order.
pub fn enumerate_compositions(budget: u64, k: usize, limit: SpaceLimit) -> Result<Vec<Allocation>> {
    let count = match composition_count_wide(budget, k) {
        Ok(c) => c,
        Err(Error::Overflow(_)) => u128::MAX,
        Err(e) => return Err(e),
    };
    limit.check(count)?;
    let mut out = Vec::with_capacity(count as usize);
    let mut buf = vec![0u64; k];
    fill_compositions(&mut buf, 0, budget, &mut out);
    Ok(out)
}

fn fill_compositions(buf: &mut [u64], pos: usize, remaining: u64, out: &mut Vec<Allocation>) {
    if pos + 1 == buf.len() {
        buf[pos] = remaining;
        out.push(Allocation {
            values: buf.to_vec(),
            budget: buf.iter().sum(),
        });
        return;
    }
    for v in (0..=remaining).rev() {
        buf[pos] = v;
        fill_compositions(buf, pos + 1, remaining - v, out);
    }
}

/// All non-increasing allocations of `budget` over `k` categories, in
/// lexicographically descending order.
pub fn enumerate_partitions(budget: u64, k: usize, limit: SpaceLimit) -> Result<Vec<Partition>> {
    if k == 0 {
        return Err(Error::EmptyAllocation);
    }
    let count = partition_count_capped(budget, k, limit.0);
    limit.check(count)?;
    let mut out = Vec::with_capacity(count as usize);
    let mut buf = vec![0u64; k];
    fill_partitions(&mut buf, 0, budget, budget, &mut out);
    Ok(out)
}

fn fill_partitions(buf: &mut [u64], pos: usize, remaining: u64, max: u64, out: &mut Vec<Partition>) {
    let slots = (buf.len() - pos) as u64;
    if slots == 1 {
        buf[pos] = remaining;
        out.push(Partition(Allocation {
            values: buf.to_vec(),
            budget: buf.iter().sum(),
        }));
        return;
    }
    // the head must be at least ceil(remaining / slots) for the tail to fit under it
    let lo = remaining.div_ceil(slots);
    for v in (lo..=max.min(remaining)).rev() {
        buf[pos] = v;
        fill_partitions(buf, pos + 1, remaining - v, v, out);
    }
}
