//! Integer partitions in the canonical order used for every functional,
//! vector and matrix in the crate: parts stored in non-increasing order,
//! partitions of the same weight sorted lexicographically.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// Drops zero parts, then sorts.
    pub fn from_parts_lossy(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn single(n: u32) -> Self {
        Self::from_parts_lossy([n])
    }

    /// Parses `"2,1,1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn contains(&self, part: u32) -> bool {
        self.0.contains(&part)
    }

    /// Multiset union; as Chern monomials this is multiplication.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn conjugate(&self) -> Partition {
        let largest = self.largest();
        Partition((1..=largest).map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32).collect())
    }

    /// Monomial notation, e.g. `c1^2*c2`; the empty partition prints as `1`.
    pub fn chern_monomial(&self) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut out = Vec::new();
        let mut ascending = self.0.clone();
        ascending.reverse();
        let mut i = 0;
        while i < ascending.len() {
            let p = ascending[i];
            let run = ascending[i..].iter().take_while(|&&q| q == p).count();
            if run == 1 {
                out.push(format!("c{p}"));
            } else {
                out.push(format!("c{p}^{run}"));
            }
            i += run;
        }
        out.join("*")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in canonical order. `partitions(0)` is `[()]`.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out.sort();
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// p(n) from Euler's pentagonal recurrence.
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc = 0i64;
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                acc += sign * p[m - g2];
            }
            k += 1;
        }
        p[m] = acc;
    }
    p[n] as u64
}

/// Ordered tuple of nonnegative integers; the order is significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightedTuple(pub Vec<u32>);

impl WeightedTuple {
    pub fn new(entries: Vec<u32>) -> Self {
        WeightedTuple(entries)
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad tuple entry `{t}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(WeightedTuple)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// All ordered `len`-tuples of nonnegative integers summing to `total`.
pub fn compositions(total: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0; len];
    compose(total, 0, &mut current, &mut out);
    out
}

fn compose(remaining: u32, idx: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if idx + 1 >= current.len() {
        if let Some(last) = current.last_mut() {
            *last = remaining;
            out.push(current.clone());
        } else if remaining == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for v in 0..=remaining {
        current[idx] = v;
        compose(remaining - v, idx + 1, current, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_of_four() {
        let got: Vec<_> = partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(got, ["(1,1,1,1)", "(2,1,1)", "(2,2)", "(3,1)", "(4)"]);
    }

    #[test]
    fn counts_match_enumeration() {
        for n in 0..=15 {
            assert_eq!(partitions(n).len() as u64, partition_count(n), "n={n}");
        }
        assert_eq!(partition_count(8), 22);
        assert_eq!(partition_count(12), 77);
    }

    #[test]
    fn rejects_zero_parts() {
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::parse("1,x").is_err());
    }

    #[test]
    fn monomial_names() {
        assert_eq!(Partition::parse("1,2,1").unwrap().chern_monomial(), "c1^2*c2");
        assert_eq!(Partition::parse("4").unwrap().chern_monomial(), "c4");
        assert_eq!(Partition::empty().chern_monomial(), "1");
    }

    #[test]
    fn conjugate_involution() {
        for p in partitions(7) {
            assert_eq!(p.conjugate().conjugate(), p);
            assert_eq!(p.conjugate().weight(), 7);
        }
    }

    #[test]
    fn composition_count() {
        // C(total + len - 1, len - 1)
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(0, 2), vec![vec![0, 0]]);
    }
}
