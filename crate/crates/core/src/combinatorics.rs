//! Integer partitions, their ordering and two-way multiset splits.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers; empty is `phi`.
///
/// The derived ordering is lexicographic on the parts. Because parts are
/// positive this coincides with comparing after padding the shorter sequence
/// with zeros, so on partitions of one integer it is exactly the partition
/// order (`A > B` when the first nonzero `a_i - b_i` is positive).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the parts into weakly decreasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(value, multiplicity)` for each distinct part, largest value first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiset union.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("phi");
        }
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Two-way split `(first, second)` of a partition's parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplitPair {
    pub first: Partition,
    pub second: Partition,
}

/// All partitions of `n`, strictly descending in the partition order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn compare_partitions(a: &Partition, b: &Partition) -> Result<Ordering> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch { left: a.degree(), right: b.degree() });
    }
    Ok(a.cmp(b))
}

/// All distinct multiset splits, sorted by descending first component.
///
/// Copies of a repeated part are indistinguishable, so `(1 1)` has three
/// splits, not four.
pub fn splits(a: &Partition) -> Vec<SplitPair> {
    let mults = a.multiplicities();
    let mut out = Vec::with_capacity(split_count(a));
    let mut take = vec![0usize; mults.len()];
    loop {
        let mut first = Vec::new();
        let mut second = Vec::new();
        for (&(value, m), &t) in mults.iter().zip(&take) {
            first.extend(core::iter::repeat_n(value, t));
            second.extend(core::iter::repeat_n(value, m - t));
        }
        out.push(SplitPair { first: Partition(first), second: Partition(second) });

        // odometer over 0..=m_k
        let mut k = 0;
        while k < take.len() && take[k] == mults[k].1 {
            take[k] = 0;
            k += 1;
        }
        if k == take.len() {
            break;
        }
        take[k] += 1;
    }
    out.sort_by(|x, y| y.first.cmp(&x.first));
    out
}

/// `s(A) = prod_k (m_k + 1)` over the multiplicities of distinct parts.
pub fn split_count(a: &Partition) -> usize {
    a.multiplicities().iter().map(|&(_, m)| m + 1).product()
}

/// Partition numbers `p(0), ..., p(n)`.
pub fn partition_counts(n: u32) -> Vec<u64> {
    let n = n as usize;
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            p[total] += p[total - part];
        }
    }
    p
}

/// Dimension of the level-`n` subspace: sum of `p(a)p(b)p(c)p(d)` over
/// `a + b + c + d = n`.
pub fn dim_level(n: u32) -> u64 {
    let p = partition_counts(n);
    let n = n as usize;
    let mut total = 0;
    for a in 0..=n {
        for b in 0..=n - a {
            for c in 0..=n - a - b {
                let d = n - a - b - c;
                total += p[a] * p[b] * p[c] * p[d];
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use alloc::string::ToString;

    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn partitions_of_small_integers() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partition_counts(10), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn ordering_examples() {
        assert_eq!(compare_partitions(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), Ordering::Greater);
        assert_eq!(compare_partitions(&part(&[2, 1]), &part(&[2, 1])).unwrap(), Ordering::Equal);
        assert_eq!(compare_partitions(&part(&[3]), &part(&[2, 1])).unwrap(), Ordering::Greater);
        assert!(compare_partitions(&part(&[3]), &part(&[1])).is_err());
    }

    #[test]
    fn splits_of_repeated_part() {
        let s = splits(&part(&[1, 1]));
        let expected = vec![
            SplitPair { first: part(&[1, 1]), second: Partition::empty() },
            SplitPair { first: part(&[1]), second: part(&[1]) },
            SplitPair { first: Partition::empty(), second: part(&[1, 1]) },
        ];
        assert_eq!(s, expected);
    }

    #[test]
    fn splits_of_empty() {
        let s = splits(&Partition::empty());
        assert_eq!(s, vec![SplitPair { first: Partition::empty(), second: Partition::empty() }]);
        assert_eq!(split_count(&Partition::empty()), 1);
    }

    #[test]
    fn split_counts() {
        for a in 1..6 {
            assert_eq!(split_count(&part(&[a])), 2);
        }
        assert_eq!(split_count(&part(&[2, 1])), 4);
        assert_eq!(split_count(&part(&[1, 1, 1])), 4);
        assert_eq!(split_count(&part(&[2, 2, 1])), 6);
    }

    #[test]
    fn dimension_table() {
        let dims: Vec<u64> = (0..=5).map(dim_level).collect();
        assert_eq!(dims, vec![1, 4, 14, 40, 105, 252]);
    }

    #[test]
    fn text_form() {
        assert_eq!(Partition::empty().to_string(), "phi");
        assert_eq!(part(&[1, 2, 1]).to_string(), "(2 1 1)");
    }

    #[test]
    fn zero_part_rejected() {
        assert!(Partition::new(vec![2, 0]).is_err());
    }
}
