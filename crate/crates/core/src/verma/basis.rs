use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use super::BasisVector;
use crate::combinatorics::{partitions_of, splits, Partition};
use crate::error::Error;

/// Horizontal: blocks of fixed `(A, B)` with `A` spread over `L, J` and `B`
/// over `P1, P2`. Vertical: each horizontal vector `(A, B, C, D)` replaced
/// by `(D, C, B, A)` in the same position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BasisOrder {
    #[default]
    Horizontal,
    Vertical,
}

impl fmt::Display for BasisOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisOrder::Horizontal => "horizontal",
            BasisOrder::Vertical => "vertical",
        })
    }
}

impl FromStr for BasisOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "horizontal" | "h" => Ok(BasisOrder::Horizontal),
            "vertical" | "v" => Ok(BasisOrder::Vertical),
            _ => Err(Error::InvalidArgument(alloc::format!("basis order: {s}"))),
        }
    }
}

/// Block `V^{a,b}_{AB}`: `lj` is spread over `L, J` and `p` over `P1, P2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockLabel {
    pub lj: Partition,
    pub p: Partition,
}

impl BlockLabel {
    pub fn new(lj: Partition, p: Partition) -> Self {
        BlockLabel { lj, p }
    }

    pub fn a(&self) -> u32 {
        self.lj.degree()
    }

    pub fn b(&self) -> u32 {
        self.p.degree()
    }

    /// Horizontal vectors of the block in within-block order.
    pub fn vectors(&self) -> Vec<BasisVector> {
        let mut out = Vec::new();
        for s in splits(&self.lj) {
            for t in splits(&self.p) {
                out.push(BasisVector::new(s.first.clone(), s.second.clone(), t.first.clone(), t.second.clone()));
            }
        }
        // letters L < J < P1 < P2, then mode ascending
        out.sort_by_cached_key(BasisVector::word);
        out
    }
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V[{},{}]{{{},{}}}", self.a(), self.b(), self.lj, self.p)
    }
}

/// All blocks at level `n`, ordered by decreasing `b`, then increasing `B`,
/// then decreasing `A`.
pub fn blocks(n: u32) -> Vec<BlockLabel> {
    let mut out = Vec::new();
    for b in 0..=n {
        for lj in partitions_of(n - b) {
            for p in partitions_of(b) {
                out.push(BlockLabel::new(lj.clone(), p));
            }
        }
    }
    out.sort_by(|x, y| {
        (Reverse(x.b()), &x.p, Reverse(&x.lj)).cmp(&(Reverse(y.b()), &y.p, Reverse(&y.lj)))
    });
    out
}

/// Ordered basis of one level together with its block boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelLayout {
    pub level: u32,
    pub order: BasisOrder,
    pub vectors: Vec<BasisVector>,
    pub blocks: Vec<(BlockLabel, Range<usize>)>,
}

impl LevelLayout {
    pub fn new(level: u32, order: BasisOrder) -> Self {
        let mut vectors = Vec::new();
        let mut ranges = Vec::new();
        for label in blocks(level) {
            let start = vectors.len();
            vectors.extend(label.vectors().into_iter().map(|v| match order {
                BasisOrder::Horizontal => v,
                BasisOrder::Vertical => v.vertical(),
            }));
            ranges.push((label, start..vectors.len()));
        }
        LevelLayout { level, order, vectors, blocks: ranges }
    }

    /// Index of the block containing basis position `i`.
    pub fn block_of(&self, i: usize) -> usize {
        self.blocks.iter().position(|(_, r)| r.contains(&i)).expect("position inside the basis")
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

pub fn enumerate_basis(n: u32, order: BasisOrder) -> Vec<BasisVector> {
    LevelLayout::new(n, order).vectors
}

#[cfg(test)]
mod tests {
    use alloc::string::ToString;
    use alloc::vec;

    use super::*;
    use crate::combinatorics::dim_level;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn dimensions_match_partition_count() {
        for n in 0..=5 {
            assert_eq!(enumerate_basis(n, BasisOrder::Horizontal).len() as u64, dim_level(n));
            assert_eq!(enumerate_basis(n, BasisOrder::Vertical).len() as u64, dim_level(n));
        }
    }

    #[test]
    fn level_one_order() {
        let words: Vec<_> = enumerate_basis(1, BasisOrder::Horizontal).iter().map(|v| v.to_string()).collect();
        assert_eq!(words, vec!["P1[-1]|0>", "P2[-1]|0>", "L[-1]|0>", "J[-1]|0>"]);
        let words: Vec<_> = enumerate_basis(1, BasisOrder::Vertical).iter().map(|v| v.to_string()).collect();
        assert_eq!(words, vec!["J[-1]|0>", "L[-1]|0>", "P2[-1]|0>", "P1[-1]|0>"]);
    }

    #[test]
    fn level_two_block_order() {
        let labels: Vec<_> = blocks(2).iter().map(|b| (b.lj.clone(), b.p.clone())).collect();
        let e = Partition::empty();
        assert_eq!(
            labels,
            vec![
                (e.clone(), part(&[1, 1])),
                (e.clone(), part(&[2])),
                (part(&[1]), part(&[1])),
                (part(&[2]), e.clone()),
                (part(&[1, 1]), e),
            ]
        );
    }

    #[test]
    fn within_block_mode_order() {
        let v: Vec<_> = BlockLabel::new(part(&[2, 1]), Partition::empty()).vectors().iter().map(|v| v.to_string()).collect();
        assert_eq!(v, vec!["L[-2]L[-1]|0>", "L[-2]J[-1]|0>", "L[-1]J[-2]|0>", "J[-2]J[-1]|0>"]);
    }

    #[test]
    fn vertical_is_an_involution() {
        for v in enumerate_basis(3, BasisOrder::Horizontal) {
            assert_eq!(v.vertical().vertical(), v);
        }
    }
}
