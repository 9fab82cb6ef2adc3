use alloc::vec::Vec;

use super::basis::{blocks, BasisOrder, BlockLabel, LevelLayout};
use super::{BasisVector, VermaModule};
use crate::combinatorics::{splits, Partition, SplitPair};
use crate::symbolic::{MultiPoly, PolyMatrix};

/// Row order of `M(A)`: splits of `A` between `L` and `J`, `J`-heavy first.
///
/// Chosen so that `M((a))` reads `[[rho2, -rho1], [2a rho1, 2a rho2]]`.
pub fn lj_split_order(a: &Partition) -> Vec<SplitPair> {
    let mut s = splits(a);
    s.reverse();
    s
}

/// Column order of `M(A)`: splits of `A` between `P1` and `P2`, `P1`-heavy first.
pub fn p_split_order(a: &Partition) -> Vec<SplitPair> {
    splits(a)
}

fn lj_vector(s: &SplitPair) -> BasisVector {
    BasisVector::new(s.first.clone(), s.second.clone(), Partition::empty(), Partition::empty())
}

fn p_vector(s: &SplitPair) -> BasisVector {
    BasisVector::new(Partition::empty(), Partition::empty(), s.first.clone(), s.second.clone())
}

/// Outcome of the block row-echelon test on the mixed matrix `M_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonReport {
    pub level: u32,
    pub blocks: usize,
    pub entries_checked: usize,
    /// `(row, col)` of nonzero entries strictly below the block diagonal.
    pub violations: Vec<(usize, usize)>,
}

impl EchelonReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl VermaModule {
    /// Gram matrix of `bras` against `kets`.
    pub fn pairing_matrix(&self, bras: &[BasisVector], kets: &[BasisVector]) -> PolyMatrix {
        let mut engine = self.engine();
        PolyMatrix::from_fn(bras.len(), kets.len(), |i, j| {
            if bras[i].level() == kets[j].level() {
                engine.pairing(&bras[i], &kets[j])
            } else {
                MultiPoly::zero()
            }
        })
    }

    /// Level-`n` Gram matrix with horizontal kets and bras in the given order.
    ///
    /// Vertical bras give the mixed matrix `M_n`.
    pub fn gram_matrix(&self, n: u32, bras: BasisOrder) -> PolyMatrix {
        let rows = LevelLayout::new(n, bras);
        let cols = LevelLayout::new(n, BasisOrder::Horizontal);
        self.pairing_matrix(&rows.vectors, &cols.vectors)
    }

    pub fn echelon_check(&self, n: u32) -> EchelonReport {
        let rows = LevelLayout::new(n, BasisOrder::Vertical);
        let cols = LevelLayout::new(n, BasisOrder::Horizontal);
        let mut engine = self.engine();
        let mut violations = Vec::new();
        let mut checked = 0;
        for (bi, (_, rr)) in rows.blocks.iter().enumerate() {
            for (_, cr) in &cols.blocks[..bi] {
                for i in rr.clone() {
                    for j in cr.clone() {
                        checked += 1;
                        if !engine.pairing(&rows.vectors[i], &cols.vectors[j]).is_zero() {
                            violations.push((i, j));
                        }
                    }
                }
            }
        }
        EchelonReport { level: n, blocks: rows.blocks.len(), entries_checked: checked, violations }
    }

    /// `M(A) = (<(LJ)_{-A} | (P1 P2)_{-A}>)`, rows [`lj_split_order`], columns [`p_split_order`].
    pub fn lj_matrix(&self, a: &Partition) -> PolyMatrix {
        let bras: Vec<_> = lj_split_order(a).iter().map(lj_vector).collect();
        let kets: Vec<_> = p_split_order(a).iter().map(p_vector).collect();
        self.pairing_matrix(&bras, &kets)
    }

    /// `M~(B) = (<(P1 P2)_{-B} | (LJ)_{-B}>)`, rows [`p_split_order`], columns [`lj_split_order`].
    pub fn p_matrix(&self, b: &Partition) -> PolyMatrix {
        let bras: Vec<_> = p_split_order(b).iter().map(p_vector).collect();
        let kets: Vec<_> = lj_split_order(b).iter().map(lj_vector).collect();
        self.pairing_matrix(&bras, &kets)
    }

    /// The two factors `(M(A), M~(B))` of a diagonal block of `M_n`.
    pub fn block_matrices(&self, label: &BlockLabel) -> (PolyMatrix, PolyMatrix) {
        (self.lj_matrix(&label.lj), self.p_matrix(&label.p))
    }

    /// Block pairs `(bra, ket)` at level `n` where some horizontal cross
    /// product is nonzero although the vanishing conditions (`a < d`, or
    /// `a = d` with `A > D` or `B < C`) hold.
    pub fn vanishing_check(&self, n: u32) -> Vec<(BlockLabel, BlockLabel)> {
        let mut engine = self.engine();
        let labels = blocks(n);
        let mut failures = Vec::new();
        for x in &labels {
            for y in &labels {
                let (a, d) = (x.a(), y.b());
                let applies = a < d || (a == d && (x.lj > y.p || x.p < y.lj));
                if !applies {
                    continue;
                }
                let bad = x.vectors().iter().any(|u| y.vectors().iter().any(|v| !engine.pairing(u, v).is_zero()));
                if bad {
                    failures.push((x.clone(), y.clone()));
                }
            }
        }
        failures
    }

    /// Blocks at level `n` where
    /// `<(LJ)_{-A}(P1P2)_{-B} | (LJ)_{-B}(P1P2)_{-A}>` differs from
    /// `<(LJ)_{-A}|(P1P2)_{-A}> <(P1P2)_{-B}|(LJ)_{-B}>` for some choice of splits.
    pub fn factorization_check(&self, n: u32) -> Vec<BlockLabel> {
        let mut engine = self.engine();
        let mut failures = Vec::new();
        for label in blocks(n) {
            let (a, b) = (&label.lj, &label.p);
            let mut ok = true;
            'outer: for sa in splits(a) {
                for sb in splits(b) {
                    let bra = BasisVector::new(sa.first.clone(), sa.second.clone(), sb.first.clone(), sb.second.clone());
                    for ta in splits(a) {
                        for tb in splits(b) {
                            let ket = BasisVector::new(tb.first.clone(), tb.second.clone(), ta.first.clone(), ta.second.clone());
                            let whole = engine.pairing(&bra, &ket);
                            let left = engine.pairing(&lj_vector(&sa), &p_vector(&ta));
                            let right = engine.pairing(&p_vector(&sb), &lj_vector(&tb));
                            if whole != &left * &right {
                                ok = false;
                                break 'outer;
                            }
                        }
                    }
                }
            }
            if !ok {
                failures.push(label);
            }
        }
        failures
    }
}
