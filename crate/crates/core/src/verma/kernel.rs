use alloc::vec::Vec;

use super::basis::{enumerate_basis, BasisOrder};
use super::{check_numeric, StateVector, VermaModule};
use crate::error::Result;
use crate::symbolic::{nullspace, MultiPoly, QMatrix};

impl VermaModule {
    /// Null vectors of the level-`n` Gram matrix at a fully numeric weight.
    pub fn singular_kernel(&self, n: u32) -> Result<Vec<StateVector>> {
        let point = check_numeric(&self.hw)?;
        let gram: QMatrix = self.gram_matrix(n, BasisOrder::Horizontal).eval(&point);
        let basis = enumerate_basis(n, BasisOrder::Horizontal);
        nullspace(&gram)
            .into_iter()
            .map(|v| {
                let terms = basis.iter().cloned().zip(v.into_iter().map(MultiPoly::constant));
                StateVector::from_terms(n, terms)
            })
            .collect()
    }
}
