//! Verma modules over the centrally extended algebra.
//!
//! A basis vector `L_{-A} J_{-B} P1_{-C} P2_{-D} |0>` is labelled by four
//! partitions. The inner product is `<0| omega(X) Y |0>` with `<0|0> = 1`,
//! evaluated by PBW normal ordering (see [`ZeroModeConvention`]).

mod basis;
mod gram;
mod kac;
mod kernel;
mod pbw;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

pub use basis::{blocks, enumerate_basis, BasisOrder, BlockLabel, LevelLayout};
pub use gram::{lj_split_order, p_split_order, EchelonReport};
pub use kac::{kac_power_formula, KacMethod, KacResult, LambdaEntry};
pub use pbw::ZeroModeConvention;

use crate::algebra::{Family, Generator};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::symbolic::{MultiPoly, Rational, Var, NUM_VARS};

/// Highest weight labels and central charges; each may be symbolic or a rational.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HighestWeight {
    values: [Option<Rational>; NUM_VARS],
}

impl HighestWeight {
    /// Every component left as its own polynomial variable.
    pub fn symbolic() -> Self {
        HighestWeight::default()
    }

    pub fn numeric(point: [Rational; NUM_VARS]) -> Self {
        HighestWeight { values: point.map(Some) }
    }

    pub fn with(mut self, v: Var, value: Rational) -> Self {
        self.values[v.index()] = Some(value);
        self
    }

    pub fn get(&self, v: Var) -> Option<&Rational> {
        self.values[v.index()].as_ref()
    }

    pub fn values(&self) -> &[Option<Rational>; NUM_VARS] {
        &self.values
    }

    /// The component as a polynomial: a constant or the bare variable.
    pub fn value(&self, v: Var) -> MultiPoly {
        match self.get(v) {
            Some(x) => MultiPoly::constant(x.clone()),
            None => MultiPoly::var(v),
        }
    }

    pub fn is_numeric(&self) -> bool {
        self.values.iter().all(Option::is_some)
    }

    pub fn point(&self) -> Option<[Rational; NUM_VARS]> {
        if !self.is_numeric() {
            return None;
        }
        Some(core::array::from_fn(|i| self.values[i].clone().unwrap()))
    }

    /// Fills symbolic components from `point`, keeping numeric ones.
    pub fn complete(&self, point: &[Rational; NUM_VARS]) -> [Rational; NUM_VARS] {
        core::array::from_fn(|i| self.values[i].clone().unwrap_or_else(|| point[i].clone()))
    }

    /// Eigenvalue of a zero-mode generator on the highest weight vector.
    pub(crate) fn eigenvalue(&self, family: Family) -> MultiPoly {
        match family {
            Family::L => self.value(Var::H),
            Family::J => self.value(Var::Mu),
            Family::P1 => self.value(Var::Rho1),
            Family::P2 => self.value(Var::Rho2),
            Family::Theta => MultiPoly::zero(),
        }
    }
}

/// PBW monomial `L_{-A} J_{-B} P1_{-C} P2_{-D} |0>`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BasisVector {
    pub a: Partition,
    pub b: Partition,
    pub c: Partition,
    pub d: Partition,
}

impl BasisVector {
    pub fn vacuum() -> Self {
        BasisVector::default()
    }

    pub fn new(a: Partition, b: Partition, c: Partition, d: Partition) -> Self {
        BasisVector { a, b, c, d }
    }

    pub fn level(&self) -> u32 {
        self.a.degree() + self.b.degree() + self.c.degree() + self.d.degree()
    }

    /// Generators left to right, each family with modes of descending magnitude.
    pub fn word(&self) -> Vec<Generator> {
        let mut w = Vec::new();
        for (family, part) in [(Family::L, &self.a), (Family::J, &self.b), (Family::P1, &self.c), (Family::P2, &self.d)] {
            w.extend(part.parts().iter().map(|&k| Generator::new(family, -i64::from(k))));
        }
        w
    }

    /// Inverse of [`BasisVector::word`] for a normal-ordered word of negative modes.
    pub(crate) fn from_word(word: &[Generator]) -> Self {
        let collect = |f: Family| {
            let parts = word.iter().filter(|g| g.family == f).map(|g| (-g.mode) as u32).collect();
            Partition::new(parts).expect("negative modes give positive parts")
        };
        BasisVector::new(collect(Family::L), collect(Family::J), collect(Family::P1), collect(Family::P2))
    }

    /// The vertical counterpart `L_{-D} J_{-C} P1_{-B} P2_{-A} |0>`.
    pub fn vertical(&self) -> BasisVector {
        BasisVector::new(self.d.clone(), self.c.clone(), self.b.clone(), self.a.clone())
    }
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in self.word() {
            write!(f, "{g}")?;
        }
        f.write_str("|0>")
    }
}

/// Linear combination of basis vectors of one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateVector {
    terms: BTreeMap<BasisVector, MultiPoly>,
    level: u32,
}

impl StateVector {
    pub fn zero(level: u32) -> Self {
        StateVector { terms: BTreeMap::new(), level }
    }

    pub fn vacuum() -> Self {
        StateVector::basis(BasisVector::vacuum())
    }

    pub fn basis(v: BasisVector) -> Self {
        let level = v.level();
        let mut terms = BTreeMap::new();
        terms.insert(v, MultiPoly::one());
        StateVector { terms, level }
    }

    pub fn from_terms(level: u32, terms: impl IntoIterator<Item = (BasisVector, MultiPoly)>) -> Result<Self> {
        let mut s = StateVector::zero(level);
        for (v, c) in terms {
            s.add_term(v, &c)?;
        }
        Ok(s)
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisVector, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, v: &BasisVector) -> MultiPoly {
        self.terms.get(v).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, v: BasisVector, c: &MultiPoly) -> Result<()> {
        if v.level() != self.level {
            return Err(Error::DimensionMismatch { expected: self.level as usize, found: v.level() as usize });
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(v.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&v);
        }
        Ok(())
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (v, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match c.as_constant() {
                Some(k) if k == Rational::from_integer(1.into()) => write!(f, "{v}")?,
                _ => write!(f, "({c})*{v}")?,
            }
        }
        Ok(())
    }
}

/// Computations on the Verma module with a fixed highest weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VermaModule {
    hw: HighestWeight,
    convention: ZeroModeConvention,
}

impl VermaModule {
    pub fn new(hw: HighestWeight) -> Self {
        VermaModule { hw, convention: ZeroModeConvention::default() }
    }

    pub fn symbolic() -> Self {
        VermaModule::new(HighestWeight::symbolic())
    }

    pub fn with_convention(mut self, convention: ZeroModeConvention) -> Self {
        self.convention = convention;
        self
    }

    pub fn highest_weight(&self) -> &HighestWeight {
        &self.hw
    }

    pub fn convention(&self) -> &ZeroModeConvention {
        &self.convention
    }

    fn engine(&self) -> pbw::Engine<'_> {
        pbw::Engine::new(&self.hw, &self.convention)
    }

    /// Action of one generator, returned in PBW normal form.
    pub fn act(&self, g: &Generator, v: &StateVector) -> Result<StateVector> {
        if g.family == Family::Theta {
            return Err(Error::InvalidGenerator { generator: *g, algebra: crate::algebra::AlgebraId::GHat });
        }
        let level = i64::from(v.level()) - g.mode;
        let Ok(level) = u32::try_from(level) else {
            return Ok(StateVector::zero(0));
        };
        let mut engine = self.engine();
        let mut out = StateVector::zero(level);
        for (bv, c) in v.terms() {
            for (w, d) in engine.act_on_basis(g, bv) {
                out.add_term(BasisVector::from_word(&w), &(c * &d))?;
            }
        }
        Ok(out)
    }

    /// `<0| omega(X) Y |0>`; vectors of different levels are orthogonal.
    pub fn inner_product(&self, x: &StateVector, y: &StateVector) -> MultiPoly {
        if x.level() != y.level() {
            return MultiPoly::zero();
        }
        let mut engine = self.engine();
        let mut total = MultiPoly::zero();
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                let v = engine.pairing(bx, by);
                if !v.is_zero() {
                    total += &(&(cx * cy) * &v);
                }
            }
        }
        total
    }

    /// Inner product of two basis vectors.
    pub fn pairing(&self, x: &BasisVector, y: &BasisVector) -> MultiPoly {
        if x.level() != y.level() {
            return MultiPoly::zero();
        }
        self.engine().pairing(x, y)
    }
}

fn check_numeric(hw: &HighestWeight) -> Result<[Rational; NUM_VARS]> {
    for v in Var::ALL {
        if hw.get(v).is_none() {
            return Err(Error::SymbolicWeight(v.name()));
        }
    }
    Ok(hw.point().unwrap())
}

pub(crate) fn rho_squared() -> MultiPoly {
    let r1 = MultiPoly::var(Var::Rho1);
    let r2 = MultiPoly::var(Var::Rho2);
    &(&r1 * &r1) + &(&r2 * &r2)
}
