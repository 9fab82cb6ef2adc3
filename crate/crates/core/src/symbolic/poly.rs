use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

pub const NUM_VARS: usize = 6;

/// The closed variable set: highest weights and central charges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    H,
    Mu,
    Rho1,
    Rho2,
    Alpha,
    Beta,
}

impl Var {
    pub const ALL: [Var; NUM_VARS] = [Var::H, Var::Mu, Var::Rho1, Var::Rho2, Var::Alpha, Var::Beta];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::H => "h",
            Var::Mu => "mu",
            Var::Rho1 => "rho1",
            Var::Rho2 => "rho2",
            Var::Alpha => "alpha",
            Var::Beta => "beta",
        }
    }
}

/// Exponent vector over [`Var::ALL`], ordered graded-lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; NUM_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NUM_VARS]);

    pub fn var(v: Var) -> Self {
        let mut e = [0; NUM_VARS];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = a.checked_add(b).expect("monomial exponent overflow");
        }
        Monomial(e)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = a.checked_sub(b)?;
        }
        Some(Monomial(e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over the rationals in the six fixed variables.
///
/// No zero coefficient is ever stored, so structural equality is polynomial
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MultiPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::ONE, c);
        }
        p
    }

    pub fn from_int(c: i64) -> Self {
        MultiPoly::constant(Rational::from_integer(c.into()))
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = MultiPoly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    /// The value of a constant polynomial, `None` if any variable occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    /// Variables with a nonzero exponent in some term.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|v| self.terms.keys().any(|m| m.exponent(*v) > 0))
            .collect()
    }

    pub fn uses_only(&self, allowed: &[Var]) -> bool {
        self.variables().iter().all(|v| allowed.contains(v))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    /// Adds `c * other` into `self`.
    pub fn add_scaled(&mut self, other: &MultiPoly, c: &Rational) {
        for (m, a) in &other.terms {
            self.add_term(*m, a * c);
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient `self / divisor` if it is exact, `None` otherwise.
    pub fn try_div(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (lead_m, lead_c) = divisor.leading_term()?;
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lead_m)?;
            let qc = c / lead_c;
            let step = MultiPoly::term(qc.clone(), qm);
            rem -= &(&step * divisor);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Exact quotient; an inexact division is reported as an error.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        if divisor.is_zero() {
            return Err(Error::InvalidArgument("division by the zero polynomial".into()));
        }
        self.try_div(divisor).ok_or(Error::InexactDivision)
    }

    /// Substitutes every variable.
    pub fn eval(&self, point: &[Rational; NUM_VARS]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= point[v].pow(i32::from(e));
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes the variables that have a value, keeping the others symbolic.
    pub fn specialize(&self, values: &[Option<Rational>; NUM_VARS]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = *m;
            for (v, value) in values.iter().enumerate() {
                if let Some(x) = value {
                    if rest.0[v] > 0 {
                        coeff *= x.pow(i32::from(rest.0[v]));
                        rest.0[v] = 0;
                    }
                }
            }
            out.add_term(rest, coeff);
        }
        out
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::from_int(c)
    }
}

impl<'a> Add<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        self -= &rhs;
        self
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl<'a> AddAssign<&'a MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &'a MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &'a MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -self.clone()
    }
}

/// Canonical rendering: descending graded-lex, explicit ` + ` / ` - `,
/// coefficient `1` elided, e.g. `2*rho1^2 + 2*rho2^2 - 1/2*alpha`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut first = true;
            if *m == Monomial::ONE || !abs.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for v in Var::ALL {
                let e = m.exponent(v);
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(v.name())?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use alloc::string::ToString;

    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn rho_sq() -> MultiPoly {
        let r1 = MultiPoly::var(Var::Rho1);
        let r2 = MultiPoly::var(Var::Rho2);
        &(&r1 * &r1) + &(&r2 * &r2)
    }

    #[test]
    fn square_of_variable() {
        let r1 = MultiPoly::var(Var::Rho1);
        assert_eq!((&r1 * &r1).to_string(), "rho1^2");
    }

    #[test]
    fn additive_inverse_vanishes() {
        assert!((&rho_sq() - &rho_sq()).is_zero());
    }

    #[test]
    fn level_one_block_determinant_identity() {
        // rho2 * (2a rho2) - (-rho1)(2a rho1) at a = 3
        let r1 = MultiPoly::var(Var::Rho1);
        let r2 = MultiPoly::var(Var::Rho2);
        let six = MultiPoly::from_int(6);
        let lhs = &(&r2 * &(&six * &r2)) - &(&(-&r1) * &(&six * &r1));
        assert_eq!(lhs, &six * &rho_sq());
    }

    #[test]
    fn exact_division_examples() {
        let p = &MultiPoly::from_int(2) * &rho_sq().pow(2);
        assert_eq!(p.exact_div(&rho_sq()).unwrap(), &MultiPoly::from_int(2) * &rho_sq());
        assert_eq!(p.exact_div(&MultiPoly::one()).unwrap(), p);
        let r1 = MultiPoly::var(Var::Rho1);
        let r2 = MultiPoly::var(Var::Rho2);
        let lhs = &MultiPoly::from_int(6) * &(&(&r1 * &r1) * &r2);
        let rhs = &MultiPoly::from_int(3) * &r1;
        assert_eq!(lhs.exact_div(&rhs).unwrap(), &MultiPoly::from_int(2) * &(&r1 * &r2));
    }

    #[test]
    fn inexact_division_is_an_error() {
        let r1 = MultiPoly::var(Var::Rho1);
        assert_eq!(rho_sq().exact_div(&r1), Err(Error::InexactDivision));
        assert!(r1.exact_div(&MultiPoly::zero()).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let mut pt: [Rational; NUM_VARS] = Default::default();
        pt[Var::Rho1.index()] = q(3, 2);
        pt[Var::Rho2.index()] = q(1, 2);
        assert_eq!(rho_sq().eval(&pt), q(5, 2));

        // alpha * m (m^2 - 1) / 12 at alpha = 1, m = 2
        let virasoro = MultiPoly::var(Var::Alpha).scale(&q(2 * 3, 12));
        let mut pt: [Rational; NUM_VARS] = Default::default();
        pt[Var::Alpha.index()] = q(1, 1);
        assert_eq!(virasoro.eval(&pt), q(1, 2));

        assert_eq!(MultiPoly::from_int(-4).eval(&pt), q(-4, 1));
    }

    #[test]
    fn display_is_canonical() {
        let p = &(&MultiPoly::var(Var::H) * &MultiPoly::var(Var::Mu)).scale(&q(-3, 2))
            + &MultiPoly::from_int(1);
        assert_eq!(p.to_string(), "-3/2*h*mu + 1");
        let p = &MultiPoly::var(Var::Beta) - &MultiPoly::var(Var::Alpha).scale(&q(1, 2));
        assert_eq!(p.to_string(), "-1/2*alpha + beta");
        assert_eq!(MultiPoly::zero().to_string(), "0");
    }

    #[test]
    fn specialize_keeps_symbolic_variables() {
        let p = &rho_sq() + &MultiPoly::var(Var::H);
        let mut vals: [Option<Rational>; NUM_VARS] = Default::default();
        vals[Var::Rho1.index()] = Some(q(2, 1));
        let r2 = MultiPoly::var(Var::Rho2);
        let expected = &(&r2 * &r2) + &(&MultiPoly::var(Var::H) + &MultiPoly::from_int(4));
        assert_eq!(p.specialize(&vals), expected);
    }
}
