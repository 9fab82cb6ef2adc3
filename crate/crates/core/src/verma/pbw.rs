//! PBW normal-ordering engine.
//!
//! A state is a combination of keys `w Z |0>`, where `w` is a word of
//! negative modes in PBW order (family, then mode ascending) and `Z` a
//! monomial in zero modes. Non-negative modes are commuted to the right;
//! positive modes annihilate `|0>`.
//!
//! The zero-mode subalgebra is not abelian (`[J_0, P^i_0] = eps_ij P^j_0`),
//! so "zero modes act by their eigenvalues" is ambiguous once more than one
//! reaches the vacuum. [`ZeroModeConvention`] fixes a reading.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{BasisVector, HighestWeight};
use crate::algebra::{bracket, AlgebraId, Family, Generator};
use crate::error::Error;
use crate::symbolic::MultiPoly;

/// How zero modes reaching the highest weight vector are evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZeroModeConvention {
    /// Zero modes accumulate as a monomial normal ordered in the given order
    /// and are replaced by eigenvalues only when the vacuum coefficient is read.
    Ordered([Family; 4]),
    /// Each zero mode is replaced by its eigenvalue as soon as it reaches `|0>`.
    Immediate,
}

impl Default for ZeroModeConvention {
    fn default() -> Self {
        ZeroModeConvention::Ordered([Family::L, Family::J, Family::P1, Family::P2])
    }
}

impl fmt::Display for ZeroModeConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZeroModeConvention::Immediate => f.write_str("immediate"),
            ZeroModeConvention::Ordered(order) => {
                f.write_str("ordered:")?;
                for (i, fam) in order.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    f.write_str(fam.name())?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for ZeroModeConvention {
    type Err = Error;

    /// `immediate`, `ordered`, or `ordered:` followed by a permutation of `L,J,P1,P2`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidArgument(String::from("zero-mode convention: ") + s);
        match s {
            "immediate" => return Ok(ZeroModeConvention::Immediate),
            "ordered" => return Ok(ZeroModeConvention::default()),
            _ => {}
        }
        let list = s.strip_prefix("ordered:").ok_or_else(bad)?;
        let mut order = Vec::new();
        for name in list.split(',') {
            let fam = match name.trim() {
                "L" => Family::L,
                "J" => Family::J,
                "P1" => Family::P1,
                "P2" => Family::P2,
                _ => return Err(bad()),
            };
            if order.contains(&fam) {
                return Err(bad());
            }
            order.push(fam);
        }
        let order: [Family; 4] = order.try_into().map_err(|_| bad())?;
        Ok(ZeroModeConvention::Ordered(order))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    neg: Vec<Generator>,
    zero: [u16; 4],
}

type State = BTreeMap<Key, MultiPoly>;

fn add_into(state: &mut State, key: Key, c: &MultiPoly) {
    if c.is_zero() {
        return;
    }
    let slot = state.entry(key.clone()).or_default();
    *slot += c;
    if slot.is_zero() {
        state.remove(&key);
    }
}

pub(super) struct Engine<'a> {
    hw: &'a HighestWeight,
    order: Option<[Family; 4]>,
    eigen: [MultiPoly; 4],
    memo: BTreeMap<(Generator, Key), State>,
}

impl<'a> Engine<'a> {
    pub(super) fn new(hw: &'a HighestWeight, convention: &ZeroModeConvention) -> Self {
        let order = match convention {
            ZeroModeConvention::Ordered(o) => Some(*o),
            ZeroModeConvention::Immediate => None,
        };
        let fams = order.unwrap_or([Family::L, Family::J, Family::P1, Family::P2]);
        let eigen = fams.map(|f| hw.eigenvalue(f));
        Engine { hw, order, eigen, memo: BTreeMap::new() }
    }

    fn position(&self, f: Family) -> usize {
        let order = self.order.expect("ordered convention");
        order.iter().position(|&x| x == f).expect("zero mode of a vacuum-visible family")
    }

    /// `[x, y]` in the extended algebra with central charges substituted.
    fn commutator(&self, x: &Generator, y: &Generator) -> (Vec<(Generator, MultiPoly)>, MultiPoly) {
        let b = bracket(x, y, AlgebraId::GHat).expect("Verma generators lie in the extended algebra");
        let terms = b.terms().map(|(g, c)| (*g, c.clone())).collect();
        (terms, b.central_term().specialize(self.hw.values()))
    }

    fn apply_state(&mut self, g: &Generator, state: &State) -> State {
        let mut out = State::new();
        for (k, c) in state {
            for (k2, d) in self.apply(g, k) {
                add_into(&mut out, k2, &(c * &d));
            }
        }
        out
    }

    fn apply(&mut self, g: &Generator, key: &Key) -> State {
        let memo_key = (*g, key.clone());
        if let Some(hit) = self.memo.get(&memo_key) {
            return hit.clone();
        }
        let out = self.apply_uncached(g, key);
        self.memo.insert(memo_key, out.clone());
        out
    }

    fn apply_uncached(&mut self, g: &Generator, key: &Key) -> State {
        let mut out = State::new();
        let Some(w0) = key.neg.first().copied() else {
            if g.mode > 0 {
                // positive modes pass every zero mode and kill |0>
                return out;
            }
            if g.mode == 0 {
                return self.apply_zero(g, key.zero);
            }
            out.insert(Key { neg: alloc::vec![*g], zero: key.zero }, MultiPoly::one());
            return out;
        };
        if g.mode < 0 && *g <= w0 {
            let mut neg = Vec::with_capacity(key.neg.len() + 1);
            neg.push(*g);
            neg.extend_from_slice(&key.neg);
            out.insert(Key { neg, zero: key.zero }, MultiPoly::one());
            return out;
        }
        // g w0 R = w0 (g R) + [g, w0] R
        let rest = Key { neg: key.neg[1..].to_vec(), zero: key.zero };
        let moved = self.apply(g, &rest);
        for (k, c) in moved {
            for (k2, d) in self.apply(&w0, &k) {
                add_into(&mut out, k2, &(&c * &d));
            }
        }
        let (terms, central) = self.commutator(g, &w0);
        for (h, c) in terms {
            for (k2, d) in self.apply(&h, &rest) {
                add_into(&mut out, k2, &(&c * &d));
            }
        }
        add_into(&mut out, rest, &central);
        out
    }

    /// A zero mode acting on a pure zero-mode state `Z |0>`.
    fn apply_zero(&mut self, g: &Generator, zero: [u16; 4]) -> State {
        let mut out = State::new();
        if self.order.is_none() {
            add_into(&mut out, Key { neg: Vec::new(), zero }, &self.hw.eigenvalue(g.family));
            return out;
        }
        let p = self.position(g.family);
        let Some(q) = (0..p).find(|&i| zero[i] > 0) else {
            let mut z = zero;
            z[p] += 1;
            out.insert(Key { neg: Vec::new(), zero: z }, MultiPoly::one());
            return out;
        };
        // Z = z_q Z' with z_q leftmost: g z_q Z' = z_q (g Z') + [g, z_q] Z'
        let order = self.order.unwrap();
        let zq = Generator::new(order[q], 0);
        let mut rest = zero;
        rest[q] -= 1;
        for (k, c) in self.apply_zero(g, rest) {
            for (k2, d) in self.apply_zero(&zq, k.zero) {
                add_into(&mut out, k2, &(&c * &d));
            }
        }
        let (terms, central) = self.commutator(g, &zq);
        for (h, c) in terms {
            for (k2, d) in self.apply_zero(&h, rest) {
                add_into(&mut out, k2, &(&c * &d));
            }
        }
        add_into(&mut out, Key { neg: Vec::new(), zero: rest }, &central);
        out
    }

    fn zero_value(&self, zero: &[u16; 4]) -> MultiPoly {
        let mut v = MultiPoly::one();
        for (e, ev) in zero.iter().zip(&self.eigen) {
            if *e > 0 {
                v = &v * &ev.pow(u32::from(*e));
            }
        }
        v
    }

    /// `g |v>` with any zero modes at the vacuum replaced by eigenvalues.
    pub(super) fn act_on_basis(&mut self, g: &Generator, v: &BasisVector) -> Vec<(Vec<Generator>, MultiPoly)> {
        let start = Key { neg: v.word(), zero: [0; 4] };
        let mut out: BTreeMap<Vec<Generator>, MultiPoly> = BTreeMap::new();
        for (k, c) in self.apply(g, &start) {
            let value = &c * &self.zero_value(&k.zero);
            let slot = out.entry(k.neg).or_default();
            *slot += &value;
        }
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// `<0| omega(x) y |0>`.
    pub(super) fn pairing(&mut self, x: &BasisVector, y: &BasisVector) -> MultiPoly {
        let mut state = State::new();
        state.insert(Key { neg: y.word(), zero: [0; 4] }, MultiPoly::one());
        // omega(Y_1 ... Y_k) = omega(Y_k) ... omega(Y_1); omega(Y_1) acts first
        for letter in x.word() {
            state = self.apply_state(&letter.omega(), &state);
            if state.is_empty() {
                return MultiPoly::zero();
            }
        }
        let mut total = MultiPoly::zero();
        for (k, c) in &state {
            if k.neg.is_empty() {
                total += &(c * &self.zero_value(&k.zero));
            }
        }
        total
    }
}
