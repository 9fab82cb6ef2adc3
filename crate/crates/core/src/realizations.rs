//! Concrete realizations: first-order differential operators on Laurent
//! polynomials in `(t, x1, x2, theta)`, and bosons on a Fock-Laurent space.
//!
//! Both are checked by comparing commutators of images with images of
//! brackets on a finite grid of basis vectors.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::algebra::{bracket, AlgebraId, Family, Generator};
use crate::combinatorics::{partitions_of, Partition};
use crate::error::{Error, Result};
use crate::symbolic::{Rational, Var, NUM_VARS};

/// Finite linear combination of basis vectors with no zero terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorImage<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for OperatorImage<K> {
    fn default() -> Self {
        OperatorImage { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> OperatorImage<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn add_term(&mut self, k: K, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, k: &K) -> Rational {
        self.terms.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<K: Ord + fmt::Display> fmt::Display for OperatorImage<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{k}")?;
        }
        Ok(())
    }
}

/// `t^t x1^x1 x2^x2 theta^theta`, Laurent in `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SpaceTimeMonomial {
    pub t: i64,
    pub x1: u32,
    pub x2: u32,
    pub theta: u32,
}

impl SpaceTimeMonomial {
    pub const fn new(t: i64, x1: u32, x2: u32, theta: u32) -> Self {
        SpaceTimeMonomial { t, x1, x2, theta }
    }

    pub fn degree(&self) -> u32 {
        self.x1 + self.x2 + self.theta
    }
}

impl fmt::Display for SpaceTimeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (name, e) in [("t", self.t), ("x1", self.x1 as i64), ("x2", self.x2 as i64), ("theta", self.theta as i64)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn half(n: i64) -> Rational {
    Rational::new(n.into(), 2.into())
}

fn check_vf_algebra(alg: AlgebraId) -> Result<()> {
    match alg {
        AlgebraId::GPlain | AlgebraId::GCheck => Ok(()),
        _ => Err(Error::InvalidArgument(format!("no vector-field realization for {alg}"))),
    }
}

/// Image of a monomial under the vector field of `g`.
pub fn vf_apply(g: &Generator, x: &SpaceTimeMonomial, alg: AlgebraId) -> Result<OperatorImage<SpaceTimeMonomial>> {
    check_vf_algebra(alg)?;
    alg.validate(g)?;
    let m = g.mode;
    let check = alg == AlgebraId::GCheck;
    let mut out = OperatorImage::zero();
    // coefficient * t^dt * x1^d1 * x2^d2 * theta^dth applied after the derivative
    let mut push = |c: Rational, dt: i64, d1: i64, d2: i64, dth: i64| {
        if c.is_zero() {
            return;
        }
        let y = SpaceTimeMonomial::new(
            x.t + dt,
            (x.x1 as i64 + d1) as u32,
            (x.x2 as i64 + d2) as u32,
            (x.theta as i64 + dth) as u32,
        );
        out.add_term(y, c);
    };
    let (e1, e2, eth) = (x.x1 as i64, x.x2 as i64, x.theta as i64);
    match g.family {
        Family::L => {
            push(int(-x.t), m, 0, 0, 0);
            push(int(-(m + 1) * (e1 + e2)), m, 0, 0, 0);
            if check {
                push(int(-2 * m * eth), m, 0, 0, 0);
            }
        }
        Family::J => {
            // -t^m (x1 d2 - x2 d1)
            push(int(-e2), m, 1, -1, 0);
            push(int(e1), m, -1, 1, 0);
        }
        Family::P1 | Family::P2 => {
            let (e, d1, d2) = if g.family == Family::P1 { (e1, -1, 0) } else { (e2, 0, -1) };
            push(int(-e), m + 1, d1, d2, 0);
            if check {
                // -1/2 t^{m-1} sum_j eps_ij x_j d_theta
                if g.family == Family::P1 {
                    push(half(-eth), m - 1, 0, 1, -1);
                } else {
                    push(half(eth), m - 1, 1, 0, -1);
                }
            }
        }
        Family::Theta => push(int(-eth), m, 0, 0, -1),
    }
    Ok(out)
}

/// Bosonic Fock-Laurent basis state:
/// `a_{-k1} a_{-k2} ... cbar^cbar b1bar^b1 b2bar^b2 |a0>`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockState {
    pub a_modes: Partition,
    pub a0: Rational,
    pub cbar: i64,
    pub b1: u32,
    pub b2: u32,
}

impl FockState {
    pub fn new(a_modes: Partition, a0: Rational, cbar: i64, b1: u32, b2: u32) -> Self {
        FockState { a_modes, a0, cbar, b1, b2 }
    }

    pub fn vacuum(a0: Rational) -> Self {
        FockState::new(Partition::empty(), a0, 0, 0, 0)
    }

    pub fn level(&self) -> u32 {
        self.a_modes.degree()
    }

    fn with_modes(&self, parts: Vec<u32>) -> Self {
        FockState { a_modes: Partition::new(parts).expect("positive parts"), ..self.clone() }
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in self.a_modes.parts() {
            write!(f, "a[-{k}]")?;
        }
        write!(f, "cbar^{} b1bar^{} b2bar^{} |a0={}>", self.cbar, self.b1, self.b2, self.a0)
    }
}

/// `a_k` on a basis state.
fn a_op(k: i64, s: &FockState) -> Option<(Rational, FockState)> {
    match k {
        0 => (!s.a0.is_zero()).then(|| (s.a0.clone(), s.clone())),
        k if k < 0 => {
            let mut parts = s.a_modes.parts().to_vec();
            parts.push((-k) as u32);
            Some((Rational::one(), s.with_modes(parts)))
        }
        k => {
            let parts = s.a_modes.parts();
            let n = parts.iter().filter(|&&p| p as i64 == k).count() as i64;
            if n == 0 {
                return None;
            }
            let pos = parts.iter().position(|&p| p as i64 == k).unwrap();
            let mut rest = parts.to_vec();
            rest.remove(pos);
            Some((int(k * n), s.with_modes(rest)))
        }
    }
}

/// `1/2 sum_k :a_k a_{m-k}:`, i.e. `sum_{p<q, p+q=m} a_p a_q` plus
/// `1/2 a_{m/2}^2`. Only pairs whose right factor can act are enumerated.
fn sugawara(m: i64, s: &FockState, out: &mut OperatorImage<FockState>) {
    let mut candidates: Vec<i64> = s.a_modes.parts().iter().map(|&p| p as i64).filter(|&q| 2 * q >= m).collect();
    candidates.extend((m.div_euclid(2) + m.rem_euclid(2)..=0).filter(|&q| 2 * q >= m));
    candidates.sort_unstable();
    candidates.dedup();
    for q in candidates {
        let p = m - q;
        let Some((c1, s1)) = a_op(q, s) else { continue };
        let Some((c2, s2)) = a_op(p, &s1) else { continue };
        let factor = if p == q { half(1) } else { Rational::one() };
        out.add_term(s2, c1 * c2 * factor);
    }
}

/// Image of a basis state under the boson realization at `alpha = beta = 1`.
pub fn boson_apply(g: &Generator, s: &FockState) -> Result<OperatorImage<FockState>> {
    AlgebraId::GHat.validate(g)?;
    let m = g.mode;
    let mut out = OperatorImage::zero();
    let shifted = |dc: i64, d1: i64, d2: i64| FockState {
        cbar: s.cbar + dc,
        b1: (s.b1 as i64 + d1) as u32,
        b2: (s.b2 as i64 + d2) as u32,
        ..s.clone()
    };
    let (b1, b2) = (s.b1 as i64, s.b2 as i64);
    match g.family {
        Family::L => {
            sugawara(m, s, &mut out);
            // -cbar^{m+1} c - (m+1) cbar^m sum_i b_i_bar b_i
            out.add_term(shifted(m, 0, 0), int(-s.cbar));
            out.add_term(shifted(m, 0, 0), int(-(m + 1) * (b1 + b2)));
        }
        Family::J => {
            if let Some((c, t)) = a_op(m, s) {
                out.add_term(t, c);
            }
            // -cbar^m (b1bar b2 - b2bar b1)
            if b2 > 0 {
                out.add_term(shifted(m, 1, -1), int(-b2));
            }
            if b1 > 0 {
                out.add_term(shifted(m, -1, 1), int(b1));
            }
        }
        Family::P1 if b1 > 0 => out.add_term(shifted(m + 1, -1, 0), int(-b1)),
        Family::P2 if b2 > 0 => out.add_term(shifted(m + 1, 0, -1), int(-b2)),
        _ => {}
    }
    Ok(out)
}

/// A commutator that disagrees with the image of the bracket.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationFailure {
    pub x: Generator,
    pub y: Generator,
    pub state: String,
    /// `[X, Y](state) - image([x, y])(state)`.
    pub difference: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationReport {
    pub realization: String,
    pub mode_bound: i64,
    pub state_bound: i64,
    pub pairs_checked: usize,
    pub failures: Vec<RealizationFailure>,
}

impl RealizationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Memo<K: Ord, F> {
    apply: F,
    cache: BTreeMap<(Generator, K), OperatorImage<K>>,
}

impl<K, F> Memo<K, F>
where
    K: Ord + Clone,
    F: FnMut(&Generator, &K) -> Result<OperatorImage<K>>,
{
    fn on_basis(&mut self, g: &Generator, k: &K) -> Result<OperatorImage<K>> {
        let key = (*g, k.clone());
        if let Some(v) = self.cache.get(&key) {
            return Ok(v.clone());
        }
        let v = (self.apply)(g, k)?;
        self.cache.insert(key, v.clone());
        Ok(v)
    }

    fn on(&mut self, g: &Generator, v: &OperatorImage<K>) -> Result<OperatorImage<K>> {
        let mut out = OperatorImage::zero();
        for (k, c) in v.terms() {
            out.add_scaled(&self.on_basis(g, k)?, c);
        }
        Ok(out)
    }
}

/// Compares `[X, Y]` with the image of `[x, y]` in `alg` for every pair
/// `x < y` of `gens` on every state. Central terms are specialized at `central`.
fn check_grid<K, F>(
    name: String,
    alg: AlgebraId,
    mode_bound: i64,
    state_bound: i64,
    states: &[K],
    central: &[Option<Rational>; NUM_VARS],
    apply: F,
) -> Result<RealizationReport>
where
    K: Ord + Clone + fmt::Display,
    F: FnMut(&Generator, &K) -> Result<OperatorImage<K>>,
{
    let gens = alg.generators(mode_bound);
    let mut memo = Memo { apply, cache: BTreeMap::new() };
    let mut report = RealizationReport { realization: name, mode_bound, state_bound, pairs_checked: 0, failures: Vec::new() };
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i + 1..] {
            let br = bracket(x, y, alg)?;
            let c = br
                .central_term()
                .specialize(central)
                .as_constant()
                .ok_or_else(|| Error::InvalidArgument("central term is not numeric".into()))?;
            for s in states {
                let v = OperatorImage::single(s.clone(), Rational::one());
                let yv = memo.on(y, &v)?;
                let xv = memo.on(x, &v)?;
                let mut diff = memo.on(x, &yv)?;
                diff.add_scaled(&memo.on(y, &xv)?, &-Rational::one());
                for (g, k) in br.terms() {
                    let k = k.specialize(central).as_constant().expect("numeric structure constant");
                    diff.add_scaled(&memo.on_basis(g, s)?, &-k);
                }
                diff.add_term(s.clone(), -c.clone());
                report.pairs_checked += 1;
                if !diff.is_zero() {
                    report.failures.push(RealizationFailure {
                        x: *x,
                        y: *y,
                        state: s.to_string(),
                        difference: diff.to_string(),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Homomorphism check of the vector-field realization on monomials with
/// `|t| <= deg_bound` and total `x`/`theta` degree at most `deg_bound`.
pub fn vf_bracket_check(alg: AlgebraId, mode_bound: i64, deg_bound: i64) -> Result<RealizationReport> {
    check_vf_algebra(alg)?;
    if mode_bound < 1 || deg_bound < 1 {
        return Err(Error::InvalidArgument("bounds must be at least 1".into()));
    }
    let d = deg_bound as u32;
    let max_theta = if alg == AlgebraId::GCheck { d } else { 0 };
    let mut states = Vec::new();
    for t in -deg_bound..=deg_bound {
        for x1 in 0..=d {
            for x2 in 0..=d - x1 {
                for th in 0..=max_theta.min(d - x1 - x2) {
                    states.push(SpaceTimeMonomial::new(t, x1, x2, th));
                }
            }
        }
    }
    let none: [Option<Rational>; NUM_VARS] = Default::default();
    check_grid(format!("vf:{alg}"), alg, mode_bound, deg_bound, &states, &none, |g, x| vf_apply(g, x, alg))
}

/// `a0` values used by the boson grid.
pub fn boson_a0_values() -> [Rational; 2] {
    [Rational::zero(), Rational::new(1.into(), 2.into())]
}

/// Homomorphism check of the boson realization at `alpha = beta = 1` on all
/// states with `a`-level and `|cbar|` at most `level_bound` and `bbar`
/// degree at most 2, including the central terms.
pub fn boson_bracket_check(mode_bound: i64, level_bound: i64) -> Result<RealizationReport> {
    if mode_bound < 1 || level_bound < 1 {
        return Err(Error::InvalidArgument("bounds must be at least 1".into()));
    }
    let mut states = Vec::new();
    for a0 in boson_a0_values() {
        for level in 0..=level_bound as u32 {
            for p in partitions_of(level) {
                for cbar in -level_bound..=level_bound {
                    for b1 in 0..=2 {
                        for b2 in 0..=2 - b1 {
                            states.push(FockState::new(p.clone(), a0.clone(), cbar, b1, b2));
                        }
                    }
                }
            }
        }
    }
    let mut central: [Option<Rational>; NUM_VARS] = Default::default();
    central[Var::Alpha.index()] = Some(Rational::one());
    central[Var::Beta.index()] = Some(Rational::one());
    check_grid("boson".into(), AlgebraId::GHat, mode_bound, level_bound, &states, &central, boson_apply)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_modes_annihilate_with_multiplicity() {
        let s = FockState::new(Partition::new(alloc::vec![2, 2, 1]).unwrap(), Rational::zero(), 0, 0, 0);
        let (c, t) = a_op(2, &s).unwrap();
        assert_eq!(c, int(4));
        assert_eq!(t.a_modes.parts(), &[2, 1]);
        assert!(a_op(3, &s).is_none());
        assert!(a_op(0, &s).is_none());
    }

    #[test]
    fn sugawara_zero_mode_counts_level() {
        let s = FockState::new(Partition::new(alloc::vec![3, 1]).unwrap(), half(1), 0, 0, 0);
        let mut out = OperatorImage::zero();
        sugawara(0, &s, &mut out);
        // level + a0^2 / 2
        assert_eq!(out, OperatorImage::single(s.clone(), int(4) + Rational::new(1.into(), 8.into())));
    }

    #[test]
    fn monomial_display() {
        assert_eq!(SpaceTimeMonomial::new(-1, 2, 0, 1).to_string(), "t^-1*x1^2*theta");
        assert_eq!(SpaceTimeMonomial::default().to_string(), "1");
    }
}
