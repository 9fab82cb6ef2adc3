//! Structure constants of the Galilean conformal algebras.
//!
//! Five algebras share one generator alphabet `L[m]`, `J[m]`, `P1[m]`, `P2[m]`,
//! `Theta[m]`:
//!
//! | id                 | brackets                                                         |
//! |--------------------|------------------------------------------------------------------|
//! | `g-plain`          | `L`, `J`, `P` relations, no central terms                        |
//! | `g-hat`            | `g-plain` plus `alpha/12 m(m^2-1)` on `[L,L]` and `beta m` on `[J,J]` |
//! | `g-check`          | `g-plain` plus `[P^i_m, P^j_n] = eps_ij Theta_{m+n}` and `[L_m, Theta_n] = (2m-n) Theta_{m+n}` |
//! | `g-check-extended` | `g-check` with the same two central terms as `g-hat`              |
//! | `g0-exotic`        | the ten-dimensional finite subalgebra with central `Theta`       |
//!
//! The rotation tensor is `eps_12 = -eps_21 = 1`, `eps_11 = eps_22 = 0`.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;


use crate::error::{Error, Result};
use crate::symbolic::{MultiPoly, Rational, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    L,
    J,
    P1,
    P2,
    Theta,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::L, Family::J, Family::P1, Family::P2, Family::Theta];

    pub fn name(self) -> &'static str {
        match self {
            Family::L => "L",
            Family::J => "J",
            Family::P1 => "P1",
            Family::P2 => "P2",
            Family::Theta => "Theta",
        }
    }

    /// Index `i` of `P^i`.
    fn p_index(self) -> Option<u8> {
        match self {
            Family::P1 => Some(1),
            Family::P2 => Some(2),
            _ => None,
        }
    }

    fn p(i: u8) -> Family {
        if i == 1 {
            Family::P1
        } else {
            Family::P2
        }
    }
}

/// `eps_12 = -eps_21 = 1`, zero on the diagonal.
pub fn epsilon(i: u8, j: u8) -> i64 {
    match (i, j) {
        (1, 2) => 1,
        (2, 1) => -1,
        _ => 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub family: Family,
    pub mode: i64,
}

impl Generator {
    pub const fn new(family: Family, mode: i64) -> Self {
        Generator { family, mode }
    }

    pub const fn l(mode: i64) -> Self {
        Generator::new(Family::L, mode)
    }

    pub const fn j(mode: i64) -> Self {
        Generator::new(Family::J, mode)
    }

    pub const fn p1(mode: i64) -> Self {
        Generator::new(Family::P1, mode)
    }

    pub const fn p2(mode: i64) -> Self {
        Generator::new(Family::P2, mode)
    }

    pub const fn theta(mode: i64) -> Self {
        Generator::new(Family::Theta, mode)
    }

    /// Grading degree, `deg X_n = -n`.
    pub fn degree(&self) -> i64 {
        -self.mode
    }

    pub fn omega(&self) -> Generator {
        Generator::new(self.family, -self.mode)
    }
}

pub fn degree(x: &Generator) -> i64 {
    x.degree()
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.family.name(), self.mode)
    }
}

impl FromStr for Generator {
    type Err = Error;

    /// Parses `L[m]`, `J[m]`, `P1[m]`, `P2[m]` or `Theta[m]`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::ParseGenerator(s.to_string());
        let s = s.trim();
        let (name, rest) = s.split_once('[').ok_or_else(err)?;
        let mode = rest.strip_suffix(']').ok_or_else(err)?.trim().parse().map_err(|_| err())?;
        let family = match name {
            "L" => Family::L,
            "J" => Family::J,
            "P1" => Family::P1,
            "P2" => Family::P2,
            "Theta" => Family::Theta,
            _ => return Err(err()),
        };
        Ok(Generator::new(family, mode))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgebraId {
    GPlain,
    GHat,
    GCheck,
    GCheckExtended,
    G0Exotic,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 5] = [
        AlgebraId::GPlain,
        AlgebraId::GHat,
        AlgebraId::GCheck,
        AlgebraId::GCheckExtended,
        AlgebraId::G0Exotic,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            AlgebraId::GPlain => "g-plain",
            AlgebraId::GHat => "g-hat",
            AlgebraId::GCheck => "g-check",
            AlgebraId::GCheckExtended => "g-check-extended",
            AlgebraId::G0Exotic => "g0-exotic",
        }
    }

    fn has_theta_family(self) -> bool {
        matches!(self, AlgebraId::GCheck | AlgebraId::GCheckExtended)
    }

    fn has_central_charges(self) -> bool {
        matches!(self, AlgebraId::GHat | AlgebraId::GCheckExtended)
    }

    pub fn is_valid(self, g: &Generator) -> bool {
        match self {
            AlgebraId::GPlain | AlgebraId::GHat => g.family != Family::Theta,
            AlgebraId::GCheck | AlgebraId::GCheckExtended => true,
            AlgebraId::G0Exotic => match g.family {
                Family::L | Family::P1 | Family::P2 => (-1..=1).contains(&g.mode),
                Family::J | Family::Theta => g.mode == 0,
            },
        }
    }

    pub fn validate(self, g: &Generator) -> Result<()> {
        if self.is_valid(g) {
            Ok(())
        } else {
            Err(Error::InvalidGenerator { generator: *g, algebra: self })
        }
    }

    /// All generators of the algebra with `|mode| <= bound`.
    pub fn generators(self, bound: i64) -> Vec<Generator> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for mode in -bound..=bound {
                let g = Generator::new(family, mode);
                if self.is_valid(&g) {
                    out.push(g);
                }
            }
        }
        out
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for AlgebraId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AlgebraId::ALL
            .into_iter()
            .find(|a| a.tag() == s)
            .ok_or_else(|| Error::ParseAlgebra(s.to_string()))
    }
}

/// Finite linear combination of generators plus a central part in `alpha`, `beta`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Generator, MultiPoly>,
    central: MultiPoly,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn generator(g: Generator) -> Self {
        let mut e = AlgebraElement::zero();
        e.add_generator(g, MultiPoly::one());
        e
    }

    pub fn central(c: MultiPoly) -> Self {
        AlgebraElement { terms: BTreeMap::new(), central: c }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.central.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, g: &Generator) -> MultiPoly {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn central_term(&self) -> &MultiPoly {
        &self.central
    }

    pub fn add_generator(&mut self, g: Generator, c: MultiPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add_central(&mut self, c: &MultiPoly) {
        self.central += c;
    }

    pub fn add(&mut self, other: &AlgebraElement) {
        for (g, c) in &other.terms {
            self.add_generator(*g, c.clone());
        }
        self.central += &other.central;
    }

    pub fn scale(&self, c: &MultiPoly) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (g, a) in &self.terms {
            out.add_generator(*g, a * c);
        }
        out.central = &self.central * c;
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scale(&MultiPoly::from_int(-1))
    }

    /// Generators only, no central part.
    pub fn is_in_span_of(&self, pred: impl Fn(&Generator) -> bool) -> bool {
        self.central.is_zero() && self.terms.keys().all(pred)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut piece = |f: &mut fmt::Formatter<'_>, coeff: &MultiPoly, label: Option<&Generator>| {
            let sep = if first { "" } else { " + " };
            first = false;
            match (coeff.as_constant(), label) {
                (Some(c), Some(g)) if c == Rational::from_integer(1.into()) => write!(f, "{sep}{g}"),
                (Some(c), Some(g)) => write!(f, "{sep}{c}*{g}"),
                (None, Some(g)) => write!(f, "{sep}({coeff})*{g}"),
                (_, None) => write!(f, "{sep}({coeff})"),
            }
        };
        for (g, c) in &self.terms {
            piece(f, c, Some(g))?;
        }
        if !self.central.is_zero() {
            piece(f, &self.central, None)?;
        }
        Ok(())
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `alpha/12 * m(m^2-1)`.
fn virasoro_central(m: i64) -> MultiPoly {
    MultiPoly::var(Var::Alpha).scale(&q(m * (m * m - 1), 12))
}

/// Bracket of two basis generators.
pub fn bracket(x: &Generator, y: &Generator, alg: AlgebraId) -> Result<AlgebraElement> {
    alg.validate(x)?;
    alg.validate(y)?;
    Ok(if x.family <= y.family { ordered_bracket(x, y, alg) } else { ordered_bracket(y, x, alg).neg() })
}

/// `[x, y]` for `x.family <= y.family`.
fn ordered_bracket(x: &Generator, y: &Generator, alg: AlgebraId) -> AlgebraElement {
    use Family::*;
    let (m, n) = (x.mode, y.mode);
    let mut out = AlgebraElement::zero();
    let ext = alg.has_central_charges();
    match (x.family, y.family) {
        (L, L) => {
            out.add_generator(Generator::l(m + n), MultiPoly::from_int(m - n));
            if ext && m + n == 0 {
                out.add_central(&virasoro_central(m));
            }
        }
        (L, J) => out.add_generator(Generator::j(m + n), MultiPoly::from_int(-n)),
        (L, P1 | P2) => out.add_generator(Generator::new(y.family, m + n), MultiPoly::from_int(m - n)),
        (L, Theta) if alg.has_theta_family() => {
            out.add_generator(Generator::theta(m + n), MultiPoly::from_int(2 * m - n));
        }
        (J, J) if ext && m + n == 0 => out.add_central(&MultiPoly::var(Var::Beta).scale(&q(m, 1))),
        (J, P1 | P2) => {
            let i = y.family.p_index().unwrap();
            for j in [1, 2] {
                out.add_generator(Generator::new(Family::p(j), m + n), MultiPoly::from_int(epsilon(i, j)));
            }
        }
        (P1 | P2, P1 | P2) => {
            let eps = epsilon(x.family.p_index().unwrap(), y.family.p_index().unwrap());
            match alg {
                AlgebraId::GCheck | AlgebraId::GCheckExtended => {
                    out.add_generator(Generator::theta(m + n), MultiPoly::from_int(eps));
                }
                AlgebraId::G0Exotic if m + n == 0 => {
                    // [P^i_0, P^j_0] = eps_ij Theta, [P^i_{-1}, P^j_1] = -2 eps_ij Theta
                    let c = if m == 0 { 1 } else { -2 };
                    out.add_generator(Generator::theta(0), MultiPoly::from_int(c * eps));
                }
                _ => {}
            }
        }
        _ => {}
    }
    out
}

/// Bilinear extension of [`bracket`]; central parts bracket to zero.
pub fn bracket_elements(x: &AlgebraElement, y: &AlgebraElement, alg: AlgebraId) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero();
    for (gx, cx) in &x.terms {
        for (gy, cy) in &y.terms {
            out.add(&bracket(gx, gy, alg)?.scale(&(cx * cy)));
        }
    }
    Ok(out)
}

/// The anti-automorphism: negates every mode and fixes the centre.
///
/// On `Theta` generators this uses `omega(Theta_m) = Theta_{-m}`.
pub fn omega(x: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::central(x.central.clone());
    for (g, c) in &x.terms {
        out.add_generator(g.omega(), c.clone());
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    pub algebra: AlgebraId,
    pub mode_bound: i64,
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub antisymmetry_failures: Vec<(Generator, Generator)>,
    pub jacobi_failures: Vec<[Generator; 3]>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.antisymmetry_failures.is_empty() && self.jacobi_failures.is_empty()
    }
}

/// Checks antisymmetry on all pairs and the Jacobi identity on all triples of
/// generators with `|mode| <= mode_bound`.
pub fn jacobi_check(alg: AlgebraId, mode_bound: i64) -> Result<JacobiReport> {
    if mode_bound < 1 {
        return Err(Error::InvalidArgument("mode bound must be at least 1".into()));
    }
    let gens = alg.generators(mode_bound);
    let mut report = JacobiReport {
        algebra: alg,
        mode_bound,
        pairs_checked: 0,
        triples_checked: 0,
        antisymmetry_failures: Vec::new(),
        jacobi_failures: Vec::new(),
    };
    let mut brackets = BTreeMap::new();
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i..] {
            let xy = bracket(x, y, alg)?;
            let mut sum = bracket(y, x, alg)?;
            sum.add(&xy);
            report.pairs_checked += 1;
            if !sum.is_zero() {
                report.antisymmetry_failures.push((*x, *y));
            }
            brackets.insert((*x, *y), xy);
        }
    }
    let lookup = |a: &Generator, b: &Generator| -> AlgebraElement {
        if a <= b {
            brackets[&(*a, *b)].clone()
        } else {
            brackets[&(*b, *a)].neg()
        }
    };
    for (i, x) in gens.iter().enumerate() {
        for (j, y) in gens.iter().enumerate().skip(i + 1) {
            let xy = lookup(x, y);
            for z in &gens[j + 1..] {
                let yz = lookup(y, z);
                let zx = lookup(z, x);
                let mut total = bracket_elements(&xy, &AlgebraElement::generator(*z), alg)?;
                total.add(&bracket_elements(&yz, &AlgebraElement::generator(*x), alg)?);
                total.add(&bracket_elements(&zx, &AlgebraElement::generator(*y), alg)?);
                report.triples_checked += 1;
                if !total.is_zero() {
                    report.jacobi_failures.push([*x, *y, *z]);
                }
            }
        }
    }
    Ok(report)
}

/// Pairs where `omega([x, y]) != [omega(y), omega(x)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaReport {
    pub algebra: AlgebraId,
    pub mode_bound: i64,
    pub pairs_checked: usize,
    pub failures: Vec<(Generator, Generator)>,
}

impl OmegaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Tests the anti-automorphism property of [`omega`] on every ordered pair of
/// generators with `|mode| <= mode_bound`.
pub fn omega_check(alg: AlgebraId, mode_bound: i64) -> Result<OmegaReport> {
    if mode_bound < 1 {
        return Err(Error::InvalidArgument("mode bound must be at least 1".into()));
    }
    let gens = alg.generators(mode_bound);
    let mut report = OmegaReport { algebra: alg, mode_bound, pairs_checked: 0, failures: Vec::new() };
    for x in &gens {
        for y in &gens {
            let lhs = omega(&bracket(x, y, alg)?);
            let rhs = bracket(&y.omega(), &x.omega(), alg)?;
            report.pairs_checked += 1;
            if lhs != rhs {
                report.failures.push((*x, *y));
            }
        }
    }
    Ok(report)
}
