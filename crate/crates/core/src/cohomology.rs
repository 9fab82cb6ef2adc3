//! Central extensions on a finite window of modes.
//!
//! A central extension is an antisymmetric bilinear form `psi` on the
//! generators with `psi([x,y],z) + psi([y,z],x) + psi([z,x],y) = 0`. Every
//! such constraint whose unknowns all lie in the window `|mode| <= N` is
//! generated from the structure constants. The system is graded by total
//! mode, so it is solved degree by degree. Coboundaries `psi(x,y) = c([x,y])`
//! come from shifting generators by constants. Results are reported on a
//! smaller inner window, away from truncation effects.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_traits::{One, Zero};

use crate::algebra::{bracket, AlgebraId, Family, Generator};
use crate::error::{Error, Result};
use crate::symbolic::{nullspace, rank, rref, QMatrix, Rational};

/// Unordered pair of distinct generators, stored with `.0 < .1`.
pub type Pair = (Generator, Generator);

fn canonical(x: &Generator, y: &Generator) -> Option<(Pair, Rational)> {
    match x.cmp(y) {
        core::cmp::Ordering::Less => Some(((*x, *y), Rational::one())),
        core::cmp::Ordering::Greater => Some(((*y, *x), -Rational::one())),
        core::cmp::Ordering::Equal => None,
    }
}

fn check_algebra(alg: AlgebraId) -> Result<()> {
    match alg {
        AlgebraId::GPlain | AlgebraId::GCheck => Ok(()),
        _ => Err(Error::InvalidArgument(format!("central extensions are classified for g-plain and g-check, not {alg}"))),
    }
}

/// Whether the channel `(a, b)`, `a <= b`, carries an unknown.
///
/// For the four-variable algebra only the `[L,L]`, `[J,J]` and
/// `[Theta,Theta]` channels are admitted.
pub fn channel_allowed(alg: AlgebraId, a: Family, b: Family) -> bool {
    match alg {
        AlgebraId::GCheck => a == b && matches!(a, Family::L | Family::J | Family::Theta),
        _ => a != Family::Theta && b != Family::Theta,
    }
}

/// Conventional name of the channel `(a, b)`, `a <= b`.
pub fn channel_name(alg: AlgebraId, a: Family, b: Family) -> &'static str {
    use Family::*;
    if alg == AlgebraId::GCheck {
        return match (a, b) {
            (L, L) => "f",
            (J, J) => "g",
            (Theta, Theta) => "h",
            _ => "other",
        };
    }
    match (a, b) {
        (L, L) => "Z(L)",
        (J, J) => "Z(J)",
        (L, J) => "C",
        (P1, P1) => "Y11",
        (P1, P2) => "Y12",
        (P2, P2) => "Y22",
        (L, P1) => "F1",
        (L, P2) => "F2",
        (J, P1) => "W1",
        (J, P2) => "W2",
        _ => "other",
    }
}

/// Antisymmetric form given by its values on canonical pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Cocycle {
    values: BTreeMap<Pair, Rational>,
}

impl Cocycle {
    pub fn get(&self, x: &Generator, y: &Generator) -> Rational {
        match canonical(x, y) {
            Some((p, s)) => self.values.get(&p).map_or_else(Rational::zero, |v| v * s),
            None => Rational::zero(),
        }
    }

    pub fn values(&self) -> impl Iterator<Item = (&Pair, &Rational)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }
}

type SparseRow = BTreeMap<usize, Rational>;

#[derive(Debug, Clone)]
struct DegreeSystem {
    unknowns: Vec<Pair>,
    index: BTreeMap<Pair, usize>,
    /// Echelon basis of the constraints, keyed by pivot column; pivot entries are 1.
    echelon: BTreeMap<usize, SparseRow>,
    instances: usize,
}

impl DegreeSystem {
    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut from = 0;
        while let Some(p) = row.range(from..).map(|(&i, _)| i).find(|i| self.echelon.contains_key(i)) {
            let f = row[&p].clone();
            for (j, c) in &self.echelon[&p] {
                let e = row.entry(*j).or_insert_with(Rational::zero);
                *e -= &f * c;
                if e.is_zero() {
                    row.remove(j);
                }
            }
            from = p + 1;
        }
        row
    }

    fn insert(&mut self, row: SparseRow) {
        let row = self.reduce(row);
        if let Some((&p, lead)) = row.iter().next() {
            let lead = lead.clone();
            self.echelon.insert(p, row.into_iter().map(|(j, c)| (j, c / &lead)).collect());
        }
    }

    fn solutions(&self) -> Vec<Vec<Rational>> {
        let n = self.unknowns.len();
        if self.echelon.is_empty() {
            return (0..n).map(|j| (0..n).map(|k| if j == k { Rational::one() } else { Rational::zero() }).collect()).collect();
        }
        let mut m = QMatrix::zeros(self.echelon.len(), n);
        for (i, row) in self.echelon.values().enumerate() {
            for (&j, c) in row {
                m[(i, j)] = c.clone();
            }
        }
        nullspace(&m)
    }
}

/// Jacobi constraints on the unknown central terms inside a window.
#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    pub algebra: AlgebraId,
    pub window: i64,
    degrees: BTreeMap<i64, DegreeSystem>,
}

impl ConstraintSystem {
    pub fn num_unknowns(&self) -> usize {
        self.degrees.values().map(|d| d.unknowns.len()).sum()
    }

    /// Number of nonzero constraint instances generated.
    pub fn num_equations(&self) -> usize {
        self.degrees.values().map(|d| d.instances).sum()
    }

    /// Number of independent constraints.
    pub fn rank(&self) -> usize {
        self.degrees.values().map(|d| d.echelon.len()).sum()
    }

    pub fn unknowns(&self) -> impl Iterator<Item = &Pair> {
        self.degrees.values().flat_map(|d| d.unknowns.iter())
    }

    /// Whether `sum c * psi(x, y) = 0` follows from the generated constraints.
    ///
    /// Terms on channels without unknowns are ignored; a term outside the
    /// window is an error.
    pub fn implies(&self, relation: &[(Generator, Generator, Rational)]) -> Result<bool> {
        let mut by_degree: BTreeMap<i64, SparseRow> = BTreeMap::new();
        for (x, y, c) in relation {
            let Some((p, s)) = canonical(x, y) else { continue };
            if !channel_allowed(self.algebra, p.0.family, p.1.family) {
                continue;
            }
            let deg = x.mode + y.mode;
            let idx = self
                .degrees
                .get(&deg)
                .and_then(|d| d.index.get(&p))
                .ok_or_else(|| Error::InvalidArgument(format!("psi({x}, {y}) lies outside the window")))?;
            *by_degree.entry(deg).or_default().entry(*idx).or_insert_with(Rational::zero) += c * s;
        }
        Ok(by_degree.into_iter().all(|(deg, mut row)| {
            row.retain(|_, v| !v.is_zero());
            self.degrees[&deg].reduce(row).is_empty()
        }))
    }

    fn solutions(&self, deg: i64) -> Vec<Vec<Rational>> {
        self.degrees[&deg].solutions()
    }
}

fn window_generators(alg: AlgebraId, n: i64) -> Vec<Generator> {
    alg.generators(n)
}

/// Generates every Jacobi constraint whose unknowns lie in `|mode| <= n`.
pub fn build_system(alg: AlgebraId, n: i64) -> Result<ConstraintSystem> {
    check_algebra(alg)?;
    if n < 3 {
        return Err(Error::InvalidArgument("window must be at least 3".into()));
    }
    let gens = window_generators(alg, n);
    let mut degrees: BTreeMap<i64, DegreeSystem> = BTreeMap::new();
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i + 1..] {
            if !channel_allowed(alg, x.family, y.family) {
                continue;
            }
            let d = degrees.entry(x.mode + y.mode).or_insert_with(|| DegreeSystem {
                unknowns: Vec::new(),
                index: BTreeMap::new(),
                echelon: BTreeMap::new(),
                instances: 0,
            });
            d.index.insert((*x, *y), d.unknowns.len());
            d.unknowns.push((*x, *y));
        }
    }
    let mut cache: BTreeMap<Pair, Vec<(Generator, Rational)>> = BTreeMap::new();
    let mut br = |a: &Generator, b: &Generator| -> Result<Vec<(Generator, Rational)>> {
        if let Some(v) = cache.get(&(*a, *b)) {
            return Ok(v.clone());
        }
        let e = bracket(a, b, alg)?;
        let v: Vec<_> = e.terms().map(|(g, c)| (*g, c.as_constant().expect("numeric structure constants"))).collect();
        cache.insert((*a, *b), v.clone());
        Ok(v)
    };
    for (i, x) in gens.iter().enumerate() {
        for (j, y) in gens.iter().enumerate().skip(i + 1) {
            for z in &gens[j + 1..] {
                let deg = x.mode + y.mode + z.mode;
                let Some(sys) = degrees.get(&deg) else { continue };
                let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
                let mut inside = true;
                for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                    for (g, k) in br(a, b)? {
                        let Some((p, s)) = canonical(&g, c) else { continue };
                        if !channel_allowed(alg, p.0.family, p.1.family) {
                            continue;
                        }
                        match sys.index.get(&p) {
                            Some(&idx) => *row.entry(idx).or_insert_with(Rational::zero) += k * s,
                            None => inside = false,
                        }
                    }
                }
                row.retain(|_, v| !v.is_zero());
                if inside && !row.is_empty() {
                    let d = degrees.get_mut(&deg).unwrap();
                    d.instances += 1;
                    d.insert(row);
                }
            }
        }
    }
    Ok(ConstraintSystem { algebra: alg, window: n, degrees })
}

/// Coboundaries `psi(x, y) = c([x, y])` that vanish on every channel
/// without unknowns, one per independent generator shift.
pub fn coboundary_space(alg: AlgebraId, n: i64) -> Result<Vec<Cocycle>> {
    let sys = build_system(alg, n)?;
    let mut out = Vec::new();
    for (&deg, d) in &sys.degrees {
        for c in coboundaries_in_degree(alg, n, deg, d)? {
            let values =
                d.unknowns.iter().zip(c).filter(|(_, v)| !v.is_zero()).map(|(p, v)| (*p, v)).collect();
            out.push(Cocycle { values });
        }
    }
    Ok(out)
}

fn coboundaries_in_degree(alg: AlgebraId, n: i64, deg: i64, d: &DegreeSystem) -> Result<Vec<Vec<Rational>>> {
    let shifts: Vec<Generator> = Family::ALL
        .iter()
        .map(|&f| Generator::new(f, deg))
        .filter(|g| alg.is_valid(g))
        .collect();
    let mut allowed = QMatrix::zeros(d.unknowns.len(), shifts.len());
    for (i, (x, y)) in d.unknowns.iter().enumerate() {
        let e = bracket(x, y, alg)?;
        for (j, g) in shifts.iter().enumerate() {
            allowed[(i, j)] = e.coefficient(g).as_constant().unwrap_or_default();
        }
    }
    let gens = window_generators(alg, n);
    let mut forbidden: Vec<Vec<Rational>> = Vec::new();
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i + 1..] {
            if x.mode + y.mode != deg || channel_allowed(alg, x.family, y.family) {
                continue;
            }
            let e = bracket(x, y, alg)?;
            let row: Vec<Rational> = shifts.iter().map(|g| e.coefficient(g).as_constant().unwrap_or_default()).collect();
            if row.iter().any(|v| !v.is_zero()) {
                forbidden.push(row);
            }
        }
    }
    let admissible: Vec<Vec<Rational>> = if forbidden.is_empty() {
        (0..shifts.len())
            .map(|j| (0..shifts.len()).map(|k| if j == k { Rational::one() } else { Rational::zero() }).collect())
            .collect()
    } else {
        nullspace(&QMatrix::from_rows(forbidden)?)
    };
    Ok(admissible
        .iter()
        .map(|c| (0..d.unknowns.len()).map(|i| (0..shifts.len()).map(|j| &allowed[(i, j)] * &c[j]).sum()).collect())
        .filter(|v: &Vec<Rational>| v.iter().any(|x| !x.is_zero()))
        .collect())
}

/// Values of one channel of a representative along `psi(X_m, Y_{-m})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChannelPattern {
    pub channel: &'static str,
    /// Polynomial in `m` of degree at most 3 fitting every sample, if any.
    pub pattern: Option<String>,
    pub samples: Vec<(i64, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representative {
    pub degree: i64,
    /// `"virasoro"` for `m(m^2-1)` on `[L,L]`, `"rotation"` for `m` on `[J,J]`.
    pub identified: Option<&'static str>,
    pub components: Vec<ChannelPattern>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSolution {
    pub algebra: AlgebraId,
    pub window: i64,
    pub inner_window: i64,
    pub raw_dimension: usize,
    pub coboundary_dimension: usize,
    pub nontrivial_dimension: usize,
    pub representatives: Vec<Representative>,
    /// Channels on which every solution vanishes inside the inner window.
    pub zero_channels: Vec<&'static str>,
}

fn rank_of(rows: &[Vec<Rational>], cols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let m = QMatrix::from_fn(rows.len(), cols, |i, j| rows[i][j].clone());
    rank(&m)
}

/// Exact fit by a polynomial of degree at most 3; coefficients low to high.
fn fit_cubic(samples: &[(i64, Rational)]) -> Option<Vec<Rational>> {
    if samples.len() < 4 {
        return None;
    }
    let pts = &samples[..4];
    let vander = QMatrix::from_fn(4, 5, |i, j| {
        if j < 4 {
            num_traits::pow(Rational::from_integer(pts[i].0.into()), j)
        } else {
            pts[i].1.clone()
        }
    });
    let r = rref(&vander);
    if r.pivots != [0, 1, 2, 3] {
        return None;
    }
    let coeffs: Vec<Rational> = (0..4).map(|i| r.matrix[(i, 4)].clone()).collect();
    let ok = samples.iter().all(|(m, v)| {
        let x = Rational::from_integer((*m).into());
        let y: Rational = coeffs.iter().enumerate().map(|(k, c)| c * num_traits::pow(x.clone(), k)).sum();
        y == *v
    });
    ok.then_some(coeffs)
}

fn format_poly(coeffs: &[Rational]) -> String {
    let mut s = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = *c < Rational::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag.is_one();
        if !unit || k == 0 {
            let _ = write!(s, "{mag}");
        }
        if k > 0 {
            if !unit {
                s.push('*');
            }
            s.push('m');
            if k > 1 {
                let _ = write!(s, "^{k}");
            }
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

struct Inner {
    pairs: Vec<Pair>,
    /// position of each inner pair in the degree system
    positions: Vec<usize>,
}

fn project(v: &[Rational], inner: &Inner) -> Vec<Rational> {
    inner.positions.iter().map(|&i| v[i].clone()).collect()
}

fn channels_of(alg: AlgebraId) -> Vec<(Family, Family)> {
    let mut out = Vec::new();
    for (i, &a) in Family::ALL.iter().enumerate() {
        for &b in &Family::ALL[i..] {
            if channel_allowed(alg, a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

fn degree_zero_patterns(alg: AlgebraId, inner: &Inner, v: &[Rational], window: i64) -> Vec<ChannelPattern> {
    let lookup: BTreeMap<Pair, Rational> = inner.pairs.iter().cloned().zip(v.iter().cloned()).collect();
    let mut out = Vec::new();
    for (a, b) in channels_of(alg) {
        let samples: Vec<(i64, Rational)> = (-window..=window)
            .filter(|&m| a != b || m != 0)
            .map(|m| {
                let (x, y) = (Generator::new(a, m), Generator::new(b, -m));
                let val = match canonical(&x, &y) {
                    Some((p, s)) => lookup.get(&p).map_or_else(Rational::zero, |c| c * s),
                    None => Rational::zero(),
                };
                (m, val)
            })
            .collect();
        if samples.iter().all(|(_, v)| v.is_zero()) {
            continue;
        }
        let pattern = fit_cubic(&samples).map(|c| format_poly(&c));
        out.push(ChannelPattern { channel: channel_name(alg, a, b), pattern, samples });
    }
    out
}

fn raw_patterns(alg: AlgebraId, inner: &Inner, v: &[Rational]) -> Vec<ChannelPattern> {
    let mut by_channel: BTreeMap<(Family, Family), Vec<(i64, Rational)>> = BTreeMap::new();
    for (p, c) in inner.pairs.iter().zip(v) {
        if !c.is_zero() {
            by_channel.entry((p.0.family, p.1.family)).or_default().push((p.0.mode, c.clone()));
        }
    }
    by_channel
        .into_iter()
        .map(|((a, b), samples)| ChannelPattern { channel: channel_name(alg, a, b), pattern: None, samples })
        .collect()
}

/// Target cocycle `m(m^2-1)` on `[L,L]` or `m` on `[J,J]` on the inner pairs.
fn target(inner: &Inner, family: Family) -> Vec<Rational> {
    inner
        .pairs
        .iter()
        .map(|(x, y)| {
            if x.family != family || y.family != family || x.mode + y.mode != 0 {
                return Rational::zero();
            }
            let m = x.mode;
            let v = if family == Family::L { m * (m * m - 1) } else { m };
            Rational::from_integer(v.into())
        })
        .collect()
}

/// Classifies central extensions: solves the window-`n` system and reports
/// dimensions modulo coboundaries on `|mode| <= inner`.
pub fn classify(alg: AlgebraId, n: i64, inner: i64) -> Result<ExtensionSolution> {
    check_algebra(alg)?;
    if inner < 2 || inner > n - 2 {
        return Err(Error::InvalidArgument(format!("inner window must lie in 2..={}", n - 2)));
    }
    let sys = build_system(alg, n)?;
    let mut raw = 0;
    let mut cob = 0;
    let mut reps = Vec::new();
    let mut nonzero_channels: BTreeMap<&'static str, bool> = BTreeMap::new();
    for (a, b) in channels_of(alg) {
        nonzero_channels.insert(channel_name(alg, a, b), false);
    }
    for (&deg, d) in &sys.degrees {
        let positions: Vec<usize> = (0..d.unknowns.len())
            .filter(|&i| d.unknowns[i].0.mode.abs() <= inner && d.unknowns[i].1.mode.abs() <= inner)
            .collect();
        if positions.is_empty() {
            continue;
        }
        let inner_sys = Inner { pairs: positions.iter().map(|&i| d.unknowns[i]).collect(), positions };
        let cols = inner_sys.pairs.len();
        let sols: Vec<Vec<Rational>> = sys.solutions(deg).iter().map(|v| project(v, &inner_sys)).collect();
        let cobs: Vec<Vec<Rational>> =
            coboundaries_in_degree(alg, n, deg, d)?.iter().map(|v| project(v, &inner_sys)).collect();
        let r_s = rank_of(&sols, cols);
        let r_b = rank_of(&cobs, cols);
        raw += r_s;
        cob += r_b;
        for v in &sols {
            for (p, c) in inner_sys.pairs.iter().zip(v) {
                if !c.is_zero() {
                    nonzero_channels.insert(channel_name(alg, p.0.family, p.1.family), true);
                }
            }
        }
        if r_s == r_b {
            continue;
        }
        // known cocycles first, then whatever else survives
        let mut span = cobs.clone();
        let mut span_rank = r_b;
        if deg == 0 {
            for (fam, name) in [(Family::L, "virasoro"), (Family::J, "rotation")] {
                let t = target(&inner_sys, fam);
                let mut with_sols = sols.clone();
                with_sols.push(t.clone());
                let mut with_span = span.clone();
                with_span.push(t.clone());
                let r = rank_of(&with_span, cols);
                if rank_of(&with_sols, cols) == r_s && r > span_rank {
                    span = with_span;
                    span_rank = r;
                    let components = degree_zero_patterns(alg, &inner_sys, &t, inner);
                    reps.push(Representative { degree: 0, identified: Some(name), components });
                }
            }
        }
        for v in &sols {
            let mut with_span = span.clone();
            with_span.push(v.clone());
            let r = rank_of(&with_span, cols);
            if r > span_rank {
                span = with_span;
                span_rank = r;
                let components = if deg == 0 {
                    canonical_degree_zero(alg, &inner_sys, v, &cobs, inner)
                } else {
                    raw_patterns(alg, &inner_sys, v)
                };
                reps.push(Representative { degree: deg, identified: None, components });
            }
        }
    }
    let zero_channels = nonzero_channels.into_iter().filter(|(_, nz)| !nz).map(|(c, _)| c).collect();
    Ok(ExtensionSolution {
        algebra: alg,
        window: n,
        inner_window: inner,
        raw_dimension: raw,
        coboundary_dimension: cob,
        nontrivial_dimension: raw - cob,
        representatives: reps,
        zero_channels,
    })
}

/// Polynomial in `m` per channel for a degree-zero vector, if every
/// channel fits.
fn channel_polys(alg: AlgebraId, inner: &Inner, v: &[Rational], window: i64) -> Option<Vec<Vec<Rational>>> {
    let channels = channels_of(alg);
    let patterns = degree_zero_patterns(alg, inner, v, window);
    let mut out = Vec::with_capacity(channels.len());
    for (a, b) in channels {
        let name = channel_name(alg, a, b);
        match patterns.iter().find(|p| p.channel == name) {
            None => out.push(alloc::vec![Rational::zero(); 4]),
            Some(p) => out.push(fit_cubic(&p.samples)?),
        }
    }
    Some(out)
}

/// Reduces a degree-zero survivor modulo coboundaries, eliminating the
/// lowest powers of `m` first, and scales its leading coefficient to 1.
fn canonical_degree_zero(alg: AlgebraId, inner: &Inner, v: &[Rational], cobs: &[Vec<Rational>], window: i64) -> Vec<ChannelPattern> {
    let flat = |v: &[Rational]| -> Option<Vec<Rational>> {
        let polys = channel_polys(alg, inner, v, window)?;
        Some((0..4).flat_map(|k| polys.iter().map(move |p| p[k].clone())).collect())
    };
    let (Some(mut fv), Some(fcs)) = (flat(v), cobs.iter().map(|c| flat(c)).collect::<Option<Vec<_>>>()) else {
        return degree_zero_patterns(alg, inner, v, window);
    };
    let mut basis: Vec<(usize, Vec<Rational>)> = Vec::new();
    for mut c in fcs {
        for (p, b) in &basis {
            if !c[*p].is_zero() {
                let f = c[*p].clone() / &b[*p];
                c.iter_mut().zip(b).for_each(|(x, y)| *x -= &f * y);
            }
        }
        if let Some(p) = c.iter().position(|x| !x.is_zero()) {
            basis.push((p, c));
        }
    }
    for (p, b) in &basis {
        if !fv[*p].is_zero() {
            let f = fv[*p].clone() / &b[*p];
            fv.iter_mut().zip(b).for_each(|(x, y)| *x -= &f * y);
        }
    }
    if let Some(lead) = fv.iter().rev().find(|x| !x.is_zero()).cloned() {
        fv.iter_mut().for_each(|x| *x /= &lead);
    }
    let channels = channels_of(alg);
    let nch = channels.len();
    let mut out = Vec::new();
    for (ci, (a, b)) in channels.into_iter().enumerate() {
        let coeffs: Vec<Rational> = (0..4).map(|k| fv[k * nch + ci].clone()).collect();
        if coeffs.iter().all(|c| c.is_zero()) {
            continue;
        }
        let samples = (-window..=window)
            .filter(|&m| a != b || m != 0)
            .map(|m| {
                let x = Rational::from_integer(m.into());
                (m, coeffs.iter().enumerate().map(|(k, c)| c * num_traits::pow(x.clone(), k)).sum())
            })
            .collect();
        out.push(ChannelPattern { channel: channel_name(alg, a, b), pattern: Some(format_poly(&coeffs)), samples });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn cubic_fit_and_format() {
        let samples: Vec<_> = (-3..=3).map(|m| (m, q(m * m * m - m))).collect();
        let c = fit_cubic(&samples).unwrap();
        assert_eq!(format_poly(&c), "m^3 - m");
        let samples: Vec<_> = (-3..=3).map(|m| (m, Rational::new((m * m).into(), 2.into()))).collect();
        assert_eq!(format_poly(&fit_cubic(&samples).unwrap()), "1/2*m^2");
        let bad: Vec<_> = (-3..=3i64).map(|m| (m, q(m.pow(4)))).collect();
        assert!(fit_cubic(&bad).is_none());
    }

    #[test]
    fn rejects_other_algebras_and_small_windows() {
        assert!(build_system(AlgebraId::GHat, 4).is_err());
        assert!(build_system(AlgebraId::GPlain, 2).is_err());
        assert!(classify(AlgebraId::GPlain, 5, 4).is_err());
    }

    #[test]
    fn cocycle_accessor_is_antisymmetric() {
        let mut c = Cocycle::default();
        c.values.insert((Generator::l(-1), Generator::l(1)), q(3));
        assert_eq!(c.get(&Generator::l(1), &Generator::l(-1)), q(-3));
        assert_eq!(c.get(&Generator::l(1), &Generator::l(1)), q(0));
    }
}
