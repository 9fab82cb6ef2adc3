use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::basis::{blocks, BasisOrder};
use super::{rho_squared, VermaModule};
use crate::combinatorics::{partitions_of, split_count, Partition};
use crate::error::{Error, Result};
use crate::symbolic::{det_exact, det_rational, MultiPoly, Rational, Var, NUM_VARS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KacMethod {
    /// Symbolic determinant of the full Gram matrix.
    Brute,
    /// Product of the diagonal block determinants of `M_n`.
    Blocks,
    /// Per-partition constants combined with the closed-form exponent.
    Formula,
    /// Full Gram determinant at seeded random rational points.
    Sampled,
}

impl fmt::Display for KacMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KacMethod::Brute => "brute",
            KacMethod::Blocks => "blocks",
            KacMethod::Formula => "formula",
            KacMethod::Sampled => "sampled",
        })
    }
}

impl FromStr for KacMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(KacMethod::Brute),
            "blocks" => Ok(KacMethod::Blocks),
            "formula" => Ok(KacMethod::Formula),
            "sampled" => Ok(KacMethod::Sampled),
            _ => Err(Error::InvalidArgument(format!("kac method: {s}"))),
        }
    }
}

/// `det = sign * coefficient * (rho1^2 + rho2^2)^power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KacResult {
    pub level: u32,
    pub power: u64,
    pub coefficient: Rational,
    pub sign: i8,
    pub method: KacMethod,
}

/// `det M(A) = lambda (rho1^2+rho2^2)^k` and `det M~(A) = lambda_tilde (rho1^2+rho2^2)^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaEntry {
    pub partition: Partition,
    pub exponent: u64,
    pub lambda: Rational,
    pub lambda_tilde: Rational,
}

/// Sum over blocks of `s(A) s(B) (l(A) + l(B)) / 2`.
pub fn kac_power_formula(n: u32) -> u64 {
    let mut twice = 0u64;
    for a in 0..=n {
        for pa in partitions_of(a) {
            for pb in partitions_of(n - a) {
                let s = (split_count(&pa) * split_count(&pb)) as u64;
                twice += s * (pa.len() + pb.len()) as u64;
            }
        }
    }
    debug_assert!(twice.is_multiple_of(2));
    twice / 2
}

fn lemma_exponent(a: &Partition) -> u64 {
    (split_count(a) * a.len()) as u64 / 2
}

fn signed(level: u32, power: u64, c: Rational, method: KacMethod) -> KacResult {
    let sign = if c.is_negative() { -1 } else { 1 };
    KacResult { level, power, coefficient: c.abs(), sign, method }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(-1000..=1000);
    let den: i64 = rng.gen_range(1..=1000);
    Rational::new(num.into(), den.into())
}

impl VermaModule {
    fn rho_squared(&self) -> MultiPoly {
        rho_squared().specialize(self.hw.values())
    }

    /// `det / (rho1^2+rho2^2)^power` as a nonzero constant.
    fn fit(&self, det: &MultiPoly, power: u64, what: &str) -> Result<Rational> {
        let q = self.rho_squared().pow(power as u32);
        let c = det
            .try_div(&q)
            .and_then(|c| c.as_constant())
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::Structure(format!("{what}: determinant {det} is not a constant times (rho1^2+rho2^2)^{power}")))?;
        Ok(c)
    }

    /// Symbolic determinant of the horizontal Gram matrix.
    pub fn gram_determinant(&self, n: u32) -> Result<MultiPoly> {
        det_exact(&self.gram_matrix(n, BasisOrder::Horizontal))
    }

    /// Tabulates `det M(A)` and `det M~(A)` against the expected power of `rho1^2+rho2^2`.
    pub fn lambda(&self, a: &Partition) -> Result<LambdaEntry> {
        let k = lemma_exponent(a);
        let lambda = self.fit(&det_exact(&self.lj_matrix(a))?, k, "M(A)")?;
        let lambda_tilde = self.fit(&det_exact(&self.p_matrix(a))?, k, "M~(A)")?;
        Ok(LambdaEntry { partition: a.clone(), exponent: k, lambda, lambda_tilde })
    }

    pub fn lambda_table(&self, max_degree: u32) -> Result<Vec<LambdaEntry>> {
        let mut out = Vec::new();
        for d in 1..=max_degree {
            for a in partitions_of(d) {
                out.push(self.lambda(&a)?);
            }
        }
        Ok(out)
    }

    /// Level-`n` Kac determinant; `samples` and `seed` only matter for [`KacMethod::Sampled`].
    pub fn kac_det(&self, n: u32, method: KacMethod, samples: usize, seed: u64) -> Result<KacResult> {
        match method {
            KacMethod::Brute => self.kac_brute(n),
            KacMethod::Blocks => self.kac_blocks(n),
            KacMethod::Formula => self.kac_formula(n),
            KacMethod::Sampled => self.kac_sampled(n, samples, seed),
        }
    }

    fn kac_brute(&self, n: u32) -> Result<KacResult> {
        let det = self.gram_determinant(n)?;
        let symbolic_rho = self.hw.get(Var::Rho1).is_none() || self.hw.get(Var::Rho2).is_none();
        let power = match det.total_degree() {
            Some(d) if symbolic_rho => u64::from(d / 2),
            _ => kac_power_formula(n),
        };
        let c = self.fit(&det, power, "gram")?;
        Ok(signed(n, power, c, KacMethod::Brute))
    }

    fn kac_blocks(&self, n: u32) -> Result<KacResult> {
        let mut lj_dets: BTreeMap<Partition, MultiPoly> = BTreeMap::new();
        let mut p_dets: BTreeMap<Partition, MultiPoly> = BTreeMap::new();
        let mut det = MultiPoly::one();
        for label in blocks(n) {
            if !lj_dets.contains_key(&label.lj) {
                lj_dets.insert(label.lj.clone(), det_exact(&self.lj_matrix(&label.lj))?);
            }
            if !p_dets.contains_key(&label.p) {
                p_dets.insert(label.p.clone(), det_exact(&self.p_matrix(&label.p))?);
            }
            let da = lj_dets[&label.lj].pow(split_count(&label.p) as u32);
            let db = p_dets[&label.p].pow(split_count(&label.lj) as u32);
            det = &det * &(&da * &db);
        }
        let power = kac_power_formula(n);
        let c = self.fit(&det, power, "block product")?;
        Ok(signed(n, power, c, KacMethod::Blocks))
    }

    fn kac_formula(&self, n: u32) -> Result<KacResult> {
        let mut table: BTreeMap<Partition, LambdaEntry> = BTreeMap::new();
        let mut c = Rational::one();
        for label in blocks(n) {
            for p in [&label.lj, &label.p] {
                if !p.is_empty() && !table.contains_key(p) {
                    table.insert(p.clone(), self.lambda(p)?);
                }
            }
            let la = table.get(&label.lj).map_or_else(Rational::one, |e| e.lambda.clone());
            let lb = table.get(&label.p).map_or_else(Rational::one, |e| e.lambda_tilde.clone());
            c *= num_traits::pow(la, split_count(&label.p)) * num_traits::pow(lb, split_count(&label.lj));
        }
        Ok(signed(n, kac_power_formula(n), c, KacMethod::Formula))
    }

    /// Gram determinants at seeded random completions of the highest weight.
    pub fn sampled_determinants(&self, n: u32, samples: usize, seed: u64) -> Vec<([Rational; NUM_VARS], Rational)> {
        let gram = self.gram_matrix(n, BasisOrder::Horizontal);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(samples);
        while out.len() < samples {
            let raw: [Rational; NUM_VARS] = core::array::from_fn(|_| random_rational(&mut rng));
            let point = self.hw.complete(&raw);
            let q = &point[Var::Rho1.index()] * &point[Var::Rho1.index()] + &point[Var::Rho2.index()] * &point[Var::Rho2.index()];
            if q.is_zero() && self.hw.get(Var::Rho1).is_none() {
                continue;
            }
            let det = det_rational(&gram.eval(&point)).expect("square matrix");
            out.push((point, det));
        }
        out
    }

    fn kac_sampled(&self, n: u32, samples: usize, seed: u64) -> Result<KacResult> {
        if samples == 0 {
            return Err(Error::InvalidArgument("sampled determinant needs at least one sample".into()));
        }
        let power = kac_power_formula(n);
        let mut constant: Option<Rational> = None;
        for (point, det) in self.sampled_determinants(n, samples, seed) {
            let q = &point[Var::Rho1.index()] * &point[Var::Rho1.index()] + &point[Var::Rho2.index()] * &point[Var::Rho2.index()];
            if q.is_zero() {
                return Err(Error::Structure("rho1^2 + rho2^2 vanishes at the fixed weight".into()));
            }
            let quotient = det / num_traits::pow(q, power as usize);
            match &constant {
                None => constant = Some(quotient),
                Some(c) if *c == quotient => {}
                Some(c) => {
                    return Err(Error::Structure(format!(
                        "sampled quotient is not constant: {c} vs {quotient}"
                    )))
                }
            }
        }
        let c = constant.unwrap();
        if c.is_zero() {
            return Err(Error::Structure("sampled determinant vanishes".into()));
        }
        Ok(signed(n, power, c, KacMethod::Sampled))
    }
}
