use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use gca_core::algebra::AlgebraId;
use gca_core::symbolic::{parse_rational, Var};
use gca_core::verma::{BasisOrder, HighestWeight, KacMethod, ZeroModeConvention};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Dims,
    Basis,
    Gram,
    Echelon,
    Blocks,
    Kac,
    KacCompare,
    Extensions,
    RealizeCheck,
    Singular,
    Jacobi,
    Omega,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Horizontal,
    Vertical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Blocks,
    Formula,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Realization {
    Vf,
    Boson,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    GPlain,
    GHat,
    GCheck,
    GCheckExtended,
    G0Exotic,
}

impl From<Algebra> for AlgebraId {
    fn from(a: Algebra) -> Self {
        match a {
            Algebra::GPlain => AlgebraId::GPlain,
            Algebra::GHat => AlgebraId::GHat,
            Algebra::GCheck => AlgebraId::GCheck,
            Algebra::GCheckExtended => AlgebraId::GCheckExtended,
            Algebra::G0Exotic => AlgebraId::G0Exotic,
        }
    }
}

/// Exact computations on the infinite Galilean conformal algebra and its Verma modules.
#[derive(Debug, Clone, Parser)]
#[command(name = "gca", version)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    #[arg(long, default_value_t = 1)]
    pub level: u32,
    /// Defaults: g-plain for extensions and realize-check, g-hat for omega, all for jacobi.
    #[arg(long, value_enum)]
    pub algebra: Option<Algebra>,
    #[arg(long, allow_hyphen_values = true)]
    pub h: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub rho1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub rho2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// Bra ordering of the Gram matrix; kets are always horizontal.
    #[arg(long, value_enum, default_value_t = Order::Horizontal)]
    pub order: Order,
    #[arg(long, value_enum, default_value_t = Method::Blocks)]
    pub method: Method,
    #[arg(long, default_value_t = 16)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 6)]
    pub window: i64,
    #[arg(long, default_value_t = 4)]
    pub inner_window: i64,
    /// Defaults: 8 for jacobi and omega, 3 for realize-check.
    #[arg(long)]
    pub mode_bound: Option<i64>,
    /// Monomial degree bound (vf) or Fock level bound (boson).
    #[arg(long, visible_alias = "level-bound", default_value_t = 4)]
    pub deg_bound: i64,
    #[arg(long, value_enum, default_value_t = Realization::Vf)]
    pub realization: Realization,
    /// Zero-mode convention: `ordered`, `ordered:<families>` or `immediate`.
    #[arg(long, default_value = "ordered")]
    pub convention: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn highest_weight(&self) -> Result<HighestWeight, CliError> {
        let mut hw = HighestWeight::symbolic();
        for (var, value) in [
            (Var::H, &self.h),
            (Var::Mu, &self.mu),
            (Var::Rho1, &self.rho1),
            (Var::Rho2, &self.rho2),
            (Var::Alpha, &self.alpha),
            (Var::Beta, &self.beta),
        ] {
            if let Some(s) = value {
                let q = parse_rational(s).map_err(|e| CliError::Usage(format!("--{}: {e}", var.name())))?;
                hw = hw.with(var, q);
            }
        }
        Ok(hw)
    }

    pub fn zero_mode_convention(&self) -> Result<ZeroModeConvention, CliError> {
        self.convention.parse().map_err(|e| CliError::Usage(format!("--convention: {e}")))
    }

    pub fn basis_order(&self) -> BasisOrder {
        match self.order {
            Order::Horizontal => BasisOrder::Horizontal,
            Order::Vertical => BasisOrder::Vertical,
        }
    }

    pub fn kac_method(&self) -> KacMethod {
        match self.method {
            Method::Brute => KacMethod::Brute,
            Method::Blocks => KacMethod::Blocks,
            Method::Formula => KacMethod::Formula,
            Method::Sampled => KacMethod::Sampled,
        }
    }
}
