use gca_core::algebra::{jacobi_check, omega_check, AlgebraId};
use gca_core::cohomology::classify;
use gca_core::combinatorics::dim_level;
use gca_core::realizations::{boson_bracket_check, vf_bracket_check, RealizationReport};
use gca_core::symbolic::{det_exact, PolyMatrix};
use gca_core::verma::{blocks, enumerate_basis, BasisOrder, KacMethod, KacResult, LevelLayout, VermaModule};
use serde_json::{json, Value};

use crate::config::{Command, RunConfig};
use crate::CliError;

/// Verma computations above this level are refused as usage errors.
pub const MAX_LEVEL: u32 = 5;
/// Largest level for the full symbolic determinant.
pub const MAX_BRUTE_LEVEL: u32 = 3;

/// Result of one command: a JSON report, whether every asserted property
/// held, and a numeric table when the report has one.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Value,
    pub passed: bool,
    pub table: Option<Vec<Vec<String>>>,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Outcome { report, passed: true, table: None }
    }
}

fn verma_level(cfg: &RunConfig) -> Result<u32, CliError> {
    if cfg.level > MAX_LEVEL {
        return Err(CliError::Usage(format!("level {} exceeds the supported maximum {MAX_LEVEL}", cfg.level)));
    }
    Ok(cfg.level)
}

fn module(cfg: &RunConfig) -> Result<VermaModule, CliError> {
    Ok(VermaModule::new(cfg.highest_weight()?).with_convention(cfg.zero_mode_convention()?))
}

fn weights_json(m: &VermaModule) -> Value {
    let hw = m.highest_weight();
    let mut obj = serde_json::Map::new();
    for (var, value) in gca_core::symbolic::Var::ALL.iter().zip(hw.values()) {
        obj.insert(var.name().into(), value.as_ref().map_or(Value::Null, |q| Value::String(q.to_string())));
    }
    Value::Object(obj)
}

fn matrix_json(m: &PolyMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(|p| json!(p.to_string())).collect())).collect())
}

fn numeric_table(m: &PolyMatrix, rows: &[String], cols: &[String]) -> Option<Vec<Vec<String>>> {
    let mut table = vec![std::iter::once(String::new()).chain(cols.iter().cloned()).collect()];
    for (i, label) in rows.iter().enumerate() {
        let mut row = vec![label.clone()];
        for p in m.row(i) {
            row.push(p.as_constant()?.to_string());
        }
        table.push(row);
    }
    Some(table)
}

fn kac_json(r: &KacResult) -> Value {
    json!({
        "level": r.level,
        "power": r.power,
        "coefficient": r.coefficient.to_string(),
        "sign": r.sign,
        "method": r.method.to_string(),
    })
}

fn realization_json(r: &RealizationReport) -> Value {
    json!({
        "realization": r.realization,
        "modeBound": r.mode_bound,
        "stateBound": r.state_bound,
        "pairsChecked": r.pairs_checked,
        "failures": r.failures.iter().map(|f| json!({
            "x": f.x.to_string(),
            "y": f.y.to_string(),
            "state": f.state,
            "difference": f.difference,
        })).collect::<Vec<_>>(),
    })
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match cfg.command {
        Command::Dims => {
            let dims: Vec<u64> = (0..=cfg.level).map(dim_level).collect();
            let table = dims.iter().enumerate().map(|(n, d)| vec![n.to_string(), d.to_string()]);
            Ok(Outcome {
                report: json!({ "level": cfg.level, "dims": dims }),
                passed: true,
                table: Some(std::iter::once(vec!["level".into(), "dim".into()]).chain(table).collect()),
            })
        }
        Command::Basis => {
            let n = verma_level(cfg)?;
            let layout = LevelLayout::new(n, cfg.basis_order());
            let blocks: Vec<Value> = layout
                .blocks
                .iter()
                .map(|(label, range)| {
                    json!({
                        "block": label.to_string(),
                        "vectors": layout.vectors[range.clone()].iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(Outcome::ok(json!({
                "level": n,
                "order": layout.order.to_string(),
                "dim": layout.dim(),
                "blocks": blocks,
            })))
        }
        Command::Gram => {
            let n = verma_level(cfg)?;
            let m = module(cfg)?;
            let rows: Vec<String> = enumerate_basis(n, cfg.basis_order()).iter().map(|v| v.to_string()).collect();
            let cols: Vec<String> = enumerate_basis(n, BasisOrder::Horizontal).iter().map(|v| v.to_string()).collect();
            let g = m.gram_matrix(n, cfg.basis_order());
            let table = numeric_table(&g, &rows, &cols);
            Ok(Outcome {
                report: json!({
                    "level": n,
                    "order": cfg.basis_order().to_string(),
                    "convention": m.convention().to_string(),
                    "weights": weights_json(&m),
                    "rows": rows,
                    "cols": cols,
                    "matrix": matrix_json(&g),
                }),
                passed: true,
                table,
            })
        }
        Command::Echelon => {
            let n = verma_level(cfg)?;
            let m = module(cfg)?;
            let e = m.echelon_check(n);
            let vanishing = m.vanishing_check(n);
            let factorization = m.factorization_check(n);
            let passed = e.passed() && vanishing.is_empty() && factorization.is_empty();
            Ok(Outcome {
                report: json!({
                    "level": n,
                    "blocks": e.blocks,
                    "entriesChecked": e.entries_checked,
                    "violations": e.violations,
                    "vanishingFailures": vanishing.iter().map(|(x, y)| [x.to_string(), y.to_string()]).collect::<Vec<_>>(),
                    "factorizationFailures": factorization.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                    "passed": passed,
                }),
                passed,
                table: None,
            })
        }
        Command::Blocks => {
            let n = verma_level(cfg)?;
            let m = module(cfg)?;
            let mut out = Vec::new();
            for label in blocks(n) {
                let (lj, p) = m.block_matrices(&label);
                out.push(json!({
                    "block": label.to_string(),
                    "A": label.lj.to_string(),
                    "B": label.p.to_string(),
                    "M(A)": matrix_json(&lj),
                    "detM(A)": det_exact(&lj)?.to_string(),
                    "Mtilde(B)": matrix_json(&p),
                    "detMtilde(B)": det_exact(&p)?.to_string(),
                }));
            }
            Ok(Outcome::ok(json!({ "level": n, "blocks": out })))
        }
        Command::Kac => {
            let n = verma_level(cfg)?;
            let method = cfg.kac_method();
            if method == KacMethod::Brute && n > MAX_BRUTE_LEVEL {
                return Err(CliError::Usage(format!("brute determinant is limited to level {MAX_BRUTE_LEVEL}")));
            }
            let r = module(cfg)?.kac_det(n, method, cfg.samples, cfg.seed)?;
            let mut report = kac_json(&r);
            if method == KacMethod::Sampled {
                report["samples"] = json!(cfg.samples);
                report["seed"] = json!(cfg.seed);
            }
            Ok(Outcome::ok(report))
        }
        Command::KacCompare => {
            let n = verma_level(cfg)?;
            let m = module(cfg)?;
            let mut results = Vec::new();
            if n <= MAX_BRUTE_LEVEL {
                results.push(m.kac_det(n, KacMethod::Brute, 0, 0)?);
            }
            results.push(m.kac_det(n, KacMethod::Blocks, 0, 0)?);
            results.push(m.kac_det(n, KacMethod::Formula, 0, 0)?);
            let same = |a: &KacResult, b: &KacResult| a.power == b.power && a.coefficient == b.coefficient && a.sign == b.sign;
            let passed = results.windows(2).all(|w| same(&w[0], &w[1]));
            let table = std::iter::once(vec!["method".into(), "power".into(), "sign".into(), "coefficient".into()])
                .chain(results.iter().map(|r| {
                    vec![r.method.to_string(), r.power.to_string(), r.sign.to_string(), r.coefficient.to_string()]
                }))
                .collect();
            Ok(Outcome {
                report: json!({
                    "level": n,
                    "results": results.iter().map(kac_json).collect::<Vec<_>>(),
                    "agree": passed,
                }),
                passed,
                table: Some(table),
            })
        }
        Command::Extensions => {
            let alg = cfg.algebra.map_or(AlgebraId::GPlain, AlgebraId::from);
            let s = classify(alg, cfg.window, cfg.inner_window)?;
            let mut reps = Vec::new();
            for r in &s.representatives {
                for c in &r.components {
                    reps.push(json!({
                        "channel": c.channel,
                        "degree": r.degree,
                        "identified": r.identified,
                        "pattern": c.pattern,
                        "sampleValues": c.samples.iter().map(|(m, v)| json!([m, v.to_string()])).collect::<Vec<_>>(),
                    }));
                }
            }
            Ok(Outcome::ok(json!({
                "algebra": alg.tag(),
                "N": s.window,
                "innerWindow": s.inner_window,
                "rawDim": s.raw_dimension,
                "cobDim": s.coboundary_dimension,
                "nontrivialDim": s.nontrivial_dimension,
                "representatives": reps,
                "zeroChannels": s.zero_channels,
            })))
        }
        Command::RealizeCheck => {
            let bound = cfg.mode_bound.unwrap_or(3);
            let r = match cfg.realization {
                crate::config::Realization::Vf => {
                    vf_bracket_check(cfg.algebra.map_or(AlgebraId::GPlain, AlgebraId::from), bound, cfg.deg_bound)?
                }
                crate::config::Realization::Boson => boson_bracket_check(bound, cfg.deg_bound)?,
            };
            Ok(Outcome { report: realization_json(&r), passed: r.passed(), table: None })
        }
        Command::Singular => {
            let n = verma_level(cfg)?;
            let m = module(cfg)?;
            let kernel = m.singular_kernel(n)?;
            Ok(Outcome::ok(json!({
                "level": n,
                "weights": weights_json(&m),
                "kernelDim": kernel.len(),
                "vectors": kernel.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            })))
        }
        Command::Jacobi => {
            let bound = cfg.mode_bound.unwrap_or(8);
            let algs: Vec<AlgebraId> = match cfg.algebra {
                Some(a) => vec![a.into()],
                None => AlgebraId::ALL.to_vec(),
            };
            let mut reports = Vec::new();
            let mut passed = true;
            for alg in algs {
                let r = jacobi_check(alg, bound)?;
                passed &= r.passed();
                reports.push(json!({
                    "algebra": alg.tag(),
                    "modeBound": r.mode_bound,
                    "pairsChecked": r.pairs_checked,
                    "triplesChecked": r.triples_checked,
                    "antisymmetryFailures": r.antisymmetry_failures.iter().map(|(x, y)| [x.to_string(), y.to_string()]).collect::<Vec<_>>(),
                    "jacobiFailures": r.jacobi_failures.iter().map(|t| t.map(|g| g.to_string())).collect::<Vec<_>>(),
                }));
            }
            Ok(Outcome { report: json!({ "reports": reports, "passed": passed }), passed, table: None })
        }
        Command::Omega => {
            let alg = cfg.algebra.map_or(AlgebraId::GHat, AlgebraId::from);
            let r = omega_check(alg, cfg.mode_bound.unwrap_or(8))?;
            Ok(Outcome {
                report: json!({
                    "algebra": alg.tag(),
                    "modeBound": r.mode_bound,
                    "pairsChecked": r.pairs_checked,
                    "failures": r.failures.iter().map(|(x, y)| [x.to_string(), y.to_string()]).collect::<Vec<_>>(),
                    "passed": r.passed(),
                }),
                passed: r.passed(),
                table: None,
            })
        }
    }
}
