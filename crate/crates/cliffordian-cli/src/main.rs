//! Batch command-line front end: verification suites, basis tables, exact
//! expansions, and quadrature reconstruction experiments.
//!
//! Exit codes: 0 all checks pass, 1 an identity or tolerance failed,
//! 2 usage or configuration error.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cliffordian::algebra::{AlgebraConfig, FParavector};
use cliffordian::basisfun::{
    expand_in_p_basis, multi_indices, p_alpha, p_family_rank, s_beta, MultiIndex,
};
use cliffordian::polycalc::{DiracCalculus, MvPolynomial};
use cliffordian::quadrature::{boundary_data, boundary_integral, sphere_rule};
use cliffordian::verify::{
    random_polynomial, run_kernel_suite, run_suite, suite_passed, VerifyConfig,
};
use cliffordian::Error;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(name = "cliffordian", version, about = "Holomorphic Cliffordian function engine")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunConfig {
    /// Algebra parameter m (algebra R_{0,2m+1}, functions on R^{2m+2})
    #[arg(long, default_value_t = 1, global = true)]
    m: u32,

    /// Maximum polynomial degree used by the randomized suites and tables
    #[arg(long, default_value_t = 3, global = true)]
    max_degree: u32,

    /// Series truncation order for the kernel expansions
    #[arg(long, default_value_t = 3, global = true)]
    truncation: u32,

    /// Quadrature rule order (polynomial exactness on the sphere)
    #[arg(long, default_value_t = 24, global = true)]
    rule_order: u32,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Seed for the randomized property suites (reports are reproducible)
    #[arg(long, default_value_t = 7, global = true)]
    seed: u64,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full identity suite and report per-identity status
    Verify {
        /// Corrupt one product sign to prove the suite detects faults
        #[arg(long)]
        inject_fault: bool,
    },
    /// Emit tables of the polynomial basis family (and optionally the
    /// singular family)
    Basis {
        /// Also emit the singular S tables
        #[arg(long)]
        singular: bool,
    },
    /// Expand a polynomial (JSON file) in the basis family and emit the
    /// certificate with a re-evaluation proof
    Expand { input: PathBuf },
    /// Boundary-reconstruction experiment over a built-in function family
    Cauchy,
    /// Kernel identity reports (constants chain, expansions, decay)
    Kernels,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.run.max_degree > 16 {
        eprintln!("error: --max-degree above the configured cap 16");
        return ExitCode::from(2);
    }
    let result = match &cli.command {
        Command::Verify { inject_fault } => cmd_verify(&cli.run, *inject_fault),
        Command::Basis { singular } => cmd_basis(&cli.run, *singular),
        Command::Expand { input } => cmd_expand(&cli.run, input),
        Command::Cauchy => cmd_cauchy(&cli.run),
        Command::Kernels => cmd_kernels(&cli.run),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(run: &RunConfig, text: String) -> Result<(), Error> {
    match &run.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify_config(run: &RunConfig, inject_fault: bool) -> VerifyConfig {
    VerifyConfig {
        m: run.m,
        max_degree: run.max_degree,
        truncation: run.truncation,
        seed: run.seed,
        samples: 20,
        inject_fault,
    }
}

fn cmd_verify(run: &RunConfig, inject_fault: bool) -> Result<bool, Error> {
    let reports = run_suite(&verify_config(run, inject_fault))?;
    let passed = suite_passed(&reports);
    let text = match run.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&reports).unwrap()),
        _ => {
            let mut s = String::new();
            for r in &reports {
                let status = serde_json::to_value(r).unwrap();
                let line = match status.get("status").and_then(|v| v.as_str()) {
                    Some("exact-pass") => "exact-pass".to_string(),
                    Some("float-pass") => format!(
                        "float-pass (max residual {})",
                        status.get("max_residual").and_then(|v| v.as_f64()).unwrap_or(f64::NAN)
                    ),
                    _ => format!(
                        "FAIL: {}",
                        status.get("detail").and_then(|v| v.as_str()).unwrap_or("?")
                    ),
                };
                writeln!(s, "{:<48} m={} {}", r.identity, r.m, line).unwrap();
            }
            writeln!(
                s,
                "{}: {} identities",
                if passed { "PASS" } else { "FAIL" },
                reports.len()
            )
            .unwrap();
            s
        }
    };
    emit(run, text)?;
    Ok(passed)
}

fn cmd_kernels(run: &RunConfig) -> Result<bool, Error> {
    let reports = run_kernel_suite(&verify_config(run, false))?;
    let passed = suite_passed(&reports);
    let text = match run.format {
        Format::Text | Format::Csv => {
            let mut s = String::new();
            for r in &reports {
                writeln!(
                    s,
                    "{}",
                    serde_json::to_string(&r).expect("report serializes")
                )
                .unwrap();
            }
            s
        }
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&reports).unwrap()),
    };
    emit(run, text)?;
    Ok(passed)
}

fn cmd_basis(run: &RunConfig, singular: bool) -> Result<bool, Error> {
    let config = AlgebraConfig::new(run.m)?;
    // keep table sizes sane before constructing anything
    let families: usize = (1..=run.max_degree)
        .map(|t| multi_indices(config, t).len())
        .sum();
    if families > 20_000 {
        return Err(Error::DegreeCap {
            degree: run.max_degree as usize,
            cap: 16,
        });
    }

    let mut rows_csv = String::from("alpha,degree,monomial,blade,coefficient\n");
    let mut p_rows = Vec::new();
    let mut s_rows = Vec::new();
    let emit_poly = |csv: &mut String,
                     rows: &mut Vec<serde_json::Value>,
                     alpha: &MultiIndex,
                     degree: i64,
                     poly: &MvPolynomial| {
        let alpha_str = alpha
            .entries()
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(".");
        for (exps, coeff) in poly.terms() {
            for (blade, c) in coeff.terms() {
                let exp_str = exps
                    .iter()
                    .map(u16::to_string)
                    .collect::<Vec<_>>()
                    .join(".");
                csv.push_str(&format!(
                    "{alpha_str},{degree},{exp_str},{blade},{}/{}\n",
                    c.numer(),
                    c.denom()
                ));
                rows.push(json!({
                    "alpha": alpha.entries(),
                    "degree": degree,
                    "monomial": exps,
                    "blade": blade.generators(),
                    "num": c.numer().to_string(),
                    "den": c.denom().to_string(),
                }));
            }
        }
    };

    for total in 1..=run.max_degree {
        for alpha in multi_indices(config, total) {
            let p = p_alpha(config, &alpha)?;
            emit_poly(&mut rows_csv, &mut p_rows, &alpha, i64::from(total) - 1, &p);
        }
    }
    if singular {
        rows_csv.push_str("# singular family numerators; denominator power is |beta|+1\n");
        for total in 0..=run.max_degree.min(2) {
            for beta in multi_indices(config, total) {
                let s = s_beta(config, &beta)?;
                emit_poly(
                    &mut rows_csv,
                    &mut s_rows,
                    &beta,
                    -(i64::from(total) + 1),
                    s.numerator(),
                );
            }
        }
    }

    // independence of the family is measured, never assumed
    let mut rank_rows = Vec::new();
    for total in 1..=run.max_degree {
        let (count, rank) = p_family_rank(config, total)?;
        rank_rows.push((total, count, rank));
    }

    let text = match run.format {
        Format::Json => {
            let ranks: Vec<serde_json::Value> = rank_rows
                .iter()
                .map(|(t, c, r)| json!({"alpha_total": t, "count": c, "rank": r}))
                .collect();
            let mut doc = json!({
                "p_rows": p_rows,
                "family_ranks": ranks,
            });
            if singular {
                doc["s_numerator_rows"] = serde_json::Value::Array(s_rows);
            }
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
        _ => {
            for (t, c, r) in &rank_rows {
                rows_csv.push_str(&format!("# family_rank,alpha_total={t},count={c},rank={r}\n"));
            }
            rows_csv
        }
    };
    emit(run, text)?;
    Ok(true)
}

fn cmd_expand(run: &RunConfig, input: &PathBuf) -> Result<bool, Error> {
    let config = AlgebraConfig::new(run.m)?;
    let raw = fs::read_to_string(input)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", input.display())))?;
    let value: serde_json::Value = serde_json::from_str(&raw)
        .map_err(|e| Error::InvalidInput(format!("bad JSON: {e}")))?;
    let poly = MvPolynomial::from_json(config, &value)?;

    match expand_in_p_basis(&poly) {
        Ok(expansion) => {
            let reeval = expansion.evaluate()?;
            let exact = reeval == poly;
            let certificate: Vec<serde_json::Value> = expansion
                .coefficients
                .iter()
                .map(|(alpha, c)| {
                    json!({
                        "alpha": alpha.entries(),
                        "coefficient": c.to_json(),
                    })
                })
                .collect();
            let out = json!({
                "rejected": false,
                "certificate": certificate,
                "reevaluation": {
                    "exact_match": exact,
                    "difference": (&reeval - &poly).to_json(),
                },
            });
            emit(run, format!("{}\n", serde_json::to_string_pretty(&out).unwrap()))?;
            Ok(exact)
        }
        Err(Error::NotHolomorphic { .. }) => {
            let residual = poly.laplacian(config.m()).dirac();
            let out = json!({
                "rejected": true,
                "reason": "input is not holomorphic Cliffordian",
                "residual": residual.to_json(),
            });
            emit(run, format!("{}\n", serde_json::to_string_pretty(&out).unwrap()))?;
            Err(Error::NotHolomorphic {
                residual: residual.to_string(),
            })
        }
        Err(e) => Err(e),
    }
}

fn format_coords(coords: &[f64]) -> String {
    coords
        .iter()
        .map(|c| format!("{c:?}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn format_mv(mv: &cliffordian::algebra::FMultivector) -> String {
    mv.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.abs() > 1e-14)
        .map(|(i, c)| format!("b{i}:{c:?}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn cmd_cauchy(run: &RunConfig) -> Result<bool, Error> {
    let config = AlgebraConfig::new(run.m)?;
    let rule = sphere_rule(run.m, run.rule_order)?;
    let mut rng = ChaCha8Rng::seed_from_u64(run.seed);

    // built-in family: constants, powers of x, one permutational basis
    // polynomial, one random polynomial of degree <= 2m
    let mut family: Vec<(String, MvPolynomial)> = vec![(
        "const-1".into(),
        MvPolynomial::scalar_constant(config, cliffordian::Scalar::from_integer(1.into())),
    )];
    for n in 1..=3u32 {
        family.push((format!("x^{n}"), MvPolynomial::identity_power(config, n)));
    }
    let mut alpha = vec![0u32; config.coord_count()];
    alpha[1] = 1;
    alpha[2] = 1;
    let alpha = MultiIndex::new(alpha);
    family.push((format!("P_{alpha}"), p_alpha(config, &alpha)?));
    family.push((
        "random-low-degree".into(),
        random_polynomial(&mut rng, config, 2 * run.m),
    ));

    let mut interior = Vec::new();
    for _ in 0..5 {
        let coords: Vec<f64> = (0..config.coord_count())
            .map(|_| 0.28 * (rng.random::<f64>() * 2.0 - 1.0))
            .collect();
        interior.push(FParavector::new(config, coords)?);
    }
    let mut exterior = Vec::new();
    for _ in 0..2 {
        let mut coords: Vec<f64> = (0..config.coord_count())
            .map(|_| rng.random::<f64>() * 2.0 - 1.0)
            .collect();
        let norm = coords.iter().map(|c| c * c).sum::<f64>().sqrt();
        for c in &mut coords {
            *c *= 1.8 / norm;
        }
        exterior.push(FParavector::new(config, coords)?);
    }

    let mut csv = String::from(
        "function_id,point,reconstructed,exact,abs_error,rule_order,node_count,wall_time_ms\n",
    );
    let mut max_interior_err = 0.0f64;
    let mut max_exterior_val = 0.0f64;
    for (name, f) in &family {
        let data = boundary_data(f, &rule)?;
        let compiled = f.compile();
        for x in &interior {
            let t0 = Instant::now();
            let got = boundary_integral(&data, &rule, x)?;
            let ms = t0.elapsed().as_secs_f64() * 1e3;
            let want = compiled.eval(x.coords());
            let err = got.sub(&want).max_abs();
            max_interior_err = max_interior_err.max(err);
            csv.push_str(&format!(
                "{name},{},{},{},{err:?},{},{},{ms:.3}\n",
                format_coords(x.coords()),
                format_mv(&got),
                format_mv(&want),
                rule.exactness_order(),
                rule.node_count(),
            ));
        }
        for x in &exterior {
            let t0 = Instant::now();
            let got = boundary_integral(&data, &rule, x)?;
            let ms = t0.elapsed().as_secs_f64() * 1e3;
            let val = got.max_abs();
            max_exterior_val = max_exterior_val.max(val);
            csv.push_str(&format!(
                "{name}-exterior,{},{},{},{val:?},{},{},{ms:.3}\n",
                format_coords(x.coords()),
                format_mv(&got),
                "0",
                rule.exactness_order(),
                rule.node_count(),
            ));
        }
    }
    let passed = max_interior_err <= 1e-3 && max_exterior_val <= 1e-3;
    csv.push_str(&format!(
        "# max_interior_abs_error,{max_interior_err:?}\n# max_exterior_value,{max_exterior_val:?}\n# status,{}\n",
        if passed { "pass" } else { "fail" }
    ));
    emit(run, csv)?;
    Ok(passed)
}
