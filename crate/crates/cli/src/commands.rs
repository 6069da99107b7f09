use crate::params::{check_flags, parse_counts, parse_points, parse_spec, parse_weights, parse_weights_any_rank};
use crate::table::{complex, real, Table};
use crate::{Cli, Command};
use clap::{Args, ValueEnum};
use hzeta::barnes::{barnes_zeta, log_multiple_gamma_shifted, multiple_sine_shifted};
use hzeta::error::{Error, Result};
use hzeta::explicit::{completed_riemann_zeta, load_zeros, PrimeTable};
use hzeta::higher_zeta::{
    completed_z_hat_weights, dirichlet_coeffs, higher_zeta, lambda_hat_weights, tauberian_check, tauberian_constant, HigherZetaContext,
};
use hzeta::numerics::{c64, hurwitz_zeta, riemann_zeta, ComplexValue, PrecisionPolicy};
use hzeta::sequences::{dotted_product, SequenceSpec};
use hzeta::verify::{self, AaaConfig, Suite, SuiteReport};
use std::path::PathBuf;

const DEFAULT_PRIME_BOUND: u64 = 1_000_000;
const DEFAULT_AAA_PRIME_BOUND: u64 = 10_000_000;
const DEFAULT_N_BOUND: u32 = 64;
const DEFAULT_DIRICHLET_N: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    HurwitzZeta,
    RiemannZeta,
    BarnesZeta,
    MultipleGamma,
    MultipleSine,
    HigherZeta,
    ZHat,
    LambdaHat,
    CompletedZeta,
    DottedProduct,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub target: Target,
    /// Point, list `a,b` or grid `start:stop:step`
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    /// Point, list `a,b` or grid `start:stop:step`
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    /// Weights `w1,w2,...` (empty for rank 0 where allowed)
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<String>,
    /// Sequence `list:..`, `ap:l=..[,offset=0|1]` or `lattice:..`
    #[arg(long)]
    pub seq: Option<String>,
    #[arg(long = "prime-bound")]
    pub prime_bound: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// ladder-gamma, ladder-sine, ccc, telescope, ddd, lambda-product, aaa, bbb, euler-dirichlet, zhat-symmetry
    pub suite: String,
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    /// Repeatable
    #[arg(long)]
    pub seq: Vec<String>,
    /// Zero table (one ordinate per line, optional index column)
    #[arg(long)]
    pub zeros: Option<PathBuf>,
    /// Zero counts, e.g. `100,500,1000`; a single count N > 100 means `100,N`
    #[arg(long)]
    pub nz: Option<String>,
    #[arg(long = "prime-bound")]
    pub prime_bound: Option<u64>,
    #[arg(long = "n-bound")]
    pub n_bound: Option<u32>,
    #[arg(long = "n-max")]
    pub n_max: Option<usize>,
    /// Override the suite tolerance
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[arg(long)]
    pub seq: String,
    #[arg(long = "n-max")]
    pub n_max: usize,
    /// Add cumulative sums of g(n)
    #[arg(long = "partial-sums")]
    pub partial_sums: bool,
}

#[derive(Debug, Args)]
pub struct ZerosImportArgs {
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct TauberianArgs {
    #[arg(long)]
    pub seq: String,
    /// Real points, list or grid; each must be at least 100
    #[arg(long, default_value = "10000", allow_hyphen_values = true)]
    pub x: String,
}

pub fn run(cli: &Cli) -> Result<bool> {
    let pol = cli.global.policy()?;
    let out = cli.global.output.as_deref();
    let (table, ok) = match &cli.command {
        Command::Eval(a) => (eval(a, &pol)?, true),
        Command::Verify(a) => verify(a, &pol)?,
        Command::Coeffs(a) => (coeffs(a, &pol)?, true),
        Command::ZerosImport(a) => (zeros_import(a)?, true),
        Command::Tauberian(a) => (tauberian(a, &pol)?, true),
    };
    table.write(cli.global.format, out)?;
    Ok(ok)
}

fn required<'a>(value: &'a Option<String>, name: &str) -> Result<&'a str> {
    value.as_deref().ok_or_else(|| Error::Parse {
        line: 0,
        msg: format!("missing --{name}"),
    })
}

fn eval(a: &EvalArgs, pol: &PrecisionPolicy) -> Result<Table> {
    let given = [
        ("s", a.s.is_some()),
        ("z", a.z.is_some()),
        ("omega", a.omega.is_some()),
        ("seq", a.seq.is_some()),
        ("prime-bound", a.prime_bound.is_some()),
    ];
    let context = format!("eval {}", a.target.to_possible_value().expect("value").get_name());
    let (allowed, needed): (&[&str], &[&str]) = match a.target {
        Target::RiemannZeta | Target::CompletedZeta => (&["s"], &["s"]),
        Target::HurwitzZeta => (&["s", "z"], &["s", "z"]),
        Target::BarnesZeta => (&["s", "z", "omega"], &["s", "z", "omega"]),
        Target::MultipleGamma | Target::MultipleSine => (&["z", "omega"], &["z", "omega"]),
        Target::HigherZeta => (&["s", "seq", "prime-bound"], &["s", "seq"]),
        Target::ZHat | Target::LambdaHat => (&["s", "omega"], &["s", "omega"]),
        Target::DottedProduct => (&["z", "seq"], &["z", "seq"]),
    };
    check_flags(&context, &given, allowed, needed)?;

    let ss = a.s.as_deref().map(parse_points).transpose()?;
    let zs = a.z.as_deref().map(parse_points).transpose()?;
    let spec = a.seq.as_deref().map(parse_spec).transpose()?;

    match a.target {
        Target::RiemannZeta | Target::CompletedZeta | Target::HigherZeta | Target::ZHat | Target::LambdaHat => {
            let f: Box<dyn Fn(ComplexValue) -> Result<ComplexValue>> = match a.target {
                Target::RiemannZeta => Box::new(|s| riemann_zeta(s, pol)),
                Target::CompletedZeta => Box::new(|s| completed_riemann_zeta(s, pol)),
                Target::HigherZeta => {
                    let ctx = HigherZetaContext::new(spec.clone().expect("checked"), a.prime_bound.unwrap_or(DEFAULT_PRIME_BOUND), *pol)?;
                    Box::new(move |s| higher_zeta(s, &ctx))
                }
                Target::ZHat => {
                    let w = parse_weights_any_rank(required(&a.omega, "omega")?)?;
                    Box::new(move |s| completed_z_hat_weights(s, &w, pol))
                }
                _ => {
                    let w = parse_weights_any_rank(required(&a.omega, "omega")?)?;
                    Box::new(move |s| lambda_hat_weights(s, &w, pol))
                }
            };
            let mut t = Table::new(&["s_re", "s_im", "val_re", "val_im"]);
            for s in ss.expect("checked") {
                let v = f(s)?;
                t.push([complex(s), complex(v)].concat());
            }
            Ok(t)
        }
        Target::HurwitzZeta | Target::BarnesZeta => {
            let omega = match a.target {
                Target::BarnesZeta => Some(parse_weights(required(&a.omega, "omega")?)?),
                _ => None,
            };
            let mut t = Table::new(&["s_re", "s_im", "z_re", "z_im", "val_re", "val_im"]);
            let zs = zs.expect("checked");
            for s in ss.expect("checked") {
                for &z in &zs {
                    let v = match &omega {
                        Some(w) => barnes_zeta(s, z, w, pol)?,
                        None => hurwitz_zeta(s, z, pol)?,
                    };
                    t.push([complex(s), complex(z), complex(v)].concat());
                }
            }
            Ok(t)
        }
        Target::MultipleGamma | Target::MultipleSine | Target::DottedProduct => {
            let mut t = Table::new(&["z_re", "z_im", "val_re", "val_im"]);
            let omega = match a.target {
                Target::DottedProduct => Vec::new(),
                _ => parse_weights_any_rank(required(&a.omega, "omega")?)?,
            };
            for z in zs.expect("checked") {
                let v = match a.target {
                    Target::MultipleGamma => log_multiple_gamma_shifted(z, &omega, pol)?.exp(),
                    Target::MultipleSine => multiple_sine_shifted(z, &omega, pol)?,
                    _ => dotted_product(z, spec.as_ref().expect("checked"), pol)?,
                };
                t.push([complex(z), complex(v)].concat());
            }
            Ok(t)
        }
    }
}

fn report_table(report: &SuiteReport) -> Table {
    let mut t = Table::new(&[
        "suite", "label", "point_re", "point_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "residual", "tolerance", "pass",
    ]);
    for row in &report.rows {
        let mut cells = vec![report.suite.to_string(), row.label.clone()];
        cells.extend(complex(row.point));
        cells.extend(complex(row.lhs));
        cells.extend(complex(row.rhs));
        cells.push(real(row.residual));
        cells.push(real(row.tolerance));
        cells.push(row.passed().to_string());
        t.push(cells);
    }
    t
}

fn default_tolerance(suite: Suite) -> f64 {
    match suite {
        Suite::LadderGamma | Suite::LadderSine | Suite::Bbb => 1e-7,
        Suite::Ccc | Suite::Telescope | Suite::Ddd | Suite::EulerDirichlet => 1e-6,
        Suite::LambdaProduct => 1e-5,
        Suite::Aaa => 1e-3,
        Suite::ZhatSymmetry => 1e-9,
    }
}

fn verify(a: &VerifyArgs, pol: &PrecisionPolicy) -> Result<(Table, bool)> {
    let suite: Suite = a.suite.parse()?;
    let given = [
        ("omega", a.omega.is_some()),
        ("s", a.s.is_some()),
        ("z", a.z.is_some()),
        ("seq", !a.seq.is_empty()),
        ("zeros", a.zeros.is_some()),
        ("nz", a.nz.is_some()),
        ("prime-bound", a.prime_bound.is_some()),
        ("n-bound", a.n_bound.is_some()),
        ("n-max", a.n_max.is_some()),
        ("tol", a.tol.is_some()),
    ];
    let (allowed, needed): (&[&str], &[&str]) = match suite {
        Suite::LadderGamma | Suite::LadderSine => (&["omega", "z", "tol"], &[]),
        Suite::Ccc | Suite::Telescope | Suite::Ddd | Suite::LambdaProduct => (&["omega", "s", "tol"], &[]),
        Suite::Aaa => (&["zeros", "nz", "z", "s", "prime-bound", "n-bound", "tol"], &["zeros"]),
        Suite::Bbb => (&["seq", "s", "tol"], &[]),
        Suite::EulerDirichlet => (&["seq", "s", "n-max", "tol"], &[]),
        Suite::ZhatSymmetry => (&["s", "zeros", "tol"], &[]),
    };
    check_flags(&format!("verify {suite}"), &given, allowed, needed)?;
    let tol = a.tol.unwrap_or_else(|| default_tolerance(suite));
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Parse {
            line: 0,
            msg: "--tol must be positive".into(),
        });
    }
    let omega = parse_weights(a.omega.as_deref().unwrap_or("1,2"))?;
    let points = |text: &Option<String>, default: Vec<ComplexValue>| -> Result<Vec<ComplexValue>> {
        text.as_deref().map(parse_points).unwrap_or(Ok(default))
    };
    let specs = |defaults: &[&str]| -> Result<Vec<SequenceSpec>> {
        if a.seq.is_empty() {
            defaults.iter().map(|t| parse_spec(t)).collect()
        } else {
            a.seq.iter().map(|t| parse_spec(t)).collect()
        }
    };

    let report = match suite {
        Suite::LadderGamma => verify::ladder_gamma(&omega, &points(&a.z, verify::default_z_points())?, tol, pol)?,
        Suite::LadderSine => verify::ladder_sine(&omega, &points(&a.z, verify::default_z_points())?, tol, pol)?,
        Suite::Ccc => verify::ccc(&omega, &points(&a.s, verify::default_s_points())?, tol, pol)?,
        Suite::Ddd => verify::ddd(&omega, &points(&a.s, verify::default_s_points())?, tol, pol)?,
        Suite::Telescope => {
            let default = vec![c64(2.0, 0.0), c64(2.5, 0.0), c64(3.0, 0.0)];
            verify::telescope(&omega, &points(&a.s, default)?, tol, pol)?
        }
        Suite::LambdaProduct => {
            let default = verify::default_s_points()[..6].to_vec();
            verify::lambda_product(&omega, &points(&a.s, default)?, tol, pol)?
        }
        Suite::Aaa => {
            let table = load_zeros(a.zeros.as_ref().expect("checked"))?;
            let counts = match a.nz.as_deref() {
                None => vec![100, 500, 1000],
                Some(text) => match parse_counts(text)?.as_slice() {
                    [n] if *n > 100 => vec![100, *n],
                    other => other.to_vec(),
                },
            };
            let pairs = if a.z.is_none() && a.s.is_none() {
                AaaConfig::default().points
            } else {
                let zs = points(&a.z, vec![c64(2.0, 0.0)])?;
                let ss = points(&a.s, vec![c64(2.0, 0.0)])?;
                zs.iter().flat_map(|&z| ss.iter().map(move |&s| (z, s))).collect()
            };
            let cfg = AaaConfig {
                points: pairs,
                counts,
                n_bound: a.n_bound.unwrap_or(DEFAULT_N_BOUND),
                max_final: tol,
                ..AaaConfig::default()
            };
            let primes = PrimeTable::new(a.prime_bound.unwrap_or(DEFAULT_AAA_PRIME_BOUND))?;
            verify::aaa(&table, &primes, &cfg, pol)?
        }
        Suite::Bbb => {
            let specs = specs(&["list:0", "list:0,0.5,1"])?;
            let mut rows = Vec::new();
            for s in points(&a.s, vec![c64(2.5, 0.0)])? {
                rows.extend(verify::bbb(&specs, s, tol, pol)?.rows);
            }
            SuiteReport { suite, rows }
        }
        Suite::EulerDirichlet => {
            let specs = specs(&["list:0", "list:0,2", "list:0,3"])?;
            let n = a.n_max.unwrap_or(DEFAULT_DIRICHLET_N);
            let mut rows = Vec::new();
            for s in points(&a.s, vec![c64(2.5, 0.0), c64(2.5, 3.0)])? {
                rows.extend(verify::euler_dirichlet(&specs, s, n, tol, pol)?.rows);
            }
            SuiteReport { suite, rows }
        }
        Suite::ZhatSymmetry => {
            let grid = points(&a.s, verify::symmetry_grid(20, 10))?;
            let first = match &a.zeros {
                Some(path) => Some((load_zeros(path)?.gammas[0], 1e-6)),
                None => None,
            };
            verify::zhat_symmetry(&grid, tol, first, pol)?
        }
    };
    let ok = report.passed();
    Ok((report_table(&report), ok))
}

fn coeffs(a: &CoeffsArgs, pol: &PrecisionPolicy) -> Result<Table> {
    if a.n_max == 0 {
        return Err(Error::Parse {
            line: 0,
            msg: "--n-max must be at least 1".into(),
        });
    }
    let ctx = HigherZetaContext::new(parse_spec(&a.seq)?, DEFAULT_PRIME_BOUND, *pol)?;
    let table = dirichlet_coeffs(&ctx, a.n_max)?;
    let header: &[&str] = if a.partial_sums {
        &["n", "g_re", "g_im", "sum_re", "sum_im"]
    } else {
        &["n", "g_re", "g_im"]
    };
    let mut t = Table::new(header);
    let sums = table.partial_sums();
    for n in 1..=a.n_max {
        let mut cells = vec![n.to_string()];
        cells.extend(complex(table.get(n)));
        if a.partial_sums {
            cells.extend(complex(sums[n]));
        }
        t.push(cells);
    }
    Ok(t)
}

fn zeros_import(a: &ZerosImportArgs) -> Result<Table> {
    let zeros = load_zeros(&a.input)?;
    let mut t = Table::new(&["n", "gamma"]);
    for (k, g) in zeros.gammas.iter().enumerate() {
        t.push(vec![(k + 1).to_string(), real(*g)]);
    }
    Ok(t)
}

fn tauberian(a: &TauberianArgs, pol: &PrecisionPolicy) -> Result<Table> {
    let ctx = HigherZetaContext::new(parse_spec(&a.seq)?, DEFAULT_PRIME_BOUND, *pol)?;
    let (c, k, lambda0) = tauberian_constant(&ctx)?;
    let mut t = Table::new(&["x", "partial_sum", "prediction", "ratio", "c_re", "c_im", "log_power", "lambda0"]);
    for x in parse_points(&a.x)? {
        if x.im != 0.0 {
            return Err(Error::Parse {
                line: 0,
                msg: format!("--x must be real, got {x}"),
            });
        }
        let (lhs, rhs) = tauberian_check(&ctx, x.re)?;
        let mut cells = vec![real(x.re), real(lhs), real(rhs), real(lhs / rhs)];
        cells.extend(complex(c));
        cells.push((k - 1).to_string());
        cells.push(real(lambda0));
        t.push(cells);
    }
    Ok(t)
}
