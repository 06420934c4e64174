use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qfock::fock::{self, Actions, ClosedForm};
use qfock::schur::{self, PowerPoly, SchurPoly};
use qfock::shapes::{self, parse_tuple, Partition, StraightenResult};
use qfock::verify::{self, CheckReport, OracleConfig, SRelation};
use qfock::{FockVector, Word};

#[derive(Parser)]
#[command(
    name = "qfock",
    version,
    about = "Exact computations in the level-one U_q(sl2^) Fock modules"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, ValueEnum)]
enum StripKind {
    H,
    E,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Power,
    Schur,
}

#[derive(Clone, Copy, ValueEnum)]
enum LrMethod {
    Matrix,
    JacobiTrudi,
    Raising,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Chevalley,
    Serre,
    Drinfeld,
    QVandermonde,
    Lr,
    Oracle,
    Straightening,
    Golden,
    Vanishing,
    LatticeDivided,
    Deviation,
    SRelations,
}

#[derive(clap::Args)]
struct Vector {
    /// Sector i: 0 for V(Λ0), 1 for V(Λ1).
    #[arg(long, default_value_t = 0)]
    sector: i64,
    /// Charge m of e^{mα}.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    charge: i64,
    /// Partition of the Schur factor, comma separated.
    #[arg(long, default_value = "")]
    mu: String,
}

impl Vector {
    fn build(&self) -> qfock::Result<FockVector> {
        if !(0..=1).contains(&self.sector) {
            return Err(qfock::Error::Sector(self.sector));
        }
        Ok(FockVector::basis(
            self.sector as u8,
            self.charge,
            self.mu.parse()?,
        ))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Normalize s_t for an integer tuple t to ±s_λ or 0.
    Straighten {
        #[arg(allow_hyphen_values = true)]
        tuple: String,
    },
    /// Conjugate partition.
    Conjugate { partition: Partition },
    /// Littlewood–Richardson product s_λ s_μ.
    Lr {
        lambda: Partition,
        mu: Partition,
        #[arg(long, value_enum, default_value = "matrix")]
        method: LrMethod,
    },
    /// h_n s_ρ or e_n s_ρ.
    Pieri {
        #[arg(long, value_enum)]
        kind: StripKind,
        #[arg(long)]
        n: usize,
        rho: Partition,
    },
    /// Jacobi–Trudi expansion of s_λ in h-monomials.
    Jt { lambda: Partition },
    /// Change of basis: a partition (or a JSON array of terms) to the other basis.
    Convert {
        #[arg(long, value_enum)]
        to: Basis,
        input: String,
    },
    /// S_μ S*_ν · 1 for nonnegative tuples μ, ν.
    Mixed { mu: String, nu: String },
    /// X^±_n on a basis vector.
    X {
        #[arg(long, value_enum)]
        sign: Sign,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[command(flatten)]
        vector: Vector,
    },
    /// Divided power X^{±(r)}_n on a basis vector.
    Divided {
        #[arg(long, value_enum)]
        sign: Sign,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        vector: Vector,
    },
    /// Apply a word in e0, e1, f0, f1, K0, K1, K0inv, K1inv, qd, qdinv; rightmost acts first.
    Apply {
        word: String,
        #[command(flatten)]
        vector: Vector,
    },
    /// Hall inner product ⟨s_λ, s_μ⟩; with --deformed, the deformed pairing of p_λ and p_μ.
    Inner {
        lambda: Partition,
        mu: Partition,
        #[arg(long)]
        deformed: bool,
    },
    /// Run a verification suite; exits with status 2 if it fails.
    Check {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        max_weight: Option<usize>,
        #[arg(long)]
        max_charge: Option<i64>,
        /// Index window for the Drinfeld and S-relation suites.
        #[arg(long)]
        window: Option<i64>,
    },
}

enum Outcome {
    Done(String, Value),
    Checked(Vec<CheckReport>),
}

fn straighten_text(r: &StraightenResult) -> String {
    match r {
        StraightenResult::Zero => "0".into(),
        StraightenResult::Signed { sign, partition } => format!("{sign} * s[{partition}]"),
    }
}

fn schur_out(f: &SchurPoly) -> Outcome {
    Outcome::Done(
        schur::schur_text(f),
        serde_json::to_value(f).expect("serializable"),
    )
}

fn fock_out(v: &FockVector) -> Outcome {
    Outcome::Done(v.to_string(), v.to_json())
}

fn nonnegative(s: &str) -> qfock::Result<Vec<i64>> {
    let t = parse_tuple(s)?;
    if let Some(&x) = t.iter().find(|&&x| x < 0) {
        return Err(qfock::Error::Negative {
            what: "mixed",
            value: x,
        });
    }
    Ok(t)
}

fn convert(to: Basis, input: &str) -> qfock::Result<Outcome> {
    let json_input = input.trim_start().starts_with('[') && input.contains('{');
    let bad = |e: serde_json::Error| qfock::Error::Json(e.to_string());
    Ok(match to {
        Basis::Power => {
            let f: SchurPoly = if json_input {
                serde_json::from_str(input).map_err(bad)?
            } else {
                schur::schur(input.parse()?)
            };
            let g = schur::schur_to_power(&f);
            Outcome::Done(
                schur::power_text(&g),
                serde_json::to_value(&g).expect("serializable"),
            )
        }
        Basis::Schur => {
            let g: PowerPoly = if json_input {
                serde_json::from_str(input).map_err(bad)?
            } else {
                PowerPoly::basis(input.parse()?)
            };
            schur_out(&schur::power_to_schur(&g)?)
        }
    })
}

fn check(
    suite: Suite,
    max_weight: Option<usize>,
    max_charge: Option<i64>,
    window: Option<i64>,
) -> Vec<CheckReport> {
    let a = &ClosedForm;
    let w = max_weight.unwrap_or(4);
    let c = max_charge.unwrap_or(2);
    let win = window.unwrap_or(2);
    let want = |s: Suite| suite == Suite::All || suite == s;
    let mut out = Vec::new();
    if want(Suite::Golden) {
        out.push(verify::check_golden(a, &[0, 1]));
    }
    if want(Suite::Vanishing) {
        out.push(verify::check_vanishing(a, 3, 8));
    }
    if want(Suite::LatticeDivided) {
        out.push(verify::check_lattice_divided(a, 3));
    }
    if want(Suite::Oracle) {
        let mut cfg = OracleConfig::default();
        if let Some(w) = max_weight {
            cfg.max_weight = w;
        }
        if let Some(c) = max_charge {
            cfg.max_charge = c;
        }
        out.push(verify::check_oracle(a, cfg));
    }
    if want(Suite::Chevalley) {
        out.push(verify::check_chevalley(a, w, c));
    }
    if want(Suite::Serre) {
        out.push(verify::check_serre(a, w, c));
    }
    if want(Suite::Drinfeld) {
        out.push(verify::check_drinfeld(a, w, c, win));
    }
    if want(Suite::Lr) {
        out.push(verify::check_lr(max_weight.unwrap_or(8)));
    }
    if want(Suite::Straightening) {
        out.push(verify::check_straightening(-4, 6, 4));
    }
    if want(Suite::QVandermonde) {
        out.push(verify::check_q_vandermonde(5));
    }
    if want(Suite::Deviation) {
        out.push(verify::check_deviation(a));
    }
    if suite == Suite::SRelations {
        for rel in SRelation::ALL {
            out.push(verify::check_s_relation(
                rel,
                max_weight.unwrap_or(3),
                window.unwrap_or(3),
            ));
        }
    }
    out
}

fn run(cmd: Command) -> qfock::Result<Outcome> {
    Ok(match cmd {
        Command::Straighten { tuple } => {
            let r = shapes::straighten(&parse_tuple(&tuple)?);
            Outcome::Done(straighten_text(&r), r.to_json())
        }
        Command::Conjugate { partition } => {
            let c = partition.conjugate();
            Outcome::Done(format!("[{c}]"), json!(c))
        }
        Command::Lr { lambda, mu, method } => schur_out(&match method {
            LrMethod::Matrix => schur::lr_product(&lambda, &mu),
            LrMethod::JacobiTrudi => schur::lr_product_oracle(&lambda, &mu),
            LrMethod::Raising => schur::raising_operator_product(&lambda, &mu),
        }),
        Command::Pieri { kind, n, rho } => schur_out(&match kind {
            StripKind::H => schur::pieri_h(n, &rho),
            StripKind::E => schur::pieri_e(n, &rho),
        }),
        Command::Jt { lambda } => {
            let terms = schur::jacobi_trudi(&lambda);
            let text = if terms.is_empty() {
                "0".to_string()
            } else {
                terms
                    .iter()
                    .map(|(c, h)| format!("{c} * h[{h}]"))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            let value = terms
                .iter()
                .map(|(c, h)| json!({ "coeff": c.to_string(), "h": h }))
                .collect();
            Outcome::Done(text, Value::Array(value))
        }
        Command::Convert { to, input } => convert(to, &input)?,
        Command::Mixed { mu, nu } => {
            let r = schur::mixed_product(&nonnegative(&mu)?, &nonnegative(&nu)?);
            Outcome::Done(straighten_text(&r), r.to_json())
        }
        Command::X { sign, n, vector } => {
            let v = vector.build()?;
            fock_out(&match sign {
                Sign::Plus => ClosedForm.x_plus(n, &v),
                Sign::Minus => ClosedForm.x_minus(n, &v),
            })
        }
        Command::Divided { sign, n, r, vector } => {
            let v = vector.build()?;
            fock_out(&match sign {
                Sign::Plus => ClosedForm.x_plus_divided(n, r, &v)?,
                Sign::Minus => ClosedForm.x_minus_divided(n, r, &v)?,
            })
        }
        Command::Apply { word, vector } => {
            let w: Word = word.parse()?;
            fock_out(&fock::apply_word(&w, &vector.build()?)?)
        }
        Command::Inner {
            lambda,
            mu,
            deformed,
        } => {
            if deformed {
                let (num, den) = schur::deformed_inner(&lambda, &mu);
                Outcome::Done(
                    format!("({num}) / ({den})"),
                    json!({ "numerator": num.to_json(), "denominator": den.to_json() }),
                )
            } else {
                let c = schur::hall_inner(&schur::schur(lambda), &schur::schur(mu));
                Outcome::Done(c.to_string(), c.to_json())
            }
        }
        Command::Check {
            suite,
            max_weight,
            max_charge,
            window,
        } => Outcome::Checked(check(suite, max_weight, max_charge, window)),
    })
}

fn report_text(r: &CheckReport) -> String {
    let mut s = format!(
        "{}: {} ({} violations) {}",
        r.suite,
        if r.pass { "PASS" } else { "FAIL" },
        r.violations.len(),
        r.config
    );
    for v in &r.violations {
        s.push_str(&format!(
            "\n  {}\n    expected {}\n    actual   {}",
            v.input, v.expected, v.actual
        ));
    }
    s
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("QFOCK_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("QFOCK_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    match run(cli.command) {
        Ok(Outcome::Done(text, value)) => {
            if cli.json {
                println!("{value}");
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Ok(Outcome::Checked(reports)) => {
            if cli.json {
                let all: Vec<Value> = reports.iter().map(CheckReport::to_json).collect();
                println!("{}", Value::Array(all));
            } else {
                for r in &reports {
                    println!("{}", report_text(r));
                }
            }
            if reports.iter().all(|r| r.pass) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
