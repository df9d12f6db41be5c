//! `charbasis`: expansions, coefficients, tableau enumeration and self-tests
//! for the character bases of symmetric functions.

mod parser;

use std::process::ExitCode;

use clap::{Parser as ClapParser, Subcommand, ValueEnum};

use charbasis::error::Error;
use charbasis::partition::{partitions_up_to, Composition, Partition};
use charbasis::selftest;
use charbasis::stable;
use charbasis::symfunc::convert::change_basis;
use charbasis::symfunc::json::{coeff_to_string, to_json_string};
use charbasis::symfunc::{kronecker_product, BasisTag, SymExpr};
use charbasis::tableau::{enumerate_multiset_tableaux, FillProfile};

use parser::{parse_expr, Expr};

#[derive(ClapParser)]
#[command(
    name = "charbasis",
    version,
    about = "Exact computer algebra for character bases of symmetric functions"
)]
struct Cli {
    /// Emit JSON where the subcommand supports it.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress informational output.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand an expression in a chosen basis.
    Expand {
        /// Expression, e.g. "h[2,1]*st[2,2]" or "h[1,1]@h[1,1]".
        expr: String,
        /// Target basis: h, p, s, ht or st.
        #[arg(long, default_value = "st", value_parser = parse_basis)]
        basis: BasisTag,
    },
    /// Print one exact coefficient of an expression.
    Coeff {
        expr: String,
        /// A single basis atom such as "st[4]".
        #[arg(long)]
        of: String,
    },
    /// Enumerate multiset-valued tableaux.
    Tableaux {
        /// Block shape above the first row, e.g. "[4]".
        #[arg(long)]
        gamma: String,
        /// Barred content partition, e.g. "[2,2]".
        #[arg(long)]
        lambda: String,
        /// Unbarred content composition, e.g. "[2,1]".
        #[arg(long)]
        alpha: String,
        #[arg(long, value_enum, default_value_t = ProfileArg::Multiset)]
        profile: ProfileArg,
        /// Keep only lattice tableaux.
        #[arg(long)]
        lattice: bool,
        /// Print the tableaux after the count.
        #[arg(long)]
        print: bool,
    },
    /// Stable Kronecker coefficients: the expansion of st_lambda * st_mu.
    Gbar {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        /// Print only the coefficient of this partition.
        #[arg(long)]
        nu: Option<String>,
    },
    /// Dimensions of irreducible partition-algebra modules.
    Dims {
        /// Number of tensor factors.
        #[arg(long)]
        r: usize,
        /// Print only the dimension for this partition.
        #[arg(long)]
        lambda: Option<String>,
        /// Quasi-partition algebra dimensions instead.
        #[arg(long)]
        quasi: bool,
    },
    /// Run the identity self-test suites.
    Selftest {
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProfileArg {
    Multiset,
    Set,
    SetNoSingleton,
    Pair,
}

impl From<ProfileArg> for FillProfile {
    fn from(arg: ProfileArg) -> FillProfile {
        match arg {
            ProfileArg::Multiset => FillProfile::Multiset,
            ProfileArg::Set => FillProfile::Set,
            ProfileArg::SetNoSingleton => FillProfile::SetNoSingletonRow1,
            ProfileArg::Pair => FillProfile::Pair,
        }
    }
}

fn parse_basis(text: &str) -> Result<BasisTag, String> {
    BasisTag::parse(text).ok_or_else(|| format!("unknown basis {:?}", text))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {}", message);
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Expand { expr, basis } => {
            let value = eval_text(&expr)?;
            let expansion = change_basis(&value, basis);
            if cli.json {
                println!("{}", to_json_string(&expansion));
            } else {
                print!("{}", render_expansion(&expansion));
            }
            Ok(())
        }
        Command::Coeff { expr, of } => {
            let value = eval_text(&expr)?;
            let atom = parse_expr(&of).map_err(|e| e.to_string())?;
            let (basis, index) = match atom {
                Expr::Atom(basis, index) => (basis, index),
                _ => return Err(format!("--of must be a single basis atom, got {:?}", of)),
            };
            let expansion = change_basis(&value, basis);
            println!("{}", coeff_to_string(&expansion.coefficient(&index)));
            Ok(())
        }
        Command::Tableaux {
            gamma,
            lambda,
            alpha,
            profile,
            lattice,
            print,
        } => {
            let gamma = Partition::parse(&gamma).map_err(|e| e.to_string())?;
            let lambda = Partition::parse(&lambda).map_err(|e| e.to_string())?;
            let alpha = Composition::parse(&alpha).map_err(|e| e.to_string())?;
            let tableaux =
                enumerate_multiset_tableaux(&gamma, &lambda, &alpha, profile.into(), lattice);
            println!("{}", tableaux.len());
            if print {
                for t in &tableaux {
                    println!();
                    println!("{}", t.render());
                }
            }
            Ok(())
        }
        Command::Gbar { lambda, mu, nu } => {
            let lambda = Partition::parse(&lambda).map_err(|e| e.to_string())?;
            let mu = Partition::parse(&mu).map_err(|e| e.to_string())?;
            let expansion = stable::stable_kronecker_expansion(&lambda, &mu);
            match nu {
                Some(nu) => {
                    let nu = Partition::parse(&nu).map_err(|e| e.to_string())?;
                    println!("{}", coeff_to_string(&expansion.coefficient(&nu)));
                }
                None => {
                    if cli.json {
                        println!("{}", to_json_string(&expansion));
                    } else {
                        print!("{}", render_expansion(&expansion));
                    }
                }
            }
            Ok(())
        }
        Command::Dims { r, lambda, quasi } => {
            let dim = |lam: &Partition| {
                if quasi {
                    charbasis::oracle::quasi_partition_algebra_dim(lam, r)
                } else {
                    charbasis::oracle::partition_algebra_dim(lam, r)
                }
            };
            match lambda {
                Some(lambda) => {
                    let lambda = Partition::parse(&lambda).map_err(|e| e.to_string())?;
                    println!("{}", dim(&lambda));
                }
                None => {
                    for lam in partitions_up_to(r) {
                        let d = dim(&lam);
                        if d > 0 {
                            println!("{} {}", lam, d);
                        }
                    }
                }
            }
            Ok(())
        }
        Command::Selftest { max_degree } => {
            if max_degree < 1 {
                return Err("--max-degree must be at least 1".to_string());
            }
            let results = selftest::run_all(max_degree);
            let mut failures = 0;
            for result in &results {
                if result.passed {
                    if !cli.quiet {
                        println!("{}: PASS", result.name);
                    }
                } else {
                    failures += 1;
                    println!("{}: FAIL ({})", result.name, result.detail);
                }
            }
            if failures > 0 {
                return Err(format!("{} suite(s) failed", failures));
            }
            if !cli.quiet {
                println!("all {} suites passed", results.len());
            }
            Ok(())
        }
    }
}

fn eval_text(text: &str) -> Result<SymExpr, String> {
    let expr = parse_expr(text).map_err(|e| e.to_string())?;
    eval(&expr).map_err(|e| e.to_string())
}

/// Evaluate to an exact h-basis expression; Kronecker factors must be
/// homogeneous of equal degree after expansion.
fn eval(expr: &Expr) -> Result<SymExpr, Error> {
    match expr {
        Expr::Atom(basis, index) => Ok(change_basis(
            &SymExpr::atom(*basis, index.clone()),
            BasisTag::H,
        )),
        Expr::IntegerLiteral(n) => Ok(SymExpr::constant(
            BasisTag::H,
            charbasis::symfunc::coeff_int(*n),
        )),
        Expr::Scale(c, inner) => Ok(eval(inner)?.scale(&charbasis::symfunc::coeff_int(*c))),
        Expr::Product(factors) => {
            let mut out = SymExpr::constant(BasisTag::H, charbasis::symfunc::coeff_int(1));
            for factor in factors {
                out = out.multiply(&eval(factor)?);
            }
            Ok(out)
        }
        Expr::Kronecker(left, right) => {
            let lv = eval(left)?;
            let rv = eval(right)?;
            if !lv.is_homogeneous() || !rv.is_homogeneous() {
                return Err(Error::KroneckerDegree(
                    "operands must be homogeneous after expansion".into(),
                ));
            }
            if lv.degree() != rv.degree() && !lv.is_zero() && !rv.is_zero() {
                return Err(Error::KroneckerDegree(format!(
                    "operand degrees {} and {} differ",
                    lv.degree(),
                    rv.degree()
                )));
            }
            Ok(change_basis(&kronecker_product(&lv, &rv), BasisTag::H))
        }
    }
}

fn render_expansion(f: &SymExpr) -> String {
    let mut out = String::new();
    for (p, c) in f.terms() {
        out.push_str(&format!("{}{} {}\n", f.basis(), p, coeff_to_string(c)));
    }
    out
}
