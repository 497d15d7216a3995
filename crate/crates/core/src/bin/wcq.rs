use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde_json::json;

use wcqsym::hopf::{format_tensor2, Basis};
use wcqsym::literal::parse_element;
use wcqsym::oracle::{self, TruncSeries};
use wcqsym::projection::{phi, verify_kernel_truncation};
use wcqsym::rota_baxter::{
    diamond, format_sha, format_sha_tensor2, rb_check_random, rb_operator, sha_antipode,
    sha_coproduct, ShaElem, TensorBounds, DEFAULT_SEED,
};
use wcqsym::{json, Composition, Error, WQSymElem};

const GRAMMAR: &str = "\
Literals:
  composition  (e,2,e^3)   entries are `e` or positive integers, `e^n` repeats `e`; `()` is empty
  element      M(3) + 2*M(2,1) - (e)   a signed sum of compositions, each optionally
               prefixed by M or F; `0` is zero
  tensor       x^2|0|3     x^a0 followed by |-separated exponents; `1` is the unit
  sha element  2*x^0|1|1 + x^1 - 1

Exit status: 0 on success, 1 when a check fails, 2 on malformed input or usage errors.";

/// Largest expansion `expand` will enumerate.
const MAX_EXPANSION_TERMS: u64 = 2_000_000;

#[derive(Parser)]
#[command(
    name = "wcq",
    version,
    about = "Weak composition quasi-symmetric functions and the free Rota-Baxter algebra on x",
    after_help = GRAMMAR
)]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply elements; the result is in the first argument's basis.
    Mul {
        #[arg(required = true, allow_hyphen_values = true)]
        elements: Vec<String>,
    },
    /// Coproduct, with both factors in the input's basis.
    Coprod {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Counit.
    Counit {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Antipode, in the input's basis.
    Antipode {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Rewrite an M-basis element in the F basis.
    M2f {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Rewrite an F-basis element in the M basis; unprefixed keys are read as F.
    F2m {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Project onto QSym.
    Phi {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Check the kernel basis of the projection on a truncated span.
    KernelCheck {
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[arg(long, default_value_t = 2)]
        max_entry: u64,
    },
    /// Operations in the free Rota-Baxter algebra Ш(x).
    Sha {
        #[command(subcommand)]
        command: ShaCommand,
    },
    /// Check the Rota-Baxter identity on seeded random pairs of pure tensors.
    RbCheck {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_head: u64,
        #[arg(long, default_value_t = 2)]
        max_len: usize,
        #[arg(long, default_value_t = 3)]
        max_entry: u64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        lambda: i64,
    },
    /// Expand a basis element as a polynomial in finitely many variables.
    Expand {
        #[arg(long)]
        vars: usize,
        #[arg(long, value_enum, ignore_case = true, default_value_t = BasisArg::M)]
        basis: BasisArg,
        composition: String,
    },
    /// Compare products and F expansions against brute-force polynomials.
    OracleCheck {
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[arg(long, default_value_t = 2)]
        max_entry: u64,
        /// Variable count; defaults to the total length of each pair.
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Check the exponential identity between power sums and elementary symmetric polynomials.
    Waring {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        order: usize,
    },
}

#[derive(Subcommand)]
enum ShaCommand {
    /// Augmented mixable shuffle product of weight 1.
    Mul {
        #[arg(required = true, allow_hyphen_values = true)]
        elements: Vec<String>,
    },
    /// Coproduct.
    Coprod {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Antipode.
    Antipode {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// The Rota-Baxter operator.
    #[command(name = "P")]
    P {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    M,
    F,
}

enum Outcome {
    Done,
    CheckFailed,
}

fn print_element(as_json: bool, u: &WQSymElem) {
    if as_json {
        println!("{}", json::element(u));
    } else {
        println!("{u}");
    }
}

fn print_sha(as_json: bool, u: &ShaElem) {
    if as_json {
        println!("{}", json::sha(u));
    } else {
        println!("{}", format_sha(u));
    }
}

fn print_check(as_json: bool, value: serde_json::Value, text: String, passed: bool) -> Outcome {
    if as_json {
        println!("{value}");
    } else {
        println!("{text}");
    }
    if passed {
        Outcome::Done
    } else {
        Outcome::CheckFailed
    }
}

fn element(s: &str) -> Result<WQSymElem, Error> {
    parse_element(s, Basis::M)
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let j = cli.json;
    match cli.command {
        Command::Mul { elements } => {
            let mut acc = element(&elements[0])?;
            for s in &elements[1..] {
                acc = acc.mul(&element(s)?)?;
            }
            print_element(j, &acc);
        }
        Command::Coprod { element: s } => {
            let u = element(&s)?;
            let d = u.coproduct()?;
            if j {
                println!("{}", json::tensor2(u.basis, &d));
            } else {
                println!("{}", format_tensor2(u.basis, &d));
            }
        }
        Command::Counit { element: s } => {
            let c = element(&s)?.counit()?;
            if j {
                println!("{}", json!({"coeff": c.to_string()}));
            } else {
                println!("{c}");
            }
        }
        Command::Antipode { element: s } => print_element(j, &element(&s)?.antipode()?),
        Command::M2f { element: s } => {
            let u = element(&s)?;
            u.expect_basis(Basis::M)?;
            print_element(j, &u.to_f()?);
        }
        Command::F2m { element: s } => {
            let u = parse_element(&s, Basis::F)?;
            u.expect_basis(Basis::F)?;
            print_element(j, &u.to_m()?);
        }
        Command::Phi { element: s } => {
            let u = element(&s)?.to_m()?;
            print_element(j, &WQSymElem::new(Basis::M, phi(&u.value)));
        }
        Command::KernelCheck { max_len, max_entry } => {
            if max_len > 6 || max_entry > 6 {
                return Err(Error::TooLarge(format!(
                    "a kernel check with max_len {max_len} and max_entry {max_entry}"
                )));
            }
            let r = verify_kernel_truncation(max_len, max_entry);
            return Ok(print_check(
                j,
                json::kernel_report(&r),
                r.to_string(),
                r.passed(),
            ));
        }
        Command::Sha { command } => run_sha(j, command)?,
        Command::RbCheck {
            trials,
            seed,
            max_head,
            max_len,
            max_entry,
            lambda,
        } => {
            let bounds = TensorBounds {
                max_head,
                max_len,
                max_entry,
            };
            let r = rb_check_random(trials, seed, bounds, &BigInt::from(lambda));
            let failures: Vec<String> = r
                .failures
                .iter()
                .map(|(u, v)| format!("{u} , {v}"))
                .collect();
            let value = json!({
                "trials": r.trials,
                "seed": r.seed,
                "lambda": lambda,
                "failures": failures,
                "passed": r.passed(),
            });
            let mut text = format!(
                "trials: {}\nseed: {}\nlambda: {lambda}\nfailures: {}",
                r.trials,
                r.seed,
                failures.len()
            );
            for f in &failures {
                text.push_str(&format!("\n  {f}"));
            }
            text.push_str(if r.passed() {
                "\nresult: pass"
            } else {
                "\nresult: FAIL"
            });
            return Ok(print_check(j, value, text, r.passed()));
        }
        Command::Expand {
            vars,
            basis,
            composition,
        } => {
            let alpha: Composition = composition.parse()?;
            let (bound, series): (BigUint, fn(&Composition, usize) -> TruncSeries) = match basis {
                BasisArg::M => (oracle::m_term_bound(&alpha, vars), oracle::expand_m),
                BasisArg::F => (oracle::f_term_bound(&alpha, vars), oracle::expand_f),
            };
            if bound > BigUint::from(MAX_EXPANSION_TERMS) {
                return Err(Error::TooLarge(format!(
                    "expanding {alpha} in {vars} variables"
                )));
            }
            let s = series(&alpha, vars);
            if j {
                println!("{}", json::series(&s));
            } else {
                println!("{s}");
            }
        }
        Command::OracleCheck {
            max_len,
            max_entry,
            vars,
        } => {
            if max_len > 4 || max_entry > 4 || vars.is_some_and(|n| n > 10) {
                return Err(Error::TooLarge(
                    "an oracle check with these bounds".to_string(),
                ));
            }
            let r = oracle::oracle_check(max_len, max_entry, vars)?;
            let value = json!({
                "products_checked": r.products_checked,
                "fundamentals_checked": r.fundamentals_checked,
                "failures": r.failures,
                "passed": r.passed(),
            });
            let mut text = format!(
                "products_checked: {}\nfundamentals_checked: {}\nfailures: {}",
                r.products_checked,
                r.fundamentals_checked,
                r.failures.len()
            );
            for f in &r.failures {
                text.push_str(&format!("\n  {f}"));
            }
            text.push_str(if r.passed() {
                "\nresult: pass"
            } else {
                "\nresult: FAIL"
            });
            return Ok(print_check(j, value, text, r.passed()));
        }
        Command::Waring { vars, order } => {
            if vars == 0 || vars > 8 || order > 12 {
                return Err(Error::TooLarge(format!(
                    "a Waring check with {vars} variables to order {order}"
                )));
            }
            let passed = oracle::waring_check(vars, order);
            let value = json!({"vars": vars, "order": order, "passed": passed});
            let text = format!(
                "vars: {vars}\norder: {order}\nresult: {}",
                if passed { "pass" } else { "FAIL" }
            );
            return Ok(print_check(j, value, text, passed));
        }
    }
    Ok(Outcome::Done)
}

fn run_sha(j: bool, command: ShaCommand) -> Result<(), Error> {
    let one = BigInt::from(1);
    match command {
        ShaCommand::Mul { elements } => {
            let mut acc: ShaElem = elements[0].parse()?;
            for s in &elements[1..] {
                acc = diamond(&acc, &s.parse()?, &one);
            }
            print_sha(j, &acc);
        }
        ShaCommand::Coprod { element } => {
            let d = sha_coproduct(&element.parse()?)?;
            if j {
                println!("{}", json::sha_tensor2(&d));
            } else {
                println!("{}", format_sha_tensor2(&d));
            }
        }
        ShaCommand::Antipode { element } => print_sha(j, &sha_antipode(&element.parse()?)?),
        ShaCommand::P { element } => print_sha(j, &rb_operator(&element.parse()?)),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
