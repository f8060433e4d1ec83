use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use dres_core::expr::{parse, ParseError};
use dres_core::galois::multiplicative_relations;
use dres_core::hermite::hermite_list;
use dres_core::reduction::simple_reduction;
use dres_core::residues::{
    discrete_residues, discrete_residues_coordinated, discrete_residues_multi, DresOutput,
};
use dres_core::shiftset::shift_set;
use dres_core::summability::{is_summable, polynomial_antidifference, vspace};
use dres_core::testkit::{build_from_spec, check_against_oracle, dres_by_definition, OrbitSpec};
use dres_core::{rat_to_string, Error, Poly, Rat, RatFun};

/// Discrete residues and rational summability over Q(x).
///
/// Expressions use `x`, integers, `+ - * / ^` and parentheses, e.g.
/// "1/(x^2*(x+1))". Polynomial parts are dropped wherever only the proper
/// part matters.
#[derive(Parser, Debug)]
#[command(name = "dres", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing on success; only the exit code reports the outcome.
    #[arg(long, global = true)]
    quiet: bool,
    /// Render polynomials as expressions instead of coefficient lists.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Discrete residues (B_k, D_k) for every pole order k.
    Dres {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Reduce each order separately instead of with a shared shift set.
        #[arg(long)]
        per_order: bool,
    },
    /// Discrete residues of several functions over a common B.
    DresMulti {
        #[arg(required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Reduced form of a function with simple poles.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Also print g with f = reduced + g(x+1) - g(x).
        #[arg(long)]
        certificate: bool,
    },
    /// Simple-pole layers f_1, ..., f_m of the proper part.
    Hermite {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Positive integer shifts between roots of a polynomial.
    ShiftSet {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Whether f = g(x+1) - g(x) for a rational g.
    Summable {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Also print such a g.
        #[arg(long)]
        certificate: bool,
    },
    /// Basis of the coefficient vectors v with sum v_i f_i summable.
    #[command(alias = "block-diagonal")]
    Vspace {
        #[arg(required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Exponent vectors e with prod r_i^e_i = p(x+1)/p(x) for a rational p.
    MultRelations {
        #[arg(required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Compare symbolic residues with the definition on an `alpha k c` file.
    Oracle { specfile: std::path::PathBuf },
}

enum Failure {
    Usage(String),
    Precondition(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Precondition(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Precondition(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Precondition(e.to_string())
        }
    }
}

fn parse_arg(src: &str) -> Result<RatFun, Failure> {
    parse(src).map_err(|e: ParseError| Failure::Usage(format!("cannot parse {src:?}: {e}")))
}

fn parse_args(srcs: &[String]) -> Result<Vec<RatFun>, Failure> {
    srcs.iter().map(|s| parse_arg(s)).collect()
}

struct Fmt {
    pretty: bool,
}

impl Fmt {
    fn rat(&self, r: &Rat) -> String {
        r.to_string()
    }

    fn poly(&self, p: &Poly) -> String {
        if self.pretty {
            p.to_string()
        } else {
            let cs: Vec<String> = p.coeffs().iter().map(|c| self.rat(c)).collect();
            format!("[{}]", cs.join(", "))
        }
    }

    fn ratfun(&self, f: &RatFun) -> String {
        if self.pretty {
            f.to_string()
        } else {
            format!("{} / {}", self.poly(f.num()), self.poly(f.den()))
        }
    }
}

fn poly_json(p: &Poly) -> Value {
    Value::from(p.coeffs().iter().map(rat_to_string).collect::<Vec<_>>())
}

fn ratfun_json(f: &RatFun) -> Value {
    json!({ "num": poly_json(f.num()), "den": poly_json(f.den()) })
}

fn ints_json(v: &[BigInt]) -> Value {
    Value::from(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

struct Report {
    text: String,
    json: Value,
}

fn dres_report(out: &DresOutput, fmt: &Fmt) -> Report {
    let mut text = String::new();
    let mut pairs = Vec::new();
    for (i, pair) in out.pairs.iter().enumerate() {
        let k = i + 1;
        text.push_str(&format!(
            "k={k} B={} D={}\n",
            fmt.poly(&pair.b),
            fmt.poly(&pair.d)
        ));
        pairs.push(json!({ "k": k, "B": poly_json(&pair.b), "D": poly_json(&pair.d) }));
    }
    Report {
        text,
        json: json!({ "pairs": pairs }),
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let fmt = Fmt { pretty: cli.pretty };
    match &cli.command {
        Command::Dres { expr, per_order } => {
            let (_, f) = parse_arg(expr)?.proper_part();
            let out = if f.is_zero() {
                DresOutput { pairs: Vec::new() }
            } else if *per_order {
                discrete_residues(&f)?
            } else {
                discrete_residues_coordinated(&f)?
            };
            Ok(dres_report(&out, &fmt))
        }
        Command::DresMulti { exprs } => {
            let fs: Vec<RatFun> = parse_args(exprs)?
                .into_iter()
                .map(|f| f.proper_part().1)
                .collect();
            if fs.iter().any(RatFun::is_zero) {
                return Err(Failure::Precondition(
                    "dres-multi: every input needs a nonzero proper part".into(),
                ));
            }
            let out = discrete_residues_multi(&fs)?;
            let mut text = format!("B={}\n", fmt.poly(&out.b));
            for (i, row) in out.d.iter().enumerate() {
                for (k, d) in row.iter().enumerate() {
                    text.push_str(&format!("f{} k={} D={}\n", i + 1, k + 1, fmt.poly(d)));
                }
            }
            let d: Vec<Value> = out
                .d
                .iter()
                .map(|row| Value::from(row.iter().map(poly_json).collect::<Vec<_>>()))
                .collect();
            Ok(Report {
                text,
                json: json!({ "B": poly_json(&out.b), "D": d }),
            })
        }
        Command::Reduce { expr, certificate } => {
            let (poly, f) = parse_arg(expr)?.proper_part();
            let out = simple_reduction(&f, *certificate)?;
            let mut text = format!("reduced={}\n", fmt.ratfun(&out.reduced));
            let mut js = json!({ "reduced": ratfun_json(&out.reduced) });
            if let Some(g) = out.certificate {
                let g = &g + &RatFun::from_poly(polynomial_antidifference(&poly));
                text.push_str(&format!("certificate={}\n", fmt.ratfun(&g)));
                js["certificate"] = ratfun_json(&g);
            }
            Ok(Report { text, json: js })
        }
        Command::Hermite { expr } => {
            let (_, f) = parse_arg(expr)?.proper_part();
            let layers = hermite_list(&f)?;
            let mut text = String::new();
            let mut js = Vec::new();
            for (i, fk) in layers.layers.iter().enumerate() {
                text.push_str(&format!("k={} f={}\n", i + 1, fmt.ratfun(fk)));
                js.push(json!({ "k": i + 1, "f": ratfun_json(fk) }));
            }
            Ok(Report {
                text,
                json: json!({ "layers": js }),
            })
        }
        Command::ShiftSet { poly } => {
            let f = parse_arg(poly)?;
            if !f.is_polynomial() {
                return Err(Error::NotPolynomial("shift-set").into());
            }
            let shifts = shift_set(f.num())?.shifts;
            let text: Vec<String> = shifts.iter().map(u64::to_string).collect();
            Ok(Report {
                text: format!("{}\n", text.join(" ")),
                json: json!({ "shifts": shifts }),
            })
        }
        Command::Summable { expr, certificate } => {
            let f = parse_arg(expr)?;
            let s = is_summable(&f, *certificate)?;
            let mut text = String::from(if s.summable {
                "summable\n"
            } else {
                "not summable\n"
            });
            let mut js = json!({ "summable": s.summable });
            if let Some(g) = &s.certificate {
                text.push_str(&format!("certificate={}\n", fmt.ratfun(g)));
                js["certificate"] = ratfun_json(g);
            }
            Ok(Report { text, json: js })
        }
        Command::Vspace { exprs } => {
            let fs = parse_args(exprs)?;
            let basis = vspace(&fs)?;
            let mut text = format!("dim={}\n", basis.dimension());
            for v in &basis.vectors {
                let cs: Vec<String> = v.iter().map(|c| fmt.rat(c)).collect();
                text.push_str(&format!("[{}]\n", cs.join(", ")));
            }
            let vs: Vec<Value> = basis
                .vectors
                .iter()
                .map(|v| Value::from(v.iter().map(rat_to_string).collect::<Vec<_>>()))
                .collect();
            Ok(Report {
                text,
                json: json!({ "dimension": basis.dimension(), "basis": vs }),
            })
        }
        Command::MultRelations { exprs } => {
            let rs = parse_args(exprs)?;
            let lat = multiplicative_relations(&rs)?;
            let show = |rows: &[Vec<BigInt>]| -> String {
                rows.iter()
                    .map(|r| {
                        let cs: Vec<String> = r.iter().map(ToString::to_string).collect();
                        format!("[{}]", cs.join(", "))
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let gammas: Vec<String> = lat.gammas.iter().map(|g| fmt.rat(g)).collect();
            let text = format!(
                "tilde={}\ngammas=[{}]\nrelations={}\n",
                show(&lat.tilde_basis),
                gammas.join(", "),
                show(&lat.basis)
            );
            let rows = |m: &[Vec<BigInt>]| -> Value {
                Value::from(m.iter().map(|r| ints_json(r)).collect::<Vec<_>>())
            };
            Ok(Report {
                text,
                json: json!({
                    "tilde_basis": rows(&lat.tilde_basis),
                    "gammas": lat.gammas.iter().map(rat_to_string).collect::<Vec<_>>(),
                    "potentials": lat.potentials.iter().map(ratfun_json).collect::<Vec<_>>(),
                    "basis": rows(&lat.basis),
                }),
            })
        }
        Command::Oracle { specfile } => {
            let src = std::fs::read_to_string(specfile)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", specfile.display())))?;
            let spec = OrbitSpec::parse(&src).map_err(|e| Failure::Usage(e.to_string()))?;
            let f = build_from_spec(&spec)?;
            let expected = dres_by_definition(&spec);
            let mut text = String::new();
            for o in &expected {
                text.push_str(&format!(
                    "orbit={} k={} residue={}\n",
                    fmt.rat(&o.rep),
                    o.k,
                    fmt.rat(&o.value)
                ));
            }
            let checks = [
                ("coordinated", discrete_residues_coordinated(&f)?),
                ("per-order", discrete_residues(&f)?),
            ];
            for (name, out) in &checks {
                check_against_oracle(out, &spec)
                    .map_err(|e| Failure::Internal(format!("{name} residues disagree: {e}")))?;
            }
            text.push_str("match\n");
            let residues: Vec<Value> = expected
                .iter()
                .map(|o| json!({ "rep": rat_to_string(&o.rep), "k": o.k, "value": rat_to_string(&o.value) }))
                .collect();
            Ok(Report {
                text,
                json: json!({ "residues": residues, "match": true }),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = std::panic::catch_unwind(|| run(&cli))
        .unwrap_or_else(|_| Err(Failure::Internal("panic".into())));
    match outcome {
        Ok(report) => {
            if !cli.quiet {
                if cli.json {
                    println!("{}", report.json);
                } else {
                    print!("{}", report.text);
                }
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
