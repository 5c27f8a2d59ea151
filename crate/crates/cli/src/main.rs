use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dreg_core::area::{admits, lex_i_a, lex_i_a_with_top};
use dreg_core::betti::{ahh_betti, ek_betti};
use dreg_core::complex::eagon_reiner_cm;
use dreg_core::dreg::{
    characterize, characterize_exact, l_sequence, lexd, regularity_range, RegularityRange,
};
use dreg_core::koszul::{auto_betti, betti as koszul_betti, Method as BettiMethod};
use dreg_core::squarefree::{l_star, phi_ideal, phi_inv_ideal, phi_tilde, sq_lexd, sq_regularity_range};
use dreg_core::{
    BettiDiagram, Error, ExtremalArea, HilbertSpec, Limits, MonomialIdeal, Role, SimplicialComplex,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "dreg", version, about = "Hilbert functions, Betti diagrams and lexsegment constructions for monomial ideals")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest number of monomials a single enumeration may produce.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Degree bound for the Lex(I) construction.
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Worker threads for the Koszul oracle.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IdealInput {
    /// Ideal file (`n=<int>` header, one monomial per line).
    file: Option<PathBuf>,
    /// Inline generators, e.g. `x1*x2, x3*x4`; requires `-n`.
    #[arg(long, conflicts_with = "file")]
    gens: Option<String>,
    /// Number of variables for `--gens`.
    #[arg(short, long)]
    n: Option<usize>,
}

#[derive(Args)]
struct AreaInput {
    /// Corner list such as `(2,4);(4,2)`.
    text: Option<String>,
    #[arg(long, conflicts_with = "text")]
    pts: Option<String>,
    /// Number of variables bounding the area.
    #[arg(short, long)]
    n: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Ek,
    Ahh,
    Koszul,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function H(I, t) for t = 0..=top.
    Hilb {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        top: Option<usize>,
        /// Report H(S/I, t) instead.
        #[arg(long)]
        quotient: bool,
    },
    /// Graded Betti diagram of I.
    Betti {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Lexsegment ideal with the same Hilbert function.
    Lex {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Squarefree lexsegment ideal with the same Hilbert function.
    Sqlex {
        #[command(flatten)]
        input: IdealInput,
    },
    /// d-lexsegment ideal Lex^(d)(I).
    Dlex {
        #[command(flatten)]
        input: IdealInput,
        #[arg(short)]
        d: usize,
    },
    /// Squarefree d-lexsegment ideal.
    Sqdlex {
        #[command(flatten)]
        input: IdealInput,
        #[arg(short)]
        d: usize,
    },
    /// Squarefree operation on a strongly stable ideal generated in one degree.
    Phi {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Inverse of `phi`.
    PhiInv {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Squarefree operation within the same ring.
    PhiTilde {
        #[command(flatten)]
        input: IdealInput,
    },
    /// ℓ-sequence (or ℓ*-sequence with `--star`) of an ideal generated in one degree.
    Lseq {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        star: bool,
    },
    /// Decide whether H is the Hilbert function of an ideal with regularity at most d.
    Characterize {
        /// Hilbert function file (`n=<int> role=<ideal|quotient>` header, one value per line).
        file: Option<PathBuf>,
        /// Inline comma-separated values H(0), H(1), ...; requires `-n`.
        #[arg(long, conflicts_with = "file")]
        values: Option<String>,
        #[arg(short, long)]
        n: Option<usize>,
        /// Inline values describe S/I.
        #[arg(long)]
        quotient: bool,
        #[arg(short)]
        d: usize,
        /// Require regularity exactly d.
        #[arg(long)]
        exact: bool,
    },
    /// Regularities realized by the Hilbert function of I, from reg(I) upward.
    RegRange {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Squarefree analogue of `reg-range`.
    SqRegRange {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Extremal areas.
    Area {
        #[command(subcommand)]
        op: AreaOp,
    },
    /// Ideal with maximal Betti numbers admitting an area.
    Lexarea {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        area: String,
        /// Top point `i,j` to build from.
        #[arg(long)]
        top: Option<String>,
    },
    /// Simplicial complexes.
    Complex {
        #[command(subcommand)]
        op: ComplexOp,
    },
}

#[derive(Subcommand)]
enum AreaOp {
    /// Semi-convex hull.
    Conv(AreaInput),
    /// Semi-convexity, top points and reducible points.
    Check(AreaInput),
    /// Standard representation.
    Rep(AreaInput),
}

#[derive(Args)]
struct ComplexInput {
    /// Complex file (`vertices=<n>` header, one facet per line).
    file: PathBuf,
}

#[derive(Subcommand)]
enum ComplexOp {
    Fvec(ComplexInput),
    Hvec(ComplexInput),
    /// Alexander dual.
    Dual(ComplexInput),
    /// Stanley-Reisner ideal.
    Sr(ComplexInput),
    /// Cohen-Macaulay test through the Alexander dual.
    Cm(ComplexInput),
}

enum Failure {
    Domain(Error),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Input(e.to_string()),
            e => Failure::Domain(e),
        }
    }
}

type Outcome = Result<(String, Value), Failure>;

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

impl IdealInput {
    fn load(&self) -> Result<MonomialIdeal, Failure> {
        match (&self.file, &self.gens) {
            (Some(path), _) => Ok(MonomialIdeal::parse(&read(path)?)?),
            (None, Some(gens)) => {
                let n = self.n.ok_or_else(|| Failure::Input("--gens needs -n".into()))?;
                Ok(MonomialIdeal::parse_inline(n, gens)?)
            }
            (None, None) => Err(Failure::Input("no ideal given (file or --gens)".into())),
        }
    }
}

impl AreaInput {
    fn load(&self) -> Result<ExtremalArea, Failure> {
        let text = self
            .text
            .as_ref()
            .or(self.pts.as_ref())
            .ok_or_else(|| Failure::Input("no area given".into()))?;
        Ok(ExtremalArea::parse(text, self.n)?)
    }
}

fn num(v: &impl ToString) -> Value {
    let s = v.to_string();
    match s.parse::<u64>() {
        Ok(x) => json!(x),
        Err(_) => match s.parse::<i64>() {
            Ok(x) => json!(x),
            Err(_) => json!(s),
        },
    }
}

fn ideal_out(ideal: &MonomialIdeal) -> (String, Value) {
    let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
    (ideal.to_string(), json!({ "n": ideal.num_vars(), "generators": gens }))
}

fn diagram_json(d: &BettiDiagram) -> Value {
    let entries: Vec<Value> = d
        .entries()
        .map(|(&(i, j), v)| json!({ "i": i, "j": j, "value": num(v) }))
        .collect();
    let totals: Vec<Value> = d.totals().iter().map(num).collect();
    json!({
        "entries": entries,
        "totals": totals,
        "regularity": d.regularity().ok(),
        "projdim": d.projdim().ok(),
    })
}

fn range_out(r: &RegularityRange) -> (String, Value) {
    let values: Vec<String> = r.values().iter().map(|v| v.to_string()).collect();
    let mut text = format!("range: {}\n", values.join(" "));
    let mut witnesses = Vec::new();
    for (reg, w) in &r.witnesses {
        text.push_str(&format!("{reg}: {}\n", dreg_core::ideal::format_generators(w)));
        witnesses.push(json!({ "regularity": reg, "ideal": ideal_out(w).1 }));
    }
    (text, json!({ "values": r.values(), "witnesses": witnesses }))
}

fn area_json(a: &ExtremalArea) -> Value {
    json!({
        "bound": a.bound(),
        "corners": a.standard_representation(),
        "text": a.to_string(),
    })
}

fn pair(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Input(format!("expected `i,j`, found `{text}`"));
    let t = text.trim().trim_start_matches('(').trim_end_matches(')');
    let (a, b) = t.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn run(cli: &Cli) -> Outcome {
    let mut limits = Limits::default();
    if let Some(c) = cli.cap {
        limits.enum_cap = c;
    }
    if let Some(m) = cli.max_degree {
        limits.max_degree = m;
    }
    let limits = &limits;
    match &cli.command {
        Command::Hilb { input, top, quotient } => {
            let ideal = input.load()?;
            let top = top.unwrap_or(ideal.max_degree().unwrap_or(0) + ideal.num_vars());
            let role = if *quotient { Role::Quotient } else { Role::Ideal };
            let h = ideal.hilbert_spec(top, role, limits)?;
            let values: Vec<Value> = (0..=top).map(|t| num(h.get(t).unwrap())).collect();
            let role = if *quotient { "quotient" } else { "ideal" };
            Ok((h.to_string(), json!({ "n": ideal.num_vars(), "role": role, "values": values })))
        }
        Command::Betti { input, method } => {
            let ideal = input.load()?;
            let (d, name) = match method {
                MethodArg::Ek => (ek_betti(&ideal)?, "ek"),
                MethodArg::Ahh => (ahh_betti(&ideal)?, "ahh"),
                MethodArg::Koszul => (koszul_betti(&ideal, limits)?, "koszul"),
                MethodArg::Auto => {
                    let (d, m) = auto_betti(&ideal, limits)?;
                    let name = match m {
                        BettiMethod::EliahouKervaire => "ek",
                        BettiMethod::AramovaHerzogHibi => "ahh",
                        BettiMethod::Koszul => "koszul",
                    };
                    (d, name)
                }
            };
            let mut v = diagram_json(&d);
            v["method"] = json!(name);
            Ok((d.to_table(), v))
        }
        Command::Lex { input } => Ok(ideal_out(&input.load()?.lexify(limits)?)),
        Command::Sqlex { input } => Ok(ideal_out(&input.load()?.sq_lexify(limits)?)),
        Command::Dlex { input, d } => Ok(ideal_out(&lexd(&input.load()?, *d, limits)?)),
        Command::Sqdlex { input, d } => Ok(ideal_out(&sq_lexd(&input.load()?, *d, limits)?)),
        Command::Phi { input } => Ok(ideal_out(&phi_ideal(&input.load()?)?)),
        Command::PhiInv { input } => Ok(ideal_out(&phi_inv_ideal(&input.load()?)?)),
        Command::PhiTilde { input } => Ok(ideal_out(&phi_tilde(&input.load()?)?)),
        Command::Lseq { input, star } => {
            let ideal = input.load()?;
            let l = if *star { l_star(&ideal)?.as_l() } else { l_sequence(&ideal)? };
            let entries: Vec<Value> = l.entries.iter().map(num).collect();
            Ok((format!("{l}\n"), json!({ "degree": l.degree, "l": entries })))
        }
        Command::Characterize { file, values, n, quotient, d, exact } => {
            let h = match (file, values) {
                (Some(path), _) => HilbertSpec::parse(&read(path)?)?,
                (None, Some(values)) => {
                    let n = n.ok_or_else(|| Failure::Input("--values needs -n".into()))?;
                    let role = if *quotient { "quotient" } else { "ideal" };
                    let body: Vec<&str> = values.split(',').map(str::trim).collect();
                    HilbertSpec::parse(&format!("n={n} role={role}\n{}\n", body.join("\n")))?
                }
                (None, None) => return Err(Failure::Input("no Hilbert function given".into())),
            };
            let v = if *exact { characterize_exact(&h, *d)? } else { characterize(&h, *d)? };
            let l = v.witness.as_ref().map(|l| l.entries.iter().map(num).collect::<Vec<_>>());
            let value = json!({
                "admissible": v.admissible,
                "failed": v.failed,
                "detail": v.detail,
                "l": l,
            });
            Ok((format!("{v}\n"), value))
        }
        Command::RegRange { input } => Ok(range_out(&regularity_range(&input.load()?, limits)?)),
        Command::SqRegRange { input } => Ok(range_out(&sq_regularity_range(&input.load()?, limits)?)),
        Command::Area { op } => match op {
            AreaOp::Conv(a) => {
                let h = a.load()?.conv_hull();
                Ok((format!("{h}\n"), area_json(&h)))
            }
            AreaOp::Rep(a) => {
                let a = a.load()?;
                Ok((format!("{a}\n"), area_json(&a)))
            }
            AreaOp::Check(a) => {
                let a = a.load()?;
                let list = |pts: &[(usize, usize)]| {
                    pts.iter().map(|(i, j)| format!("({i},{j})")).collect::<Vec<_>>().join(";")
                };
                let (tops, red) = (a.top_points(), a.reducible_points());
                let text = format!(
                    "area: {a}\nsemi-convex: {}\ntop points: {}\nreducible points: {}\n",
                    a.is_semi_convex(),
                    list(&tops),
                    list(&red)
                );
                let mut v = area_json(&a);
                v["semi_convex"] = json!(a.is_semi_convex());
                v["top_points"] = json!(tops);
                v["reducible_points"] = json!(red);
                Ok((text, v))
            }
        },
        Command::Lexarea { input, area, top } => {
            let ideal = input.load()?;
            let area = ExtremalArea::parse(area, Some(ideal.num_vars()))?;
            let l = match top {
                Some(t) => lex_i_a_with_top(&ideal, &area, pair(t)?, limits)?,
                None => lex_i_a(&ideal, &area, limits)?,
            };
            debug_assert!(admits(&ek_betti(&l)?, &area));
            Ok(ideal_out(&l))
        }
        Command::Complex { op } => {
            let load = |c: &ComplexInput| -> Result<SimplicialComplex, Failure> {
                Ok(SimplicialComplex::parse(&read(&c.file)?)?)
            };
            match op {
                ComplexOp::Fvec(c) => {
                    let f = load(c)?.f_vector(limits)?;
                    let s: Vec<String> = f.iter().map(|x| x.to_string()).collect();
                    Ok((format!("{}\n", s.join(" ")), json!(f.iter().map(num).collect::<Vec<_>>())))
                }
                ComplexOp::Hvec(c) => {
                    let h = load(c)?.h_vector(limits)?;
                    let s: Vec<String> = h.iter().map(|x| x.to_string()).collect();
                    Ok((format!("{}\n", s.join(" ")), json!(h.iter().map(num).collect::<Vec<_>>())))
                }
                ComplexOp::Dual(c) => {
                    let d = load(c)?.alexander_dual(limits)?;
                    Ok((d.to_string(), json!({ "vertices": d.vertex_count(), "facets": d.facets() })))
                }
                ComplexOp::Sr(c) => Ok(ideal_out(&load(c)?.stanley_reisner(limits)?)),
                ComplexOp::Cm(c) => {
                    let cm = eagon_reiner_cm(&load(c)?, limits)?;
                    Ok((format!("{cm}\n"), json!({ "cohen_macaulay": cm })))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok((text, value)) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            if cli.json {
                eprintln!("{}", json!({ "error": format!("{e:?}"), "message": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
