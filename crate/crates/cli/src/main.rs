use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use nutforge::families::{
    build_main_lemma, caux_scan, cayley_family, compute_ell, conjecture_sweep, d_family,
    first_admissible_prime, JumpSet, Variant,
};
use nutforge::graphcore::{cartesian_product, graph6, named_graph, CirculantSpec, NamedGraph};
use nutforge::nutcert::{circulant_is_nut, feasible, is_nut, FeasibilityQuery, Family, Verdict};
use nutforge::{Error, Graph, NutCertificate};

#[derive(Parser)]
#[command(name = "nutforge", version, about = "Construct and certify regular nut graphs")]
struct Cli {
    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify a graph given as graph6 (or `named:NAME`).
    Verify {
        graph: Option<String>,
        /// Read the graph from a file; `-` reads stdin.
        #[arg(long, conflicts_with = "graph")]
        file: Option<String>,
    },
    /// Generate a graph and print it as graph6.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
        /// Also certify the generated graph.
        #[arg(long, global = true)]
        certify: bool,
    },
    /// Compute alpha, beta and ell for G □ Circ(2p, S).
    Ell {
        /// graph6 string or `named:NAME`.
        #[arg(long)]
        graph: String,
        /// Comma-separated ascending jumps.
        #[arg(long)]
        jumps: String,
        /// Build and certify the product at the smallest admissible prime.
        #[arg(long)]
        build_first_prime: bool,
    },
    /// Scan the auxiliary polynomials P1, P2 for cyclotomic factors.
    Caux {
        #[arg(long)]
        t_max: u64,
    },
    /// Certify the conjectured products over a range of t.
    Conjecture {
        #[arg(long)]
        variant: String,
        #[arg(long)]
        t_min: u64,
        #[arg(long)]
        t_max: u64,
    },
    /// Decide whether an order is attainable by a nut graph of the family.
    Feasible {
        /// reg3..reg12, circ, vt or cay.
        #[arg(long)]
        family: String,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Circulant graph Circ(n, S).
    Circulant {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        jumps: String,
    },
    /// Built-in fixture graph.
    Named {
        name: String,
    },
    /// Cartesian product of two graphs (graph6 or named:NAME).
    Product {
        a: String,
        b: String,
    },
    /// Circulant D(n, t) of degree 4t.
    Dfam {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// Cayley graph of degree 4t+2 on Z_m x Z_2.
    Cayfam {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        t: usize,
    },
}

enum Failure {
    Usage(String),
    Property,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

// Write errors (a closed pipe, typically) are not worth a panic.
macro_rules! out {
    ($($arg:tt)*) => {{
        let _ = write!(io::stdout(), $($arg)*);
    }};
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        let _ = writeln!(io::stdout(), $($arg)*);
    }};
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            eprintln!("{}", rendered.lines().next().unwrap_or("error: invalid arguments"));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Verify { graph, file } => {
            let text = match (graph, file) {
                (Some(g), None) if g != "-" => g.clone(),
                (Some(_), None) => read_source("-")?,
                (None, Some(path)) => read_source(path)?,
                _ => return Err(Failure::Usage("expected a graph6 string or --file".into())),
            };
            let g = parse_graph(&text)?;
            let cert = is_nut(&g)?;
            if cli.json {
                print_json(&cert.to_json());
            } else {
                out!("{cert}");
            }
            verdict_exit(cert.is_nut)
        }
        Command::Gen { what, certify } => gen(cli.json, what, *certify),
        Command::Ell {
            graph,
            jumps,
            build_first_prime,
        } => ell(cli.json, graph, jumps, *build_first_prime),
        Command::Caux { t_max } => {
            if *t_max == 0 {
                return Err(Failure::Usage("--t-max must be at least 1".into()));
            }
            let rows = caux_scan(*t_max);
            let clean = rows.iter().all(|r| r.violations.is_empty());
            if cli.json {
                print_json(&serde_json::to_value(&rows).expect("rows serialize"));
            } else {
                for r in &rows {
                    let status = if r.violations.is_empty() { "ok" } else { "VIOLATION" };
                    outln!(
                        "t={} P1 orders {{{}}} P2 orders {{{}}} {status}",
                        r.t,
                        join(r.p1_orders.iter()),
                        join(r.p2_orders.iter())
                    );
                }
            }
            verdict_exit(clean)
        }
        Command::Conjecture {
            variant,
            t_min,
            t_max,
        } => {
            let variant: Variant = variant.parse()?;
            if t_min > t_max {
                return Err(Failure::Usage("--t-min exceeds --t-max".into()));
            }
            let results = conjecture_sweep(variant, *t_min, *t_max);
            let mut all_nut = true;
            let mut rows = Vec::new();
            for (t, res) in results {
                let cert = res?;
                all_nut &= cert.is_nut;
                if cli.json {
                    rows.push(json!({ "t": t, "certificate": cert.to_json() }));
                } else {
                    outln!(
                        "t={t} order {} degree {} nut {} ({})",
                        cert.order,
                        cert.degree,
                        if cert.is_nut { "yes" } else { "no" },
                        cert.route
                    );
                    if let Some(r) = &cert.failure_reason {
                        outln!("  failure: {r}");
                    }
                }
            }
            if cli.json {
                print_json(&Value::Array(rows));
            }
            verdict_exit(all_nut)
        }
        Command::Feasible { family, d, n } => {
            let family: Family = family.parse()?;
            let q = FeasibilityQuery::new(family, *d, *n)?;
            let v = feasible(&q);
            if cli.json {
                print_json(&json!({ "family": family.to_string(), "d": d, "n": n, "verdict": v }));
            } else {
                outln!("{v}");
            }
            verdict_exit(v == Verdict::Member)
        }
    }
}

fn gen(as_json: bool, what: &GenCommand, certify: bool) -> Outcome {
    let (g, cert): (Graph, Option<NutCertificate>) = match what {
        GenCommand::Circulant { n, jumps } => {
            let spec = CirculantSpec::new(*n, parse_jumps(jumps)?)?;
            let cert = certify.then(|| circulant_is_nut(&spec));
            (spec.graph(), cert)
        }
        GenCommand::Dfam { n, t } => {
            let spec = d_family(*n, *t)?;
            let cert = certify.then(|| circulant_is_nut(&spec));
            (spec.graph(), cert)
        }
        other => {
            let g = match other {
                GenCommand::Named { name } => named_graph(name.parse::<NamedGraph>()?),
                GenCommand::Product { a, b } => cartesian_product(&parse_graph(a)?, &parse_graph(b)?)?,
                GenCommand::Cayfam { m, t } => cayley_family(*m, *t)?,
                _ => unreachable!(),
            };
            let cert = if certify { Some(is_nut(&g)?) } else { None };
            (g, cert)
        }
    };
    let g6 = graph6::encode(&g)?;
    if as_json {
        let mut out = json!({ "graph6": g6 });
        if let Some(c) = &cert {
            out["certificate"] = c.to_json();
        }
        print_json(&out);
    } else {
        outln!("{g6}");
        if let Some(c) = &cert {
            out!("{c}");
        }
    }
    verdict_exit(cert.is_none_or(|c| c.is_nut))
}

fn ell(as_json: bool, graph: &str, jumps: &str, build: bool) -> Outcome {
    let g = parse_graph(graph)?;
    let s = JumpSet::new(parse_jumps(jumps)?)?;
    let report = compute_ell(&g, &s)?;
    let mut out = serde_json::to_value(&report).expect("report serializes");
    let mut ok = true;
    let mut built = None;
    if build {
        let p = first_admissible_prime(report.ell);
        let product = build_main_lemma(&g, &s, p)?;
        let g6 = graph6::encode(&product.graph)?;
        ok = product.certificate.is_nut;
        out["prime"] = json!(p);
        out["graph6"] = json!(g6);
        out["certificate"] = product.certificate.to_json();
        built = Some((p, g6, product.certificate));
    }
    if as_json {
        print_json(&out);
    } else {
        outln!("alpha: {}", report.alpha);
        outln!("beta: {}", report.beta);
        outln!("ell: {}", report.ell);
        outln!("factor orders: {}", join(report.factor_orders.iter()));
        outln!("R degree: {}", report.r_degree);
        if let Some((p, g6, cert)) = built {
            outln!("prime: {p}");
            outln!("graph6: {g6}");
            out!("{cert}");
        }
    }
    verdict_exit(ok)
}

fn read_source(path: &str) -> Result<String, Failure> {
    let mut s = String::new();
    let res = if path == "-" {
        io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    res.map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    s.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .map(str::to_owned)
        .ok_or_else(|| Failure::Usage(format!("no graph found in {path}")))
}

fn parse_graph(text: &str) -> Result<Graph, Failure> {
    let text = text.trim();
    match text.strip_prefix("named:") {
        Some(name) => Ok(named_graph(name.parse()?)),
        None => Ok(graph6::decode(text)?),
    }
}

fn parse_jumps(list: &str) -> Result<Vec<usize>, Failure> {
    let mut out: Vec<usize> = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let j: usize = item
            .parse()
            .map_err(|_| Failure::Usage(format!("jump '{item}' is not a non-negative integer")))?;
        if out.last().is_some_and(|&prev| j <= prev) {
            return Err(Failure::Usage(format!("jump {j} breaks ascending order")));
        }
        out.push(j);
    }
    Ok(out)
}

fn join(it: impl Iterator<Item = u64>) -> String {
    it.map(|b| b.to_string()).collect::<Vec<_>>().join(", ")
}

fn print_json(v: &Value) {
    outln!("{}", serde_json::to_string_pretty(v).expect("json renders"));
}

fn verdict_exit(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Property)
    }
}
