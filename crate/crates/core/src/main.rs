use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use neighborly::ideal::{complementary_ideal, minimal_primes, neighborhood_ideal};
use neighborly::simplicial::{
    fh_vectors, find_shelling, is_shelling_order, ni_shelling_indices, ni_shelling_order,
};
use neighborly::verify::{parse_checks, random_cross_validation, verify, VerifyConfig};
use neighborly::{
    graph_square, minimal_dominating_sets, ni_pn2, path_graph, Caps, Engine, Error, Field, Graph,
    Result, SimplicialComplex, SquarefreeIdeal,
};

#[derive(Parser)]
#[command(
    name = "neighborly",
    version,
    about = "Invariants of closed neighborhood ideals of squared paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generators, primes, Betti table and face counts of one ideal.
    Inspect(InspectArgs),
    /// Check the closed forms against the engine over a range of n.
    Verify(VerifyArgs),
    /// Graded Betti table, or a seeded engine-versus-oracle comparison.
    Betti(BettiArgs),
    /// Test the standard facet order and search for a shelling.
    Shelling(ShellingArgs),
    /// Minimal dominating sets of a graph.
    Dominate(DominateArgs),
}

#[derive(Args, Clone)]
struct EngineArgs {
    /// 0 for the rationals, or a prime.
    #[arg(long, default_value_t = 0)]
    field_char: u64,
    /// Largest ambient ring handled by the Betti engine.
    #[arg(long)]
    max_ambient: Option<usize>,
}

impl EngineArgs {
    fn engine(&self) -> Result<Engine> {
        let mut caps = Caps::from_env();
        if let Some(m) = self.max_ambient {
            caps = caps.with_max_ambient(m);
        }
        Ok(Engine::new(
            Field::from_characteristic(self.field_char)?,
            caps,
        ))
    }
}

#[derive(Args, Clone)]
struct Input {
    /// Use NI(P_n^2).
    #[arg(long)]
    n: Option<usize>,
    /// Graph file; its closed neighborhood ideal is used.
    #[arg(long, conflicts_with = "n")]
    graph: Option<PathBuf>,
    /// Square the graph before use.
    #[arg(long, requires = "graph")]
    square: bool,
    /// Ideal file.
    #[arg(long, conflicts_with_all = ["n", "graph"])]
    ideal: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

impl Input {
    fn load_graph(&self) -> Result<Option<Graph>> {
        match (&self.graph, self.n) {
            (Some(p), _) => {
                let g = Graph::parse(&read(p)?)?;
                Ok(Some(if self.square { graph_square(&g) } else { g }))
            }
            (None, Some(n)) => Ok(Some(graph_square(&path_graph(n)?))),
            _ => Ok(None),
        }
    }

    fn ideal(&self) -> Result<SquarefreeIdeal> {
        if let Some(p) = &self.ideal {
            return SquarefreeIdeal::parse(&read(p)?);
        }
        if let Some(n) = self.n {
            return ni_pn2(n);
        }
        match self.load_graph()? {
            Some(g) => Ok(neighborhood_ideal(&g)),
            None => Err(Error::InvalidArgument(
                "give one of --n, --graph or --ideal".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

#[derive(Args)]
struct InspectArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    engine: EngineArgs,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    format: TableFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Single n; shorthand for --from n --to n.
    #[arg(long, conflicts_with_all = ["from", "to"])]
    n: Option<usize>,
    #[arg(long)]
    from: Option<usize>,
    /// Without --to, each check runs up to its own default limit.
    #[arg(long)]
    to: Option<usize>,
    /// Comma-separated check names, or `all`.
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    #[command(flatten)]
    engine: EngineArgs,
    /// Exit nonzero on indeterminate verdicts too.
    #[arg(long)]
    strict: bool,
    /// Echoed in the report; reserved for randomized suites.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report elapsed_ms as 0 so repeated runs are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct BettiArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    engine: EngineArgs,
    /// Use the all-multidegree Koszul oracle instead of the Hochster engine.
    #[arg(long)]
    oracle: bool,
    /// Include multigraded Betti numbers in JSON output.
    #[arg(long)]
    multigraded: bool,
    /// Compare engine and oracle on this many seeded random ideals instead.
    #[arg(long, conflicts_with_all = ["n", "graph", "ideal"])]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
}

#[derive(Args)]
struct ShellingArgs {
    /// Facet complex of NI(P_n^2).
    #[arg(long)]
    n: Option<usize>,
    /// Complex file.
    #[arg(long, conflicts_with = "n")]
    complex: Option<PathBuf>,
    /// Also run the exhaustive shelling search.
    #[arg(long)]
    search: bool,
}

#[derive(Args)]
struct DominateArgs {
    /// P_n^2.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, conflicts_with = "n")]
    graph: Option<PathBuf>,
    #[arg(long, requires = "graph")]
    square: bool,
    /// Omit the list of sets.
    #[arg(long)]
    summary: bool,
}

/// Face counts, or `None` for the void complex or when the face cap is hit.
fn fh_vectors_or_none(c: &SimplicialComplex, cap: usize) -> Option<neighborly::FHVectors> {
    fh_vectors(c, cap).ok()
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value"));
}

fn inspect(a: &InspectArgs) -> Result<ExitCode> {
    let engine = a.engine.engine()?;
    let i = a.input.ideal()?;
    let caps = &engine.caps;
    let primes = minimal_primes(&i, caps.max_sets)?;
    let betti = engine.betti_hochster(&i)?;
    let inv = engine.pd_reg_depth(&betti, &i)?;
    let facet = SimplicialComplex::facet_complex(&i)?;
    let sr = SimplicialComplex::stanley_reisner_complex(&i, caps.max_sets)?;
    let comp = complementary_ideal(&facet).ok();
    match a.format {
        TableFormat::Json => print_json(&json!({
            "ambient_n": i.ambient_n(),
            "generators": i.generators(),
            "minimal_primes": primes.primes,
            "height": primes.height,
            "bight": primes.bight,
            "invariants": inv,
            "cohen_macaulay": inv.depth == inv.dim,
            "betti": betti.to_json(false),
            "facet_complex": fh_vectors_or_none(&facet, caps.max_faces),
            "stanley_reisner_complex": fh_vectors_or_none(&sr, caps.max_faces),
            "complementary_ideal": comp.as_ref().map(|c| c.generators().to_vec()),
        })),
        TableFormat::Text => {
            println!("ideal      {i}");
            println!(
                "primes     {}",
                primes
                    .primes
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            println!("height {}  bight {}", primes.height, primes.bight);
            println!(
                "pd {}  reg {}  depth {}  dim {}",
                inv.pd, inv.reg, inv.depth, inv.dim
            );
            println!("cohen-macaulay {}", inv.depth == inv.dim);
            if let Some(fh) = fh_vectors_or_none(&facet, caps.max_faces) {
                println!("facet complex f {:?}  h {:?}", fh.f, fh.h);
            }
            if let Some(c) = comp {
                println!("complementary ideal {c}");
            }
            print!("{}", betti.to_text());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(a: &VerifyArgs) -> Result<ExitCode> {
    let checks = parse_checks(&a.checks)?;
    let (n_from, n_to, tiered) = match (a.n, a.from, a.to) {
        (Some(n), _, _) => (n, n, false),
        (None, from, Some(to)) => (from.unwrap_or(3), to, false),
        (None, from, None) => (
            from.unwrap_or(3),
            checks.iter().map(|c| c.default_max_n()).max().unwrap_or(3),
            true,
        ),
    };
    let cfg = VerifyConfig {
        n_from,
        n_to,
        checks,
        tiered,
        engine: a.engine.engine()?,
        timing: !a.no_timing,
        seed: a.seed,
    };
    let report = verify(&cfg)?;
    let text = match a.format {
        ReportFormat::Json => report.to_json() + "\n",
        ReportFormat::Csv => report.to_csv(),
        ReportFormat::Markdown => report.to_markdown(),
    };
    match &a.out {
        Some(p) => fs::write(p, text)
            .map_err(|e| Error::InvalidArgument(format!("{}: {e}", p.display())))?,
        None => print!("{text}"),
    }
    let bad = report.summary.fail > 0 || (a.strict && report.summary.indeterminate > 0);
    Ok(if bad {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn betti(a: &BettiArgs) -> Result<ExitCode> {
    let engine = a.engine.engine()?;
    if let Some(count) = a.random {
        let max_n = a
            .engine
            .max_ambient
            .unwrap_or(8)
            .min(engine.caps.max_ambient_koszul);
        let cv = random_cross_validation(count, max_n, a.seed, &engine)?;
        print_json(&json!(cv));
        return Ok(if cv.mismatches.is_empty() {
            ExitCode::SUCCESS
        } else {
            ExitCode::FAILURE
        });
    }
    let i = a.input.ideal()?;
    let table = if a.oracle {
        engine.betti_koszul(&i)?
    } else {
        engine.betti_hochster(&i)?
    };
    match a.format {
        TableFormat::Json => print_json(&table.to_json(a.multigraded)),
        TableFormat::Text => print!("{}", table.to_text()),
    }
    Ok(ExitCode::SUCCESS)
}

fn shelling(a: &ShellingArgs) -> Result<ExitCode> {
    let caps = Caps::from_env();
    let mut out = json!({});
    let complex = match (a.n, &a.complex) {
        (Some(n), _) => {
            let c = SimplicialComplex::facet_complex(&ni_pn2(n)?)?;
            if n >= 7 {
                let order = ni_shelling_order(n)?;
                out["standard_order"] = json!({
                    "indices": ni_shelling_indices(n)?,
                    "facets": order,
                    "is_shelling": is_shelling_order(&c, &order)?,
                });
            }
            c
        }
        (None, Some(p)) => SimplicialComplex::parse(&read(p)?)?,
        (None, None) => return Err(Error::InvalidArgument("give --n or --complex".into())),
    };
    out["facets"] = json!(complex.facets());
    out["pure"] = json!(complex.is_pure());
    if a.search {
        out["search"] = match find_shelling(&complex, caps.max_search_nodes) {
            Ok(found) => json!(found),
            Err(e) if e.is_cap() => json!("indeterminate"),
            Err(e) => return Err(e),
        };
    }
    print_json(&out);
    Ok(ExitCode::SUCCESS)
}

fn dominate(a: &DominateArgs) -> Result<ExitCode> {
    let g = match (a.n, &a.graph) {
        (Some(n), _) => graph_square(&path_graph(n)?),
        (None, Some(p)) => {
            let g = Graph::parse(&read(p)?)?;
            if a.square {
                graph_square(&g)
            } else {
                g
            }
        }
        (None, None) => return Err(Error::InvalidArgument("give --n or --graph".into())),
    };
    let d = minimal_dominating_sets(&g, Caps::from_env().max_sets)?;
    let mut v =
        json!({ "gamma": d.gamma, "gamma_prime": d.gamma_prime, "count": d.minimal_sets.len() });
    if !a.summary {
        v["minimal_sets"] = json!(d.minimal_sets);
    }
    print_json(&v);
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Inspect(a) => inspect(a),
        Command::Verify(a) => run_verify(a),
        Command::Betti(a) => betti(a),
        Command::Shelling(a) => shelling(a),
        Command::Dominate(a) => dominate(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
