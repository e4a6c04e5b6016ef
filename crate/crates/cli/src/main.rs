//! `chordalkit`: maximal label searches, clique trees, minimal
//! triangulations and atom trees from edge-list files.

use std::collections::HashSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use chordalkit::decomposition::{atom_tree_from_clique_tree, dcl_atom_tree, dcl_mlsm_clique_tree};
use chordalkit::export::{
    atom_tree_dot, clique_tree_dot, generators_dot, trace_json, triangulation_dot, AtomTreeJson, CliqueTreeJson,
    Document, GeneratorsJson, TraceStepJson, TriangulationJson,
};
use chordalkit::labeling::{check_property, Property};
use chordalkit::oracle::{is_chordal, is_pmo};
use chordalkit::search::{complement_mls, mls, mlsm, moplex_mls, moplex_mlsm, triangulation_from_ordering};
use chordalkit::tree::linear::{lexbfs_clique_tree, mcs_clique_tree};
use chordalkit::tree::{
    clique_tree_from_peo, clique_tree_from_pmo, complement_mls_clique_tree, complement_mls_generators,
    dcl_mls_clique_tree, mls_clique_tree, CliqueTreeResult,
};
use chordalkit::{hooks, with_builtin, Builtin, Error, Graph, Ordering, TieBreak};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "chordalkit",
    version,
    about = "Maximal label search toolkit for chordal graphs and decompositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a label search and print the ordering with its per-step trace.
    Search(SearchArgs),
    /// Build a clique tree of a chordal graph or of the complement of a graph.
    Cliquetree(CliqueTreeArgs),
    /// Compute a minimal triangulation and its fill edges.
    Triangulate(TriangulateArgs),
    /// Compute the atom tree of the clique minimal separator decomposition.
    Atoms(AtomsArgs),
    /// Check a labeling-structure property exhaustively up to a bound.
    Checkstructure(CheckStructureArgs),
    /// Re-validate a JSON result against the brute-force oracles.
    Check(CheckArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Args, Debug)]
struct Common {
    /// Edge-list file.
    input: PathBuf,
    /// Labeling structure: mcs, lexbfs, lexdfs or mns.
    #[arg(long, default_value = "mcs")]
    structure: Builtin,
    /// Tie-breaking: lowest, seed:<u64> or script:<v1,v2,...>.
    #[arg(long, default_value = "lowest")]
    tiebreak: TieSpec,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Check the result against the brute-force oracles.
    #[arg(long)]
    validate: bool,
    /// Assert loop invariants while running (same as CHORDALKIT_DEBUG=1).
    #[arg(long)]
    debug: bool,
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[command(flatten)]
    common: Common,
    /// Prefer labels greater than the previous chosen label.
    #[arg(long, conflicts_with = "complement")]
    moplex: bool,
    /// Choose minimal labels, simulating the search on the complement.
    #[arg(long)]
    complement: bool,
}

#[derive(Args, Debug)]
#[group(id = "variant", multiple = false)]
struct Variant {
    /// Build the tree from the ordering in this file (names in position order).
    #[arg(long, value_name = "FILE")]
    from_peo: Option<PathBuf>,
    /// Moplex label search with the neighborhood new-clique test (default).
    #[arg(long)]
    mls: bool,
    /// Moplex label search with the label-only new-clique test.
    #[arg(long)]
    dcl: bool,
    /// Clique tree of the complement of the input, searched on the input.
    #[arg(long)]
    complement: bool,
}

#[derive(Args, Debug)]
struct CliqueTreeArgs {
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    variant: Variant,
    /// With --from-peo: treat the ordering as a perfect moplex ordering.
    #[arg(long, requires = "from_peo")]
    pmo: bool,
    /// With --complement: output only the clique and separator generators.
    #[arg(long, requires = "complement")]
    generators: bool,
    /// With --dcl: use the bucket-queue (mcs) or partition-refinement (lexbfs) builder.
    #[arg(long, requires = "dcl")]
    linear: bool,
}

#[derive(Args, Debug)]
#[group(id = "mode", multiple = false)]
struct TriangulationMode {
    /// Path-rule search without the prev-max-label preference.
    #[arg(long)]
    plain: bool,
    /// Plain label search followed by the elimination game.
    #[arg(long)]
    elimination: bool,
}

#[derive(Args, Debug)]
struct TriangulateArgs {
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    mode: TriangulationMode,
    /// Include a clique tree of the triangulation.
    #[arg(long)]
    tree: bool,
}

#[derive(Args, Debug)]
struct AtomsArgs {
    #[command(flatten)]
    common: Common,
    /// Merge the clique tree of a minimal triangulation instead of building atoms directly.
    #[arg(long)]
    merge: bool,
}

#[derive(Args, Debug)]
struct CheckStructureArgs {
    /// Labeling structure: mcs, lexbfs, lexdfs or mns.
    structure: Builtin,
    /// ic, dcl or complement-reversing.
    #[arg(long)]
    property: Property,
    /// Largest n checked.
    #[arg(long, default_value_t = 6)]
    nmax: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Edge-list file.
    graph: PathBuf,
    /// JSON document produced by cliquetree, triangulate or atoms.
    document: PathBuf,
    /// The document describes the complement of the graph.
    #[arg(long)]
    complement: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum TieSpec {
    Lowest,
    Seed(u64),
    Script(Vec<String>),
}

impl FromStr for TieSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "lowest" {
            return Ok(TieSpec::Lowest);
        }
        if let Some(seed) = s.strip_prefix("seed:") {
            return seed
                .parse()
                .map(TieSpec::Seed)
                .map_err(|e| format!("invalid seed `{seed}`: {e}"));
        }
        if let Some(list) = s.strip_prefix("script:") {
            let names: Vec<String> = list
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(String::from)
                .collect();
            return Ok(TieSpec::Script(names));
        }
        Err(format!(
            "unknown tie-break `{s}` (expected lowest, seed:<u64> or script:<names>)"
        ))
    }
}

impl TieSpec {
    /// A script lists the last positions of the ordering in position order,
    /// so a full list is the ordering itself.
    fn resolve(&self, g: &Graph) -> Result<TieBreak, Error> {
        match self {
            TieSpec::Lowest => Ok(TieBreak::LowestIndex),
            TieSpec::Seed(s) => Ok(TieBreak::SeededRandom(*s)),
            TieSpec::Script(names) => {
                let mut seen = HashSet::new();
                if let Some(dup) = names.iter().find(|n| !seen.insert(n.as_str())) {
                    return Err(Error::InvalidScript(format!("vertex `{dup}` is scripted twice")));
                }
                TieBreak::reproduce(g, names)
            }
        }
    }
}

enum Failure {
    Input(String),
    Validation(Vec<String>),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Report {
    json: String,
    dot: Option<String>,
    violations: Vec<String>,
}

impl Report {
    fn new<T: Serialize>(value: &T, dot: Option<String>, violations: Vec<String>) -> Self {
        let mut json = serde_json::to_string_pretty(value).expect("results serialize");
        json.push('\n');
        Report { json, dot, violations }
    }
}

type Outcome = Result<Report, Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(Graph::parse_edge_list(&read_text(path)?)?)
}

fn read_ordering(g: &Graph, path: &Path) -> Result<Ordering, Failure> {
    let text = read_text(path)?;
    let names: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(|c: char| c.is_whitespace() || c == ','))
        .filter(|t| !t.is_empty())
        .collect();
    Ok(Ordering::from_names(g, &names)?)
}

fn oracle_check(enabled: bool, doc: Document, g: &Graph, complement: bool) -> Result<Vec<String>, Failure> {
    if !enabled {
        return Ok(Vec::new());
    }
    Ok(doc.check(g, complement)?.violations)
}

fn tree_report(g: &Graph, t: &CliqueTreeResult, complement: bool, validate: bool) -> Outcome {
    let doc = CliqueTreeJson::new(g, t);
    let violations = oracle_check(validate, Document::CliqueTree(doc.clone()), g, complement)?;
    Ok(Report::new(&doc, Some(clique_tree_dot(g, t)), violations))
}

#[derive(Serialize)]
struct SearchJson {
    ordering: Vec<String>,
    trace: Vec<TraceStepJson>,
}

fn search(a: &SearchArgs) -> Outcome {
    let c = &a.common;
    let g = read_graph(&c.input)?;
    let tb = c.tiebreak.resolve(&g)?;
    let doc = with_builtin!(c.structure, l => {
        let (ordering, trace) = if a.complement {
            complement_mls(&g, &l, &tb)?
        } else if a.moplex {
            moplex_mls(&g, &l, &tb)?
        } else {
            mls(&g, &l, &tb)?
        };
        SearchJson {
            ordering: ordering.names(&g),
            trace: trace_json(&g, &l, &trace),
        }
    });
    let mut violations = Vec::new();
    if c.validate {
        let alpha = Ordering::from_names(&g, &doc.ordering)?;
        if a.complement && !is_pmo(&g.complement(), &alpha) {
            violations.push("the ordering is not a perfect moplex ordering of the complement".to_string());
        }
        if a.moplex && is_chordal(&g) && !is_pmo(&g, &alpha) {
            violations.push("the ordering is not a perfect moplex ordering".to_string());
        }
    }
    Ok(Report::new(&doc, None, violations))
}

fn cliquetree(a: &CliqueTreeArgs) -> Outcome {
    let c = &a.common;
    let g = read_graph(&c.input)?;
    let tb = c.tiebreak.resolve(&g)?;
    let v = &a.variant;
    if let Some(path) = &v.from_peo {
        let alpha = read_ordering(&g, path)?;
        let t = if a.pmo {
            clique_tree_from_pmo(&g, &alpha)?
        } else {
            clique_tree_from_peo(&g, &alpha)?
        };
        return tree_report(&g, &t, false, c.validate);
    }
    if v.complement {
        if a.generators {
            let r = with_builtin!(c.structure, l => complement_mls_generators(&g, &l, &tb))?;
            let doc = GeneratorsJson::new(&g, &r);
            let violations = oracle_check(c.validate, Document::Generators(doc.clone()), &g, true)?;
            return Ok(Report::new(&doc, Some(generators_dot(&g, &r)), violations));
        }
        let t = with_builtin!(c.structure, l => complement_mls_clique_tree(&g, &l, &tb))?;
        return tree_report(&g, &t, true, c.validate);
    }
    let t = if a.linear {
        if tb != TieBreak::LowestIndex {
            return Err(Failure::Input("--linear supports only --tiebreak lowest".to_string()));
        }
        match c.structure {
            Builtin::Mcs => mcs_clique_tree(&g, true)?,
            Builtin::LexBfs => lexbfs_clique_tree(&g, true)?,
            other => return Err(Failure::Input(format!("--linear supports mcs and lexbfs, not {other}"))),
        }
    } else if v.dcl {
        with_builtin!(c.structure, l => dcl_mls_clique_tree(&g, &l, &tb, true))?
    } else {
        with_builtin!(c.structure, l => mls_clique_tree(&g, &l, &tb))?
    };
    tree_report(&g, &t, false, c.validate)
}

fn triangulate(a: &TriangulateArgs) -> Outcome {
    let c = &a.common;
    let g = read_graph(&c.input)?;
    let tb = c.tiebreak.resolve(&g)?;
    let moplex = !a.mode.plain && !a.mode.elimination;
    let (tri, tree) = if a.mode.elimination {
        let alpha = with_builtin!(c.structure, l => mls(&g, &l, &tb).map(|r| r.0))?;
        (triangulation_from_ordering(&g, &alpha)?, None)
    } else if a.mode.plain {
        (with_builtin!(c.structure, l => mlsm(&g, &l, &tb).map(|r| r.0))?, None)
    } else if a.tree {
        let r = with_builtin!(c.structure, l => dcl_mlsm_clique_tree(&g, &l, &tb))?;
        (r.triangulation, Some(r.tree))
    } else {
        (
            with_builtin!(c.structure, l => moplex_mlsm(&g, &l, &tb).map(|r| r.0))?,
            None,
        )
    };
    let tree = match tree {
        Some(t) => Some(t),
        None if a.tree => Some(clique_tree_from_peo(&tri.h, &tri.ordering)?),
        None => None,
    };
    let doc = TriangulationJson::new(&g, &tri, tree.as_ref());
    let mut violations = oracle_check(c.validate, Document::Triangulation(doc.clone()), &g, false)?;
    if c.validate && moplex && !is_pmo(&tri.h, &tri.ordering) {
        violations.push("the ordering is not a perfect moplex ordering of the triangulation".to_string());
    }
    let dot = match &tree {
        Some(t) => clique_tree_dot(&tri.h, t),
        None => triangulation_dot(&g, &tri),
    };
    Ok(Report::new(&doc, Some(dot), violations))
}

fn atoms(a: &AtomsArgs) -> Outcome {
    let c = &a.common;
    let g = read_graph(&c.input)?;
    let tb = c.tiebreak.resolve(&g)?;
    let t = if a.merge {
        let r = with_builtin!(c.structure, l => dcl_mlsm_clique_tree(&g, &l, &tb))?;
        atom_tree_from_clique_tree(&g, &r.triangulation.h, &r.tree)?
    } else {
        with_builtin!(c.structure, l => dcl_atom_tree(&g, &l, &tb))?
    };
    let doc = AtomTreeJson::new(&g, &t);
    let violations = oracle_check(c.validate, Document::AtomTree(doc.clone()), &g, false)?;
    Ok(Report::new(&doc, Some(atom_tree_dot(&g, &t)), violations))
}

fn checkstructure(a: &CheckStructureArgs) -> Outcome {
    let report = with_builtin!(a.structure, l => check_property(&l, a.property, a.nmax))?;
    let violations = if report.passed() {
        Vec::new()
    } else {
        vec![format!("{} fails {} up to n = {}", a.structure, a.property, a.nmax)]
    };
    Ok(Report::new(&report, None, violations))
}

fn check(a: &CheckArgs) -> Outcome {
    let g = read_graph(&a.graph)?;
    let doc = Document::parse(&read_text(&a.document)?)?;
    let report = doc.check(&g, a.complement)?;
    let violations = report.violations.clone();
    Ok(Report::new(&report, None, violations))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(format!("cannot write output: {e}"))),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let (common, out) = match &cli.command {
        Command::Search(a) => (Some(&a.common), a.common.out.as_deref()),
        Command::Cliquetree(a) => (Some(&a.common), a.common.out.as_deref()),
        Command::Triangulate(a) => (Some(&a.common), a.common.out.as_deref()),
        Command::Atoms(a) => (Some(&a.common), a.common.out.as_deref()),
        Command::Checkstructure(a) => (None, a.out.as_deref()),
        Command::Check(a) => (None, a.out.as_deref()),
    };
    let _guard = common.filter(|c| c.debug).map(|_| hooks::force());
    let report = match &cli.command {
        Command::Search(a) => search(a),
        Command::Cliquetree(a) => cliquetree(a),
        Command::Triangulate(a) => triangulate(a),
        Command::Atoms(a) => atoms(a),
        Command::Checkstructure(a) => checkstructure(a),
        Command::Check(a) => check(a),
    }?;
    let format = common.map_or(Format::Json, |c| c.format);
    let text = match format {
        Format::Json => report.json.as_str(),
        Format::Dot => report
            .dot
            .as_deref()
            .ok_or_else(|| Failure::Input("this command has no DOT output".to_string()))?,
    };
    emit(text, out)?;
    let mut violations = report.violations;
    violations.extend(hooks::take_violations().into_iter().map(|v| {
        format!(
            "invariant {} violated at iteration {}: {}",
            v.check, v.iteration, v.message
        )
    }));
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Validation(violations))
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("error")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Validation(violations)) => {
            for v in &violations {
                eprintln!("validation: {v}");
            }
            ExitCode::from(2)
        }
    }
}
