//! Command-line surface: construction, hyperplane enumeration, Veldkamp
//! spaces, free-graph search, the 10_3 catalog, the census, and the
//! verification suite.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};

use bsts::canon::raw_certificate;
use bsts::catalog::catalog_103;
use bsts::census::generate_all_binomial;
use bsts::document::{
    parse_document_full, serialize_configuration, serialize_document, ConfigurationDocument,
    DocumentMeta,
};
use bsts::dot::emit_veldkamp_dot;
use bsts::families::{
    desargues, dual_veronesian, graph_sum_by_index, multi_veblen, perspective_system,
    quasi_grassmannian, quasi_grassmannian_data, tetrahedra_data, veronesian,
    veronesian_perspective_data, PerspectiveData, SimpleGraph,
};
use bsts::free_graphs::{check_partition_criteria, find_free_complete_graphs};
use bsts::hyperplanes::{
    check_connected_or_split_hypothesis, enumerate_hyperplanes, label_summary, labeled_veldkamp,
    veldkamp_space,
};
use bsts::incidence::{is_hyperplane, validate_psts, Configuration};
use bsts::partition::partition_set;
use bsts::point_set::PointSet;
use bsts::verify::run_verify_suite;

#[derive(Parser)]
#[command(
    name = "bsts",
    version,
    about = "Partial Steiner triple systems: hyperplanes, Veldkamp spaces, free subgraphs",
    after_help = "Search budget: set BSTS_SEARCH_BUDGET to cap search nodes (default 100000000)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named configuration family and write it as a document.
    Construct {
        /// desargues | quasi-grassmannian | veronesian | dual-veronesian |
        /// multi-veblen | tetrahedra | graph-sum
        family: String,
        /// Base-set size for desargues, quasi-grassmannian, dual-veronesian,
        /// multi-veblen
        #[arg(long)]
        n: Option<u32>,
        /// Degree for veronesian
        #[arg(long)]
        k: Option<u32>,
        /// Number of simplices for tetrahedra
        #[arg(long)]
        m: Option<u32>,
        /// Steering edges for multi-veblen, e.g. "1:2,2:3"
        #[arg(long)]
        edges: Option<String>,
        /// Core document for graph-sum (must be binomial)
        #[arg(long)]
        core: Option<PathBuf>,
        /// Output file (stdout when absent)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Count (and optionally list) all hyperplanes of a configuration.
    Hyperplanes {
        file: PathBuf,
        #[arg(long)]
        list: bool,
    },
    /// Build the Veldkamp space; optionally label it and export DOT text.
    Veldkamp {
        file: PathBuf,
        /// Write a DOT rendering to this path
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Tag each hyperplane with its induced geometry
        #[arg(long)]
        labeled: bool,
    },
    /// List freely contained complete graphs of a given size.
    FreeGraphs {
        file: PathBuf,
        #[arg(long)]
        size: usize,
    },
    /// Classify the geometry induced on every hyperplane.
    Classify { file: PathBuf },
    /// Evaluate the partition-hyperplane criteria of a perspective system.
    Criteria {
        /// A document produced by `construct tetrahedra`,
        /// `construct quasi-grassmannian` (n >= 6) or `construct veronesian`
        /// (k >= 3)
        file: PathBuf,
        /// The subset A of the perspective base set, e.g. --set 3,4
        #[arg(long, value_delimiter = ',')]
        set: Vec<u32>,
    },
    /// Print the named catalog (currently: 103).
    Catalog {
        what: String,
        /// Write the fixtures into this directory
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Generate all binomial configurations of order n up to isomorphism.
    Census {
        #[arg(long)]
        n: u32,
        /// Write one document per class into this directory
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Check the connected-or-split dichotomy on every hyperplane.
    Hypothesis { file: PathBuf },
    /// Run the verification suite.
    Verify,
}

fn load(path: &Path) -> anyhow::Result<(ConfigurationDocument, Configuration)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let pair = parse_document_full(&text)?;
    Ok(pair)
}

fn require_psts(cfg: &Configuration) -> anyhow::Result<()> {
    let report = validate_psts(cfg);
    if !report.is_psts {
        let reasons: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        bail!("not a partial Steiner triple system: {}", reasons.join("; "));
    }
    Ok(())
}

fn write_or_print(output: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn parse_edges(text: &str) -> anyhow::Result<Vec<(u32, u32)>> {
    text.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            let (a, b) = part
                .split_once(':')
                .ok_or_else(|| anyhow!("edge {part:?} is not of the form i:j"))?;
            Ok((a.trim().parse()?, b.trim().parse()?))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn construct(
    family: &str,
    n: Option<u32>,
    k: Option<u32>,
    m: Option<u32>,
    edges: Option<String>,
    core: Option<PathBuf>,
    output: Option<PathBuf>,
) -> anyhow::Result<()> {
    let need = |opt: Option<u32>, what: &str| {
        opt.ok_or_else(|| anyhow!("family {family} needs --{what}"))
    };
    let mut params: BTreeMap<String, i64> = BTreeMap::new();
    let (name, cfg) = match family {
        "desargues" => {
            let n = need(n, "n")?;
            params.insert("n".into(), n as i64);
            (format!("desargues-{n}"), desargues(n)?)
        }
        "quasi-grassmannian" => {
            let n = need(n, "n")?;
            params.insert("n".into(), n as i64);
            (format!("quasi-grassmannian-{n}"), quasi_grassmannian(n)?)
        }
        "veronesian" => {
            let k = need(k, "k")?;
            params.insert("k".into(), k as i64);
            (format!("veronesian-{k}"), veronesian(k)?)
        }
        "dual-veronesian" => {
            let n = need(n, "n")?;
            params.insert("n".into(), n as i64);
            (format!("dual-veronesian-{n}"), dual_veronesian(n)?)
        }
        "multi-veblen" => {
            let n = need(n, "n")?;
            params.insert("n".into(), n as i64);
            let edge_list = match &edges {
                Some(text) => parse_edges(text)?,
                None => Vec::new(),
            };
            let graph = SimpleGraph::new(n, edge_list.iter().copied())?;
            for (i, &(a, b)) in edge_list.iter().enumerate() {
                params.insert(format!("edge{i}"), (a * 100 + b) as i64);
            }
            (format!("multi-veblen-{n}"), multi_veblen(&graph)?)
        }
        "tetrahedra" => {
            let m = need(m, "m")?;
            params.insert("m".into(), m as i64);
            (
                format!("tetrahedra-{m}"),
                perspective_system(&tetrahedra_data(m)?)?,
            )
        }
        "graph-sum" => {
            let path = core.ok_or_else(|| anyhow!("graph-sum needs --core FILE"))?;
            let (_, core_cfg) = load(&path)?;
            require_psts(&core_cfg)?;
            let order = validate_psts(&core_cfg)
                .binomial
                .map(|b| b.order())
                .ok_or_else(|| anyhow!("core is not a binomial configuration"))?;
            params.insert("n".into(), order as i64);
            (
                format!("graph-sum-{order}"),
                graph_sum_by_index(order, &core_cfg)?,
            )
        }
        other => bail!("unknown family {other:?}"),
    };
    let meta = DocumentMeta {
        family: Some(family.to_string()),
        parameters: Some(params),
        provenance: None,
    };
    let text = serialize_configuration(&name, &cfg, Some(meta));
    write_or_print(output.as_deref(), &text)
}

fn labels_of(cfg: &Configuration, set: &PointSet) -> String {
    set.iter()
        .map(|p| cfg.label(p).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn hyperplanes_cmd(file: &Path, list: bool) -> anyhow::Result<()> {
    let (doc, cfg) = load(file)?;
    require_psts(&cfg)?;
    let hs = enumerate_hyperplanes(&cfg)?;
    println!("{}: {} hyperplanes", doc.name, hs.len());
    if list {
        for (k, h) in hs.iter().enumerate() {
            println!("  #{k:<3} ({} points) {}", h.len(), labels_of(&cfg, h));
        }
    }
    Ok(())
}

fn veldkamp_cmd(file: &Path, dot: Option<&Path>, labeled: bool) -> anyhow::Result<()> {
    let (doc, cfg) = load(file)?;
    require_psts(&cfg)?;
    if labeled {
        let (vs, tags) = labeled_veldkamp(&cfg)?;
        println!(
            "{}: PG({},2) with {} points and {} lines",
            doc.name,
            vs.dimension,
            vs.hyperplanes.len(),
            vs.lines.len()
        );
        println!("labels: {}", label_summary(&tags));
        for (k, (h, tag)) in vs.hyperplanes.iter().zip(&tags).enumerate() {
            println!("  #{k:<3} {:24} {}", tag.label, labels_of(&cfg, h));
        }
        if let Some(path) = dot {
            std::fs::write(path, emit_veldkamp_dot(&vs, Some(&tags)))?;
        }
    } else {
        let vs = veldkamp_space(&cfg)?;
        println!(
            "{}: PG({},2) with {} points and {} lines",
            doc.name,
            vs.dimension,
            vs.hyperplanes.len(),
            vs.lines.len()
        );
        if let Some(path) = dot {
            std::fs::write(path, emit_veldkamp_dot(&vs, None))?;
        }
    }
    Ok(())
}

fn free_graphs_cmd(file: &Path, size: usize) -> anyhow::Result<()> {
    let (doc, cfg) = load(file)?;
    require_psts(&cfg)?;
    let found = find_free_complete_graphs(&cfg, size)?;
    println!(
        "{}: {} freely contained complete graphs of size {size}",
        doc.name,
        found.len()
    );
    for (k, w) in found.iter().enumerate() {
        println!("  #{k:<3} {}", labels_of(&cfg, &w.vertices));
    }
    Ok(())
}

fn classify_cmd(file: &Path) -> anyhow::Result<()> {
    let (doc, cfg) = load(file)?;
    require_psts(&cfg)?;
    let (vs, tags) = labeled_veldkamp(&cfg)?;
    println!("{}: {} hyperplanes", doc.name, vs.hyperplanes.len());
    println!("labels: {}", label_summary(&tags));
    for (k, (h, tag)) in vs.hyperplanes.iter().zip(&tags).enumerate() {
        println!("  #{k:<3} {:24} {}", tag.label, labels_of(&cfg, h));
    }
    Ok(())
}

fn perspective_data_for(doc: &ConfigurationDocument) -> anyhow::Result<PerspectiveData> {
    let meta = doc
        .meta
        .as_ref()
        .ok_or_else(|| anyhow!("document carries no construction metadata"))?;
    let family = meta.family.as_deref().unwrap_or("");
    let param = |key: &str| -> anyhow::Result<u32> {
        meta.parameters
            .as_ref()
            .and_then(|p| p.get(key))
            .map(|&v| v as u32)
            .ok_or_else(|| anyhow!("metadata parameter {key:?} is missing"))
    };
    let data = match family {
        "tetrahedra" => tetrahedra_data(param("m")?)?,
        "quasi-grassmannian" => quasi_grassmannian_data(param("n")?)?,
        "veronesian" => veronesian_perspective_data(param("k")?)?,
        other => bail!("family {other:?} has no perspective-system data"),
    };
    Ok(data)
}

fn criteria_cmd(file: &Path, set: &[u32]) -> anyhow::Result<()> {
    let (doc, cfg) = load(file)?;
    let data = perspective_data_for(&doc)?;
    let built = perspective_system(&data)?;
    if raw_certificate(&built) != raw_certificate(&cfg) {
        bail!("document is not the configuration its metadata describes");
    }
    let base: BTreeSet<u32> = data.base().iter().copied().collect();
    let a: BTreeSet<u32> = set.iter().copied().collect();
    if !a.is_subset(&base) {
        bail!(
            "--set must name elements of the perspective base set {:?}",
            data.base()
        );
    }
    let verdict = check_partition_criteria(&data, &a);
    let direct = is_hyperplane(&built, &partition_set(&built, &a));
    println!(
        "A = {{{}}} over base {:?}",
        a.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(","),
        data.base()
    );
    println!(
        "criteria verdict: {}",
        if verdict.hyperplane {
            "hyperplane"
        } else {
            "not a hyperplane"
        }
    );
    if !verdict.failed.is_empty() {
        println!("failed conditions: {:?}", verdict.failed);
    }
    println!("direct test agrees: {}", verdict.hyperplane == direct);
    if verdict.hyperplane != direct {
        bail!("criteria and direct test disagree; this would falsify the criterion");
    }
    Ok(())
}

fn catalog_cmd(what: &str, dump: Option<&Path>) -> anyhow::Result<()> {
    if what != "103" {
        bail!("unknown catalog {what:?}; available: 103");
    }
    let entries = catalog_103()?;
    println!(
        "{:<18} {:>6} {:>6} {:>11} {:>7} {:>7}  labeled veldkamp",
        "name", "points", "lines", "hyperplanes", "veblen", "freeK4"
    );
    for e in &entries {
        println!(
            "{:<18} {:>6} {:>6} {:>11} {:>7} {:>7}  {}",
            e.name,
            e.configuration.points(),
            e.configuration.lines().len(),
            e.expected.hyperplane_count,
            e.expected.veblen_count,
            e.expected.free_k4_count,
            e.expected.labeled_veldkamp_summary
        );
    }
    if let Some(dir) = dump {
        std::fs::create_dir_all(dir)?;
        for e in &entries {
            let path = dir.join(format!("{}.json", e.name));
            std::fs::write(&path, serialize_document(&e.document))?;
        }
        println!("wrote {} fixtures to {}", entries.len(), dir.display());
    }
    Ok(())
}

fn census_cmd(n: u32, dump: Option<&Path>) -> anyhow::Result<()> {
    let classes = generate_all_binomial(n)?;
    println!(
        "order {n}: {} isomorphism classes of binomial configurations",
        classes.len()
    );
    for (k, (sig, _)) in classes.iter().enumerate() {
        let s = sig.summary();
        let hex = sig.certificate_hex();
        // the first 16 hex digits encode the point and line counts
        let tail = &hex[16.min(hex.len())..];
        println!(
            "  class {k:<2} hyperplanes {:>3}  max free K{} x{}  certificate {}",
            s.hyperplane_count,
            s.free_graph_size,
            s.free_graph_count,
            &tail[..24.min(tail.len())]
        );
    }
    if let Some(dir) = dump {
        std::fs::create_dir_all(dir)?;
        for (k, (_, cfg)) in classes.iter().enumerate() {
            let name = format!("census-{n}-{k}");
            let text = serialize_configuration(&name, cfg, None);
            std::fs::write(dir.join(format!("{name}.json")), text)?;
        }
        println!("wrote {} documents to {}", classes.len(), dir.display());
    }
    Ok(())
}

fn hypothesis_cmd(file: &Path) -> anyhow::Result<()> {
    let (doc, cfg) = load(file)?;
    require_psts(&cfg)?;
    let report = check_connected_or_split_hypothesis(&cfg)?;
    println!(
        "{}: {} hyperplanes, dichotomy {}",
        doc.name,
        report.hyperplanes,
        if report.holds { "holds" } else { "violated" }
    );
    for v in &report.violations {
        println!(
            "  counterexample ({}): {}",
            v.reason,
            labels_of(&cfg, &v.hyperplane)
        );
    }
    Ok(())
}

fn verify_cmd() -> i32 {
    let results = run_verify_suite();
    let (mut failed, mut skipped) = (0, 0);
    for r in &results {
        let status = if r.passed {
            "PASS"
        } else if r.skipped {
            skipped += 1;
            "SKIP"
        } else {
            failed += 1;
            "FAIL"
        };
        println!(
            "[{status}] criterion {:2} {:32} {:>7.2}s  {}",
            r.id, r.name, r.seconds, r.detail
        );
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", results.len());
        1
    } else if skipped > 0 {
        println!("{skipped} of {} criteria skipped (search budget)", results.len());
        3
    } else {
        println!("all {} criteria passed", results.len());
        0
    }
}

fn exit_code_for(error: &anyhow::Error) -> i32 {
    if let Some(bsts::Error::SearchBudgetExceeded(_)) = error.downcast_ref::<bsts::Error>() {
        3
    } else {
        2
    }
}

fn main() {
    let cli = Cli::parse();
    let outcome: anyhow::Result<i32> = match cli.command {
        Command::Construct {
            family,
            n,
            k,
            m,
            edges,
            core,
            output,
        } => construct(&family, n, k, m, edges, core, output).map(|()| 0),
        Command::Hyperplanes { file, list } => hyperplanes_cmd(&file, list).map(|()| 0),
        Command::Veldkamp { file, dot, labeled } => {
            veldkamp_cmd(&file, dot.as_deref(), labeled).map(|()| 0)
        }
        Command::FreeGraphs { file, size } => free_graphs_cmd(&file, size).map(|()| 0),
        Command::Classify { file } => classify_cmd(&file).map(|()| 0),
        Command::Criteria { file, set } => criteria_cmd(&file, &set).map(|()| 0),
        Command::Catalog { what, dump } => catalog_cmd(&what, dump.as_deref()).map(|()| 0),
        Command::Census { n, dump } => census_cmd(n, dump.as_deref()).map(|()| 0),
        Command::Hypothesis { file } => hypothesis_cmd(&file).map(|()| 0),
        Command::Verify => Ok(verify_cmd()),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(error) => {
            eprintln!("error: {error:#}");
            std::process::exit(exit_code_for(&error));
        }
    }
}
