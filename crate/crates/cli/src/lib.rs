//! Command implementations behind the `oneext` binary. Each command returns
//! its stdout text and exit status; the binary only parses arguments and
//! prints.

pub mod doc;

use std::fmt::Write as _;
use std::io::Read as _;

use num_rational::BigRational;
use oneext::extend::{self, ExtReport};
use oneext::genset::{self, GenSetInstance, GenSetSolution};
use oneext::partition::{self, Partition};
use oneext::{decompose, generators, isets, metrics, moddecomp, Graph, Limits};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use doc::GraphDocument;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] oneext::Error),
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 3 for an exceeded resource budget, 2 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(oneext::Error::Budget { .. }) => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Text for stdout plus the exit status: 0 positive answer, 1 negative.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
}

impl Outcome {
    fn new(positive: bool, stdout: String) -> Self {
        Outcome { code: if positive { 0 } else { 1 }, stdout }
    }
}

/// Reads a file, or stdin for `-`.
pub fn read_input(path: &str) -> CliResult<String> {
    let io = |source| CliError::Io { path: path.to_string(), source };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn write_output(path: &str, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_string(), source })
}

pub fn load_graph(path: &str) -> CliResult<GraphDocument> {
    GraphDocument::parse(&read_input(path)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    /// Cograph DP if the graph is a cograph, else modular-width DP, else oracle.
    Auto,
    /// Exhaustive branch and bound over maximum independent sets.
    Oracle,
    /// Cotree DP; rejects graphs with a prime node.
    Cograph,
    /// Weighted representative graphs on the modular decomposition.
    Mw,
}

impl Method {
    fn label(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Oracle => "oracle",
            Method::Cograph => "cograph",
            Method::Mw => "mw",
        }
    }
}

fn names(doc: &GraphDocument, vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter().map(|v| doc.name(v)).collect::<Vec<_>>().join(" ")
}

pub fn cmd_test(doc: &GraphDocument, method: Method, limits: &Limits) -> CliResult<Outcome> {
    let g = doc.graph()?;
    let (report, used): (ExtReport, Method) = if g.n() == 0 {
        (extend::ext_report_oracle(&g), Method::Oracle)
    } else {
        match method {
            Method::Oracle => (extend::ext_report_oracle(&g), Method::Oracle),
            Method::Cograph => (extend::is_1ext_cograph(&decompose(&g)?)?, Method::Cograph),
            Method::Mw => (extend::is_1ext_mw(&g, &decompose(&g)?, limits)?, Method::Mw),
            Method::Auto => {
                let t = decompose(&g)?;
                if moddecomp::is_cograph(&t) {
                    (extend::is_1ext_cograph(&t)?, Method::Cograph)
                } else {
                    match extend::is_1ext_mw(&g, &t, limits) {
                        Ok(r) => (r, Method::Mw),
                        Err(oneext::Error::Budget { .. }) => (extend::ext_report_oracle(&g), Method::Oracle),
                        Err(e) => return Err(e.into()),
                    }
                }
            }
        }
    };
    let mut out = String::new();
    if report.is_1ext {
        let _ = writeln!(out, "1-extendable: yes, alpha={}", report.alpha);
    } else {
        let cover = isets::mis_cover(&g);
        let starved = (0..g.n()).filter(|&v| !cover.contains(v));
        let _ = writeln!(out, "1-extendable: no, alpha={}; starved: {}", report.alpha, names(doc, starved));
    }
    let _ = writeln!(out, "method: {}", used.label());
    Ok(Outcome::new(report.is_1ext, out))
}

/// `vertex color` lines, both 0-based.
pub fn certificate_text(p: &Partition) -> String {
    let mut out = String::new();
    for (v, c) in p.colors().iter().enumerate() {
        let _ = writeln!(out, "{v} {c}");
    }
    out
}

pub fn parse_certificate(text: &str, n: usize) -> CliResult<Partition> {
    let mut color = vec![None; n];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let col = raw.len() - raw.trim_start().len() + 1;
        if fields.len() != 2 {
            return Err(CliError::Parse { line, col, msg: "expected `vertex color`".into() });
        }
        let num = |w: &str| {
            w.parse::<usize>()
                .map_err(|_| CliError::Parse { line, col, msg: format!("expected a nonnegative integer, got `{w}`") })
        };
        let (v, c) = (num(fields[0])?, num(fields[1])?);
        if v >= n {
            return Err(CliError::Parse { line, col, msg: format!("vertex {v} out of range 0..{n}") });
        }
        if color[v].replace(c).is_some() {
            return Err(CliError::Parse { line, col, msg: format!("vertex {v} colored twice") });
        }
    }
    let color = color
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| CliError::Invalid(format!("vertex {v} has no color"))))
        .collect::<CliResult<Vec<_>>>()?;
    let k = color.iter().max().map_or(0, |&c| c + 1);
    Ok(Partition::new(k, color)?)
}

const PALETTE: [&str; 10] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33", "#a65628", "#f781bf", "#999999", "#66c2a5",
];

/// Graphviz rendering with vertices filled by class.
pub fn dot_text(doc: &GraphDocument, p: &Partition) -> String {
    let mut out = String::from("graph G {\n  node [style=filled];\n");
    for v in 0..doc.n {
        let c = p.colors()[v];
        let _ = writeln!(
            out,
            "  {v} [label=\"{}\", fillcolor=\"{}\", class={c}];",
            doc.name(v),
            PALETTE[c % PALETTE.len()]
        );
    }
    let mut edges = doc.edges.clone();
    edges.sort_unstable();
    for (u, v) in edges {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

pub struct ChiOptions<'a> {
    pub max_k: Option<usize>,
    pub emit_partition: Option<&'a str>,
    pub dot: Option<&'a str>,
}

pub fn cmd_chi(doc: &GraphDocument, opts: &ChiOptions<'_>, limits: &Limits) -> CliResult<Outcome> {
    let g = doc.graph()?;
    let found = match opts.max_k {
        Some(k) => partition::chi_1ext_bounded(&g, k, limits)?,
        None => Some(partition::chi_1ext(&g, limits)?),
    };
    let Some((chi, p)) = found else {
        return Ok(Outcome::new(false, format!("chi_1ext > {}\n", opts.max_k.unwrap_or(0))));
    };
    if let Some(path) = opts.emit_partition {
        write_output(path, &certificate_text(&p))?;
    }
    if let Some(path) = opts.dot {
        write_output(path, &dot_text(doc, &p))?;
    }
    Ok(Outcome::new(true, format!("chi_1ext={chi}\n")))
}

pub fn cmd_verify(doc: &GraphDocument, certificate: &str) -> CliResult<Outcome> {
    let g = doc.graph()?;
    let p = parse_certificate(certificate, g.n())?;
    for (c, class) in p.classes().iter().enumerate() {
        if !class.is_empty() && !isets::is_1ext_oracle(&g.induced_subgraph(class)?.graph) {
            return Ok(Outcome::new(
                false,
                format!("valid: no; class {c} ({}) is not 1-extendable\n", names(doc, class.iter())),
            ));
        }
    }
    Ok(Outcome::new(true, format!("valid: yes, {} classes\n", p.class_count())))
}

pub fn cmd_pv(doc: &GraphDocument, theta: &str, float: bool, limits: &Limits) -> CliResult<Outcome> {
    let g = doc.graph()?;
    let theta = metrics::parse_rational(theta)?;
    let prof = metrics::access_proportion(&g, &theta, limits)?;
    let show = |r: &BigRational| if float { format!("{:.6}", metrics::to_f64(r)) } else { r.to_string() };
    let mut out = format!("theta={}\nvertex\tp_v\tlimit\n", show(&prof.theta));
    for v in 0..g.n() {
        let _ = writeln!(out, "{}\t{}\t{}", doc.name(v), show(&prof.p[v]), show(&prof.limit_p[v]));
    }
    if !prof.starved.is_empty() {
        let _ = writeln!(out, "starved: {}", names(doc, prof.starved.iter()));
    }
    Ok(Outcome::new(true, out))
}

pub fn cmd_decompose(doc: &GraphDocument) -> CliResult<Outcome> {
    let g = doc.graph()?;
    let t = decompose(&g)?;
    Ok(Outcome::new(true, format!("{t}\nmw={}\n", moddecomp::modular_width(&t))))
}

/// Parses `2,3,4` or `2 3 4`.
pub fn parse_sizes(s: &str) -> CliResult<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|w| !w.is_empty())
        .map(|w| w.parse().map_err(|_| CliError::Invalid(format!("bad size `{w}`"))))
        .collect()
}

pub enum Family<'a> {
    MultipartiteExtremal(u32),
    IntervalExtremal(u32),
    Multipartite(Vec<usize>),
    Hardness { base: &'a GraphDocument, k: usize },
    Random { n: usize, p: f64, seed: u64 },
}

pub fn cmd_gen(family: &Family<'_>) -> CliResult<GraphDocument> {
    Ok(match family {
        Family::MultipartiteExtremal(k) => {
            let (g, parts) = generators::multipartite_extremal(*k);
            let mut doc = GraphDocument::from_graph(&g);
            doc.parts = Some(parts.iter().map(|p| p.len()).collect());
            doc
        }
        Family::IntervalExtremal(k) => GraphDocument::from_graph(&generators::interval_extremal(*k)?),
        Family::Multipartite(sizes) => {
            let (g, _) = Graph::complete_multipartite(sizes)?;
            let mut doc = GraphDocument::from_graph(&g);
            doc.parts = Some(sizes.clone());
            doc
        }
        Family::Hardness { base, k } => GraphDocument::from_graph(&generators::hardness_gadget(&base.graph()?, *k)?),
        Family::Random { n, p, seed } => {
            if !(0.0..=1.0).contains(p) {
                return Err(CliError::Invalid(format!("edge probability {p} outside [0, 1]")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    if rng.gen_bool(*p) {
                        edges.push((u, v));
                    }
                }
            }
            GraphDocument::from_graph(&Graph::from_edges(*n, edges)?)
        }
    })
}

fn render_solution(targets: &[u64], sol: &GenSetSolution, note: &str) -> String {
    let gens: Vec<String> = sol.generators.iter().map(u64::to_string).collect();
    let mut out = format!("generators: {}{note}\n", gens.join(" "));
    for (t, sub) in targets.iter().zip(&sol.subsets) {
        let terms: Vec<String> = sub.iter().map(|&j| sol.generators[j].to_string()).collect();
        let _ = writeln!(out, "{t} = {}", terms.join(" + "));
    }
    out
}

pub fn cmd_genset(inst: &GenSetInstance, limits: &Limits) -> CliResult<Outcome> {
    let binary = genset::binary_solution(inst.alpha_max());
    if inst.k() >= binary.len() {
        let sol = GenSetSolution::derive(inst.targets(), binary).expect("powers of two generate 1..=alpha");
        return Ok(Outcome::new(true, render_solution(inst.targets(), &sol, " (binary fallback)")));
    }
    Ok(match genset::solve(inst, limits)? {
        Some(sol) => Outcome::new(true, render_solution(inst.targets(), &sol, "")),
        None => Outcome::new(false, "infeasible\n".to_string()),
    })
}
