//! The `translat` command line. Exit codes: 0 success, 1 domain error (or an
//! audit counterexample under `--strict-audit`), 2 usage error.

use std::ffi::OsString;
use std::fmt::{self, Write as _};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::enumeration::{
    audit_bisaturated_paths, audit_lsp_two_component, cache, hasse_stats, width_of_spec, BisaturatedAudit, LspAudit,
    TsLattice,
};
use crate::error::{Error, Result};
use crate::group::{build_group, BuildOptions, GroupSpec, DEFAULT_ORDER_CAP, RAISED_ORDER_CAP};
use crate::io::TransferSystemJson;
use crate::lattice::{Lattice, LatticeAction, LatticeJson, QuotientPoset, SubgroupLattice};
use crate::render::{self, glyphs, Item, RenderSpec, Target};
use crate::transfer::{
    generate, is_connected, is_cosaturated, is_saturated, minimal_generating_set, saturated_hull, validate, Axiom,
    EdgeSet,
};

/// Frobenius groups `F_q` in the width table.
pub const FROBENIUS_TABLE: [usize; 9] = [5, 7, 8, 9, 11, 13, 16, 17, 19];

#[derive(Parser, Debug)]
#[command(name = "translat", version, about = "Subgroup lattices, transfer systems and their Hasse diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Directory for enumeration caches.
    #[arg(long, global = true, env = cache::CACHE_ENV)]
    cache_dir: Option<PathBuf>,
    /// Largest group order to build.
    #[arg(long, global = true)]
    order_cap: Option<usize>,
    /// Exit 1 when an audit finds a counterexample.
    #[arg(long, global = true)]
    strict_audit: bool,
    /// ASCII decoration markers.
    #[arg(long, global = true)]
    ascii: bool,
    /// Close transfer-system files under the axioms on load.
    #[arg(long, global = true)]
    close: bool,
    /// Fail instead of enumerating when no cache exists.
    #[arg(long, global = true)]
    cached_only: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Dot,
    Tikz,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, subgroups, conjugacy classes, losslessness and modularity.
    Group {
        spec: Source,
        /// Render the quotient by conjugation instead of the full lattice.
        #[arg(long)]
        quotient: bool,
    },
    /// Width with its generating edges.
    Width { spec: GroupSpec },
    /// Count all transfer systems (writing the cache when configured).
    Enumerate { spec: Source },
    /// The decorated Hasse diagram of all transfer systems.
    Hasse { spec: Source },
    /// Validate a transfer-system file against the axioms.
    Check { spec: Source, file: PathBuf },
    /// Saturation, cosaturation, connectedness, LSP and hull of a system.
    Props { spec: Source, file: PathBuf },
    /// Bisaturated-path and two-component LSP audits.
    Audit { spec: Source },
    /// Widths of the Frobenius groups F_5 … F_19.
    FrobeniusTable,
}

/// A group spec, or `lattice:<path>` for an abstract lattice file.
#[derive(Clone, Debug)]
enum Source {
    Group(GroupSpec),
    Lattice(PathBuf),
}

impl FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.strip_prefix("lattice:") {
            Some(p) => Ok(Source::Lattice(PathBuf::from(p))),
            None => s.parse().map(Source::Group),
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Group(g) => write!(f, "{g}"),
            Source::Lattice(p) => write!(f, "lattice:{}", p.display()),
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
    /// Output already produced; the audit found counterexamples.
    Audit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = std::result::Result<String, (String, Failure)>;

struct Loaded {
    name: String,
    sub: Option<SubgroupLattice>,
    lattice: Lattice,
    action: LatticeAction,
}

impl Cli {
    fn build_options(&self) -> BuildOptions {
        BuildOptions::with_cap(self.order_cap.unwrap_or(DEFAULT_ORDER_CAP))
    }

    fn load(&self, source: &Source) -> Result<Loaded> {
        match source {
            Source::Group(spec) => {
                let sub = SubgroupLattice::new(build_group(spec, &self.build_options())?);
                Ok(Loaded {
                    name: sub.group.label().to_string(),
                    lattice: sub.lattice.clone(),
                    action: sub.action.clone(),
                    sub: Some(sub),
                })
            }
            Source::Lattice(path) => {
                let json: LatticeJson = serde_json::from_str(&fs::read_to_string(path)?)?;
                let (lattice, action) = json.into_parts()?;
                Ok(Loaded {
                    name: path.display().to_string(),
                    sub: None,
                    lattice,
                    action,
                })
            }
        }
    }

    fn enumeration(&self, source: &Source, g: &Loaded) -> Result<TsLattice> {
        let key = source.to_string();
        if self.cached_only {
            let dir = self
                .cache_dir
                .as_deref()
                .ok_or_else(|| Error::Cache("--cached-only needs a cache directory".into()))?;
            return cache::load(dir, &key, &g.lattice, &g.action)?
                .ok_or_else(|| Error::Cache(format!("no cache for {key} in {}", dir.display())));
        }
        cache::load_or_enumerate(self.cache_dir.as_deref(), &key, &g.lattice, &g.action)
    }

    fn render_spec(&self, target: Target) -> std::result::Result<Option<RenderSpec>, Failure> {
        let format = match self.format {
            OutputFormat::Text => return Ok(None),
            OutputFormat::Json => render::Format::Json,
            OutputFormat::Dot => render::Format::Dot,
            OutputFormat::Tikz => render::Format::Tikz,
        };
        Ok(Some(RenderSpec::new(format, target).with_ascii(self.ascii)))
    }

    fn text_or_json(&self) -> std::result::Result<bool, Failure> {
        match self.format {
            OutputFormat::Text => Ok(false),
            OutputFormat::Json => Ok(true),
            f => Err(Failure::Usage(format!("--format {f:?} is not available for this command").to_lowercase())),
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn edge_labels(l: &Lattice, edges: &[(usize, usize)]) -> Vec<String> {
    edges.iter().map(|&(k, h)| format!("{} -> {}", l.label(k), l.label(h))).collect()
}

#[derive(Serialize)]
struct ClassRow {
    representative: usize,
    label: String,
    order: usize,
    conjugates: usize,
}

#[derive(Serialize)]
struct GroupReport {
    group: String,
    order: usize,
    subgroups: usize,
    classes: Vec<ClassRow>,
    abelian: bool,
    lossless: bool,
    modular: bool,
    /// `None` when the quotient poset is not a lattice.
    quotient_modular: Option<bool>,
}

fn group_report(sub: &SubgroupLattice) -> GroupReport {
    let q = QuotientPoset::new(&sub.lattice, &sub.action);
    GroupReport {
        group: sub.group.label().to_string(),
        order: sub.group.order(),
        subgroups: sub.lattice.size(),
        classes: q
            .classes()
            .iter()
            .map(|c| ClassRow {
                representative: c[0],
                label: sub.lattice.label(c[0]).to_string(),
                order: sub.subgroups[c[0]].order(),
                conjugates: c.len(),
            })
            .collect(),
        abelian: sub.group.is_abelian(),
        lossless: sub.group.is_lossless(),
        modular: sub.lattice.is_modular(),
        quotient_modular: q.to_lattice().ok().map(|l| l.is_modular()),
    }
}

fn cmd_group(cli: &Cli, source: &Source, quotient: bool) -> std::result::Result<String, Failure> {
    let g = cli.load(source)?;
    let target = if quotient { Target::QuotientPoset } else { Target::SubgroupLattice };
    let q = QuotientPoset::new(&g.lattice, &g.action);
    if let Some(spec) = cli.render_spec(target)? {
        if spec.format != render::Format::Json || quotient || g.sub.is_none() {
            let item = if quotient { Item::Quotient(&q) } else { Item::Lattice(&g.lattice) };
            return Ok(render::render(item, &spec)?);
        }
    }
    let Some(sub) = &g.sub else {
        let mut out = String::new();
        writeln!(out, "lattice   {}", g.name).unwrap();
        writeln!(out, "elements  {}", g.lattice.size()).unwrap();
        writeln!(out, "modular   {}", g.lattice.is_modular()).unwrap();
        return Ok(out);
    };
    let r = group_report(sub);
    if cli.format == OutputFormat::Json {
        return Ok(json(&r));
    }
    let mut out = String::new();
    writeln!(out, "group      {}", r.group).unwrap();
    writeln!(out, "order      {}", r.order).unwrap();
    writeln!(out, "subgroups  {} in {} conjugacy classes", r.subgroups, r.classes.len()).unwrap();
    writeln!(out, "abelian    {}", r.abelian).unwrap();
    writeln!(out, "lossless   {}", r.lossless).unwrap();
    writeln!(out, "modular    {}", r.modular).unwrap();
    let qm = r.quotient_modular.map_or("not a lattice".to_string(), |b| b.to_string());
    writeln!(out, "quotient modular  {qm}").unwrap();
    writeln!(out, "{:<16} {:>6} {:>10}", "class", "order", "conjugates").unwrap();
    for c in &r.classes {
        writeln!(out, "{:<16} {:>6} {:>10}", c.label, c.order, c.conjugates).unwrap();
    }
    Ok(out)
}

fn cmd_width(cli: &Cli, spec: &GroupSpec) -> std::result::Result<String, Failure> {
    let as_json = cli.text_or_json()?;
    let r = width_of_spec(spec, &cli.build_options())?;
    if as_json {
        return Ok(json(&r));
    }
    let mut out = format!("{}: width {}", r.group, r.width);
    match r.formula_value {
        Some(f) if f == r.width => write!(out, " (closed form agrees)").unwrap(),
        Some(f) => write!(out, " (closed form gives {f})").unwrap(),
        None => {}
    }
    out.push('\n');
    for (label, _) in r.class_labels.iter().zip(&r.generating_edges) {
        writeln!(out, "  {label} -> {}", r.group).unwrap();
    }
    Ok(out)
}

fn cmd_enumerate(cli: &Cli, source: &Source) -> std::result::Result<String, Failure> {
    let as_json = cli.text_or_json()?;
    let g = cli.load(source)?;
    let tsl = cli.enumeration(source, &g)?;
    let cache_path = cli.cache_dir.as_deref().map(|d| cache::path_for(d, &source.to_string()));
    #[derive(Serialize)]
    struct Report<'a> {
        lattice: &'a str,
        subgroups: usize,
        transfer_systems: usize,
        hasse_edges: usize,
        cache: Option<&'a Path>,
    }
    let r = Report {
        lattice: &g.name,
        subgroups: g.lattice.size(),
        transfer_systems: tsl.len(),
        hasse_edges: tsl.hasse_edges().len(),
        cache: cache_path.as_deref(),
    };
    if as_json {
        return Ok(json(&r));
    }
    let mut out = format!(
        "{}: {} transfer systems on {} subgroups, {} covering relations\n",
        r.lattice, r.transfer_systems, r.subgroups, r.hasse_edges
    );
    if let Some(p) = r.cache {
        writeln!(out, "cache: {}", p.display()).unwrap();
    }
    Ok(out)
}

fn cmd_hasse(cli: &Cli, source: &Source) -> std::result::Result<String, Failure> {
    let g = cli.load(source)?;
    let tsl = cli.enumeration(source, &g)?;
    let (l, a) = (&g.lattice, &g.action);
    if let Some(spec) = cli.render_spec(Target::TsHasse)? {
        return Ok(render::render(Item::Hasse(l, a, &tsl), &spec)?);
    }
    let st = hasse_stats(&tsl);
    let mut out = String::new();
    writeln!(
        out,
        "{}: {} transfer systems, {} covering relations, shortest trivial -> complete path {} ({} such paths)",
        g.name, st.count, st.hasse_edge_count, st.shortest_path_length, st.shortest_path_count
    )
    .unwrap();
    for (i, t) in tsl.systems().iter().enumerate() {
        let gens = edge_labels(l, minimal_generating_set(l, a, t).edges());
        let up: Vec<String> = tsl.hasse_edges().iter().filter(|e| e.0 == i).map(|e| e.1.to_string()).collect();
        writeln!(
            out,
            "{i:>4} {:<4} [{}] covered by {}",
            glyphs(tsl.decoration(i), cli.ascii),
            gens.join(", "),
            if up.is_empty() { "-".to_string() } else { up.join(" ") }
        )
        .unwrap();
    }
    Ok(out)
}

fn read_ts_file(path: &Path) -> Result<TransferSystemJson> {
    TransferSystemJson::parse(&fs::read_to_string(path)?)
}

fn witness_text(l: &Lattice, axiom: Axiom, (x, y, z): (usize, usize, usize)) -> String {
    let lab = |i: usize| l.label(i).to_string();
    match axiom {
        Axiom::Subgroup => format!("{} -> {} but {} is not below {}", lab(x), lab(y), lab(x), lab(y)),
        Axiom::Reflexivity => format!("{} -> {} missing", lab(x), lab(x)),
        Axiom::Composition => format!("{} -> {} -> {} but not {} -> {}", lab(x), lab(y), lab(z), lab(x), lab(z)),
        Axiom::Restriction => format!(
            "{} -> {} and {} <= {} but not {} -> {}",
            lab(x),
            lab(y),
            lab(z),
            lab(y),
            lab(l.meet(x, z)),
            lab(z)
        ),
        Axiom::Conjugation => format!("{} -> {} not closed under conjugation by generator {z}", lab(x), lab(y)),
    }
}

fn cmd_check(cli: &Cli, source: &Source, file: &Path) -> Outcome {
    let run = || -> std::result::Result<(String, bool), Failure> {
        let as_json = cli.text_or_json()?;
        let g = cli.load(source)?;
        let (l, a) = (&g.lattice, &g.action);
        let f = read_ts_file(file)?;
        let key = source.to_string();
        let rel = f.relation(l, a, Some(&key))?;
        if cli.close {
            let ts = generate(l, a, &EdgeSet::new(f.edges.iter().copied()))?;
            let out = if as_json {
                TransferSystemJson::new(l, a, &ts).to_pretty() + "\n"
            } else {
                format!("closed to {} edges: {}\n", ts.edge_count(), edge_labels(l, &ts.edges()).join(", "))
            };
            return Ok((out, true));
        }
        let violations = validate(l, a, &rel)?;
        #[derive(Serialize)]
        struct V {
            axiom: u8,
            name: String,
            witness: (usize, usize, usize),
            description: String,
        }
        let vs: Vec<V> = violations
            .iter()
            .map(|v| V {
                axiom: v.axiom.id(),
                name: format!("{:?}", v.axiom).to_lowercase(),
                witness: v.witness,
                description: witness_text(l, v.axiom, v.witness),
            })
            .collect();
        let out = if as_json {
            #[derive(Serialize)]
            struct R {
                valid: bool,
                violations: Vec<V>,
            }
            json(&R {
                valid: vs.is_empty(),
                violations: vs,
            })
        } else if vs.is_empty() {
            format!("valid transfer system with {} edges\n", rel.iter().flatten().filter(|&&b| b).count() - l.size())
        } else {
            let mut s = format!("not a transfer system: {} violations\n", vs.len());
            for v in &vs {
                writeln!(s, "  axiom {} ({}): {}", v.axiom, v.name, v.description).unwrap();
            }
            s
        };
        Ok((out, violations.is_empty()))
    };
    match run() {
        Ok((out, true)) => Ok(out),
        Ok((out, false)) => Err((out, Failure::Audit("relation violates the transfer-system axioms".into()))),
        Err(f) => Err((String::new(), f)),
    }
}

fn cmd_props(cli: &Cli, source: &Source, file: &Path) -> std::result::Result<String, Failure> {
    let g = cli.load(source)?;
    let (l, a) = (&g.lattice, &g.action);
    let ts = read_ts_file(file)?.load(l, a, Some(&source.to_string()), cli.close)?;
    if let Some(spec) = cli.render_spec(Target::TransferSystem)? {
        if spec.format != render::Format::Json {
            return Ok(render::render(Item::System(l, a, &ts), &spec)?);
        }
    }
    let tsl = cli.enumeration(source, &g)?;
    let hull = saturated_hull(l, a, &ts);
    #[derive(Serialize)]
    struct Props {
        edges: Vec<(usize, usize)>,
        generators: Vec<(usize, usize)>,
        saturated: bool,
        cosaturated: bool,
        connected: bool,
        lsp: bool,
        hull: Vec<(usize, usize)>,
        hull_index: Option<usize>,
    }
    let p = Props {
        edges: ts.edges(),
        generators: minimal_generating_set(l, a, &ts).edges().to_vec(),
        saturated: is_saturated(l, &ts),
        cosaturated: is_cosaturated(l, a, &ts),
        connected: is_connected(l, &ts),
        lsp: tsl.is_lsp(l, a, &ts)?,
        hull_index: tsl.index_of(&hull),
        hull: hull.edges(),
    };
    if cli.format == OutputFormat::Json {
        return Ok(json(&p));
    }
    let mut out = String::new();
    writeln!(out, "edges        {}", p.edges.len()).unwrap();
    writeln!(out, "generators   {}", edge_labels(l, &p.generators).join(", ")).unwrap();
    writeln!(out, "saturated    {}", p.saturated).unwrap();
    writeln!(out, "cosaturated  {}", p.cosaturated).unwrap();
    writeln!(out, "connected    {}", p.connected).unwrap();
    writeln!(out, "lsp          {}", p.lsp).unwrap();
    writeln!(out, "hull         {} edges: {}", p.hull.len(), edge_labels(l, &p.hull).join(", ")).unwrap();
    Ok(out)
}

#[derive(Serialize)]
struct AuditReport {
    lattice: String,
    bisaturated_paths: BisaturatedAudit,
    lsp_two_component: LspAudit,
    counterexamples: Vec<String>,
}

fn cmd_audit(cli: &Cli, source: &Source) -> Outcome {
    let run = || -> std::result::Result<AuditReport, Failure> {
        let g = cli.load(source)?;
        let (l, a) = (&g.lattice, &g.action);
        let tsl = cli.enumeration(source, &g)?;
        let b = audit_bisaturated_paths(&tsl);
        let lsp = audit_lsp_two_component(&tsl, l, a)?;
        let mut counterexamples = Vec::new();
        if !b.agree {
            counterexamples.push(format!(
                "bisaturated paths: a shortest path reaches {} bisaturated systems, some path reaches {}",
                b.max_over_shortest_paths, b.max_over_all_paths
            ));
        }
        for c in &lsp.counterexamples {
            counterexamples.push(format!(
                "two-component system {} [{}]: lsp={} compatible with +({} -> {})={}",
                c.system,
                edge_labels(l, &minimal_generating_set(l, a, tsl.system(c.system)).edges().to_vec()).join(", "),
                c.is_lsp,
                l.label(l.bottom()),
                l.label(l.top()),
                c.compatible_with_connected
            ));
        }
        Ok(AuditReport {
            lattice: g.name,
            bisaturated_paths: b,
            lsp_two_component: lsp,
            counterexamples,
        })
    };
    let r = run().map_err(|f| (String::new(), f))?;
    let out = match cli.format {
        OutputFormat::Json => json(&r),
        OutputFormat::Text => {
            let b = &r.bisaturated_paths;
            let mut s = format!("{}\n", r.lattice);
            writeln!(
                s,
                "  shortest path {} ({} paths); most bisaturated systems on a path: {} overall, {} on shortest paths",
                b.shortest_path_length, b.shortest_path_count, b.max_over_all_paths, b.max_over_shortest_paths
            )
            .unwrap();
            writeln!(
                s,
                "  two-component systems: {} ({} with every vertex joined to the bottom)",
                r.lsp_two_component.hypothesis_matches.len(),
                r.lsp_two_component.literal_matches.len()
            )
            .unwrap();
            writeln!(s, "  counterexamples: {}", r.counterexamples.len()).unwrap();
            for c in &r.counterexamples {
                writeln!(s, "    {c}").unwrap();
            }
            s
        }
        f => {
            let msg = format!("--format {f:?} is not available for this command").to_lowercase();
            return Err((String::new(), Failure::Usage(msg)));
        }
    };
    if cli.strict_audit && !r.counterexamples.is_empty() {
        return Err((out, Failure::Audit(format!("{} audit counterexamples", r.counterexamples.len()))));
    }
    Ok(out)
}

#[derive(Serialize)]
pub struct FrobeniusRow {
    pub q: usize,
    pub order: usize,
    pub factorization: String,
    /// `None` when the order exceeds the cap.
    pub width: Option<usize>,
}

fn factorization(mut n: usize) -> String {
    let mut parts = Vec::new();
    let mut p = 2;
    while n > 1 {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        match e {
            0 => {}
            1 => parts.push(p.to_string()),
            _ => parts.push(format!("{p}^{e}")),
        }
        p += 1;
    }
    parts.join(" * ")
}

/// Widths of `F_q` for `q` in [`FROBENIUS_TABLE`], skipping orders above `cap`.
pub fn frobenius_table(cap: usize) -> Result<Vec<FrobeniusRow>> {
    FROBENIUS_TABLE
        .iter()
        .map(|&q| {
            let spec = GroupSpec::Frobenius(q);
            let order = q * (q - 1);
            let width = if order <= cap {
                Some(width_of_spec(&spec, &BuildOptions::with_cap(cap))?.width)
            } else {
                None
            };
            Ok(FrobeniusRow {
                q,
                order,
                factorization: factorization(order),
                width,
            })
        })
        .collect()
}

fn cmd_frobenius(cli: &Cli) -> std::result::Result<String, Failure> {
    let as_json = cli.text_or_json()?;
    let rows = frobenius_table(cli.order_cap.unwrap_or(RAISED_ORDER_CAP))?;
    if as_json {
        return Ok(json(&rows));
    }
    let mut out = format!("{:<6} {:>6} {:<16} {:>5}\n", "group", "order", "factorization", "width");
    for r in &rows {
        let w = r.width.map_or("skip".to_string(), |w| w.to_string());
        writeln!(out, "{:<6} {:>6} {:<16} {:>5}", format!("F_{}", r.q), r.order, r.factorization, w).unwrap();
    }
    Ok(out)
}

fn dispatch(cli: &Cli) -> Outcome {
    let plain = |r: std::result::Result<String, Failure>| r.map_err(|f| (String::new(), f));
    match &cli.command {
        Command::Group { spec, quotient } => plain(cmd_group(cli, spec, *quotient)),
        Command::Width { spec } => plain(cmd_width(cli, spec)),
        Command::Enumerate { spec } => plain(cmd_enumerate(cli, spec)),
        Command::Hasse { spec } => plain(cmd_hasse(cli, spec)),
        Command::Check { spec, file } => cmd_check(cli, spec, file),
        Command::Props { spec, file } => plain(cmd_props(cli, spec, file)),
        Command::Audit { spec } => cmd_audit(cli, spec),
        Command::FrobeniusTable => plain(cmd_frobenius(cli)),
    }
}

fn emit(cli: &Cli, text: &str, stdout: &mut dyn Write) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

/// Runs the command line with explicit streams; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let (text, failure) = match dispatch(&cli) {
        Ok(text) => (text, None),
        Err((text, f)) => (text, Some(f)),
    };
    if !text.is_empty() {
        if let Err(e) = emit(&cli, &text, stdout) {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    }
    match failure {
        None => 0,
        Some(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Some(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
        Some(Failure::Audit(msg)) => {
            let _ = writeln!(stderr, "{msg}");
            1
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
