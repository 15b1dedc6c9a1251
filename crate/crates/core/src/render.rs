//! DOT, TikZ and JSON renderings of lattices, quotient posets, single
//! transfer systems and decorated Hasse diagrams. Output is a pure function
//! of the input.

use std::fmt::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::enumeration::{Decorations, TsLattice};
use crate::error::{Error, Result};
use crate::io::TransferSystemJson;
use crate::lattice::{lattice_hash, Lattice, LatticeAction, QuotientPoset};
use crate::transfer::{minimal_generating_set, TransferSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dot,
    Tikz,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(Format::Dot),
            "tikz" => Ok(Format::Tikz),
            "json" => Ok(Format::Json),
            _ => Err(Error::Invalid(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    SubgroupLattice,
    QuotientPoset,
    TransferSystem,
    TsHasse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderSpec {
    pub format: Format,
    pub target: Target,
    /// Glyphs and decoration attributes; Hasse diagrams only.
    pub decorations: bool,
    /// `S C L c` instead of `△ ♡ ◆ ◇`.
    pub ascii: bool,
}

impl RenderSpec {
    pub fn new(format: Format, target: Target) -> Self {
        RenderSpec {
            format,
            target,
            decorations: target == Target::TsHasse,
            ascii: false,
        }
    }

    pub fn with_decorations(self, decorations: bool) -> Result<Self> {
        if decorations && self.target != Target::TsHasse {
            return Err(Error::Invalid("decorations apply to transfer-system Hasse diagrams only".into()));
        }
        Ok(RenderSpec { decorations, ..self })
    }

    pub fn with_ascii(self, ascii: bool) -> Self {
        RenderSpec { ascii, ..self }
    }
}

#[derive(Clone, Copy)]
pub enum Item<'a> {
    Lattice(&'a Lattice),
    Quotient(&'a QuotientPoset),
    System(&'a Lattice, &'a LatticeAction, &'a TransferSystem),
    Hasse(&'a Lattice, &'a LatticeAction, &'a TsLattice),
}

impl Item<'_> {
    fn target(&self) -> Target {
        match self {
            Item::Lattice(_) => Target::SubgroupLattice,
            Item::Quotient(_) => Target::QuotientPoset,
            Item::System(..) => Target::TransferSystem,
            Item::Hasse(..) => Target::TsHasse,
        }
    }
}

/// Glyphs in the figures' order: saturated, cosaturated, LSP (solid when not
/// connected, hollow when connected).
pub fn glyphs(d: Decorations, ascii: bool) -> String {
    let marks = if ascii { ["S", "C", "L", "c"] } else { ["△", "♡", "◆", "◇"] };
    let mut s = String::new();
    if d.saturated {
        s.push_str(marks[0]);
    }
    if d.cosaturated {
        s.push_str(marks[1]);
    }
    if d.connected {
        s.push_str(marks[3]);
    } else if d.lsp {
        s.push_str(marks[2]);
    }
    s
}

pub fn render(item: Item<'_>, spec: &RenderSpec) -> Result<String> {
    if item.target() != spec.target {
        return Err(Error::Invalid(format!("{:?} cannot be rendered as {:?}", item.target(), spec.target)));
    }
    Ok(match spec.format {
        Format::Json => json(item),
        Format::Dot => dot(&graph(item, spec)),
        Format::Tikz => tikz(&graph(item, spec)),
    })
}

struct Node {
    label: String,
    rank: usize,
    attrs: Vec<(&'static str, String)>,
    decorations: Option<Decorations>,
}

struct Graph {
    name: &'static str,
    nodes: Vec<Node>,
    edges: Vec<(usize, usize)>,
    arrows: bool,
}

/// Longest chain length from the bottom, from an order given as `leq`.
fn heights(n: usize, leq: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&y| leq(y, x)).count());
    let mut h = vec![0; n];
    for (i, &x) in order.iter().enumerate() {
        h[x] = order[..i].iter().filter(|&&y| leq(y, x)).map(|&y| h[y] + 1).max().unwrap_or(0);
    }
    h
}

fn plain(label: &str, rank: usize) -> Node {
    Node {
        label: label.to_string(),
        rank,
        attrs: Vec::new(),
        decorations: None,
    }
}

fn graph(item: Item<'_>, spec: &RenderSpec) -> Graph {
    match item {
        Item::Lattice(l) => {
            let h = heights(l.size(), |x, y| l.leq(x, y));
            Graph {
                name: "lattice",
                nodes: (0..l.size()).map(|x| plain(l.label(x), h[x])).collect(),
                edges: l.covering_pairs(),
                arrows: false,
            }
        }
        Item::Quotient(q) => {
            let h = heights(q.len(), |x, y| q.leq(x, y));
            Graph {
                name: "quotient",
                nodes: (0..q.len()).map(|x| plain(&q.labels()[x], h[x])).collect(),
                edges: q.covering_pairs(),
                arrows: false,
            }
        }
        Item::System(l, _, ts) => {
            let h = heights(l.size(), |x, y| l.leq(x, y));
            Graph {
                name: "transfer_system",
                nodes: (0..l.size()).map(|x| plain(l.label(x), h[x])).collect(),
                edges: ts.edges(),
                arrows: true,
            }
        }
        Item::Hasse(l, a, tsl) => {
            let nodes = tsl
                .systems()
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    let d = tsl.decoration(i);
                    let mut attrs = vec![("generators", generator_text(l, a, t))];
                    let mut label = i.to_string();
                    if spec.decorations {
                        let g = glyphs(d, spec.ascii);
                        if !g.is_empty() {
                            label = format!("{i} {g}");
                        }
                        attrs.extend([
                            ("saturated", d.saturated.to_string()),
                            ("cosaturated", d.cosaturated.to_string()),
                            ("lsp", d.lsp.to_string()),
                            ("connected", d.connected.to_string()),
                        ]);
                    }
                    Node {
                        label,
                        rank: t.edge_count(),
                        attrs,
                        decorations: spec.decorations.then_some(d),
                    }
                })
                .collect();
            Graph {
                name: "hasse",
                nodes,
                edges: tsl.hasse_edges().to_vec(),
                arrows: false,
            }
        }
    }
}

fn generator_text(l: &Lattice, a: &LatticeAction, t: &TransferSystem) -> String {
    minimal_generating_set(l, a, t)
        .edges()
        .iter()
        .map(|&(k, h)| format!("{}->{}", l.label(k), l.label(h)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn dot(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", g.name).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    if !g.arrows {
        writeln!(out, "  edge [arrowhead=none];").unwrap();
    }
    for (i, n) in g.nodes.iter().enumerate() {
        write!(out, "  n{i} [label={}", dot_quote(&n.label)).unwrap();
        for (k, v) in &n.attrs {
            write!(out, ", {k}={}", dot_quote(v)).unwrap();
        }
        writeln!(out, "];").unwrap();
    }
    for &(i, j) in &g.edges {
        writeln!(out, "  n{i} -> n{j};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Lattice labels as TeX math: multi-character sub/superscripts braced,
/// `Dic` upright, `#` escaped.
fn tex_label(s: &str) -> String {
    let s = s.replace("Dic", "\\mathrm{Dic}").replace('#', "\\#");
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if (c == '_' || c == '^') && chars.peek().is_some_and(|d| d.is_ascii_digit()) {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
            }
            write!(out, "{{{digits}}}").unwrap();
        }
    }
    out
}

fn tikz_glyphs(d: Decorations) -> String {
    let mut s = String::new();
    if d.saturated {
        s.push_str("\\textcolor{cyan}{$\\triangle$}");
    }
    if d.cosaturated {
        s.push_str("\\textcolor{magenta}{$\\heartsuit$}");
    }
    if d.connected {
        s.push_str("\\textcolor{violet}{$\\lozenge$}");
    } else if d.lsp {
        s.push_str("\\textcolor{violet}{$\\blacklozenge$}");
    }
    s
}

fn tikz(g: &Graph) -> String {
    let mut layers: Vec<Vec<usize>> = Vec::new();
    for (i, n) in g.nodes.iter().enumerate() {
        if layers.len() <= n.rank {
            layers.resize(n.rank + 1, Vec::new());
        }
        layers[n.rank].push(i);
    }
    let layers: Vec<&Vec<usize>> = layers.iter().filter(|l| !l.is_empty()).collect();
    let mut out = String::new();
    out.push_str("\\documentclass[tikz]{standalone}\n\\usepackage{amssymb}\n\\begin{document}\n");
    out.push_str("\\begin{tikzpicture}[x=1.4cm, y=1.4cm]\n");
    for (y, layer) in layers.iter().enumerate() {
        let width = layer.len() as f64 - 1.0;
        for (k, &i) in layer.iter().enumerate() {
            let n = &g.nodes[i];
            let x = k as f64 - width / 2.0;
            let text = match n.decorations {
                Some(d) => format!("${}${}", n.label.split(' ').next().unwrap_or(""), tikz_glyphs(d)),
                None => format!("${}$", tex_label(&n.label)),
            };
            writeln!(out, "  \\node (n{i}) at ({x:.2}, {y}) {{{text}}};").unwrap();
        }
    }
    let style = if g.arrows { "[->]" } else { "" };
    for &(i, j) in &g.edges {
        writeln!(out, "  \\draw{style} (n{i}) -- (n{j});").unwrap();
    }
    out.push_str("\\end{tikzpicture}\n\\end{document}\n");
    out
}

#[derive(Serialize)]
struct LatticeOut<'a> {
    labels: &'a [String],
    covers: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct QuotientOut<'a> {
    labels: &'a [String],
    multiplicities: Vec<usize>,
    covers: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct HasseNode {
    index: usize,
    edges: Vec<(usize, usize)>,
    generators: Vec<(usize, usize)>,
    #[serde(flatten)]
    decorations: Decorations,
}

#[derive(Serialize)]
struct HasseOut<'a> {
    lattice: String,
    labels: &'a [String],
    systems: Vec<HasseNode>,
    hasse_edges: &'a [(usize, usize)],
}

fn json(item: Item<'_>) -> String {
    let text = match item {
        Item::Lattice(l) => serde_json::to_string_pretty(&LatticeOut {
            labels: l.labels(),
            covers: l.covering_pairs(),
        }),
        Item::Quotient(q) => serde_json::to_string_pretty(&QuotientOut {
            labels: q.labels(),
            multiplicities: (0..q.len()).map(|c| q.multiplicity(c)).collect(),
            covers: q.covering_pairs(),
        }),
        Item::System(l, a, ts) => Ok(TransferSystemJson::new(l, a, ts).to_pretty()),
        Item::Hasse(l, a, tsl) => serde_json::to_string_pretty(&HasseOut {
            lattice: lattice_hash(l, a),
            labels: l.labels(),
            systems: tsl
                .systems()
                .iter()
                .enumerate()
                .map(|(i, t)| HasseNode {
                    index: i,
                    edges: t.edges(),
                    generators: minimal_generating_set(l, a, t).edges().to_vec(),
                    decorations: tsl.decoration(i),
                })
                .collect(),
            hasse_edges: tsl.hasse_edges(),
        }),
    };
    let mut text = text.expect("plain data serializes");
    text.push('\n');
    text
}
