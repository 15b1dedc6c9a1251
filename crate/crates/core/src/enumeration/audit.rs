//! Report-only checks of two conjectured patterns in the Hasse diagrams.

use serde::Serialize;

use super::hasse::{adjacency, bfs};
use super::{enumerate_all, TsLattice};
use crate::error::Result;
use crate::lattice::{Lattice, LatticeAction};
use crate::transfer::{compatible, extend, TransferSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BisaturatedAudit {
    pub shortest_path_length: usize,
    pub shortest_path_count: u64,
    /// Most bisaturated nodes (endpoints included) on any upward path.
    pub max_over_all_paths: usize,
    /// Most bisaturated nodes on a shortest upward path.
    pub max_over_shortest_paths: usize,
    pub agree: bool,
    pub witness_all: Vec<usize>,
    pub witness_shortest: Vec<usize>,
}

/// Longest-weight path by dynamic programming over `order` (a topological
/// order restricted to allowed steps).
fn best_path(
    order: &[usize],
    succ: &[Vec<usize>],
    allowed: impl Fn(usize, usize) -> bool,
    weight: &[usize],
    from: usize,
    to: usize,
) -> (usize, Vec<usize>) {
    let n = succ.len();
    let mut best: Vec<Option<usize>> = vec![None; n];
    let mut prev = vec![usize::MAX; n];
    best[from] = Some(weight[from]);
    for &v in order {
        let Some(bv) = best[v] else { continue };
        for &w in &succ[v] {
            if allowed(v, w) && best[w].map_or(true, |bw| bv + weight[w] > bw) {
                best[w] = Some(bv + weight[w]);
                prev[w] = v;
            }
        }
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    (best[to].unwrap(), path)
}

pub fn audit_bisaturated_paths(tsl: &TsLattice) -> BisaturatedAudit {
    let (s, t) = (tsl.trivial_index(), tsl.complete_index());
    let weight: Vec<usize> = tsl.decorations().iter().map(|d| d.bisaturated() as usize).collect();
    let succ = adjacency(tsl, false);
    // covering steps strictly increase the edge count, so this is topological
    let mut order: Vec<usize> = (0..tsl.len()).collect();
    order.sort_by_key(|&v| tsl.system(v).edge_count());

    let dist = bfs(&succ, s);
    let stats = super::hasse_stats(tsl);
    let (all, witness_all) = best_path(&order, &succ, |_, _| true, &weight, s, t);
    let (shortest, witness_shortest) = best_path(
        &order,
        &succ,
        |v, w| dist[w] == dist[v].map(|d| d + 1),
        &weight,
        s,
        t,
    );
    BisaturatedAudit {
        shortest_path_length: stats.shortest_path_length,
        shortest_path_count: stats.shortest_path_count,
        max_over_all_paths: all,
        max_over_shortest_paths: shortest,
        agree: all == shortest,
        witness_all,
        witness_shortest,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LspCounterexample {
    pub system: usize,
    pub edges: Vec<(usize, usize)>,
    pub is_lsp: bool,
    pub compatible_with_connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LspAudit {
    pub checked: usize,
    /// Systems meeting the hypothesis: top has no incoming edge and every
    /// other non-isolated element shares bottom's component.
    pub hypothesis_matches: Vec<usize>,
    /// Stricter reading: every element except top is joined to bottom.
    pub literal_matches: Vec<usize>,
    pub counterexamples: Vec<LspCounterexample>,
}

/// Components of the undirected graph of non-reflexive edges.
fn components(ts: &TransferSystem) -> Vec<usize> {
    let n = ts.size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (k, h) in ts.edges() {
        let (a, b) = (find(&mut parent, k), find(&mut parent, h));
        parent[a] = b;
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

pub fn audit_lsp_two_component(tsl: &TsLattice, l: &Lattice, a: &LatticeAction) -> Result<LspAudit> {
    let (bottom, top) = (l.bottom(), l.top());
    let mut audit = LspAudit {
        checked: tsl.len(),
        hypothesis_matches: Vec::new(),
        literal_matches: Vec::new(),
        counterexamples: Vec::new(),
    };
    if bottom == top {
        return Ok(audit);
    }
    for (i, t) in tsl.systems().iter().enumerate() {
        let comp = components(t);
        let top_alone = (0..l.size()).all(|x| x == top || comp[x] != comp[top]);
        if !top_alone {
            continue;
        }
        let isolated = |x: usize| t.row(x).count() == 1 && (0..l.size()).all(|k| k == x || !t.contains(k, x));
        let grouped = (0..l.size()).all(|x| x == top || isolated(x) || comp[x] == comp[bottom]);
        if !grouped {
            continue;
        }
        audit.hypothesis_matches.push(i);
        if (0..l.size()).all(|x| x == top || comp[x] == comp[bottom]) {
            audit.literal_matches.push(i);
        }
        let is_lsp = tsl.decoration(i).lsp;
        let connected = extend(l, a, t, &[(bottom, top)]);
        let compatible_with_connected = compatible(l, t, &connected)?;
        if is_lsp || !compatible_with_connected {
            audit.counterexamples.push(LspCounterexample {
                system: i,
                edges: t.edges(),
                is_lsp,
                compatible_with_connected,
            });
        }
    }
    Ok(audit)
}

/// Systems containing `bottom → x` for every `x`, against all systems on the
/// lattice with its bottom removed.
pub fn restricted_count_bijection(l: &Lattice, a: &LatticeAction) -> Result<(usize, usize)> {
    let reduced = l.remove_bottom()?;
    let keep: Vec<usize> = (0..l.size()).filter(|&x| x != l.bottom()).collect();
    let reduced_action = a.restrict(&reduced, &keep)?;
    let all = enumerate_all(l, a)?;
    let restricted = all
        .systems()
        .iter()
        .filter(|t| (0..l.size()).all(|x| !l.leq(l.bottom(), x) || t.contains(l.bottom(), x)))
        .count();
    Ok((restricted, enumerate_all(&reduced, &reduced_action)?.len()))
}
