use std::collections::VecDeque;

use serde::Serialize;

use super::TsLattice;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DecorationCounts {
    pub saturated: usize,
    pub cosaturated: usize,
    pub lsp: usize,
    pub connected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseStats {
    pub count: usize,
    pub hasse_edge_count: usize,
    /// Fewest covering steps upward from trivial to complete.
    pub shortest_path_length: usize,
    /// Number of upward paths of that length.
    pub shortest_path_count: u64,
    /// Same distance with covering edges read in both directions.
    pub undirected_shortest_path_length: usize,
    pub decoration_counts: DecorationCounts,
    pub bisaturated_count: usize,
}

pub(crate) fn adjacency(tsl: &TsLattice, undirected: bool) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); tsl.len()];
    for &(i, j) in tsl.hasse_edges() {
        adj[i].push(j);
        if undirected {
            adj[j].push(i);
        }
    }
    adj
}

pub(crate) fn bfs(adj: &[Vec<usize>], from: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[from] = Some(0);
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for &w in &adj[v] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn hasse_stats(tsl: &TsLattice) -> HasseStats {
    let (s, t) = (tsl.trivial_index(), tsl.complete_index());
    let up = adjacency(tsl, false);
    let dist = bfs(&up, s);
    let shortest = dist[t].expect("complete system is above trivial");

    let mut order: Vec<usize> = (0..tsl.len()).filter(|&v| dist[v].is_some()).collect();
    order.sort_by_key(|&v| dist[v]);
    let mut paths = vec![0u64; tsl.len()];
    paths[s] = 1;
    for &v in &order {
        for &w in &up[v] {
            if dist[w] == dist[v].map(|d| d + 1) {
                paths[w] += paths[v];
            }
        }
    }

    let undirected = bfs(&adjacency(tsl, true), s)[t].expect("connected diagram");
    let mut counts = DecorationCounts::default();
    for d in tsl.decorations() {
        counts.saturated += d.saturated as usize;
        counts.cosaturated += d.cosaturated as usize;
        counts.lsp += d.lsp as usize;
        counts.connected += d.connected as usize;
    }
    HasseStats {
        count: tsl.len(),
        hasse_edge_count: tsl.hasse_edges().len(),
        shortest_path_length: shortest,
        shortest_path_count: paths[t],
        undirected_shortest_path_length: undirected,
        decoration_counts: counts,
        bisaturated_count: tsl.decorations().iter().filter(|d| d.bisaturated()).count(),
    }
}
