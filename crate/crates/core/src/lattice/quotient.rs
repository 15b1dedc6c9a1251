use super::{Lattice, LatticeAction};
use crate::error::Result;

/// Orbits of a lattice under an action, ordered by `[a] ≤ [b]` iff some
/// member of `[a]` lies below the representative of `[b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPoset {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    leq: Vec<Vec<bool>>,
    labels: Vec<String>,
}

impl QuotientPoset {
    pub fn new(lattice: &Lattice, action: &LatticeAction) -> Self {
        let classes: Vec<Vec<usize>> = action.orbits().to_vec();
        let mut class_of = vec![0; lattice.size()];
        for (c, members) in classes.iter().enumerate() {
            for &a in members {
                class_of[a] = c;
            }
        }
        let leq = classes
            .iter()
            .map(|ca| {
                classes
                    .iter()
                    .map(|cb| ca.iter().any(|&a| lattice.leq(a, cb[0])))
                    .collect()
            })
            .collect();
        let labels = classes
            .iter()
            .map(|c| {
                let base = lattice.label(c[0]);
                if c.len() > 1 {
                    format!("{{}}_{}{}", c.len(), base)
                } else {
                    base.to_string()
                }
            })
            .collect();
        QuotientPoset {
            classes,
            class_of,
            leq,
            labels,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn multiplicity(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn leq_table(&self) -> &[Vec<bool>] {
        &self.leq
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Covering pairs of the class order.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.leq[a][b] && !(0..n).any(|c| c != a && c != b && self.leq[a][c] && self.leq[c][b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The class order as a lattice, when it is one.
    pub fn to_lattice(&self) -> Result<Lattice> {
        Lattice::from_leq(self.labels.clone(), &self.leq)
    }
}
