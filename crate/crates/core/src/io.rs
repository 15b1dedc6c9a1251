//! Transfer-system files: `{ "lattice": "<hash or spec>", "edges": [[k, h], ...] }`
//! with non-reflexive edges only.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{lattice_hash, Lattice, LatticeAction};
use crate::transfer::{generate, EdgeSet, TransferSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferSystemJson {
    pub lattice: String,
    pub edges: Vec<(usize, usize)>,
}

impl TransferSystemJson {
    pub fn new(l: &Lattice, a: &LatticeAction, ts: &TransferSystem) -> Self {
        TransferSystemJson {
            lattice: lattice_hash(l, a),
            edges: ts.edges(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// The `lattice` field must name the lattice's hash or, when given, the
    /// spec it was built from.
    fn check_lattice(&self, l: &Lattice, a: &LatticeAction, spec: Option<&str>) -> Result<()> {
        if self.lattice == lattice_hash(l, a) || spec.is_some_and(|s| s == self.lattice) {
            Ok(())
        } else {
            Err(Error::LatticeMismatch)
        }
    }

    /// The file's relation, reflexive edges added, without any validation
    /// beyond index bounds.
    pub fn relation(&self, l: &Lattice, a: &LatticeAction, spec: Option<&str>) -> Result<Vec<Vec<bool>>> {
        self.check_lattice(l, a, spec)?;
        let n = l.size();
        let mut rel = vec![vec![false; n]; n];
        for (x, row) in rel.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(k, h) in &self.edges {
            if k >= n || h >= n {
                return Err(Error::MalformedEdge { lower: k, upper: h });
            }
            rel[k][h] = true;
        }
        Ok(rel)
    }

    /// Loads as a transfer system: the edges must already be closed unless
    /// `close` is set, in which case they are treated as generators.
    pub fn load(&self, l: &Lattice, a: &LatticeAction, spec: Option<&str>, close: bool) -> Result<TransferSystem> {
        let rel = self.relation(l, a, spec)?;
        if close {
            generate(l, a, &EdgeSet::new(self.edges.iter().copied()))
        } else {
            TransferSystem::from_relation(l, a, &rel)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, BuildOptions};
    use crate::lattice::SubgroupLattice;

    fn d5() -> SubgroupLattice {
        SubgroupLattice::new(build_group(&"D:5".parse().unwrap(), &BuildOptions::default()).unwrap())
    }

    fn reflection(s: &SubgroupLattice) -> usize {
        (0..s.lattice.size()).find(|&x| s.subgroups[x].order() == 2).unwrap()
    }

    #[test]
    fn round_trip() {
        let s = d5();
        let (l, a) = (&s.lattice, &s.action);
        let ts = generate(l, a, &EdgeSet::new([(reflection(&s), l.top())])).unwrap();
        let text = TransferSystemJson::new(l, a, &ts).to_pretty();
        assert_eq!(TransferSystemJson::parse(&text).unwrap().load(l, a, None, false).unwrap(), ts);
    }

    #[test]
    fn unclosed_files_need_the_flag() {
        let s = d5();
        let (l, a) = (&s.lattice, &s.action);
        let file = TransferSystemJson {
            lattice: "D:5".into(),
            edges: vec![(reflection(&s), l.top())],
        };
        assert!(matches!(file.load(l, a, Some("D:5"), false), Err(Error::Invalid(_))));
        assert_eq!(file.load(l, a, Some("D:5"), true).unwrap().edge_count(), 12);
        assert!(matches!(file.load(l, a, Some("D:3"), true), Err(Error::LatticeMismatch)));
    }

    #[test]
    fn out_of_range_edge() {
        let s = d5();
        let file = TransferSystemJson {
            lattice: lattice_hash(&s.lattice, &s.action),
            edges: vec![(0, 99)],
        };
        assert!(matches!(file.load(&s.lattice, &s.action, None, true), Err(Error::MalformedEdge { .. })));
    }
}
