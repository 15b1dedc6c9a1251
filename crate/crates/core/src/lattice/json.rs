use serde::{Deserialize, Serialize};

use super::{Lattice, LatticeAction};
use crate::error::Result;

/// On-disk form of an abstract lattice with an optional action:
/// `{ "labels": [...], "leq": [[bool]], "action_generators": [[perm]] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub labels: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    #[serde(default)]
    pub action_generators: Vec<Vec<usize>>,
}

impl LatticeJson {
    pub fn from_parts(lattice: &Lattice, action: &LatticeAction) -> Self {
        LatticeJson {
            labels: lattice.labels().to_vec(),
            leq: lattice.leq_table(),
            action_generators: action.generators().to_vec(),
        }
    }

    /// Derives meet and join, then validates the lattice laws and the action.
    pub fn into_parts(self) -> Result<(Lattice, LatticeAction)> {
        let lattice = Lattice::from_leq(self.labels, &self.leq)?;
        lattice.verify()?;
        let action = LatticeAction::new(&lattice, self.action_generators)?;
        Ok((lattice, action))
    }
}
