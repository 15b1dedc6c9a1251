//! Saturation, cosaturation, connectivity, compatible pairs and LSP.

use super::{close, generate, EdgeSet, LatticeId, TransferSystem};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::lattice::{Lattice, LatticeAction};

/// `sources[h] = { k : k → h }`
fn columns(ts: &TransferSystem) -> Vec<BitSet> {
    let n = ts.size();
    let mut cols = vec![BitSet::new(n); n];
    for k in 0..n {
        for h in ts.row(k).iter() {
            cols[h].insert(k);
        }
    }
    cols
}

/// `l ≤ k ≤ h` and `l → h` imply `k → h`.
pub fn is_saturated(lattice: &Lattice, ts: &TransferSystem) -> bool {
    columns(ts).iter().enumerate().all(|(h, sources)| {
        sources
            .iter()
            .all(|l| lattice.up_set(l).intersection(lattice.down_set(h)).is_subset(sources))
    })
}

/// Least saturated transfer system containing `ts`.
pub fn saturated_hull(lattice: &Lattice, action: &LatticeAction, ts: &TransferSystem) -> TransferSystem {
    let mut rows: Vec<BitSet> = (0..ts.size()).map(|k| ts.row(k).clone()).collect();
    loop {
        let mut changed = false;
        let current = TransferSystem::from_closed_rows(ts.lattice_id(), rows.clone());
        for (h, sources) in columns(&current).iter().enumerate() {
            for l in sources.iter() {
                for k in lattice.up_set(l).intersection(lattice.down_set(h)).iter() {
                    changed |= rows[k].insert(h);
                }
            }
        }
        if !changed {
            break;
        }
        close(lattice, action, &mut rows);
    }
    TransferSystem::from_closed_rows(ts.lattice_id(), rows)
}

/// Generated by its edges into the top element.
pub fn is_cosaturated(lattice: &Lattice, action: &LatticeAction, ts: &TransferSystem) -> bool {
    let top = lattice.top();
    let into_top = EdgeSet::new((0..ts.size()).filter(|&h| ts.contains(h, top)).map(|h| (h, top)));
    generate(lattice, action, &into_top).expect("edges of a transfer system are well formed") == *ts
}

/// Contains `bottom → top`.
pub fn is_connected(lattice: &Lattice, ts: &TransferSystem) -> bool {
    ts.contains(lattice.bottom(), lattice.top())
}

/// `t1 ⊆ t2`, and whenever `B → A` in `t1`, `C ≤ A` and `B ∧ C → B` in `t2`,
/// also `C → A` in `t2`.
pub fn compatible(lattice: &Lattice, t1: &TransferSystem, t2: &TransferSystem) -> Result<bool> {
    if t1.lattice_id() != t2.lattice_id() || t1.size() != lattice.size() {
        return Err(Error::LatticeMismatch);
    }
    if !t1.is_subset(t2) {
        return Ok(false);
    }
    for b in 0..lattice.size() {
        for a in t1.row(b).iter() {
            for c in lattice.down_set(a).iter() {
                if t2.contains(lattice.meet(b, c), b) && !t2.contains(c, a) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Every system compatible with `ts` is its saturated hull or the complete
/// system. `all` must be the full enumeration for the lattice.
pub fn is_lsp(lattice: &Lattice, action: &LatticeAction, ts: &TransferSystem, all: &[TransferSystem]) -> Result<bool> {
    let hull = saturated_hull(lattice, action, ts);
    let complete = TransferSystem::complete(lattice, action);
    lsp_with(lattice, ts, &hull, &complete, all)
}

pub(crate) fn lsp_with(
    lattice: &Lattice,
    ts: &TransferSystem,
    hull: &TransferSystem,
    complete: &TransferSystem,
    all: &[TransferSystem],
) -> Result<bool> {
    let id: LatticeId = ts.lattice_id();
    if all.iter().any(|t| t.lattice_id() != id) {
        return Err(Error::LatticeMismatch);
    }
    for required in [ts, hull, complete] {
        if !all.contains(required) {
            return Err(Error::Invalid(format!(
                "enumeration of {} systems is missing {:?}",
                all.len(),
                required.edges()
            )));
        }
    }
    for other in all {
        if other != hull && other != complete && compatible(lattice, ts, other)? {
            return Ok(false);
        }
    }
    Ok(true)
}
