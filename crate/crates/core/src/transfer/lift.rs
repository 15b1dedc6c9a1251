//! Lifting a relation on conjugacy classes of subgroups back to `Sub(G)`.

use crate::error::{Error, Result};
use crate::lattice::{QuotientPoset, SubgroupLattice};

/// For a lossless group: a class relation lifts to a transfer system iff for
/// every class edge `[K] → [H]` and all `K, K' ≤ H` in the class of `K`, the
/// class edge `[K ∧ K'] → [H]` is present.
pub fn lift_check(sub: &SubgroupLattice, quotient: &QuotientPoset, rel: &[Vec<bool>]) -> Result<bool> {
    if rel.len() != quotient.len() || rel.iter().any(|r| r.len() != quotient.len()) {
        return Err(Error::DimensionMismatch {
            expected: quotient.len(),
            got: rel.len(),
        });
    }
    if !sub.group.is_lossless() {
        return Err(Error::Lossy);
    }
    let l = &sub.lattice;
    for (c, row) in rel.iter().enumerate() {
        for (d, &edge) in row.iter().enumerate() {
            if !edge {
                continue;
            }
            let h = quotient.classes()[d][0];
            let below: Vec<usize> = l.down_set(h).iter().filter(|&k| quotient.class_of(k) == c).collect();
            for &k in &below {
                for &k2 in &below {
                    if !rel[quotient.class_of(l.meet(k, k2))][d] {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// The relation on `Sub(G)` with `K → H` iff `K ≤ H` and `[K] → [H]`.
pub fn lift_relation(sub: &SubgroupLattice, quotient: &QuotientPoset, rel: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let l = &sub.lattice;
    (0..l.size())
        .map(|k| {
            (0..l.size())
                .map(|h| l.leq(k, h) && rel[quotient.class_of(k)][quotient.class_of(h)])
                .collect()
        })
        .collect()
}
