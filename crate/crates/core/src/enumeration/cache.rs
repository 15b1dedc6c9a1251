//! On-disk enumeration cache: one JSON document per group spec and crate
//! version, holding the lattice hash, every system's edges, the Hasse edges
//! and the decorations.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{enumerate_all, Decorations, TsLattice};
use crate::error::{Error, Result};
use crate::lattice::{lattice_hash, Lattice, LatticeAction};
use crate::transfer::{generate, validate, EdgeSet, LatticeId, TransferSystem};

pub const CACHE_ENV: &str = "TRANSLAT_CACHE";
const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: String,
    pub spec: String,
    pub lattice_hash: String,
    pub systems: Vec<Vec<(usize, usize)>>,
    pub hasse_edges: Vec<(usize, usize)>,
    pub decorations: Vec<Decorations>,
}

pub fn path_for(dir: &Path, spec: &str) -> PathBuf {
    let stem: String = spec
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    dir.join(format!("{stem}-v{VERSION}.json"))
}

pub fn store(dir: &Path, spec: &str, l: &Lattice, a: &LatticeAction, tsl: &TsLattice) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let file = CacheFile {
        version: VERSION.to_string(),
        spec: spec.to_string(),
        lattice_hash: lattice_hash(l, a),
        systems: tsl.systems().iter().map(TransferSystem::edges).collect(),
        hasse_edges: tsl.hasse_edges().to_vec(),
        decorations: tsl.decorations().to_vec(),
    };
    let path = path_for(dir, spec);
    fs::write(&path, serde_json::to_string(&file)?)?;
    Ok(path)
}

/// `Ok(None)` when nothing is cached; an error when the file is stale or
/// fails the spot check (one stored system re-closed and re-validated).
pub fn load(dir: &Path, spec: &str, l: &Lattice, a: &LatticeAction) -> Result<Option<TsLattice>> {
    let path = path_for(dir, spec);
    if !path.exists() {
        return Ok(None);
    }
    let file: CacheFile = serde_json::from_str(&fs::read_to_string(&path)?)?;
    let hash = lattice_hash(l, a);
    if file.lattice_hash != hash || file.version != VERSION {
        return Err(Error::Cache(format!("{} was written for a different lattice or version", path.display())));
    }
    let m = file.systems.len();
    if m == 0 || file.decorations.len() != m || file.hasse_edges.iter().any(|&(i, j)| i >= m || j >= m) {
        return Err(Error::Cache(format!("{} is truncated", path.display())));
    }
    let systems = file
        .systems
        .iter()
        .map(|edges| generate(l, a, &EdgeSet::new(edges.iter().copied())))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::Cache(e.to_string()))?;

    let pick = usize::from_str_radix(&hash[..8], 16).expect("hex digest") % m;
    let stored = &file.systems[pick];
    if systems[pick].edges() != *stored || !validate(l, a, &systems[pick].relation())?.is_empty() {
        return Err(Error::Cache(format!("system {pick} in {} is not closed", path.display())));
    }
    Ok(Some(TsLattice::from_parts(
        LatticeId::of(l, a),
        systems,
        file.hasse_edges,
        file.decorations,
    )))
}

/// Reads the cache when present and valid, otherwise enumerates and writes it.
pub fn load_or_enumerate(dir: Option<&Path>, spec: &str, l: &Lattice, a: &LatticeAction) -> Result<TsLattice> {
    let Some(dir) = dir else {
        return enumerate_all(l, a);
    };
    match load(dir, spec, l, a) {
        Ok(Some(tsl)) => return Ok(tsl),
        Ok(None) | Err(Error::Cache(_)) | Err(Error::Json(_)) => {}
        Err(e) => return Err(e),
    }
    let tsl = enumerate_all(l, a)?;
    store(dir, spec, l, a, &tsl)?;
    Ok(tsl)
}
