#![allow(dead_code)]

pub mod dot;

use translat::group::{build_group, BuildOptions};
use translat::lattice::SubgroupLattice;

pub fn sub(spec: &str) -> SubgroupLattice {
    SubgroupLattice::new(build_group(&spec.parse().unwrap(), &BuildOptions::default()).unwrap())
}
