//! Exhaustive enumeration against the subset-filtering oracle, and the
//! Catalan counts on chains.
//!
//!     cargo run --release --example enumeration_oracle

use translat::enumeration::{brute_force_oracle, enumerate_all};
use translat::group::{build_group, BuildOptions};
use translat::lattice::{Lattice, LatticeAction, SubgroupLattice};

fn main() -> translat::Result<()> {
    for n in 1..=7 {
        let chain = Lattice::chain(n + 1);
        let count = enumerate_all(&chain, &LatticeAction::trivial(&chain))?.len();
        println!("chain of length {n}: {count} transfer systems");
    }
    for spec in ["C:8", "C:12", "Q:8", "D:3", "C:30"] {
        let sub = SubgroupLattice::new(build_group(&spec.parse()?, &BuildOptions::default())?);
        let fast = enumerate_all(&sub.lattice, &sub.action)?;
        let agree = match brute_force_oracle(&sub.lattice, &sub.action) {
            Ok(slow) => if slow.systems() == fast.systems() { "agrees" } else { "DISAGREES" },
            Err(_) => "out of range",
        };
        println!("{spec}: {} systems, {} covers, oracle: {agree}", fast.len(), fast.hasse_edges().len());
    }
    Ok(())
}
