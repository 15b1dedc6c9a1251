//! Subgroup lattices, conjugacy classes and the quotient by conjugation, with
//! the losslessness and modularity checks.
//!
//!     cargo run --example subgroup_lattices -- D:9

use translat::group::{build_group, BuildOptions, GroupSpec};
use translat::lattice::{QuotientPoset, SubgroupLattice};

fn main() -> translat::Result<()> {
    let specs: Vec<String> = std::env::args().skip(1).collect();
    let specs = if specs.is_empty() { vec!["D:9".into(), "A:4".into(), "Q:8".into()] } else { specs };
    for s in specs {
        let spec: GroupSpec = s.parse()?;
        let sub = SubgroupLattice::new(build_group(&spec, &BuildOptions::default())?);
        let q = QuotientPoset::new(&sub.lattice, &sub.action);
        println!(
            "{}: order {}, {} subgroups in {} classes, lossless {}, modular {}",
            sub.group.label(),
            sub.group.order(),
            sub.lattice.size(),
            q.len(),
            sub.group.is_lossless(),
            sub.lattice.is_modular()
        );
        for (lo, hi) in q.covering_pairs() {
            println!("  {:>10} < {}", q.labels()[lo], q.labels()[hi]);
        }
        match q.to_lattice() {
            Ok(l) => println!("  quotient is a lattice, modular {}", l.is_modular()),
            Err(_) => println!("  quotient is not a lattice"),
        }
    }
    Ok(())
}
