//! Building transfer systems from generating edges, axiom witnesses, minimal
//! generating sets, saturated hulls and compatibility, on Sub(D_5).
//!
//!     cargo run --example transfer_systems

use translat::group::{build_group, BuildOptions};
use translat::lattice::SubgroupLattice;
use translat::transfer::{
    compatible, extend, generate, is_cosaturated, is_saturated, minimal_generating_set, saturated_hull, validate,
    EdgeSet, TransferSystem,
};

fn main() -> translat::Result<()> {
    let sub = SubgroupLattice::new(build_group(&"D:5".parse()?, &BuildOptions::default())?);
    let (l, a) = (&sub.lattice, &sub.action);
    let name = |edges: &[(usize, usize)]| -> String {
        edges.iter().map(|&(k, h)| format!("{}->{}", l.label(k), l.label(h))).collect::<Vec<_>>().join(" ")
    };
    let reflection = (0..l.size()).find(|&x| sub.subgroups[x].order() == 2).unwrap();

    // a lone reflection edge is not closed
    let mut rel = TransferSystem::trivial(l, a).relation();
    rel[reflection][l.top()] = true;
    for v in validate(l, a, &rel)?.iter().take(4) {
        println!("{v}");
    }

    let t = generate(l, a, &EdgeSet::new([(reflection, l.top())]))?;
    println!("closure: {} edges, generated by {}", t.edge_count(), name(minimal_generating_set(l, a, &t).edges()));
    println!("saturated {}, cosaturated {}", is_saturated(l, &t), is_cosaturated(l, a, &t));
    let hull = saturated_hull(l, a, &t);
    println!("hull: {}", name(minimal_generating_set(l, a, &hull).edges()));
    println!("compatible with its hull: {}", compatible(l, &t, &hull)?);

    let connected = extend(l, a, &t, &[(l.bottom(), l.top())]);
    println!("adding e->D_5 gives {} edges; compatible: {}", connected.edge_count(), compatible(l, &t, &connected)?);
    Ok(())
}
