//! Writes decorated Hasse diagrams and lattices as DOT and TikZ.
//!
//!     cargo run --example render_diagrams -- /tmp/diagrams
//!     dot -Tsvg /tmp/diagrams/D_5-hasse.dot > d5.svg

use std::fs;
use std::path::PathBuf;

use translat::enumeration::enumerate_all;
use translat::group::{build_group, BuildOptions};
use translat::lattice::{QuotientPoset, SubgroupLattice};
use translat::render::{render, Format, Item, RenderSpec, Target};

fn main() -> translat::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "diagrams".into()));
    fs::create_dir_all(&dir)?;
    for spec in ["C:9", "C:15", "D:5", "A:4"] {
        let sub = SubgroupLattice::new(build_group(&spec.parse()?, &BuildOptions::default())?);
        let (l, a) = (&sub.lattice, &sub.action);
        let tsl = enumerate_all(l, a)?;
        let q = QuotientPoset::new(l, a);
        let name = sub.group.label().to_string();
        let outputs = [
            ("hasse.dot", render(Item::Hasse(l, a, &tsl), &RenderSpec::new(Format::Dot, Target::TsHasse))?),
            ("hasse.tex", render(Item::Hasse(l, a, &tsl), &RenderSpec::new(Format::Tikz, Target::TsHasse))?),
            ("lattice.dot", render(Item::Lattice(l), &RenderSpec::new(Format::Dot, Target::SubgroupLattice))?),
            ("quotient.tex", render(Item::Quotient(&q), &RenderSpec::new(Format::Tikz, Target::QuotientPoset))?),
        ];
        for (suffix, text) in outputs {
            let path = dir.join(format!("{name}-{suffix}"));
            fs::write(&path, text)?;
            println!("{}", path.display());
        }
    }
    Ok(())
}
