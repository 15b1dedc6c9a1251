//! Widths against the closed forms for dihedral, quaternion and dicyclic
//! groups, and the generating set of the complete D_36-transfer system.
//!
//!     cargo run --release --example widths

use translat::enumeration::width_of_spec;
use translat::group::BuildOptions;

fn main() -> translat::Result<()> {
    let opts = BuildOptions::default();
    let d36 = width_of_spec(&"D:36".parse()?, &opts)?;
    println!("w(D_36) = {}:", d36.width);
    for label in &d36.class_labels {
        println!("  {label} -> D_36");
    }
    let families = (2..=24).map(|n| format!("D:{n}")).chain((2..=12).map(|n| format!("Dic:{n}")));
    let families = families.chain(["Q:8", "Q:16", "Q:32", "A:4", "F:5"].map(String::from));
    for spec in families {
        let r = width_of_spec(&spec.parse()?, &opts)?;
        let formula = r.formula_value.map_or("-".to_string(), |f| f.to_string());
        let flag = if r.formula_value.is_some_and(|f| f != r.width) { "  MISMATCH" } else { "" };
        println!("{:<8} {:>3} {:>3}{flag}", r.group, r.width, formula);
    }
    Ok(())
}
