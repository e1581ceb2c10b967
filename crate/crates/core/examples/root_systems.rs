//! Builds F4 from its Cartan matrix, then walks the extended diagram:
//! highest root, marks, and the subsystem left by deleting each node.

use weylnu::diagram::extend;
use weylnu::rootsys::subsystem;
use weylnu::{cartan_of_type, classify, RootSystem, TypeLabel};

fn main() -> weylnu::Result<()> {
    let label: TypeLabel = "F4".parse()?;
    let cartan = cartan_of_type(label);
    println!("Cartan matrix of {label}:\n{cartan}");

    let rs = RootSystem::generate(&cartan)?;
    println!("{} roots, {} positive", rs.len(), rs.positive().len());
    let theta = rs.highest_root()?;
    println!("highest root {:?} (height {})", theta.coords(), theta.height());

    let ext = extend(&rs)?;
    println!("marks {:?}", ext.marks());
    for i in 0..=ext.rank() {
        let sub = subsystem(&rs, &ext, i)?;
        let kind = classify(&ext.delete_node(i)?)?;
        println!("delete node {i}: {kind:<8} {} roots", sub.len());
    }
    Ok(())
}
