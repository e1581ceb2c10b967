//! Rewrites random directions in the extended basis to find which of the
//! l+1 cones holds them, and compares cone frequencies with the node terms.

use weylnu::geometry::partition_check;

fn main() -> weylnu::Result<()> {
    for s in ["A2", "B3", "F4"] {
        let r = partition_check(s.parse()?, 20_000, 7)?;
        println!(
            "{s}: {} on walls, {} disagreeing with the brute-force scan",
            r.boundary, r.disagreements
        );
        for c in &r.cones {
            println!(
                "  cone {} ({:<9}) {:.4} vs {} z = {:+.2}",
                c.node,
                c.decomposition.to_string(),
                c.estimate.estimate,
                c.estimate.exact,
                c.estimate.z_score
            );
        }
    }
    Ok(())
}
