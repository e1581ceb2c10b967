//! Degrees, |W| and nu for the exceptional types and a few classical ones.

use weylnu::invariants::{degrees_of, nu, weyl_order};
use weylnu::DecompositionLabel;

fn main() -> weylnu::Result<()> {
    println!("{:<8} {:<28} {:>14} {:>22}", "type", "degrees", "|W|", "nu");
    for s in ["G2", "F4", "E6", "E7", "E8", "A4", "B5", "C5", "D6", "A1xC3"] {
        let label: DecompositionLabel = s.parse()?;
        let d = degrees_of(&label);
        println!(
            "{:<8} {:<28} {:>14} {:>22}",
            label.to_string(),
            format!("{:?}", d.as_slice()),
            weyl_order(&d).to_string(),
            nu(&d).to_string()
        );
    }
    Ok(())
}
