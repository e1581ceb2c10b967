//! Estimates the share of the unit sphere inside the cone of nonnegative
//! combinations of simple roots and compares with nu.
//!
//! `cargo run --release --example sphere_volume -- B3 1000000 42`

use weylnu::geometry::{montecarlo_nu, planar_cone_fraction};
use weylnu::DecompositionLabel;

fn main() -> weylnu::Result<()> {
    let mut args = std::env::args().skip(1);
    let label: DecompositionLabel = args.next().unwrap_or_else(|| "B3".into()).parse()?;
    let samples = args.next().and_then(|s| s.parse().ok()).unwrap_or(200_000);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);

    let r = montecarlo_nu(&label, samples, seed, 4)?;
    println!(
        "{label}: {:.5} +- {:.5} against {} (z = {:.2})",
        r.estimate, r.stderr, r.exact, r.z_score
    );
    if let Some(angle) = planar_cone_fraction(&label.cartan()) {
        println!("planar angle fraction {angle}");
    }
    Ok(())
}
