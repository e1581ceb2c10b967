//! Pairs det(1-w) with det(1-w)/det(1-tw) and watches each node term tend to
//! nu of its subsystem as t approaches 1.

use weylnu::linalg::ratio;
use weylnu::weylgrp::{enumerate_type, verify_restricted_expansion, DEFAULT_CAP};

fn main() -> weylnu::Result<()> {
    for s in ["B3", "D4"] {
        let g = enumerate_type(s.parse()?, DEFAULT_CAP)?;
        let ts = [ratio(1, 2), ratio(9, 10), ratio(99, 100)];
        let report = verify_restricted_expansion(&g, &ts)?;
        println!("{s}: {}", if report.pass { "PASS" } else { "FAIL" });
        for p in &report.points {
            println!("  {:<24} {} = {}", p.at, p.lhs, p.rhs);
        }
    }
    Ok(())
}
