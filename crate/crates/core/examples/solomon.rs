//! Averages det(1-qw)/det(1-tw) over a Weyl group and compares with the
//! product over the degrees.

use weylnu::linalg::ratio;
use weylnu::weylgrp::{average_det_one_minus, enumerate_type, solomon_product, verify_solomon, DEFAULT_CAP};
use weylnu::invariants::degrees_of;

fn main() -> weylnu::Result<()> {
    for s in ["A3", "B3", "G2", "F4"] {
        let g = enumerate_type(s.parse()?, DEFAULT_CAP)?;
        let points = vec![(ratio(2, 3), ratio(1, 2)), (ratio(-1, 5), ratio(3, 4))];
        let report = verify_solomon(&g, &points)?;
        let d = degrees_of(&g.label().into());
        println!(
            "{s}: |W| = {}, product at (2/3, 1/2) = {}, <det(1-w), 1> = {}, {}",
            g.order(),
            solomon_product(&d, &points[0].0, &points[0].1),
            average_det_one_minus(&g),
            if report.pass { "PASS" } else { "FAIL" }
        );
    }
    Ok(())
}
