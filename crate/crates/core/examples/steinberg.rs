//! det(1-w) and det(w) as alternating sums of permutation characters of
//! parabolic subgroups, checked at every group element.

use weylnu::weylgrp::{enumerate_type, verify_companion, verify_steinberg, DEFAULT_CAP};

fn main() -> weylnu::Result<()> {
    for s in ["A2", "B2", "G2", "A3", "B3", "D4"] {
        let g = enumerate_type(s.parse()?, DEFAULT_CAP)?;
        let st = verify_steinberg(&g);
        let co = verify_companion(&g);
        println!(
            "{s:<3} |W| = {:>4}  extended subsets: {}  simple subsets: {}",
            g.order(),
            if st.pass { "PASS" } else { "FAIL" },
            if co.pass { "PASS" } else { "FAIL" }
        );
    }
    Ok(())
}
