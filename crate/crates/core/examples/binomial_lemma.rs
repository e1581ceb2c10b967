//! Central-binomial convolutions, both by direct summation and as
//! coefficients of products of 1/sqrt(1-4t).

use weylnu::series::{check_lemma, inv_sqrt_one_minus_4t};

fn main() -> weylnu::Result<()> {
    let f = inv_sqrt_one_minus_4t(8);
    let head: Vec<String> = f.coeffs().iter().map(ToString::to_string).collect();
    println!("1/sqrt(1-4t) = {} + ...", head.join(", "));

    for part in 1..=3u8 {
        let lo = if part == 1 { 0 } else { 2 };
        for n in lo..=8 {
            let c = check_lemma(part, n)?;
            println!("part {part}, n = {n}: {} {}", c.lhs, if c.pass { "ok" } else { "FAIL" });
        }
    }
    Ok(())
}
