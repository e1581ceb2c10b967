//! The node terms of the identity for E8, followed by a sweep over every
//! standard type up to rank 12.

use weylnu::identity::{verify_identity, verify_many};
use weylnu::standard_types;

fn main() -> weylnu::Result<()> {
    let e8 = verify_identity("E8".parse()?)?;
    print!("{}", e8.to_text());

    let types = standard_types(12);
    let mut passed = 0;
    for r in verify_many(&types) {
        let r = r?;
        if r.pass {
            passed += 1;
        } else {
            println!("{}: total {}", r.label, r.total);
        }
    }
    println!("\n{passed}/{} types sum to exactly 1", types.len());
    Ok(())
}
