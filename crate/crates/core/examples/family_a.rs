//! The one-parameter family x³ − xy², y³ − c·x²y: middle form, signature and
//! smoothability across rational c.
//!
//! cargo run --example family_a [-- c ...]

use waci::arith::{format_rational, parse_rational};
use waci::families::{family_a, verify_family};

fn main() -> waci::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cs: Vec<String> = if args.is_empty() {
        ["-3", "-1/2", "0", "3/2", "2", "3", "4", "5"].map(String::from).to_vec()
    } else {
        args
    };
    for text in cs {
        let c = parse_rational(&text)?;
        let spec = match family_a(&c) {
            Ok(spec) => spec,
            Err(e) => {
                println!("A({text}): {e}");
                continue;
            }
        };
        let report = verify_family(&spec)?;
        let diag: Vec<String> = spec.oracle.reference_diagonal.iter().flatten().map(format_rational).collect();
        println!(
            "A({}): diag({})  σ = {:>2}  smoothable = {:<5}  checks {}",
            format_rational(&c),
            diag.join(", "),
            report.signature,
            report.smoothable,
            if report.all_passed() { "ok" } else { "FAILED" }
        );
    }
    Ok(())
}
