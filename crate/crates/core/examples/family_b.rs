//! The four-variable family with a Gram matrix that diagonalizes in closed
//! form: sweep a grid of c in parallel and tabulate the signatures.
//!
//! cargo run --release --example family_b

use std::collections::BTreeMap;

use waci::arith::format_rational;
use waci::families::{c_grid, sweep, Family};

fn main() {
    let grid = c_grid(Family::B);
    let mut by_signature: BTreeMap<(i64, bool), Vec<String>> = BTreeMap::new();
    let mut failures = 0;
    for (c, report) in sweep(Family::B, &grid) {
        match report {
            Ok(r) => {
                failures += usize::from(!r.all_passed());
                by_signature.entry((r.signature, r.smoothable)).or_default().push(format_rational(&c));
            }
            Err(e) => println!("B({}): {e}", format_rational(&c)),
        }
    }
    println!("{} values of c, {failures} with failed checks", grid.len());
    for ((sigma, smooth), cs) in by_signature {
        let sample: Vec<&str> = cs.iter().take(6).map(String::as_str).collect();
        println!("σ = {sigma}, smoothable = {smooth}: {} values, e.g. {}", cs.len(), sample.join(" "));
    }
}
