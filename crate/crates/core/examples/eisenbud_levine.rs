//! The Eisenbud-Levine orientation: the middle-form signature under it is the
//! topological degree of the map given by the relations.
//!
//! cargo run --example eisenbud_levine

use waci::arith::{format_rational, int};
use waci::families::family_a;
use waci::poly::VarSpec;
use waci::quotient::QuotientRing;

fn show(name: &str, ring: &QuotientRing) -> waci::Result<()> {
    let omega = ring.el_orientation()?;
    println!(
        "{name:<10} Jacobian class = {} · {}   degree = {}",
        format_rational(omega.scalar()),
        ring.top_monomial().format(ring.ring()),
        ring.el_degree()?
    );
    Ok(())
}

fn main() -> waci::Result<()> {
    show("x^3", &QuotientRing::build_waci(vec![VarSpec::new("x", 2)], &["x^3"])?)?;
    show("x^4", &QuotientRing::build_waci(vec![VarSpec::new("x", 2)], &["x^4"])?)?;
    for c in [-2, 0, 2, 3] {
        show(&format!("A({c})"), &family_a(&int(c))?.build()?)?;
    }
    Ok(())
}
