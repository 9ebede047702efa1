//! Smoothability verdicts with their witnesses: rational surgery data in
//! formal dimension 4 and 8, undecided beyond.
//!
//! cargo run --example smoothing

use waci::arith::int;
use waci::families::family_a;
use waci::poly::VarSpec;
use waci::qform::WitnessSearch;
use waci::quotient::QuotientRing;
use waci::smooth::{smoothable, solve_sq_system, Witness};

fn main() -> waci::Result<()> {
    let two = |a: &str, b: &str| vec![VarSpec::new(a, 2), VarSpec::new(b, 2)];
    let cases = vec![
        ("CP2 # CP2", QuotientRing::build_waci(two("x1", "x2"), &["x1^2 - x2^2", "x1*x2"])?),
        ("A(2)", family_a(&int(2))?.build()?),
        ("A(4)", family_a(&int(4))?.build()?),
        ("x^3, |x| = 6", QuotientRing::build_waci(vec![VarSpec::new("x", 6)], &["x^3"])?),
    ];
    for (name, ring) in cases {
        let v = smoothable(&ring, WitnessSearch::default())?;
        println!("{name}: {:?} (m = {}) {}", v.decision, v.formal_dimension, v.reason);
        match &v.witness {
            Some(Witness::Dim4(w)) => println!("  model {}", w.model),
            Some(Witness::Dim8(w)) => {
                println!("  a·CP4 + b·CP2×CP2 with a = {}, b = {}, α = {:?}", w.a, w.b, w.alphas)
            }
            Some(Witness::ProductModel { model }) => println!("  model {model}"),
            None => {}
        }
        if let Some(p) = v.obstruction.as_ref().and_then(|o| o.failing_prime.as_ref()) {
            println!("  fails at p = {p}");
        }
    }
    println!("solutions of 25a + 18b = Σα², a + b = σ:");
    for sigma in 0..=6 {
        let (a, b, alphas) = solve_sq_system(sigma, sigma.max(1) as usize)?;
        println!("  σ = {sigma}: a = {a}, b = {b}, α = {alphas:?}");
    }
    Ok(())
}
