//! Local invariants of rational forms and the search for an orientation
//! making a form a sum of signed squares.
//!
//! cargo run --example integrality

use waci::arith::{format_rational, int};
use waci::matrix::QMatrix;
use waci::qform::{integrality_of_gram, invariants, sign_diagonal_witness, WitnessSearch};

fn main() -> waci::Result<()> {
    let forms: [&[i64]; 5] = [&[5, 5], &[15, 15], &[1, 1, 1, 2, 5, 10], &[3, 3, 1], &[1, -7]];
    for entries in forms {
        let g = QMatrix::diagonal(&entries.iter().map(|&a| int(a)).collect::<Vec<_>>());
        let inv = invariants(&g)?;
        let locals: Vec<String> = inv.local.iter().map(|l| format!("ε_{}={}", l.place, l.value)).collect();
        let verdict = integrality_of_gram(&g)?;
        println!("diag{entries:?}: σ = {}, disc = {}, {}", inv.signature, inv.discriminant, locals.join(" "));
        match (&verdict.witness_lambda, &verdict.failing_prime) {
            (Some(lambda), _) => {
                let scaled = g.scale(&lambda.recip());
                let t = sign_diagonal_witness(&scaled, WitnessSearch::default())?;
                println!("  integral after λ = {}; basis found: {}", format_rational(lambda), t.is_some());
            }
            (None, Some(p)) => println!("  no orientation works; obstruction at p = {p}"),
            (None, None) => println!("  no orientation works; discriminant obstruction"),
        }
    }
    Ok(())
}
