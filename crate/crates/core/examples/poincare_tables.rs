//! Betti numbers of all homogeneous complete intersections with formal
//! dimension 4 or 8, from the product formula and from the algebra itself.
//!
//! cargo run --example poincare_tables

use waci::poly::VarSpec;
use waci::quotient::QuotientRing;
use waci::smooth::{homogeneous_case_table, product_model_signature};

fn main() -> waci::Result<()> {
    println!("{:<6} {:>3} {:<14} {:>3} {:>9}", "case", "m", "degrees", "r", "product σ");
    for case in homogeneous_case_table() {
        let vars: Vec<VarSpec> = (0..case.degrees.len()).map(|i| VarSpec::new(format!("x{i}"), 2)).collect();
        let rels: Vec<String> = case.degrees.iter().enumerate().map(|(i, d)| format!("x{i}^{d}")).collect();
        let ring = QuotientRing::build_waci(vars, &rels)?;
        assert_eq!(ring.middle_rank() as u64, case.middle_rank);
        println!(
            "{:<6} {:>3} {:<14} {:>3} {:>9}",
            case.label,
            case.formal_dimension,
            format!("{:?}", case.degrees),
            case.middle_rank,
            product_model_signature(&case.degrees)
        );
    }
    Ok(())
}
