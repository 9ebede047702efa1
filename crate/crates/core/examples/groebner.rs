//! Reduced Gröbner basis, standard monomials and multiplication in a
//! weighted quotient.
//!
//! cargo run --example groebner

use waci::poly::VarSpec;
use waci::quotient::QuotientRing;

fn main() -> waci::Result<()> {
    let vars = vec![VarSpec::new("x", 2), VarSpec::new("y", 4)];
    let ring = QuotientRing::build_waci(vars, &["x^3", "y^2 + x^4"])?;

    println!("Gröbner basis:");
    for g in ring.groebner_basis().generators() {
        println!("  {g}");
    }
    println!("formal dimension {}", ring.formal_dimension());
    for (d, dim) in ring.hilbert_function().iter().enumerate().filter(|(_, n)| **n > 0) {
        let basis: Vec<String> = ring.basis_in_degree(d as u32).iter().map(|m| m.format(ring.ring())).collect();
        println!("  degree {d:>2}: {dim}  [{}]", basis.join(", "));
    }

    let a = ring.element("x*y")?;
    let b = ring.element("x")?;
    println!("(x*y)·x = {}", ring.multiply(&a, &b));
    println!("top monomial {}", ring.top_monomial().format(ring.ring()));
    Ok(())
}
