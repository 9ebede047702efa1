//! The two parametric families used for end-to-end cross-validation.
//!
//! `A(c) = Q[x, y]/(x³ − xy², y³ − c·x²y)`, weights 2, defined for `c ≠ 1`:
//! with respect to `{xy, x², x² − y²}` and `ω = (c−1)x⁴` the middle form is
//! `diag(1/(c−1), 1/(c−1), 1)`, and `A(c)` is smoothable iff `|c − 1|` is a sum
//! of two rational squares.
//!
//! `B(c) = Q[x₁…x₄]/(xᵢ² − x₄² (i ≤ 3), Σ_{i<j} xᵢxⱼ − c·x₄²)`, weights 2,
//! defined for `c ∉ {−2, 0, 6}`: with `y = xᵢ²`, the basis
//! `x₁x₂ ∓ x₃x₄, x₁x₄ ∓ x₃x₂, x₁x₃ ∓ x₂x₄` and `ω = (6−c)(c+2)/3·y²` the
//! middle form is `I₃ ⊕ [[a,b,b],[b,a,b],[b,b,a]]`, and `B(c)` is smoothable
//! iff `|(c−6)(c+2)|` is a rational square.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{format_rational, int, is_rational_square, is_sum_two_rational_squares, square_class, Rational};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::poly::{parse_poly, PolyRing, VarSpec, WPoly};
use crate::qform::{self, WitnessSearch};
use crate::quotient::QuotientRing;
use crate::smooth::{self, Decision};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            other => Err(Error::Input(format!("unknown family `{other}` (expected A or B)"))),
        }
    }
}

/// Closed-form predictions for one member of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyOracle {
    /// Signature with respect to the reference orientation.
    pub signature: i64,
    pub smoothable: bool,
    pub reference_matrix: QMatrix,
    /// Diagonal congruent to the reference matrix, when one is printed.
    pub reference_diagonal: Option<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub c: Rational,
    pub variables: Vec<VarSpec>,
    pub relations: Vec<String>,
    pub middle_basis: Vec<String>,
    /// Reference orientation as an element of top degree.
    pub orientation_element: String,
    pub oracle: FamilyOracle,
}

impl FamilySpec {
    pub fn build(&self) -> Result<QuotientRing> {
        QuotientRing::build_waci(self.variables.clone(), &self.relations)
    }

    /// `|σ|` predicted for `A(c)`: `2 + sgn(c − 1)`.
    pub fn signature_magnitude(&self) -> u64 {
        self.oracle.signature.unsigned_abs()
    }
}

fn weight2(names: &[&str]) -> Vec<VarSpec> {
    names.iter().map(|n| VarSpec::new(*n, 2)).collect()
}

fn poly(ring: &Arc<PolyRing>, text: &str) -> WPoly {
    parse_poly(text, ring).expect("fixed family text")
}

pub fn family_a(c: &Rational) -> Result<FamilySpec> {
    if c.is_one() {
        return Err(Error::NotRegular("A(1) is not a complete intersection".into()));
    }
    let vars = weight2(&["x", "y"]);
    let ring = PolyRing::new(vars.clone())?;
    let f1 = poly(&ring, "x^3 - x*y^2");
    let f2 = &poly(&ring, "y^3") - &poly(&ring, "x^2*y").scale(c);
    let c1 = c - int(1);
    let omega = poly(&ring, "x^4").scale(&c1);
    let inv = c1.recip();
    let diag = vec![inv.clone(), inv, int(1)];
    let sigma = diag.iter().map(|a| if a.is_positive() { 1 } else { -1 }).sum();
    Ok(FamilySpec {
        family: Family::A,
        c: c.clone(),
        variables: vars,
        relations: vec![f1.to_string(), f2.to_string()],
        middle_basis: vec!["x*y".into(), "x^2".into(), "x^2 - y^2".into()],
        orientation_element: omega.to_string(),
        oracle: FamilyOracle {
            signature: sigma,
            smoothable: is_sum_two_rational_squares(&c1.abs()),
            reference_matrix: QMatrix::diagonal(&diag),
            reference_diagonal: Some(diag),
        },
    })
}

/// `a, b` of the lower block of `B₁(c)`.
pub fn b1_entries(c: &Rational) -> (Rational, Rational) {
    let den = (int(6) - c) * (c + int(2));
    (c * (c - int(4)) / &den, int(2) * c / &den)
}

pub fn b1_matrix(c: &Rational) -> QMatrix {
    let (a, b) = b1_entries(c);
    let mut m = QMatrix::identity(6);
    for i in 3..6 {
        for j in 3..6 {
            m[(i, j)] = if i == j { a.clone() } else { b.clone() };
        }
    }
    m
}

/// Diagonal of `B₃(c)` (requires `c ≠ 4`).
pub fn b3_diagonal(c: &Rational) -> Vec<Rational> {
    let (a, _) = b1_entries(c);
    let cp2 = c + int(2);
    vec![int(1), int(1), int(1), a, int(-2) * c / &cp2, int(-2) * (c - int(4)) / &cp2]
}

/// The change of basis `B₁ → B₃`: `f₅ = e₅ − e₆`, `f₆ = −2b·e₄ + a·e₅ + a·e₆`,
/// `g₆ = (6−c)(c+2)/c² · f₆`.
pub fn b1_to_b3_transform(c: &Rational) -> QMatrix {
    let (a, b) = b1_entries(c);
    let s = (int(6) - c) * (c + int(2)) / (c * c);
    let mut t = QMatrix::identity(6);
    t[(5, 4)] = int(-1);
    t[(3, 5)] = int(-2) * &b * &s;
    t[(4, 5)] = &a * &s;
    t[(5, 5)] = &a * &s;
    t
}

pub fn family_b(c: &Rational) -> Result<FamilySpec> {
    if [int(-2), int(0), int(6)].contains(c) {
        return Err(Error::NotRegular(format!("B({}) is not a complete intersection", format_rational(c))));
    }
    let vars = weight2(&["x1", "x2", "x3", "x4"]);
    let ring = PolyRing::new(vars.clone())?;
    let mut relations: Vec<WPoly> = (1..=3).map(|i| poly(&ring, &format!("x{i}^2 - x4^2"))).collect();
    let pairs = poly(&ring, "x1*x2 + x1*x3 + x1*x4 + x2*x3 + x2*x4 + x3*x4");
    relations.push(&pairs - &poly(&ring, "x4^2").scale(c));
    let k = (int(6) - c) * (c + int(2)) / int(3);
    let omega = poly(&ring, "x4^4").scale(&k);
    let reference_matrix = b1_matrix(c);
    let (reference_diagonal, signature) = if *c == int(4) {
        (None, qform::signature(&reference_matrix)?)
    } else {
        let d = b3_diagonal(c);
        let s = d.iter().map(|a| if a.is_positive() { 1 } else { -1 }).sum();
        (Some(d), s)
    };
    let disc = ((c - int(6)) * (c + int(2))).abs();
    Ok(FamilySpec {
        family: Family::B,
        c: c.clone(),
        variables: vars,
        relations: relations.iter().map(WPoly::to_string).collect(),
        middle_basis: vec![
            "x1*x2 - x3*x4".into(),
            "x1*x4 - x3*x2".into(),
            "x1*x3 - x2*x4".into(),
            "x1*x2 + x3*x4".into(),
            "x1*x4 + x3*x2".into(),
            "x1*x3 + x2*x4".into(),
        ],
        orientation_element: omega.to_string(),
        oracle: FamilyOracle { signature, smoothable: is_rational_square(&disc), reference_matrix, reference_diagonal },
    })
}

pub fn family(f: Family, c: &Rational) -> Result<FamilySpec> {
    match f {
        Family::A => family_a(c),
        Family::B => family_b(c),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub family: Family,
    #[serde(serialize_with = "crate::arith::serialize_rational")]
    pub c: Rational,
    pub signature: i64,
    pub smoothable: bool,
    pub checks: Vec<Check>,
}

impl FamilyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: &str, passed: bool, detail: impl FnOnce() -> String) {
        let detail = if passed { String::new() } else { detail() };
        self.0.push(Check { name: name.into(), passed, detail });
    }
}

/// Rebuilds the algebra from its relations and compares everything
/// computable against the oracle.
pub fn verify_family(spec: &FamilySpec) -> Result<FamilyReport> {
    let ring = spec.build()?;
    let mut checks = Checks(Vec::new());
    let expected_series = match spec.family {
        Family::A => vec![1, 2, 3, 2, 1],
        Family::B => vec![1, 4, 6, 4, 1],
    };
    let series = ring.poincare_polynomial();
    checks.push("poincare-series", series == expected_series, || format!("{series:?}"));

    let omega = ring.orientation_of(&ring.parse(&spec.orientation_element)?)?;
    let space = ring.middle_form_with_texts(&omega, &spec.middle_basis)?;
    let gram = space.gram();
    let reference = &spec.oracle.reference_matrix;
    let mismatch = (0..gram.rows())
        .flat_map(|i| (0..gram.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| gram[(i, j)] != reference[(i, j)]);
    checks.push("middle-matrix", mismatch.is_none(), || {
        let (i, j) = mismatch.unwrap();
        format!(
            "entry ({}, {}) is {}, expected {}",
            i + 1,
            j + 1,
            format_rational(&gram[(i, j)]),
            format_rational(&reference[(i, j)])
        )
    });

    let sigma = space.signature();
    checks.push("signature", sigma == spec.oracle.signature, || {
        format!("computed {sigma}, expected {}", spec.oracle.signature)
    });

    let el = ring.el_degree()?;
    let el_middle = ring.middle_form(&ring.el_orientation()?, None)?.signature();
    checks.push("el-degree-is-middle-signature", el == el_middle, || format!("full {el}, middle {el_middle}"));
    checks.push("el-degree-magnitude", el.abs() == sigma.abs(), || format!("{el} vs {sigma}"));

    let verdict = smooth::smoothable(&ring, WitnessSearch { height: 8, budget: 20_000 })?;
    let smoothable = verdict.decision == Decision::Smoothable;
    checks.push("smoothable", smoothable == spec.oracle.smoothable, || {
        format!("computed {:?}, expected smoothable = {}", verdict.decision, spec.oracle.smoothable)
    });

    if spec.family == Family::B {
        let c = &spec.c;
        let disc = qform::discriminant(gram)?;
        let expected = square_class(&((int(6) - c) * (c + int(2))))?;
        checks.push("discriminant", disc == expected, || format!("{disc} vs {expected}"));

        let y2 = ring.parse("x4^4")?;
        let zero_in_ring = |p: &WPoly| ring.reduce(p).is_zero();
        let quad = ring.parse("x1*x2*x3*x4")?;
        let coeff = (c * c - int(4) * c - int(6)) / int(6);
        checks.push("x1x2x3x4 = (c^2-4c-6)/6 y^2", zero_in_ring(&(&quad - &y2.scale(&coeff))), String::new);

        let y = ring.parse("x4^2")?;
        let mut all = true;
        for i in 1..=4 {
            for j in i + 1..=4 {
                let xij = ring.parse(&format!("x{i}*x{j}"))?;
                all &= zero_in_ring(&(&(&y * &xij) - &y2.scale(&(c / int(6)))));
            }
        }
        checks.push("y xi xj = c/6 y^2", all, String::new);

        let lhs = (&y * &ring.parse("x1*x2")?).scale(c);
        let sum12 = ring.parse("x1 + x2")?;
        let sum34 = ring.parse("x3 + x4")?;
        let rhs = &(&y2 + &(&(&y * &sum12) * &sum34)) + &quad;
        checks.push("c y x1x2 = y^2 + y(x1+x2)(x3+x4) + x1x2x3x4", zero_in_ring(&(&lhs - &rhs)), String::new);

        if let Some(diag) = &spec.oracle.reference_diagonal {
            let t = b1_to_b3_transform(c);
            let b3 = gram.congruent(&t);
            checks.push("b1-to-b3", b3 == QMatrix::diagonal(diag), || format!("{b3}"));
        }
    }

    Ok(FamilyReport { family: spec.family, c: spec.c.clone(), signature: sigma, smoothable, checks: checks.0 })
}

/// `p/q` with `|p| ≤ 20`, `1 ≤ q ≤ 10`, distinct, ascending, without the
/// family's degenerate values.
pub fn c_grid(f: Family) -> Vec<Rational> {
    let mut set = BTreeSet::new();
    for q in 1..=10i64 {
        for p in -20..=20i64 {
            set.insert(Rational::new(BigInt::from(p), BigInt::from(q)));
        }
    }
    set.into_iter().filter(|c| family(f, c).is_ok()).collect()
}

/// Verifies every `c` in parallel; results are in input order.
pub fn sweep(f: Family, cs: &[Rational]) -> Vec<(Rational, Result<FamilyReport>)> {
    cs.par_iter()
        .map(|c| (c.clone(), family(f, c).and_then(|spec| verify_family(&spec))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn degenerate_parameters() {
        assert!(matches!(family_a(&int(1)), Err(Error::NotRegular(_))));
        for c in [-2, 0, 6] {
            assert!(matches!(family_b(&int(c)), Err(Error::NotRegular(_))));
        }
        // the rejection agrees with the ring builder
        let ring = PolyRing::new(weight2(&["x", "y"])).unwrap();
        let rel = vec![poly(&ring, "x^3 - x*y^2"), poly(&ring, "y^3 - x^2*y")];
        assert!(matches!(QuotientRing::from_relations(rel), Err(Error::NotRegular(_))));
        for c in [-2, 0, 6] {
            let spec_texts = {
                let ring = PolyRing::new(weight2(&["x1", "x2", "x3", "x4"])).unwrap();
                let mut r: Vec<WPoly> = (1..=3).map(|i| poly(&ring, &format!("x{i}^2 - x4^2"))).collect();
                r.push(&poly(&ring, "x1*x2 + x1*x3 + x1*x4 + x2*x3 + x2*x4 + x3*x4") - &poly(&ring, "x4^2").scale(&int(c)));
                r
            };
            assert!(matches!(QuotientRing::from_relations(spec_texts), Err(Error::NotRegular(_))), "c = {c}");
        }
    }

    #[test]
    fn family_a_examples() {
        for (c, mag, smooth) in [(int(2), 3, true), (int(4), 3, false), (int(0), 1, true)] {
            let spec = family_a(&c).unwrap();
            assert_eq!(spec.signature_magnitude(), mag);
            assert_eq!(spec.oracle.smoothable, smooth);
            let report = verify_family(&spec).unwrap();
            assert!(report.all_passed(), "{:?}", report.failures());
        }
        let spec = family_a(&rat(-3, 2)).unwrap();
        assert_eq!(spec.build().unwrap().relations()[1], {
            let r = spec.build().unwrap();
            &r.parse("y^3").unwrap() + &r.parse("3/2*x^2*y").unwrap()
        });
        assert!(verify_family(&spec).unwrap().all_passed());
    }

    #[test]
    fn family_a_c2_matrix_is_identity() {
        let spec = family_a(&int(2)).unwrap();
        assert_eq!(spec.oracle.reference_matrix, QMatrix::identity(3));
    }

    #[test]
    fn family_b_examples() {
        for (c, sigma, smooth) in [(int(-3), 0, true), (int(2), 2, true), (rat(-2, 5), 6, true), (int(-1), 6, false)] {
            let spec = family_b(&c).unwrap();
            assert_eq!(spec.oracle.signature, sigma, "c = {c}");
            assert_eq!(spec.oracle.smoothable, smooth, "c = {c}");
            let report = verify_family(&spec).unwrap();
            assert!(report.all_passed(), "c = {c}: {:?}", report.failures());
        }
        assert_eq!(b3_diagonal(&int(-1))[3..], [rat(5, 7), int(2), int(10)]);
        let spec = family_b(&int(4)).unwrap();
        assert!(spec.oracle.reference_diagonal.is_none());
        assert_ne!(spec.oracle.signature.abs(), 4);
        assert!(verify_family(&spec).unwrap().all_passed());
    }

    #[test]
    fn grid() {
        let a = c_grid(Family::A);
        assert!(!a.contains(&int(1)));
        assert!(a.contains(&rat(-2, 5)));
        let b = c_grid(Family::B);
        assert!(!b.contains(&int(0)) && !b.contains(&int(6)) && !b.contains(&int(-2)));
        assert!(b.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn parametrization_of_square_discriminants() {
        // ε(6 − c) = (t/s)²(c + 2)  ⇔  c = (6εs² − 2t²)/(t² + εs²)
        for eps in [1i64, -1] {
            for t in 1..6i64 {
                for s in 1..6i64 {
                    let den = t * t + eps * s * s;
                    if den == 0 {
                        continue;
                    }
                    let c = rat(6 * eps * s * s - 2 * t * t, den);
                    if [int(-2), int(0), int(4), int(6)].contains(&c) {
                        continue;
                    }
                    assert_eq!(int(eps) * (int(6) - &c), rat(t * t, s * s) * (&c + int(2)));
                    let d = b3_diagonal(&c);
                    let l1 = int(2 * eps * t * t - 6 * s * s);
                    let l2 = int(6 * eps * t * t - 2 * s * s);
                    assert!(is_rational_square(&(&d[4] / &l1)), "λ₁ at c = {c}");
                    assert!(is_rational_square(&(&d[5] / &l2)), "λ₂ at c = {c}");
                }
            }
        }
    }
}
