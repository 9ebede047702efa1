//! Weighted artinian complete intersections `A = Q[x₁…xₙ]/(f₁…fₙ)`.
//!
//! A [`QuotientRing`] is validated on construction: the relations must be a
//! regular sequence, which for `n` homogeneous relations in `n` variables is
//! checked by comparing the graded dimensions of the standard-monomial basis
//! with the product `∏ (1 − t^{|fᵢ|}) / (1 − t^{|xᵢ|})`.
//!
//! Orientations are scalars relative to the unique standard monomial of top
//! degree `m`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::arith::{format_rational, Rational};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::poly::{groebner, jacobian_det, parse_poly, GroebnerBasis, Monomial, PolyRing, VarSpec, WPoly};
use crate::qform;

#[derive(Clone, Debug)]
pub struct QuotientRing {
    ring: Arc<PolyRing>,
    relations: Vec<WPoly>,
    relation_degrees: Vec<u32>,
    gb: GroebnerBasis,
    basis: BTreeMap<u32, Vec<Monomial>>,
    formal_dimension: u32,
    top: Monomial,
}

/// Coefficients (indexed by degree) of `∏ (1 − t^{dᵢ}) / ∏ (1 − t^{wᵢ})`, or
/// `None` when the quotient is not a polynomial.
pub fn poincare_product(weights: &[u32], degrees: &[u32]) -> Option<Vec<u64>> {
    let top: u32 = degrees.iter().sum::<u32>().checked_sub(weights.iter().sum())?;
    let mut num: Vec<i128> = vec![1];
    for &d in degrees {
        let mut next = vec![0i128; num.len() + d as usize];
        for (i, &c) in num.iter().enumerate() {
            next[i] += c;
            next[i + d as usize] -= c;
        }
        num = next;
    }
    // divide by each (1 − t^w): running sums with stride w
    for &w in weights {
        let w = w as usize;
        let mut quo = vec![0i128; num.len()];
        for i in 0..num.len() {
            quo[i] = num[i] + if i >= w { quo[i - w] } else { 0 };
        }
        num = quo;
    }
    let (head, tail) = num.split_at(top as usize + 1);
    if tail.iter().any(|&c| c != 0) || head.iter().any(|&c| c < 0) {
        return None;
    }
    Some(head.iter().map(|&c| c as u64).collect())
}

impl QuotientRing {
    /// Parses relation texts over `vars` and validates the result.
    pub fn build_waci<S: AsRef<str>>(vars: Vec<VarSpec>, relation_texts: &[S]) -> Result<QuotientRing> {
        let ring = PolyRing::new(vars)?;
        let relations = relation_texts
            .iter()
            .map(|t| parse_poly(t.as_ref(), &ring))
            .collect::<Result<Vec<_>>>()?;
        Self::from_relations(relations)
    }

    pub fn from_relations(relations: Vec<WPoly>) -> Result<QuotientRing> {
        let ring = relations
            .first()
            .map(|p| p.ring().clone())
            .ok_or_else(|| Error::CountMismatch("no relations".into()))?;
        if relations.len() != ring.nvars() {
            return Err(Error::CountMismatch(format!(
                "{} relations in {} variables",
                relations.len(),
                ring.nvars()
            )));
        }
        let mut relation_degrees = Vec::with_capacity(relations.len());
        for (i, f) in relations.iter().enumerate() {
            if !Arc::ptr_eq(f.ring(), &ring) && f.ring().vars() != ring.vars() {
                return Err(Error::InvalidRelation(format!("relation {} lives in a different ring", i + 1)));
            }
            let d = f.weighted_homogeneous_degree()?.ok_or(Error::NotHomogeneous)?;
            if d == 0 {
                return Err(Error::InvalidRelation(format!("relation {} is a nonzero constant", i + 1)));
            }
            for (m, _) in f.terms() {
                if let Some(v) = m.pure_power_var().filter(|&v| m.exps()[v] == 1) {
                    return Err(Error::InvalidRelation(format!(
                        "relation {} has the linear term {}; relations must lie in the square of the maximal ideal",
                        i + 1,
                        ring.vars()[v].name
                    )));
                }
            }
            relation_degrees.push(d);
        }

        let gb = groebner(&relations)?;
        let basis = gb.graded_standard_monomials().map_err(|e| match e {
            Error::NotArtinian(v) => Error::NotRegular(format!("no pure power of `{v}` in the ideal of leading terms")),
            other => other,
        })?;
        let weights: Vec<u32> = ring.vars().iter().map(|v| v.weight).collect();
        let expected = poincare_product(&weights, &relation_degrees)
            .ok_or_else(|| Error::NotRegular("Hilbert series is not the complete-intersection product".into()))?;
        let computed: Vec<u64> = (0..expected.len() as u32)
            .map(|d| basis.get(&d).map_or(0, |v| v.len() as u64))
            .collect();
        let beyond = basis.keys().any(|&d| d as usize >= expected.len());
        if computed != expected || beyond {
            return Err(Error::NotRegular(format!(
                "graded dimensions {:?} differ from the complete-intersection product {:?}",
                computed, expected
            )));
        }
        let formal_dimension = expected.len() as u32 - 1;
        let top = basis[&formal_dimension][0].clone();
        Ok(QuotientRing { ring, relations, relation_degrees, gb, basis, formal_dimension, top })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn relations(&self) -> &[WPoly] {
        &self.relations
    }

    pub fn relation_degrees(&self) -> &[u32] {
        &self.relation_degrees
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn formal_dimension(&self) -> u32 {
        self.formal_dimension
    }

    pub fn top_monomial(&self) -> &Monomial {
        &self.top
    }

    pub fn dimension(&self) -> usize {
        self.basis.values().map(Vec::len).sum()
    }

    /// Standard monomials of degree `d` (descending in the monomial order).
    pub fn basis_in_degree(&self, d: u32) -> &[Monomial] {
        self.basis.get(&d).map_or(&[], Vec::as_slice)
    }

    pub fn standard_monomials(&self) -> Vec<&Monomial> {
        self.basis.values().flatten().collect()
    }

    /// `dim A^d` for `d = 0..=m`, every degree (odd ones are zero).
    pub fn hilbert_function(&self) -> Vec<usize> {
        (0..=self.formal_dimension).map(|d| self.basis_in_degree(d).len()).collect()
    }

    /// Coefficients of the Poincaré polynomial in `t²`: `dim A^{2k}` for
    /// `k = 0..=m/2`.
    pub fn poincare_polynomial(&self) -> Vec<usize> {
        (0..=self.formal_dimension).step_by(2).map(|d| self.basis_in_degree(d).len()).collect()
    }

    /// `dim A^{m/2}`; zero when `m/2` is odd.
    pub fn middle_rank(&self) -> usize {
        if self.formal_dimension % 2 == 1 {
            return 0;
        }
        self.basis_in_degree(self.formal_dimension / 2).len()
    }

    pub fn parse(&self, text: &str) -> Result<WPoly> {
        parse_poly(text, &self.ring)
    }

    /// Normal form of an expression.
    pub fn element(&self, text: &str) -> Result<WPoly> {
        Ok(self.reduce(&self.parse(text)?))
    }

    pub fn reduce(&self, p: &WPoly) -> WPoly {
        self.gb.normal_form(p)
    }

    pub fn multiply(&self, a: &WPoly, b: &WPoly) -> WPoly {
        self.reduce(&(a * b))
    }

    /// Coefficient of the top standard monomial in the normal form of `p`.
    pub fn top_coefficient(&self, p: &WPoly) -> Rational {
        self.reduce(&p.component(self.formal_dimension)).coefficient(&self.top)
    }

    /// Orientation `ω = c_ω · top`, or [`Error::InvalidOrientation`] for an
    /// element that is not a nonzero multiple of it.
    pub fn orientation_of(&self, p: &WPoly) -> Result<Orientation> {
        let nf = self.reduce(p);
        let c = nf.coefficient(&self.top);
        if c.is_zero() || nf.num_terms() != 1 {
            return Err(Error::InvalidOrientation(format!("{nf} is not a nonzero element of top degree")));
        }
        Orientation::new(c)
    }

    /// Matrix of `A^j × A^{m−j} → Q`, `(a, b) ↦ ab / ω` in standard-monomial bases.
    pub fn pairing_matrix(&self, j: u32, orientation: &Orientation) -> Result<QMatrix> {
        if j > self.formal_dimension {
            return Err(Error::DegreeOutOfRange(j));
        }
        let left: Vec<WPoly> = self.basis_in_degree(j).iter().map(|m| self.monomial_poly(m)).collect();
        let right: Vec<WPoly> = self
            .basis_in_degree(self.formal_dimension - j)
            .iter()
            .map(|m| self.monomial_poly(m))
            .collect();
        let g = self.pairing_matrix_for(&left, &right, orientation);
        if g.rows() != g.cols() || g.rank() != g.rows() {
            return Err(Error::DualityFailure(j));
        }
        Ok(g)
    }

    /// Pairing matrix for arbitrary lists of elements.
    pub fn pairing_matrix_for(&self, left: &[WPoly], right: &[WPoly], orientation: &Orientation) -> QMatrix {
        let mut g = QMatrix::zeros(left.len(), right.len());
        for (i, a) in left.iter().enumerate() {
            for (k, b) in right.iter().enumerate() {
                g[(i, k)] = self.top_coefficient(&(a * b)) / &orientation.scalar;
            }
        }
        g
    }

    /// Every pairing `A^j × A^{m−j}` is perfect.
    pub fn duality_verified(&self, orientation: &Orientation) -> bool {
        (0..=self.formal_dimension).all(|j| self.pairing_matrix(j, orientation).is_ok())
    }

    pub fn standard_middle_basis(&self) -> Result<Vec<WPoly>> {
        let m = self.formal_dimension;
        if !m.is_multiple_of(4) {
            return Err(Error::NotMiddleDimension(m));
        }
        Ok(self.basis_in_degree(m / 2).iter().map(|b| self.monomial_poly(b)).collect())
    }

    /// The intersection form on `A^{m/2}` under `orientation`, with respect to
    /// the standard monomials or a caller-supplied basis.
    pub fn middle_form(&self, orientation: &Orientation, basis: Option<&[WPoly]>) -> Result<InnerProductSpace> {
        let m = self.formal_dimension;
        let standard = self.standard_middle_basis()?;
        let elements: Vec<WPoly> = match basis {
            None => standard,
            Some(b) => {
                if b.len() != standard.len() {
                    return Err(Error::InvalidBasis(format!(
                        "{} elements given, dim A^{} = {}",
                        b.len(),
                        m / 2,
                        standard.len()
                    )));
                }
                for e in b {
                    if e.is_zero() || e.weighted_homogeneous_degree()? != Some(m / 2) {
                        return Err(Error::InvalidBasis(format!("{e} is not a nonzero element of degree {}", m / 2)));
                    }
                }
                b.to_vec()
            }
        };
        let gram = self.pairing_matrix_for(&elements, &elements, orientation);
        if gram.rank() != gram.rows() {
            return Err(match basis {
                None => Error::DualityFailure(m / 2),
                Some(_) => Error::InvalidBasis("elements are linearly dependent in the quotient".into()),
            });
        }
        let labels = elements.iter().map(|e| e.to_string()).collect();
        InnerProductSpace::new(labels, gram, orientation.clone())
    }

    /// Middle form with respect to basis expressions given as text.
    pub fn middle_form_with_texts<S: AsRef<str>>(&self, orientation: &Orientation, texts: &[S]) -> Result<InnerProductSpace> {
        let basis = texts.iter().map(|t| self.parse(t.as_ref())).collect::<Result<Vec<_>>>()?;
        self.middle_form(orientation, Some(&basis))
    }

    /// Class of the Jacobian determinant in `A^m`.
    pub fn el_orientation(&self) -> Result<Orientation> {
        let j = jacobian_det(&self.relations)?;
        self.orientation_of(&j)
            .map_err(|_| Error::Internal("Jacobian class vanishes in top degree".into()))
    }

    /// Signature of `⟨p, q⟩ = φ(pq)` on all of `A`, where `φ` reads the top
    /// coefficient with the sign making `φ(ω_EL) > 0`.
    pub fn el_degree(&self) -> Result<i64> {
        let omega = self.el_orientation()?;
        qform::signature(&self.full_form(&omega)?)
    }

    /// Gram matrix of `φ(pq)` over every standard monomial, `φ = sign(c_ω)·top`.
    pub fn full_form(&self, orientation: &Orientation) -> Result<QMatrix> {
        let sign = if orientation.scalar.is_negative() { -Rational::one() } else { Rational::one() };
        let all: Vec<WPoly> = self.standard_monomials().into_iter().map(|m| self.monomial_poly(m)).collect();
        let phi = Orientation::new(sign)?;
        let g = self.pairing_matrix_for(&all, &all, &phi);
        if g.rank() != g.rows() {
            return Err(Error::DualityFailure(self.formal_dimension));
        }
        Ok(g)
    }

    fn monomial_poly(&self, m: &Monomial) -> WPoly {
        WPoly::term(&self.ring, m.clone(), Rational::one())
    }

    /// Relations as re-parseable text.
    pub fn relation_texts(&self) -> Vec<String> {
        self.relations.iter().map(|f| f.to_string()).collect()
    }
}

/// `ω = scalar · (top standard monomial)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    scalar: Rational,
}

impl Orientation {
    pub fn new(scalar: Rational) -> Result<Orientation> {
        if scalar.is_zero() {
            return Err(Error::InvalidOrientation("zero scalar".into()));
        }
        Ok(Orientation { scalar })
    }

    pub fn unit() -> Orientation {
        Orientation { scalar: Rational::one() }
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar
    }

    pub fn scaled(&self, lambda: &Rational) -> Result<Orientation> {
        Orientation::new(&self.scalar * lambda)
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.scalar))
    }
}

/// A labeled symmetric nondegenerate form together with the orientation it
/// was read against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerProductSpace {
    basis_labels: Vec<String>,
    gram: QMatrix,
    orientation: Orientation,
}

impl InnerProductSpace {
    pub fn new(basis_labels: Vec<String>, gram: QMatrix, orientation: Orientation) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::Shape(format!("{}x{} Gram matrix", gram.rows(), gram.cols())));
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if basis_labels.len() != gram.rows() {
            return Err(Error::Shape(format!("{} labels for rank {}", basis_labels.len(), gram.rows())));
        }
        if gram.rank() != gram.rows() {
            return Err(Error::Singular);
        }
        Ok(InnerProductSpace { basis_labels, gram, orientation })
    }

    /// A bare Gram matrix with labels `e1, e2, …` and unit orientation.
    pub fn from_gram(gram: QMatrix) -> Result<Self> {
        let labels = (1..=gram.rows()).map(|i| format!("e{i}")).collect();
        Self::new(labels, gram, Orientation::unit())
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    /// The same space read against `λω`: Gram matrix `λ⁻¹G`.
    pub fn reoriented(&self, lambda: &Rational) -> Result<Self> {
        let orientation = self.orientation.scaled(lambda)?;
        Ok(InnerProductSpace {
            basis_labels: self.basis_labels.clone(),
            gram: self.gram.scale(&lambda.recip()),
            orientation,
        })
    }

    pub fn signature(&self) -> i64 {
        qform::signature(&self.gram).expect("validated nondegenerate")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::poly::quotient_dimensions_by_linear_algebra;

    fn vars(names: &[(&str, u32)]) -> Vec<VarSpec> {
        names.iter().map(|(n, w)| VarSpec::new(*n, *w)).collect()
    }

    fn family_a(c: &str) -> Result<QuotientRing> {
        let ring = PolyRing::homogeneous(&["x", "y"]);
        let c = crate::arith::parse_rational(c).unwrap();
        let f1 = parse_poly("x^3 - x*y^2", &ring).unwrap();
        let f2 = &parse_poly("y^3", &ring).unwrap() - &parse_poly("x^2*y", &ring).unwrap().scale(&c);
        QuotientRing::from_relations(vec![f1, f2])
    }

    #[test]
    fn product_formula() {
        assert_eq!(poincare_product(&[2, 2], &[6, 6]), Some(vec![1, 0, 2, 0, 3, 0, 2, 0, 1]));
        assert_eq!(poincare_product(&[2], &[10]), Some(vec![1, 0, 1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(poincare_product(&[2, 2, 2, 2], &[4, 4, 4, 4]), Some(vec![1, 0, 4, 0, 6, 0, 4, 0, 1]));
        assert_eq!(poincare_product(&[2, 4], &[4, 6]), Some(vec![1, 0, 1, 0, 1]));
        assert_eq!(poincare_product(&[4], &[6]), None);
        assert_eq!(poincare_product(&[2], &[2]), Some(vec![1]));
    }

    #[test]
    fn build_examples() {
        let a2 = family_a("2").unwrap();
        assert_eq!(a2.formal_dimension(), 8);
        assert_eq!(a2.poincare_polynomial(), vec![1, 2, 3, 2, 1]);
        assert!(matches!(family_a("1"), Err(Error::NotRegular(_))));

        let x3 = QuotientRing::build_waci(vars(&[("x", 2)]), &["x^3"]).unwrap();
        assert_eq!(x3.formal_dimension(), 4);
        assert_eq!(x3.poincare_polynomial(), vec![1, 1, 1]);
    }

    #[test]
    fn build_rejections() {
        let xy = vars(&[("x", 2), ("y", 2)]);
        assert!(matches!(QuotientRing::build_waci(xy.clone(), &["x^2"]), Err(Error::CountMismatch(_))));
        assert_eq!(QuotientRing::build_waci(xy.clone(), &["x^2 + y^3", "y^2"]).unwrap_err(), Error::NotHomogeneous);
        assert!(matches!(QuotientRing::build_waci(xy.clone(), &["x", "y^2"]), Err(Error::InvalidRelation(_))));
        assert!(matches!(QuotientRing::build_waci(xy.clone(), &["x^2", "x*y"]), Err(Error::NotRegular(_))));
        assert!(matches!(QuotientRing::build_waci(vars(&[("x", 3)]), &["x^2"]), Err(Error::InvalidVariable(_))));
        assert!(matches!(QuotientRing::build_waci(xy, &["x^2", "0"]), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn weighted_example() {
        // |x| = 2, |y| = 4: x^3 (deg 6), y^2 (deg 8) → m = 4 + 4
        let r = QuotientRing::build_waci(vars(&[("x", 2), ("y", 4)]), &["x^3", "y^2 + x^4"]).unwrap();
        assert_eq!(r.formal_dimension(), 8);
        assert_eq!(r.poincare_polynomial(), vec![1, 1, 2, 1, 1]);
        assert!(r.duality_verified(&Orientation::unit()));
    }

    #[test]
    fn dimensions_agree_with_linear_algebra() {
        for c in ["2", "0", "-3", "1/2"] {
            let r = family_a(c).unwrap();
            let la = quotient_dimensions_by_linear_algebra(r.relations(), 10).unwrap();
            let mut expected = r.hilbert_function();
            expected.resize(11, 0);
            assert_eq!(la, expected, "c = {c}");
        }
    }

    #[test]
    fn pairing_examples() {
        let x3 = QuotientRing::build_waci(vars(&[("x", 2)]), &["x^3"]).unwrap();
        let omega = x3.orientation_of(&x3.parse("x^2").unwrap()).unwrap();
        assert_eq!(x3.pairing_matrix(0, &omega).unwrap(), QMatrix::identity(1));

        let a2 = family_a("2").unwrap();
        let omega = a2.orientation_of(&a2.parse("x^2*y^2").unwrap()).unwrap();
        let left: Vec<WPoly> = ["x", "y"].iter().map(|s| a2.parse(s).unwrap()).collect();
        let right: Vec<WPoly> = ["x^2*y", "x*y^2"].iter().map(|s| a2.parse(s).unwrap()).collect();
        let g = a2.pairing_matrix_for(&left, &right, &omega);
        assert_eq!(g, QMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap());
        for j in 0..=8 {
            assert!(a2.pairing_matrix(j, &omega).is_ok());
        }
        assert_eq!(a2.pairing_matrix(9, &omega), Err(Error::DegreeOutOfRange(9)));
    }

    #[test]
    fn middle_form_examples() {
        let a2 = family_a("2").unwrap();
        let omega = a2.orientation_of(&a2.parse("x^4").unwrap()).unwrap();
        let s = a2.middle_form_with_texts(&omega, &["x*y", "x^2", "x^2 - y^2"]).unwrap();
        assert_eq!(s.gram(), &QMatrix::identity(3));
        assert_eq!(s.signature(), 3);

        let r = QuotientRing::build_waci(vars(&[("x1", 2), ("x2", 2)]), &["x1^2 - x2^2", "x1*x2"]).unwrap();
        let omega = r.orientation_of(&r.parse("x1^2").unwrap()).unwrap();
        let s = r.middle_form_with_texts(&omega, &["x1", "x2"]).unwrap();
        assert_eq!(s.gram(), &QMatrix::identity(2));

        let x2 = QuotientRing::build_waci(vars(&[("x", 2)]), &["x^2"]).unwrap();
        assert_eq!(x2.middle_form(&Orientation::unit(), None).unwrap_err(), Error::NotMiddleDimension(2));
        assert!(matches!(
            a2.middle_form_with_texts(&omega_unit(), &["x*y", "x^2", "x*y"]),
            Err(Error::InvalidBasis(_))
        ));
        assert!(matches!(a2.middle_form_with_texts(&omega_unit(), &["x", "x^2", "x*y"]), Err(Error::InvalidBasis(_))));
    }

    fn omega_unit() -> Orientation {
        Orientation::unit()
    }

    #[test]
    fn orientation_covariance() {
        let a2 = family_a("3/2").unwrap();
        let omega = a2.el_orientation().unwrap();
        let s = a2.middle_form(&omega, None).unwrap();
        for lambda in [int(2), rat(-3, 7), int(-1), rat(5, 11)] {
            let t = a2.middle_form(&omega.scaled(&lambda).unwrap(), None).unwrap();
            assert_eq!(t.gram(), &s.gram().scale(&lambda.recip()));
            assert_eq!(&t, &s.reoriented(&lambda).unwrap());
        }
    }

    #[test]
    fn el_examples() {
        let x3 = QuotientRing::build_waci(vars(&[("x", 2)]), &["x^3"]).unwrap();
        assert_eq!(x3.el_orientation().unwrap().scalar(), &int(3));
        assert_eq!(x3.el_degree().unwrap(), 1);

        let sq = QuotientRing::build_waci(vars(&[("x", 2), ("y", 2)]), &["x^2", "y^2"]).unwrap();
        assert_eq!(sq.el_orientation().unwrap().scalar(), &int(4));
        assert_eq!(sq.top_monomial().format(sq.ring()), "x*y");

        let a2 = family_a("2").unwrap();
        let omega = a2.el_orientation().unwrap();
        let x2y2 = a2.orientation_of(&a2.parse("x^2*y^2").unwrap()).unwrap();
        assert_eq!(omega.scalar() / x2y2.scalar(), int(-9));
        assert_eq!(a2.el_degree().unwrap(), -3);
        assert_eq!(family_a("0").unwrap().el_degree().unwrap(), 1);
    }

    #[test]
    fn full_form_signature_is_middle_signature() {
        for c in ["2", "0", "4", "-3", "1/2"] {
            let r = family_a(c).unwrap();
            let omega = r.el_orientation().unwrap();
            let middle = r.middle_form(&omega, None).unwrap().signature();
            assert_eq!(r.el_degree().unwrap(), middle, "c = {c}");
        }
    }
}
