//! Weighted multivariate polynomials over `Q`, Buchberger Gröbner bases and
//! standard monomials.
//!
//! All variables carry a positive even weight. Monomials are ordered by
//! weighted degree first and reverse lexicographically second, with the
//! variables in declaration order (`x₁ > x₂ > … > xₙ`). A graded order keeps
//! standard monomials stratified by weighted degree.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, Rational};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VarSpec {
    pub name: String,
    pub weight: u32,
}

impl VarSpec {
    pub fn new(name: impl Into<String>, weight: u32) -> Self {
        VarSpec { name: name.into(), weight }
    }
}

/// The ambient polynomial ring `Q[x₁, …, xₙ]` with its grading.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<VarSpec>,
}

impl PolyRing {
    pub fn new(vars: Vec<VarSpec>) -> Result<Arc<PolyRing>> {
        let mut seen = BTreeSet::new();
        for v in &vars {
            let valid_name = v.name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid_name {
                return Err(Error::InvalidVariable(format!("`{}` is not an identifier", v.name)));
            }
            if v.weight < 2 || v.weight % 2 != 0 {
                return Err(Error::InvalidVariable(format!(
                    "weight of `{}` must be positive and even, got {}",
                    v.name, v.weight
                )));
            }
            if !seen.insert(v.name.clone()) {
                return Err(Error::InvalidVariable(format!("duplicate name `{}`", v.name)));
            }
        }
        Ok(Arc::new(PolyRing { vars }))
    }

    /// All variables of weight 2.
    pub fn homogeneous(names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(names.iter().map(|n| VarSpec::new(*n, 2)).collect())
            .expect("valid homogeneous ring")
    }

    pub fn vars(&self) -> &[VarSpec] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.vars[i].weight
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn monomial(&self, exps: Vec<u32>) -> Monomial {
        assert_eq!(exps.len(), self.nvars());
        let degree = exps.iter().zip(&self.vars).map(|(e, v)| e * v.weight).sum();
        Monomial { degree, exps }
    }

    pub fn one_monomial(&self) -> Monomial {
        self.monomial(vec![0; self.nvars()])
    }

    pub fn var_monomial(&self, i: usize) -> Monomial {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        self.monomial(e)
    }

    /// All monomials of weighted degree exactly `d`.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        fn rec(ring: &PolyRing, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == ring.nvars() {
                if left == 0 {
                    out.push(ring.monomial(cur.clone()));
                }
                return;
            }
            let w = ring.weight(i);
            for e in 0..=left / w {
                cur.push(e);
                rec(ring, i + 1, left - e * w, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, 0, d, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

/// An exponent vector with its cached weighted degree.
///
/// `Ord` is the weighted degree reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: other.degree - self.degree,
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial, ring: &PolyRing) -> Monomial {
        ring.monomial(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the variable if this is a pure power `xᵢ^e` with `e ≥ 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut nz = self.exps.iter().enumerate().filter(|(_, &e)| e > 0);
        let first = nz.next()?;
        nz.next().is_none().then_some(first.0)
    }

    pub fn format(&self, ring: &PolyRing) -> String {
        if self.is_one() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let name = &ring.vars[i].name;
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        parts.join("*")
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + rhs.degree,
            exps: self.exps.iter().zip(&rhs.exps).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial over `Q` in a weighted ring. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPoly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Rational>,
}

impl WPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        WPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Rational) -> Self {
        Self::term(ring, ring.one_monomial(), c)
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::term(ring, ring.var_monomial(i), Rational::one())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.leading().map(|(m, _)| m)
    }

    /// The largest weighted degree among the terms.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// The common weighted degree of all terms, `Ok(None)` if they differ.
    pub fn weighted_homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next().ok_or(Error::ZeroPolynomial)?;
        Ok(degrees.all(|d| d == first).then_some(first))
    }

    pub fn is_homogeneous(&self) -> bool {
        matches!(self.weighted_homogeneous_degree(), Ok(Some(_)))
    }

    pub fn scale(&self, c: &Rational) -> WPoly {
        if c.is_zero() {
            return WPoly::zero(&self.ring);
        }
        WPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> WPoly {
        if c.is_zero() {
            return WPoly::zero(&self.ring);
        }
        WPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, a)| (k * m, a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> WPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · m · other`
    fn add_scaled(&mut self, other: &WPoly, m: &Monomial, c: &Rational) {
        for (k, a) in &other.terms {
            self.add_term(k * m, a * c);
        }
    }

    pub fn pow(&self, e: u32) -> WPoly {
        let mut out = WPoly::constant(&self.ring, Rational::one());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> WPoly {
        let mut out = WPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            exps[i] -= 1;
            out.add_term(self.ring.monomial(exps), c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Homogeneous component of weighted degree `d`.
    pub fn component(&self, d: u32) -> WPoly {
        WPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    fn check_ring(&self, other: &WPoly) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials from different rings"
        );
    }
}

impl Add for &WPoly {
    type Output = WPoly;

    fn add(self, rhs: &WPoly) -> WPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &WPoly {
    type Output = WPoly;

    fn sub(self, rhs: &WPoly) -> WPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &WPoly {
    type Output = WPoly;

    fn neg(self) -> WPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &WPoly {
    type Output = WPoly;

    fn mul(self, rhs: &WPoly) -> WPoly {
        self.check_ring(rhs);
        let mut out = WPoly::zero(&self.ring);
        for (m, c) in &rhs.terms {
            out.add_scaled(self, m, c);
        }
        out
    }
}

impl fmt::Display for WPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = m.format(&self.ring);
            match (abs.is_one(), m.is_one()) {
                (_, true) => write!(f, "{}", format_rational(&abs))?,
                (true, false) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{}*{mono}", format_rational(&abs))?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn integer(&mut self) -> Result<num_bigint::BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn identifier(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn expr(&mut self) -> Result<WPoly> {
        let mut out = WPoly::zero(self.ring);
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            out = if negate { &out - &t } else { &out + &t };
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(c) => return self.err(format!("unexpected `{}`", c as char)),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<WPoly> {
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; self.ring.nvars()];
        let mut seen_anything = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = self.integer()?;
            let mut den = num_bigint::BigInt::one();
            if self.peek() == Some(b'/') {
                self.pos += 1;
                if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    return self.err("expected denominator");
                }
                den = self.integer()?;
                if den.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
            }
            coeff = Rational::new(num, den);
            seen_anything = true;
        }
        loop {
            let save = self.pos;
            let star = self.peek() == Some(b'*');
            if star {
                self.pos += 1;
            }
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let name = self.identifier()?;
                    let idx = self.ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                            return self.err("expected positive integer exponent");
                        }
                        let n = self.integer()?;
                        e = u32::try_from(&n).map_err(|_| Error::Syntax { pos: self.pos, msg: "exponent too large".into() })?;
                        if e == 0 {
                            return self.err("exponent must be positive");
                        }
                    }
                    exps[idx] += e;
                    seen_anything = true;
                }
                _ if star => return self.err("expected variable after `*`"),
                _ => {
                    self.pos = save;
                    break;
                }
            }
        }
        if !seen_anything {
            return self.err("expected term");
        }
        Ok(WPoly::term(self.ring, self.ring.monomial(exps), coeff))
    }
}

/// Parses a polynomial in the ring's variables.
///
/// Grammar: `expr := term (('+'|'-') term)*`, `term := [coeff] ('*'? factor)*`,
/// `factor := var ('^' posint)?`, `coeff := integer | integer '/' posint`.
/// A leading sign is accepted; whitespace is insignificant.
pub fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<WPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    if p.peek().is_none() {
        return p.err("empty polynomial");
    }
    p.expr()
}

// ---------------------------------------------------------------------------
// Gröbner bases
// ---------------------------------------------------------------------------

/// A reduced Gröbner basis: monic generators, sorted by leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    generators: Vec<WPoly>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[WPoly] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.generators.iter().filter_map(WPoly::leading_monomial).collect()
    }

    pub fn normal_form(&self, p: &WPoly) -> WPoly {
        reduce(p, &self.generators)
    }

    pub fn contains(&self, p: &WPoly) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.generators.iter().any(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)))
    }

    /// Standard monomials, ascending weighted degree and, within a degree,
    /// descending in the monomial order. Fails unless the quotient is finite
    /// dimensional.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        let n = self.ring.nvars();
        let mut bound = vec![None; n];
        for lm in self.leading_monomials() {
            if let Some(i) = lm.pure_power_var() {
                let e = lm.exps[i];
                bound[i] = Some(bound[i].map_or(e, |b: u32| b.min(e)));
            }
        }
        let bound: Vec<u32> = bound
            .into_iter()
            .enumerate()
            .map(|(i, b)| b.ok_or_else(|| Error::NotArtinian(self.ring.vars[i].name.clone())))
            .collect::<Result<_>>()?;

        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        loop {
            let m = self.ring.monomial(exps.clone());
            if self.is_standard(&m) {
                out.push(m);
            }
            // odometer over the box ∏ [0, bound_i)
            let mut i = 0;
            loop {
                if i == n {
                    out.sort_by(|a, b| a.degree.cmp(&b.degree).then_with(|| b.cmp(a)));
                    return Ok(out);
                }
                exps[i] += 1;
                if exps[i] < bound[i] {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    /// Standard monomials grouped by weighted degree.
    pub fn graded_standard_monomials(&self) -> Result<BTreeMap<u32, Vec<Monomial>>> {
        let mut graded: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
        for m in self.standard_monomials()? {
            graded.entry(m.degree).or_default().push(m);
        }
        Ok(graded)
    }
}

/// Full reduction of `p` by `gens` (every term, not only the leading one).
fn reduce(p: &WPoly, gens: &[WPoly]) -> WPoly {
    let mut rest = p.clone();
    let mut out = WPoly::zero(&p.ring);
    while let Some((m, c)) = rest.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = gens.iter().find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match divisor {
            Some(g) => {
                let (lm, lc) = g.leading().unwrap();
                let q = lm.quotient_of(&m);
                let f = -(&c / lc);
                rest.add_scaled(g, &q, &f);
            }
            None => {
                rest.terms.remove(&m);
                out.terms.insert(m, c);
            }
        }
    }
    out
}

fn s_polynomial(f: &WPoly, g: &WPoly) -> WPoly {
    let (lf, cf) = f.leading().unwrap();
    let (lg, cg) = g.leading().unwrap();
    let l = lf.lcm(lg, &f.ring);
    let a = f.mul_term(&lf.quotient_of(&l), &cf.recip());
    let b = g.mul_term(&lg.quotient_of(&l), &cg.recip());
    &a - &b
}

/// Reduced Gröbner basis of the ideal generated by `relations`.
///
/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and the coprime-leading-monomial criterion.
pub fn groebner(relations: &[WPoly]) -> Result<GroebnerBasis> {
    let ring = relations
        .first()
        .map(|p| p.ring.clone())
        .ok_or_else(|| Error::InvalidRelation("empty relation list".into()))?;
    let mut basis: Vec<WPoly> = Vec::new();
    for r in relations {
        r.check_ring(&relations[0]);
        if r.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        basis.push(r.monic());
    }

    // pairs keyed by (lcm, i, j) so the smallest lcm is processed first
    let mut pairs: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();
    let push_pairs = |basis: &[WPoly], j: usize, pairs: &mut BTreeSet<(Monomial, usize, usize)>| {
        let lj = basis[j].leading_monomial().unwrap();
        for (i, g) in basis.iter().enumerate().take(j) {
            let li = g.leading_monomial().unwrap();
            if li.coprime(lj) {
                continue;
            }
            pairs.insert((li.lcm(lj, &ring), i, j));
        }
    };
    for j in 0..basis.len() {
        push_pairs(&basis, j, &mut pairs);
    }

    while let Some(pair) = pairs.pop_first() {
        let (_, i, j) = pair;
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = reduce(&s, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
            push_pairs(&basis, basis.len() - 1, &mut pairs);
        }
    }

    // minimalize: drop generators whose leading monomial is divisible by another's
    let mut minimal: Vec<WPoly> = Vec::new();
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }
    // interreduce
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<WPoly> = minimal.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, g)| g.clone()).collect();
        let lead = WPoly::term(&ring, minimal[k].leading_monomial().unwrap().clone(), Rational::one());
        let tail = &minimal[k] - &lead;
        reduced.push(&lead + &reduce(&tail, &others));
    }
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    Ok(GroebnerBasis { ring, generators: reduced })
}

/// True when every S-polynomial of the basis reduces to zero.
pub fn is_groebner(gb: &GroebnerBasis) -> bool {
    let g = &gb.generators;
    (0..g.len()).all(|j| (0..j).all(|i| reduce(&s_polynomial(&g[i], &g[j]), g).is_zero()))
}

pub fn normal_form(p: &WPoly, gb: &GroebnerBasis) -> WPoly {
    gb.normal_form(p)
}

// ---------------------------------------------------------------------------
// Jacobian
// ---------------------------------------------------------------------------

/// Determinant of the formal Jacobian matrix `(∂fᵢ/∂xⱼ)`, expanded.
pub fn jacobian_det(relations: &[WPoly]) -> Result<WPoly> {
    let ring = relations
        .first()
        .map(|p| p.ring.clone())
        .ok_or_else(|| Error::CountMismatch("no relations".into()))?;
    let n = ring.nvars();
    if relations.len() != n {
        return Err(Error::CountMismatch(format!("{} relations in {} variables", relations.len(), n)));
    }
    let jac: Vec<Vec<WPoly>> = relations.iter().map(|f| (0..n).map(|j| f.derivative(j)).collect()).collect();
    Ok(poly_det(&jac, 0, &(0..n).collect::<Vec<_>>(), &ring))
}

/// Laplace expansion along rows `row..`, over the remaining `cols`.
fn poly_det(m: &[Vec<WPoly>], row: usize, cols: &[usize], ring: &Arc<PolyRing>) -> WPoly {
    if cols.is_empty() {
        return WPoly::constant(ring, Rational::one());
    }
    let mut out = WPoly::zero(ring);
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = poly_det(m, row + 1, &rest, ring);
        let term = entry * &minor;
        out = if k % 2 == 0 { &out + &term } else { &out - &term };
    }
    out
}

// ---------------------------------------------------------------------------
// Hilbert function by linear algebra
// ---------------------------------------------------------------------------

/// Dimensions of `(Q[x]/(relations))_d` for `d = 0..=max_degree`, computed
/// degree by degree as `#monomials − rank(span of monomial multiples of the
/// relations)`. Relations must be weighted homogeneous. Independent of the
/// Gröbner machinery.
pub fn quotient_dimensions_by_linear_algebra(relations: &[WPoly], max_degree: u32) -> Result<Vec<usize>> {
    let ring = relations
        .first()
        .map(|p| p.ring.clone())
        .ok_or_else(|| Error::InvalidRelation("empty relation list".into()))?;
    let degrees: Vec<u32> = relations
        .iter()
        .map(|f| f.weighted_homogeneous_degree()?.ok_or(Error::NotHomogeneous))
        .collect::<Result<_>>()?;
    let mut dims = Vec::with_capacity(max_degree as usize + 1);
    for d in 0..=max_degree {
        let monos = ring.monomials_of_degree(d);
        if monos.is_empty() {
            dims.push(0);
            continue;
        }
        let index: BTreeMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for (f, &fd) in relations.iter().zip(&degrees) {
            if fd > d {
                continue;
            }
            for mult in ring.monomials_of_degree(d - fd) {
                let mut row = vec![Rational::zero(); monos.len()];
                for (m, c) in &f.terms {
                    row[index[&(m * &mult)]] = c.clone();
                }
                rows.push(row);
            }
        }
        let rank = if rows.is_empty() { 0 } else { QMatrix::from_rows(rows)?.rank() };
        dims.push(monos.len() - rank);
    }
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use proptest::prelude::*;

    fn xy() -> Arc<PolyRing> {
        PolyRing::homogeneous(&["x", "y"])
    }

    fn p(ring: &Arc<PolyRing>, s: &str) -> WPoly {
        parse_poly(s, ring).unwrap()
    }

    fn family_a(c: &str) -> Vec<WPoly> {
        let r = xy();
        let c = crate::arith::parse_rational(c).unwrap();
        vec![p(&r, "x^3 - x*y^2"), &p(&r, "y^3") - &p(&r, "x^2*y").scale(&c)]
    }

    #[test]
    fn parse_examples() {
        let r = xy();
        let f = p(&r, "x^3 - x*y^2");
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.weighted_homogeneous_degree().unwrap(), Some(6));
        assert!(p(&r, "0").is_zero());
        assert!(matches!(parse_poly("x^^2", &r), Err(Error::Syntax { .. })));
        assert_eq!(parse_poly("x*z", &r), Err(Error::UnknownVariable("z".into())));
        assert_eq!(parse_poly("1/0*x", &r), Err(Error::ZeroDenominator));
        assert!(matches!(parse_poly("x*", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("x +", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("", &r), Err(Error::Syntax { .. })));
    }

    #[test]
    fn parse_coefficients_and_juxtaposition() {
        let r = xy();
        let f = p(&r, " -2/3 x y^2 + 5*x*x - 1/2");
        assert_eq!(f.coefficient(&r.monomial(vec![1, 2])), rat(-2, 3));
        assert_eq!(f.coefficient(&r.monomial(vec![2, 0])), int(5));
        assert_eq!(f.coefficient(&r.one_monomial()), rat(-1, 2));
        assert_eq!(f.weighted_homogeneous_degree().unwrap(), None);
        assert_eq!(p(&r, &f.to_string()), f);
    }

    #[test]
    fn homogeneous_degree_examples() {
        let r = xy();
        assert_eq!(p(&r, "x + x^2").weighted_homogeneous_degree().unwrap(), None);
        let r3 = PolyRing::homogeneous(&["x1", "x2", "x3"]);
        assert_eq!(p(&r3, "x1*x2*x3").weighted_homogeneous_degree().unwrap(), Some(6));
        assert_eq!(WPoly::zero(&r).weighted_homogeneous_degree(), Err(Error::ZeroPolynomial));
        let weighted = PolyRing::new(vec![VarSpec::new("a", 2), VarSpec::new("b", 4)]).unwrap();
        assert_eq!(p(&weighted, "a^2 - b").weighted_homogeneous_degree().unwrap(), Some(4));
    }

    #[test]
    fn ring_rejects_bad_weights() {
        assert!(PolyRing::new(vec![VarSpec::new("x", 3)]).is_err());
        assert!(PolyRing::new(vec![VarSpec::new("x", 0)]).is_err());
        assert!(PolyRing::new(vec![VarSpec::new("x", 2), VarSpec::new("x", 2)]).is_err());
    }

    #[test]
    fn order_is_graded_reverse_lex() {
        let r = PolyRing::homogeneous(&["x", "y", "z"]);
        let m = |e: [u32; 3]| r.monomial(e.to_vec());
        assert!(m([1, 0, 0]) > m([0, 1, 0]));
        assert!(m([0, 1, 0]) > m([0, 0, 1]));
        // grevlex, not lex: x*z^... vs y^2
        assert!(m([0, 2, 0]) > m([1, 0, 1]));
        assert!(m([0, 0, 2]) > m([1, 0, 0]));
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = xy();
        let gb = groebner(&[p(&r, "x^2"), p(&r, "y^2")]).unwrap();
        assert_eq!(gb.generators(), &[p(&r, "y^2"), p(&r, "x^2")]);
        let std: Vec<String> = gb.standard_monomials().unwrap().iter().map(|m| m.format(&r)).collect();
        assert_eq!(std, vec!["1", "x", "y", "x*y"]);
    }

    #[test]
    fn family_a_basis_and_normal_forms() {
        let rels = family_a("2");
        let gb = groebner(&rels).unwrap();
        assert!(is_groebner(&gb));
        for f in &rels {
            assert!(gb.contains(f));
        }
        let graded = gb.graded_standard_monomials().unwrap();
        let dims: Vec<usize> = (0..=8).step_by(2).map(|d| graded.get(&d).map_or(0, Vec::len)).collect();
        assert_eq!(dims, vec![1, 2, 3, 2, 1]);
        let oracle = quotient_dimensions_by_linear_algebra(&rels, 10).unwrap();
        assert_eq!(oracle, vec![1, 0, 2, 0, 3, 0, 2, 0, 1, 0, 0]);

        let r = rels[0].ring().clone();
        assert_eq!(gb.normal_form(&p(&r, "x^3")), p(&r, "x*y^2"));
        assert!(gb.normal_form(&p(&r, "x^3*y")).is_zero());
        for m in gb.standard_monomials().unwrap() {
            let w = WPoly::term(&r, m, int(1));
            assert_eq!(gb.normal_form(&w), w);
        }
    }

    #[test]
    fn not_artinian_detected() {
        let gb = groebner(&family_a("1")).unwrap();
        assert!(matches!(gb.standard_monomials(), Err(Error::NotArtinian(_))));
    }

    #[test]
    fn single_variable_cube() {
        let r = PolyRing::homogeneous(&["x"]);
        let gb = groebner(&[p(&r, "x^3")]).unwrap();
        let std: Vec<String> = gb.standard_monomials().unwrap().iter().map(|m| m.format(&r)).collect();
        assert_eq!(std, vec!["1", "x", "x^2"]);
    }

    #[test]
    fn family_b_minus_one_has_sixteen_standard_monomials() {
        let r = PolyRing::homogeneous(&["x1", "x2", "x3", "x4"]);
        let rels: Vec<WPoly> = [
            "x1^2 - x4^2",
            "x2^2 - x4^2",
            "x3^2 - x4^2",
            "x1*x2 + x1*x3 + x1*x4 + x2*x3 + x2*x4 + x3*x4 + x4^2",
        ]
        .iter()
        .map(|s| p(&r, s))
        .collect();
        let gb = groebner(&rels).unwrap();
        assert!(is_groebner(&gb));
        let graded = gb.graded_standard_monomials().unwrap();
        let dims: Vec<usize> = graded.values().map(Vec::len).collect();
        assert_eq!(dims, vec![1, 4, 6, 4, 1]);
        assert_eq!(quotient_dimensions_by_linear_algebra(&rels, 8).unwrap(), vec![1, 0, 4, 0, 6, 0, 4, 0, 1]);
    }

    #[test]
    fn jacobian_examples() {
        let r = xy();
        assert_eq!(jacobian_det(&[p(&r, "x^2"), p(&r, "y^2")]).unwrap(), p(&r, "4*x*y"));
        let r1 = PolyRing::homogeneous(&["x"]);
        assert_eq!(jacobian_det(&[p(&r1, "x^3")]).unwrap(), p(&r1, "3*x^2"));
        assert!(matches!(jacobian_det(&[p(&r, "x^2")]), Err(Error::CountMismatch(_))));

        // symbolic expansion oracle for A(c) with c = 2
        let rels = family_a("2");
        let j = jacobian_det(&rels).unwrap();
        let expected = &(&p(&r, "3*x^2 - y^2") * &p(&r, "3*y^2 - 2*x^2")) - &p(&r, "8*x^2*y^2");
        assert_eq!(j, expected);
        let gb = groebner(&rels).unwrap();
        assert_eq!(gb.normal_form(&j), gb.normal_form(&p(&r, "-9*x^2*y^2")));
    }

    #[test]
    fn shuffled_relations_give_same_basis() {
        let mut rels = family_a("-3/2");
        let a = groebner(&rels).unwrap();
        rels.reverse();
        let b = groebner(&rels).unwrap();
        assert_eq!(a, b);
        // a scaled and mixed generating set spans the same ideal
        let mixed = vec![&rels[0] + &rels[1], rels[1].scale(&rat(-7, 2))];
        assert_eq!(groebner(&mixed).unwrap(), a);
    }

    fn small_poly(ring: Arc<PolyRing>) -> impl Strategy<Value = WPoly> {
        prop::collection::vec(((0u32..4, 0u32..4), -5i64..5), 0..5).prop_map(move |terms| {
            let mut out = WPoly::zero(&ring);
            for ((a, b), c) in terms {
                out = &out + &WPoly::term(&ring, ring.monomial(vec![a, b]), int(c));
            }
            out
        })
    }

    proptest! {
        #[test]
        fn normal_form_is_linear_idempotent_multiplicative(
            f in small_poly(PolyRing::homogeneous(&["x", "y"])),
            g in small_poly(PolyRing::homogeneous(&["x", "y"])),
            k in -4i64..4,
        ) {
            let rels = family_a("2");
            let r = rels[0].ring().clone();
            let f = WPoly { ring: r.clone(), terms: f.terms };
            let g = WPoly { ring: r.clone(), terms: g.terms };
            let gb = groebner(&rels).unwrap();
            let nf = |q: &WPoly| gb.normal_form(q);
            prop_assert_eq!(nf(&nf(&f)), nf(&f));
            prop_assert_eq!(nf(&(&f + &g.scale(&int(k)))), &nf(&f) + &nf(&g).scale(&int(k)));
            prop_assert_eq!(nf(&(&f * &g)), nf(&(&nf(&f) * &nf(&g))));
            prop_assert!(gb.contains(&(&f - &nf(&f))));
            for d in 0..=8 {
                let c = f.component(d);
                let reduced = nf(&c);
                if !reduced.is_zero() {
                    prop_assert_eq!(reduced.weighted_homogeneous_degree().unwrap(), Some(d));
                }
            }
        }
    }
}
