//! Nondegenerate symmetric bilinear forms over `Q`.
//!
//! Diagonalization by congruence, Sylvester signature, discriminant, the
//! local (Hasse-Witt) invariants `ε_p = ∏_{i<j} (aᵢ, aⱼ)_p`, membership of the
//! Witt class in the image of `W(Z)`, and the integrality test that quotients
//! out the choice of orientation.
//!
//! Only finitely many odd primes can have `ε_p = -1`: those dividing the
//! numerator or denominator of some diagonal entry. Every "for all odd `p`"
//! check below is therefore a finite loop over that support.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{
    format_rational, hilbert_symbol, integer_square_root, odd_prime_support, rational_square_root, square_class, Place,
    Rational, SquareClass,
};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::quotient::InnerProductSpace;

/// `TᵀGT = diag(entries)` with `T` invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalForm {
    pub entries: Vec<Rational>,
    pub transform: QMatrix,
}

impl DiagonalForm {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn signature(&self) -> i64 {
        self.entries.iter().map(|a| if a.is_positive() { 1 } else { -1 }).sum()
    }

    pub fn product(&self) -> Rational {
        self.entries.iter().fold(Rational::one(), |acc, a| acc * a)
    }
}

fn check_symmetric(g: &QMatrix) -> Result<()> {
    if !g.is_square() {
        return Err(Error::Shape(format!("{}x{} Gram matrix", g.rows(), g.cols())));
    }
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(())
}

/// Symmetric congruence elimination.
///
/// A zero pivot with a nonzero partner `j` in its row is repaired by replacing
/// `e_k` with `e_k ± e_j` (smallest such `j`), then the row and column are
/// cleared.
pub fn diagonalize(g: &QMatrix) -> Result<DiagonalForm> {
    check_symmetric(g)?;
    let n = g.rows();
    let mut m = g.clone();
    let mut t = QMatrix::identity(n);

    for k in 0..n {
        if m[(k, k)].is_zero() {
            let j = (k + 1..n).find(|&j| !m[(k, j)].is_zero()).ok_or(Error::Singular)?;
            let two_kj = &m[(k, j)] + &m[(k, j)];
            let sign = if (&m[(j, j)] + &two_kj).is_zero() { -Rational::one() } else { Rational::one() };
            add_multiple(&mut m, &mut t, k, j, &sign);
        }
        let pivot = m[(k, k)].clone();
        for j in k + 1..n {
            if m[(k, j)].is_zero() {
                continue;
            }
            let f = -(&m[(k, j)] / &pivot);
            add_multiple(&mut m, &mut t, j, k, &f);
        }
    }
    let entries = m.diagonal_entries();
    debug_assert!(m.is_diagonal());
    Ok(DiagonalForm { entries, transform: t })
}

/// Basis change `e_dst ← e_dst + f·e_src` applied to Gram matrix and transform.
fn add_multiple(m: &mut QMatrix, t: &mut QMatrix, dst: usize, src: usize, f: &Rational) {
    let n = m.rows();
    // columns
    for i in 0..n {
        let d = f * &m[(i, src)];
        m[(i, dst)] += d;
    }
    // rows
    for i in 0..n {
        let d = f * &m[(src, i)];
        m[(dst, i)] += d;
    }
    for i in 0..n {
        let d = f * &t[(i, src)];
        t[(i, dst)] += d;
    }
}

pub fn signature(g: &QMatrix) -> Result<i64> {
    Ok(diagonalize(g)?.signature())
}

/// Square class of `det G`.
pub fn discriminant(g: &QMatrix) -> Result<SquareClass> {
    check_symmetric(g)?;
    let det = g.determinant()?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    square_class(&det)
}

/// `ε_p = ∏_{i<j} (aᵢ, aⱼ)_p` for diagonal entries `a`.
pub fn local_invariant_of_entries(entries: &[Rational], place: &Place) -> i8 {
    if let Place::Prime(p) = place {
        if *p != BigUint::from(2u32) && entries.iter().all(|a| is_p_unit(a, p)) {
            return 1;
        }
    }
    let mut eps = 1;
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            eps *= hilbert_symbol(&entries[i], &entries[j], place).expect("nonzero diagonal entries");
        }
    }
    eps
}

pub fn local_invariant(d: &DiagonalForm, place: &Place) -> i8 {
    local_invariant_of_entries(&d.entries, place)
}

fn is_p_unit(a: &Rational, p: &BigUint) -> bool {
    let p = BigInt::from(p.clone());
    !a.numer().is_multiple_of(&p) && !a.denom().is_multiple_of(&p)
}

/// Odd primes dividing some entry's numerator or denominator.
pub fn odd_support(entries: &[Rational]) -> Vec<BigUint> {
    let mut set = BTreeSet::new();
    for a in entries {
        set.extend(odd_prime_support(a));
    }
    set.into_iter().collect()
}

fn abs_is_square(q: &Rational) -> bool {
    rational_square_root(&q.abs()).is_some()
}

fn entries_in_witt_z(entries: &[Rational]) -> bool {
    let prod = entries.iter().fold(Rational::one(), |acc, a| acc * a);
    abs_is_square(&prod)
        && odd_support(entries)
            .into_iter()
            .all(|p| local_invariant_of_entries(entries, &Place::Prime(p)) == 1)
}

/// Whether the form is rationally a sum of signed squares: `|a₁⋯a_r|` is a
/// square and `ε_p = 1` at every odd prime.
pub fn in_witt_z(g: &QMatrix) -> Result<bool> {
    Ok(entries_in_witt_z(&diagonalize(g)?.entries))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalValue {
    pub place: String,
    pub value: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QFormInvariants {
    pub rank: usize,
    pub signature: i64,
    pub discriminant: SquareClass,
    /// Odd primes in the support, then `2` and `inf` (diagnostic only).
    pub local: Vec<LocalValue>,
}

impl QFormInvariants {
    pub fn epsilon_at(&self, place: &str) -> i8 {
        self.local.iter().find(|l| l.place == place).map_or(1, |l| l.value)
    }
}

pub fn invariants(g: &QMatrix) -> Result<QFormInvariants> {
    let d = diagonalize(g)?;
    invariants_of_diagonal(&d)
}

pub fn invariants_of_diagonal(d: &DiagonalForm) -> Result<QFormInvariants> {
    let mut local: Vec<LocalValue> = odd_support(&d.entries)
        .into_iter()
        .map(|p| {
            let value = local_invariant(d, &Place::Prime(p.clone()));
            LocalValue { place: p.to_string(), value }
        })
        .collect();
    for place in [Place::Prime(BigUint::from(2u32)), Place::Infinity] {
        local.push(LocalValue { place: place.to_string(), value: local_invariant(d, &place) });
    }
    let discriminant = if d.entries.is_empty() { SquareClass::one() } else { square_class(&d.product())? };
    Ok(QFormInvariants { rank: d.rank(), signature: d.signature(), discriminant, local })
}

// ---------------------------------------------------------------------------
// Integrality over all orientations
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseTag {
    #[serde(rename = "odd-rank")]
    OddRank,
    /// `r ≡ 0 (4), ε = +1` or `r ≡ 2 (4), ε = -1`: orientation-independent.
    #[serde(rename = "even-•")]
    EvenSingle,
    /// `r ≡ 0 (4), ε = -1` or `r ≡ 2 (4), ε = +1`: only `p ≡ 1 (4)` matter.
    #[serde(rename = "even-••")]
    EvenDouble,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralityVerdict {
    pub passes: bool,
    pub case_tag: CaseTag,
    /// `λ` such that the form of the orientation `λω` (Gram `λ⁻¹G`) is in `W(Z)`.
    pub witness_lambda: Option<Rational>,
    pub failing_prime: Option<BigUint>,
    pub discriminant_ok: bool,
    /// Odd primes where `ε_p = -1` for the form that was tested.
    pub bad_primes: Vec<BigUint>,
    pub primes_examined: Vec<BigUint>,
}

/// Decides whether some orientation `λω` makes the middle form integral.
///
/// Odd rank: rescale by `a₁⋯a_r` so the discriminant is a square, then test
/// `ε_p` at odd primes. Even rank: classify by `r mod 4` and the sign of
/// `a₁⋯a_r`; case (•) needs `ε_p = 1` at all odd primes, case (••) only at
/// primes `≡ 1 (mod 4)` (the rest are cleared by `λ = ∏ bad primes`).
pub fn integrality_over_orientations(space: &InnerProductSpace) -> Result<IntegralityVerdict> {
    integrality_of_gram(space.gram())
}

pub fn integrality_of_gram(g: &QMatrix) -> Result<IntegralityVerdict> {
    let d = diagonalize(g)?;
    let r = d.rank();
    let prod = d.product();

    let verdict = if r % 2 == 1 {
        let scaled: Vec<Rational> = d.entries.iter().map(|a| a * &prod).collect();
        let primes = odd_support(&scaled);
        let bad: Vec<BigUint> = primes
            .iter()
            .filter(|p| local_invariant_of_entries(&scaled, &Place::Prime((*p).clone())) == -1)
            .cloned()
            .collect();
        let passes = bad.is_empty();
        IntegralityVerdict {
            passes,
            case_tag: CaseTag::OddRank,
            witness_lambda: passes.then(|| prod.recip()),
            failing_prime: bad.first().cloned(),
            discriminant_ok: true,
            bad_primes: bad,
            primes_examined: primes,
        }
    } else {
        let eps_sign = if prod.is_negative() { -1 } else { 1 };
        let case_tag = match (r % 4, eps_sign) {
            (0, 1) | (2, -1) => CaseTag::EvenSingle,
            _ => CaseTag::EvenDouble,
        };
        let discriminant_ok = abs_is_square(&prod);
        let primes = odd_support(&d.entries);
        let bad: Vec<BigUint> = primes
            .iter()
            .filter(|p| local_invariant(&d, &Place::Prime((*p).clone())) == -1)
            .cloned()
            .collect();
        let one_mod_4 = |p: &&BigUint| (*p % 4u32) == BigUint::one();
        let (local_ok, failing_prime) = match case_tag {
            CaseTag::EvenSingle => (bad.is_empty(), bad.first().cloned()),
            _ => {
                let f = bad.iter().find(one_mod_4).cloned();
                (f.is_none(), f)
            }
        };
        let passes = discriminant_ok && local_ok;
        let witness_lambda = passes.then(|| match case_tag {
            CaseTag::EvenSingle => Rational::one(),
            _ => Rational::from_integer(BigInt::from(bad.iter().product::<BigUint>())),
        });
        IntegralityVerdict {
            passes,
            case_tag,
            witness_lambda,
            failing_prime,
            discriminant_ok,
            bad_primes: bad,
            primes_examined: primes,
        }
    };

    if let Some(lambda) = &verdict.witness_lambda {
        let rescaled: Vec<Rational> = d.entries.iter().map(|a| a / lambda).collect();
        if !entries_in_witt_z(&rescaled) {
            return Err(Error::Internal(format!(
                "witness orientation {} does not give an integral form",
                format_rational(lambda)
            )));
        }
    }
    Ok(verdict)
}

// ---------------------------------------------------------------------------
// Explicit sign-diagonal bases
// ---------------------------------------------------------------------------

/// Bounds for [`sign_diagonal_witness`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessSearch {
    /// Largest absolute value of a trial coordinate.
    pub height: u64,
    /// Maximum number of trial vectors per split.
    pub budget: u64,
}

impl Default for WitnessSearch {
    fn default() -> Self {
        WitnessSearch { height: 50, budget: 1_000_000 }
    }
}

/// Searches for `T` with `TᵀGT = diag(1, …, 1, -1, …, -1)`.
///
/// Repeatedly represents `+1` (while positive squares remain, else `-1`) by
/// the current diagonal form using integer trial vectors `x` whose value is a
/// rational square, splits that vector off and recurses on its orthogonal
/// complement. Returns `Ok(None)` when the search bound is exhausted; a
/// witness always exists when [`in_witt_z`] holds.
pub fn sign_diagonal_witness(g: &QMatrix, search: WitnessSearch) -> Result<Option<QMatrix>> {
    let d = diagonalize(g)?;
    if !entries_in_witt_z(&d.entries) {
        return Err(Error::Input("form is not a sum of signed squares over Q".into()));
    }
    let n = g.rows();
    let mut positives = ((n as i64 + d.signature()) / 2) as usize;

    // current basis (columns in original coordinates) and its diagonal Gram
    let mut basis: Vec<Vec<Rational>> = (0..n).map(|j| d.transform.column(j)).collect();
    let mut entries = d.entries.clone();
    let mut plus_cols: Vec<Vec<Rational>> = Vec::new();
    let mut minus_cols: Vec<Vec<Rational>> = Vec::new();

    while !entries.is_empty() {
        let target_positive = positives > 0;
        let Some(v) = represent_unit(&entries, target_positive, search) else {
            return Ok(None);
        };
        let k = entries.len();
        let new_col = combine(&basis, &v);
        if target_positive {
            plus_cols.push(new_col);
            positives -= 1;
        } else {
            minus_cols.push(new_col);
        }
        if k == 1 {
            break;
        }
        // orthogonal complement of v with respect to diag(entries)
        let w: Vec<Rational> = entries.iter().zip(&v).map(|(a, x)| a * x).collect();
        let pivot = w.iter().position(|x| !x.is_zero()).expect("v is anisotropic");
        let complement: Vec<Vec<Rational>> = (0..k)
            .filter(|&j| j != pivot)
            .map(|j| {
                let mut u = vec![Rational::zero(); k];
                u[j] = Rational::one();
                u[pivot] = -(&w[j] / &w[pivot]);
                u
            })
            .collect();
        let mut gram = QMatrix::zeros(k - 1, k - 1);
        for (i, ui) in complement.iter().enumerate() {
            for (j, uj) in complement.iter().enumerate() {
                gram[(i, j)] = (0..k).map(|t| &entries[t] * &ui[t] * &uj[t]).sum();
            }
        }
        let sub = diagonalize(&gram)?;
        let mut next_basis = Vec::with_capacity(k - 1);
        for c in 0..k - 1 {
            // complement vectors combined by the sub-diagonalization
            let mut coords = vec![Rational::zero(); k];
            for (i, ui) in complement.iter().enumerate() {
                let f = &sub.transform[(i, c)];
                if f.is_zero() {
                    continue;
                }
                for t in 0..k {
                    coords[t] += f * &ui[t];
                }
            }
            next_basis.push(combine(&basis, &coords));
        }
        basis = next_basis;
        entries = sub.entries;
    }

    let cols: Vec<Vec<Rational>> = plus_cols.into_iter().chain(minus_cols).collect();
    let mut t = QMatrix::zeros(n, n);
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            t[(i, j)] = col[i].clone();
        }
    }
    let check = g.congruent(&t);
    let ok = check.is_diagonal() && check.diagonal_entries().iter().all(|x| x.abs().is_one());
    if !ok {
        return Err(Error::Internal("sign-diagonal witness failed verification".into()));
    }
    Ok(Some(t))
}

fn combine(basis: &[Vec<Rational>], coords: &[Rational]) -> Vec<Rational> {
    let n = basis[0].len();
    let mut out = vec![Rational::zero(); n];
    for (b, c) in basis.iter().zip(coords) {
        if c.is_zero() {
            continue;
        }
        for i in 0..n {
            out[i] += c * &b[i];
        }
    }
    out
}

/// Finds rational `v` with `Σ aᵢ vᵢ² = ±1`.
fn represent_unit(entries: &[Rational], positive: bool, search: WitnessSearch) -> Option<Vec<Rational>> {
    // scale to integer coefficients: Σ aᵢxᵢ² = N / L with N = Σ cᵢxᵢ²
    let l = entries.iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
    let coeffs: Vec<BigInt> = entries.iter().map(|a| a.numer() * (&l / a.denom())).collect();
    let k = entries.len();
    let mut budget = search.budget;
    // per-coordinate value order 1, -1, 2, -2, …, 0; first coordinate most significant
    let order = |s: i64| -> Vec<i64> {
        let mut v = Vec::new();
        for t in 1..=s {
            v.push(t);
            v.push(-t);
        }
        v.push(0);
        v
    };
    for shell in 1..=search.height as i64 {
        let values = order(shell);
        let mut idx = vec![0usize; k];
        'odometer: loop {
            let x: Vec<i64> = idx.iter().map(|&i| values[i]).collect();
            let on_shell = x.iter().any(|v| v.abs() == shell);
            let first_nonzero_positive = x.iter().find(|v| **v != 0).is_some_and(|v| *v > 0);
            if on_shell && first_nonzero_positive {
                if budget == 0 {
                    return None;
                }
                budget -= 1;
                let n: BigInt = coeffs.iter().zip(&x).map(|(c, xi)| c * BigInt::from(xi * xi)).sum();
                let signed = if positive { n } else { -n };
                if signed.is_positive() {
                    // value = signed / l is a square iff signed·l is a square
                    if let Some(root) = integer_square_root(&(&signed * &l)) {
                        let scale = Rational::new(l.clone(), root);
                        return Some(x.iter().map(|xi| Rational::from_integer(BigInt::from(*xi)) * &scale).collect());
                    }
                }
            }
            for i in (0..k).rev() {
                idx[i] += 1;
                if idx[i] < values.len() {
                    continue 'odometer;
                }
                idx[i] = 0;
            }
            break;
        }
    }
    None
}
