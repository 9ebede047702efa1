//! Smoothability of Poincaré duality algebras in formal dimension `m ≤ 11`.
//!
//! Off `m ≡ 0 (mod 4)` every such algebra is smoothable. For `m = 4, 8` the
//! answer is the integrality test of [`qform::integrality_over_orientations`];
//! on success a witness records the connected-sum model (`m = 4`) or an
//! integer solution of `a + b = σ`, `25a + 18b = Σ αᵢ²` giving Pontrjagin
//! data `q₂ = (10a + 9b)ω`, `q₁ = Σ αᵢxᵢ` (`m = 8`). From `m = 12` on the
//! integrality condition no longer suffices and the verdict is "undecided".

use num_traits::{One, Signed};
use serde::Serialize;

use crate::arith::{format_rational, four_square_decompose, sum_of_squares, Rational};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::qform::{self, IntegralityVerdict, WitnessSearch};
use crate::quotient::{poincare_product, InnerProductSpace, QuotientRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decision {
    Smoothable,
    NotSmoothable,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dim4Witness {
    pub t: u64,
    pub s: u64,
    pub model: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dim8Witness {
    pub a: i64,
    pub b: i64,
    pub alphas: Vec<i64>,
    pub q1_coeffs: Vec<i64>,
    pub q2_coeff: i64,
    /// Columns of a basis in which the form is `diag(1, …, 1, -1, …, -1)`,
    /// when the bounded search found one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign_diagonal_basis: Option<Vec<Vec<String>>>,
}

impl Dim8Witness {
    pub fn check(&self, sigma: i64) -> bool {
        let squares: i64 = self.alphas.iter().map(|a| a * a).sum();
        self.a + self.b == sigma
            && 25 * self.a + 18 * self.b == squares
            && self.q2_coeff == 10 * self.a + 9 * self.b
            && 7 * self.q2_coeff - squares == 45 * sigma
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Dim4(Dim4Witness),
    Dim8(Dim8Witness),
    ProductModel { model: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothVerdict {
    pub decision: Decision,
    pub reason: String,
    pub formal_dimension: u32,
    /// Signature of the middle form under the orientation the verdict was
    /// computed with (before any flip made for the witness).
    pub signature: Option<i64>,
    /// Orientation multiplier used for the witness, sign flip included.
    pub orientation_lambda: Option<Rational>,
    pub witness: Option<Witness>,
    pub obstruction: Option<IntegralityVerdict>,
}

/// Verdict for a validated algebra, reading the middle form against the
/// Eisenbud–Levine orientation.
pub fn smoothable(ring: &QuotientRing, search: WitnessSearch) -> Result<SmoothVerdict> {
    let m = ring.formal_dimension();
    if !m.is_multiple_of(4) {
        return smoothable_pda(None, m, search);
    }
    let omega = ring.el_orientation()?;
    let space = ring.middle_form(&omega, None)?;
    smoothable_pda(Some(&space), m, search)
}

/// Verdict for an arbitrary 1-connected Poincaré duality algebra given by
/// its middle form (required when `m ≡ 0 (mod 4)`) and formal dimension.
pub fn smoothable_pda(space: Option<&InnerProductSpace>, m: u32, search: WitnessSearch) -> Result<SmoothVerdict> {
    if !m.is_multiple_of(4) {
        let decision = if m <= 11 { Decision::Smoothable } else { Decision::Undecided };
        let reason = if m <= 11 { "no middle form; rational surgery applies" } else { "formal dimension at least 12" };
        return Ok(SmoothVerdict {
            decision,
            reason: reason.into(),
            formal_dimension: m,
            signature: None,
            orientation_lambda: None,
            witness: None,
            obstruction: None,
        });
    }
    if m == 0 {
        return Ok(SmoothVerdict {
            decision: Decision::Smoothable,
            reason: "point".into(),
            formal_dimension: 0,
            signature: Some(1),
            orientation_lambda: Some(Rational::one()),
            witness: Some(Witness::ProductModel { model: "point".into() }),
            obstruction: None,
        });
    }
    let space = space.ok_or_else(|| Error::Input(format!("middle form required in formal dimension {m}")))?;
    let sigma = space.signature();
    let verdict = qform::integrality_over_orientations(space)?;

    if m >= 12 {
        let reason = if verdict.passes {
            "integrality holds but does not decide smoothability from dimension 12 on"
        } else {
            "integrality fails; smoothability outside the decided range"
        };
        return Ok(SmoothVerdict {
            decision: Decision::Undecided,
            reason: reason.into(),
            formal_dimension: m,
            signature: Some(sigma),
            orientation_lambda: verdict.witness_lambda.clone(),
            witness: None,
            obstruction: Some(verdict),
        });
    }

    let Some(lambda) = verdict.witness_lambda.clone() else {
        return Ok(SmoothVerdict {
            decision: Decision::NotSmoothable,
            reason: "no orientation makes the middle form a sum of signed squares".into(),
            formal_dimension: m,
            signature: Some(sigma),
            orientation_lambda: None,
            witness: None,
            obstruction: Some(verdict),
        });
    };

    // the orientation λω has signature sign(λ)·σ; flip so it is nonnegative
    let mut lambda = lambda;
    let mut oriented_sigma = if lambda.is_negative() { -sigma } else { sigma };
    if oriented_sigma < 0 {
        lambda = -lambda;
        oriented_sigma = -oriented_sigma;
    }
    let r = space.rank() as u64;
    let witness = if m == 4 {
        Witness::Dim4(dim4_witness(oriented_sigma, r)?)
    } else {
        let t = (r + oriented_sigma as u64) / 2;
        let (a, b, alphas) = solve_sq_system(oriented_sigma, t as usize)?;
        let rescaled = space.gram().scale(&lambda.recip());
        let basis = qform::sign_diagonal_witness(&rescaled, search)?.map(|t| columns(&t));
        let w = Dim8Witness {
            a,
            b,
            q1_coeffs: alphas.clone(),
            alphas,
            q2_coeff: 10 * a + 9 * b,
            sign_diagonal_basis: basis,
        };
        if !w.check(oriented_sigma) {
            return Err(Error::Internal("dimension-8 witness fails its own equations".into()));
        }
        Witness::Dim8(w)
    };
    Ok(SmoothVerdict {
        decision: Decision::Smoothable,
        reason: "middle form is integral for a suitable orientation".into(),
        formal_dimension: m,
        signature: Some(sigma),
        orientation_lambda: Some(lambda),
        witness: Some(witness),
        obstruction: Some(verdict),
    })
}

fn columns(t: &QMatrix) -> Vec<Vec<String>> {
    (0..t.cols()).map(|j| t.column(j).iter().map(format_rational).collect()).collect()
}

/// Integers `a + b = σ`, `25a + 18b = α₁² + … + α_t²`.
///
/// Uses `25 = 5²`, `36 = 6²`, `61 = 5² + 6²` for `σ = 1, 2, 3`; otherwise
/// scans `a` by increasing `|a|` (then `|b|`) from `a ≥ ⌈−18σ/7⌉`, so that
/// `25a + 18b ≥ 0`, and takes the first value that is a sum of `t` squares.
/// `alphas` always has length `t`.
pub fn solve_sq_system(sigma: i64, t: usize) -> Result<(i64, i64, Vec<i64>)> {
    if sigma < 0 {
        return Err(Error::Input(format!("signature {sigma} must be nonnegative")));
    }
    if (t as i64) < sigma {
        return Err(Error::Infeasible(format!("{t} positive squares cannot carry signature {sigma}")));
    }
    let pad = |v: Vec<i64>| {
        let mut v = v;
        v.resize(t, 0);
        v
    };
    let table: Option<(i64, i64, Vec<i64>)> = match sigma {
        0 => Some((0, 0, vec![])),
        1 => Some((1, 0, vec![5])),
        2 => Some((0, 2, vec![6])),
        3 => Some((1, 2, vec![5, 6])),
        _ => None,
    };
    if let Some((a, b, alphas)) = table {
        if alphas.len() <= t {
            return Ok((a, b, pad(alphas)));
        }
    }

    let lower = (-18 * sigma).div_euclid(7) + i64::from((-18 * sigma).rem_euclid(7) != 0);
    let limit = 18 * sigma + 64;
    let mut candidates: Vec<i64> = (lower..=limit).collect();
    candidates.sort_by_key(|&a| (a.abs(), (sigma - a).abs(), a));
    for a in candidates {
        let b = sigma - a;
        let n = 25 * a + 18 * b;
        debug_assert!(n >= 0);
        let alphas = if t >= 4 {
            Some(four_square_decompose(n as u64).iter().map(|&x| x as i64).collect::<Vec<_>>())
        } else {
            sum_of_squares(n as u64, t).map(|v| v.into_iter().map(|x| x as i64).collect())
        };
        if let Some(alphas) = alphas {
            return Ok((a, b, pad(alphas)));
        }
    }
    Err(Error::Infeasible(format!("no solution with |a| ≤ {limit} for σ = {sigma}, t = {t}")))
}

/// `t = (r + σ)/2` copies of `CP²` and `s = (r − σ)/2` of its conjugate.
pub fn dim4_witness(sigma: i64, r: u64) -> Result<Dim4Witness> {
    if sigma.unsigned_abs() > r || (r as i64 - sigma) % 2 != 0 {
        return Err(Error::Input(format!("signature {sigma} impossible in rank {r}")));
    }
    let t = (r as i64 + sigma) as u64 / 2;
    let s = r - t;
    let model = if r == 0 {
        "S4".to_string()
    } else {
        let mut parts = vec!["CP2"; t as usize];
        parts.extend(std::iter::repeat_n("-CP2", s as usize));
        parts.join(" # ")
    };
    Ok(Dim4Witness { t, s, model })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomogeneousCase {
    pub label: String,
    pub formal_dimension: u32,
    pub degrees: Vec<u32>,
    pub middle_rank: u64,
}

/// All degree vectors `d₁ ≤ … ≤ dₙ` (`dᵢ ≥ 2`, all weights 2) with formal
/// dimension 4 or 8, with their middle Betti numbers.
pub fn homogeneous_case_table() -> Vec<HomogeneousCase> {
    const ROMAN: [&str; 5] = ["I", "II", "III", "IV", "V"];
    let mut out = Vec::new();
    for m in [4u32, 8] {
        // partitions of m/2 into parts dᵢ − 1 ≥ 1
        let mut vectors = Vec::new();
        partitions(m / 2, m / 2, &mut Vec::new(), &mut vectors);
        let mut vectors: Vec<Vec<u32>> = vectors
            .into_iter()
            .map(|p| {
                let mut d: Vec<u32> = p.iter().map(|x| x + 1).collect();
                d.sort_unstable();
                d
            })
            .collect();
        vectors.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        for (i, d) in vectors.into_iter().enumerate() {
            let degrees: Vec<u32> = d.iter().map(|x| 2 * x).collect();
            let series = poincare_product(&vec![2; d.len()], &degrees).expect("monomial complete intersection");
            out.push(HomogeneousCase {
                label: format!("{}_{}", ROMAN[i], m),
                formal_dimension: m,
                middle_rank: series[(m / 2) as usize],
                degrees: d,
            });
        }
    }
    out
}

fn partitions(n: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if n == 0 {
        out.push(acc.clone());
        return;
    }
    for part in (1..=n.min(max)).rev() {
        acc.push(part);
        partitions(n - part, part, acc, out);
        acc.pop();
    }
}

/// Signature of `∏ CP^{dᵢ−1}`: 1 when every `dᵢ` is odd, else 0.
pub fn product_model_signature(degrees: &[u32]) -> i64 {
    i64::from(degrees.iter().all(|d| d % 2 == 1))
}
