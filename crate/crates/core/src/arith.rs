//! Exact integer and rational number theory.
//!
//! Factorization, square classes of `Q*/Q*²`, Legendre and Hilbert symbols,
//! and sums of squares. Everything here works on arbitrary-precision values;
//! the inputs met in practice are small, so the algorithms favour clarity.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field: exact rationals, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` (optional sign, surrounding whitespace ignored).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::InvalidRational(text.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Serde helper writing a rational as its canonical string.
pub fn serialize_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

/// Sign of a nonzero rational as `+1`/`-1`, or `0`.
pub fn sign(q: &Rational) -> i8 {
    match q.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

// ---------------------------------------------------------------------------
// Primality and factorization
// ---------------------------------------------------------------------------

const TRIAL_LIMIT: u32 = 1_000_000;

// The first 13 primes form a deterministic Miller-Rabin witness set below 3.3e24.
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const MR_EXTRA: [u32; 7] = [43, 47, 53, 59, 61, 67, 71];

/// Miller-Rabin primality test; deterministic below 3.3·10²⁴.
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for p in MR_BASES.iter().chain(MR_EXTRA.iter()) {
        let p = BigUint::from(*p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in MR_BASES.iter().chain(MR_EXTRA.iter()) {
        let mut x = BigUint::from(*a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_prime_u64(n: u64) -> bool {
    is_prime(&BigUint::from(n))
}

/// Prime factorization of `n ≥ 1`, primes strictly increasing.
///
/// Trial division up to 10⁶, then Brent's variant of Pollard rho on the
/// remaining cofactor.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    assert!(!n.is_zero(), "factorize: n must be positive");
    let mut factors: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut rest = n.clone();

    let mut d: u32 = 2;
    while d <= TRIAL_LIMIT {
        if rest.bits() <= 64 {
            let r = rest.to_u64().unwrap();
            if (d as u64) * (d as u64) > r {
                break;
            }
        }
        if (&rest % d).is_zero() {
            let mut e = 0;
            while (&rest % d).is_zero() {
                rest /= d;
                e += 1;
            }
            factors.insert(BigUint::from(d), e);
        }
        d += if d == 2 { 1 } else { 2 };
    }

    if !rest.is_one() {
        let mut stack = vec![rest];
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            if is_prime(&m) {
                *factors.entry(m).or_insert(0) += 1;
                continue;
            }
            if let Some(r) = exact_sqrt(&m) {
                stack.push(r.clone());
                stack.push(r);
                continue;
            }
            let f = pollard_brent(&m);
            let g = &m / &f;
            stack.push(f);
            stack.push(g);
        }
    }
    factors.into_iter().collect()
}

fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BATCH: u64 = 64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1u32;
    }
}

fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Integer square root if `n` is a perfect square (negative values are not).
pub fn integer_square_root(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// `Some(s)` with `s ≥ 0` and `s² = q`, when `q` is the square of a rational.
pub fn rational_square_root(q: &Rational) -> Option<Rational> {
    let n = integer_square_root(q.numer())?;
    let d = integer_square_root(q.denom())?;
    Some(Rational::new(n, d))
}

pub fn is_rational_square(q: &Rational) -> bool {
    rational_square_root(q).is_some()
}

// ---------------------------------------------------------------------------
// Square classes
// ---------------------------------------------------------------------------

/// A coset of `Q*/Q*²`, represented by `sign · ∏ primes` with distinct primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SquareClass {
    pub sign: i8,
    #[serde(with = "biguint_vec_str")]
    pub primes: Vec<BigUint>,
}

impl SquareClass {
    pub fn one() -> Self {
        SquareClass { sign: 1, primes: Vec::new() }
    }

    pub fn is_one(&self) -> bool {
        self.sign == 1 && self.primes.is_empty()
    }

    /// True when the class is `±1`, i.e. the absolute value is a square.
    pub fn abs_is_square(&self) -> bool {
        self.primes.is_empty()
    }

    /// The canonical squarefree integer representative.
    pub fn representative(&self) -> BigInt {
        let mag: BigUint = self.primes.iter().product();
        let mag = BigInt::from(mag);
        if self.sign < 0 {
            -mag
        } else {
            mag
        }
    }

    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        let mut primes: Vec<BigUint> = Vec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.primes, &other.primes);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i] < b[j]) {
                primes.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j] < a[i] {
                primes.push(b[j].clone());
                j += 1;
            } else {
                i += 1;
                j += 1;
            }
        }
        SquareClass { sign: self.sign * other.sign, primes }
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.representative())
    }
}

mod biguint_vec_str {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|p| p.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        raw.iter()
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Square class of a nonzero rational.
pub fn square_class(q: &Rational) -> Result<SquareClass> {
    if q.is_zero() {
        return Err(Error::ZeroArgument("square_class"));
    }
    let sign = if q.is_negative() { -1 } else { 1 };
    let mut parity: BTreeMap<BigUint, u32> = BTreeMap::new();
    for part in [q.numer().magnitude(), q.denom().magnitude()] {
        if part.is_one() {
            continue;
        }
        for (p, e) in factorize(part) {
            *parity.entry(p).or_insert(0) += e;
        }
    }
    let primes = parity
        .into_iter()
        .filter(|(_, e)| e % 2 == 1)
        .map(|(p, _)| p)
        .collect();
    Ok(SquareClass { sign, primes })
}

/// Odd primes dividing the numerator or denominator of `q`.
pub fn odd_prime_support(q: &Rational) -> Vec<BigUint> {
    let mut out = Vec::new();
    for part in [q.numer().magnitude(), q.denom().magnitude()] {
        if part.is_zero() || part.is_one() {
            continue;
        }
        for (p, _) in factorize(part) {
            if p != BigUint::from(2u32) && !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Symbols
// ---------------------------------------------------------------------------

/// A place of `Q`: a finite prime or the real place.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Prime(BigUint),
    Infinity,
}

impl Place {
    pub fn prime(p: u64) -> Result<Place> {
        let p = BigUint::from(p);
        if !is_prime(&p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        Ok(Place::Prime(p))
    }

    pub fn prime_big(p: BigUint) -> Result<Place> {
        if !is_prime(&p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        Ok(Place::Prime(p))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

/// Legendre symbol `(a/p)` for an odd prime `p`.
pub fn legendre(a: &BigInt, p: &BigUint) -> Result<i8> {
    if p.is_even() || !is_prime(p) {
        return Err(Error::NotOddPrime(p.to_string()));
    }
    Ok(legendre_unchecked(a, p))
}

fn legendre_unchecked(a: &BigInt, p: &BigUint) -> i8 {
    let pi = BigInt::from(p.clone());
    let r = a.mod_floor(&pi).to_biguint().unwrap();
    if r.is_zero() {
        return 0;
    }
    let e = (p - 1u32) >> 1;
    if r.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// Splits `n ≠ 0` as `p^v · u` with `p ∤ u`.
fn split_valuation(n: &BigInt, p: &BigUint) -> (u32, BigInt) {
    let pi = BigInt::from(p.clone());
    let mut u = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = u.div_rem(&pi);
        if !r.is_zero() {
            break;
        }
        u = q;
        v += 1;
    }
    (v, u)
}

/// An integer in the same square class as `q` (namely numerator·denominator).
fn integral_representative(q: &Rational) -> BigInt {
    q.numer() * q.denom()
}

/// Hilbert symbol `(a, b)_v` over `Q`.
///
/// Odd `p`: `(-1)^{αβε(p)} (u/p)^β (v/p)^α`; `p = 2`:
/// `(-1)^{ε(u)ε(v) + αω(v) + βω(u)}`; real place: `-1` iff both are negative.
pub fn hilbert_symbol(a: &Rational, b: &Rational, place: &Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument("hilbert_symbol"));
    }
    let p = match place {
        Place::Infinity => {
            return Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 });
        }
        Place::Prime(p) => p,
    };
    let a = integral_representative(a);
    let b = integral_representative(b);
    let (alpha, u) = split_valuation(&a, p);
    let (beta, v) = split_valuation(&b, p);

    if *p == BigUint::from(2u32) {
        let u8_ = residue_mod8(&u);
        let v8 = residue_mod8(&v);
        let eps = |x: u32| ((x - 1) / 2) % 2;
        let omega = |x: u32| ((x * x - 1) / 8) % 2;
        let exponent = eps(u8_) * eps(v8) + (alpha % 2) * omega(v8) + (beta % 2) * omega(u8_);
        return Ok(if exponent % 2 == 0 { 1 } else { -1 });
    }

    let eps_p = {
        let r: BigUint = (p - 1u32) >> 1;
        if r.is_even() {
            0
        } else {
            1
        }
    };
    let mut result: i8 = if (alpha % 2 == 1) && (beta % 2 == 1) && eps_p == 1 { -1 } else { 1 };
    if beta % 2 == 1 {
        result *= legendre_unchecked(&u, p);
    }
    if alpha % 2 == 1 {
        result *= legendre_unchecked(&v, p);
    }
    Ok(result)
}

fn residue_mod8(n: &BigInt) -> u32 {
    n.mod_floor(&BigInt::from(8)).to_u32().unwrap()
}

// ---------------------------------------------------------------------------
// Sums of squares
// ---------------------------------------------------------------------------

/// True iff `q ≥ 0` is a sum of two rational squares: every prime `≡ 3 (mod 4)`
/// occurs to an even power in numerator·denominator.
pub fn is_sum_two_rational_squares(q: &Rational) -> bool {
    if q.is_zero() {
        return true;
    }
    if q.is_negative() {
        return false;
    }
    let n = integral_representative(q).to_biguint().unwrap();
    factorize(&n)
        .into_iter()
        .all(|(p, e)| e % 2 == 0 || (&p % 4u32) != BigUint::from(3u32))
}

fn isqrt_u64(n: u64) -> u64 {
    n.sqrt()
}

/// A representation of `n` as a sum of exactly `k` squares (zeros allowed),
/// sorted descending. Largest first part wins; `None` if none exists.
pub fn sum_of_squares(n: u64, k: usize) -> Option<Vec<u64>> {
    fn rec(n: u64, k: usize, cap: u64, acc: &mut Vec<u64>) -> bool {
        if k == 0 {
            return n == 0;
        }
        if n == 0 {
            acc.extend(std::iter::repeat_n(0, k));
            return true;
        }
        let top = isqrt_u64(n).min(cap);
        // k parts each at most `top`: prune when even that cannot reach n.
        let mut a = top;
        loop {
            if (k as u128) * (a as u128) * (a as u128) < n as u128 {
                return false;
            }
            acc.push(a);
            if rec(n - a * a, k - 1, a, acc) {
                return true;
            }
            acc.pop();
            if a == 0 {
                return false;
            }
            a -= 1;
        }
    }
    let mut acc = Vec::with_capacity(k);
    rec(n, k, u64::MAX, &mut acc).then_some(acc)
}

/// `n = α₁² + α₂² + α₃² + α₄²`, sorted descending.
///
/// Prefers representations with the fewest nonzero terms, then the largest
/// leading term (so `61 → (6, 5, 0, 0)`).
pub fn four_square_decompose(n: u64) -> [u64; 4] {
    for k in 0..=4 {
        if k == 0 {
            if n == 0 {
                return [0; 4];
            }
            continue;
        }
        if let Some(parts) = sum_of_squares(n, k) {
            if parts.iter().filter(|&&x| x != 0).count() == k {
                let mut out = [0u64; 4];
                out[..k].copy_from_slice(&parts);
                return out;
            }
        }
    }
    unreachable!("every nonnegative integer is a sum of four squares")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn trial_division_oracle(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= n {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            if e > 0 {
                out.push((d, e));
            }
            d += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    fn as_u64(v: Vec<(BigUint, u32)>) -> Vec<(u64, u32)> {
        v.into_iter().map(|(p, e)| (p.to_u64().unwrap(), e)).collect()
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(&big(1)).is_empty());
        assert_eq!(as_u64(factorize(&big(61))), vec![(61, 1)]);
        assert_eq!(as_u64(factorize(&big(6400))), vec![(2, 8), (5, 2)]);
        assert_eq!(trial_division_oracle(6400), vec![(2, 8), (5, 2)]);
    }

    #[test]
    fn factorize_beyond_trial_limit() {
        // two primes above 10^6 and a square of one
        let p = 1_000_003u64;
        let q = 1_000_033u64;
        let n = BigUint::from(p) * BigUint::from(q) * BigUint::from(p);
        assert_eq!(as_u64(factorize(&n)), vec![(p, 2), (q, 1)]);
        let big_prime: BigUint = "170141183460469231731687303715884105727".parse().unwrap();
        assert!(is_prime(&big_prime));
        let n = &big_prime * BigUint::from(1_000_000_007u64);
        let f = factorize(&n);
        assert_eq!(f.len(), 2);
        assert_eq!(f[1].0, big_prime);
    }

    #[test]
    fn square_class_examples() {
        assert_eq!(square_class(&int(-9)).unwrap(), SquareClass { sign: -1, primes: vec![] });
        assert_eq!(square_class(&rat(256, 25)).unwrap(), SquareClass::one());
        assert_eq!(
            square_class(&int(60)).unwrap(),
            SquareClass { sign: 1, primes: vec![big(3), big(5)] }
        );
        assert_eq!(square_class(&Rational::zero()), Err(Error::ZeroArgument("square_class")));
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(&BigInt::from(4), &big(5)).unwrap(), 1);
        assert_eq!(legendre(&BigInt::from(2), &big(5)).unwrap(), -1);
        assert_eq!(legendre(&BigInt::from(5), &big(5)).unwrap(), 0);
        assert!(legendre(&BigInt::from(1), &big(2)).is_err());
        assert!(legendre(&BigInt::from(1), &big(9)).is_err());
    }

    /// Solubility oracle: a primitive solution of `a x² + b y² = z²` modulo
    /// `p^k` (not all of x, y, z divisible by p).
    fn primitive_solution_mod(a: i64, b: i64, p: i64, k: u32) -> bool {
        let m = p.pow(k);
        let mut any_square = vec![false; m as usize];
        let mut unit_square = vec![false; m as usize];
        for z in 0..m {
            let s = (z * z % m) as usize;
            any_square[s] = true;
            if z % p != 0 {
                unit_square[s] = true;
            }
        }
        let (a, b) = (a.rem_euclid(m), b.rem_euclid(m));
        for x in 0..m {
            for y in 0..m {
                let lhs = ((a * x % m) * x % m + (b * y % m) * y % m) % m;
                let ok = if x % p != 0 || y % p != 0 { any_square[lhs as usize] } else { unit_square[lhs as usize] };
                if ok {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn hilbert_symbol_examples() {
        let p5 = Place::prime(5).unwrap();
        let p3 = Place::prime(3).unwrap();
        assert_eq!(hilbert_symbol(&int(5), &int(5), &p5).unwrap(), 1);
        assert_eq!(hilbert_symbol(&int(15), &int(15), &p3).unwrap(), -1);
        assert_eq!(hilbert_symbol(&int(-1), &int(-1), &Place::Infinity).unwrap(), -1);
        for v in [Place::Infinity, Place::prime(2).unwrap(), p3.clone(), p5.clone()] {
            assert_eq!(hilbert_symbol(&int(1), &rat(-7, 3), &v).unwrap(), 1);
        }
        assert!(hilbert_symbol(&int(0), &int(1), &p3).is_err());
    }

    #[test]
    fn hilbert_symbol_matches_solubility_oracle() {
        assert!(primitive_solution_mod(5, 5, 5, 4));
        assert!(!primitive_solution_mod(15, 15, 3, 4));
        for (a, b, p) in [(5, 5, 5), (15, 15, 3), (3, 5, 3), (2, 3, 3), (-1, 3, 3), (7, 5, 5), (10, 2, 5)] {
            let oracle = if primitive_solution_mod(a, b, p, 4) { 1 } else { -1 };
            let got = hilbert_symbol(&int(a), &int(b), &Place::prime(p as u64).unwrap()).unwrap();
            assert_eq!(got, oracle, "({a},{b})_{p}");
        }
    }

    #[test]
    fn dyadic_symbol_known_values() {
        let two = Place::prime(2).unwrap();
        assert_eq!(hilbert_symbol(&int(-1), &int(-1), &two).unwrap(), -1);
        assert_eq!(hilbert_symbol(&int(2), &int(2), &two).unwrap(), 1);
        assert_eq!(hilbert_symbol(&int(2), &int(3), &two).unwrap(), -1);
        assert_eq!(hilbert_symbol(&int(2), &int(5), &two).unwrap(), -1);
        assert_eq!(hilbert_symbol(&int(3), &int(3), &two).unwrap(), -1);
        assert_eq!(hilbert_symbol(&int(5), &int(5), &two).unwrap(), 1);
    }

    #[test]
    fn two_squares_examples() {
        assert!(is_sum_two_rational_squares(&int(1)));
        assert!(!is_sum_two_rational_squares(&int(3)));
        assert!(is_sum_two_rational_squares(&int(2)));
        assert!(is_sum_two_rational_squares(&rat(5, 9)));
        assert!(!is_sum_two_rational_squares(&rat(1, 3)));
        assert!(!is_sum_two_rational_squares(&int(-1)));
        assert!(is_sum_two_rational_squares(&int(0)));
        assert!(is_sum_two_rational_squares(&int(9)));
    }

    fn exhaustive_four_squares(n: u64) -> Option<[u64; 4]> {
        let r = isqrt_u64(n);
        for a in (0..=r).rev() {
            for b in (0..=a).rev() {
                for c in (0..=b).rev() {
                    for d in (0..=c).rev() {
                        if a * a + b * b + c * c + d * d == n {
                            return Some([a, b, c, d]);
                        }
                    }
                }
            }
        }
        None
    }

    #[test]
    fn four_square_examples() {
        assert_eq!(four_square_decompose(0), [0, 0, 0, 0]);
        assert_eq!(four_square_decompose(61), [6, 5, 0, 0]);
        assert_eq!(four_square_decompose(7), [2, 1, 1, 1]);
        assert_eq!(exhaustive_four_squares(7), Some([2, 1, 1, 1]));
    }

    #[test]
    fn lambda_lambda_symbol_pattern() {
        // (λ,λ)_p for λ a product of distinct odd primes
        let qs = [3u64, 5, 7, 13];
        let lambda = int(qs.iter().product::<u64>() as i64);
        for p in [3u64, 5, 7, 11, 13, 17, 19] {
            let got = hilbert_symbol(&lambda, &lambda, &Place::prime(p).unwrap()).unwrap();
            let expected = if qs.contains(&p) && (p - 1) / 2 % 2 == 1 { -1 } else { 1 };
            assert_eq!(got, expected, "p = {p}");
        }
        for p in [2u64, 3, 5, 7] {
            assert_eq!(hilbert_symbol(&int(2), &int(2), &Place::prime(p).unwrap()).unwrap(), 1);
        }
    }

    proptest! {
        #[test]
        fn factorization_roundtrips(n in 1u64..5_000_000_000u64) {
            let f = factorize(&BigUint::from(n));
            let mut prod = BigUint::one();
            let mut last = BigUint::zero();
            for (p, e) in &f {
                prop_assert!(is_prime(p));
                prop_assert!(*p > last);
                prop_assert!(*e >= 1);
                last = p.clone();
                prod *= p.pow(*e);
            }
            prop_assert_eq!(prod, BigUint::from(n));
        }

        #[test]
        fn four_squares_sum(n in 0u64..200_000) {
            let [a, b, c, d] = four_square_decompose(n);
            prop_assert_eq!(a * a + b * b + c * c + d * d, n);
            prop_assert!(a >= b && b >= c && c >= d);
        }

        #[test]
        fn square_class_quotient_is_square(n in -100_000i64..100_000, d in 1i64..1000) {
            prop_assume!(n != 0);
            let q = rat(n, d);
            let class = square_class(&q).unwrap();
            let rep = Rational::from_integer(class.representative());
            prop_assert!(is_rational_square(&(q / rep)));
        }
    }
}
