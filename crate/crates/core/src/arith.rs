//! Exact integer kernel: gcd, p-adic valuations, primality, factorization.
//!
//! Everything here is pure, deterministic and exact. Primality is
//! deterministic below [`DETERMINISTIC_PRIMALITY_BOUND`] and a strong
//! probable-prime test above it, with the uncertainty surfaced in
//! [`Primality::ProbablePrime`] rather than hidden.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;

use crate::error::{Error, PartialSplit, Result};

/// Default number of rho iterations allowed per `factor` call.
pub const DEFAULT_FACTOR_BUDGET: u64 = 10_000_000;

/// Trial division covers every divisor up to this bound before rho starts.
pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

/// The Miller-Rabin witness set {2,3,...,37} is a deterministic primality
/// certificate for all n below 3_317_044_064_679_887_385_961_981
/// (Sorenson & Webster). Above the bound the answer is probabilistic.
pub const DETERMINISTIC_PRIMALITY_BOUND_DECIMAL: &str = "3317044064679887385961981";

const MR_WITNESSES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Extra probable-prime rounds beyond the fixed witnesses; 64 rounds at
/// error <= 1/4 each put the heuristic failure probability below 2^-128.
const MR_PROBABLE_ROUNDS: usize = 64;

pub fn deterministic_primality_bound() -> BigInt {
    DETERMINISTIC_PRIMALITY_BOUND_DECIMAL.parse().unwrap()
}

/// Nonnegative greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// Largest e with p^e | n. Errors on n = 0 or composite p.
pub fn p_adic_valuation(n: &BigInt, p: &BigInt) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::domain("valuation of zero is undefined"));
    }
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    Ok(valuation_unchecked(n, p))
}

/// Valuation without the primality check; caller guarantees n != 0, p >= 2.
pub(crate) fn valuation_unchecked(n: &BigInt, p: &BigInt) -> u64 {
    debug_assert!(!n.is_zero());
    if p.to_u64() == Some(2) {
        return n.magnitude().trailing_zeros().unwrap_or(0);
    }
    let mut e = 0u64;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return e;
        }
        e += 1;
        m = q;
    }
}

/// Outcome of a primality test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Primality {
    Composite,
    /// Certified by the deterministic witness set.
    Prime,
    /// Strong probable prime above the deterministic bound; heuristic
    /// failure probability below 2^-128.
    ProbablePrime,
}

impl Primality {
    pub fn is_prime(self) -> bool {
        !matches!(self, Primality::Composite)
    }

    pub fn is_certified(self) -> bool {
        matches!(self, Primality::Prime)
    }
}

/// Primality with certainty metadata. Negative inputs are composite by
/// convention (units and negatives are never prime here).
pub fn primality(n: &BigInt) -> Primality {
    let two = BigInt::from(2u32);
    if n < &two {
        return Primality::Composite;
    }
    for &w in MR_WITNESSES.iter() {
        let wp = BigInt::from(w);
        if n == &wp {
            return Primality::Prime;
        }
        if (n % &wp).is_zero() {
            return Primality::Composite;
        }
    }
    let nm1 = n - 1u32;
    let s = nm1.magnitude().trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    for &w in MR_WITNESSES.iter() {
        if !mr_round(n, &nm1, &d, s, &BigInt::from(w)) {
            return Primality::Composite;
        }
    }
    if n < &deterministic_primality_bound() {
        return Primality::Prime;
    }
    // Deterministic pseudorandom bases derived from n itself keep the
    // whole kernel reproducible.
    let mut rng = base_rng(n);
    let bits = n.bits();
    for _ in 0..MR_PROBABLE_ROUNDS {
        let base = random_base(&mut rng, bits, n);
        if !mr_round(n, &nm1, &d, s, &base) {
            return Primality::Composite;
        }
    }
    Primality::ProbablePrime
}

pub fn is_prime(n: &BigInt) -> bool {
    primality(n).is_prime()
}

fn base_rng(n: &BigInt) -> ChaCha8Rng {
    let bytes = n.magnitude().to_bytes_le();
    let mut seed = [0u8; 32];
    for (i, b) in bytes.iter().enumerate() {
        seed[i % 32] ^= *b;
    }
    ChaCha8Rng::from_seed(seed)
}

fn random_base(rng: &mut ChaCha8Rng, bits: u64, n: &BigInt) -> BigInt {
    let mut buf = vec![0u8; (bits / 8 + 9) as usize];
    rng.fill_bytes(&mut buf);
    // Lands in [2, n - 2].
    BigInt::from(BigUint::from_bytes_le(&buf)) % (n - 3u32) + 2u32
}

/// One strong-pseudoprime round; true means "possibly prime".
fn mr_round(n: &BigInt, nm1: &BigInt, d: &BigInt, s: u64, base: &BigInt) -> bool {
    let a = base.mod_floor(n);
    if a.is_zero() {
        return true;
    }
    let mut x = a.modpow(d, n);
    if x.is_one() || &x == nm1 {
        return true;
    }
    for _ in 1..s {
        x = x.modpow(&BigInt::from(2u32), n);
        if &x == nm1 {
            return true;
        }
        if x.is_one() {
            return false;
        }
    }
    false
}

/// A complete signed prime factorization.
///
/// Invariants (checked on construction): primes strictly increasing, every
/// prime passes the primality test, exponents >= 1, and
/// `sign * prod(p^e)` reconstructs the factored integer exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    sign: i8,
    factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    pub fn new(sign: i8, factors: Vec<(BigInt, u32)>) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::domain("factorization sign must be +1 or -1"));
        }
        for window in factors.windows(2) {
            if window[0].0 >= window[1].0 {
                return Err(Error::domain("factorization primes must strictly increase"));
            }
        }
        for (p, e) in &factors {
            if *e == 0 {
                return Err(Error::domain("factorization exponents must be >= 1"));
            }
            if !is_prime(p) {
                return Err(Error::Domain(format!("factor {p} is not prime")));
            }
        }
        Ok(Factorization { sign, factors })
    }

    pub fn unit(sign: i8) -> Self {
        assert!(sign == 1 || sign == -1);
        Factorization { sign, factors: Vec::new() }
    }

    pub fn one() -> Self {
        Self::unit(1)
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn factors(&self) -> &[(BigInt, u32)] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// Exponent of p in the factorization (0 when absent).
    pub fn exponent_of(&self, p: &BigInt) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Reassembles the factored integer.
    pub fn value(&self) -> BigInt {
        let mut out = BigInt::from(self.sign);
        for (p, e) in &self.factors {
            out *= p.pow(*e);
        }
        out
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> BigInt {
        let mut out = BigInt::one();
        for (p, _) in &self.factors {
            out *= p;
        }
        out
    }

    /// Product of the distinct odd primes.
    pub fn odd_radical(&self) -> BigInt {
        let two = BigInt::from(2u32);
        let mut out = BigInt::one();
        for (p, _) in &self.factors {
            if *p != two {
                out *= p;
            }
        }
        out
    }

    /// Exact product of two factorizations.
    pub fn mul(&self, other: &Factorization) -> Factorization {
        let mut merged = self.factors.clone();
        for (p, e) in &other.factors {
            match merged.binary_search_by(|(q, _)| q.cmp(p)) {
                Ok(i) => merged[i].1 += e,
                Err(i) => merged.insert(i, (p.clone(), *e)),
            }
        }
        Factorization { sign: self.sign * other.sign, factors: merged }
    }

    /// Exact k-th power (k >= 1 keeps the invariants; k = 0 gives the unit).
    pub fn pow(&self, k: u32) -> Factorization {
        if k == 0 {
            return Factorization::one();
        }
        let sign = if k % 2 == 0 { 1 } else { self.sign };
        Factorization {
            sign,
            factors: self.factors.iter().map(|(p, e)| (p.clone(), e * k)).collect(),
        }
    }

    /// True when every prime is certified rather than merely probable.
    pub fn fully_certified(&self) -> bool {
        self.factors.iter().all(|(p, _)| primality(p).is_certified())
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Factorization {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            sign: i8,
            factors: Factors<'a>,
        }
        struct Factors<'a>(&'a [(BigInt, u32)]);
        impl Serialize for Factors<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for (p, e) in self.0 {
                    seq.serialize_element(&(p.to_string(), e))?;
                }
                seq.end()
            }
        }
        Repr { sign: self.sign, factors: Factors(&self.factors) }.serialize(s)
    }
}

/// Complete factorization with the default budget. Errors on n = 0.
pub fn factor(n: &BigInt) -> Result<Factorization> {
    factor_with(n, DEFAULT_FACTOR_BUDGET, &[])
}

pub fn factor_with_budget(n: &BigInt, budget: u64) -> Result<Factorization> {
    factor_with(n, budget, &[])
}

/// Factor with a rho-iteration budget and optional pre-split hints.
///
/// Each hint is factored first (it is expected to be a small known divisor,
/// e.g. from an algebraic identity); its primes are divided out of n before
/// generic factoring starts. Hints that do not divide n are harmless.
pub fn factor_with(n: &BigInt, budget: u64, hints: &[BigInt]) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::domain("cannot factor zero"));
    }
    let sign: i8 = if n.is_negative() { -1 } else { 1 };
    let mut remaining = n.abs();
    let mut found: Vec<(BigInt, u32)> = Vec::new();
    let mut budget_left = budget;

    let mut push = |found: &mut Vec<(BigInt, u32)>, p: BigInt, e: u32| {
        match found.binary_search_by(|(q, _)| q.cmp(&p)) {
            Ok(i) => found[i].1 += e,
            Err(i) => found.insert(i, (p, e)),
        }
    };

    for hint in hints {
        let h = hint.abs();
        if h <= BigInt::one() {
            continue;
        }
        let hf = factor_core(&h, &mut budget_left)?;
        for (p, _) in hf {
            let e = if (&remaining % &p).is_zero() {
                let mut e = 0u32;
                while (&remaining % &p).is_zero() {
                    remaining /= &p;
                    e += 1;
                }
                e
            } else {
                0
            };
            if e > 0 {
                push(&mut found, p, e);
            }
        }
    }

    match factor_core(&remaining, &mut budget_left) {
        Ok(rest) => {
            for (p, e) in rest {
                push(&mut found, p, e);
            }
            let out = Factorization { sign, factors: found };
            debug_assert_eq!(out.value(), *n);
            Ok(out)
        }
        Err(Error::FactorizationBudgetExceeded { partial }) => {
            let mut all = found;
            for (p, e) in partial.factors {
                push(&mut all, p, e);
            }
            Err(Error::FactorizationBudgetExceeded {
                partial: Box::new(PartialSplit { sign, factors: all, cofactor: partial.cofactor }),
            })
        }
        Err(e) => Err(e),
    }
}

/// Factor a positive integer; returns sorted (prime, exponent) pairs.
fn factor_core(n: &BigInt, budget_left: &mut u64) -> Result<Vec<(BigInt, u32)>> {
    debug_assert!(n.is_positive() || n.is_one());
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    if n.is_one() {
        return Ok(factors);
    }
    let mut remaining = n.clone();

    // Trial division, specialised to machine words when possible.
    let two = BigInt::from(2u32);
    let e2 = valuation_unchecked(&remaining, &two);
    if e2 > 0 {
        factors.push((two.clone(), e2 as u32));
        remaining >>= e2;
    }
    let mut d: u64 = 3;
    while d <= TRIAL_DIVISION_LIMIT {
        if let Some(small) = remaining.to_u64() {
            // Finish entirely in u64 arithmetic.
            let mut m = small;
            while d <= TRIAL_DIVISION_LIMIT && (d as u128) * (d as u128) <= m as u128 {
                if m % d == 0 {
                    let mut e = 0u32;
                    while m % d == 0 {
                        m /= d;
                        e += 1;
                    }
                    factors.push((BigInt::from(d), e));
                }
                d += 2;
            }
            remaining = BigInt::from(m);
            break;
        }
        let db = BigInt::from(d);
        if (&db * &db) > remaining {
            break;
        }
        if (&remaining % &db).is_zero() {
            let mut e = 0u32;
            while (&remaining % &db).is_zero() {
                remaining /= &db;
                e += 1;
            }
            factors.push((db, e));
        }
        d += 2;
    }

    // Whatever survives trial division is split recursively with rho.
    let mut stack = Vec::new();
    if !remaining.is_one() {
        stack.push(remaining);
    }
    let mut leaf = |factors: &mut Vec<(BigInt, u32)>, p: BigInt| {
        match factors.binary_search_by(|(q, _)| q.cmp(&p)) {
            Ok(i) => factors[i].1 += 1,
            Err(i) => factors.insert(i, (p, 1)),
        }
    };
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            leaf(&mut factors, m);
            continue;
        }
        // Perfect squares and higher powers of primes escape rho slowly;
        // peel exact roots first.
        if let Some((root, k)) = exact_prime_power(&m) {
            for _ in 0..k {
                leaf(&mut factors, root.clone());
            }
            continue;
        }
        match brent_rho(&m, budget_left) {
            Some(div) => {
                let co = &m / &div;
                stack.push(div);
                stack.push(co);
            }
            None => {
                factors.sort_by(|a, b| a.0.cmp(&b.0));
                // Everything still on the stack plus m is unsplit.
                let mut cofactor = m;
                for rest in stack {
                    cofactor *= rest;
                }
                return Err(Error::FactorizationBudgetExceeded {
                    partial: Box::new(PartialSplit { sign: 1, factors, cofactor }),
                });
            }
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(factors)
}

/// If m = p^k for a prime p with k >= 2, return (p, k).
fn exact_prime_power(m: &BigInt) -> Option<(BigInt, u32)> {
    let bits = m.bits();
    for k in 2..=bits.max(2) as u32 {
        let root = m.nth_root(k);
        if root.pow(k) == *m {
            if is_prime(&root) {
                return Some((root, k));
            }
        }
        if root < BigInt::from(2u32) {
            break;
        }
    }
    None
}

/// Brent-cycle Pollard rho returning a nontrivial divisor of composite odd m.
/// Decrements `budget_left` per iteration; None when the budget runs out.
fn brent_rho(m: &BigInt, budget_left: &mut u64) -> Option<BigInt> {
    if let Some(small) = m.to_u128() {
        return brent_rho_u128(small, budget_left).map(BigInt::from);
    }
    let one = BigInt::one();
    for c in 1u64..64 {
        let cc = BigInt::from(c);
        let mut y = BigInt::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigInt::one();
        let (mut x, mut ys) = (y.clone(), y.clone());
        let mut g = BigInt::one();
        'outer: while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                if *budget_left == 0 {
                    return None;
                }
                *budget_left -= 1;
                y = (&y * &y + &cc) % m;
            }
            let mut k: u64 = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let batch = 128.min(r - k);
                for _ in 0..batch {
                    if *budget_left == 0 {
                        return None;
                    }
                    *budget_left -= 1;
                    y = (&y * &y + &cc) % m;
                    let diff = (&x - &y).abs();
                    if diff.is_zero() {
                        break;
                    }
                    q = (&q * &diff) % m;
                }
                g = q.gcd(m);
                k += batch;
            }
            r *= 2;
            if r > (1 << 40) {
                break 'outer;
            }
        }
        if &g == m {
            // Backtrack one step at a time.
            loop {
                if *budget_left == 0 {
                    return None;
                }
                *budget_left -= 1;
                ys = (&ys * &ys + &cc) % m;
                let diff = (&x - &ys).abs();
                g = diff.gcd(m);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g > one && &g < m {
            return Some(g);
        }
        // g == m: cycle degenerated; restart with the next polynomial.
    }
    None
}

fn brent_rho_u128(m: u128, budget_left: &mut u64) -> Option<u128> {
    fn mulmod(a: u128, b: u128, m: u128) -> u128 {
        if let Some(prod) = a.checked_mul(b) {
            return prod % m;
        }
        // Shift-add fallback for m up to 2^127.
        let mut result = 0u128;
        let mut a = a % m;
        let mut b = b;
        while b > 0 {
            if b & 1 == 1 {
                result = (result + a) % m;
            }
            a = (a << 1) % m;
            b >>= 1;
        }
        result
    }
    fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
        while b != 0 {
            let t = b;
            b = a % b;
            a = t;
        }
        a
    }
    for c in 1u128..64 {
        let mut y: u128 = 2;
        let mut r: u64 = 1;
        let mut q: u128 = 1;
        let (mut x, mut ys) = (y, y);
        let mut g: u128 = 1;
        while g == 1 {
            x = y;
            for _ in 0..r {
                if *budget_left == 0 {
                    return None;
                }
                *budget_left -= 1;
                y = (mulmod(y, y, m) + c) % m;
            }
            let mut k: u64 = 0;
            while k < r && g == 1 {
                ys = y;
                let batch = 128.min(r - k);
                for _ in 0..batch {
                    if *budget_left == 0 {
                        return None;
                    }
                    *budget_left -= 1;
                    y = (mulmod(y, y, m) + c) % m;
                    let diff = if x > y { x - y } else { y - x };
                    if diff == 0 {
                        break;
                    }
                    q = mulmod(q, diff, m);
                }
                g = gcd_u128(q, m);
                k += batch;
            }
            r *= 2;
        }
        if g == m {
            loop {
                if *budget_left == 0 {
                    return None;
                }
                *budget_left -= 1;
                ys = (mulmod(ys, ys, m) + c) % m;
                let diff = if x > ys { x - ys } else { ys - x };
                g = gcd_u128(diff, m);
                if g > 1 {
                    break;
                }
            }
        }
        if g > 1 && g < m {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn gcd_with_zero() {
        assert_eq!(gcd(&bi(0), &bi(5)), bi(5));
        assert_eq!(gcd(&bi(0), &bi(0)), bi(0));
        assert_eq!(gcd(&bi(-12), &bi(18)), bi(6));
    }

    #[test]
    fn gcd_euclid_examples() {
        // Euclid by hand: 369 - 365 = 4, gcd(4, 365) = 1.
        assert_eq!(gcd(&bi(369), &bi(365)), bi(1));
        assert_eq!(gcd(&bi(1996915), &bi(32725616)), bi(1));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(p_adic_valuation(&bi(16), &bi(2)).unwrap(), 4);
        // 32725616 / 16 = 2045351 is odd.
        assert_eq!(p_adic_valuation(&bi(32725616), &bi(2)).unwrap(), 4);
        // 3249 = 3^2 * 19^2 by trial division.
        assert_eq!(p_adic_valuation(&bi(3249), &bi(3)).unwrap(), 2);
        assert_eq!(p_adic_valuation(&bi(-48), &bi(2)).unwrap(), 4);
    }

    #[test]
    fn valuation_domain_errors() {
        assert!(matches!(p_adic_valuation(&bi(0), &bi(2)), Err(Error::Domain(_))));
        assert!(matches!(p_adic_valuation(&bi(10), &bi(4)), Err(Error::Domain(_))));
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(&bi(2)));
        assert!(!is_prime(&bi(4095)));
        assert!(is_prime(&bi(94099)));
        assert!(is_prime(&bi(5471)));
        assert!(!is_prime(&bi(1)));
        assert!(!is_prime(&bi(0)));
        assert!(!is_prime(&bi(-7)));
        assert_eq!(primality(&bi(97)), Primality::Prime);
    }

    #[test]
    fn primality_large_is_flagged_probable() {
        // 2^89 - 1 is a Mersenne prime above the deterministic bound.
        let n = (BigInt::from(1u32) << 89) - 1u32;
        assert!(n > deterministic_primality_bound());
        assert_eq!(primality(&n), Primality::ProbablePrime);
        // A composite above the bound is still detected.
        let c = &n * BigInt::from(1000003u64);
        assert_eq!(primality(&c), Primality::Composite);
    }

    #[test]
    fn factor_examples() {
        let f = factor(&bi(4095)).unwrap();
        assert_eq!(
            f.factors(),
            &[(bi(3), 2), (bi(5), 1), (bi(7), 1), (bi(13), 1)]
        );
        assert_eq!(f.to_string(), "3^2 * 5 * 7 * 13");

        let one = factor(&bi(1)).unwrap();
        assert_eq!(one.sign(), 1);
        assert!(one.is_unit());

        // 2045351 = 1111 * 1841 = (11*101)(7*263).
        let f = factor(&bi(2045351)).unwrap();
        assert_eq!(
            f.factors(),
            &[(bi(7), 1), (bi(11), 1), (bi(101), 1), (bi(263), 1)]
        );
    }

    #[test]
    fn factor_negative_and_zero() {
        let f = factor(&bi(-12)).unwrap();
        assert_eq!(f.sign(), -1);
        assert_eq!(f.value(), bi(-12));
        assert!(factor(&bi(0)).is_err());
    }

    #[test]
    fn factor_with_hints_splits_along_hints() {
        // 365^2 * 369 with hints {365, 369}.
        let n = bi(365) * bi(365) * bi(369);
        let f = factor_with(&n, 1000, &[bi(365), bi(369)]).unwrap();
        assert_eq!(f.value(), n);
        assert_eq!(f.exponent_of(&bi(5)), 2);
        assert_eq!(f.exponent_of(&bi(73)), 2);
        assert_eq!(f.exponent_of(&bi(3)), 2);
        assert_eq!(f.exponent_of(&bi(41)), 1);
    }

    #[test]
    fn factor_budget_exhaustion_carries_partial() {
        // Two 20-digit-ish primes; budget 1 cannot split the product.
        let p: BigInt = "100000000000000000039".parse().unwrap();
        let q: BigInt = "100000000000000000129".parse().unwrap();
        let n = bi(4) * &p * &q;
        match factor_with(&n, 1, &[]) {
            Err(Error::FactorizationBudgetExceeded { partial }) => {
                assert_eq!(partial.sign, 1);
                assert_eq!(partial.factors, vec![(bi(2), 2)]);
                assert_eq!(partial.cofactor, &p * &q);
            }
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn factor_splits_semiprime_with_rho() {
        // Both factors exceed the trial-division limit.
        let p = bi(1_000_003);
        let q = bi(1_000_033);
        let f = factor(&(&p * &q)).unwrap();
        assert_eq!(f.factors(), &[(p, 1), (q, 1)]);
    }

    #[test]
    fn factor_prime_square_above_trial_limit() {
        let p = bi(1_000_003);
        let f = factor(&(&p * &p)).unwrap();
        assert_eq!(f.factors(), &[(p, 2)]);
    }

    #[test]
    fn factorization_invariants_rejected() {
        assert!(Factorization::new(1, vec![(bi(4), 1)]).is_err());
        assert!(Factorization::new(1, vec![(bi(5), 1), (bi(3), 1)]).is_err());
        assert!(Factorization::new(1, vec![(bi(3), 0)]).is_err());
        assert!(Factorization::new(2, vec![]).is_err());
    }

    #[test]
    fn factorization_algebra() {
        let a = factor(&bi(12)).unwrap();
        let b = factor(&bi(-18)).unwrap();
        assert_eq!(a.mul(&b).value(), bi(-216));
        assert_eq!(a.pow(2).value(), bi(144));
        assert_eq!(b.pow(2).value(), bi(324));
        assert_eq!(a.radical(), bi(6));
        assert_eq!(a.odd_radical(), bi(3));
    }
}
