//! Integer factorization with an explicit effort budget.
//!
//! Trial division, then Brent's variant of Pollard rho with a fixed sequence
//! of polynomial constants. Primality is decided by Miller-Rabin with the
//! first twelve primes as bases, which is a proof below 3.3e24; larger
//! candidates additionally need a Pocklington certificate built from a
//! factorization of `n - 1`. Anything that cannot be certified within the
//! budget is left in `unfactored` and the result is marked incomplete.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::serde_big::{biguint_str, biguint_str_vec};

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// The MR base set above is deterministic below this bound.
const MR_DETERMINISTIC_BOUND: &str = "3317044064679887385961981";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorBudget {
    /// Trial-divide by every prime up to this bound.
    pub trial_bound: u32,
    /// Total Pollard-rho iterations allowed for one factorization call.
    pub rho_iterations: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget { trial_bound: 1 << 16, rho_iterations: 20_000_000 }
    }
}

impl FactorBudget {
    pub fn with_rho_iterations(rho_iterations: u64) -> Self {
        FactorBudget { rho_iterations, ..Default::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeFactor {
    #[serde(with = "biguint_str")]
    pub prime: BigUint,
    pub exponent: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeFactorization {
    #[serde(with = "biguint_str")]
    pub value: BigUint,
    /// Certified prime factors in increasing order.
    pub factors: Vec<PrimeFactor>,
    /// Cofactors that could not be split or certified within the budget.
    #[serde(with = "biguint_str_vec")]
    pub unfactored: Vec<BigUint>,
    pub complete: bool,
}

impl PrimeFactorization {
    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|f| &f.prime)
    }

    /// Product of all prime powers and unfactored parts.
    pub fn product(&self) -> BigUint {
        let mut acc: BigUint = self.unfactored.iter().product();
        for f in &self.factors {
            acc *= f.prime.pow(f.exponent);
        }
        acc
    }
}

impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|pf| match pf.exponent {
                1 => pf.prime.to_string(),
                e => format!("{}^{e}", pf.prime),
            })
            .collect();
        parts.extend(self.unfactored.iter().map(|c| format!("({c})?")));
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join(" * "))
    }
}

/// Factorization of small integers by trial division, `(p, e)` ascending.
pub fn small_prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn primes_up_to(bound: u32) -> Vec<u32> {
    let bound = bound as usize;
    let mut sieve = vec![true; bound + 1];
    let mut out = Vec::new();
    for i in 2..=bound {
        if sieve[i] {
            out.push(i as u32);
            let mut j = i * i;
            while j <= bound {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

struct Effort {
    remaining: u64,
}

impl Effort {
    fn spend(&mut self, n: u64) -> bool {
        if self.remaining < n {
            self.remaining = 0;
            false
        } else {
            self.remaining -= n;
            true
        }
    }
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, b, m);
        }
        b = mul_mod_u64(b, b, m);
        e >>= 1;
    }
    acc
}

fn miller_rabin_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &MR_BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn miller_rabin_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return miller_rabin_u64(small);
    }
    for &p in &MR_BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap();
    let d = &n_minus_1 >> s;
    'bases: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Primality {
    Prime,
    Composite,
    Unknown,
}

/// Whether `n` is prime, with a proof for every size: deterministic
/// Miller-Rabin below the bound, Pocklington above it. Returns `None` when
/// a large probable prime could not be certified within `budget`.
pub fn is_prime(n: &BigUint, budget: FactorBudget) -> Option<bool> {
    let mut effort = Effort { remaining: budget.rho_iterations };
    match certify(n, budget, &mut effort) {
        Primality::Prime => Some(true),
        Primality::Composite => Some(false),
        Primality::Unknown => None,
    }
}

fn certify(n: &BigUint, budget: FactorBudget, effort: &mut Effort) -> Primality {
    if !miller_rabin_big(n) {
        return Primality::Composite;
    }
    let bound: BigUint = MR_DETERMINISTIC_BOUND.parse().unwrap();
    if *n < bound {
        return Primality::Prime;
    }
    pocklington(n, budget, effort)
}

/// Pocklington-Lehmer: if `n - 1 = F·R` with `F` fully factored,
/// `F^2 > n`, and every prime `q | F` has a witness `a` with
/// `a^(n-1) = 1` and `gcd(a^((n-1)/q) - 1, n) = 1`, then `n` is prime.
fn pocklington(n: &BigUint, budget: FactorBudget, effort: &mut Effort) -> Primality {
    let n_minus_1 = n - 1u32;
    let partial = factor_with(&n_minus_1, budget, effort);
    let mut f = BigUint::one();
    for pf in &partial.factors {
        f *= pf.prime.pow(pf.exponent);
    }
    if &f * &f <= *n {
        return Primality::Unknown;
    }
    for pf in &partial.factors {
        let exp = &n_minus_1 / &pf.prime;
        let witnessed = (2u32..200).any(|a| {
            let a = BigUint::from(a);
            if !a.modpow(&n_minus_1, n).is_one() {
                return false;
            }
            let t = a.modpow(&exp, n);
            t != BigUint::zero() && (t + n - 1u32).gcd(n).is_one()
        });
        if !witnessed {
            // a^(n-1) != 1 for some a already proves compositeness, but the
            // search above does not distinguish; stay conservative.
            return Primality::Unknown;
        }
    }
    Primality::Prime
}

fn rho_u64(n: u64, c: u64, effort: &mut Effort) -> Option<u64> {
    const BATCH: u64 = 128;
    let f = |x: u64| (mul_mod_u64(x, x, n) + c) % n;
    let mut y = 2u64;
    let mut r = 1u64;
    let mut q = 1u64;
    let mut g = 1u64;
    let mut x = y;
    let mut ys = y;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            let steps = BATCH.min(r - k);
            if !effort.spend(steps) {
                return None;
            }
            for _ in 0..steps {
                y = f(y);
                q = mul_mod_u64(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += steps;
        }
        r *= 2;
    }
    if g == n {
        loop {
            if !effort.spend(1) {
                return None;
            }
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn rho_big(n: &BigUint, c: u64, effort: &mut Effort) -> Option<BigUint> {
    const BATCH: u64 = 128;
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            let steps = BATCH.min(r - k);
            if !effort.spend(steps) {
                return None;
            }
            for _ in 0..steps {
                y = f(&y);
                q = (q * diff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += steps;
        }
        r *= 2;
    }
    if g == *n {
        loop {
            if !effort.spend(1) {
                return None;
            }
            ys = f(&ys);
            g = diff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (g != *n).then_some(g)
}

/// Finds a nontrivial divisor of the odd composite `n`.
fn split(n: &BigUint, effort: &mut Effort) -> Option<BigUint> {
    for c in 1u64.. {
        if effort.remaining == 0 {
            return None;
        }
        let found = match n.to_u64() {
            Some(small) => rho_u64(small, c, effort).map(BigUint::from),
            None => rho_big(n, c, effort),
        };
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Factors `n >= 1` within `budget`.
pub fn factor(n: &BigUint, budget: FactorBudget) -> Result<PrimeFactorization> {
    if n.is_zero() {
        return Err(Error::Domain("cannot factor zero".into()));
    }
    let mut effort = Effort { remaining: budget.rho_iterations };
    Ok(factor_with(n, budget, &mut effort))
}

fn factor_with(n: &BigUint, budget: FactorBudget, effort: &mut Effort) -> PrimeFactorization {
    let mut primes: Vec<BigUint> = Vec::new();
    let mut unfactored = Vec::new();
    let mut rest = n.clone();
    for p in primes_up_to(budget.trial_bound) {
        let p_big = BigUint::from(p);
        if &p_big * &p_big > rest {
            break;
        }
        while (&rest % p).is_zero() {
            rest /= p;
            primes.push(p_big.clone());
        }
    }

    let mut work = vec![rest];
    while let Some(c) = work.pop() {
        if c.is_one() {
            continue;
        }
        let trial_square = BigUint::from(budget.trial_bound) * budget.trial_bound;
        if c < trial_square {
            // no factor below the trial bound, so c is prime
            primes.push(c);
            continue;
        }
        match certify(&c, budget, effort) {
            Primality::Prime => primes.push(c),
            Primality::Unknown => unfactored.push(c),
            Primality::Composite => match split(&c, effort) {
                Some(d) => {
                    let other = &c / &d;
                    work.push(d);
                    work.push(other);
                }
                None => unfactored.push(c),
            },
        }
    }
    assemble(n.clone(), primes, unfactored)
}

fn assemble(value: BigUint, mut primes: Vec<BigUint>, mut unfactored: Vec<BigUint>) -> PrimeFactorization {
    primes.sort();
    unfactored.sort();
    let mut factors: Vec<PrimeFactor> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some(last) if last.prime == p => last.exponent += 1,
            _ => factors.push(PrimeFactor { prime: p, exponent: 1 }),
        }
    }
    PrimeFactorization { value, factors, complete: unfactored.is_empty(), unfactored }
}

fn mobius(n: u64) -> i32 {
    let f = small_prime_factors(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// `Φ_d(q)`, the `d`-th cyclotomic polynomial evaluated at `q`.
pub fn cyclotomic_value(d: u64, q: &BigUint) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for e in divisors(d) {
        let term = q.pow(e as u32) - 1u32;
        match mobius(d / e) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    num / den
}

/// Factors `q^n - 1` piecewise through `q^n - 1 = ∏_{d | n} Φ_d(q)`.
/// The budget applies to each cyclotomic piece separately.
pub fn factor_power_minus_one(q: u64, n: u32, budget: FactorBudget) -> Result<PrimeFactorization> {
    if q < 2 || n == 0 {
        return Err(Error::Domain(format!("q^n - 1 needs q >= 2 and n >= 1, got q={q}, n={n}")));
    }
    let q_big = BigUint::from(q);
    let value = q_big.pow(n) - 1u32;
    let mut primes = Vec::new();
    let mut unfactored = Vec::new();
    for d in divisors(n as u64) {
        let piece = cyclotomic_value(d, &q_big);
        let pf = factor(&piece, budget)?;
        for f in pf.factors {
            primes.extend(std::iter::repeat_n(f.prime, f.exponent as usize));
        }
        unfactored.extend(pf.unfactored);
    }
    Ok(assemble(value, primes, unfactored))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u128) -> BigUint {
        BigUint::from(n)
    }

    fn pairs(pf: &PrimeFactorization) -> Vec<(u128, u32)> {
        pf.factors.iter().map(|f| (f.prime.to_u128().unwrap(), f.exponent)).collect()
    }

    #[test]
    fn mersenne_examples() {
        let b = FactorBudget::default();
        let f = factor(&big(2047), b).unwrap();
        assert_eq!(pairs(&f), [(23, 1), (89, 1)]);
        assert!(f.complete);
        assert_eq!(pairs(&factor(&big(31), b).unwrap()), [(31, 1)]);
        let one = factor(&big(1), b).unwrap();
        assert!(one.factors.is_empty() && one.complete);
        assert!(factor(&BigUint::zero(), b).is_err());
    }

    #[test]
    fn semiprime_beyond_trial_bound() {
        // 1000003 * 998244353
        let n = big(1_000_003u128 * 998_244_353);
        let f = factor(&n, FactorBudget::default()).unwrap();
        assert_eq!(pairs(&f), [(1_000_003, 1), (998_244_353, 1)]);
    }

    #[test]
    fn large_semiprime_uses_big_path() {
        // (2^61 - 1) * 1000000007 exceeds u64
        let p = (1u128 << 61) - 1;
        let n = big(p * 1_000_000_007);
        let f = factor(&n, FactorBudget::default()).unwrap();
        assert_eq!(pairs(&f), [(1_000_000_007, 1), (p, 1)]);
        assert_eq!(f.product(), n);
    }

    #[test]
    fn exhausted_budget_is_incomplete() {
        let n = big(1_000_003u128 * 998_244_353);
        let f = factor(&n, FactorBudget { trial_bound: 1000, rho_iterations: 10 }).unwrap();
        assert!(!f.complete);
        assert_eq!(f.unfactored, vec![n.clone()]);
        assert_eq!(f.product(), n);
    }

    #[test]
    fn primality() {
        let b = FactorBudget::default();
        assert_eq!(is_prime(&big(2), b), Some(true));
        assert_eq!(is_prime(&big(1), b), Some(false));
        assert_eq!(is_prime(&big(561), b), Some(false));
        assert_eq!(is_prime(&big((1u128 << 89) - 1), b), Some(true));
        assert_eq!(is_prime(&big((1u128 << 127) - 1), b), Some(true));
        assert_eq!(is_prime(&big(((1u128 << 61) - 1) * ((1u128 << 31) - 1)), b), Some(false));
    }

    #[test]
    fn cyclotomic_split() {
        assert_eq!(cyclotomic_value(6, &big(2)), big(3));
        assert_eq!(cyclotomic_value(12, &big(3)), big(73));
        let f = factor_power_minus_one(2, 12, FactorBudget::default()).unwrap();
        assert_eq!(pairs(&f), [(3, 2), (5, 1), (7, 1), (13, 1)]);
        let f = factor_power_minus_one(3, 41, FactorBudget::default()).unwrap();
        assert!(f.complete);
        assert_eq!(f.product(), big(3u128.pow(41) - 1));
    }

    #[test]
    fn small_factors() {
        assert_eq!(small_prime_factors(1), vec![]);
        assert_eq!(small_prime_factors(64), vec![(2, 6)]);
        assert_eq!(small_prime_factors(60), vec![(2, 2), (3, 1), (5, 1)]);
        assert_eq!(small_prime_factors(97), vec![(97, 1)]);
    }

    #[test]
    fn display() {
        let f = factor(&big(72), FactorBudget::default()).unwrap();
        assert_eq!(f.to_string(), "2^3 * 3^2");
    }
}
