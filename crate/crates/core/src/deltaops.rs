//! Polynomials in the difference operator `Δa(n) = a(n+1) - a(n)` and the
//! three multiplier families built from the recursion
//! `X(n+2) = Δ·X(n+1) - X(n)`:
//!
//! * odd  (`M_o`): `M_o(0) = 2`, `M_o(1) = Δ`
//! * even (`M_e`): `M_e(0) = 1`, `M_e(1) = Δ - 1`
//! * prime (`M'`): `M'(-1) = 0`, `M'(0) = 1`, `M'(1) = Δ`
//!
//! The odd and even families are the multipliers of tables with an odd or
//! even number of rows; only the parity of `m` matters.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::small_prime_factors;
use crate::poly::IntPoly;

pub const DELTA: &str = "Δ";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Odd,
    Even,
    Prime,
}

impl Family {
    /// The multiplier family of an `m`-row table.
    pub fn for_rows(m: usize) -> Family {
        if m % 2 == 1 {
            Family::Odd
        } else {
            Family::Even
        }
    }

    fn min_index(self) -> i64 {
        match self {
            Family::Prime => -1,
            _ => 0,
        }
    }

    /// `M(0)` of the family.
    pub fn base_constant(self) -> BigInt {
        match self {
            Family::Odd => BigInt::from(2),
            Family::Even | Family::Prime => BigInt::one(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Odd => "odd",
            Family::Even => "even",
            Family::Prime => "prime",
        })
    }
}

/// A polynomial in `Δ` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DeltaPoly(IntPoly);

impl DeltaPoly {
    pub fn from_poly(p: IntPoly) -> Self {
        DeltaPoly(p)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        DeltaPoly(IntPoly::from_i64s(coeffs))
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        DeltaPoly(IntPoly::constant(c))
    }

    pub fn zero() -> Self {
        DeltaPoly(IntPoly::zero())
    }

    pub fn one() -> Self {
        DeltaPoly(IntPoly::one())
    }

    /// `Δ` itself.
    pub fn delta() -> Self {
        DeltaPoly(IntPoly::var())
    }

    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.0.coeffs()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, q: &DeltaPoly) -> DeltaPoly {
        DeltaPoly(&self.0 + &q.0)
    }

    pub fn mul(&self, q: &DeltaPoly) -> DeltaPoly {
        DeltaPoly(&self.0 * &q.0)
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> DeltaPoly {
        DeltaPoly(self.0.scale(&c.into()))
    }

    /// Substitutes `q` for `Δ` in `self`.
    pub fn compose(&self, q: &DeltaPoly) -> DeltaPoly {
        DeltaPoly(self.0.compose(&q.0))
    }

    /// Remainder modulo a monic `q`.
    pub fn mod_reduce(&self, q: &DeltaPoly) -> Result<DeltaPoly> {
        self.0.rem_monic(&q.0).map(DeltaPoly)
    }

    /// The same operator written in the shift `E = Δ + 1`, i.e. `p(x - 1)`.
    pub fn to_shift_basis(&self) -> IntPoly {
        self.0.compose(&IntPoly::from_i64s(&[-1, 1]))
    }

    /// `(p·a)(n)` for a sequence `a(1), a(2), ...` stored from index 1.
    pub fn apply(&self, seq: &[BigInt], n: usize) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::OutOfRange { index: 0, max: seq.len() });
        }
        let shift = self.to_shift_basis();
        let needed = n + shift.degree().unwrap_or(0);
        if needed > seq.len() {
            return Err(Error::InsufficientLength { needed, len: seq.len() });
        }
        Ok(shift.coeffs().iter().zip(&seq[n - 1..]).map(|(c, a)| c * a).sum())
    }
}

impl fmt::Display for DeltaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render(DELTA))
    }
}

impl FromStr for DeltaPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IntPoly::parse(s, DELTA).map(DeltaPoly)
    }
}

impl Add for &DeltaPoly {
    type Output = DeltaPoly;
    fn add(self, rhs: &DeltaPoly) -> DeltaPoly {
        DeltaPoly(&self.0 + &rhs.0)
    }
}

impl Sub for &DeltaPoly {
    type Output = DeltaPoly;
    fn sub(self, rhs: &DeltaPoly) -> DeltaPoly {
        DeltaPoly(&self.0 - &rhs.0)
    }
}

impl Mul for &DeltaPoly {
    type Output = DeltaPoly;
    fn mul(self, rhs: &DeltaPoly) -> DeltaPoly {
        DeltaPoly(&self.0 * &rhs.0)
    }
}

impl Neg for &DeltaPoly {
    type Output = DeltaPoly;
    fn neg(self) -> DeltaPoly {
        DeltaPoly(-&self.0)
    }
}

fn check_index(family: Family, n: i64) -> Result<()> {
    if n < family.min_index() {
        return Err(Error::Domain(format!("{family} multiplier is defined for n >= {}, got {n}", family.min_index())));
    }
    Ok(())
}

/// The members `M(0), ..., M(upto)` of a family, by the three-term recursion.
pub fn multipliers(family: Family, upto: usize) -> Vec<DeltaPoly> {
    let delta = DeltaPoly::delta();
    let first = match family {
        Family::Odd => DeltaPoly::delta(),
        Family::Even => DeltaPoly::from_i64s(&[-1, 1]),
        Family::Prime => DeltaPoly::delta(),
    };
    let mut out = vec![DeltaPoly::constant(family.base_constant()), first];
    while out.len() <= upto {
        let len = out.len();
        out.push(&(&delta * &out[len - 1]) - &out[len - 2]);
    }
    out.truncate(upto + 1);
    out
}

/// A single family member. `n = -1` is accepted for the prime family,
/// where `M'(-1) = 0`.
pub fn multiplier(family: Family, n: i64) -> Result<DeltaPoly> {
    check_index(family, n)?;
    if n < 0 {
        return Ok(DeltaPoly::zero());
    }
    Ok(multipliers(family, n as usize).pop().unwrap())
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    binomial(BigInt::from(n), BigInt::from(k))
}

fn sign(i: i64) -> BigInt {
    if i % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Family member from its explicit binomial sum, independent of the
/// recursion.
pub fn closed_form(family: Family, n: i64) -> Result<DeltaPoly> {
    check_index(family, n)?;
    if n < 0 {
        return Ok(DeltaPoly::zero());
    }
    if n == 0 {
        return Ok(DeltaPoly::constant(family.base_constant()));
    }
    let mut coeffs = vec![BigInt::zero(); n as usize + 1];
    match family {
        Family::Odd => {
            for i in 0..=n / 2 {
                let c = binom(n + 1 - i, i) - binom(n - 1 - i, i - 2);
                coeffs[(n - 2 * i) as usize] += sign(i) * c;
            }
        }
        Family::Even => {
            for i in 0..=n {
                let up = (i + 1) / 2;
                let down = i / 2;
                coeffs[(n - i) as usize] += sign(up) * binom(n - up, down);
            }
        }
        Family::Prime => {
            for i in 0..=n / 2 {
                coeffs[(n - 2 * i) as usize] += sign(i) * binom(n - i, i);
            }
        }
    }
    Ok(DeltaPoly(IntPoly::new(coeffs)))
}

/// Which family supplies the argument substituted into `M'(p-1)` and
/// `M'(p-2)` inside a prime function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CompositionBase {
    /// `M_o(n)`; makes `F_p(M(n)) = M(pn)` hold.
    Odd,
    /// `M_e(n)`; kept for the diagnostic comparison.
    Even,
}

fn is_small_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `F_p(value) = M'(p-1)(base)·value - M'(p-2)(base)·M(0)` where `M(0)` is
/// the base constant of `family` and `base` is the composition argument
/// (normally `M_o(n)` when `value = M(n)`).
pub fn prime_function(family: Family, p: u64, value: &DeltaPoly, base: &DeltaPoly) -> Result<DeltaPoly> {
    if !is_small_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let p = p as i64;
    let outer = multiplier(Family::Prime, p - 1)?.compose(base);
    let inner = multiplier(Family::Prime, p - 2)?.compose(base);
    let m0 = DeltaPoly::constant(family.base_constant());
    Ok(&(&outer * value) - &(&inner * &m0))
}

fn composition_base(kind: CompositionBase, n: i64) -> Result<DeltaPoly> {
    match kind {
        CompositionBase::Odd => multiplier(Family::Odd, n),
        CompositionBase::Even => multiplier(Family::Even, n),
    }
}

/// Rebuilds `M(n)` from `M(1)` by applying one prime function per prime
/// factor of `n` (with multiplicity, smallest first).
pub fn uniform_factorization(family: Family, n: u64, base: CompositionBase) -> Result<DeltaPoly> {
    if n == 0 {
        return Err(Error::Domain("uniform factorization needs n >= 1".into()));
    }
    let mut reached: i64 = 1;
    let mut value = multiplier(family, 1)?;
    for (p, e) in small_prime_factors(n) {
        for _ in 0..e {
            value = prime_function(family, p, &value, &composition_base(base, reached)?)?;
            reached *= p as i64;
        }
    }
    Ok(value)
}

/// `M_o(n)` as the composition `M_o(p1)∘...∘M_o(pk)` over the prime factors
/// of `n` with multiplicity.
pub fn odd_factorization(n: u64) -> Result<DeltaPoly> {
    if n == 0 {
        return Err(Error::Domain("factorization needs n >= 1".into()));
    }
    let mut acc = DeltaPoly::delta();
    for (p, e) in small_prime_factors(n) {
        let factor = multiplier(Family::Odd, p as i64)?;
        for _ in 0..e {
            acc = acc.compose(&factor);
        }
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeFunctionDiagnostic {
    pub family: Family,
    pub p: u64,
    pub n: i64,
    pub target: String,
    pub odd_base: String,
    pub even_base: String,
    pub odd_base_matches: bool,
    pub even_base_matches: bool,
}

/// Evaluates `F_p(M(n))` with both composition bases and reports which one
/// reproduces `M(pn)`.
pub fn prime_function_diagnostic(family: Family, p: u64, n: i64) -> Result<PrimeFunctionDiagnostic> {
    if n < 1 {
        return Err(Error::Domain("prime functions need n >= 1".into()));
    }
    let value = multiplier(family, n)?;
    let target = multiplier(family, p as i64 * n)?;
    let odd = prime_function(family, p, &value, &composition_base(CompositionBase::Odd, n)?)?;
    let even = prime_function(family, p, &value, &composition_base(CompositionBase::Even, n)?)?;
    Ok(PrimeFunctionDiagnostic {
        family,
        p,
        n,
        odd_base_matches: odd == target,
        even_base_matches: even == target,
        target: target.to_string(),
        odd_base: odd.to_string(),
        even_base: even.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(c: &[i64]) -> DeltaPoly {
        DeltaPoly::from_i64s(c)
    }

    fn seq(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn multiplier_examples() {
        assert_eq!(multiplier(Family::Odd, 0).unwrap(), d(&[2]));
        assert_eq!(multiplier(Family::Even, 1).unwrap(), d(&[-1, 1]));
        assert_eq!(multiplier(Family::Prime, 2).unwrap(), d(&[-1, 0, 1]));
        assert_eq!(multiplier(Family::Prime, -1).unwrap(), DeltaPoly::zero());
        assert!(matches!(multiplier(Family::Odd, -1), Err(Error::Domain(_))));
        assert!(matches!(multiplier(Family::Prime, -2), Err(Error::Domain(_))));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(Family::Odd, 3).unwrap(), d(&[0, -3, 0, 1]));
        assert_eq!(closed_form(Family::Even, 2).unwrap(), d(&[-1, -1, 1]));
        assert_eq!(closed_form(Family::Prime, 4).unwrap(), d(&[1, 0, -3, 0, 1]));
        assert_eq!(closed_form(Family::Even, 0).unwrap(), d(&[1]));
    }

    #[test]
    fn ring_examples() {
        let delta = DeltaPoly::delta();
        assert_eq!(delta.mul(&delta), d(&[0, 0, 1]));
        assert_eq!(d(&[-2, 0, 1]).add(&d(&[2])), d(&[0, 0, 1]));
        assert_eq!(d(&[-1, 1]).mul(&d(&[1, 1])), d(&[-1, 0, 1]));
        assert_eq!(d(&[1, 2]).scale(-3), d(&[-3, -6]));
    }

    #[test]
    fn compose_examples() {
        let m2 = d(&[-2, 0, 1]);
        assert_eq!(m2.compose(&m2), d(&[2, 0, -4, 0, 1]));
        assert_eq!(m2.compose(&DeltaPoly::delta()), m2);
        assert_eq!(DeltaPoly::delta().compose(&m2), m2);
    }

    #[test]
    fn mod_reduce_examples() {
        let m2 = d(&[-2, 0, 1]);
        let lhs = multiplier(Family::Prime, 1).unwrap().mul(&multiplier(Family::Odd, 1).unwrap());
        assert_eq!(lhs.mod_reduce(&m2).unwrap(), d(&[2]));
        assert_eq!(m2.mod_reduce(&m2).unwrap(), DeltaPoly::zero());
        assert_eq!(DeltaPoly::delta().mod_reduce(&m2).unwrap(), DeltaPoly::delta());
        assert_eq!(m2.mod_reduce(&d(&[1, 2])), Err(Error::NonMonicDivisor));
        assert_eq!(m2.mod_reduce(&DeltaPoly::zero()), Err(Error::NonMonicDivisor));
    }

    #[test]
    fn apply_examples() {
        assert_eq!(DeltaPoly::delta().apply(&seq(&[1, 2, 5, 13]), 2).unwrap(), 3.into());
        // row 3 of the 5-row table: 1, 3, 9, 25, ...
        assert_eq!(d(&[-2, 0, 1]).apply(&seq(&[1, 3, 9, 25]), 1).unwrap(), 2.into());
        assert_eq!(d(&[1, 2, 1]).apply(&seq(&[1, 2, 5, 13, 35]), 1).unwrap(), 5.into());
        assert_eq!(d(&[0, 0, 1]).apply(&seq(&[1, 2]), 1), Err(Error::InsufficientLength { needed: 3, len: 2 }));
        assert!(DeltaPoly::delta().apply(&seq(&[1, 2]), 0).is_err());
    }

    #[test]
    fn prime_function_examples() {
        let f = |fam, n| {
            let value = multiplier(fam, n).unwrap();
            prime_function(fam, 2, &value, &multiplier(Family::Odd, n).unwrap()).unwrap()
        };
        assert_eq!(f(Family::Odd, 1), d(&[-2, 0, 1]));
        assert_eq!(f(Family::Even, 1), d(&[-1, -1, 1]));
        assert_eq!(f(Family::Prime, 1), d(&[-1, 0, 1]));
        let one = DeltaPoly::one();
        assert_eq!(prime_function(Family::Odd, 4, &one, &one), Err(Error::NotPrime("4".into())));
        assert_eq!(prime_function(Family::Odd, 1, &one, &one), Err(Error::NotPrime("1".into())));
    }

    #[test]
    fn diagnostic_prefers_odd_base() {
        let diag = prime_function_diagnostic(Family::Odd, 2, 1).unwrap();
        assert!(diag.odd_base_matches);
        assert!(!diag.even_base_matches);
        assert_eq!(diag.even_base, "Δ^2 - Δ - 2");
        for fam in [Family::Odd, Family::Even, Family::Prime] {
            for p in [2, 3, 5, 7] {
                for n in 1..=6 {
                    let d = prime_function_diagnostic(fam, p, n).unwrap();
                    assert!(d.odd_base_matches && !d.even_base_matches, "{fam} p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn uniform_factorization_small() {
        for fam in [Family::Odd, Family::Even, Family::Prime] {
            for n in 1..=30 {
                assert_eq!(
                    uniform_factorization(fam, n, CompositionBase::Odd).unwrap(),
                    multiplier(fam, n as i64).unwrap(),
                    "{fam} {n}"
                );
            }
        }
    }

    #[test]
    fn display_and_parse() {
        let p = multiplier(Family::Odd, 4).unwrap();
        assert_eq!(p.to_string(), "Δ^4 - 4Δ^2 + 2");
        assert_eq!("Δ^4 - 4Δ^2 + 2".parse::<DeltaPoly>().unwrap(), p);
        assert_eq!(DeltaPoly::zero().to_string(), "0");
    }

    #[test]
    fn family_from_rows() {
        assert_eq!(Family::for_rows(1), Family::Odd);
        assert_eq!(Family::for_rows(8), Family::Even);
    }
}
