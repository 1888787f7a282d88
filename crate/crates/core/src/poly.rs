//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, stored ascending and always trimmed.

use std::fmt::{self, Write as _};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: impl Into<BigInt>, power: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c.into();
        Self::new(coeffs)
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner)`, by Horner's rule.
    pub fn compose(&self, inner: &IntPoly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * inner;
            acc += &Self::constant(c.clone());
        }
        acc
    }

    /// Remainder of division by a monic `divisor`; stays over the integers.
    pub fn rem_monic(&self, divisor: &IntPoly) -> Result<Self> {
        if !divisor.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let d = divisor.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        while r.len() > d {
            let top = r.len() - 1;
            let lead = r[top].clone();
            if !lead.is_zero() {
                let shift = top - d;
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    r[shift + i] -= &lead * c;
                }
            }
            r.pop();
        }
        Ok(Self::new(r))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn abs_coeffs(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.abs()).collect())
    }

    /// Renders in descending powers using `var` as the indeterminate,
    /// e.g. `x^2 - 2x - 1`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if power == 0 || !mag.is_one() {
                write!(out, "{mag}").unwrap();
            }
            match power {
                0 => {}
                1 => out.push_str(var),
                _ => write!(out, "{var}^{power}").unwrap(),
            }
        }
        out
    }

    /// Inverse of [`IntPoly::render`]; whitespace is ignored.
    pub fn parse(s: &str, var: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bad = || Error::Parse(format!("malformed polynomial {s:?}"));
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let negative = if let Some(r) = rest.strip_prefix('-') {
                rest = r;
                true
            } else if let Some(r) = rest.strip_prefix('+') {
                if first {
                    return Err(bad());
                }
                rest = r;
                false
            } else if first {
                false
            } else {
                return Err(bad());
            };
            first = false;
            let skip = rest.chars().next().ok_or_else(bad)?.len_utf8();
            let end = rest[skip..].find(['+', '-']).map_or(rest.len(), |i| i + skip);
            let (term, tail) = rest.split_at(end);
            rest = tail;

            let (digits, power) = match term.find(var) {
                None => (term, 0usize),
                Some(pos) => {
                    let after = &term[pos + var.len()..];
                    let power = if after.is_empty() {
                        1
                    } else {
                        after.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
                    };
                    (&term[..pos], power)
                }
            };
            let mut c: BigInt = if digits.is_empty() {
                if power == 0 {
                    return Err(bad());
                }
                BigInt::one()
            } else {
                digits.parse().map_err(|_| bad())?
            };
            if negative {
                c = -c;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += c;
        }
        Ok(Self::new(coeffs))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        *self = Self::new(std::mem::take(&mut self.coeffs));
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        *self = Self::new(std::mem::take(&mut self.coeffs));
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly { (&self).$m(&rhs) }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn canonical_form_trims() {
        assert_eq!(p(&[1, 0, 0]).coeffs().len(), 1);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn remainder_by_monic() {
        // x^3 mod (x^2 - 2) = 2x
        assert_eq!(p(&[0, 0, 0, 1]).rem_monic(&p(&[-2, 0, 1])).unwrap(), p(&[0, 2]));
        assert_eq!(p(&[1]).rem_monic(&p(&[0, 2])), Err(Error::NonMonicDivisor));
        assert_eq!(p(&[1]).rem_monic(&IntPoly::zero()), Err(Error::NonMonicDivisor));
    }

    #[test]
    fn render_examples() {
        assert_eq!(p(&[-1, -2, 1]).to_string(), "x^2 - 2x - 1");
        assert_eq!(p(&[1, -1]).to_string(), "-x + 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, 3]).render("Δ"), "3Δ");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "x^", "2x^a", "++x", "+x", "x*2"] {
            assert!(IntPoly::parse(s, "x").is_err(), "{s}");
        }
        assert_eq!(IntPoly::parse("x + x", "x").unwrap(), p(&[0, 2]));
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn render_parse_round_trip(a in small_poly()) {
            prop_assert_eq!(IntPoly::parse(&a.render("Δ"), "Δ").unwrap(), a.clone());
            prop_assert_eq!(IntPoly::parse(&a.to_string(), "x").unwrap(), a);
        }

        #[test]
        fn compose_agrees_with_eval(a in small_poly(), b in small_poly(), x in -5i64..5) {
            let x = BigInt::from(x);
            prop_assert_eq!(a.compose(&b).eval(&x), a.eval(&b.eval(&x)));
        }
    }
}
