//! Comparison of the multiplier families with the classical Chebyshev,
//! Fibonacci and Lucas polynomials. The classical families are generated
//! here from their own three-term recursions in `x`, not from the
//! multipliers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::deltaops::{multipliers, Family};
use crate::poly::IntPoly;
use crate::serde_big::bigint_str;

fn three_term(first: IntPoly, second: IntPoly, step: IntPoly, upto: usize) -> Vec<IntPoly> {
    let mut out = vec![first, second];
    while out.len() <= upto {
        let len = out.len();
        let next = &(&step * &out[len - 1]) + &out[len - 2].clone();
        out.push(next);
    }
    out.truncate(upto + 1);
    out
}

/// `T_0..T_upto` with `T_{n+1} = 2x T_n - T_{n-1}`, `T_0 = 1`, `T_1 = x`.
pub fn chebyshev_first_kind(upto: usize) -> Vec<IntPoly> {
    let mut out = vec![IntPoly::one(), IntPoly::var()];
    let two_x = IntPoly::from_i64s(&[0, 2]);
    while out.len() <= upto {
        let len = out.len();
        out.push(&(&two_x * &out[len - 1]) - &out[len - 2]);
    }
    out.truncate(upto + 1);
    out
}

/// `F_0..F_upto` with `F_{n+1} = x F_n + F_{n-1}`, `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(upto: usize) -> Vec<IntPoly> {
    three_term(IntPoly::zero(), IntPoly::one(), IntPoly::var(), upto)
}

/// `L_0..L_upto` with `L_{n+1} = x L_n + L_{n-1}`, `L_0 = 2`, `L_1 = x`.
pub fn lucas(upto: usize) -> Vec<IntPoly> {
    three_term(IntPoly::constant(2), IntPoly::var(), IntPoly::var(), upto)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Claim {
    /// `(1/2) M_o(n)(2x) = T_n(x)`
    ChebyshevFromOdd,
    /// `|M_e(n)| = F_{n+1}`. False from `n = 1` on.
    EvenAbsFibonacci,
    /// `|M'(n)| = L_{n+1}`. False from `n = 0` on.
    PrimeAbsLucas,
    /// `|M'(n)| = F_{n+1}`
    PrimeAbsFibonacci,
    /// `|M_o(n)| = L_n`
    OddAbsLucas,
    /// `|M_e(n)| = F_{n+1} + F_n`
    EvenAbsFibonacciSum,
}

impl Claim {
    /// The identifications as usually quoted.
    pub const STATED: [Claim; 3] = [Claim::ChebyshevFromOdd, Claim::EvenAbsFibonacci, Claim::PrimeAbsLucas];
    /// Identifications that hold for every `n`.
    pub const CORRECTED: [Claim; 4] =
        [Claim::ChebyshevFromOdd, Claim::PrimeAbsFibonacci, Claim::OddAbsLucas, Claim::EvenAbsFibonacciSum];

    fn describe(self) -> &'static str {
        match self {
            Claim::ChebyshevFromOdd => "(1/2)M_o(n)(2x) = T_n(x)",
            Claim::EvenAbsFibonacci => "|M_e(n)| = F_{n+1}(x)",
            Claim::PrimeAbsLucas => "|M'(n)| = L_{n+1}(x)",
            Claim::PrimeAbsFibonacci => "|M'(n)| = F_{n+1}(x)",
            Claim::OddAbsLucas => "|M_o(n)| = L_n(x)",
            Claim::EvenAbsFibonacciSum => "|M_e(n)| = F_{n+1}(x) + F_n(x)",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.describe())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub n: usize,
    pub power: usize,
    #[serde(with = "bigint_str")]
    pub multiplier_coeff: BigInt,
    #[serde(with = "bigint_str")]
    pub classical_coeff: BigInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={}: coefficient of x^{} is {} on the multiplier side, {} on the classical side",
            self.n, self.power, self.multiplier_coeff, self.classical_coeff
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: Claim,
    pub n_max: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl ClaimResult {
    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

fn first_difference(n: usize, lhs: &IntPoly, rhs: &IntPoly) -> Option<Mismatch> {
    let len = lhs.coeffs().len().max(rhs.coeffs().len());
    (0..len).find(|&p| lhs.coeff(p) != rhs.coeff(p)).map(|power| Mismatch {
        n,
        power,
        multiplier_coeff: lhs.coeff(power),
        classical_coeff: rhs.coeff(power),
    })
}

/// `(1/2) p(2x)`, or `None` if some coefficient of `p(2x)` is odd.
fn halve_at_double(p: &IntPoly) -> Option<IntPoly> {
    let scaled = p.compose(&IntPoly::from_i64s(&[0, 2]));
    let two = BigInt::from(2);
    let mut out = Vec::with_capacity(scaled.coeffs().len());
    for c in scaled.coeffs() {
        let (q, r) = c.div_rem(&two);
        if !r.is_zero() {
            return None;
        }
        out.push(q);
    }
    Some(IntPoly::new(out))
}

/// Checks `claim` for `0 <= n <= n_max` and reports the first differing
/// coefficient, if any.
pub fn check_claim(claim: Claim, n_max: usize) -> ClaimResult {
    let odd = multipliers(Family::Odd, n_max);
    let even = multipliers(Family::Even, n_max);
    let prime = multipliers(Family::Prime, n_max);
    let cheb = chebyshev_first_kind(n_max);
    let fib = fibonacci(n_max + 1);
    let luc = lucas(n_max + 1);

    let first_mismatch = (0..=n_max).find_map(|n| {
        let (lhs, rhs) = match claim {
            Claim::ChebyshevFromOdd => match halve_at_double(odd[n].poly()) {
                Some(h) => (h, cheb[n].clone()),
                None => (odd[n].poly().compose(&IntPoly::from_i64s(&[0, 2])), cheb[n].scale(&BigInt::from(2))),
            },
            Claim::EvenAbsFibonacci => (even[n].poly().abs_coeffs(), fib[n + 1].clone()),
            Claim::PrimeAbsLucas => (prime[n].poly().abs_coeffs(), luc[n + 1].clone()),
            Claim::PrimeAbsFibonacci => (prime[n].poly().abs_coeffs(), fib[n + 1].clone()),
            Claim::OddAbsLucas => (odd[n].poly().abs_coeffs(), luc[n].clone()),
            Claim::EvenAbsFibonacciSum => (even[n].poly().abs_coeffs(), &fib[n + 1] + &fib[n]),
        };
        first_difference(n, &lhs, &rhs)
    });
    ClaimResult { claim, n_max, first_mismatch }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_families() {
        assert_eq!(chebyshev_first_kind(3)[3], IntPoly::from_i64s(&[0, -3, 0, 4]));
        assert_eq!(fibonacci(5)[5], IntPoly::from_i64s(&[1, 0, 3, 0, 1]));
        assert_eq!(lucas(3)[3], IntPoly::from_i64s(&[0, 3, 0, 1]));
    }

    #[test]
    fn corrected_claims_hold() {
        for claim in Claim::CORRECTED {
            let r = check_claim(claim, 20);
            assert!(r.holds(), "{claim}: {:?}", r.first_mismatch);
        }
    }

    #[test]
    fn stated_even_pairing_fails_at_first_step() {
        let r = check_claim(Claim::EvenAbsFibonacci, 20);
        let m = r.first_mismatch.unwrap();
        // |M_e(1)| = x + 1 but F_2 = x
        assert_eq!((m.n, m.power), (1, 0));
        assert_eq!(m.multiplier_coeff, BigInt::from(1));
        assert_eq!(m.classical_coeff, BigInt::from(0));
    }
}
