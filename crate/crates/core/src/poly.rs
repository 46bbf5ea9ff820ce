//! Exact integer-coefficient polynomials in one variable `m`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial over the integers, coefficients stored constant term first,
/// with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> IntPolynomial {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> IntPolynomial {
        IntPolynomial::from_coeffs(vec![c.into()])
    }

    /// The variable `m` itself.
    pub fn var() -> IntPolynomial {
        IntPolynomial::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// The linear polynomial `m - c`.
    pub fn var_minus(c: impl Into<BigInt>) -> IntPolynomial {
        IntPolynomial::from_coeffs(vec![-c.into(), BigInt::one()])
    }

    /// Builds from a constant-first coefficient list, trimming trailing
    /// zeros to canonical form.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPolynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn evaluate(&self, m: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * m + c;
        }
        acc
    }

    pub fn evaluate_u64(&self, m: u64) -> BigInt {
        self.evaluate(&BigInt::from(m))
    }

    pub fn pow(&self, exp: u32) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact long division. Fails with an internal error when the divisor
    /// is zero, does not divide exactly, or has a leading coefficient that
    /// does not divide the intermediate remainders over the integers.
    pub fn divide_exact(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        if divisor.is_zero() {
            return Err(Error::Internal("polynomial division by zero".into()));
        }
        if self.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let dd = divisor.degree().unwrap();
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let top = rem.last().unwrap().clone();
            if (&top % lead) != BigInt::zero() {
                return Err(Error::Internal(format!(
                    "polynomial division leaves non-integer quotient: {top} / {lead}"
                )));
            }
            let q = &top / lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            quot[k] = q;
            while rem.last().is_some_and(|c| c.is_zero()) && rem.len() > dd {
                rem.pop();
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Internal(
                "polynomial division leaves a nonzero remainder".into(),
            ));
        }
        Ok(IntPolynomial::from_coeffs(quot))
    }

    /// Human form, highest power first: `m^4 - 4m^3 + 6m^2 - 3m`.
    pub fn to_human(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if mag.is_one() && deg > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var_part = match deg {
                0 => String::new(),
                1 => "m".into(),
                _ => format!("m^{deg}"),
            };
            out.push_str(&coeff_part);
            out.push_str(&var_part);
        }
        out
    }

    /// Machine form: JSON array of integer literals, constant term first.
    pub fn to_json(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

// Debug prints the human form; handy in assertion diffs.
impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_human())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_human())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}
