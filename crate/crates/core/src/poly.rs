//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored in ascending degree order. The representation is
//! canonical: an empty vector is the zero polynomial, otherwise the last
//! coefficient is nonzero. Each polynomial carries a variable tag; binary
//! operations on mismatched tags panic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::rational::{parse_rat, rat_to_string, Rat};

/// The indeterminate a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    U,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X => write!(f, "x"),
            Var::U => write!(f, "u"),
        }
    }
}

/// A dense univariate polynomial with `Rat` coefficients and a variable tag.
///
/// Invariants:
///   1. `coeffs` is empty (the zero polynomial) or ends in a nonzero coefficient.
///   2. Binary arithmetic requires equal variable tags and panics otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    var: Var,
    coeffs: Vec<Rat>,
}

impl Poly {
    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn check_var(&self, other: &Poly) {
        assert_eq!(
            self.var, other.var,
            "variable tag mismatch: {} vs {}",
            self.var, other.var
        );
    }

    // ---- Constructors ----

    /// The zero polynomial (empty coefficient list).
    pub fn zero(var: Var) -> Self {
        Poly {
            var,
            coeffs: Vec::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one(var: Var) -> Self {
        Poly {
            var,
            coeffs: vec![Rat::one()],
        }
    }

    /// A constant polynomial; the zero constant yields the zero polynomial.
    pub fn constant(var: Var, c: Rat) -> Self {
        if c.is_zero() {
            Self::zero(var)
        } else {
            Poly {
                var,
                coeffs: vec![c],
            }
        }
    }

    /// The bare indeterminate.
    pub fn variable(var: Var) -> Self {
        Poly {
            var,
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    /// `c * v^deg`; the zero coefficient yields the zero polynomial.
    pub fn monomial(var: Var, c: Rat, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero(var);
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { var, coeffs }
    }

    /// From coefficients in ascending degree order; trailing zeros are stripped.
    pub fn from_coeffs(var: Var, coeffs: Vec<Rat>) -> Self {
        let mut p = Poly { var, coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from integer coefficients, ascending.
    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            var,
            coeffs
                .iter()
                .map(|&c| crate::rational::rat_int(c))
                .collect(),
        )
    }

    // ---- Queries ----

    pub fn var(&self) -> Var {
        self.var
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of degree `i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    // ---- Scalar operations ----

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.var);
        }
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|ci| ci * c).collect(),
        }
    }

    /// Divide every coefficient by `c`. Panics if `c` is zero.
    pub fn scale_div(&self, c: &Rat) -> Poly {
        assert!(!c.is_zero(), "polynomial scalar division by zero");
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|ci| ci / c).collect(),
        }
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn make_monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let lc = lc.clone();
                self.scale_div(&lc)
            }
        }
    }

    /// Content: gcd of coefficient numerators over lcm of denominators.
    /// The zero polynomial has content zero.
    pub fn content(&self) -> Rat {
        use num_integer::Integer;
        let mut num_gcd = num_bigint::BigInt::from(0);
        let mut den_lcm = num_bigint::BigInt::from(1);
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            Rat::zero()
        } else {
            Rat::new(num_gcd, den_lcm)
        }
    }

    /// Divide out the content: integer coefficients with gcd 1 (and the
    /// leading coefficient's sign preserved). Zero stays zero.
    pub fn primitive_part(&self) -> Poly {
        let c = self.content();
        if c.is_zero() {
            self.clone()
        } else {
            self.scale_div(&c)
        }
    }

    // ---- Evaluation and powers ----

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `self^exp` by repeated squaring.
    pub fn pow(&self, exp: u32) -> Poly {
        let mut result = Poly::one(self.var);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    // ---- Division ----

    /// Quotient and remainder of division by `d`. Panics if `d` is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        self.check_var(d);
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        if self.coeffs.len() < d.coeffs.len() {
            return (Poly::zero(self.var), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rat::zero(); rem.len() - dd];
        let lead = d.coeffs.last().unwrap();
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / lead;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &q * dc;
                rem[i - dd + j] -= t;
            }
            quo[i - dd] = q;
        }
        (
            Poly::from_coeffs(self.var, quo),
            Poly::from_coeffs(self.var, rem),
        )
    }

    /// Division known a priori to be exact. Panics if a remainder survives.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    // ---- Serialization ----

    /// JSON form: array of `num/den` strings, ascending degree.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|c| Value::String(rat_to_string(c)))
                .collect(),
        )
    }

    /// Parse the JSON array form, tagging the result with `var`.
    pub fn from_json(var: Var, v: &Value) -> Result<Poly> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse(format!("expected coefficient array, got {v}")))?;
        let mut coeffs = Vec::with_capacity(arr.len());
        for c in arr {
            let s = c
                .as_str()
                .ok_or_else(|| Error::Parse(format!("expected rational string, got {c}")))?;
            coeffs.push(parse_rat(s)?);
        }
        Ok(Poly::from_coeffs(var, coeffs))
    }
}

/// Monic greatest common divisor by the Euclidean algorithm over the
/// rational coefficient field. Panics if both inputs are zero.
///
/// Remainders are rescaled to their primitive parts at every step; gcd over
/// a field is scale-invariant and the rescaling keeps coefficient sizes from
/// compounding across iterations.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    a.check_var(b);
    assert!(
        !(a.is_zero() && b.is_zero()),
        "gcd of two zero polynomials is undefined"
    );
    let mut a = a.primitive_part();
    let mut b = b.primitive_part();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r.primitive_part();
    }
    a.make_monic()
}

// ---- Arithmetic ----

fn add_impl(a: &Poly, b: &Poly) -> Poly {
    a.check_var(b);
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut coeffs = Vec::with_capacity(n);
    for i in 0..n {
        coeffs.push(a.coeff(i) + b.coeff(i));
    }
    Poly::from_coeffs(a.var, coeffs)
}

fn sub_impl(a: &Poly, b: &Poly) -> Poly {
    a.check_var(b);
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut coeffs = Vec::with_capacity(n);
    for i in 0..n {
        coeffs.push(a.coeff(i) - b.coeff(i));
    }
    Poly::from_coeffs(a.var, coeffs)
}

fn mul_impl(a: &Poly, b: &Poly) -> Poly {
    a.check_var(b);
    if a.is_zero() || b.is_zero() {
        return Poly::zero(a.var);
    }
    let mut coeffs = vec![Rat::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, ca) in a.coeffs.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.coeffs.iter().enumerate() {
            coeffs[i + j] += ca * cb;
        }
    }
    Poly::from_coeffs(a.var, coeffs)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $impl_fn(self, rhs)
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $impl_fn(&self, &rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $impl_fn(&self, rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $impl_fn(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

// ---- Display ----

// Canonical text form: ascending powers, terms joined by " + ", every term
// written as coeff, coeff*v or coeff*v^k with the coefficient always printed
// (signs ride on the coefficient). Unambiguous and diff-friendly.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", rat_to_string(c))?,
                1 => write!(f, "{}*{}", rat_to_string(c), self.var)?,
                _ => write!(f, "{}*{}^{}", rat_to_string(c), self.var, i)?,
            }
        }
        Ok(())
    }
}
