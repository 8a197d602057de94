//! Rational functions: normalized quotients of two polynomials.
//!
//! `RatFun` keeps the canonical representative of each quotient: the
//! denominator is monic and nonzero, numerator and denominator are coprime,
//! and zero is 0/1. Equality is therefore a structural comparison.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde_json::Value;

use crate::error::{Error, Result};
use crate::poly::{poly_gcd, Poly, Var};
use crate::rational::Rat;

/// A quotient of polynomials in lowest terms with monic denominator.
#[derive(Debug, Clone, Eq)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Canonicalize `num/den`: reduce by the gcd and make the denominator
    /// monic. Panics if `den` is zero or the variable tags differ.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function denominator is zero");
        assert_eq!(
            num.var(),
            den.var(),
            "variable tag mismatch: {} vs {}",
            num.var(),
            den.var()
        );
        if num.is_zero() {
            return RatFun {
                num,
                den: Poly::one(den.var()),
            };
        }
        let g = poly_gcd(&num, &den);
        let num = num.exact_div(&g);
        let den = den.exact_div(&g);
        let lc = den.leading_coeff().cloned().expect("nonzero denominator");
        RatFun {
            num: num.scale_div(&lc),
            den: den.scale_div(&lc),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        let den = Poly::one(p.var());
        RatFun { num: p, den }
    }

    pub fn from_rat(var: Var, c: Rat) -> Self {
        Self::from_poly(Poly::constant(var, c))
    }

    pub fn zero(var: Var) -> Self {
        Self::from_poly(Poly::zero(var))
    }

    pub fn one(var: Var) -> Self {
        Self::from_poly(Poly::one(var))
    }

    // ---- Queries ----

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True if the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Reciprocal. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of the zero rational function");
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Evaluate at a rational point; `None` at a pole of the reduced form.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if num_traits::Zero::is_zero(&d) {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    // ---- Serialization ----

    /// JSON form: `{"num": [...], "den": [...]}` with polynomial arrays.
    pub fn to_json(&self) -> Value {
        serde_json::json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }

    /// Parse the JSON object form, tagging both parts with `var`.
    pub fn from_json(var: Var, v: &Value) -> Result<RatFun> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse(format!("expected num/den object, got {v}")))?;
        let num = obj
            .get("num")
            .ok_or_else(|| Error::Parse("missing 'num'".into()))?;
        let den = obj
            .get("den")
            .ok_or_else(|| Error::Parse("missing 'den'".into()))?;
        let num = Poly::from_json(var, num)?;
        let den = Poly::from_json(var, den)?;
        if den.is_zero() {
            return Err(Error::Parse("zero denominator polynomial".into()));
        }
        Ok(RatFun::new(num, den))
    }
}

impl Poly {
    /// Substitute `subst` for this polynomial's variable, by Horner over the
    /// rational-function field. The result lives in `subst`'s variable.
    pub fn compose(&self, subst: &RatFun) -> RatFun {
        let var = subst.var();
        let mut acc = RatFun::zero(var);
        for c in self.coeffs().iter().rev() {
            acc = &(&acc * subst) + &RatFun::from_rat(var, c.clone());
        }
        acc
    }
}

// Canonical forms make equality structural. In debug builds the
// cross-multiplication route is checked as well.
impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        if self.var() != other.var() {
            return false;
        }
        let structural = self.num == other.num && self.den == other.den;
        debug_assert_eq!(
            structural,
            &self.num * &other.den == &other.num * &self.den,
            "canonical-form and cross-multiplication equality disagree"
        );
        structural
    }
}

// ---- Arithmetic ----

// a/b + c/d over the lcm of b and d, so the final reduction only has to
// chase the leftover factor of gcd(b, d)
fn add_impl(a: &RatFun, b: &RatFun) -> RatFun {
    let g = poly_gcd(&a.den, &b.den);
    let a_scale = b.den.exact_div(&g);
    let b_scale = a.den.exact_div(&g);
    RatFun::new(
        &(&a.num * &a_scale) + &(&b.num * &b_scale),
        &a.den * &a_scale,
    )
}

fn sub_impl(a: &RatFun, b: &RatFun) -> RatFun {
    add_impl(a, &-b)
}

// cross-cancel before multiplying: (a/b)(c/d) with g1 = gcd(a, d),
// g2 = gcd(c, b) keeps the gcd in `new` small
fn mul_impl(a: &RatFun, b: &RatFun) -> RatFun {
    assert_eq!(
        a.var(),
        b.var(),
        "variable tag mismatch: {} vs {}",
        a.var(),
        b.var()
    );
    if a.is_zero() || b.is_zero() {
        return RatFun::zero(a.var());
    }
    let g1 = poly_gcd(&a.num, &b.den);
    let g2 = poly_gcd(&b.num, &a.den);
    RatFun::new(
        &a.num.exact_div(&g1) * &b.num.exact_div(&g2),
        &a.den.exact_div(&g2) * &b.den.exact_div(&g1),
    )
}

fn div_impl(a: &RatFun, b: &RatFun) -> RatFun {
    assert!(!b.is_zero(), "rational function division by zero");
    mul_impl(a, &b.recip())
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<&RatFun> for &RatFun {
            type Output = RatFun;
            fn $method(self, rhs: &RatFun) -> RatFun {
                $impl_fn(self, rhs)
            }
        }
        impl $trait<RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: RatFun) -> RatFun {
                $impl_fn(&self, &rhs)
            }
        }
        impl $trait<&RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: &RatFun) -> RatFun {
                $impl_fn(&self, rhs)
            }
        }
        impl $trait<RatFun> for &RatFun {
            type Output = RatFun;
            fn $method(self, rhs: RatFun) -> RatFun {
                $impl_fn(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
