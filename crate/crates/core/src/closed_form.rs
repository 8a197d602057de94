//! Explicit closed forms for the LU factors of the Catalan-sum matrix.
//!
//! Everything is generated by two families: `minor_poly(k)`, the k-th
//! leading principal minor of the symbolic matrix (a degree-k polynomial in
//! x), and `kernel_poly(k, i)`, a single polynomial family that yields both
//! triangular factors,
//!
//!   lower[i,k] = kernel(k,i) / minor(k),
//!   upper[k,j] = kernel(k,j) / minor(k-1).
//!
//! The `*_u` functions give the counterparts under the substitution
//! x = -u/(1+u)^2, where the minors collapse to a rational shape that makes
//! the telescoping partial-fraction split possible.

use num_bigint::BigInt;

use crate::comb::binomial;
use crate::matrix::{LuPair, Matrix};
use crate::poly::{Poly, Var};
use crate::ratfun::RatFun;
use crate::rational::Rat;

/// `sum_{0<=r<=k} binomial(2k-r, r) x^r`: the k-th leading principal minor
/// of the Catalan-sum matrix as a closed-form polynomial. Degree exactly k,
/// constant term 1; `minor_poly(0) = 1`.
pub fn minor_poly(k: u64) -> Poly {
    let coeffs = (0..=k)
        .map(|r| Rat::from_integer(binomial(2 * k - r, r as i64)))
        .collect();
    Poly::from_coeffs(Var::X, coeffs)
}

/// The shared numerator polynomial of both triangular factors:
///
/// `binomial(2i, i-k) / (i(2i-1)) * sum_{0<=r<=k} binomial(2k-r, r)/(2k-r) *
///  (ri + 2ik^2 - ik - 2rk^2 + 2k^3 - k^2) x^r`.
///
/// Vanishes identically for `i < k` because the leading binomial does; no
/// branch enforces that. Coefficients are rational in general.
pub fn kernel_poly(k: u64, i: u64) -> Poly {
    assert!(k >= 1 && i >= 1, "kernel indices start at 1");
    let mut coeffs = Vec::with_capacity(k as usize + 1);
    let (bi, bk) = (BigInt::from(i), BigInt::from(k));
    let ksq = &bk * &bk;
    for r in 0..=k {
        let br = BigInt::from(r);
        let w = &br * &bi + 2 * &bi * &ksq - &bi * &bk - 2 * &br * &ksq + 2 * &ksq * &bk - &ksq;
        let num = binomial(2 * k - r, r as i64) * w;
        coeffs.push(Rat::new(num, BigInt::from(2 * k - r)));
    }
    let inner = Poly::from_coeffs(Var::X, coeffs);
    let prefactor = Rat::new(
        binomial(2 * i, i as i64 - k as i64),
        BigInt::from(i) * BigInt::from(2 * i - 1),
    );
    inner.scale(&prefactor)
}

/// The closed-form factor pair for the `n x n` Catalan-sum matrix:
/// `lower[i,k] = kernel(k,i)/minor(k)` and `upper[k,j] = kernel(k,j)/minor(k-1)`
/// as canonical rational functions.
///
/// Unit diagonal and triangularity are asserted, not forced: they emerge
/// from the vanishing of the kernel binomial alone.
pub fn lu_closed_form(n: usize) -> LuPair<RatFun> {
    assert!(n >= 1, "factor dimension must be at least 1");
    let lower = Matrix::from_fn(n, n, |i, k| {
        RatFun::new(kernel_poly(k as u64, i as u64), minor_poly(k as u64))
    });
    let upper = Matrix::from_fn(n, n, |k, j| {
        RatFun::new(kernel_poly(k as u64, j as u64), minor_poly(k as u64 - 1))
    });
    for i in 1..=n {
        assert!(lower.at(i, i).is_one(), "unit diagonal failed at {i}");
        for k in i + 1..=n {
            assert!(lower.at(i, k).is_zero(), "lower triangularity failed");
            assert!(upper.at(k, i).is_zero(), "upper triangularity failed");
        }
    }
    LuPair { lower, upper }
}

/// The substitution `x = -u/(1+u)^2` as a rational function in u.
pub fn x_of_u() -> RatFun {
    RatFun::new(
        Poly::from_ints(Var::U, &[0, -1]),
        Poly::from_ints(Var::U, &[1, 1]).pow(2),
    )
}

fn one_minus_u_pow(exp: u32) -> Poly {
    &Poly::one(Var::U) - &Poly::monomial(Var::U, Rat::from_integer(BigInt::from(1)), exp as usize)
}

fn one_plus_u_pow(exp: u32) -> Poly {
    Poly::from_ints(Var::U, &[1, 1]).pow(exp)
}

/// `minor_poly(k)` under the substitution, in closed form:
/// `(1 - u^(2k+1)) / ((1-u)(1+u)^(2k))`.
pub fn minor_u(k: u64) -> RatFun {
    let num = one_minus_u_pow(2 * k as u32 + 1);
    let den = &Poly::from_ints(Var::U, &[1, -1]) * &one_plus_u_pow(2 * k as u32);
    RatFun::new(num, den)
}

/// `kernel_poly(k, j)` under the substitution, in closed form: the sum of
///
/// `(1 - u^(2k)) * binomial(2j, j-k)/(2j(2j-1)) * (2k^2 - j) / ((1-u)(1+u)^(2k-1))`
///
/// and
///
/// `(1 + u^(2k)) * binomial(2j, j-k) * k / (2j (1+u)^(2k))`,
///
/// assembled literally term by term so it can be checked against the
/// x-world definition rather than trusted.
pub fn kernel_u(k: u64, j: u64) -> RatFun {
    assert!(k >= 1 && j >= 1, "kernel indices start at 1");
    let b = binomial(2 * j, j as i64 - k as i64);

    let c1 = Rat::new(
        &b * (2 * BigInt::from(k) * BigInt::from(k) - BigInt::from(j)),
        BigInt::from(2 * j) * BigInt::from(2 * j - 1),
    );
    let term1 = RatFun::new(
        one_minus_u_pow(2 * k as u32).scale(&c1),
        &Poly::from_ints(Var::U, &[1, -1]) * &one_plus_u_pow(2 * k as u32 - 1),
    );

    let c2 = Rat::new(b * BigInt::from(k), BigInt::from(2 * j));
    let term2 = RatFun::new(
        (&Poly::one(Var::U)
            + &Poly::monomial(Var::U, Rat::from_integer(BigInt::from(1)), 2 * k as usize))
            .scale(&c2),
        one_plus_u_pow(2 * k as u32),
    );

    &term1 + &term2
}

/// `1 / (minor(k) minor(k-1))` assembled directly from [`minor_u`].
pub fn minor_pair_recip(k: u64) -> RatFun {
    assert!(k >= 1, "adjacent-minor product needs k >= 1");
    (&minor_u(k) * &minor_u(k - 1)).recip()
}

/// The same quantity assembled from its telescoping partial-fraction split:
/// `(1-u)(1+u)^(4k-3) [ 1/(1-u^(2k-1)) - u^2/(1-u^(2k+1)) ]`.
pub fn minor_pair_recip_split(k: u64) -> RatFun {
    assert!(k >= 1, "adjacent-minor product needs k >= 1");
    let prefactor = &Poly::from_ints(Var::U, &[1, -1]) * &one_plus_u_pow(4 * k as u32 - 3);
    let first = RatFun::new(Poly::one(Var::U), one_minus_u_pow(2 * k as u32 - 1));
    let second = RatFun::new(
        Poly::monomial(Var::U, Rat::from_integer(BigInt::from(1)), 2),
        one_minus_u_pow(2 * k as u32 + 1),
    );
    RatFun::from_poly(prefactor) * (first - second)
}
