//! Exact linear algebra for the Hankel-type matrix whose entries are sums of
//! two neighbouring Catalan numbers, `C[t+i+j-2] + x C[t+i+j-1]`.
//!
//! The crate provides:
//!
//! - an exact coefficient tower: arbitrary-precision rationals ([`Rat`]),
//!   dense univariate polynomials ([`Poly`]) and canonical rational
//!   functions ([`RatFun`]);
//! - integer sequences ([`comb`]): binomials with the vanishing convention,
//!   Catalan and Fibonacci numbers;
//! - closed forms ([`closed_form`]) for the LU factors of the symbolic
//!   matrix at shift `t = 0`, together with their shapes under the
//!   substitution `x = -u/(1+u)^2`;
//! - generic elimination oracles ([`matrix`]): Doolittle LU over a field and
//!   fraction-free Bareiss determinants over a ring, implemented
//!   independently of the closed forms;
//! - executable identity checks ([`verify`]) that compare the closed forms
//!   against the oracles instance by instance and report exact results.
//!
//! Everything is immutable after construction and all operations are pure,
//! so values can be shared freely across threads. There is no floating
//! point anywhere: every comparison in this crate is exact.
//!
//! ```
//! use catalan_lu::closed_form::{lu_closed_form, minor_poly};
//! use catalan_lu::{bareiss_det, catalan_sum_matrix, RatFun};
//!
//! // the 3x3 symbolic matrix factors exactly into the closed-form pair
//! let m = catalan_sum_matrix(3, 0);
//! let lu = lu_closed_form(3);
//! let product = lu.lower.mat_mul(&lu.upper);
//! assert_eq!(product, m.map(|p| RatFun::from_poly(p.clone())));
//!
//! // and its determinant is the closed-form minor polynomial
//! assert_eq!(bareiss_det(&m), minor_poly(3));
//! ```

pub mod closed_form;
pub mod comb;
mod error;
pub mod json;
pub mod matrix;
pub mod poly;
pub mod ratfun;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::{
    bareiss_det, catalan_sum_matrix, catalan_sum_matrix_at, doolittle_lu, Field, LuPair, Matrix,
    Ring,
};
pub use poly::{poly_gcd, Poly, Var};
pub use ratfun::RatFun;
pub use rational::{parse_rat, rat_to_string, Rat};
