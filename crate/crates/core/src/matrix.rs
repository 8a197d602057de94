//! Dense matrices over an exact ring or field, the Catalan-sum matrix
//! builder, and two independently implemented elimination routines:
//! Doolittle LU over a field and fraction-free Bareiss determinants over a
//! ring. The two share no code path, which is what makes cross-checking
//! them meaningful.
//!
//! Public indices are 1-based throughout; storage is 0-based row-major.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::comb::catalan;
use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::ratfun::RatFun;
use crate::rational::Rat;

// ---- Entry domains ----

/// The ring operations elimination needs, over exact entry types.
///
/// `zero_like`/`one_like` take a prototype receiver so that tagged domains
/// (polynomials carry a variable) can produce constants in the right world.
pub trait Ring: Clone + PartialEq + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// Division that the caller knows to be exact in the ring.
    /// Panics when a remainder survives.
    fn exact_div(&self, rhs: &Self) -> Self;
}

/// A ring with true division by nonzero elements.
pub trait Field: Ring {
    fn field_div(&self, rhs: &Self) -> Self;
}

impl Ring for Rat {
    fn zero_like(&self) -> Self {
        num_traits::Zero::zero()
    }
    fn one_like(&self) -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        self.field_div(rhs)
    }
}

impl Field for Rat {
    fn field_div(&self, rhs: &Self) -> Self {
        assert!(!Ring::is_zero(rhs), "field division by zero");
        self / rhs
    }
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        num_traits::Zero::zero()
    }
    fn one_like(&self) -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        assert!(num_traits::Zero::is_zero(&r), "inexact integer division");
        q
    }
}

impl Ring for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(self.var())
    }
    fn one_like(&self) -> Self {
        Poly::one(self.var())
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        Poly::exact_div(self, rhs)
    }
}

impl Ring for RatFun {
    fn zero_like(&self) -> Self {
        RatFun::zero(self.var())
    }
    fn one_like(&self) -> Self {
        RatFun::one(self.var())
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        self.field_div(rhs)
    }
}

impl Field for RatFun {
    fn field_div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

// ---- Matrix ----

/// Dense row-major matrix over a ring of exact entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    /// Build from nested rows. Panics on an empty or ragged layout.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(cols > 0, "matrix needs at least one column");
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "ragged rows in matrix literal"
        );
        let r = rows.len();
        Matrix {
            rows: r,
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Build entrywise; `f` receives 1-based `(i, j)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// `n x n` identity in the world of `sample`.
    pub fn identity_like(n: usize, sample: &T) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                sample.one_like()
            } else {
                sample.zero_like()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 1-based `(i, j)`.
    pub fn at(&self, i: usize, j: usize) -> &T {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "index ({i}, {j}) outside {}x{} matrix (indices are 1-based)",
            self.rows,
            self.cols
        );
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (1..=self.rows).all(|i| (1..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    /// Entrywise image under `f`.
    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Exact matrix product. Panics on a dimension mismatch.
    pub fn mat_mul(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.cols, rhs.rows,
            "dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = self.at(i, 1).ring_mul(rhs.at(1, j));
            for p in 2..=self.cols {
                acc = acc.ring_add(&self.at(i, p).ring_mul(rhs.at(p, j)));
            }
            acc
        })
    }

    /// Product of the main-diagonal entries.
    pub fn diag_product(&self) -> T {
        assert!(self.is_square(), "diagonal product of a non-square matrix");
        let mut acc = self.at(1, 1).clone();
        for k in 2..=self.rows {
            acc = acc.ring_mul(self.at(k, k));
        }
        acc
    }
}

// ---- Catalan-sum matrices ----

fn catalan_entry_indices(i: usize, j: usize, t: u64) -> (u64, u64) {
    let s = t + (i + j - 2) as u64;
    (s, s + 1)
}

/// The symmetric `n x n` matrix whose `(i, j)` entry is
/// `C[t+i+j-2] + x * C[t+i+j-1]`, with degree-one polynomial entries.
pub fn catalan_sum_matrix(n: usize, t: u64) -> Matrix<Poly> {
    assert!(n >= 1, "matrix dimension must be at least 1");
    let m = Matrix::from_fn(n, n, |i, j| {
        let (a, b) = catalan_entry_indices(i, j, t);
        Poly::from_coeffs(
            Var::X,
            vec![Rat::from_integer(catalan(a)), Rat::from_integer(catalan(b))],
        )
    });
    assert!(m.is_symmetric(), "Catalan-sum matrix must be symmetric");
    m
}

/// The same matrix with `x` specialized to an exact rational value.
pub fn catalan_sum_matrix_at(n: usize, t: u64, x: &Rat) -> Matrix<Rat> {
    assert!(n >= 1, "matrix dimension must be at least 1");
    let m = Matrix::from_fn(n, n, |i, j| {
        let (a, b) = catalan_entry_indices(i, j, t);
        Rat::from_integer(catalan(a)) + x * Rat::from_integer(catalan(b))
    });
    assert!(m.is_symmetric(), "Catalan-sum matrix must be symmetric");
    m
}

// ---- Doolittle LU over a field ----

/// A unit-lower-triangular / upper-triangular factor pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LuPair<T> {
    pub lower: Matrix<T>,
    pub upper: Matrix<T>,
}

/// Doolittle elimination without pivoting: `lower * upper == m` exactly,
/// `lower` has a unit diagonal.
///
/// No row exchanges are attempted; a vanishing pivot means the k-th leading
/// principal minor is zero and is reported as [`Error::ZeroPivot`].
#[allow(clippy::needless_range_loop)] // rows and columns of several matrices in lockstep
pub fn doolittle_lu<T: Field>(m: &Matrix<T>) -> Result<LuPair<T>> {
    assert!(m.is_square(), "LU factorization needs a square matrix");
    let n = m.rows();
    let zero = m.at(1, 1).zero_like();
    let one = m.at(1, 1).one_like();
    let mut lower = vec![vec![zero.clone(); n]; n];
    let mut upper = vec![vec![zero.clone(); n]; n];

    for k in 0..n {
        for j in k..n {
            // U[k,j] = M[k,j] - sum_{p<k} L[k,p] U[p,j]
            let mut acc = m.at(k + 1, j + 1).clone();
            for p in 0..k {
                acc = acc.ring_sub(&lower[k][p].ring_mul(&upper[p][j]));
            }
            upper[k][j] = acc;
        }
        if Ring::is_zero(&upper[k][k]) {
            return Err(Error::ZeroPivot { minor: k + 1 });
        }
        lower[k][k] = one.clone();
        for i in k + 1..n {
            // L[i,k] = (M[i,k] - sum_{p<k} L[i,p] U[p,k]) / U[k,k]
            let mut acc = m.at(i + 1, k + 1).clone();
            for p in 0..k {
                acc = acc.ring_sub(&lower[i][p].ring_mul(&upper[p][k]));
            }
            lower[i][k] = acc.field_div(&upper[k][k]);
        }
    }

    Ok(LuPair {
        lower: Matrix::from_rows(lower),
        upper: Matrix::from_rows(upper),
    })
}

// ---- Bareiss determinant over a ring ----

/// Fraction-free determinant: every intermediate value stays in the ring and
/// every division is exact. Zero pivots are repaired by row exchanges with
/// sign tracking; a singular matrix yields the ring's zero.
pub fn bareiss_det<T: Ring>(m: &Matrix<T>) -> T {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    let zero = m.at(1, 1).zero_like();
    let mut a: Vec<Vec<T>> = (1..=n)
        .map(|i| (1..=n).map(|j| m.at(i, j).clone()).collect())
        .collect();
    let mut negate = false;
    let mut prev = m.at(1, 1).one_like();

    for k in 0..n - 1 {
        if Ring::is_zero(&a[k][k]) {
            match (k + 1..n).find(|&r| !Ring::is_zero(&a[r][k])) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return zero,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[k][k]
                    .ring_mul(&a[i][j])
                    .ring_sub(&a[i][k].ring_mul(&a[k][j]));
                a[i][j] = t.exact_div(&prev);
            }
        }
        prev = a[k][k].clone();
    }

    let det = a[n - 1][n - 1].clone();
    if negate {
        det.ring_neg()
    } else {
        det
    }
}

impl<T: Ring> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rows {
            write!(f, "[")?;
            for j in 1..=self.cols {
                if j > 1 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use num_traits::One;

    fn px(coeffs: &[i64]) -> Poly {
        Poly::from_ints(Var::X, coeffs)
    }

    fn rat_matrix(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    fn int_matrix(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    // ---- construction ----

    #[test]
    fn catalan_sum_matrix_n1() {
        let m = catalan_sum_matrix(1, 0);
        assert_eq!(m.at(1, 1), &px(&[1, 1]));
    }

    #[test]
    fn catalan_sum_matrix_n2() {
        let m = catalan_sum_matrix(2, 0);
        assert_eq!(m.at(1, 1), &px(&[1, 1]));
        assert_eq!(m.at(1, 2), &px(&[1, 2]));
        assert_eq!(m.at(2, 1), &px(&[1, 2]));
        assert_eq!(m.at(2, 2), &px(&[2, 5]));
    }

    #[test]
    fn catalan_sum_matrix_numeric_at_one() {
        let m = catalan_sum_matrix_at(2, 0, &rat_int(1));
        assert_eq!(m, rat_matrix(&[&[2, 3], &[3, 7]]));
    }

    #[test]
    fn catalan_sum_matrix_with_shift() {
        // t = 1: entries C_{i+j-1} + x C_{i+j}
        let m = catalan_sum_matrix(2, 1);
        assert_eq!(m.at(1, 1), &px(&[1, 2]));
        assert_eq!(m.at(1, 2), &px(&[2, 5]));
        assert_eq!(m.at(2, 2), &px(&[5, 14]));
    }

    #[test]
    fn symmetry_holds_for_larger_sizes() {
        for n in 1..=8 {
            assert!(catalan_sum_matrix(n, 0).is_symmetric());
            assert!(catalan_sum_matrix(n, 3).is_symmetric());
        }
    }

    #[test]
    #[should_panic(expected = "1-based")]
    fn zero_index_is_rejected() {
        let m = catalan_sum_matrix(2, 0);
        let _ = m.at(0, 1);
    }

    // ---- mat_mul ----

    #[test]
    fn mat_mul_identity() {
        let a = rat_matrix(&[&[1, 2], &[3, 4]]);
        let id = Matrix::identity_like(2, a.at(1, 1));
        assert_eq!(a.mat_mul(&id), a);
        assert_eq!(id.mat_mul(&a), a);
    }

    #[test]
    fn mat_mul_column_swap() {
        let a = rat_matrix(&[&[1, 2], &[3, 4]]);
        let swap = rat_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mat_mul(&swap), rat_matrix(&[&[2, 1], &[4, 3]]));
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn mat_mul_dimension_mismatch_panics() {
        let a = rat_matrix(&[&[1, 2], &[3, 4]]);
        let b = rat_matrix(&[&[1, 2]]);
        let _ = a.mat_mul(&b);
    }

    // ---- Doolittle ----

    #[test]
    fn doolittle_identity() {
        let id: Matrix<Rat> = Matrix::identity_like(3, &rat_int(1));
        let lu = doolittle_lu(&id).unwrap();
        assert_eq!(lu.lower, id);
        assert_eq!(lu.upper, id);
    }

    #[test]
    fn doolittle_on_symbolic_2x2() {
        // one elimination step by hand: L[2,1] = (1+2x)/(1+x),
        // U[2,2] = (2+5x) - (1+2x)^2/(1+x) = (1+3x+x^2)/(1+x)
        let m = catalan_sum_matrix(2, 0).map(|p| RatFun::from_poly(p.clone()));
        let lu = doolittle_lu(&m).unwrap();
        assert_eq!(lu.lower.at(2, 1), &RatFun::new(px(&[1, 2]), px(&[1, 1])));
        assert_eq!(lu.upper.at(2, 2), &RatFun::new(px(&[1, 3, 1]), px(&[1, 1])));
        assert_eq!(lu.lower.at(1, 2), &RatFun::zero(Var::X));
        assert_eq!(lu.upper.at(1, 1), &RatFun::from_poly(px(&[1, 1])));
        assert_eq!(lu.lower.mat_mul(&lu.upper), m);
    }

    #[test]
    fn doolittle_zero_pivot_is_reported() {
        let m = rat_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(doolittle_lu(&m), Err(Error::ZeroPivot { minor: 1 }));
        // second leading minor vanishes: [[1,1],[1,1]]
        let m = rat_matrix(&[&[1, 1], &[1, 1]]);
        assert_eq!(doolittle_lu(&m), Err(Error::ZeroPivot { minor: 2 }));
    }

    #[test]
    fn doolittle_reconstructs_random_example() {
        let m = rat_matrix(&[&[2, 1, 1], &[4, -6, 0], &[-2, 7, 2]]);
        let lu = doolittle_lu(&m).unwrap();
        assert_eq!(lu.lower.mat_mul(&lu.upper), m);
        for i in 1..=3 {
            assert!(lu.lower.at(i, i).is_one());
            for j in i + 1..=3 {
                assert!(Ring::is_zero(lu.lower.at(i, j)));
            }
        }
    }

    // ---- Bareiss ----

    #[test]
    fn bareiss_identity() {
        let id: Matrix<Rat> = Matrix::identity_like(4, &rat_int(1));
        assert_eq!(bareiss_det(&id), rat_int(1));
    }

    #[test]
    fn bareiss_symbolic_2x2() {
        // det M_2(x) = (1+x)(2+5x) - (1+2x)^2 = 1 + 3x + x^2
        let det = bareiss_det(&catalan_sum_matrix(2, 0));
        assert_eq!(det, px(&[1, 3, 1]));
    }

    #[test]
    fn bareiss_numeric_3x3_fibonacci() {
        let det = bareiss_det(&catalan_sum_matrix_at(3, 0, &rat_int(1)));
        assert_eq!(det, rat_int(13));
    }

    #[test]
    fn bareiss_handles_zero_pivot_with_row_exchange() {
        let m = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(bareiss_det(&m), BigInt::from(-1));
        let m = int_matrix(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 1]]);
        // det = 0*(0-0) - 2*(3-0) + 1*(3-0) = -3
        assert_eq!(bareiss_det(&m), BigInt::from(-3));
    }

    #[test]
    fn bareiss_singular_matrix_is_zero() {
        let m = int_matrix(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(bareiss_det(&m), BigInt::from(0));
        let m = int_matrix(&[&[0, 0], &[0, 0]]);
        assert_eq!(bareiss_det(&m), BigInt::from(0));
    }

    #[test]
    fn bareiss_stays_fraction_free_over_integers() {
        // 4x4 with a known determinant; every intermediate division is exact
        let m = int_matrix(&[&[3, 1, 4, 1], &[5, 9, 2, 6], &[5, 3, 5, 8], &[9, 7, 9, 3]]);
        assert_eq!(bareiss_det(&m), BigInt::from(98));
    }

    #[test]
    fn oracle_agreement_on_symbolic_matrices() {
        // Doolittle pivot product over Q(x) vs Bareiss over Q[x]
        for n in 1..=10 {
            let m = catalan_sum_matrix(n, 0);
            let det_ring = bareiss_det(&m);
            let lu = doolittle_lu(&m.map(|p| RatFun::from_poly(p.clone()))).unwrap();
            let det_field = lu.upper.diag_product();
            assert_eq!(det_field, RatFun::from_poly(det_ring), "n = {n}");
        }
    }

    #[test]
    fn evaluation_commutes_with_determinant() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let x0 = rat(rng.random_range(-50..=50), rng.random_range(1..=20));
            for n in 1..=8 {
                let sym = bareiss_det(&catalan_sum_matrix(n, 0));
                let num = bareiss_det(&catalan_sum_matrix_at(n, 0, &x0));
                assert_eq!(sym.eval(&x0), num, "n = {n}, x0 = {x0}");
            }
        }
    }
}
