//! Exact integer sequences and coefficients: binomials with the vanishing
//! convention, Catalan numbers, and Fibonacci numbers.
//!
//! Indices are unsigned (negative indices are unrepresentable) and capped at
//! [`MAX_INDEX`]; results are arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Upper bound accepted for any sequence index.
pub const MAX_INDEX: u64 = 10_000;

fn check_index(n: u64) {
    assert!(n <= MAX_INDEX, "sequence index {n} exceeds cap {MAX_INDEX}");
}

// requires m <= n; each intermediate quotient is itself a binomial,
// so division stays exact
fn binomial_inner(n: u64, m: u64) -> BigInt {
    let k = m.min(n - m);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient with the vanishing convention: `binomial(n, m) = 0`
/// whenever `m < 0` or `m > n`.
pub fn binomial(n: u64, m: i64) -> BigInt {
    check_index(n);
    if m < 0 || m as u64 > n {
        return BigInt::zero();
    }
    binomial_inner(n, m as u64)
}

/// `n`-th Catalan number, `binomial(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigInt {
    check_index(n);
    let (q, r) = binomial_inner(2 * n, n).div_rem(&BigInt::from(n + 1));
    debug_assert!(r.is_zero());
    q
}

/// `n`-th Fibonacci number with `F_0 = 0, F_1 = 1`.
pub fn fibonacci(n: u64) -> BigInt {
    check_index(n);
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    for _ in 0..n {
        let next = &prev + &cur;
        prev = cur;
        cur = next;
    }
    prev
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 1), bi(4));
        assert_eq!(binomial(6, 3), bi(20)); // frozen from the Pascal oracle below
        assert_eq!(binomial(0, 0), bi(1));
        assert_eq!(binomial(10, 10), bi(1));
    }

    #[test]
    fn binomial_vanishing_convention() {
        assert_eq!(binomial(4, -1), bi(0));
        assert_eq!(binomial(4, -100), bi(0));
        assert_eq!(binomial(4, 5), bi(0));
        assert_eq!(binomial(0, 1), bi(0));
    }

    #[test]
    fn pascal_triangle_oracle() {
        // independent oracle: build rows by additions only, then compare,
        // with the vanishing convention supplying out-of-range terms
        let mut row = vec![BigInt::one()];
        for n in 1..=60u64 {
            let mut next = vec![BigInt::one()];
            for m in 1..n as usize {
                next.push(&row[m - 1] + &row[m]);
            }
            next.push(BigInt::one());
            row = next;
            for (m, expected) in row.iter().enumerate() {
                assert_eq!(&binomial(n, m as i64), expected, "binomial({n},{m})");
            }
        }
    }

    #[test]
    fn pascal_recurrence_with_vanishing_terms() {
        for n in 1..=60u64 {
            for m in 0..=n {
                let m = m as i64;
                assert_eq!(binomial(n, m), binomial(n - 1, m - 1) + binomial(n - 1, m));
            }
        }
    }

    #[test]
    fn catalan_small_values() {
        let expected: &[i64] = &[1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(n as u64), bi(c));
        }
    }

    #[test]
    fn catalan_convolution_recurrence() {
        // C_{n+1} = sum C_i C_{n-i}
        for n in 0..=30u64 {
            let mut sum = BigInt::zero();
            for i in 0..=n {
                sum += catalan(i) * catalan(n - i);
            }
            assert_eq!(catalan(n + 1), sum, "n = {n}");
        }
    }

    #[test]
    fn catalan_segner_closed_form_agreement() {
        // (n+2) C_{n+1} = 2 (2n+1) C_n
        for n in 0..=200u64 {
            assert_eq!(
                bi(n as i64 + 2) * catalan(n + 1),
                bi(2) * bi(2 * n as i64 + 1) * catalan(n)
            );
        }
    }

    #[test]
    fn fibonacci_small_values() {
        let expected: &[i64] = &[0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144];
        for (n, &f) in expected.iter().enumerate() {
            assert_eq!(fibonacci(n as u64), bi(f));
        }
    }

    #[test]
    fn fibonacci_doubling_cross_check() {
        // F_{2n+1} = F_n^2 + F_{n+1}^2
        for n in 0..=50u64 {
            let a = fibonacci(n);
            let b = fibonacci(n + 1);
            assert_eq!(fibonacci(2 * n + 1), &a * &a + &b * &b);
        }
    }

    #[test]
    #[should_panic(expected = "exceeds cap")]
    fn index_cap_is_enforced() {
        let _ = fibonacci(MAX_INDEX + 1);
    }

    #[test]
    fn large_values_spot_check() {
        assert_eq!(catalan(40).to_string(), "2622127042276492108820");
        assert_eq!(fibonacci(81).to_string(), "37889062373143906");
        assert_eq!(catalan(500), binomial(1000, 500) / bi(501));
    }
}
