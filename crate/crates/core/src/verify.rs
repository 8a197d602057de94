//! Executable verification of the closed-form identities: each check runs a
//! whole parameter range, decides every instance exactly (pass or fail, no
//! unknowns), and reports failures with both canonical values serialized.
//!
//! Instances are generated in lexicographic parameter order, so reports are
//! byte-for-byte reproducible.

use serde_json::Value;

use crate::closed_form::{
    kernel_poly, kernel_u, lu_closed_form, minor_pair_recip, minor_pair_recip_split, minor_poly,
    minor_u, x_of_u,
};
use crate::comb::{catalan, fibonacci};
use crate::matrix::{bareiss_det, catalan_sum_matrix, catalan_sum_matrix_at, doolittle_lu, Matrix};
use crate::poly::{Poly, Var};
use crate::ratfun::RatFun;
use crate::rational::{rat_int, rat_to_string, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

/// One decided check instance. `lhs`/`rhs` carry the two unequal canonical
/// values (serialized) when the instance failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub params: Value,
    pub status: Status,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
}

impl Instance {
    fn decide<T: PartialEq>(params: Value, lhs: &T, rhs: &T, ser: impl Fn(&T) -> Value) -> Self {
        if lhs == rhs {
            Instance {
                params,
                status: Status::Pass,
                lhs: None,
                rhs: None,
            }
        } else {
            Instance {
                params,
                status: Status::Fail,
                lhs: Some(ser(lhs)),
                rhs: Some(ser(rhs)),
            }
        }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("params".into(), self.params.clone());
        obj.insert(
            "status".into(),
            Value::String(match self.status {
                Status::Pass => "pass".into(),
                Status::Fail => "fail".into(),
            }),
        );
        if let Some(l) = &self.lhs {
            obj.insert("lhs".into(), l.clone());
        }
        if let Some(r) = &self.rhs {
            obj.insert("rhs".into(), r.clone());
        }
        Value::Object(obj)
    }
}

/// The outcome of one named check over its whole parameter range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub check: &'static str,
    pub instances: Vec<Instance>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.instances.iter().all(|i| i.status == Status::Pass)
    }

    pub fn failures(&self) -> usize {
        self.instances
            .iter()
            .filter(|i| i.status == Status::Fail)
            .count()
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "check": self.check,
            "instances": self.instances.iter().map(Instance::to_json).collect::<Vec<_>>(),
        })
    }
}

fn ratfun_json(r: &RatFun) -> Value {
    r.to_json()
}

fn first_mismatch(a: &Matrix<RatFun>, b: &Matrix<RatFun>) -> Option<(usize, usize)> {
    for i in 1..=a.rows() {
        for j in 1..=a.cols() {
            if a.at(i, j) != b.at(i, j) {
                return Some((i, j));
            }
        }
    }
    None
}

fn entry_fail(params: Value, i: usize, j: usize, lhs: &RatFun, rhs: &RatFun) -> Instance {
    let mut p = params;
    if let Value::Object(map) = &mut p {
        map.insert("entry".into(), serde_json::json!([i, j]));
    }
    Instance {
        params: p,
        status: Status::Fail,
        lhs: Some(lhs.to_json()),
        rhs: Some(rhs.to_json()),
    }
}

/// For each `n` in `1..=n_max`: the closed-form factors multiply back to the
/// Catalan-sum matrix, agree entrywise with the Doolittle elimination
/// factors, and the elimination factors themselves multiply back to the
/// input (the oracle output is checked, never assumed).
pub fn verify_factorization(n_max: usize) -> Report {
    assert!(n_max >= 1, "range must contain n = 1");
    let mut instances = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let params = serde_json::json!({ "n": n });
        let m = catalan_sum_matrix(n, 0).map(|p| RatFun::from_poly(p.clone()));
        let cf = lu_closed_form(n);

        let product = cf.lower.mat_mul(&cf.upper);
        if let Some((i, j)) = first_mismatch(&product, &m) {
            instances.push(entry_fail(params, i, j, product.at(i, j), m.at(i, j)));
            continue;
        }

        let oracle = match doolittle_lu(&m) {
            Ok(lu) => lu,
            Err(e) => {
                instances.push(Instance {
                    params,
                    status: Status::Fail,
                    lhs: Some(Value::String(format!("elimination failed: {e}"))),
                    rhs: None,
                });
                continue;
            }
        };
        if let Some((i, j)) = first_mismatch(&cf.lower, &oracle.lower) {
            instances.push(entry_fail(
                params,
                i,
                j,
                cf.lower.at(i, j),
                oracle.lower.at(i, j),
            ));
            continue;
        }
        if let Some((i, j)) = first_mismatch(&cf.upper, &oracle.upper) {
            instances.push(entry_fail(
                params,
                i,
                j,
                cf.upper.at(i, j),
                oracle.upper.at(i, j),
            ));
            continue;
        }

        let oracle_product = oracle.lower.mat_mul(&oracle.upper);
        if let Some((i, j)) = first_mismatch(&oracle_product, &m) {
            instances.push(entry_fail(
                params,
                i,
                j,
                oracle_product.at(i, j),
                m.at(i, j),
            ));
            continue;
        }

        instances.push(Instance {
            params,
            status: Status::Pass,
            lhs: None,
            rhs: None,
        });
    }
    Report {
        check: "factorization",
        instances,
    }
}

/// For each `(i, j)` in the grid: the k-sum of
/// `kernel(k,i) kernel(k,j) / (minor(k) minor(k-1))` over `1..=min(i,j)`
/// collapses to the degree-one entry `C[i+j-2] + x C[i+j-1]`. Terms past
/// `min(i, j)` are asserted to vanish rather than assumed.
pub fn verify_entry_sum(i_max: usize, j_max: usize) -> Report {
    assert!(i_max >= 1 && j_max >= 1, "range must contain (1, 1)");
    let mut instances = Vec::with_capacity(i_max * j_max);
    for i in 1..=i_max as u64 {
        for j in 1..=j_max as u64 {
            let top = i.min(j);
            let mut sum = RatFun::zero(Var::X);
            for k in 1..=top {
                sum = &sum + &entry_sum_term(k, i, j);
            }
            for k in top + 1..=top + 2 {
                assert!(
                    entry_sum_term(k, i, j).is_zero(),
                    "term k={k} should vanish for (i,j)=({i},{j})"
                );
            }
            let target = RatFun::from_poly(Poly::from_coeffs(
                Var::X,
                vec![
                    Rat::from_integer(catalan(i + j - 2)),
                    Rat::from_integer(catalan(i + j - 1)),
                ],
            ));
            instances.push(Instance::decide(
                serde_json::json!({ "i": i, "j": j }),
                &sum,
                &target,
                ratfun_json,
            ));
        }
    }
    Report {
        check: "entry-sum",
        instances,
    }
}

fn entry_sum_term(k: u64, i: u64, j: u64) -> RatFun {
    RatFun::new(
        &kernel_poly(k, i) * &kernel_poly(k, j),
        &minor_poly(k) * &minor_poly(k - 1),
    )
}

/// For each `n` in `1..=n_max`: the diagonal of the closed-form upper factor
/// telescopes to `minor_poly(n)`, the fraction-free determinant agrees, and
/// at `x = 1` the determinant is the odd-indexed Fibonacci number
/// `F[2n+1]`.
pub fn verify_determinant(n_max: usize) -> Report {
    assert!(n_max >= 1, "range must contain n = 1");
    let mut instances = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let params = serde_json::json!({ "n": n });
        let expected = RatFun::from_poly(minor_poly(n as u64));

        let telescoped = lu_closed_form(n).upper.diag_product();
        if telescoped != expected {
            instances.push(Instance::decide(
                params,
                &telescoped,
                &expected,
                ratfun_json,
            ));
            continue;
        }

        let det = RatFun::from_poly(bareiss_det(&catalan_sum_matrix(n, 0)));
        if det != expected {
            instances.push(Instance::decide(params, &det, &expected, ratfun_json));
            continue;
        }

        let at_one = bareiss_det(&catalan_sum_matrix_at(n, 0, &rat_int(1)));
        let fib = Rat::from_integer(fibonacci(2 * n as u64 + 1));
        instances.push(Instance::decide(params, &at_one, &fib, |r| {
            Value::String(rat_to_string(r))
        }));
    }
    Report {
        check: "determinant",
        instances,
    }
}

/// The three u-world consistency checks, aggregated: the substitution
/// `x = -u/(1+u)^2` maps `minor_poly` and `kernel_poly` to their closed
/// u-forms (`k` from 0 resp. 1 to `k_max`, `j` to `j_max`), and the
/// reciprocal adjacent-minor product equals its partial-fraction split.
pub fn verify_u_world(k_max: usize, j_max: usize) -> Report {
    assert!(k_max >= 1 && j_max >= 1, "ranges must contain k = j = 1");
    let subst = x_of_u();
    let mut instances = Vec::new();

    for k in 0..=k_max as u64 {
        instances.push(Instance::decide(
            serde_json::json!({ "identity": "minor-subst", "k": k }),
            &minor_poly(k).compose(&subst),
            &minor_u(k),
            ratfun_json,
        ));
    }

    for k in 1..=k_max as u64 {
        for j in 1..=j_max as u64 {
            instances.push(Instance::decide(
                serde_json::json!({ "identity": "kernel-subst", "k": k, "j": j }),
                &kernel_poly(k, j).compose(&subst),
                &kernel_u(k, j),
                ratfun_json,
            ));
        }
    }

    for k in 1..=k_max as u64 {
        instances.push(Instance::decide(
            serde_json::json!({ "identity": "pf-split", "k": k }),
            &minor_pair_recip(k),
            &minor_pair_recip_split(k),
            ratfun_json,
        ));
    }

    Report {
        check: "u-world",
        instances,
    }
}
