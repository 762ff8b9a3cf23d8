//! Stirling numbers of both kinds, memoized as process-wide triangles.

use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::RationalPolynomial;

type Row = Arc<[BigUint]>;

/// A lazily grown triangle of big integers where row `n` is derived from
/// row `n - 1`. Row `n` has entries for `k = 0..=n`.
struct Triangle {
    rows: RwLock<Vec<Row>>,
    next_row: fn(&[BigUint], usize) -> Vec<BigUint>,
}

impl Triangle {
    const fn new(next_row: fn(&[BigUint], usize) -> Vec<BigUint>) -> Self {
        Triangle {
            rows: RwLock::new(Vec::new()),
            next_row,
        }
    }

    fn rows(&self, n_max: usize) -> Vec<Row> {
        {
            let rows = self.rows.read().expect("stirling table lock poisoned");
            if rows.len() > n_max {
                return rows[..=n_max].to_vec();
            }
        }
        let mut rows = self.rows.write().expect("stirling table lock poisoned");
        if rows.is_empty() {
            rows.push(Arc::from(vec![BigUint::one()]));
        }
        while rows.len() <= n_max {
            let n = rows.len();
            let row = (self.next_row)(&rows[n - 1], n);
            rows.push(Arc::from(row));
        }
        rows[..=n_max].to_vec()
    }

    fn row(&self, n: usize) -> Row {
        self.rows(n).pop().expect("rows(n) is never empty")
    }

    fn get(&self, n: usize, k: usize) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        self.row(n)[k].clone()
    }
}

// S(n,k) = k S(n-1,k) + S(n-1,k-1)
fn stirling2_next(prev: &[BigUint], n: usize) -> Vec<BigUint> {
    (0..=n)
        .map(|k| {
            let stay = prev.get(k).map(|s| s * k).unwrap_or_default();
            let join = if k > 0 { prev[k - 1].clone() } else { BigUint::zero() };
            stay + join
        })
        .collect()
}

// c(n,k) = (n-1) c(n-1,k) + c(n-1,k-1)
fn stirling1_next(prev: &[BigUint], n: usize) -> Vec<BigUint> {
    (0..=n)
        .map(|k| {
            let stay = prev.get(k).map(|s| s * (n - 1)).unwrap_or_default();
            let join = if k > 0 { prev[k - 1].clone() } else { BigUint::zero() };
            stay + join
        })
        .collect()
}

static STIRLING2: Triangle = Triangle::new(stirling2_next);
static STIRLING1: Triangle = Triangle::new(stirling1_next);

/// Stirling number of the second kind `S(n, k)`: the number of partitions of
/// an `n`-set into `k` nonempty blocks, with `S(0, 0) = 1`.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    STIRLING2.get(n, k)
}

/// Row `n` of the second-kind triangle, `S(n, 0), …, S(n, n)`.
pub fn stirling2_row(n: usize) -> Arc<[BigUint]> {
    STIRLING2.row(n)
}

/// Rows `0..=n_max` of the second-kind triangle.
pub fn stirling2_rows(n_max: usize) -> Vec<Arc<[BigUint]>> {
    STIRLING2.rows(n_max)
}

/// Unsigned Stirling number of the first kind `c(n, k)`: the number of
/// permutations of `n` elements with exactly `k` cycles.
pub fn stirling1_unsigned(n: usize, k: usize) -> BigUint {
    STIRLING1.get(n, k)
}

pub fn stirling1_unsigned_row(n: usize) -> Arc<[BigUint]> {
    STIRLING1.row(n)
}

/// The Stirling polynomial `φ_j(x) = Σ_i S(j, i) x^i`, which satisfies
/// `(x d/dx)^j e^x = φ_j(x) e^x`. For `j = 0` this is the constant `1`.
pub fn stirling_polynomial(j: usize) -> RationalPolynomial {
    RationalPolynomial::from_integers(stirling2_row(j).iter().cloned())
}
