//! Combinatorial identities that fall out of comparing the two expansions of
//! `p(x)`, each checked with both sides computed independently.
//!
//! | name                 | identity                                                        |
//! |----------------------|-----------------------------------------------------------------|
//! | `binomial`           | `p_j = C(n, j) / j!` for type `A_n`, `λ = ω_1`                   |
//! | `4.3`                | `Σ_{j=k}^{n} E_j(1, 1/2, …, 1/n) S(j, k) = C(n, k) / k!`         |
//! | `4.4`                | `Σ_{j=k}^{n} c(n+1, j+1) S(j, k) = (n-k)! C(n, k)²`              |
//! | `4.5`                | `T(n, n-k) = Σ_{j=k}^{n} c(n+1, j+1) S(j, k)`                    |
//! | `stirling-recursion` | `S(n+1, k+1) = Σ_{j=k}^{n} C(n, j) S(j, k)`                      |
//! | `rho`                | `p_k = S(|Φ⁺| + 1, k + 1)` for `λ = ρ`                           |
//!
//! Here `c(n, k)` is the unsigned Stirling number of the first kind and
//! `T(n, k) = k! C(n, k)²` counts partial bijections of an `n`-set with domain
//! of size `k`. The identities relating first-kind numbers come from
//! `E_j(1, 1/2, …, 1/n) = c(n+1, j+1) / n!`.
//!
//! Sweeps include the `k = 0` boundary, using `S(0, 0) = 1` and
//! `S(n, 0) = 0` for `n > 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::combinatorics::{
    binomial, elementary_symmetric, factorial, stirling1_unsigned, stirling2, stirling2_row,
};
use crate::rootsystem::{weyl_vector, DominantWeight, DynkinFamily, DynkinType, RootSystem};
use crate::series::exp_series_operator;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityFailure {
    pub parameters: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity_name: String,
    pub parameter_range: String,
    pub checked_count: usize,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    fn new(name: &str, range: impl Into<String>) -> Self {
        IdentityReport {
            identity_name: name.to_string(),
            parameter_range: range.into(),
            checked_count: 0,
            failures: Vec::new(),
        }
    }

    fn check<T: PartialEq + fmt::Display>(&mut self, params: impl FnOnce() -> String, lhs: T, rhs: T) {
        self.checked_count += 1;
        if lhs != rhs {
            self.failures.push(IdentityFailure {
                parameters: params(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    pub fn verified(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({}, {} checks, {} failures)",
            self.identity_name,
            if self.verified() { "ok" } else { "FAILED" },
            self.parameter_range,
            self.checked_count,
            self.failures.len()
        )
    }
}

/// The identities known to [`Identity::run`], by their CLI names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Binomial,
    HarmonicSymmetric,
    StirlingFirstKind,
    PartialBijections,
    StirlingRecursion,
    Rho,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Binomial,
        Identity::HarmonicSymmetric,
        Identity::StirlingFirstKind,
        Identity::PartialBijections,
        Identity::StirlingRecursion,
        Identity::Rho,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Binomial => "binomial",
            Identity::HarmonicSymmetric => "4.3",
            Identity::StirlingFirstKind => "4.4",
            Identity::PartialBijections => "4.5",
            Identity::StirlingRecursion => "stirling-recursion",
            Identity::Rho => "rho",
        }
    }

    pub fn default_n_max(self) -> usize {
        match self {
            Identity::Binomial => 30,
            Identity::HarmonicSymmetric | Identity::StirlingFirstKind | Identity::PartialBijections => 20,
            Identity::StirlingRecursion => 25,
            Identity::Rho => 5,
        }
    }

    /// Runs the sweep. For `rho`, `n_max` bounds the `A_n` ranks checked
    /// alongside `B_2` and `G_2`.
    pub fn run(self, n_max: Option<usize>) -> IdentityReport {
        let n = n_max.unwrap_or_else(|| self.default_n_max());
        match self {
            Identity::Binomial => verify_binomial_coefficients(n),
            Identity::HarmonicSymmetric => verify_harmonic_symmetric(n),
            Identity::StirlingFirstKind => verify_stirling_first_kind(n),
            Identity::PartialBijections => verify_partial_bijections(n),
            Identity::StirlingRecursion => verify_stirling_recursion(n),
            Identity::Rho => verify_rho_case(&rho_types(n)),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

/// `A_1, …, A_{a_max}`, then `B_2` and `G_2`.
pub fn rho_types(a_max: usize) -> Vec<DynkinType> {
    let mut types: Vec<_> = (1..=a_max)
        .map(|n| DynkinType::new(DynkinFamily::A, n).expect("A_n valid for n >= 1"))
        .collect();
    types.push(DynkinType::new(DynkinFamily::B, 2).expect("B2"));
    types.push(DynkinType::new(DynkinFamily::G, 2).expect("G2"));
    types
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `p_j = C(n, j) / j!` for `A_n`, `λ = ω_1`, `1 ≤ n ≤ n_max`.
pub fn verify_binomial_coefficients(n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new("binomial", format!("A_n, ω_1, 1 ≤ n ≤ {n_max}"));
    for n in 1..=n_max {
        let ty = DynkinType::new(DynkinFamily::A, n).expect("A_n valid for n >= 1");
        let system = RootSystem::new(ty);
        let p = exp_series_operator(&system, &DominantWeight::fundamental(n, 0))
            .expect("weight matches rank");
        report.check(|| format!("n={n} degree"), p.degree(), n);
        for j in 0..=n {
            let rhs = BigRational::new(binomial(n as u64, j as i64).into(), factorial(j as u64).into());
            report.check(|| format!("n={n} j={j}"), p.coeff(j), rhs);
        }
    }
    report
}

/// `Σ_{j=k}^{n} E_j(1, 1/2, …, 1/n) S(j, k) = C(n, k) / k!` for
/// `0 ≤ k ≤ n ≤ n_max`, `n ≥ 1`.
pub fn verify_harmonic_symmetric(n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new("4.3", format!("0 ≤ k ≤ n, 1 ≤ n ≤ {n_max}"));
    for n in 1..=n_max {
        let harmonic: Vec<_> = (1..=n).map(|i| BigRational::new(1.into(), i.into())).collect();
        let e = elementary_symmetric(&harmonic);
        for k in 0..=n {
            let lhs = (k..=n).fold(int(0), |acc, j| acc + &e[j] * int(stirling2(j, k)));
            let rhs = BigRational::new(binomial(n as u64, k as i64).into(), factorial(k as u64).into());
            report.check(|| format!("n={n} k={k}"), lhs, rhs);
        }
    }
    report
}

fn first_kind_sum(n: usize, k: usize) -> BigUint {
    (k..=n).map(|j| stirling1_unsigned(n + 1, j + 1) * stirling2(j, k)).sum()
}

/// `Σ_{j=k}^{n} c(n+1, j+1) S(j, k) = (n-k)! C(n, k)²` for
/// `0 ≤ k ≤ n ≤ n_max`, `n ≥ 1`.
pub fn verify_stirling_first_kind(n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new("4.4", format!("0 ≤ k ≤ n, 1 ≤ n ≤ {n_max}"));
    for n in 1..=n_max {
        for k in 0..=n {
            let c = binomial(n as u64, k as i64);
            let rhs = factorial((n - k) as u64) * &c * &c;
            report.check(|| format!("n={n} k={k}"), first_kind_sum(n, k), rhs);
        }
    }
    report
}

/// `T(n, k) = k! C(n, k)²`, the number of partial bijections of an `n`-set
/// whose domain has `k` elements.
pub fn partial_bijections(n: usize, k: usize) -> BigUint {
    let c = binomial(n as u64, k as i64);
    factorial(k as u64) * &c * &c
}

/// Counts partial bijections of `{0, …, n-1}` by domain size, by walking
/// every one of them.
pub fn enumerate_partial_bijections(n: usize) -> Vec<u64> {
    fn walk(i: usize, n: usize, used: u32, size: usize, counts: &mut [u64]) {
        if i == n {
            counts[size] += 1;
            return;
        }
        walk(i + 1, n, used, size, counts);
        for target in 0..n {
            if used & (1 << target) == 0 {
                walk(i + 1, n, used | (1 << target), size + 1, counts);
            }
        }
    }
    assert!(n < 32, "partial bijection enumeration limited to n < 32");
    let mut counts = vec![0; n + 1];
    walk(0, n, 0, 0, &mut counts);
    counts
}

/// Largest `n` for which [`verify_partial_bijections`] enumerates.
pub const PARTIAL_BIJECTION_ENUMERATION_MAX: usize = 8;

/// `T(n, n-k) = Σ_{j=k}^{n} c(n+1, j+1) S(j, k)` for `0 ≤ k ≤ n ≤ n_max`,
/// `n ≥ 1`, plus `T(n, k)` against enumeration for `n ≤ 8`.
pub fn verify_partial_bijections(n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new(
        "4.5",
        format!(
            "0 ≤ k ≤ n, 1 ≤ n ≤ {n_max}; T(n,k) enumerated for n ≤ {PARTIAL_BIJECTION_ENUMERATION_MAX}"
        ),
    );
    for n in 0..=PARTIAL_BIJECTION_ENUMERATION_MAX {
        for (k, count) in enumerate_partial_bijections(n).into_iter().enumerate() {
            report.check(
                || format!("T({n},{k}) enumeration"),
                partial_bijections(n, k),
                BigUint::from(count),
            );
        }
    }
    for n in 1..=n_max {
        for k in 0..=n {
            report.check(|| format!("n={n} k={k}"), partial_bijections(n, n - k), first_kind_sum(n, k));
        }
    }
    report
}

/// `S(n+1, k+1) = Σ_{j=k}^{n} C(n, j) S(j, k)` for `0 ≤ k ≤ n ≤ n_max`.
pub fn verify_stirling_recursion(n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new("stirling-recursion", format!("0 ≤ k ≤ n ≤ {n_max}"));
    for n in 0..=n_max {
        for k in 0..=n {
            let rhs: BigUint = (k..=n)
                .map(|j| binomial(n as u64, j as i64) * &stirling2_row(j)[k])
                .sum();
            report.check(|| format!("n={n} k={k}"), stirling2(n + 1, k + 1), rhs);
        }
    }
    report
}

/// `p(x)` for `λ = ρ` against row `|Φ⁺| + 1` of the second-kind triangle.
pub fn verify_rho_case(types: &[DynkinType]) -> IdentityReport {
    let names: Vec<_> = types.iter().map(ToString::to_string).collect();
    let mut report = IdentityReport::new("rho", names.join(", "));
    for ty in types {
        let system = RootSystem::new(*ty);
        let d = system.positive_roots().len();
        let p = exp_series_operator(&system, &weyl_vector(ty.rank())).expect("ρ matches rank");
        report.check(|| format!("{ty} degree"), p.degree(), d);
        for k in 0..=d {
            report.check(|| format!("{ty} k={k}"), p.coeff(k), int(stirling2(d + 1, k + 1)));
        }
    }
    report
}

/// Every identity over its default range.
pub fn verify_all() -> Vec<IdentityReport> {
    Identity::ALL.iter().map(|i| i.run(None)).collect()
}
