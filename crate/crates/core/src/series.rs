//! Exponential and ordinary Hilbert series of the embedding `X_λ ⊂ P(L(λ))`.
//!
//! The exponential series `E_λ(x) = Σ dim L(nλ) xⁿ/n!` has the form
//! `p(x)eˣ`, where
//!
//! ```text
//! p(x)eˣ = ∏_{α ∈ Φ⁺} (1 + c_λ(α) x d/dx) eˣ.
//! ```
//!
//! `p` is computed two independent ways:
//!
//! * [`exp_series_operator`] applies the operators one at a time. On `q(x)eˣ`
//!   the operator `1 + a x d/dx` gives `(q + a x q' + a x q) eˣ`.
//! * [`exp_series_closed_form`] expands the product as
//!   `Σ_j E_j(a_1, …, a_d) (x d/dx)^j` and uses `(x d/dx)^j eˣ = φ_j(x) eˣ`,
//!   so that `[x^k] p = Σ_{j≥k} E_j S(j, k)`.
//!
//! From `p` one reads off `dim X_λ = deg p` and `deg π_λ = d! · a_d`. The
//! Hilbert polynomial `H_λ(t) = ∏ (1 + t c_λ(α))` and the ordinary series
//! `q(x)/(1-x)^{d+1}` are computed alongside as cross-checks.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{
    binomial, elementary_symmetric_scaled, factorial, falling_factorial, stirling2_rows,
    RationalPolynomial, ScaledPolynomial,
};
use crate::error::{Error, Result};
use crate::rootsystem::{DominantWeight, RootSystem};

/// The polynomial `p(x)` of a series `p(x)eˣ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpPolynomial(RationalPolynomial);

impl ExpPolynomial {
    /// `p = 1`, i.e. the series `eˣ`.
    pub fn one() -> Self {
        ExpPolynomial(RationalPolynomial::one())
    }

    pub fn new(p: RationalPolynomial) -> Self {
        ExpPolynomial(p)
    }

    pub fn polynomial(&self) -> &RationalPolynomial {
        &self.0
    }

    pub fn coeffs(&self) -> &[BigRational] {
        self.0.coeffs()
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.0.coeff(k)
    }

    /// Degree of `p`; zero for the zero polynomial as well as for constants.
    pub fn degree(&self) -> usize {
        self.0.degree().unwrap_or(0)
    }
}

/// `N(x) / (1 - x)^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdinarySeriesRep {
    pub numerator: RationalPolynomial,
    pub pole_order: usize,
}

impl OrdinarySeriesRep {
    /// Power-series coefficients `[xⁿ]` for `n = 0..=n_max`, using
    /// `1/(1-x)^m = Σ C(n+m-1, m-1) xⁿ`. Fails if any coefficient is not an
    /// integer.
    pub fn expand(&self, n_max: usize) -> Result<Vec<BigInt>> {
        let num = self.numerator.integer_coeffs().ok_or_else(|| {
            Error::invariant("hs-numerator-integral", format!("N(x) = {}", self.numerator))
        })?;
        let m = self.pole_order as u64;
        Ok((0..=n_max)
            .map(|n| {
                num.iter()
                    .enumerate()
                    .take(n + 1)
                    .map(|(i, c)| {
                        let top = (n - i) as u64 + m - 1;
                        c * BigInt::from(binomial(top, m as i64 - 1))
                    })
                    .sum()
            })
            .collect())
    }
}

/// Every invariant computed for one pair `(G, λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// `dim X_λ`.
    pub dim_variety: usize,
    /// `deg π_λ`.
    pub embedding_degree: BigUint,
    /// `dim L(λ)`.
    pub dim_irrep: BigUint,
    pub hilbert_polynomial: RationalPolynomial,
    pub exp_polynomial: ExpPolynomial,
    /// `q(x)` in `HS_λ(x) = q(x) / (1-x)^{dim X_λ + 1}`.
    pub hs_numerator: RationalPolynomial,
}

/// `(1 + a x d/dx)` acting on `p(x)eˣ`.
pub fn apply_operator(p: &ExpPolynomial, a: &BigRational) -> ExpPolynomial {
    if a.is_zero() {
        return p.clone();
    }
    let c = p.coeffs();
    let out = (0..=c.len())
        .map(|k| {
            let pk = c.get(k).cloned().unwrap_or_else(BigRational::zero);
            let prev = if k > 0 { c[k - 1].clone() } else { BigRational::zero() };
            let kk = BigRational::from_integer(BigInt::from(k));
            &pk + a * (&kk * &pk + prev)
        })
        .collect();
    ExpPolynomial(RationalPolynomial::from_coeffs(out))
}

/// Folds [`apply_operator`] over `values`, starting from `p = 1`. Zero values
/// are identity operators and are skipped.
pub fn operator_fold(values: &[BigRational]) -> ExpPolynomial {
    // Same recurrence as apply_operator, over a common denominator: with
    // a = u/v, v·r_k = v p_k + u (k p_k + p_{k-1}).
    let mut p = ScaledPolynomial::one();
    for a in values.iter().filter(|a| !a.is_zero()) {
        let (u, v) = (a.numer(), a.denom());
        p.num.push(BigInt::zero());
        for k in (0..p.num.len()).rev() {
            let mut next = &p.num[k] * (v + u * k);
            if k > 0 {
                next += u * &p.num[k - 1];
            }
            p.num[k] = next;
        }
        p.den *= v;
    }
    ExpPolynomial(p.to_rational())
}

/// `p` from elementary symmetric functions and Stirling numbers only:
/// `a_k = Σ_{j=k}^{d} E_j(values) S(j, k)`, with `a_0 = E_0 S(0,0) = 1`.
pub fn closed_form_expansion(values: &[BigRational]) -> ExpPolynomial {
    // E_j = e.num[j] / e.den, and E_j vanishes past the number of nonzero
    // values, which is where e.num stops.
    let e = elementary_symmetric_scaled(values);
    let top = e.num.len() - 1;
    let rows = stirling2_rows(top);
    let num = (0..=top)
        .map(|k| {
            (k..=top)
                .map(|j| &e.num[j] * BigInt::from(rows[j][k].clone()))
                .sum()
        })
        .collect();
    ExpPolynomial(ScaledPolynomial { num, den: e.den }.to_rational())
}

/// `∏ (1 + a t)` over `values`.
pub fn hilbert_product(values: &[BigRational]) -> RationalPolynomial {
    let mut h = ScaledPolynomial::one();
    for a in values {
        h.mul_linear(a);
    }
    h.to_rational()
}

/// `∏ (1 + n a)` over `values`, required to be a positive integer.
pub fn hilbert_function(values: &[BigRational], n: u64) -> Result<BigUint> {
    let (num, den) = values
        .iter()
        .filter(|a| !a.is_zero())
        .fold((BigInt::one(), BigInt::one()), |(num, den), a| {
            (num * (a.denom() + a.numer() * n), den * a.denom())
        });
    positive_integer("dim-irrep-integral", &BigRational::new(num, den))
}

/// Folds `1 + a x d/dx` over nonzero `values` acting on `1/(1-x)`.
pub fn ordinary_fold(values: &[BigRational]) -> Result<OrdinarySeriesRep> {
    // new_k = N_k - N_{k-1} + a (k N_k - (k-1) N_{k-1} + m N_{k-1})
    let mut numerator = ScaledPolynomial::one();
    let mut pole_order = 1usize;
    for a in values.iter().filter(|a| !a.is_zero()) {
        let (u, v) = (a.numer(), a.denom());
        let n = &mut numerator.num;
        n.push(BigInt::zero());
        for k in (0..n.len()).rev() {
            let mut next = &n[k] * (v + u * k);
            if k > 0 {
                let lower = (k - 1) as i64 - pole_order as i64;
                next -= &n[k - 1] * (v + u * lower);
            }
            n[k] = next;
        }
        numerator.den *= v;
        pole_order += 1;
    }
    let numerator = numerator.to_rational();
    if !numerator.is_integral() {
        return Err(Error::invariant(
            "hs-numerator-integral",
            format!("q(x) = {numerator}"),
        ));
    }
    Ok(OrdinarySeriesRep {
        numerator,
        pole_order,
    })
}

/// `p(x)` by applying the operator for each positive root in turn.
pub fn exp_series_operator(system: &RootSystem, lambda: &DominantWeight) -> Result<ExpPolynomial> {
    Ok(operator_fold(&system.c_values(lambda)?))
}

/// `p(x)` from the closed form in elementary symmetric functions of all
/// `|Φ⁺|` values `c_λ(α)`, zeros included.
pub fn exp_series_closed_form(
    system: &RootSystem,
    lambda: &DominantWeight,
) -> Result<ExpPolynomial> {
    Ok(closed_form_expansion(&system.c_values(lambda)?))
}

/// `H_λ(t) = ∏_{α ∈ Φ⁺} (1 + t c_λ(α))`.
pub fn hilbert_polynomial(system: &RootSystem, lambda: &DominantWeight) -> Result<RationalPolynomial> {
    Ok(hilbert_product(&system.c_values(lambda)?))
}

/// `dim L(nλ) = H_λ(n)`.
pub fn dim_irrep(system: &RootSystem, lambda: &DominantWeight, n: u64) -> Result<BigUint> {
    hilbert_function(&system.c_values(lambda)?, n)
}

/// `dim X_λ`, the number of positive roots with `c_λ(α) ≠ 0`.
pub fn dimension_of_variety(system: &RootSystem, lambda: &DominantWeight) -> Result<usize> {
    Ok(system.c_values(lambda)?.iter().filter(|c| !c.is_zero()).count())
}

/// `deg π_λ = d! · a_d`, checked against `d! · ∏_{c ≠ 0} c_λ(α)`.
pub fn degree_of_embedding(system: &RootSystem, lambda: &DominantWeight) -> Result<BigUint> {
    let values = system.c_values(lambda)?;
    embedding_degree_of(&values, &operator_fold(&values))
}

fn embedding_degree_of(values: &[BigRational], p: &ExpPolynomial) -> Result<BigUint> {
    let d = p.degree();
    let d_fact = BigRational::from_integer(BigInt::from(factorial(d as u64)));
    let leading = p.coeff(d);
    let from_leading = &d_fact * &leading;
    let product = values
        .iter()
        .filter(|c| !c.is_zero())
        .fold(BigRational::one(), |acc, c| acc * c);
    let from_product = &d_fact * &product;
    if from_leading != from_product {
        return Err(Error::invariant(
            "leading-coefficient-product",
            format!("d!·a_d = {from_leading} but d!·∏c = {from_product}"),
        ));
    }
    positive_integer("embedding-degree-integral", &from_leading)
}

/// The ordinary Hilbert series `q(x) / (1-x)^{d+1}`.
pub fn ordinary_hilbert_series(
    system: &RootSystem,
    lambda: &DominantWeight,
) -> Result<OrdinarySeriesRep> {
    ordinary_fold(&system.c_values(lambda)?)
}

/// `n! [xⁿ] p(x)eˣ = Σ_i a_i n!/(n-i)!`, which is `dim L(nλ)`.
pub fn taylor_dimension(p: &ExpPolynomial, n: u64) -> Result<BigUint> {
    let scaled = ScaledPolynomial::from_rational(p.polynomial());
    let num: BigInt = scaled
        .num
        .iter()
        .enumerate()
        .take_while(|(i, _)| *i as u64 <= n)
        .map(|(i, a)| a * BigInt::from(falling_factorial(n, i as u64)))
        .sum();
    let value = BigRational::new(num, scaled.den);
    if !value.is_integer() || value.is_negative() {
        return Err(Error::invariant(
            "taylor-dimension-integral",
            format!("n!·[x^{n}] p(x)eˣ = {value}"),
        ));
    }
    Ok(value.to_integer().to_biguint().expect("checked nonnegative"))
}

/// Computes every invariant for `(system, lambda)` and cross-checks them.
///
/// The checks, each reported under its own name on failure:
/// `operator-closed-form-agreement`, `constant-term-one`,
/// `constant-plus-linear-is-dim`, `degree-is-dimension`,
/// `leading-coefficient-product`, `hs-numerator-at-one`, plus the
/// integrality checks of the individual computations.
pub fn analyze(system: &RootSystem, lambda: &DominantWeight) -> Result<HilbertData> {
    let values = system.c_values(lambda)?;

    let p = operator_fold(&values);
    let closed = closed_form_expansion(&values);
    if p != closed {
        return Err(Error::invariant(
            "operator-closed-form-agreement",
            format!("operator fold {} vs closed form {}", p.0, closed.0),
        ));
    }
    if !p.coeff(0).is_one() {
        return Err(Error::invariant("constant-term-one", format!("a_0 = {}", p.coeff(0))));
    }

    let dim_l = hilbert_function(&values, 1)?;
    let a0_a1 = p.coeff(0) + p.coeff(1);
    if a0_a1 != BigRational::from_integer(dim_l.clone().into()) {
        return Err(Error::invariant(
            "constant-plus-linear-is-dim",
            format!("a_0 + a_1 = {a0_a1}, dim L(λ) = {dim_l}"),
        ));
    }

    let nonzero = values.iter().filter(|c| !c.is_zero()).count();
    let hilbert = hilbert_product(&values);
    let hilbert_degree = hilbert.degree().unwrap_or(0);
    if p.degree() != nonzero || hilbert_degree != nonzero {
        return Err(Error::invariant(
            "degree-is-dimension",
            format!(
                "deg p = {}, deg H = {hilbert_degree}, #{{c ≠ 0}} = {nonzero}",
                p.degree()
            ),
        ));
    }

    let degree = embedding_degree_of(&values, &p)?;

    let ordinary = ordinary_fold(&values)?;
    let at_one = ordinary.numerator.eval(&BigRational::one());
    if ordinary.pole_order != nonzero + 1
        || at_one != BigRational::from_integer(degree.clone().into())
    {
        return Err(Error::invariant(
            "hs-numerator-at-one",
            format!(
                "q(1) = {at_one} with pole order {}, deg π_λ = {degree}",
                ordinary.pole_order
            ),
        ));
    }

    Ok(HilbertData {
        dim_variety: nonzero,
        embedding_degree: degree,
        dim_irrep: dim_l,
        hilbert_polynomial: hilbert,
        exp_polynomial: p,
        hs_numerator: ordinary.numerator,
    })
}

fn positive_integer(name: &'static str, value: &BigRational) -> Result<BigUint> {
    if value.is_integer() && value.numer().sign() == Sign::Plus {
        Ok(value.to_integer().to_biguint().expect("checked positive"))
    } else {
        Err(Error::invariant(name, format!("expected a positive integer, got {value}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::stirling2;
    use crate::rootsystem::{weyl_vector, DynkinFamily, DynkinType};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn exp(coeffs: &[(i64, i64)]) -> ExpPolynomial {
        ExpPolynomial(RationalPolynomial::from_coeffs(
            coeffs.iter().map(|&(n, d)| q(n, d)).collect(),
        ))
    }

    fn system(f: DynkinFamily, r: usize) -> RootSystem {
        RootSystem::new(DynkinType::new(f, r).unwrap())
    }

    fn w(c: &[u64]) -> DominantWeight {
        DominantWeight::new(c.to_vec())
    }

    #[test]
    fn operator_examples() {
        assert_eq!(apply_operator(&ExpPolynomial::one(), &q(1, 1)), exp(&[(1, 1), (1, 1)]));
        let p = exp(&[(3, 1), (-1, 2), (5, 7)]);
        assert_eq!(apply_operator(&p, &q(0, 1)), p);
        assert_eq!(
            apply_operator(&exp(&[(1, 1), (1, 1)]), &q(1, 2)),
            exp(&[(1, 1), (2, 1), (1, 2)])
        );
    }

    #[test]
    fn operator_raises_degree_by_one() {
        let mut p = ExpPolynomial::one();
        for (i, a) in [q(1, 3), q(-2, 5), q(7, 1), q(1, 9)].iter().enumerate() {
            p = apply_operator(&p, a);
            assert_eq!(p.degree(), i + 1);
        }
    }

    #[test]
    fn exp_series_examples() {
        let a1 = system(DynkinFamily::A, 1);
        assert_eq!(exp_series_operator(&a1, &w(&[1])).unwrap(), exp(&[(1, 1), (1, 1)]));

        let a2 = system(DynkinFamily::A, 2);
        let p = exp(&[(1, 1), (2, 1), (1, 2)]);
        assert_eq!(exp_series_operator(&a2, &w(&[1, 0])).unwrap(), p);
        assert_eq!(exp_series_closed_form(&a2, &w(&[1, 0])).unwrap(), p);

        assert_eq!(exp_series_closed_form(&a2, &w(&[0, 0])).unwrap(), ExpPolynomial::one());
        assert_eq!(exp_series_operator(&a2, &w(&[0, 0])).unwrap(), ExpPolynomial::one());
    }

    #[test]
    fn rho_gives_shifted_stirling_row() {
        for ty in DynkinType::all_up_to(4) {
            let s = RootSystem::new(ty);
            let d = s.positive_roots().len();
            let p = exp_series_closed_form(&s, &weyl_vector(ty.rank())).unwrap();
            let expected: Vec<_> = (0..=d)
                .map(|k| BigRational::from_integer(stirling2(d + 1, k + 1).into()))
                .collect();
            assert_eq!(p.coeffs(), &expected[..], "{ty}");
        }
    }

    #[test]
    fn closed_form_with_and_without_zeros_agree() {
        let with_zeros = [q(1, 1), q(0, 1), q(1, 2), q(0, 1), q(2, 3)];
        let without: Vec<_> = with_zeros.iter().filter(|c| !c.is_zero()).cloned().collect();
        assert_eq!(closed_form_expansion(&with_zeros), closed_form_expansion(&without));
        assert_eq!(closed_form_expansion(&with_zeros), operator_fold(&with_zeros));
    }

    #[test]
    fn hilbert_polynomial_examples() {
        let a1 = system(DynkinFamily::A, 1);
        assert_eq!(
            hilbert_polynomial(&a1, &w(&[4])).unwrap(),
            RationalPolynomial::from_integers([1, 4])
        );
        let a2 = system(DynkinFamily::A, 2);
        assert_eq!(
            hilbert_polynomial(&a2, &w(&[1, 0])).unwrap(),
            RationalPolynomial::from_coeffs(vec![q(1, 1), q(3, 2), q(1, 2)])
        );
        let b2 = system(DynkinFamily::B, 2);
        let h = hilbert_polynomial(&b2, &w(&[1, 1])).unwrap();
        assert_eq!(h, RationalPolynomial::from_integers([1, 4, 6, 4, 1]));
    }

    #[test]
    fn dim_irrep_examples() {
        let a2 = system(DynkinFamily::A, 2);
        assert_eq!(dim_irrep(&a2, &w(&[1, 0]), 0).unwrap(), BigUint::from(1u32));
        assert_eq!(dim_irrep(&a2, &w(&[1, 0]), 1).unwrap(), BigUint::from(3u32));
        let a1 = system(DynkinFamily::A, 1);
        for m in 0..10u64 {
            assert_eq!(dim_irrep(&a1, &w(&[1]), m).unwrap(), BigUint::from(m + 1));
        }
        // adjoint of G2 and E8
        let g2 = system(DynkinFamily::G, 2);
        assert_eq!(dim_irrep(&g2, &w(&[0, 1]), 1).unwrap(), BigUint::from(14u32));
        assert_eq!(dim_irrep(&g2, &w(&[1, 0]), 1).unwrap(), BigUint::from(7u32));
        let e8 = system(DynkinFamily::E, 8);
        assert_eq!(dim_irrep(&e8, &w(&[0, 0, 0, 0, 0, 0, 0, 1]), 1).unwrap(), BigUint::from(248u32));
    }

    #[test]
    fn non_integral_values_are_flagged() {
        let err = hilbert_function(&[q(1, 3)], 1).unwrap_err();
        assert!(matches!(err, Error::Invariant { name: "dim-irrep-integral", .. }));
        assert!(!err.is_input_error());
        let err = taylor_dimension(&exp(&[(1, 1), (1, 3)]), 1).unwrap_err();
        assert!(matches!(err, Error::Invariant { name: "taylor-dimension-integral", .. }));
        let err = ordinary_fold(&[q(1, 3)]).unwrap_err();
        assert!(matches!(err, Error::Invariant { name: "hs-numerator-integral", .. }));
    }

    #[test]
    fn dimension_and_degree_examples() {
        for n in 1..=7 {
            let an = system(DynkinFamily::A, n);
            let w1 = DominantWeight::fundamental(n, 0);
            assert_eq!(dimension_of_variety(&an, &w1).unwrap(), n);
            assert_eq!(degree_of_embedding(&an, &w1).unwrap(), BigUint::one());
        }
        let a1 = system(DynkinFamily::A, 1);
        for m in 1..6u64 {
            assert_eq!(degree_of_embedding(&a1, &w(&[m])).unwrap(), BigUint::from(m));
        }
        let a2 = system(DynkinFamily::A, 2);
        assert_eq!(degree_of_embedding(&a2, &w(&[1, 1])).unwrap(), BigUint::from(6u32));
        assert_eq!(dimension_of_variety(&a2, &w(&[1, 1])).unwrap(), 3);
        assert_eq!(dimension_of_variety(&a2, &w(&[0, 0])).unwrap(), 0);
    }

    #[test]
    fn ordinary_series_examples() {
        let a2 = system(DynkinFamily::A, 2);
        let point = ordinary_hilbert_series(&a2, &w(&[0, 0])).unwrap();
        assert_eq!(point.numerator, RationalPolynomial::one());
        assert_eq!(point.pole_order, 1);

        let a1 = system(DynkinFamily::A, 1);
        let line = ordinary_hilbert_series(&a1, &w(&[1])).unwrap();
        assert_eq!(line.numerator, RationalPolynomial::one());
        assert_eq!(line.pole_order, 2);
        assert_eq!(line.expand(4).unwrap(), [1, 2, 3, 4, 5].map(BigInt::from));

        let plane = ordinary_hilbert_series(&a2, &w(&[1, 0])).unwrap();
        assert_eq!(plane.pole_order, 3);
        assert_eq!(plane.numerator.eval(&BigRational::one()), BigRational::one());
        let dims = plane.expand(6).unwrap();
        for (n, d) in dims.iter().enumerate() {
            assert_eq!(*d, BigInt::from(binomial(n as u64 + 2, 2)));
        }
    }

    #[test]
    fn taylor_dimension_examples() {
        assert_eq!(taylor_dimension(&ExpPolynomial::one(), 7).unwrap(), BigUint::one());
        assert_eq!(taylor_dimension(&exp(&[(1, 1), (1, 1)]), 3).unwrap(), BigUint::from(4u32));
        let a2 = system(DynkinFamily::A, 2);
        let p = exp_series_operator(&a2, &w(&[1, 0])).unwrap();
        assert_eq!(taylor_dimension(&p, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(taylor_dimension(&p, 0).unwrap(), BigUint::one());
    }

    #[test]
    fn analyze_examples() {
        let a2 = system(DynkinFamily::A, 2);
        let h = analyze(&a2, &w(&[1, 0])).unwrap();
        assert_eq!(h.dim_variety, 2);
        assert_eq!(h.embedding_degree, BigUint::one());
        assert_eq!(h.dim_irrep, BigUint::from(3u32));

        let a1 = system(DynkinFamily::A, 1);
        let h = analyze(&a1, &w(&[2])).unwrap();
        assert_eq!(h.dim_variety, 1);
        assert_eq!(h.embedding_degree, BigUint::from(2u32));
        assert_eq!(h.dim_irrep, BigUint::from(3u32));
        assert_eq!(h.exp_polynomial, exp(&[(1, 1), (2, 1)]));

        let g2 = system(DynkinFamily::G, 2);
        let h = analyze(&g2, &weyl_vector(2)).unwrap();
        assert_eq!(h.dim_variety, 6);
        let row7: Vec<_> = [1, 63, 301, 350, 140, 21, 1]
            .iter()
            .map(|&v| BigRational::from_integer(BigInt::from(v)))
            .collect();
        assert_eq!(h.exp_polynomial.coeffs(), &row7[..]);

        let h = analyze(&a2, &w(&[0, 0])).unwrap();
        assert_eq!(h.dim_variety, 0);
        assert_eq!(h.embedding_degree, BigUint::one());
        assert_eq!(h.exp_polynomial, ExpPolynomial::one());
    }

    #[test]
    fn fold_order_does_not_matter() {
        let s = system(DynkinFamily::C, 3);
        let values = s.c_values(&w(&[2, 0, 1])).unwrap();
        let forward = operator_fold(&values);
        let mut reversed = values.clone();
        reversed.reverse();
        assert_eq!(operator_fold(&reversed), forward);
        let mut rotated = values.clone();
        rotated.rotate_left(4);
        assert_eq!(operator_fold(&rotated), forward);
    }
}
