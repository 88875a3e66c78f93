//! Exact local Euler factor algebra in t = p^(-s): the lifted-side local
//! factor, the character-twisted product, their equality check, and a
//! Dirichlet series expansion for smoke-testing factorizations at the level
//! of coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::characters::{characters_trivial_on, CyclotomicElement};
use crate::error::{Error, Result};
use crate::lift::{lift_eigenvalue, LiftedEigenvalue};
use crate::newform::NewformSpec;
use crate::numberfield::{NumberFieldSpec, PrimeSplit};

/// A polynomial in t = p^(-s) with exact cyclotomic coefficients, constant
/// term first.
#[derive(Debug, Clone)]
pub struct EulerFactorPoly {
    base_prime: u64,
    coeffs: Vec<CyclotomicElement>,
}

impl EulerFactorPoly {
    pub fn new(base_prime: u64, coeffs: Vec<CyclotomicElement>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        EulerFactorPoly { base_prime, coeffs }
    }

    pub fn one(base_prime: u64) -> Self {
        EulerFactorPoly {
            base_prime,
            coeffs: vec![CyclotomicElement::one()],
        }
    }

    pub fn base_prime(&self) -> u64 {
        self.base_prime
    }

    pub fn coeffs(&self) -> &[CyclotomicElement] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn constant_term_is_one(&self) -> bool {
        self.coeffs
            .first()
            .map_or(false, |c| *c == CyclotomicElement::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.base_prime, other.base_prime,
            "Euler factors at different primes"
        );
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return EulerFactorPoly {
                base_prime: self.base_prime,
                coeffs: Vec::new(),
            };
        }
        let mut out = vec![CyclotomicElement::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        EulerFactorPoly::new(self.base_prime, out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = EulerFactorPoly::one(self.base_prime);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Coefficients as exact rationals; error when any coefficient has a
    /// residual cyclotomic part.
    pub fn rational_coeffs(&self) -> Result<Vec<BigRational>> {
        self.coeffs
            .iter()
            .map(|c| {
                c.to_rational()
                    .ok_or_else(|| Error::CyclotomicResidue(c.to_string()))
            })
            .collect()
    }

    pub fn format_with(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let wrapped = if cs.contains(' ') {
                format!("({cs})")
            } else {
                cs
            };
            let term = match i {
                0 => wrapped,
                1 if wrapped == "1" => var.to_string(),
                1 => format!("{wrapped}*{var}"),
                _ if wrapped == "1" => format!("{var}^{i}"),
                _ => format!("{wrapped}*{var}^{i}"),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

impl PartialEq for EulerFactorPoly {
    fn eq(&self, other: &Self) -> bool {
        self.base_prime == other.base_prime && self.coeffs == other.coeffs
    }
}

impl Eq for EulerFactorPoly {}

impl std::fmt::Display for EulerFactorPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.format_with("t"))
    }
}

/// The local factor of the lift at the class of p:
/// (1 - C t^r + psi(p-class) p^(r(k-1)) t^(2r))^g.
pub fn local_factor_lift(f: &NewformSpec, split: &PrimeSplit) -> Result<EulerFactorPoly> {
    if split.e != 1 {
        return Err(Error::InvalidInput(format!(
            "local factor at the ramified class of {} is not defined here",
            split.p
        )));
    }
    let LiftedEigenvalue {
        value,
        nebentypus_value,
        ..
    } = lift_eigenvalue(f, split)?;
    let c = value
        .to_rational()
        .ok_or_else(|| Error::NotRational(value.to_string()))?;
    let r = split.f as usize;
    let pk = BigRational::from_integer(BigInt::from(split.p).pow(split.f * (f.weight() - 1)));
    let mut coeffs = vec![CyclotomicElement::zero(); 2 * r + 1];
    coeffs[0] = CyclotomicElement::one();
    coeffs[r] = CyclotomicElement::from_rational(-c);
    coeffs[2 * r] = nebentypus_value.mul_rational(&pk);
    Ok(EulerFactorPoly::new(split.p, coeffs).pow(split.g))
}

/// The product over the characters attached to the field of the twisted
/// classical local factors:
/// prod_chi (1 - chi(p) a_p t + chi(p)^2 chi_f(p) p^(k-1) t^2).
/// Coefficients must descend to the rationals; a residual cyclotomic part
/// signals a character-group bug.
pub fn local_factor_twisted_product(
    f: &NewformSpec,
    field: &NumberFieldSpec,
    p: u64,
) -> Result<EulerFactorPoly> {
    let data = field.abelian_data().ok_or_else(|| {
        Error::InvalidInput(format!("field {} carries no conductor data", field.label()))
    })?;
    let m = data.conductor;
    if m > 1 && num_integer::Integer::gcd(&p, &m) != 1 {
        return Err(Error::RamifiedConductor { p, m });
    }
    if f.level() % p == 0 {
        return Err(Error::LevelPrime {
            p,
            level: f.level(),
        });
    }
    let ap = f
        .ap(p)?
        .to_rational()
        .ok_or_else(|| Error::NotRational(format!("a({p})")))?;
    let chi_f = f.nebentypus().evaluate(p);
    let pk = BigRational::from_integer(BigInt::from(p).pow(f.weight() - 1));
    let mut product = EulerFactorPoly::one(p);
    for chi in characters_trivial_on(m, &data.subgroup)? {
        let v = chi.evaluate(p);
        let linear = v.mul_rational(&-ap.clone());
        let quad = v.mul(&v).mul(&chi_f).mul_rational(&pk);
        let factor = EulerFactorPoly::new(p, vec![CyclotomicElement::one(), linear, quad]);
        product = product.mul(&factor);
    }
    for c in product.coeffs() {
        if !c.is_rational() {
            return Err(Error::CyclotomicResidue(c.to_string()));
        }
    }
    Ok(product)
}

/// Both local factors at p with the verdict of their exact comparison.
#[derive(Debug, Clone)]
pub struct LocalFactorCheck {
    pub p: u64,
    pub split: PrimeSplit,
    pub lhs: EulerFactorPoly,
    pub rhs: EulerFactorPoly,
    pub equal: bool,
}

/// Exact equality of the lifted local factor and the twisted product at an
/// unramified prime coprime to the level.
pub fn verify_local_factorization(
    f: &NewformSpec,
    field: &NumberFieldSpec,
    p: u64,
) -> Result<LocalFactorCheck> {
    let split = field.decompose_prime(p)?;
    let lhs = local_factor_lift(f, &split)?;
    let rhs = local_factor_twisted_product(f, field, p)?;
    let equal = lhs == rhs;
    Ok(LocalFactorCheck {
        p,
        split,
        lhs,
        rhs,
        equal,
    })
}

/// Dirichlet coefficients of the product of the inverse Euler factors, up to
/// `depth`. Indices with a prime factor outside the supplied set have
/// coefficient zero in this truncated product; [`dirichlet_coefficient`]
/// rejects such indices instead.
pub fn dirichlet_series_prefix(
    factors: &[EulerFactorPoly],
    depth: u64,
) -> Result<Vec<BigRational>> {
    let locals = invert_locals(factors, depth)?;
    let mut out = Vec::with_capacity(depth as usize);
    for n in 1..=depth {
        out.push(smooth_coefficient(&locals, n).unwrap_or_else(BigRational::zero));
    }
    Ok(out)
}

/// The n-th Dirichlet coefficient; errors when n is not smooth with respect
/// to the factor set.
pub fn dirichlet_coefficient(factors: &[EulerFactorPoly], n: u64) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::InvalidInput("Dirichlet index must be >= 1".into()));
    }
    let locals = invert_locals(factors, n)?;
    smooth_coefficient(&locals, n).ok_or(Error::NonSmoothIndex(n))
}

fn invert_locals(factors: &[EulerFactorPoly], depth: u64) -> Result<Vec<(u64, Vec<BigRational>)>> {
    let mut locals: Vec<(u64, Vec<BigRational>)> = Vec::new();
    for factor in factors {
        let p = factor.base_prime();
        if locals.iter().any(|(q, _)| *q == p) {
            return Err(Error::DuplicatePrime(p));
        }
        if !factor.constant_term_is_one() {
            return Err(Error::InvalidInput(format!(
                "local factor at {p} has constant term != 1"
            )));
        }
        let coeffs = factor.rational_coeffs()?;
        // power series inverse: b_0 = 1, b_e = -sum_{j>=1} c_j b_{e-j}
        let mut max_e = 0u32;
        let mut pe = 1u64;
        while pe <= depth / p {
            pe *= p;
            max_e += 1;
        }
        let mut inv = vec![BigRational::one()];
        for e in 1..=max_e as usize {
            let mut acc = BigRational::zero();
            for j in 1..coeffs.len().min(e + 1) {
                acc += &coeffs[j] * &inv[e - j];
            }
            inv.push(-acc);
        }
        locals.push((p, inv));
    }
    Ok(locals)
}

fn smooth_coefficient(locals: &[(u64, Vec<BigRational>)], n: u64) -> Option<BigRational> {
    let mut rest = n;
    let mut acc = BigRational::one();
    for (p, inv) in locals {
        let mut e = 0usize;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            if e >= inv.len() {
                // depth guard; callers size the inversion to the request
                return None;
            }
            acc *= &inv[e];
        }
    }
    if rest != 1 {
        return None;
    }
    Some(acc)
}
