//! Ordinarity tests, ordinary stabilization, and weight-indexed family
//! tables with the family base-change coefficient map.
//!
//! A family is held extensionally: a finite table of classical
//! specializations keyed by weight, each one ordinary at the family prime.
//! Every formula here acts weight by weight.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::finitefield::{full_factor, FpPoly};
use crate::lift;
use crate::newform::{AlgebraicNumber, NewformSpec};
use crate::numberfield::{NumberFieldSpec, PrimeSplit};
use crate::qpoly;

/// Default p-adic working precision (digits of p) for stabilization data.
pub const DEFAULT_PRECISION: u32 = 20;

/// The image of a coefficient-field element in the residue field
/// F_p[theta]/(h) cut out by an irreducible factor h of the defining
/// polynomial mod p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeResidue {
    factor: FpPoly,
    value: FpPoly,
}

impl PrimeResidue {
    pub fn factor(&self) -> &FpPoly {
        &self.factor
    }

    pub fn value(&self) -> &FpPoly {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Degree of the residue field over F_p.
    pub fn residue_degree(&self) -> usize {
        self.factor.degree().unwrap_or(1)
    }
}

fn rational_mod(q: &BigRational, modulus: &BigUint, p: u64) -> Result<BigUint> {
    let m = BigInt::from(modulus.clone());
    let den = q.denom();
    if (den % BigInt::from(p)).is_zero() {
        return Err(Error::NonIntegral {
            value: q.to_string(),
            p,
        });
    }
    let num = ((q.numer() % &m) + &m) % &m;
    let den = ((den % &m) + &m) % &m;
    let inv = inv_mod(&den, &m);
    Ok(((num * inv) % &m).to_biguint().unwrap())
}

fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "element not invertible");
    ((e.x % m) + m) % m
}

/// Reduce an element of K = Q[x]/(g) modulo the prime of K determined by the
/// `factor_index`-th irreducible factor of g mod p (canonical factor order).
pub fn residue_at_prime(x: &AlgebraicNumber, p: u64, factor_index: usize) -> Result<PrimeResidue> {
    let g = x.field().poly();
    let p_big = BigUint::from(p);
    // the reduction is defined only away from denominators and the
    // polynomial discriminant
    for c in g.iter().chain(x.coords()) {
        if (c.denom() % BigInt::from(p)).is_zero() {
            return Err(Error::NonIntegral {
                value: c.to_string(),
                p,
            });
        }
    }
    if x.field().degree() > 1 {
        let disc = qpoly::discriminant(g);
        let v = rational_mod(&disc, &p_big, p)?;
        if v.is_zero() {
            return Err(Error::RamifiedOrIndex { p });
        }
    }
    let g_coeffs: Vec<BigInt> = g
        .iter()
        .map(|c| rational_mod(c, &p_big, p).map(BigInt::from))
        .collect::<Result<_>>()?;
    let g_mod = FpPoly::new(p_big.clone(), &g_coeffs)?;
    let factors = full_factor(&g_mod)?;
    if factor_index >= factors.len() {
        return Err(Error::FactorIndex {
            index: factor_index,
            count: factors.len(),
            p,
        });
    }
    let factor = factors[factor_index].0.clone();
    let val_coeffs: Vec<BigInt> = x
        .coords()
        .iter()
        .map(|c| rational_mod(c, &p_big, p).map(BigInt::from))
        .collect::<Result<_>>()?;
    let value = FpPoly::new(p_big, &val_coeffs)?.rem(&factor)?;
    Ok(PrimeResidue { factor, value })
}

/// A form is ordinary at p exactly when a(p) is a unit in the residue field
/// at the chosen prime above p.
pub fn is_p_ordinary(f: &NewformSpec, p: u64, factor_index: usize) -> Result<bool> {
    if f.level() % p == 0 {
        return Err(Error::LevelPrime {
            p,
            level: f.level(),
        });
    }
    let ap = f.ap(p)?;
    Ok(!residue_at_prime(&ap, p, factor_index)?.is_zero())
}

/// A p-adic integer approximation: a residue mod p^precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicApprox {
    pub p: u64,
    pub precision: u32,
    pub value: BigUint,
}

impl std::fmt::Display for PadicApprox {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} + O({}^{})", self.value, self.p, self.precision)
    }
}

/// The two roots of X^2 - a_p X + chi(p) p^(k-1), exactly in the coefficient
/// field when the polynomial splits there, otherwise the Hensel-lifted unit
/// root with the complementary root carried by its valuation and unit part.
#[derive(Debug, Clone)]
pub enum HeckeRoots {
    Exact {
        alpha: AlgebraicNumber,
        beta: AlgebraicNumber,
    },
    Padic {
        alpha: PadicApprox,
        /// beta = chi(p) p^(k-1) / alpha = p^beta_valuation * beta_unit
        beta_unit: PadicApprox,
        beta_valuation: u32,
    },
}

#[derive(Debug, Clone)]
pub struct StabilizationData {
    pub p: u64,
    pub precision: u32,
    pub roots: HeckeRoots,
}

/// The ordinary stabilization of an ordinary form: the root data plus the
/// coefficient functional n -> a_n(f) - beta a_{n/p}(f).
#[derive(Debug)]
pub struct StabilizedForm {
    base: NewformSpec,
    data: StabilizationData,
}

#[derive(Debug, Clone, PartialEq)]
pub enum StabCoeff {
    Exact(AlgebraicNumber),
    Padic(PadicApprox),
}

pub fn stabilize(
    f: &NewformSpec,
    p: u64,
    factor_index: usize,
    precision: u32,
) -> Result<StabilizedForm> {
    if !is_p_ordinary(f, p, factor_index)? {
        return Err(Error::NoUnitRoot { p });
    }
    let ap = f.ap(p)?;
    let det = f.frobenius_det(p)?;
    let k = f.weight();

    // exact branch: the Hecke polynomial splits over the coefficient field;
    // implemented over Q (all bundled data), via a perfect-square test on
    // the discriminant
    if let (Some(a), Some(d)) = (ap.to_rational(), det.to_rational()) {
        let disc = &a * &a - BigRational::from_integer(BigInt::from(4)) * &d;
        if let Some(s) = rational_sqrt(&disc) {
            let two = BigRational::from_integer(BigInt::from(2));
            let r1 = (&a + &s) / &two;
            let r2 = (&a - &s) / &two;
            let (alpha, beta) = match (rational_valuation(&r1, p), rational_valuation(&r2, p)) {
                (Some(0), _) => (r1, r2),
                (_, Some(0)) => (r2, r1),
                _ => return Err(Error::NoUnitRoot { p }),
            };
            debug_assert_eq!(rational_valuation(&beta, p), Some((k - 1) as i64));
            let field = f.field();
            return Ok(StabilizedForm {
                base: f.clone(),
                data: StabilizationData {
                    p,
                    precision,
                    roots: HeckeRoots::Exact {
                        alpha: field.from_rational(alpha),
                        beta: field.from_rational(beta),
                    },
                },
            });
        }
        // p-adic branch: Hensel-lift the unit root from its residue
        let modulus = BigUint::from(p).pow(precision);
        let a_mod = rational_mod(&a, &modulus, p)?;
        let d_mod = rational_mod(&d, &modulus, p)?;
        let alpha = hensel_unit_root(&a_mod, &d_mod, p, precision)?;
        // beta = d / alpha with v(beta) = k - 1 and v(d) = k - 1
        let chi = f
            .chi_at(p)?
            .to_rational()
            .expect("rational nebentypus value");
        let chi_mod = rational_mod(&chi, &modulus, p)?;
        let alpha_inv = inv_mod(&BigInt::from(alpha.clone()), &BigInt::from(modulus.clone()))
            .to_biguint()
            .unwrap();
        let beta_unit = chi_mod * alpha_inv % &modulus;
        return Ok(StabilizedForm {
            base: f.clone(),
            data: StabilizationData {
                p,
                precision,
                roots: HeckeRoots::Padic {
                    alpha: PadicApprox {
                        p,
                        precision,
                        value: alpha,
                    },
                    beta_unit: PadicApprox {
                        p,
                        precision,
                        value: beta_unit,
                    },
                    beta_valuation: k - 1,
                },
            },
        });
    }
    Err(Error::NotRational(
        "stabilization beyond rational Hecke data is not implemented".into(),
    ))
}

/// Newton iteration on X^2 - aX + d from the unit residue a mod p, doubling
/// precision each step.
fn hensel_unit_root(a: &BigUint, d: &BigUint, p: u64, precision: u32) -> Result<BigUint> {
    let p_big = BigUint::from(p);
    let a_int = BigInt::from(a.clone());
    let d_int = BigInt::from(d.clone());
    let x0 = a % &p_big;
    if x0.is_zero() {
        return Err(Error::NoUnitRoot { p });
    }
    // derivative 2x - a at x0 must be a unit mod p
    let deriv0: BigInt = (BigInt::from(x0.clone()) * 2 - &a_int) % BigInt::from(p);
    if deriv0.is_zero() {
        return Err(Error::SupersingularAmbiguity { p });
    }
    let mut x = BigInt::from(x0);
    let mut reached = 1u32;
    while reached < precision {
        reached = (reached * 2).min(precision);
        let modulus = BigInt::from(p_big.pow(reached));
        let fx = (&x * &x - &a_int * &x + &d_int) % &modulus;
        let dfx = ((&x * 2 - &a_int) % &modulus + &modulus) % &modulus;
        let step = (fx * inv_mod(&dfx, &modulus)) % &modulus;
        x = ((x - step) % &modulus + &modulus) % &modulus;
    }
    Ok(x.to_biguint().unwrap())
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let num = q.numer().to_biguint()?;
    let den = q.denom().to_biguint()?;
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &sn * &sn == num && &sd * &sd == den {
        Some(BigRational::new(sn.into(), sd.into()))
    } else {
        None
    }
}

/// p-adic valuation of a nonzero rational; None for 0.
fn rational_valuation(q: &BigRational, p: u64) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut v: i64 = 0;
    let mut n = q.numer().clone();
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    let mut d = q.denom().clone();
    while (&d % &p).is_zero() {
        d /= &p;
        v -= 1;
    }
    Some(v)
}

/// Verification of the defining identities of the stabilization, at the
/// working precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabilizationChecks {
    /// alpha + beta = a_p
    pub trace: bool,
    /// alpha * beta = chi(p) p^(k-1)
    pub det: bool,
    /// a_p of the stabilized form = alpha
    pub unit_coefficient: bool,
}

impl StabilizedForm {
    pub fn data(&self) -> &StabilizationData {
        &self.data
    }

    pub fn base(&self) -> &NewformSpec {
        &self.base
    }

    pub fn identity_checks(&self) -> Result<StabilizationChecks> {
        let p = self.data.p;
        let ap = self.base.ap(p)?;
        let det = self.base.frobenius_det(p)?;
        match &self.data.roots {
            HeckeRoots::Exact { alpha, beta } => {
                let unit = match self.coefficient(p)? {
                    StabCoeff::Exact(v) => v == *alpha,
                    StabCoeff::Padic(_) => false,
                };
                Ok(StabilizationChecks {
                    trace: alpha.add(beta) == ap,
                    det: alpha.mul(beta) == det,
                    unit_coefficient: unit,
                })
            }
            HeckeRoots::Padic {
                alpha,
                beta_unit,
                beta_valuation,
            } => {
                let modulus = BigUint::from(p).pow(alpha.precision);
                let ap_mod = rational_mod(
                    &ap.to_rational()
                        .ok_or_else(|| Error::NotRational(ap.to_string()))?,
                    &modulus,
                    p,
                )?;
                let det_mod = rational_mod(
                    &det.to_rational()
                        .ok_or_else(|| Error::NotRational(det.to_string()))?,
                    &modulus,
                    p,
                )?;
                let beta = BigUint::from(p).pow(*beta_valuation) * &beta_unit.value % &modulus;
                let trace = (&alpha.value + &beta) % &modulus == ap_mod;
                let det_ok = (&alpha.value * &beta) % &modulus == det_mod;
                let unit = match self.coefficient(p)? {
                    StabCoeff::Padic(v) => v.value == alpha.value,
                    StabCoeff::Exact(_) => false,
                };
                Ok(StabilizationChecks {
                    trace,
                    det: det_ok,
                    unit_coefficient: unit,
                })
            }
        }
    }

    /// a_n of the stabilized form: a_n(f) - beta a_{n/p}(f), the second term
    /// vanishing when p does not divide n.
    pub fn coefficient(&self, n: u64) -> Result<StabCoeff> {
        let p = self.data.p;
        let a_n = self.base.coefficient_at(n)?;
        if n % p != 0 {
            return match &self.data.roots {
                HeckeRoots::Exact { .. } => Ok(StabCoeff::Exact(a_n)),
                HeckeRoots::Padic { alpha, .. } => {
                    let q = a_n
                        .to_rational()
                        .ok_or_else(|| Error::NotRational(a_n.to_string()))?;
                    let modulus = BigUint::from(p).pow(alpha.precision);
                    Ok(StabCoeff::Padic(PadicApprox {
                        p,
                        precision: alpha.precision,
                        value: rational_mod(&q, &modulus, p)?,
                    }))
                }
            };
        }
        let a_shift = self.base.coefficient_at(n / p)?;
        match &self.data.roots {
            HeckeRoots::Exact { beta, .. } => Ok(StabCoeff::Exact(a_n.sub(&beta.mul(&a_shift)))),
            HeckeRoots::Padic {
                alpha,
                beta_unit,
                beta_valuation,
            } => {
                let precision = alpha.precision;
                let modulus = BigUint::from(p).pow(precision);
                let an = rational_mod(
                    &a_n.to_rational()
                        .ok_or_else(|| Error::NotRational(a_n.to_string()))?,
                    &modulus,
                    p,
                )?;
                let shift = rational_mod(
                    &a_shift
                        .to_rational()
                        .ok_or_else(|| Error::NotRational(a_shift.to_string()))?,
                    &modulus,
                    p,
                )?;
                let beta = BigUint::from(p).pow(*beta_valuation) * &beta_unit.value % &modulus;
                let m_int = BigInt::from(modulus.clone());
                let value =
                    ((BigInt::from(an) - BigInt::from(beta * shift)) % &m_int + &m_int) % &m_int;
                Ok(StabCoeff::Padic(PadicApprox {
                    p,
                    precision,
                    value: value.to_biguint().unwrap(),
                }))
            }
        }
    }
}

/// One classical specialization of a family: the form plus the choice of
/// prime above p in its coefficient field.
#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub form: NewformSpec,
    pub factor_index: usize,
}

/// A family of ordinary eigenforms sharing a tame level, keyed by weight.
#[derive(Debug, Clone)]
pub struct HidaFamilyTable {
    label: String,
    tame_level: u64,
    p: u64,
    specializations: BTreeMap<u32, FamilyMember>,
}

impl HidaFamilyTable {
    pub fn new(
        label: impl Into<String>,
        tame_level: u64,
        p: u64,
        members: Vec<FamilyMember>,
    ) -> Result<Self> {
        if tame_level % p == 0 {
            return Err(Error::LevelPrime {
                p,
                level: tame_level,
            });
        }
        let mut specializations = BTreeMap::new();
        for member in members {
            if member.form.level() != tame_level {
                return Err(Error::InvalidInput(format!(
                    "specialization {} has level {}, family tame level is {tame_level}",
                    member.form.label(),
                    member.form.level()
                )));
            }
            if !is_p_ordinary(&member.form, p, member.factor_index)? {
                return Err(Error::NoUnitRoot { p });
            }
            let weight = member.form.weight();
            if specializations.insert(weight, member).is_some() {
                return Err(Error::InvalidInput(format!(
                    "duplicate specialization at weight {weight}"
                )));
            }
        }
        Ok(HidaFamilyTable {
            label: label.into(),
            tame_level,
            p,
            specializations,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn tame_level(&self) -> u64 {
        self.tame_level
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn weights(&self) -> impl Iterator<Item = u32> + '_ {
        self.specializations.keys().copied()
    }

    pub fn member(&self, weight: u32) -> Result<&FamilyMember> {
        self.specializations
            .get(&weight)
            .ok_or(Error::MissingSpecialization { weight })
    }
}

/// The family base-change coefficient at a class of ell, evaluated at a
/// classical weight x: a_ell(f_x) when r = 1, otherwise
/// a_{ell^r}(f_x) - chi(ell) ell^(x-1) a_{ell^(r-2)}(f_x).
pub fn family_lift_coefficient(
    family: &HidaFamilyTable,
    split: &PrimeSplit,
    weight: u32,
) -> Result<AlgebraicNumber> {
    let ell = split.p;
    if ell == family.p {
        return Err(Error::InvalidInput(format!(
            "class prime {ell} equals the family prime"
        )));
    }
    if family.tame_level % ell == 0 {
        return Err(Error::LevelPrime {
            p: ell,
            level: family.tame_level,
        });
    }
    let member = family.member(weight)?;
    let f = &member.form;
    let r = split.f;
    if r == 1 {
        return f.ap(ell);
    }
    let head = f.coefficient_at_prime_power(ell, r)?;
    let tail = f.coefficient_at_prime_power(ell, r - 2)?;
    Ok(head.sub(&f.frobenius_det(ell)?.mul(&tail)))
}

/// When f is ordinary at ell and ell is unramified in F, the lifted
/// eigenvalue C at the class of ell is again a unit mod ell (through the
/// congruence a(ell^n) = a(ell)^n mod ell). Returns that verified unit-ness.
pub fn ordinarity_propagation_check(
    f: &NewformSpec,
    field: &NumberFieldSpec,
    ell: u64,
    factor_index: usize,
) -> Result<bool> {
    if !is_p_ordinary(f, ell, factor_index)? {
        return Err(Error::NoUnitRoot { p: ell });
    }
    let split = field.decompose_prime(ell)?;
    let lifted = lift::lift_eigenvalue(f, &split)?;
    Ok(!residue_at_prime(&lifted.value, ell, factor_index)?.is_zero())
}
