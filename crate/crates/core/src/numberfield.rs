//! Totally real Galois number fields presented by a defining polynomial, and
//! the decomposition data (e, f, g) of rational primes in them.
//!
//! Splitting is read off the factorization of the defining polynomial mod p
//! whenever p does not divide the polynomial discriminant; fields that carry
//! conductor-and-subgroup data additionally decompose through the order of
//! the Frobenius class in the quotient of (Z/mZ)*, which also covers
//! ramified conductor primes.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::characters::{euler_phi, unit_group_structure, validate_subgroup};
use crate::error::{Error, Result};
use crate::finitefield::{self, FpPoly};
use crate::qpoly;

/// Conductor m and the subgroup H of (Z/mZ)* fixing the field inside the
/// m-th cyclotomic field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianData {
    pub conductor: u64,
    pub subgroup: Vec<u64>,
}

/// A totally real number field, Galois over Q. The Galois property is
/// trusted input (it is asserted against unequal factor degrees whenever a
/// prime is decomposed); total reality is verified at construction by a
/// Sturm-sequence real-root count.
#[derive(Debug, Clone)]
pub struct NumberFieldSpec {
    label: String,
    defining_poly: Vec<BigInt>,
    degree: u32,
    poly_discriminant: BigInt,
    abelian_data: Option<AbelianData>,
}

impl NumberFieldSpec {
    pub fn new(
        label: impl Into<String>,
        defining_poly: Vec<BigInt>,
        abelian_data: Option<AbelianData>,
    ) -> Result<Self> {
        let label = label.into();
        let poly = defining_poly;
        if poly.len() < 2 {
            return Err(Error::InvalidInput(
                "defining polynomial must have degree >= 1".into(),
            ));
        }
        if poly.last().map_or(true, |c| *c != BigInt::from(1)) {
            return Err(Error::InvalidInput(
                "defining polynomial must be monic".into(),
            ));
        }
        let degree = (poly.len() - 1) as u32;
        let qp: qpoly::QPoly = poly
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let disc = qpoly::discriminant(&qp);
        if disc.is_zero() {
            return Err(Error::InvalidInput(
                "defining polynomial is not squarefree".into(),
            ));
        }
        debug_assert!(disc.is_integer());
        let real_roots = qpoly::real_root_count(&qp);
        if real_roots != degree as usize {
            return Err(Error::InvalidInput(format!(
                "field is not totally real: {real_roots} of {degree} roots are real"
            )));
        }
        if let Some(data) = &abelian_data {
            let m = data.conductor;
            let h = validate_subgroup(m, &data.subgroup)?;
            let index = euler_phi(m) / h.len().max(1) as u64;
            if m >= 2 && index != degree as u64 {
                return Err(Error::InvalidInput(format!(
                    "conductor data gives degree {index}, defining polynomial has degree {degree}"
                )));
            }
        }
        Ok(NumberFieldSpec {
            label,
            defining_poly: poly,
            degree,
            poly_discriminant: disc.to_integer(),
            abelian_data,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn defining_poly(&self) -> &[BigInt] {
        &self.defining_poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly_discriminant(&self) -> &BigInt {
        &self.poly_discriminant
    }

    pub fn abelian_data(&self) -> Option<&AbelianData> {
        self.abelian_data.as_ref()
    }

    pub fn is_rationals(&self) -> bool {
        self.degree == 1
    }

    fn divides_disc(&self, p: u64) -> bool {
        (self.poly_discriminant.clone() % BigInt::from(p)).is_zero()
    }

    /// Decompose an unramified rational prime through the factorization of
    /// the defining polynomial mod p.
    pub fn decompose_prime(&self, p: u64) -> Result<PrimeSplit> {
        if !finitefield::is_prime(&BigUint::from(p)) {
            return Err(Error::NotPrime(p.to_string()));
        }
        if self.divides_disc(p) {
            return Err(Error::RamifiedOrIndex { p });
        }
        let fp = FpPoly::new(BigUint::from(p), &self.defining_poly)?;
        let degrees = finitefield::splitting_degrees(&fp)?;
        let f = degrees[0].0;
        if degrees.len() != 1 {
            return Err(Error::NotGalois {
                p,
                degrees: degrees
                    .iter()
                    .flat_map(|&(d, c)| std::iter::repeat(d).take(c))
                    .collect(),
            });
        }
        let g = self.degree / f as u32;
        Ok(PrimeSplit {
            p,
            e: 1,
            f: f as u32,
            g,
        })
    }

    /// Decompose a prime coprime to the conductor through the order of its
    /// class in (Z/mZ)*/H.
    pub fn decompose_abelian(&self, p: u64) -> Result<PrimeSplit> {
        let data = self.abelian_data.as_ref().ok_or_else(|| {
            Error::InvalidInput(format!("field {} carries no conductor data", self.label))
        })?;
        if !finitefield::is_prime(&BigUint::from(p)) {
            return Err(Error::NotPrime(p.to_string()));
        }
        let m = data.conductor;
        if m > 1 && p.gcd(&m) != 1 {
            return Err(Error::RamifiedConductor { p, m });
        }
        let h = validate_subgroup(m, &data.subgroup)?;
        let r = coset_order(p, m, &h);
        Ok(PrimeSplit {
            p,
            e: 1,
            f: r as u32,
            g: self.degree / r as u32,
        })
    }

    /// Full abelian decomposition, including ramified conductor primes:
    /// inertia is the image of the units congruent to 1 mod the prime-to-p
    /// part of the conductor, and the residual degree is the Frobenius order
    /// in the quotient mod inertia.
    pub fn decompose_conductor_prime(&self, p: u64) -> Result<PrimeSplit> {
        let data = self.abelian_data.as_ref().ok_or_else(|| {
            Error::InvalidInput(format!("field {} carries no conductor data", self.label))
        })?;
        if !finitefield::is_prime(&BigUint::from(p)) {
            return Err(Error::NotPrime(p.to_string()));
        }
        let m = data.conductor;
        if m <= 1 || p.gcd(&m) == 1 {
            return self.decompose_abelian(p);
        }
        let h = validate_subgroup(m, &data.subgroup)?;
        // prime-to-p part of the conductor
        let mut m_tame = m;
        while m_tame % p == 0 {
            m_tame /= p;
        }
        // e = |I_p H| / |H| where I_p = ker((Z/mZ)* -> (Z/m_tame Z)*)
        let group = unit_group_structure(m);
        let inertia: Vec<u64> = group
            .units()
            .into_iter()
            .filter(|&u| m_tame <= 1 || u % m_tame == 1 % m_tame.max(1))
            .collect();
        let mut product: std::collections::BTreeSet<u64> = std::collections::BTreeSet::new();
        for &i in &inertia {
            for &hh in &h {
                product.insert((i as u128 * hh as u128 % m as u128) as u64);
            }
        }
        let e = (product.len() / h.len()) as u32;
        // image of H mod m_tame
        let h_tame: Vec<u64> = if m_tame <= 2 {
            vec![1 % m_tame.max(1)]
        } else {
            let set: std::collections::BTreeSet<u64> = h.iter().map(|&x| x % m_tame).collect();
            set.into_iter().collect()
        };
        let f = coset_order(p, m_tame, &h_tame) as u32;
        let g = self.degree / (e * f);
        Ok(PrimeSplit { p, e, f, g })
    }

    /// (e, f, g) for any prime: Dedekind splitting away from the
    /// discriminant, conductor data at discriminant primes.
    pub fn decompose_any(&self, p: u64) -> Result<PrimeSplit> {
        if !self.divides_disc(p) {
            return self.decompose_prime(p);
        }
        self.decompose_conductor_prime(p)
    }

    /// Prime classes of norm at most `norm_bound`, skipping `exclusions` and
    /// discriminant primes, sorted by norm then p.
    pub fn prime_ideals_up_to(
        &self,
        norm_bound: u64,
        exclusions: &[u64],
    ) -> Result<Vec<PrimeSplit>> {
        if norm_bound > 100_000_000 {
            return Err(Error::InvalidInput(format!(
                "norm bound {norm_bound} exceeds the enumeration limit of 10^8"
            )));
        }
        let mut out = Vec::new();
        for p in sieve_primes(norm_bound) {
            if exclusions.contains(&p) || self.divides_disc(p) {
                continue;
            }
            let split = self.decompose_prime(p)?;
            if split.norm_fits(norm_bound) {
                out.push(split);
            }
        }
        out.sort_by_key(|s| (s.norm_u128(), s.p));
        Ok(out)
    }
}

/// Least t >= 1 with p^t mod m in H; the residual degree of p in the field
/// fixed by H.
fn coset_order(p: u64, m: u64, h_sorted: &[u64]) -> u64 {
    if m <= 1 {
        return 1;
    }
    let base = p % m;
    let mut acc = base;
    let mut r = 1u64;
    while h_sorted.binary_search(&acc).is_err() {
        acc = (acc as u128 * base as u128 % m as u128) as u64;
        r += 1;
        assert!(r <= euler_phi(m), "no coset order: H is not a subgroup");
    }
    r
}

pub fn sieve_primes(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

/// Decomposition type of a rational prime in a Galois number field: the
/// shared (e, f, g) of the g primes above p. The individual primes are not
/// labeled; every consumer here only needs the class data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeSplit {
    pub p: u64,
    pub e: u32,
    pub f: u32,
    pub g: u32,
}

impl PrimeSplit {
    pub fn degree(&self) -> u32 {
        self.e * self.f * self.g
    }

    /// N(p) = p^f as a big integer.
    pub fn norm(&self) -> BigUint {
        BigUint::from(self.p).pow(self.f)
    }

    fn norm_u128(&self) -> u128 {
        let mut acc: u128 = 1;
        for _ in 0..self.f {
            acc = acc.saturating_mul(self.p as u128);
        }
        acc
    }

    pub fn norm_fits(&self, bound: u64) -> bool {
        self.norm_u128() <= bound as u128
    }
}

/// Minimal polynomial of zeta_m + zeta_m^{-1}, the generator of the maximal
/// totally real subfield of the m-th cyclotomic field, expanded exactly in
/// Q(zeta_m).
pub fn real_cyclotomic_min_poly(m: u64) -> Vec<BigInt> {
    use crate::characters::CyclotomicElement;
    assert!(m >= 3);
    // orbit representatives of (Z/mZ)* / {+-1}
    let mut reps = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for a in 1..m {
        if a.gcd(&m) != 1 || seen.contains(&a) {
            continue;
        }
        reps.push(a);
        seen.insert(a);
        seen.insert(m - a);
    }
    // product of (x - (zeta^a + zeta^-a)) with cyclotomic coefficients
    let mut poly: Vec<CyclotomicElement> = vec![CyclotomicElement::one()];
    for &a in &reps {
        let root =
            CyclotomicElement::root_of_unity(m, a).add(&CyclotomicElement::root_of_unity(m, m - a));
        let mut next = vec![CyclotomicElement::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].sub(&c.mul(&root));
        }
        poly = next;
    }
    poly.iter()
        .map(|c| {
            let q = c
                .to_rational()
                .expect("coefficients of the real subfield polynomial are rational");
            assert!(q.is_integer());
            q.to_integer()
        })
        .collect()
}
