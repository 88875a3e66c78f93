//! Classical newforms as exact eigenvalue data: level, weight, nebentypus,
//! coefficient field, and the table of Hecke eigenvalues at primes. Prime
//! power and composite coefficients are always derived through the Hecke
//! recursion, never stored.

pub mod algebraic;

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use algebraic::{AlgebraicNumber, CoefficientField};

use crate::characters::DirichletCharacterSpec;
use crate::error::{Error, Result};

#[derive(Debug)]
pub struct NewformSpec {
    label: String,
    level: u64,
    weight: u32,
    nebentypus: DirichletCharacterSpec,
    field: CoefficientField,
    ap: BTreeMap<u64, AlgebraicNumber>,
    ap_bound: u64,
    cache: RwLock<HashMap<(u64, u32), AlgebraicNumber>>,
}

impl Clone for NewformSpec {
    fn clone(&self) -> Self {
        NewformSpec {
            label: self.label.clone(),
            level: self.level,
            weight: self.weight,
            nebentypus: self.nebentypus.clone(),
            field: self.field.clone(),
            ap: self.ap.clone(),
            ap_bound: self.ap_bound,
            cache: RwLock::new(HashMap::new()),
        }
    }
}

impl PartialEq for NewformSpec {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label
            && self.level == other.level
            && self.weight == other.weight
            && self.nebentypus == other.nebentypus
            && self.field.same_field(&other.field)
            && self.ap == other.ap
    }
}

impl NewformSpec {
    pub fn new(
        label: impl Into<String>,
        level: u64,
        weight: u32,
        nebentypus: DirichletCharacterSpec,
        field: CoefficientField,
        ap: BTreeMap<u64, AlgebraicNumber>,
        ap_bound: u64,
    ) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidInput("level must be positive".into()));
        }
        if weight < 2 {
            return Err(Error::InvalidInput("weight must be at least 2".into()));
        }
        let m = nebentypus.modulus();
        if m != 0 && level % m.max(1) != 0 {
            return Err(Error::InvalidInput(format!(
                "nebentypus modulus {m} does not divide the level {level}"
            )));
        }
        for (p, a) in &ap {
            if !crate::finitefield::is_prime(&num_bigint::BigUint::from(*p)) {
                return Err(Error::InvalidInput(format!(
                    "eigenvalue table key {p} is not prime"
                )));
            }
            if !a.field().same_field(&field) {
                return Err(Error::InvalidInput(format!(
                    "eigenvalue a({p}) lies outside the declared coefficient field"
                )));
            }
        }
        Ok(NewformSpec {
            label: label.into(),
            level,
            weight,
            nebentypus,
            field,
            ap,
            ap_bound,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn nebentypus(&self) -> &DirichletCharacterSpec {
        &self.nebentypus
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn ap_bound(&self) -> u64 {
        self.ap_bound
    }

    pub fn stored_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.ap.keys().copied()
    }

    /// a(p) from the stored table.
    pub fn ap(&self, p: u64) -> Result<AlgebraicNumber> {
        self.ap
            .get(&p)
            .cloned()
            .ok_or_else(|| Error::InsufficientData {
                label: self.label.clone(),
                p,
                bound: self.ap_bound,
            })
    }

    /// chi(p) p^(k-1), the determinant of Frobenius, as a field element.
    /// Nebentypus values are coerced from the cyclotomic side; values outside
    /// the coefficient field are a hard error.
    pub fn frobenius_det(&self, p: u64) -> Result<AlgebraicNumber> {
        let chi = self.chi_at(p)?;
        let pk = BigRational::from_integer(BigInt::from(p).pow(self.weight - 1));
        Ok(chi.mul_rational(&pk))
    }

    /// chi(p) as a field element (0 when p shares a factor with the modulus).
    pub fn chi_at(&self, p: u64) -> Result<AlgebraicNumber> {
        let value = self.nebentypus.evaluate(p);
        match value.to_rational() {
            Some(q) => Ok(self.field.from_rational(q)),
            None => Err(Error::FieldCoercion(
                value.to_string(),
                format!("{:?}", self.field.poly()),
            )),
        }
    }

    /// a(p^n) by the Hecke recursion; for p dividing the level the Euler
    /// factor has degree <= 1 and a(p^n) = a(p)^n (standard newform theory).
    pub fn coefficient_at_prime_power(&self, p: u64, n: u32) -> Result<AlgebraicNumber> {
        if n == 0 {
            return Ok(self.field.one());
        }
        if let Some(hit) = self.cache.read().unwrap().get(&(p, n)) {
            return Ok(hit.clone());
        }
        let a1 = self.ap(p)?;
        let value = if self.level % p == 0 {
            a1.pow(n)
        } else {
            let det = self.frobenius_det(p)?;
            let mut prev = self.field.one(); // a(p^0)
            let mut cur = a1.clone(); // a(p^1)
            for _ in 2..=n {
                let next = a1.mul(&cur).sub(&det.mul(&prev));
                prev = cur;
                cur = next;
            }
            cur
        };
        self.cache
            .write()
            .unwrap()
            .entry((p, n))
            .or_insert_with(|| value.clone());
        Ok(value)
    }

    /// a(n) for arbitrary n >= 1 by multiplicativity; every prime factor of
    /// n must be in the stored table.
    pub fn coefficient_at(&self, n: u64) -> Result<AlgebraicNumber> {
        if n == 0 {
            return Err(Error::InvalidInput("coefficient index must be >= 1".into()));
        }
        let mut acc = self.field.one();
        let mut rest = n;
        let mut p = 2u64;
        while p * p <= rest {
            if rest % p == 0 {
                let mut e = 0u32;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                acc = acc.mul(&self.coefficient_at_prime_power(p, e)?);
            }
            p += 1;
        }
        if rest > 1 {
            acc = acc.mul(&self.coefficient_at_prime_power(rest, 1)?);
        }
        Ok(acc)
    }

    /// Tr(Frobenius_p^n) = a(p^n) - chi(p) p^(k-1) a(p^(n-2)) for n >= 2,
    /// a(p) for n = 1. Requires p coprime to the level.
    pub fn trace_frobenius_power(&self, p: u64, n: u32) -> Result<AlgebraicNumber> {
        if self.level % p == 0 {
            return Err(Error::LevelPrime {
                p,
                level: self.level,
            });
        }
        assert!(n >= 1);
        if n == 1 {
            return self.ap(p);
        }
        let head = self.coefficient_at_prime_power(p, n)?;
        let tail = self.coefficient_at_prime_power(p, n - 2)?;
        Ok(head.sub(&self.frobenius_det(p)?.mul(&tail)))
    }

    /// Primes from the stored table violating the Deligne bound
    /// |a(l)| <= 2 l^((k-1)/2); only meaningful (and only checked) for
    /// rational coefficients with trivial nebentypus. A nonempty result
    /// signals corrupted data, reported as a warning by loaders.
    pub fn deligne_violations(&self) -> Vec<u64> {
        if !self.field.is_rationals() || !self.nebentypus.is_trivial() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (p, a) in &self.ap {
            if self.level % p == 0 {
                continue;
            }
            let Some(q) = a.to_rational() else { continue };
            // a^2 <= 4 p^(k-1), exactly
            let bound =
                BigRational::from_integer(BigInt::from(4) * BigInt::from(*p).pow(self.weight - 1));
            if &q * &q > bound {
                out.push(*p);
            }
        }
        out
    }
}

/// Power sums of the two eigenvalues of an abstract 2x2 matrix with trace t
/// and determinant d, computed purely by the three-term recursion with
/// Tr(A^0) = 2 and Tr(A^1) = t. Independent oracle for the trace formula.
pub fn newton_trace_oracle(t: &AlgebraicNumber, d: &AlgebraicNumber, n: u32) -> AlgebraicNumber {
    assert!(n >= 1);
    let field = t.field().clone();
    let mut prev = field.from_integer(2);
    let mut cur = t.clone();
    for _ in 2..=n {
        let next = t.mul(&cur).sub(&d.mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}
