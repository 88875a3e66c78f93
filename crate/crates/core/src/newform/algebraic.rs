//! Exact elements of a coefficient field K = Q[x]/(g).

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qpoly::{self, QPoly};

#[derive(Debug, PartialEq, Eq)]
struct FieldInner {
    poly: QPoly,
    degree: usize,
}

/// A coefficient field Q[x]/(g) for a monic rational g; degree 1 degenerates
/// to Q itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientField {
    inner: Arc<FieldInner>,
}

impl CoefficientField {
    pub fn new(poly: QPoly) -> Result<Self> {
        let poly = qpoly::trim(poly);
        match qpoly::deg(&poly) {
            None | Some(0) => {
                return Err(Error::InvalidInput(
                    "coefficient field polynomial must have degree >= 1".into(),
                ))
            }
            Some(_) if !qpoly::is_monic(&poly) => {
                return Err(Error::InvalidInput(
                    "coefficient field polynomial must be monic".into(),
                ))
            }
            Some(d) => Ok(CoefficientField {
                inner: Arc::new(FieldInner { poly, degree: d }),
            }),
        }
    }

    /// Q presented as Q[x]/(x).
    pub fn rationals() -> Self {
        CoefficientField {
            inner: Arc::new(FieldInner {
                poly: vec![BigRational::zero(), BigRational::one()],
                degree: 1,
            }),
        }
    }

    pub fn poly(&self) -> &QPoly {
        &self.inner.poly
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn is_rationals(&self) -> bool {
        self.inner.degree == 1
    }

    pub fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.poly == other.inner.poly
    }

    /// Element from power-basis coordinates; longer vectors are reduced mod g.
    pub fn element(&self, coords: Vec<BigRational>) -> AlgebraicNumber {
        let coords = qpoly::trim(coords);
        let reduced = if qpoly::deg(&coords) >= Some(self.degree()) {
            qpoly::divrem(&coords, self.poly()).1
        } else {
            coords
        };
        let mut padded = reduced;
        padded.resize(self.degree(), BigRational::zero());
        AlgebraicNumber {
            field: self.clone(),
            coords: padded,
        }
    }

    pub fn from_rational(&self, q: BigRational) -> AlgebraicNumber {
        self.element(vec![q])
    }

    pub fn from_integer(&self, n: i64) -> AlgebraicNumber {
        self.from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero(&self) -> AlgebraicNumber {
        self.element(Vec::new())
    }

    pub fn one(&self) -> AlgebraicNumber {
        self.from_integer(1)
    }

    /// The class of x, a root of the defining polynomial.
    pub fn generator(&self) -> AlgebraicNumber {
        self.element(vec![BigRational::zero(), BigRational::one()])
    }

    /// The nontrivial automorphisms of the field, as images of the
    /// generator. Exact for degree <= 2; larger degrees would need root
    /// finding inside the field and are reported as unsupported.
    pub fn automorphism_generator_images(&self) -> Result<Vec<AlgebraicNumber>> {
        match self.degree() {
            1 => Ok(vec![]),
            2 => {
                // other root of x^2 + a1 x + a0 is -a1 - theta
                let a1 = self.poly()[1].clone();
                Ok(vec![self.element(vec![-a1, -BigRational::one()])])
            }
            d => Err(Error::InvalidInput(format!(
                "automorphism computation implemented for degree <= 2, field has degree {d}"
            ))),
        }
    }
}

/// An element of a coefficient field, held as exact rational coordinates in
/// the power basis.
#[derive(Debug, Clone)]
pub struct AlgebraicNumber {
    field: CoefficientField,
    coords: Vec<BigRational>,
}

impl AlgebraicNumber {
    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    /// Power-basis coordinates, length = field degree.
    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(
            self.field.same_field(&other.field),
            "mixed coefficient fields in arithmetic"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        self.field.element(qpoly::add(
            &qpoly::trim(self.coords.clone()),
            &qpoly::trim(other.coords.clone()),
        ))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        self.field.element(qpoly::sub(
            &qpoly::trim(self.coords.clone()),
            &qpoly::trim(other.coords.clone()),
        ))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        self.field.element(qpoly::mul(
            &qpoly::trim(self.coords.clone()),
            &qpoly::trim(other.coords.clone()),
        ))
    }

    pub fn neg(&self) -> Self {
        self.field.element(qpoly::scale(
            &qpoly::trim(self.coords.clone()),
            &-BigRational::one(),
        ))
    }

    pub fn mul_rational(&self, q: &BigRational) -> Self {
        self.field
            .element(qpoly::scale(&qpoly::trim(self.coords.clone()), q))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coords.iter().skip(1).all(|c| c.is_zero()) {
            Some(
                self.coords
                    .first()
                    .cloned()
                    .unwrap_or_else(BigRational::zero),
            )
        } else {
            None
        }
    }

    /// Move the element into another presentation of the same field, or embed
    /// a rational value into any field.
    pub fn coerce_into(&self, target: &CoefficientField) -> Result<Self> {
        if self.field.same_field(target) {
            return Ok(target.element(qpoly::trim(self.coords.clone())));
        }
        if let Some(q) = self.to_rational() {
            return Ok(target.from_rational(q));
        }
        Err(Error::FieldCoercion(
            self.to_string(),
            format!("{:?}", target.poly()),
        ))
    }

    pub fn format_with(&self, var: &str) -> String {
        let trimmed = qpoly::trim(self.coords.clone());
        if trimmed.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in trimmed.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let body = match i {
                0 => mag.to_string(),
                1 if mag.is_one() => var.to_string(),
                1 => format!("{mag}*{var}"),
                _ if mag.is_one() => format!("{var}^{i}"),
                _ => format!("{mag}*{var}^{i}"),
            };
            out.push_str(&body);
        }
        out
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_field(&other.field) && self.coords == other.coords
    }
}

impl Eq for AlgebraicNumber {}

impl std::fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.format_with("a"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn rational_field_arithmetic() {
        let k = CoefficientField::rationals();
        let a = k.from_integer(-2);
        let b = k.from_integer(3);
        assert_eq!(a.mul(&b), k.from_integer(-6));
        assert_eq!(a.add(&b), k.one());
        assert_eq!(a.to_rational(), Some(q(-2)));
    }

    #[test]
    fn quadratic_field_arithmetic() {
        // K = Q(sqrt 5)
        let k = CoefficientField::new(vec![q(-5), q(0), q(1)]).unwrap();
        let s = k.generator();
        assert_eq!(s.mul(&s), k.from_integer(5));
        assert!(s.to_rational().is_none());
        let golden = k
            .element(vec![q(1), q(1)])
            .mul_rational(&BigRational::new(BigInt::from(1), BigInt::from(2)));
        // golden ratio-like element: ((1 + sqrt5)/2)^2 = (3 + sqrt5)/2
        let sq = golden.mul(&golden);
        assert_eq!(
            sq,
            k.element(vec![q(3), q(1)])
                .mul_rational(&BigRational::new(BigInt::from(1), BigInt::from(2)))
        );
    }

    #[test]
    fn quadratic_automorphism() {
        let k = CoefficientField::new(vec![q(-2), q(0), q(1)]).unwrap();
        let autos = k.automorphism_generator_images().unwrap();
        assert_eq!(autos.len(), 1);
        assert_eq!(autos[0], k.generator().neg());
        assert!(CoefficientField::rationals()
            .automorphism_generator_images()
            .unwrap()
            .is_empty());
    }

    #[test]
    fn coercion() {
        let k = CoefficientField::new(vec![q(-2), q(0), q(1)]).unwrap();
        let r = k.from_integer(7);
        let back = r.coerce_into(&CoefficientField::rationals()).unwrap();
        assert_eq!(back.to_rational(), Some(q(7)));
        assert!(k
            .generator()
            .coerce_into(&CoefficientField::rationals())
            .is_err());
    }
}
