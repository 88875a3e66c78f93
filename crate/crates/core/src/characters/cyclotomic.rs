//! Exact arithmetic in cyclotomic fields Q(zeta_M).
//!
//! Elements are rational coefficient vectors in the power basis
//! 1, zeta, ..., zeta^(phi(M)-1), reduced mod the M-th cyclotomic polynomial.
//! Arithmetic between different conductor orders lifts both operands to the
//! least common multiple; equality is equality after that lift.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::qpoly::{self, QPoly, ZPoly};

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn phi_memo() -> &'static Mutex<HashMap<u64, Arc<ZPoly>>> {
    static MEMO: OnceLock<Mutex<HashMap<u64, Arc<ZPoly>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The M-th cyclotomic polynomial over Z, by the recursive quotient
/// Phi_M = (x^M - 1) / prod_{d | M, d < M} Phi_d. Memoized.
pub fn cyclotomic_polynomial(m: u64) -> Arc<ZPoly> {
    assert!(m >= 1);
    if let Some(hit) = phi_memo().lock().unwrap().get(&m) {
        return hit.clone();
    }
    let poly = if m == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        let mut num: ZPoly = vec![BigInt::zero(); m as usize + 1];
        num[0] = BigInt::from(-1);
        num[m as usize] = BigInt::one();
        let mut quo = num;
        for d in 1..m {
            if m % d == 0 {
                let phi_d = cyclotomic_polynomial(d);
                quo = qpoly::zdiv_exact(&quo, &phi_d);
            }
        }
        quo
    };
    let arc = Arc::new(poly);
    phi_memo()
        .lock()
        .unwrap()
        .entry(m)
        .or_insert_with(|| arc.clone());
    arc
}

fn phi_as_qpoly(m: u64) -> QPoly {
    cyclotomic_polynomial(m)
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

/// An element of Q(zeta_M), exact.
#[derive(Debug, Clone)]
pub struct CyclotomicElement {
    order: u64,
    coeffs: QPoly,
}

impl CyclotomicElement {
    fn reduce(order: u64, coeffs: QPoly) -> Self {
        let phi = phi_as_qpoly(order);
        let coeffs = if qpoly::deg(&coeffs) >= qpoly::deg(&phi) {
            qpoly::divrem(&coeffs, &phi).1
        } else {
            qpoly::trim(coeffs)
        };
        CyclotomicElement { order, coeffs }
    }

    pub fn zero() -> Self {
        CyclotomicElement {
            order: 1,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        let coeffs = if q.is_zero() { Vec::new() } else { vec![q] };
        CyclotomicElement { order: 1, coeffs }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// zeta_M^k, reduced.
    pub fn root_of_unity(order: u64, k: u64) -> Self {
        assert!(order >= 1);
        let k = (k % order) as usize;
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::one();
        Self::reduce(order, coeffs)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &QPoly {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Rewrite in Q(zeta_N) for N a multiple of the current order.
    pub fn lift_to(&self, new_order: u64) -> Self {
        assert!(new_order % self.order == 0, "not a conductor multiple");
        if new_order == self.order {
            return self.clone();
        }
        let t = (new_order / self.order) as usize;
        if self.coeffs.is_empty() {
            return CyclotomicElement {
                order: new_order,
                coeffs: Vec::new(),
            };
        }
        let mut lifted = vec![BigRational::zero(); (self.coeffs.len() - 1) * t + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            lifted[i * t] = c.clone();
        }
        Self::reduce(new_order, lifted)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self, u64) {
        let m = a.order.lcm(&b.order);
        (a.lift_to(m), b.lift_to(m), m)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b, m) = Self::common(self, other);
        Self::reduce(m, qpoly::add(&a.coeffs, &b.coeffs))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b, m) = Self::common(self, other);
        Self::reduce(m, qpoly::sub(&a.coeffs, &b.coeffs))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b, m) = Self::common(self, other);
        Self::reduce(m, qpoly::mul(&a.coeffs, &b.coeffs))
    }

    pub fn neg(&self) -> Self {
        CyclotomicElement {
            order: self.order,
            coeffs: qpoly::scale(&self.coeffs, &-BigRational::one()),
        }
    }

    pub fn mul_rational(&self, q: &BigRational) -> Self {
        CyclotomicElement {
            order: self.order,
            coeffs: qpoly::scale(&self.coeffs, q),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    /// The rational value, when the element lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Render with the given symbol for zeta_M.
    pub fn format_with(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
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

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicElement {}

impl std::fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.format_with("z"))
    }
}
