//! Dense polynomial arithmetic over Q (and exact division over Z), used by the
//! cyclotomic, number-field and coefficient-field layers.
//!
//! Polynomials are coefficient vectors in ascending degree with no trailing
//! zeros; the zero polynomial is the empty vector.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type QPoly = Vec<BigRational>;
pub type ZPoly = Vec<BigInt>;

pub fn trim(mut p: QPoly) -> QPoly {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn deg(p: &QPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn is_monic(p: &QPoly) -> bool {
    p.last().map_or(false, |c| c.is_one())
}

pub fn add(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

pub fn sub(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

pub fn mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(out)
}

pub fn scale(a: &QPoly, c: &BigRational) -> QPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Euclidean division over Q: returns (quotient, remainder) with
/// `deg r < deg b`. Panics on division by the zero polynomial.
pub fn divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.len() < b.len() {
        return (Vec::new(), a.clone());
    }
    let mut rem = a.clone();
    let mut quo = vec![BigRational::zero(); a.len() - b.len() + 1];
    let lead = b.last().unwrap();
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let coef = rem.last().unwrap() / lead;
        quo[shift] = coef.clone();
        for (i, c) in b.iter().enumerate() {
            let t = c * &coef;
            rem[shift + i] -= t;
        }
        rem = trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    (trim(quo), rem)
}

pub fn derivative(a: &QPoly) -> QPoly {
    if a.len() <= 1 {
        return Vec::new();
    }
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

/// Resultant of two rational polynomials via the Euclidean recurrence.
pub fn resultant(a: &QPoly, b: &QPoly) -> BigRational {
    let (Some(da), Some(db)) = (deg(a), deg(b)) else {
        return BigRational::zero();
    };
    if db == 0 {
        return b[0].clone().pow(da as i32);
    }
    if da == 0 {
        return a[0].clone().pow(db as i32);
    }
    let (_, r) = divrem(a, b);
    let sign = if (da * db) % 2 == 1 {
        -BigRational::one()
    } else {
        BigRational::one()
    };
    match deg(&r) {
        None => BigRational::zero(),
        Some(dr) => {
            let lead = b.last().unwrap().clone().pow((da - dr) as i32);
            sign * lead * resultant(b, &r)
        }
    }
}

/// Discriminant of a polynomial: (-1)^{n(n-1)/2} res(f, f') / lc(f).
pub fn discriminant(f: &QPoly) -> BigRational {
    let n = deg(f).expect("discriminant of zero polynomial");
    assert!(n >= 1);
    let res = resultant(f, &derivative(f));
    let sign = if (n * (n - 1) / 2) % 2 == 1 {
        -BigRational::one()
    } else {
        BigRational::one()
    };
    sign * res / f.last().unwrap()
}

/// Number of distinct real roots of a squarefree polynomial, by Sturm's
/// theorem (sign variations at -inf minus sign variations at +inf).
pub fn real_root_count(f: &QPoly) -> usize {
    let n = match deg(f) {
        None | Some(0) => return 0,
        Some(n) => n,
    };
    // Sturm chain: p0 = f, p1 = f', p_{i+1} = -rem(p_{i-1}, p_i).
    let mut chain = vec![f.clone(), derivative(f)];
    loop {
        let k = chain.len();
        let (_, r) = divrem(&chain[k - 2], &chain[k - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(scale(&r, &-BigRational::one()));
    }
    // Sign at +inf is the sign of the leading coefficient; at -inf it flips
    // with odd degree.
    let sign_at = |p: &QPoly, neg: bool| -> i8 {
        let d = deg(p).unwrap();
        let lc = p.last().unwrap();
        let mut s = if lc.is_positive() { 1i8 } else { -1i8 };
        if neg && d % 2 == 1 {
            s = -s;
        }
        s
    };
    let variations = |neg: bool| -> usize {
        let signs: Vec<i8> = chain.iter().map(|p| sign_at(p, neg)).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    let _ = n;
    variations(true) - variations(false)
}

// --- exact integer polynomial helpers (cyclotomic polynomials) ---

pub fn ztrim(mut p: ZPoly) -> ZPoly {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Remainder of an integer polynomial modulo a monic integer polynomial.
pub fn zrem(a: &ZPoly, b: &ZPoly) -> ZPoly {
    assert!(
        !b.is_empty() && b.last().unwrap().is_one(),
        "divisor must be monic"
    );
    let mut rem = a.clone();
    while rem.len() >= b.len() {
        let coef = rem.last().unwrap().clone();
        let shift = rem.len() - b.len();
        if !coef.is_zero() {
            for (i, c) in b.iter().enumerate() {
                let t = c * &coef;
                rem[shift + i] -= t;
            }
        }
        rem.pop();
        while rem.last().map_or(false, |c| c.is_zero()) {
            rem.pop();
        }
    }
    rem
}

/// Exact division of integer polynomials; panics if the division is inexact
/// or the divisor is not monic up to sign.
pub fn zdiv_exact(a: &ZPoly, b: &ZPoly) -> ZPoly {
    assert!(!b.is_empty());
    let lead = b.last().unwrap();
    assert!(
        *lead.magnitude() == num_bigint::BigUint::from(1u8),
        "divisor must have unit leading coefficient"
    );
    let mut rem = a.clone();
    if rem.len() < b.len() {
        assert!(ztrim(rem.clone()).is_empty(), "inexact division");
        return Vec::new();
    }
    let mut quo = vec![BigInt::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let coef = rem.last().unwrap() / lead;
        quo[shift] = coef.clone();
        for (i, c) in b.iter().enumerate() {
            let t = c * &coef;
            rem[shift + i] -= t;
        }
        rem = ztrim(rem);
        if rem.is_empty() {
            break;
        }
    }
    assert!(rem.is_empty(), "inexact division");
    quo
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn poly(cs: &[i64]) -> QPoly {
        trim(cs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn divrem_roundtrip() {
        let a = poly(&[-1, 0, 0, 0, 1]); // x^4 - 1
        let b = poly(&[-1, 1]); // x - 1
        let (quo, rem) = divrem(&a, &b);
        assert!(rem.is_empty());
        assert_eq!(quo, poly(&[1, 1, 1, 1]));
        assert_eq!(add(&mul(&quo, &b), &rem), a);
    }

    #[test]
    fn discriminants_of_fixture_polynomials() {
        assert_eq!(discriminant(&poly(&[-2, 0, 1])), q(8));
        assert_eq!(discriminant(&poly(&[-1, -2, 1, 1])), q(49));
        assert_eq!(discriminant(&poly(&[1, 3, -3, -4, 1, 1])), q(14641));
    }

    #[test]
    fn sturm_counts_real_roots() {
        // x^2 - 2: two real roots
        assert_eq!(real_root_count(&poly(&[-2, 0, 1])), 2);
        // x^2 + 1: none
        assert_eq!(real_root_count(&poly(&[1, 0, 1])), 0);
        // totally real quintic
        assert_eq!(real_root_count(&poly(&[1, 3, -3, -4, 1, 1])), 5);
        // x^3 - 2: one real root
        assert_eq!(real_root_count(&poly(&[-2, 0, 0, 1])), 1);
    }

    #[test]
    fn zdiv_exact_divides_cyclotomic_product() {
        // (x^6 - 1) / (x^2 + x + 1) = x^4 - x^3 + x - 1
        let a: ZPoly = vec![
            BigInt::from(-1),
            BigInt::from(0),
            BigInt::from(0),
            BigInt::from(0),
            BigInt::from(0),
            BigInt::from(0),
            BigInt::from(1),
        ];
        let b: ZPoly = vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)];
        let quo = zdiv_exact(&a, &b);
        assert_eq!(
            quo,
            vec![
                BigInt::from(-1),
                BigInt::from(1),
                BigInt::from(0),
                BigInt::from(-1),
                BigInt::from(1)
            ]
        );
    }
}
