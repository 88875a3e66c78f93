//! Polynomial arithmetic and factorization over prime fields F_p.
//!
//! This is the substrate for prime splitting: distinct-degree factorization
//! supplies the residual degrees of the irreducible factors of a defining
//! polynomial mod p, and the full factorization picks the irreducible factor
//! that cuts out a chosen prime of a coefficient field.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Default seed for the randomized equal-degree split; fixed so that test
/// runs are reproducible. Override per call through [`full_factor_seeded`]
/// or process-wide through [`set_default_factor_seed`].
pub const DEFAULT_FACTOR_SEED: u64 = 0x5eed_cafe;

static FACTOR_SEED: std::sync::atomic::AtomicU64 =
    std::sync::atomic::AtomicU64::new(DEFAULT_FACTOR_SEED);

pub fn set_default_factor_seed(seed: u64) {
    FACTOR_SEED.store(seed, std::sync::atomic::Ordering::Relaxed);
}

pub fn default_factor_seed() -> u64 {
    FACTOR_SEED.load(std::sync::atomic::Ordering::Relaxed)
}

/// Deterministic Miller-Rabin witness set, valid for all n < 3.3e24,
/// comfortably past the 3e18 deterministic threshold. Beyond that range the
/// same bases give a (fixed-base) probabilistic test.
const MR_WITNESSES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u8);
    if *n < two {
        return false;
    }
    for small in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
        let s = BigUint::from(small);
        if *n == s {
            return true;
        }
        if (n % &s).is_zero() {
            return false;
        }
    }
    // write n - 1 = d * 2^r
    let n_minus_1 = n - 1u8;
    let mut d = n_minus_1.clone();
    let mut r = 0u32;
    while d.is_even() {
        d >>= 1;
        r += 1;
    }
    'witness: for w in MR_WITNESSES {
        let a = BigUint::from(w);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..r {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn inv_mod(a: &BigUint, p: &BigUint) -> BigUint {
    // extended Euclid over the integers
    let (mut r0, mut r1) = (BigInt::from(p.clone()), BigInt::from(a.clone()));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    assert!(r0.is_one(), "element not invertible");
    let p_int = BigInt::from(p.clone());
    let t = ((t0 % &p_int) + &p_int) % &p_int;
    t.to_biguint().unwrap()
}

/// A polynomial over F_p, coefficients ascending by degree with no trailing
/// zeros; every coefficient lies in [0, p).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    p: BigUint,
    coeffs: Vec<BigUint>,
}

impl FpPoly {
    /// Build a polynomial from integer coefficients (any sign), reducing mod p.
    /// Rejects composite moduli.
    pub fn new(p: BigUint, coeffs: &[BigInt]) -> Result<Self> {
        if !is_prime(&p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        Ok(Self::reduce_from(p, coeffs))
    }

    pub fn from_u64(p: u64, coeffs: &[i64]) -> Result<Self> {
        let cs: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Self::new(BigUint::from(p), &cs)
    }

    fn reduce_from(p: BigUint, coeffs: &[BigInt]) -> Self {
        let p_int = BigInt::from(p.clone());
        let cs = coeffs
            .iter()
            .map(|c| {
                let r = ((c % &p_int) + &p_int) % &p_int;
                r.to_biguint().unwrap()
            })
            .collect();
        Self::from_reduced(p, cs)
    }

    fn from_reduced(p: BigUint, mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn zero(p: BigUint) -> Self {
        FpPoly { p, coeffs: vec![] }
    }

    pub fn one(p: BigUint) -> Self {
        FpPoly {
            p,
            coeffs: vec![BigUint::one()],
        }
    }

    /// The monomial x.
    pub fn x(p: BigUint) -> Self {
        FpPoly {
            p,
            coeffs: vec![BigUint::zero(), BigUint::one()],
        }
    }

    pub fn constant(p: BigUint, c: &BigInt) -> Self {
        Self::reduce_from(p, std::slice::from_ref(c))
    }

    pub fn modulus(&self) -> &BigUint {
        &self.p
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    fn check_same_field(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::DistinctField(
                self.p.to_string(),
                other.p.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigUint::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
            if out[i] >= self.p {
                out[i] -= &self.p;
            }
        }
        Ok(Self::from_reduced(self.p.clone(), out))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigUint::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            if out[i] < *c {
                out[i] += &self.p;
            }
            out[i] -= c;
        }
        Ok(Self::from_reduced(self.p.clone(), out))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.p.clone()));
        }
        let mut out = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        for c in &mut out {
            *c %= &self.p;
        }
        Ok(Self::from_reduced(self.p.clone(), out))
    }

    /// Euclidean division; the divisor need not be monic.
    pub fn divrem(&self, other: &Self) -> Result<(Self, Self)> {
        self.check_same_field(other)?;
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.coeffs.len() < other.coeffs.len() {
            return Ok((Self::zero(self.p.clone()), self.clone()));
        }
        let lead_inv = inv_mod(other.coeffs.last().unwrap(), &self.p);
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigUint::zero(); rem.len() - other.coeffs.len() + 1];
        while rem.len() >= other.coeffs.len() {
            let shift = rem.len() - other.coeffs.len();
            let coef = (rem.last().unwrap() * &lead_inv) % &self.p;
            if !coef.is_zero() {
                quo[shift] = coef.clone();
                for (i, c) in other.coeffs.iter().enumerate() {
                    let t = (c * &coef) % &self.p;
                    if rem[shift + i] < t {
                        rem[shift + i] += &self.p;
                    }
                    rem[shift + i] -= t;
                }
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((
            Self::from_reduced(self.p.clone(), quo),
            Self::from_reduced(self.p.clone(), rem),
        ))
    }

    pub fn rem(&self, other: &Self) -> Result<Self> {
        Ok(self.divrem(other)?.1)
    }

    /// Exact quotient; panics if the division leaves a remainder.
    fn div_exact(&self, other: &Self) -> Self {
        let (q, r) = self.divrem(other).expect("same field");
        assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = inv_mod(lc, &self.p);
                let coeffs = self.coeffs.iter().map(|c| (c * &inv) % &self.p).collect();
                Self::from_reduced(self.p.clone(), coeffs)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.p.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| (c * BigUint::from(i)) % &self.p)
            .collect();
        Self::from_reduced(self.p.clone(), coeffs)
    }

    /// self^e mod m, square-and-multiply over the bits of e.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Result<Self> {
        self.check_same_field(m)?;
        let mut base = self.rem(m)?;
        let mut acc = Self::one(self.p.clone());
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base)?.rem(m)?;
            }
            if i + 1 < bits {
                base = base.mul(&base)?.rem(m)?;
            }
        }
        Ok(acc)
    }

    pub fn format(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = match i {
                0 => c.to_string(),
                1 if c.is_one() => var.to_string(),
                1 => format!("{c}*{var}"),
                _ if c.is_one() => format!("{var}^{i}"),
                _ => format!("{c}*{var}^{i}"),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

/// Monic greatest common divisor; gcd(a, 0) = monic(a).
pub fn poly_gcd(a: &FpPoly, b: &FpPoly) -> Result<FpPoly> {
    if a.modulus() != b.modulus() {
        return Err(Error::DistinctField(
            a.modulus().to_string(),
            b.modulus().to_string(),
        ));
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let r = x.rem(&y)?;
        x = std::mem::replace(&mut y, r);
    }
    Ok(x.monic())
}

fn check_factor_input(f: &FpPoly) -> Result<()> {
    match f.degree() {
        None | Some(0) => Err(Error::InvalidModulus(format!(
            "expected a nonconstant polynomial, got {}",
            f.format("x")
        ))),
        Some(_) if !f.is_monic() => Err(Error::InvalidModulus(format!(
            "expected a monic polynomial, got {}",
            f.format("x")
        ))),
        Some(_) => Ok(()),
    }
}

/// x^(p^d) reduced mod f, computed by d successive p-th powerings.
pub fn frobenius_power(d: u32, f: &FpPoly) -> Result<FpPoly> {
    check_factor_input(f)?;
    let p = f.modulus().clone();
    let mut h = FpPoly::x(p.clone()).rem(f)?;
    for _ in 0..d {
        h = h.pow_mod(&p, f)?;
    }
    Ok(h)
}

/// Distinct-degree factorization of a monic squarefree polynomial: the list
/// of (degree d, product of all irreducible factors of degree d).
fn distinct_degree_parts(f: &FpPoly) -> Result<Vec<(usize, FpPoly)>> {
    let p = f.modulus().clone();
    let x = FpPoly::x(p.clone());
    let mut remaining = f.clone();
    let mut h = x.rem(&remaining)?;
    let mut out: Vec<(usize, FpPoly)> = Vec::new();
    let mut d = 0usize;
    while remaining.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&p, &remaining)?;
        let g = poly_gcd(&remaining, &h.sub(&x)?)?;
        if g.degree().unwrap_or(0) > 0 {
            remaining = remaining.div_exact(&g).monic();
            h = h.rem(&remaining)?;
            out.push((d, g));
        }
    }
    if remaining.degree().unwrap_or(0) > 0 {
        out.push((remaining.degree().unwrap(), remaining));
    }
    out.sort_by_key(|(d, _)| *d);
    Ok(out)
}

/// Distinct-degree analysis: for each degree d, the number of monic
/// irreducible factors of f of degree d. Requires f monic and squarefree.
pub fn splitting_degrees(f: &FpPoly) -> Result<Vec<(usize, usize)>> {
    check_factor_input(f)?;
    let fp = f.derivative();
    if poly_gcd(f, &fp)?.degree() != Some(0) {
        return Err(Error::NotSquarefree(f.modulus().to_string()));
    }
    Ok(distinct_degree_parts(f)?
        .into_iter()
        .map(|(d, g)| (d, g.degree().unwrap() / d))
        .collect())
}

/// Squarefree decomposition in characteristic p: returns pairwise coprime
/// monic squarefree parts with their multiplicities.
fn squarefree_decomposition(f: &FpPoly) -> Result<Vec<(FpPoly, usize)>> {
    let one = FpPoly::one(f.modulus().clone());
    let mut out = Vec::new();
    let deriv = f.derivative();
    let mut c = poly_gcd(f, &deriv)?;
    let mut w = f.div_exact(&c).monic();
    let mut i = 1usize;
    while w != one {
        let y = poly_gcd(&w, &c)?;
        let fac = w.div_exact(&y).monic();
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i));
        }
        c = c.div_exact(&y).monic();
        w = y;
        i += 1;
    }
    if c != one {
        // c = v(x)^p with v recoverable by deflating exponents (coefficients
        // of F_p are fixed by Frobenius)
        let p_usize: usize = c
            .modulus()
            .try_into()
            .expect("p-th power residue only arises for small p");
        let mut v_coeffs = Vec::new();
        for (j, coef) in c.coeffs().iter().enumerate() {
            if j % p_usize == 0 {
                v_coeffs.push(coef.clone());
            } else {
                debug_assert!(coef.is_zero());
            }
        }
        let v = FpPoly::from_reduced(c.modulus().clone(), v_coeffs);
        for (g, m) in squarefree_decomposition(&v)? {
            out.push((g, m * p_usize));
        }
    }
    Ok(out)
}

/// Split a product of `count` distinct monic irreducibles of degree d using
/// randomized equal-degree splitting.
fn equal_degree_split(
    f: &FpPoly,
    d: usize,
    count: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<FpPoly>,
) -> Result<()> {
    if count == 1 {
        out.push(f.clone());
        return Ok(());
    }
    let p = f.modulus().clone();
    let n = f.degree().unwrap();
    loop {
        // random nonconstant polynomial of degree < n
        let coeffs: Vec<BigUint> = (0..n)
            .map(|_| {
                let r: u64 = rng.gen();
                BigUint::from(r) % &p
            })
            .collect();
        let a = FpPoly::from_reduced(p.clone(), coeffs);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g0 = poly_gcd(f, &a)?;
        let g = if g0.degree().unwrap_or(0) > 0 && g0.degree().unwrap() < n {
            g0
        } else if p == BigUint::from(2u8) {
            // trace map over F_2: a + a^2 + a^4 + ... + a^(2^(d-1))
            let mut t = a.clone().rem(f)?;
            let mut term = a.clone().rem(f)?;
            for _ in 1..d {
                term = term.mul(&term)?.rem(f)?;
                t = t.add(&term)?;
            }
            poly_gcd(f, &t)?
        } else {
            // a^((p^d - 1)/2) - 1
            let e = (p.pow(d as u32) - BigUint::one()) >> 1;
            let t = a.pow_mod(&e, f)?;
            let t1 = t.sub(&FpPoly::one(p.clone()))?;
            poly_gcd(f, &t1)?
        };
        let dg = g.degree().unwrap_or(0);
        if dg == 0 || dg == n {
            continue;
        }
        let h = f.div_exact(&g).monic();
        equal_degree_split(&g, d, dg / d, rng, out)?;
        equal_degree_split(&h, d, (n - dg) / d, rng, out)?;
        return Ok(());
    }
}

/// Complete factorization of a monic polynomial into monic irreducibles with
/// multiplicities, using the configured default seed. The canonical output
/// order (ascending degree, then balanced-coefficient order) does not depend
/// on the seed.
pub fn full_factor(f: &FpPoly) -> Result<Vec<(FpPoly, usize)>> {
    full_factor_seeded(f, default_factor_seed())
}

pub fn full_factor_seeded(f: &FpPoly, seed: u64) -> Result<Vec<(FpPoly, usize)>> {
    check_factor_input(f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(FpPoly, usize)> = Vec::new();
    for (part, mult) in squarefree_decomposition(f)? {
        for (d, stage) in distinct_degree_parts(&part)? {
            let count = stage.degree().unwrap() / d;
            let mut factors = Vec::new();
            equal_degree_split(&stage, d, count, &mut rng, &mut factors)?;
            for g in factors {
                out.push((g, mult));
            }
        }
    }
    out.sort_by_key(|(g, _)| balanced_sort_key(g));
    Ok(out)
}

/// Canonical factor ordering: ascending degree, then lexicographic on the
/// coefficient vector in balanced representatives (so x - 3 sorts before
/// x + 3).
fn balanced_sort_key(g: &FpPoly) -> (usize, Vec<BigInt>) {
    let p = BigInt::from(g.modulus().clone());
    let key = g
        .coeffs()
        .iter()
        .map(|c| {
            let c = BigInt::from(c.clone());
            if &c * 2 > p {
                c - &p
            } else {
                c
            }
        })
        .collect();
    (g.degree().unwrap_or(0), key)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, coeffs: &[i64]) -> FpPoly {
        FpPoly::from_u64(p, coeffs).unwrap()
    }

    #[test]
    fn primality() {
        assert!(is_prime(&BigUint::from(2u8)));
        assert!(is_prime(&BigUint::from(97u8)));
        assert!(!is_prime(&BigUint::from(1u8)));
        assert!(!is_prime(&BigUint::from(91u8))); // 7*13
        assert!(is_prime(&BigUint::from(2147483647u64))); // 2^31 - 1
        assert!(is_prime(
            &"170141183460469231731687303715884105727"
                .parse::<BigUint>()
                .unwrap()
        )); // 2^127 - 1
        assert!(!is_prime(
            &"170141183460469231731687303715884105725"
                .parse::<BigUint>()
                .unwrap()
        ));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(matches!(
            FpPoly::from_u64(15, &[1, 1]),
            Err(Error::NotPrime(_))
        ));
    }

    #[test]
    fn gcd_with_self_is_monic_self() {
        let f = fp(3, &[-2, 0, 1]); // x^2 - 2 over F_3 = x^2 + 1
        let g = poly_gcd(&f, &f).unwrap();
        assert_eq!(g, fp(3, &[1, 0, 1]));
    }

    #[test]
    fn gcd_with_zero() {
        let f = fp(7, &[-2, 0, 1]);
        let z = FpPoly::zero(BigUint::from(7u8));
        assert_eq!(poly_gcd(&f, &z).unwrap(), fp(7, &[5, 0, 1]));
    }

    #[test]
    fn gcd_of_divisor() {
        // gcd(x^2 - 1, x - 1) over F_5 = x + 4
        let a = fp(5, &[-1, 0, 1]);
        let b = fp(5, &[-1, 1]);
        assert_eq!(poly_gcd(&a, &b).unwrap(), fp(5, &[4, 1]));
    }

    #[test]
    fn gcd_modulus_mismatch() {
        let a = fp(5, &[1, 1]);
        let b = fp(7, &[1, 1]);
        assert!(matches!(poly_gcd(&a, &b), Err(Error::DistinctField(_, _))));
    }

    #[test]
    fn frobenius_powers_mod_quadratic() {
        let f = fp(3, &[-2, 0, 1]); // x^2 - 2, irreducible over F_3
        assert_eq!(frobenius_power(0, &f).unwrap(), fp(3, &[0, 1]));
        assert_eq!(frobenius_power(1, &f).unwrap(), fp(3, &[0, 2]));
        assert_eq!(frobenius_power(2, &f).unwrap(), fp(3, &[0, 1]));
    }

    #[test]
    fn frobenius_rejects_bad_modulus() {
        let c = fp(3, &[2]);
        assert!(matches!(
            frobenius_power(1, &c),
            Err(Error::InvalidModulus(_))
        ));
        let nonmonic = fp(3, &[1, 2]);
        assert!(matches!(
            frobenius_power(1, &nonmonic),
            Err(Error::InvalidModulus(_))
        ));
    }

    #[test]
    fn frobenius_composition_agrees_with_direct() {
        for p in [2u64, 3, 5, 13] {
            let f = fp(p, &[1, 1, 0, 0, 1]); // x^4 + x + 1
            let mut h = frobenius_power(1, &f).unwrap();
            for d in 2..=4u32 {
                h = h.pow_mod(&BigUint::from(p), &f).unwrap();
                assert_eq!(h, frobenius_power(d, &f).unwrap(), "p={p} d={d}");
            }
        }
    }

    #[test]
    fn splitting_degrees_examples() {
        assert_eq!(
            splitting_degrees(&fp(3, &[-2, 0, 1])).unwrap(),
            vec![(2, 1)]
        );
        assert_eq!(
            splitting_degrees(&fp(7, &[-2, 0, 1])).unwrap(),
            vec![(1, 2)]
        );
        assert_eq!(splitting_degrees(&fp(5, &[-1, 1])).unwrap(), vec![(1, 1)]);
    }

    #[test]
    fn splitting_degrees_rejects_non_squarefree() {
        let f = fp(5, &[0, 0, 1]); // x^2
        assert!(matches!(
            splitting_degrees(&f),
            Err(Error::NotSquarefree(_))
        ));
    }

    #[test]
    fn full_factor_examples() {
        let f = fp(2, &[0, 0, 1]); // x^2 mod 2
        assert_eq!(full_factor(&f).unwrap(), vec![(fp(2, &[0, 1]), 2)]);

        let f = fp(7, &[-2, 0, 1]); // (x-3)(x+3) mod 7
        assert_eq!(
            full_factor(&f).unwrap(),
            vec![(fp(7, &[4, 1]), 1), (fp(7, &[3, 1]), 1)]
        );

        let f = fp(3, &[1, 0, 1]); // irreducible
        assert_eq!(full_factor(&f).unwrap(), vec![(fp(3, &[1, 0, 1]), 1)]);
    }

    #[test]
    fn full_factor_mixed_multiplicities() {
        // (x+1)^2 (x^2+1) over F_3
        let sq = fp(3, &[1, 2, 1]);
        let f = sq.mul(&fp(3, &[1, 0, 1])).unwrap();
        assert_eq!(
            full_factor(&f).unwrap(),
            vec![(fp(3, &[1, 1]), 2), (fp(3, &[1, 0, 1]), 1)]
        );
    }

    #[test]
    fn full_factor_p_th_power() {
        // (x^2 + 1)^3 over F_3 has derivative 0
        let g = fp(3, &[1, 0, 1]);
        let f = g.mul(&g).unwrap().mul(&g).unwrap();
        assert_eq!(full_factor(&f).unwrap(), vec![(fp(3, &[1, 0, 1]), 3)]);
    }

    #[test]
    fn factor_order_is_seed_independent() {
        // x^4 - 1 splits into 4 linears over F_5
        let f = fp(5, &[-1, 0, 0, 0, 1]);
        let a = full_factor_seeded(&f, 1).unwrap();
        let b = full_factor_seeded(&f, 999).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 4);
    }
}
