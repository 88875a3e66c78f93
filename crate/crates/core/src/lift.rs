//! Hecke eigenvalues of base-change lifts: the residual-degree eigenvalue
//! formula, eigensystem enumeration over good primes, and candidate matching
//! against ingested Hilbert newform tables.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::characters::CyclotomicElement;
use crate::error::{Error, Result};
use crate::newform::{AlgebraicNumber, CoefficientField, NewformSpec};
use crate::numberfield::{NumberFieldSpec, PrimeSplit};

/// The Hecke eigenvalue of the lift at every prime of a decomposition class,
/// together with the lifted nebentypus value at those primes.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftedEigenvalue {
    pub split: PrimeSplit,
    pub value: AlgebraicNumber,
    pub norm: BigUint,
    pub nebentypus_value: CyclotomicElement,
}

#[derive(Debug, Clone, Copy)]
pub struct LiftPolicy {
    /// Accept classes with ramification index e > 1 (still requires p
    /// coprime to the level). The eigenvalue formula only consumes the
    /// residual degree.
    pub accept_ramified: bool,
    /// Accept primes dividing the level, evaluating the same formula with
    /// chi(p) = 0; the prime-power coefficients degenerate to a(p)^n there.
    pub accept_level_primes: bool,
}

impl Default for LiftPolicy {
    fn default() -> Self {
        LiftPolicy {
            accept_ramified: true,
            accept_level_primes: false,
        }
    }
}

/// C(p-class) = a(p) when r = 1, a(p^r) - chi(p) p^(k-1) a(p^(r-2))
/// otherwise. Rejects level primes.
pub fn lift_eigenvalue(f: &NewformSpec, split: &PrimeSplit) -> Result<LiftedEigenvalue> {
    lift_eigenvalue_with(f, split, LiftPolicy::default())
}

pub fn lift_eigenvalue_with(
    f: &NewformSpec,
    split: &PrimeSplit,
    policy: LiftPolicy,
) -> Result<LiftedEigenvalue> {
    let p = split.p;
    if f.level() % p == 0 && !policy.accept_level_primes {
        return Err(Error::LevelPrime {
            p,
            level: f.level(),
        });
    }
    if split.e > 1 && !policy.accept_ramified {
        return Err(Error::RamifiedOrIndex { p });
    }
    let r = split.f;
    let value = if r == 1 {
        f.ap(p)?
    } else {
        let head = f.coefficient_at_prime_power(p, r)?;
        let tail = f.coefficient_at_prime_power(p, r - 2)?;
        head.sub(&f.frobenius_det(p)?.mul(&tail))
    };
    // psi(class) = chi(p^r) = chi(N(p-class))
    let m = f.nebentypus().modulus().max(1);
    let norm_mod_m = mod_pow(p % m, r as u64, m);
    let nebentypus_value = f.nebentypus().evaluate(norm_mod_m);
    Ok(LiftedEigenvalue {
        split: *split,
        value,
        norm: split.norm(),
        nebentypus_value,
    })
}

fn mod_pow(mut base: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

#[derive(Debug, Clone, Copy)]
pub struct EigensystemOptions {
    pub norm_bound: u64,
    /// Keep classes above primes dividing the level (the discriminant filter
    /// alone, as in the worked examples); when false the level primes are
    /// excluded along with the discriminant primes.
    pub include_level_primes: bool,
    /// Restrict to inert classes (f = degree).
    pub inert_only: bool,
}

impl EigensystemOptions {
    pub fn new(norm_bound: u64) -> Self {
        EigensystemOptions {
            norm_bound,
            include_level_primes: true,
            inert_only: false,
        }
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Lift eigenvalues over every prime class of norm at most the bound,
/// excluding discriminant primes, sorted by norm then p.
pub fn lift_eigensystem(
    f: &NewformSpec,
    field: &NumberFieldSpec,
    options: EigensystemOptions,
) -> Result<Vec<LiftedEigenvalue>> {
    let exclusions = if options.include_level_primes {
        Vec::new()
    } else {
        prime_factors(f.level())
    };
    let splits = field.prime_ideals_up_to(options.norm_bound, &exclusions)?;
    let policy = LiftPolicy {
        accept_ramified: true,
        accept_level_primes: options.include_level_primes,
    };
    let mut out = Vec::new();
    for split in splits {
        if options.inert_only && split.f != field.degree() {
            continue;
        }
        out.push(lift_eigenvalue_with(f, &split, policy)?);
    }
    Ok(out)
}

/// A Hilbert newform ingested as data: eigenvalues keyed by the (p, r)
/// decomposition class (one value per class; base-change candidates carry
/// the same eigenvalue at each of the g primes of a class).
#[derive(Debug, Clone)]
pub struct HilbertCandidate {
    pub label: String,
    pub field_label: String,
    pub level_norm: u64,
    pub weight: u32,
    pub hecke_field: CoefficientField,
    pub eigenvalues: BTreeMap<(u64, u32), AlgebraicNumber>,
}

impl HilbertCandidate {
    pub fn eigenvalue(&self, p: u64, r: u32) -> Option<&AlgebraicNumber> {
        self.eigenvalues.get(&(p, r))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub norm_bound: u64,
    pub first_match_only: bool,
}

/// Result of a candidate search: the surviving candidates sorted by label,
/// with warnings about skipped comparisons and incompatible candidates.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub matches: Vec<HilbertCandidate>,
    pub multiple: bool,
    /// (candidate label, p, r) triples where the candidate table had no
    /// entry and the comparison was skipped.
    pub skipped: Vec<(String, u64, u32)>,
    /// Candidates that could not be compared at all (no usable embedding of
    /// the coefficient field into their Hecke field).
    pub incompatible: Vec<String>,
}

/// Map sigma(C) into the candidate's Hecke field. Rational values embed into
/// any field; beyond that only an identical field presentation is accepted
/// (sufficient for rational and shared-field candidate tables; anything else
/// would need root finding inside the Hecke field).
fn embed_value(value: &AlgebraicNumber, target: &CoefficientField) -> Option<AlgebraicNumber> {
    value.coerce_into(target).ok()
}

fn apply_generator_image(x: &AlgebraicNumber, image: &AlgebraicNumber) -> AlgebraicNumber {
    let field = x.field().clone();
    let mut acc = field.zero();
    let mut power = field.one();
    for c in x.coords() {
        acc = acc.add(&power.mul_rational(c));
        power = power.mul(image);
    }
    acc
}

/// Match candidates against the computed lift eigensystem over the good
/// primes (norm bounded, coprime to level and discriminant), up to an
/// automorphism of the coefficient field per class.
pub fn lift_search(
    f: &NewformSpec,
    field: &NumberFieldSpec,
    candidates: &[HilbertCandidate],
    options: SearchOptions,
) -> Result<SearchOutcome> {
    for cand in candidates {
        if cand.weight != f.weight() {
            return Err(Error::WeightMismatch {
                label: cand.label.clone(),
                got: cand.weight,
                want: f.weight(),
            });
        }
    }
    let splits = field.prime_ideals_up_to(options.norm_bound, &prime_factors(f.level()))?;
    let lifted: Vec<LiftedEigenvalue> = splits
        .iter()
        .map(|s| lift_eigenvalue(f, s))
        .collect::<Result<_>>()?;
    // orbit of C under the coefficient-field automorphisms
    let autos = f.field().automorphism_generator_images()?;
    let orbits: Vec<Vec<AlgebraicNumber>> = lifted
        .iter()
        .map(|le| {
            let mut orbit = vec![le.value.clone()];
            for image in &autos {
                let conj = apply_generator_image(&le.value, image);
                if !orbit.contains(&conj) {
                    orbit.push(conj);
                }
            }
            orbit
        })
        .collect();

    let mut sorted: Vec<&HilbertCandidate> = candidates.iter().collect();
    sorted.sort_by(|a, b| a.label.cmp(&b.label));

    let mut outcome = SearchOutcome {
        matches: Vec::new(),
        multiple: false,
        skipped: Vec::new(),
        incompatible: Vec::new(),
    };
    'candidates: for cand in sorted {
        let mut compared = false;
        for (le, orbit) in lifted.iter().zip(&orbits) {
            let key = (le.split.p, le.split.f);
            let Some(actual) = cand.eigenvalue(key.0, key.1) else {
                outcome.skipped.push((cand.label.clone(), key.0, key.1));
                continue;
            };
            let mut embedded = Vec::new();
            for v in orbit {
                if let Some(e) = embed_value(v, &cand.hecke_field) {
                    embedded.push(e);
                }
            }
            if embedded.is_empty() {
                outcome.incompatible.push(cand.label.clone());
                continue 'candidates;
            }
            compared = true;
            if !embedded.contains(actual) {
                continue 'candidates;
            }
        }
        if compared || lifted.is_empty() {
            outcome.matches.push(cand.clone());
            if options.first_match_only {
                break;
            }
        }
    }
    outcome.multiple = outcome.matches.len() > 1;
    Ok(outcome)
}

/// Norms of the ideal divisors of N * O_F, from the splitting data of each
/// prime dividing N: a prime with data (e, f, g) and multiplicity v in N
/// contributes the local norms p^(f*s) for 0 <= s <= e*g*v.
pub fn candidate_level_norms(level: u64, field: &NumberFieldSpec) -> Result<Vec<u64>> {
    let mut norms: Vec<u64> = vec![1];
    let mut n = level;
    let mut p = 2u64;
    let push_prime = |p: u64, v: u32, norms: &mut Vec<u64>| -> Result<()> {
        let split = field.decompose_any(p)?;
        let max_s = split.e * split.g * v;
        let mut locals = Vec::new();
        for s in 0..=max_s {
            let mut acc: u64 = 1;
            for _ in 0..(split.f * s) {
                acc = acc
                    .checked_mul(p)
                    .ok_or_else(|| Error::InvalidInput("level norm overflow".into()))?;
            }
            locals.push(acc);
        }
        let mut next = Vec::with_capacity(norms.len() * locals.len());
        for &a in norms.iter() {
            for &b in &locals {
                next.push(
                    a.checked_mul(b)
                        .ok_or_else(|| Error::InvalidInput("level norm overflow".into()))?,
                );
            }
        }
        *norms = next;
        Ok(())
    };
    while p * p <= n {
        if n % p == 0 {
            let mut v = 0u32;
            while n % p == 0 {
                n /= p;
                v += 1;
            }
            push_prime(p, v, &mut norms)?;
        }
        p += 1;
    }
    if n > 1 {
        push_prime(n, 1, &mut norms)?;
    }
    norms.sort_unstable();
    norms.dedup();
    Ok(norms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::DirichletCharacterSpec;
    use crate::numberfield::AbelianData;
    use num_bigint::BigInt;
    use std::collections::BTreeMap;

    fn rational_form(label: &str, level: u64, weight: u32, ap: &[(u64, i64)]) -> NewformSpec {
        let field = CoefficientField::rationals();
        let table: BTreeMap<u64, AlgebraicNumber> = ap
            .iter()
            .map(|&(p, a)| (p, field.from_integer(a)))
            .collect();
        NewformSpec::new(
            label,
            level,
            weight,
            DirichletCharacterSpec::trivial(level),
            field,
            table,
            ap.iter().map(|&(p, _)| p).max().unwrap_or(0),
        )
        .unwrap()
    }

    fn f11() -> NewformSpec {
        rational_form(
            "11.2.a.a",
            11,
            2,
            &[
                (2, -2),
                (3, -1),
                (5, 1),
                (7, -2),
                (11, 1),
                (13, 4),
                (17, -2),
                (23, -1),
            ],
        )
    }

    fn f147() -> NewformSpec {
        rational_form(
            "147.2.a.c",
            147,
            2,
            &[
                (2, 2),
                (3, 1),
                (5, -2),
                (11, -2),
                (13, 1),
                (29, 4),
                (41, -10),
                (43, 5),
            ],
        )
    }

    fn qsqrt2() -> NumberFieldSpec {
        NumberFieldSpec::new(
            "Qsqrt2",
            vec![BigInt::from(-2), BigInt::from(0), BigInt::from(1)],
            Some(AbelianData {
                conductor: 8,
                subgroup: vec![1, 7],
            }),
        )
        .unwrap()
    }

    fn qzeta7plus() -> NumberFieldSpec {
        NumberFieldSpec::new(
            "Qzeta7plus",
            vec![
                BigInt::from(-1),
                BigInt::from(-2),
                BigInt::from(1),
                BigInt::from(1),
            ],
            Some(AbelianData {
                conductor: 7,
                subgroup: vec![1, 6],
            }),
        )
        .unwrap()
    }

    fn qzeta11plus() -> NumberFieldSpec {
        NumberFieldSpec::new(
            "Qzeta11plus",
            vec![
                BigInt::from(1),
                BigInt::from(3),
                BigInt::from(-3),
                BigInt::from(-4),
                BigInt::from(1),
                BigInt::from(1),
            ],
            Some(AbelianData {
                conductor: 11,
                subgroup: vec![1, 10],
            }),
        )
        .unwrap()
    }

    #[test]
    fn worked_example_eigenvalues() {
        let f = f11();
        let s = qsqrt2().decompose_prime(3).unwrap();
        let c = lift_eigenvalue(&f, &s).unwrap();
        assert_eq!(c.value, f.field().from_integer(-5));
        assert_eq!(c.norm, BigUint::from(9u8));

        let s = qzeta7plus().decompose_prime(2).unwrap();
        let c = lift_eigenvalue(&f147(), &s).unwrap();
        assert_eq!(c.value, f.field().from_integer(-4));

        let s = qzeta11plus().decompose_prime(2).unwrap();
        assert_eq!(s.f, 5);
        let c = lift_eigenvalue(&f, &s).unwrap();
        assert_eq!(c.value, f.field().from_integer(8));
    }

    #[test]
    fn level_prime_policy() {
        let f = f11();
        let split = PrimeSplit {
            p: 11,
            e: 1,
            f: 2,
            g: 1,
        };
        assert!(matches!(
            lift_eigenvalue(&f, &split),
            Err(Error::LevelPrime { p: 11, .. })
        ));
        let c = lift_eigenvalue_with(
            &f,
            &split,
            LiftPolicy {
                accept_ramified: true,
                accept_level_primes: true,
            },
        )
        .unwrap();
        // chi(11) = 0 so C = a(11)^2 = 1
        assert_eq!(c.value, f.field().from_integer(1));
    }

    #[test]
    fn degree_one_class_returns_ap() {
        let f = f11();
        let s = qsqrt2().decompose_prime(7).unwrap();
        assert_eq!(s.f, 1);
        let c = lift_eigenvalue(&f, &s).unwrap();
        assert_eq!(c.value, f.ap(7).unwrap());
    }

    #[test]
    fn lift_equals_trace_formula() {
        let f = f11();
        for field in [qsqrt2(), qzeta7plus(), qzeta11plus()] {
            for p in [2u64, 3, 5, 7, 13] {
                if field.poly_discriminant() % BigInt::from(p) == BigInt::from(0) || p == 11 {
                    continue;
                }
                let s = field.decompose_prime(p).unwrap();
                let c = lift_eigenvalue(&f, &s).unwrap();
                assert_eq!(
                    c.value,
                    f.trace_frobenius_power(p, s.f).unwrap(),
                    "field {} p {}",
                    field.label(),
                    p
                );
            }
        }
    }

    #[test]
    fn eigensystem_example_two() {
        let rows = lift_eigensystem(&f147(), &qzeta7plus(), EigensystemOptions::new(50)).unwrap();
        let pairs: Vec<(String, String)> = rows
            .iter()
            .map(|r| (r.norm.to_string(), r.value.to_string()))
            .collect();
        let expected = [
            ("8", "-4"),
            ("13", "1"),
            ("27", "1"),
            ("29", "4"),
            ("41", "-10"),
            ("43", "5"),
        ];
        assert_eq!(
            pairs,
            expected
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn eigensystem_example_one_inert() {
        let mut opts = EigensystemOptions::new(25);
        opts.inert_only = true;
        let rows = lift_eigensystem(&f11(), &qsqrt2(), opts).unwrap();
        let pairs: Vec<(String, String)> = rows
            .iter()
            .map(|r| (r.norm.to_string(), r.value.to_string()))
            .collect();
        assert_eq!(
            pairs,
            vec![
                ("9".to_string(), "-5".to_string()),
                ("25".to_string(), "-9".to_string())
            ]
        );
    }

    #[test]
    fn empty_bound_gives_empty_system() {
        let rows = lift_eigensystem(&f11(), &qsqrt2(), EigensystemOptions::new(1)).unwrap();
        assert!(rows.is_empty());
    }

    #[test]
    fn level_norm_divisors() {
        assert_eq!(candidate_level_norms(11, &qsqrt2()).unwrap(), vec![1, 121]);
        let norms = candidate_level_norms(147, &qzeta7plus()).unwrap();
        assert!(norms.contains(&27));
        assert!(norms.contains(&1));
        // 3 inert (f=3), 7 totally ramified (e=3, f=1) with multiplicity 2:
        // local norms {1, 27} x {1, 7, ..., 7^6}
        assert_eq!(norms.len(), 14);
        assert_eq!(candidate_level_norms(1, &qzeta11plus()).unwrap(), vec![1]);
    }

    fn candidate(label: &str, weight: u32, eigs: &[(u64, u32, i64)]) -> HilbertCandidate {
        let field = CoefficientField::rationals();
        HilbertCandidate {
            label: label.into(),
            field_label: "test".into(),
            level_norm: 121,
            weight,
            hecke_field: field.clone(),
            eigenvalues: eigs
                .iter()
                .map(|&(p, r, v)| ((p, r), field.from_integer(v)))
                .collect(),
        }
    }

    #[test]
    fn search_finds_unique_match() {
        let f = f11();
        let field = qsqrt2();
        let good = candidate(
            "2.2.8.1-121.1-a",
            2,
            &[(3, 2, -5), (5, 2, -9), (7, 1, -2), (13, 2, -10)],
        );
        let bad = candidate(
            "2.2.8.1-121.1-b",
            2,
            &[(3, 2, 5), (5, 2, -9), (7, 1, -2), (13, 2, -10)],
        );
        let outcome = lift_search(
            &f,
            &field,
            &[bad, good.clone()],
            SearchOptions {
                norm_bound: 25,
                first_match_only: false,
            },
        )
        .unwrap();
        assert_eq!(outcome.matches.len(), 1);
        assert!(!outcome.multiple);
        assert_eq!(outcome.matches[0].label, good.label);
    }

    #[test]
    fn search_reports_multiplicity() {
        let f = f11();
        let field = qsqrt2();
        // bound 9 tests only the norm-7 and norm-9 classes
        let a = candidate("x-a", 2, &[(3, 2, -5), (7, 1, -2)]);
        let b = candidate("x-b", 2, &[(3, 2, -5), (7, 1, -2)]);
        let outcome = lift_search(
            &f,
            &field,
            &[a, b],
            SearchOptions {
                norm_bound: 9,
                first_match_only: false,
            },
        )
        .unwrap();
        assert_eq!(outcome.matches.len(), 2);
        assert!(outcome.multiple);

        let first_only = lift_search(
            &f,
            &field,
            &[
                candidate("x-a", 2, &[(3, 2, -5), (7, 1, -2)]),
                candidate("x-b", 2, &[(3, 2, -5), (7, 1, -2)]),
            ],
            SearchOptions {
                norm_bound: 9,
                first_match_only: true,
            },
        )
        .unwrap();
        assert_eq!(first_only.matches.len(), 1);
        assert_eq!(first_only.matches[0].label, "x-a");
    }

    #[test]
    fn search_rejects_weight_mismatch() {
        let f = f11();
        let field = qsqrt2();
        let wrong = candidate("w4", 4, &[(3, 2, -5)]);
        assert!(matches!(
            lift_search(
                &f,
                &field,
                &[wrong],
                SearchOptions {
                    norm_bound: 25,
                    first_match_only: false
                }
            ),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn search_skips_missing_entries_with_warning() {
        let f = f11();
        let field = qsqrt2();
        let sparse = candidate("sparse", 2, &[(3, 2, -5)]);
        let outcome = lift_search(
            &f,
            &field,
            &[sparse],
            SearchOptions {
                norm_bound: 25,
                first_match_only: false,
            },
        )
        .unwrap();
        assert_eq!(outcome.matches.len(), 1);
        assert!(!outcome.skipped.is_empty());
    }
}
