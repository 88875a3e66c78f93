//! Cross-checks the finite-field factorization against an independent
//! brute-force oracle (trial division over small fields) and property tests
//! over random inputs.

use basechange::finitefield::{full_factor, poly_gcd, splitting_degrees, FpPoly};
use num_bigint::BigUint;
use proptest::prelude::*;

// --- minimal independent polynomial arithmetic over F_p, i64 coefficients ---

type Poly = Vec<i64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mul(a: &Poly, b: &Poly, p: i64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Division of monic-by-monic polynomials; returns None unless the division
/// is exact.
fn div_exact(a: &Poly, b: &Poly, p: i64) -> Option<Poly> {
    let mut rem = a.clone();
    let mut quo = vec![0i64; a.len().saturating_sub(b.len()) + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = *rem.last().unwrap() % p;
        quo[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            rem[shift + i] = ((rem[shift + i] - c * bc) % p + p * p) % p;
        }
        rem = trim(rem);
    }
    if rem.is_empty() {
        Some(trim(quo))
    } else {
        None
    }
}

/// All monic polynomials of the given degree over F_p, ascending
/// coefficients.
fn monics(p: i64, degree: usize) -> Vec<Poly> {
    let mut out = vec![vec![]];
    for _ in 0..degree {
        let mut next = Vec::new();
        for tail in &out {
            for c in 0..p {
                let mut poly = vec![c];
                poly.extend_from_slice(tail);
                next.push(poly);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|mut lower| {
            lower.push(1);
            lower
        })
        .collect()
}

/// All monic irreducibles over F_p up to the given degree, by trial
/// division.
fn irreducibles_up_to(p: i64, max_deg: usize) -> Vec<Poly> {
    let mut irreducibles: Vec<Poly> = Vec::new();
    for d in 1..=max_deg {
        'cand: for cand in monics(p, d) {
            for q in &irreducibles {
                if q.len() - 1 <= d / 2 && div_exact(&cand, q, p).is_some() {
                    continue 'cand;
                }
            }
            irreducibles.push(cand);
        }
    }
    irreducibles
}

/// Factor a monic polynomial by trial division against ascending-degree
/// irreducibles.
fn brute_factor(f: &Poly, p: i64, irreducibles: &[Poly]) -> Vec<(Poly, usize)> {
    let mut rest = f.clone();
    let mut out: Vec<(Poly, usize)> = Vec::new();
    for q in irreducibles {
        let mut mult = 0;
        while rest.len() >= q.len() {
            match div_exact(&rest, q, p) {
                Some(quo) => {
                    rest = quo;
                    mult += 1;
                }
                None => break,
            }
        }
        if mult > 0 {
            out.push((q.clone(), mult));
        }
        if rest.len() == 1 {
            break;
        }
    }
    assert_eq!(rest, vec![1], "brute factorization incomplete");
    out
}

fn to_fp(p: i64, coeffs: &[i64]) -> FpPoly {
    FpPoly::from_u64(p as u64, coeffs).unwrap()
}

fn factor_multiset(factors: &[(FpPoly, usize)]) -> Vec<(Vec<u64>, usize)> {
    let mut out: Vec<(Vec<u64>, usize)> = factors
        .iter()
        .map(|(g, m)| {
            (
                g.coeffs()
                    .iter()
                    .map(|c| u64::try_from(c).unwrap())
                    .collect(),
                *m,
            )
        })
        .collect();
    out.sort();
    out
}

#[test]
fn brute_force_oracle_exhaustive_small_fields() {
    // every monic polynomial of degree <= 3 over F_2 and F_3, and degree <= 2
    // over F_5: compare complete factorizations against trial division
    for (p, max_deg) in [(2i64, 3usize), (3, 3), (5, 2)] {
        let table = irreducibles_up_to(p, max_deg);
        for deg in 1..=max_deg {
            for f in monics(p, deg) {
                let expected: Vec<(Vec<u64>, usize)> = {
                    let mut v: Vec<(Vec<u64>, usize)> = brute_factor(&f, p, &table)
                        .iter()
                        .map(|(g, m)| (g.iter().map(|&c| c as u64).collect(), *m))
                        .collect();
                    v.sort();
                    v
                };
                let got = factor_multiset(&full_factor(&to_fp(p, &f)).unwrap());
                assert_eq!(got, expected, "p={p} f={f:?}");
            }
        }
    }
}

#[test]
fn brute_force_oracle_sampled_larger_inputs() {
    // degree-4 polynomials over F_7, F_11, F_13 on a deterministic sample
    for p in [7i64, 11, 13] {
        let table = irreducibles_up_to(p, 4);
        for seed in 0..120i64 {
            let f: Poly = vec![
                (seed * 7 + 1) % p,
                (seed * 5 + 2) % p,
                (seed * 3) % p,
                (seed * 11 + 4) % p,
                1,
            ];
            let expected: Vec<(Vec<u64>, usize)> = {
                let mut v: Vec<(Vec<u64>, usize)> = brute_factor(&f, p, &table)
                    .iter()
                    .map(|(g, m)| (g.iter().map(|&c| c as u64).collect(), *m))
                    .collect();
                v.sort();
                v
            };
            let got = factor_multiset(&full_factor(&to_fp(p, &f)).unwrap());
            assert_eq!(got, expected, "p={p} f={f:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn factorization_reassembles_and_factors_are_irreducible(
        p_idx in 0usize..8,
        coeffs in proptest::collection::vec(0u64..97, 1..=8),
    ) {
        let p = [2u64, 3, 5, 7, 13, 31, 61, 97][p_idx];
        let mut cs: Vec<i64> = coeffs.iter().map(|&c| (c % p) as i64).collect();
        cs.push(1); // monic
        let f = FpPoly::from_u64(p, &cs).unwrap();
        let factors = full_factor(&f).unwrap();

        // product of the factors with multiplicity reassembles f
        let mut product = FpPoly::one(BigUint::from(p));
        for (g, m) in &factors {
            for _ in 0..*m {
                product = product.mul(g).unwrap();
            }
        }
        prop_assert_eq!(product, f.clone());

        // each factor is irreducible: its distinct-degree analysis is a
        // single stage of full degree and count one
        for (g, _) in &factors {
            let d = g.degree().unwrap();
            prop_assert_eq!(splitting_degrees(g).unwrap(), vec![(d, 1)]);
        }

        // splitting degrees of the squarefree part account for every degree
        let mut squarefree = FpPoly::one(BigUint::from(p));
        for (g, _) in &factors {
            squarefree = squarefree.mul(g).unwrap();
        }
        let stages = splitting_degrees(&squarefree).unwrap();
        let total: usize = stages.iter().map(|(d, c)| d * c).sum();
        prop_assert_eq!(total, squarefree.degree().unwrap());
    }

    #[test]
    fn gcd_divides_both_operands(
        a in proptest::collection::vec(0i64..13, 1..=6),
        b in proptest::collection::vec(0i64..13, 1..=6),
    ) {
        let fa = FpPoly::from_u64(13, &a).unwrap();
        let fb = FpPoly::from_u64(13, &b).unwrap();
        let g = poly_gcd(&fa, &fb).unwrap();
        if !g.is_zero() {
            if !fa.is_zero() {
                prop_assert!(fa.divrem(&g).unwrap().1.is_zero());
            }
            if !fb.is_zero() {
                prop_assert!(fb.divrem(&g).unwrap().1.is_zero());
            }
        }
    }
}
