//! Dirichlet characters of (Z/mZ)* with exact root-of-unity values, the
//! character group attached to an abelian field, and the product identity
//! over a quotient character group.

pub mod cyclotomic;

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CyclotomicElement};

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
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

/// Multiplicative order of a mod m; requires gcd(a, m) = 1.
pub fn multiplicative_order(a: u64, m: u64) -> u64 {
    assert!(m >= 1 && a.gcd(&m) == 1);
    if m == 1 {
        return 1;
    }
    let phi = euler_phi(m);
    let mut ord = phi;
    for (p, _) in factorize(phi) {
        while ord % p == 0 && pow_mod(a, ord / p, m) == 1 {
            ord /= p;
        }
    }
    ord
}

fn primitive_root_mod_prime(q: u64) -> u64 {
    let phi = q - 1;
    let fac = factorize(phi);
    'cand: for g in 2..q {
        for (p, _) in &fac {
            if pow_mod(g, phi / p, q) == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("no primitive root mod prime {q}")
}

// CRT: x = r1 mod m1, x = r2 mod m2 with coprime moduli.
fn crt(r1: u64, m1: u64, r2: u64, m2: u64) -> u64 {
    let e = BigInt::from(m1).extended_gcd(&BigInt::from(m2));
    debug_assert!(e.gcd.is_one());
    let m = BigInt::from(m1) * BigInt::from(m2);
    let x = BigInt::from(r1) * e.y * BigInt::from(m2) + BigInt::from(r2) * e.x * BigInt::from(m1);
    let x = ((x % &m) + &m) % &m;
    u64::try_from(x).unwrap()
}

/// Cyclic decomposition of (Z/mZ)*: generators with their orders, lifted by
/// CRT to be 1 in every other prime-power component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroup {
    modulus: u64,
    generators: Vec<u64>,
    orders: Vec<u64>,
}

/// Memoized construction; the table is insert-only and idempotent.
pub fn unit_group_structure(m: u64) -> UnitGroup {
    use std::sync::OnceLock;
    static MEMO: OnceLock<std::sync::Mutex<HashMap<u64, UnitGroup>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| std::sync::Mutex::new(HashMap::new()));
    if let Some(hit) = memo.lock().unwrap().get(&m) {
        return hit.clone();
    }
    let built = build_unit_group(m);
    memo.lock()
        .unwrap()
        .entry(m)
        .or_insert_with(|| built.clone());
    built
}

fn build_unit_group(m: u64) -> UnitGroup {
    assert!(m >= 1);
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    for (q, e) in factorize(m) {
        let pp = q.pow(e);
        let rest = m / pp;
        let mut local: Vec<(u64, u64)> = Vec::new(); // (generator mod pp, order)
        if q == 2 {
            match e {
                1 => {}
                2 => local.push((3, 2)),
                _ => {
                    local.push((pp - 1, 2));
                    local.push((5, 1u64 << (e - 2)));
                }
            }
        } else {
            let mut g = primitive_root_mod_prime(q);
            if e >= 2 && pow_mod(g, q - 1, q * q) == 1 {
                g += q;
            }
            let order = q.pow(e - 1) * (q - 1);
            local.push((g % pp, order));
        }
        for (g, d) in local {
            let lifted = if rest == 1 {
                g % m
            } else {
                crt(g, pp, 1, rest)
            };
            generators.push(lifted);
            orders.push(d);
        }
    }
    UnitGroup {
        modulus: m,
        generators,
        orders,
    }
}

impl UnitGroup {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    /// Exponent vector of a unit with respect to the generators; None when
    /// gcd(a, m) > 1.
    pub fn dlog(&self, a: u64) -> Option<Vec<u64>> {
        let a = a % self.modulus.max(1);
        if self.modulus <= 1 {
            return Some(Vec::new());
        }
        if a.gcd(&self.modulus) != 1 {
            return None;
        }
        // brute-force over exponent vectors component by component: each
        // generator lives in a single prime-power component, so solve there
        let mut exps = vec![0u64; self.generators.len()];
        for (q, e) in factorize(self.modulus) {
            let pp = q.pow(e);
            let target = a % pp;
            // a generator belongs to this component iff it is nontrivial mod pp
            let idx: Vec<usize> = (0..self.generators.len())
                .filter(|&i| self.generators[i] % pp != 1)
                .collect();
            if idx.is_empty() {
                debug_assert!(target == 1 % pp);
                continue;
            }
            let mut found = false;
            let mut counters = vec![0u64; idx.len()];
            'outer: loop {
                let mut v = 1u64;
                for (slot, &i) in idx.iter().enumerate() {
                    v = (v as u128 * pow_mod(self.generators[i], counters[slot], pp) as u128
                        % pp as u128) as u64;
                }
                if v == target {
                    for (slot, &i) in idx.iter().enumerate() {
                        exps[i] = counters[slot];
                    }
                    found = true;
                    break;
                }
                // increment mixed-radix counter
                for (slot, &i) in idx.iter().enumerate() {
                    counters[slot] += 1;
                    if counters[slot] < self.orders[i] {
                        continue 'outer;
                    }
                    counters[slot] = 0;
                }
                break;
            }
            assert!(found, "unit has no discrete log; group structure is broken");
        }
        Some(exps)
    }

    /// All units of (Z/mZ)* in ascending order.
    pub fn units(&self) -> Vec<u64> {
        if self.modulus <= 1 {
            return vec![0];
        }
        (1..self.modulus)
            .filter(|a| a.gcd(&self.modulus) == 1)
            .collect()
    }
}

/// A Dirichlet character mod m, stored as the exponent assigned to each
/// canonical generator: chi(g_i) = zeta_{d_i}^{c_i}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DirichletCharacterSpec {
    modulus: u64,
    exponents: Vec<u64>,
}

impl DirichletCharacterSpec {
    pub fn new(group: &UnitGroup, exponents: Vec<u64>) -> Self {
        assert_eq!(exponents.len(), group.generators().len());
        let exponents = exponents
            .iter()
            .zip(group.orders())
            .map(|(c, d)| c % d)
            .collect();
        DirichletCharacterSpec {
            modulus: group.modulus(),
            exponents,
        }
    }

    pub fn trivial(m: u64) -> Self {
        let group = unit_group_structure(m);
        let n = group.generators().len();
        DirichletCharacterSpec {
            modulus: m,
            exponents: vec![0; n],
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&c| c == 0)
    }

    fn group(&self) -> UnitGroup {
        unit_group_structure(self.modulus)
    }

    /// Multiplicative order of the character.
    pub fn order(&self) -> u64 {
        let group = self.group();
        let mut ord = 1u64;
        for (c, d) in self.exponents.iter().zip(group.orders()) {
            if *c != 0 {
                ord = ord.lcm(&(d / c.gcd(d)));
            }
        }
        ord
    }

    /// chi(a) as a root of unity (order, exponent), or None when
    /// gcd(a, m) > 1 and the value is 0.
    pub fn evaluate_root_of_unity(&self, a: u64) -> Option<(u64, u64)> {
        let group = self.group();
        let exps = group.dlog(a)?;
        Some(self.root_of_unity_from_logs(group.orders(), &exps))
    }

    /// The value at an element given by its exponent vector: the sum of
    /// c_i x_i / d_i as an exponent over the character order.
    pub fn root_of_unity_from_logs(&self, orders: &[u64], logs: &[u64]) -> (u64, u64) {
        let ord = self.order();
        let mut total: u64 = 0;
        for ((c, x), d) in self.exponents.iter().zip(logs).zip(orders) {
            if *c == 0 {
                continue;
            }
            // c/d = (c/g)/(d/g) with denominator dividing ord
            let g = c.gcd(d);
            let num = c / g;
            let den = d / g;
            debug_assert!(ord % den == 0);
            let scale = (ord / den) as u128;
            let part = num as u128 * *x as u128 % den as u128;
            total = ((total as u128 + part * scale) % ord as u128) as u64;
        }
        (ord, total)
    }

    /// chi(a) as an exact cyclotomic number; 0 when gcd(a, m) > 1.
    pub fn evaluate(&self, a: u64) -> CyclotomicElement {
        match self.evaluate_root_of_unity(a) {
            None => CyclotomicElement::zero(),
            Some((ord, k)) => CyclotomicElement::root_of_unity(ord, k),
        }
    }

    /// Pointwise product of two characters of the same modulus.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.modulus != other.modulus {
            return Err(Error::InvalidInput(format!(
                "character moduli differ: {} vs {}",
                self.modulus, other.modulus
            )));
        }
        let group = self.group();
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .zip(group.orders())
            .map(|((a, b), d)| (a + b) % d)
            .collect();
        Ok(DirichletCharacterSpec {
            modulus: self.modulus,
            exponents,
        })
    }
}

/// Validate that H is a subgroup of (Z/mZ)*: nonempty, unit entries, contains
/// 1, closed under multiplication. Returns the sorted, deduplicated list.
pub fn validate_subgroup(m: u64, h: &[u64]) -> Result<Vec<u64>> {
    if m == 1 {
        return Ok(vec![0]);
    }
    let mut set: BTreeSet<u64> = BTreeSet::new();
    for &x in h {
        let r = x % m;
        if r.gcd(&m) != 1 {
            return Err(Error::InvalidSubgroup(h.to_vec(), m));
        }
        set.insert(r);
    }
    if !set.contains(&(1 % m)) {
        return Err(Error::InvalidSubgroup(h.to_vec(), m));
    }
    for &a in &set {
        for &b in &set {
            if !set.contains(&((a as u128 * b as u128 % m as u128) as u64)) {
                return Err(Error::InvalidSubgroup(h.to_vec(), m));
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// The characters of (Z/mZ)* trivial on a subgroup H, i.e. the character
/// group of the quotient (Z/mZ)*/H. Sorted by exponent vector.
pub fn characters_trivial_on(m: u64, h: &[u64]) -> Result<Vec<DirichletCharacterSpec>> {
    let h = validate_subgroup(m, h)?;
    let group = unit_group_structure(m);
    let orders = group.orders().to_vec();
    let h_logs: Vec<Vec<u64>> = h
        .iter()
        .map(|&x| group.dlog(x).expect("validated unit"))
        .collect();
    let mut out = Vec::new();
    let mut exps = vec![0u64; orders.len()];
    loop {
        let chi = DirichletCharacterSpec {
            modulus: m,
            exponents: exps.clone(),
        };
        let lcm_d = orders.iter().fold(1u64, |acc, d| acc.lcm(d));
        let trivial_on_h = h_logs.iter().all(|logs| {
            // sum c_i x_i / d_i must be an integer
            let mut num: u128 = 0;
            for ((c, x), d) in exps.iter().zip(logs).zip(&orders) {
                num += *c as u128 * *x as u128 * (lcm_d / d) as u128;
            }
            num % lcm_d as u128 == 0
        });
        if trivial_on_h {
            out.push(chi);
        }
        // mixed-radix increment
        let mut i = 0;
        loop {
            if i == exps.len() {
                let expected = group.order() / h.len() as u64;
                assert_eq!(out.len() as u64, expected, "character count mismatch");
                out.sort();
                return Ok(out);
            }
            exps[i] += 1;
            if exps[i] < orders[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Enumerate every subgroup of (Z/mZ)*, each as a sorted element list.
pub fn all_subgroups(m: u64) -> Vec<Vec<u64>> {
    let group = unit_group_structure(m);
    let units = group.units();
    if m <= 2 {
        return vec![units];
    }
    let closure = |gens: &BTreeSet<u64>| -> Vec<u64> {
        let mut set: BTreeSet<u64> = gens.clone();
        set.insert(1);
        loop {
            let mut grew = false;
            let items: Vec<u64> = set.iter().copied().collect();
            for &a in &items {
                for &b in &items {
                    if set.insert((a as u128 * b as u128 % m as u128) as u64) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return set.into_iter().collect();
            }
        }
    };
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut work: Vec<BTreeSet<u64>> = vec![BTreeSet::from([1u64])];
    seen.insert(vec![1]);
    while let Some(gens) = work.pop() {
        for &u in &units {
            if gens.contains(&u) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.insert(u);
            let sub = closure(&next_gens);
            if seen.insert(sub.clone()) {
                work.push(sub.iter().copied().collect());
            }
        }
    }
    seen.into_iter().collect()
}

/// Outcome of expanding the character product over the quotient group
/// (Z/mZ)*/H at a unit g against the closed form (1 - z^r)^(|G|/r).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterProductReport {
    /// order of gH in the quotient group
    pub element_order: u64,
    /// |G| / r
    pub multiplicity: u64,
    /// expanded product, constant term first
    pub lhs: Vec<BigRational>,
    /// binomial expansion of (1 - z^r)^(|G|/r)
    pub rhs: Vec<BigRational>,
    pub equal: bool,
}

/// Expand prod_{chi trivial on H} (1 - chi(g) z) exactly and compare against
/// (1 - z^r)^(|G|/r), where r is the order of gH in (Z/mZ)*/H.
///
/// The expansion is carried out in the group ring Z[x]/(x^E - 1) with E the
/// least common multiple of the value orders, where multiplying by a root of
/// unity is an index rotation; each z-coefficient is reduced into Q(zeta_E)
/// at the end and must come out rational.
pub fn character_product_check(m: u64, h: &[u64], g: u64) -> Result<CharacterProductReport> {
    if m > 1 && g.gcd(&m) != 1 {
        return Err(Error::InvalidInput(format!(
            "g = {g} is not a unit mod {m}"
        )));
    }
    let chars = characters_trivial_on(m, h)?;
    let n = chars.len();
    let group = unit_group_structure(m);
    let logs = group.dlog(g).expect("g is a unit");
    let values: Vec<(u64, u64)> = chars
        .iter()
        .map(|chi| chi.root_of_unity_from_logs(group.orders(), &logs))
        .collect();
    let e_order = values.iter().fold(1u64, |acc, (ord, _)| acc.lcm(ord));
    let e = e_order as usize;
    // order r of gH in the quotient: least t >= 1 with g^t in H
    let h_sorted = validate_subgroup(m, h)?;
    let mut r = 1u64;
    let mut acc = g % m.max(1);
    while !h_sorted.binary_search(&acc).is_ok() {
        acc = (acc as u128 * g as u128 % m.max(1) as u128) as u64;
        r += 1;
    }
    let multiplicity = n as u64 / r;

    // coeffs[j] = group-ring vector of the z^j coefficient; every elementary
    // symmetric term is a single root of unity, so coordinates are bounded
    // by binomial(n, j), which stays inside i128 for n <= 120
    if n > 120 {
        return Err(Error::InvalidInput(format!(
            "character group of size {n} exceeds the exact expansion bound"
        )));
    }
    let mut coeffs: Vec<Vec<i128>> = vec![vec![0i128; e]];
    coeffs[0][0] = 1;
    for (ord, k) in &values {
        let rot = (k * e_order / ord) as usize;
        let mut next: Vec<Vec<i128>> = vec![vec![0i128; e]; coeffs.len() + 1];
        for (j, v) in coeffs.iter().enumerate() {
            for (idx, &c) in v.iter().enumerate() {
                next[j][idx] += c;
                next[j + 1][(idx + rot) % e] -= c;
            }
        }
        coeffs = next;
    }

    // reduce each group-ring coordinate vector mod Phi_E and demand rationality
    let phi = cyclotomic_polynomial(e_order);
    let mut lhs = Vec::with_capacity(coeffs.len());
    for v in &coeffs {
        let poly: crate::qpoly::ZPoly =
            crate::qpoly::ztrim(v.iter().map(|&c| BigInt::from(c)).collect());
        let red = if poly.len() >= phi.len() {
            crate::qpoly::zrem(&poly, &phi)
        } else {
            poly
        };
        match red.len() {
            0 => lhs.push(BigRational::zero()),
            1 => lhs.push(BigRational::from_integer(red[0].clone())),
            _ => {
                return Err(Error::CyclotomicResidue(format!(
                    "z-coefficient reduces to degree {} in Q(zeta_{})",
                    red.len() - 1,
                    e_order
                )))
            }
        }
    }

    // rhs: (1 - z^r)^(n/r)
    let mut rhs = vec![BigRational::zero(); n + 1];
    let mut binom = BigInt::one();
    for j in 0..=multiplicity {
        let sign = if j % 2 == 1 {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        rhs[(j * r) as usize] = sign * BigRational::from_integer(binom.clone());
        if j < multiplicity {
            binom = binom * BigInt::from(multiplicity - j) / BigInt::from(j + 1);
        }
    }

    let equal = lhs == rhs;
    Ok(CharacterProductReport {
        element_order: r,
        multiplicity,
        lhs,
        rhs,
        equal,
    })
}

/// Reconstruct a character from (generator, exponent, order) triples that
/// must match the canonical cyclic decomposition of (Z/mZ)*.
pub fn character_from_generator_values(
    m: u64,
    values: &[(u64, u64, u64)],
) -> Result<DirichletCharacterSpec> {
    let group = unit_group_structure(m);
    if values.is_empty() {
        return Ok(DirichletCharacterSpec::trivial(m));
    }
    if values.len() != group.generators().len() {
        return Err(Error::InvalidInput(format!(
            "expected {} generator assignments for modulus {m}, got {}",
            group.generators().len(),
            values.len()
        )));
    }
    let mut exponents = Vec::new();
    for (&(g, c, d), (&gg, &dd)) in values
        .iter()
        .zip(group.generators().iter().zip(group.orders()))
    {
        if g != gg || d != dd {
            return Err(Error::InvalidInput(format!(
                "generator table mismatch for modulus {m}: expected ({gg}, order {dd}), got ({g}, order {d})"
            )));
        }
        exponents.push(c);
    }
    Ok(DirichletCharacterSpec::new(&group, exponents))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_group_shapes() {
        let g8 = unit_group_structure(8);
        assert_eq!(g8.orders(), &[2, 2]);
        assert_eq!(g8.order(), 4);
        let g7 = unit_group_structure(7);
        assert_eq!(g7.orders(), &[6]);
        let g2 = unit_group_structure(2);
        assert!(g2.generators().is_empty());
        // every unit decomposes and recomposes
        for m in [8u64, 7, 12, 15, 16, 24, 45, 60] {
            let g = unit_group_structure(m);
            for u in g.units() {
                let exps = g.dlog(u).unwrap();
                let mut v = 1u64;
                for (gen, e) in g.generators().iter().zip(&exps) {
                    v = v * pow_mod(*gen, *e, m) % m;
                }
                assert_eq!(v, u, "m={m} u={u}");
            }
        }
    }

    #[test]
    fn dlog_of_nonunit_is_none() {
        let g = unit_group_structure(12);
        assert!(g.dlog(4).is_none());
        assert!(g.dlog(0).is_none());
    }

    #[test]
    fn trivial_character_evaluations() {
        let chi = DirichletCharacterSpec::trivial(8);
        assert_eq!(chi.evaluate(5), CyclotomicElement::one());
        assert_eq!(chi.evaluate(4), CyclotomicElement::zero());
        assert_eq!(chi.order(), 1);
    }

    #[test]
    fn quadratic_character_mod_8() {
        let chars = characters_trivial_on(8, &[1, 7]).unwrap();
        assert_eq!(chars.len(), 2);
        let chi = chars.iter().find(|c| !c.is_trivial()).unwrap();
        let minus_one = CyclotomicElement::from_integer(-1);
        assert_eq!(chi.evaluate(3), minus_one);
        assert_eq!(chi.evaluate(5), minus_one);
        assert_eq!(chi.evaluate(7), CyclotomicElement::one());
        assert_eq!(chi.order(), 2);
    }

    #[test]
    fn cubic_characters_mod_7() {
        let chars = characters_trivial_on(7, &[1, 6]).unwrap();
        assert_eq!(chars.len(), 3);
        for chi in &chars {
            assert!(chi.order() == 1 || chi.order() == 3);
            assert_eq!(chi.evaluate(6), CyclotomicElement::one());
        }
        let full = characters_trivial_on(7, &[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(full.len(), 1);
        assert!(full[0].is_trivial());
    }

    #[test]
    fn character_group_closure() {
        let chars = characters_trivial_on(8, &[1, 7]).unwrap();
        for a in &chars {
            for b in &chars {
                let prod = a.mul(b).unwrap();
                assert!(chars.contains(&prod));
            }
        }
    }

    #[test]
    fn multiplicativity_on_units() {
        for m in [7u64, 8, 15, 24] {
            let group = unit_group_structure(m);
            let units = group.units();
            let chars = characters_trivial_on(m, &[1]).unwrap();
            for chi in chars.iter().take(6) {
                for &a in units.iter().take(8) {
                    for &b in units.iter().take(8) {
                        let lhs = chi.evaluate(a).mul(&chi.evaluate(b));
                        let rhs = chi.evaluate(a * b % m);
                        assert_eq!(lhs, rhs, "m={m} a={a} b={b}");
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_non_subgroup() {
        assert!(matches!(
            characters_trivial_on(8, &[1, 3, 5]),
            Err(Error::InvalidSubgroup(_, _))
        ));
        assert!(matches!(
            characters_trivial_on(8, &[3, 7]),
            Err(Error::InvalidSubgroup(_, _))
        ));
    }

    #[test]
    fn character_product_examples() {
        let rep = character_product_check(8, &[1, 7], 3).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.element_order, 2);
        assert_eq!(rep.multiplicity, 1);

        // g = 13 = 6 mod 7 lies in H: identity case, product (1 - z)^3
        let rep = character_product_check(7, &[1, 6], 13).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.element_order, 1);
        assert_eq!(rep.multiplicity, 3);

        let rep = character_product_check(7, &[1, 6], 2).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.element_order, 3);
        assert_eq!(rep.multiplicity, 1);
    }

    #[test]
    fn character_product_rejects_nonunit() {
        assert!(character_product_check(8, &[1, 7], 4).is_err());
    }

    #[test]
    fn subgroup_enumeration_mod_8() {
        let subs = all_subgroups(8);
        // (Z/8Z)* = C2 x C2 has 5 subgroups
        assert_eq!(subs.len(), 5);
        assert!(subs.contains(&vec![1, 7]));
        assert!(subs.contains(&vec![1, 3, 5, 7]));
    }
}
