//! Exact arithmetic in small finite fields GF(p^f), polynomial basis.
//!
//! Fields are built from a fixed irreducible modulus so element encodings are
//! reproducible across runs. Elements are handles (`Fe`) ordered
//! lexicographically by their coefficient vectors (constant term first), which
//! keeps downstream point normalization deterministic. All arithmetic is table
//! driven; the supported range (q <= 128) keeps every table tiny.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FfError {
    #[error("q = {0} is not a supported prime power")]
    UnsupportedOrder(u64),
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus has coefficient {0} not reduced mod p = {1}")]
    UnreducedCoefficient(u64, u64),
    #[error("modulus is reducible: divisible by {factor:?} (coefficients, constant first)")]
    ReducibleModulus { factor: Vec<u64> },
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("field order {0} exceeds the supported bound 128")]
    TooLarge(u64),
}

/// Defining data of GF(p^f): prime, exponent and a monic irreducible modulus
/// with coefficients listed constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub f: u32,
    pub modulus: Vec<u64>,
}

/// Element handle into a `Field`. The numeric order of handles equals the
/// lexicographic order of coefficient vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u16);

/// A concrete finite field with precomputed operation tables.
#[derive(Debug, Clone)]
pub struct Field {
    spec: FieldSpec,
    q: u64,
    add: Vec<u16>,
    mul: Vec<u16>,
    inv: Vec<u16>, // inv[0] unused
    frob: Vec<u16>,
}

/// Fixed moduli for the shipped field orders. The builder re-verifies
/// irreducibility on every construction and fails loudly on a bad entry.
const SHIPPED_MODULI: &[(u64, &[u64])] = &[
    (4, &[1, 1, 1]),
    (8, &[1, 1, 0, 1]),
    (9, &[1, 0, 1]),
    (16, &[1, 1, 0, 0, 1]),
    (25, &[1, 1, 1]),
    (27, &[1, 2, 0, 1]),
    (32, &[1, 0, 1, 0, 0, 1]),
    (49, &[3, 1, 1]),
    (64, &[1, 1, 0, 0, 0, 0, 1]),
    (81, &[2, 1, 0, 0, 1]),
    (121, &[4, 1, 1]),
    (125, &[4, 1, 0, 1]),
    (128, &[1, 1, 0, 0, 0, 0, 0, 1]),
];

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits q into (p, f) with q = p^f, p prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            let mut f = 0;
            while m % p == 0 {
                m /= p;
                f += 1;
            }
            return if m == 1 { Some((p, f)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

// Dense polynomial helpers over GF(p), coefficients constant term first.
fn poly_trim(a: &mut Vec<u64>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
}

fn poly_mod(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    // m monic
    let mut r: Vec<u64> = a.to_vec();
    poly_trim(&mut r);
    while r.len() >= m.len() && !(r.len() == 1 && r[0] == 0) {
        let lead = *r.last().unwrap();
        if lead == 0 {
            r.pop();
            continue;
        }
        let shift = r.len() - m.len();
        for i in 0..m.len() {
            let sub = (lead * m[i]) % p;
            r[shift + i] = (r[shift + i] + p * p - sub) % p;
        }
        poly_trim(&mut r);
        if r.len() == 1 && r[0] == 0 {
            break;
        }
    }
    r
}

fn poly_is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

/// Finds a monic proper divisor of `m` over GF(p) by exhaustive trial
/// division, or None if `m` is irreducible. Desk scale only.
fn find_factor(m: &[u64], p: u64) -> Option<Vec<u64>> {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        // enumerate monic polynomials of degree d
        let mut tail = vec![0u64; d];
        loop {
            let mut cand = tail.clone();
            cand.push(1);
            if poly_is_zero(&poly_mod(m, &cand, p)) {
                return Some(cand);
            }
            // increment tail as base-p counter
            let mut i = 0;
            loop {
                if i == d {
                    return match d == deg / 2 {
                        true => None,
                        false => break,
                    };
                }
                tail[i] += 1;
                if tail[i] < p {
                    break;
                }
                tail[i] = 0;
                i += 1;
            }
            if tail.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    None
}

impl Field {
    /// Builds GF(q) from the shipped modulus table (prime fields need no
    /// table entry).
    pub fn gf(q: u64) -> Result<Field, FfError> {
        let (p, f) = prime_power(q).ok_or(FfError::UnsupportedOrder(q))?;
        if f == 1 {
            return Field::from_spec(FieldSpec { p, f, modulus: vec![0, 1] });
        }
        let modulus = SHIPPED_MODULI
            .iter()
            .find(|(qq, _)| *qq == q)
            .map(|(_, m)| m.to_vec())
            .ok_or(FfError::UnsupportedOrder(q))?;
        Field::from_spec(FieldSpec { p, f, modulus })
    }

    /// Builds a field from an explicit spec, verifying monicity and
    /// irreducibility. A reducible modulus is reported with a factor witness.
    pub fn from_spec(spec: FieldSpec) -> Result<Field, FfError> {
        if !is_prime(spec.p) {
            return Err(FfError::NotPrime(spec.p));
        }
        let q = spec.p.checked_pow(spec.f).ok_or(FfError::TooLarge(u64::MAX))?;
        if q > 128 {
            return Err(FfError::TooLarge(q));
        }
        if spec.modulus.len() != spec.f as usize + 1 {
            return Err(FfError::NotMonic);
        }
        if *spec.modulus.last().unwrap() != 1 {
            return Err(FfError::NotMonic);
        }
        for &c in &spec.modulus {
            if c >= spec.p {
                return Err(FfError::UnreducedCoefficient(c, spec.p));
            }
        }
        if let Some(factor) = find_factor(&spec.modulus, spec.p) {
            return Err(FfError::ReducibleModulus { factor });
        }

        let qi = q as usize;
        let p = spec.p;
        let f = spec.f as usize;
        // index <-> coefficient codec: c0 is the most significant digit so
        // that handle order is lexicographic on (c0, c1, ...).
        let decode = |idx: usize| -> Vec<u64> {
            let mut c = vec![0u64; f];
            let mut rest = idx as u64;
            for i in (0..f).rev() {
                c[i] = rest % p;
                rest /= p;
            }
            c
        };
        let encode = |c: &[u64]| -> usize {
            let mut idx = 0u64;
            for &ci in c.iter() {
                idx = idx * p + ci;
            }
            idx as usize
        };

        let mut add = vec![0u16; qi * qi];
        let mut mul = vec![0u16; qi * qi];
        for a in 0..qi {
            let ca = decode(a);
            for b in 0..qi {
                let cb = decode(b);
                let mut sum = vec![0u64; f];
                for i in 0..f {
                    sum[i] = (ca[i] + cb[i]) % p;
                }
                add[a * qi + b] = encode(&sum) as u16;
                let mut prod = vec![0u64; 2 * f - 1];
                for (i, &x) in ca.iter().enumerate() {
                    for (j, &y) in cb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut red = poly_mod(&prod, &spec.modulus, p);
                red.resize(f, 0);
                mul[a * qi + b] = encode(&red) as u16;
            }
        }
        let mut inv = vec![0u16; qi];
        for a in 1..qi {
            for b in 1..qi {
                if mul[a * qi + b] == encode(&{
                    let mut one = vec![0u64; f];
                    one[0] = 1;
                    one
                }) as u16
                {
                    inv[a] = b as u16;
                    break;
                }
            }
        }
        let mut frob = vec![0u16; qi];
        for a in 0..qi {
            let mut acc = a as u16;
            let mut result = {
                let mut one = vec![0u64; f];
                one[0] = 1;
                encode(&one) as u16
            };
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    result = mul[result as usize * qi + acc as usize];
                }
                acc = mul[acc as usize * qi + acc as usize];
                e >>= 1;
            }
            frob[a] = result;
        }
        Ok(Field { spec, q, add, mul, inv, frob })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.spec.f
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn zero(&self) -> Fe {
        Fe(0)
    }

    pub fn one(&self) -> Fe {
        let mut c = vec![0u64; self.spec.f as usize];
        c[0] = 1;
        self.from_coeffs(&c)
    }

    /// All field elements in lexicographic coefficient order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q as u16).map(Fe)
    }

    pub fn coeffs(&self, a: Fe) -> Vec<u64> {
        let f = self.spec.f as usize;
        let p = self.spec.p;
        let mut c = vec![0u64; f];
        let mut rest = a.0 as u64;
        for i in (0..f).rev() {
            c[i] = rest % p;
            rest /= p;
        }
        c
    }

    pub fn from_coeffs(&self, c: &[u64]) -> Fe {
        assert_eq!(c.len(), self.spec.f as usize);
        let mut idx = 0u64;
        for &ci in c {
            assert!(ci < self.spec.p);
            idx = idx * self.spec.p + ci;
        }
        Fe(idx as u16)
    }

    /// Embeds an integer 0..p as a constant.
    pub fn from_int(&self, n: u64) -> Fe {
        let mut c = vec![0u64; self.spec.f as usize];
        c[0] = n % self.spec.p;
        self.from_coeffs(&c)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        Fe(self.add[a.0 as usize * self.q as usize + b.0 as usize])
    }

    pub fn neg(&self, a: Fe) -> Fe {
        // -a = (p-1)*a
        let m = self.from_int(self.spec.p - 1);
        self.mul(m, a)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        Fe(self.mul[a.0 as usize * self.q as usize + b.0 as usize])
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: Fe) -> Fe {
        assert!(a.0 != 0, "inverse of zero");
        Fe(self.inv[a.0 as usize])
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        let mut result = self.one();
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// The field automorphism x -> x^p.
    pub fn frobenius(&self, a: Fe) -> Fe {
        Fe(self.frob[a.0 as usize])
    }

    /// Frobenius iterated k times, i.e. x -> x^(p^k).
    pub fn frobenius_iter(&self, a: Fe, k: u32) -> Fe {
        let mut x = a;
        for _ in 0..k {
            x = self.frobenius(x);
        }
        x
    }

    /// For a field of even degree 2m viewed as GF(q0^2), the conjugation
    /// x -> x^(q0) with q0 = p^m.
    pub fn conjugate(&self, a: Fe) -> Fe {
        assert!(self.spec.f % 2 == 0, "conjugation needs even degree");
        self.frobenius_iter(a, self.spec.f / 2)
    }

    pub fn is_zero(&self, a: Fe) -> bool {
        a.0 == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: multiply two coefficient vectors and reduce by the
    /// modulus, with no use of the table path under test.
    fn oracle_mul(spec: &FieldSpec, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = spec.f as usize;
        let mut prod = vec![0u64; 2 * f];
        for i in 0..f {
            for j in 0..f {
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % spec.p;
            }
        }
        let mut r = poly_mod(&prod, &spec.modulus, spec.p);
        r.resize(f, 0);
        r
    }

    #[test]
    fn gf4_multiplication_table_matches_polynomial_oracle() {
        let k = Field::gf(4).unwrap();
        for a in k.elements() {
            for b in k.elements() {
                let want = oracle_mul(k.spec(), &k.coeffs(a), &k.coeffs(b));
                assert_eq!(k.coeffs(k.mul(a, b)), want);
            }
        }
        // x * x = x + 1 in GF(4) with modulus x^2+x+1
        let x = k.from_coeffs(&[0, 1]);
        let x_plus_1 = k.from_coeffs(&[1, 1]);
        assert_eq!(k.mul(x, x), x_plus_1);
    }

    #[test]
    fn gf4_characteristic_two() {
        let k = Field::gf(4).unwrap();
        for a in k.elements() {
            assert_eq!(k.add(a, a), k.zero());
        }
    }

    #[test]
    fn gf9_inverse_by_exhaustive_search() {
        let k = Field::gf(9).unwrap();
        let x = k.from_coeffs(&[0, 1]);
        // exhaustive oracle over all 9 elements
        let mut found = None;
        for b in k.elements() {
            if k.mul(x, b) == k.one() {
                found = Some(b);
            }
        }
        let inv = found.expect("x must be invertible");
        assert_eq!(k.inv(x), inv);
        assert_eq!(inv, k.from_coeffs(&[0, 2])); // (x)^-1 = 2x since x^2 = -1
        assert_eq!(k.mul(k.inv(x), x), k.one());
    }

    #[test]
    fn multiplicative_group_order() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128] {
            let k = Field::gf(q).unwrap();
            for a in k.elements().skip(1) {
                assert_eq!(k.pow(a, q - 1), k.one(), "a^(q-1) != 1 in GF({q})");
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive_small() {
        for q in [2u64, 3, 4, 5, 8, 9, 16] {
            let k = Field::gf(q).unwrap();
            for a in k.elements() {
                for b in k.elements() {
                    assert_eq!(k.mul(a, b), k.mul(b, a));
                    assert_eq!(k.add(a, b), k.add(b, a));
                    for c in k.elements() {
                        let lhs = k.mul(a, k.add(b, c));
                        let rhs = k.add(k.mul(a, b), k.mul(a, c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_automorphism() {
        for q in [4u64, 8, 9, 16] {
            let k = Field::gf(q).unwrap();
            for a in k.elements() {
                for b in k.elements() {
                    assert_eq!(k.frobenius(k.mul(a, b)), k.mul(k.frobenius(a), k.frobenius(b)));
                    assert_eq!(k.frobenius(k.add(a, b)), k.add(k.frobenius(a), k.frobenius(b)));
                }
                assert_eq!(k.frobenius_iter(a, k.degree()), a);
            }
        }
    }

    #[test]
    fn conjugation_fixes_exactly_the_subfield() {
        // GF(q^2) over GF(q): x -> x^q is an involution fixing exactly q elements
        for (q2, q) in [(4u64, 2u64), (9, 3), (16, 4), (25, 5), (49, 7), (64, 8)] {
            let k = Field::gf(q2).unwrap();
            let mut fixed = 0;
            for a in k.elements() {
                let c = k.conjugate(a);
                assert_eq!(k.conjugate(c), a, "conjugation must be an involution");
                if c == a {
                    fixed += 1;
                }
            }
            assert_eq!(fixed, q, "GF({q2}): conjugation must fix exactly GF({q})");
        }
    }

    #[test]
    fn reducible_modulus_rejected_with_witness() {
        // x^2 + 1 is reducible over GF(2): (x+1)^2
        let err = Field::from_spec(FieldSpec { p: 2, f: 2, modulus: vec![1, 0, 1] }).unwrap_err();
        match err {
            FfError::ReducibleModulus { factor } => {
                assert_eq!(factor, vec![1, 1]); // x + 1
            }
            other => panic!("expected reducibility error, got {other:?}"),
        }
    }

    #[test]
    fn shipped_moduli_all_construct() {
        for (q, _) in SHIPPED_MODULI {
            Field::gf(*q).unwrap();
        }
    }
}
