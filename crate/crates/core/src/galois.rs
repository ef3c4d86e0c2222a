//! Exact arithmetic in GF(p^k).
//!
//! Elements are encoded as integers in `[0, q)` via base-p digits, digit `i`
//! being the coefficient of `x^i` of the polynomial representative. The
//! modulus is the lexicographically smallest monic irreducible of degree `k`
//! over GF(p), compared on the ascending-power coefficient vector, so field
//! construction is deterministic and the encoding gives a canonical total
//! order on elements. Multiplication goes through log/antilog tables, which
//! caps the field order at [`DEFAULT_MAX_ORDER`].

use thiserror::Error;

/// Largest admissible field order for table-based arithmetic.
pub const DEFAULT_MAX_ORDER: u64 = 1 << 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GaloisError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("field order {q} exceeds the limit {limit}")]
    TooLarge { q: u128, limit: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("field order is not a square")]
    NotSquareOrder,
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
}

/// An element of a specific [`Field`], tagged so that cross-field arithmetic
/// is detected at run time.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    value: u32,
    tag: u64,
}

impl FieldElement {
    /// Canonical integer encoding in `[0, q)`.
    pub fn value(self) -> u32 {
        self.value
    }
}

/// GF(p^k) with precomputed discrete-log tables.
///
/// Immutable after construction; all operations are pure, so a `Field` can be
/// shared freely across threads.
#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    tag: u64,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.tag == other.tag
    }
}
impl Eq for Field {}

impl Field {
    /// Construct GF(p^k) with the canonical (lexicographically smallest
    /// irreducible) modulus.
    pub fn new(p: u64, k: u32) -> Result<Field, GaloisError> {
        Self::with_max_order(p, k, DEFAULT_MAX_ORDER)
    }

    /// Like [`Field::new`] but with an explicit order limit.
    pub fn with_max_order(p: u64, k: u32, limit: u64) -> Result<Field, GaloisError> {
        check_size(p, k, limit)?;
        if !is_prime(p) {
            return Err(GaloisError::NonPrime(p));
        }
        let modulus = smallest_irreducible(p as u32, k);
        Ok(Self::build(p as u32, k, modulus))
    }

    /// Construct GF(p^k) with an explicitly supplied monic irreducible
    /// modulus (ascending-power coefficients, length k+1). Used when loading
    /// geometries from files that record their modulus.
    pub fn with_modulus(p: u64, k: u32, modulus: &[u64]) -> Result<Field, GaloisError> {
        check_size(p, k, DEFAULT_MAX_ORDER)?;
        if !is_prime(p) {
            return Err(GaloisError::NonPrime(p));
        }
        if modulus.len() != k as usize + 1 {
            return Err(GaloisError::InvalidModulus(format!(
                "expected {} coefficients, got {}",
                k + 1,
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(GaloisError::InvalidModulus(
                "coefficient out of range".into(),
            ));
        }
        if modulus[k as usize] != 1 {
            return Err(GaloisError::InvalidModulus("modulus is not monic".into()));
        }
        let m: Vec<u32> = modulus.iter().map(|&c| c as u32).collect();
        if k > 1 && !is_irreducible(p as u32, &m) {
            return Err(GaloisError::InvalidModulus("modulus is reducible".into()));
        }
        Ok(Self::build(p as u32, k, m))
    }

    fn build(p: u32, k: u32, modulus: Vec<u32>) -> Field {
        let q = (p as u64).pow(k) as u32;
        let tag = fingerprint(p, k, &modulus);
        let mut field = Field {
            p,
            k,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            tag,
        };
        field.build_tables();
        field
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let g = self.find_generator();
        let mut exp = vec![0u32; 2 * (q - 1)];
        let mut log = vec![0u32; q];
        let mut acc = 1u32;
        for (i, slot) in exp.iter_mut().take(q - 1).enumerate() {
            *slot = acc;
            log[acc as usize] = i as u32;
            acc = self.mul_poly(acc, g);
        }
        debug_assert_eq!(acc, 1, "generator order mismatch");
        for i in 0..q - 1 {
            exp[q - 1 + i] = exp[i];
        }
        self.exp = exp;
        self.log = log;
    }

    /// Smallest primitive element in encoding order.
    fn find_generator(&self) -> u32 {
        let ord = self.q as u64 - 1;
        let prime_factors = distinct_prime_factors(ord);
        'cand: for g in 1..self.q {
            for &f in &prime_factors {
                if self.pow_poly(g, ord / f) == 1 {
                    continue 'cand;
                }
            }
            return g;
        }
        unreachable!("no generator found in GF({})", self.q)
    }

    /// Polynomial-representation multiply, used only while building tables.
    fn mul_poly(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let k = self.k as usize;
        let da = digits(a, self.p, k);
        let db = digits(b, self.p, k);
        let mut prod = vec![0u64; 2 * k];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // reduce modulo the monic modulus
        for d in (k..2 * k).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (j, &m) in self.modulus.iter().take(k).enumerate() {
                let idx = d - k + j;
                prod[idx] = (prod[idx] + c * (p - m as u64)) % p;
            }
        }
        undigits(&prod[..k], self.p)
    }

    fn pow_poly(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_poly(acc, base);
            }
            base = self.mul_poly(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    /// Field order q = p^k.
    pub fn order(&self) -> u32 {
        self.q
    }
    /// Ascending-power coefficients of the modulus, length k+1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    /// √q when the order is a square, i.e. k is even.
    pub fn sqrt_order(&self) -> Option<u32> {
        (self.k % 2 == 0).then(|| self.p.pow(self.k / 2))
    }

    /// Wrap a canonical encoding as an element. Panics if out of range.
    pub fn element(&self, value: u32) -> FieldElement {
        assert!(value < self.q, "encoding {value} out of range for GF({})", self.q);
        FieldElement {
            value,
            tag: self.tag,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }
    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// All field elements in canonical encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|v| self.element(v))
    }

    fn guard(&self, x: FieldElement) -> Result<u32, GaloisError> {
        if x.tag != self.tag {
            return Err(GaloisError::FieldMismatch);
        }
        Ok(x.value)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GaloisError> {
        let (a, b) = (self.guard(a)?, self.guard(b)?);
        Ok(self.element(self.add_raw(a, b)))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GaloisError> {
        let (a, b) = (self.guard(a)?, self.guard(b)?);
        Ok(self.element(self.add_raw(a, self.neg_raw(b))))
    }

    pub fn neg(&self, a: FieldElement) -> Result<FieldElement, GaloisError> {
        let a = self.guard(a)?;
        Ok(self.element(self.neg_raw(a)))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GaloisError> {
        let (a, b) = (self.guard(a)?, self.guard(b)?);
        Ok(self.element(self.mul_raw(a, b)))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GaloisError> {
        let (a, b) = (self.guard(a)?, self.guard(b)?);
        if b == 0 {
            return Err(GaloisError::DivisionByZero);
        }
        Ok(self.element(self.mul_raw(a, self.inv_raw(b))))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, GaloisError> {
        let a = self.guard(a)?;
        if a == 0 {
            return Err(GaloisError::DivisionByZero);
        }
        Ok(self.element(self.inv_raw(a)))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> Result<FieldElement, GaloisError> {
        let a = self.guard(a)?;
        Ok(self.element(self.pow_raw(a, e)))
    }

    /// Frobenius map a ↦ a^p.
    pub fn frobenius(&self, a: FieldElement) -> Result<FieldElement, GaloisError> {
        self.pow(a, self.p as u64)
    }

    /// Norm onto the index-2 subfield: x ↦ x^{√q+1} ∈ GF(√q).
    pub fn relative_norm(&self, a: FieldElement) -> Result<FieldElement, GaloisError> {
        let a = self.guard(a)?;
        Ok(self.element(self.relative_norm_raw(a)?))
    }

    // Raw-encoding arithmetic, the hot path for geometry construction.

    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.k == 1 {
            return ((a as u64 + b as u64) % self.p as u64) as u32;
        }
        let mut out = 0u32;
        let mut mult = 1u32;
        let (mut x, mut y) = (a, b);
        for _ in 0..self.k {
            let d = (x % self.p + y % self.p) % self.p;
            out += d * mult;
            mult *= self.p;
            x /= self.p;
            y /= self.p;
        }
        out
    }

    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        if self.k == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let mut out = 0u32;
        let mut mult = 1u32;
        let mut x = a;
        for _ in 0..self.k {
            let d = x % self.p;
            out += if d == 0 { 0 } else { self.p - d } * mult;
            mult *= self.p;
            x /= self.p;
        }
        out
    }

    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub(crate) fn inv_raw(&self, a: u32) -> u32 {
        debug_assert_ne!(a, 0);
        let ord = self.q - 1;
        self.exp[((ord - self.log[a as usize]) % ord) as usize]
    }

    pub(crate) fn pow_raw(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let ord = (self.q - 1) as u64;
        let idx = (self.log[a as usize] as u64 * (e % ord)) % ord;
        self.exp[idx as usize]
    }

    pub(crate) fn relative_norm_raw(&self, a: u32) -> Result<u32, GaloisError> {
        let s = self.sqrt_order().ok_or(GaloisError::NotSquareOrder)?;
        Ok(self.pow_raw(a, s as u64 + 1))
    }
}

fn check_size(p: u64, k: u32, limit: u64) -> Result<(), GaloisError> {
    if k == 0 {
        return Err(GaloisError::InvalidModulus("extension degree 0".into()));
    }
    let q = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
    if q > limit as u128 {
        return Err(GaloisError::TooLarge { q, limit });
    }
    Ok(())
}

fn fingerprint(p: u32, k: u32, modulus: &[u32]) -> u64 {
    // FNV-1a over the defining data; only used for runtime mismatch checks.
    let mut h = 0xcbf29ce484222325u64;
    let mut eat = |v: u64| {
        for byte in v.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    eat(p as u64);
    eat(k as u64);
    for &c in modulus {
        eat(c as u64);
    }
    h
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// (p, k) such that n = p^k, if n is a prime power.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut m = n;
    let mut p = 0u64;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            p = d;
            break;
        }
        d += 1;
    }
    if p == 0 {
        return Some((n, 1));
    }
    let mut k = 0;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn digits(mut v: u32, p: u32, k: usize) -> Vec<u32> {
    let mut out = vec![0u32; k];
    for slot in out.iter_mut() {
        *slot = v % p;
        v /= p;
    }
    out
}

fn undigits(ds: &[u64], p: u32) -> u32 {
    let mut out = 0u64;
    for &d in ds.iter().rev() {
        out = out * p as u64 + d;
    }
    out as u32
}

/// Lexicographically smallest monic irreducible of degree k over GF(p),
/// comparing ascending-power coefficient vectors entry by entry.
fn smallest_irreducible(p: u32, k: u32) -> Vec<u32> {
    let total = (p as u64).pow(k);
    for m in 0..total {
        // c0 is the most significant digit of m, so ascending m walks the
        // coefficient vectors in lex order
        let mut coeffs = vec![0u32; k as usize + 1];
        coeffs[k as usize] = 1;
        let mut rest = m;
        for i in (0..k as usize).rev() {
            coeffs[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        if is_irreducible(p, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("an irreducible of degree {k} over GF({p}) always exists")
}

/// Trial-division irreducibility test over GF(p) for monic polynomials.
pub fn is_irreducible(p: u32, poly: &[u32]) -> bool {
    let k = poly.len() - 1;
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    if poly[0] == 0 {
        return false; // divisible by x
    }
    for d in 1..=k / 2 {
        let total = (p as u64).pow(d as u32);
        for m in 0..total {
            let mut g = vec![0u32; d + 1];
            g[d] = 1;
            let mut rest = m;
            for slot in g.iter_mut().take(d) {
                *slot = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            if poly_rem_is_zero(p, poly, &g) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(p: u32, f: &[u32], g: &[u32]) -> bool {
    let p64 = p as u64;
    let dg = g.len() - 1;
    let mut rem: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    while rem.len() > dg {
        let lead = *rem.last().unwrap() % p64;
        let shift = rem.len() - 1 - dg;
        if lead != 0 {
            for (j, &gc) in g.iter().enumerate() {
                let idx = shift + j;
                rem[idx] = (rem[idx] + lead * (p64 - gc as u64)) % p64;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c % p64 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_modulus_gf4() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]); // x^2 + x + 1
        assert_eq!(f.order(), 4);
    }

    #[test]
    fn prime_field_gf7() {
        let f = Field::new(7, 1).unwrap();
        assert_eq!(f.order(), 7);
        // inv(3) = 5 since 3·5 = 15 ≡ 1 (mod 7)
        assert_eq!(f.inv(f.element(3)).unwrap().value(), 5);
        assert_eq!(
            f.mul(f.element(3), f.element(5)).unwrap(),
            f.one()
        );
    }

    #[test]
    fn canonical_modulus_gf9_matches_enumeration_oracle() {
        // Oracle: a monic quadratic over GF(3) is irreducible iff it has no
        // root; enumerate all nine in ascending-power lex order.
        let p = 3u32;
        let mut smallest = None;
        'outer: for c0 in 0..p {
            for c1 in 0..p {
                let has_root = (0..p).any(|x| (x * x + c1 * x + c0) % p == 0);
                if !has_root {
                    smallest = Some(vec![c0, c1, 1]);
                    break 'outer;
                }
            }
        }
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.modulus(), smallest.unwrap().as_slice());
    }

    #[test]
    fn gf4_multiplication() {
        let f = Field::new(2, 2).unwrap();
        // ω·ω = ω+1: encodings 2·2 = 3
        assert_eq!(f.mul(f.element(2), f.element(2)).unwrap().value(), 3);
    }

    #[test]
    fn gf9_multiplicative_order() {
        let f = Field::new(3, 2).unwrap();
        for g in f.elements().skip(1) {
            assert_eq!(f.pow(g, 8).unwrap(), f.one());
        }
    }

    #[test]
    fn norm_gf4_all_nonzero_to_one() {
        let f = Field::new(2, 2).unwrap();
        for x in f.elements().skip(1) {
            assert_eq!(f.relative_norm(x).unwrap(), f.one());
        }
        assert_eq!(f.relative_norm(f.zero()).unwrap(), f.zero());
    }

    #[test]
    fn norm_gf9_generator_maps_to_two() {
        let f = Field::new(3, 2).unwrap();
        // a generator is any element of multiplicative order 8
        let g = f
            .elements()
            .skip(1)
            .find(|&x| (1..8).all(|e| f.pow(x, e).unwrap() != f.one()))
            .unwrap();
        assert_eq!(f.relative_norm(g).unwrap().value(), 2);
        assert_eq!(f.relative_norm(f.zero()).unwrap().value(), 0);
    }

    #[test]
    fn norm_is_sqrt_q_plus_one_to_one() {
        for (p, k) in [(2u64, 2u32), (3, 2), (2, 4)] {
            let f = Field::new(p, k).unwrap();
            let s = f.sqrt_order().unwrap();
            // preimage counts over the nonzero subfield values
            let mut counts = std::collections::HashMap::new();
            for x in f.elements().skip(1) {
                let n = f.relative_norm(x).unwrap().value();
                *counts.entry(n).or_insert(0u32) += 1;
            }
            assert_eq!(counts.len(), (s - 1) as usize);
            for (&n, &c) in &counts {
                assert_eq!(c, s + 1, "norm value {n} of GF({})", f.order());
                // norm lands in the subfield: fixed by x ↦ x^√q
                assert_eq!(f.pow_raw(n, s as u64), n);
            }
        }
    }

    #[test]
    fn field_inverse_and_distributivity_exhaustive_small() {
        for (p, k) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2), (2, 3), (13, 1), (2, 4)] {
            let f = Field::new(p, k).unwrap();
            let q = f.order();
            if q <= 16 {
                for a in 0..q {
                    for b in 0..q {
                        for c in 0..q {
                            let left = f.mul_raw(a, f.add_raw(b, c));
                            let right = f.add_raw(f.mul_raw(a, b), f.mul_raw(a, c));
                            assert_eq!(left, right);
                        }
                    }
                }
            }
            for a in 1..q {
                assert_eq!(f.mul_raw(a, f.inv_raw(a)), 1);
            }
        }
    }

    #[test]
    fn distributivity_sampled_larger_fields() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (p, k) in [(5u64, 2u32), (3, 3), (2, 6)] {
            let f = Field::new(p, k).unwrap();
            let q = f.order();
            for _ in 0..1000 {
                let (a, b, c) = (rng.gen_range(0..q), rng.gen_range(0..q), rng.gen_range(0..q));
                assert_eq!(
                    f.mul_raw(a, f.add_raw(b, c)),
                    f.add_raw(f.mul_raw(a, b), f.mul_raw(a, c))
                );
            }
        }
    }

    #[test]
    fn frobenius_is_automorphism_fixing_base_field() {
        for (p, k) in [(2u64, 2u32), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (7, 2), (2, 6), (3, 4)] {
            let f = Field::new(p, k).unwrap();
            let q = f.order();
            assert!(q <= 81);
            for a in 0..q {
                for b in 0..q {
                    let fr = |x: u32| f.pow_raw(x, p);
                    assert_eq!(fr(f.add_raw(a, b)), f.add_raw(fr(a), fr(b)));
                    assert_eq!(fr(f.mul_raw(a, b)), f.mul_raw(fr(a), fr(b)));
                }
            }
            let fixed: Vec<u32> = (0..q).filter(|&a| f.pow_raw(a, p) == a).collect();
            let base: Vec<u32> = (0..f.p()).collect();
            assert_eq!(fixed, base);
        }
    }

    #[test]
    fn error_cases() {
        assert_eq!(Field::new(6, 1).unwrap_err(), GaloisError::NonPrime(6));
        assert_eq!(Field::new(4, 1).unwrap_err(), GaloisError::NonPrime(4));
        assert!(matches!(
            Field::new(2, 17).unwrap_err(),
            GaloisError::TooLarge { .. }
        ));
        let f = Field::new(5, 1).unwrap();
        assert_eq!(f.inv(f.zero()).unwrap_err(), GaloisError::DivisionByZero);
        assert_eq!(
            f.div(f.element(2), f.zero()).unwrap_err(),
            GaloisError::DivisionByZero
        );
        let g9 = Field::new(3, 2).unwrap();
        assert_eq!(
            f.add(f.one(), g9.one()).unwrap_err(),
            GaloisError::FieldMismatch
        );
        let g8 = Field::new(2, 3).unwrap();
        assert_eq!(
            g8.relative_norm(g8.one()).unwrap_err(),
            GaloisError::NotSquareOrder
        );
    }

    #[test]
    fn with_modulus_round_trip_and_validation() {
        let f = Field::new(3, 2).unwrap();
        let m: Vec<u64> = f.modulus().iter().map(|&c| c as u64).collect();
        let g = Field::with_modulus(3, 2, &m).unwrap();
        assert_eq!(f, g);
        // x^2 + 2x + 1 = (x+1)^2 is reducible
        assert!(matches!(
            Field::with_modulus(3, 2, &[1, 2, 1]).unwrap_err(),
            GaloisError::InvalidModulus(_)
        ));
        assert!(matches!(
            Field::with_modulus(3, 2, &[1, 0, 2]).unwrap_err(),
            GaloisError::InvalidModulus(_)
        ));
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(64), Some((2, 6)));
    }
}
