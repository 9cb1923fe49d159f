//! Reduction of `Z[ζ_n]` modulo a maximal ideal over `p`.
//!
//! The residue field is `F_{p^f}` with `f` the order of `p` modulo `n_{p′}`,
//! realized as `F_p[x]/(μ)` for the smallest monic irreducible `μ` of degree
//! `f`. Polynomials are ordered by the integer whose base-`p` digits are
//! their coefficients, constant term least significant.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use super::cyclotomic::Cyclotomic;
use crate::arith::{inv_mod, is_prime, mul_mod, multiplicative_order, p_part, prime_factors};
use crate::error::{precondition, Error, Result};

/// An element of `F_{p^f}`: coefficients in the polynomial basis, length `f`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(Vec<u64>);

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, Debug)]
pub struct ResidueField {
    p: u64,
    f: u32,
    n: u32,
    /// Monic modulus, low coefficient first, length `f + 1`.
    modulus: Vec<u64>,
    z: FieldElement,
    /// `w^e` for the image `w` of `ζ_n`, `0 ≤ e < n`.
    w_powers: Vec<FieldElement>,
}

/// Below this size `z` is a power of the smallest primitive element; above
/// it `p^f − 1` is not factored and `z` is the first power `c^{(q−1)/n_{p′}}`
/// of exact order `n_{p′}`.
const FIELD_LIMIT: u128 = 1 << 63;

/// Primes below this use unreduced `u64` accumulation in products.
const SMALL_P: u64 = 1 << 20;

fn poly_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = alloc::vec![0u64; a.len() + b.len() - 1];
    if p < SMALL_P {
        // Each coefficient sums fewer than 2^24 products below 2^40.
        for (i, &x) in a.iter().enumerate() {
            if x != 0 {
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] += x * y;
                }
            }
        }
        for c in &mut prod {
            *c %= p;
        }
    } else {
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(x, y, p)) % p;
            }
        }
    }
    poly_rem(prod, m, p)
}

/// Remainder modulo a monic `m`.
fn poly_rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let d = m.len() - 1;
    while a.len() > d {
        let c = a.pop().unwrap();
        if c == 0 {
            continue;
        }
        let off = a.len() - d;
        for (t, &mt) in m[..d].iter().enumerate() {
            a[off + t] = (a[off + t] + p - mul_mod(c, mt, p)) % p;
        }
    }
    poly_trim(a)
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = poly_rem(alloc::vec![1], m, p);
    let mut b = poly_rem(base.to_vec(), m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, m, p);
        }
        b = poly_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

/// `base^e` for an exponent beyond `u64`.
fn poly_powmod_big(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = poly_rem(alloc::vec![1], m, p);
    for i in (0..e.bits()).rev() {
        acc = poly_mulmod(&acc, &acc, m, p);
        if e.bit(i) {
            acc = poly_mulmod(&acc, base, m, p);
        }
    }
    acc
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = alloc::vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    poly_trim(out)
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (poly_trim(a.to_vec()), poly_trim(b.to_vec()));
    while !b.is_empty() {
        let lead = *b.last().unwrap();
        let inv = inv_mod(lead, p).unwrap();
        let monic: Vec<u64> = b.iter().map(|&c| mul_mod(c, inv, p)).collect();
        let r = poly_rem(a, &monic, p);
        a = monic;
        b = r;
    }
    a
}

/// Ben-Or's test for a monic `m` of degree `d ≥ 1`: irreducible iff
/// `gcd(m, x^{p^i} − x) = 1` for `1 ≤ i ≤ d/2`. Most reducible polynomials
/// fail at a small `i`.
fn is_irreducible(m: &[u64], p: u64) -> bool {
    let d = m.len() - 1;
    let x = poly_rem(alloc::vec![0, 1], m, p);
    let mut frob = x.clone();
    for _ in 0..d / 2 {
        frob = poly_powmod(&frob, p, m, p);
        if poly_gcd(m, &poly_sub(&frob, &x, p), p).len() != 1 {
            return false;
        }
    }
    true
}

fn digits(mut k: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(k % p);
        k /= p;
    }
    out
}

impl ResidueField {
    fn build(n: u32, p: u64, k: Option<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(precondition!("{p} is not prime"));
        }
        if n == 0 {
            return Err(precondition!("modulus must be positive"));
        }
        let np = p_part(n as u64, p);
        let npp = n as u64 / np;
        let f = multiplicative_order(p % npp.max(1), npp) as u32;
        let q = (p as u128).checked_pow(f).filter(|&q| q < FIELD_LIMIT);

        let modulus = if f == 1 {
            alloc::vec![0, 1]
        } else {
            // Irreducibles have density about 1/f, so the search ends long before `u64::MAX`.
            let bound = q.map_or(u64::MAX, |q| q as u64);
            (0..bound)
                .map(|c| {
                    let mut m = digits(c, p, f as usize);
                    m.push(1);
                    m
                })
                .find(|m| m[0] != 0 && is_irreducible(m, p))
                .ok_or_else(|| crate::error::internal!("no irreducible polynomial of degree {f} over F_{p}"))?
        };
        let one = poly_rem(alloc::vec![1], &modulus, p);
        let mut z = match q {
            Some(q) => {
                let q = q as u64;
                let qs = prime_factors(q - 1);
                let g = (1..q)
                    .map(|c| poly_trim(digits(c, p, f as usize)))
                    .find(|g| qs.iter().all(|&r| poly_powmod(g, (q - 1) / r, &modulus, p) != one))
                    .ok_or_else(|| crate::error::internal!("F_{q} has no primitive element"))?;
                poly_powmod(&g, (q - 1) / npp, &modulus, p)
            }
            None => {
                let e = (BigUint::from(p).pow(f) - 1u32) / npp;
                let rs = prime_factors(npp);
                (1..u64::MAX)
                    .map(|c| poly_powmod_big(&poly_trim(digits(c, p, f as usize)), &e, &modulus, p))
                    .find(|t| rs.iter().all(|&r| poly_powmod(t, npp / r, &modulus, p) != one))
                    .ok_or_else(|| crate::error::internal!("no element of order {npp} found"))?
            }
        };
        if let Some(k) = k {
            z = poly_powmod(&z, k, &modulus, p);
        }
        let u = if npp == 1 { 0 } else { inv_mod(np % npp, npp).unwrap() };
        let w = poly_powmod(&z, u, &modulus, p);
        let mut w_powers = Vec::with_capacity(n as usize);
        let mut cur = one.clone();
        for _ in 0..n {
            w_powers.push(cur.clone());
            cur = poly_mulmod(&cur, &w, &modulus, p);
        }
        let pad = |v: Vec<u64>| {
            let mut v = v;
            v.resize(f as usize, 0);
            FieldElement(v)
        };
        Ok(ResidueField {
            p,
            f,
            n,
            modulus,
            z: pad(z),
            w_powers: w_powers.into_iter().map(pad).collect(),
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    /// `p^f`, when it fits in a `u128`.
    pub fn size(&self) -> Option<u128> {
        (self.p as u128).checked_pow(self.f)
    }

    pub fn cyclotomic_modulus(&self) -> u32 {
        self.n
    }

    /// The field polynomial, low coefficient first.
    pub fn field_modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The designated element of order `n_{p′}`.
    pub fn z(&self) -> &FieldElement {
        &self.z
    }

    /// Image of `ζ_n`.
    pub fn zeta_image(&self) -> &FieldElement {
        &self.w_powers[1 % self.w_powers.len()]
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(alloc::vec![0; self.f as usize])
    }

    pub fn one(&self) -> FieldElement {
        self.w_powers[0].clone()
    }

    pub fn from_u64(&self, k: u64) -> FieldElement {
        let mut v = alloc::vec![0; self.f as usize];
        v[0] = k % self.p;
        FieldElement(v)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement(a.0.iter().zip(&b.0).map(|(x, y)| (x + y) % self.p).collect())
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let mut v = poly_mulmod(&a.0, &b.0, &self.modulus, self.p);
        v.resize(self.f as usize, 0);
        FieldElement(v)
    }

    pub fn pow(&self, a: &FieldElement, e: u64) -> FieldElement {
        let mut v = poly_powmod(&a.0, e, &self.modulus, self.p);
        v.resize(self.f as usize, 0);
        FieldElement(v)
    }

    /// Multiplicative order of an element whose order divides `n_{p′}`,
    /// such as the image of any root of unity.
    pub fn order_of(&self, a: &FieldElement) -> u64 {
        let npp = self.n as u64 / p_part(self.n as u64, self.p);
        let one = self.one();
        assert!(self.pow(a, npp) == one, "order does not divide n_p'");
        let mut ord = npp;
        for r in prime_factors(npp) {
            while ord % r == 0 && self.pow(a, ord / r) == one {
                ord /= r;
            }
        }
        ord
    }

    /// The image of `x` under `ζ_n ↦ z^u`; `x` may live in any `Z[ζ_d]`
    /// with `d | n`.
    pub fn reduce(&self, x: &Cyclotomic) -> Result<FieldElement> {
        let d = x.modulus();
        if self.n % d != 0 {
            return Err(Error::ModulusMismatch(d, self.n));
        }
        let s = (self.n / d) as usize;
        let pb = BigInt::from(self.p);
        let mut acc = alloc::vec![0u64; self.f as usize];
        for (e, c) in x.terms() {
            let c = (c % &pb).to_i64().unwrap().rem_euclid(self.p as i64) as u64;
            if c == 0 {
                continue;
            }
            let w = &self.w_powers[*e as usize * s];
            for (a, &wc) in acc.iter_mut().zip(&w.0) {
                *a = (*a + mul_mod(c, wc, self.p)) % self.p;
            }
        }
        Ok(FieldElement(acc))
    }

    /// The residue field of a Galois-conjugate maximal ideal, obtained by
    /// replacing `z` with `z^k` for the smallest unit `k` outside `⟨p⟩`
    /// modulo `n_{p′}`. `None` when the ideal over `p` is unique.
    pub fn alternative(&self) -> Option<ResidueField> {
        let npp = self.n as u64 / p_part(self.n as u64, self.p);
        let powers_of_p: Vec<u64> = (0..self.f).map(|i| crate::arith::pow_mod(self.p, i as u64, npp)).collect();
        let k = (2..npp).find(|&k| num_integer::gcd(k, npp) == 1 && !powers_of_p.contains(&k))?;
        Some(ResidueField::build(self.n, self.p, Some(k)).expect("alternative field builds like the original"))
    }
}

pub fn make_residue_field(n: u32, p: u64) -> Result<ResidueField> {
    ResidueField::build(n, p, None)
}

pub fn reduce_mod_p(x: &Cyclotomic, rf: &ResidueField) -> Result<FieldElement> {
    rf.reduce(x)
}
