//! Exact elements of `Z[ζ_n]`.
//!
//! Values are kept in the power basis `ζ_n^0, …, ζ_n^{n−1}`. The canonical
//! form is the remainder modulo the cyclotomic polynomial `Φ_n`, stored
//! sparsely, so only exponents below `φ(n)` survive and equality is
//! coefficient equality. Intermediate sums can be gathered un-reduced in a
//! [`DenseAccumulator`] and canonicalized once.

use alloc::borrow::Cow;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arithmetic context for `Z[ζ_n]`: the modulus and the low terms of `Φ_n`.
#[derive(Debug)]
pub struct CyclotomicRing {
    n: u32,
    phi_degree: u32,
    /// `Φ_n = x^φ + Σ coeff · x^exp`.
    phi_tail: Vec<(u32, i64)>,
}

pub type Ring = Arc<CyclotomicRing>;

fn mobius_divisors(n: u64) -> Vec<(u64, i8)> {
    let primes = crate::arith::prime_factors(n);
    let mut out = Vec::new();
    for mask in 0u32..(1 << primes.len()) {
        let mut sq = 1;
        let mut sign = 1i8;
        for (i, q) in primes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sq *= q;
                sign = -sign;
            }
        }
        out.push((n / sq, sign));
    }
    out
}

/// Smallest ring containing both: one of the two when the moduli divide each
/// other, `Z[ζ_lcm]` otherwise.
pub fn common_ring(a: &Ring, b: &Ring) -> Ring {
    if a.n == b.n || b.n % a.n == 0 {
        b.clone()
    } else if a.n % b.n == 0 {
        a.clone()
    } else {
        CyclotomicRing::new(num_integer::lcm(a.n, b.n))
    }
}

/// Dense integer coefficients of `Φ_n`, via `Π_{d|n} (x^d − 1)^{μ(n/d)}`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut poly = alloc::vec![1i64];
    let divs = mobius_divisors(n as u64);
    for &(d, s) in &divs {
        if s == 1 {
            // multiply by (x^d − 1)
            let d = d as usize;
            let mut next = alloc::vec![0i64; poly.len() + d];
            for (i, &c) in poly.iter().enumerate() {
                next[i + d] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &(d, s) in &divs {
        if s == -1 {
            // divide by (x^d − 1)
            let d = d as usize;
            let mut rem = poly.clone();
            let mut q = alloc::vec![0i64; poly.len() - d];
            for i in (d..rem.len()).rev() {
                let c = rem[i];
                q[i - d] = c;
                rem[i - d] += c;
                rem[i] = 0;
            }
            debug_assert!(rem.iter().all(|&c| c == 0));
            poly = q;
        }
    }
    // The construction yields ±Φ_n; normalize to monic.
    if *poly.last().unwrap() < 0 {
        for c in &mut poly {
            *c = -*c;
        }
    }
    poly
}

impl CyclotomicRing {
    pub fn new(n: u32) -> Ring {
        assert!(n >= 1, "cyclotomic modulus must be positive");
        let poly = cyclotomic_polynomial(n);
        let phi_degree = (poly.len() - 1) as u32;
        let phi_tail =
            poly[..poly.len() - 1].iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i as u32, c)).collect();
        Arc::new(CyclotomicRing { n, phi_degree, phi_tail })
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    /// `φ(n)`, the rank of `Z[ζ_n]`.
    pub fn rank(&self) -> u32 {
        self.phi_degree
    }

    /// Reduces a dense vector of length `n` (exponents already taken mod `n`)
    /// modulo `Φ_n` and returns the sparse canonical terms.
    fn reduce(&self, mut dense: Vec<BigInt>) -> Vec<(u32, BigInt)> {
        let phi = self.phi_degree as usize;
        for e in (phi..dense.len()).rev() {
            if dense[e].is_zero() {
                continue;
            }
            let c = core::mem::take(&mut dense[e]);
            for &(t, p) in &self.phi_tail {
                dense[e - phi + t as usize] -= &c * p;
            }
        }
        dense.truncate(phi);
        dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i as u32, c)).collect()
    }

    /// [`Self::reduce`] in `i128`; `None` on overflow.
    fn reduce_small(&self, mut dense: Vec<i128>) -> Option<Vec<(u32, BigInt)>> {
        let phi = self.phi_degree as usize;
        for e in (phi..dense.len()).rev() {
            let c = core::mem::take(&mut dense[e]);
            if c == 0 {
                continue;
            }
            for &(t, p) in &self.phi_tail {
                let slot = &mut dense[e - phi + t as usize];
                *slot = slot.checked_sub(c.checked_mul(p as i128)?)?;
            }
        }
        dense.truncate(phi);
        Some(dense.into_iter().enumerate().filter(|&(_, c)| c != 0).map(|(i, c)| (i as u32, BigInt::from(c))).collect())
    }
}

#[derive(Clone)]
pub struct Cyclotomic {
    ring: Ring,
    terms: Vec<(u32, BigInt)>,
}

/// Un-reduced accumulator over the power basis of one ring.
pub struct DenseAccumulator {
    ring: Ring,
    coeffs: Vec<BigInt>,
}

impl DenseAccumulator {
    pub fn new(ring: &Ring) -> Self {
        DenseAccumulator { ring: ring.clone(), coeffs: alloc::vec![BigInt::zero(); ring.n as usize] }
    }

    /// Adds `scale · ζ_n^exp`.
    pub fn add_term(&mut self, exp: u64, scale: &BigInt) {
        let n = self.ring.n as u64;
        self.coeffs[(exp % n) as usize] += scale;
    }

    fn in_ring<'a>(&self, x: &'a Cyclotomic) -> Cow<'a, Cyclotomic> {
        if x.ring.n == self.ring.n {
            Cow::Borrowed(x)
        } else {
            Cow::Owned(x.embed(&self.ring).expect("accumulator ring must contain every operand"))
        }
    }

    pub fn add(&mut self, x: &Cyclotomic, scale: &BigInt) {
        let x = self.in_ring(x);
        for (e, c) in &x.terms {
            self.coeffs[*e as usize] += c * scale;
        }
    }

    /// Adds `scale · a · b`.
    pub fn add_product(&mut self, a: &Cyclotomic, b: &Cyclotomic, scale: &BigInt) {
        let a = self.in_ring(a);
        let b = self.in_ring(b);
        let n = self.ring.n;
        for (ea, ca) in &a.terms {
            let cas = ca * scale;
            for (eb, cb) in &b.terms {
                self.coeffs[((ea + eb) % n) as usize] += &cas * cb;
            }
        }
    }

    pub fn finish(self) -> Cyclotomic {
        let terms = self.ring.reduce(self.coeffs);
        Cyclotomic { ring: self.ring, terms }
    }
}

impl Cyclotomic {
    pub fn zero(ring: &Ring) -> Self {
        Cyclotomic { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Cyclotomic::from_integer(ring, BigInt::one())
    }

    pub fn from_integer(ring: &Ring, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        let terms = if k.is_zero() { Vec::new() } else { alloc::vec![(0, k)] };
        Cyclotomic { ring: ring.clone(), terms }
    }

    /// `ζ_n^k`.
    pub fn root_of_unity(ring: &Ring, k: i64) -> Self {
        let mut acc = DenseAccumulator::new(ring);
        acc.add_term(k.rem_euclid(ring.n as i64) as u64, &BigInt::one());
        acc.finish()
    }

    /// `Σ_e mult[e] · ζ_o^e` for `o = mult.len()` dividing `n`.
    pub fn from_eigenvalue_multiplicities(ring: &Ring, mult: &[u64]) -> Self {
        let o = mult.len() as u64;
        let n = ring.n as u64;
        assert!(n % o == 0, "eigenvalue order {o} must divide the modulus {n}");
        let mut acc = DenseAccumulator::new(ring);
        for (e, &m) in mult.iter().enumerate() {
            if m != 0 {
                acc.add_term(e as u64 * (n / o), &BigInt::from(m));
            }
        }
        acc.finish()
    }

    /// Builds a value from arbitrary (exponent, coefficient) pairs.
    pub fn from_terms(ring: &Ring, terms: &[(u64, i64)]) -> Self {
        let n = ring.n as u64;
        let mut dense = alloc::vec![0i128; ring.n as usize];
        for &(e, c) in terms {
            dense[(e % n) as usize] += c as i128;
        }
        if let Some(terms) = ring.reduce_small(dense) {
            return Cyclotomic { ring: ring.clone(), terms };
        }
        let mut acc = DenseAccumulator::new(ring);
        for &(e, c) in terms {
            acc.add_term(e, &BigInt::from(c));
        }
        acc.finish()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn modulus(&self) -> u32 {
        self.ring.n
    }

    /// Canonical `(exponent, coefficient)` terms, exponents ascending.
    pub fn terms(&self) -> &[(u32, BigInt)] {
        &self.terms
    }

    /// Canonical coefficient vector of length `n` (zero above `φ(n)`).
    pub fn coeffs(&self) -> Vec<BigInt> {
        let mut v = alloc::vec![BigInt::zero(); self.ring.n as usize];
        for (e, c) in &self.terms {
            v[*e as usize] = c.clone();
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|c| c.to_i64())
    }

    /// Re-expresses the value in `Z[ζ_N]` for a multiple `N` of `n`.
    pub fn embed(&self, target: &Ring) -> Option<Cyclotomic> {
        if Arc::ptr_eq(&self.ring, target) || self.ring.n == target.n {
            return Some(Cyclotomic { ring: target.clone(), terms: self.terms.clone() });
        }
        if target.n % self.ring.n != 0 {
            return None;
        }
        let s = (target.n / self.ring.n) as u64;
        let mut acc = DenseAccumulator::new(target);
        for (e, c) in &self.terms {
            acc.add_term(*e as u64 * s, c);
        }
        Some(acc.finish())
    }

    /// `ζ_n ↦ ζ_n^m`, for `m` a unit modulo `n`.
    pub fn galois(&self, m: u64) -> Cyclotomic {
        let n = self.ring.n as u64;
        let mut acc = DenseAccumulator::new(&self.ring);
        for (e, c) in &self.terms {
            acc.add_term(*e as u64 * (m % n), c);
        }
        acc.finish()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Cyclotomic {
        self.galois(self.ring.n as u64 - 1)
    }

    pub fn scale(&self, k: &BigInt) -> Cyclotomic {
        if k.is_zero() {
            return Cyclotomic::zero(&self.ring);
        }
        Cyclotomic { ring: self.ring.clone(), terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// Coefficient-wise exact division; `None` when some coefficient is not
    /// divisible (equivalently, when `self / k ∉ Z[ζ_n]`).
    pub fn div_exact(&self, k: &BigInt) -> Option<Cyclotomic> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            terms.push((*e, q));
        }
        Some(Cyclotomic { ring: self.ring.clone(), terms })
    }

    pub fn pow(&self, mut e: u32) -> Cyclotomic {
        let mut acc = Cyclotomic::one(&self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Total order on values of the same ring, used for deterministic sorting.
    pub fn cmp_repr(&self, other: &Cyclotomic) -> Ordering {
        self.ring.n.cmp(&other.ring.n).then_with(|| self.terms.cmp(&other.terms))
    }

    fn common_ring(a: &Cyclotomic, b: &Cyclotomic) -> Ring {
        common_ring(&a.ring, &b.ring)
    }

    fn lift_pair(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let ring = Cyclotomic::common_ring(a, b);
        (a.embed(&ring).unwrap(), b.embed(&ring).unwrap())
    }

    fn merge(a: &Cyclotomic, b: &Cyclotomic, negate_b: bool) -> Cyclotomic {
        if a.ring.n != b.ring.n {
            let (x, y) = Cyclotomic::lift_pair(a, b);
            return Cyclotomic::merge(&x, &y, negate_b);
        }
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() || j < b.terms.len() {
            let take_a = j >= b.terms.len() || (i < a.terms.len() && a.terms[i].0 < b.terms[j].0);
            let take_b = i >= a.terms.len() || (j < b.terms.len() && b.terms[j].0 < a.terms[i].0);
            if take_a {
                out.push(a.terms[i].clone());
                i += 1;
            } else if take_b {
                let (e, c) = &b.terms[j];
                out.push((*e, if negate_b { -c } else { c.clone() }));
                j += 1;
            } else {
                let c = if negate_b { &a.terms[i].1 - &b.terms[j].1 } else { &a.terms[i].1 + &b.terms[j].1 };
                if !c.is_zero() {
                    out.push((a.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Cyclotomic { ring: a.ring.clone(), terms: out }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.ring.n == other.ring.n {
            self.terms == other.terms
        } else {
            let (a, b) = Cyclotomic::lift_pair(self, other);
            a.terms == b.terms
        }
    }
}

impl Eq for Cyclotomic {}

impl<'a> core::ops::Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::merge(self, rhs, false)
    }
}

impl<'a> core::ops::Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::merge(self, rhs, true)
    }
}

impl core::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { ring: self.ring.clone(), terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl<'a> core::ops::Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let ring = Cyclotomic::common_ring(self, rhs);
        let mut acc = DenseAccumulator::new(&ring);
        acc.add_product(self, rhs, &BigInt::one());
        acc.finish()
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// GAP-style notation, e.g. `-1-E(3)` or `2*E(9)^4`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "E({})", self.ring.n)?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
