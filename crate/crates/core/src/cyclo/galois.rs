use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use super::cyclotomic::Cyclotomic;
use crate::arith::{crt, inv_mod, multiplicative_order, p_part};
use crate::error::{precondition, Error, Result};

/// The automorphism `ζ_n ↦ ζ_n^m` of `Q(ζ_n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GaloisElement {
    n: u32,
    m: u32,
}

fn normalize(n: u32, m: u64) -> u32 {
    if n == 1 {
        1
    } else {
        (m % n as u64) as u32
    }
}

impl GaloisElement {
    pub fn new(n: u32, m: u64) -> Result<Self> {
        if n == 0 {
            return Err(precondition!("Galois modulus must be positive"));
        }
        let m = normalize(n, m);
        if num_integer::gcd(m as u64, n as u64) != 1 {
            return Err(precondition!("{m} is not a unit modulo {n}"));
        }
        Ok(GaloisElement { n, m })
    }

    pub fn identity(n: u32) -> Self {
        GaloisElement { n, m: normalize(n, 1) }
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn exponent(&self) -> u32 {
        self.m
    }

    pub fn is_identity(&self) -> bool {
        self.m == normalize(self.n, 1)
    }

    /// `self ∘ other`, i.e. exponent multiplication.
    pub fn compose(&self, other: &GaloisElement) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch(self.n, other.n));
        }
        Ok(GaloisElement { n: self.n, m: normalize(self.n, self.m as u64 * other.m as u64) })
    }

    pub fn inverse(&self) -> Self {
        let m = if self.n == 1 { 1 } else { inv_mod(self.m as u64, self.n as u64).unwrap() };
        GaloisElement { n: self.n, m: normalize(self.n, m) }
    }

    /// Multiplicative order of `m` modulo `n`.
    pub fn order(&self) -> u64 {
        multiplicative_order(self.m as u64, self.n as u64)
    }

    /// Restriction to `Q(ζ_d)` for `d | n`.
    pub fn restrict(&self, d: u32) -> Result<Self> {
        if d == 0 || self.n % d != 0 {
            return Err(precondition!("{d} does not divide {}", self.n));
        }
        Ok(GaloisElement { n: d, m: normalize(d, self.m as u64) })
    }

    /// Exponent acting on `Q(ζ_d)`, for any `d` dividing `n`.
    pub fn exponent_mod(&self, d: u32) -> u64 {
        normalize(d, self.m as u64) as u64
    }

    pub fn apply(&self, x: &Cyclotomic) -> Result<Cyclotomic> {
        apply_galois(x, self)
    }
}

impl fmt::Display for GaloisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ζ_{} ↦ ζ_{}^{}", self.n, self.n, self.m)
    }
}

/// `σ`: identity on `p′`-roots of unity, `ζ ↦ ζ^{1+p}` on `p`-power roots.
pub fn make_sigma(n: u32, p: u64) -> GaloisElement {
    let np = p_part(n as u64, p);
    let npp = n as u64 / np;
    let m = crt(1, npp, (1 + p) % np, np);
    GaloisElement::new(n, m).expect("σ is a unit")
}

/// Units `m ≡ 1 (mod n_{p′})` of `p`-power multiplicative order modulo `n`.
pub fn p_power_tau_elements(n: u32, p: u64) -> Vec<GaloisElement> {
    let np = p_part(n as u64, p);
    let npp = n as u64 / np;
    let mut out: Vec<GaloisElement> = (0..np)
        .map(|t| 1 + npp * t)
        .filter(|&m| num_integer::gcd(m, n as u64) == 1)
        .filter(|&m| {
            let mut o = multiplicative_order(m % n as u64, n as u64);
            while o % p == 0 {
                o /= p;
            }
            o == 1
        })
        .map(|m| GaloisElement::new(n, m).unwrap())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Applies `g` to `x`; `x` may live in any `Z[ζ_d]` with `d | n`.
pub fn apply_galois(x: &Cyclotomic, g: &GaloisElement) -> Result<Cyclotomic> {
    let d = x.modulus();
    if g.n % d != 0 {
        return Err(Error::ModulusMismatch(d, g.n));
    }
    Ok(x.galois(g.exponent_mod(d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CyclotomicRing;

    fn ms(v: &[GaloisElement]) -> Vec<u32> {
        v.iter().map(|g| g.exponent()).collect()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(make_sigma(9, 3).exponent(), 4);
        assert_eq!(make_sigma(6, 3).exponent(), 1);
        assert_eq!(make_sigma(36, 3).exponent(), 13);
        assert!(make_sigma(1, 3).is_identity());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(ms(&p_power_tau_elements(9, 3)), [1, 4, 7]);
        assert_eq!(ms(&p_power_tau_elements(3, 3)), [1]);
        assert_eq!(ms(&p_power_tau_elements(27, 3)), [1, 4, 7, 10, 13, 16, 19, 22, 25]);
    }

    #[test]
    fn apply_examples() {
        let r9 = CyclotomicRing::new(9);
        let r3 = CyclotomicRing::new(3);
        let s = make_sigma(9, 3);
        let five = Cyclotomic::from_integer(&r9, 5);
        assert_eq!(apply_galois(&five, &s).unwrap(), five);
        let z9 = Cyclotomic::root_of_unity(&r9, 1);
        assert_eq!(apply_galois(&z9, &s).unwrap(), Cyclotomic::root_of_unity(&r9, 4));
        let z3 = Cyclotomic::root_of_unity(&r9, 3);
        assert_eq!(apply_galois(&z3, &s).unwrap(), z3);
        let z3_small = Cyclotomic::root_of_unity(&r3, 1);
        assert_eq!(apply_galois(&z3_small, &s).unwrap(), z3_small);
        let r4 = CyclotomicRing::new(4);
        assert!(apply_galois(&Cyclotomic::root_of_unity(&r4, 1), &s).is_err());
    }

    #[test]
    fn group_laws() {
        let g = GaloisElement::new(36, 13).unwrap();
        assert!(g.compose(&g.inverse()).unwrap().is_identity());
        assert_eq!(g.order(), 3);
        assert!(GaloisElement::new(36, 6).is_err());
    }
}
