//! Exact complex character tables and class-function operations.

mod dixon;
pub(crate) mod linalg;

use alloc::sync::Arc;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_traits::Zero;

pub use dixon::working_prime;

use crate::cyclo::{apply_galois, common_ring, Cyclotomic, CyclotomicRing, DenseAccumulator, GaloisElement, Ring};
use crate::error::{internal, precondition, Result};
use crate::permgrp::{ClassData, PermGroup, Quotient};

/// A class function, one value per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(values: Vec<Cyclotomic>) -> Self {
        ClassFunction { values }
    }

    pub fn degree(&self) -> Cyclotomic {
        self.values[0].clone()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction { values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn mul(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction { values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect() }
    }
}

/// Sparse unreduced terms `Σ c ζ_n^e` with machine-word coefficients.
type Small = Vec<(u32, i64)>;

/// The character table of a permutation group.
///
/// Rows are irreducible characters sorted by degree, then by value vector,
/// with the trivial character first. Columns follow the class order of the
/// attached [`ClassData`].
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: PermGroup,
    classes: Arc<ClassData>,
    ring: Ring,
    values: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u64>,
    /// Eigenvalue multisets `(exponent over n, multiplicity)` per row and class.
    eigen: Vec<Vec<Vec<(u32, u32)>>>,
    small: Vec<Vec<Small>>,
    lookup: HashMap<Vec<Small>, usize>,
    /// Rows keyed by [`eigen_key`].
    eigen_lookup: HashMap<Vec<u32>, usize>,
}

/// Flat encoding of eigenvalue multisets: per class, the sorted
/// `(exponent, multiplicity)` pairs followed by a separator.
fn eigen_key(rows: impl Iterator<Item = impl Iterator<Item = (u32, u32)>>) -> Vec<u32> {
    let mut key = Vec::new();
    for m in rows {
        for (e, c) in m {
            key.push(e);
            key.push(c);
        }
        key.push(u32::MAX);
    }
    key
}

fn small_terms(x: &Cyclotomic) -> Small {
    x.terms().iter().map(|(e, c)| (*e, i64::try_from(c).expect("character value coefficient fits in 64 bits"))).collect()
}

/// Accumulates `Σ scale · a · conj(b)` over unreduced exponents mod `n`.
struct SmallAcc {
    coeffs: Vec<i128>,
}

impl SmallAcc {
    fn new(n: u32) -> Self {
        SmallAcc { coeffs: alloc::vec![0; n as usize] }
    }

    fn add_product_conj(&mut self, a: &Small, b: &Small, scale: i128) {
        let n = self.coeffs.len() as u32;
        for &(ea, ca) in a {
            for &(eb, cb) in b {
                let e = (ea + n - eb) % n;
                self.coeffs[e as usize] += scale * ca as i128 * cb as i128;
            }
        }
    }

    fn finish(self, ring: &Ring) -> Cyclotomic {
        let mut acc = DenseAccumulator::new(ring);
        for (e, c) in self.coeffs.into_iter().enumerate() {
            if c != 0 {
                acc.add_term(e as u64, &BigInt::from(c));
            }
        }
        acc.finish()
    }
}

impl CharacterTable {
    pub fn new(group: &PermGroup, classes: Arc<ClassData>) -> Result<Self> {
        let lifted = dixon::lift_table(&classes)?;
        let n = classes.exponent() as u32;
        let ring = CyclotomicRing::new(n);
        let r = classes.len();
        let mut rows: Vec<(u64, Vec<Cyclotomic>, Vec<Vec<(u32, u32)>>)> = Vec::with_capacity(r);
        for (deg, eig) in lifted.degrees.into_iter().zip(lifted.eigen) {
            let vals = eig
                .iter()
                .map(|m| {
                    let terms: Vec<(u64, i64)> = m.iter().map(|&(e, c)| (e as u64, c as i64)).collect();
                    Cyclotomic::from_terms(&ring, &terms)
                })
                .collect();
            rows.push((deg, vals, eig));
        }
        let one = Cyclotomic::one(&ring);
        rows.sort_by(|a, b| {
            let trivial_a = a.1.iter().all(|v| *v == one);
            let trivial_b = b.1.iter().all(|v| *v == one);
            a.0.cmp(&b.0).then(trivial_b.cmp(&trivial_a)).then_with(|| {
                a.1.iter().zip(&b.1).map(|(x, y)| x.cmp_repr(y)).find(|o| o.is_ne()).unwrap_or(core::cmp::Ordering::Equal)
            })
        });
        let mut degrees = Vec::with_capacity(r);
        let mut values = Vec::with_capacity(r);
        let mut eigen = Vec::with_capacity(r);
        for (d, v, e) in rows {
            degrees.push(d);
            values.push(v);
            eigen.push(e);
        }
        let small: Vec<Vec<Small>> = values.iter().map(|row| row.iter().map(small_terms).collect()).collect();
        let mut lookup = HashMap::new();
        for (i, s) in small.iter().enumerate() {
            if lookup.insert(s.clone(), i).is_some() {
                return Err(internal!("two identical rows in the character table"));
            }
        }
        let eigen_lookup =
            eigen.iter().enumerate().map(|(i, e)| (eigen_key(e.iter().map(|m| m.iter().copied())), i)).collect();
        let table = CharacterTable { group: group.clone(), classes, ring, values, degrees, eigen, small, lookup, eigen_lookup };
        if !table.values[0].iter().all(|v| *v == one) {
            return Err(internal!("first row is not the trivial character"));
        }
        Ok(table)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &ClassData {
        &self.classes
    }

    pub fn classes_arc(&self) -> &Arc<ClassData> {
        &self.classes
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The cyclotomic modulus, equal to the group exponent.
    pub fn modulus(&self) -> u32 {
        self.ring.modulus()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.degrees[chi]
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic {
        &self.values[chi][class]
    }

    pub fn row(&self, chi: usize) -> &[Cyclotomic] {
        &self.values[chi]
    }

    pub fn values(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    pub fn character(&self, chi: usize) -> ClassFunction {
        ClassFunction::new(self.values[chi].clone())
    }

    /// Eigenvalues of a representing matrix on class `k` as
    /// `(exponent over n, multiplicity)`.
    pub fn eigenvalues(&self, chi: usize, class: usize) -> &[(u32, u32)] {
        &self.eigen[chi][class]
    }

    /// `χ_H` written over `Z[ζ_m]`, where `fusion` maps the classes of `H`
    /// into those of this table and `m` is a multiple of `exp(H)`. Values
    /// are rebuilt from eigenvalues, each of which is an `o(g)`-th root of
    /// unity with `o(g) | m`.
    pub fn restrict_into(&self, chi: usize, fusion: &[usize], target: &Ring) -> Result<ClassFunction> {
        let n = self.modulus() as u64;
        let m = target.modulus() as u64;
        let values = fusion
            .iter()
            .map(|&k| {
                let mut acc = DenseAccumulator::new(target);
                for &(e, mult) in &self.eigen[chi][k] {
                    let scaled = e as u64 * m;
                    if scaled % n != 0 {
                        return Err(precondition!("class {k} has elements of order not dividing {m}"));
                    }
                    acc.add_term(scaled / n, &BigInt::from(mult));
                }
                Ok(acc.finish())
            })
            .collect::<Result<_>>()?;
        Ok(ClassFunction::new(values))
    }

    /// Index of the row equal to `f`, if `f` is irreducible.
    pub fn find_row(&self, f: &ClassFunction) -> Option<usize> {
        if f.len() != self.len() {
            return None;
        }
        let key: Vec<Small> = f.values.iter().map(|v| v.embed(&self.ring).map(|v| small_terms(&v))).collect::<Option<_>>()?;
        self.lookup.get(&key).copied()
    }

    /// Row of `sub` equal to `χ_H` when the restriction is irreducible, with
    /// `fusion` mapping the classes of `H` into this table. Compared through
    /// eigenvalues, which determine a character; rescaling exponents to the
    /// modulus of `sub` keeps them sorted.
    pub fn restriction_row(&self, chi: usize, fusion: &[usize], sub: &CharacterTable) -> Option<usize> {
        let (n, m) = (self.modulus() as u64, sub.modulus() as u64);
        if fusion.len() != sub.len() {
            return None;
        }
        let exact = fusion.iter().all(|&k| self.eigen[chi][k].iter().all(|&(e, _)| (e as u64 * m) % n == 0));
        if !exact {
            return None;
        }
        let key = eigen_key(
            fusion.iter().map(|&k| self.eigen[chi][k].iter().map(move |&(e, c)| ((e as u64 * m / n) as u32, c))),
        );
        sub.eigen_lookup.get(&key).copied()
    }

    /// Row of `k ↦ χ(action[k])` for a class permutation induced by an
    /// automorphism, such as conjugation inside a larger group.
    pub fn permuted_row(&self, chi: usize, action: &[usize]) -> usize {
        let key = eigen_key(action.iter().map(|&j| self.eigen[chi][j].iter().copied()));
        *self.eigen_lookup.get(&key).expect("automorphic images of irreducible characters are irreducible")
    }

    /// The row `x ↦ χ(x^m)`.
    pub fn galois_row(&self, chi: usize, m: i64) -> usize {
        let key: Vec<Small> = (0..self.len()).map(|k| self.small[chi][self.classes.power(k, m)].clone()).collect();
        *self.lookup.get(&key).expect("Galois conjugates of irreducible characters are irreducible")
    }

    /// The row of `χψ` when it is irreducible (for instance `ψ` linear).
    pub fn product_row(&self, chi: usize, psi: usize) -> Option<usize> {
        let (chi, xi) = if self.degrees[psi] == 1 { (chi, psi) } else { (psi, chi) };
        if self.degrees[xi] == 1 {
            return Some(self.twist_row(chi, xi));
        }
        self.find_row(&self.character(chi).mul(&self.character(psi)))
    }

    /// The row of `χξ` for linear `ξ`: every eigenvalue of `χ` at a class
    /// is multiplied by the single eigenvalue of `ξ` there.
    fn twist_row(&self, chi: usize, xi: usize) -> usize {
        let n = self.modulus();
        // Adding the shift keeps the pairs sorted except for a rotation at
        // the first exponent that wraps past `n`.
        let key = eigen_key(self.eigen[chi].iter().zip(&self.eigen[xi]).map(|(m, x)| {
            let shift = x[0].0;
            let wrap = m.partition_point(|&(e, _)| e + shift < n);
            m[wrap..].iter().map(move |&(e, c)| (e + shift - n, c)).chain(m[..wrap].iter().map(move |&(e, c)| (e + shift, c)))
        }));
        *self.eigen_lookup.get(&key).expect("a product with a linear character is irreducible")
    }

    /// `⟨χ_a, χ_b⟩` for two rows.
    pub fn row_inner_product(&self, a: usize, b: usize) -> Result<Cyclotomic> {
        let mut acc = SmallAcc::new(self.modulus());
        for k in 0..self.len() {
            acc.add_product_conj(&self.small[a][k], &self.small[b][k], self.classes.size(k) as i128);
        }
        acc.finish(&self.ring)
            .div_exact(&BigInt::from(self.classes.group_order()))
            .ok_or_else(|| internal!("inner product of characters is not integral"))
    }

    /// Multiplicities `⟨f, χ⟩` of every irreducible `χ` in a character `f`.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<BigInt>> {
        let fs: Vec<Small> = f
            .values
            .iter()
            .map(|v| v.embed(&self.ring).map(|v| small_terms(&v)).ok_or_else(|| precondition!("value outside Q(ζ_n)")))
            .collect::<Result<_>>()?;
        (0..self.len())
            .map(|chi| {
                let mut acc = SmallAcc::new(self.modulus());
                for k in 0..self.len() {
                    acc.add_product_conj(&fs[k], &self.small[chi][k], self.classes.size(k) as i128);
                }
                acc.finish(&self.ring)
                    .div_exact(&BigInt::from(self.classes.group_order()))
                    .and_then(|c| c.to_integer())
                    .ok_or_else(|| internal!("multiplicity of an irreducible constituent is not an integer"))
            })
            .collect()
    }

    /// Exact row and column orthogonality.
    pub fn verify_orthogonality(&self) -> Result<()> {
        let r = self.len();
        let order = BigInt::from(self.classes.group_order());
        for a in 0..r {
            for b in a..r {
                let mut acc = SmallAcc::new(self.modulus());
                for k in 0..r {
                    acc.add_product_conj(&self.small[a][k], &self.small[b][k], self.classes.size(k) as i128);
                }
                let expect = if a == b { order.clone() } else { BigInt::zero() };
                if acc.finish(&self.ring) != Cyclotomic::from_integer(&self.ring, expect) {
                    return Err(internal!("row orthogonality fails for characters {a} and {b}"));
                }
            }
        }
        for j in 0..r {
            for k in j..r {
                let mut acc = SmallAcc::new(self.modulus());
                for chi in 0..r {
                    acc.add_product_conj(&self.small[chi][j], &self.small[chi][k], 1);
                }
                let expect = if j == k { BigInt::from(self.classes.centralizer_order(j)) } else { BigInt::zero() };
                if acc.finish(&self.ring) != Cyclotomic::from_integer(&self.ring, expect) {
                    return Err(internal!("column orthogonality fails for classes {j} and {k}"));
                }
            }
        }
        Ok(())
    }

    /// `σ`-fixedness through the power map: `χ(x^m) = χ(x)` for all `x`.
    pub fn sigma_fixed(&self, chi: usize, g: &GaloisElement) -> Result<bool> {
        let m = self.galois_exponent(g)?;
        Ok((0..self.len()).all(|k| self.small[chi][self.classes.power(k, m)] == self.small[chi][k]))
    }

    /// `σ`-fixedness through the coefficient action on every value.
    pub fn sigma_fixed_by_values(&self, chi: usize, g: &GaloisElement) -> Result<bool> {
        self.galois_exponent(g)?;
        for v in &self.values[chi] {
            if apply_galois(v, g)? != *v {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn galois_exponent(&self, g: &GaloisElement) -> Result<i64> {
        let n = self.modulus();
        if g.modulus() % n != 0 {
            return Err(precondition!("Galois element on Q(ζ_{}) does not determine an action on Q(ζ_{n})", g.modulus()));
        }
        Ok(g.exponent_mod(n) as i64)
    }

    /// Order of the linear character `det χ`.
    pub fn determinantal_order(&self, chi: usize) -> u64 {
        let n = self.modulus() as u64;
        (0..self.len()).fold(1, |acc, k| {
            let e = self.eigen[chi][k].iter().fold(0u64, |s, &(e, m)| (s + e as u64 * m as u64) % n);
            num_integer::lcm(acc, n / num_integer::gcd(e, n))
        })
    }

    /// `ker χ`, generated by the classes on which `χ` takes the value `χ(1)`.
    pub fn kernel(&self, chi: usize) -> PermGroup {
        kernel(&self.character(chi), &self.group, &self.classes)
    }
}

pub fn character_table(g: &PermGroup) -> Result<CharacterTable> {
    let classes = Arc::new(ClassData::new(g)?);
    CharacterTable::new(g, classes)
}

pub fn restrict(chi: &ClassFunction, fusion: &[usize]) -> ClassFunction {
    ClassFunction::new(fusion.iter().map(|&k| chi.values[k].clone()).collect())
}

/// `θ^G(g) = |C_G(g)|/|H| · Σ_{L ⊆ K ∩ H} |L| θ(L)`.
pub fn induce(theta: &ClassFunction, classes_h: &ClassData, classes_g: &ClassData, fusion: &[usize]) -> Result<ClassFunction> {
    let ring = theta.values[0].ring().clone();
    let mut sums: Vec<Cyclotomic> = alloc::vec![Cyclotomic::zero(&ring); classes_g.len()];
    for (l, &k) in fusion.iter().enumerate() {
        sums[k] = &sums[k] + &theta.values[l].scale(&BigInt::from(classes_h.size(l)));
    }
    let h = BigInt::from(classes_h.group_order());
    sums.iter()
        .enumerate()
        .map(|(k, s)| {
            s.scale(&BigInt::from(classes_g.centralizer_order(k)))
                .div_exact(&h)
                .ok_or_else(|| internal!("induced class function is not integral"))
        })
        .collect::<Result<_>>()
        .map(ClassFunction::new)
}

/// `(1/|G|) Σ_K |K| α(g_K) conj(β(g_K))`.
pub fn inner_product(alpha: &ClassFunction, beta: &ClassFunction, classes: &ClassData) -> Result<Cyclotomic> {
    let ring = common_ring(alpha.values[0].ring(), beta.values[0].ring());
    let mut acc = DenseAccumulator::new(&ring);
    let big = |k: u64| BigInt::from(k);
    for k in 0..classes.len() {
        acc.add_product(&alpha.values[k], &beta.values[k].conj(), &big(classes.size(k)));
    }
    acc.finish()
        .div_exact(&big(classes.group_order()))
        .ok_or_else(|| internal!("inner product is not an algebraic integer"))
}

/// `χ̃(g) = χ̄(gN)`.
pub fn inflate(chibar: &ClassFunction, quotient: &Quotient, classes_g: &ClassData, classes_q: &ClassData) -> Result<ClassFunction> {
    classes_g
        .reps()
        .iter()
        .map(|g| {
            let k = classes_q.class_of(&quotient.image(g)).ok_or_else(|| internal!("image lies outside the quotient"))?;
            Ok(chibar.values[k].clone())
        })
        .collect::<Result<_>>()
        .map(ClassFunction::new)
}

pub fn kernel(chi: &ClassFunction, g: &PermGroup, classes: &ClassData) -> PermGroup {
    let deg = &chi.values[0];
    let gens: Vec<_> = (1..classes.len()).filter(|&k| chi.values[k] == *deg).map(|k| classes.rep(k).clone()).collect();
    g.normal_closure(&gens)
}

pub fn sigma_fixed(table: &CharacterTable, chi: usize, g: &GaloisElement) -> Result<bool> {
    table.sigma_fixed(chi, g)
}

pub fn determinantal_order(table: &CharacterTable, chi: usize) -> u64 {
    table.determinantal_order(chi)
}
