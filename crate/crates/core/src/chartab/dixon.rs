//! Dixon–Schneider: common eigenvectors of the class-multiplication matrices
//! over `F_ℓ`, then the exact lift of every value to `Z[ζ_n]`.

use alloc::vec::Vec;

use hashbrown::HashMap;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::linalg::{charpoly, nullspace, rref, split_roots, Fl};
use crate::arith::{inv_mod, is_prime, isqrt, primitive_root};
use crate::error::{internal, Result};
use crate::permgrp::ClassData;

/// Per character: degree and, for every class, the multiset of eigenvalues
/// of a representing matrix as `(exponent over n, multiplicity)`.
pub(crate) struct Lifted {
    pub degrees: Vec<u64>,
    pub eigen: Vec<Vec<Vec<(u32, u32)>>>,
}

/// Smallest prime `ℓ ≡ 1 (mod n)` with `ℓ > 2√|G|`.
pub fn working_prime(n: u64, order: u64) -> u64 {
    let mut l = n + 1;
    while !(is_prime(l) && l * l > 4 * order) {
        l += n;
    }
    l
}

struct Space {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

struct ClassMatrices<'a> {
    classes: &'a ClassData,
    members: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    rep_index: Vec<usize>,
    cache: Vec<Option<Vec<Vec<u32>>>>,
}

impl<'a> ClassMatrices<'a> {
    fn new(classes: &'a ClassData) -> Self {
        let e = classes.elements();
        let inverse = (0..e.len()).map(|i| e.index_of(&e.get(i).inverse()).unwrap()).collect();
        let rep_index = classes.reps().iter().map(|r| e.index_of(r).unwrap()).collect();
        ClassMatrices {
            classes,
            members: classes.all_members(),
            inverse,
            rep_index,
            cache: alloc::vec![None; classes.len()],
        }
    }

    /// `M_i[j][k] = a_{ijk} = #{x ∈ K_i : x⁻¹g_k ∈ K_j}`.
    fn get(&mut self, i: usize) -> &Vec<Vec<u32>> {
        if self.cache[i].is_none() {
            let r = self.classes.len();
            let e = self.classes.elements();
            let mut m = alloc::vec![alloc::vec![0u32; r]; r];
            for &x in &self.members[i] {
                let xi = self.inverse[x];
                for (k, &g) in self.rep_index.iter().enumerate() {
                    let j = self.classes.class_of_index(e.mul(xi, g));
                    m[j][k] += 1;
                }
            }
            self.cache[i] = Some(m);
        }
        self.cache[i].as_ref().unwrap()
    }
}

/// `A[a][b]` with `M·w_a = Σ_b A[a][b] w_b` for the basis rows `w_a`.
fn restrict(m: &[Vec<u32>], space: &Space, f: Fl) -> Vec<Vec<u64>> {
    space
        .basis
        .iter()
        .map(|w| {
            space
                .pivots
                .iter()
                .map(|&pb| {
                    m[pb].iter().zip(w).fold(0u64, |acc, (&c, &x)| f.add(acc, f.mul(c as u64 % f.l, x)))
                })
                .collect()
        })
        .collect()
}

fn is_scalar(a: &[Vec<u64>]) -> bool {
    a.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, &x)| if i == j { x == a[0][0] } else { x == 0 }))
}

/// Row vectors `v, vA, …, vA^{d−1}` for a fixed pseudo-random `v`.
fn krylov(a: &[Vec<u64>], f: Fl) -> Vec<Vec<u64>> {
    let d = a.len();
    let mut x = 0x9e37_79b9_7f4a_7c15u64;
    let mut v: Vec<u64> = (0..d)
        .map(|_| {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            x % f.l
        })
        .collect();
    let mut out = Vec::with_capacity(d);
    for _ in 0..d {
        let mut next = alloc::vec![0u64; d];
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                for (y, &m) in next.iter_mut().zip(&a[i]) {
                    *y = f.add(*y, f.mul(c, m));
                }
            }
        }
        out.push(core::mem::replace(&mut v, next));
    }
    out
}

fn eval(poly: &[u64], x: u64, f: Fl) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Splits `space` along the left eigenspaces of `a`; `None` when `a` has a
/// single eigenvalue.
///
/// A simple root `λ` of `p = charpoly(a)` has the eigenvector `v·q(a)` with
/// `q = p/(x − λ)`, since `a` is diagonalizable; this is nonzero unless `v`
/// has no component along `λ`, in which case the nullspace is used.
fn split(space: &Space, a: &[Vec<u64>], f: Fl) -> Result<Option<Vec<Space>>> {
    if is_scalar(a) {
        return Ok(None);
    }
    let d = a.len();
    let p = charpoly(a, f);
    let roots = split_roots(&p, f).ok_or_else(|| internal!("class matrix does not split over F_{}", f.l))?;
    if roots.len() < 2 {
        return Ok(None);
    }
    let dp: Vec<u64> = p.iter().enumerate().skip(1).map(|(i, &c)| f.mul(i as u64 % f.l, c)).collect();
    let mut kry: Option<Vec<Vec<u64>>> = None;
    let mut out = Vec::with_capacity(roots.len());
    let mut total = 0;
    for lam in roots {
        let mut coords = Vec::new();
        if eval(&dp, lam, f) != 0 {
            let k = kry.get_or_insert_with(|| krylov(a, f));
            // q = p / (x − λ), low coefficient first
            let mut q = alloc::vec![0u64; d];
            let mut acc = 0;
            for i in (1..=d).rev() {
                acc = f.add(f.mul(acc, lam), p[i]);
                q[i - 1] = acc;
            }
            let mut c = alloc::vec![0u64; d];
            for (&qj, kj) in q.iter().zip(k.iter()) {
                if qj != 0 {
                    for (x, &y) in c.iter_mut().zip(kj) {
                        *x = f.add(*x, f.mul(qj, y));
                    }
                }
            }
            if c.iter().any(|&x| x != 0) {
                coords.push(c);
            }
        }
        if coords.is_empty() {
            // c·(A − λI) = 0  ⇔  (A − λI)^T c = 0
            let t: Vec<Vec<u64>> = (0..d)
                .map(|j| (0..d).map(|i| if i == j { f.sub(a[i][j], lam) } else { a[i][j] }).collect())
                .collect();
            coords = nullspace(&t, d, f);
        }
        total += coords.len();
        let r = space.basis[0].len();
        let mut basis: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                let mut v = alloc::vec![0u64; r];
                for (ca, w) in c.iter().zip(&space.basis) {
                    if *ca != 0 {
                        for (x, &y) in v.iter_mut().zip(w) {
                            *x = f.add(*x, f.mul(*ca, y));
                        }
                    }
                }
                v
            })
            .collect();
        let pivots = rref(&mut basis, f);
        out.push(Space { basis, pivots });
    }
    if total != d {
        return Err(internal!("restricted class matrix is not diagonalizable over F_{}", f.l));
    }
    Ok(Some(out))
}

fn refine(spaces: Vec<Space>, mut matrix_for: impl FnMut(&Space) -> Option<Vec<Vec<u64>>>, f: Fl) -> Result<Vec<Space>> {
    let mut out = Vec::with_capacity(spaces.len());
    for s in spaces {
        if s.basis.len() == 1 {
            out.push(s);
            continue;
        }
        let Some(a) = matrix_for(&s) else {
            out.push(s);
            continue;
        };
        match split(&s, &a, f)? {
            Some(parts) => out.extend(parts),
            None => out.push(s),
        }
    }
    Ok(out)
}

/// Central characters `ω_χ` modulo `ℓ`, one vector per irreducible character.
fn central_characters(classes: &ClassData, f: Fl) -> Result<Vec<Vec<u64>>> {
    let r = classes.len();
    let mut identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| (i == j) as u64).collect()).collect();
    let pivots = rref(&mut identity, f);
    let mut spaces = alloc::vec![Space { basis: identity, pivots }];
    let mut mats = ClassMatrices::new(classes);
    for i in 1..r {
        if spaces.iter().all(|s| s.basis.len() == 1) {
            break;
        }
        let m = mats.get(i).clone();
        spaces = refine(spaces, |s| Some(restrict(&m, s, f)), f)?;
    }
    // Only reachable if the class matrices fail to separate the spaces.
    let mut rng = ChaCha8Rng::seed_from_u64(classes.group_order());
    let mut attempts = 0;
    while spaces.iter().any(|s| s.basis.len() > 1) {
        attempts += 1;
        if attempts > 64 {
            return Err(internal!("eigenspace splitting did not converge"));
        }
        let coeffs: Vec<u64> = (0..r).map(|_| rng.next_u64() % f.l).collect();
        let all: Vec<Vec<Vec<u32>>> = (0..r).map(|i| mats.get(i).clone()).collect();
        spaces = refine(
            spaces,
            |s| {
                let mut acc = alloc::vec![alloc::vec![0u64; s.basis.len()]; s.basis.len()];
                for (i, m) in all.iter().enumerate() {
                    for (row, part) in acc.iter_mut().zip(restrict(m, s, f)) {
                        for (x, y) in row.iter_mut().zip(part) {
                            *x = f.add(*x, f.mul(coeffs[i], y));
                        }
                    }
                }
                Some(acc)
            },
            f,
        )?;
    }
    if spaces.len() != r {
        return Err(internal!("found {} central characters for {r} classes", spaces.len()));
    }
    spaces
        .into_iter()
        .map(|s| {
            let v = s.basis.into_iter().next().unwrap();
            if v[0] != 1 {
                return Err(internal!("central character does not take the value 1 on the identity"));
            }
            Ok(v)
        })
        .collect()
}

pub(crate) fn lift_table(classes: &ClassData) -> Result<Lifted> {
    let order = classes.group_order();
    let n = classes.exponent();
    let l = working_prime(n, order);
    if l >= 1 << 32 {
        return Err(internal!("working prime {l} exceeds 32 bits"));
    }
    let f = Fl { l };
    let omegas = central_characters(classes, f)?;
    let r = classes.len();
    let inv_sizes: Vec<u64> = (0..r).map(|k| inv_mod(classes.size(k) % l, l).unwrap()).collect();
    let eps = f.pow(primitive_root(l), (l - 1) / n);
    let bound = isqrt(order);
    let mut dlog: HashMap<u64, u32> = HashMap::with_capacity(n as usize);
    let mut t = 1;
    for i in 0..n as u32 {
        dlog.insert(t, i);
        t = f.mul(t, eps);
    }

    let mut degrees = Vec::with_capacity(r);
    let mut eigen = Vec::with_capacity(r);
    for w in &omegas {
        let s = (0..r).fold(0, |acc, k| f.add(acc, f.mul(f.mul(w[k], w[classes.inverse_class(k)]), inv_sizes[k])));
        if s == 0 {
            return Err(internal!("degenerate central character"));
        }
        let d2 = f.mul(order % l, f.inv(s));
        let deg = (1..=bound)
            .find(|&d| d * d % l == d2 && order % d == 0)
            .ok_or_else(|| internal!("no admissible degree squares to {d2} mod {l}"))?;
        let vals: Vec<u64> = (0..r).map(|k| f.mul(f.mul(w[k], deg % l), inv_sizes[k])).collect();
        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            let o = classes.element_order(k);
            let eps_o = f.pow(eps, n / o);
            let inv_o = f.inv(o % l);
            let mut mult = Vec::new();
            let mut total = 0u64;
            if deg == 1 {
                let e = *dlog.get(&vals[k]).ok_or_else(|| internal!("linear character value is not an n-th root of unity"))?;
                row.push(alloc::vec![(e, 1)]);
                continue;
            }
            for e in 0..o {
                if total == deg {
                    break;
                }
                // m_e = (1/o) Σ_j χ(g^j) ε_o^{−je}
                let step = f.pow(eps_o, (o - e) % o);
                let mut acc = 0;
                let mut t = 1;
                for j in 0..o {
                    acc = f.add(acc, f.mul(vals[classes.power(k, j as i64)], t));
                    t = f.mul(t, step);
                }
                let m = f.mul(acc, inv_o);
                if m > deg {
                    return Err(internal!("eigenvalue multiplicity {m} exceeds the degree {deg}"));
                }
                if m > 0 {
                    mult.push(((e * (n / o)) as u32, m as u32));
                    total += m;
                }
            }
            if total != deg {
                return Err(internal!("eigenvalue multiplicities do not sum to the degree"));
            }
            row.push(mult);
        }
        degrees.push(deg);
        eigen.push(row);
    }
    Ok(Lifted { degrees, eigen })
}
