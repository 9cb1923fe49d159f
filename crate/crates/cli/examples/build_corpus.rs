//! Regenerates `corpus/fallback.jsonl` and `corpus/extended.jsonl`.
//!
//! Every group comes from an explicit construction: cyclic and dihedral
//! groups, symmetric and alternating groups, affine groups over `Z/n` and
//! `F_p^d`, linear groups on nonzero vectors, Möbius groups on projective
//! lines, direct and wreath products. The extended corpus drops groups
//! whose invariants repeat an earlier entry.
//!
//! ```text
//! cargo run --release -p galblock --example build_corpus -- crates/cli/corpus
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::sync::Arc;

use galblock::corpus::{Oracle, RawRecord};
use galblock_core::chartab::CharacterTable;
use galblock_core::permgrp::{conjugacy_classes, normal_subgroups};
use galblock_core::PermGroup;

type Perm = Vec<u32>;

#[derive(Clone)]
struct G {
    degree: usize,
    gens: Vec<Perm>,
}

impl G {
    fn new(degree: usize, gens: Vec<Perm>) -> Self {
        let gens = gens.into_iter().filter(|g| g.iter().enumerate().any(|(i, &x)| i as u32 != x)).collect();
        G { degree, gens }
    }

    fn perm_group(&self) -> PermGroup {
        PermGroup::from_image_arrays(self.degree, &self.gens).unwrap()
    }

    fn order(&self) -> u64 {
        self.perm_group().order()
    }
}

fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Perm {
    (0..n).map(|i| f(i) as u32).collect()
}

fn cycles(n: usize, cs: &[&[usize]]) -> Perm {
    let mut p: Perm = (0..n as u32).collect();
    for c in cs {
        for i in 0..c.len() {
            p[c[i]] = c[(i + 1) % c.len()] as u32;
        }
    }
    p
}

fn cyclic(n: usize) -> G {
    G::new(n, vec![from_fn(n, |i| (i + 1) % n)])
}

fn dihedral(n: usize) -> G {
    G::new(n, vec![from_fn(n, |i| (i + 1) % n), from_fn(n, |i| (n - i) % n)])
}

fn sym(n: usize) -> G {
    G::new(n, vec![cycles(n, &[&[0, 1]]), from_fn(n, |i| (i + 1) % n)])
}

fn alt(n: usize) -> G {
    G::new(n, (2..n).map(|k| cycles(n, &[&[0, 1, k]])).collect())
}

fn product(a: &G, b: &G) -> G {
    let (da, db) = (a.degree, b.degree);
    let mut gens = Vec::new();
    for g in &a.gens {
        let mut v = g.clone();
        v.extend((da..da + db).map(|i| i as u32));
        gens.push(v);
    }
    for g in &b.gens {
        let mut v: Perm = (0..da as u32).collect();
        v.extend(g.iter().map(|&i| i + da as u32));
        gens.push(v);
    }
    G::new(da + db, gens)
}

/// `A ≀ T` in the imprimitive action on `deg(A) · deg(T)` points.
fn wreath(a: &G, top: &G) -> G {
    let (d, k) = (a.degree, top.degree);
    let mut gens = Vec::new();
    for g in &a.gens {
        gens.push(from_fn(d * k, |x| if x < d { g[x] as usize } else { x }));
    }
    for t in &top.gens {
        gens.push(from_fn(d * k, |x| t[x / d] as usize * d + x % d));
    }
    G::new(d * k, gens)
}

/// `{x ↦ a x + b}` on `Z/n` for `a` in the subgroup generated by `units`.
fn affine_zn(n: usize, units: &[usize]) -> G {
    let mut gens = vec![from_fn(n, |i| (i + 1) % n)];
    for &a in units {
        gens.push(from_fn(n, |i| a * i % n));
    }
    G::new(n, gens)
}

type Mat = Vec<Vec<u64>>;

fn vec_index(v: &[u64], p: u64) -> usize {
    v.iter().rev().fold(0, |acc, &x| acc * p as usize + x as usize)
}

fn index_vec(mut i: usize, d: usize, p: u64) -> Vec<u64> {
    (0..d)
        .map(|_| {
            let x = (i % p as usize) as u64;
            i /= p as usize;
            x
        })
        .collect()
}

fn apply(m: &Mat, v: &[u64], p: u64) -> Vec<u64> {
    (0..v.len()).map(|r| (0..v.len()).map(|c| m[r][c] * v[c]).sum::<u64>() % p).collect()
}

/// `F_p^d ⋊ ⟨mats⟩` on `p^d` points.
fn affine(p: u64, d: usize, mats: &[Mat]) -> G {
    let n = (p as usize).pow(d as u32);
    let mut gens: Vec<Perm> = (0..d)
        .map(|axis| {
            from_fn(n, |i| {
                let mut v = index_vec(i, d, p);
                v[axis] = (v[axis] + 1) % p;
                vec_index(&v, p)
            })
        })
        .collect();
    for m in mats {
        gens.push(from_fn(n, |i| vec_index(&apply(m, &index_vec(i, d, p), p), p)));
    }
    G::new(n, gens)
}

/// `⟨mats⟩ ≤ GL(d, p)` on the `p^d − 1` nonzero vectors.
fn linear(p: u64, d: usize, mats: &[Mat]) -> G {
    let n = (p as usize).pow(d as u32);
    let gens = mats.iter().map(|m| from_fn(n - 1, |i| vec_index(&apply(m, &index_vec(i + 1, d, p), p), p) - 1)).collect();
    G::new(n - 1, gens)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    (1..p).find(|x| a * x % p == 1).unwrap()
}

/// Möbius maps `x ↦ (ax + b)/(cx + d)` on `P^1(F_p)`, point `p` being ∞.
fn mobius(p: u64, maps: &[[u64; 4]]) -> G {
    let n = p as usize + 1;
    let gens = maps
        .iter()
        .map(|&[a, b, c, d]| {
            from_fn(n, |x| {
                if x == p as usize {
                    return if c == 0 { p as usize } else { (a * inv_mod(c, p) % p) as usize };
                }
                let x = x as u64;
                let num = (a * x + b) % p;
                let den = (c * x + d) % p;
                if den == 0 {
                    p as usize
                } else {
                    (num * inv_mod(den, p) % p) as usize
                }
            })
        })
        .collect();
    G::new(n, gens)
}

/// Multiplication in `F_8 = F_2[t]/(t^3 + t + 1)`.
fn f8_mul(a: u8, b: u8) -> u8 {
    let mut r: u16 = 0;
    for i in 0..3 {
        if b >> i & 1 == 1 {
            r ^= (a as u16) << i;
        }
    }
    for i in (3..5).rev() {
        if r >> i & 1 == 1 {
            r ^= 0b1011 << (i - 3);
        }
    }
    r as u8
}

/// `PSL(2,8)` on `P^1(F_8)`, optionally extended by the Frobenius map.
fn psl28(frobenius: bool) -> G {
    const INF: usize = 8;
    let inv = |x: u8| (1..8u8).find(|&y| f8_mul(x, y) == 1).unwrap();
    let translate = from_fn(9, |x| if x == INF { INF } else { (x as u8 ^ 1) as usize });
    let scale = from_fn(9, |x| if x == INF { INF } else { f8_mul(x as u8, 2) as usize });
    let invert = from_fn(9, |x| match x {
        INF => 0,
        0 => INF,
        _ => inv(x as u8) as usize,
    });
    let mut gens = vec![translate, scale, invert];
    if frobenius {
        gens.push(from_fn(9, |x| if x == INF { INF } else { f8_mul(x as u8, x as u8) as usize }));
    }
    G::new(9, gens)
}

fn heisenberg() -> G {
    affine(3, 2, &[vec![vec![1, 1], vec![0, 1]]])
}

fn m(rows: &[&[u64]]) -> Mat {
    rows.iter().map(|r| r.to_vec()).collect()
}

struct Entry {
    id: String,
    group: G,
    flags: Vec<&'static str>,
    oracle: Option<Vec<Vec<u64>>>,
}

fn entry(id: &str, group: G) -> Entry {
    Entry { id: id.into(), group, flags: vec![], oracle: None }
}

fn flagged(id: &str, group: G, flags: &[&'static str]) -> Entry {
    Entry { id: id.into(), group, flags: flags.to_vec(), oracle: None }
}

fn with_oracle(mut e: Entry, blocks: &[&[u64]]) -> Entry {
    e.oracle = Some(blocks.iter().map(|b| b.to_vec()).collect());
    e
}

const SIMPLE: &[&str] = &["simple", "almost_simple", "perfect"];
const ALMOST: &[&str] = &["almost_simple"];

fn fallback() -> Vec<Entry> {
    let c = cyclic;
    let gl23 = [m(&[&[1, 1], &[0, 1]]), m(&[&[0, 1], &[2, 0]]), m(&[&[2, 0], &[0, 1]])];
    let sl23 = [m(&[&[1, 1], &[0, 1]]), m(&[&[1, 0], &[1, 1]])];
    vec![
        entry("C1", G::new(1, vec![])),
        entry("C2", c(2)),
        with_oracle(entry("C3", c(3)), &[&[1, 1, 1]]),
        entry("C5", c(5)),
        entry("C6", c(6)),
        entry("C9", c(9)),
        entry("C27", c(27)),
        entry("C3xC3", product(&c(3), &c(3))),
        entry("C3xC6", product(&c(3), &c(6))),
        entry("C3xC9", product(&c(3), &c(9))),
        entry("C3^3", product(&product(&c(3), &c(3)), &c(3))),
        with_oracle(entry("S3", sym(3)), &[&[1, 1, 2]]),
        entry("D10", dihedral(5)),
        entry("D12", dihedral(6)),
        entry("D18", dihedral(9)),
        with_oracle(entry("A4", alt(4)), &[&[1, 1, 1], &[3]]),
        with_oracle(entry("S4", sym(4)), &[&[1, 1, 2], &[3], &[3]]),
        entry("SL(2,3)", linear(3, 2, &sl23)),
        entry("GL(2,3)", linear(3, 2, &gl23)),
        entry("C7:C3", affine_zn(7, &[2])),
        entry("C7:C6", affine_zn(7, &[3])),
        entry("C13:C3", affine_zn(13, &[3])),
        entry("C9:C6", affine_zn(9, &[2])),
        entry("3^1+2:exp3", heisenberg()),
        entry("3^1+2:exp9", affine_zn(9, &[4])),
        entry("C3^2:C2", affine(3, 2, &[m(&[&[2, 0], &[0, 2]])])),
        entry("C3wrC2", wreath(&c(3), &c(2))),
        entry("C3^2:C4", affine(3, 2, &[m(&[&[0, 1], &[2, 0]])])),
        entry("C3^2:Q8", affine(3, 2, &[m(&[&[0, 1], &[2, 0]]), m(&[&[1, 1], &[1, 2]])])),
        entry("C3^2:C8", affine(3, 2, &[m(&[&[0, 1], &[1, 1]])])),
        entry("C3wrC3", wreath(&c(3), &c(3))),
        entry("S3xC3", product(&sym(3), &c(3))),
        entry("S3xS3", product(&sym(3), &sym(3))),
        entry("A4xC3", product(&alt(4), &c(3))),
        entry("A4xC2", product(&alt(4), &c(2))),
        entry("S3wrC2", wreath(&sym(3), &c(2))),
        entry("S4xC3", product(&sym(4), &c(3))),
        entry("A4xS3", product(&alt(4), &sym(3))),
        entry("A4xA4", product(&alt(4), &alt(4))),
        entry("S3xS3xS3", product(&product(&sym(3), &sym(3)), &sym(3))),
        entry("ASL(2,3)", affine(3, 2, &sl23)),
        entry("C3xSL(2,3)", product(&c(3), &linear(3, 2, &sl23))),
        with_oracle(flagged("A5", alt(5), SIMPLE), &[&[1, 4, 5], &[3], &[3]]),
        flagged("S5", sym(5), ALMOST),
        entry("A5xC3", product(&alt(5), &c(3))),
        entry("A5xS3", product(&alt(5), &sym(3))),
        flagged("A6", alt(6), SIMPLE),
        flagged("S6", sym(6), ALMOST),
        with_oracle(
            flagged("PSL(2,7)", mobius(7, &[[1, 1, 0, 1], [2, 0, 0, 1], [0, 6, 1, 0]]), SIMPLE),
            &[&[1, 7, 8], &[3], &[3], &[6]],
        ),
        flagged("PGL(2,7)", mobius(7, &[[1, 1, 0, 1], [3, 0, 0, 1], [0, 6, 1, 0]]), ALMOST),
        flagged("PSL(2,8)", psl28(false), SIMPLE),
        flagged("PSL(2,11)", mobius(11, &[[1, 1, 0, 1], [4, 0, 0, 1], [0, 10, 1, 0]]), SIMPLE),
        flagged("PGammaL(2,8)", psl28(true), ALMOST),
        flagged("A7", alt(7), SIMPLE),
    ]
}

/// Invariants used to drop repeated isomorphism types from the generated
/// families: order, class sizes with element orders, character degrees and
/// the orders of the normal subgroups.
fn fingerprint(g: &PermGroup) -> Vec<u64> {
    let classes = Arc::new(conjugacy_classes(g).unwrap());
    let mut cls: Vec<(u64, u64)> = (0..classes.len()).map(|k| (classes.size(k), classes.element_order(k))).collect();
    cls.sort();
    let table = CharacterTable::new(g, classes.clone()).unwrap();
    let mut degrees = table.degrees().to_vec();
    degrees.sort();
    let mut normals: Vec<u64> = normal_subgroups(g, &classes).iter().map(|n| n.order()).collect();
    normals.sort();
    let mut out = vec![g.order(), cls.len() as u64];
    out.extend(cls.iter().flat_map(|&(a, b)| [a, b]));
    out.push(u64::MAX);
    out.extend(degrees);
    out.push(u64::MAX);
    out.extend(normals);
    out
}

fn units(n: usize) -> Vec<usize> {
    (1..n).filter(|&a| num_gcd(a, n) == 1).collect()
}

fn num_gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn mul_order(a: usize, n: usize) -> usize {
    let mut x = a % n;
    let mut k = 1;
    while x != 1 % n {
        x = x * a % n;
        k += 1;
    }
    k
}

/// Every matrix in `GL(d, p)`.
fn all_matrices(p: u64, d: usize) -> Vec<Mat> {
    let count = (p as usize).pow((d * d) as u32);
    (0..count)
        .map(|i| {
            let flat = index_vec(i, d * d, p);
            (0..d).map(|r| flat[r * d..(r + 1) * d].to_vec()).collect::<Mat>()
        })
        .filter(|mat| {
            // invertible iff the linear action on vectors is injective
            let n = (p as usize).pow(d as u32);
            let imgs: BTreeSet<usize> = (0..n).map(|i| vec_index(&apply(mat, &index_vec(i, d, p), p), p)).collect();
            imgs.len() == n
        })
        .collect()
}

fn generated(cands: Vec<(String, G)>, max_order: u64, out: &mut Vec<(String, G)>) {
    for (id, g) in cands {
        let o = g.order();
        if o <= max_order && o % 3 == 0 {
            out.push((id, g));
        }
    }
}

fn extended() -> Vec<(String, G)> {
    let mut out = Vec::new();
    let max = 400;

    let mut c = Vec::new();
    for n in (3..=max as usize).step_by(3) {
        c.push((format!("C{n}"), cyclic(n)));
    }
    for n in [3usize, 6, 9, 12, 15, 18, 21, 24, 27, 30, 33, 36, 39, 42, 45, 48, 51, 54, 57, 60, 63, 66, 69, 75, 81, 87, 93, 99, 105, 111, 117, 123, 129, 135, 141, 147, 153, 159, 165, 171, 177, 183, 189, 195, 200] {
        c.push((format!("D{}", 2 * n), dihedral(n)));
    }
    generated(c, max, &mut out);

    // Z/n ⋊ C for cyclic and two-generated subgroups C of the unit group.
    let mut c = Vec::new();
    for n in 2..=133usize {
        let us = units(n);
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        for &a in &us {
            if a == 1 {
                continue;
            }
            let k = mul_order(a, n);
            if n * k > max as usize {
                continue;
            }
            let sub: BTreeSet<usize> = (0..k).map(|e| (0..e).fold(1 % n, |x, _| x * a % n)).collect();
            if seen.insert(sub) {
                c.push((format!("Aff(Z{n},<{a}>)"), affine_zn(n, &[a])));
            }
        }
        for (i, &a) in us.iter().enumerate() {
            for &b in &us[i + 1..] {
                if a == 1 || b == 1 {
                    continue;
                }
                let mut sub: BTreeSet<usize> = BTreeSet::from([1 % n]);
                loop {
                    let next: BTreeSet<usize> =
                        sub.iter().flat_map(|&x| [x * a % n, x * b % n]).chain(sub.iter().copied()).collect();
                    if next.len() == sub.len() {
                        break;
                    }
                    sub = next;
                }
                if n * sub.len() <= max as usize && seen.insert(sub) {
                    c.push((format!("Aff(Z{n},<{a},{b}>)"), affine_zn(n, &[a, b])));
                }
            }
        }
    }
    generated(c, max, &mut out);

    // F_p^2 ⋊ H for H generated by one or two matrices (p = 2, 3, 5, 7),
    // and F_2^3 ⋊ H, F_3^3 ⋊ H for one generator.
    let mut c = Vec::new();
    for (p, d, pairs) in [(2u64, 2usize, true), (3, 2, true), (5, 2, true), (7, 2, false), (2, 3, true), (3, 3, false)] {
        let mats = all_matrices(p, d);
        let lim = max / (p.pow(d as u32));
        let mut seen: BTreeSet<Vec<Perm>> = BTreeSet::new();
        let key = |g: &G| {
            let pg = g.perm_group();
            let mut e: Vec<Perm> = pg.elements().unwrap().iter().map(|x| x.images().to_vec()).collect();
            e.sort();
            e
        };
        for (i, a) in mats.iter().enumerate() {
            let h = linear(p, d, &[a.clone()]);
            if h.order() > lim {
                continue;
            }
            if seen.insert(key(&h)) {
                c.push((format!("F{p}^{d}:<m{i}>"), affine(p, d, &[a.clone()])));
            }
            if !pairs {
                continue;
            }
            for (j, b) in mats.iter().enumerate().skip(i + 1) {
                let h = linear(p, d, &[a.clone(), b.clone()]);
                if h.order() > lim || h.order() > 48 {
                    continue;
                }
                if seen.insert(key(&h)) {
                    c.push((format!("F{p}^{d}:<m{i},m{j}>"), affine(p, d, &[a.clone(), b.clone()])));
                }
            }
        }
        for (i, a) in mats.iter().enumerate() {
            let h = linear(p, d, &[a.clone()]);
            if d == 2 && p == 3 && h.order() % 3 == 0 && h.order() <= 48 && seen.insert(key(&h)) {
                c.push((format!("GL-sub F3^2 <m{i}>"), h));
            }
        }
    }
    generated(c, max, &mut out);

    // Direct products of small groups and wreath products.
    let small: Vec<(&str, G)> = vec![
        ("C2", cyclic(2)),
        ("C3", cyclic(3)),
        ("C4", cyclic(4)),
        ("C2^2", product(&cyclic(2), &cyclic(2))),
        ("C5", cyclic(5)),
        ("C6", cyclic(6)),
        ("S3", sym(3)),
        ("C7", cyclic(7)),
        ("C8", cyclic(8)),
        ("D8", dihedral(4)),
        ("Q8", linear(3, 2, &[m(&[&[0, 1], &[2, 0]]), m(&[&[1, 1], &[1, 2]])])),
        ("C9", cyclic(9)),
        ("C3^2", product(&cyclic(3), &cyclic(3))),
        ("D10", dihedral(5)),
        ("A4", alt(4)),
        ("D12", dihedral(6)),
        ("Dic12", G::new(7, vec![cycles(7, &[&[0, 1, 2]]), cycles(7, &[&[1, 2], &[3, 4, 5, 6]])])),
        ("C7:C3", affine_zn(7, &[2])),
        ("S4", sym(4)),
        ("SL(2,3)", linear(3, 2, &[m(&[&[1, 1], &[0, 1]]), m(&[&[1, 0], &[1, 1]])])),
        ("3^1+2", heisenberg()),
        ("C9:C3", affine_zn(9, &[4])),
        ("D18", dihedral(9)),
        ("C3^2:C2", affine(3, 2, &[m(&[&[2, 0], &[0, 2]])])),
        ("C3^2:C4", affine(3, 2, &[m(&[&[0, 1], &[2, 0]])])),
        ("A5", alt(5)),
        ("C13:C3", affine_zn(13, &[3])),
        ("C9:C6", affine_zn(9, &[2])),
        ("C3wrC2", wreath(&cyclic(3), &cyclic(2))),
    ];
    let mut c = Vec::new();
    for (i, (na, a)) in small.iter().enumerate() {
        for (nb, b) in &small[i..] {
            c.push((format!("{na}x{nb}"), product(a, b)));
        }
    }
    for (i, (na, a)) in small.iter().enumerate().take(14) {
        for (j, (nb, b)) in small.iter().enumerate().skip(i).take(10) {
            for (nc, cc) in &small[j..std::cmp::min(j + 6, small.len())] {
                c.push((format!("{na}x{nb}x{nc}"), product(&product(a, b), cc)));
            }
        }
    }
    for (name, a) in [("C2", cyclic(2)), ("C3", cyclic(3)), ("S3", sym(3)), ("C4", cyclic(4)), ("C2^2", product(&cyclic(2), &cyclic(2)))] {
        for (tn, t) in [("C2", cyclic(2)), ("C3", cyclic(3)), ("S3", sym(3))] {
            c.push((format!("{name}wr{tn}"), wreath(&a, &t)));
        }
    }
    generated(c, max, &mut out);
    out
}

fn record(id: &str, g: &G, flags: &[&'static str], oracle: Option<Vec<Vec<u64>>>) -> String {
    let raw = RawRecord {
        id: id.to_string(),
        degree: g.degree,
        generators: g.gens.clone(),
        order: Some(g.order()),
        flags: flags.iter().map(|s| s.to_string()).collect(),
        oracle: oracle.map(|b| Oracle { block_sizes: Some(b) }),
    };
    serde_json::to_string(&raw).unwrap()
}

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "crates/cli/corpus".into());
    let mut seen: BTreeMap<Vec<u64>, String> = BTreeMap::new();

    let mut fb = std::fs::File::create(format!("{dir}/fallback.jsonl")).unwrap();
    for e in fallback() {
        let pg = e.group.perm_group();
        if pg.order() <= 1000 {
            seen.entry(fingerprint(&pg)).or_insert_with(|| e.id.clone());
        }
        writeln!(fb, "{}", record(&e.id, &e.group, &e.flags, e.oracle)).unwrap();
    }

    let mut ext = std::fs::File::create(format!("{dir}/extended.jsonl")).unwrap();
    let mut kept = 0;
    let mut by_order: BTreeMap<u64, usize> = BTreeMap::new();
    for (id, g) in extended() {
        let fp = fingerprint(&g.perm_group());
        if seen.contains_key(&fp) {
            continue;
        }
        seen.insert(fp, id.clone());
        *by_order.entry(g.order()).or_default() += 1;
        writeln!(ext, "{}", record(&id, &g, &[], None)).unwrap();
        kept += 1;
    }
    eprintln!("extended corpus: {kept} groups; by order: {by_order:?}");
}
