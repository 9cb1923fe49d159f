#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use galblock_core::chartab::CharacterTable;
use galblock_core::cyclo::Cyclotomic;
use galblock_core::permgrp::build_group;
use galblock_core::{PermGroup, Permutation};

pub fn perm(degree: usize, cycles: &[&[u32]]) -> Vec<u32> {
    Permutation::from_cycles(degree, cycles).unwrap().images().to_vec()
}

pub fn group(degree: usize, gens: &[Vec<u32>]) -> PermGroup {
    build_group(degree, gens).unwrap()
}

pub fn cyclic(n: usize) -> PermGroup {
    let g: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    group(n, &[g])
}

/// Direct product acting on the disjoint union of the point sets.
pub fn product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let (da, db) = (a.degree(), b.degree());
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut v: Vec<u32> = g.images().to_vec();
        v.extend((da..da + db).map(|i| i as u32));
        gens.push(v);
    }
    for g in b.generators() {
        let mut v: Vec<u32> = (0..da as u32).collect();
        v.extend(g.images().iter().map(|&i| i + da as u32));
        gens.push(v);
    }
    group(da + db, &gens)
}

pub fn sym(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n.max(1));
    }
    let cyc: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    group(n, &[perm(n, &[&[0, 1]]), cyc])
}

pub fn alt(n: usize) -> PermGroup {
    let gens: Vec<Vec<u32>> = (2..n as u32).map(|k| perm(n, &[&[0, 1, k]])).collect();
    group(n, &gens)
}

pub fn s3() -> PermGroup {
    sym(3)
}
pub fn a4() -> PermGroup {
    alt(4)
}
pub fn s4() -> PermGroup {
    sym(4)
}
pub fn a5() -> PermGroup {
    alt(5)
}

/// Extraspecial 3^{1+2} of exponent 3, as the Heisenberg group acting on F_3^2 × F_3 (27 points).
pub fn heisenberg27() -> PermGroup {
    let idx = |a: u32, b: u32, c: u32| a * 9 + b * 3 + c;
    // (a,b,c)·x = (a+1, b, c + b), (a,b,c)·y = (a, b+1, c)
    let mut x = vec![0u32; 27];
    let mut y = vec![0u32; 27];
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                x[idx(a, b, c) as usize] = idx((a + 1) % 3, b, (c + b) % 3);
                y[idx(a, b, c) as usize] = idx(a, (b + 1) % 3, c);
            }
        }
    }
    group(27, &[x, y])
}

/// Closure of the generators by breadth-first multiplication.
pub fn brute_elements(g: &PermGroup) -> BTreeSet<Vec<u32>> {
    let id: Vec<u32> = (0..g.degree() as u32).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for s in g.generators() {
            let y: Vec<u32> = x.iter().map(|&i| s.images()[i as usize]).collect();
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().map(|&i| b[i as usize]).collect()
}

pub fn inverse(a: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j as usize] = i as u32;
    }
    out
}

/// Brute-force conjugacy class sizes, sorted.
pub fn brute_class_sizes(g: &PermGroup) -> Vec<usize> {
    let els: Vec<Vec<u32>> = brute_elements(g).into_iter().collect();
    let mut done: HashSet<Vec<u32>> = HashSet::new();
    let mut sizes = Vec::new();
    for x in &els {
        if done.contains(x) {
            continue;
        }
        let cls: HashSet<Vec<u32>> = els.iter().map(|h| compose(&compose(&inverse(h), x), h)).collect();
        sizes.push(cls.len());
        done.extend(cls);
    }
    sizes.sort();
    sizes
}

/// PSL(2,7) on the 7 points of the Fano plane.
pub fn psl27() -> PermGroup {
    group(7, &[perm(7, &[&[0, 1, 2, 3, 4, 5, 6]]), perm(7, &[&[1, 2, 4], &[3, 6, 5]]), perm(7, &[&[0, 1], &[2, 5]])])
}

/// Osima's criterion as an independent oracle: χ and ψ are linked when
/// Σ over p-regular classes of |K| χ(g) conj ψ(g) is nonzero; blocks are
/// the connected components.
pub fn osima_blocks(t: &CharacterTable, p: u64) -> Vec<Vec<usize>> {
    let c = t.classes();
    let r = t.len();
    let regular: Vec<usize> = (0..r).filter(|&k| c.element_order(k) % p != 0).collect();
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for a in 0..r {
        for b in a + 1..r {
            let mut s = Cyclotomic::zero(t.ring());
            for &k in &regular {
                let term = &(t.value(a, k) * &t.value(b, k).conj()) * &Cyclotomic::from_integer(t.ring(), c.size(k));
                s = &s + &term;
            }
            if !s.is_zero() {
                let (x, y) = (find(&mut parent, a), find(&mut parent, b));
                parent[x] = y;
            }
        }
    }
    let mut comps: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 0..r {
        let root = find(&mut parent, x);
        comps.entry(root).or_default().push(x);
    }
    let mut out: Vec<Vec<usize>> = comps.into_values().collect();
    out.sort();
    out
}
