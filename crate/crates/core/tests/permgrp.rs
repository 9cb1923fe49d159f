mod common;

use common::*;
use galblock_core::permgrp::{
    build_group, centralizer, class_fusion, conjugacy_classes, frattini_index, normal_subgroups, normalizer,
    o_p_prime, sylow_subgroup,
};
use galblock_core::{Error, PermGroup, Permutation};

#[test]
fn build_group_examples() {
    assert_eq!(build_group(3, &[]).unwrap().order(), 1);
    assert_eq!(s3().order(), 6);
    let g = build_group(4, &[perm(4, &[&[0, 1, 2]]), perm(4, &[&[1, 2, 3]])]).unwrap();
    assert_eq!(g.order(), 12);
    assert_eq!(brute_elements(&g).len(), 12);
    assert!(matches!(build_group(3, &[vec![0, 0, 1]]), Err(Error::MalformedPermutation(_))));
    assert!(build_group(3, &[vec![0, 1]]).is_err());
}

#[test]
fn chain_order_matches_closure() {
    let groups = [s3(), a4(), s4(), a5(), sym(5), heisenberg27(), product(&s3(), &s3()), cyclic(9), product(&cyclic(3), &a4())];
    for g in &groups {
        assert_eq!(g.order() as usize, brute_elements(g).len());
        let els: Vec<Vec<u32>> = g.elements().unwrap().into_iter().map(|p| p.images().to_vec()).collect();
        assert_eq!(els, brute_elements(g).into_iter().collect::<Vec<_>>());
    }
}

#[test]
fn class_examples() {
    let c = conjugacy_classes(&s3()).unwrap();
    let mut sizes = c.sizes().to_vec();
    sizes.sort();
    assert_eq!(sizes, [1, 2, 3]);
    let c9 = conjugacy_classes(&cyclic(9)).unwrap();
    assert_eq!(c9.len(), 9);
    assert!(c9.sizes().iter().all(|&s| s == 1));
    let c = conjugacy_classes(&a4()).unwrap();
    let mut sizes = c.sizes().to_vec();
    sizes.sort();
    assert_eq!(sizes, [1, 3, 4, 4]);
}

#[test]
fn class_invariants_against_brute_force() {
    for g in [s4(), a5(), heisenberg27(), product(&s3(), &cyclic(3))] {
        let c = conjugacy_classes(&g).unwrap();
        let mut sizes: Vec<usize> = c.sizes().iter().map(|&s| s as usize).collect();
        sizes.sort();
        assert_eq!(sizes, brute_class_sizes(&g));
        assert_eq!(c.sizes().iter().sum::<u64>(), g.order());
        assert!(c.rep(0).is_identity());
        for j in 0..c.len() {
            assert_eq!(c.power(j, 1), j);
            assert_eq!(c.inverse_class(c.inverse_class(j)), j);
            assert_eq!(g.order() % c.size(j), 0);
            assert_eq!(c.class_of(&c.rep(j).inverse()), Some(c.inverse_class(j)));
            for m in 0..c.exponent() as i64 {
                assert_eq!(c.class_of(&c.rep(j).pow(m)), Some(c.power(j, m)));
            }
        }
    }
}

#[test]
fn sylow_examples() {
    assert_eq!(sylow_subgroup(&a4(), 3).unwrap().order(), 3);
    let c33 = product(&cyclic(3), &cyclic(3));
    assert_eq!(sylow_subgroup(&c33, 3).unwrap().order(), 9);
    let p = sylow_subgroup(&s4(), 3).unwrap();
    assert_eq!(p.order(), 3);
    assert!(p.is_subgroup_of(&s4()));
    assert_eq!(sylow_subgroup(&s4(), 5).unwrap().order(), 1);
    for q in [2, 3, 5] {
        let p = sylow_subgroup(&a5(), q).unwrap();
        assert_eq!(p.order(), galblock_core::arith::p_part(60, q));
        assert!(p.is_p_group(q) && p.is_subgroup_of(&a5()));
    }
}

#[test]
fn sylows_conjugate() {
    // Every conjugate of a Sylow subgroup is again Sylow; the number of them divides the index.
    let g = sym(5);
    let p = sylow_subgroup(&g, 3).unwrap();
    let n = normalizer(&g, &p).unwrap();
    let count = g.order() / n.order();
    assert_eq!(count % 3, 1);
    assert_eq!(count, 10);
}

#[test]
fn frattini_examples() {
    assert_eq!(frattini_index(&cyclic(9), 3).unwrap(), 3);
    assert_eq!(frattini_index(&product(&cyclic(3), &cyclic(3)), 3).unwrap(), 9);
    assert_eq!(frattini_index(&heisenberg27(), 3).unwrap(), 9);
    assert_eq!(frattini_index(&product(&cyclic(9), &cyclic(3)), 3).unwrap(), 9);
    assert!(matches!(frattini_index(&s3(), 3), Err(Error::Precondition(_))));
}

/// |P/Φ(P)| by brute force: the largest elementary-abelian quotient equals the
/// index of the subgroup generated by all commutators and p-th powers.
fn brute_frattini_index(g: &PermGroup, p: i64) -> u64 {
    let els = g.elements().unwrap();
    let mut gens: Vec<Permutation> = Vec::new();
    for x in &els {
        gens.push(x.pow(p));
        for y in &els {
            gens.push(x.commutator(y));
        }
    }
    g.order() / PermGroup::new(g.degree(), gens).unwrap().order()
}

#[test]
fn frattini_matches_brute_force() {
    let wr = {
        // C3 wr C3 on 9 points
        let a = perm(9, &[&[0, 1, 2]]);
        let t = perm(9, &[&[0, 3, 6], &[1, 4, 7], &[2, 5, 8]]);
        group(9, &[a, t])
    };
    for g in [heisenberg27(), wr, product(&cyclic(9), &cyclic(9)), product(&heisenberg27(), &cyclic(3))] {
        assert_eq!(frattini_index(&g, 3).unwrap(), brute_frattini_index(&g, 3));
    }
}

#[test]
fn normalizer_centralizer_examples() {
    let a4 = a4();
    let p = sylow_subgroup(&a4, 3).unwrap();
    assert_eq!(normalizer(&a4, &p).unwrap().order(), 3);
    let s3 = s3();
    let c3 = group(3, &[perm(3, &[&[0, 1, 2]])]);
    assert_eq!(normalizer(&s3, &c3).unwrap().order(), 6);
    assert_eq!(normalizer(&s3, &s3).unwrap().order(), 6);
    assert!(centralizer(&s3, &c3).unwrap().same_group(&c3));
    assert_eq!(centralizer(&s3, &PermGroup::trivial(3)).unwrap().order(), 6);
    let c33 = product(&cyclic(3), &cyclic(3));
    let h = sylow_subgroup(&c33, 3).unwrap();
    assert_eq!(centralizer(&c33, &h).unwrap().order(), 9);
    let outside = group(3, &[perm(3, &[&[0, 1]])]);
    assert!(normalizer(&c3, &outside).is_err());
}

#[test]
fn normalizer_centralizer_brute_force() {
    let g = sym(5);
    let h = group(5, &[perm(5, &[&[0, 1, 2]]), perm(5, &[&[0, 1]])]);
    let n = normalizer(&g, &h).unwrap();
    let c = centralizer(&g, &h).unwrap();
    let hs: std::collections::BTreeSet<_> = brute_elements(&h);
    let mut n_count = 0;
    let mut c_count = 0;
    for x in g.elements().unwrap() {
        let conj: std::collections::BTreeSet<Vec<u32>> =
            hs.iter().map(|y| Permutation::from_images(y.clone()).unwrap().conjugate_by(&x).images().to_vec()).collect();
        if conj == hs {
            n_count += 1;
            assert!(n.contains(&x));
        }
        if h.generators().iter().all(|y| y.compose(&x) == x.compose(y)) {
            c_count += 1;
            assert!(c.contains(&x));
        }
    }
    assert_eq!((n.order(), c.order()), (n_count, c_count));
    assert!(c.is_subgroup_of(&n) && n.is_subgroup_of(&g));
}

#[test]
fn normal_subgroup_examples() {
    let a4 = a4();
    let c = conjugacy_classes(&a4).unwrap();
    let orders: Vec<u64> = normal_subgroups(&a4, &c).iter().map(|n| n.order()).collect();
    assert_eq!(orders, [1, 4, 12]);
    let s4 = s4();
    let c = conjugacy_classes(&s4).unwrap();
    let orders: Vec<u64> = normal_subgroups(&s4, &c).iter().map(|n| n.order()).collect();
    assert_eq!(orders, [1, 4, 12, 24]);
    let c33 = product(&cyclic(3), &cyclic(3));
    let c = conjugacy_classes(&c33).unwrap();
    assert_eq!(normal_subgroups(&c33, &c).len(), 6);
    for n in normal_subgroups(&s4, &conjugacy_classes(&s4).unwrap()) {
        assert!(n.group.is_normal_in(&s4));
    }
}

#[test]
fn o_p_prime_examples() {
    let s3 = s3();
    let c = conjugacy_classes(&s3).unwrap();
    assert_eq!(o_p_prime(&s3, &c, 3).order(), 1);
    assert_eq!(o_p_prime(&s3, &c, 2).order(), 3);
    let h = heisenberg27();
    assert_eq!(o_p_prime(&h, &conjugacy_classes(&h).unwrap(), 3).order(), 1);
    let a4 = a4();
    assert_eq!(o_p_prime(&a4, &conjugacy_classes(&a4).unwrap(), 3).order(), 4);
}

#[test]
fn derived_and_friends() {
    let s3 = s3();
    assert!(s3.derived_subgroup().same_group(&group(3, &[perm(3, &[&[0, 1, 2]])])));
    assert!(cyclic(9).is_cyclic().unwrap());
    assert!(!product(&cyclic(3), &cyclic(3)).is_cyclic().unwrap());
    assert!(a5().is_perfect() && !s4().is_perfect());
    assert_eq!(s4().exponent().unwrap(), 12);
}

#[test]
fn fusion_examples() {
    let s3 = s3();
    let a3 = group(3, &[perm(3, &[&[0, 1, 2]])]);
    let cg = conjugacy_classes(&s3).unwrap();
    let ch = conjugacy_classes(&a3).unwrap();
    let f = class_fusion(&s3, &a3, &cg, &ch).unwrap();
    assert_eq!(f[0], 0);
    assert_eq!(f[1], f[2]);
    assert_eq!(cg.size(f[1]), 2);
    let id = class_fusion(&s3, &s3, &cg, &cg).unwrap();
    assert_eq!(id, (0..cg.len()).collect::<Vec<_>>());
    let t = PermGroup::trivial(3);
    assert_eq!(class_fusion(&s3, &t, &cg, &conjugacy_classes(&t).unwrap()).unwrap(), [0]);
}
