mod common;

use common::*;
use galblock_core::theorems::*;
use galblock_core::PermGroup;

fn ctx(name: &str, g: PermGroup) -> GroupContext {
    GroupContext::new(name, g, 3, Flags::default()).unwrap()
}

fn flagged(name: &str, g: PermGroup, simple: bool) -> GroupContext {
    let flags = Flags { simple, almost_simple: true, perfect: simple };
    GroupContext::new(name, g, 3, flags).unwrap()
}

fn int(r: &CheckReport, key: &str) -> i64 {
    match r.witness.get(key) {
        Some(Value::Int(v)) => *v,
        other => panic!("{key}: {other:?} in {r:?}"),
    }
}

fn is_skip(r: &CheckReport, text: &str) -> bool {
    matches!(&r.status, Status::Skipped(s) if s.contains(text))
}

/// Index of the normal subgroup equal to the group generated by `gens`.
fn normal_index(c: &GroupContext, gens: &[Vec<u32>]) -> usize {
    let h = group(c.group().degree(), gens);
    (0..c.normal_count()).find(|&i| c.normal_subgroup(i).group.same_group(&h)).expect("normal subgroup")
}

fn c3xc3() -> PermGroup {
    product(&cyclic(3), &cyclic(3))
}

#[test]
fn registry() {
    assert_eq!(resolve_check("check_theorem_a"), Some("theorem_a"));
    assert_eq!(resolve_check("murai_domination"), Some("murai_domination"));
    assert_eq!(resolve_check("theorem_c"), None);
    let c = ctx("C3", cyclic(3));
    let r = run_check(&c, "nope", &SweepBudget::default());
    assert!(r.status.is_fail());
    for name in CHECK_NAMES {
        assert_eq!(run_check(&c, name, &SweepBudget::default()).check_name, name);
    }
}

#[test]
fn theorem_a_examples() {
    let r = check_theorem_a(&ctx("C3xC3", c3xc3())).unwrap();
    assert_eq!((r.status.clone(), int(&r, "k0sigma"), int(&r, "frattini_index")), (Status::Pass, 9, 9));
    let r = check_theorem_a(&ctx("A4", a4())).unwrap();
    assert_eq!((r.status.clone(), int(&r, "k0sigma")), (Status::Pass, 3));
    let r = check_theorem_a(&ctx("S3xS3", product(&s3(), &s3()))).unwrap();
    assert_eq!((r.status.clone(), int(&r, "k0sigma"), int(&r, "frattini_index")), (Status::Pass, 9, 9));
    let r = check_theorem_a(&ctx("3^1+2", heisenberg27())).unwrap();
    assert_eq!(int(&r, "frattini_index"), 9);
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.witness.get("converse_holds"), Some(&Value::Bool(true)));
    let r = check_theorem_a(&ctx("C2", cyclic(2))).unwrap();
    assert_eq!((int(&r, "k0sigma"), int(&r, "frattini_index")), (1, 1));
    let c = GroupContext::new("C2", cyclic(2), 2, Flags::default()).unwrap();
    assert!(is_skip(&check_theorem_a(&c).unwrap(), "p = 3"));
}

#[test]
fn theorem_b_examples() {
    let c = ctx("A4", a4());
    let r = check_theorem_b(&c, 0, &c.sigma()).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!((int(&r, "count_g"), int(&r, "count_normalizer"), int(&r, "normalizer_order")), (3, 3, 3));
    let c = ctx("S3", s3());
    let r = check_theorem_b(&c, 0, &c.sigma()).unwrap();
    assert_eq!((r.status.clone(), int(&r, "normalizer_order")), (Status::Pass, 6));
    let c = ctx("3^1+2", heisenberg27());
    assert!(is_skip(&check_theorem_b(&c, 0, &c.sigma()).unwrap(), "G/N Sylow not cyclic"));
    // N = Z(P) is abelian with P/N = C3 x C3 noncyclic; a maximal subgroup works.
    assert_eq!(sweep_theorem_b(&c, &SweepBudget::default()).unwrap().status, Status::Pass);
    let c = ctx("C2", cyclic(2));
    assert!(is_skip(&sweep_theorem_b(&c, &SweepBudget::default()).unwrap(), "p does not divide"));
    for (name, g) in [("S4", s4()), ("C9", cyclic(9)), ("S3xC3", product(&s3(), &cyclic(3))), ("A5", a5())] {
        let c = ctx(name, g);
        assert_eq!(sweep_theorem_b(&c, &SweepBudget::default()).unwrap().status, Status::Pass, "{name}");
    }
}

#[test]
fn cyclic_sylow_examples() {
    for (name, g, k, cyc) in [("C9", cyclic(9), 3, true), ("S4", s4(), 3, true), ("C3xC3", c3xc3(), 9, false)] {
        let r = check_cyclic_sylow_count(&ctx(name, g)).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(int(&r, "k0sigma"), k);
        assert_eq!(r.witness.get("sylow_cyclic"), Some(&Value::Bool(cyc)));
    }
    assert!(is_skip(&check_cyclic_sylow_count(&ctx("C4", cyclic(4))).unwrap(), "3 does not divide"));
}

#[test]
fn kernel_lemma_examples() {
    let r = check_kernel_lemma(&ctx("C3xC3", c3xc3())).unwrap();
    assert_eq!((r.status.clone(), int(&r, "kernel_order")), (Status::Pass, 1));
    let r = check_kernel_lemma(&ctx("A4", a4())).unwrap();
    assert!(is_skip(&r, "O_{p'}"));
    assert_eq!(int(&r, "o_p_prime_order"), 4);
    let r = check_kernel_lemma(&ctx("S3", s3())).unwrap();
    assert_eq!((r.status.clone(), int(&r, "kernel_order"), int(&r, "frattini_order")), (Status::Pass, 1, 1));
    // Kernel equal to a nontrivial Frattini subgroup: C9 has kernel 1, 3^{1+2} has kernel Z.
    let r = check_kernel_lemma(&ctx("3^1+2", heisenberg27())).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert!(int(&r, "kernel_order") <= int(&r, "frattini_order"));
}

#[test]
fn relative_divisibility_examples() {
    let c = ctx("C3", cyclic(3));
    let r = check_relative_divisibility(&c, 0, 0).unwrap();
    assert_eq!((r.status.clone(), int(&r, "count")), (Status::Pass, 3));
    assert!(is_skip(&check_relative_divisibility(&c, 1, 0).unwrap(), "p does not divide |G:N|"));
    let c = ctx("C3xC3", c3xc3());
    let n = normal_index(&c, &[perm(6, &[&[0, 1, 2]])]);
    let data = c.normal_data(n).unwrap();
    for theta in 1..3 {
        assert_eq!(data.table.degree(theta), 1);
        let r = check_relative_divisibility(&c, n, theta).unwrap();
        assert_eq!((r.status.clone(), int(&r, "count")), (Status::Pass, 3));
    }
    for (name, g) in [("S3xS3", product(&s3(), &s3())), ("3^1+2", heisenberg27()), ("S4", s4())] {
        let r = sweep_relative_divisibility(&ctx(name, g), &SweepBudget::default()).unwrap();
        assert_eq!(r.status, Status::Pass, "{name}: {r:?}");
    }
}

#[test]
fn p_action_examples() {
    let c = ctx("C3", cyclic(3));
    let r = check_p_action_count(&c, 1).unwrap();
    assert_eq!((r.status.clone(), int(&r, "invariant_count")), (Status::Pass, 3));
    assert!(is_skip(&check_p_action_count(&c, 0).unwrap(), "p does not divide |K|"));
    // K = C3 x C3 inside 3^{1+2}; P acts by a nontrivial unipotent automorphism.
    let c = ctx("3^1+2", heisenberg27());
    let k = (0..c.normal_count()).find(|&i| c.normal_subgroup(i).order() == 9).unwrap();
    let r = check_p_action_count(&c, k).unwrap();
    assert_eq!((r.status.clone(), int(&r, "invariant_count")), (Status::Pass, 3));
    assert_eq!(sweep_p_action_count(&c, &SweepBudget::default()).unwrap().status, Status::Pass);
}

#[test]
fn alperin_dade_examples() {
    let c = ctx("S3", s3());
    let top = c.normal_count() - 1;
    assert_eq!(check_alperin_dade(&c, top).unwrap().status, Status::Pass);
    let a3 = normal_index(&c, &[perm(3, &[&[0, 1, 2]])]);
    assert!(is_skip(&check_alperin_dade(&c, a3).unwrap(), "proper subgroup"));
    let c = ctx("C3xC2", product(&cyclic(3), &cyclic(2)));
    let n = normal_index(&c, &[perm(5, &[&[0, 1, 2]])]);
    let r = check_alperin_dade(&c, n).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.witness.get("images").map(|v| matches!(v, Value::List(l) if l.len() == 3)), Some(true));
    assert_eq!(sweep_alperin_dade(&ctx("A4xC2", product(&a4(), &cyclic(2))), &SweepBudget::default()).unwrap().status, Status::Pass);
}

#[test]
fn invariant_constituent_examples() {
    let c = ctx("S3", s3());
    let sigma = c.sigma();
    let top = c.normal_count() - 1;
    for chi in 0..3 {
        let r = check_invariant_constituent(&c, top, chi, &sigma).unwrap();
        assert_eq!(r.status, Status::Pass);
    }
    let a3 = normal_index(&c, &[perm(3, &[&[0, 1, 2]])]);
    assert_eq!(c.table().degree(2), 2);
    let r = check_invariant_constituent(&c, a3, 2, &sigma).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.witness.get("invariant_constituents"), Some(&Value::List(vec![Value::Int(1), Value::Int(2)])));
    let r = check_invariant_constituent(&c, a3, 0, &sigma).unwrap();
    assert_eq!(r.witness.get("invariant_constituents"), Some(&Value::List(vec![Value::Int(0)])));
    for (name, g) in [("S4", s4()), ("3^1+2", heisenberg27()), ("S3xC3", product(&s3(), &cyclic(3)))] {
        let r = sweep_invariant_constituent(&ctx(name, g), &SweepBudget::default()).unwrap();
        assert_eq!(r.status, Status::Pass, "{name}: {r:?}");
    }
}

#[test]
fn murai_examples() {
    for (name, g) in [("S3", s3()), ("A4", a4())] {
        let c = ctx(name, g);
        let p_idx = (0..c.normal_count()).find(|&i| c.normal_subgroup(i).order() == 3);
        let bp = c.blocks().principal_index;
        // N = 1, xi trivial, principal blocks.
        let r = check_murai_domination(&c, 0, 0, bp).unwrap();
        assert_eq!(r.status, Status::Pass);
        let principal: Value = c.blocks().principal().char_indices.clone().into();
        assert_eq!(r.witness.get("dominating_block"), Some(&principal));
        if let Some(n) = p_idx {
            let q = c.quotient_data(n).unwrap();
            let r = check_murai_domination(&c, n, 0, q.blocks.principal_index).unwrap();
            assert_eq!(r.status, Status::Pass);
            assert_eq!(r.witness.get("dominating_block"), Some(&principal));
            assert_eq!(r.witness.get("disagreeing_blocks"), Some(&Value::List(vec![])));
        }
        assert_eq!(sweep_murai_domination(&c, &SweepBudget::default()).unwrap().status, Status::Pass);
    }
    let c = ctx("C3xC6", product(&cyclic(3), &cyclic(6)));
    assert_eq!(sweep_murai_domination(&c, &SweepBudget::default()).unwrap().status, Status::Pass);
    for (name, g) in [("S4", s4()), ("3^1+2", heisenberg27()), ("S3xS3", product(&s3(), &s3()))] {
        let r = sweep_murai_domination(&ctx(name, g), &SweepBudget::default()).unwrap();
        assert_eq!(r.status, Status::Pass, "{name}: {r:?}");
    }
}

/// The cached sweep agrees with evaluating every instance on its own.
#[test]
fn murai_sweep_matches_single_instances() {
    for (name, g) in [("S3", s3()), ("A4", a4()), ("S4", s4()), ("C3xC6", product(&cyclic(3), &cyclic(6))), ("3^1+2", heisenberg27())] {
        let c = ctx(name, g);
        let t = c.table();
        let (mut pass, mut skip, mut fail) = (0i64, 0i64, 0i64);
        for n in 0..c.normal_count() {
            if !c.normal_subgroup(n).order().is_power_of_three_or_one() {
                continue;
            }
            let q = c.quotient_data(n).unwrap();
            let dq = q.group.order().trailing_threes();
            for bbar in (0..q.blocks.blocks.len()).filter(|&b| q.blocks.blocks[b].defect == dq) {
                for xi in (0..t.len()).filter(|&x| t.degree(x) == 1) {
                    match check_murai_domination(&c, n, xi, bbar).unwrap().status {
                        Status::Pass => pass += 1,
                        Status::Fail => fail += 1,
                        Status::Skipped(_) => skip += 1,
                    }
                }
            }
        }
        let r = sweep_murai_domination(&c, &SweepBudget::default()).unwrap();
        assert_eq!(int(&r, "instances_passed"), pass, "{name}");
        assert_eq!(int(&r, "instances_skipped"), skip, "{name}");
        assert_eq!(fail, 0, "{name}");
    }
}

trait Threes {
    fn trailing_threes(self) -> u32;
    fn is_power_of_three_or_one(self) -> bool;
}

impl Threes for u64 {
    fn trailing_threes(mut self) -> u32 {
        let mut k = 0;
        while self % 3 == 0 {
            self /= 3;
            k += 1;
        }
        k
    }

    fn is_power_of_three_or_one(self) -> bool {
        3u64.pow(self.trailing_threes()) == self
    }
}

#[test]
fn simple_groups() {
    for (name, g) in [("A5", a5()), ("A6", alt(6)), ("PSL(2,7)", psl27())] {
        let c = flagged(name, g, true);
        let r = check_simple_degree_spread(&c).unwrap();
        assert_eq!(r.status, Status::Pass, "{name}: {r:?}");
        assert_eq!(check_almost_simple_iff(&c).unwrap().status, Status::Pass, "{name}");
    }
    assert!(is_skip(&check_simple_degree_spread(&ctx("S4", s4())).unwrap(), "not flagged"));
    let r = check_simple_degree_spread(&flagged("S4", s4(), true)).unwrap();
    assert!(r.status.is_fail());
    assert_eq!(r.witness.get("flag_verified"), Some(&Value::Bool(false)));
}

#[test]
fn almost_simple_spot_values() {
    let r = check_almost_simple_iff(&flagged("A5", a5(), true)).unwrap();
    assert_eq!((int(&r, "k0sigma"), int(&r, "frattini_index")), (3, 3));
    let r = check_almost_simple_iff(&flagged("S5", sym(5), false)).unwrap();
    assert_eq!((r.status.clone(), int(&r, "frattini_index"), int(&r, "socle_order")), (Status::Pass, 3, 60));
    let r = check_almost_simple_iff(&flagged("A6", alt(6), true)).unwrap();
    assert_eq!(int(&r, "frattini_index"), 9);
    assert!([6, 9].contains(&int(&r, "k0sigma")));
    assert_eq!(r.status, Status::Pass);
    let r = check_almost_simple_iff(&flagged("S4", s4(), false)).unwrap();
    assert!(r.status.is_fail());
}

#[test]
fn k0_divisibility() {
    for (name, g) in [("C3", cyclic(3)), ("S3xS3", product(&s3(), &s3())), ("A5", a5()), ("3^1+2", heisenberg27())] {
        let r = check_k0_divisibility(&ctx(name, g)).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(int(&r, "k0sigma") % 3, 0);
    }
    assert!(is_skip(&check_k0_divisibility(&ctx("C2", cyclic(2))).unwrap(), "p does not divide"));
}

#[test]
fn budget_skips_large_groups() {
    let c = ctx("A5", a5());
    let r = sweep_theorem_b(&c, &SweepBudget { max_order: 10 }).unwrap();
    assert!(is_skip(&r, "sweep budget"));
}

#[test]
fn reports_are_deterministic() {
    let a = run_check(&ctx("S4", s4()), "invariant_constituent", &SweepBudget::default());
    let b = run_check(&ctx("S4", s4()), "invariant_constituent", &SweepBudget::default());
    assert_eq!(a, b);
}
