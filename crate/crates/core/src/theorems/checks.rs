use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{CheckReport, GroupContext, QuotientData, Status, SubgroupData, SweepBudget, Value, Witness};
use crate::arith::valuation;
use crate::blocks::{dominated_block, induced_block, irr0_fixed, linear_twist_block, BlockPartition};
use crate::chartab::{CharacterTable, ClassFunction};
use crate::cyclo::GaloisElement;
use crate::error::Result;
use crate::permgrp::{centralizer, conjugacy_classes, frattini_subgroup, normal_subgroups};
use crate::PermGroup;

/// Failing instances kept verbatim in an aggregated report.
const MAX_LISTED_FAILURES: usize = 16;

fn is_p_power(n: u64, p: u64) -> bool {
    n == p.pow(valuation(n, p))
}

/// `χ_H` over the ring of `H`'s table.
fn restricted(table: &CharacterTable, chi: usize, sub: &SubgroupData) -> Result<ClassFunction> {
    table.restrict_into(chi, &sub.fusion, sub.table.ring())
}

fn tau_value(t: &GaloisElement) -> Value {
    Witness::new().with("n", t.modulus()).with("m", t.exponent()).into()
}

/// Running fold of instance verdicts: fail if any instance fails, pass if
/// some instance passes, skipped otherwise. Passing instances keep no
/// witness.
#[derive(Default)]
struct Tally {
    passed: usize,
    skipped: usize,
    first_skip: Option<String>,
    failures: Vec<Value>,
}

impl Tally {
    fn pass(&mut self) {
        self.passed += 1;
    }

    fn skip(&mut self, reason: &str) {
        self.skipped += 1;
        self.first_skip.get_or_insert_with(|| reason.into());
    }

    fn push(&mut self, r: CheckReport) {
        match r.status {
            Status::Pass => self.pass(),
            Status::Fail => self.failures.push(Value::from(r.witness)),
            Status::Skipped(reason) => {
                self.skipped += 1;
                self.first_skip.get_or_insert(reason);
            }
        }
    }

    fn finish(self, ctx: &GroupContext, name: &str, none_reason: &str) -> CheckReport {
        let Tally { passed, skipped, first_skip, mut failures } = self;
        let mut w = Witness::new().with("instances_passed", passed).with("instances_skipped", skipped);
        if !failures.is_empty() {
            w.set("instances_failed", failures.len());
            failures.truncate(MAX_LISTED_FAILURES);
            w.set("failures", Value::List(failures));
            return CheckReport::new(ctx, name, Status::Fail, w);
        }
        if passed == 0 {
            let reason = match first_skip {
                Some(r) => alloc::format!("{none_reason}: {r}"),
                None => none_reason.into(),
            };
            return CheckReport::new(ctx, name, Status::Skipped(reason), w);
        }
        CheckReport::new(ctx, name, Status::Pass, w)
    }
}

fn aggregate(ctx: &GroupContext, name: &str, instances: Vec<CheckReport>, none_reason: &str) -> CheckReport {
    let mut t = Tally::default();
    for r in instances {
        t.push(r);
    }
    t.finish(ctx, name, none_reason)
}

fn over_budget(ctx: &GroupContext, name: &str, budget: &SweepBudget) -> Option<CheckReport> {
    (ctx.order() > budget.max_order).then(|| {
        CheckReport::skipped(ctx, name, alloc::format!("|G| = {} exceeds the sweep budget {}", ctx.order(), budget.max_order))
    })
}

/// P-actions on the classes of a normal subgroup, one per generator of P.
fn p_actions(ctx: &GroupContext, data: &SubgroupData) -> Vec<Vec<usize>> {
    ctx.sylow().generators().iter().map(|x| data.conjugation_action(x)).collect()
}

// ---------------------------------------------------------------- Theorem A

pub fn check_theorem_a(ctx: &GroupContext) -> Result<CheckReport> {
    const NAME: &str = "theorem_a";
    if ctx.p() != 3 {
        return Ok(CheckReport::skipped(ctx, NAME, "the statement concerns p = 3"));
    }
    let k = ctx.k0_sigma();
    let f = ctx.frattini_index()?;
    let hits = k == 6 || k == 9;
    let w = Witness::new().with("k0sigma", k).with("frattini_index", f).with("converse_holds", f != 9 || hits);
    Ok(CheckReport::verdict(ctx, NAME, !hits || f == 9, w))
}

// ---------------------------------------------------------------- Theorem B

/// Whether `P/N` is cyclic, for `N ⊴ G` a `p`-subgroup (hence `N ≤ P`).
fn sylow_quotient_cyclic(p_group: &PermGroup, n: &PermGroup) -> Result<bool> {
    let m = p_group.order() / n.order();
    if m == 1 {
        return Ok(true);
    }
    for x in p_group.elements()? {
        let mut y = x.clone();
        let mut k = 1;
        while !n.contains(&y) {
            y = y.compose(&x);
            k += 1;
        }
        if k == m {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Indices of the normal abelian `p`-subgroups `N` with `G/N` of cyclic
/// Sylow `p`-subgroups.
pub fn theorem_b_normals(ctx: &GroupContext) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..ctx.normal_count() {
        let n = &ctx.normal_subgroup(i).group;
        if is_p_power(n.order(), ctx.p()) && n.is_abelian() && sylow_quotient_cyclic(ctx.sylow(), n)? {
            out.push(i);
        }
    }
    Ok(out)
}

fn tau_fixed_height_zero(data: &SubgroupData, tau: &GaloisElement) -> Result<usize> {
    Ok(irr0_fixed(&data.table, &data.blocks, tau)?.len())
}

/// One instance `(N, τ)` of Theorem B, with `N` given by its index among
/// the normal subgroups.
pub fn check_theorem_b(ctx: &GroupContext, n: usize, tau: &GaloisElement) -> Result<CheckReport> {
    const NAME: &str = "theorem_b";
    let p = ctx.p();
    if ctx.order() % p != 0 {
        return Ok(CheckReport::skipped(ctx, NAME, "p does not divide |G|"));
    }
    let ng = &ctx.normal_subgroup(n).group;
    if !is_p_power(ng.order(), p) || !ng.is_abelian() {
        return Ok(CheckReport::skipped(ctx, NAME, "N is not an abelian p-group"));
    }
    if !sylow_quotient_cyclic(ctx.sylow(), ng)? {
        return Ok(CheckReport::skipped(ctx, NAME, "G/N Sylow not cyclic"));
    }
    if !ctx.taus().contains(tau) {
        return Ok(CheckReport::skipped(ctx, NAME, "tau is not a p-power element fixing p'-roots of unity"));
    }
    let h = ctx.sylow_normalizer()?;
    let count_g = tau_fixed_height_zero(ctx.whole(), tau)?;
    let count_h = tau_fixed_height_zero(h, tau)?;
    let w = Witness::new()
        .with("n_order", ng.order())
        .with("tau", tau_value(tau))
        .with("count_g", count_g)
        .with("count_normalizer", count_h)
        .with("normalizer_order", h.group.order());
    Ok(CheckReport::verdict(ctx, NAME, count_g == count_h, w))
}

pub fn sweep_theorem_b(ctx: &GroupContext, budget: &SweepBudget) -> Result<CheckReport> {
    const NAME: &str = "theorem_b";
    if let Some(r) = over_budget(ctx, NAME, budget) {
        return Ok(r);
    }
    if ctx.order() % ctx.p() != 0 {
        return Ok(CheckReport::skipped(ctx, NAME, "p does not divide |G|"));
    }
    let mut instances = Vec::new();
    for n in theorem_b_normals(ctx)? {
        for tau in ctx.taus() {
            instances.push(check_theorem_b(ctx, n, &tau)?);
        }
    }
    Ok(aggregate(ctx, NAME, instances, "no normal abelian p-subgroup N with G/N of cyclic Sylow p-subgroups"))
}

// ------------------------------------------------------- cyclic Sylow count

pub fn check_cyclic_sylow_count(ctx: &GroupContext) -> Result<CheckReport> {
    const NAME: &str = "cyclic_sylow_count";
    if ctx.p() != 3 {
        return Ok(CheckReport::skipped(ctx, NAME, "the characterization concerns p = 3"));
    }
    if ctx.order() % 3 != 0 {
        return Ok(CheckReport::skipped(ctx, NAME, "3 does not divide |G|"));
    }
    let k = ctx.k0_sigma();
    let cyclic = ctx.sylow_is_cyclic()?;
    let w = Witness::new().with("k0sigma", k).with("sylow_cyclic", cyclic).with("sylow_order", ctx.sylow().order());
    Ok(CheckReport::verdict(ctx, NAME, (k == 3) == cyclic, w))
}

// ------------------------------------------------------------- kernel lemma

/// Order of `O_{p′}(G)`.
pub fn o_p_prime_order(ctx: &GroupContext) -> u64 {
    (0..ctx.normal_count()).map(|i| ctx.normal_subgroup(i).order()).filter(|o| o % ctx.p() != 0).max().unwrap_or(1)
}

/// Classes of `G` on which every character in `chars` takes its degree.
fn kernel_classes(table: &CharacterTable, chars: &[usize]) -> Vec<usize> {
    (0..table.len()).filter(|&k| chars.iter().all(|&chi| *table.value(chi, k) == *table.value(chi, 0))).collect()
}

pub fn check_kernel_lemma(ctx: &GroupContext) -> Result<CheckReport> {
    const NAME: &str = "kernel_lemma";
    let opp = o_p_prime_order(ctx);
    if opp != 1 {
        return Ok(CheckReport::new(
            ctx,
            NAME,
            Status::Skipped(String::from("O_{p'}(G) is nontrivial")),
            Witness::new().with("o_p_prime_order", opp),
        ));
    }
    let classes = ctx.classes();
    let kernel = kernel_classes(ctx.table(), ctx.irr0_sigma());
    let phi = frattini_subgroup(ctx.sylow(), ctx.p())?;
    let kernel_order: u64 = kernel.iter().map(|&k| classes.size(k)).sum();
    let mut outside = Vec::new();
    for &k in &kernel {
        let elems = classes.elements();
        if !classes.members(k).iter().all(|&i| phi.contains(elems.get(i))) {
            outside.push(k);
        }
    }
    let w = Witness::new()
        .with("kernel_order", kernel_order)
        .with("frattini_order", phi.order())
        .with("classes_outside_frattini", outside.clone());
    Ok(CheckReport::verdict(ctx, NAME, outside.is_empty(), w))
}

// ---------------------------------------------------- relative divisibility

/// `⟨χ_N, θ⟩` for every `χ ∈ Irr_{0,σ}(B_0(G))` and every `θ ∈ Irr(N)`.
fn restrictions(ctx: &GroupContext, data: &SubgroupData) -> Result<Vec<(usize, Vec<BigInt>)>> {
    ctx.irr0_sigma()
        .iter()
        .map(|&chi| Ok((chi, restriction_multiplicities(ctx.table(), chi, data)?)))
        .collect()
}

fn relative_divisibility_instance(
    ctx: &GroupContext,
    n: usize,
    theta: usize,
    decomp: &[(usize, Vec<BigInt>)],
    pa: &[Vec<usize>],
) -> Result<CheckReport> {
    const NAME: &str = "relative_divisibility";
    let p = ctx.p();
    if p != 2 && p != 3 {
        return Ok(CheckReport::skipped(ctx, NAME, "requires p in {2, 3}"));
    }
    let nsub = ctx.normal_subgroup(n);
    if (ctx.order() / nsub.order()) % p != 0 {
        return Ok(CheckReport::skipped(ctx, NAME, "p does not divide |G:N|"));
    }
    let data = ctx.normal_data(n)?;
    if !data.blocks.principal().contains(theta) {
        return Ok(CheckReport::skipped(ctx, NAME, "theta is not in the principal block of N"));
    }
    if !pa.iter().all(|a| data.invariant_under(theta, a)) {
        return Ok(CheckReport::skipped(ctx, NAME, "theta is not P-invariant"));
    }
    if !data.table.sigma_fixed(theta, &ctx.sigma())? {
        return Ok(CheckReport::skipped(ctx, NAME, "theta is not sigma-invariant"));
    }
    let over: Vec<usize> = decomp.iter().filter(|(_, m)| !m[theta].is_zero()).map(|&(chi, _)| chi).collect();
    let w = Witness::new()
        .with("n_order", nsub.order())
        .with("theta", theta)
        .with("theta_degree", data.table.degree(theta))
        .with("count", over.len())
        .with("characters", over.clone());
    Ok(CheckReport::verdict(ctx, NAME, over.len() as u64 % p == 0, w))
}

/// One instance `(N, θ)` of the relative divisibility statement.
pub fn check_relative_divisibility(ctx: &GroupContext, n: usize, theta: usize) -> Result<CheckReport> {
    let data = ctx.normal_data(n)?;
    relative_divisibility_instance(ctx, n, theta, &restrictions(ctx, data)?, &p_actions(ctx, data))
}

pub fn sweep_relative_divisibility(ctx: &GroupContext, budget: &SweepBudget) -> Result<CheckReport> {
    const NAME: &str = "relative_divisibility";
    if let Some(r) = over_budget(ctx, NAME, budget) {
        return Ok(r);
    }
    let p = ctx.p();
    if p != 2 && p != 3 {
        return Ok(CheckReport::skipped(ctx, NAME, "requires p in {2, 3}"));
    }
    let mut instances = Vec::new();
    for n in 0..ctx.normal_count() {
        if (ctx.order() / ctx.normal_subgroup(n).order()) % p != 0 {
            continue;
        }
        let data = ctx.normal_data(n)?;
        let decomp = restrictions(ctx, data)?;
        let pa = p_actions(ctx, data);
        for &theta in &data.blocks.principal().char_indices {
            instances.push(relative_divisibility_instance(ctx, n, theta, &decomp, &pa)?);
        }
    }
    Ok(aggregate(ctx, NAME, instances, "no admissible (N, theta)"))
}

// ---------------------------------------------------------- P-action count

/// Members of `Irr_{0,g}(B_0(K))` fixed by every class permutation in
/// `actions`.
pub fn invariant_height_zero(
    table: &CharacterTable,
    blocks: &BlockPartition,
    g: &GaloisElement,
    actions: &[Vec<usize>],
) -> Result<Vec<usize>> {
    let fixed = irr0_fixed(table, blocks, g)?;
    Ok(fixed
        .into_iter()
        .filter(|&chi| {
            actions.iter().all(|a| a.iter().enumerate().all(|(k, &j)| table.value(chi, k) == table.value(chi, j)))
        })
        .collect())
}

/// `K` is the normal subgroup with index `k`; `P` acts by conjugation.
pub fn check_p_action_count(ctx: &GroupContext, k: usize) -> Result<CheckReport> {
    const NAME: &str = "p_action_count";
    let p = ctx.p();
    if p > 3 {
        return Ok(CheckReport::skipped(ctx, NAME, "requires p <= 3"));
    }
    let ksub = ctx.normal_subgroup(k);
    if ksub.order() % p != 0 {
        return Ok(CheckReport::skipped(ctx, NAME, "p does not divide |K|"));
    }
    let data = ctx.normal_data(k)?;
    let inv = invariant_height_zero(&data.table, &data.blocks, &ctx.sigma(), &p_actions(ctx, data))?;
    let w = Witness::new().with("k_order", ksub.order()).with("invariant_count", inv.len()).with("characters", inv.clone());
    Ok(CheckReport::verdict(ctx, NAME, !inv.is_empty() && inv.len() as u64 % p == 0, w))
}

pub fn sweep_p_action_count(ctx: &GroupContext, budget: &SweepBudget) -> Result<CheckReport> {
    const NAME: &str = "p_action_count";
    if let Some(r) = over_budget(ctx, NAME, budget) {
        return Ok(r);
    }
    if ctx.p() > 3 {
        return Ok(CheckReport::skipped(ctx, NAME, "requires p <= 3"));
    }
    let mut instances = Vec::new();
    for k in 0..ctx.normal_count() {
        if ctx.normal_subgroup(k).order() % ctx.p() == 0 {
            instances.push(check_p_action_count(ctx, k)?);
        }
    }
    Ok(aggregate(ctx, NAME, instances, "p does not divide |G|"))
}

// ------------------------------------------------------------ Alperin–Dade

pub fn check_alperin_dade(ctx: &GroupContext, n: usize) -> Result<CheckReport> {
    const NAME: &str = "alperin_dade";
    let p = ctx.p();
    let nsub = ctx.normal_subgroup(n);
    if (ctx.order() / nsub.order()) % p == 0 {
        return Ok(CheckReport::skipped(ctx, NAME, "p divides |G:N|"));
    }
    let c = centralizer(ctx.group(), ctx.sylow())?;
    if nsub.group.join(&c).order() != ctx.order() {
        return Ok(CheckReport::skipped(ctx, NAME, "N C_G(P) is a proper subgroup of G"));
    }
    let data = ctx.normal_data(n)?;
    let target = irr0_fixed(&data.table, &data.blocks, &ctx.sigma())?;
    let mut images = Vec::new();
    let mut reducible = Vec::new();
    for &chi in ctx.irr0_sigma() {
        match ctx.table().restriction_row(chi, &data.fusion, &data.table) {
            Some(theta) => images.push(theta),
            None => reducible.push(chi),
        }
    }
    let distinct: BTreeSet<usize> = images.iter().copied().collect();
    let injective = distinct.len() == images.len();
    let onto = distinct.iter().copied().eq(target.iter().copied());
    let w = Witness::new()
        .with("n_order", nsub.order())
        .with("source", ctx.irr0_sigma().to_vec())
        .with("images", images.clone())
        .with("target", target.clone())
        .with("reducible_restrictions", reducible.clone())
        .with("injective", injective)
        .with("bijective_onto_target", onto);
    Ok(CheckReport::verdict(ctx, NAME, reducible.is_empty() && injective && onto, w))
}

pub fn sweep_alperin_dade(ctx: &GroupContext, budget: &SweepBudget) -> Result<CheckReport> {
    const NAME: &str = "alperin_dade";
    if let Some(r) = over_budget(ctx, NAME, budget) {
        return Ok(r);
    }
    let instances = (0..ctx.normal_count()).map(|n| check_alperin_dade(ctx, n)).collect::<Result<_>>()?;
    Ok(aggregate(ctx, NAME, instances, "no admissible N"))
}

// ---------------------------------------------------- invariant constituent

fn orbit(table: &CharacterTable, start: usize, actions: &[Vec<usize>]) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([start]);
    let mut queue = alloc::vec![start];
    while let Some(t) = queue.pop() {
        for a in actions {
            let u = table.permuted_row(t, a);
            if seen.insert(u) {
                queue.push(u);
            }
        }
    }
    seen
}

fn invariant_constituent_instance(
    ctx: &GroupContext,
    n: usize,
    chi: usize,
    tau: &GaloisElement,
    decomp: &[BigInt],
    pa: &[Vec<usize>],
    normalizer_actions: &[Vec<usize>],
) -> Result<CheckReport> {
    const NAME: &str = "invariant_constituent";
    let t = ctx.table();
    if t.degree(chi) % ctx.p() == 0 {
        return Ok(CheckReport::skipped(ctx, NAME, "chi has degree divisible by p"));
    }
    if !t.sigma_fixed(chi, tau)? {
        return Ok(CheckReport::skipped(ctx, NAME, "chi is not tau-fixed"));
    }
    let data = ctx.normal_data(n)?;
    let constituents: Vec<usize> = (0..decomp.len()).filter(|&i| !decomp[i].is_zero()).collect();
    let mut invariant = Vec::new();
    for &theta in &constituents {
        if pa.iter().all(|a| data.invariant_under(theta, a)) && data.table.sigma_fixed(theta, tau)? {
            invariant.push(theta);
        }
    }
    let one_orbit = match invariant.first() {
        None => false,
        Some(&first) => {
            let o = orbit(&data.table, first, normalizer_actions);
            invariant.iter().all(|th| o.contains(th))
        }
    };
    let w = Witness::new()
        .with("n_order", ctx.normal_subgroup(n).order())
        .with("chi", chi)
        .with("tau", tau_value(tau))
        .with("constituents", constituents)
        .with("invariant_constituents", invariant.clone())
        .with("single_normalizer_orbit", one_orbit);
    Ok(CheckReport::verdict(ctx, NAME, one_orbit, w))
}

/// Multiplicities of `Irr(N)` in `χ_N`; an irreducible restriction is
/// recognized by table lookup without inner products.
fn restriction_multiplicities(t: &CharacterTable, chi: usize, data: &SubgroupData) -> Result<Vec<BigInt>> {
    if let Some(row) = t.restriction_row(chi, &data.fusion, &data.table) {
        let mut m = alloc::vec![BigInt::zero(); data.table.len()];
        m[row] = BigInt::from(1);
        return Ok(m);
    }
    data.table.decompose(&restricted(t, chi, data)?)
}

/// One instance `(N, χ, τ)`.
pub fn check_invariant_constituent(ctx: &GroupContext, n: usize, chi: usize, tau: &GaloisElement) -> Result<CheckReport> {
    let data = ctx.normal_data(n)?;
    let decomp = restriction_multiplicities(ctx.table(), chi, data)?;
    let h = ctx.sylow_normalizer()?;
    let actions: Vec<Vec<usize>> = h.group.generators().iter().map(|x| data.conjugation_action(x)).collect();
    invariant_constituent_instance(ctx, n, chi, tau, &decomp, &p_actions(ctx, data), &actions)
}

pub fn sweep_invariant_constituent(ctx: &GroupContext, budget: &SweepBudget) -> Result<CheckReport> {
    const NAME: &str = "invariant_constituent";
    if let Some(r) = over_budget(ctx, NAME, budget) {
        return Ok(r);
    }
    let t = ctx.table();
    let taus = ctx.taus();
    let h_gens = ctx.sylow_normalizer()?.group.generators().to_vec();
    let mut instances = Vec::new();
    for n in 0..ctx.normal_count() {
        let data = ctx.normal_data(n)?;
        let pa = p_actions(ctx, data);
        let actions: Vec<Vec<usize>> = h_gens.iter().map(|x| data.conjugation_action(x)).collect();
        for chi in (0..t.len()).filter(|&c| t.degree(c) % ctx.p() != 0) {
            let fixing: Vec<&GaloisElement> =
                taus.iter().filter(|tau| t.sigma_fixed(chi, tau).unwrap_or(false)).collect();
            if fixing.is_empty() {
                continue;
            }
            let decomp = restriction_multiplicities(t, chi, data)?;
            for tau in fixing {
                instances.push(invariant_constituent_instance(ctx, n, chi, tau, &decomp, &pa, &actions)?);
            }
        }
    }
    Ok(aggregate(ctx, NAME, instances, "no p'-degree tau-fixed character"))
}

// -------------------------------------------------------- Murai domination

fn max_defect_blocks(blocks: &BlockPartition, order: u64) -> Vec<usize> {
    let d = valuation(order, blocks.p);
    (0..blocks.blocks.len()).filter(|&b| blocks.blocks[b].defect == d).collect()
}

/// Brauer correspondents: entry `B` is the maximal-defect block of a
/// subgroup containing `N_G(P)` that induces to the ambient block `B`.
fn correspondence(sub: &SubgroupData, ambient: &BlockPartition, ctx: &GroupContext) -> Vec<Option<usize>> {
    let mut out = alloc::vec![None; ambient.blocks.len()];
    for b in max_defect_blocks(&sub.blocks, sub.group.order()) {
        if let Some(big) = induced_block(&sub.fusion, &sub.blocks, b, ambient, ctx.residue_field()) {
            out[big].get_or_insert(b);
        }
    }
    out
}

/// Data shared by every `(ξ, B̄)` for one normal `p`-subgroup `N`.
struct MuraiN<'a> {
    q: &'a QuotientData,
    hbar: SubgroupData,
    infl_h: Vec<usize>,
    corr_bar: Vec<Option<usize>>,
}

fn murai_n<'a>(ctx: &'a GroupContext, h: &SubgroupData, n: usize) -> Result<MuraiN<'a>> {
    let q = ctx.quotient_data(n)?;
    let hbar = ctx.quotient_subgroup_data(n, &q.image_of_subgroup(&h.group))?;
    let infl_h = h
        .table
        .classes()
        .reps()
        .iter()
        .map(|x| hbar.classes().class_of(&q.image(x)).expect("image of H lies in H/N"))
        .collect();
    let corr_bar = correspondence(&hbar, &q.blocks, ctx);
    Ok(MuraiN { q, hbar, infl_h, corr_bar })
}

/// `(dominated block of G, dominated block of H)` for `B̄` and its
/// correspondent `b̄`; `None` when `b̄` is undefined.
fn murai_dominated(ctx: &GroupContext, h: &SubgroupData, m: &MuraiN, bbar: usize) -> Result<Option<(usize, usize)>> {
    let Some(bbar_h) = m.corr_bar[bbar] else {
        return Ok(None);
    };
    let dg = dominated_block(&m.q.inflation, &m.q.table, &m.q.blocks, bbar, ctx.table(), ctx.blocks())?;
    let dh = dominated_block(&m.infl_h, &m.hbar.table, &m.hbar.blocks, bbar_h, &h.table, &h.blocks)?;
    Ok(Some((dg, dh)))
}

const UNDEFINED_B: &str = "Brauer correspondent of B undefined";

/// Compares `ξB̄ dominated by B` with `ξ_H b̄ dominated by b` for every
/// maximal-defect `B` with correspondent `b`. Each side holds for exactly
/// one block, so the twisted dominated blocks determine both relations.
#[allow(clippy::too_many_arguments)]
fn murai_instance(
    ctx: &GroupContext,
    n_order: u64,
    xi: usize,
    bbar_chars: &[usize],
    twist_g: usize,
    twist_h: usize,
    big: &[usize],
    corr: &[Option<usize>],
) -> CheckReport {
    const NAME: &str = "murai_domination";
    let mut disagree = Vec::new();
    let mut compared = 0usize;
    for (&b, &cb) in big.iter().zip(corr) {
        let Some(cb) = cb else { continue };
        compared += 1;
        if (twist_g == b) != (twist_h == cb) {
            disagree.push(ctx.blocks().blocks[b].char_indices.clone());
        }
    }
    if compared == 0 {
        return CheckReport::skipped(ctx, NAME, UNDEFINED_B);
    }
    let w = Witness::new()
        .with("n_order", n_order)
        .with("xi", xi)
        .with("bbar", bbar_chars.to_vec())
        .with("dominating_block", ctx.blocks().blocks[twist_g].char_indices.clone())
        .with("blocks_compared", compared)
        .with("disagreeing_blocks", disagree.clone());
    CheckReport::verdict(ctx, NAME, disagree.is_empty(), w)
}

/// One instance `(N, ξ, B̄)`: `N` a normal `p`-subgroup (by index), `ξ` a
/// linear character of `G` and `B̄` a maximal-defect block of `G/N`. For
/// every maximal-defect block `B` of `G` with Brauer correspondent `b` in
/// `H = N_G(P)`, `ξB̄` is dominated by `B` iff `ξ_H b̄` is dominated by `b`.
pub fn check_murai_domination(ctx: &GroupContext, n: usize, xi: usize, bbar: usize) -> Result<CheckReport> {
    const NAME: &str = "murai_domination";
    let nsub = ctx.normal_subgroup(n);
    if !is_p_power(nsub.order(), ctx.p()) {
        return Ok(CheckReport::skipped(ctx, NAME, "N is not a p-group"));
    }
    let t = ctx.table();
    if t.degree(xi) != 1 {
        return Ok(CheckReport::skipped(ctx, NAME, "xi is not linear"));
    }
    let q = ctx.quotient_data(n)?;
    if q.blocks.blocks[bbar].defect != valuation(q.group.order(), ctx.p()) {
        return Ok(CheckReport::skipped(ctx, NAME, "Bbar does not have maximal defect"));
    }
    let h = ctx.sylow_normalizer()?;
    let big = max_defect_blocks(ctx.blocks(), ctx.order());
    let all = correspondence(h, ctx.blocks(), ctx);
    let corr: Vec<Option<usize>> = big.iter().map(|&b| all[b]).collect();
    let m = murai_n(ctx, h, n)?;
    let Some((dg, dh)) = murai_dominated(ctx, h, &m, bbar)? else {
        return Ok(CheckReport::skipped(ctx, NAME, "Brauer correspondent of Bbar undefined"));
    };
    let xi_h = t
        .restriction_row(xi, &h.fusion, &h.table)
        .ok_or_else(|| crate::error::internal!("restriction of a linear character is reducible"))?;
    let twist_g = linear_twist_block(t, ctx.blocks(), xi, dg)?;
    let twist_h = linear_twist_block(&h.table, &h.blocks, xi_h, dh)?;
    Ok(murai_instance(ctx, nsub.order(), xi, &q.blocks.blocks[bbar].char_indices, twist_g, twist_h, &big, &corr))
}

/// Same verdicts as [`check_murai_domination`] over every instance, with
/// the per-`N`, per-`B̄` and per-`ξ` data computed once.
pub fn sweep_murai_domination(ctx: &GroupContext, budget: &SweepBudget) -> Result<CheckReport> {
    const NAME: &str = "murai_domination";
    if let Some(r) = over_budget(ctx, NAME, budget) {
        return Ok(r);
    }
    let t = ctx.table();
    let linear: Vec<usize> = (0..t.len()).filter(|&c| t.degree(c) == 1).collect();
    let big = max_defect_blocks(ctx.blocks(), ctx.order());
    let h = ctx.sylow_normalizer()?;
    let all = correspondence(h, ctx.blocks(), ctx);
    let corr: Vec<Option<usize>> = big.iter().map(|&b| all[b]).collect();
    let xi_h: Vec<usize> = linear
        .iter()
        .map(|&xi| {
            t.restriction_row(xi, &h.fusion, &h.table)
                .ok_or_else(|| crate::error::internal!("restriction of a linear character is reducible"))
        })
        .collect::<Result<_>>()?;
    // twist_*[i][b] = ξ_i B on each side
    let twist = |table: &CharacterTable, blocks: &BlockPartition, x: usize| -> Result<Vec<usize>> {
        (0..blocks.blocks.len()).map(|b| linear_twist_block(table, blocks, x, b)).collect()
    };
    let twist_g: Vec<Vec<usize>> = linear.iter().map(|&x| twist(t, ctx.blocks(), x)).collect::<Result<_>>()?;
    let twist_h: Vec<Vec<usize>> = xi_h.iter().map(|&x| twist(&h.table, &h.blocks, x)).collect::<Result<_>>()?;
    // Whether any maximal-defect B has a correspondent to compare.
    let compared = corr.iter().any(Option::is_some);
    let mut tally = Tally::default();
    for n in 0..ctx.normal_count() {
        let n_order = ctx.normal_subgroup(n).order();
        if !is_p_power(n_order, ctx.p()) {
            continue;
        }
        let m = murai_n(ctx, h, n)?;
        for bbar in max_defect_blocks(&m.q.blocks, m.q.group.order()) {
            let Some((dg, dh)) = murai_dominated(ctx, h, &m, bbar)? else {
                for _ in &linear {
                    tally.skip("Brauer correspondent of Bbar undefined");
                }
                continue;
            };
            let bbar_chars = &m.q.blocks.blocks[bbar].char_indices;
            for (i, &xi) in linear.iter().enumerate() {
                let (tg, th) = (twist_g[i][dg], twist_h[i][dh]);
                if !compared {
                    tally.skip(UNDEFINED_B);
                } else if big.iter().zip(&corr).all(|(&b, cb)| cb.is_none_or(|cb| (tg == b) == (th == cb))) {
                    tally.pass();
                } else {
                    tally.push(murai_instance(ctx, n_order, xi, bbar_chars, tg, th, &big, &corr));
                }
            }
        }
    }
    Ok(tally.finish(ctx, NAME, "no instance with defined Brauer correspondents"))
}

// ------------------------------------------------ simple and almost simple

fn is_nonabelian_simple(g: &PermGroup) -> Result<bool> {
    if g.is_abelian() {
        return Ok(false);
    }
    let classes = conjugacy_classes(g)?;
    Ok(normal_subgroups(g, &classes).len() == 2)
}

/// `|S|` when `G` has a unique minimal normal subgroup `S`, nonabelian
/// simple, with `C_G(S) = 1`; `None` when `G` is not almost simple.
pub fn almost_simple_socle(ctx: &GroupContext) -> Result<Option<u64>> {
    let count = ctx.normal_count();
    let minimal: Vec<usize> = (1..count)
        .filter(|&i| {
            let ci = &ctx.normal_subgroup(i).classes;
            (1..count).all(|j| {
                let cj = &ctx.normal_subgroup(j).classes;
                j == i || !(cj.len() < ci.len() && cj.iter().all(|c| ci.binary_search(c).is_ok()))
            })
        })
        .collect();
    let [s] = minimal.as_slice() else {
        return Ok(None);
    };
    let s = &ctx.normal_subgroup(*s).group;
    if !is_nonabelian_simple(s)? || centralizer(ctx.group(), s)?.order() != 1 {
        return Ok(None);
    }
    Ok(Some(s.order()))
}

pub fn check_simple_degree_spread(ctx: &GroupContext) -> Result<CheckReport> {
    const NAME: &str = "simple_degree_spread";
    if ctx.p() != 3 {
        return Ok(CheckReport::skipped(ctx, NAME, "the statement concerns p = 3"));
    }
    if !ctx.flags().simple {
        return Ok(CheckReport::skipped(ctx, NAME, "not flagged simple"));
    }
    if ctx.order() % 3 != 0 {
        return Ok(CheckReport::skipped(ctx, NAME, "3 does not divide |S|"));
    }
    if !is_nonabelian_simple(ctx.group())? {
        let w = Witness::new().with("flag_verified", false).with("normal_subgroups", ctx.normal_count());
        return Ok(CheckReport::new(ctx, NAME, Status::Fail, w));
    }
    let degrees: BTreeSet<u64> = ctx.irr0_sigma().iter().map(|&c| ctx.table().degree(c)).collect();
    let degrees: Vec<u64> = degrees.into_iter().collect();
    let w = Witness::new().with("flag_verified", true).with("distinct_degrees", degrees.clone());
    Ok(CheckReport::verdict(ctx, NAME, degrees.len() >= 3, w))
}

pub fn check_almost_simple_iff(ctx: &GroupContext) -> Result<CheckReport> {
    const NAME: &str = "almost_simple_iff";
    if ctx.p() != 3 {
        return Ok(CheckReport::skipped(ctx, NAME, "the statement concerns p = 3"));
    }
    if !ctx.flags().almost_simple {
        return Ok(CheckReport::skipped(ctx, NAME, "not flagged almost simple"));
    }
    let Some(socle) = almost_simple_socle(ctx)? else {
        return Ok(CheckReport::new(ctx, NAME, Status::Fail, Witness::new().with("flag_verified", false)));
    };
    let k = ctx.k0_sigma();
    let f = ctx.frattini_index()?;
    let w = Witness::new()
        .with("flag_verified", true)
        .with("socle_order", socle)
        .with("k0sigma", k)
        .with("frattini_index", f);
    Ok(CheckReport::verdict(ctx, NAME, (k == 6 || k == 9) == (f == 9), w))
}

// ------------------------------------------------------- k0 divisibility

pub fn check_k0_divisibility(ctx: &GroupContext) -> Result<CheckReport> {
    const NAME: &str = "k0_divisibility";
    let p = ctx.p();
    if p > 3 {
        return Ok(CheckReport::skipped(ctx, NAME, "requires p <= 3"));
    }
    if ctx.order() % p != 0 {
        return Ok(CheckReport::skipped(ctx, NAME, "p does not divide |G|"));
    }
    let k = ctx.k0_sigma() as u64;
    Ok(CheckReport::verdict(ctx, NAME, k >= p && k % p == 0, Witness::new().with("k0sigma", k)))
}
