use alloc::rc::Rc;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cell::OnceCell;

use crate::arith::valuation;
use crate::blocks::{block_partition_with, irr0_fixed, BlockPartition};
use crate::chartab::CharacterTable;
use crate::cyclo::{make_residue_field, make_sigma, p_power_tau_elements, GaloisElement, ResidueField};
use crate::error::Result;
use crate::permgrp::{
    class_fusion, conjugacy_classes, frattini_index, normal_subgroups, normalizer, sylow_subgroup, NormalSubgroup,
    Quotient,
};
use crate::{ClassData, Permutation, PermGroup};

/// Corpus metadata a check may depend on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub simple: bool,
    pub almost_simple: bool,
    pub perfect: bool,
}

/// A subgroup `H ≤ G` with its table, class fusion into `G` and blocks
/// computed in `G`'s residue field.
pub struct SubgroupData {
    pub group: PermGroup,
    pub table: Rc<CharacterTable>,
    pub fusion: Vec<usize>,
    pub blocks: Rc<BlockPartition>,
}

impl SubgroupData {
    fn new(g: &PermGroup, gclasses: &ClassData, h: &PermGroup, rf: &ResidueField) -> Result<Self> {
        let classes = Arc::new(conjugacy_classes(h)?);
        let table = CharacterTable::new(h, classes.clone())?;
        let fusion = class_fusion(g, h, gclasses, &classes)?;
        let blocks = block_partition_with(&table, rf)?;
        Ok(SubgroupData { group: h.clone(), table: Rc::new(table), fusion, blocks: Rc::new(blocks) })
    }

    pub fn classes(&self) -> &ClassData {
        self.table.classes()
    }

    /// Permutation of this subgroup's classes induced by conjugation with
    /// `x`, which must normalize the subgroup.
    pub fn conjugation_action(&self, x: &Permutation) -> Vec<usize> {
        let c = self.classes();
        (0..c.len()).map(|k| c.class_of(&c.rep(k).conjugate_by(x)).expect("x normalizes the subgroup")).collect()
    }

    /// Whether row `theta` is constant on the orbits of `action`.
    pub fn invariant_under(&self, theta: usize, action: &[usize]) -> bool {
        action.iter().enumerate().all(|(k, &j)| self.table.value(theta, k) == self.table.value(theta, j))
    }
}

/// `G/N` with its table, the inflation map on classes and its blocks.
/// For trivial `N` the data of `G` itself is reused.
pub struct QuotientData {
    pub group: PermGroup,
    pub table: Rc<CharacterTable>,
    /// `inflation[k]` is the class of `G/N` containing the image of class `k` of `G`.
    pub inflation: Vec<usize>,
    pub blocks: Rc<BlockPartition>,
    quotient: Option<Quotient>,
}

impl QuotientData {
    /// Image of a subgroup `H ≤ G` in `G/N`.
    pub fn image_of_subgroup(&self, h: &PermGroup) -> PermGroup {
        match &self.quotient {
            Some(q) => q.image_of_subgroup(h),
            None => h.clone(),
        }
    }

    pub fn image(&self, x: &Permutation) -> Permutation {
        match &self.quotient {
            Some(q) => q.image(x),
            None => x.clone(),
        }
    }
}

struct NormalEntry {
    sub: NormalSubgroup,
    data: OnceCell<SubgroupData>,
    quotient: OnceCell<QuotientData>,
}

fn try_init<T>(cell: &OnceCell<T>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = f()?;
    Ok(cell.get_or_init(|| v))
}

/// Everything the checks need about one group at one prime.
pub struct GroupContext {
    id: String,
    p: u64,
    flags: Flags,
    whole: SubgroupData,
    rf: ResidueField,
    sigma: GaloisElement,
    sylow: PermGroup,
    k0: Vec<usize>,
    normal: OnceCell<Vec<NormalEntry>>,
    sylow_normalizer: OnceCell<SubgroupData>,
    frattini_index: OnceCell<u64>,
}

impl GroupContext {
    pub fn new(id: impl Into<String>, group: PermGroup, p: u64, flags: Flags) -> Result<Self> {
        let classes = Arc::new(conjugacy_classes(&group)?);
        let table = CharacterTable::new(&group, classes)?;
        let rf = make_residue_field(table.modulus(), p)?;
        let blocks = block_partition_with(&table, &rf)?;
        let sigma = make_sigma(table.modulus(), p);
        let k0 = irr0_fixed(&table, &blocks, &sigma)?;
        let sylow = sylow_subgroup(&group, p)?;
        let whole = SubgroupData {
            group,
            fusion: (0..table.len()).collect(),
            table: Rc::new(table),
            blocks: Rc::new(blocks),
        };
        Ok(GroupContext {
            id: id.into(),
            p,
            flags,
            whole,
            rf,
            sigma,
            sylow,
            k0,
            normal: OnceCell::new(),
            sylow_normalizer: OnceCell::new(),
            frattini_index: OnceCell::new(),
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn flags(&self) -> Flags {
        self.flags
    }

    pub fn group(&self) -> &PermGroup {
        &self.whole.group
    }

    pub fn order(&self) -> u64 {
        self.whole.group.order()
    }

    /// `|G|_p`.
    pub fn p_part(&self) -> u64 {
        self.p.pow(valuation(self.order(), self.p))
    }

    pub fn classes(&self) -> &ClassData {
        self.whole.table.classes()
    }

    pub fn table(&self) -> &CharacterTable {
        &self.whole.table
    }

    pub fn blocks(&self) -> &BlockPartition {
        &self.whole.blocks
    }

    /// `G` viewed as a subgroup of itself.
    pub fn whole(&self) -> &SubgroupData {
        &self.whole
    }

    pub fn residue_field(&self) -> &ResidueField {
        &self.rf
    }

    /// `σ` on `Q(ζ_e)` with `e = exp(G)`.
    pub fn sigma(&self) -> GaloisElement {
        self.sigma
    }

    /// `p`-power-order Galois elements on `Q(ζ_e)` fixing `p′`-roots of unity.
    pub fn taus(&self) -> Vec<GaloisElement> {
        p_power_tau_elements(self.table().modulus(), self.p)
    }

    pub fn sylow(&self) -> &PermGroup {
        &self.sylow
    }

    /// `Irr_{0,σ}(B_0(G))`.
    pub fn irr0_sigma(&self) -> &[usize] {
        &self.k0
    }

    pub fn k0_sigma(&self) -> usize {
        self.k0.len()
    }

    /// `|P : Φ(P)|`.
    pub fn frattini_index(&self) -> Result<u64> {
        try_init(&self.frattini_index, || frattini_index(&self.sylow, self.p)).copied()
    }

    pub fn sylow_is_cyclic(&self) -> Result<bool> {
        self.sylow.is_cyclic()
    }

    fn normal_entries(&self) -> &[NormalEntry] {
        self.normal.get_or_init(|| {
            normal_subgroups(&self.whole.group, self.classes())
                .into_iter()
                .map(|sub| NormalEntry { sub, data: OnceCell::new(), quotient: OnceCell::new() })
                .collect()
        })
    }

    /// Normal subgroups sorted by order; index 0 is trivial, the last is `G`.
    pub fn normal_count(&self) -> usize {
        self.normal_entries().len()
    }

    pub fn normal_subgroup(&self, i: usize) -> &NormalSubgroup {
        &self.normal_entries()[i].sub
    }

    pub fn normal_data(&self, i: usize) -> Result<&SubgroupData> {
        let e = &self.normal_entries()[i];
        if e.sub.order() == self.order() {
            return Ok(&self.whole);
        }
        try_init(&e.data, || SubgroupData::new(self.group(), self.classes(), &e.sub.group, &self.rf))
    }

    pub fn quotient_data(&self, i: usize) -> Result<&QuotientData> {
        let e = &self.normal_entries()[i];
        try_init(&e.quotient, || {
            if e.sub.order() == 1 {
                return Ok(QuotientData {
                    group: self.group().clone(),
                    table: self.whole.table.clone(),
                    inflation: (0..self.classes().len()).collect(),
                    blocks: self.whole.blocks.clone(),
                    quotient: None,
                });
            }
            let q = Quotient::new(self.group(), self.classes(), &e.sub.group)?;
            let qc = Arc::new(conjugacy_classes(&q.group)?);
            let table = CharacterTable::new(&q.group, qc.clone())?;
            let inflation = self.classes().reps().iter().map(|x| qc.class_of(&q.image(x)).unwrap()).collect();
            let blocks = block_partition_with(&table, &self.rf)?;
            Ok(QuotientData {
                group: q.group.clone(),
                table: Rc::new(table),
                inflation,
                blocks: Rc::new(blocks),
                quotient: Some(q),
            })
        })
    }

    /// `N_G(P)` for the chosen Sylow `p`-subgroup.
    pub fn sylow_normalizer(&self) -> Result<&SubgroupData> {
        try_init(&self.sylow_normalizer, || {
            let h = normalizer(self.group(), &self.sylow)?;
            if h.order() == self.order() {
                let w = &self.whole;
                return Ok(SubgroupData {
                    group: w.group.clone(),
                    table: w.table.clone(),
                    fusion: w.fusion.clone(),
                    blocks: w.blocks.clone(),
                });
            }
            SubgroupData::new(self.group(), self.classes(), &h, &self.rf)
        })
    }

    /// Builds table data for an arbitrary subgroup of `G`.
    pub fn subgroup_data(&self, h: &PermGroup) -> Result<SubgroupData> {
        SubgroupData::new(self.group(), self.classes(), h, &self.rf)
    }

    /// Builds table data for a subgroup `H ≤ G/N` of the quotient by normal
    /// subgroup `i`, with fusion into the classes of `G/N`.
    pub fn quotient_subgroup_data(&self, i: usize, h: &PermGroup) -> Result<SubgroupData> {
        let q = self.quotient_data(i)?;
        SubgroupData::new(&q.group, q.table.classes(), h, &self.rf)
    }
}
