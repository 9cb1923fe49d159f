//! `p`-blocks from central characters.
//!
//! Two characters share a block iff their central characters
//! `ω_χ(K̂) = |K|χ(g_K)/χ(1)` agree modulo the chosen maximal ideal over `p`
//! on every class. Defects and heights come from degrees alone.

use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::valuation;
use crate::chartab::CharacterTable;
use crate::cyclo::{make_residue_field, Cyclotomic, FieldElement, GaloisElement, ResidueField};
use crate::error::{internal, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    /// Ascending character indices.
    pub char_indices: Vec<usize>,
    pub defect: u32,
    /// Heights, aligned with `char_indices`.
    pub heights: Vec<u32>,
}

impl Block {
    pub fn contains(&self, chi: usize) -> bool {
        self.char_indices.binary_search(&chi).is_ok()
    }

    pub fn len(&self) -> usize {
        self.char_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.char_indices.is_empty()
    }

    /// Characters of height zero.
    pub fn height_zero(&self) -> Vec<usize> {
        self.char_indices.iter().zip(&self.heights).filter(|(_, &h)| h == 0).map(|(&c, _)| c).collect()
    }
}

#[derive(Clone, Debug)]
pub struct CentralCharacter {
    pub values: Vec<Cyclotomic>,
    pub reduced: Vec<FieldElement>,
}

pub fn central_character(table: &CharacterTable, chi: usize, rf: &ResidueField) -> Result<CentralCharacter> {
    let deg = BigInt::from(table.degree(chi));
    let classes = table.classes();
    let values: Vec<Cyclotomic> = (0..table.len())
        .map(|k| {
            table
                .value(chi, k)
                .scale(&BigInt::from(classes.size(k)))
                .div_exact(&deg)
                .ok_or_else(|| internal!("central character value is not an algebraic integer"))
        })
        .collect::<Result<_>>()?;
    let reduced = values.iter().map(|v| rf.reduce(v)).collect::<Result<_>>()?;
    Ok(CentralCharacter { values, reduced })
}

/// Partition of `Irr(G)` into `p`-blocks. Blocks are ordered by their
/// smallest character, so the principal block comes first.
#[derive(Clone, Debug)]
pub struct BlockPartition {
    pub p: u64,
    pub blocks: Vec<Block>,
    pub principal_index: usize,
    block_of: Vec<usize>,
    /// Reduced central character of each block.
    lambda: Vec<Vec<FieldElement>>,
}

impl BlockPartition {
    pub fn block_of(&self, chi: usize) -> usize {
        self.block_of[chi]
    }

    pub fn principal(&self) -> &Block {
        &self.blocks[self.principal_index]
    }

    /// Reduced central character `λ_B` of block `b`, one value per class.
    pub fn central_character(&self, b: usize) -> &[FieldElement] {
        &self.lambda[b]
    }

    /// The block whose reduced central character equals `lambda`.
    pub fn find_by_central_character(&self, lambda: &[FieldElement]) -> Option<usize> {
        self.lambda.iter().position(|l| l.as_slice() == lambda)
    }

    /// The block with exactly this character set.
    pub fn find_by_characters(&self, chars: &[usize]) -> Option<usize> {
        let first = *chars.first()?;
        let b = self.block_of[first];
        (self.blocks[b].char_indices == chars).then_some(b)
    }

    /// Character sets only, for comparing partitions.
    pub fn character_sets(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.char_indices.clone()).collect()
    }
}

pub fn block_partition(table: &CharacterTable, p: u64) -> Result<BlockPartition> {
    let rf = make_residue_field(table.modulus(), p)?;
    block_partition_with(table, &rf)
}

/// Block partition for an explicit residue field, whose cyclotomic modulus
/// must be a multiple of the table's.
pub fn block_partition_with(table: &CharacterTable, rf: &ResidueField) -> Result<BlockPartition> {
    let p = rf.characteristic();
    let order_val = valuation(table.classes().group_order(), p);
    let mut index: HashMap<Vec<FieldElement>, usize> = HashMap::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut lambda = Vec::new();
    let mut block_of = alloc::vec![0; table.len()];
    for chi in 0..table.len() {
        let w = central_character(table, chi, rf)?.reduced;
        let b = *index.entry(w.clone()).or_insert_with(|| {
            members.push(Vec::new());
            lambda.push(w);
            members.len() - 1
        });
        members[b].push(chi);
        block_of[chi] = b;
    }
    let blocks = members
        .into_iter()
        .map(|chars| {
            let vals: Vec<u32> = chars.iter().map(|&c| valuation(table.degree(c), p)).collect();
            let min = *vals.iter().min().unwrap();
            let defect = order_val - min;
            Block { char_indices: chars, defect, heights: vals.iter().map(|v| v - min).collect() }
        })
        .collect();
    Ok(BlockPartition { p, blocks, principal_index: block_of[0], block_of, lambda })
}

pub fn principal_block(table: &CharacterTable, p: u64) -> Result<Block> {
    Ok(block_partition(table, p)?.principal().clone())
}

/// `Irr_{0,g}(B_0(G))`: principal-block characters of `p′`-degree fixed by `g`.
pub fn irr0_fixed(table: &CharacterTable, blocks: &BlockPartition, g: &GaloisElement) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for &chi in &blocks.principal().char_indices {
        if table.degree(chi) % blocks.p != 0 && table.sigma_fixed(chi, g)? {
            out.push(chi);
        }
    }
    Ok(out)
}

pub fn irr0_sigma_set(table: &CharacterTable, p: u64, g: &GaloisElement) -> Result<Vec<usize>> {
    irr0_fixed(table, &block_partition(table, p)?, g)
}

pub fn k0_sigma(table: &CharacterTable, p: u64, g: &GaloisElement) -> Result<usize> {
    Ok(irr0_sigma_set(table, p, g)?.len())
}

/// Brauer induction `b ↦ b^G` for `b` a block of `H ≤ G`:
/// `λ_b^G(K̂) = Σ_{L ⊆ K ∩ H} λ_b(L̂)`. `None` when no block of `G` has this
/// central character.
pub fn induced_block(
    fusion: &[usize],
    blocks_h: &BlockPartition,
    b: usize,
    blocks_g: &BlockPartition,
    rf: &ResidueField,
) -> Option<usize> {
    let lam_h = blocks_h.central_character(b);
    let r_g = blocks_g.central_character(0).len();
    let mut lam = alloc::vec![rf.zero(); r_g];
    for (l, &k) in fusion.iter().enumerate() {
        lam[k] = rf.add(&lam[k], &lam_h[l]);
    }
    blocks_g.find_by_central_character(&lam)
}

/// The block of `G` containing the inflations of `Irr(B̄)`, where
/// `inflation[k]` is the class of `G/N` containing the image of class `k`.
pub fn dominated_block(
    inflation: &[usize],
    table_q: &CharacterTable,
    blocks_q: &BlockPartition,
    bbar: usize,
    table_g: &CharacterTable,
    blocks_g: &BlockPartition,
) -> Result<usize> {
    let mut found = None;
    for &chi in &blocks_q.blocks[bbar].char_indices {
        let inflated = crate::chartab::ClassFunction::new(inflation.iter().map(|&k| table_q.value(chi, k).clone()).collect());
        let row = table_g.find_row(&inflated).ok_or_else(|| internal!("inflated character is not irreducible"))?;
        let b = blocks_g.block_of(row);
        match found {
            None => found = Some(b),
            Some(prev) if prev != b => return Err(internal!("inflations of one block land in distinct blocks")),
            _ => {}
        }
    }
    found.ok_or_else(|| internal!("empty block"))
}

/// The block `ξB = {ξχ : χ ∈ Irr(B)}` for a linear character `ξ`.
pub fn linear_twist_block(table: &CharacterTable, blocks: &BlockPartition, xi: usize, b: usize) -> Result<usize> {
    if table.degree(xi) != 1 {
        return Err(crate::error::precondition!("twisting character has degree {}", table.degree(xi)));
    }
    let mut chars: Vec<usize> = blocks.blocks[b]
        .char_indices
        .iter()
        .map(|&chi| table.product_row(chi, xi).ok_or_else(|| internal!("product with a linear character is reducible")))
        .collect::<Result<_>>()?;
    chars.sort_unstable();
    blocks.find_by_characters(&chars).ok_or_else(|| internal!("twisted character set is not a block"))
}
