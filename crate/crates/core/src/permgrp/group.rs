use alloc::vec::Vec;

use hashbrown::HashMap;

use super::chain::StabChain;
use crate::error::{precondition, Error, Result};
use crate::perm::Permutation;

/// Groups larger than this are refused by every operation that enumerates
/// elements.
pub const ELEMENT_LIMIT: u64 = 100_000;

/// A finite group given by permutation generators, certified by a
/// stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let chain = StabChain::new(degree, &generators);
        Ok(PermGroup { degree, generators, chain })
    }

    /// Build from raw image arrays, validating each one.
    pub fn from_image_arrays(degree: usize, generators: &[Vec<u32>]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| Permutation::from_images(g.clone()))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.chain.order()
    }

    pub fn base(&self) -> Vec<u32> {
        self.chain.base()
    }

    /// Sizes of the fundamental orbits along the stabilizer chain.
    pub fn orbit_sizes(&self) -> Vec<u64> {
        self.chain.levels.iter().map(|l| l.orbit.len() as u64).collect()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other
                .generators
                .iter()
                .all(|g| self.generators.iter().all(|h| self.contains(&h.conjugate_by(g))))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].compose(&g[j]) == g[j].compose(&g[i])))
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        let mut n = self.order();
        while n % p == 0 {
            n /= p;
        }
        n == 1
    }

    pub fn check_enumerable(&self) -> Result<()> {
        if self.order() > ELEMENT_LIMIT {
            Err(Error::GroupTooLarge(self.order()))
        } else {
            Ok(())
        }
    }

    /// All elements in lexicographic order of their image arrays.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        self.check_enumerable()?;
        let mut e = self.chain.elements();
        e.sort_unstable();
        Ok(e)
    }

    pub fn element_index(&self) -> Result<ElementIndex> {
        Ok(ElementIndex::new(self.elements()?))
    }

    /// Subgroup generated by `gens` (which must lie in `self`).
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        if let Some(g) = gens.iter().find(|g| !self.contains(g)) {
            return Err(precondition!("{g} is not an element of the group"));
        }
        PermGroup::new(self.degree, gens)
    }

    /// Subgroup whose full element list is `elems`, with generators chosen
    /// greedily in the given order.
    pub fn from_elements<'a, I>(degree: usize, elems: I) -> PermGroup
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut group = PermGroup::trivial(degree);
        let mut gens = Vec::new();
        for x in elems {
            if !group.contains(x) {
                gens.push(x.clone());
                group = PermGroup::new(degree, gens.clone()).unwrap();
            }
        }
        group
    }

    /// Smallest subgroup containing `gens` that is normalized by `self`.
    pub fn normal_closure(&self, gens: &[Permutation]) -> PermGroup {
        let mut current: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut group = PermGroup::new(self.degree, current.clone()).unwrap();
        loop {
            let mut added = false;
            let snapshot = current.clone();
            for x in &snapshot {
                for g in &self.generators {
                    let y = x.conjugate_by(g);
                    if !group.contains(&y) {
                        current.push(y);
                        group = PermGroup::new(self.degree, current.clone()).unwrap();
                        added = true;
                    }
                }
            }
            if !added {
                return group;
            }
        }
    }

    /// Join of two subgroups of a common overgroup.
    pub fn join(&self, other: &PermGroup) -> PermGroup {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        PermGroup::new(self.degree, gens).unwrap()
    }

    /// Element orders' least common multiple.
    pub fn exponent(&self) -> Result<u64> {
        Ok(self.elements()?.iter().fold(1, |acc, g| num_integer::lcm(acc, g.order())))
    }

    pub fn is_cyclic(&self) -> Result<bool> {
        let n = self.order();
        if self.is_abelian() {
            // An abelian group is cyclic iff its exponent equals its order.
            return Ok(self.exponent()? == n);
        }
        Ok(false)
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let g = &self.generators;
        let mut comms = Vec::new();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                comms.push(g[i].commutator(&g[j]));
            }
        }
        self.normal_closure(&comms)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }
}

/// Elements of a group in a fixed order, with reverse lookup.
#[derive(Clone, Debug)]
pub struct ElementIndex {
    elems: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

impl ElementIndex {
    pub fn new(elems: Vec<Permutation>) -> Self {
        let index = elems.iter().enumerate().map(|(i, g)| (g.clone(), i as u32)).collect();
        ElementIndex { elems, index }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn get(&self, i: usize) -> &Permutation {
        &self.elems[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elems
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).map(|&i| i as usize)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elems[a].compose(&self.elems[b])] as usize
    }
}
