use alloc::vec::Vec;

use super::group::{ElementIndex, PermGroup};
use crate::error::{precondition, Result};
use crate::perm::Permutation;

/// Conjugacy classes of a permutation group together with power maps.
///
/// Classes are ordered by (element order, class size, representative), and
/// each representative is the lexicographically smallest element of its
/// class. Class 0 is always the identity.
#[derive(Clone, Debug)]
pub struct ClassData {
    reps: Vec<Permutation>,
    sizes: Vec<u64>,
    orders: Vec<u64>,
    exponent: u64,
    /// `power[j][m]` is the class of `reps[j]^m` for `0 ≤ m < exponent`.
    power: Vec<Vec<u32>>,
    inverse: Vec<usize>,
    group_order: u64,
    elements: ElementIndex,
    class_of: Vec<u32>,
}

impl ClassData {
    pub fn new(group: &PermGroup) -> Result<Self> {
        let elements = group.element_index()?;
        let n = elements.len();
        let mut raw_class = alloc::vec![u32::MAX; n];
        let mut members: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if raw_class[start] != u32::MAX {
                continue;
            }
            let id = members.len() as u32;
            raw_class[start] = id;
            let mut orbit = alloc::vec![start as u32];
            let mut k = 0;
            while k < orbit.len() {
                let x = elements.get(orbit[k] as usize).clone();
                for g in group.generators() {
                    let y = elements.index_of(&x.conjugate_by(g)).unwrap();
                    if raw_class[y] == u32::MAX {
                        raw_class[y] = id;
                        orbit.push(y as u32);
                    }
                }
                k += 1;
            }
            members.push(orbit);
        }
        // `start` is the smallest index of every orbit, hence the smallest element.
        let mut keyed: Vec<(u64, u64, u32, usize)> = members
            .iter()
            .enumerate()
            .map(|(raw, m)| {
                let rep = *m.iter().min().unwrap();
                (elements.get(rep as usize).order(), m.len() as u64, rep, raw)
            })
            .collect();
        keyed.sort_unstable();
        let mut relabel = alloc::vec![0u32; members.len()];
        for (new, k) in keyed.iter().enumerate() {
            relabel[k.3] = new as u32;
        }
        let class_of: Vec<u32> = raw_class.iter().map(|&c| relabel[c as usize]).collect();
        let reps: Vec<Permutation> = keyed.iter().map(|k| elements.get(k.2 as usize).clone()).collect();
        let sizes: Vec<u64> = keyed.iter().map(|k| k.1).collect();
        let orders: Vec<u64> = keyed.iter().map(|k| k.0).collect();
        let exponent = orders.iter().fold(1, |a, &o| num_integer::lcm(a, o));

        let mut power = Vec::with_capacity(reps.len());
        for rep in &reps {
            let mut row = Vec::with_capacity(exponent as usize);
            let mut x = Permutation::identity(group.degree());
            for _ in 0..exponent {
                row.push(class_of[elements.index_of(&x).unwrap()]);
                x = x.compose(rep);
            }
            power.push(row);
        }
        let inverse = power.iter().map(|row| row[(exponent - 1) as usize] as usize).collect();
        Ok(ClassData {
            reps,
            sizes,
            orders,
            exponent,
            power,
            inverse,
            group_order: group.order(),
            elements,
            class_of,
        })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn rep(&self, j: usize) -> &Permutation {
        &self.reps[j]
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn size(&self, j: usize) -> u64 {
        self.sizes[j]
    }

    /// Order of the elements in class `j`.
    pub fn element_order(&self, j: usize) -> u64 {
        self.orders[j]
    }

    pub fn centralizer_order(&self, j: usize) -> u64 {
        self.group_order / self.sizes[j]
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Class of `reps[j]^m`; `m` may be any integer.
    pub fn power(&self, j: usize, m: i64) -> usize {
        let e = self.exponent as i64;
        self.power[j][m.rem_euclid(e) as usize] as usize
    }

    pub fn inverse_class(&self, j: usize) -> usize {
        self.inverse[j]
    }

    pub fn elements(&self) -> &ElementIndex {
        &self.elements
    }

    pub fn class_of_index(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    /// Class containing `g`, or `None` when `g` is not in the group.
    pub fn class_of(&self, g: &Permutation) -> Option<usize> {
        self.elements.index_of(g).map(|i| self.class_of[i] as usize)
    }

    /// Element indices of class `j`.
    pub fn members(&self, j: usize) -> Vec<usize> {
        (0..self.elements.len()).filter(|&i| self.class_of[i] as usize == j).collect()
    }

    /// Per-class member lists, in one pass.
    pub fn all_members(&self) -> Vec<Vec<usize>> {
        let mut out = alloc::vec![Vec::new(); self.len()];
        for (i, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push(i);
        }
        out
    }
}

/// Maps each `H`-class to the `G`-class containing its representative.
pub fn class_fusion(
    g: &PermGroup,
    h: &PermGroup,
    classes_g: &ClassData,
    classes_h: &ClassData,
) -> Result<Vec<usize>> {
    if !h.is_subgroup_of(g) {
        return Err(precondition!("fusion requires a subgroup"));
    }
    classes_h
        .reps()
        .iter()
        .map(|r| classes_g.class_of(r).ok_or_else(|| precondition!("{r} is not in the overgroup")))
        .collect()
}
