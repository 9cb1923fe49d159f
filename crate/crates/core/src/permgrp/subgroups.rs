//! Subgroup constructions: Sylow, Frattini, normalizers, centralizers,
//! normal subgroups, `O_{p'}` and quotients.

use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use super::classes::ClassData;
use super::group::{ElementIndex, PermGroup};
use crate::arith::p_part;
use crate::error::{precondition, Result};
use crate::perm::Permutation;

/// A Sylow `p`-subgroup, grown from the trivial group by adjoining, at each
/// step, a `p`-element of the current normalizer that lies outside the
/// current subgroup.
pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Result<PermGroup> {
    let target = p_part(g.order(), p);
    let mut q = PermGroup::trivial(g.degree());
    if target == 1 {
        return Ok(q);
    }
    let elems = g.elements()?;
    while q.order() < target {
        let mut found = None;
        for x in &elems {
            let o = x.order();
            let h = x.pow((o / p_part(o, p)) as i64);
            if h.is_identity() || q.contains(&h) {
                continue;
            }
            if q.generators().iter().all(|y| q.contains(&y.conjugate_by(x))) {
                found = Some(h);
                break;
            }
        }
        let h = found.ok_or_else(|| crate::error::internal!("no p-element extends a non-Sylow p-subgroup"))?;
        let mut gens = q.generators().to_vec();
        gens.push(h);
        q = PermGroup::new(g.degree(), gens)?;
    }
    Ok(q)
}

/// `Φ(P) = P′·P^p` for a `p`-group `P`.
pub fn frattini_subgroup(pg: &PermGroup, p: u64) -> Result<PermGroup> {
    if !pg.is_p_group(p) {
        return Err(precondition!("group of order {} is not a {p}-group", pg.order()));
    }
    let mut gens: Vec<Permutation> = Vec::new();
    let mut sub = PermGroup::trivial(pg.degree());
    let mut push = |x: Permutation, sub: &mut PermGroup| {
        if !sub.contains(&x) {
            gens.push(x);
            *sub = PermGroup::new(pg.degree(), gens.clone()).unwrap();
        }
    };
    let g = pg.generators();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            push(g[i].commutator(&g[j]), &mut sub);
        }
    }
    for x in pg.elements()? {
        push(x.pow(p as i64), &mut sub);
    }
    Ok(pg.normal_closure(sub.generators()))
}

/// `|P : Φ(P)|`, which is `p^r` for `r` the minimal number of generators.
pub fn frattini_index(pg: &PermGroup, p: u64) -> Result<u64> {
    Ok(pg.order() / frattini_subgroup(pg, p)?.order())
}

pub fn normalizer(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    if !h.is_subgroup_of(g) {
        return Err(precondition!("normalizer requires a subgroup"));
    }
    let elems = g.elements()?;
    let keep: Vec<&Permutation> = elems
        .iter()
        .filter(|x| h.generators().iter().all(|y| h.contains(&y.conjugate_by(x))))
        .collect();
    Ok(PermGroup::from_elements(g.degree(), keep))
}

pub fn centralizer(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    if !h.is_subgroup_of(g) {
        return Err(precondition!("centralizer requires a subgroup"));
    }
    let elems = g.elements()?;
    let keep: Vec<&Permutation> = elems
        .iter()
        .filter(|x| h.generators().iter().all(|y| y.compose(x) == x.compose(y)))
        .collect();
    Ok(PermGroup::from_elements(g.degree(), keep))
}

/// A normal subgroup together with the classes of the ambient group it is
/// the union of.
#[derive(Clone, Debug)]
pub struct NormalSubgroup {
    pub group: PermGroup,
    pub classes: Vec<usize>,
}

impl NormalSubgroup {
    pub fn order(&self) -> u64 {
        self.group.order()
    }
}

struct ElementSet {
    members: Vec<bool>,
    gens: Vec<usize>,
}

fn closure(elements: &ElementIndex, gens: &[usize]) -> Vec<bool> {
    let mut members = alloc::vec![false; elements.len()];
    members[0] = true;
    let mut queue = alloc::vec![0usize];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        for &s in gens {
            let y = elements.mul(x, s);
            if !members[y] {
                members[y] = true;
                queue.push(y);
            }
        }
        k += 1;
    }
    members
}

/// Closure under right multiplication by `gens`, each given as the index
/// permutation `x ↦ x·s`.
fn closure_by_tables(n: usize, gens: &[&[u32]]) -> Vec<bool> {
    let mut members = alloc::vec![false; n];
    members[0] = true;
    let mut queue = alloc::vec![0u32];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k] as usize;
        for s in gens {
            let y = s[x];
            if !members[y as usize] {
                members[y as usize] = true;
                queue.push(y);
            }
        }
        k += 1;
    }
    members
}

/// Bit set of the classes contained in `set`; `rep_index[j]` is the element
/// index of the representative of class `j`.
fn class_key(rep_index: &[usize], set: &[bool]) -> Vec<u64> {
    let mut key = alloc::vec![0u64; rep_index.len().div_ceil(64)];
    for (j, &idx) in rep_index.iter().enumerate() {
        if set[idx] {
            key[j / 64] |= 1 << (j % 64);
        }
    }
    key
}

/// Every normal subgroup, found as joins of normal closures of single
/// classes. Sorted by order, then by class set.
pub fn normal_subgroups(g: &PermGroup, classes: &ClassData) -> Vec<NormalSubgroup> {
    let elements = classes.elements();
    let members = classes.all_members();
    let rep_index: Vec<usize> = classes.reps().iter().map(|r| elements.index_of(r).unwrap()).collect();
    let mut atoms: Vec<ElementSet> = Vec::new();
    let mut atom_keys: HashSet<Vec<u64>> = HashSet::new();
    for class in members.iter().skip(1) {
        let mut gens = Vec::new();
        let mut set = alloc::vec![false; elements.len()];
        set[0] = true;
        for &x in class {
            if !set[x] {
                gens.push(x);
                set = closure(elements, &gens);
            }
        }
        if atom_keys.insert(class_key(&rep_index, &set)) {
            atoms.push(ElementSet { members: set, gens });
        }
    }

    let mut right: HashMap<usize, Vec<u32>> = HashMap::new();
    for &x in atoms.iter().flat_map(|a| &a.gens) {
        right.entry(x).or_insert_with(|| (0..elements.len()).map(|y| elements.mul(y, x) as u32).collect());
    }
    let trivial = ElementSet { members: closure(elements, &[]), gens: Vec::new() };
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    seen.insert(class_key(&rep_index, &trivial.members));
    let mut found = alloc::vec![trivial];
    let mut k = 0;
    while k < found.len() {
        for atom in &atoms {
            let n = &found[k];
            if atom.gens.iter().all(|&x| n.members[x]) {
                continue;
            }
            let mut gens = n.gens.clone();
            gens.extend(atom.gens.iter().copied().filter(|&x| !n.members[x]));
            let tables: Vec<&[u32]> = gens.iter().map(|x| right[x].as_slice()).collect();
            let set = closure_by_tables(elements.len(), &tables);
            if seen.insert(class_key(&rep_index, &set)) {
                found.push(ElementSet { members: set, gens });
            }
        }
        k += 1;
    }

    let mut out: Vec<NormalSubgroup> = found
        .into_iter()
        .map(|s| {
            let gens = s.gens.iter().map(|&i| elements.get(i).clone()).collect();
            let cls = (0..classes.len())
                .filter(|&j| s.members[rep_index[j]])
                .collect();
            NormalSubgroup { group: PermGroup::new(g.degree(), gens).unwrap(), classes: cls }
        })
        .collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.classes.cmp(&b.classes)));
    out
}

/// Largest normal subgroup of order coprime to `p`.
pub fn o_p_prime(g: &PermGroup, classes: &ClassData, p: u64) -> PermGroup {
    normal_subgroups(g, classes)
        .into_iter()
        .filter(|n| n.order() % p != 0)
        .max_by_key(|n| n.order())
        .map(|n| n.group)
        .unwrap_or_else(|| PermGroup::trivial(g.degree()))
}

/// `G/N` realized as the action of `G` on the right cosets of `N`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: PermGroup,
    elements: ElementIndex,
    coset_of: Vec<u32>,
    coset_reps: Vec<usize>,
}

impl Quotient {
    pub fn new(g: &PermGroup, classes: &ClassData, n: &PermGroup) -> Result<Self> {
        if !n.is_normal_in(g) {
            return Err(precondition!("quotient requires a normal subgroup"));
        }
        let elements = classes.elements().clone();
        let n_elems = n.elements()?;
        let mut coset_of = alloc::vec![u32::MAX; elements.len()];
        let mut coset_reps = Vec::new();
        for i in 0..elements.len() {
            if coset_of[i] != u32::MAX {
                continue;
            }
            let c = coset_reps.len() as u32;
            coset_reps.push(i);
            let x = elements.get(i);
            for y in &n_elems {
                coset_of[elements.index_of(&y.compose(x)).unwrap()] = c;
            }
        }
        let mut q = Quotient { group: PermGroup::trivial(coset_reps.len()), elements, coset_of, coset_reps };
        let gens = g.generators().iter().map(|x| q.image(x)).collect();
        q.group = PermGroup::new(q.coset_reps.len(), gens)?;
        Ok(q)
    }

    pub fn index(&self) -> usize {
        self.coset_reps.len()
    }

    /// Image of an element of `G` in the coset action.
    pub fn image(&self, x: &Permutation) -> Permutation {
        let images = self
            .coset_reps
            .iter()
            .map(|&r| {
                let y = self.elements.get(r).compose(x);
                self.coset_of[self.elements.index_of(&y).unwrap()]
            })
            .collect();
        Permutation::from_images(images).unwrap()
    }

    /// Image of a subgroup of `G`.
    pub fn image_of_subgroup(&self, h: &PermGroup) -> PermGroup {
        let gens = h.generators().iter().map(|x| self.image(x)).collect();
        PermGroup::new(self.index(), gens).unwrap()
    }
}
