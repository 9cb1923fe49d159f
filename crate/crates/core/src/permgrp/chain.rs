//! Deterministic Schreier–Sims.
//!
//! Base points are always the smallest point moved by the element that forces
//! a new level, so two runs on the same generators produce identical chains.

use alloc::vec::Vec;

use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: u32,
    /// Strong generators fixing every earlier base point.
    pub gens: Vec<Permutation>,
    pub orbit: Vec<u32>,
    /// `transversal[γ]` maps the base point to `γ`.
    pub transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base: u32) -> Self {
        let mut transversal = alloc::vec![None; degree];
        transversal[base as usize] = Some(Permutation::identity(degree));
        Level { base, gens: Vec::new(), orbit: alloc::vec![base], transversal }
    }

    fn recompute_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal = alloc::vec![None; degree];
        self.transversal[self.base as usize] = Some(Permutation::identity(degree));
        self.orbit.clear();
        self.orbit.push(self.base);
        let mut k = 0;
        while k < self.orbit.len() {
            let gamma = self.orbit[k] as usize;
            for s in &self.gens {
                let next = s.image(gamma);
                if self.transversal[next].is_none() {
                    let u = self.transversal[gamma].as_ref().unwrap().compose(s);
                    self.transversal[next] = Some(u);
                    self.orbit.push(next as u32);
                }
            }
            k += 1;
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    pub degree: usize,
    pub levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabChain { degree, levels: Vec::new() };
        let gens: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return chain;
        }
        for g in &gens {
            if chain.levels.iter().all(|l| g.image(l.base as usize) == l.base as usize) {
                let b = g.smallest_moved_point().unwrap() as u32;
                chain.levels.push(Level::new(degree, b));
            }
        }
        for i in 0..chain.levels.len() {
            let fixed: Vec<u32> = chain.levels[..i].iter().map(|l| l.base).collect();
            chain.levels[i].gens = gens
                .iter()
                .filter(|g| fixed.iter().all(|&b| g.image(b as usize) == b as usize))
                .cloned()
                .collect();
            chain.levels[i].recompute_orbit();
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            let mut extended = None;
            'scan: for oi in 0..self.levels[lvl].orbit.len() {
                let gamma = self.levels[lvl].orbit[oi] as usize;
                for si in 0..self.levels[lvl].gens.len() {
                    let level = &self.levels[lvl];
                    let s = &level.gens[si];
                    let u_gamma = level.transversal[gamma].as_ref().unwrap();
                    let target = s.image(gamma);
                    let u_target = level.transversal[target].as_ref().unwrap();
                    let schreier = u_gamma.compose(s).compose(&u_target.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, drop) = self.strip(&schreier, lvl + 1);
                    if !residue.is_identity() {
                        extended = Some((residue, drop));
                        break 'scan;
                    }
                }
            }
            match extended {
                None => i -= 1,
                Some((residue, drop)) => {
                    if drop == self.levels.len() {
                        let b = residue.smallest_moved_point().unwrap() as u32;
                        self.levels.push(Level::new(self.degree, b));
                    }
                    for l in (lvl + 1)..=drop {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].recompute_orbit();
                    }
                    i = drop as isize;
                }
            }
        }
    }

    /// Sifts `g` from level `start` onwards. Returns the residue and the
    /// level at which sifting stopped (`levels.len()` if it passed all).
    pub fn strip(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (j, level) in self.levels.iter().enumerate().skip(start) {
            let beta = h.image(level.base as usize);
            match &level.transversal[beta] {
                None => return (h, j),
                Some(u) => h = h.compose(&u.inverse()),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.strip(g, 0).0.is_identity()
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Every element, as products `u_{k−1} ⋯ u_1 u_0` of transversal elements.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = alloc::vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for x in &out {
                for &gamma in &level.orbit {
                    next.push(x.compose(level.transversal[gamma as usize].as_ref().unwrap()));
                }
            }
            out = next;
        }
        out
    }
}
