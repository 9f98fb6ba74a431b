//! Derived series by brute-force commutator closure.

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};

pub const DEFAULT_DERIVED_CAP: usize = 5040;

#[derive(Clone, Debug)]
pub struct DerivedSeries {
    /// `G = G^(0) ⊵ G^(1) ⊵ …`, each as a sorted element set; the last term
    /// is the perfect core.
    pub terms: Vec<Vec<Elem>>,
}

impl DerivedSeries {
    pub fn perfect_core(&self) -> &[Elem] {
        self.terms.last().expect("series is never empty")
    }

    pub fn is_solvable(&self) -> bool {
        self.perfect_core().len() == 1
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Vec::len).collect()
    }
}

/// Subgroup generated by `gens` (closure under products; finite group).
pub fn generated_subgroup(g: &FiniteGroup, gens: &[Elem]) -> Vec<Elem> {
    let mut member = vec![false; g.order()];
    member[g.identity().index()] = true;
    let mut found = vec![g.identity()];
    let mut frontier = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if !member[y.index()] {
                member[y.index()] = true;
                found.push(y);
                frontier.push(y);
            }
        }
    }
    found.sort();
    found
}

/// Commutator subgroup `[H, H]` of a subgroup given as an element set.
pub fn commutator_subgroup(g: &FiniteGroup, h: &[Elem]) -> Vec<Elem> {
    let mut gens: Vec<Elem> = h
        .iter()
        .flat_map(|&x| h.iter().map(move |&y| (x, y)))
        .map(|(x, y)| g.commutator(x, y))
        .collect();
    gens.sort();
    gens.dedup();
    generated_subgroup(g, &gens)
}

pub fn derived_series(g: &FiniteGroup, cap: usize) -> Result<DerivedSeries> {
    if g.order() > cap {
        return Err(Error::Resource {
            what: "derived series group order",
            needed: g.order() as u128,
            cap: cap as u128,
        });
    }
    let mut terms = vec![g.elements().collect::<Vec<_>>()];
    loop {
        let next = commutator_subgroup(g, terms.last().unwrap());
        if &next == terms.last().unwrap() {
            return Ok(DerivedSeries { terms });
        }
        terms.push(next);
    }
}

/// The perfect core as a group in its own right (elements embedded in `g`).
pub fn perfect_core_group(g: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    let series = derived_series(g, cap)?;
    g.subgroup(series.perfect_core())
}
