//! Extending shift orbits up the tower `K_3 ⊂ K_4 ⊂ … ⊂ K_n` and to `B_n`.
//!
//! A homomorphism `K_n → Σ` is a cycle of the shift graph (the images
//! `a_m = ρ(z_m)`), a phase, and images `b_i = ρ(x_i)` for `3 ≤ i < n`
//! subject to
//!
//! * `a_m b_3 a_{m+2} = b_3 a_{m+1} b_3`
//! * `a_m b_i = b_i a_{m+1}` for `i ≥ 4`
//! * `b_i b_j = b_j b_i` for `|i - j| ≥ 2`, `b_i b_{i+1} b_i = b_{i+1} b_i b_{i+1}`
//!
//! for every `m`. All of these are invariant under rotating `m`, so the
//! admissible `b` depend only on the cycle ("class"), not on the phase.
//!
//! A class extends to `B_n` through any `c` with `a_m c = c a_{m+1}` that
//! commutes with every `b_i`. Such a `c` plays the role of `ρ(σ_1)⁻¹`
//! (see [`BraidExtension::braid_images`]).

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::shift::{Cycle, CycleId, CycleType, ShiftDecomposition, Vertex};

/// A homomorphism `K_n → Σ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    pub n: usize,
    pub cycle: CycleId,
    pub phase: usize,
    /// `b_3, …, b_{n-1}`.
    pub b: Vec<Elem>,
}

impl Representation {
    pub fn new(n: usize, cycle: CycleId, phase: usize, b: Vec<Elem>) -> Self {
        debug_assert_eq!(b.len() + 3, n.max(3));
        Representation { n, cycle, phase, b }
    }

    /// `ρ(z_m)`.
    pub fn a(&self, dec: &ShiftDecomposition, m: usize) -> Elem {
        dec.cycle(self.cycle).a(self.phase + m)
    }

    /// `ρ(x_i)` for `3 ≤ i < n`.
    pub fn b_at(&self, i: usize) -> Elem {
        self.b[i - 3]
    }

    pub fn is_trivial(&self, dec: &ShiftDecomposition) -> bool {
        self.cycle == dec.trivial_cycle() && self.b.iter().all(|&x| dec.group().is_identity(x))
    }

    /// Checks every defining relation of `K_n` over one full period.
    pub fn check_relations(&self, dec: &ShiftDecomposition) -> Result<()> {
        let g = dec.group();
        let cycle = dec.cycle(self.cycle);
        let p = cycle.len();
        let a = |m: usize| cycle.a(self.phase + m);
        let fail = |what: String| {
            Err(Error::invariant(format!(
                "K{} relation fails: {what}",
                self.n
            )))
        };
        for m in 0..p {
            if g.mul(a(m), a(m + 2)) != a(m + 1) {
                return fail(format!("z_{m} z_{} = z_{}", m + 2, m + 1));
            }
        }
        if let Some(&b3) = self.b.first() {
            if !k4_relation(g, cycle, b3) {
                return fail("z_m x_3 z_(m+2) = x_3 z_(m+1) x_3".into());
            }
        }
        for i in 4..self.n {
            let bi = self.b_at(i);
            if !intertwines(g, cycle, bi) {
                return fail(format!("z_m x_{i} = x_{i} z_(m+1)"));
            }
        }
        for i in 3..self.n {
            for j in i + 1..self.n {
                let (bi, bj) = (self.b_at(i), self.b_at(j));
                let ok = if j == i + 1 {
                    g.braids(bi, bj)
                } else {
                    g.commutes(bi, bj)
                };
                if !ok {
                    return fail(format!("x_{i}, x_{j}"));
                }
            }
        }
        Ok(())
    }
}

/// A homomorphism `B_n → Σ` in the form (restriction to `K_n`, `c`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidExtension {
    pub base: Representation,
    pub c: Elem,
}

impl BraidExtension {
    pub fn check(&self, dec: &ShiftDecomposition) -> Result<()> {
        self.base.check_relations(dec)?;
        let g = dec.group();
        let cycle = dec.cycle(self.base.cycle);
        if !intertwines(g, cycle, self.c) {
            return Err(Error::invariant("c does not satisfy a_m c = c a_(m+1)"));
        }
        if !self.base.b.iter().all(|&b| g.commutes(b, self.c)) {
            return Err(Error::invariant("c does not commute with every b_i"));
        }
        Ok(())
    }

    /// Images of `σ_1, …, σ_{n-1}`: `σ_1 ↦ c⁻¹`, `σ_2 = z_0 σ_1 ↦ a_0 c⁻¹`,
    /// `σ_i = x_i σ_1 ↦ b_i c⁻¹`.
    pub fn braid_images(&self, dec: &ShiftDecomposition) -> Vec<Elem> {
        let g = dec.group();
        let s1 = g.inv(self.c);
        let mut out = vec![s1, g.mul(self.base.a(dec, 0), s1)];
        out.extend(self.base.b.iter().map(|&b| g.mul(b, s1)));
        out.truncate(self.base.n - 1);
        out
    }
}

/// `a_m x = x a_{m+1}` for every `m`.
#[inline]
pub(crate) fn intertwines(g: &FiniteGroup, cycle: &Cycle, x: Elem) -> bool {
    (0..cycle.len()).all(|m| g.mul(cycle.a(m), x) == g.mul(x, cycle.a(m + 1)))
}

/// `a_m b a_{m+2} = b a_{m+1} b` for every `m`.
#[inline]
pub(crate) fn k4_relation(g: &FiniteGroup, cycle: &Cycle, b: Elem) -> bool {
    (0..cycle.len())
        .all(|m| g.mul_all([cycle.a(m), b, cycle.a(m + 2)]) == g.mul_all([b, cycle.a(m + 1), b]))
}

/// Every admissible `b_3` for a cycle; always contains the identity.
pub fn extend_to_k4(dec: &ShiftDecomposition, cycle: CycleId) -> Vec<Elem> {
    let g = dec.group();
    let cycle = dec.cycle(cycle);
    g.elements().filter(|&b| k4_relation(g, cycle, b)).collect()
}

/// Algorithm 1: every nontrivial `b_n` extending `rep ∈ Hom(K_n, Σ)` (with
/// `n ≥ 4`) to `K_{n+1}`, by exhaustive scan.
pub fn extend_step(dec: &ShiftDecomposition, rep: &Representation) -> Result<Vec<Elem>> {
    if rep.n < 4 {
        return Err(Error::usage(
            "extend_step needs a representation of K_n with n >= 4",
        ));
    }
    let g = dec.group();
    let cycle = dec.cycle(rep.cycle);
    let last = *rep.b.last().unwrap();
    let earlier = &rep.b[..rep.b.len() - 1];
    let found: Vec<Elem> = g
        .elements()
        .filter(|&x| !g.is_identity(x))
        .filter(|&x| g.braids(x, last))
        .filter(|&x| earlier.iter().all(|&b| g.commutes(x, b)))
        .filter(|&x| intertwines(g, cycle, x))
        .collect();
    for &x in &found {
        if g.commutes(x, last) {
            return Err(Error::invariant(format!(
                "new generator commutes with its neighbour on cycle {:?}",
                cycle.representative()
            )));
        }
        if !g.are_conjugate(x, last) {
            return Err(Error::invariant(
                "consecutive generator images are not conjugate",
            ));
        }
        if !g.element_order(x).is_multiple_of(cycle.len()) {
            return Err(Error::invariant(
                "cycle length does not divide the order of b",
            ));
        }
    }
    Ok(found)
}

/// Every `c` extending `rep` to `B_n`. The trivial representation admits
/// all of `Σ`.
pub fn extend_to_braid(dec: &ShiftDecomposition, rep: &Representation) -> Result<Vec<Elem>> {
    let g = dec.group();
    let cycle = dec.cycle(rep.cycle);
    let found: Vec<Elem> = g
        .elements()
        .filter(|&c| rep.b.iter().all(|&b| g.commutes(c, b)))
        .filter(|&c| intertwines(g, cycle, c))
        .collect();
    if !rep.is_trivial(dec) {
        let p = cycle.len();
        for &c in &found {
            let cp = g.pow(c, p);
            if g.is_identity(c) || !(0..p).all(|m| g.commutes(cp, cycle.a(m))) {
                return Err(Error::invariant(format!(
                    "braid extension {c:?} of a nontrivial representation breaks [c^p, a_m] = 1"
                )));
            }
        }
    }
    Ok(found)
}

/// Phase-free identity of a representation orbit: the cycle's canonical
/// vertex and the `b` tuple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct ClassKey {
    pub rep: Vertex,
    pub b: Vec<Elem>,
}

/// A class together with one admissible `c`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct BraidKey {
    pub class: ClassKey,
    pub c: Elem,
}

/// One surviving orbit of `Hom(K_n, Σ)` at some tower level.
#[derive(Clone, Debug)]
pub struct ClassEntry {
    pub cycle: CycleId,
    pub b: Vec<Elem>,
    /// Index of the restriction in the previous level.
    pub parent: Option<usize>,
    /// Admissible `c` for the extension to `B_n`.
    pub braid: Vec<Elem>,
}

#[derive(Clone, Debug)]
pub struct Level {
    pub n: usize,
    pub classes: Vec<ClassEntry>,
}

#[derive(Clone, Debug)]
pub struct TowerResult {
    dec: Arc<ShiftDecomposition>,
    levels: Vec<Level>,
}

impl TowerResult {
    pub fn decomposition(&self) -> &ShiftDecomposition {
        &self.dec
    }

    pub fn group(&self) -> &FiniteGroup {
        self.dec.group()
    }

    pub fn n_max(&self) -> usize {
        self.levels.last().map_or(3, |l| l.n)
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn level(&self, n: usize) -> &Level {
        assert!(
            (3..=self.n_max()).contains(&n),
            "level {n} outside computed range 3..={}",
            self.n_max()
        );
        &self.levels[n - 3]
    }

    pub fn cycle_len(&self, entry: &ClassEntry) -> usize {
        self.dec.cycle(entry.cycle).len()
    }

    /// Number of orbits (cycle, b-tuple).
    pub fn class_count(&self, n: usize) -> usize {
        self.level(n).classes.len()
    }

    /// `|Hom(K_n, Σ)|`: each orbit contributes its length.
    pub fn rep_count(&self, n: usize) -> usize {
        self.level(n)
            .classes
            .iter()
            .map(|c| self.cycle_len(c))
            .sum()
    }

    /// Number of (class, c) pairs.
    pub fn braid_class_count(&self, n: usize) -> usize {
        self.level(n).classes.iter().map(|c| c.braid.len()).sum()
    }

    /// `|Hom(B_n, Σ)|` for `n ≥ 3`.
    pub fn braid_rep_count(&self, n: usize) -> usize {
        self.level(n)
            .classes
            .iter()
            .map(|c| self.cycle_len(c) * c.braid.len())
            .sum()
    }

    pub fn is_trivial_entry(&self, entry: &ClassEntry) -> bool {
        let g = self.group();
        entry.cycle == self.dec.trivial_cycle() && entry.b.iter().all(|&x| g.is_identity(x))
    }

    /// True when only the trivial representation survives at level `n`.
    pub fn only_trivial(&self, n: usize) -> bool {
        let classes = &self.level(n).classes;
        classes.len() == 1 && self.is_trivial_entry(&classes[0])
    }

    pub fn representation(&self, n: usize, entry: &ClassEntry, phase: usize) -> Representation {
        Representation::new(n, entry.cycle, phase, entry.b.clone())
    }

    pub fn key(&self, entry: &ClassEntry) -> ClassKey {
        ClassKey {
            rep: self.dec.cycle(entry.cycle).representative(),
            b: entry.b.clone(),
        }
    }

    /// Class ↦ number of representations in it.
    pub fn class_census(&self, n: usize) -> BTreeMap<ClassKey, u64> {
        self.level(n)
            .classes
            .iter()
            .map(|c| (self.key(c), self.cycle_len(c) as u64))
            .collect()
    }

    /// (class, c) ↦ number of `B_n` homomorphisms. Also answers `n = 2`,
    /// where `K_2` is trivial and every `c` is admissible.
    pub fn braid_census(&self, n: usize) -> BTreeMap<BraidKey, u64> {
        if n == 2 {
            let e = self.group().identity();
            let class = ClassKey {
                rep: Vertex::new(e, e),
                b: vec![],
            };
            return self
                .group()
                .elements()
                .map(|c| {
                    (
                        BraidKey {
                            class: class.clone(),
                            c,
                        },
                        1,
                    )
                })
                .collect();
        }
        let mut out = BTreeMap::new();
        for entry in &self.level(n).classes {
            let p = self.cycle_len(entry) as u64;
            for &c in &entry.braid {
                out.insert(
                    BraidKey {
                        class: self.key(entry),
                        c,
                    },
                    p,
                );
            }
        }
        out
    }

    pub fn braid_hom_count(&self, n: usize) -> usize {
        if n == 2 {
            self.group().order()
        } else {
            self.braid_rep_count(n)
        }
    }
}

/// Runs the interleaved procedure up to `n_max`.
///
/// Level 3 holds every cycle with its `B_3` set `W` (elements with
/// `a_m c = c a_{m+1}`). Level 4 decorates each cycle with every admissible
/// `b_3`. From then on a class `[C, b_3, …, b_{i-1}]` is extended using the
/// `B_{i-1}` set of its restriction: candidates commuting with `b_{i-1}`
/// form its own `B_i` set, candidates braiding with `b_{i-1}` become `b_i`.
pub fn compute_tower(dec: Arc<ShiftDecomposition>, n_max: usize) -> Result<TowerResult> {
    if n_max < 3 {
        return Err(Error::usage("tower needs n_max >= 3"));
    }
    let g = dec.group();
    let base: Vec<ClassEntry> = dec
        .cycles()
        .par_iter()
        .map(|cycle| ClassEntry {
            cycle: cycle.id,
            b: vec![],
            parent: None,
            braid: g.elements().filter(|&c| intertwines(g, cycle, c)).collect(),
        })
        .collect();
    let mut levels = vec![Level {
        n: 3,
        classes: base,
    }];

    for n in 4..=n_max {
        let prev = levels.last().unwrap();
        let grand = levels.len().checked_sub(2).map(|k| &levels[k]);
        let children: Vec<Vec<ClassEntry>> = prev
            .classes
            .par_iter()
            .enumerate()
            .map(|(idx, class)| {
                let make = |b_new: Elem| {
                    let mut b = class.b.clone();
                    b.push(b_new);
                    ClassEntry {
                        cycle: class.cycle,
                        b,
                        parent: Some(idx),
                        braid: class
                            .braid
                            .iter()
                            .copied()
                            .filter(|&c| g.commutes(c, b_new))
                            .collect(),
                    }
                };
                match grand {
                    None => extend_to_k4(&dec, class.cycle)
                        .into_iter()
                        .map(make)
                        .collect(),
                    Some(grand) => {
                        let last = *class.b.last().unwrap();
                        let parent = &grand.classes[class.parent.unwrap()];
                        parent
                            .braid
                            .iter()
                            .copied()
                            .filter(|&c| g.braids(c, last))
                            .map(make)
                            .collect()
                    }
                }
            })
            .collect();
        levels.push(Level {
            n,
            classes: children.into_iter().flatten().collect(),
        });
    }
    Ok(TowerResult { dec, levels })
}

/// `|Hom(B_n, Σ)|` when `Hom(K_n, Σ)` is trivial: every homomorphism has
/// cyclic image, determined by the common image of the `σ_i`.
pub fn hom_bn_when_kn_trivial(tower: &TowerResult, n: usize) -> Result<usize> {
    if n > tower.n_max() {
        return Err(Error::usage(format!(
            "tower only computed up to n = {}",
            tower.n_max()
        )));
    }
    if n >= 3 && !tower.only_trivial(n) {
        return Err(Error::usage(format!(
            "Hom(K{n}, {}) is not trivial",
            tower.group().name()
        )));
    }
    Ok(tower.group().order())
}

/// Level-4 classes that carry a nontrivial `b_3`, grouped by `b_3`.
pub fn nontrivial_b3_table(tower: &TowerResult) -> BTreeMap<Elem, Vec<CycleId>> {
    let g = tower.group();
    let mut out: BTreeMap<Elem, Vec<CycleId>> = BTreeMap::new();
    if tower.n_max() < 4 {
        return out;
    }
    for entry in &tower.level(4).classes {
        if !g.is_identity(entry.b[0]) {
            out.entry(entry.b[0]).or_default().push(entry.cycle);
        }
    }
    out
}

/// Type of the cycle underlying a class.
pub fn class_type(tower: &TowerResult, entry: &ClassEntry) -> CycleType {
    tower.decomposition().cycle(entry.cycle).kind
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn dec(spec: &str) -> Arc<ShiftDecomposition> {
        Arc::new(ShiftDecomposition::new(Arc::new(FiniteGroup::from_spec(spec).unwrap())).unwrap())
    }

    fn vertex(d: &ShiftDecomposition, i: usize, j: usize) -> Vertex {
        let g = d.group();
        Vertex::new(
            g.element_by_label(i).unwrap(),
            g.element_by_label(j).unwrap(),
        )
    }

    fn perm(g: &FiniteGroup, r: usize, cycles: &[&[usize]]) -> Elem {
        g.find_permutation(&Permutation::from_cycles(r, cycles).unwrap())
            .unwrap()
    }

    #[test]
    fn trivial_cycle_only_takes_identity_b3() {
        let d = dec("S3");
        let b = extend_to_k4(&d, d.trivial_cycle());
        assert_eq!(b, vec![d.group().identity()]);
    }

    #[test]
    fn s3_cycles_admit_only_identity_b3() {
        let d = dec("S3");
        for c in d.cycles() {
            assert_eq!(extend_to_k4(&d, c.id), vec![d.group().identity()]);
        }
    }

    #[test]
    fn s4_nontrivial_b3() {
        let d = dec("S4");
        let listed = [
            (4, 5),
            (4, 9),
            (4, 16),
            (4, 20),
            (5, 12),
            (5, 13),
            (5, 21),
            (9, 13),
            (12, 20),
            (16, 21),
        ];
        for c in d.cycles() {
            let labels: Vec<usize> = extend_to_k4(&d, c.id).iter().map(|e| e.label()).collect();
            let r = c.representative();
            if listed.contains(&(r.a0.label(), r.a1.label())) {
                assert_eq!(labels, vec![1, 8, 17, 24], "{r:?}");
            } else {
                assert_eq!(labels, vec![1], "{r:?}");
            }
        }
    }

    #[test]
    fn type_one_and_coprime_cycles_are_rigid() {
        for spec in ["S4", "SL2(3)", "Z6"] {
            let d = dec(spec);
            let g = d.group();
            for c in d.cycles() {
                let b = extend_to_k4(&d, c.id);
                assert!(b.contains(&g.identity()));
                let coprime = gcd(c.len(), g.order()) == 1;
                if c.kind == CycleType::I || coprime {
                    assert_eq!(b, vec![g.identity()], "{spec} {:?}", c.representative());
                }
                for &x in &b {
                    assert!(g.is_identity(g.pow(x, c.len())));
                }
            }
        }
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn s4_k4_classes_do_not_reach_k5() {
        let d = dec("S4");
        for c in d.cycles() {
            for b3 in extend_to_k4(&d, c.id) {
                let rep = Representation::new(4, c.id, 0, vec![b3]);
                assert!(extend_step(&d, &rep).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn pi_restricted_to_k5_in_s5() {
        let d = dec("S5");
        let g = d.group();
        let v = Vertex::new(perm(g, 5, &[&[1, 3, 2]]), perm(g, 5, &[&[1, 2, 3]]));
        let (id, phase) = d.locate(v);
        let b3 = perm(g, 5, &[&[1, 2], &[3, 4]]);
        let rep = Representation::new(4, id, phase, vec![b3]);
        rep.check_relations(&d).unwrap();
        let b4 = extend_step(&d, &rep).unwrap();
        assert!(b4.contains(&perm(g, 5, &[&[1, 2], &[4, 5]])));
    }

    #[test]
    fn braid_extension_sets() {
        let d = dec("S3");
        let g = d.group();
        let triv = Representation::new(3, d.trivial_cycle(), 0, vec![]);
        assert_eq!(extend_to_braid(&d, &triv).unwrap().len(), 6);
        let id = d.cycle_at(vertex(&d, 4, 5)).unwrap();
        let rep = Representation::new(3, id, 0, vec![]);
        let mut cs = extend_to_braid(&d, &rep).unwrap();
        cs.sort();
        let mut transpositions = vec![
            perm(g, 3, &[&[1, 2]]),
            perm(g, 3, &[&[1, 3]]),
            perm(g, 3, &[&[2, 3]]),
        ];
        transpositions.sort();
        assert_eq!(cs, transpositions);
    }

    #[test]
    fn length_nine_cycles_never_reach_braid_group_in_s4() {
        let d = dec("S4");
        for c in d.cycles().iter().filter(|c| c.len() == 9) {
            let rep = Representation::new(3, c.id, 0, vec![]);
            assert!(extend_to_braid(&d, &rep).unwrap().is_empty());
        }
    }

    #[test]
    fn small_towers() {
        let t = compute_tower(dec("S2"), 5).unwrap();
        assert_eq!([t.rep_count(3), t.rep_count(4), t.rep_count(5)], [4, 4, 1]);
        let t = compute_tower(dec("S3"), 5).unwrap();
        assert_eq!(
            [t.rep_count(3), t.rep_count(4), t.rep_count(5)],
            [36, 36, 1]
        );
        assert!(t.only_trivial(5));
    }

    #[test]
    fn s4_tower_counts() {
        let t = compute_tower(dec("S4"), 5).unwrap();
        assert_eq!(t.class_count(4), t.class_count(3) + 30);
        assert_eq!(t.rep_count(4), t.rep_count(3) + 96);
        assert!(t.only_trivial(5));
        let table = nontrivial_b3_table(&t);
        let keys: Vec<usize> = table.keys().map(|e| e.label()).collect();
        assert_eq!(keys, vec![8, 17, 24]);
        assert!(table.values().all(|v| v.len() == 10));
    }

    #[test]
    fn dichotomy_agrees_with_direct_scan() {
        for spec in ["S4", "S5", "SL2(3)"] {
            let d = dec(spec);
            let t = compute_tower(d.clone(), 6).unwrap();
            for n in 4..6 {
                let next = t.level(n + 1);
                for (idx, class) in t.level(n).classes.iter().enumerate() {
                    let rep = t.representation(n, class, 0);
                    let direct = if t.is_trivial_entry(class) {
                        vec![d.group().identity()]
                    } else {
                        extend_step(&d, &rep).unwrap()
                    };
                    let staged: Vec<Elem> = next
                        .classes
                        .iter()
                        .filter(|c| c.parent == Some(idx))
                        .map(|c| *c.b.last().unwrap())
                        .collect();
                    assert_eq!(direct, staged, "{spec} level {n}");
                    assert_eq!(extend_to_braid(&d, &rep).unwrap(), class.braid);
                }
            }
        }
    }

    #[test]
    fn admissible_sets_do_not_depend_on_phase() {
        let d = dec("S4");
        let g = d.group();
        for c in d.cycles() {
            let b3 = extend_to_k4(&d, c.id);
            for phase in 0..c.len() {
                for x in g.elements() {
                    let rep = Representation::new(4, c.id, phase, vec![x]);
                    assert_eq!(rep.check_relations(&d).is_ok(), b3.contains(&x));
                }
            }
        }
    }

    #[test]
    fn braid_images_satisfy_braid_relations() {
        let d = dec("S4");
        let t = compute_tower(d.clone(), 4).unwrap();
        let g = d.group();
        for n in 3..=4 {
            for class in &t.level(n).classes {
                for &c in &class.braid {
                    for phase in 0..t.cycle_len(class) {
                        let ext = BraidExtension {
                            base: t.representation(n, class, phase),
                            c,
                        };
                        ext.check(&d).unwrap();
                        let s = ext.braid_images(&d);
                        assert_eq!(s.len(), n - 1);
                        for i in 0..s.len() {
                            for j in i + 1..s.len() {
                                let ok = if j == i + 1 {
                                    g.braids(s[i], s[j])
                                } else {
                                    g.commutes(s[i], s[j])
                                };
                                assert!(ok);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cyclic_image_count() {
        let t = compute_tower(dec("S4"), 6).unwrap();
        assert_eq!(hom_bn_when_kn_trivial(&t, 6).unwrap(), 24);
        assert_eq!(t.braid_hom_count(6), 24);
        assert!(hom_bn_when_kn_trivial(&t, 4).is_err());
        let t = compute_tower(dec("S2"), 5).unwrap();
        assert_eq!(hom_bn_when_kn_trivial(&t, 5).unwrap(), 2);
        let t = compute_tower(dec("Z6"), 5).unwrap();
        assert_eq!(hom_bn_when_kn_trivial(&t, 5).unwrap(), 6);
    }

    #[test]
    fn restriction_is_consistent() {
        let t = compute_tower(dec("S5"), 6).unwrap();
        for n in 4..=6 {
            let prev = t.level(n - 1);
            for class in &t.level(n).classes {
                let parent = &prev.classes[class.parent.unwrap()];
                assert_eq!(parent.cycle, class.cycle);
                assert_eq!(parent.b[..], class.b[..class.b.len() - 1]);
            }
        }
    }
}
