//! The representation shift of `K_3`: the successor map
//! `(a_m, a_{m+1}) ↦ (a_{m+1}, a_m⁻¹ a_{m+1})` on `Σ²` and its orbits.
//!
//! `K_3` is free on `z_0, z_1`, so a homomorphism `K_3 → Σ` is a vertex
//! `(ρ(z_0), ρ(z_1))`; the relation `z_m z_{m+2} = z_{m+1}` determines every
//! other `ρ(z_m)`, and the successor map is conjugation by `σ_1`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::Representation;
use crate::group::{Elem, FiniteGroup};

pub const DEFAULT_VERTEX_CAP: usize = 10_000_000;

/// A node of the shift graph: the pair `(ρ(z_0), ρ(z_1))`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Vertex {
    pub a0: Elem,
    pub a1: Elem,
}

impl Vertex {
    pub fn new(a0: Elem, a1: Elem) -> Self {
        Vertex { a0, a1 }
    }
}

pub fn successor(g: &FiniteGroup, v: Vertex) -> Vertex {
    Vertex::new(v.a1, g.mul(g.inv(v.a0), v.a1))
}

pub fn predecessor(g: &FiniteGroup, v: Vertex) -> Vertex {
    Vertex::new(g.mul(v.a0, g.inv(v.a1)), v.a0)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum CycleType {
    /// Some vertex has equal components.
    I,
    II,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleId(pub u32);

impl CycleId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug)]
pub struct Cycle {
    pub id: CycleId,
    /// Starts at the lexicographically least vertex.
    pub vertices: Vec<Vertex>,
    pub kind: CycleType,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn representative(&self) -> Vertex {
        self.vertices[0]
    }

    /// `a_k`, with `k` taken mod the length.
    #[inline]
    pub fn a(&self, k: usize) -> Elem {
        self.vertices[k % self.vertices.len()].a0
    }

    /// `a_0, …, a_{p-1}`.
    pub fn a_sequence(&self) -> Vec<Elem> {
        self.vertices.iter().map(|v| v.a0).collect()
    }

    /// The listing word `[a_2, …, a_{p-1}, a_0, a_1]`.
    pub fn word(&self) -> Vec<Elem> {
        let p = self.len();
        (1..=p).map(|k| self.vertices[k % p].a1).collect()
    }
}

#[derive(Clone, Debug)]
pub struct ShiftDecomposition {
    group: Arc<FiniteGroup>,
    cycles: Vec<Cycle>,
    // vertex index a0 * |Σ| + a1  ->  (cycle, position in cycle)
    cycle_of: Vec<u32>,
    phase_of: Vec<u32>,
    trivial: CycleId,
}

impl ShiftDecomposition {
    /// Splits `Σ²` into successor orbits, seeding in lex order so that each
    /// orbit is discovered from its least vertex.
    pub fn decompose(group: Arc<FiniteGroup>, vertex_cap: usize) -> Result<Self> {
        let n = group.order();
        let total = n * n;
        if total > vertex_cap {
            return Err(Error::Resource {
                what: "shift graph vertices",
                needed: total as u128,
                cap: vertex_cap as u128,
            });
        }
        let g = &*group;
        let key = |v: Vertex| v.a0.index() * n + v.a1.index();
        let mut cycle_of = vec![u32::MAX; total];
        let mut phase_of = vec![0u32; total];
        let mut cycles = Vec::new();
        for a0 in g.elements() {
            for a1 in g.elements() {
                let seed = Vertex::new(a0, a1);
                if cycle_of[key(seed)] != u32::MAX {
                    continue;
                }
                let id = CycleId(cycles.len() as u32);
                let mut vertices = Vec::new();
                let mut v = seed;
                loop {
                    if cycle_of[key(v)] != u32::MAX {
                        return Err(Error::invariant("successor map is not a bijection"));
                    }
                    cycle_of[key(v)] = id.0;
                    phase_of[key(v)] = vertices.len() as u32;
                    vertices.push(v);
                    v = successor(g, v);
                    if v == seed {
                        break;
                    }
                }
                let kind = if vertices.iter().any(|v| v.a0 == v.a1) {
                    CycleType::I
                } else {
                    CycleType::II
                };
                let cycle = Cycle { id, vertices, kind };
                if !g.is_identity(g.mul_all(cycle.a_sequence())) {
                    return Err(Error::invariant(format!(
                        "product a_0…a_(p-1) is not 1 on cycle at {:?}",
                        cycle.representative()
                    )));
                }
                cycles.push(cycle);
            }
        }
        let e = g.identity();
        let trivial = CycleId(cycle_of[key(Vertex::new(e, e))]);
        Ok(ShiftDecomposition {
            group,
            cycles,
            cycle_of,
            phase_of,
            trivial,
        })
    }

    pub fn new(group: Arc<FiniteGroup>) -> Result<Self> {
        Self::decompose(group, DEFAULT_VERTEX_CAP)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn cycle(&self, id: CycleId) -> &Cycle {
        &self.cycles[id.index()]
    }

    pub fn trivial_cycle(&self) -> CycleId {
        self.trivial
    }

    /// Cycle containing `v` and the position of `v` in it.
    pub fn locate(&self, v: Vertex) -> (CycleId, usize) {
        let k = v.a0.index() * self.group.order() + v.a1.index();
        (CycleId(self.cycle_of[k]), self.phase_of[k] as usize)
    }

    /// Cycle whose canonical representative is `v`, if any.
    pub fn cycle_at(&self, v: Vertex) -> Option<CycleId> {
        match self.locate(v) {
            (id, 0) => Some(id),
            _ => None,
        }
    }

    /// `p ↦ n_p`, the number of cycles of each length.
    pub fn period_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for c in &self.cycles {
            *census.entry(c.len()).or_insert(0) += 1;
        }
        census
    }

    pub fn cycles_of_type(&self, kind: CycleType) -> impl Iterator<Item = &Cycle> {
        self.cycles.iter().filter(move |c| c.kind == kind)
    }

    /// Number of cycles and of representations (sum of lengths) of a type.
    pub fn type_totals(&self, kind: CycleType) -> (usize, usize) {
        self.cycles_of_type(kind)
            .fold((0, 0), |(n, reps), c| (n + 1, reps + c.len()))
    }

    /// Graphviz rendering: one node per vertex, one edge per successor link.
    pub fn to_dot(&self) -> String {
        let g = &*self.group;
        let mut out = String::new();
        writeln!(out, "digraph shift {{").unwrap();
        writeln!(out, "  label=\"representation shift of {}\";", g.name()).unwrap();
        for c in &self.cycles {
            let colour = match c.kind {
                CycleType::I => "blue",
                CycleType::II => "red",
            };
            for &v in &c.vertices {
                let w = successor(g, v);
                writeln!(
                    out,
                    "  \"({},{})\" [color={colour}];\n  \"({},{})\" -> \"({},{})\" [color={colour}];",
                    v.a0.label(),
                    v.a1.label(),
                    v.a0.label(),
                    v.a1.label(),
                    w.a0.label(),
                    w.a1.label()
                )
                .unwrap();
            }
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

/// The shift `σ`: advances the phase by one; the `b_i` are untouched
/// because `σ_1` commutes with `σ_i` for `i ≥ 3`.
pub fn shift(dec: &ShiftDecomposition, rep: &Representation) -> Representation {
    let p = dec.cycle(rep.cycle).len();
    Representation {
        phase: (rep.phase + 1) % p,
        ..rep.clone()
    }
}

/// Length of the type-I cycle through `(a, a)`: 1, 3 or 6.
pub fn order2_cycle_shape(g: &FiniteGroup, a: Elem) -> usize {
    if g.is_identity(a) {
        1
    } else if a == g.inv(a) {
        3
    } else {
        6
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(spec: &str) -> ShiftDecomposition {
        ShiftDecomposition::new(Arc::new(FiniteGroup::from_spec(spec).unwrap())).unwrap()
    }

    fn labels(c: &Cycle) -> Vec<usize> {
        c.word().iter().map(|e| e.label()).collect()
    }

    #[test]
    fn trivial_vertex_is_fixed() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let e = g.identity();
        assert_eq!(successor(&g, Vertex::new(e, e)), Vertex::new(e, e));
    }

    #[test]
    fn six_step_pattern_through_one_a() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let e = g.identity();
        let a = g.element_by_label(4).unwrap();
        let ai = g.inv(a);
        let expect = [(e, a), (a, a), (a, e), (e, ai), (ai, ai), (ai, e), (e, a)];
        for w in expect.windows(2) {
            let v = Vertex::new(w[0].0, w[0].1);
            assert_eq!(successor(&g, v), Vertex::new(w[1].0, w[1].1));
        }
    }

    #[test]
    fn s3_listing_steps() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let l = |i| g.element_by_label(i).unwrap();
        let v = Vertex::new(l(2), l(3));
        let v1 = successor(&g, v);
        assert_eq!(v1, Vertex::new(l(3), l(5)));
        assert_eq!(successor(&g, v1), Vertex::new(l(5), l(6)));
    }

    #[test]
    fn trivial_group_has_one_cycle() {
        let d = dec("S1");
        assert_eq!(d.cycles().len(), 1);
        assert_eq!(d.cycles()[0].len(), 1);
        assert_eq!(d.cycles()[0].kind, CycleType::I);
    }

    #[test]
    fn s2_decomposition() {
        let d = dec("S2");
        let lens: Vec<usize> = d.cycles().iter().map(Cycle::len).collect();
        assert_eq!(lens, vec![1, 3]);
        assert!(d.cycles().iter().all(|c| c.kind == CycleType::I));
        let c = &d.cycles()[1];
        let rep: Vec<(usize, usize)> = c
            .vertices
            .iter()
            .map(|v| (v.a0.label(), v.a1.label()))
            .collect();
        assert_eq!(rep, vec![(1, 2), (2, 2), (2, 1)]);
    }

    #[test]
    fn s3_decomposition() {
        let d = dec("S3");
        let mut type1: Vec<usize> = d.cycles_of_type(CycleType::I).map(Cycle::len).collect();
        type1.sort();
        assert_eq!(type1, vec![1, 3, 3, 3, 6]);
        let type2: Vec<((usize, usize), usize)> = d
            .cycles_of_type(CycleType::II)
            .map(|c| {
                (
                    (c.representative().a0.label(), c.representative().a1.label()),
                    c.len(),
                )
            })
            .collect();
        assert_eq!(type2, vec![((2, 3), 9), ((2, 4), 9), ((4, 5), 2)]);
        let b23 = d.cycle(d.cycle_at(type2_vertex(&d, 2, 3)).unwrap());
        assert_eq!(labels(b23), vec![5, 6, 2, 5, 3, 6, 5, 2, 3]);
    }

    fn type2_vertex(d: &ShiftDecomposition, i: usize, j: usize) -> Vertex {
        let g = d.group();
        Vertex::new(
            g.element_by_label(i).unwrap(),
            g.element_by_label(j).unwrap(),
        )
    }

    #[test]
    fn shift_rotates_phase() {
        let d = dec("S3");
        let id = d.cycle_at(type2_vertex(&d, 4, 5)).unwrap();
        let rep = Representation::new(3, id, 0, vec![]);
        let r1 = shift(&d, &rep);
        assert_eq!(r1.phase, 1);
        assert_eq!(shift(&d, &r1), rep);
        let triv = Representation::new(3, d.trivial_cycle(), 0, vec![]);
        assert_eq!(shift(&d, &triv), triv);
    }

    #[test]
    fn order2_shapes_agree_with_decomposition() {
        let d = dec("S4");
        let g = d.group();
        for a in g.elements() {
            let (id, _) = d.locate(Vertex::new(a, a));
            assert_eq!(d.cycle(id).len(), order2_cycle_shape(g, a));
        }
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(order2_cycle_shape(&s3, s3.identity()), 1);
        assert_eq!(order2_cycle_shape(&s3, s3.element_by_label(3).unwrap()), 3);
        assert_eq!(order2_cycle_shape(&s3, s3.element_by_label(4).unwrap()), 6);
    }

    #[test]
    fn census_identity() {
        for spec in [
            "S1", "S2", "S3", "S4", "SL2(2)", "SL2(3)", "Z6", "Z2xZ4", "A4",
        ] {
            let d = dec(spec);
            let n = d.group().order();
            let total: usize = d.period_census().iter().map(|(p, k)| p * k).sum();
            assert_eq!(total, n * n, "{spec}");
            assert_eq!(
                d.period_census().get(&1),
                Some(&1),
                "{spec}: only the trivial fixed point"
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Arc::new(FiniteGroup::symmetric(4).unwrap());
        assert!(matches!(
            ShiftDecomposition::decompose(g, 100),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn dot_export_lists_every_vertex() {
        let d = dec("S2");
        let dot = d.to_dot();
        assert_eq!(dot.matches("->").count(), 4);
        assert!(dot.contains("\"(1,2)\" -> \"(2,2)\""));
    }
}
