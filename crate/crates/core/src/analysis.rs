//! Permutation-representation analysis: transitivity, counting subgroups of
//! finite index, closed-form type-I counts, the abelian classification and
//! the standard representation `π : B_n → S_n` restricted to `K_n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::{ClassEntry, Representation, TowerResult};
use crate::group::{Elem, FiniteGroup};
use crate::perm::{factorial, Permutation};
use crate::shift::{CycleType, ShiftDecomposition, Vertex};

/// Orbits of `⟨gens⟩` on `{1, …, r}` via union-find, each sorted, listed
/// by least point.
pub fn orbit_partition(g: &FiniteGroup, gens: &[Elem]) -> Result<Vec<Vec<usize>>> {
    let r = g
        .degree()
        .ok_or_else(|| Error::usage(format!("{} is not a permutation group", g.name())))?;
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut y = x;
        while parent[y] != root {
            let next = parent[y];
            parent[y] = root;
            y = next;
        }
        root
    }
    for &s in gens {
        let p = g.permutation(s).unwrap();
        for x in 0..r {
            let (a, b) = (
                find(&mut parent, x),
                find(&mut parent, p.raw_images()[x] as usize),
            );
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut orbits: Vec<Vec<usize>> = vec![Vec::new(); r];
    for x in 0..r {
        let root = find(&mut parent, x);
        orbits[root].push(x + 1);
    }
    Ok(orbits.into_iter().filter(|o| !o.is_empty()).collect())
}

fn class_generators(tower: &TowerResult, entry: &ClassEntry) -> Vec<Elem> {
    let mut gens = tower.decomposition().cycle(entry.cycle).a_sequence();
    gens.extend_from_slice(&entry.b);
    gens
}

/// Whether `ρ(K_n)` acts transitively on `{1, …, r}`.
pub fn is_transitive(dec: &ShiftDecomposition, rep: &Representation) -> Result<bool> {
    let mut gens = dec.cycle(rep.cycle).a_sequence();
    gens.extend_from_slice(&rep.b);
    Ok(orbit_partition(dec.group(), &gens)?.len() == 1)
}

pub fn class_orbits(tower: &TowerResult, entry: &ClassEntry) -> Result<Vec<Vec<usize>>> {
    orbit_partition(tower.group(), &class_generators(tower, entry))
}

pub fn class_is_transitive(tower: &TowerResult, entry: &ClassEntry) -> Result<bool> {
    Ok(class_orbits(tower, entry)?.len() == 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelTransitivity {
    pub n: usize,
    pub transitive_classes: usize,
    pub transitive_reps: usize,
    /// Subgroups of `K_n` of index exactly `r`.
    pub subgroups: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitivityReport {
    pub degree: usize,
    pub levels: Vec<LevelTransitivity>,
}

fn exact_div(total: usize, r: usize) -> Result<usize> {
    let d = factorial(r - 1);
    if !total.is_multiple_of(d) {
        return Err(Error::invariant(format!(
            "{total} transitive representations is not a multiple of ({r}-1)! = {d}"
        )));
    }
    Ok(total / d)
}

fn level_transitivity(tower: &TowerResult, n: usize) -> Result<LevelTransitivity> {
    let r = tower
        .group()
        .degree()
        .ok_or_else(|| Error::usage("transitivity needs a permutation group"))?;
    let mut classes = 0;
    let mut reps = 0;
    for entry in &tower.level(n).classes {
        if class_is_transitive(tower, entry)? {
            classes += 1;
            reps += tower.cycle_len(entry);
        }
    }
    Ok(LevelTransitivity {
        n,
        transitive_classes: classes,
        transitive_reps: reps,
        subgroups: exact_div(reps, r)?,
    })
}

pub fn transitivity_report(tower: &TowerResult) -> Result<TransitivityReport> {
    let degree = tower
        .group()
        .degree()
        .ok_or_else(|| Error::usage("transitivity needs a permutation group"))?;
    let levels = (3..=tower.n_max())
        .map(|n| level_transitivity(tower, n))
        .collect::<Result<_>>()?;
    Ok(TransitivityReport { degree, levels })
}

/// Number of subgroups of `K_n` of index `r`, for a tower over `S_r`.
pub fn count_subgroups(tower: &TowerResult, n: usize) -> Result<usize> {
    Ok(level_transitivity(tower, n)?.subgroups)
}

/// Number of subgroups of `B_n` of index `r`, for a tower over `S_r`:
/// transitive `B_n` homomorphisms divided by `(r-1)!`.
pub fn count_braid_subgroups(tower: &TowerResult, n: usize) -> Result<usize> {
    let g = tower.group();
    let r = g
        .degree()
        .ok_or_else(|| Error::usage("transitivity needs a permutation group"))?;
    let mut total = 0;
    if n == 2 {
        for c in g.elements() {
            if orbit_partition(g, &[c])?.len() == 1 {
                total += 1;
            }
        }
    } else {
        for entry in &tower.level(n).classes {
            let mut gens = class_generators(tower, entry);
            for &c in &entry.braid {
                gens.push(c);
                if orbit_partition(g, &gens)?.len() == 1 {
                    total += tower.cycle_len(entry);
                }
                gens.pop();
            }
        }
    }
    exact_div(total, r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeICensus {
    pub cycles: usize,
    pub reps: usize,
    pub transitive_reps: usize,
}

/// Closed forms for `S_r`: `(1 + n_r + r!)/2` cycles, `3 r! - 2`
/// representations, `3 (r-1)!` of them transitive.
pub fn type_i_census(r: usize) -> Result<TypeICensus> {
    if r < 2 {
        return Err(Error::usage("type-I census needs r >= 2"));
    }
    let involutions = FiniteGroup::symmetric(r)?.involution_count();
    Ok(TypeICensus {
        cycles: (1 + involutions + factorial(r)) / 2,
        reps: 3 * factorial(r) - 2,
        transitive_reps: 3 * factorial(r - 1),
    })
}

/// The same numbers read off an actual decomposition over `S_r`.
pub fn type_i_census_enumerated(dec: &ShiftDecomposition) -> Result<TypeICensus> {
    let g = dec.group();
    let mut census = TypeICensus {
        cycles: 0,
        reps: 0,
        transitive_reps: 0,
    };
    for c in dec.cycles_of_type(CycleType::I) {
        census.cycles += 1;
        census.reps += c.len();
        if orbit_partition(g, &c.a_sequence())?.len() == 1 {
            census.transitive_reps += c.len();
        }
    }
    Ok(census)
}

/// Orbit length of `(a, b)` in an abelian group, written additively:
/// 1 if `a = b = 0`, 2 if `a = -b` with `3a = 0`, 3 if `2a = 2b = 0`,
/// 6 otherwise.
pub fn abelian_cycle_length(g: &FiniteGroup, v: Vertex) -> Result<usize> {
    if !g.is_abelian() {
        return Err(Error::usage(format!("{} is not abelian", g.name())));
    }
    let zero = g.identity();
    let (a, b) = (v.a0, v.a1);
    let twice = |x: Elem| g.mul(x, x);
    Ok(if a == zero && b == zero {
        1
    } else if g.mul(a, b) == zero && g.pow(a, 3) == zero {
        2
    } else if twice(a) == zero && twice(b) == zero {
        3
    } else {
        6
    })
}

/// `π|_{K_n}` into `S_r` (`r ≥ n ≥ 3`): `z_m ↦ (132)` for even `m`,
/// `(123)` for odd `m`, `x_i ↦ (12)(i i+1)`.
pub fn pi_representation(dec: &ShiftDecomposition, n: usize) -> Result<Representation> {
    let g = dec.group();
    let r = g
        .degree()
        .ok_or_else(|| Error::usage("pi needs a symmetric group"))?;
    if n < 3 || r < n {
        return Err(Error::usage(format!(
            "pi needs r >= n >= 3, got n = {n}, r = {r}"
        )));
    }
    let find = |cycles: &[&[usize]]| -> Result<Elem> {
        let p = Permutation::from_cycles(r, cycles)?;
        g.find_permutation(&p)
            .ok_or_else(|| Error::usage(format!("{p} is not in {}", g.name())))
    };
    let v = Vertex::new(find(&[&[1, 3, 2]])?, find(&[&[1, 2, 3]])?);
    let (cycle, phase) = dec.locate(v);
    let b = (3..n)
        .map(|i| find(&[&[1, 2], &[i, i + 1]]))
        .collect::<Result<Vec<_>>>()?;
    let rep = Representation::new(n, cycle, phase, b);
    rep.check_relations(dec)?;
    Ok(rep)
}

/// Every nontrivial representation of `K_n` into `S_n` is transitive,
/// checked by enumerating the whole tower over `S_n`.
pub fn nontrivial_implies_transitive_check(tower: &TowerResult, n: usize) -> Result<bool> {
    if tower.group().degree() != Some(n) {
        return Err(Error::usage(format!("tower must be over S{n}")));
    }
    for entry in &tower.level(n).classes {
        if !tower.is_trivial_entry(entry) && !class_is_transitive(tower, entry)? {
            return Ok(false);
        }
    }
    Ok(true)
}
