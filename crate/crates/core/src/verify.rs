//! Named invariant suites over computed objects, used by `verify` and the
//! acceptance tests. A suite never panics on a violated property; it
//! reports it.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::derived::{derived_series, perfect_core_group, DEFAULT_DERIVED_CAP};
use crate::error::Result;
use crate::extension::{compute_tower, BraidKey, ClassKey, TowerResult};
use crate::group::Elem;
use crate::oracle::{brute_hom_bn, brute_hom_kn};
use crate::shift::{successor, CycleType, ShiftDecomposition, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: bool,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            passed: true,
            notes: Vec::new(),
        }
    }

    fn fail(&mut self, msg: impl Into<String>) {
        self.passed = false;
        self.notes.push(msg.into());
    }

    fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.fail(msg());
        }
    }
}

fn show(v: Vertex) -> String {
    format!("({}, {})", v.a0.label(), v.a1.label())
}

/// Product `a_0 a_1 ⋯ a_{p-1} = 1` on every cycle.
pub fn product_identity(dec: &ShiftDecomposition) -> SuiteReport {
    let g = dec.group();
    let mut s = SuiteReport::new("product-identity");
    for c in dec.cycles() {
        s.check(g.is_identity(g.mul_all(c.a_sequence())), || {
            format!("product identity fails on {}", show(c.representative()))
        });
    }
    s
}

/// Orbit-count identity, the type-I counts `(1 + n_2 + |Σ|)/2` cycles and
/// `3|Σ| - 2` representations, and the shape `(a, a²) ⇄ (a², a)`, `a³ = 1`
/// of every 2-cycle.
pub fn census(dec: &ShiftDecomposition) -> SuiteReport {
    let g = dec.group();
    let n = g.order();
    let mut s = SuiteReport::new("census");
    let census = dec.period_census();
    let total: usize = census.iter().map(|(p, k)| p * k).sum();
    s.check(total == n * n, || {
        format!("sum p n_p = {total}, expected {}", n * n)
    });
    s.check(census.get(&1) == Some(&1), || {
        "more than one fixed point".into()
    });
    let (c1, r1) = dec.type_totals(CycleType::I);
    let inv = g.involution_count();
    s.check(c1 == (1 + inv + n) / 2, || {
        format!("{c1} type-I cycles, expected {}", (1 + inv + n) / 2)
    });
    s.check(r1 == 3 * n - 2, || {
        format!("{r1} type-I representations, expected {}", 3 * n - 2)
    });
    for c in dec.cycles().iter().filter(|c| c.len() == 2) {
        let a = c.representative().a0;
        let ok = c.representative().a1 == g.mul(a, a) && g.is_identity(g.pow(a, 3));
        s.check(ok, || {
            format!(
                "2-cycle {} is not (a, a^2) with a^3 = 1",
                show(c.representative())
            )
        });
    }
    let (c2, r2) = dec.type_totals(CycleType::II);
    s.note(format!(
        "|Σ|² = {}: type I {c1} cycles / {r1} reps, type II {c2} cycles / {r2} reps",
        n * n
    ));
    s
}

/// `b_3^p = 1` for every level-4 class; `b_3 = 1` on type-I cycles and
/// when `gcd(p, |Σ|) = 1`.
pub fn b3_order(tower: &TowerResult) -> SuiteReport {
    let mut s = SuiteReport::new("b3-order");
    if tower.n_max() < 4 {
        s.note("skipped: tower stops at n = 3");
        return s;
    }
    let g = tower.group();
    let dec = tower.decomposition();
    for class in &tower.level(4).classes {
        let cycle = dec.cycle(class.cycle);
        let p = cycle.len();
        let b3 = class.b[0];
        let rep = show(cycle.representative());
        s.check(g.is_identity(g.pow(b3, p)), || {
            format!("b3^p != 1 on {rep}")
        });
        if cycle.kind == CycleType::I || gcd(p, g.order()) == 1 {
            s.check(g.is_identity(b3), || {
                format!("rigid cycle {rep} has b3 = {}", b3.label())
            });
        }
    }
    s
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Relation pattern of nontrivial classes at levels `n ≥ 5`.
pub fn relation_pattern(tower: &TowerResult) -> SuiteReport {
    let mut s = SuiteReport::new("relation-pattern");
    let g = tower.group();
    let dec = tower.decomposition();
    let mut b3_eq_b5 = 0;
    for n in 5..=tower.n_max() {
        for class in &tower.level(n).classes {
            if tower.is_trivial_entry(class) {
                continue;
            }
            let cycle = dec.cycle(class.cycle);
            let p = cycle.len();
            let rep = show(cycle.representative());
            s.check(cycle.kind == CycleType::II, || {
                format!("K{n}: type-I cycle {rep} survived")
            });
            let b = &class.b;
            for (k, &bi) in b.iter().enumerate() {
                let i = k + 3;
                s.check(!g.is_identity(bi), || format!("K{n} {rep}: b{i} trivial"));
                s.check(g.are_conjugate(bi, b[0]), || {
                    format!("K{n} {rep}: b{i} not conjugate to b3")
                });
                if i >= 4 {
                    let bp = g.pow(bi, p);
                    s.check((0..p).all(|m| g.commutes(bp, cycle.a(m))), || {
                        format!("K{n} {rep}: [b{i}^p, a_m] != 1")
                    });
                    s.check(g.element_order(bi).is_multiple_of(p), || {
                        format!("K{n} {rep}: p does not divide |b{i}|")
                    });
                }
                for (l, &bj) in b.iter().enumerate().skip(k + 1) {
                    let j = l + 3;
                    let commute = g.commutes(bi, bj);
                    s.check(commute == (j - i >= 2), || {
                        format!("K{n} {rep}: commutation of b{i}, b{j} is {commute}")
                    });
                    if bi == bj {
                        if (i, j) == (3, 5) {
                            b3_eq_b5 += 1;
                        } else {
                            s.fail(format!("K{n} {rep}: b{i} = b{j}"));
                        }
                    }
                }
            }
        }
    }
    if b3_eq_b5 > 0 {
        s.note(format!("{b3_eq_b5} class(es) with b3 = b5"));
        if tower.n_max() >= 7 {
            let survivors = tower
                .level(7)
                .classes
                .iter()
                .filter(|c| c.b[0] == c.b[2] && !tower.is_trivial_entry(c))
                .count();
            s.check(survivors == 0, || {
                format!("{survivors} class(es) with b3 = b5 reach K7")
            });
        }
    }
    for n in 5..=tower.n_max() {
        if tower.only_trivial(n) {
            s.note(format!("level-{n} trivial"));
            break;
        }
    }
    s
}

/// Classes that extend to `B_n` take values in `[Σ, Σ]`.
pub fn braid_range(tower: &TowerResult) -> Result<SuiteReport> {
    let mut s = SuiteReport::new("braid-range");
    let g = tower.group();
    let series = derived_series(g, DEFAULT_DERIVED_CAP)?;
    let mut member = vec![false; g.order()];
    let derived = series.terms.get(1).unwrap_or(&series.terms[0]);
    for x in derived {
        member[x.index()] = true;
    }
    let dec = tower.decomposition();
    for level in tower.levels() {
        for class in level.classes.iter().filter(|c| !c.braid.is_empty()) {
            let cycle = dec.cycle(class.cycle);
            let inside = cycle
                .a_sequence()
                .iter()
                .chain(&class.b)
                .all(|x| member[x.index()]);
            s.check(inside, || {
                format!(
                    "K{}: {} extends to B_n outside [Σ,Σ]",
                    level.n,
                    show(cycle.representative())
                )
            });
        }
    }
    Ok(s)
}

/// For `n ≥ 6`, `Hom(K_n, Σ)` equals `Hom(K_n, perfect core)`.
pub fn perfect_core(tower: &TowerResult) -> Result<SuiteReport> {
    let mut s = SuiteReport::new("perfect-core");
    if tower.n_max() < 6 {
        s.note("skipped: needs n >= 6");
        return Ok(s);
    }
    let g = tower.group();
    let core = Arc::new(perfect_core_group(g, DEFAULT_DERIVED_CAP)?);
    s.note(format!("perfect core has order {}", core.order()));
    let core_dec = Arc::new(ShiftDecomposition::new(core.clone())?);
    let core_tower = compute_tower(core_dec, tower.n_max())?;
    let dec = tower.decomposition();
    for n in 6..=tower.n_max() {
        let lifted: BTreeMap<ClassKey, u64> = core_tower
            .class_census(n)
            .into_iter()
            .map(|(key, p)| {
                let embed = |x: Elem| core.embed(x).unwrap();
                let v = Vertex::new(embed(key.rep.a0), embed(key.rep.a1));
                let (id, _) = dec.locate(v);
                let rep = dec.cycle(id).representative();
                (
                    ClassKey {
                        rep,
                        b: key.b.into_iter().map(embed).collect(),
                    },
                    p,
                )
            })
            .collect();
        let direct = tower.class_census(n);
        s.check(lifted == direct, || {
            format!(
                "K{n}: {} classes over Σ, {} over its core",
                direct.len(),
                lifted.len()
            )
        });
    }
    Ok(s)
}

/// For permutation groups and `n ≥ 6`, every generator image is even.
pub fn evenness(tower: &TowerResult) -> SuiteReport {
    let mut s = SuiteReport::new("evenness");
    let g = tower.group();
    if g.degree().is_none() || tower.n_max() < 6 {
        s.note("skipped: needs a permutation group and n >= 6");
        return s;
    }
    let dec = tower.decomposition();
    let even = |x: &Elem| g.permutation(*x).unwrap().is_even();
    for n in 6..=tower.n_max() {
        for class in &tower.level(n).classes {
            let cycle = dec.cycle(class.cycle);
            let ok = cycle.a_sequence().iter().chain(&class.b).all(even);
            s.check(ok, || {
                format!(
                    "K{n}: {} has an odd generator",
                    show(cycle.representative())
                )
            });
        }
    }
    s
}

/// Abelian groups: successor⁶ is the identity on `Σ²`.
pub fn abelian(dec: &ShiftDecomposition) -> SuiteReport {
    let mut s = SuiteReport::new("abelian");
    let g = dec.group();
    if !g.is_abelian() {
        s.note("skipped: group is not abelian");
        return s;
    }
    for a0 in g.elements() {
        for a1 in g.elements() {
            let v = Vertex::new(a0, a1);
            let w = (0..6).fold(v, |w, _| successor(g, w));
            s.check(w == v, || format!("successor^6 moves {}", show(v)));
        }
    }
    s
}

/// Engine and brute-force oracle agree on `K_3 … K_n` and `B_2 … B_n`.
/// Levels whose scan exceeds `budget` are reported as skipped.
pub fn oracle_eq(tower: &TowerResult, n: usize, budget: u128) -> Result<SuiteReport> {
    let mut s = SuiteReport::new("oracle-eq");
    let g = tower.group();
    for k in 3..=n.min(tower.n_max()) {
        match brute_hom_kn(g, k, budget) {
            Ok(r) => {
                let engine = tower.class_census(k);
                s.check(
                    r.count as usize == tower.rep_count(k) && r.classes == engine,
                    || {
                        format!(
                            "K{k}: oracle {} reps / {} classes, engine {} / {}",
                            r.count,
                            r.classes.len(),
                            tower.rep_count(k),
                            engine.len()
                        )
                    },
                );
            }
            Err(crate::Error::Resource { .. }) => s.note(format!("K{k}: skipped (budget)")),
            Err(e) => return Err(e),
        }
    }
    for k in 2..=n.min(tower.n_max()) {
        match brute_hom_bn(g, k, budget) {
            Ok(r) => {
                let engine: BTreeMap<BraidKey, u64> = tower.braid_census(k);
                s.check(
                    r.count as usize == tower.braid_hom_count(k) && r.classes == engine,
                    || {
                        format!(
                            "B{k}: oracle {} homs, engine {}",
                            r.count,
                            tower.braid_hom_count(k)
                        )
                    },
                );
            }
            Err(crate::Error::Resource { .. }) => s.note(format!("B{k}: skipped (budget)")),
            Err(e) => return Err(e),
        }
    }
    Ok(s)
}

/// Every suite, on a tower computed up to `n`.
pub fn run_all(tower: &TowerResult, n: usize, budget: u128) -> Result<Vec<SuiteReport>> {
    let dec = tower.decomposition();
    Ok(vec![
        product_identity(dec),
        census(dec),
        b3_order(tower),
        relation_pattern(tower),
        perfect_core(tower)?,
        evenness(tower),
        braid_range(tower)?,
        abelian(dec),
        oracle_eq(tower, n, budget)?,
    ])
}
