//! Output formats: the compact listing, JSON, CSV.
//!
//! In every format an element is printed as its 1-based label (the lex rank
//! for symmetric groups). A cycle is written `B[a0, a1] = [a2, …, a_{p-1},
//! a0, a1]` followed by its length on the next line.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::analysis::{transitivity_report, TransitivityReport};
use crate::error::{Error, Result};
use crate::extension::{nontrivial_b3_table, TowerResult};
use crate::shift::{Cycle, CycleType, ShiftDecomposition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRecord {
    pub start: [usize; 2],
    pub word: Vec<usize>,
    pub length: usize,
    pub kind: CycleType,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeTotals {
    pub cycles: usize,
    pub reps: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftReport {
    pub group: String,
    pub order: usize,
    /// `p ↦ n_p`.
    pub census: BTreeMap<usize, usize>,
    pub type_i: TypeTotals,
    pub type_ii: TypeTotals,
    pub cycles: Vec<CycleRecord>,
}

fn record(c: &Cycle) -> CycleRecord {
    let r = c.representative();
    CycleRecord {
        start: [r.a0.label(), r.a1.label()],
        word: c.word().iter().map(|e| e.label()).collect(),
        length: c.len(),
        kind: c.kind,
    }
}

pub fn shift_report(dec: &ShiftDecomposition, type2_only: bool) -> ShiftReport {
    let totals = |k| {
        let (cycles, reps) = dec.type_totals(k);
        TypeTotals { cycles, reps }
    };
    ShiftReport {
        group: dec.group().name().to_string(),
        order: dec.group().order(),
        census: dec.period_census(),
        type_i: totals(CycleType::I),
        type_ii: totals(CycleType::II),
        cycles: dec
            .cycles()
            .iter()
            .filter(|c| !type2_only || c.kind == CycleType::II)
            .map(record)
            .collect(),
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn listing_cycles(report: &ShiftReport) -> String {
    let mut out = String::new();
    for c in &report.cycles {
        writeln!(
            out,
            "B[{}, {}] = [{}]",
            c.start[0],
            c.start[1],
            join(&c.word)
        )
        .unwrap();
        writeln!(out, "{}", c.length).unwrap();
        writeln!(out).unwrap();
    }
    out
}

pub fn csv_cycles(report: &ShiftReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["a0", "a1", "length", "type", "word"])
        .map_err(csv_err)?;
    for c in &report.cycles {
        let kind = match c.kind {
            CycleType::I => "I",
            CycleType::II => "II",
        };
        w.write_record([
            c.start[0].to_string(),
            c.start[1].to_string(),
            c.length.to_string(),
            kind.to_string(),
            c.word
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        ])
        .map_err(csv_err)?;
    }
    finish_csv(w)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelRecord {
    pub n: usize,
    /// Orbits (cycle, b-tuple).
    pub classes: usize,
    /// `|Hom(K_n, Σ)|`.
    pub reps: usize,
    /// (class, c) pairs.
    pub braid_classes: usize,
    /// `|Hom(B_n, Σ)|`.
    pub braid_reps: usize,
    pub only_trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct B3Record {
    pub b3: usize,
    pub cycles: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerReport {
    pub group: String,
    pub order: usize,
    pub levels: Vec<LevelRecord>,
    /// Level-4 classes with a nontrivial `b_3`, grouped by `b_3`.
    pub nontrivial_b3: Vec<B3Record>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transitivity: Option<TransitivityReport>,
}

pub fn tower_report(tower: &TowerResult, with_transitivity: bool) -> Result<TowerReport> {
    let dec = tower.decomposition();
    let levels = (3..=tower.n_max())
        .map(|n| LevelRecord {
            n,
            classes: tower.class_count(n),
            reps: tower.rep_count(n),
            braid_classes: tower.braid_class_count(n),
            braid_reps: tower.braid_rep_count(n),
            only_trivial: tower.only_trivial(n),
        })
        .collect();
    let nontrivial_b3 = nontrivial_b3_table(tower)
        .into_iter()
        .map(|(b3, ids)| B3Record {
            b3: b3.label(),
            cycles: ids
                .into_iter()
                .map(|id| {
                    let r = dec.cycle(id).representative();
                    [r.a0.label(), r.a1.label()]
                })
                .collect(),
        })
        .collect();
    let transitivity = if with_transitivity && tower.group().degree().is_some() {
        Some(transitivity_report(tower)?)
    } else {
        None
    };
    Ok(TowerReport {
        group: tower.group().name().to_string(),
        order: tower.group().order(),
        levels,
        nontrivial_b3,
        transitivity,
    })
}

/// One line per nontrivial `b_3`: `[b3, [a0, a1], [a0, a1], …]`.
pub fn listing_b3_block(report: &TowerReport) -> String {
    let mut out = String::new();
    for rec in &report.nontrivial_b3 {
        let cycles: Vec<String> = rec
            .cycles
            .iter()
            .map(|c| format!("[{}, {}]", c[0], c[1]))
            .collect();
        writeln!(out, "[{}, {}]", rec.b3, cycles.join(", ")).unwrap();
    }
    out
}

pub fn listing_tower(report: &TowerReport) -> String {
    let mut out = String::new();
    writeln!(out, "group {} (order {})", report.group, report.order).unwrap();
    for l in &report.levels {
        writeln!(
            out,
            "K{n}: {} classes, {} representations; B{n}: {} (class, c) pairs, {} representations{}",
            l.classes,
            l.reps,
            l.braid_classes,
            l.braid_reps,
            if l.only_trivial { " [trivial]" } else { "" },
            n = l.n
        )
        .unwrap();
    }
    if !report.nontrivial_b3.is_empty() {
        writeln!(out).unwrap();
        writeln!(out, "n=4: nontrivial b3 values with their cycles").unwrap();
        out.push_str(&listing_b3_block(report));
    }
    if let Some(t) = &report.transitivity {
        writeln!(out).unwrap();
        for l in &t.levels {
            writeln!(
                out,
                "K{}: {} transitive representations into S{}, {} subgroups of index {}",
                l.n, l.transitive_reps, t.degree, l.subgroups, t.degree
            )
            .unwrap();
        }
    }
    out
}

pub fn csv_tower(report: &TowerReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "n",
        "classes",
        "reps",
        "braid_classes",
        "braid_reps",
        "only_trivial",
        "transitive_reps",
        "subgroups",
    ])
    .map_err(csv_err)?;
    for l in &report.levels {
        let t = report
            .transitivity
            .as_ref()
            .and_then(|t| t.levels.iter().find(|x| x.n == l.n));
        w.write_record([
            l.n.to_string(),
            l.classes.to_string(),
            l.reps.to_string(),
            l.braid_classes.to_string(),
            l.braid_reps.to_string(),
            l.only_trivial.to_string(),
            t.map_or(String::new(), |t| t.transitive_reps.to_string()),
            t.map_or(String::new(), |t| t.subgroups.to_string()),
        ])
        .map_err(csv_err)?;
    }
    finish_csv(w)
}

/// Compares two listings token by token, ignoring layout.
pub fn same_tokens(a: &str, b: &str) -> bool {
    a.split_whitespace().eq(b.split_whitespace())
}
