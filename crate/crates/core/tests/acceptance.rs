//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use braid_shift::analysis::{
    count_subgroups, nontrivial_implies_transitive_check, pi_representation, transitivity_report,
    type_i_census,
};
use braid_shift::extension::{extend_to_braid, hom_bn_when_kn_trivial, nontrivial_b3_table};
use braid_shift::oracle::{brute_hom_bn, DEFAULT_BUDGET};
use braid_shift::report::{
    listing_b3_block, listing_cycles, same_tokens, shift_report, tower_report,
};
use braid_shift::verify::{self, SuiteReport};
use braid_shift::{
    compute_tower, CycleType, FiniteGroup, Representation, Result, ShiftDecomposition, TowerResult,
};

const SHIFT_S3_TYPE2: &str = include_str!("golden/shift_s3_type2.txt");
const SHIFT_S4_TYPE2: &str = include_str!("golden/shift_s4_type2.txt");
const TOWER_S4_K4: &str = include_str!("golden/tower_s4_k4.txt");

fn dec(spec: &str) -> Result<Arc<ShiftDecomposition>> {
    let g = Arc::new(FiniteGroup::from_spec(spec)?);
    Ok(Arc::new(ShiftDecomposition::new(g)?))
}

fn tower(spec: &str, n: usize) -> Result<TowerResult> {
    compute_tower(dec(spec)?, n)
}

/// Collects mismatches for one criterion.
#[derive(Default)]
struct Check {
    failures: Vec<String>,
    info: Vec<String>,
}

impl Check {
    fn expect<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        if got != want {
            self.failures
                .push(format!("{what}: got {got:?}, expected {want:?}"));
        }
    }

    fn holds(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn suite(&mut self, label: &str, report: SuiteReport) {
        if !report.passed {
            self.failures.push(format!(
                "{label}/{}: {}",
                report.name,
                report.notes.join("; ")
            ));
        }
    }
}

fn c1(c: &mut Check) -> Result<()> {
    let t = tower("S2", 5)?;
    c.expect("|Hom(K3,S2)|", t.rep_count(3), 4);
    c.expect("|Hom(K4,S2)|", t.rep_count(4), 4);
    c.expect("|Hom(K5,S2)|", t.rep_count(5), 1);
    Ok(())
}

fn c2(c: &mut Check) -> Result<()> {
    let t = tower("S3", 5)?;
    let d = t.decomposition();
    c.expect("|Hom(K3,S3)|", t.rep_count(3), 36);
    let listing = listing_cycles(&shift_report(d, true));
    c.holds(
        "S3 type-II listing matches golden",
        same_tokens(&listing, SHIFT_S3_TYPE2),
    );
    let type2: Vec<_> = d
        .cycles_of_type(CycleType::II)
        .map(|x| {
            (
                x.representative().a0.label(),
                x.representative().a1.label(),
                x.len(),
            )
        })
        .collect();
    c.expect(
        "S3 type-II cycles",
        type2,
        vec![(2, 3, 9), (2, 4, 9), (4, 5, 2)],
    );
    c.expect("S3 type-I totals", d.type_totals(CycleType::I), (5, 16));
    c.expect("|Hom(K4,S3)|", t.rep_count(4), 36);
    c.expect("|Hom(K5,S3)|", t.rep_count(5), 1);
    Ok(())
}

fn c3(c: &mut Check) -> Result<()> {
    let d = dec("S4")?;
    let (i_cycles, i_reps) = d.type_totals(CycleType::I);
    let (ii_cycles, ii_reps) = d.type_totals(CycleType::II);
    c.expect("S4 type-I reps", i_reps, 70);
    c.expect("S4 type-I closed form", i_reps, type_i_census(4)?.reps);
    c.expect("S4 type-I cycles", i_cycles, type_i_census(4)?.cycles);
    c.expect("S4 type-II reps", ii_reps, 506);
    c.expect("S4 total", i_reps + ii_reps, 576);
    c.expect("S4 type-II cycle count", ii_cycles, 71);
    let listing = listing_cycles(&shift_report(&d, true));
    c.holds(
        "S4 type-II listing matches golden",
        same_tokens(&listing, SHIFT_S4_TYPE2),
    );
    c.expect(
        "golden cycle count",
        SHIFT_S4_TYPE2.matches("B[").count(),
        71,
    );
    c.info
        .push(format!("type-II: {ii_cycles} cycles, {ii_reps} reps"));
    Ok(())
}

fn c4(c: &mut Check) -> Result<()> {
    let t = tower("S4", 4)?;
    let d = t.decomposition();
    let table = nontrivial_b3_table(&t);
    let labels: Vec<usize> = table.keys().map(|b| b.label()).collect();
    c.expect("nontrivial b3 values", labels, vec![8, 17, 24]);
    let want = [
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
    for ids in table.values() {
        let got: Vec<(usize, usize)> = ids
            .iter()
            .map(|&id| {
                let r = d.cycle(id).representative();
                (r.a0.label(), r.a1.label())
            })
            .collect();
        c.expect("cycles admitting b3", got, want.to_vec());
    }
    let block = listing_b3_block(&tower_report(&t, false)?);
    c.holds("b3 block matches golden", same_tokens(&block, TOWER_S4_K4));
    let classes = t.class_count(4) as i64 - t.class_count(3) as i64;
    let reps = t.rep_count(4) as i64 - t.rep_count(3) as i64;
    c.expect("new (cycle, b3) classes at K4", classes, 30);
    c.expect("new representations at K4", reps, 96);
    c.info
        .push(format!("+{classes} classes, +{reps} representations"));
    Ok(())
}

fn c5(c: &mut Check) -> Result<()> {
    for (spec, n) in [("S4", 5), ("S5", 6), ("S6", 7)] {
        let start = Instant::now();
        let t = tower(spec, n)?;
        let took = start.elapsed();
        c.holds(
            &format!("Hom(K{n},{spec}) trivial"),
            t.only_trivial(n) && t.rep_count(n) == 1,
        );
        c.info.push(format!("{spec}: {:.2}s", took.as_secs_f64()));
        if spec == "S6" {
            c.holds(
                "S6 tower within 2 minutes",
                took <= Duration::from_secs(120),
            );
        }
    }
    Ok(())
}

fn c6(c: &mut Check) -> Result<()> {
    for (spec, want) in [("S2", 3), ("S3", 13)] {
        let t = tower(spec, 4)?;
        c.expect(
            &format!("index of {spec} in K3"),
            count_subgroups(&t, 3)?,
            want,
        );
        c.expect(
            &format!("index of {spec} in K4"),
            count_subgroups(&t, 4)?,
            want,
        );
    }
    let s3 = transitivity_report(&tower("S3", 3)?)?;
    c.expect("transitive reps K3 -> S3", s3.levels[0].transitive_reps, 26);
    for r in 2..=5 {
        let t = tower(&format!("S{r}"), 6)?;
        for n in [5, 6] {
            if r < n {
                c.expect(
                    &format!("index-{r} subgroups of K{n}"),
                    count_subgroups(&t, n)?,
                    0,
                );
            }
        }
    }
    Ok(())
}

fn c7(c: &mut Check) -> Result<()> {
    for spec in ["S2", "S3", "S4", "SL2(2)", "SL2(3)", "Z6"] {
        let t = tower(spec, 5)?;
        let report = verify::oracle_eq(&t, 5, DEFAULT_BUDGET)?;
        let skipped = report.notes.iter().any(|n| n.contains("skipped"));
        let tested_braid = matches!(spec, "S2" | "S3");
        // B_n comparison only binds for S2 and S3; skips elsewhere are fine.
        let k_skipped = report
            .notes
            .iter()
            .any(|n| n.starts_with('K') && n.contains("skipped"));
        c.holds(&format!("{spec}: K3..K5 scanned in full"), !k_skipped);
        if tested_braid {
            c.holds(&format!("{spec}: B2..B5 scanned in full"), !skipped);
        }
        c.suite(spec, report);
    }
    Ok(())
}

fn c8(c: &mut Check) -> Result<()> {
    for spec in [
        "S2", "S3", "S4", "A4", "A5", "SL2(2)", "SL2(3)", "SL2(4)", "SL2(5)", "Z6", "Z2xZ4",
        "Z3xZ3",
    ] {
        let d = dec(spec)?;
        c.suite(spec, verify::product_identity(&d));
        c.suite(spec, verify::census(&d));
        c.suite(spec, verify::abelian(&d));
    }
    for spec in ["S3", "S4", "SL2(3)", "Z6"] {
        let t = tower(spec, 6)?;
        c.suite(spec, verify::b3_order(&t));
        c.suite(spec, verify::relation_pattern(&t));
        c.suite(spec, verify::braid_range(&t)?);
    }
    for spec in ["S4", "S5"] {
        let t = tower(spec, 6)?;
        let p4 = verify::perfect_core(&t)?;
        c.holds(
            &format!("{spec}: perfect_core ran"),
            !p4.notes.iter().any(|n| n.contains("skipped")),
        );
        c.suite(spec, p4);
        c.info
            .push(format!("{spec}: {} classes at K6", t.class_count(6)));
        if spec == "S5" {
            let p6 = verify::evenness(&t);
            c.holds(
                "S5: evenness ran",
                !p6.notes.iter().any(|n| n.contains("skipped")),
            );
            c.suite(spec, p6);
            let a5 = tower("A5", 6)?;
            c.expect(
                "|Hom(K6,S5)| vs |Hom(K6,A5)|",
                t.rep_count(6),
                a5.rep_count(6),
            );
        }
    }
    Ok(())
}

fn c9(c: &mut Check) -> Result<()> {
    for r in 3..=6 {
        let d = dec(&format!("S{r}"))?;
        for n in 3..=r {
            let ok = pi_representation(&d, n).is_ok();
            c.holds(&format!("pi relations for n={n}, r={r}"), ok);
        }
    }
    let d = dec("S3")?;
    let pi = pi_representation(&d, 3)?;
    let v = d.cycle(pi.cycle).representative();
    c.expect("pi class in S3", (v.a0.label(), v.a1.label()), (4, 5));
    for n in [5, 6] {
        let t = tower(&format!("S{n}"), n)?;
        c.holds(
            &format!("nontrivial K{n} -> S{n} transitive"),
            nontrivial_implies_transitive_check(&t, n)?,
        );
    }
    Ok(())
}

fn c10(c: &mut Check) -> Result<()> {
    let t = tower("S4", 6)?;
    c.expect(
        "|Hom(B6,S4)| cyclic-image formula",
        hom_bn_when_kn_trivial(&t, 6)?,
        24,
    );
    c.expect("|Hom(B6,S4)| engine", t.braid_hom_count(6), 24);
    let z6 = FiniteGroup::from_spec("Z6")?;
    c.expect(
        "|Hom(B4,Z6)| oracle",
        brute_hom_bn(&z6, 4, DEFAULT_BUDGET)?.count,
        6,
    );
    c.expect("|Hom(B4,Z6)| engine", tower("Z6", 4)?.braid_hom_count(4), 6);
    for spec in ["S3", "S4", "SL2(3)"] {
        let d = dec(spec)?;
        let g = d.group();
        for n in 3..=5 {
            let trivial = Representation::new(n, d.trivial_cycle(), 0, vec![g.identity(); n - 3]);
            let all: BTreeSet<_> = extend_to_braid(&d, &trivial)?.into_iter().collect();
            c.expect(
                &format!("{spec}: trivial K{n} rep extends by all of Σ"),
                all.len(),
                g.order(),
            );
        }
    }
    Ok(())
}

type Criterion = fn(&mut Check) -> Result<()>;

fn main() -> ExitCode {
    // Accept and ignore libtest flags passed through by `cargo test`.
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let criteria: [(&str, Criterion); 10] = [
        ("1 S2 tower 4/4/1", c1),
        ("2 S3 shift listing and tower", c2),
        ("3 S4 census 70 + 506 = 576, 71 type-II cycles", c3),
        ("4 S4 K4 extension: ten cycles, b3 in {8, 17, 24}", c4),
        ("5 triviality frontier K5/S4, K6/S5, K7/S6", c5),
        ("6 subgroup counts", c6),
        ("7 oracle equivalence", c7),
        ("8 property suites", c8),
        ("9 pi sanity and transitivity", c9),
        ("10 braid counts", c10),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let mut check = Check::default();
        if let Err(e) = run(&mut check) {
            check.failures.push(format!("error: {e}"));
        }
        let verdict = if check.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "{verdict} criterion {name} ({:.2}s)",
            start.elapsed().as_secs_f64()
        );
        for line in &check.info {
            println!("     {line}");
        }
        for line in &check.failures {
            println!("     ! {line}");
        }
        if !check.failures.is_empty() {
            failed += 1;
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
