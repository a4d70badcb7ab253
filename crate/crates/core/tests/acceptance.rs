//! Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
//!
//! All comparisons are exact; the only tolerances are the wall-clock budgets.

mod common;

use std::time::{Duration, Instant};

use liedens::embedcheck::{principal_table, rank2_cases_report, TableRow};
use liedens::lnd::{
    delta_degree, hypersurface_check, is_locally_nilpotent_on_generators, preserves_relations,
    sl2_coordinate_ring, sl2_standard_derivations, verify_semicompatibility_witness, apply_derivation,
    WitnessOutcome, DEFAULT_DEGREE_CAP,
};
use liedens::orbits::{
    centralizer_dimension_formula, centralizer_dimension_oracle, nilpotent_orbit_count, orbit_codimension_type_a,
    subregular_partition,
};
use liedens::partitions::{enumerate_partitions, Partition, PartitionConstraint};
use liedens::rootsys::LieType;

/// Parametrized families are swept up to this `l`.
const L_MAX: u32 = 50;

const ORBIT_BUDGET: Duration = Duration::from_secs(1);
const SWEEP_BUDGET: Duration = Duration::from_secs(10);
const TABLE_BUDGET: Duration = Duration::from_secs(5);
const ORACLE_BUDGET: Duration = Duration::from_secs(30);
const LND_BUDGET: Duration = Duration::from_secs(1);

const LEIBNIZ_SAMPLES: usize = 100;
const ADDITIVITY_SAMPLES: usize = 50;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn t(s: &str) -> LieType {
    s.parse().expect("valid type")
}

fn count(s: &str) -> u128 {
    nilpotent_orbit_count(t(s)).expect("count").count
}

fn orbit_counts() -> Check {
    let expected = [("A3", 5), ("A4", 7), ("B2", 4), ("G2", 5), ("F4", 16), ("E6", 21), ("E7", 45), ("E8", 70)];
    for (name, want) in expected {
        let got = count(name);
        ensure(got == want, || format!("{name}: {got} != {want}"))?;
    }
    Ok(())
}

fn inequality_sweep() -> Check {
    let checks = rank2_cases_report(L_MAX).map_err(|e| e.to_string())?;
    let l = L_MAX as usize;
    let expected = 5 + (l - 2) + (l - 2) + (l - 3) + 1;
    ensure(checks.len() == expected, || format!("{} verdicts, expected {expected}", checks.len()))?;
    for c in &checks {
        let g = c.verdict.numbers[&format!("orbits({})", c.verdict.case.g)];
        let r = c.verdict.numbers[&format!("orbits({})", c.verdict.case.r)];
        ensure(g > r && c.verdict.holds(), || format!("{}: {g} vs {r}", c.verdict.case))?;
    }
    Ok(())
}

fn table_reproduction() -> Check {
    let rows = principal_table(L_MAX).map_err(|e| e.to_string())?;
    let cols: Vec<String> = rows.iter().map(TableRow::columns).collect();
    let expected = [
        "B_3 | G_2 | 6 | 7",
        "D_4 | G_2 | 7 | 14",
        "A_6 | G_2 | 9 | 34",
        "E_6 | F_4 | 9 | 26",
        "A_{2l-1} | C_l | 2l+2 | l(2l-1)-1",
        "A_{2l} | B_l | 2l+3 | 2l^2+3l",
        "D_l | B_{l-1} | l+3 | 2l-1",
    ];
    ensure(cols == expected, || format!("columns {cols:?}"))?;
    let fixed: Vec<(u64, u64)> = rows[..4].iter().map(|r| (r.entries[0].rank_plus_3, r.entries[0].gap)).collect();
    ensure(fixed == [(6, 7), (7, 14), (9, 34), (9, 26)], || format!("fixed rows {fixed:?}"))?;
    for row in &rows[4..] {
        let last = row.entries.last().map(|e| e.case.parameter);
        ensure(last == Some(Some(L_MAX)), || format!("{} stops at {last:?}", row.g))?;
        for e in &row.entries {
            ensure(e.gap == e.computed_gap, || format!("{}: {} vs {}", e.case, e.gap, e.computed_gap))?;
        }
    }
    let exceptions: Vec<(LieType, LieType)> = rows
        .iter()
        .flat_map(|r| &r.entries)
        .filter(|e| e.exception)
        .map(|e| (e.case.g, e.case.r))
        .collect();
    ensure(exceptions == [(t("A3"), t("C2")), (t("D4"), t("B3"))], || {
        format!("exceptions {exceptions:?}")
    })
}

fn subregular_partitions() -> Check {
    for r in 2..=21u32 {
        let p = subregular_partition(LieType::a(r).unwrap()).map_err(|e| e.to_string())?;
        ensure(p.parts() == [r, 1], || format!("A{r}: {p}"))?;
        if r % 2 == 1 {
            ensure(!p.is_symplectic(), || format!("{p} is symplectic"))?;
        } else {
            ensure(!p.is_orthogonal(), || format!("{p} is orthogonal"))?;
        }
    }
    for l in 4..=20u32 {
        let p = subregular_partition(LieType::d(l).unwrap()).map_err(|e| e.to_string())?;
        ensure(p.parts() == [2 * l - 3, 3] && !p.contains_part(1), || format!("D{l}: {p}"))?;
    }
    let b3 = subregular_partition(t("B3")).map_err(|e| e.to_string())?;
    ensure(b3.parts() == [5, 1, 1], || format!("B3: {b3}"))
}

fn type_a_oracle() -> Check {
    for k in 1..=6 {
        for p in enumerate_partitions(k, PartitionConstraint::Unrestricted) {
            let oracle = centralizer_dimension_oracle(&p).map_err(|e| e.to_string())?;
            let formula = centralizer_dimension_formula(&p);
            ensure(oracle == formula, || format!("{p}: oracle {oracle}, formula {formula}"))?;
        }
    }
    for n in 1..=5u32 {
        let principal = Partition::new(vec![n + 1]).unwrap();
        let subregular = Partition::new(vec![n, 1]).unwrap();
        let cp = orbit_codimension_type_a(&principal).map_err(|e| e.to_string())?;
        let cs = orbit_codimension_type_a(&subregular).map_err(|e| e.to_string())?;
        ensure(cp == u64::from(n) && cs == u64::from(n) + 2, || {
            format!("sl{}: codimensions {cp}, {cs}", n + 1)
        })?;
    }
    Ok(())
}

fn sl2_suite() -> Check {
    let r = sl2_coordinate_ring();
    let (d1, d2) = sl2_standard_derivations();
    let p = |s: &str| r.parse(s).expect("valid polynomial");
    ensure(preserves_relations(&r, &d1) && preserves_relations(&r, &d2), || "relation not preserved".into())?;
    for d in [&d1, &d2] {
        is_locally_nilpotent_on_generators(&r, d, 4).map_err(|e| e.to_string())?;
    }
    let k1 = [p("a1"), p("a2")];
    let k2 = [p("b1"), p("b2")];
    match verify_semicompatibility_witness(&r, &d1, &k1, &d2, &k2, 2).map_err(|e| e.to_string())? {
        WitnessOutcome::Found(w) => {
            let text = w.render(&r, &k1, &k2);
            ensure(text == "1 = a1*b2 - a2*b1" && w.degree <= 2, || format!("witness {text}"))?;
        }
        WitnessOutcome::NotFound { degree } => return Err(format!("no witness up to degree {degree}")),
    }
    let a = p("a1*b2");
    let degs = (
        delta_degree(&r, &d1, &a, DEFAULT_DEGREE_CAP),
        delta_degree(&r, &d2, &a, DEFAULT_DEGREE_CAP),
    );
    ensure(degs == (Ok(1), Ok(1)), || format!("degrees {degs:?}"))?;
    let h = hypersurface_check();
    ensure(h.reduces_to_zero && h.sign_flip_invariant, || format!("{h:?}"))
}

fn property_suites() -> Check {
    let pent = common::pentagonal_partition_counts(40);
    for n in 0..=40u32 {
        let enumerated = enumerate_partitions(n, PartitionConstraint::Unrestricted).len() as u128;
        ensure(enumerated == pent[n as usize], || format!("p({n}): {enumerated} vs {}", pent[n as usize]))?;
    }
    for n in 0..=20 {
        for p in enumerate_partitions(n, PartitionConstraint::Unrestricted) {
            ensure(p.conjugate().conjugate() == p, || format!("conjugation moves {p}"))?;
        }
    }

    let r = sl2_coordinate_ring();
    let (d1, d2) = sl2_standard_derivations();
    let mut rng = common::rng(0x5eed);
    for _ in 0..LEIBNIZ_SAMPLES {
        let f = r.normal_form(&common::random_poly(&mut rng, 4, 4));
        let g = r.normal_form(&common::random_poly(&mut rng, 4, 4));
        for d in [&d1, &d2] {
            let lhs = apply_derivation(&r, d, &r.normal_form(&(&f * &g)));
            let rhs = r.normal_form(&(&(&apply_derivation(&r, d, &f) * &g) + &(&f * &apply_derivation(&r, d, &g))));
            ensure(lhs == rhs, || format!("Leibniz fails for {} and {}", r.format(&f), r.format(&g)))?;
        }
    }
    let mut checked = 0;
    while checked < ADDITIVITY_SAMPLES {
        let f = r.normal_form(&common::random_poly(&mut rng, 4, 3));
        let g = r.normal_form(&common::random_poly(&mut rng, 4, 3));
        let fg = r.normal_form(&(&f * &g));
        if f.is_zero() || g.is_zero() || fg.is_zero() {
            continue;
        }
        let deg = |x| delta_degree(&r, &d1, x, DEFAULT_DEGREE_CAP).map_err(|e| e.to_string());
        let (df, dg, dfg) = (deg(&f)?, deg(&g)?, deg(&fg)?);
        ensure(dfg == df + dg, || format!("degree of {}: {dfg} != {df} + {dg}", r.format(&fg)))?;
        checked += 1;
    }
    Ok(())
}

struct Criterion {
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Check,
}

fn main() {
    let criteria = [
        Criterion { name: "orbit counts", budget: Some(ORBIT_BUDGET), run: orbit_counts },
        Criterion { name: "inequality sweep", budget: Some(SWEEP_BUDGET), run: inequality_sweep },
        Criterion { name: "subregular table", budget: Some(TABLE_BUDGET), run: table_reproduction },
        Criterion { name: "subregular partitions", budget: None, run: subregular_partitions },
        Criterion { name: "type-A orbit dimension oracle", budget: Some(ORACLE_BUDGET), run: type_a_oracle },
        Criterion { name: "SL2 derivation suite", budget: Some(LND_BUDGET), run: sl2_suite },
        Criterion { name: "property suites", budget: None, run: property_suites },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let over = c.budget.filter(|&b| elapsed > b);
        let budget = c.budget.map_or(String::new(), |b| format!(", budget {:.0?}", b));
        match (&result, over) {
            (Ok(()), None) => println!("PASS  {} ({elapsed:.2?}{budget})", c.name),
            (Ok(()), Some(b)) => {
                failed += 1;
                println!("FAIL  {}: took {elapsed:.2?}, budget {b:.0?}", c.name);
            }
            (Err(msg), _) => {
                failed += 1;
                println!("FAIL  {}: {msg} ({elapsed:.2?}{budget})", c.name);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
