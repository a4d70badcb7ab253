//! Kind-tagged result records, as printed by the command-line tool.
//!
//! A [`Report`] serializes to
//! `{version, command, status, results: [{kind, anchor, inputs, outputs, pass}]}`.
//! Every record carries a one-line summary in `outputs.line`; the text format
//! prints those lines.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::embedcheck::{
    embedding_verdict, principal_table_with, rank2_case_verdicts_with, subregular_membership_check,
    CaseVerdict, EmbedError,
};
use crate::exec::Execution;
use crate::lnd::{
    delta_degree, diagonal_torus_weight, hypersurface_check, is_in_kernel, preserves_relations,
    sl2_coordinate_ring, sl2_standard_derivations, verify_compatibility_condition2,
    verify_semicompatibility_witness, LndError, WitnessOutcome,
};
use crate::orbits::{nilpotent_orbit_count, CountMethod, OrbitError};
use crate::partitions::Count;
use crate::rootsys::LieType;

pub const REPORT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecordKind {
    OrbitCount,
    TableRow,
    Verdict,
    LndCheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Partial,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub kind: RecordKind,
    /// The fact this record reproduces.
    pub anchor: String,
    pub inputs: Value,
    pub outputs: Value,
    pub pass: bool,
}

impl Record {
    fn new(kind: RecordKind, anchor: impl Into<String>, inputs: Value, line: String, outputs: Value, pass: bool) -> Self {
        let mut outputs = match outputs {
            Value::Object(m) => m,
            Value::Null => Map::new(),
            other => {
                let mut m = Map::new();
                m.insert("value".into(), other);
                m
            }
        };
        outputs.insert("line".into(), Value::String(line));
        Record {
            kind,
            anchor: anchor.into(),
            inputs,
            outputs: Value::Object(outputs),
            pass,
        }
    }

    /// The one-line summary stored in `outputs.line`.
    pub fn line(&self) -> &str {
        self.outputs.get("line").and_then(Value::as_str).unwrap_or("")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub command: String,
    pub status: Status,
    pub results: Vec<Record>,
}

impl Report {
    pub fn new(command: impl Into<String>, results: Vec<Record>) -> Self {
        let passed = results.iter().filter(|r| r.pass).count();
        let status = if passed == results.len() && passed > 0 {
            Status::Pass
        } else if passed == 0 {
            Status::Fail
        } else {
            Status::Partial
        };
        Report {
            version: REPORT_VERSION.to_string(),
            command: command.into(),
            status,
            results,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let mark = if r.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "[{mark}] {}: {}", r.anchor, r.line());
        }
        let passed = self.results.iter().filter(|r| r.pass).count();
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Partial => "partial",
        };
        let _ = writeln!(
            out,
            "{} {}: {status} ({passed}/{} records)",
            self.command,
            self.version,
            self.results.len()
        );
        out
    }
}

/// JSON number when it fits in `u64`, decimal string otherwise.
pub fn count_value(c: Count) -> Value {
    match u64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => Value::String(c.to_string()),
    }
}

fn numbers_value(v: &CaseVerdict) -> Value {
    Value::Object(v.numbers.iter().map(|(k, &x)| (k.clone(), count_value(x))).collect())
}

fn method_name(m: CountMethod) -> &'static str {
    match m {
        CountMethod::PartitionFormula => "partition formula",
        CountMethod::ExceptionalTable => "exceptional table",
    }
}

fn orbit_record(t: LieType) -> Result<Record, OrbitError> {
    let c = nilpotent_orbit_count(t)?;
    let mut line = format!("{t}: {} nilpotent orbits ({})", c.count, method_name(c.method));
    if c.d_pair_formula_uncorrected {
        line.push_str(", very even types counted once");
    }
    Ok(Record::new(
        RecordKind::OrbitCount,
        format!("nilpotent orbits of {t}"),
        json!({ "type": t.to_string() }),
        line,
        json!({
            "count": count_value(c.count),
            "method": c.method,
            "includes_zero_orbit": c.includes_zero_orbit,
            "d_pair_formula_uncorrected": c.d_pair_formula_uncorrected,
        }),
        true,
    ))
}

/// Orbit count of one type.
pub fn orbits_report(t: LieType) -> Result<Report, OrbitError> {
    Ok(Report::new(format!("orbits {t}"), vec![orbit_record(t)?]))
}

fn verdict_record(anchor: String, v: &CaseVerdict) -> Record {
    let mut line = format!(
        "{}: {} via {}, witness {}",
        v.case,
        match v.outcome {
            crate::embedcheck::Outcome::Holds => "holds",
            crate::embedcheck::Outcome::Fails => "fails",
            crate::embedcheck::Outcome::Deferred => "deferred",
        },
        v.criterion,
        v.witness
    );
    if !v.numbers.is_empty() {
        let nums: Vec<String> = v.numbers.iter().map(|(k, x)| format!("{k}={x}")).collect();
        let _ = write!(line, " [{}]", nums.join(", "));
    }
    for n in &v.notes {
        let _ = write!(line, "; {n}");
    }
    Record::new(
        RecordKind::Verdict,
        anchor,
        json!({ "g": v.case.g.to_string(), "r": v.case.r.to_string(), "l": v.case.parameter }),
        line,
        json!({
            "criterion": v.criterion,
            "witness": v.witness,
            "outcome": v.outcome,
            "numbers": numbers_value(v),
            "notes": v.notes,
        }),
        v.holds(),
    )
}

/// Decision for a single pair.
pub fn embed_report(g: LieType, r: LieType, parameter: Option<u32>) -> Result<Report, EmbedError> {
    let v = embedding_verdict(g, r, parameter)?;
    let mut command = format!("embed {g} {r}");
    if let Some(l) = parameter {
        let _ = write!(command, " --l {l}");
    }
    Ok(Report::new(command, vec![verdict_record(format!("SL2 witness for {r} in {g}"), &v)]))
}

/// Reference orbit counts, the rank-at-least-2 inequality sweep, the
/// subregular table with its gap exceptions, and the membership checks.
pub fn appendix_report(l_max: u32, exec: Execution) -> Result<Report, EmbedError> {
    let mut results = Vec::new();

    for s in ["A3", "A4", "B2", "G2", "F4", "E6", "E7", "E8"] {
        results.push(orbit_record(s.parse().expect("valid type"))?);
    }

    for check in rank2_case_verdicts_with(l_max, exec)? {
        results.push(verdict_record(format!("orbit count {}", check.family), &check.verdict));
    }

    let table = principal_table_with(l_max, exec)?;
    let mut exceptions = Vec::new();
    for row in &table {
        for e in &row.entries {
            if e.exception {
                exceptions.push(format!("{} ⊂ {}", e.case.r, e.case.g));
            }
            let mut line = format!(
                "{}: {} ⊂ {}, rank G + 3 = {}, dim G - dim R = {} (root systems: {})",
                row.columns(),
                e.case.r,
                e.case.g,
                e.rank_plus_3,
                e.gap,
                e.computed_gap
            );
            if let Some(l) = e.case.parameter {
                let _ = write!(line, ", l = {l}");
            }
            if e.exception {
                line.push_str(", exception: gap does not exceed rank G + 3");
            }
            results.push(Record::new(
                RecordKind::TableRow,
                format!("subregular table row {} | {}", row.g, row.r),
                json!({ "g": e.case.g.to_string(), "r": e.case.r.to_string(), "l": e.case.parameter }),
                line,
                json!({
                    "columns": [row.g, row.r, row.rank_plus_3, row.gap],
                    "rank_plus_3": e.rank_plus_3,
                    "gap": e.gap,
                    "computed_gap": e.computed_gap,
                    "exception": e.exception,
                }),
                e.gap == e.computed_gap,
            ));
        }
    }
    let expected = ["B2 ⊂ A3", "B3 ⊂ D4"];
    results.push(Record::new(
        RecordKind::TableRow,
        "dimension-gap exceptions",
        json!({ "l_max": l_max }),
        format!("exceptions: {}", exceptions.join(", ")),
        json!({ "exceptions": exceptions, "expected": expected }),
        exceptions == expected,
    ));

    for row in &table {
        for e in &row.entries {
            let v = subregular_membership_check(e.case.g, e.case.r)?;
            results.push(verdict_record(format!("subregular SL2 of {} not in {}", e.case.g, e.case.r), &v));
        }
    }
    for (g, r) in [("D4", "B3"), ("A3", "B2"), ("E6", "F4")] {
        let v = embedding_verdict(g.parse().expect("valid type"), r.parse().expect("valid type"), None)?;
        results.push(verdict_record(format!("SL2 witness for {r} in {g}"), &v));
    }

    Ok(Report::new(format!("report appendix --lmax {l_max}"), results))
}

fn lnd_record(anchor: &str, line: String, outputs: Value, pass: bool) -> Record {
    Record::new(RecordKind::LndCheck, anchor, json!({ "ring": "C[SL2]" }), line, outputs, pass)
}

/// Checks on the coordinate ring of `SL_2` and its two standard derivations.
/// `cap` bounds the iterations of each nilpotence test.
pub fn lnd_report(cap: u32) -> Result<Report, LndError> {
    let r = sl2_coordinate_ring();
    let (d1, d2) = sl2_standard_derivations();
    let p = |s: &str| r.parse(s);
    let mut results = Vec::new();

    for (name, d) in [("d1", &d1), ("d2", &d2)] {
        let ok = preserves_relations(&r, d);
        results.push(lnd_record(
            "derivation preserves the determinant relation",
            format!("{name}(a1*b2 - a2*b1 - 1) reduces to 0: {ok}"),
            json!({ "derivation": name, "preserves": ok }),
            ok,
        ));
    }

    for (name, d) in [("d1", &d1), ("d2", &d2)] {
        let mut degrees = Map::new();
        let mut parts = Vec::new();
        let mut ok = true;
        for g in r.names() {
            match delta_degree(&r, d, &r.gen(g)?, cap) {
                Ok(k) => {
                    degrees.insert(g.clone(), json!(k));
                    parts.push(format!("deg_{name}({g})={k}"));
                }
                Err(LndError::NotNilpotentWithinCap { .. }) => {
                    ok = false;
                    degrees.insert(g.clone(), Value::Null);
                    parts.push(format!("deg_{name}({g})>={cap}"));
                }
                Err(e) => return Err(e),
            }
        }
        results.push(lnd_record(
            "locally nilpotent on generators",
            format!("{} (cap {cap})", parts.join(" ")),
            json!({ "derivation": name, "cap": cap, "degrees": degrees }),
            ok,
        ));
    }

    for (name, d, gens) in [("d1", &d1, ["a1", "a2"]), ("d2", &d2, ["b1", "b2"])] {
        let ok = gens.iter().map(|g| Ok(is_in_kernel(&r, d, &p(g)?))).collect::<Result<Vec<_>, LndError>>()?;
        let all = ok.iter().all(|&b| b);
        results.push(lnd_record(
            "kernel membership",
            format!("{} in Ker {name}: {all}", gens.join(", ")),
            json!({ "derivation": name, "elements": gens, "in_kernel": ok }),
            all,
        ));
    }

    let k1 = [p("a1")?, p("a2")?];
    let k2 = [p("b1")?, p("b2")?];
    let (line, outputs, ok) = match verify_semicompatibility_witness(&r, &d1, &k1, &d2, &k2, 2)? {
        WitnessOutcome::Found(w) => {
            let text = w.render(&r, &k1, &k2);
            (
                text.clone(),
                json!({ "found": true, "degree": w.degree, "witness": text }),
                w.degree <= 2,
            )
        }
        WitnessOutcome::NotFound { degree } => (
            format!("no witness up to degree {degree}"),
            json!({ "found": false, "degree": degree }),
            false,
        ),
    };
    results.push(lnd_record("1 in Span(Ker d1 * Ker d2)", line, outputs, ok));

    let a = p("a1*b2")?;
    let deg1 = delta_degree(&r, &d1, &a, cap);
    let deg2 = delta_degree(&r, &d2, &a, cap);
    let compatible = verify_compatibility_condition2(&r, &d1, &d2, &a, cap).unwrap_or(false);
    let show = |d: &Result<u32, LndError>| d.as_ref().map_or_else(|_| "?".to_string(), u32::to_string);
    results.push(lnd_record(
        "degree condition for a = a1*b2",
        format!("deg_d1(a1*b2)={} deg_d2(a1*b2)={}", show(&deg1), show(&deg2)),
        json!({
            "deg_d1": deg1.as_ref().ok(),
            "deg_d2": deg2.as_ref().ok(),
            "condition": compatible,
        }),
        compatible && deg1 == Ok(1) && deg2 == Ok(1),
    ));

    let h = hypersurface_check();
    results.push(lnd_record(
        "invariant hypersurface",
        if h.reduces_to_zero {
            "u*v - z^2 + 1/4 == 0 in C[SL2]".to_string()
        } else {
            format!("u*v - z^2 + 1/4 == {} in C[SL2]", h.residue)
        },
        json!({ "u": "a1*a2", "v": "b1*b2", "z": "a2*b1 + 1/2", "residue": h.residue }),
        h.reduces_to_zero,
    ));
    results.push(lnd_record(
        "sign flip on the invariants",
        format!(
            "(u,v,z) -> (-u,-v,-z) {} u*v - z^2 + 1/4",
            if h.sign_flip_invariant { "fixes" } else { "does not fix" }
        ),
        json!({ "invariant": h.sign_flip_invariant }),
        h.sign_flip_invariant,
    ));
    let weights: Vec<String> = ["a1*a2", "b1*b2", "a2*b1 + 1/2"]
        .iter()
        .map(|s| {
            Ok(match diagonal_torus_weight(&p(s)?) {
                Ok(w) => w.0.to_string(),
                Err(e) => e.to_string(),
            })
        })
        .collect::<Result<_, LndError>>()?;
    results.push(lnd_record(
        "torus weights of u, v, z",
        format!("weights u={} v={} z={}", weights[0], weights[1], weights[2]),
        json!({ "weights": weights }),
        h.invariant_weights.iter().all(|w| *w == Some(0)),
    ));

    Ok(Report::new(format!("lnd verify --cap {cap}"), results))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_rules() {
        let rec = |pass| Record::new(RecordKind::LndCheck, "x", Value::Null, String::new(), Value::Null, pass);
        assert_eq!(Report::new("c", vec![rec(true), rec(true)]).status, Status::Pass);
        assert_eq!(Report::new("c", vec![rec(true), rec(false)]).status, Status::Partial);
        assert_eq!(Report::new("c", vec![rec(false)]).status, Status::Fail);
        assert_eq!(Report::new("c", vec![]).status, Status::Fail);
    }

    #[test]
    fn count_values() {
        assert_eq!(count_value(7), json!(7));
        assert_eq!(count_value(u128::from(u64::MAX) + 1), json!("18446744073709551616"));
    }

    #[test]
    fn lnd_lines() {
        let rep = lnd_report(4).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
        let text = rep.to_text();
        assert!(text.contains("1 = a1*b2 - a2*b1"));
        assert!(text.contains("deg_d1(a1*b2)=1 deg_d2(a1*b2)=1"));
        assert!(text.contains("u*v - z^2 + 1/4 == 0 in C[SL2]"));
        // b1 needs two applications of d1
        assert_eq!(lnd_report(1).unwrap().status, Status::Partial);
    }

    #[test]
    fn json_round_trip() {
        let rep = appendix_report(6, Execution::Sequential).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
        assert_eq!(Report::from_json(&rep.to_json()).unwrap(), rep);
        assert_eq!(rep.to_text().lines().count(), rep.results.len() + 1);
    }

    #[test]
    fn orbit_and_embed_reports() {
        let rep = orbits_report("B2".parse().unwrap()).unwrap();
        assert_eq!(rep.results[0].outputs["count"], json!(4));
        let rep = embed_report("D4".parse().unwrap(), "B3".parse().unwrap(), None).unwrap();
        assert_eq!(rep.results[0].outputs["witness"], json!("subregular"));
    }
}
