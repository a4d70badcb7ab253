//! Case analysis for `SL_2` witnesses in pairs `R ⊂ G` of simple types.
//!
//! Two tools decide a pair. The orbit count: if `R` has fewer nilpotent orbits
//! than `G`, some `SL_2`-subgroup of `G` has no conjugate inside `R`, and the
//! principal one serves. The subregular route: when no conjugate of the
//! subregular `SL_2` lies in `R` and `dim G - dim R > rank G + 3`, the
//! subregular subgroup serves. Its membership half is decided by Jordan types
//! where possible: `(r,1)` is neither symplectic (odd `r`) nor orthogonal
//! (even `r`), and `(2l-3,3)` fixes no line.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec::Execution;
use crate::orbits::{nilpotent_orbit_count, subregular_partition, OrbitError};
use crate::partitions::{Count, Partition};
use crate::rootsys::{group_dimension, Family, LieType, RootSystemError};

/// Smallest sweep bound: the `D_l ⊃ B_{l-1}` family starts at `l = 4`.
pub const MIN_L_MAX: u32 = 4;
/// Sweep bound used when none is given.
pub const DEFAULT_L_MAX: u32 = 50;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("the pair {r} ⊂ {g} is not among the analyzed cases; supported: {}", SUPPORTED_PAIRS)]
    Unsupported { g: LieType, r: LieType },
    #[error("parameter l = {given} does not match {r} ⊂ {g} (expected l = {expected})")]
    ParameterMismatch {
        g: LieType,
        r: LieType,
        given: u32,
        expected: u32,
    },
    #[error("l_max = {given} is below the minimum {min}")]
    LmaxTooSmall { given: u32, min: u32 },
    #[error("inconsistency in {case}: {detail}")]
    Inconsistency { case: String, detail: String },
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

/// Human-readable list of the supported pairs, for error messages.
pub const SUPPORTED_PAIRS: &str = "B2 in A3 or A4; G2 in B3, D4 or A6; F4 in E6; \
B_l in A_2l (l >= 2); C_l in A_2l-1 (l >= 2, C2 = B2); B_l-1 in D_l (l >= 4)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EmbeddingCase {
    pub g: LieType,
    pub r: LieType,
    /// `l` for members of the parametrized families.
    pub parameter: Option<u32>,
}

impl fmt::Display for EmbeddingCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊂ {}", self.r, self.g)?;
        if let Some(l) = self.parameter {
            write!(f, " (l={l})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    OrbitCount,
    DimensionGap,
    SubregularPartition,
    /// Settled by an argument that is not recomputed here (triality, lifting
    /// of exceptional triples). The verdict carries a note saying which.
    ExternalArgument,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::OrbitCount => "orbit-count",
            Criterion::DimensionGap => "dimension-gap",
            Criterion::SubregularPartition => "subregular-partition",
            Criterion::ExternalArgument => "external-argument",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    Principal,
    Subregular,
    None,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessKind::Principal => "principal",
            WitnessKind::Subregular => "subregular",
            WitnessKind::None => "none",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Holds,
    Fails,
    /// The criterion is inconclusive and hands over to the next check.
    Deferred,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseVerdict {
    pub case: EmbeddingCase,
    pub criterion: Criterion,
    pub witness: WitnessKind,
    pub outcome: Outcome,
    /// Every quantity the decision used.
    pub numbers: BTreeMap<String, Count>,
    pub notes: Vec<String>,
}

impl CaseVerdict {
    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    fn new(case: EmbeddingCase, criterion: Criterion, witness: WitnessKind, outcome: Outcome) -> Self {
        CaseVerdict {
            case,
            criterion,
            witness,
            outcome,
            numbers: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    fn number(mut self, name: impl Into<String>, value: impl Into<Count>) -> Self {
        self.numbers.insert(name.into(), value.into());
        self
    }

    fn note(mut self, text: impl Into<String>) -> Self {
        self.notes.push(text.into());
        self
    }
}

/// Orbit-count criterion: principal witness when `R` has strictly fewer
/// nilpotent orbits than `G`.
pub fn orbit_count_criterion(g: LieType, r: LieType) -> Result<CaseVerdict, EmbedError> {
    orbit_count_verdict(EmbeddingCase { g, r, parameter: None })
}

fn orbit_count_verdict(case: EmbeddingCase) -> Result<CaseVerdict, EmbedError> {
    let cg = nilpotent_orbit_count(case.g)?.count;
    let cr = nilpotent_orbit_count(case.r)?.count;
    let (witness, outcome) = if cr < cg {
        (WitnessKind::Principal, Outcome::Holds)
    } else {
        (WitnessKind::None, Outcome::Fails)
    };
    Ok(CaseVerdict::new(case, Criterion::OrbitCount, witness, outcome)
        .number(format!("orbits({})", case.g), cg)
        .number(format!("orbits({})", case.r), cr))
}

/// The families of pairs the analysis covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pair {
    /// `G_2` in `B_3`, `D_4` or `A_6`.
    G2,
    F4InE6,
    /// `C_l` in `A_{2l-1}`.
    CInAOdd(u32),
    /// `B_l` in `A_{2l}`.
    BInAEven(u32),
    /// `B_{l-1}` in `D_l`.
    BInD(u32),
}

fn classify(g: LieType, r: LieType) -> Option<Pair> {
    use Family::*;
    let (gf, gn, rf, rn) = (g.family(), g.rank(), r.family(), r.rank());
    Some(match (gf, rf) {
        (A, B) if rn == 2 && gn == 3 => Pair::CInAOdd(2),
        (A, B) if rn == 2 && gn == 4 => Pair::BInAEven(2),
        (A, C) if gn == 2 * rn - 1 => Pair::CInAOdd(rn),
        (A, B) if gn == 2 * rn => Pair::BInAEven(rn),
        (D, B) if rn + 1 == gn => Pair::BInD(gn),
        (B, G) if gn == 3 => Pair::G2,
        (D, G) if gn == 4 => Pair::G2,
        (A, G) if gn == 6 => Pair::G2,
        (E, F) if gn == 6 => Pair::F4InE6,
        _ => return None,
    })
}

fn pair_parameter(p: Pair) -> Option<u32> {
    match p {
        Pair::CInAOdd(l) | Pair::BInAEven(l) | Pair::BInD(l) => Some(l),
        Pair::G2 | Pair::F4InE6 => None,
    }
}

fn unsupported(g: LieType, r: LieType) -> EmbedError {
    EmbedError::Unsupported { g, r }
}

/// One row of the subregular table: symbolic labels and closed forms.
#[derive(Clone, Copy, Debug)]
struct RowLabels {
    g: &'static str,
    r: &'static str,
    rank_plus_3: &'static str,
    gap: &'static str,
}

const FIXED_ROWS: [(RowLabels, fn() -> (LieType, LieType), u64, u64); 4] = [
    (
        RowLabels { g: "B_3", r: "G_2", rank_plus_3: "6", gap: "7" },
        || (LieType::b(3).unwrap(), LieType::g2()),
        6,
        7,
    ),
    (
        RowLabels { g: "D_4", r: "G_2", rank_plus_3: "7", gap: "14" },
        || (LieType::d(4).unwrap(), LieType::g2()),
        7,
        14,
    ),
    (
        RowLabels { g: "A_6", r: "G_2", rank_plus_3: "9", gap: "34" },
        || (LieType::a(6).unwrap(), LieType::g2()),
        9,
        34,
    ),
    (
        RowLabels { g: "E_6", r: "F_4", rank_plus_3: "9", gap: "26" },
        || (LieType::e(6).unwrap(), LieType::f4()),
        9,
        26,
    ),
];

struct FamilyRow {
    labels: RowLabels,
    first_l: u32,
    types: fn(u32) -> (LieType, LieType),
    closed_rank_plus_3: fn(u64) -> u64,
    closed_gap: fn(u64) -> u64,
}

const FAMILY_ROWS: [FamilyRow; 3] = [
    FamilyRow {
        labels: RowLabels { g: "A_{2l-1}", r: "C_l", rank_plus_3: "2l+2", gap: "l(2l-1)-1" },
        first_l: 2,
        types: |l| (LieType::a(2 * l - 1).unwrap(), LieType::c(l).unwrap()),
        closed_rank_plus_3: |l| 2 * l + 2,
        closed_gap: |l| l * (2 * l - 1) - 1,
    },
    FamilyRow {
        labels: RowLabels { g: "A_{2l}", r: "B_l", rank_plus_3: "2l+3", gap: "2l^2+3l" },
        first_l: 2,
        types: |l| (LieType::a(2 * l).unwrap(), LieType::b(l).unwrap()),
        closed_rank_plus_3: |l| 2 * l + 3,
        closed_gap: |l| 2 * l * l + 3 * l,
    },
    FamilyRow {
        labels: RowLabels { g: "D_l", r: "B_{l-1}", rank_plus_3: "l+3", gap: "2l-1" },
        first_l: 4,
        types: |l| (LieType::d(l).unwrap(), LieType::b(l - 1).unwrap()),
        closed_rank_plus_3: |l| l + 3,
        closed_gap: |l| 2 * l - 1,
    },
];

/// A concrete instance of a table row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub case: EmbeddingCase,
    /// `rank G + 3` from the closed form in the row.
    pub rank_plus_3: u64,
    /// `dim G - dim R` from the closed form in the row.
    pub gap: u64,
    /// `dim G - dim R` from root-system data.
    pub computed_gap: u64,
    pub dim_g: u64,
    pub dim_r: u64,
    /// The gap does not exceed `rank G + 3`.
    pub exception: bool,
}

/// A row of the subregular table: its symbolic columns and the evaluated
/// instances (one for fixed rows, one per `l` for parametrized rows).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub g: String,
    pub r: String,
    pub rank_plus_3: String,
    pub gap: String,
    pub entries: Vec<TableEntry>,
}

impl TableRow {
    /// `G | R | rank G + 3 | dim G - dim R` with the symbolic columns.
    pub fn columns(&self) -> String {
        format!("{} | {} | {} | {}", self.g, self.r, self.rank_plus_3, self.gap)
    }
}

fn table_entry(case: EmbeddingCase, rank_plus_3: u64, gap: u64) -> Result<TableEntry, EmbedError> {
    let (dim_g, dim_r) = (group_dimension(case.g)?, group_dimension(case.r)?);
    let computed_gap = dim_g - dim_r;
    if computed_gap != gap {
        return Err(EmbedError::Inconsistency {
            case: case.to_string(),
            detail: format!("closed form gives dim G - dim R = {gap}, root systems give {computed_gap}"),
        });
    }
    let computed_rank_plus_3 = u64::from(case.g.rank()) + 3;
    if computed_rank_plus_3 != rank_plus_3 {
        return Err(EmbedError::Inconsistency {
            case: case.to_string(),
            detail: format!("closed form gives rank G + 3 = {rank_plus_3}, actual {computed_rank_plus_3}"),
        });
    }
    Ok(TableEntry {
        case,
        rank_plus_3,
        gap,
        computed_gap,
        dim_g,
        dim_r,
        exception: gap <= rank_plus_3,
    })
}

/// The seven rows, parametrized rows evaluated for `first_l ..= l_max`.
pub fn principal_table(l_max: u32) -> Result<Vec<TableRow>, EmbedError> {
    principal_table_with(l_max, Execution::default())
}

pub fn principal_table_with(l_max: u32, exec: Execution) -> Result<Vec<TableRow>, EmbedError> {
    check_l_max(l_max)?;
    let mut rows = Vec::with_capacity(7);
    for (labels, types, rank_plus_3, gap) in FIXED_ROWS {
        let (g, r) = types();
        let entry = table_entry(EmbeddingCase { g, r, parameter: None }, rank_plus_3, gap)?;
        rows.push(table_row(labels, vec![entry]));
    }
    for fam in &FAMILY_ROWS {
        let ls: Vec<u32> = (fam.first_l..=l_max).collect();
        let entries = exec.try_map(&ls, |&l| {
            let (g, r) = (fam.types)(l);
            let case = EmbeddingCase { g, r, parameter: Some(l) };
            table_entry(case, (fam.closed_rank_plus_3)(l.into()), (fam.closed_gap)(l.into()))
        })?;
        rows.push(table_row(fam.labels, entries));
    }
    Ok(rows)
}

fn table_row(labels: RowLabels, entries: Vec<TableEntry>) -> TableRow {
    TableRow {
        g: labels.g.into(),
        r: labels.r.into(),
        rank_plus_3: labels.rank_plus_3.into(),
        gap: labels.gap.into(),
        entries,
    }
}

fn check_l_max(l_max: u32) -> Result<(), EmbedError> {
    if l_max < MIN_L_MAX {
        return Err(EmbedError::LmaxTooSmall {
            given: l_max,
            min: MIN_L_MAX,
        });
    }
    Ok(())
}

fn table_case(g: LieType, r: LieType, parameter: Option<u32>) -> Result<(EmbeddingCase, u64, u64), EmbedError> {
    let pair = classify(g, r).ok_or_else(|| unsupported(g, r))?;
    let expected = pair_parameter(pair);
    if let (Some(given), Some(expected)) = (parameter, expected) {
        if given != expected {
            return Err(EmbedError::ParameterMismatch { g, r, given, expected });
        }
    }
    let case = EmbeddingCase { g, r, parameter: expected };
    let (rank_plus_3, gap) = match pair {
        Pair::G2 | Pair::F4InE6 => {
            let (_, _, rp3, gap) = FIXED_ROWS
                .iter()
                .find(|row| (row.1)() == (g, r))
                .copied()
                .ok_or_else(|| unsupported(g, r))?;
            (rp3, gap)
        }
        Pair::CInAOdd(l) => (u64::from(2 * l + 2), {
            let l = u64::from(l);
            l * (2 * l - 1) - 1
        }),
        Pair::BInAEven(l) => (u64::from(2 * l + 3), {
            let l = u64::from(l);
            2 * l * l + 3 * l
        }),
        Pair::BInD(l) => (u64::from(l + 3), u64::from(2 * l - 1)),
    };
    Ok((case, rank_plus_3, gap))
}

/// Compares `dim G - dim R` with `rank G + 3` for a table pair. Holds with a
/// subregular witness when the gap is strictly larger, otherwise defers to
/// [`subregular_membership_check`].
pub fn dimension_gap_check(g: LieType, r: LieType, parameter: Option<u32>) -> Result<CaseVerdict, EmbedError> {
    let (case, rank_plus_3, gap) = table_case(g, r, parameter)?;
    let entry = table_entry(case, rank_plus_3, gap)?;
    let outcome = if entry.exception {
        Outcome::Deferred
    } else {
        Outcome::Holds
    };
    let mut v = CaseVerdict::new(case, Criterion::DimensionGap, WitnessKind::Subregular, outcome)
        .number("rank G + 3", rank_plus_3)
        .number("dim G - dim R", gap)
        .number(format!("dim {g}"), entry.dim_g)
        .number(format!("dim {r}"), entry.dim_r);
    if entry.exception {
        v = v.note(format!("gap {gap} does not exceed {rank_plus_3}"));
    }
    Ok(v)
}

/// Decides whether a conjugate of the subregular `SL_2` of `G` can lie in `R`,
/// from the Jordan type of the subregular orbit where that suffices.
pub fn subregular_membership_check(g: LieType, r: LieType) -> Result<CaseVerdict, EmbedError> {
    let pair = classify(g, r).ok_or_else(|| unsupported(g, r))?;
    let case = EmbeddingCase {
        g,
        r,
        parameter: pair_parameter(pair),
    };
    let partition = |t| subregular_partition(t).map_err(EmbedError::from);
    let verdict = |criterion, holds: bool| {
        let outcome = if holds { Outcome::Holds } else { Outcome::Fails };
        let witness = if holds {
            WitnessKind::Subregular
        } else {
            WitnessKind::None
        };
        CaseVerdict::new(case, criterion, witness, outcome)
    };
    let described = |p: &Partition, what: &str| format!("subregular Jordan type {p} of {g} {what}");

    Ok(match pair {
        Pair::CInAOdd(l) => {
            let p = partition(g)?;
            let mut v = verdict(Criterion::SubregularPartition, !p.is_symplectic())
                .number("largest part", p.parts()[0])
                .note(described(&p, "is not symplectic"));
            if l == 2 {
                // B2 ⊂ A3 is also SO_5 ⊂ SO_6 = D_3, whose subregular type is (3,3)
                let d3 = Partition::new(vec![3, 3]).expect("valid partition");
                v = v.note(format!("as SO5 ⊂ SO6, subregular Jordan type {d3} has no part 1"));
            }
            v
        }
        Pair::BInAEven(_) => {
            let p = partition(g)?;
            verdict(Criterion::SubregularPartition, !p.is_orthogonal())
                .number("largest part", p.parts()[0])
                .note(described(&p, "is not orthogonal"))
        }
        Pair::BInD(_) => {
            let p = partition(g)?;
            verdict(Criterion::SubregularPartition, !p.contains_part(1))
                .number("largest part", p.parts()[0])
                .number("smallest part", *p.parts().last().expect("nonempty"))
                .note(described(&p, "has no part 1, so it fixes no line"))
        }
        Pair::G2 if g.family() == Family::A => {
            // G2 ⊂ B3 ⊂ A6; the subregular triple of A6 already misses B3
            let p = partition(g)?;
            verdict(Criterion::SubregularPartition, !p.is_orthogonal())
                .number("largest part", p.parts()[0])
                .note(described(&p, "is not orthogonal, so it misses B3 ⊃ G2"))
        }
        Pair::G2 => verdict(Criterion::ExternalArgument, true).note(format!(
            "G2 is the fixed group of triality in D4; the subregular triple of {g} is not triality-fixed"
        )),
        Pair::F4InE6 => verdict(Criterion::ExternalArgument, true).note(
            "the largest non-principal nilpotent orbit of e6 meeting f4 has codimension 10, \
             while the subregular one has codimension 8",
        ),
    })
}

/// `N - n + m - 2`: `N = dim G`, `n = rank G`, `m = rank R`. The dimension of
/// `R` forced when the centralizing element is regular.
pub fn regular_case_dimension(g: LieType, r: LieType) -> Result<u64, EmbedError> {
    Ok(group_dimension(g)? - u64::from(g.rank()) + u64::from(r.rank()) - 2)
}

/// Full decision for a pair. `B_2` in `A_3` or `A_4` is settled by orbit
/// counts with a principal witness. Every pair of the subregular table is
/// settled by the subregular route: the gap check, with the membership check
/// supplying the missing half (and replacing the gap check when it defers).
pub fn embedding_verdict(g: LieType, r: LieType, parameter: Option<u32>) -> Result<CaseVerdict, EmbedError> {
    let pair = classify(g, r).ok_or_else(|| unsupported(g, r))?;
    // B2 in A3 (as C2) and in A4 sit on the l = 2 ends of the type-A families
    let principal_route = matches!(pair, Pair::CInAOdd(2) | Pair::BInAEven(2));
    if principal_route {
        if let Some(given) = parameter {
            if given != 2 {
                return Err(EmbedError::ParameterMismatch { g, r, given, expected: 2 });
            }
        }
        let v = orbit_count_criterion(g, r)?;
        if !v.holds() {
            return Err(EmbedError::Inconsistency {
                case: v.case.to_string(),
                detail: "orbit count does not separate the pair".into(),
            });
        }
        return Ok(v);
    }

    let counts = orbit_count_criterion(g, r)?;
    let gap = dimension_gap_check(g, r, parameter)?;
    let member = subregular_membership_check(g, r)?;
    if !member.holds() {
        return Err(EmbedError::Inconsistency {
            case: member.case.to_string(),
            detail: "subregular Jordan type is compatible with R".into(),
        });
    }
    let criterion = match (member.criterion, gap.outcome) {
        (Criterion::ExternalArgument, _) => Criterion::ExternalArgument,
        (_, Outcome::Holds) => Criterion::DimensionGap,
        _ => Criterion::SubregularPartition,
    };
    let mut v = CaseVerdict::new(gap.case, criterion, WitnessKind::Subregular, Outcome::Holds);
    for src in [&counts, &gap, &member] {
        v.numbers.extend(src.numbers.iter().map(|(k, x)| (k.clone(), *x)));
        v.notes.extend(src.notes.iter().cloned());
    }
    v.numbers
        .insert("regular-case dim R".into(), regular_case_dimension(g, r)?.into());
    Ok(v)
}

/// Labelled orbit-count inequality from the rank-at-least-2 case list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityCheck {
    /// Which family of the case list: e.g. `a_{2l} > b_l`.
    pub family: String,
    pub verdict: CaseVerdict,
}

fn case_list(l_max: u32) -> Vec<(&'static str, EmbeddingCase)> {
    let t = |g: Result<LieType, _>, r: Result<LieType, _>, parameter| EmbeddingCase {
        g: g.expect("valid type"),
        r: r.expect("valid type"),
        parameter,
    };
    let mut cases = vec![
        ("B2 in A3, A4", t(LieType::a(3), LieType::b(2), None)),
        ("B2 in A3, A4", t(LieType::a(4), LieType::b(2), None)),
        ("G2 in B3, D4, A6", t(LieType::b(3), Ok(LieType::g2()), None)),
        ("G2 in B3, D4, A6", t(LieType::d(4), Ok(LieType::g2()), None)),
        ("G2 in B3, D4, A6", t(LieType::a(6), Ok(LieType::g2()), None)),
    ];
    for l in 3..=l_max {
        cases.push(("a_{2l} > b_l", t(LieType::a(2 * l), LieType::b(l), Some(l))));
    }
    for l in 3..=l_max {
        cases.push(("a_{2l-1} > c_l", t(LieType::a(2 * l - 1), LieType::c(l), Some(l))));
    }
    for l in 4..=l_max {
        cases.push(("d_l > b_{l-1}", t(LieType::d(l), LieType::b(l - 1), Some(l))));
    }
    cases.push(("F4 in E6", t(LieType::e(6), Ok(LieType::f4()), None)));
    cases
}

/// The verdicts of [`rank2_cases_report_with`], failing ones included.
pub fn rank2_case_verdicts_with(l_max: u32, exec: Execution) -> Result<Vec<InequalityCheck>, EmbedError> {
    check_l_max(l_max)?;
    let cases = case_list(l_max);
    exec.try_map(&cases, |(family, case)| {
        Ok(InequalityCheck {
            family: (*family).to_string(),
            verdict: orbit_count_verdict(*case)?,
        })
    })
}

/// Orbit-count verdicts for the whole rank-at-least-2 case list, families
/// swept over `3 <= l <= l_max` (`4 <= l` for `D_l`). Errors on the first
/// verdict that does not hold.
pub fn rank2_cases_report(l_max: u32) -> Result<Vec<InequalityCheck>, EmbedError> {
    rank2_cases_report_with(l_max, Execution::default())
}

pub fn rank2_cases_report_with(l_max: u32, exec: Execution) -> Result<Vec<InequalityCheck>, EmbedError> {
    let checks = rank2_case_verdicts_with(l_max, exec)?;
    if let Some(bad) = checks.iter().find(|c| !c.verdict.holds()) {
        return Err(EmbedError::Inconsistency {
            case: bad.verdict.case.to_string(),
            detail: format!("orbit count inequality {} fails", bad.family),
        });
    }
    Ok(checks)
}
