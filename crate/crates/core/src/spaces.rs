//! Registry of geodesic spaces, their tabulated expectations, and the
//! classification pipeline that runs on each of them.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::catalog::{build_e, build_so, build_sp, build_su, f4, LabeledAlgebra};
use crate::error::{Error, Result};
use crate::exactnum::{RationalMatrix, Signature};
use crate::homogeneous::{is_symmetric_pair, split_from_labels, ReductiveSplit};
use crate::invariants::{
    commutant, evaluate_integrability, invariant_tensors, pair_structures, square_roots, symplectic_family,
    RootSet, StructureCandidate, TensorKind,
};

/// Spaces of oriented geodesics covered by the registry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeodesicSpaceId {
    /// Spacelike geodesics of the pseudo-sphere `S^{p,q}`.
    LplusS(usize, usize),
    /// Timelike geodesics of `S^{p,q}`.
    LminusS(usize, usize),
    /// Timelike lines of `E^{p1,q}`.
    LminusE(usize, usize),
    LCP(usize),
    LCH(usize),
    LHP(usize),
    LHH(usize),
    LOP2,
}

use GeodesicSpaceId::*;

impl GeodesicSpaceId {
    /// Parameter ranges: `p + q ≥ 2` for spheres, `p1 ≥ 1` for flat spaces,
    /// `n ≥ 2` for the projective and hyperbolic families.
    pub fn validate(&self) -> Result<()> {
        let bad = |reason: &str| {
            Err(Error::UnsupportedParameters {
                space: self.to_string(),
                reason: reason.into(),
            })
        };
        match *self {
            LplusS(p, q) | LminusS(p, q) if p + q < 2 => bad("need p + q ≥ 2"),
            LplusS(0, _) => bad("spacelike geodesics need p ≥ 1"),
            LminusS(_, 0) => bad("no timelike geodesics when q = 0"),
            LminusE(p1, q) if p1 < 1 || p1 + q < 2 => bad("need p1 ≥ 1 and p1 + q ≥ 2"),
            LCP(n) | LCH(n) | LHP(n) | LHH(n) if n < 2 => bad("need n ≥ 2"),
            _ => Ok(()),
        }
    }

    /// Dimension of the underlying manifold `M`.
    pub fn base_dim(&self) -> usize {
        match *self {
            LplusS(p, q) | LminusS(p, q) => p + q,
            LminusE(p1, q) => p1 + q,
            LCP(n) | LCH(n) => 2 * n,
            LHP(n) | LHH(n) => 4 * n,
            LOP2 => 16,
        }
    }

    /// Identifiers accepted by the parser, for help and error messages.
    pub fn grammar() -> &'static [&'static str] {
        &[
            "LplusS(p,q)",
            "LminusS(p,q)",
            "LminusE(p1,q)",
            "LplusE(p1,q)",
            "LCP(n)",
            "LCH(n)",
            "LHP(n)",
            "LHH(n)",
            "LOP2",
        ]
    }
}

impl fmt::Display for GeodesicSpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LplusS(p, q) => write!(f, "LplusS({p},{q})"),
            LminusS(p, q) => write!(f, "LminusS({p},{q})"),
            LminusE(p, q) => write!(f, "LminusE({p},{q})"),
            LCP(n) => write!(f, "LCP({n})"),
            LCH(n) => write!(f, "LCH({n})"),
            LHP(n) => write!(f, "LHP({n})"),
            LHH(n) => write!(f, "LHH({n})"),
            LOP2 => write!(f, "LOP2"),
        }
    }
}

impl Serialize for GeodesicSpaceId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for GeodesicSpaceId {
    type Err = Error;

    /// Parses the compact grammar; `LplusE(p1,q)` is rewritten to the
    /// timelike form `LminusE(q,p1)` by reversing the metric.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownSpace(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "LOP2" {
            return Ok(LOP2);
        }
        let open = compact.find('(').ok_or_else(unknown)?;
        let inner = compact[open + 1..].strip_suffix(')').ok_or_else(unknown)?;
        let args: Vec<usize> = inner
            .split(',')
            .map(|a| a.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| unknown())?;
        let id = match (&compact[..open], args.as_slice()) {
            ("LplusS", &[p, q]) => LplusS(p, q),
            ("LminusS", &[p, q]) => LminusS(p, q),
            ("LminusE", &[p, q]) => LminusE(p, q),
            ("LplusE", &[p, q]) => LminusE(q, p),
            ("LCP", &[n]) => LCP(n),
            ("LCH", &[n]) => LCH(n),
            ("LHP", &[n]) => LHP(n),
            ("LHH", &[n]) => LHH(n),
            _ => return Err(unknown()),
        };
        id.validate()?;
        Ok(id)
    }
}

/// One cell of the structure table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cell {
    Empty,
    Count(usize),
    /// A continuous family.
    Family,
    /// Present because the pair is symmetric (flat rows).
    Symmetric,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Empty => write!(f, "∅"),
            Cell::Count(n) => write!(f, "{n}"),
            Cell::Family => write!(f, "R"),
            Cell::Symmetric => write!(f, "Symmetric"),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Table columns in display order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Column {
    Symplectic,
    ComplexInt,
    ComplexNon,
    ParaInt,
    ParaNon,
    KahlerInt,
    KahlerNon,
    ParaKahlerInt,
    ParaKahlerNon,
}

impl Column {
    pub const ALL: [Column; 9] = [
        Column::Symplectic,
        Column::ComplexInt,
        Column::ComplexNon,
        Column::ParaInt,
        Column::ParaNon,
        Column::KahlerInt,
        Column::KahlerNon,
        Column::ParaKahlerInt,
        Column::ParaKahlerNon,
    ];

    pub fn index(self) -> usize {
        Column::ALL.iter().position(|&c| c == self).expect("listed")
    }

    pub fn title(self) -> &'static str {
        match self {
            Column::Symplectic => "Symplectic",
            Column::ComplexInt => "Complex/Int",
            Column::ComplexNon => "Complex/Non",
            Column::ParaInt => "Para/Int",
            Column::ParaNon => "Para/Non",
            Column::KahlerInt => "Kähler/Int",
            Column::KahlerNon => "Kähler/Non",
            Column::ParaKahlerInt => "ParaKähler/Int",
            Column::ParaKahlerNon => "ParaKähler/Non",
        }
    }
}

/// A cell value that a coarser or finer counting convention produces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Alternative {
    pub column: Column,
    pub cell: Cell,
    pub note: String,
}

/// What the metric of a (para-)Kähler pair should look like.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SignatureExpectation {
    /// This signature or its negative.
    Exactly { pos: usize, neg: usize },
    Neutral,
}

impl SignatureExpectation {
    pub fn accepts(&self, s: &Signature) -> bool {
        match *self {
            SignatureExpectation::Exactly { pos, neg } => {
                s.null == 0 && ((s.pos, s.neg) == (pos, neg) || (s.pos, s.neg) == (neg, pos))
            }
            SignatureExpectation::Neutral => s.is_neutral(),
        }
    }
}

/// Tabulated expectation for one space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedRow {
    /// Which table row applies.
    pub row: String,
    /// `None` when the space has no tabulated row.
    pub cells: Option<[Cell; 9]>,
    /// Marks rows whose tabulated counts rest on an equivalence coarser than
    /// "up to global sign".
    pub convention_flag: bool,
    pub alternatives: Vec<Alternative>,
    pub pair_signature: Option<SignatureExpectation>,
    /// Whether the pair `(g, h)` is expected to be symmetric.
    pub symmetric: Option<bool>,
}

fn cells(spec: &str) -> [Cell; 9] {
    let v: Vec<Cell> = spec
        .split_whitespace()
        .map(|t| match t {
            "-" => Cell::Empty,
            "R" => Cell::Family,
            "S" => Cell::Symmetric,
            n => Cell::Count(n.parse().expect("count")),
        })
        .collect();
    v.try_into().expect("nine cells")
}

fn alt(column: Column, cell: Cell, note: &str) -> Alternative {
    Alternative {
        column,
        cell,
        note: note.into(),
    }
}

/// Expectation row for `id`.
pub fn expected_row(id: GeodesicSpaceId) -> ExpectedRow {
    let mut row = ExpectedRow {
        row: String::new(),
        cells: None,
        convention_flag: false,
        alternatives: Vec::new(),
        pair_signature: None,
        symmetric: None,
    };
    match id {
        LminusE(p1, q) => {
            row.symmetric = Some(true);
            if p1 + q == 3 {
                row.row = "L(E^{p+1,q}), p+1+q = 3".into();
                row.cells = Some(cells("S R - - - R - - -"));
                row.pair_signature = Some(SignatureExpectation::Neutral);
                row.convention_flag = true;
                let note = "the commutant fixes J = g⁻¹ω up to sign; the family is that of compatible metrics";
                row.alternatives = vec![
                    alt(Column::ComplexInt, Cell::Count(1), note),
                    alt(Column::KahlerInt, Cell::Count(1), note),
                ];
            } else {
                row.row = "L(E^{p+1,q}), p+1+q ≠ 3".into();
                row.cells = Some(cells("S - - - - - - - -"));
            }
        }
        LplusS(p, q) => {
            row.symmetric = Some(true);
            match (p + q, p, q) {
                (n, _, _) if n > 3 => {
                    row.row = "L+(S^{p,q}), p+q > 3".into();
                    row.cells = Some(cells("1 1 - - - 1 - - -"));
                    row.pair_signature = Some(SignatureExpectation::Exactly {
                        pos: 2 * (p - 1),
                        neg: 2 * q,
                    });
                }
                (3, 2, 1) => {
                    row.row = "L+(S^{2,1})".into();
                    row.cells = Some(cells("R - - 1 - - - R -"));
                    three_dim_alternatives(&mut row, true, false);
                }
                (3, _, _) => {
                    row.row = format!("L+(S^{{{p},{q}}})");
                    row.cells = Some(cells("R 1 - - - R - - -"));
                    three_dim_alternatives(&mut row, true, true);
                }
                _ => row.row = "untabulated (p+q = 2)".into(),
            }
        }
        LminusS(p, q) => {
            row.symmetric = Some(true);
            match (p + q, p, q) {
                (n, _, _) if n > 3 => {
                    row.row = "L-(S^{p,q}), p+q > 3".into();
                    row.cells = Some(cells("1 - - 1 - - - 1 -"));
                    row.pair_signature = Some(SignatureExpectation::Neutral);
                }
                (3, 1, 2) => {
                    row.row = "L-(S^{1,2})".into();
                    row.cells = Some(cells("R - - 1 - - - R -"));
                    three_dim_alternatives(&mut row, false, false);
                }
                (3, _, _) => {
                    row.row = format!("L-(S^{{{p},{q}}})");
                    row.cells = Some(cells("R 1 - - - R - - -"));
                    three_dim_alternatives(&mut row, false, true);
                }
                _ => row.row = "untabulated (p+q = 2)".into(),
            }
        }
        LCP(_) => {
            row.row = "L(CP^n)".into();
            row.symmetric = Some(false);
            row.cells = Some(cells("R 2 2 - - 2 2 - -"));
        }
        LCH(_) => {
            row.row = "L(CH^n)".into();
            row.symmetric = Some(false);
            row.cells = Some(cells("R - - 1 1 - - 1 1"));
        }
        LHP(_) | LOP2 => {
            row.row = if id == LOP2 { "L(OP^2)" } else { "L(HP^n)" }.into();
            row.symmetric = Some(false);
            row.cells = Some(cells("1 1 - - - 1 - - -"));
            row.pair_signature = None;
            row.convention_flag = true;
            let note = "the second almost complex structure (opposite sign on the outer graded piece) \
                        is non-integrable; the reference row leaves that column empty";
            row.alternatives = vec![
                alt(Column::ComplexNon, Cell::Count(1), note),
                alt(Column::KahlerNon, Cell::Count(1), note),
            ];
        }
        LHH(_) => {
            row.row = "L(HH^n)".into();
            row.symmetric = Some(false);
            row.cells = Some(cells("1 - - 1 1 - - 1 1"));
        }
    }
    row
}

/// Dimension-three sphere rows. With `m = H ⊗ V` and `dim V = 2` the
/// commutant holds `I = I_H⊗1`, `I' = 1⊗I_V` and `I'' = I_H⊗I_V`; each is
/// complex or para-complex according to its factors, all are parallel, and
/// only `I`, `I'` are skew for invariant metrics. The raw counts this gives
/// are recorded wherever they differ from the tabulated cell.
///
/// `h_complex`: `I_H² = -1` (spacelike geodesics); `v_definite`: `V` has
/// definite signature so that `I_V² = -1`.
fn three_dim_alternatives(row: &mut ExpectedRow, h_complex: bool, v_definite: bool) {
    row.convention_flag = true;
    let kinds = [h_complex, v_definite, h_complex != v_definite];
    let complex = kinds.iter().filter(|&&k| k).count();
    let skew_complex = kinds[..2].iter().filter(|&&k| k).count();
    let raw = [
        (Column::ComplexInt, complex),
        (Column::ParaInt, 3 - complex),
        (Column::KahlerInt, skew_complex),
        (Column::ParaKahlerInt, 2 - skew_complex),
    ];
    let table = row.cells.expect("row cells set first");
    let note = "raw count of I_H⊗1, 1⊗I_V, I_H⊗I_V up to sign";
    for (col, n) in raw {
        let cell = if n == 0 { Cell::Empty } else { Cell::Count(n) };
        if table[col.index()] != cell {
            row.alternatives.push(alt(col, cell, note));
        }
    }
}

/// A built space: labeled parent, validated split and expectation.
#[derive(Clone, Debug)]
pub struct BuiltSpace {
    pub id: GeodesicSpaceId,
    pub algebra: LabeledAlgebra,
    pub split: ReductiveSplit,
    pub expected: ExpectedRow,
}

/// Parent algebra and the labels of `h` and `m` for `id`.
fn parent_and_labels(id: GeodesicSpaceId) -> Result<(LabeledAlgebra, &'static str, &'static str)> {
    Ok(match id {
        LplusS(p, q) => (build_so(p + 1, q)?, "h+", "m+"),
        LminusS(p, q) => (build_so(p + 1, q)?, "h-", "m-"),
        LminusE(p1, q) => (build_e(p1, q)?, "h", "m"),
        LCP(n) => (build_su(n + 1, 0)?, "h", "l"),
        LCH(n) => (build_su(1, n)?, "h", "l"),
        LHP(n) => (build_sp(n + 1, 0)?, "h", "l"),
        LHH(n) => (build_sp(1, n)?, "h", "l"),
        LOP2 => (f4::build_f4()?, "h", "m"),
    })
}

pub fn build_space(id: GeodesicSpaceId) -> Result<BuiltSpace> {
    id.validate()?;
    let ctx = |e: Error| e.context(id.to_string());
    let (algebra, h, m) = parent_and_labels(id).map_err(ctx)?;
    let split = split_from_labels(&algebra, h, m).map_err(ctx)?;
    Ok(BuiltSpace {
        id,
        algebra,
        split,
        expected: expected_row(id),
    })
}

/// Dimensions of `g`, `h`, `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Dims {
    pub g: usize,
    pub h: usize,
    pub m: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootStatus {
    Isolated,
    Family,
    None,
}

/// Solutions of `I² = ε·Id` with their integrability.
#[derive(Clone, Debug, Serialize)]
pub struct StructureCount {
    pub epsilon: i8,
    pub status: RootStatus,
    pub candidates: Vec<StructureCandidate>,
    pub integrable: usize,
    pub non_integrable: usize,
    /// Tangent dimension of the solution family, when not isolated.
    pub family_tangent_dim: Option<usize>,
    /// Para case: solutions with unequal eigenspaces, not counted.
    pub product_structures: usize,
}

impl StructureCount {
    fn from_roots(eps: i8, roots: Option<RootSet>) -> Self {
        let (status, candidates, tangent, products) = match roots {
            None => (RootStatus::None, Vec::new(), None, 0),
            Some(RootSet::Isolated {
                candidates,
                product_structures,
            }) => {
                let status = if candidates.is_empty() { RootStatus::None } else { RootStatus::Isolated };
                (status, candidates, None, product_structures.len())
            }
            Some(RootSet::Family(f)) => (RootStatus::Family, vec![f.representative], Some(f.tangent_dim), 0),
        };
        let integrable = candidates.iter().filter(|c| c.integrable == Some(true)).count();
        Self {
            epsilon: eps,
            status,
            non_integrable: candidates.len() - integrable,
            integrable,
            candidates,
            family_tangent_dim: tangent,
            product_structures: products,
        }
    }

    /// Table cells `(Int, Non)`.
    fn cells(&self) -> (Cell, Cell) {
        let count = |n: usize| if n == 0 { Cell::Empty } else { Cell::Count(n) };
        match self.status {
            RootStatus::None => (Cell::Empty, Cell::Empty),
            RootStatus::Family => {
                if self.integrable > 0 {
                    (Cell::Family, Cell::Empty)
                } else {
                    (Cell::Empty, Cell::Family)
                }
            }
            RootStatus::Isolated => (count(self.integrable), count(self.non_integrable)),
        }
    }
}

/// A (para-)Kähler pair, summarized.
#[derive(Clone, Debug, Serialize)]
pub struct PairSummary {
    pub epsilon: i8,
    /// Index into the candidate list of the matching `StructureCount`.
    pub structure: usize,
    pub integrable: Option<bool>,
    pub metric_family_dim: usize,
    pub signature: Signature,
    pub metric: RationalMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Match,
    MatchUpToConvention,
    Mismatch,
    NotTabulated,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "MATCH",
            Verdict::MatchUpToConvention => "MATCH-UP-TO-CONVENTION",
            Verdict::Mismatch => "MISMATCH",
            Verdict::NotTabulated => "NOT-TABULATED",
        })
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    Match,
    Convention,
    Mismatch,
}

#[derive(Clone, Debug, Serialize)]
pub struct ColumnComparison {
    pub column: Column,
    pub expected: Cell,
    pub actual: Cell,
    pub status: CellStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub verdict: Verdict,
    pub row: String,
    pub convention_flag: bool,
    pub columns: Vec<ColumnComparison>,
    /// Whether the pair signatures meet the stated expectation.
    pub signature_ok: Option<bool>,
    pub symmetric_ok: Option<bool>,
}

impl Comparison {
    pub fn differing(&self) -> Vec<Column> {
        self.columns
            .iter()
            .filter(|c| c.status == CellStatus::Mismatch)
            .map(|c| c.column)
            .collect()
    }
}

/// Everything the pipeline learns about one space.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub space: GeodesicSpaceId,
    pub algebra: String,
    pub dims: Dims,
    pub symmetric_pair: bool,
    pub invariant_two_forms: usize,
    pub closed_two_forms: usize,
    /// Integer coefficients on the closed basis of a nondegenerate member.
    pub symplectic_sample: Option<Vec<i64>>,
    pub symplectic_searched: usize,
    pub invariant_metrics: usize,
    pub commutant_dim: usize,
    pub commutant_commutative: bool,
    pub complex: StructureCount,
    pub para: StructureCount,
    pub pairs: Vec<PairSummary>,
    pub cells: [Cell; 9],
    pub comparison: Comparison,
}

impl ClassificationReport {
    pub fn cell(&self, c: Column) -> Cell {
        self.cells[c.index()]
    }

    /// Pairs for one sign of ε.
    pub fn pairs_for(&self, eps: i8) -> impl Iterator<Item = &PairSummary> {
        self.pairs.iter().filter(move |p| p.epsilon == eps)
    }
}

fn solve(c: &crate::invariants::CommutantAlgebra, s: &ReductiveSplit, eps: i8) -> Result<StructureCount> {
    let roots = match square_roots(c, eps) {
        Ok(mut r) => {
            evaluate_integrability(s, &mut r);
            Some(r)
        }
        Err(Error::NoSolution { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(StructureCount::from_roots(eps, roots))
}

/// Table cells `(Int, Non)` for the pairs of one sign.
fn pair_cells(count: &StructureCount, pairs: &[PairSummary]) -> (Cell, Cell) {
    let paired = |integrable: bool| {
        let mut idx: Vec<usize> = pairs
            .iter()
            .filter(|p| p.epsilon == count.epsilon && p.integrable == Some(integrable))
            .map(|p| p.structure)
            .collect();
        idx.dedup();
        idx.len()
    };
    let (i, n) = (paired(true), paired(false));
    let cell = |k: usize| match (k, count.status) {
        (0, _) => Cell::Empty,
        (_, RootStatus::Family) => Cell::Family,
        (k, _) => Cell::Count(k),
    };
    (cell(i), cell(n))
}

fn cell_satisfies(expected: Cell, actual: Cell, symmetric_with_sample: bool) -> bool {
    match expected {
        Cell::Symmetric => symmetric_with_sample,
        e => e == actual,
    }
}

/// Compares computed cells against the expectation row.
pub fn compare(
    expected: &ExpectedRow,
    actual: &[Cell; 9],
    symmetric: bool,
    has_sample: bool,
    pairs: &[PairSummary],
) -> Comparison {
    let Some(table) = expected.cells else {
        return Comparison {
            verdict: Verdict::NotTabulated,
            row: expected.row.clone(),
            convention_flag: expected.convention_flag,
            columns: Vec::new(),
            signature_ok: None,
            symmetric_ok: None,
        };
    };
    let columns: Vec<ColumnComparison> = Column::ALL
        .iter()
        .map(|&col| {
            let (e, a) = (table[col.index()], actual[col.index()]);
            let status = if cell_satisfies(e, a, symmetric && has_sample) {
                CellStatus::Match
            } else if expected.alternatives.iter().any(|x| x.column == col && x.cell == a) {
                CellStatus::Convention
            } else {
                CellStatus::Mismatch
            };
            ColumnComparison {
                column: col,
                expected: e,
                actual: a,
                status,
            }
        })
        .collect();
    let signature_ok = expected
        .pair_signature
        .map(|exp| !pairs.is_empty() && pairs.iter().all(|p| exp.accepts(&p.signature)));
    let symmetric_ok = expected.symmetric.map(|s| s == symmetric);
    let mismatch = columns.iter().any(|c| c.status == CellStatus::Mismatch)
        || signature_ok == Some(false)
        || symmetric_ok == Some(false);
    let verdict = if mismatch {
        Verdict::Mismatch
    } else if expected.convention_flag || columns.iter().any(|c| c.status == CellStatus::Convention) {
        Verdict::MatchUpToConvention
    } else {
        Verdict::Match
    };
    Comparison {
        verdict,
        row: expected.row.clone(),
        convention_flag: expected.convention_flag,
        columns,
        signature_ok,
        symmetric_ok,
    }
}

/// Runs the whole pipeline on an already built space.
pub fn classify_built(space: &BuiltSpace) -> Result<ClassificationReport> {
    let s = &space.split;
    let ctx = |e: Error| e.context(space.id.to_string());
    let symmetric = is_symmetric_pair(s);
    let fam = symplectic_family(s).map_err(ctx)?;
    let sym = invariant_tensors(s, TensorKind::Sym2).map_err(ctx)?;
    let comm = commutant(s).map_err(ctx)?;
    let complex = solve(&comm, s, -1).map_err(ctx)?;
    let para = solve(&comm, s, 1).map_err(ctx)?;

    let mut pairs = Vec::new();
    for count in [&complex, &para] {
        for rec in pair_structures(s, &count.candidates).map_err(ctx)? {
            pairs.push(PairSummary {
                epsilon: rec.epsilon,
                structure: rec.structure,
                integrable: rec.integrable,
                metric_family_dim: rec.family_dim,
                signature: rec.signature,
                metric: rec.metric,
            });
        }
    }

    let symplectic = match (&fam.sample, fam.closed_basis.len()) {
        (None, _) => Cell::Empty,
        (Some(_), 1) => Cell::Count(1),
        (Some(_), _) => Cell::Family,
    };
    let (ci, cn) = complex.cells();
    let (pi, pn) = para.cells();
    let (ki, kn) = pair_cells(&complex, &pairs);
    let (qi, qn) = pair_cells(&para, &pairs);
    let cells = [symplectic, ci, cn, pi, pn, ki, kn, qi, qn];
    let comparison = compare(&space.expected, &cells, symmetric, fam.sample.is_some(), &pairs);

    Ok(ClassificationReport {
        space: space.id,
        algebra: space.algebra.name.clone(),
        dims: Dims {
            g: s.parent().dim(),
            h: s.dim_h(),
            m: s.dim_m(),
        },
        symmetric_pair: symmetric,
        invariant_two_forms: fam.invariant_dim,
        closed_two_forms: fam.closed_basis.len(),
        symplectic_sample: fam.sample.map(|(c, _)| c),
        symplectic_searched: fam.searched,
        invariant_metrics: sym.dim(),
        commutant_dim: comm.dim(),
        commutant_commutative: comm.is_commutative(),
        complex,
        para,
        pairs,
        cells,
        comparison,
    })
}

pub fn classify(id: GeodesicSpaceId) -> Result<ClassificationReport> {
    classify_built(&build_space(id)?)
}

/// Outcome of one table row.
#[derive(Clone, Debug, Serialize)]
pub struct RowOutcome {
    pub space: GeodesicSpaceId,
    pub verdict: Option<Verdict>,
    pub differing: Vec<Column>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table1Summary {
    pub rows: Vec<RowOutcome>,
    pub matches: usize,
    pub convention_matches: usize,
    pub mismatches: usize,
    pub errors: usize,
    pub pass: bool,
    #[serde(skip)]
    pub reports: Vec<ClassificationReport>,
}

/// The rows that the table battery covers by default.
pub fn generic_battery() -> Vec<GeodesicSpaceId> {
    vec![
        LplusS(4, 0),
        LplusS(2, 2),
        LminusS(2, 2),
        LCP(2),
        LCP(3),
        LCH(2),
        LHP(2),
        LHH(2),
        LOP2,
    ]
}

/// Classifies each row and compares it with the table; passes iff no row
/// mismatches or fails.
pub fn table1_compare(rows: &[GeodesicSpaceId]) -> Table1Summary {
    let mut out = Table1Summary {
        rows: Vec::new(),
        matches: 0,
        convention_matches: 0,
        mismatches: 0,
        errors: 0,
        pass: true,
        reports: Vec::new(),
    };
    for &id in rows {
        match classify(id) {
            Ok(r) => {
                match r.comparison.verdict {
                    Verdict::Match | Verdict::NotTabulated => out.matches += 1,
                    Verdict::MatchUpToConvention => out.convention_matches += 1,
                    Verdict::Mismatch => out.mismatches += 1,
                }
                out.rows.push(RowOutcome {
                    space: id,
                    verdict: Some(r.comparison.verdict),
                    differing: r.comparison.differing(),
                    error: None,
                });
                out.reports.push(r);
            }
            Err(e) => {
                out.errors += 1;
                out.rows.push(RowOutcome {
                    space: id,
                    verdict: None,
                    differing: Vec::new(),
                    error: Some(e.to_string()),
                });
            }
        }
    }
    out.pass = out.mismatches == 0 && out.errors == 0;
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identifiers_round_trip() {
        for id in [LplusS(4, 0), LminusS(2, 2), LminusE(3, 0), LCP(2), LHH(3), LOP2] {
            assert_eq!(id.to_string().parse::<GeodesicSpaceId>().unwrap(), id);
        }
        assert_eq!(" LCP( 2 ) ".parse::<GeodesicSpaceId>().unwrap(), LCP(2));
        assert_eq!("LplusE(2,1)".parse::<GeodesicSpaceId>().unwrap(), LminusE(1, 2));
        assert!(matches!("LXX(9)".parse::<GeodesicSpaceId>(), Err(Error::UnknownSpace(_))));
        assert!(matches!(
            "LminusS(3,0)".parse::<GeodesicSpaceId>(),
            Err(Error::UnsupportedParameters { .. })
        ));
    }

    #[test]
    fn small_space_dimensions() {
        for (id, dims) in [(LplusS(4, 0), (10, 4, 6)), (LCP(2), (8, 2, 6)), (LminusE(3, 0), (6, 2, 4))] {
            let s = build_space(id).unwrap();
            assert_eq!((s.split.parent().dim(), s.split.dim_h(), s.split.dim_m()), dims, "{id}");
            assert_eq!(s.split.dim_m(), 2 * id.base_dim() - 2);
        }
    }

    #[test]
    fn sphere_row_matches() {
        let r = classify(LplusS(4, 0)).unwrap();
        assert_eq!(r.comparison.verdict, Verdict::Match, "{:?}", r.comparison);
    }
}
