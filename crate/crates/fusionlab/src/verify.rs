//! Exhaustive verification of the ring axioms over one level.
//!
//! Every ring is first materialized as a dense [`FusionTable`]; the generic
//! checks only look at that table, so a table read back from disk or altered
//! by a [`TableMutation`] is verified exactly like a live one.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::affine_rings::affine_range;
use crate::affine_rings::{fuse_affine, AffineRing, OrbAffineRing};
use crate::catalog::{
    contragredient, expected_count, AffineLabel, AlgebraKind, K0Label, Label, Level,
    OrbAffineLabel, OrbParaLabel, Sector, Sign,
};
use crate::error::{Error, Result};
use crate::outcome::FusionOutcome;
use crate::para_rings::{
    fuse_k0, matching_clauses, restrict_untwisted, twisted_level_of, OrbParaOptions, OrbParaRing,
    ParaRing,
};
use crate::qdim::{precision_digits, NumericBasis, QDim, Tier};
use crate::ring::FusionRing;

/// Most counterexamples stored per check; the rest are only counted.
pub const FAILURE_CAP: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckName {
    Counts,
    Unit,
    SimpleCurrent,
    Commutativity,
    Associativity,
    Grading,
    Duality,
    QdimMult,
    DispatchCoverage,
    Restriction,
}

impl CheckName {
    pub const ALL: [CheckName; 10] = [
        CheckName::Counts,
        CheckName::Unit,
        CheckName::SimpleCurrent,
        CheckName::Commutativity,
        CheckName::Associativity,
        CheckName::Grading,
        CheckName::Duality,
        CheckName::QdimMult,
        CheckName::DispatchCoverage,
        CheckName::Restriction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckName::Counts => "counts",
            CheckName::Unit => "unit",
            CheckName::SimpleCurrent => "simple-current",
            CheckName::Commutativity => "commutativity",
            CheckName::Associativity => "associativity",
            CheckName::Grading => "grading",
            CheckName::Duality => "duality",
            CheckName::QdimMult => "qdim-mult",
            CheckName::DispatchCoverage => "dispatch-coverage",
            CheckName::Restriction => "restriction",
        }
    }

    /// Parse a comma separated list; `all` selects every check.
    pub fn parse_list(s: &str) -> Result<Vec<CheckName>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(CheckName::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// One counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    #[serde(skip)]
    key: Vec<usize>,
    pub inputs: Vec<String>,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// How many qdim comparisons held at each equality tier.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TierCounts {
    pub quotient: u64,
    pub numeric: u64,
    pub unequal: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: CheckName,
    pub status: Status,
    pub instances: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tiers: Option<TierCounts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckRecord {
    fn skipped(name: CheckName, why: &str) -> CheckRecord {
        CheckRecord {
            name,
            status: Status::Skipped,
            instances: 0,
            failure_count: 0,
            failures: Vec::new(),
            elapsed_ms: 0.0,
            tiers: None,
            detail: Some(why.to_string()),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Result of a verification run.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub algebra: AlgebraKind,
    pub level: u32,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn check(&self, name: CheckName) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} level {}", self.algebra, self.level)?;
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            write!(
                f,
                "  {:<18} {status:<4} {:>9} instances {:>6} failures {:>9.1} ms",
                c.name.name(),
                c.instances,
                c.failure_count,
                c.elapsed_ms
            )?;
            if let Some(t) = c.tiers {
                write!(f, "  (quotient {}, numeric {})", t.quotient, t.numeric)?;
            }
            if let Some(d) = &c.detail {
                write!(f, "  {d}")?;
            }
            writeln!(f)?;
            for x in &c.failures {
                writeln!(
                    f,
                    "      {}: expected {} got {}",
                    x.inputs.join(" x "),
                    x.expected,
                    x.actual
                )?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        write!(f, "{}", if self.passed { "PASS" } else { "FAIL" })
    }
}

/// Knobs shared by every verification entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub orb_para: OrbParaOptions,
    /// Run qdim multiplicativity on the affine orbifold with the inherited
    /// values `[i+1]` for every module.
    pub affine_qdim_extension: bool,
    pub digits: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            orb_para: OrbParaOptions::default(),
            affine_qdim_extension: false,
            digits: precision_digits(),
        }
    }
}

// ---------------------------------------------------------------------------
// dense table

type Row = Vec<(usize, u32)>;

/// All products of a ring, indexed by position in the canonical label list.
#[derive(Debug, Clone)]
pub struct FusionTable {
    algebra: AlgebraKind,
    k: Level,
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
    products: Vec<Row>,
    duals: Vec<usize>,
    qdims: Vec<QDim>,
    unit: usize,
    simple_current: Option<usize>,
}

impl FusionTable {
    pub fn from_ring<R: FusionRing>(ring: &R) -> FusionTable {
        let labels: Vec<Label> = ring.labels().iter().map(|&l| l.into()).collect();
        let index = index_of(&labels);
        let ls = ring.labels();
        let products = ls
            .iter()
            .flat_map(|a| ls.iter().map(move |b| (a, b)))
            .map(|(a, b)| row(&index, &ring.fuse(a, b).map(|&l| l.into())).expect("closed"))
            .collect();
        let qdims = ls.iter().map(|l| ring.qdim(l)).collect();
        FusionTable {
            algebra: ring.algebra(),
            k: ring.level(),
            duals: labels
                .iter()
                .map(|l| index[&contragredient(ring.level(), *l)])
                .collect(),
            unit: index[&ring.unit().into()],
            simple_current: ring.simple_current().map(|s| index[&s.into()]),
            labels,
            index,
            products,
            qdims,
        }
    }

    /// Table from explicit data; `product(a, b)` lists the outputs of the
    /// `a`-th and `b`-th labels.
    pub fn from_parts(
        algebra: AlgebraKind,
        k: Level,
        labels: Vec<Label>,
        qdims: Vec<QDim>,
        mut product: impl FnMut(usize, usize) -> Result<FusionOutcome<Label>>,
    ) -> Result<FusionTable> {
        let index = index_of(&labels);
        if index.len() != labels.len() || qdims.len() != labels.len() {
            return Err(Error::Table("duplicate labels or missing qdims".into()));
        }
        let n = labels.len();
        let mut products = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                products.push(row(&index, &product(a, b)?)?);
            }
        }
        let find = |l: Label| {
            index
                .get(&l)
                .copied()
                .ok_or_else(|| Error::Table(format!("label {l} missing")))
        };
        let duals = labels
            .iter()
            .map(|l| find(contragredient(k, *l)))
            .collect::<Result<_>>()?;
        let unit = find(unit_label(algebra, k))?;
        let simple_current = simple_current_label(algebra, k).map(find).transpose()?;
        Ok(FusionTable {
            algebra,
            k,
            labels,
            index,
            products,
            duals,
            qdims,
            unit,
            simple_current,
        })
    }

    pub fn algebra(&self) -> AlgebraKind {
        self.algebra
    }

    pub fn level(&self) -> Level {
        self.k
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn qdims(&self) -> &[QDim] {
        &self.qdims
    }

    fn n(&self) -> usize {
        self.labels.len()
    }

    fn row(&self, a: usize, b: usize) -> &Row {
        &self.products[a * self.n() + b]
    }

    fn mult(&self, a: usize, b: usize, c: usize) -> u32 {
        let r = self.row(a, b);
        r.binary_search_by_key(&c, |e| e.0).map_or(0, |p| r[p].1)
    }

    /// Product of two labels as stored.
    pub fn product(&self, a: &Label, b: &Label) -> Option<FusionOutcome<Label>> {
        let (a, b) = (self.index.get(a)?, self.index.get(b)?);
        Some(self.outcome(self.row(*a, *b)))
    }

    fn outcome(&self, r: &Row) -> FusionOutcome<Label> {
        r.iter().map(|&(c, m)| (self.labels[c], m)).collect()
    }

    fn show(&self, r: &Row) -> String {
        let s = self.outcome(r).to_string();
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }

    fn name(&self, a: usize) -> String {
        self.labels[a].to_string()
    }

    /// Apply one edit to a single product.
    pub fn apply(&mut self, m: &TableMutation) -> Result<()> {
        let (left, right, output) = match m {
            TableMutation::Identity => return Ok(()),
            TableMutation::FlipSign {
                left,
                right,
                output,
            }
            | TableMutation::DropTerm {
                left,
                right,
                output,
            } => (left, right, output),
        };
        let pos = |l: &Label| {
            self.index
                .get(l)
                .copied()
                .ok_or_else(|| Error::Mutation(format!("unknown label {l}")))
        };
        let (a, b, c) = (pos(left)?, pos(right)?, pos(output)?);
        let n = self.n();
        let r = &mut self.products[a * n + b];
        let p = r
            .binary_search_by_key(&c, |e| e.0)
            .map_err(|_| Error::Mutation(format!("{output} is not in {left} x {right}")))?;
        match m {
            TableMutation::DropTerm { .. } => {
                r[p].1 -= 1;
                if r[p].1 == 0 {
                    r.remove(p);
                }
            }
            TableMutation::FlipSign { .. } => {
                let flipped = output
                    .flipped()
                    .ok_or_else(|| Error::Mutation(format!("{output} carries no sign")))?;
                let d = pos(&flipped)?;
                let r = &mut self.products[a * n + b];
                let (_, mult) = r.remove(p);
                match r.binary_search_by_key(&d, |e| e.0) {
                    Ok(q) => r[q].1 += mult,
                    Err(q) => r.insert(q, (d, mult)),
                }
            }
            TableMutation::Identity => {}
        }
        Ok(())
    }

    /// Every single-entry mutation of this table.
    pub fn mutation_candidates(&self) -> Vec<TableMutation> {
        let n = self.n();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for &(c, _) in self.row(a, b) {
                    let (left, right, output) = (self.labels[a], self.labels[b], self.labels[c]);
                    out.push(TableMutation::DropTerm {
                        left,
                        right,
                        output,
                    });
                    if output.flipped().is_some() {
                        out.push(TableMutation::FlipSign {
                            left,
                            right,
                            output,
                        });
                    }
                }
            }
        }
        out
    }
}

fn index_of(labels: &[Label]) -> HashMap<Label, usize> {
    labels.iter().enumerate().map(|(i, l)| (*l, i)).collect()
}

fn row(index: &HashMap<Label, usize>, o: &FusionOutcome<Label>) -> Result<Row> {
    let mut r = o
        .iter()
        .map(|(l, m)| {
            index
                .get(l)
                .map(|&i| (i, m))
                .ok_or_else(|| Error::Table(format!("output {l} is not a label of the ring")))
        })
        .collect::<Result<Row>>()?;
    r.sort_unstable();
    Ok(r)
}

/// The vacuum label of `algebra`.
pub fn unit_label(algebra: AlgebraKind, k: Level) -> Label {
    match algebra {
        AlgebraKind::Affine => AffineLabel { i: 0 }.into(),
        AlgebraKind::AffineOrb => OrbAffineLabel::untwisted(0, Sign::Plus).into(),
        AlgebraKind::Para => K0Label::vacuum(k).into(),
        AlgebraKind::ParaOrb => OrbParaLabel::TypeI {
            base: K0Label::vacuum(k),
            sign: Sign::Plus,
        }
        .into(),
    }
}

/// The `−` half of the vacuum, for the orbifolds.
pub fn simple_current_label(algebra: AlgebraKind, k: Level) -> Option<Label> {
    unit_label(algebra, k)
        .flipped()
        .filter(|_| algebra.is_orbifold())
}

/// A single edit of a fusion table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableMutation {
    Identity,
    /// Replace `output` by its opposite-sign partner in `left ⊠ right`.
    FlipSign {
        left: Label,
        right: Label,
        output: Label,
    },
    /// Remove one copy of `output` from `left ⊠ right`.
    DropTerm {
        left: Label,
        right: Label,
        output: Label,
    },
}

impl fmt::Display for TableMutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableMutation::Identity => f.write_str("identity"),
            TableMutation::FlipSign {
                left,
                right,
                output,
            } => write!(f, "flip {output} in {left} x {right}"),
            TableMutation::DropTerm {
                left,
                right,
                output,
            } => write!(f, "drop {output} from {left} x {right}"),
        }
    }
}

// ---------------------------------------------------------------------------
// running checks

#[derive(Default)]
struct Acc {
    instances: u64,
    failure_count: u64,
    failures: Vec<Failure>,
    tiers: TierCounts,
}

impl Acc {
    fn fail(&mut self, key: Vec<usize>, inputs: Vec<String>, expected: String, actual: String) {
        self.failure_count += 1;
        self.failures.push(Failure {
            key,
            inputs,
            expected,
            actual,
        });
        // keep memory bounded; the lowest keys survive the final sort anyway
        if self.failures.len() > 4 * FAILURE_CAP {
            self.failures.sort_by(|x, y| x.key.cmp(&y.key));
            self.failures.truncate(FAILURE_CAP);
        }
    }

    fn merge(&mut self, o: Acc) {
        self.instances += o.instances;
        self.failure_count += o.failure_count;
        self.failures.extend(o.failures);
        self.tiers.quotient += o.tiers.quotient;
        self.tiers.numeric += o.tiers.numeric;
        self.tiers.unequal += o.tiers.unequal;
    }
}

/// Run `f` for each first index `0..n`, spread over `workers` threads.
fn fan_out<F>(n: usize, workers: usize, f: F) -> Acc
where
    F: Fn(usize, &mut Acc) + Sync,
{
    let workers = workers.clamp(1, n.max(1));
    let mut total = Acc::default();
    if workers == 1 {
        (0..n).for_each(|a| f(a, &mut total));
    } else {
        let parts: Vec<Acc> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let f = &f;
                    s.spawn(move || {
                        let mut acc = Acc::default();
                        (w..n).step_by(workers).for_each(|a| f(a, &mut acc));
                        acc
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        });
        parts.into_iter().for_each(|p| total.merge(p));
    }
    total.failures.sort_by(|x, y| x.key.cmp(&y.key));
    total.failures.truncate(FAILURE_CAP);
    total
}

fn record(name: CheckName, start: Instant, acc: Acc, with_tiers: bool) -> CheckRecord {
    CheckRecord {
        name,
        status: if acc.failure_count == 0 {
            Status::Pass
        } else {
            Status::Fail
        },
        instances: acc.instances,
        failure_count: acc.failure_count,
        failures: acc.failures,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        tiers: with_tiers.then_some(acc.tiers),
        detail: None,
    }
}

fn check_counts(t: &FusionTable) -> CheckRecord {
    let start = Instant::now();
    let mut acc = Acc {
        instances: 1,
        ..Acc::default()
    };
    let expected = expected_count(t.algebra, t.k);
    if t.n() != expected {
        acc.fail(
            vec![],
            vec![format!("{} k={}", t.algebra, t.k)],
            expected.to_string(),
            t.n().to_string(),
        );
    }
    record(CheckName::Counts, start, acc, false)
}

fn single(x: usize) -> Row {
    vec![(x, 1)]
}

fn check_unit(t: &FusionTable) -> CheckRecord {
    let start = Instant::now();
    let mut acc = Acc::default();
    let u = t.unit;
    for x in 0..t.n() {
        acc.instances += 1;
        for (l, r) in [(u, x), (x, u)] {
            if *t.row(l, r) != single(x) {
                acc.fail(
                    vec![l, r],
                    vec![t.name(l), t.name(r)],
                    t.name(x),
                    t.show(t.row(l, r)),
                );
            }
        }
    }
    record(CheckName::Unit, start, acc, false)
}

fn check_simple_current(t: &FusionTable) -> CheckRecord {
    let Some(j) = t.simple_current else {
        return CheckRecord::skipped(CheckName::SimpleCurrent, "no orbifold simple current");
    };
    let start = Instant::now();
    let mut acc = Acc::default();
    if *t.row(j, j) != single(t.unit) {
        acc.fail(
            vec![j, j],
            vec![t.name(j), t.name(j)],
            t.name(t.unit),
            t.show(t.row(j, j)),
        );
    }
    for x in 0..t.n() {
        acc.instances += 1;
        let r = t.row(j, x);
        let image = match r.as_slice() {
            [(y, 1)] if t.row(x, j) == r => *y,
            _ => {
                acc.fail(
                    vec![j, x],
                    vec![t.name(j), t.name(x)],
                    "a single label on both sides".into(),
                    t.show(r),
                );
                continue;
            }
        };
        if *t.row(j, image) != single(x) {
            acc.fail(
                vec![j, image],
                vec![t.name(j), t.name(image)],
                t.name(x),
                t.show(t.row(j, image)),
            );
        }
    }
    record(CheckName::SimpleCurrent, start, acc, false)
}

fn check_commutativity(t: &FusionTable, workers: usize) -> CheckRecord {
    let start = Instant::now();
    let acc = fan_out(t.n(), workers, |a, acc| {
        for b in 0..t.n() {
            acc.instances += 1;
            if t.row(a, b) != t.row(b, a) {
                acc.fail(
                    vec![a, b],
                    vec![t.name(a), t.name(b)],
                    t.show(t.row(b, a)),
                    t.show(t.row(a, b)),
                );
            }
        }
    });
    record(CheckName::Commutativity, start, acc, false)
}

fn sector(t: &FusionTable, a: usize) -> Sector {
    t.labels[a].sector()
}

fn check_grading(t: &FusionTable, workers: usize) -> CheckRecord {
    let start = Instant::now();
    let acc = fan_out(t.n(), workers, |a, acc| {
        for b in 0..t.n() {
            acc.instances += 1;
            let want = if sector(t, a) == sector(t, b) {
                Sector::Untwisted
            } else {
                Sector::Twisted
            };
            if t.row(a, b).iter().any(|&(c, _)| sector(t, c) != want) {
                acc.fail(
                    vec![a, b],
                    vec![t.name(a), t.name(b)],
                    format!("only {want:?} outputs"),
                    t.show(t.row(a, b)),
                );
            }
        }
    });
    record(CheckName::Grading, start, acc, false)
}

fn check_duality(t: &FusionTable, workers: usize) -> CheckRecord {
    let start = Instant::now();
    let n = t.n();
    let acc = fan_out(n, workers, |a, acc| {
        for b in 0..n {
            for c in 0..n {
                acc.instances += 1;
                let lhs = t.mult(a, b, c);
                let rhs = t.mult(a, t.duals[c], t.duals[b]);
                if lhs != rhs {
                    acc.fail(
                        vec![a, b, c],
                        vec![t.name(a), t.name(b), t.name(c)],
                        format!("N^{} = {lhs}", t.name(c)),
                        format!(
                            "N_{{{},{}'}}^{{{}'}} = {rhs}",
                            t.name(a),
                            t.name(c),
                            t.name(b)
                        ),
                    );
                }
            }
        }
    });
    record(CheckName::Duality, start, acc, false)
}

fn check_associativity(t: &FusionTable, workers: usize) -> CheckRecord {
    let start = Instant::now();
    let n = t.n();
    let acc = fan_out(n, workers, |a, acc| {
        let mut left = vec![0u32; n];
        let mut right = vec![0u32; n];
        for b in 0..n {
            let ab = t.row(a, b);
            for c in 0..n {
                acc.instances += 1;
                left.iter_mut().for_each(|x| *x = 0);
                right.iter_mut().for_each(|x| *x = 0);
                for &(x, m) in ab {
                    for &(y, p) in t.row(x, c) {
                        left[y] += m * p;
                    }
                }
                for &(x, m) in t.row(b, c) {
                    for &(y, p) in t.row(a, x) {
                        right[y] += m * p;
                    }
                }
                if left != right {
                    let show = |v: &[u32]| {
                        t.show(
                            &v.iter()
                                .enumerate()
                                .filter(|(_, m)| **m > 0)
                                .map(|(i, m)| (i, *m))
                                .collect(),
                        )
                    };
                    acc.fail(
                        vec![a, b, c],
                        vec![t.name(a), t.name(b), t.name(c)],
                        format!("(ab)c = {}", show(&left)),
                        format!("a(bc) = {}", show(&right)),
                    );
                }
            }
        }
    });
    record(CheckName::Associativity, start, acc, false)
}

fn check_qdim_mult(t: &FusionTable, workers: usize, digits: usize) -> CheckRecord {
    let start = Instant::now();
    let n = t.n();
    let acc = fan_out(n, workers, |a, acc| {
        let basis = NumericBasis::new(t.k, digits);
        for b in 0..n {
            acc.instances += 1;
            let want = &t.qdims[a] * &t.qdims[b];
            let got = t.row(a, b).iter().fold(QDim::zero(t.k), |s, &(c, m)| {
                &s + &t.qdims[c].scale(crate::rational::Rational::int(m as i64))
            });
            match basis.compare(&want, &got) {
                Tier::Quotient => acc.tiers.quotient += 1,
                Tier::Numeric => acc.tiers.numeric += 1,
                Tier::Unequal => {
                    acc.tiers.unequal += 1;
                    acc.fail(
                        vec![a, b],
                        vec![t.name(a), t.name(b)],
                        want.to_string(),
                        format!("{got} from {}", t.show(t.row(a, b))),
                    );
                }
            }
        }
    });
    record(CheckName::QdimMult, start, acc, true)
}

// ---------------------------------------------------------------------------
// restriction

/// Forget signs and sectors: the affine spin of an orbifold label.
fn affine_spin(l: &Label) -> Option<u32> {
    match l {
        Label::OrbAffine(x) => Some(x.i),
        _ => None,
    }
}

fn restriction_affine_orb(t: &FusionTable, workers: usize) -> CheckRecord {
    let start = Instant::now();
    let n = t.n();
    let k = t.k;
    let acc = fan_out(n, workers, |a, acc| {
        for b in 0..n {
            acc.instances += 1;
            let (Some(i), Some(j)) = (affine_spin(&t.labels[a]), affine_spin(&t.labels[b])) else {
                continue;
            };
            // L̄(i) ⊠ L̄(j) meets L(l) for l in the spin range of i and k−j
            let j = if sector(t, a) == Sector::Twisted && sector(t, b) == Sector::Twisted {
                k.k() - j
            } else {
                j
            };
            let want = fuse_affine(k, AffineLabel { i }, AffineLabel { i: j });
            let got: FusionOutcome<AffineLabel> = t
                .row(a, b)
                .iter()
                .filter_map(|&(c, m)| affine_spin(&t.labels[c]).map(|i| (AffineLabel { i }, m)))
                .collect();
            if got != want {
                acc.fail(
                    vec![a, b],
                    vec![t.name(a), t.name(b)],
                    want.to_string(),
                    got.to_string(),
                );
            }
        }
    });
    record(CheckName::Restriction, start, acc, false)
}

fn orb_para(l: &Label) -> OrbParaLabel {
    match l {
        Label::OrbPara(x) => *x,
        _ => unreachable!("parafermion orbifold table"),
    }
}

/// The `K0` spin `i` and the number of `K0` modules (1 or 2) under an untwisted label.
fn spin_and_width(x: OrbParaLabel) -> (u32, u32) {
    match x {
        OrbParaLabel::TypeI { base, .. } => (base.i(), 1),
        OrbParaLabel::TypeII { base } => (base.i(), 2),
        _ => unreachable!("untwisted label"),
    }
}

/// Twisted levels of `u ⊠ T(j)` after forgetting signs and tildes.
fn twisted_levels(k: Level, u: OrbParaLabel, j: u32) -> BTreeMap<u32, u32> {
    let (i, width) = spin_and_width(u);
    let h = k.half();
    let mut out = BTreeMap::new();
    for l in affine_range(k, i, j) {
        let m = if Some(l) == h { 2 * width } else { width };
        let level = if l > k.twisted_bound() { k.k() - l } else { l };
        *out.entry(level).or_insert(0) += m;
    }
    if Some(j) == h {
        out.values_mut().for_each(|m| *m /= 2);
    }
    out
}

fn restriction_orb_para(t: &FusionTable, workers: usize) -> CheckRecord {
    let start = Instant::now();
    let n = t.n();
    let k = t.k;
    let acc = fan_out(n, workers, |a, acc| {
        let x = orb_para(&t.labels[a]);
        for b in 0..n {
            let y = orb_para(&t.labels[b]);
            let r = t.row(a, b);
            match (x.is_twisted(), y.is_twisted()) {
                (false, false) => {
                    acc.instances += 1;
                    let (px, py) = (restrict_untwisted(k, x), restrict_untwisted(k, y));
                    let mut want = FusionOutcome::new();
                    for (m, p) in px.iter() {
                        for (l, q) in py.iter() {
                            want.extend(&fuse_k0(k, *m, *l).scaled(p * q));
                        }
                    }
                    let mut got = FusionOutcome::new();
                    for &(c, m) in r {
                        got.extend(&restrict_untwisted(k, orb_para(&t.labels[c])).scaled(m));
                    }
                    if got != want {
                        acc.fail(
                            vec![a, b],
                            vec![t.name(a), t.name(b)],
                            want.to_string(),
                            got.to_string(),
                        );
                    }
                }
                (false, true) | (true, false) => {
                    acc.instances += 1;
                    let (u, w) = if y.is_twisted() { (x, y) } else { (y, x) };
                    let j = twisted_level_of(k, w).expect("twisted");
                    let want = twisted_levels(k, u, j);
                    let mut got = BTreeMap::new();
                    for &(c, m) in r {
                        if let Some(l) = twisted_level_of(k, orb_para(&t.labels[c])) {
                            *got.entry(l).or_insert(0) += m;
                        }
                    }
                    if got != want {
                        let show = |v: &BTreeMap<u32, u32>| format!("levels {v:?}");
                        acc.fail(
                            vec![a, b],
                            vec![t.name(a), t.name(b)],
                            show(&want),
                            show(&got),
                        );
                    }
                }
                (true, true) => {}
            }
        }
    });
    record(CheckName::Restriction, start, acc, false)
}

fn check_dispatch(ring: &OrbParaRing, workers: usize) -> CheckRecord {
    let start = Instant::now();
    let labels = ring.labels();
    let k = ring.level();
    let acc = fan_out(labels.len(), workers, |a, acc| {
        for (b, y) in labels.iter().enumerate() {
            acc.instances += 1;
            let x = &labels[a];
            let matches = matching_clauses(k, *x, *y);
            let (used, _) = ring.fuse_with_clause(x, y);
            if matches != [used] {
                let names: Vec<String> = matches.iter().map(|c| c.to_string()).collect();
                acc.fail(
                    vec![a, b],
                    vec![x.to_string(), y.to_string()],
                    format!("exactly {used}"),
                    format!("[{}]", names.join(", ")),
                );
            }
        }
    });
    record(CheckName::DispatchCoverage, start, acc, false)
}

/// Ordered type II pairs whose two product families share a type II output.
pub fn type_ii_collisions(ring: &OrbParaRing) -> usize {
    let ls = ring.labels();
    ls.iter()
        .flat_map(|a| ls.iter().map(move |b| (a, b)))
        .filter(|(a, b)| !ring.family_collisions(a, b).is_empty())
        .count()
}

// ---------------------------------------------------------------------------
// entry points

/// Run the generic checks on a table; dispatch coverage needs a live ring and
/// is skipped here.
pub fn verify_table(
    t: &FusionTable,
    checks: &[CheckName],
    workers: usize,
    opts: &VerifyOptions,
) -> Report {
    run(t, None, checks, workers, opts)
}

fn run(
    t: &FusionTable,
    orb_para_ring: Option<&OrbParaRing>,
    checks: &[CheckName],
    workers: usize,
    opts: &VerifyOptions,
) -> Report {
    let mut records = Vec::new();
    for &c in checks {
        let rec = match c {
            CheckName::Counts => check_counts(t),
            CheckName::Unit => check_unit(t),
            CheckName::SimpleCurrent => check_simple_current(t),
            CheckName::Commutativity => check_commutativity(t, workers),
            CheckName::Associativity => check_associativity(t, workers),
            CheckName::Grading => check_grading(t, workers),
            CheckName::Duality => check_duality(t, workers),
            CheckName::QdimMult => {
                if t.algebra == AlgebraKind::AffineOrb && !opts.affine_qdim_extension {
                    CheckRecord::skipped(c, "affine orbifold qdims need --affine-qdim-extension")
                } else {
                    check_qdim_mult(t, workers, opts.digits)
                }
            }
            CheckName::DispatchCoverage => match orb_para_ring {
                Some(r) => check_dispatch(r, workers),
                None => CheckRecord::skipped(
                    c,
                    "clause dispatch exists only for the live para-orb ring",
                ),
            },
            CheckName::Restriction => match t.algebra {
                AlgebraKind::AffineOrb => restriction_affine_orb(t, workers),
                AlgebraKind::ParaOrb => restriction_orb_para(t, workers),
                _ => CheckRecord::skipped(c, "not an orbifold"),
            },
        };
        records.push(rec);
    }
    Report {
        algebra: t.algebra,
        level: t.k.k(),
        passed: records.iter().all(CheckRecord::passed),
        checks: records,
        notes: Vec::new(),
    }
}

/// Build the ring for `algebra` at level `k` and run `checks` on it.
pub fn verify_ring(
    algebra: AlgebraKind,
    k: u32,
    checks: &[CheckName],
    workers: usize,
    opts: &VerifyOptions,
) -> Result<Report> {
    Level::new(algebra, k as i64)?;
    Ok(match algebra {
        AlgebraKind::Affine => run(
            &FusionTable::from_ring(&AffineRing::new(k)?),
            None,
            checks,
            workers,
            opts,
        ),
        AlgebraKind::AffineOrb => run(
            &FusionTable::from_ring(&OrbAffineRing::new(k)?),
            None,
            checks,
            workers,
            opts,
        ),
        AlgebraKind::Para => run(
            &FusionTable::from_ring(&ParaRing::new(k)?),
            None,
            checks,
            workers,
            opts,
        ),
        AlgebraKind::ParaOrb => {
            let ring = OrbParaRing::with_options(k, opts.orb_para)?;
            let mut report = run(
                &FusionTable::from_ring(&ring),
                Some(&ring),
                checks,
                workers,
                opts,
            );
            let collisions = type_ii_collisions(&ring);
            if collisions > 0 {
                report.notes.push(format!(
                    "{collisions} ordered type II pairs reach a type II module through both product families; those outputs carry multiplicity 2"
                ));
            }
            report
        }
    })
}

/// Table for `algebra` at level `k` with default options.
pub fn table_for(algebra: AlgebraKind, k: u32, opts: &VerifyOptions) -> Result<FusionTable> {
    Ok(match algebra {
        AlgebraKind::Affine => FusionTable::from_ring(&AffineRing::new(k)?),
        AlgebraKind::AffineOrb => FusionTable::from_ring(&OrbAffineRing::new(k)?),
        AlgebraKind::Para => FusionTable::from_ring(&ParaRing::new(k)?),
        AlgebraKind::ParaOrb => {
            FusionTable::from_ring(&OrbParaRing::with_options(k, opts.orb_para)?)
        }
    })
}

/// Apply `mutation` to a fresh table and run associativity and qdim
/// multiplicativity against it. Affine orbifold qdims use the inherited values.
pub fn mutate_and_detect(algebra: AlgebraKind, k: u32, mutation: &TableMutation) -> Result<Report> {
    let opts = VerifyOptions {
        affine_qdim_extension: true,
        ..VerifyOptions::default()
    };
    let mut t = table_for(algebra, k, &opts)?;
    t.apply(mutation)?;
    Ok(verify_table(
        &t,
        &[CheckName::Associativity, CheckName::QdimMult],
        1,
        &opts,
    ))
}
