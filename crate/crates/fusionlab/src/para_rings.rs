//! Fusion for the parafermion algebra `K0 = K(sl2,k)` and its Z2-orbifold `K0^σ`.

use std::fmt;

use serde::Serialize;

use crate::affine_rings::{affine_range, sign};
use crate::catalog::{
    canonicalize_k0, fold_twisted, k0_labels, orb_para_labels, sigma, sigma_stable,
    type_ii_representative, AlgebraKind, FoldConvention, K0Label, Level, OrbParaLabel, Sector,
    Sign,
};
use crate::error::{Error, Result};
use crate::outcome::FusionOutcome;
use crate::qdim::{orb_para_qdim, QDim};
use crate::ring::{FusionRing, Memo};

/// `M^{i,i'} ⊠ M^{j,j'} = Σ_l M^{l, (2i'−i+2j'−j+l)/2}` over the affine range.
pub fn fuse_k0(k: Level, a: K0Label, b: K0Label) -> FusionOutcome<K0Label> {
    let (i, ip, j, jp) = (a.i() as i64, a.j() as i64, b.i() as i64, b.j() as i64);
    affine_range(k, a.i(), b.i())
        .map(|l| {
            let l = l as i64;
            canonicalize_k0(k, l, (2 * ip - i + 2 * jp - j + l) / 2).expect("l in range")
        })
        .collect()
}

/// Which of the two readings of the untwisted ⊠ twisted table to use at level `k/2`.
///
/// `AsPrinted` copies every sign literally. `Consistent` changes three sign
/// assignments that the literal table gets wrong: with them the orbifold ring
/// is commutative, associative and self-dual for every even `k` tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClauseSet {
    #[default]
    Consistent,
    AsPrinted,
}

impl std::str::FromStr for ClauseSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "consistent" => Ok(ClauseSet::Consistent),
            "as-printed" => Ok(ClauseSet::AsPrinted),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct OrbParaOptions {
    pub fold: FoldConvention,
    pub clauses: ClauseSet,
}

/// Named cases of the orbifold fusion table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Clause {
    // untwisted ⊠ untwisted
    VacuumTimesAny,
    RegularPair,
    RegularWithHalf,
    HalfPair,
    TypeIWithTypeII,
    TypeIIPair,
    // untwisted ⊠ twisted
    VacuumOnTwisted,
    RegularOnTwistedOddLevel,
    RegularOnTwisted,
    RegularOnTwistedWithTilde,
    ShiftedRegularOnMiddle,
    ShiftedRegularOnTilde,
    AlignedRegularOnMiddle,
    AlignedRegularOnTilde,
    TypeIIOnTwistedOddLevel,
    TypeIIOnTwisted,
    TypeIIOnTwistedWithTilde,
    OddTypeIIOnMiddle,
    EvenTypeIIOnMiddle,
    HalfOnOddTwisted,
    HalfOnEvenTwisted,
    HalfOnMiddleTwoMod4,
    HalfOnMiddleZeroMod4,
    // twisted ⊠ twisted
    TwistedPairByDuality,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Spin {
    Vacuum,
    Regular(u32),
    Half,
}

fn spin(k: Level, base: K0Label) -> Spin {
    if base == K0Label::vacuum(k) {
        Spin::Vacuum
    } else if k.half() == Some(base.i()) && base.j() == 0 {
        Spin::Half
    } else {
        debug_assert_eq!(2 * base.j(), base.i(), "{base} is not σ-stable");
        Spin::Regular(base.i())
    }
}

/// Orbifold modules contained in the `K0`-module `m`: both halves when σ
/// fixes it, otherwise the single type II module.
fn lift(k: Level, m: K0Label) -> impl Iterator<Item = OrbParaLabel> {
    let v: Vec<OrbParaLabel> = if sigma_stable(k, m) {
        Sign::BOTH
            .into_iter()
            .map(|sign| OrbParaLabel::TypeI { base: m, sign })
            .collect()
    } else {
        vec![OrbParaLabel::TypeII {
            base: type_ii_representative(k, m),
        }]
    };
    v.into_iter()
}

fn stable_at(k: Level, l: u32) -> K0Label {
    canonicalize_k0(k, l as i64, l as i64 / 2).expect("l in range")
}

/// Twisted level and tilde flag of a twisted label.
fn twisted_level(k: Level, t: OrbParaLabel) -> (u32, bool, Sign) {
    match t {
        OrbParaLabel::Twisted { i, sign } => (i, false, sign),
        OrbParaLabel::TwistedTilde { sign } => (k.k() / 2, true, sign),
        _ => unreachable!("not twisted"),
    }
}

/// Whether the level-`k/2` tilde term appears in a product with
/// `j ≠ k/2` (even `k`).
fn tilde_term(k: Level, i: u32, j: u32) -> bool {
    let h = k.k() / 2;
    let parity_hit = match k.k() % 4 {
        2 => (i + j) % 2 == 1,
        _ => (i + j).is_multiple_of(2),
    };
    parity_hit && i + j >= h && h >= i.abs_diff(j)
}

/// Range `|i−h| ≤ l < h`, `i+h+l` even, `i+l ≤ 3h` used at level `k/2`.
fn middle_range(k: Level, i: u32) -> impl Iterator<Item = u32> {
    let h = k.k() / 2;
    (i.abs_diff(h)..h).filter(move |l| (i + h + l).is_multiple_of(2) && i + l <= 3 * h)
}

fn tw(i: u32, sign: Sign) -> OrbParaLabel {
    OrbParaLabel::Twisted { i, sign }
}

fn tilde(sign: Sign) -> OrbParaLabel {
    OrbParaLabel::TwistedTilde { sign }
}

fn both(out: &mut FusionOutcome<OrbParaLabel>, f: impl Fn(Sign) -> OrbParaLabel) {
    for s in Sign::BOTH {
        out.push(f(s));
    }
}

/// Untwisted ⊠ untwisted.
fn fuse_uu(k: Level, a: OrbParaLabel, b: OrbParaLabel) -> (Clause, FusionOutcome<OrbParaLabel>) {
    use OrbParaLabel::*;
    let mut out = FusionOutcome::new();
    let vac = |x: &OrbParaLabel| matches!(x, TypeI { base, .. } if *base == K0Label::vacuum(k));
    if vac(&a) || vac(&b) {
        let (v, x) = if vac(&a) { (a, b) } else { (b, a) };
        let s = v.sign().expect("type I");
        out.push(match x {
            TypeI { base, sign } => TypeI {
                base,
                sign: s * sign,
            },
            other => other,
        });
        return (Clause::VacuumTimesAny, out);
    }
    let clause = match (a, b) {
        (TypeI { base: x, sign: sx }, TypeI { base: y, sign: sy }) => {
            let s = sx * sy;
            match (spin(k, x), spin(k, y)) {
                (Spin::Regular(i), Spin::Regular(j)) => {
                    for l in affine_range(k, i, j) {
                        out.push(TypeI {
                            base: stable_at(k, l),
                            sign: sign(i, j, l, s),
                        });
                    }
                    Clause::RegularPair
                }
                (Spin::Half, Spin::Half) => {
                    let kk = k.k();
                    for l in (0..=kk).filter(|l| (kk + l).is_multiple_of(2)) {
                        out.push(TypeI {
                            base: stable_at(k, kk - l),
                            sign: s,
                        });
                    }
                    Clause::HalfPair
                }
                (Spin::Regular(i), Spin::Half) | (Spin::Half, Spin::Regular(i)) => {
                    let (kk, h) = (k.k() as i64, k.k() / 2);
                    for l in (i.abs_diff(h)..h)
                        .filter(|l| (i + h + l) % 2 == 0 && i + h + l <= 2 * k.k())
                    {
                        let second = (2 * l as i64 - kk) / 4;
                        let m = canonicalize_k0(k, l as i64, second).expect("l in range");
                        lift(k, m).for_each(|x| out.push(x));
                    }
                    out.push(TypeI {
                        base: K0Label::from_half(k),
                        sign: s,
                    });
                    Clause::RegularWithHalf
                }
                _ => unreachable!("vacuum handled above"),
            }
        }
        (TypeI { base: x, .. }, TypeII { base: y })
        | (TypeII { base: y }, TypeI { base: x, .. }) => {
            for (m, n) in fuse_k0(k, x, y).iter() {
                for l in lift(k, *m) {
                    out.add(l, n);
                }
            }
            Clause::TypeIWithTypeII
        }
        (TypeII { base: x }, TypeII { base: y }) => {
            for fam in [y, sigma(k, y)] {
                for (m, n) in fuse_k0(k, x, fam).iter() {
                    for l in lift(k, *m) {
                        out.add(l, n);
                    }
                }
            }
            Clause::TypeIIPair
        }
        _ => unreachable!("twisted input"),
    };
    (clause, out)
}

/// Untwisted `u` ⊠ twisted `t`.
fn fuse_ut(
    k: Level,
    opts: OrbParaOptions,
    u: OrbParaLabel,
    t: OrbParaLabel,
) -> (Clause, FusionOutcome<OrbParaLabel>) {
    let (j, is_tilde, ts) = twisted_level(k, t);
    let mut out = FusionOutcome::new();
    let even = k.is_even();
    let h = k.k() / 2;
    let consistent = opts.clauses == ClauseSet::Consistent;
    // raw W(k,l) for l in a full affine range
    let raw = |l: u32, s: Sign| {
        if even && l == h {
            tw(h, s)
        } else {
            fold_twisted(k, l, s, opts.fold)
        }
    };
    let clause = match u {
        OrbParaLabel::TypeI { base, sign: us } => {
            let s = us * ts;
            match spin(k, base) {
                Spin::Vacuum => {
                    out.push(if is_tilde { tilde(s) } else { tw(j, s) });
                    Clause::VacuumOnTwisted
                }
                Spin::Regular(i) if !even => {
                    for l in affine_range(k, i, j) {
                        out.push(raw(l, sign(i, j, l, s)));
                    }
                    Clause::RegularOnTwistedOddLevel
                }
                Spin::Regular(i) if j != h => {
                    for l in affine_range(k, i, j) {
                        out.push(raw(l, sign(i, j, l, s)));
                    }
                    if tilde_term(k, i, j) {
                        out.push(tilde(sign(i, j, h, -s)));
                        Clause::RegularOnTwistedWithTilde
                    } else {
                        Clause::RegularOnTwisted
                    }
                }
                Spin::Regular(i) => {
                    let sl = if is_tilde && consistent { -s } else { s };
                    for l in middle_range(k, i) {
                        out.push(tw(l, sign(i, h, l, sl)));
                    }
                    let shifted = i % 4 == 2;
                    out.push(if shifted == is_tilde {
                        tw(h, s)
                    } else {
                        tilde(s)
                    });
                    match (shifted, is_tilde) {
                        (true, false) => Clause::ShiftedRegularOnMiddle,
                        (true, true) => Clause::ShiftedRegularOnTilde,
                        (false, false) => Clause::AlignedRegularOnMiddle,
                        (false, true) => Clause::AlignedRegularOnTilde,
                    }
                }
                Spin::Half if j != h => {
                    for l in (h.abs_diff(j)..h)
                        .filter(|l| (h + j + l).is_multiple_of(2) && j + l <= 3 * h)
                    {
                        both(&mut out, |x| tw(l, x));
                    }
                    if j % 2 == 0 {
                        out.push(tw(h, s));
                        out.push(tilde(s));
                        Clause::HalfOnEvenTwisted
                    } else {
                        Clause::HalfOnOddTwisted
                    }
                }
                Spin::Half => {
                    for l in (0..h).filter(|l| l % 2 == 0) {
                        let sl = if consistent { s } else { sign(h, h, l, s) };
                        out.push(tw(l, sl));
                    }
                    if k.k().is_multiple_of(4) {
                        out.push(match (is_tilde, consistent) {
                            (false, _) => tw(h, s),
                            (true, true) => tilde(-s),
                            (true, false) => tilde(s),
                        });
                        Clause::HalfOnMiddleZeroMod4
                    } else {
                        Clause::HalfOnMiddleTwoMod4
                    }
                }
            }
        }
        OrbParaLabel::TypeII { base } => {
            let i = base.i();
            if !even {
                for l in affine_range(k, i, j) {
                    both(&mut out, |x| raw(l, x));
                }
                Clause::TypeIIOnTwistedOddLevel
            } else if j != h {
                for l in affine_range(k, i, j) {
                    both(&mut out, |x| raw(l, x));
                }
                if tilde_term(k, i, j) {
                    both(&mut out, tilde);
                    Clause::TypeIIOnTwistedWithTilde
                } else {
                    Clause::TypeIIOnTwisted
                }
            } else {
                for l in middle_range(k, i) {
                    both(&mut out, |x| tw(l, x));
                }
                if i % 2 == 0 {
                    let middle = (base.j() % 2 == 0) != is_tilde;
                    if middle {
                        both(&mut out, |x| tw(h, x));
                    } else {
                        both(&mut out, tilde);
                    }
                    Clause::EvenTypeIIOnMiddle
                } else {
                    Clause::OddTypeIIOnMiddle
                }
            }
        }
        _ => unreachable!("twisted left factor"),
    };
    (clause, out)
}

impl K0Label {
    /// `M^{k/2,0}` for even `k`.
    fn from_half(k: Level) -> K0Label {
        canonicalize_k0(k, k.k() as i64 / 2, 0).expect("even level")
    }
}

/// Independent evaluation of the clause guards; a well formed table matches
/// exactly one clause for every ordered pair.
pub fn matching_clauses(k: Level, a: OrbParaLabel, b: OrbParaLabel) -> Vec<Clause> {
    use OrbParaLabel::*;
    let kk = k.k();
    let even = kk.is_multiple_of(2);
    let h = kk / 2;
    let is_vac = |x: &OrbParaLabel| matches!(x, TypeI { base, .. } if *base == K0Label::vacuum(k));
    let is_half = |x: &OrbParaLabel| matches!(x, TypeI { base, .. } if even && base.i() == h && base.j() == 0);
    let is_reg = |x: &OrbParaLabel| matches!(x, TypeI { base, .. } if base.i() == 2 * base.j() && !is_vac(x) && !is_half(x));
    let is_ii = |x: &OrbParaLabel| matches!(x, TypeII { .. });
    let twa = a.is_twisted();
    let twb = b.is_twisted();
    let mut g: Vec<(Clause, bool)> = Vec::new();
    let uu = !twa && !twb;
    g.push((Clause::VacuumTimesAny, uu && (is_vac(&a) || is_vac(&b))));
    g.push((Clause::RegularPair, uu && is_reg(&a) && is_reg(&b)));
    g.push((
        Clause::RegularWithHalf,
        uu && ((is_reg(&a) && is_half(&b)) || (is_half(&a) && is_reg(&b))),
    ));
    g.push((Clause::HalfPair, uu && is_half(&a) && is_half(&b)));
    g.push((
        Clause::TypeIWithTypeII,
        uu && ((is_ii(&a) && !is_ii(&b) && !is_vac(&b))
            || (is_ii(&b) && !is_ii(&a) && !is_vac(&a))),
    ));
    g.push((Clause::TypeIIPair, uu && is_ii(&a) && is_ii(&b)));
    g.push((Clause::TwistedPairByDuality, twa && twb));

    let ut = twa != twb;
    let (u, t) = if twb { (a, b) } else { (b, a) };
    let (j, t_tilde) = match t {
        Twisted { i, .. } => (i, false),
        TwistedTilde { .. } => (h, true),
        _ => (0, false),
    };
    let ui = match u {
        TypeI { base, .. } | TypeII { base } => base.i(),
        _ => 0,
    };
    let mid = even && j == h;
    let hit = even && tilde_term(k, ui, j);
    let reg = ut && is_reg(&u);
    let ii = ut && is_ii(&u);
    let half = ut && is_half(&u);
    g.push((Clause::VacuumOnTwisted, ut && is_vac(&u)));
    g.push((Clause::RegularOnTwistedOddLevel, reg && !even));
    g.push((Clause::RegularOnTwisted, reg && even && !mid && !hit));
    g.push((
        Clause::RegularOnTwistedWithTilde,
        reg && even && !mid && hit,
    ));
    g.push((
        Clause::ShiftedRegularOnMiddle,
        reg && mid && ui % 4 == 2 && !t_tilde,
    ));
    g.push((
        Clause::ShiftedRegularOnTilde,
        reg && mid && ui % 4 == 2 && t_tilde,
    ));
    g.push((
        Clause::AlignedRegularOnMiddle,
        reg && mid && ui % 4 == 0 && !t_tilde,
    ));
    g.push((
        Clause::AlignedRegularOnTilde,
        reg && mid && ui % 4 == 0 && t_tilde,
    ));
    g.push((Clause::TypeIIOnTwistedOddLevel, ii && !even));
    g.push((Clause::TypeIIOnTwisted, ii && even && !mid && !hit));
    g.push((Clause::TypeIIOnTwistedWithTilde, ii && even && !mid && hit));
    g.push((Clause::OddTypeIIOnMiddle, ii && mid && ui % 2 == 1));
    g.push((Clause::EvenTypeIIOnMiddle, ii && mid && ui % 2 == 0));
    g.push((Clause::HalfOnOddTwisted, half && !mid && j % 2 == 1));
    g.push((Clause::HalfOnEvenTwisted, half && !mid && j % 2 == 0));
    g.push((Clause::HalfOnMiddleTwoMod4, half && mid && kk % 4 == 2));
    g.push((
        Clause::HalfOnMiddleZeroMod4,
        half && mid && kk.is_multiple_of(4),
    ));
    g.into_iter().filter(|(_, m)| *m).map(|(c, _)| c).collect()
}

/// `K0` fusion ring.
#[derive(Debug)]
pub struct ParaRing {
    k: Level,
    labels: Vec<K0Label>,
}

impl ParaRing {
    pub fn new(k: u32) -> Result<Self> {
        let k = Level::new(AlgebraKind::Para, k as i64)?;
        Ok(ParaRing {
            k,
            labels: k0_labels(k),
        })
    }
}

impl FusionRing for ParaRing {
    type Label = K0Label;

    fn algebra(&self) -> AlgebraKind {
        AlgebraKind::Para
    }
    fn level(&self) -> Level {
        self.k
    }
    fn labels(&self) -> &[K0Label] {
        &self.labels
    }
    fn fuse(&self, a: &K0Label, b: &K0Label) -> FusionOutcome<K0Label> {
        fuse_k0(self.k, *a, *b)
    }
    fn unit(&self) -> K0Label {
        K0Label::vacuum(self.k)
    }
    fn simple_current(&self) -> Option<K0Label> {
        None
    }
    fn dual(&self, a: &K0Label) -> K0Label {
        sigma(self.k, *a)
    }
    fn sector(&self, _: &K0Label) -> Sector {
        Sector::Untwisted
    }
    fn qdim(&self, a: &K0Label) -> QDim {
        QDim::qint(self.k, a.i() as i64 + 1)
    }
}

/// `K0^σ` fusion ring; twisted ⊠ twisted products are memoized.
#[derive(Debug)]
pub struct OrbParaRing {
    k: Level,
    opts: OrbParaOptions,
    labels: Vec<OrbParaLabel>,
    memo: Memo<OrbParaLabel>,
}

impl OrbParaRing {
    pub fn new(k: u32) -> Result<Self> {
        Self::with_options(k, OrbParaOptions::default())
    }

    pub fn with_options(k: u32, opts: OrbParaOptions) -> Result<Self> {
        let k = Level::new(AlgebraKind::ParaOrb, k as i64)?;
        Ok(OrbParaRing {
            k,
            opts,
            labels: orb_para_labels(k),
            memo: Memo::default(),
        })
    }

    pub fn options(&self) -> OrbParaOptions {
        self.opts
    }

    /// Product together with the clause that produced it.
    pub fn fuse_with_clause(
        &self,
        a: &OrbParaLabel,
        b: &OrbParaLabel,
    ) -> (Clause, FusionOutcome<OrbParaLabel>) {
        match (a.is_twisted(), b.is_twisted()) {
            (false, false) => fuse_uu(self.k, *a, *b),
            (false, true) => fuse_ut(self.k, self.opts, *a, *b),
            (true, false) => fuse_ut(self.k, self.opts, *b, *a),
            (true, true) => (
                Clause::TwistedPairByDuality,
                self.memo
                    .get_or_insert_with((*a, *b), || self.fuse_twisted_pair(*a, *b)),
            ),
        }
    }

    /// `N_{T1,T2}^U` is the multiplicity of `T2` in `U ⊠ T1`; every module is self-dual.
    fn fuse_twisted_pair(&self, t1: OrbParaLabel, t2: OrbParaLabel) -> FusionOutcome<OrbParaLabel> {
        self.labels
            .iter()
            .filter(|u| !u.is_twisted())
            .map(|u| (*u, fuse_ut(self.k, self.opts, *u, t1).1.mult(&t2)))
            .collect()
    }

    /// Type II labels reached by both families in a type II ⊠ type II product.
    pub fn family_collisions(&self, a: &OrbParaLabel, b: &OrbParaLabel) -> Vec<OrbParaLabel> {
        let (OrbParaLabel::TypeII { base: x }, OrbParaLabel::TypeII { base: y }) = (a, b) else {
            return Vec::new();
        };
        let fam = |z: K0Label| -> Vec<OrbParaLabel> {
            fuse_k0(self.k, *x, z)
                .iter()
                .flat_map(|(m, _)| lift(self.k, *m))
                .filter(|l| matches!(l, OrbParaLabel::TypeII { .. }))
                .collect()
        };
        let (f1, f2) = (fam(*y), fam(sigma(self.k, *y)));
        let mut v: Vec<_> = f1.into_iter().filter(|l| f2.contains(l)).collect();
        v.sort();
        v.dedup();
        v
    }
}

impl FusionRing for OrbParaRing {
    type Label = OrbParaLabel;

    fn algebra(&self) -> AlgebraKind {
        AlgebraKind::ParaOrb
    }
    fn level(&self) -> Level {
        self.k
    }
    fn labels(&self) -> &[OrbParaLabel] {
        &self.labels
    }
    fn fuse(&self, a: &OrbParaLabel, b: &OrbParaLabel) -> FusionOutcome<OrbParaLabel> {
        self.fuse_with_clause(a, b).1
    }
    fn unit(&self) -> OrbParaLabel {
        OrbParaLabel::TypeI {
            base: K0Label::vacuum(self.k),
            sign: Sign::Plus,
        }
    }
    fn simple_current(&self) -> Option<OrbParaLabel> {
        Some(OrbParaLabel::TypeI {
            base: K0Label::vacuum(self.k),
            sign: Sign::Minus,
        })
    }
    fn dual(&self, a: &OrbParaLabel) -> OrbParaLabel {
        *a
    }
    fn sector(&self, a: &OrbParaLabel) -> Sector {
        a.sector()
    }
    fn qdim(&self, a: &OrbParaLabel) -> QDim {
        orb_para_qdim(self.k, *a)
    }
}

/// Restriction of an untwisted orbifold module to `K0`: `(M)^± ↦ M`, `M ↦ M + σM`.
pub fn restrict_untwisted(k: Level, x: OrbParaLabel) -> FusionOutcome<K0Label> {
    match x {
        OrbParaLabel::TypeI { base, .. } => FusionOutcome::single(base),
        OrbParaLabel::TypeII { base } => [base, sigma(k, base)].into_iter().collect(),
        _ => FusionOutcome::new(),
    }
}

/// Twisted level reached after forgetting signs and the tilde distinction.
pub fn twisted_level_of(k: Level, x: OrbParaLabel) -> Option<u32> {
    match x {
        OrbParaLabel::Twisted { i, .. } => Some(i),
        OrbParaLabel::TwistedTilde { .. } => Some(k.k() / 2),
        _ => None,
    }
}
