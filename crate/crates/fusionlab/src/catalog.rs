//! Levels, module labels, enumeration, canonical forms, contragredients and
//! conformal weights for the four algebras.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The four vertex operator algebras handled by the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    /// Affine `L(k,0)` for sl2.
    Affine,
    /// Z2-orbifold `L(k,0)^σ`.
    AffineOrb,
    /// Parafermion algebra `K(sl2,k)`.
    Para,
    /// Z2-orbifold `K(sl2,k)^σ`.
    ParaOrb,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 4] = [
        AlgebraKind::Affine,
        AlgebraKind::AffineOrb,
        AlgebraKind::Para,
        AlgebraKind::ParaOrb,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Affine => "affine",
            AlgebraKind::AffineOrb => "affine-orb",
            AlgebraKind::Para => "para",
            AlgebraKind::ParaOrb => "para-orb",
        }
    }

    /// Smallest admissible level.
    pub fn min_level(self) -> u32 {
        match self {
            AlgebraKind::ParaOrb => 3,
            _ => 1,
        }
    }

    pub fn is_orbifold(self) -> bool {
        matches!(self, AlgebraKind::AffineOrb | AlgebraKind::ParaOrb)
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgebraKind::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownAlgebra(s.to_string()))
    }
}

/// The level `k`, a positive integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Level(u32);

impl Level {
    /// A level valid for `algebra`.
    pub fn new(algebra: AlgebraKind, k: i64) -> Result<Level> {
        if k < algebra.min_level() as i64 || k > u32::MAX as i64 / 8 {
            return Err(Error::InvalidLevel {
                algebra,
                k,
                min: algebra.min_level(),
            });
        }
        Ok(Level(k as u32))
    }

    pub fn k(self) -> u32 {
        self.0
    }

    pub fn is_even(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// `k/2` when `k` is even.
    pub fn half(self) -> Option<u32> {
        self.is_even().then_some(self.0 / 2)
    }

    /// Largest twisted index kept after folding `l ↦ k−l`.
    pub fn twisted_bound(self) -> u32 {
        if self.is_even() {
            self.0 / 2
        } else {
            (self.0 - 1) / 2
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A ± decoration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    fn parse(s: &str) -> Option<Sign> {
        match s {
            "+" => Some(Sign::Plus),
            "-" => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, o: Sign) -> Sign {
        if self == o {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Untwisted or twisted sector of an orbifold module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Sector {
    Untwisted,
    Twisted,
}

/// How the ± decoration travels when a twisted index `l > ⌊k/2⌋` is folded to `k−l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FoldConvention {
    #[default]
    Preserve,
    Flip,
}

impl FromStr for FoldConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "preserve" => Ok(FoldConvention::Preserve),
            "flip" => Ok(FoldConvention::Flip),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

impl FoldConvention {
    pub fn apply(self, s: Sign) -> Sign {
        match self {
            FoldConvention::Preserve => s,
            FoldConvention::Flip => -s,
        }
    }
}

/// `L(k,i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineLabel {
    pub i: u32,
}

/// `L(k,i)^±` (untwisted) or `L̄(k,i)^±` (twisted).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbAffineLabel {
    pub sector: Sector,
    pub i: u32,
    pub sign: Sign,
}

impl OrbAffineLabel {
    pub fn untwisted(i: u32, sign: Sign) -> Self {
        OrbAffineLabel {
            sector: Sector::Untwisted,
            i,
            sign,
        }
    }

    pub fn twisted(i: u32, sign: Sign) -> Self {
        OrbAffineLabel {
            sector: Sector::Twisted,
            i,
            sign,
        }
    }
}

/// Canonical parafermion label `M^{i,j}` with `1 ≤ i ≤ k`, `0 ≤ j ≤ i−1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct K0Label {
    i: u32,
    j: u32,
}

impl K0Label {
    pub fn i(self) -> u32 {
        self.i
    }

    pub fn j(self) -> u32 {
        self.j
    }

    /// The vacuum `M^{k,0}`.
    pub fn vacuum(k: Level) -> K0Label {
        K0Label { i: k.k(), j: 0 }
    }
}

/// Irreducible module of the parafermion orbifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbParaLabel {
    /// `(M^{i,j})^±` over a σ-stable base.
    TypeI { base: K0Label, sign: Sign },
    /// `M^{i,j}` over a base that σ moves.
    TypeII { base: K0Label },
    /// `W(k,i)^±`.
    Twisted { i: u32, sign: Sign },
    /// `W̃(k,k/2)^±`, even `k` only.
    TwistedTilde { sign: Sign },
}

impl OrbParaLabel {
    fn key(&self) -> (Sector, u32, u32, u8, Option<Sign>) {
        match *self {
            OrbParaLabel::TypeI { base, sign } => {
                (Sector::Untwisted, base.i, base.j, 0, Some(sign))
            }
            OrbParaLabel::TypeII { base } => (Sector::Untwisted, base.i, base.j, 0, None),
            OrbParaLabel::Twisted { i, sign } => (Sector::Twisted, i, 0, 0, Some(sign)),
            OrbParaLabel::TwistedTilde { sign } => (Sector::Twisted, u32::MAX, 0, 1, Some(sign)),
        }
    }

    pub fn sector(&self) -> Sector {
        self.key().0
    }

    pub fn is_twisted(&self) -> bool {
        self.sector() == Sector::Twisted
    }

    pub fn sign(&self) -> Option<Sign> {
        self.key().4
    }
}

impl PartialOrd for OrbParaLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrbParaLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

/// Label of any of the four algebras, printed and parsed with the shared grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Affine(AffineLabel),
    OrbAffine(OrbAffineLabel),
    Para(K0Label),
    OrbPara(OrbParaLabel),
}

impl Label {
    pub fn algebra(&self) -> AlgebraKind {
        match self {
            Label::Affine(_) => AlgebraKind::Affine,
            Label::OrbAffine(_) => AlgebraKind::AffineOrb,
            Label::Para(_) => AlgebraKind::Para,
            Label::OrbPara(_) => AlgebraKind::ParaOrb,
        }
    }

    pub fn sector(&self) -> Sector {
        match self {
            Label::OrbAffine(a) => a.sector,
            Label::OrbPara(p) => p.sector(),
            _ => Sector::Untwisted,
        }
    }

    /// The same module with the opposite ± decoration, if it carries one.
    pub fn flipped(&self) -> Option<Label> {
        match *self {
            Label::OrbAffine(x) => Some(Label::OrbAffine(OrbAffineLabel { sign: -x.sign, ..x })),
            Label::OrbPara(OrbParaLabel::TypeI { base, sign }) => {
                Some(Label::OrbPara(OrbParaLabel::TypeI { base, sign: -sign }))
            }
            Label::OrbPara(OrbParaLabel::Twisted { i, sign }) => {
                Some(Label::OrbPara(OrbParaLabel::Twisted { i, sign: -sign }))
            }
            Label::OrbPara(OrbParaLabel::TwistedTilde { sign }) => {
                Some(Label::OrbPara(OrbParaLabel::TwistedTilde { sign: -sign }))
            }
            _ => None,
        }
    }

    /// Short description of the label family, used in table exports.
    pub fn kind(&self) -> &'static str {
        match self {
            Label::Affine(_) => "affine",
            Label::OrbAffine(x) if x.sector == Sector::Untwisted => "untwisted",
            Label::OrbAffine(_) => "twisted",
            Label::Para(_) => "parafermion",
            Label::OrbPara(OrbParaLabel::TypeI { .. }) => "type-I",
            Label::OrbPara(OrbParaLabel::TypeII { .. }) => "type-II",
            Label::OrbPara(OrbParaLabel::Twisted { .. }) => "twisted",
            Label::OrbPara(OrbParaLabel::TwistedTilde { .. }) => "twisted-tilde",
        }
    }
}

impl fmt::Display for AffineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A:{}", self.i)
    }
}

impl fmt::Display for OrbAffineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.sector {
            Sector::Untwisted => "AU",
            Sector::Twisted => "AT",
        };
        write!(f, "{tag}:{}:{}", self.i, self.sign)
    }
}

impl fmt::Display for K0Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P:{},{}", self.i, self.j)
    }
}

impl fmt::Display for OrbParaLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbParaLabel::TypeI { base, sign } => write!(f, "PI:{},{}:{sign}", base.i, base.j),
            OrbParaLabel::TypeII { base } => write!(f, "PII:{},{}", base.i, base.j),
            OrbParaLabel::Twisted { i, sign } => write!(f, "PT:{i}:{sign}"),
            OrbParaLabel::TwistedTilde { sign } => write!(f, "PTt:{sign}"),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Affine(x) => x.fmt(f),
            Label::OrbAffine(x) => x.fmt(f),
            Label::Para(x) => x.fmt(f),
            Label::OrbPara(x) => x.fmt(f),
        }
    }
}

impl From<AffineLabel> for Label {
    fn from(x: AffineLabel) -> Self {
        Label::Affine(x)
    }
}

impl From<OrbAffineLabel> for Label {
    fn from(x: OrbAffineLabel) -> Self {
        Label::OrbAffine(x)
    }
}

impl From<K0Label> for Label {
    fn from(x: K0Label) -> Self {
        Label::Para(x)
    }
}

impl From<OrbParaLabel> for Label {
    fn from(x: OrbParaLabel) -> Self {
        Label::OrbPara(x)
    }
}

// ---------------------------------------------------------------------------
// parafermion labels

/// Canonical representative of `M^{i,j}` under `M^{i,j} ≅ M^{k−i,k−i+j}`.
///
/// `j` may be any integer; it is reduced mod `k` first.
pub fn canonicalize_k0(k: Level, i: i64, j: i64) -> Result<K0Label> {
    let kk = k.k() as i64;
    if !(0..=kk).contains(&i) {
        return Err(Error::OutOfRange {
            label: format!("M^{{{i},{j}}}"),
            k: k.k(),
        });
    }
    let j = j.rem_euclid(kk);
    let (i, j) = if i >= 1 && j < i {
        (i, j)
    } else {
        (kk - i, (kk - i + j).rem_euclid(kk))
    };
    debug_assert!(i >= 1 && j < i);
    Ok(K0Label {
        i: i as u32,
        j: j as u32,
    })
}

/// The σ-image `M^{i,i−j}` in canonical form.
pub fn sigma(k: Level, m: K0Label) -> K0Label {
    canonicalize_k0(k, m.i as i64, m.i as i64 - m.j as i64).expect("index in range")
}

/// True when σ fixes the isomorphism class of `m`.
pub fn sigma_stable(k: Level, m: K0Label) -> bool {
    sigma(k, m) == m
}

/// Membership in the list of type II representatives.
fn in_type_ii_list(k: Level, m: K0Label) -> bool {
    let (i, j) = (m.i, m.j);
    if j == 0 {
        let top = if k.is_even() {
            (k.k() - 2) / 2
        } else {
            (k.k() - 1) / 2
        };
        return (1..=top).contains(&i);
    }
    if i < 3 {
        return false;
    }
    if i % 2 == 0 {
        j < i / 2
    } else {
        j <= (i - 1) / 2
    }
}

/// Representative used for the type II module containing `m` (which must not be σ-stable).
pub fn type_ii_representative(k: Level, m: K0Label) -> K0Label {
    let s = sigma(k, m);
    match (in_type_ii_list(k, m), in_type_ii_list(k, s)) {
        (true, _) => m,
        (false, true) => s,
        _ => unreachable!("{m} at level {k} has no type II representative"),
    }
}

/// All canonical parafermion labels, ordered by `(i, j)`.
pub fn k0_labels(k: Level) -> Vec<K0Label> {
    (1..=k.k())
        .flat_map(|i| (0..i).map(move |j| K0Label { i, j }))
        .collect()
}

// ---------------------------------------------------------------------------
// enumeration

/// Complete irredundant list of labels, in canonical order.
pub fn enumerate(algebra: AlgebraKind, k: Level) -> Result<Vec<Label>> {
    Level::new(algebra, k.k() as i64)?;
    Ok(match algebra {
        AlgebraKind::Affine => affine_labels(k).into_iter().map(Label::from).collect(),
        AlgebraKind::AffineOrb => orb_affine_labels(k).into_iter().map(Label::from).collect(),
        AlgebraKind::Para => k0_labels(k).into_iter().map(Label::from).collect(),
        AlgebraKind::ParaOrb => orb_para_labels(k).into_iter().map(Label::from).collect(),
    })
}

pub fn affine_labels(k: Level) -> Vec<AffineLabel> {
    (0..=k.k()).map(|i| AffineLabel { i }).collect()
}

pub fn orb_affine_labels(k: Level) -> Vec<OrbAffineLabel> {
    let mut v = Vec::with_capacity(4 * (k.k() as usize + 1));
    for sector in [Sector::Untwisted, Sector::Twisted] {
        for i in 0..=k.k() {
            for sign in Sign::BOTH {
                v.push(OrbAffineLabel { sector, i, sign });
            }
        }
    }
    v
}

pub fn orb_para_labels(k: Level) -> Vec<OrbParaLabel> {
    let mut v = Vec::new();
    for m in k0_labels(k) {
        if sigma_stable(k, m) {
            for sign in Sign::BOTH {
                v.push(OrbParaLabel::TypeI { base: m, sign });
            }
        } else if in_type_ii_list(k, m) {
            v.push(OrbParaLabel::TypeII { base: m });
        }
    }
    for i in 0..=k.twisted_bound() {
        for sign in Sign::BOTH {
            v.push(OrbParaLabel::Twisted { i, sign });
        }
    }
    if k.is_even() {
        for sign in Sign::BOTH {
            v.push(OrbParaLabel::TwistedTilde { sign });
        }
    }
    v.sort();
    v
}

/// Closed-form label counts.
pub fn expected_count(algebra: AlgebraKind, k: Level) -> usize {
    let k = k.k() as usize;
    match algebra {
        AlgebraKind::Affine => k + 1,
        AlgebraKind::AffineOrb => 4 * (k + 1),
        AlgebraKind::Para => k * (k + 1) / 2,
        AlgebraKind::ParaOrb if k % 2 == 1 => (k + 1) * (k + 7) / 4,
        AlgebraKind::ParaOrb => (k * k + 8 * k + 28) / 4,
    }
}

// ---------------------------------------------------------------------------
// raw labels

/// An orbifold parafermion label before canonicalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RawOrbParaLabel {
    Untwisted { i: i64, j: i64, sign: Option<Sign> },
    Twisted { l: i64, sign: Option<Sign> },
    TwistedTilde { sign: Option<Sign> },
}

/// `W(k,l)^s` with `l` folded into `0..=⌊k/2⌋`.
pub fn fold_twisted(k: Level, l: u32, s: Sign, fold: FoldConvention) -> OrbParaLabel {
    if l > k.twisted_bound() {
        OrbParaLabel::Twisted {
            i: k.k() - l,
            sign: fold.apply(s),
        }
    } else {
        OrbParaLabel::Twisted { i: l, sign: s }
    }
}

pub fn canonicalize_orb_para(
    k: Level,
    raw: RawOrbParaLabel,
    fold: FoldConvention,
) -> Result<OrbParaLabel> {
    match raw {
        RawOrbParaLabel::Untwisted { i, j, sign } => {
            let m = canonicalize_k0(k, i, j)?;
            match (sigma_stable(k, m), sign) {
                (true, Some(sign)) => Ok(OrbParaLabel::TypeI { base: m, sign }),
                (false, None) => Ok(OrbParaLabel::TypeII {
                    base: type_ii_representative(k, m),
                }),
                (true, None) => Err(Error::SignMismatch(format!(
                    "type I module M^{{{i},{j}}} needs a sign"
                ))),
                (false, Some(_)) => Err(Error::SignMismatch(format!(
                    "type II module M^{{{i},{j}}} takes no sign"
                ))),
            }
        }
        RawOrbParaLabel::Twisted { l, sign } => {
            let sign = sign.ok_or_else(|| {
                Error::SignMismatch(format!("twisted module W({k},{l}) needs a sign"))
            })?;
            if !(0..=k.k() as i64).contains(&l) {
                return Err(Error::OutOfRange {
                    label: format!("W({k},{l})"),
                    k: k.k(),
                });
            }
            Ok(fold_twisted(k, l as u32, sign, fold))
        }
        RawOrbParaLabel::TwistedTilde { sign } => {
            let sign = sign
                .ok_or_else(|| Error::SignMismatch("twisted tilde module needs a sign".into()))?;
            if !k.is_even() {
                return Err(Error::OutOfRange {
                    label: "W~".into(),
                    k: k.k(),
                });
            }
            Ok(OrbParaLabel::TwistedTilde { sign })
        }
    }
}

// ---------------------------------------------------------------------------
// grammar

fn parse_uint(s: &str, whole: &str) -> Result<i64> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| Error::Parse(whole.to_string()))
}

fn parse_pair(s: &str, whole: &str) -> Result<(i64, i64)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse(whole.to_string()))?;
    Ok((parse_uint(a, whole)?, parse_uint(b, whole)?))
}

fn parse_sign(s: &str, whole: &str) -> Result<Sign> {
    Sign::parse(s.trim()).ok_or_else(|| Error::Parse(whole.to_string()))
}

/// Parse a label of the shared grammar, validate it against `algebra` and
/// level `k`, and return its canonical form.
pub fn parse_label(algebra: AlgebraKind, k: Level, text: &str) -> Result<Label> {
    let text = text.trim();
    let (tag, rest) = text
        .split_once(':')
        .ok_or_else(|| Error::Parse(text.to_string()))?;
    let parts: Vec<&str> = rest.split(':').collect();
    let wrong = || Error::WrongAlgebra {
        label: text.to_string(),
        algebra,
    };
    let range = |ok: bool| {
        if ok {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                label: text.to_string(),
                k: k.k(),
            })
        }
    };
    let kk = k.k() as i64;
    let label = match (tag, parts.as_slice()) {
        ("A", [i]) => {
            if algebra != AlgebraKind::Affine {
                return Err(wrong());
            }
            let i = parse_uint(i, text)?;
            range((0..=kk).contains(&i))?;
            Label::Affine(AffineLabel { i: i as u32 })
        }
        ("AU" | "AT", [i, s]) => {
            if algebra != AlgebraKind::AffineOrb {
                return Err(wrong());
            }
            let i = parse_uint(i, text)?;
            let sign = parse_sign(s, text)?;
            range((0..=kk).contains(&i))?;
            let sector = if tag == "AU" {
                Sector::Untwisted
            } else {
                Sector::Twisted
            };
            Label::OrbAffine(OrbAffineLabel {
                sector,
                i: i as u32,
                sign,
            })
        }
        ("P", [p]) => {
            if algebra != AlgebraKind::Para {
                return Err(wrong());
            }
            let (i, j) = parse_pair(p, text)?;
            Label::Para(canonicalize_k0(k, i, j)?)
        }
        ("PI", [p, _]) | ("PII", [p]) if algebra == AlgebraKind::ParaOrb => {
            let (i, j) = parse_pair(p, text)?;
            let sign = match parts.get(1) {
                Some(s) => Some(parse_sign(s, text)?),
                None => None,
            };
            let l = canonicalize_orb_para(
                k,
                RawOrbParaLabel::Untwisted { i, j, sign },
                FoldConvention::Preserve,
            )?;
            let type_i = matches!(l, OrbParaLabel::TypeI { .. });
            if type_i != (tag == "PI") {
                return Err(Error::SignMismatch(text.to_string()));
            }
            Label::OrbPara(l)
        }
        ("PT", [l, s]) if algebra == AlgebraKind::ParaOrb => {
            let l = parse_uint(l, text)?;
            let sign = parse_sign(s, text)?;
            Label::OrbPara(canonicalize_orb_para(
                k,
                RawOrbParaLabel::Twisted {
                    l,
                    sign: Some(sign),
                },
                FoldConvention::Preserve,
            )?)
        }
        ("PTt", [s]) if algebra == AlgebraKind::ParaOrb => {
            let sign = parse_sign(s, text)?;
            Label::OrbPara(canonicalize_orb_para(
                k,
                RawOrbParaLabel::TwistedTilde { sign: Some(sign) },
                FoldConvention::Preserve,
            )?)
        }
        ("PI" | "PII" | "PT" | "PTt", _) if algebra != AlgebraKind::ParaOrb => return Err(wrong()),
        _ => return Err(Error::Parse(text.to_string())),
    };
    Ok(label)
}

// ---------------------------------------------------------------------------
// contragredients

/// Contragredient module.
pub fn contragredient(k: Level, x: Label) -> Label {
    match x {
        Label::OrbAffine(OrbAffineLabel {
            sector: Sector::Untwisted,
            i,
            sign,
        }) => {
            let sign = if i % 2 == 1 { -sign } else { sign };
            Label::OrbAffine(OrbAffineLabel::untwisted(i, sign))
        }
        Label::OrbAffine(OrbAffineLabel {
            sector: Sector::Twisted,
            i,
            sign,
        }) => Label::OrbAffine(OrbAffineLabel::twisted(k.k() - i, sign)),
        // the vacuum occurs in M^{i,j} ⊠ M^{i,i−j}
        Label::Para(m) => Label::Para(sigma(k, m)),
        other => other,
    }
}

// ---------------------------------------------------------------------------
// weights

/// Lowest weight of the parafermion module `M^{i,j}`.
pub fn para_weight(k: Level, m: K0Label) -> Rational {
    let k = k.k() as i64;
    let (i, j) = (m.i as i64, m.j as i64);
    let d = i - 2 * j;
    Rational::new(k * d - d * d + 2 * k * j * (i - j + 1), 2 * k * (k + 2))
}

/// Lowest weight `i(i+2)/4(k+2)` of `L(k,i)`.
pub fn affine_weight(k: Level, i: u32) -> Rational {
    let (k, i) = (k.k() as i64, i as i64);
    Rational::new(i * (i + 2), 4 * (k + 2))
}

/// Lowest weight of the σ-twisted parafermion module at index `i`.
pub fn para_twisted_base_weight(k: Level, i: u32) -> Rational {
    let (k, i) = (k.k() as i64, i as i64);
    Rational::new(i * (i - k), 4 * (k + 2)) + Rational::new(k - 1, 16)
}

/// Lowest conformal weight of a module.
///
/// For the parafermion orbifold only the type II modules and the vacuum are
/// covered; the split weights of the other modules are reported as unsupported.
pub fn lowest_weight(k: Level, x: Label) -> Result<Rational> {
    let kk = k.k() as i64;
    match x {
        Label::Affine(AffineLabel { i }) => Ok(affine_weight(k, i)),
        Label::Para(m) => Ok(para_weight(k, m)),
        Label::OrbAffine(OrbAffineLabel { sector, i, sign }) => match (sector, i, sign) {
            (Sector::Untwisted, 0, Sign::Plus) => Ok(Rational::zero()),
            (Sector::Untwisted, 0, Sign::Minus) => Ok(Rational::one()),
            (Sector::Untwisted, i, _) => Ok(affine_weight(k, i)),
            (Sector::Twisted, i, s) => {
                let i = i as i64;
                let shift = match s {
                    Sign::Plus => Rational::new(kk, 16),
                    Sign::Minus => Rational::new(kk + 8, 16),
                };
                Ok(Rational::new(i * (i - kk), 4 * (kk + 2)) + shift)
            }
        },
        Label::OrbPara(OrbParaLabel::TypeII { base }) => Ok(para_weight(k, base)),
        Label::OrbPara(OrbParaLabel::TypeI {
            base,
            sign: Sign::Plus,
        }) if base == K0Label::vacuum(k) => Ok(Rational::zero()),
        other => Err(Error::Unsupported(other.to_string())),
    }
}
