//! Fusion for `L(k,0)` and its Z2-orbifold `L(k,0)^σ`.

use crate::catalog::{
    affine_labels, contragredient, orb_affine_labels, AffineLabel, AlgebraKind, Label, Level,
    OrbAffineLabel, Sector, Sign,
};
use crate::error::{Error, Result};
use crate::outcome::FusionOutcome;
use crate::qdim::QDim;
use crate::ring::{FusionRing, Memo};

/// `sign(i,j,l)^±`: the `+` variant is `+` exactly when `i+j−l ≡ 0 (mod 4)`.
pub fn sign_of(i: i64, j: i64, l: i64, variant: Sign) -> Result<Sign> {
    if (i + j + l).rem_euclid(2) != 0 {
        return Err(Error::Parity { i, j, l });
    }
    let base = if (i + j - l).rem_euclid(4) == 0 {
        Sign::Plus
    } else {
        Sign::Minus
    };
    Ok(base * variant)
}

/// `sign_of` for arguments already known to have even sum.
pub(crate) fn sign(i: u32, j: u32, l: u32, variant: Sign) -> Sign {
    sign_of(i as i64, j as i64, l as i64, variant).expect("even parity")
}

/// Admissible `l` in the level-`k` product of spins `i` and `j`.
pub fn affine_range(k: Level, i: u32, j: u32) -> impl Iterator<Item = u32> {
    let k = k.k();
    (i.abs_diff(j)..=i + j).filter(move |l| (i + j + l).is_multiple_of(2) && i + j + l <= 2 * k)
}

pub fn fuse_affine(k: Level, a: AffineLabel, b: AffineLabel) -> FusionOutcome<AffineLabel> {
    affine_range(k, a.i, b.i)
        .map(|i| AffineLabel { i })
        .collect()
}

/// Products with at least one untwisted factor.
fn fuse_orb_affine_direct(
    k: Level,
    a: OrbAffineLabel,
    b: OrbAffineLabel,
) -> Option<FusionOutcome<OrbAffineLabel>> {
    let (u, x) = match (a.sector, b.sector) {
        (Sector::Untwisted, _) => (a, b),
        (_, Sector::Untwisted) => (b, a),
        _ => return None,
    };
    let s = u.sign * x.sign;
    Some(
        affine_range(k, u.i, x.i)
            .map(|l| OrbAffineLabel {
                sector: x.sector,
                i: l,
                sign: sign(u.i, x.i, l, s),
            })
            .collect(),
    )
}

fn dual_orb(k: Level, x: OrbAffineLabel) -> OrbAffineLabel {
    match contragredient(k, Label::OrbAffine(x)) {
        Label::OrbAffine(y) => y,
        _ => unreachable!(),
    }
}

/// Orbifold product computed from the tables; twisted pairs go through duality.
pub fn fuse_orb_affine(
    k: Level,
    a: OrbAffineLabel,
    b: OrbAffineLabel,
) -> FusionOutcome<OrbAffineLabel> {
    if let Some(o) = fuse_orb_affine_direct(k, a, b) {
        return o;
    }
    // N_{T1,T2}^U = multiplicity of T2' in U' x T1
    let target = dual_orb(k, b);
    let mut out = FusionOutcome::new();
    for i in 0..=k.k() {
        for s in Sign::BOTH {
            let u = OrbAffineLabel::untwisted(i, s);
            let n = fuse_orb_affine_direct(k, dual_orb(k, u), a)
                .expect("untwisted factor")
                .mult(&target);
            out.add(u, n);
        }
    }
    out
}

/// `L(k,0)` fusion ring.
#[derive(Debug)]
pub struct AffineRing {
    k: Level,
    labels: Vec<AffineLabel>,
}

impl AffineRing {
    pub fn new(k: u32) -> Result<Self> {
        let k = Level::new(AlgebraKind::Affine, k as i64)?;
        Ok(AffineRing {
            k,
            labels: affine_labels(k),
        })
    }
}

impl FusionRing for AffineRing {
    type Label = AffineLabel;

    fn algebra(&self) -> AlgebraKind {
        AlgebraKind::Affine
    }
    fn level(&self) -> Level {
        self.k
    }
    fn labels(&self) -> &[AffineLabel] {
        &self.labels
    }
    fn fuse(&self, a: &AffineLabel, b: &AffineLabel) -> FusionOutcome<AffineLabel> {
        fuse_affine(self.k, *a, *b)
    }
    fn unit(&self) -> AffineLabel {
        AffineLabel { i: 0 }
    }
    fn simple_current(&self) -> Option<AffineLabel> {
        None
    }
    fn dual(&self, a: &AffineLabel) -> AffineLabel {
        *a
    }
    fn sector(&self, _: &AffineLabel) -> Sector {
        Sector::Untwisted
    }
    fn qdim(&self, a: &AffineLabel) -> QDim {
        QDim::qint(self.k, a.i as i64 + 1)
    }
}

/// `L(k,0)^σ` fusion ring; twisted products are memoized.
#[derive(Debug)]
pub struct OrbAffineRing {
    k: Level,
    labels: Vec<OrbAffineLabel>,
    memo: Memo<OrbAffineLabel>,
}

impl OrbAffineRing {
    pub fn new(k: u32) -> Result<Self> {
        let k = Level::new(AlgebraKind::AffineOrb, k as i64)?;
        Ok(OrbAffineRing {
            k,
            labels: orb_affine_labels(k),
            memo: Memo::default(),
        })
    }
}

impl FusionRing for OrbAffineRing {
    type Label = OrbAffineLabel;

    fn algebra(&self) -> AlgebraKind {
        AlgebraKind::AffineOrb
    }
    fn level(&self) -> Level {
        self.k
    }
    fn labels(&self) -> &[OrbAffineLabel] {
        &self.labels
    }
    fn fuse(&self, a: &OrbAffineLabel, b: &OrbAffineLabel) -> FusionOutcome<OrbAffineLabel> {
        match fuse_orb_affine_direct(self.k, *a, *b) {
            Some(o) => o,
            None => self
                .memo
                .get_or_insert_with((*a, *b), || fuse_orb_affine(self.k, *a, *b)),
        }
    }
    fn unit(&self) -> OrbAffineLabel {
        OrbAffineLabel::untwisted(0, Sign::Plus)
    }
    fn simple_current(&self) -> Option<OrbAffineLabel> {
        Some(OrbAffineLabel::untwisted(0, Sign::Minus))
    }
    fn dual(&self, a: &OrbAffineLabel) -> OrbAffineLabel {
        dual_orb(self.k, *a)
    }
    fn sector(&self, a: &OrbAffineLabel) -> Sector {
        a.sector
    }
    /// Both halves inherit the qdim `[i+1]` of `L(k,i)`; this is an extension
    /// used by the verifier.
    fn qdim(&self, a: &OrbAffineLabel) -> QDim {
        QDim::qint(self.k, a.i as i64 + 1)
    }
}
