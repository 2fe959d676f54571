use std::collections::HashMap;
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::sync::RwLock;

use crate::affine_rings::{AffineRing, OrbAffineRing};
use crate::catalog::{AlgebraKind, Label, Level, Sector};
use crate::error::{Error, Result};
use crate::outcome::FusionOutcome;
use crate::para_rings::{OrbParaOptions, OrbParaRing, ParaRing};
use crate::qdim::QDim;

/// A fusion ring with a finite, canonically ordered label set.
pub trait FusionRing: Send + Sync {
    type Label: Copy + Ord + Hash + Display + Debug + Send + Sync + Into<Label>;

    fn algebra(&self) -> AlgebraKind;
    fn level(&self) -> Level;
    fn labels(&self) -> &[Self::Label];
    fn fuse(&self, a: &Self::Label, b: &Self::Label) -> FusionOutcome<Self::Label>;
    /// The vacuum module.
    fn unit(&self) -> Self::Label;
    /// The order two simple current `X^−` of an orbifold vacuum.
    fn simple_current(&self) -> Option<Self::Label>;
    fn dual(&self, a: &Self::Label) -> Self::Label;
    fn sector(&self, a: &Self::Label) -> Sector;
    fn qdim(&self, a: &Self::Label) -> QDim;

    /// Bilinear extension of the product to multisets.
    fn fuse_many(
        &self,
        x: &FusionOutcome<Self::Label>,
        y: &FusionOutcome<Self::Label>,
    ) -> FusionOutcome<Self::Label> {
        let mut out = FusionOutcome::new();
        for (a, m) in x.iter() {
            for (b, n) in y.iter() {
                for (c, p) in self.fuse(a, b).iter() {
                    out.add(*c, m * n * p);
                }
            }
        }
        out
    }
}

/// Thread-safe memo table for fusion products.
#[derive(Debug)]
pub(crate) struct Memo<L> {
    map: RwLock<HashMap<(L, L), FusionOutcome<L>>>,
}

impl<L> Default for Memo<L> {
    fn default() -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
        }
    }
}

impl<L: Copy + Ord + Hash> Memo<L> {
    pub fn get_or_insert_with(
        &self,
        key: (L, L),
        f: impl FnOnce() -> FusionOutcome<L>,
    ) -> FusionOutcome<L> {
        if let Some(v) = self.map.read().expect("memo lock").get(&key) {
            return v.clone();
        }
        let v = f();
        self.map
            .write()
            .expect("memo lock")
            .entry(key)
            .or_insert(v)
            .clone()
    }
}

fn fuse_in<R: FusionRing>(ring: &R, a: &Label, b: &Label) -> Result<FusionOutcome<Label>> {
    let find = |x: &Label| {
        ring.labels()
            .iter()
            .find(|l| Into::<Label>::into(**l) == *x)
            .copied()
            .ok_or_else(|| Error::WrongAlgebra {
                label: x.to_string(),
                algebra: ring.algebra(),
            })
    };
    Ok(ring.fuse(&find(a)?, &find(b)?).map(|&l| l.into()))
}

/// Fuse two labels of `algebra` at level `k`.
pub fn fuse_labels(
    algebra: AlgebraKind,
    k: Level,
    opts: OrbParaOptions,
    a: &Label,
    b: &Label,
) -> Result<FusionOutcome<Label>> {
    match algebra {
        AlgebraKind::Affine => fuse_in(&AffineRing::new(k.k())?, a, b),
        AlgebraKind::AffineOrb => fuse_in(&OrbAffineRing::new(k.k())?, a, b),
        AlgebraKind::Para => fuse_in(&ParaRing::new(k.k())?, a, b),
        AlgebraKind::ParaOrb => fuse_in(&OrbParaRing::with_options(k.k(), opts)?, a, b),
    }
}
