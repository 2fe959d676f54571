//! Fusion rings of the level `k` affine algebra `L(k,0)`, the parafermion
//! algebra `K(sl2,k)`, and their Z2-orbifolds.
//!
//! Each ring implements [`FusionRing`]; [`verify`] checks the ring axioms
//! exhaustively over a level and [`cli`] is the command line front end.
//!
//! ```
//! use fusionlab::{FusionRing, OrbParaRing, parse_label, AlgebraKind, Label};
//!
//! let ring = OrbParaRing::new(4).unwrap();
//! let Label::OrbPara(x) = parse_label(AlgebraKind::ParaOrb, ring.level(), "PI:2,1:+").unwrap() else {
//!     unreachable!()
//! };
//! assert_eq!(ring.fuse(&x, &x).to_string(), "PI:4,0:+ PI:2,1:- PI:4,2:+");
//! ```

pub mod affine_rings;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod outcome;
pub mod para_rings;
pub mod qdim;
pub mod rational;
pub mod ring;
pub mod verify;

pub use affine_rings::{fuse_affine, fuse_orb_affine, sign_of, AffineRing, OrbAffineRing};
pub use catalog::{
    canonicalize_k0, canonicalize_orb_para, contragredient, enumerate, lowest_weight, parse_label,
    sigma_stable, AffineLabel, AlgebraKind, FoldConvention, K0Label, Label, Level, OrbAffineLabel,
    OrbParaLabel, RawOrbParaLabel, Sector, Sign,
};
pub use error::{Error, Result};
pub use outcome::FusionOutcome;
pub use para_rings::{fuse_k0, Clause, ClauseSet, OrbParaOptions, OrbParaRing, ParaRing};
pub use qdim::{qdim_of, qint_reduce, QDim, Tier};
pub use rational::Rational;
pub use ring::FusionRing;
pub use verify::{mutate_and_detect, verify_ring, CheckName, Report, TableMutation, VerifyOptions};
