//! Corrupt one entry of a fusion table and watch the verifier notice.
//!
//! ```bash
//! cargo run -p fusionlab --example mutation
//! ```

use fusionlab::verify::CheckName;
use fusionlab::{mutate_and_detect, parse_label, AlgebraKind, Level, TableMutation};

fn main() -> fusionlab::Result<()> {
    let aff = Level::new(AlgebraKind::AffineOrb, 4)?;
    let para = Level::new(AlgebraKind::ParaOrb, 3)?;
    let a = |s| parse_label(AlgebraKind::AffineOrb, aff, s);
    let p = |s| parse_label(AlgebraKind::ParaOrb, para, s);

    let cases = [
        (AlgebraKind::AffineOrb, 4, TableMutation::Identity),
        (
            AlgebraKind::AffineOrb,
            4,
            TableMutation::FlipSign {
                left: a("AU:1:+")?,
                right: a("AU:1:+")?,
                output: a("AU:2:+")?,
            },
        ),
        (
            AlgebraKind::ParaOrb,
            3,
            TableMutation::DropTerm {
                left: p("PI:2,1:+")?,
                right: p("PT:1:+")?,
                output: p("PT:0:+")?,
            },
        ),
    ];
    for (algebra, k, m) in cases {
        let report = mutate_and_detect(algebra, k, &m)?;
        let count = |c| report.check(c).map_or(0, |r| r.failure_count);
        println!(
            "{algebra} k={k} {m}: associativity failures {}, qdim failures {} => {}",
            count(CheckName::Associativity),
            count(CheckName::QdimMult),
            if report.passed {
                "undetected"
            } else {
                "detected"
            }
        );
    }
    Ok(())
}
