//! Compare the two readings of the level k/2 twisted products at even k.
//!
//! The `as-printed` reading takes every sign of the table literally; the
//! default `consistent` reading changes three of them. Only the latter gives
//! a commutative, associative ring.
//!
//! ```bash
//! cargo run -p fusionlab --example clause_sets
//! ```

use fusionlab::verify::table_for;
use fusionlab::{
    parse_label, verify_ring, AlgebraKind, CheckName, ClauseSet, FoldConvention, Level,
    OrbParaOptions, VerifyOptions,
};

fn main() -> fusionlab::Result<()> {
    let checks = [
        CheckName::Commutativity,
        CheckName::Associativity,
        CheckName::Duality,
        CheckName::QdimMult,
    ];
    for k in [4, 6, 8] {
        for clauses in [ClauseSet::Consistent, ClauseSet::AsPrinted] {
            let opts = VerifyOptions {
                orb_para: OrbParaOptions {
                    fold: FoldConvention::Preserve,
                    clauses,
                },
                ..VerifyOptions::default()
            };
            let r = verify_ring(AlgebraKind::ParaOrb, k, &checks, 2, &opts)?;
            let failures: Vec<String> = r
                .checks
                .iter()
                .map(|c| format!("{} {}", c.name, c.failure_count))
                .collect();
            println!("k={k} {clauses:?}: {}", failures.join(", "));
        }
    }

    // one product on which the two readings differ
    let level = Level::new(AlgebraKind::ParaOrb, 4)?;
    let p = |s| parse_label(AlgebraKind::ParaOrb, level, s);
    let (a, b) = (p("PI:2,0:+")?, p("PTt:+")?);
    for clauses in [ClauseSet::Consistent, ClauseSet::AsPrinted] {
        let opts = VerifyOptions {
            orb_para: OrbParaOptions {
                clauses,
                ..OrbParaOptions::default()
            },
            ..VerifyOptions::default()
        };
        let t = table_for(AlgebraKind::ParaOrb, 4, &opts)?;
        println!(
            "{clauses:?}: {a} x {b} = {}   {b} x {a} = {}",
            t.product(&a, &b).expect("labels"),
            t.product(&b, &a).expect("labels")
        );
    }
    Ok(())
}
