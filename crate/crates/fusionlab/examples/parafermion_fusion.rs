//! Parafermion products and their Z2-orbifold, showing which case of the
//! fusion table handles each pair.
//!
//! ```bash
//! cargo run -p fusionlab --example parafermion_fusion -- 6
//! ```

use fusionlab::{parse_label, AlgebraKind, FusionRing, Label, OrbParaLabel, OrbParaRing, ParaRing};

fn orb(ring: &OrbParaRing, text: &str) -> fusionlab::Result<OrbParaLabel> {
    match parse_label(AlgebraKind::ParaOrb, ring.level(), text)? {
        Label::OrbPara(x) => Ok(x),
        _ => unreachable!(),
    }
}

fn main() -> fusionlab::Result<()> {
    let k: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);

    let para = ParaRing::new(k)?;
    let ls = para.labels();
    println!(
        "K0 at k={k}: {} x {} = {}",
        ls[0],
        ls[0],
        para.fuse(&ls[0], &ls[0])
    );

    let ring = OrbParaRing::new(k)?;
    let twisted = format!("PT:{}:+", k / 2);
    let pairs = [
        ("PI:2,1:+", "PI:2,1:+"),
        ("PI:2,1:+", "PII:1,0"),
        ("PII:1,0", "PII:1,0"),
        ("PI:2,1:-", "PT:1:+"),
        ("PII:1,0", twisted.as_str()),
        (twisted.as_str(), twisted.as_str()),
    ];
    println!("\nK0^σ at k={k}:");
    for (a, b) in pairs {
        let (a, b) = (orb(&ring, a)?, orb(&ring, b)?);
        let (clause, out) = ring.fuse_with_clause(&a, &b);
        println!("  {a} x {b} = {out}\n      [{clause}]");
    }
    if k.is_multiple_of(2) {
        let (a, b) = (
            orb(&ring, &format!("PI:{},0:+", k / 2))?,
            orb(&ring, "PTt:+")?,
        );
        let (clause, out) = ring.fuse_with_clause(&a, &b);
        println!("  {a} x {b} = {out}\n      [{clause}]");
    }
    Ok(())
}
