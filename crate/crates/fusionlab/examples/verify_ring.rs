//! Run every check on one ring and print the report.
//!
//! ```bash
//! cargo run --release -p fusionlab --example verify_ring -- para-orb 8
//! ```

use fusionlab::{verify_ring, AlgebraKind, CheckName, VerifyOptions};

fn main() -> fusionlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let algebra: AlgebraKind = args.next().as_deref().unwrap_or("para-orb").parse()?;
    let k: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());

    let opts = VerifyOptions {
        affine_qdim_extension: true,
        ..VerifyOptions::default()
    };
    let report = verify_ring(algebra, k, &CheckName::ALL, workers, &opts)?;
    println!("{report}");
    if !report.passed {
        std::process::exit(1);
    }
    Ok(())
}
