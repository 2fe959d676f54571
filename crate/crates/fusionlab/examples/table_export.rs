//! Export a fusion table as JSON and CSV, then verify the JSON copy.
//!
//! ```bash
//! cargo run -p fusionlab --example table_export -- /tmp/fusion
//! ```

use std::path::PathBuf;

use fusionlab::cli::TableDocument;
use fusionlab::verify::{table_for, verify_table};
use fusionlab::{AlgebraKind, CheckName, VerifyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir: PathBuf = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir)?;

    let opts = VerifyOptions::default();
    let doc = TableDocument::build(&table_for(AlgebraKind::ParaOrb, 4, &opts)?, false);

    let json = dir.join("para-orb-4.json");
    std::fs::write(&json, serde_json::to_string_pretty(&doc)?)?;
    let csv = dir.join("para-orb-4.csv");
    doc.write_csv(std::fs::File::create(&csv)?)?;
    println!(
        "{} modules, {} unordered products -> {} and {}",
        doc.modules.len(),
        doc.fusion.len(),
        json.display(),
        csv.display()
    );

    let back: TableDocument = serde_json::from_str(&std::fs::read_to_string(&json)?)?;
    let report = verify_table(&back.to_table()?, &CheckName::ALL, 2, &opts);
    println!("{report}");
    Ok(())
}
