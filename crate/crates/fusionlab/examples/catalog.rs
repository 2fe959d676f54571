//! Module catalogs of the four algebras at one level, with weights and duals.
//!
//! ```bash
//! cargo run -p fusionlab --example catalog -- 4
//! ```

use fusionlab::catalog::expected_count;
use fusionlab::{contragredient, enumerate, lowest_weight, AlgebraKind, Level};

fn main() -> fusionlab::Result<()> {
    let k: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);

    for algebra in AlgebraKind::ALL {
        let level = match Level::new(algebra, k) {
            Ok(level) => level,
            Err(e) => {
                println!("{algebra}: {e}\n");
                continue;
            }
        };
        let labels = enumerate(algebra, level)?;
        println!(
            "{algebra} at k={k}: {} modules (closed form {})",
            labels.len(),
            expected_count(algebra, level)
        );
        for l in &labels {
            let weight = lowest_weight(level, *l)
                .map(|w| w.to_string())
                .unwrap_or_else(|_| "-".into());
            println!(
                "  {:<12} {:<14} weight {:<8} dual {}",
                l.to_string(),
                l.kind(),
                weight,
                contragredient(level, *l)
            );
        }
        println!();
    }
    Ok(())
}
