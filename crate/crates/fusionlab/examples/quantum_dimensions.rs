//! Exact quantum dimensions, their decimal values and multiplicativity.
//!
//! ```bash
//! cargo run -p fusionlab --example quantum_dimensions -- 5
//! ```

use fusionlab::qdim::NumericBasis;
use fusionlab::{qint_reduce, FusionRing, OrbParaRing, QDim, Rational};

fn main() -> fusionlab::Result<()> {
    let k: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let ring = OrbParaRing::new(k)?;
    let level = ring.level();
    let mut basis = NumericBasis::new(level, 50);

    println!("[t] reduced at k={k}:");
    for t in [k as i64 + 1, k as i64 + 2, k as i64 + 3, -1] {
        let r = qint_reduce(t, level);
        println!("  [{t}] = {}·[{}]", r.eps, r.n);
    }

    println!("\nquantum dimensions:");
    for l in ring.labels() {
        let q = ring.qdim(l);
        let v = basis.eval(&q);
        println!(
            "  {:<10} {:<22} {}",
            l.to_string(),
            q.to_string(),
            basis.to_decimal(&v, 30)
        );
    }

    let (a, b) = (ring.labels()[0], *ring.labels().last().expect("non-empty"));
    let product = &ring.qdim(&a) * &ring.qdim(&b);
    let sum = ring
        .fuse(&a, &b)
        .iter()
        .fold(QDim::zero(level), |s, (c, m)| {
            &s + &ring.qdim(c).scale(Rational::int(m as i64))
        });
    println!(
        "\nqdim({a})·qdim({b}) = {product}\nsum over {a} x {b}   = {sum}\nequality tier: {:?}",
        basis.compare(&product, &sum)
    );
    Ok(())
}
