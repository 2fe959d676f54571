//! Products in the affine ring and its Z2-orbifold, including twisted ⊠
//! twisted products obtained through duality.
//!
//! ```bash
//! cargo run -p fusionlab --example affine_fusion
//! ```

use fusionlab::{
    fuse_affine, sign_of, AffineLabel, AffineRing, FusionRing, OrbAffineLabel, OrbAffineRing, Sign,
};

fn main() -> fusionlab::Result<()> {
    let ring = AffineRing::new(4)?;
    let spin = |i| AffineLabel { i };
    println!("L(4,1) x L(4,1) = {}", ring.fuse(&spin(1), &spin(1)));
    println!("L(4,3) x L(4,3) = {}", ring.fuse(&spin(3), &spin(3)));
    println!(
        "L(1,1) x L(1,1) = {}",
        fuse_affine(AffineRing::new(1)?.level(), spin(1), spin(1))
    );

    println!("\nsign(i,j,l)^+ for i = j = 2:");
    for l in [0, 2, 4] {
        println!("  l = {l}: {}", sign_of(2, 2, l, Sign::Plus)?);
    }

    let orb = OrbAffineRing::new(4)?;
    let u = OrbAffineLabel::untwisted;
    let t = OrbAffineLabel::twisted;
    println!("\norbifold at k=4:");
    for (a, b) in [
        (u(1, Sign::Plus), u(1, Sign::Plus)),
        (u(0, Sign::Minus), u(3, Sign::Plus)),
        (u(2, Sign::Minus), t(1, Sign::Plus)),
        (t(1, Sign::Plus), t(1, Sign::Plus)),
        (t(0, Sign::Minus), t(4, Sign::Plus)),
    ] {
        println!("  {a} x {b} = {}", orb.fuse(&a, &b));
    }

    let orb1 = OrbAffineRing::new(1)?;
    let x = t(0, Sign::Plus);
    println!("\nk=1: {x} x {x} = {}", orb1.fuse(&x, &x));
    Ok(())
}
