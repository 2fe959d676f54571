//! Acceptance run: one line per criterion, nonzero exit when any fails.

mod common;

use std::time::{Duration, Instant};

use fusionlab::catalog::{para_twisted_base_weight, K0Label};
use fusionlab::cli::run_with;
use fusionlab::verify::{table_for, Status};
use fusionlab::{
    canonicalize_k0, enumerate, lowest_weight, mutate_and_detect, parse_label, verify_ring,
    AlgebraKind, CheckName, FusionRing, Label, Level, OrbAffineRing, OrbParaRing, Report, Sector,
    VerifyOptions,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn opts() -> VerifyOptions {
    VerifyOptions {
        affine_qdim_extension: true,
        ..VerifyOptions::default()
    }
}

fn level(a: AlgebraKind, k: i64) -> Level {
    Level::new(a, k).expect("valid level")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn run_check(a: AlgebraKind, k: u32, check: CheckName) -> Result<Report, String> {
    let r = verify_ring(a, k, &[check], 4, &opts()).map_err(|e| e.to_string())?;
    let rec = &r.checks[0];
    ensure(rec.status == Status::Pass, || {
        format!(
            "{check} failed for {a} k={k}: {} failures, first {:?}",
            rec.failure_count,
            rec.failures.first()
        )
    })?;
    Ok(r)
}

fn c1_counts() -> Outcome {
    for k in 3..=30i64 {
        let n = enumerate(AlgebraKind::ParaOrb, level(AlgebraKind::ParaOrb, k))
            .map_err(|e| e.to_string())?
            .len();
        let want = if k % 2 == 1 {
            (k + 1) * (k + 7) / 4
        } else {
            (k * k + 8 * k + 28) / 4
        };
        ensure(n as i64 == want, || {
            format!("para-orb k={k}: {n} != {want}")
        })?;
    }
    for (k, want) in [(3, 10), (4, 19), (5, 18), (6, 28)] {
        let n = enumerate(AlgebraKind::ParaOrb, level(AlgebraKind::ParaOrb, k))
            .unwrap()
            .len();
        ensure(n == want, || format!("spot k={k}: {n} != {want}"))?;
    }
    for k in 1..=30i64 {
        let n = enumerate(AlgebraKind::AffineOrb, level(AlgebraKind::AffineOrb, k))
            .unwrap()
            .len();
        ensure(n as i64 == 4 * (k + 1), || format!("affine-orb k={k}: {n}"))?;
        let n = enumerate(AlgebraKind::Para, level(AlgebraKind::Para, k))
            .unwrap()
            .len();
        ensure(n as i64 == k * (k + 1) / 2, || format!("para k={k}: {n}"))?;
    }
    Ok("para-orb 3..30, affine-orb and para 1..30".into())
}

fn unit_and_current<R: FusionRing>(ring: &R) -> Result<(), String> {
    let one = ring.unit();
    let j = ring.simple_current().ok_or("no simple current")?;
    let k = ring.level();
    let mut images = Vec::new();
    for x in ring.labels() {
        for p in [ring.fuse(&one, x), ring.fuse(x, &one)] {
            ensure(p.total() == 1 && p.mult(x) == 1, || {
                format!("k={k}: unit on {x} gives {p}")
            })?;
        }
        let jx = ring.fuse(&j, x);
        ensure(jx.total() == 1, || format!("k={k}: {j} x {x} = {jx}"))?;
        let (y, _) = jx.iter().next().expect("one term");
        let back = ring.fuse(&j, y);
        ensure(back.total() == 1 && back.mult(x) == 1, || {
            format!("k={k}: {j} is not an involution on {x}")
        })?;
        images.push(*y);
    }
    images.sort();
    images.dedup();
    ensure(images.len() == ring.labels().len(), || {
        format!("k={k}: not a permutation")
    })
}

fn c2_unit() -> Outcome {
    let start = Instant::now();
    for k in 1..=12 {
        unit_and_current(&OrbAffineRing::new(k).unwrap())?;
    }
    for k in 3..=12 {
        unit_and_current(&OrbParaRing::new(k).unwrap())?;
    }
    within(start, Duration::from_secs(5), "unit laws")?;
    Ok(format!("k <= 12, {:?}", start.elapsed()))
}

fn c3_commutativity() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for k in 1..=10 {
        pairs +=
            run_check(AlgebraKind::AffineOrb, k, CheckName::Commutativity)?.checks[0].instances;
    }
    for k in 3..=10 {
        pairs += run_check(AlgebraKind::ParaOrb, k, CheckName::Commutativity)?.checks[0].instances;
    }
    within(start, Duration::from_secs(10), "commutativity")?;
    Ok(format!("{pairs} ordered pairs, {:?}", start.elapsed()))
}

fn c4_associativity() -> Outcome {
    let mut triples = 0;
    let mut slowest = Duration::ZERO;
    let levels = (1..=10)
        .map(|k| (AlgebraKind::AffineOrb, k))
        .chain((3..=8).map(|k| (AlgebraKind::ParaOrb, k)));
    for (a, k) in levels {
        let start = Instant::now();
        triples += run_check(a, k, CheckName::Associativity)?.checks[0].instances;
        within(
            start,
            Duration::from_secs(120),
            &format!("associativity {a} k={k}"),
        )?;
        slowest = slowest.max(start.elapsed());
    }
    Ok(format!("{triples} triples, slowest level {slowest:?}"))
}

fn graded<R: FusionRing>(ring: &R) -> Result<u64, String> {
    let mut n = 0;
    for a in ring.labels() {
        for b in ring.labels() {
            let want = if ring.sector(a) == ring.sector(b) {
                Sector::Untwisted
            } else {
                Sector::Twisted
            };
            for (c, _) in ring.fuse(a, b).iter() {
                ensure(ring.sector(c) == want, || format!("{a} x {b} -> {c}"))?;
            }
            n += 1;
        }
    }
    Ok(n)
}

fn c5_grading() -> Outcome {
    let mut n = 0;
    for k in 1..=10 {
        n += graded(&OrbAffineRing::new(k).unwrap())?;
        run_check(AlgebraKind::AffineOrb, k, CheckName::Grading)?;
    }
    for k in 3..=10 {
        n += graded(&OrbParaRing::new(k).unwrap())?;
        run_check(AlgebraKind::ParaOrb, k, CheckName::Grading)?;
    }
    Ok(format!("{n} pairs"))
}

fn c6_duality() -> Outcome {
    let mut n = 0;
    for k in 1..=8 {
        n += run_check(AlgebraKind::AffineOrb, k, CheckName::Duality)?.checks[0].instances;
    }
    for k in 3..=8 {
        n += run_check(AlgebraKind::ParaOrb, k, CheckName::Duality)?.checks[0].instances;
    }
    Ok(format!("{n} triples"))
}

fn c7_qdim() -> Outcome {
    let (mut quotient, mut numeric) = (0, 0);
    for k in 3..=10u32 {
        let r = run_check(AlgebraKind::ParaOrb, k, CheckName::QdimMult)?;
        let tiers = r.checks[0].tiers.ok_or("no tier counts")?;
        ensure(tiers.unequal == 0, || {
            format!("k={k}: {} unequal", tiers.unequal)
        })?;
        quotient += tiers.quotient;
        numeric += tiers.numeric;
        // an independent double precision pass over the same pairs
        let ring = OrbParaRing::new(k).unwrap();
        let d = |x: &fusionlab::OrbParaLabel| common::orb_para_qdim_f64(k as i64, &x.to_string());
        for a in ring.labels() {
            for b in ring.labels() {
                let rhs: f64 = ring.fuse(a, b).iter().map(|(c, m)| m as f64 * d(c)).sum();
                let lhs = d(a) * d(b);
                ensure((lhs - rhs).abs() <= 1e-9 * lhs.max(1.0), || {
                    format!("k={k} {a} x {b}: {lhs} vs {rhs}")
                })?;
            }
        }
    }
    Ok(format!(
        "tiers quotient={quotient} numeric={numeric} unequal=0"
    ))
}

/// `K0` constituents of an untwisted orbifold label.
fn restrict(k: i64, s: &str) -> Vec<(i64, i64)> {
    let (tag, rest) = s.split_once(':').expect("tagged");
    let v: Vec<i64> = rest
        .split([',', ':'])
        .take(2)
        .map(|x| x.parse().unwrap())
        .collect();
    match tag {
        "PI" => vec![(v[0], v[1])],
        _ => vec![(v[0], v[1]), common::k0_sigma(k, (v[0], v[1]))],
    }
}

fn c8_restriction() -> Outcome {
    let mut n = 0;
    for k in 1..=10i64 {
        run_check(AlgebraKind::AffineOrb, k as u32, CheckName::Restriction)?;
        let ring = OrbAffineRing::new(k as u32).unwrap();
        for a in ring.labels() {
            for b in ring.labels() {
                let tt = a.sector == Sector::Twisted && b.sector == Sector::Twisted;
                // erase signs; twisted pairs pair the index j with its dual k−j
                let j = if tt { k - b.i as i64 } else { b.i as i64 };
                let want: Vec<i64> = common::spins(k, a.i as i64, j);
                let mut got = Vec::new();
                for (c, m) in ring.fuse(a, b).iter() {
                    let twisted = c.sector == Sector::Twisted;
                    ensure(twisted == (a.sector != b.sector), || {
                        format!("k={k} {a} x {b} -> {c}")
                    })?;
                    got.extend(std::iter::repeat_n(c.i as i64, m as usize));
                }
                got.sort();
                ensure(got == want, || {
                    format!("affine-orb k={k} {a} x {b}: {got:?} vs {want:?}")
                })?;
                n += 1;
            }
        }
    }
    for k in 3..=10i64 {
        run_check(AlgebraKind::ParaOrb, k as u32, CheckName::Restriction)?;
        let ring = OrbParaRing::new(k as u32).unwrap();
        let untwisted: Vec<_> = ring.labels().iter().filter(|x| !x.is_twisted()).collect();
        for a in &untwisted {
            for b in &untwisted {
                let mut want = Vec::new();
                for x in restrict(k, &a.to_string()) {
                    for y in restrict(k, &b.to_string()) {
                        want.extend(common::k0_product(k, x, y));
                    }
                }
                let mut got = Vec::new();
                for (c, m) in ring.fuse(a, b).iter() {
                    for _ in 0..m {
                        got.extend(restrict(k, &c.to_string()));
                    }
                }
                want.sort();
                got.sort();
                ensure(got == want, || format!("para-orb k={k} {a} x {b}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} pairs"))
}

fn cli(args: &[&str]) -> Result<String, String> {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(
        std::iter::once("fusionlab").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    ensure(code == 0, || {
        format!("{args:?} exited {code}: {}", String::from_utf8_lossy(&err))
    })?;
    Ok(String::from_utf8(out).unwrap().trim_end().to_string())
}

fn c9_spot_values() -> Outcome {
    let cases: [(&[&str], &str); 8] = [
        (
            &[
                "fuse",
                "--algebra",
                "para-orb",
                "--level",
                "4",
                "PI:2,1:+",
                "PI:2,1:+",
            ],
            "PI:4,0:+ PI:2,1:- PI:4,2:+",
        ),
        (
            &[
                "fuse",
                "--algebra",
                "para-orb",
                "--level",
                "4",
                "PI:4,2:+",
                "PII:1,0",
            ],
            "PII:3,1",
        ),
        (
            &[
                "fuse",
                "--algebra",
                "affine-orb",
                "--level",
                "1",
                "AT:0:+",
                "AT:0:+",
            ],
            "AU:1:-",
        ),
        (
            &[
                "fuse",
                "--algebra",
                "affine-orb",
                "--level",
                "4",
                "AU:1:+",
                "AU:1:+",
            ],
            "AU:0:- AU:2:+",
        ),
        (
            &[
                "fuse",
                "--algebra",
                "para-orb",
                "--level",
                "3",
                "PI:2,1:+",
                "PT:1:+",
            ],
            "PT:1:- PT:0:+",
        ),
        (
            &[
                "qdim",
                "--algebra",
                "para-orb",
                "--level",
                "3",
                "PII:1,0",
                "--digits",
                "10",
            ],
            "3.236067977",
        ),
        (
            &[
                "weight",
                "--algebra",
                "affine-orb",
                "--level",
                "4",
                "AT:1:-",
            ],
            "5/8",
        ),
        (
            &["dual", "--algebra", "affine-orb", "--level", "5", "AT:1:-"],
            "AT:4:-",
        ),
    ];
    for (args, want) in cases {
        let got = cli(args)?;
        ensure(got == want, || {
            format!("{args:?}: got {got:?}, want {want:?}")
        })?;
    }
    let sqrt5 = 1.0 + 5f64.sqrt();
    let got: f64 = cli(&[
        "qdim",
        "--algebra",
        "para-orb",
        "--level",
        "3",
        "PII:1,0",
        "--digits",
        "10",
    ])?
    .parse()
    .map_err(|e| format!("{e}"))?;
    ensure((got - sqrt5).abs() < 1e-9, || format!("1+√5 vs {got}"))?;
    let mut out = Vec::new();
    let code = run_with(
        [
            "fusionlab",
            "verify",
            "--algebra",
            "affine-orb",
            "--level",
            "5",
        ],
        &mut out,
        &mut Vec::new(),
    );
    ensure(code == 0, || format!("verify affine-orb 5 exited {code}"))?;
    Ok(format!("{} CLI cases", cases.len() + 2))
}

fn c10_mutations() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut detected = 0;
    for a in [AlgebraKind::ParaOrb, AlgebraKind::AffineOrb] {
        let t = table_for(a, 4, &opts()).map_err(|e| e.to_string())?;
        let candidates = t.mutation_candidates();
        for m in candidates.choose_multiple(&mut rng, 20) {
            let r = mutate_and_detect(a, 4, m).map_err(|e| e.to_string())?;
            ensure(!r.passed, || format!("{a} k=4: {m} went unnoticed"))?;
            detected += 1;
        }
    }
    Ok(format!("{detected}/40 mutations detected"))
}

fn weight(a: AlgebraKind, k: Level, s: &str) -> Result<common::Q, String> {
    let x = parse_label(a, k, s).map_err(|e| e.to_string())?;
    let w = lowest_weight(k, x).map_err(|e| e.to_string())?;
    Ok(common::Q::new(w.numer(), w.denom()))
}

fn c11_weights() -> Outcome {
    let mut n = 0;
    for k in 1..=30i64 {
        let p = level(AlgebraKind::Para, k);
        for (i, j) in common::all_k0(k) {
            let got = weight(AlgebraKind::Para, p, &common::p((i, j)))?;
            ensure(got == common::para_weight(k, i, j), || {
                format!("para k={k} ({i},{j})")
            })?;
            n += 1;
        }
        let a = level(AlgebraKind::AffineOrb, k);
        let mut untwisted = Vec::new();
        for i in 0..=k {
            let w = weight(AlgebraKind::Affine, a, &format!("A:{i}"))?;
            ensure(w == common::affine_weight(k, i), || {
                format!("affine k={k} i={i}")
            })?;
            untwisted.push(w);
            for (s, plus) in [('+', true), ('-', false)] {
                let want = match (i, plus) {
                    (0, true) => common::Q::from_integer(0),
                    (0, false) => common::Q::from_integer(1),
                    _ => common::affine_weight(k, i),
                };
                ensure(
                    weight(AlgebraKind::AffineOrb, a, &common::au(i, s))? == want,
                    || format!("AU k={k} i={i}{s}"),
                )?;
                let t = weight(AlgebraKind::AffineOrb, a, &common::at(i, s))?;
                ensure(t == common::affine_twisted_weight(k, i, plus), || {
                    format!("AT k={k} i={i}{s}")
                })?;
                n += 3;
            }
        }
        let mut sorted = untwisted.clone();
        sorted.sort();
        sorted.dedup();
        ensure(sorted.len() == untwisted.len(), || {
            format!("k={k}: repeated affine weights")
        })?;
        if k >= 3 {
            let lv = level(AlgebraKind::ParaOrb, k);
            for i in 0..=k {
                let w = para_twisted_base_weight(lv, i as u32);
                let got = common::Q::new(w.numer(), w.denom());
                ensure(got == common::para_twisted_weight(k, i), || {
                    format!("twisted para k={k} i={i}")
                })?;
                n += 1;
            }
            let vac = Label::Para(K0Label::vacuum(lv));
            ensure(
                lowest_weight(lv, vac).map(|w| w.is_zero()) == Ok(true),
                || "vacuum".into(),
            )?;
            let m = canonicalize_k0(lv, 0, 0).map_err(|e| e.to_string())?;
            ensure(m == K0Label::vacuum(lv), || "vacuum identification".into())?;
        }
    }
    Ok(format!("{n} weights"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("counts", c1_counts),
        ("unit and simple current", c2_unit),
        ("commutativity", c3_commutativity),
        ("associativity", c4_associativity),
        ("grading", c5_grading),
        ("duality", c6_duality),
        ("qdim multiplicativity", c7_qdim),
        ("restriction", c8_restriction),
        ("spot values", c9_spot_values),
        ("mutation sensitivity", c10_mutations),
        ("weights", c11_weights),
    ];
    let mut failed = 0;
    for (idx, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match f() {
            Ok(msg) => println!(
                "criterion {}: PASS {name} ({msg}) [{:?}]",
                idx + 1,
                start.elapsed()
            ),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {msg}", idx + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
