mod common;

use common::{ms, outcome_ms};
use fusionlab::para_rings::matching_clauses;
use fusionlab::verify::type_ii_collisions;
use fusionlab::{
    canonicalize_k0, fuse_k0, parse_label, verify_ring, AlgebraKind, CheckName, Clause, ClauseSet,
    FoldConvention, FusionRing, Label, Level, OrbParaLabel, OrbParaOptions, OrbParaRing, ParaRing,
    Sector, VerifyOptions,
};

fn lv(a: AlgebraKind, k: i64) -> Level {
    Level::new(a, k).unwrap()
}

fn op(k: Level, s: &str) -> OrbParaLabel {
    match parse_label(AlgebraKind::ParaOrb, k, s).unwrap() {
        Label::OrbPara(x) => x,
        other => panic!("{other} is not a parafermion orbifold label"),
    }
}

fn strings(v: &[&str]) -> common::Multiset {
    ms(v.iter().map(|s| s.to_string()))
}

fn opts(fold: FoldConvention, clauses: ClauseSet) -> VerifyOptions {
    VerifyOptions {
        orb_para: OrbParaOptions { fold, clauses },
        ..VerifyOptions::default()
    }
}

#[test]
fn k0_fusion_examples() {
    let k2 = lv(AlgebraKind::Para, 2);
    let m = |k, i, j| canonicalize_k0(k, i, j).unwrap();
    assert_eq!(
        outcome_ms(&fuse_k0(k2, m(k2, 1, 0), m(k2, 1, 0))),
        strings(&["P:2,1", "P:2,0"])
    );
    // the formula sends l=0 to (0, −1 mod 3) ~ (3,2)
    let k3 = lv(AlgebraKind::Para, 3);
    assert_eq!(
        outcome_ms(&fuse_k0(k3, m(k3, 1, 0), m(k3, 1, 0))),
        strings(&["P:2,0", "P:3,2"])
    );
}

#[test]
fn k0_fusion_matches_formula_oracle() {
    for k in 1..=12i64 {
        let level = lv(AlgebraKind::Para, k);
        for a in common::all_k0(k) {
            for b in common::all_k0(k) {
                let got = fuse_k0(
                    level,
                    canonicalize_k0(level, a.0, a.1).unwrap(),
                    canonicalize_k0(level, b.0, b.1).unwrap(),
                );
                let want = ms(common::k0_product(k, a, b).into_iter().map(common::p));
                assert_eq!(outcome_ms(&got), want, "k={k} {a:?} x {b:?}");
            }
        }
    }
}

#[test]
fn k0_vacuum_is_a_unit_and_dual_pairs_contain_it() {
    for k in 1..=12u32 {
        let ring = ParaRing::new(k).unwrap();
        let one = ring.unit();
        for x in ring.labels() {
            assert_eq!(ring.fuse(&one, x).to_string(), x.to_string());
            assert_eq!(ring.fuse(x, &ring.dual(x)).mult(&one), 1, "k={k} {x}");
        }
    }
}

#[test]
fn orbifold_examples() {
    let k4 = lv(AlgebraKind::ParaOrb, 4);
    let r4 = OrbParaRing::new(4).unwrap();
    let a = op(k4, "PI:2,1:+");
    assert_eq!(r4.fuse(&a, &a).to_string(), "PI:4,0:+ PI:2,1:- PI:4,2:+");
    let (b, c) = (op(k4, "PI:4,2:+"), op(k4, "PII:1,0"));
    assert_eq!(outcome_ms(&r4.fuse(&b, &c)), strings(&["PII:3,1"]));

    let k3 = lv(AlgebraKind::ParaOrb, 3);
    let r3 = OrbParaRing::new(3).unwrap();
    let (x, w) = (op(k3, "PI:2,1:+"), op(k3, "PT:1:+"));
    assert_eq!(outcome_ms(&r3.fuse(&x, &w)), strings(&["PT:1:-", "PT:0:+"]));
}

#[test]
fn unit_simple_current_commutativity_and_grading() {
    for k in 3..=10u32 {
        let ring = OrbParaRing::new(k).unwrap();
        let one = ring.unit();
        let j = ring.simple_current().unwrap();
        assert_eq!(ring.fuse(&j, &j).to_string(), one.to_string());
        for a in ring.labels() {
            assert_eq!(ring.fuse(&one, a).to_string(), a.to_string(), "k={k}");
            let ja = ring.fuse(&j, a);
            assert_eq!(ja.total(), 1, "k={k} {a}");
            for b in ring.labels() {
                let ab = ring.fuse(a, b);
                assert_eq!(ab, ring.fuse(b, a), "k={k} {a} x {b}");
                let want = if a.sector() == b.sector() {
                    Sector::Untwisted
                } else {
                    Sector::Twisted
                };
                assert!(
                    ab.iter().all(|(c, _)| c.sector() == want),
                    "k={k} {a} x {b}"
                );
                assert!(!ab.is_empty(), "k={k} {a} x {b}");
            }
        }
    }
}

/// `K0` constituents of an untwisted orbifold label string.
fn restrict(k: i64, s: &str) -> Vec<(i64, i64)> {
    let (tag, rest) = s.split_once(':').unwrap();
    let nums: Vec<i64> = rest
        .split([',', ':'])
        .take(2)
        .map(|x| x.parse().unwrap())
        .collect();
    let m = (nums[0], nums[1]);
    match tag {
        "PI" => vec![m],
        "PII" => vec![m, common::k0_sigma(k, m)],
        _ => panic!("{s} is twisted"),
    }
}

#[test]
fn untwisted_products_restrict_to_k0_products() {
    for k in 3..=10i64 {
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
                for (c, n) in ring.fuse(a, b).iter() {
                    for _ in 0..n {
                        got.extend(restrict(k, &c.to_string()));
                    }
                }
                want.sort();
                got.sort();
                assert_eq!(got, want, "k={k} {a} x {b}");
            }
        }
    }
}

#[test]
fn every_pair_matches_exactly_one_clause() {
    for k in 3..=12u32 {
        let ring = OrbParaRing::new(k).unwrap();
        let level = ring.level();
        for a in ring.labels() {
            for b in ring.labels() {
                let (used, _) = ring.fuse_with_clause(a, b);
                if a.is_twisted() && b.is_twisted() {
                    assert_eq!(used, Clause::TwistedPairByDuality);
                    continue;
                }
                let m = matching_clauses(level, *a, *b);
                assert_eq!(m, vec![used], "k={k} {a} x {b}");
            }
        }
    }
}

#[test]
fn odd_levels_do_not_depend_on_the_clause_set_or_fold() {
    for k in [3u32, 5, 7, 9] {
        let base = OrbParaRing::new(k).unwrap();
        for (fold, clauses) in [
            (FoldConvention::Preserve, ClauseSet::AsPrinted),
            (FoldConvention::Flip, ClauseSet::Consistent),
        ] {
            let other = OrbParaRing::with_options(k, OrbParaOptions { fold, clauses }).unwrap();
            if fold == FoldConvention::Flip {
                let r = verify_ring(
                    AlgebraKind::ParaOrb,
                    k,
                    &[CheckName::Associativity, CheckName::Commutativity],
                    2,
                    &opts(fold, clauses),
                )
                .unwrap();
                assert!(r.passed, "k={k} flip\n{r}");
                continue;
            }
            for a in base.labels() {
                for b in base.labels() {
                    assert_eq!(base.fuse(a, b), other.fuse(a, b), "k={k} {a} x {b}");
                }
            }
        }
    }
}

#[test]
fn literal_clause_reading_breaks_the_ring_at_even_levels() {
    let checks = [
        CheckName::Commutativity,
        CheckName::Associativity,
        CheckName::Duality,
    ];
    let expected = [(4, [8, 512, 16]), (6, [24, 1632, 64]), (8, [24, 2544, 96])];
    for (k, counts) in expected {
        let r = verify_ring(
            AlgebraKind::ParaOrb,
            k,
            &checks,
            4,
            &opts(FoldConvention::Preserve, ClauseSet::AsPrinted),
        )
        .unwrap();
        assert!(!r.passed);
        let got: Vec<u64> = checks
            .iter()
            .map(|c| r.check(*c).unwrap().failure_count)
            .collect();
        assert_eq!(got, counts, "k={k}");
        let fixed = verify_ring(
            AlgebraKind::ParaOrb,
            k,
            &checks,
            4,
            &opts(FoldConvention::Preserve, ClauseSet::Consistent),
        )
        .unwrap();
        assert!(fixed.passed, "k={k}\n{fixed}");
    }
}

#[test]
fn flipping_folded_signs_breaks_associativity_at_even_levels() {
    for (k, n) in [(4, 688), (6, 1952), (8, 3152)] {
        let r = verify_ring(
            AlgebraKind::ParaOrb,
            k,
            &[CheckName::Associativity],
            4,
            &opts(FoldConvention::Flip, ClauseSet::Consistent),
        )
        .unwrap();
        assert_eq!(
            r.check(CheckName::Associativity).unwrap().failure_count,
            n,
            "k={k}"
        );
    }
}

#[test]
fn type_ii_family_collisions() {
    for (k, n) in [(3, 0), (4, 0), (5, 0), (6, 6), (8, 16)] {
        let ring = OrbParaRing::new(k).unwrap();
        assert_eq!(type_ii_collisions(&ring), n, "k={k}");
        for a in ring.labels() {
            for b in ring.labels() {
                let ab = ring.fuse(a, b);
                for c in ring.family_collisions(a, b) {
                    assert_eq!(ab.mult(&c), 2, "k={k} {a} x {b} -> {c}");
                }
            }
        }
    }
}

#[test]
fn twisted_pairs_fuse_into_untwisted_modules_with_duality() {
    for k in 3..=8u32 {
        let ring = OrbParaRing::new(k).unwrap();
        let (tw, un): (Vec<_>, Vec<_>) = ring.labels().iter().partition(|x| x.is_twisted());
        for t1 in &tw {
            for t2 in &tw {
                let prod = ring.fuse(t1, t2);
                for u in &un {
                    // every module is self-dual, so N_{T1,T2}^U = N_{U,T1}^{T2}
                    assert_eq!(prod.mult(u), ring.fuse(u, t1).mult(t2), "k={k}");
                }
            }
        }
    }
}
