//! Independent oracles used by the integration tests. Nothing here calls the
//! library's own canonicalization or fusion code.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;

pub type Q = Ratio<i64>;

/// Closure of `(i, j mod k)` under `(i,j) ↦ (k−i, k−i+j)`.
pub fn k0_orbit(k: i64, i: i64, j: i64) -> BTreeSet<(i64, i64)> {
    let mut seen = BTreeSet::new();
    let mut todo = vec![(i, j.rem_euclid(k))];
    while let Some((a, b)) = todo.pop() {
        if seen.insert((a, b)) {
            todo.push((k - a, (k - a + b).rem_euclid(k)));
        }
    }
    seen
}

/// The unique orbit element with `1 ≤ i ≤ k`, `0 ≤ j ≤ i−1`.
pub fn k0_canonical(k: i64, i: i64, j: i64) -> (i64, i64) {
    let reps: Vec<_> = k0_orbit(k, i, j)
        .into_iter()
        .filter(|&(a, b)| 1 <= a && a <= k && b < a)
        .collect();
    assert_eq!(
        reps.len(),
        1,
        "orbit of ({i},{j}) at k={k} has reps {reps:?}"
    );
    reps[0]
}

/// σ: `M^{i,j} ↦ M^{i,i−j}`, canonicalized.
pub fn k0_sigma(k: i64, (i, j): (i64, i64)) -> (i64, i64) {
    k0_canonical(k, i, i - j)
}

pub fn k0_stable(k: i64, m: (i64, i64)) -> bool {
    k0_sigma(k, m) == m
}

pub fn all_k0(k: i64) -> Vec<(i64, i64)> {
    (1..=k).flat_map(|i| (0..i).map(move |j| (i, j))).collect()
}

/// `sign(i,j,l)^v` straight from the definition.
pub fn sign(i: i64, j: i64, l: i64, plus_variant: bool) -> char {
    let base_plus = (i + j - l) % 4 == 0;
    if base_plus == plus_variant {
        '+'
    } else {
        '-'
    }
}

/// `l` with `|i−j| ≤ l ≤ i+j`, `i+j+l` even, `i+j+l ≤ 2k`, found by scanning `0..=k`.
pub fn spins(k: i64, i: i64, j: i64) -> Vec<i64> {
    (0..=k)
        .filter(|&l| (i - j).abs() <= l && l <= i + j && (i + j + l) % 2 == 0 && i + j + l <= 2 * k)
        .collect()
}

pub type Multiset = BTreeMap<String, u32>;

pub fn ms<I: IntoIterator<Item = String>>(it: I) -> Multiset {
    let mut m = Multiset::new();
    for s in it {
        *m.entry(s).or_insert(0) += 1;
    }
    m
}

pub fn outcome_ms<L: Clone + Ord + std::fmt::Display>(o: &fusionlab::FusionOutcome<L>) -> Multiset {
    o.iter().map(|(l, n)| (l.to_string(), n)).collect()
}

/// `M^{i,i'} ⊠ M^{j,j'}` evaluated from the product formula.
pub fn k0_product(k: i64, (i, ip): (i64, i64), (j, jp): (i64, i64)) -> Vec<(i64, i64)> {
    spins(k, i, j)
        .into_iter()
        .map(|l| {
            let twice = 2 * ip - i + 2 * jp - j + l;
            assert_eq!(twice % 2, 0);
            k0_canonical(k, l, twice / 2)
        })
        .collect()
}

pub fn p(m: (i64, i64)) -> String {
    format!("P:{},{}", m.0, m.1)
}

/// The module list of the parafermion orbifold written out from the
/// classification, as label strings.
pub fn orb_para_classification(k: i64) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let signs = ['+', '-'];
    let odd = k % 2 == 1;
    let n = if odd { (k - 1) / 2 } else { k / 2 };
    let twisted_top = if odd { (k - 1) / 2 } else { k / 2 };
    for i in 0..=twisted_top {
        for s in signs {
            out.insert(format!("PT:{i}:{s}"));
        }
    }
    if !odd {
        for s in signs {
            out.insert(format!("PTt:{s}"));
        }
    }
    let mut type_i: Vec<(i64, i64)> = (1..=n).map(|m| (2 * m, m)).collect();
    if odd {
        type_i.push((2 * n + 1, 0));
    } else {
        type_i.push((n, 0));
        type_i.push((2 * n, 0));
    }
    for (i, j) in type_i {
        for s in signs {
            out.insert(format!("PI:{i},{j}:{s}"));
        }
    }
    let top = if odd { (k - 1) / 2 } else { (k - 2) / 2 };
    for i in 1..=top {
        out.insert(format!("PII:{i},0"));
    }
    for i in 3..=k {
        let hi = if i % 2 == 0 { i / 2 - 1 } else { (i - 1) / 2 };
        for j in 1..=hi {
            out.insert(format!("PII:{i},{j}"));
        }
    }
    out
}

pub fn orb_para_count(k: i64) -> usize {
    if k % 2 == 1 {
        ((k + 1) * (k + 7) / 4) as usize
    } else {
        ((k * k + 8 * k + 28) / 4) as usize
    }
}

/// Orbifold affine labels as strings.
pub fn au(i: i64, s: char) -> String {
    format!("AU:{i}:{s}")
}

pub fn at(i: i64, s: char) -> String {
    format!("AT:{i}:{s}")
}

fn flip(s: char) -> char {
    if s == '+' {
        '-'
    } else {
        '+'
    }
}

/// Parsed orbifold affine label `(twisted, i, sign)`.
pub fn parse_orb_affine(s: &str) -> (bool, i64, char) {
    let parts: Vec<&str> = s.split(':').collect();
    (
        parts[0] == "AT",
        parts[1].parse().unwrap(),
        parts[2].chars().next().unwrap(),
    )
}

/// Orbifold affine products with at least one untwisted factor, from the
/// table; twisted pairs by scanning untwisted candidates through duality.
pub fn orb_affine_product(k: i64, a: &str, b: &str) -> Multiset {
    let (ta, i, sa) = parse_orb_affine(a);
    let (tb, j, sb) = parse_orb_affine(b);
    let variant_plus = sa == sb;
    match (ta, tb) {
        (false, _) | (_, false) => {
            let (ui, x, twisted) = if !ta { (i, j, tb) } else { (j, i, ta) };
            ms(spins(k, ui, x).into_iter().map(|l| {
                let s = sign(ui, x, l, variant_plus);
                if twisted {
                    at(l, s)
                } else {
                    au(l, s)
                }
            }))
        }
        (true, true) => {
            // N_{T1,T2}^U = multiplicity of T2' in U' ⊠ T1
            let dual_b = at(k - j, sb);
            let mut out = Multiset::new();
            for l in 0..=k {
                for s in ['+', '-'] {
                    let u_dual = au(l, if l % 2 == 1 { flip(s) } else { s });
                    let n = orb_affine_product(k, &u_dual, a)
                        .get(&dual_b)
                        .copied()
                        .unwrap_or(0);
                    if n > 0 {
                        out.insert(au(l, s), n);
                    }
                }
            }
            out
        }
    }
}

/// Lowest weight of `M^{i,j}` with exact rationals.
pub fn para_weight(k: i64, i: i64, j: i64) -> Q {
    let d = i - 2 * j;
    Q::new(k * d - d * d + 2 * k * j * (i - j + 1), 2 * k * (k + 2))
}

pub fn affine_weight(k: i64, i: i64) -> Q {
    Q::new(i * (i + 2), 4 * (k + 2))
}

pub fn affine_twisted_weight(k: i64, i: i64, plus: bool) -> Q {
    let shift = if plus {
        Q::new(k, 16)
    } else {
        Q::new(k + 8, 16)
    };
    Q::new(i * (i - k), 4 * (k + 2)) + shift
}

pub fn para_twisted_weight(k: i64, i: i64) -> Q {
    Q::new(i * (i - k), 4 * (k + 2)) + Q::new(k - 1, 16)
}

/// `sin(nπ/(k+2))/sin(π/(k+2))` in double precision.
pub fn qint_f64(k: i64, n: i64) -> f64 {
    let h = (k + 2) as f64;
    (n as f64 * std::f64::consts::PI / h).sin() / (std::f64::consts::PI / h).sin()
}

/// Quantum dimension of an orbifold parafermion label string, in double precision.
pub fn orb_para_qdim_f64(k: i64, label: &str) -> f64 {
    let (tag, rest) = label.split_once(':').unwrap();
    let first = |r: &str| -> i64 { r.split([',', ':']).next().unwrap().parse().unwrap() };
    let sk = (k as f64).sqrt();
    match tag {
        "PI" => qint_f64(k, first(rest) + 1),
        "PII" => 2.0 * qint_f64(k, first(rest) + 1),
        "PT" => {
            let i = first(rest);
            if k % 2 == 0 && i == k / 2 {
                0.5 * sk * qint_f64(k, i + 1)
            } else {
                sk * qint_f64(k, i + 1)
            }
        }
        "PTt" => 0.5 * sk * qint_f64(k, k / 2 + 1),
        _ => panic!("not a parafermion orbifold label: {label}"),
    }
}
