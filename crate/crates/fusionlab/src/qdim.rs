//! Quantum dimensions as exact elements of `Q[c]/(S_{k+1}(c)) ⊕ √k·Q[c]/(S_{k+1}(c))`
//! written over the quantum integers `[1], …, [k+1]`, plus a high precision
//! numeric evaluator.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use serde::Serialize;

use crate::catalog::{Label, Level, OrbParaLabel};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Lowest precision the numeric tier ever runs at.
pub const MIN_DIGITS: usize = 40;
/// Precision used when `FUSIONLAB_PRECISION_DIGITS` is unset.
pub const DEFAULT_DIGITS: usize = 60;
pub const PRECISION_ENV: &str = "FUSIONLAB_PRECISION_DIGITS";

/// Numeric precision ceiling in decimal digits.
pub fn precision_digits() -> usize {
    std::env::var(PRECISION_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(DEFAULT_DIGITS)
        .max(MIN_DIGITS)
}

/// Result of reducing `[t]` onto the basis: `[t] = eps·[n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reduced {
    pub eps: i8,
    pub n: u32,
}

/// Reduce `[t]` using `[0]=0`, `[−t]=−[t]`, `[k+2]=0` and `[k+2+r]=−[k+2−r]`.
pub fn qint_reduce(t: i64, k: Level) -> Reduced {
    let h = k.k() as i64 + 2;
    let t = t.rem_euclid(2 * h);
    if t == 0 || t == h {
        Reduced { eps: 0, n: 0 }
    } else if t < h {
        Reduced {
            eps: 1,
            n: t as u32,
        }
    } else {
        Reduced {
            eps: -1,
            n: (2 * h - t) as u32,
        }
    }
}

/// `Σ a_n [n] + √k · Σ b_n [n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QDim {
    #[serde(skip)]
    k: Level,
    a: Vec<Rational>,
    b: Vec<Rational>,
}

impl QDim {
    pub fn zero(k: Level) -> QDim {
        let n = k.k() as usize + 1;
        QDim {
            k,
            a: vec![Rational::zero(); n],
            b: vec![Rational::zero(); n],
        }
    }

    pub fn one(k: Level) -> QDim {
        QDim::qint(k, 1)
    }

    /// The quantum integer `[t]`, reduced.
    pub fn qint(k: Level, t: i64) -> QDim {
        let mut q = QDim::zero(k);
        let r = qint_reduce(t, k);
        if r.eps != 0 {
            q.a[r.n as usize - 1] = Rational::int(r.eps as i64);
        }
        q
    }

    /// Element with the given coefficient vectors, each of length `k+1`.
    pub fn from_parts(k: Level, a: Vec<Rational>, b: Vec<Rational>) -> Result<QDim> {
        let n = k.k() as usize + 1;
        if a.len() != n || b.len() != n {
            return Err(Error::LevelMismatch(a.len().max(b.len()) as u32 - 1, k.k()));
        }
        Ok(QDim { k, a, b })
    }

    pub fn level(&self) -> Level {
        self.k
    }

    /// Coefficients of `[1..=k+1]` in the rational part.
    pub fn a(&self) -> &[Rational] {
        &self.a
    }

    /// Coefficients of `[1..=k+1]` in the `√k` part.
    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    /// Multiply by `√k`.
    pub fn times_sqrt_k(&self) -> QDim {
        let kk = Rational::int(self.k.k() as i64);
        QDim {
            k: self.k,
            a: self.b.iter().map(|x| *x * kk).collect(),
            b: self.a.clone(),
        }
    }

    pub fn scale(&self, r: Rational) -> QDim {
        QDim {
            k: self.k,
            a: self.a.iter().map(|x| *x * r).collect(),
            b: self.b.iter().map(|x| *x * r).collect(),
        }
    }

    fn check_level(&self, o: &QDim) -> Result<()> {
        if self.k != o.k {
            return Err(Error::LevelMismatch(self.k.k(), o.k.k()));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &QDim) -> Result<QDim> {
        self.check_level(o)?;
        Ok(QDim {
            k: self.k,
            a: self.a.iter().zip(&o.a).map(|(x, y)| *x + *y).collect(),
            b: self.b.iter().zip(&o.b).map(|(x, y)| *x + *y).collect(),
        })
    }

    pub fn try_sub(&self, o: &QDim) -> Result<QDim> {
        self.try_add(&o.scale(Rational::int(-1)))
    }

    /// Product over the basis using `[m][n] = Σ_{j<min(m,n)} [m+n−1−2j]`.
    fn basis_product(k: Level, x: &[Rational], y: &[Rational], out: &mut [Rational]) {
        for (m, xm) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (n, yn) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let (m1, n1) = (m as i64 + 1, n as i64 + 1);
                let c = *xm * *yn;
                for j in 0..m1.min(n1) {
                    let r = qint_reduce(m1 + n1 - 1 - 2 * j, k);
                    if r.eps != 0 {
                        let idx = r.n as usize - 1;
                        out[idx] = out[idx] + c * Rational::int(r.eps as i64);
                    }
                }
            }
        }
    }

    pub fn try_mul(&self, o: &QDim) -> Result<QDim> {
        self.check_level(o)?;
        let k = self.k;
        let mut out = QDim::zero(k);
        let mut bb = vec![Rational::zero(); out.a.len()];
        QDim::basis_product(k, &self.a, &o.a, &mut out.a);
        QDim::basis_product(k, &self.b, &o.b, &mut bb);
        let kk = Rational::int(k.k() as i64);
        for (x, y) in out.a.iter_mut().zip(&bb) {
            *x = *x + *y * kk;
        }
        QDim::basis_product(k, &self.a, &o.b, &mut out.b);
        QDim::basis_product(k, &self.b, &o.a, &mut out.b);
        Ok(out)
    }

    /// Numeric value with `digits` significant digits, truncated.
    pub fn numeric(&self, digits: usize) -> Result<String> {
        let ceiling = precision_digits();
        if digits == 0 || digits > ceiling {
            return Err(Error::PrecisionUnavailable {
                requested: digits,
                ceiling,
            });
        }
        let mut basis = NumericBasis::new(self.k, ceiling);
        let v = basis.eval(self);
        Ok(basis.to_decimal(&v, digits))
    }
}

impl Add for &QDim {
    type Output = QDim;
    fn add(self, o: &QDim) -> QDim {
        self.try_add(o).expect("same level")
    }
}

impl Sub for &QDim {
    type Output = QDim;
    fn sub(self, o: &QDim) -> QDim {
        self.try_sub(o).expect("same level")
    }
}

impl Mul for &QDim {
    type Output = QDim;
    fn mul(self, o: &QDim) -> QDim {
        self.try_mul(o).expect("same level")
    }
}

impl fmt::Display for QDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (part, coeffs) in [("", &self.a), ("√k·", &self.b)] {
            for (n, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = if c.denom() == 1 {
                    c.numer().to_string()
                } else {
                    c.to_string()
                };
                terms.push(format!("{c}·{part}[{}]", n + 1));
            }
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Exact quantum dimension of any label.
pub fn qdim_of(k: Level, x: Label) -> QDim {
    match x {
        Label::Affine(a) => QDim::qint(k, a.i as i64 + 1),
        Label::OrbAffine(a) => QDim::qint(k, a.i as i64 + 1),
        Label::Para(m) => QDim::qint(k, m.i() as i64 + 1),
        Label::OrbPara(p) => orb_para_qdim(k, p),
    }
}

pub(crate) fn orb_para_qdim(k: Level, p: OrbParaLabel) -> QDim {
    let half = Rational::new(1, 2);
    match p {
        OrbParaLabel::TypeI { base, .. } => QDim::qint(k, base.i() as i64 + 1),
        OrbParaLabel::TypeII { base } => QDim::qint(k, base.i() as i64 + 1).scale(Rational::int(2)),
        OrbParaLabel::Twisted { i, .. } if Some(i) == k.half() => {
            QDim::qint(k, i as i64 + 1).times_sqrt_k().scale(half)
        }
        OrbParaLabel::Twisted { i, .. } => QDim::qint(k, i as i64 + 1).times_sqrt_k(),
        OrbParaLabel::TwistedTilde { .. } => QDim::qint(k, k.k() as i64 / 2 + 1)
            .times_sqrt_k()
            .scale(half),
    }
}

/// Which equality tier held when comparing two quantum dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tier {
    Quotient,
    Numeric,
    Unequal,
}

/// Precomputed `[1..=k+1]` and `√k` at a fixed binary precision.
pub struct NumericBasis {
    bits: usize,
    qint: Vec<BigFloat>,
    sqrt_k: BigFloat,
    cc: Consts,
}

const RM: RoundingMode = RoundingMode::ToEven;

impl NumericBasis {
    /// Basis good for at least `digits` decimal digits.
    pub fn new(k: Level, digits: usize) -> NumericBasis {
        let bits = (digits.max(MIN_DIGITS) as f64 * std::f64::consts::LOG2_10).ceil() as usize + 96;
        let mut cc = Consts::new().expect("constant cache");
        let pi = cc.pi(bits, RM);
        let h = BigFloat::from_u64(k.k() as u64 + 2, bits);
        let s1 = pi.div(&h, bits, RM).sin(bits, RM, &mut cc);
        let qint = (1..=k.k() as u64 + 1)
            .map(|n| {
                let x = pi
                    .mul(&BigFloat::from_u64(n, bits), bits, RM)
                    .div(&h, bits, RM);
                x.sin(bits, RM, &mut cc).div(&s1, bits, RM)
            })
            .collect();
        let sqrt_k = BigFloat::from_u64(k.k() as u64, bits).sqrt(bits, RM);
        NumericBasis {
            bits,
            qint,
            sqrt_k,
            cc,
        }
    }

    fn rational(&self, r: Rational) -> BigFloat {
        BigFloat::from_i64(r.numer(), self.bits).div(
            &BigFloat::from_i64(r.denom(), self.bits),
            self.bits,
            RM,
        )
    }

    pub fn eval(&self, q: &QDim) -> BigFloat {
        let p = self.bits;
        let dot = |coeffs: &[Rational]| {
            coeffs
                .iter()
                .zip(&self.qint)
                .filter(|(c, _)| !c.is_zero())
                .fold(BigFloat::from_u64(0, p), |acc, (c, v)| {
                    acc.add(&self.rational(*c).mul(v, p, RM), p, RM)
                })
        };
        dot(&q.a).add(&self.sqrt_k.mul(&dot(&q.b), p, RM), p, RM)
    }

    /// `|x − y| ≤ tol·max(|x|,|y|)` with `tol = 10^(−exp10)`.
    pub fn close(&self, x: &BigFloat, y: &BigFloat, exp10: u32) -> bool {
        let p = self.bits;
        let diff = x.sub(y, p, RM).abs();
        let scale = if x.abs().cmp(&y.abs()) == Some(1) {
            x.abs()
        } else {
            y.abs()
        };
        let tol = BigFloat::from_u64(1, p).div(
            &BigFloat::from_u64(10, p).powi(exp10 as usize, p, RM),
            p,
            RM,
        );
        diff.cmp(&scale.mul(&tol, p, RM)).is_some_and(|c| c <= 0)
    }

    /// Compare exactly, then numerically at relative tolerance `10^-30`.
    pub fn compare(&self, x: &QDim, y: &QDim) -> Tier {
        if x == y {
            return Tier::Quotient;
        }
        if self.close(&self.eval(x), &self.eval(y), 30) {
            Tier::Numeric
        } else {
            Tier::Unequal
        }
    }

    /// Decimal string with `digits` significant digits, truncated toward zero.
    pub fn to_decimal(&mut self, v: &BigFloat, digits: usize) -> String {
        if v.is_zero() {
            return format!("0.{}", "0".repeat(digits.saturating_sub(1)));
        }
        // nudge the magnitude up past binary noise so exact values such as 1
        // are not truncated to 0.999...
        let p = self.bits;
        let guard = BigFloat::from_u64(10, p).powi(digits + 20, p, RM);
        let one = BigFloat::from_u64(1, p);
        let v = v.mul(&one.add(&one.div(&guard, p, RM), p, RM), p, RM);
        let (sign, mant, e) = v
            .convert_to_radix(Radix::Dec, RoundingMode::None, &mut self.cc)
            .expect("finite value");
        let mut s = String::new();
        if sign == astro_float::Sign::Neg {
            s.push('-');
        }
        let digit = |idx: i64| -> char {
            if idx < 0 {
                '0'
            } else {
                mant.get(idx as usize).map_or('0', |d| (b'0' + d) as char)
            }
        };
        let e = e as i64;
        let int_len = e.max(1);
        if e >= 1 {
            (0..e).for_each(|i| s.push(digit(i)));
        } else {
            s.push('0');
        }
        let frac_len = (digits as i64 - int_len).max(0);
        if frac_len > 0 {
            s.push('.');
            (0..frac_len).for_each(|i| s.push(digit(e + i)));
        }
        s
    }
}
