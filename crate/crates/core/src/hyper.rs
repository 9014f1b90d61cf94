//! Terminating hypergeometric series over the rationals, and exact checks of
//! the summation, transformation and contiguous relations used for the
//! binomial determinants.

use std::time::Instant;

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactalg::{pochhammer_rat, rat, ratio, Rational};
use crate::report::{elapsed_millis, Report};

/// Seed used by `hyper-suite` when none is given.
pub const DEFAULT_SEED: u64 = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperError {
    #[error("lower parameter {0} makes a denominator vanish before termination")]
    DenominatorHitsZero(Rational),
    #[error("no upper parameter is a nonpositive integer")]
    NonTerminating,
}

/// `pFq[upper; lower; arg]`, which must terminate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PFQSpec {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub arg: Rational,
}

impl PFQSpec {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, arg: Rational) -> Self {
        PFQSpec { upper, lower, arg }
    }

    /// Index of the last possibly nonzero term.
    pub fn termination_index(&self) -> Option<u32> {
        self.upper
            .iter()
            .filter(|p| p.is_nonpositive_integer())
            .map(|p| (-p).to_i64().expect("small termination index") as u32)
            .min()
    }
}

pub fn eval_pfq(s: &PFQSpec) -> Result<Rational, HyperError> {
    if s.arg.is_zero() {
        return Ok(Rational::one());
    }
    let n = s.termination_index().ok_or(HyperError::NonTerminating)?;
    for b in &s.lower {
        if b.is_nonpositive_integer() && (-b).to_i64().is_some_and(|k| k < n as i64) {
            return Err(HyperError::DenominatorHitsZero(b.clone()));
        }
    }
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for m in 0..n {
        let m = rat(m as i64);
        for a in &s.upper {
            term *= &(a + &m);
        }
        for b in &s.lower {
            term = &term / &(b + &m);
        }
        term = &(&term * &s.arg) / &(&m + &rat(1));
        sum += &term;
    }
    Ok(sum)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SummationKind {
    GaussTerminating,
    ChuVandermonde,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContiguousKind {
    F32Eq37,
    F43Unnumbered,
}

/// `Gamma(z) / Gamma(w)` for `z - w` an integer, as a finite product.
fn gamma_ratio(z: &Rational, w: &Rational) -> Result<Rational, HyperError> {
    let k = (z - w).to_i64().expect("integer gamma shift");
    if k >= 0 {
        Ok(pochhammer_rat(w, k as u32))
    } else {
        let p = pochhammer_rat(z, (-k) as u32);
        if p.is_zero() {
            return Err(HyperError::DenominatorHitsZero(z.clone()));
        }
        Ok(p.recip())
    }
}

fn denominator_safe(c: &Rational, n: u32) -> Result<(), HyperError> {
    if pochhammer_rat(c, n).is_zero() {
        Err(HyperError::DenominatorHitsZero(c.clone()))
    } else {
        Ok(())
    }
}

/// Both sides of `2F1[a, -n; c; 1] = (c-a)_n / (c)_n`.
pub fn summation_sides(
    kind: SummationKind,
    a: &Rational,
    n: u32,
    c: &Rational,
) -> Result<(Rational, Rational), HyperError> {
    denominator_safe(c, n)?;
    let b = -rat(n as i64);
    let lhs = eval_pfq(&PFQSpec::new(vec![a.clone(), b.clone()], vec![c.clone()], rat(1)))?;
    let rhs = match kind {
        SummationKind::ChuVandermonde => &pochhammer_rat(&(c - a), n) / &pochhammer_rat(c, n),
        // Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))
        SummationKind::GaussTerminating => &gamma_ratio(c, &(c - &b))? * &gamma_ratio(&(&(c - a) - &b), &(c - a))?,
    };
    Ok((lhs, rhs))
}

pub fn check_summation(kind: SummationKind, a: &Rational, n: u32, c: &Rational) -> Result<bool, HyperError> {
    summation_sides(kind, a, n, c).map(|(l, r)| l == r)
}

/// Both sides of
/// `3F2[a, b, -n; d, e; 1] = (d+e-a-b)_n / (e)_n * 3F2[-n, d-a, d-b; d, d+e-a-b; 1]`.
pub fn transform_32_sides(
    a: &Rational,
    b: &Rational,
    n: u32,
    d: &Rational,
    e: &Rational,
) -> Result<(Rational, Rational), HyperError> {
    let mn = -rat(n as i64);
    let s = &(&(d + e) - a) - b;
    for low in [d, e, &s] {
        denominator_safe(low, n)?;
    }
    let lhs = eval_pfq(&PFQSpec::new(
        vec![a.clone(), b.clone(), mn.clone()],
        vec![d.clone(), e.clone()],
        rat(1),
    ))?;
    let right = eval_pfq(&PFQSpec::new(
        vec![mn, d - a, d - b],
        vec![d.clone(), s.clone()],
        rat(1),
    ))?;
    let rhs = &(&pochhammer_rat(&s, n) / &pochhammer_rat(e, n)) * &right;
    Ok((lhs, rhs))
}

pub fn check_transform_32(a: &Rational, b: &Rational, n: u32, d: &Rational, e: &Rational) -> Result<bool, HyperError> {
    transform_32_sides(a, b, n, d, e).map(|(l, r)| l == r)
}

/// Both sides of the contiguous relation
/// `F[a, b, ..; lower; z] = F[a-1, b, ..; lower; z] + z (b ..)/(lower ..) F[a, b+1, ..; lower+1; z]`.
/// `params` holds the upper parameters followed by the lower ones.
pub fn contiguous_sides(
    kind: ContiguousKind,
    params: &[Rational],
    z: &Rational,
) -> Result<(Rational, Rational), HyperError> {
    let p = match kind {
        ContiguousKind::F32Eq37 => 3,
        ContiguousKind::F43Unnumbered => 4,
    };
    assert_eq!(params.len(), 2 * p - 1, "wrong parameter count");
    let (upper, lower) = params.split_at(p);
    let lhs = eval_pfq(&PFQSpec::new(upper.to_vec(), lower.to_vec(), z.clone()))?;
    let mut lowered = upper.to_vec();
    lowered[0] = &lowered[0] - &rat(1);
    let mut rhs = eval_pfq(&PFQSpec::new(lowered, lower.to_vec(), z.clone()))?;
    let coeff = upper[1..].iter().fold(z.clone(), |acc, b| &acc * b);
    if !coeff.is_zero() {
        let coeff = lower.iter().fold(coeff, |acc, d| &acc / d);
        let mut up = upper.to_vec();
        for b in &mut up[1..] {
            *b = &*b + &rat(1);
        }
        let low = lower.iter().map(|d| d + &rat(1)).collect();
        rhs += &(&coeff * &eval_pfq(&PFQSpec::new(up, low, z.clone()))?);
    }
    Ok((lhs, rhs))
}

pub fn check_contiguous(kind: ContiguousKind, params: &[Rational], z: &Rational) -> Result<bool, HyperError> {
    contiguous_sides(kind, params, z).map(|(l, r)| l == r)
}

/// Small random rational `p/q` with `|p| <= 6`, `q <= 3`.
fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3))
}

/// Draws until `f` accepts the parameters (rejecting unsafe denominators).
fn draw<F>(rng: &mut ChaCha8Rng, mut f: F) -> (String, Rational, Rational)
where
    F: FnMut(&mut ChaCha8Rng) -> Option<(String, Result<(Rational, Rational), HyperError>)>,
{
    loop {
        if let Some((label, Ok((l, r)))) = f(rng) {
            return (label, l, r);
        }
    }
}

fn report(case: &str, n: usize, detail: String, lhs: Rational, rhs: Rational, start: Instant) -> Report {
    let ok = lhs == rhs;
    let mut r = Report::compare(
        case,
        n,
        "exact",
        lhs.to_string(),
        rhs.to_string(),
        ok,
        elapsed_millis(start),
    );
    if !ok {
        r.case = format!("{case}{detail}");
    }
    r
}

/// `samples` seeded random instances of each identity, in a fixed order:
/// Chu-Vandermonde, Gauss, the 3F2 transformation, then the two contiguous
/// relations.
pub fn hyper_suite(samples: usize, seed: u64) -> Vec<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(5 * samples);
    for kind in [SummationKind::ChuVandermonde, SummationKind::GaussTerminating] {
        let case = match kind {
            SummationKind::ChuVandermonde => "chu_vandermonde",
            SummationKind::GaussTerminating => "gauss_terminating",
        };
        for _ in 0..samples {
            let start = Instant::now();
            let mut n = 0;
            let (label, l, r) = draw(&mut rng, |rng| {
                let (a, c) = (small_rational(rng), small_rational(rng));
                n = rng.gen_range(0..=6u32);
                Some((format!("[a={a},n={n},c={c}]"), summation_sides(kind, &a, n, &c)))
            });
            out.push(report(case, n as usize, label, l, r, start));
        }
    }
    for _ in 0..samples {
        let start = Instant::now();
        let mut n = 0;
        let (label, l, r) = draw(&mut rng, |rng| {
            let [a, b, d, e] = [(); 4].map(|_| small_rational(rng));
            n = rng.gen_range(0..=6u32);
            Some((
                format!("[a={a},b={b},n={n},d={d},e={e}]"),
                transform_32_sides(&a, &b, n, &d, &e),
            ))
        });
        out.push(report("transform_32", n as usize, label, l, r, start));
    }
    for (kind, p, case) in [
        (ContiguousKind::F32Eq37, 3, "contiguous_32"),
        (ContiguousKind::F43Unnumbered, 4, "contiguous_43"),
    ] {
        for _ in 0..samples {
            let start = Instant::now();
            let mut n = 0;
            let (label, l, r) = draw(&mut rng, |rng| {
                let mut params: Vec<Rational> = (0..2 * p - 1).map(|_| small_rational(rng)).collect();
                n = rng.gen_range(0..=6usize);
                params[rng.gen_range(0..p)] = -rat(n as i64);
                let z = small_rational(rng);
                let label = params.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",");
                Some((format!("[{label};z={z}]"), contiguous_sides(kind, &params, &z)))
            });
            out.push(report(case, n, label, l, r, start));
        }
    }
    out
}
