//! Step-by-step checks of the identification-of-factors argument for the
//! prefactored skew matrix `T_n(X, Y)`: vanishing under specializations,
//! explicit row relations, vanishing order along `X - Y = const`, degree
//! bounds and the leading constant.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::closedform::thm6_prefactored_rhs;
use crate::detengine::det_bareiss;
use crate::exactalg::{binom_int, pochhammer_poly, rat, ratio, Degree, MPoly, RatFunc, Rational, RingElem, Var};
use crate::matrix::RingMatrix;
use crate::recmatrix::{build_thm6_matrix, Thm6Mode};
use crate::report::{elapsed_millis, Report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("row {row} lies outside 0..{dim}")]
    IndexOutOfRange { row: i64, dim: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    /// `X = -2a-1`
    XEqMinus2aMinus1,
    /// `Y = -4n+2a+2`
    YEqMinus4nPlus2aPlus2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowStep {
    S1,
    S2,
    S3,
    S4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

fn prefactored(n: usize) -> RingMatrix {
    build_thm6_matrix(n, Thm6Mode::Prefactored)
}

fn bx() -> MPoly {
    MPoly::var(Var::BigX)
}

fn specialize(m: &RingMatrix, var: Var, value: MPoly) -> RingMatrix {
    m.subst(&[(var, value)])
}

fn det(m: &RingMatrix) -> MPoly {
    det_bareiss(m).expect("square matrix")
}

pub fn specialization_vanish(n: usize, a: usize, axis: Axis) -> bool {
    specialized_det(n, a, axis).is_zero()
}

fn specialized_det(n: usize, a: usize, axis: Axis) -> MPoly {
    let (n, a) = (n as i64, a as i64);
    let m = prefactored(n as usize);
    let m = match axis {
        Axis::XEqMinus2aMinus1 => specialize(&m, Var::BigX, MPoly::int(-2 * a - 1)),
        Axis::YEqMinus4nPlus2aPlus2 => specialize(&m, Var::BigY, MPoly::int(-4 * n + 2 * a + 2)),
    };
    det(&m)
}

/// The specialized matrix and the `(row, coefficient)` pairs of the relation.
fn relation(n: usize, a: usize, step: RowStep, v: usize) -> (RingMatrix, Vec<(i64, RatFunc)>) {
    let m = prefactored(n);
    let (n, a, v) = (n as i64, a as i64, v as i64);
    let sign = |i: i64| if i % 2 == 0 { rat(1) } else { rat(-1) };
    let coeff = |k: i64, i: i64, num: MPoly, den: MPoly| {
        let c = &sign(i) * &Rational::from_integer(binom_int(k, i));
        let num = pochhammer_poly(&num, i as u32).scale(&c);
        RatFunc::new(num, pochhammer_poly(&den, i as u32)).expect("nonzero Pochhammer")
    };
    match step {
        RowStep::S1 => {
            // Y = 2W keeps (Y/2 + 2a - i)_i polynomial
            let w = MPoly::var(Var::W);
            let m = specialize(&m, Var::BigX, MPoly::int(-2 * a - 1));
            let m = specialize(&m, Var::BigY, w.scale(&rat(2)));
            let terms = (0..=a)
                .map(|i| {
                    let num = &w.scale(&rat(2)) + &MPoly::int(2 * n + 2 * a - i);
                    (2 * a - i, coeff(a, i, num, MPoly::var_plus(Var::W, 2 * a - i)))
                })
                .collect();
            (m, terms)
        }
        RowStep::S2 => {
            let m = specialize(&m, Var::BigY, MPoly::int(-4 * n + 2 * a + 2));
            let terms = (0..=a)
                .map(|i| {
                    let num = &bx().scale(&ratio(1, 2)) + &MPoly::constant(&rat(2 * n - a - i) + &ratio(1, 2));
                    (
                        2 * n - a - i - 1,
                        coeff(a, i, num, MPoly::var_plus(Var::BigX, 2 * n - a - i)),
                    )
                })
                .collect();
            (m, terms)
        }
        RowStep::S3 | RowStep::S4 => {
            let k = if step == RowStep::S3 { 2 * a + 2 } else { 2 * a + 3 };
            let m = specialize(&m, Var::BigY, &bx() - &MPoly::int(k - 2));
            let terms = (0..=k)
                .map(|i| {
                    let num = MPoly::var_plus(Var::BigX, 2 * n + v - i + 2);
                    (k + v - i, coeff(k, i, num, MPoly::var_plus(Var::BigX, k + v - i + 1)))
                })
                .collect();
            (m, terms)
        }
    }
}

/// Column sums of the relation; all zero iff the relation holds.
fn relation_columns(n: usize, a: usize, step: RowStep, v: usize) -> Result<Vec<RatFunc>, FactorError> {
    let (m, terms) = relation(n, a, step, v);
    let dim = m.rows();
    if let Some(&(row, _)) = terms.iter().find(|(r, _)| *r < 0 || *r >= dim as i64) {
        return Err(FactorError::IndexOutOfRange { row, dim });
    }
    Ok((0..dim)
        .map(|j| {
            terms.iter().fold(RatFunc::zero(), |acc, (r, c)| {
                &acc + &(c * &RatFunc::from_poly(m[(*r as usize, j)].clone()))
            })
        })
        .collect())
}

pub fn row_relation(n: usize, a: usize, step: RowStep, v: usize) -> Result<bool, FactorError> {
    Ok(relation_columns(n, a, step, v)?.iter().all(RatFunc::is_zero))
}

/// `t`-adic valuation of the determinant after `Y = X - 2a + t` (even) or
/// `Y = X - 2a - 1 + t` (odd). `None` when the determinant vanishes identically.
pub fn multiplicity_at_factor(n: usize, a: usize, parity: Parity) -> Option<u32> {
    let shift = match parity {
        Parity::Even => 2 * a as i64,
        Parity::Odd => 2 * a as i64 + 1,
    };
    let y = &(&bx() + &MPoly::var(Var::T)) - &MPoly::int(shift);
    det(&specialize(&prefactored(n), Var::BigY, y)).valuation(Var::T)
}

/// Exponent of `X - Y - 2a` (and of `X - Y - 2a - 1`) in the product formula.
pub fn required_multiplicity(n: usize, a: usize) -> u32 {
    (2 * n - 2 * a - 2) as u32
}

fn degree_str(d: Degree) -> String {
    match d {
        Degree::MinusInfinity => "-inf".into(),
        Degree::Finite(k) => k.to_string(),
    }
}

/// `X`- and `Y`-degrees of the determinant (`lhs`) and of the product (`rhs`),
/// all required to equal `2n^2 - n`.
pub fn degree_bounds(n: usize) -> Report {
    let start = Instant::now();
    let d = det(&prefactored(n));
    let r = thm6_prefactored_rhs(n);
    let target = Degree::Finite((2 * n * n - n) as u32);
    let degs = [
        d.degree(Var::BigX),
        d.degree(Var::BigY),
        r.degree(Var::BigX),
        r.degree(Var::BigY),
    ];
    let lhs = format!("deg_X={},deg_Y={}", degree_str(degs[0]), degree_str(degs[1]));
    let rhs = format!("deg_X={},deg_Y={}", degree_str(degs[2]), degree_str(degs[3]));
    let ok = degs.iter().all(|&g| g == target);
    Report::compare("S5_degree", n, "bareiss", lhs, rhs, ok, elapsed_millis(start))
}

/// At `X = -2n` every entry with `i + j >= 2n` vanishes, so the determinant
/// is a signed anti-diagonal product; it must equal the product formula at
/// `X = -2n`, i.e. no extra constant.
pub fn constant_at_x_eq_minus2n(n: usize) -> Report {
    let start = Instant::now();
    let dim = 2 * n;
    let m = specialize(&prefactored(n), Var::BigX, MPoly::int(-(dim as i64)));
    let anti_triangular = (0..dim).all(|i| (0..dim).all(|j| i + j < dim || m[(i, j)].is_zero()));
    let sign = if (n * (2 * n - 1)).is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    };
    let anti = (0..dim)
        .fold(MPoly::one(), |acc, i| &acc * &m[(i, dim - 1 - i)])
        .scale(&sign);
    let expected = thm6_prefactored_rhs(n).subst1(Var::BigX, &MPoly::int(-(dim as i64)));
    let ok = anti_triangular && det(&m) == anti;
    Report::compare(
        "S6_constant",
        n,
        "bareiss",
        anti.to_string(),
        expected.to_string(),
        ok,
        elapsed_millis(start),
    )
}

/// Skew-symmetry of the factorial-form matrix at integer `X`, `Y`.
pub fn skew_symmetry_check(n: usize, x: u64, y: u64) -> bool {
    build_thm6_matrix(n, Thm6Mode::Factorial { x, y }).is_skew_symmetric()
}

/// One entry of the proof-step grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    Vanish { axis: Axis, a: usize },
    Rows { step: RowStep, a: usize, v: usize },
    Multiplicity { parity: Parity, a: usize },
    Degree,
    Constant,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Check::Vanish {
                axis: Axis::XEqMinus2aMinus1,
                a,
            } => write!(f, "S1_vanish[a={a}]"),
            Check::Vanish {
                axis: Axis::YEqMinus4nPlus2aPlus2,
                a,
            } => write!(f, "S2_vanish[a={a}]"),
            Check::Rows {
                step: RowStep::S1, a, ..
            } => write!(f, "S1_rows[a={a}]"),
            Check::Rows {
                step: RowStep::S2, a, ..
            } => write!(f, "S2_rows[a={a}]"),
            Check::Rows {
                step: RowStep::S3,
                a,
                v,
            } => write!(f, "S3_rows[a={a},v={v}]"),
            Check::Rows {
                step: RowStep::S4,
                a,
                v,
            } => write!(f, "S4_rows[a={a},v={v}]"),
            Check::Multiplicity {
                parity: Parity::Even,
                a,
            } => write!(f, "S3_multiplicity[a={a}]"),
            Check::Multiplicity { parity: Parity::Odd, a } => write!(f, "S4_multiplicity[a={a}]"),
            Check::Degree => f.write_str("S5_degree"),
            Check::Constant => f.write_str("S6_constant"),
        }
    }
}

/// Every check for a given `n`: both specializations, all row relations
/// over the valid `(a, v)` ranges, both multiplicities, degrees, constant.
pub fn proof_grid(n: usize) -> Vec<Check> {
    let mut grid = Vec::new();
    for a in 0..n {
        grid.push(Check::Vanish {
            axis: Axis::XEqMinus2aMinus1,
            a,
        });
        grid.push(Check::Vanish {
            axis: Axis::YEqMinus4nPlus2aPlus2,
            a,
        });
        grid.push(Check::Rows {
            step: RowStep::S1,
            a,
            v: 0,
        });
        grid.push(Check::Rows {
            step: RowStep::S2,
            a,
            v: 0,
        });
        for v in 0..(2 * n).saturating_sub(2 * a + 2) {
            grid.push(Check::Rows {
                step: RowStep::S3,
                a,
                v,
            });
        }
        for v in 0..(2 * n).saturating_sub(2 * a + 3) {
            grid.push(Check::Rows {
                step: RowStep::S4,
                a,
                v,
            });
        }
        grid.push(Check::Multiplicity {
            parity: Parity::Even,
            a,
        });
        grid.push(Check::Multiplicity { parity: Parity::Odd, a });
    }
    grid.push(Check::Degree);
    grid.push(Check::Constant);
    grid
}

pub fn run_check(n: usize, check: Check) -> Report {
    let start = Instant::now();
    let case = check.to_string();
    let done = |lhs: String, rhs: String, ok: bool| {
        Report::compare(case.clone(), n, "bareiss", lhs, rhs, ok, elapsed_millis(start))
    };
    match check {
        Check::Vanish { axis, a } => {
            let d = specialized_det(n, a, axis);
            done(d.to_string(), "0".into(), d.is_zero())
        }
        Check::Rows { step, a, v } => match relation_columns(n, a, step, v) {
            Ok(cols) => {
                let nonzero = cols.iter().find(|c| !c.is_zero());
                let lhs = nonzero.map_or_else(|| "0".to_string(), |c| c.to_string());
                done(lhs, "0".into(), nonzero.is_none())
            }
            Err(e) => Report::error(case.clone(), n, "bareiss", e.to_string(), elapsed_millis(start)),
        },
        Check::Multiplicity { parity, a } => {
            let need = required_multiplicity(n, a);
            let got = multiplicity_at_factor(n, a, parity);
            let ok = got.is_none_or(|k| k >= need);
            let lhs = match got {
                Some(k) if k < need => format!("valuation={k}"),
                _ => format!("valuation>={need}"),
            };
            done(lhs, format!("valuation>={need}"), ok)
        }
        Check::Degree => degree_bounds(n),
        Check::Constant => constant_at_x_eq_minus2n(n),
    }
}

/// Runs the whole grid in parallel; reports come back in grid order.
pub fn proof_steps(n: usize) -> Vec<Report> {
    proof_grid(n).into_par_iter().map(|c| run_check(n, c)).collect()
}
