//! Matrix families: recurrence tables, binomial-difference matrices, and the
//! skew-symmetric factorial-ratio matrices together with their prefactored
//! polynomial form.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exactalg::{binom_int, binom_poly, factorial_ratio, pochhammer_poly, rat, MPoly, Rational, Var};
use crate::matrix::RingMatrix;
use crate::series2d::Series2D;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecError {
    #[error("row and column boundaries disagree at index 0: {row} vs {col}")]
    InconsistentCorner { row: String, col: String },
}

pub type BoundaryFn = Arc<dyn Fn(usize) -> MPoly + Send + Sync>;

/// `a[i][j] = horizontal * a[i-1][j] + vertical * a[i][j-1] + diagonal * a[i-1][j-1]`
/// for `i, j >= 1`, with `a[i][0] = row_boundary(i)` and `a[0][j] = col_boundary(j)`.
#[derive(Clone)]
pub struct RecurrenceSpec {
    pub horizontal: MPoly,
    pub vertical: MPoly,
    pub diagonal: MPoly,
    row_boundary: BoundaryFn,
    col_boundary: BoundaryFn,
    corner: MPoly,
}

impl fmt::Debug for RecurrenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RecurrenceSpec")
            .field("horizontal", &self.horizontal)
            .field("vertical", &self.vertical)
            .field("diagonal", &self.diagonal)
            .field("corner", &self.corner)
            .finish_non_exhaustive()
    }
}

/// The three recurrence tables with the extended Pascal rule
/// `a[i][j] = a[i-1][j] + a[i][j-1] + x a[i-1][j-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PascalFamily {
    /// `a[i][0] = rho^i`, `a[0][j] = sigma^j`.
    T1,
    /// `a[0][0] = 0`, `a[i][0] = rho^(i-1)`, `a[0][j] = -rho^(j-1)`.
    T2,
    /// `a[i][0] = i`, `a[0][j] = -j`.
    T3,
}

impl RecurrenceSpec {
    pub fn new(
        horizontal: MPoly,
        vertical: MPoly,
        diagonal: MPoly,
        row_boundary: BoundaryFn,
        col_boundary: BoundaryFn,
        corner: Option<MPoly>,
    ) -> Result<Self, RecError> {
        let corner = match corner {
            Some(c) => c,
            None => {
                let (r, c) = (row_boundary(0), col_boundary(0));
                if r != c {
                    return Err(RecError::InconsistentCorner {
                        row: r.to_string(),
                        col: c.to_string(),
                    });
                }
                r
            }
        };
        Ok(RecurrenceSpec {
            horizontal,
            vertical,
            diagonal,
            row_boundary,
            col_boundary,
            corner,
        })
    }

    pub fn pascal(family: PascalFamily) -> Self {
        let rho = MPoly::var(Var::Rho);
        let (row, col): (BoundaryFn, BoundaryFn) = match family {
            PascalFamily::T1 => {
                let sigma = MPoly::var(Var::Sigma);
                let r = rho.clone();
                (
                    Arc::new(move |i| r.pow(i as u32)),
                    Arc::new(move |j| sigma.pow(j as u32)),
                )
            }
            PascalFamily::T2 => {
                let r = rho.clone();
                (
                    Arc::new(move |i| if i == 0 { MPoly::zero() } else { r.pow(i as u32 - 1) }),
                    Arc::new(move |j| if j == 0 { MPoly::zero() } else { -rho.pow(j as u32 - 1) }),
                )
            }
            PascalFamily::T3 => (
                Arc::new(|i| MPoly::int(i as i64)),
                Arc::new(|j| MPoly::int(-(j as i64))),
            ),
        };
        RecurrenceSpec::new(MPoly::one(), MPoly::one(), MPoly::var(Var::X), row, col, None)
            .expect("pascal boundaries agree at the corner")
    }
}

/// Fills the `rows x cols` window of the recurrence table.
pub fn build_table(spec: &RecurrenceSpec, rows: usize, cols: usize) -> RingMatrix {
    let mut m = RingMatrix::from_fn(rows, cols, |_, _| MPoly::zero());
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = match (i, j) {
                (0, 0) => spec.corner.clone(),
                (_, 0) => (spec.row_boundary)(i),
                (0, _) => (spec.col_boundary)(j),
                _ => {
                    let mut acc = &spec.horizontal * &m[(i - 1, j)];
                    acc += &(&spec.vertical * &m[(i, j - 1)]);
                    acc += &(&spec.diagonal * &m[(i - 1, j - 1)]);
                    acc
                }
            };
        }
    }
    m
}

pub fn pascal_table(family: PascalFamily, size: usize) -> RingMatrix {
    build_table(&RecurrenceSpec::pascal(family), size, size)
}

/// Closed form of the `T3` table entries:
/// `sum_l (C(i,l+1) C(j,l) - C(i,l) C(j,l+1)) (x+1)^l`.
pub fn entry_thm3_closed(i: usize, j: usize) -> MPoly {
    let (i, j) = (i as i64, j as i64);
    let x1 = MPoly::var_plus(Var::X, 1);
    let mut acc = MPoly::zero();
    for l in 0..=i.max(j) {
        let c = binom_int(i, l + 1) * binom_int(j, l) - binom_int(i, l) * binom_int(j, l + 1);
        if c != 0.into() {
            acc += &x1.pow(l as u32).scale(&Rational::from_integer(c));
        }
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinomialFamily {
    /// `C(2i+2j+a, i) - C(2i+2j+a, i-1)`
    Thm4,
    /// `C(2i+2j+a, i+1) - C(2i+2j+a, i)`
    Thm5,
}

/// Whether the parameter `a` stays symbolic or is fixed to an integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AMode {
    Symbolic,
    Int(i64),
}

impl AMode {
    pub fn value(self) -> MPoly {
        match self {
            AMode::Symbolic => MPoly::var(Var::A),
            AMode::Int(k) => MPoly::int(k),
        }
    }
}

pub fn build_binomial_matrix(n: usize, family: BinomialFamily, a_mode: AMode) -> RingMatrix {
    let a = a_mode.value();
    RingMatrix::from_fn(n, n, |i, j| {
        let top = &a + &MPoly::int(2 * (i + j) as i64);
        let i = i as i64;
        match family {
            BinomialFamily::Thm4 => binom_poly(&top, i) - binom_poly(&top, i - 1),
            BinomialFamily::Thm5 => binom_poly(&top, i + 1) - binom_poly(&top, i),
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Thm6Mode {
    /// `(i-j) (X+i+1)_j (Y+i+j+1)_{2n-j-1}`, symbolic in `X`, `Y`.
    Prefactored,
    /// `(i-j) (X+i+j)! / (Y+i+j)!` at a nonnegative integer point.
    Factorial { x: u64, y: u64 },
}

/// The `2n x 2n` matrix of the factorial-ratio family.
pub fn build_thm6_matrix(n: usize, mode: Thm6Mode) -> RingMatrix {
    let dim = 2 * n;
    match mode {
        Thm6Mode::Prefactored => RingMatrix::from_fn(dim, dim, |i, j| thm6_prefactored_entry(n, i, j)),
        Thm6Mode::Factorial { x, y } => RingMatrix::from_fn(dim, dim, |i, j| {
            let s = (i + j) as u64;
            let diff = rat(i as i64 - j as i64);
            MPoly::constant(diff * factorial_ratio(x + s, y + s))
        }),
    }
}

pub fn thm6_prefactored_entry(n: usize, i: usize, j: usize) -> MPoly {
    if i == j {
        return MPoly::zero();
    }
    let xs = MPoly::var_plus(Var::BigX, i as i64 + 1);
    let ys = MPoly::var_plus(Var::BigY, (i + j) as i64 + 1);
    let p = &pochhammer_poly(&xs, j as u32) * &pochhammer_poly(&ys, (2 * n - j - 1) as u32);
    p.scale(&rat(i as i64 - j as i64))
}

/// Generating function of a recurrence table as `numerator / denominator`,
/// with the boundary factors cleared into the denominator.
pub fn genfun_parts(family: PascalFamily) -> (MPoly, MPoly) {
    let one = MPoly::one();
    let (u, v) = (MPoly::var(Var::U), MPoly::var(Var::V));
    let (x, rho, sigma) = (MPoly::var(Var::X), MPoly::var(Var::Rho), MPoly::var(Var::Sigma));
    let kernel = &(&(&one - &u) - &v) - &(&(&u * &v) * &x);
    match family {
        PascalFamily::T1 => {
            let ru = &one - &(&rho * &u);
            let sv = &one - &(&sigma * &v);
            let num = &(&(&(&one - &u) * &sv) + &(&(&one - &v) * &ru)) - &(&ru * &sv);
            (num, &(&kernel * &ru) * &sv)
        }
        PascalFamily::T2 => {
            let num = &(&(&(&one - &u) - &v) + &(&(&rho * &u) * &v)) * &(&u - &v);
            let den = &(&kernel * &(&one - &(&rho * &u))) * &(&one - &(&rho * &v));
            (num, den)
        }
        PascalFamily::T3 => (&u - &v, &(&kernel * &(&one - &u)) * &(&one - &v)),
    }
}

/// Checks `den * F = num` on the `(order+1)^2` window, with `F` read off
/// the recurrence table.
pub fn genfun_check(family: PascalFamily, order: usize) -> bool {
    genfun_matched(family, order) == (order + 1) * (order + 1)
}

/// Number of window coefficients on which `den * F` and `num` agree.
pub fn genfun_matched(family: PascalFamily, order: usize) -> usize {
    let table = pascal_table(family, order + 1);
    let f = Series2D::from_fn(order, |i, j| table[(i, j)].clone());
    let (num, den) = genfun_parts(family);
    let lhs = Series2D::from_poly(&den, order).mul(&f);
    let rhs = Series2D::from_poly(&num, order);
    (0..=order)
        .flat_map(|i| (0..=order).map(move |j| (i, j)))
        .filter(|&(i, j)| lhs.coeff(i, j) == rhs.coeff(i, j))
        .count()
}
