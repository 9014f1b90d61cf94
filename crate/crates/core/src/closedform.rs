//! Closed-form right-hand sides of the six determinant evaluations and the
//! end-to-end check `det(matrix) == closed form`.

use std::fmt;
use std::time::Instant;

use crate::detengine::{DetError, Engine};
use crate::exactalg::{factorial, factorial_ratio, rat, MPoly, Rational, Var};
use crate::matrix::RingMatrix;
use crate::recmatrix::{
    build_binomial_matrix, build_thm6_matrix, pascal_table, AMode, BinomialFamily, PascalFamily, Thm6Mode,
};
use crate::report::{elapsed_millis, Report};

/// One instance of a determinant evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremCase {
    /// `det (a_{i,j})_{0<=i,j<n}` for the `rho^i` / `sigma^j` table.
    T1 {
        n: usize,
    },
    /// `2n x 2n` skew table with `rho^(i-1)` boundaries.
    T2 {
        n: usize,
    },
    /// `2n x 2n` skew table with boundaries `i`, `-j`.
    T3 {
        n: usize,
    },
    T4 {
        n: usize,
        a: AMode,
    },
    T5 {
        n: usize,
        a: AMode,
    },
    T6Prefactored {
        n: usize,
    },
    T6Factorial {
        n: usize,
        x: u64,
        y: u64,
    },
}

impl TheoremCase {
    pub fn n(&self) -> usize {
        match *self {
            TheoremCase::T1 { n }
            | TheoremCase::T2 { n }
            | TheoremCase::T3 { n }
            | TheoremCase::T4 { n, .. }
            | TheoremCase::T5 { n, .. }
            | TheoremCase::T6Prefactored { n }
            | TheoremCase::T6Factorial { n, .. } => n,
        }
    }

    pub fn matrix(&self) -> RingMatrix {
        match *self {
            TheoremCase::T1 { n } => pascal_table(PascalFamily::T1, n),
            TheoremCase::T2 { n } => pascal_table(PascalFamily::T2, 2 * n),
            TheoremCase::T3 { n } => pascal_table(PascalFamily::T3, 2 * n),
            TheoremCase::T4 { n, a } => build_binomial_matrix(n, BinomialFamily::Thm4, a),
            TheoremCase::T5 { n, a } => build_binomial_matrix(n, BinomialFamily::Thm5, a),
            TheoremCase::T6Prefactored { n } => build_thm6_matrix(n, Thm6Mode::Prefactored),
            TheoremCase::T6Factorial { n, x, y } => build_thm6_matrix(n, Thm6Mode::Factorial { x, y }),
        }
    }
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TheoremCase::T1 { .. } => f.write_str("T1"),
            TheoremCase::T2 { .. } => f.write_str("T2"),
            TheoremCase::T3 { .. } => f.write_str("T3"),
            TheoremCase::T4 { a: AMode::Symbolic, .. } => f.write_str("T4"),
            TheoremCase::T4 { a: AMode::Int(k), .. } => write!(f, "T4[a={k}]"),
            TheoremCase::T5 { a: AMode::Symbolic, .. } => f.write_str("T5"),
            TheoremCase::T5 { a: AMode::Int(k), .. } => write!(f, "T5[a={k}]"),
            TheoremCase::T6Prefactored { .. } => f.write_str("T6_prefactored"),
            TheoremCase::T6Factorial { x, y, .. } => write!(f, "T6_factorial[X={x},Y={y}]"),
        }
    }
}

fn binom2(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// `prod_{a<n} (2a+1)!^2 (X+2a+1) (Y+4n-2a-2) (X-Y-2a)^(2n-2a-2) (X-Y-2a-1)^(2n-2a-2)`,
/// the value of the prefactored `2n x 2n` determinant.
pub fn thm6_prefactored_rhs(n: usize) -> MPoly {
    let (bx, by) = (MPoly::var(Var::BigX), MPoly::var(Var::BigY));
    let diff = &bx - &by;
    let n = n as i64;
    let mut acc = MPoly::one();
    for a in 0..n {
        let f = Rational::from_integer(factorial((2 * a + 1) as u64));
        let e = (2 * n - 2 * a - 2) as u32;
        acc = acc.scale(&(&f * &f));
        acc = &acc * &MPoly::var_plus(Var::BigX, 2 * a + 1);
        acc = &acc * &MPoly::var_plus(Var::BigY, 4 * n - 2 * a - 2);
        acc = &acc * &(&diff - &MPoly::int(2 * a)).pow(e);
        acc = &acc * &(&diff - &MPoly::int(2 * a + 1)).pow(e);
    }
    acc
}

/// `prod_{i<2n} (X+i)! / (Y+i+2n-1)!`, the row factors pulled out of the
/// factorial matrix.
pub fn thm6_row_factor(n: usize, x: u64, y: u64) -> Rational {
    let n = n as u64;
    (0..2 * n).fold(Rational::from_i64(1), |acc, i| {
        acc * factorial_ratio(x + i, y + i + 2 * n - 1)
    })
}

pub fn rhs(case: &TheoremCase) -> MPoly {
    let one_x = MPoly::var_plus(Var::X, 1);
    let (x, rho, sigma) = (MPoly::var(Var::X), MPoly::var(Var::Rho), MPoly::var(Var::Sigma));
    match *case {
        TheoremCase::T1 { n } => {
            let lin = &(&(&x + &rho) + &sigma) - &(&rho * &sigma);
            &one_x.pow(binom2(n.saturating_sub(1))) * &lin.pow(n.saturating_sub(1) as u32)
        }
        TheoremCase::T2 { n } => {
            let m = n.saturating_sub(1) as u32;
            &one_x.pow(2 * m * m) * &(&x + &rho).pow(2 * m)
        }
        TheoremCase::T3 { n } => one_x.pow((2 * n * n.saturating_sub(1)) as u32),
        TheoremCase::T4 { n, .. } => MPoly::int(2).pow(binom2(n)),
        TheoremCase::T5 { n, a } => {
            let a = a.value();
            let prod = (0..n as i64).fold(MPoly::one(), |acc, i| &acc * &(&a + &MPoly::int(2 * i - 1)));
            let scale = &rat(2).pow(binom2(n)) / &Rational::from_integer(factorial(n as u64));
            prod.scale(&scale)
        }
        TheoremCase::T6Prefactored { n } => thm6_prefactored_rhs(n),
        TheoremCase::T6Factorial { n, x, y } => {
            let point = [(Var::BigX, MPoly::int(x as i64)), (Var::BigY, MPoly::int(y as i64))];
            thm6_prefactored_rhs(n)
                .subst(&point)
                .expect("distinct bindings")
                .scale(&thm6_row_factor(n, x, y))
        }
    }
}

/// Determinant and closed form, both as polynomials.
pub fn evaluate(case: &TheoremCase, engine: Engine) -> Result<(MPoly, MPoly), DetError> {
    let lhs = engine.det(&case.matrix())?;
    Ok((lhs, rhs(case)))
}

pub fn verify_theorem(case: &TheoremCase, engine: Engine) -> Report {
    let start = Instant::now();
    let label = case.to_string();
    if case.n() == 0 {
        return Report::error(label, 0, engine.name(), "n must be at least 1".into(), 0);
    }
    match evaluate(case, engine) {
        Ok((lhs, rhs)) => Report::compare(
            label,
            case.n(),
            engine.name(),
            lhs.to_string(),
            rhs.to_string(),
            lhs == rhs,
            elapsed_millis(start),
        ),
        Err(e) => Report::error(label, case.n(), engine.name(), e.to_string(), elapsed_millis(start)),
    }
}
