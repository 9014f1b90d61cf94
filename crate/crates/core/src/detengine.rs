//! Exact determinants of polynomial matrices.
//!
//! [`det_bareiss`] is the production engine. [`det_condensation`] and
//! [`det_cofactor`] are independently coded cross-checks.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{AlgError, MPoly};
use crate::matrix::RingMatrix;

pub const COFACTOR_MAX_DIM: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetError {
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension {0} exceeds the cofactor limit of {COFACTOR_MAX_DIM}")]
    DimensionTooLarge(usize),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Bareiss,
    Condensation,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Bareiss => "bareiss",
            Engine::Condensation => "condensation",
        }
    }

    pub fn det(self, m: &RingMatrix) -> Result<MPoly, DetError> {
        match self {
            Engine::Bareiss => det_bareiss(m),
            Engine::Condensation => det_condensation(m),
        }
    }
}

fn ensure_square(m: &RingMatrix) -> Result<usize, DetError> {
    if m.is_square() {
        Ok(m.rows())
    } else {
        Err(DetError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

/// Laplace expansion along the first row.
pub fn det_cofactor(m: &RingMatrix) -> Result<MPoly, DetError> {
    let n = ensure_square(m)?;
    if n > COFACTOR_MAX_DIM {
        return Err(DetError::DimensionTooLarge(n));
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(laplace(m, 0, &cols))
}

fn laplace(m: &RingMatrix, row: usize, cols: &[usize]) -> MPoly {
    if cols.is_empty() {
        return MPoly::one();
    }
    let mut acc = MPoly::zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[(row, c)];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&cc| cc != c).collect();
        let term = entry * &laplace(m, row + 1, &rest);
        if k % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// Fraction-free Gaussian elimination. Zero pivots are handled by swapping
/// in the first lower row with a nonzero entry in the pivot column.
pub fn det_bareiss(m: &RingMatrix) -> Result<MPoly, DetError> {
    let n = ensure_square(m)?;
    if n == 0 {
        return Ok(MPoly::one());
    }
    let mut rows: Vec<Vec<MPoly>> = m.clone().into_rows();
    let mut negate = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if rows[k][k].is_zero() {
            match (k + 1..n).find(|&r| !rows[r][k].is_zero()) {
                Some(r) => {
                    rows.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(MPoly::zero()),
            }
        }
        let (head, tail) = rows.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        tail.par_iter_mut().try_for_each(|row| -> Result<(), AlgError> {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let mut val = pivot * &row[j];
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    val -= &(&lead * &pivot_row[j]);
                }
                row[j] = val.exact_div(&prev)?;
            }
            Ok(())
        })?;
        prev = rows[k][k].clone();
    }
    let det = rows[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Dodgson condensation over contiguous minors. A zero interior divisor
/// triggers a Bareiss evaluation of the affected block.
pub fn det_condensation(m: &RingMatrix) -> Result<MPoly, DetError> {
    let n = ensure_square(m)?;
    if n == 0 {
        return Ok(MPoly::one());
    }
    // Level k holds the k x k contiguous minors, indexed by top-left corner.
    let mut prev: Option<RingMatrix> = None;
    let mut cur = m.clone();
    for k in 1..n {
        let size = n - k;
        let cells: Vec<(usize, usize)> = (0..size).flat_map(|i| (0..size).map(move |j| (i, j))).collect();
        let values: Vec<MPoly> = cells
            .par_iter()
            .map(|&(i, j)| -> Result<MPoly, DetError> {
                let cross = &(&cur[(i, j)] * &cur[(i + 1, j + 1)]) - &(&cur[(i, j + 1)] * &cur[(i + 1, j)]);
                match &prev {
                    None => Ok(cross),
                    Some(p) => {
                        let div = &p[(i + 1, j + 1)];
                        if div.is_zero() {
                            det_bareiss(&m.block(i, j, k + 1))
                        } else {
                            Ok(cross.exact_div(div)?)
                        }
                    }
                }
            })
            .collect::<Result<_, _>>()?;
        let mut it = values.into_iter();
        let next = RingMatrix::from_fn(size, size, |_, _| it.next().unwrap());
        prev = Some(std::mem::replace(&mut cur, next));
    }
    Ok(cur[(0, 0)].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Var;

    #[test]
    fn cofactor_examples() {
        assert_eq!(
            det_cofactor(&RingMatrix::from_ints(&[vec![0, -1], vec![1, 0]])).unwrap(),
            MPoly::one()
        );
        assert_eq!(
            det_cofactor(&RingMatrix::from_ints(&[vec![2, 3], vec![4, 5]])).unwrap(),
            MPoly::int(-2)
        );
        let (x, rho, sigma) = (MPoly::var(Var::X), MPoly::var(Var::Rho), MPoly::var(Var::Sigma));
        let m = RingMatrix::from_rows(vec![
            vec![MPoly::one(), sigma.clone()],
            vec![rho.clone(), &(&rho + &sigma) + &x],
        ])
        .unwrap();
        let expect = &(&(&x + &rho) + &sigma) - &(&rho * &sigma);
        assert_eq!(det_cofactor(&m).unwrap(), expect);
        assert_eq!(det_bareiss(&m).unwrap(), expect);
        assert_eq!(det_condensation(&m).unwrap(), expect);
    }

    #[test]
    fn errors() {
        let rect = RingMatrix::from_ints(&[vec![1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(det_bareiss(&rect), Err(DetError::NotSquare { rows: 2, cols: 3 }));
        assert!(matches!(det_condensation(&rect), Err(DetError::NotSquare { .. })));
        let big = RingMatrix::identity(8);
        assert_eq!(det_cofactor(&big), Err(DetError::DimensionTooLarge(8)));
    }

    #[test]
    fn identity_and_trivial() {
        assert_eq!(det_bareiss(&RingMatrix::identity(5)).unwrap(), MPoly::one());
        assert_eq!(det_condensation(&RingMatrix::identity(5)).unwrap(), MPoly::one());
        assert_eq!(
            det_condensation(&RingMatrix::from_ints(&[vec![1, 2], vec![3, 4]])).unwrap(),
            MPoly::int(-2)
        );
        assert_eq!(det_bareiss(&RingMatrix::identity(0)).unwrap(), MPoly::one());
    }

    #[test]
    fn condensation_fallback() {
        let m = RingMatrix::from_ints(&[vec![1, 0, 1], vec![0, 0, 0], vec![1, 0, 1]]);
        assert!(det_condensation(&m).unwrap().is_zero());
        // zero centre but nonzero determinant
        let m = RingMatrix::from_ints(&[vec![1, 2, 3], vec![4, 0, 6], vec![7, 8, 10]]);
        assert_eq!(det_condensation(&m).unwrap(), det_cofactor(&m).unwrap());
    }

    #[test]
    fn bareiss_pivot_swap() {
        let m = RingMatrix::from_ints(&[vec![0, 1, 2], vec![0, 3, 4], vec![5, 6, 7]]);
        assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m).unwrap());
        let m = RingMatrix::from_ints(&[vec![0, 1], vec![0, 3]]);
        assert!(det_bareiss(&m).unwrap().is_zero());
    }
}
