//! Truncated bivariate power series in `u`, `v` with polynomial coefficients.

use thiserror::Error;

use crate::exactalg::{MPoly, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term of the denominator is not a nonzero rational")]
    NonInvertibleConstantTerm,
    #[error("coefficient ({i}, {j}) lies outside the truncation window of order {order}")]
    OutOfWindow { i: usize, j: usize, order: usize },
}

/// Series `sum c_{i,j} u^i v^j` with `0 <= i, j <= order`.
#[derive(Clone, PartialEq, Debug)]
pub struct Series2D {
    order: usize,
    coeffs: Vec<MPoly>,
}

impl Series2D {
    pub fn zero(order: usize) -> Self {
        Series2D {
            order,
            coeffs: vec![MPoly::zero(); (order + 1) * (order + 1)],
        }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> MPoly) -> Self {
        let mut s = Series2D::zero(order);
        for i in 0..=order {
            for j in 0..=order {
                s.coeffs[i * (order + 1) + j] = f(i, j);
            }
        }
        s
    }

    /// Truncates a polynomial in `u`, `v` to the window.
    pub fn from_poly(p: &MPoly, order: usize) -> Self {
        let mut s = Series2D::zero(order);
        for ((i, j), c) in p.split2(Var::U, Var::V) {
            let (i, j) = (i as usize, j as usize);
            if i <= order && j <= order {
                *s.at_mut(i, j) = c;
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn at(&self, i: usize, j: usize) -> &MPoly {
        &self.coeffs[i * (self.order + 1) + j]
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut MPoly {
        &mut self.coeffs[i * (self.order + 1) + j]
    }

    pub fn coeff(&self, i: usize, j: usize) -> Result<&MPoly, SeriesError> {
        if i > self.order || j > self.order {
            return Err(SeriesError::OutOfWindow {
                i,
                j,
                order: self.order,
            });
        }
        Ok(self.at(i, j))
    }

    /// Truncated product. Both operands must share the same order.
    pub fn mul(&self, other: &Series2D) -> Series2D {
        assert_eq!(self.order, other.order, "series orders differ");
        let d = self.order;
        let mut out = Series2D::zero(d);
        for i1 in 0..=d {
            for j1 in 0..=d {
                let a = self.at(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=d - i1 {
                    for j2 in 0..=d - j1 {
                        let b = other.at(i2, j2);
                        if !b.is_zero() {
                            *out.at_mut(i1 + i2, j1 + j2) += &(a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Applies a substitution to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&MPoly) -> MPoly) -> Series2D {
        Series2D {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

/// Expands `num / den` as a power series in `u`, `v`. The `u^0 v^0`
/// coefficient of `den` must be a nonzero rational constant.
pub fn series_from_ratfunc(num: &MPoly, den: &MPoly, order: usize) -> Result<Series2D, SeriesError> {
    let d = Series2D::from_poly(den, order);
    let c0 = d
        .at(0, 0)
        .constant_value()
        .filter(|c| !num_traits::Zero::is_zero(c))
        .ok_or(SeriesError::NonInvertibleConstantTerm)?;
    let inv = c0.recip();
    let n = Series2D::from_poly(num, order);
    let mut s = Series2D::zero(order);
    for i in 0..=order {
        for j in 0..=order {
            let mut acc = n.at(i, j).clone();
            for k in 0..=i {
                for l in 0..=j {
                    if (k, l) == (0, 0) {
                        continue;
                    }
                    let dk = d.at(k, l);
                    if !dk.is_zero() {
                        acc -= &(dk * s.at(i - k, j - l));
                    }
                }
            }
            *s.at_mut(i, j) = acc.scale(&inv);
        }
    }
    Ok(s)
}

pub fn series_coeff(s: &Series2D, i: usize, j: usize) -> Result<MPoly, SeriesError> {
    s.coeff(i, j).cloned()
}
