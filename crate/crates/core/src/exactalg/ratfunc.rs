//! Unreduced rational functions compared by cross-multiplication.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::poly::{AlgError, MPoly, Var};

/// Unreduced quotient of polynomials. Constant denominators are folded
/// into the numerator; nothing else is normalized.
#[derive(Clone)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self, AlgError> {
        if den.is_zero() {
            return Err(AlgError::ZeroDenominator);
        }
        Ok(RatFunc::normalized(num, den))
    }

    fn normalized(num: MPoly, den: MPoly) -> Self {
        if num.is_zero() {
            return RatFunc::from_poly(MPoly::zero());
        }
        match den.constant_value() {
            Some(c) if c.is_one() => RatFunc { num, den },
            Some(c) => RatFunc {
                num: num.scale(&c.recip()),
                den: MPoly::one(),
            },
            None => RatFunc { num, den },
        }
    }

    pub fn from_poly(p: MPoly) -> Self {
        RatFunc {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value when the denominator divides the numerator.
    pub fn to_poly(&self) -> Option<MPoly> {
        self.num.exact_div(&self.den).ok()
    }

    pub fn recip(&self) -> Result<RatFunc, AlgError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn subst(&self, bindings: &[(Var, MPoly)]) -> Result<RatFunc, AlgError> {
        RatFunc::new(self.num.subst(bindings)?, self.den.subst(bindings)?)
    }
}

/// Cross-multiplication equality.
pub fn ratfunc_eq(f: &RatFunc, g: &RatFunc) -> bool {
    &f.num * &g.den == &g.num * &f.den
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        ratfunc_eq(self, other)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl From<MPoly> for RatFunc {
    fn from(p: MPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalized(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::from_poly(MPoly::zero());
        }
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MPoly {
        MPoly::var(Var::X)
    }
    fn rho() -> MPoly {
        MPoly::var(Var::Rho)
    }

    #[test]
    fn ratfunc_equality() {
        let x1 = MPoly::var_plus(Var::X, -1);
        let f = RatFunc::new(x().pow(2) - MPoly::one(), x1).unwrap();
        assert!(ratfunc_eq(&f, &RatFunc::from_poly(MPoly::var_plus(Var::X, 1))));
        let g = RatFunc::new(rho(), x()).unwrap();
        let h = RatFunc::new(&rho() * &x(), x().pow(2)).unwrap();
        assert!(ratfunc_eq(&g, &h));
        let p = RatFunc::new(MPoly::one(), x()).unwrap();
        let q = RatFunc::new(MPoly::one(), MPoly::var_plus(Var::X, 1)).unwrap();
        assert!(!ratfunc_eq(&p, &q));
        assert!(RatFunc::new(x(), MPoly::zero()).is_err());
    }

    #[test]
    fn arithmetic() {
        let f = RatFunc::new(MPoly::one(), x()).unwrap();
        let g = RatFunc::new(MPoly::one(), rho()).unwrap();
        let sum = &f + &g;
        assert!(ratfunc_eq(&sum, &RatFunc::new(&x() + &rho(), &x() * &rho()).unwrap()));
        assert!((&f - &f).is_zero());
        let prod = &f * &RatFunc::from_poly(x());
        assert_eq!(prod.to_poly(), Some(MPoly::one()));
        assert!(ratfunc_eq(&f.recip().unwrap(), &RatFunc::from_poly(x())));
    }
}
