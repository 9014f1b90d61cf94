//! Sparse multivariate polynomials over a fixed variable alphabet.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_integer::Integer as _;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use thiserror::Error;

use super::ratfunc::RatFunc;
use super::rational::{Integer, Rational};

pub const NUM_VARS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` bound more than once")]
    DuplicateBinding(Var),
    #[error("rational function with zero denominator")]
    ZeroDenominator,
}

/// The fixed variable alphabet, in monomial-order priority.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// `x`
    X,
    /// `rho`
    Rho,
    /// `sigma`
    Sigma,
    /// `a`
    A,
    /// `X`
    BigX,
    /// `Y`
    BigY,
    /// `u`
    U,
    /// `v`
    V,
    /// `t`
    T,
    /// `W`
    W,
}

impl Var {
    pub const ALL: [Var; NUM_VARS] = [
        Var::X,
        Var::Rho,
        Var::Sigma,
        Var::A,
        Var::BigX,
        Var::BigY,
        Var::U,
        Var::V,
        Var::T,
        Var::W,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Rho => "rho",
            Var::Sigma => "sigma",
            Var::A => "a",
            Var::BigX => "X",
            Var::BigY => "Y",
            Var::U => "u",
            Var::V => "v",
            Var::T => "t",
            Var::W => "W",
        }
    }

    pub fn from_name(name: &str) -> Result<Var, AlgError> {
        Var::ALL
            .iter()
            .copied()
            .find(|v| v.name() == name)
            .ok_or_else(|| AlgError::UnknownVariable(name.to_string()))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector. Slot 0 holds the total degree, so the derived
/// lexicographic `Ord` is graded lexicographic order over the alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial([u16; NUM_VARS + 1]);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var_pow(var: Var, e: u16) -> Self {
        let mut m = Monomial::default();
        m.0[0] = e;
        m.0[var.index() + 1] = e;
        m
    }

    pub fn from_exponents(exps: &[u16; NUM_VARS]) -> Self {
        let mut m = Monomial::default();
        m.0[1..].copy_from_slice(exps);
        m.0[0] = exps.iter().sum();
        m
    }

    pub fn exponent(&self, var: Var) -> u16 {
        self.0[var.index() + 1]
    }

    pub fn total_degree(&self) -> u16 {
        self.0[0]
    }

    pub fn is_one(&self) -> bool {
        self.0[0] == 0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; NUM_VARS + 1];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *o = a.checked_add(*b).expect("monomial exponent overflow");
        }
        Monomial(out)
    }

    fn divide(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = [0u16; NUM_VARS + 1];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *o = a.checked_sub(*b)?;
        }
        Some(Monomial(out))
    }

    fn with_exponent(&self, var: Var, e: u16) -> Monomial {
        let mut m = *self;
        let old = m.0[var.index() + 1];
        m.0[0] = m.0[0] - old + e;
        m.0[var.index() + 1] = e;
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_monomial(self).unwrap_or_else(|| "1".into()))
    }
}

fn render_monomial(m: &Monomial) -> Option<String> {
    let parts: Vec<String> = Var::ALL
        .iter()
        .filter_map(|&v| match m.exponent(v) {
            0 => None,
            1 => Some(v.name().to_string()),
            e => Some(format!("{}^{}", v.name(), e)),
        })
        .collect();
    if parts.is_empty() {
        None
    } else {
        Some(parts.join("*"))
    }
}

/// Degree of a polynomial in one variable; the zero polynomial has degree
/// minus infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

pub fn rat(n: i64) -> Rational {
    Rational::from_i64(n)
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn int(n: i64) -> Self {
        MPoly::constant(rat(n))
    }

    pub fn var(v: Var) -> Self {
        MPoly::term(Rational::one(), Monomial::var_pow(v, 1))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = MPoly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// `v + c`, a frequent building block.
    pub fn var_plus(v: Var, c: i64) -> Self {
        MPoly::var(v) + MPoly::int(c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    /// Iterates terms in descending graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &Rational) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(mm, k)| (mm.mul(m), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient `self / q`; fails if `q` does not divide `self`.
    pub fn exact_div(&self, q: &MPoly) -> Result<MPoly, AlgError> {
        if q.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        if let Some(c) = q.constant_value() {
            return Ok(self.scale(&c.recip()));
        }
        let (lm, lc) = q.leading_term().unwrap();
        let lc_inv = lc.recip();
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let Some(m) = rm.divide(lm) else {
                return Err(AlgError::NotDivisible);
            };
            let c = rc * &lc_inv;
            for (qm, qc) in &q.terms {
                rem.add_term(qm.mul(&m), -(qc * &c));
            }
            quot.add_term(m, c);
        }
        Ok(quot)
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn subst(&self, bindings: &[(Var, MPoly)]) -> Result<MPoly, AlgError> {
        for (i, (v, _)) in bindings.iter().enumerate() {
            if bindings[..i].iter().any(|(w, _)| w == v) {
                return Err(AlgError::DuplicateBinding(*v));
            }
        }
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        // Cached powers of each bound value, grown on demand.
        let mut powers: Vec<Vec<MPoly>> = bindings.iter().map(|_| vec![MPoly::one()]).collect();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut factor = MPoly::constant(c.clone());
            for (k, (v, val)) in bindings.iter().enumerate() {
                let e = m.exponent(*v) as usize;
                if e == 0 {
                    continue;
                }
                rest = rest.with_exponent(*v, 0);
                while powers[k].len() <= e {
                    let next = powers[k].last().unwrap() * val;
                    powers[k].push(next);
                }
                factor = &factor * &powers[k][e];
            }
            out += &factor.mul_term(&rest, &Rational::one());
        }
        Ok(out)
    }

    /// Substitutes a single variable.
    pub fn subst1(&self, var: Var, value: &MPoly) -> MPoly {
        self.subst(&[(var, value.clone())]).expect("single binding")
    }

    pub fn degree(&self, var: Var) -> Degree {
        self.terms
            .keys()
            .map(|m| m.exponent(var) as u32)
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|m| m.total_degree() as u32)
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    /// Smallest exponent of `var` over all terms; `None` for the zero polynomial.
    pub fn valuation(&self, var: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(var) as u32).min()
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coeff_in(&self, var: Var, k: u16) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(var) == k)
                .map(|(m, c)| (m.with_exponent(var, 0), c.clone()))
                .collect(),
        }
    }

    /// Splits the polynomial by the exponents of two variables:
    /// `self = sum_{(i,j)} out[(i,j)] * var1^i * var2^j`.
    pub fn split2(&self, var1: Var, var2: Var) -> BTreeMap<(u16, u16), MPoly> {
        let mut out: BTreeMap<(u16, u16), MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = (m.exponent(var1), m.exponent(var2));
            let rest = m.with_exponent(var1, 0).with_exponent(var2, 0);
            out.entry(key).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .iter()
            .copied()
            .filter(|&v| self.terms.keys().any(|m| m.exponent(v) > 0))
            .collect()
    }

    /// Evaluates at a full rational point; unbound variables are an error.
    pub fn eval(&self, point: &[(Var, Rational)]) -> Result<Rational, AlgError> {
        let bindings: Vec<(Var, MPoly)> = point.iter().map(|(v, r)| (*v, MPoly::constant(r.clone()))).collect();
        let p = self.subst(&bindings)?;
        p.constant_value().ok_or_else(|| {
            AlgError::UnknownVariable(p.variables().iter().map(|v| v.name()).collect::<Vec<_>>().join(","))
        })
    }
}

pub fn render_rational(c: &Rational) -> String {
    c.to_string()
}

/// Canonical rendering: descending graded-lex order, `p/q` coefficients.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match render_monomial(m) {
                None => f.write_str(&render_rational(&abs))?,
                Some(mono) if abs.is_one() => f.write_str(&mono)?,
                Some(mono) => write!(f, "{}*{}", render_rational(&abs), mono)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl From<i64> for MPoly {
    fn from(n: i64) -> Self {
        MPoly::int(n)
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

impl From<Rational> for MPoly {
    fn from(c: Rational) -> Self {
        MPoly::constant(c)
    }
}

impl<'a> AddAssign<&'a MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &'a MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &'a MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        big += small;
        big
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        let (outer, inner) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        acc.reserve(outer.terms.len() * inner.terms.len());
        for (m1, c1) in &outer.terms {
            for (m2, c2) in &inner.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(slot) => *slot += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        MPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(mut self) -> MPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &'a MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<MPoly> for &'a MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Generalized binomial coefficient `C(p, k)` as a polynomial; zero for `k < 0`.
pub fn binom_poly(p: &MPoly, k: i64) -> MPoly {
    if k < 0 {
        return MPoly::zero();
    }
    let mut acc = MPoly::one();
    let mut fact = Integer::one();
    for t in 0..k {
        acc = &acc * &(p - &MPoly::int(t));
        fact *= Integer::from(t + 1);
    }
    acc.scale(&Rational::new(Integer::one(), fact))
}

/// Rising factorial `(p)_m = p (p+1) ... (p+m-1)`.
pub fn pochhammer_poly(p: &MPoly, m: u32) -> MPoly {
    (0..m as i64).fold(MPoly::one(), |acc, t| &acc * &(p + &MPoly::int(t)))
}

/// Integer binomial coefficient with `C(n, k) = 0` for `k < 0` and the
/// polynomial extension for negative `n`.
pub fn binom_int(n: i64, k: i64) -> Integer {
    if k < 0 {
        return Integer::zero();
    }
    if n >= 0 && k > n {
        return Integer::zero();
    }
    let mut num = Integer::one();
    let mut den = Integer::one();
    for t in 0..k {
        num *= Integer::from(n - t);
        den *= Integer::from(t + 1);
    }
    num.div_floor(&den)
}

/// Rational Pochhammer symbol `(r)_m`.
pub fn pochhammer_rat(r: &Rational, m: u32) -> Rational {
    let mut acc = Rational::one();
    let mut cur = r.clone();
    for _ in 0..m {
        acc *= &cur;
        cur += Rational::one();
    }
    acc
}

/// `p! / q!` for nonnegative integers, as a product of the shorter range.
pub fn factorial_ratio(p: u64, q: u64) -> Rational {
    let range = |lo: u64, hi: u64| -> Integer { (lo + 1..=hi).fold(Integer::one(), |acc, k| acc * Integer::from(k)) };
    if p >= q {
        Rational::from_integer(range(q, p))
    } else {
        Rational::new(Integer::one(), range(p, q))
    }
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, k| acc * Integer::from(k))
}

/// Minimal ring interface shared by matrix entry types.
pub trait RingElem: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl RingElem for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl RingElem for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(MPoly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(MPoly::one())
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}
