//! The ring `(H[q1, q2], +, *)` of two-variable slice regular polynomials.
//!
//! `sum q1^n q2^m a_{n,m}` is stored as a dense coefficient array, row `n`
//! and column `m`. Both variables are central, so the star product is the
//! two-dimensional Cauchy product.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyone::Poly1;
use crate::quaternion::{Quaternion, Rational};

/// One of the two variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Q1,
    Q2,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::Q1 => Var::Q2,
            Var::Q2 => Var::Q1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q1 => "q1",
            Var::Q2 => "q2",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        match s {
            "q1" => Ok(Var::Q1),
            "q2" => Ok(Var::Q2),
            other => Err(Error::WrongVariables {
                expected: "q1 or q2".into(),
                found: other.into(),
            }),
        }
    }
}

/// `sum q1^n q2^m a_{n,m}`; the last row and the last column each hold a nonzero entry.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    coeffs: Vec<Vec<Quaternion>>,
}

impl Poly2 {
    /// Builds from rows of possibly ragged length, trimming zero borders.
    pub fn new(rows: Vec<Vec<Quaternion>>) -> Self {
        let width = rows
            .iter()
            .filter_map(|row| row.iter().rposition(|c| !c.is_zero()))
            .max()
            .map_or(0, |m| m + 1);
        if width == 0 {
            return Poly2::zero();
        }
        let mut coeffs: Vec<Vec<Quaternion>> = rows
            .into_iter()
            .map(|mut row| {
                row.resize(width, Quaternion::zero());
                row
            })
            .collect();
        while coeffs.last().is_some_and(|row| row.iter().all(Quaternion::is_zero)) {
            coeffs.pop();
        }
        Poly2 { coeffs }
    }

    pub fn zero() -> Self {
        Poly2 { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly2::constant(Quaternion::one())
    }

    pub fn constant(c: Quaternion) -> Self {
        Poly2::new(vec![vec![c]])
    }

    /// `q1^n q2^m c`.
    pub fn monomial(n: usize, m: usize, c: Quaternion) -> Self {
        let mut rows = vec![Vec::new(); n + 1];
        rows[n] = vec![Quaternion::zero(); m + 1];
        rows[n][m] = c;
        Poly2::new(rows)
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::Q1 => Poly2::monomial(1, 0, Quaternion::one()),
            Var::Q2 => Poly2::monomial(0, 1, Quaternion::one()),
        }
    }

    /// `v - a`.
    pub fn linear(v: Var, a: &Quaternion) -> Self {
        &Poly2::var(v) - &Poly2::constant(a.clone())
    }

    /// Embeds a one-variable polynomial as a polynomial in `v`.
    pub fn from_poly1(p: &Poly1, v: Var) -> Self {
        match v {
            Var::Q1 => Poly2::new(p.coeffs().iter().map(|c| vec![c.clone()]).collect()),
            Var::Q2 => Poly2::new(vec![p.coeffs().to_vec()]),
        }
    }

    pub fn coeff(&self, n: usize, m: usize) -> Quaternion {
        self.coeffs
            .get(n)
            .and_then(|row| row.get(m))
            .cloned()
            .unwrap_or_default()
    }

    /// Coefficient rows: `rows()[n][m] = a_{n,m}`.
    pub fn rows(&self) -> &[Vec<Quaternion>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_q1(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn deg_q2(&self) -> usize {
        self.coeffs.first().map_or(0, |row| row.len() - 1)
    }

    pub fn deg(&self, v: Var) -> usize {
        match v {
            Var::Q1 => self.deg_q1(),
            Var::Q2 => self.deg_q2(),
        }
    }

    fn width(&self) -> usize {
        self.coeffs.first().map_or(0, Vec::len)
    }

    fn map_coeffs(&self, f: impl Fn(&Quaternion) -> Quaternion) -> Poly2 {
        Poly2::new(self.coeffs.iter().map(|row| row.iter().map(&f).collect()).collect())
    }

    /// `c * P`.
    pub fn scale_left(&self, c: &Quaternion) -> Poly2 {
        self.map_coeffs(|a| c * a)
    }

    /// `P * c`.
    pub fn scale_right(&self, c: &Quaternion) -> Poly2 {
        self.map_coeffs(|a| a * c)
    }

    pub fn pow(&self, exp: u32) -> Poly2 {
        (0..exp).fold(Poly2::one(), |acc, _| &acc * self)
    }

    pub fn star_mul(&self, other: &Poly2) -> Poly2 {
        if self.is_zero() || other.is_zero() {
            return Poly2::zero();
        }
        let (rows, cols) = (
            self.coeffs.len() + other.coeffs.len() - 1,
            self.width() + other.width() - 1,
        );
        let mut out = vec![vec![Quaternion::zero(); cols]; rows];
        for (r, row) in self.coeffs.iter().enumerate() {
            for (s, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (n, other_row) in other.coeffs.iter().enumerate() {
                    for (m, b) in other_row.iter().enumerate() {
                        out[r + n][s + m] += &(a * b);
                    }
                }
            }
        }
        Poly2::new(out)
    }

    /// `(P_0, ..., P_N)` with `P = sum q1^n * P_n(q2)`.
    pub fn coeffs_in_q1(&self) -> Vec<Poly1> {
        self.coeffs.iter().map(|row| Poly1::new(row.clone())).collect()
    }

    /// `(P~_0, ..., P~_M)` with `P = sum q2^m * P~_m(q1)`.
    pub fn coeffs_in_q2(&self) -> Vec<Poly1> {
        (0..self.width())
            .map(|m| Poly1::new(self.coeffs.iter().map(|row| row[m].clone()).collect()))
            .collect()
    }

    /// Coefficients as one-variable polynomials in the variable other than `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly1> {
        match v {
            Var::Q1 => self.coeffs_in_q1(),
            Var::Q2 => self.coeffs_in_q2(),
        }
    }

    /// Inverse of [`Poly2::coeffs_in`]: `sum v^k * parts[k]`.
    pub fn from_coeffs_in(v: Var, parts: &[Poly1]) -> Poly2 {
        match v {
            Var::Q1 => Poly2::new(parts.iter().map(|p| p.coeffs().to_vec()).collect()),
            Var::Q2 => {
                let rows = parts.iter().map(Poly1::deg).max().map_or(0, |d| d + 1);
                Poly2::new(
                    (0..rows)
                        .map(|n| parts.iter().map(|p| p.coeff(n)).collect())
                        .collect(),
                )
            }
        }
    }

    /// `sum a^n b^m a_{n,m}`: the q1-power left of the q2-power, both left of the coefficient.
    pub fn eval2(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        let inner: Vec<Quaternion> = self.coeffs_in_q1().iter().map(|p| p.eval(b)).collect();
        Poly1::new(inner).eval(a)
    }

    pub fn partial_q1(&self) -> Poly2 {
        Poly2::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, row)| {
                    let factor = Rational::from_integer(n.into());
                    row.iter().map(|a| a.scale(&factor)).collect()
                })
                .collect(),
        )
    }

    pub fn partial_q2(&self) -> Poly2 {
        Poly2::new(
            self.coeffs
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .skip(1)
                        .map(|(m, a)| a.scale(&Rational::from_integer(m.into())))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn partial(&self, v: Var) -> Poly2 {
        match v {
            Var::Q1 => self.partial_q1(),
            Var::Q2 => self.partial_q2(),
        }
    }

    pub fn conj_reg2(&self) -> Poly2 {
        self.map_coeffs(Quaternion::conj)
    }

    /// `P^s = P * P^c`; errors if a coefficient comes out non-real.
    pub fn symm2(&self) -> Result<Poly2> {
        let s = self.star_mul(&self.conj_reg2());
        if !s.is_real() {
            return Err(Error::InternalRealityViolation);
        }
        Ok(s)
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().flatten().all(Quaternion::is_real)
    }

    /// The one-variable polynomial in `v`, when `P` does not involve the other variable.
    pub fn as_poly1_in(&self, v: Var) -> Option<Poly1> {
        match v {
            Var::Q1 if self.deg_q2() == 0 => Some(Poly1::new(self.coeffs.iter().map(|r| r[0].clone()).collect())),
            Var::Q2 if self.deg_q1() == 0 => Some(Poly1::new(self.coeffs.first().cloned().unwrap_or_default())),
            _ => None,
        }
    }

    /// `Some(R)` with `P = (v - a) * R`, found by left synthetic division.
    pub fn factor_left_linear(&self, v: Var, a: &Quaternion) -> Option<Poly2> {
        if self.is_zero() {
            return Some(Poly2::zero());
        }
        let parts = self.coeffs_in(v);
        let top = parts.len() - 1;
        if top == 0 {
            return None;
        }
        // P_k = R_{k-1} - a R_k
        let mut quotient = vec![Poly1::zero(); top];
        quotient[top - 1] = parts[top].clone();
        for k in (1..top).rev() {
            quotient[k - 1] = &parts[k] + &quotient[k].scale_left(a);
        }
        let remainder = &parts[0] + &quotient[0].scale_left(a);
        remainder
            .is_zero()
            .then(|| Poly2::from_coeffs_in(v, &quotient))
    }

    pub fn factor_left_q1_linear(&self, a: &Quaternion) -> Option<Poly2> {
        self.factor_left_linear(Var::Q1, a)
    }

    pub fn factor_left_q2_linear(&self, b: &Quaternion) -> Option<Poly2> {
        self.factor_left_linear(Var::Q2, b)
    }

    /// Largest `m` with `P = (v - a)^{*m} * Q`, together with `Q`.
    pub fn multiplicity(&self, v: Var, a: &Quaternion) -> Result<(u32, Poly2)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut m = 0;
        let mut cofactor = self.clone();
        while let Some(next) = cofactor.factor_left_linear(v, a) {
            m += 1;
            cofactor = next;
        }
        Ok((m, cofactor))
    }

    pub fn multiplicity_q1(&self, a: &Quaternion) -> Result<(u32, Poly2)> {
        self.multiplicity(Var::Q1, a)
    }

    pub fn multiplicity_q2(&self, b: &Quaternion) -> Result<(u32, Poly2)> {
        self.multiplicity(Var::Q2, b)
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::exprio::print_poly2(self))
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

impl Add for &Poly2 {
    type Output = Poly2;

    fn add(self, rhs: &Poly2) -> Poly2 {
        let rows = self.coeffs.len().max(rhs.coeffs.len());
        let cols = self.width().max(rhs.width());
        Poly2::new(
            (0..rows)
                .map(|n| (0..cols).map(|m| self.coeff(n, m) + rhs.coeff(n, m)).collect())
                .collect(),
        )
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;

    fn sub(self, rhs: &Poly2) -> Poly2 {
        self + &(-rhs)
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;

    fn neg(self) -> Poly2 {
        self.map_coeffs(|a| -a)
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;

    fn mul(self, rhs: &Poly2) -> Poly2 {
        self.star_mul(rhs)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<Poly2> for Poly2 {
            type Output = Poly2;

            fn $method(self, rhs: Poly2) -> Poly2 {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Zero for Poly2 {
    fn zero() -> Self {
        Poly2::zero()
    }

    fn is_zero(&self) -> bool {
        Poly2::is_zero(self)
    }
}
