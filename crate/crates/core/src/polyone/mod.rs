//! The ring `(H[q], +, *)` of one-variable slice regular polynomials.
//!
//! A polynomial `sum q^n a_n` is stored as its coefficient vector with the
//! coefficients on the right of the powers. The variable is central, so the
//! star product is the Cauchy product of the coefficient sequences and the
//! ring is an ordinary polynomial ring over the skew field `H`.

mod euclid;
mod real;

pub use euclid::{Llcm, Lcrm};
pub use real::RealPoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::quaternion::{Quaternion, Rational, Sphere};

/// `sum q^n a_n`; the highest stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly1 {
    coeffs: Vec<Quaternion>,
}

/// Outcome of testing a sphere `x + y S` against a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SphereRoot {
    /// The polynomial vanishes on the whole sphere.
    SphericalZero,
    /// Exactly one point of the sphere is a zero.
    IsolatedZero(Quaternion),
    NoZero,
}

impl Poly1 {
    pub fn new(mut coeffs: Vec<Quaternion>) -> Self {
        while coeffs.last().is_some_and(Quaternion::is_zero) {
            coeffs.pop();
        }
        Poly1 { coeffs }
    }

    pub fn zero() -> Self {
        Poly1 { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly1::constant(Quaternion::one())
    }

    pub fn constant(c: Quaternion) -> Self {
        Poly1::new(vec![c])
    }

    /// The variable `q`.
    pub fn var() -> Self {
        Poly1::monomial(1, Quaternion::one())
    }

    /// `q^deg c`.
    pub fn monomial(deg: usize, c: Quaternion) -> Self {
        let mut coeffs = vec![Quaternion::zero(); deg];
        coeffs.push(c);
        Poly1::new(coeffs)
    }

    /// `q - a`.
    pub fn linear(a: &Quaternion) -> Self {
        Poly1::new(vec![-a, Quaternion::one()])
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Quaternion> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Quaternion {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial counted as degree 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> Option<&Quaternion> {
        self.coeffs.last()
    }

    /// `c * f`.
    pub fn scale_left(&self, c: &Quaternion) -> Poly1 {
        Poly1::new(self.coeffs.iter().map(|a| c * a).collect())
    }

    /// `f * c`.
    pub fn scale_right(&self, c: &Quaternion) -> Poly1 {
        Poly1::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Left-normalized to leading coefficient 1 (`lead^-1 * f`).
    pub fn monic_left(&self) -> Poly1 {
        match self.lead() {
            Some(l) => self.scale_left(&l.inverse().expect("leading coefficient is nonzero")),
            None => Poly1::zero(),
        }
    }

    /// Right-normalized to leading coefficient 1 (`f * lead^-1`).
    pub fn monic_right(&self) -> Poly1 {
        match self.lead() {
            Some(l) => self.scale_right(&l.inverse().expect("leading coefficient is nonzero")),
            None => Poly1::zero(),
        }
    }

    /// Star power `f^{*n}`.
    pub fn pow(&self, exp: u32) -> Poly1 {
        (0..exp).fold(Poly1::one(), |acc, _| &acc * self)
    }

    /// The star product; same as `self * other`.
    pub fn star_mul(&self, other: &Poly1) -> Poly1 {
        if self.is_zero() || other.is_zero() {
            return Poly1::zero();
        }
        let mut out = vec![Quaternion::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (n, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (m, b) in other.coeffs.iter().enumerate() {
                out[n + m] += &(a * b);
            }
        }
        Poly1::new(out)
    }

    /// Regular conjugate `f^c`: coefficient-wise quaternionic conjugation.
    pub fn conj_reg(&self) -> Poly1 {
        Poly1::new(self.coeffs.iter().map(Quaternion::conj).collect())
    }

    /// Symmetrization `f^s = f * f^c`, a polynomial with real coefficients.
    pub fn symm(&self) -> Result<RealPoly> {
        self.star_mul(&self.conj_reg()).to_real()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(Quaternion::is_real)
    }

    /// The real-coefficient view, failing if any coefficient is not real.
    pub fn to_real(&self) -> Result<RealPoly> {
        if !self.is_real() {
            return Err(Error::InternalRealityViolation);
        }
        Ok(RealPoly::new(self.coeffs.iter().map(|c| c.w.clone()).collect()))
    }

    /// `sum p^n a_n`, powers on the left. Not multiplicative for `*`.
    pub fn eval(&self, p: &Quaternion) -> Quaternion {
        self.coeffs
            .iter()
            .rev()
            .fold(Quaternion::zero(), |acc, a| &(p * &acc) + a)
    }

    /// Cullen derivative; on polynomials the formal derivative `sum n q^{n-1} a_n`.
    pub fn cullen_derivative(&self) -> Poly1 {
        Poly1::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, a)| a.scale(&Rational::from_integer(n.into())))
                .collect(),
        )
    }

    /// Decides whether `f` vanishes on the sphere `s`, at one point of it, or nowhere on it.
    ///
    /// Dividing by the characteristic polynomial `q^2 - 2 re q + re^2 + |Im|^2`
    /// leaves `q b + c`, which agrees with `f` on the sphere.
    pub fn classify_root_on_sphere(&self, s: &Sphere) -> Result<SphereRoot> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let re = Quaternion::real(s.re.clone());
        if s.norm_im_sq.is_zero() {
            return Ok(if self.eval(&re).is_zero() {
                SphereRoot::IsolatedZero(re)
            } else {
                SphereRoot::NoZero
            });
        }
        let two = Rational::from_integer(2.into());
        let characteristic = RealPoly::new(vec![
            &s.re * &s.re + &s.norm_im_sq,
            -(&two * &s.re),
            Rational::from_integer(1.into()),
        ])
        .to_poly1();
        let (_, rem) = self.left_divmod(&characteristic)?;
        let c = rem.coeff(0);
        let b = rem.coeff(1);
        if b.is_zero() {
            return Ok(if c.is_zero() {
                SphereRoot::SphericalZero
            } else {
                SphereRoot::NoZero
            });
        }
        let candidate = -(&c * &b.inverse()?);
        Ok(if candidate.sphere_of() == *s {
            SphereRoot::IsolatedZero(candidate)
        } else {
            SphereRoot::NoZero
        })
    }
}

impl From<RealPoly> for Poly1 {
    fn from(r: RealPoly) -> Self {
        r.to_poly1()
    }
}

impl fmt::Display for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::exprio::print_poly1(self, "q"))
    }
}

impl fmt::Debug for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly1({self})")
    }
}

impl Add for &Poly1 {
    type Output = Poly1;

    fn add(self, rhs: &Poly1) -> Poly1 {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::new((0..len).map(|n| self.coeff(n) + rhs.coeff(n)).collect())
    }
}

impl Sub for &Poly1 {
    type Output = Poly1;

    fn sub(self, rhs: &Poly1) -> Poly1 {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::new((0..len).map(|n| self.coeff(n) - rhs.coeff(n)).collect())
    }
}

impl Mul for &Poly1 {
    type Output = Poly1;

    fn mul(self, rhs: &Poly1) -> Poly1 {
        self.star_mul(rhs)
    }
}

impl Neg for &Poly1 {
    type Output = Poly1;

    fn neg(self) -> Poly1 {
        Poly1::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<Poly1> for Poly1 {
            type Output = Poly1;

            fn $method(self, rhs: Poly1) -> Poly1 {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Zero for Poly1 {
    fn zero() -> Self {
        Poly1::zero()
    }

    fn is_zero(&self) -> bool {
        Poly1::is_zero(self)
    }
}
