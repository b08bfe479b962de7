//! Exact quaternions over arbitrary-precision rationals.
//!
//! Every scalar in the crate is a [`Rational`], so zero tests are decisions
//! rather than tolerances. Spheres `x + y S` are stored as `(x, y^2)` to keep
//! irrational radii out of the kernel.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational; denominators are kept positive and reduced.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact square root of a nonnegative rational, when it is itself rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// `w + x i + y j + z k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

/// The sphere `re + sqrt(norm_im_sq) S`; a single real point when `norm_im_sq = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sphere {
    pub re: Rational,
    pub norm_im_sq: Rational,
}

impl Sphere {
    pub fn new(re: Rational, norm_im_sq: Rational) -> Result<Self> {
        if norm_im_sq.is_negative() {
            return Err(Error::Internal("sphere with negative squared radius".into()));
        }
        Ok(Sphere { re, norm_im_sq })
    }

    /// The unit sphere `S` of imaginary units.
    pub fn unit() -> Self {
        Sphere {
            re: Rational::zero(),
            norm_im_sq: Rational::one(),
        }
    }
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(rat(w), rat(x), rat(y), rat(z))
    }

    pub fn real(r: Rational) -> Self {
        Quaternion::new(r, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn zero() -> Self {
        Quaternion::real(Rational::zero())
    }

    pub fn one() -> Self {
        Quaternion::real(Rational::one())
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.is_real()
    }

    pub fn is_one(&self) -> bool {
        self.w.is_one() && self.is_real()
    }

    /// True when the i, j, k components all vanish.
    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn re(&self) -> Quaternion {
        Quaternion::real(self.w.clone())
    }

    pub fn im(&self) -> Quaternion {
        Quaternion::new(Rational::zero(), self.x.clone(), self.y.clone(), self.z.clone())
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn norm_sq(&self) -> Rational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    /// Squared modulus of the imaginary part.
    pub fn im_norm_sq(&self) -> Rational {
        &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn inverse(&self) -> Result<Quaternion> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj().scale(&self.norm_sq().recip()))
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, r: &Rational) -> Quaternion {
        Quaternion::new(&self.w * r, &self.x * r, &self.y * r, &self.z * r)
    }

    /// `ab = ba`, i.e. `b` lies in the centralizer `C_a`.
    pub fn commutes(&self, other: &Quaternion) -> bool {
        // imaginary parts must be parallel: their cross product vanishes
        let (a1, a2, a3) = (&self.x, &self.y, &self.z);
        let (b1, b2, b3) = (&other.x, &other.y, &other.z);
        (a2 * b3 - a3 * b2).is_zero() && (a3 * b1 - a1 * b3).is_zero() && (a1 * b2 - a2 * b1).is_zero()
    }

    /// `a^2 = -1`.
    pub fn is_imaginary_unit(&self) -> bool {
        self.w.is_zero() && self.im_norm_sq().is_one()
    }

    /// `Im(a) / |Im(a)|`, available only when `|Im(a)|` is rational.
    pub fn imaginary_unit_of(&self) -> Result<Quaternion> {
        if self.is_real() {
            return Err(Error::RealArgument);
        }
        let norm = rational_sqrt(&self.im_norm_sq()).ok_or(Error::NotRationallyNormalizable)?;
        Ok(self.im().scale(&norm.recip()))
    }

    pub fn sphere_of(&self) -> Sphere {
        Sphere {
            re: self.w.clone(),
            norm_im_sq: self.im_norm_sq(),
        }
    }

    pub fn pow(&self, exp: u32) -> Quaternion {
        let mut acc = Quaternion::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Components in the order `(w, x, y, z)`.
    /// `(n, d)` with `self = n / d` componentwise; `d` is the lcm of the denominators.
    fn integral(&self) -> ([BigInt; 4], BigInt) {
        let d = self
            .components()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled = self.components().map(|c| c.numer() * (&d / c.denom()));
        (scaled, d)
    }

    pub fn components(&self) -> [&Rational; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }
}

impl Zero for Quaternion {
    fn zero() -> Self {
        Quaternion::zero()
    }

    fn is_zero(&self) -> bool {
        Quaternion::is_zero(self)
    }
}

impl One for Quaternion {
    fn one() -> Self {
        Quaternion::one()
    }
}

impl Default for Quaternion {
    fn default() -> Self {
        Quaternion::zero()
    }
}

impl From<Rational> for Quaternion {
    fn from(r: Rational) -> Self {
        Quaternion::real(r)
    }
}

impl From<i64> for Quaternion {
    fn from(n: i64) -> Self {
        Quaternion::real(rat(n))
    }
}

impl<'a> Add<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;

    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w + &rhs.w, &self.x + &rhs.x, &self.y + &rhs.y, &self.z + &rhs.z)
    }
}

impl<'a> Sub<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;

    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w - &rhs.w, &self.x - &rhs.x, &self.y - &rhs.y, &self.z - &rhs.z)
    }
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;

    /// Hamilton product, computed over a common denominator per factor.
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let ([a1, b1, c1, d1], da) = self.integral();
        let ([a2, b2, c2, d2], db) = rhs.integral();
        let den = da * db;
        let part = |n: BigInt| Rational::new(n, den.clone());
        Quaternion::new(
            part(&a1 * &a2 - &b1 * &b2 - &c1 * &c2 - &d1 * &d2),
            part(&a1 * &b2 + &b1 * &a2 + &c1 * &d2 - &d1 * &c2),
            part(&a1 * &c2 - &b1 * &d2 + &c1 * &a2 + &d1 * &b2),
            part(&a1 * &d2 + &b1 * &c2 - &c1 * &b2 + &d1 * &a2),
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Quaternion> for Quaternion {
            type Output = Quaternion;

            fn $method(self, rhs: Quaternion) -> Quaternion {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $trait<&'a Quaternion> for Quaternion {
            type Output = Quaternion;

            fn $method(self, rhs: &Quaternion) -> Quaternion {
                (&self).$method(rhs)
            }
        }

        impl<'a> $trait<Quaternion> for &'a Quaternion {
            type Output = Quaternion;

            fn $method(self, rhs: Quaternion) -> Quaternion {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&Quaternion> for Quaternion {
    fn add_assign(&mut self, rhs: &Quaternion) {
        self.w += &rhs.w;
        self.x += &rhs.x;
        self.y += &rhs.y;
        self.z += &rhs.z;
    }
}

impl SubAssign<&Quaternion> for Quaternion {
    fn sub_assign(&mut self, rhs: &Quaternion) {
        self.w -= &rhs.w;
        self.x -= &rhs.x;
        self.y -= &rhs.y;
        self.z -= &rhs.z;
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Text form `a + b*i + c*j + d*k`, zero components omitted.
impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (value, unit) in self.components().into_iter().zip(["", "i", "j", "k"]) {
            if value.is_zero() {
                continue;
            }
            let magnitude = value.abs();
            match (first, value.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if unit.is_empty() {
                fmt_rational(&magnitude, f)?;
            } else if magnitude.is_one() {
                write!(f, "{unit}")?;
            } else {
                fmt_rational(&magnitude, f)?;
                write!(f, "*{unit}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quaternion({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::from_ints(w, x, y, z)
    }

    fn arb_quaternion() -> impl Strategy<Value = Quaternion> {
        (-5i64..=5, -5i64..=5, -5i64..=5, -5i64..=5, 1i64..=3)
            .prop_map(|(w, x, y, z, d)| Quaternion::new(ratio(w, d), ratio(x, d), ratio(y, d), ratio(z, d)))
    }

    #[test]
    fn addition() {
        assert_eq!(&q(1, 1, 0, 0) + &Quaternion::j(), q(1, 1, 1, 0));
        let a = q(3, -1, 2, 7);
        assert_eq!(&a + &Quaternion::zero(), a);
        assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn hamilton_relations() {
        assert_eq!(Quaternion::i() * Quaternion::j(), Quaternion::k());
        assert_eq!(Quaternion::j() * Quaternion::i(), -Quaternion::k());
        // i (k - j) = ik - ij = -j - k
        assert_eq!(Quaternion::i() * q(0, 0, -1, 1), q(0, 0, -1, -1));
        assert_eq!(Quaternion::i() * Quaternion::i(), q(-1, 0, 0, 0));
    }

    #[test]
    fn conjugate_norm_inverse() {
        assert_eq!(q(1, 1, 0, 0).conj(), q(1, -1, 0, 0));
        assert_eq!(Quaternion::j().inverse().unwrap(), -Quaternion::j());
        assert_eq!(q(0, 0, -1, 1).norm_sq(), rat(2));
        assert_eq!(Quaternion::zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn centralizers() {
        assert!(Quaternion::i().commutes(&q(1, 2, 0, 0)));
        assert!(!Quaternion::i().commutes(&Quaternion::j()));
        assert!(q(3, 0, 0, 0).commutes(&q(1, 2, 3, 4)));
    }

    #[test]
    fn units_and_spheres() {
        assert!(Quaternion::i().is_imaginary_unit());
        assert!(!q(0, 1, 1, 0).is_imaginary_unit());
        assert_eq!(
            q(2, 0, 0, 3).sphere_of(),
            Sphere { re: rat(2), norm_im_sq: rat(9) }
        );
        assert_eq!(q(1, 2, 0, 0).imaginary_unit_of().unwrap(), Quaternion::i());
        assert_eq!(q(0, 1, 1, 0).imaginary_unit_of(), Err(Error::NotRationallyNormalizable));
        assert_eq!(q(5, 0, 0, 0).imaginary_unit_of(), Err(Error::RealArgument));
        // 3/5 i + 4/5 j has rational modulus 1
        let u = Quaternion::new(rat(0), ratio(3, 5), ratio(4, 5), rat(0));
        assert_eq!(u.scale(&rat(2)).imaginary_unit_of().unwrap(), u);
    }

    #[test]
    fn display() {
        assert_eq!(q(0, 0, -1, 1).to_string(), "-j + k");
        assert_eq!(Quaternion::new(ratio(3, 2), rat(0), rat(-2), rat(0)).to_string(), "3/2 - 2*j");
        assert_eq!(Quaternion::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(a in arb_quaternion(), b in arb_quaternion()) {
            prop_assert_eq!((&a * &b).norm_sq(), a.norm_sq() * b.norm_sq());
        }

        #[test]
        fn inverse_is_two_sided(a in arb_quaternion()) {
            prop_assume!(!a.is_zero());
            let inv = a.inverse().unwrap();
            prop_assert!((&a * &inv).is_one());
            prop_assert!((&inv * &a).is_one());
        }

        #[test]
        fn conjugation_reverses_products(a in arb_quaternion(), b in arb_quaternion()) {
            prop_assert_eq!((&a * &b).conj(), &b.conj() * &a.conj());
        }

        #[test]
        fn commutes_iff_products_agree(a in arb_quaternion(), b in arb_quaternion()) {
            prop_assert_eq!(a.commutes(&b), &a * &b == &b * &a);
        }

        #[test]
        fn multiplication_is_associative(a in arb_quaternion(), b in arb_quaternion(), c in arb_quaternion()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
    }
}
