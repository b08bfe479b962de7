//! The skew field of left fractions `d^{-*} * n` of `H[q]`.
//!
//! `H[q]` is a left Euclidean domain, so any two nonzero polynomials have a
//! least common left multiple and every fraction has a reduced form: the
//! denominator is monic and shares no nontrivial left factor with the
//! numerator. Reduced forms are unique, so equality is structural on them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::polyone::{Poly1, RealPoly};

/// `den^{-*} * num`, kept reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OreFrac {
    den: Poly1,
    num: Poly1,
}

impl OreFrac {
    /// Reduced form of `den^{-*} * num`.
    pub fn new(den: Poly1, num: Poly1) -> Result<OreFrac> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroFrac);
        }
        Ok(OreFrac::reduce(den, num))
    }

    // den != 0
    fn reduce(den: Poly1, num: Poly1) -> OreFrac {
        if num.is_zero() {
            return OreFrac::zero();
        }
        if den.is_constant() {
            let norm = den.coeff(0).inverse().expect("nonzero");
            return OreFrac { den: Poly1::one(), num: num.scale_left(&norm) };
        }
        let g = den.gcld(&num).expect("nonzero denominator");
        let (den, num) = if g.is_constant() {
            (den, num)
        } else {
            (
                den.exact_left_quotient(&g).expect("left divisor"),
                num.exact_left_quotient(&g).expect("left divisor"),
            )
        };
        let norm = den.lead().expect("nonzero").inverse().expect("nonzero");
        OreFrac {
            den: den.scale_left(&norm),
            num: num.scale_left(&norm),
        }
    }

    pub fn zero() -> OreFrac {
        OreFrac { den: Poly1::one(), num: Poly1::zero() }
    }

    pub fn one() -> OreFrac {
        OreFrac::from_poly(Poly1::one())
    }

    pub fn from_poly(p: Poly1) -> OreFrac {
        OreFrac { den: Poly1::one(), num: p }
    }

    /// `f^{-*}`.
    pub fn inverse_of(f: Poly1) -> Result<OreFrac> {
        OreFrac::new(f, Poly1::one())
    }

    /// Left form of the right fraction `num * den^{-*}`.
    pub fn from_right(num: &Poly1, den: &Poly1) -> Result<OreFrac> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroFrac);
        }
        if num.is_zero() {
            return Ok(OreFrac::zero());
        }
        // u * num = v * den  gives  num * den^{-1} = u^{-1} * v
        let l = num.llcm(den)?;
        OreFrac::new(l.u, l.v)
    }

    /// `(n', d')` with `self = n' * d'^{-*}`; `d'` is right-monic.
    pub fn to_right(&self) -> (Poly1, Poly1) {
        if self.num.is_zero() {
            return (Poly1::zero(), Poly1::one());
        }
        // den * u = num * v  gives  den^{-1} * num = u * v^{-1}
        let l = self.den.lcrm(&self.num).expect("nonzero");
        let norm = l.v.lead().expect("nonzero").inverse().expect("nonzero");
        (l.u.scale_right(&norm), l.v.scale_right(&norm))
    }

    pub fn den(&self) -> &Poly1 {
        &self.den
    }

    pub fn num(&self) -> &Poly1 {
        &self.num
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// `Some(p)` when the fraction is the polynomial `p`.
    pub fn as_poly(&self) -> Option<&Poly1> {
        self.den.is_one().then_some(&self.num)
    }

    /// `(a^{-*} * b)^{-*} = b^{-*} * a`.
    pub fn inv(&self) -> Result<OreFrac> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroFrac);
        }
        Ok(OreFrac::reduce(self.num.clone(), self.den.clone()))
    }

    pub fn add(&self, other: &OreFrac) -> OreFrac {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        match (self.den.is_one(), other.den.is_one()) {
            (true, true) => return OreFrac::from_poly(&self.num + &other.num),
            // d^{-1} n + p = d^{-1} (n + d p)
            (false, true) => return OreFrac::reduce(self.den.clone(), &self.num + &(&self.den * &other.num)),
            (true, false) => return OreFrac::reduce(other.den.clone(), &(&other.den * &self.num) + &other.num),
            (false, false) => {}
        }
        let l = self.den.llcm(&other.den).expect("nonzero denominators");
        OreFrac::reduce(l.m, &(&l.u * &self.num) + &(&l.v * &other.num))
    }

    pub fn sub(&self, other: &OreFrac) -> OreFrac {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> OreFrac {
        OreFrac { den: self.den.clone(), num: -&self.num }
    }

    /// `(a^{-1} b)(c^{-1} d) = (c' a)^{-1} (b' d)` where `c' b = b' c`.
    pub fn mul(&self, other: &OreFrac) -> OreFrac {
        if self.is_zero() || other.is_zero() {
            return OreFrac::zero();
        }
        if other.den.is_one() {
            return OreFrac::reduce(self.den.clone(), &self.num * &other.num);
        }
        let l = self.num.llcm(&other.den).expect("nonzero");
        OreFrac::reduce(&l.u * &self.den, &l.v * &other.num)
    }

    /// `self * other^{-1}`.
    pub fn div(&self, other: &OreFrac) -> Result<OreFrac> {
        Ok(self.mul(&other.inv()?))
    }

    /// Cross-multiplication test; agrees with `==` on reduced values.
    pub fn eq_cross(&self, other: &OreFrac) -> bool {
        let l = self.den.llcm(&other.den).expect("nonzero denominators");
        &l.u * &self.num == &l.v * &other.num
    }

    /// `(den^s, num^s)`.
    pub fn symm_frac(&self) -> Result<(RealPoly, RealPoly)> {
        Ok((self.den.symm()?, self.num.symm()?))
    }

    /// `num^s / den^s` in lowest terms over the rationals, with monic denominator.
    pub fn symm_reduced(&self) -> Result<(RealPoly, RealPoly)> {
        let (d, n) = self.symm_frac()?;
        Ok(reduce_real(&d, &n))
    }
}

/// `n / d` in lowest terms with monic `d`; zero becomes `0 / 1`.
pub fn reduce_real(d: &RealPoly, n: &RealPoly) -> (RealPoly, RealPoly) {
    if n.is_zero() {
        return (RealPoly::one(), RealPoly::zero());
    }
    let g = d.gcd(n);
    let d = d.exact_div(&g).expect("gcd divides");
    let n = n.exact_div(&g).expect("gcd divides");
    let scale = d.lead().expect("nonzero").recip();
    (d.scale(&scale), n.scale(&scale))
}

impl Default for OreFrac {
    fn default() -> Self {
        OreFrac::zero()
    }
}

impl From<Poly1> for OreFrac {
    fn from(p: Poly1) -> Self {
        OreFrac::from_poly(p)
    }
}

/// Text form `(DEN)^-1 * (NUM)`, or just the numerator when `DEN = 1`.
impl fmt::Display for OreFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})^-1 * ({})", self.den, self.num)
        }
    }
}

impl fmt::Debug for OreFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OreFrac({self})")
    }
}

impl Add for &OreFrac {
    type Output = OreFrac;

    fn add(self, rhs: &OreFrac) -> OreFrac {
        OreFrac::add(self, rhs)
    }
}

impl Sub for &OreFrac {
    type Output = OreFrac;

    fn sub(self, rhs: &OreFrac) -> OreFrac {
        OreFrac::sub(self, rhs)
    }
}

impl Mul for &OreFrac {
    type Output = OreFrac;

    fn mul(self, rhs: &OreFrac) -> OreFrac {
        OreFrac::mul(self, rhs)
    }
}

impl Neg for &OreFrac {
    type Output = OreFrac;

    fn neg(self) -> OreFrac {
        OreFrac::neg(self)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::polyone::tests::arb_poly1;
    use crate::quaternion::Quaternion;
    use proptest::prelude::*;

    pub(crate) fn arb_frac(max_deg: usize) -> impl Strategy<Value = OreFrac> {
        (arb_poly1(max_deg), arb_poly1(max_deg)).prop_filter_map("nonzero denominator", |(d, n)| {
            OreFrac::new(d, n).ok()
        })
    }

    fn lin(a: Quaternion) -> Poly1 {
        Poly1::linear(&a)
    }

    #[test]
    fn inversion() {
        let x = OreFrac::from_poly(lin(Quaternion::i()));
        let xi = x.inv().unwrap();
        assert_eq!(xi.den(), &lin(Quaternion::i()));
        assert!(xi.num().is_one());
        assert_eq!(xi.inv().unwrap(), x);
        assert_eq!(OreFrac::from_poly(Poly1::zero()).inv(), Err(Error::DivisionByZeroFrac));
        assert!(x.mul(&xi).is_one());
        assert!(xi.mul(&x).is_one());
    }

    #[test]
    fn sum_of_inverses() {
        let a = OreFrac::inverse_of(lin(Quaternion::i())).unwrap();
        let b = OreFrac::inverse_of(lin(Quaternion::j())).unwrap();
        let s = &a + &b;
        assert_eq!(s.den(), &Poly1::new(vec![1.into(), 0.into(), 1.into()]));
        assert_eq!(s.num(), &Poly1::new(vec![Quaternion::from_ints(0, 1, 1, 0), 2.into()]));
        // (q+i)(q-i) = (q+j)(q-j) = q^2+1
        let expected = &lin(-Quaternion::i()) + &lin(-Quaternion::j());
        assert_eq!(s.num(), &expected);
        assert!((&s - &s).is_zero());
        assert_eq!(&s + &OreFrac::zero(), s);
    }

    #[test]
    fn equality_after_reduction() {
        let p = lin(Quaternion::i());
        let x = OreFrac::new(p.clone(), p.clone()).unwrap();
        assert!(x.is_one());
        let s = Poly1::new(vec![1.into(), 0.into(), 1.into()]);
        let y = OreFrac { den: s.clone(), num: s };
        assert!(y.eq_cross(&OreFrac::one()));
        assert_ne!(y, OreFrac::one());
        assert_eq!(OreFrac::reduce(y.den.clone(), y.num.clone()), OreFrac::one());
    }

    #[test]
    fn symmetrized_pairs() {
        let x = OreFrac::from_poly(lin(Quaternion::i()));
        let q2p1 = RealPoly::from_ints(&[1, 0, 1]);
        assert_eq!(x.symm_frac().unwrap(), (RealPoly::one(), q2p1.clone()));
        assert_eq!(x.inv().unwrap().symm_frac().unwrap(), (q2p1, RealPoly::one()));
        assert_eq!(OreFrac::zero().symm_frac().unwrap(), (RealPoly::one(), RealPoly::zero()));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn embedding_is_a_ring_map(f in arb_poly1(2), g in arb_poly1(2)) {
            let (x, y) = (OreFrac::from_poly(f.clone()), OreFrac::from_poly(g.clone()));
            prop_assert_eq!(&x * &y, OreFrac::from_poly(&f * &g));
            prop_assert_eq!(&x + &y, OreFrac::from_poly(&f + &g));
            prop_assert_eq!(x == y, f == g);
        }

        #[test]
        fn ring_axioms(x in arb_frac(1), y in arb_frac(1), z in arb_frac(1)) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert!((&x + &x.neg()).is_zero());
            if !x.is_zero() {
                prop_assert!((&x * &x.inv().unwrap()).is_one());
                prop_assert_eq!(x.inv().unwrap().inv().unwrap(), x.clone());
            }
        }

        #[test]
        fn reduced_forms_are_canonical(x in arb_frac(2), c in arb_poly1(1)) {
            prop_assume!(!c.is_zero());
            // rescale by a common left factor and re-reduce
            let widened = OreFrac { den: &c * &x.den, num: &c * &x.num };
            prop_assert!(widened.eq_cross(&x));
            let reduced = OreFrac::reduce(widened.den.clone(), widened.num.clone());
            prop_assert_eq!(&reduced, &x);
            prop_assert_eq!(OreFrac::reduce(reduced.den.clone(), reduced.num.clone()), reduced);
        }

        #[test]
        fn right_forms_agree(x in arb_frac(2)) {
            let (n, d) = x.to_right();
            prop_assert_eq!(x.den() * &n, x.num() * &d);
            prop_assert_eq!(OreFrac::from_right(&n, &d).unwrap(), x);
        }

        #[test]
        fn symmetrization_is_multiplicative(x in arb_frac(1), y in arb_frac(1)) {
            let (dx, nx) = x.symm_frac().unwrap();
            let (dy, ny) = y.symm_frac().unwrap();
            let expected = reduce_real(&(&dx * &dy), &(&nx * &ny));
            prop_assert_eq!((&x * &y).symm_reduced().unwrap(), expected);
        }
    }
}
