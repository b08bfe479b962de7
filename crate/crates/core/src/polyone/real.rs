//! Polynomials with rational (real) coefficients.
//!
//! These are the slice preserving elements of `H[q]`: they commute with every
//! quaternionic polynomial under the star product, and they carry every
//! symmetrization.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyone::Poly1;
use crate::quaternion::{Quaternion, Rational};

/// Dense polynomial over the rationals; `coeffs[n]` multiplies `q^n`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RealPoly {
    coeffs: Vec<Rational>,
}

impl RealPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RealPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        RealPoly::new(coeffs.iter().map(|&c| crate::quaternion::rat(c)).collect())
    }

    pub fn zero() -> Self {
        RealPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RealPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RealPoly::new(vec![c])
    }

    /// The variable `q`.
    pub fn var() -> Self {
        RealPoly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial counted as degree 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> RealPoly {
        RealPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Rescaled to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> RealPoly {
        match self.lead() {
            Some(l) => self.scale(&l.recip()),
            None => RealPoly::zero(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Value at a quaternion; real coefficients make the side irrelevant.
    pub fn eval_quaternion(&self, p: &Quaternion) -> Quaternion {
        self.coeffs
            .iter()
            .rev()
            .fold(Quaternion::zero(), |acc, c| &(&acc * p) + &Quaternion::real(c.clone()))
    }

    pub fn pow(&self, exp: u32) -> RealPoly {
        (0..exp).fold(RealPoly::one(), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> RealPoly {
        RealPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c * Rational::from_integer(n.into()))
                .collect(),
        )
    }

    pub fn div_rem(&self, divisor: &RealPoly) -> Result<(RealPoly, RealPoly)> {
        let lead = divisor.lead().ok_or(Error::DivisionByZeroPoly)?.recip();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((RealPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let c = &rem[shift + dd] * &lead;
            if c.is_zero() {
                continue;
            }
            for (n, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + n] -= &c * d;
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Ok((RealPoly::new(quot), RealPoly::new(rem)))
    }

    /// `self / divisor` when the division is exact.
    pub fn exact_div(&self, divisor: &RealPoly) -> Option<RealPoly> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &RealPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.exact_div(self).is_some()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &RealPoly) -> RealPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Embedding into `H[q]`.
    pub fn to_poly1(&self) -> Poly1 {
        Poly1::new(self.coeffs.iter().cloned().map(Quaternion::real).collect())
    }

    /// Formats with the given variable name, e.g. `2*q1^4 + 4*q1^2 + 2`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let mono = match n {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{n}"),
            };
            let num = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => out.push_str(&num),
                (false, true) => out.push_str(&mono),
                (false, false) => {
                    out.push_str(&num);
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        out
    }

    /// Square-free decomposition `lead * prod f_i^i` with monic, pairwise coprime `f_i`.
    pub fn squarefree(&self) -> (Rational, Vec<(RealPoly, u32)>) {
        let Some(lead) = self.lead().cloned() else { return (Rational::zero(), Vec::new()) };
        let f = self.monic();
        let mut factors = Vec::new();
        if f.degree() == Some(0) {
            return (lead, factors);
        }
        // Yun: b_i, d_i with b_1 = f / gcd(f, f'), d_1 = f' / gcd - b_1'
        let a0 = f.gcd(&f.derivative());
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let mut d = &f.derivative().exact_div(&a0).expect("gcd divides") - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            b = b.exact_div(&a).expect("gcd divides");
            let c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.derivative();
            if a.degree().unwrap_or(0) > 0 {
                factors.push((a, i));
            }
            i += 1;
        }
        (lead, factors)
    }

    /// Square-free factored form, e.g. `2*(x^2 + 1)^2`.
    pub fn display_factored(&self, var: &str) -> String {
        let (lead, factors) = self.squarefree();
        if factors.len() <= 1 && factors.iter().all(|(_, e)| *e == 1) {
            return self.display_in(var);
        }
        let mut parts = Vec::new();
        if lead == -Rational::one() {
            parts.push("-1".to_string());
        } else if !lead.is_one() {
            parts.push(RealPoly::constant(lead).display_in(var));
        }
        for (f, e) in &factors {
            let text = f.display_in(var);
            let base = if f.coeffs.iter().filter(|c| !c.is_zero()).count() > 1 { format!("({text})") } else { text };
            parts.push(if *e == 1 { base } else { format!("{base}^{e}") });
        }
        parts.join("*")
    }
}

impl fmt::Display for RealPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("q"))
    }
}

impl fmt::Debug for RealPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealPoly({self})")
    }
}

impl Add for &RealPoly {
    type Output = RealPoly;

    fn add(self, rhs: &RealPoly) -> RealPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RealPoly::new((0..len).map(|n| self.coeff(n) + rhs.coeff(n)).collect())
    }
}

impl Sub for &RealPoly {
    type Output = RealPoly;

    fn sub(self, rhs: &RealPoly) -> RealPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RealPoly::new((0..len).map(|n| self.coeff(n) - rhs.coeff(n)).collect())
    }
}

impl Mul for &RealPoly {
    type Output = RealPoly;

    fn mul(self, rhs: &RealPoly) -> RealPoly {
        if self.is_zero() || rhs.is_zero() {
            return RealPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (n, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (m, b) in rhs.coeffs.iter().enumerate() {
                out[n + m] += a * b;
            }
        }
        RealPoly::new(out)
    }
}

impl Neg for &RealPoly {
    type Output = RealPoly;

    fn neg(self) -> RealPoly {
        RealPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::rat;

    #[test]
    fn squarefree_forms() {
        let f = RealPoly::from_ints(&[2, 0, 2]).pow(2);
        assert_eq!(f.display_factored("q1"), "4*(q1^2 + 1)^2");
        let g = &(&RealPoly::from_ints(&[0, 1]).pow(3) * &RealPoly::from_ints(&[-1, 1])) * &RealPoly::from_ints(&[1, 0, 1]).pow(2);
        let (lead, factors) = g.squarefree();
        assert_eq!(lead, rat(1));
        let rebuilt = factors.iter().fold(RealPoly::one(), |acc, (f, e)| &acc * &f.pow(*e));
        assert_eq!(rebuilt, g);
        assert_eq!(factors.iter().map(|(_, e)| *e).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(RealPoly::from_ints(&[-3]).display_factored("x"), "-3");
        assert_eq!(RealPoly::zero().display_factored("x"), "0");
    }

    #[test]
    fn division_and_gcd() {
        // (q^2 + 1)(q - 2) = q^3 - 2q^2 + q - 2
        let f = RealPoly::from_ints(&[-2, 1, -2, 1]);
        let g = RealPoly::from_ints(&[1, 0, 1]);
        let (quot, rem) = f.div_rem(&g).unwrap();
        assert_eq!(quot, RealPoly::from_ints(&[-2, 1]));
        assert!(rem.is_zero());
        let h = RealPoly::from_ints(&[2, 0, 2]).pow(2);
        assert_eq!(f.gcd(&h), g);
        assert!(g.divides(&f));
        assert!(!f.divides(&g));
        assert_eq!(f.div_rem(&RealPoly::zero()), Err(Error::DivisionByZeroPoly));
    }

    #[test]
    fn display() {
        let f = RealPoly::from_ints(&[2, 0, 4, 0, 2]);
        assert_eq!(f.display_in("q1"), "2*q1^4 + 4*q1^2 + 2");
        assert_eq!(RealPoly::from_ints(&[0, -1]).to_string(), "-q");
        assert_eq!(RealPoly::zero().to_string(), "0");
        assert_eq!(f.eval(&rat(1)), rat(8));
    }
}
