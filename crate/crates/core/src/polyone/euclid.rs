//! Euclidean structure of `H[q]`.
//!
//! The variable is central, so both divisions only ever invert leading
//! coefficients. Right division drives the left-sided constructions (gcrd,
//! llcm) and left division the right-sided ones (gcld, lcrm).

use crate::error::{Error, Result};
use crate::polyone::Poly1;
use crate::quaternion::Quaternion;

/// Least common left multiple: `m = u * b = v * c`, `m` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Llcm {
    pub m: Poly1,
    pub u: Poly1,
    pub v: Poly1,
}

/// Least common right multiple: `m = b * u = c * v`, `m` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lcrm {
    pub m: Poly1,
    pub u: Poly1,
    pub v: Poly1,
}

fn lead_inverse(g: &Poly1) -> Result<(usize, Quaternion)> {
    let lead = g.lead().ok_or(Error::DivisionByZeroPoly)?;
    Ok((g.deg(), lead.inverse()?))
}

impl Poly1 {
    /// `f = g * quot + rem` with `deg rem < deg g`.
    pub fn left_divmod(&self, g: &Poly1) -> Result<(Poly1, Poly1)> {
        let (dg, inv) = lead_inverse(g)?;
        let mut rem = self.coeffs().to_vec();
        if rem.len() <= dg {
            return Ok((Poly1::zero(), self.clone()));
        }
        let mut quot = vec![Quaternion::zero(); rem.len() - dg];
        for shift in (0..quot.len()).rev() {
            let c = &inv * &rem[shift + dg];
            if c.is_zero() {
                continue;
            }
            for (n, gn) in g.coeffs().iter().enumerate() {
                rem[shift + n] -= &(gn * &c);
            }
            quot[shift] = c;
        }
        rem.truncate(dg);
        Ok((Poly1::new(quot), Poly1::new(rem)))
    }

    /// `f = quot * g + rem` with `deg rem < deg g`.
    pub fn right_divmod(&self, g: &Poly1) -> Result<(Poly1, Poly1)> {
        let (dg, inv) = lead_inverse(g)?;
        let mut rem = self.coeffs().to_vec();
        if rem.len() <= dg {
            return Ok((Poly1::zero(), self.clone()));
        }
        let mut quot = vec![Quaternion::zero(); rem.len() - dg];
        for shift in (0..quot.len()).rev() {
            let c = &rem[shift + dg] * &inv;
            if c.is_zero() {
                continue;
            }
            for (n, gn) in g.coeffs().iter().enumerate() {
                rem[shift + n] -= &(&c * gn);
            }
            quot[shift] = c;
        }
        rem.truncate(dg);
        Ok((Poly1::new(quot), Poly1::new(rem)))
    }

    /// Greatest common right divisor, left-normalized to be monic.
    pub fn gcrd(&self, other: &Poly1) -> Result<Poly1> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.right_divmod(&b)?;
            a = b;
            b = r.monic_left();
        }
        Ok(a.monic_left())
    }

    /// Greatest common left divisor, right-normalized to be monic.
    pub fn gcld(&self, other: &Poly1) -> Result<Poly1> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.left_divmod(&b)?;
            a = b;
            b = r.monic_right();
        }
        Ok(a.monic_right())
    }

    /// Least common left multiple of `self` and `other`.
    pub fn llcm(&self, other: &Poly1) -> Result<Llcm> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        // invariant: r_i = s_i * self + t_i * other
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly1::one(), Poly1::zero());
        let (mut t0, mut t1) = (Poly1::zero(), Poly1::one());
        while !r1.is_zero() {
            let (quo, rem) = r0.right_divmod(&r1)?;
            let mut s2 = &s0 - &(&quo * &s1);
            let mut t2 = &t0 - &(&quo * &t1);
            let mut rem = rem;
            // left unit rescaling keeps the invariant and bounds coefficient growth
            if let Some(l) = rem.lead() {
                let c = l.inverse()?;
                rem = rem.scale_left(&c);
                s2 = s2.scale_left(&c);
                t2 = t2.scale_left(&c);
            }
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let m = &s1 * self;
        let norm = m.lead().expect("nonzero multiple").inverse()?;
        Ok(Llcm {
            m: m.scale_left(&norm),
            u: s1.scale_left(&norm),
            v: (-&t1).scale_left(&norm),
        })
    }

    /// Least common right multiple of `self` and `other`.
    pub fn lcrm(&self, other: &Poly1) -> Result<Lcrm> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        // invariant: r_i = self * s_i + other * t_i
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly1::one(), Poly1::zero());
        let (mut t0, mut t1) = (Poly1::zero(), Poly1::one());
        while !r1.is_zero() {
            let (quo, rem) = r0.left_divmod(&r1)?;
            let mut s2 = &s0 - &(&s1 * &quo);
            let mut t2 = &t0 - &(&t1 * &quo);
            let mut rem = rem;
            if let Some(l) = rem.lead() {
                let c = l.inverse()?;
                rem = rem.scale_right(&c);
                s2 = s2.scale_right(&c);
                t2 = t2.scale_right(&c);
            }
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let m = self * &s1;
        let norm = m.lead().expect("nonzero multiple").inverse()?;
        Ok(Lcrm {
            m: m.scale_right(&norm),
            u: s1.scale_right(&norm),
            v: (-&t1).scale_right(&norm),
        })
    }

    /// `Some(h)` with `self = divisor * h` when `divisor` is a left divisor of `self`.
    pub fn exact_left_quotient(&self, divisor: &Poly1) -> Option<Poly1> {
        let (q, r) = self.left_divmod(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// `Some(h)` with `self = h * divisor` when `divisor` is a right divisor of `self`.
    pub fn exact_right_quotient(&self, divisor: &Poly1) -> Option<Poly1> {
        let (q, r) = self.right_divmod(divisor).ok()?;
        r.is_zero().then_some(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyone::tests::arb_poly1;
    use crate::polyone::RealPoly;
    use crate::quaternion::Rational;
    use num_traits::Zero as _;
    use proptest::prelude::*;

    fn q_minus(a: Quaternion) -> Poly1 {
        Poly1::linear(&a)
    }

    #[test]
    fn division_examples() {
        let (i, j) = (Quaternion::i(), Quaternion::j());
        let f = q_minus(i.clone()) * q_minus(j.clone());
        assert_eq!(f.left_divmod(&q_minus(i.clone())).unwrap(), (q_minus(j.clone()), Poly1::zero()));
        assert_eq!(f.left_divmod(&Poly1::one()).unwrap(), (f.clone(), Poly1::zero()));
        let q2_plus_1 = RealPoly::from_ints(&[1, 0, 1]).to_poly1();
        assert_eq!(q2_plus_1.right_divmod(&q_minus(i.clone())).unwrap(), (Poly1::linear(&-&i), Poly1::zero()));
        assert_eq!(f.left_divmod(&Poly1::zero()), Err(Error::DivisionByZeroPoly));
    }

    #[test]
    fn llcm_of_two_linear_factors() {
        let (i, j) = (Quaternion::i(), Quaternion::j());
        let l = q_minus(i.clone()).llcm(&q_minus(j.clone())).unwrap();
        assert_eq!(l.m, RealPoly::from_ints(&[1, 0, 1]).to_poly1());
        assert_eq!(l.u, Poly1::linear(&-&i));
        assert_eq!(l.v, Poly1::linear(&-&j));
        assert_eq!(&l.u * &q_minus(i.clone()), l.m);
        assert_eq!(&l.v * &q_minus(j.clone()), l.m);
        assert!(q_minus(i.clone()).gcrd(&q_minus(j)).unwrap().is_one());
        let f = q_minus(i).scale_left(&Quaternion::from_ints(0, 0, 3, 0));
        assert_eq!(f.gcrd(&f).unwrap(), f.monic_left());
    }

    /// Whether a nonzero common left multiple of degree at most `d` exists.
    ///
    /// A common left multiple of degree `d` is `x * b = y * c` with `deg x = d - deg b`;
    /// the unknown coefficients of x and y enter linearly over the rationals, so
    /// we count the rational dimension of the solution space by Gaussian elimination.
    fn common_left_multiple_within(b: &Poly1, c: &Poly1, d: usize) -> bool {
        let (db, dc) = (b.deg(), c.deg());
        if d < db.max(dc) {
            return false;
        }
        let (nx, ny) = (d - db + 1, d - dc + 1);
        let unknowns = 4 * (nx + ny);
        // each unknown quaternion coefficient contributes 4 rational columns
        let basis = [Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()];
        let mut rows = vec![vec![Rational::from_integer(0.into()); unknowns]; 4 * (d + 1)];
        for (col_block, (len, poly, sign)) in [(nx, b, 1i64), (ny, c, -1i64)].into_iter().enumerate() {
            let offset = if col_block == 0 { 0 } else { 4 * nx };
            for p in 0..len {
                for (e, unit) in basis.iter().enumerate() {
                    let term = Poly1::monomial(p, unit.clone()) * poly.clone();
                    for (n, coeff) in term.coeffs().iter().enumerate() {
                        for (comp, value) in coeff.components().into_iter().enumerate() {
                            rows[4 * n + comp][offset + 4 * p + e] += value * Rational::from_integer(sign.into());
                        }
                    }
                }
            }
        }
        let rank = rational_rank(rows);
        rank < unknowns
    }

    fn rational_rank(mut rows: Vec<Vec<Rational>>) -> usize {
        let cols = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
            rows.swap(rank, p);
            let pivot = rows[rank][col].clone();
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let f = &rows[r][col] / &pivot;
                    for c in col..cols {
                        let delta = &f * &rows[rank][c];
                        rows[r][c] -= delta;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn divisions_multiply_back(f in arb_poly1(4), g in arb_poly1(3)) {
            prop_assume!(!g.is_zero());
            let (ql, rl) = f.left_divmod(&g).unwrap();
            prop_assert_eq!(&(&g * &ql) + &rl, f.clone());
            prop_assert!(rl.is_zero() || rl.deg() < g.deg());
            let (qr, rr) = f.right_divmod(&g).unwrap();
            prop_assert_eq!(&(&qr * &g) + &rr, f);
            prop_assert!(rr.is_zero() || rr.deg() < g.deg());
        }

        #[test]
        fn llcm_is_common_and_of_expected_degree(b in arb_poly1(3), c in arb_poly1(3)) {
            prop_assume!(!b.is_zero() && !c.is_zero());
            let l = b.llcm(&c).unwrap();
            prop_assert_eq!(&l.u * &b, l.m.clone());
            prop_assert_eq!(&l.v * &c, l.m.clone());
            prop_assert!(l.m.lead().unwrap().is_one());
            let g = b.gcrd(&c).unwrap();
            prop_assert_eq!(l.m.deg(), b.deg() + c.deg() - g.deg());
            prop_assert!(b.exact_right_quotient(&g).is_some());
            prop_assert!(c.exact_right_quotient(&g).is_some());
        }

        #[test]
        fn lcrm_is_common_and_of_expected_degree(b in arb_poly1(3), c in arb_poly1(3)) {
            prop_assume!(!b.is_zero() && !c.is_zero());
            let l = b.lcrm(&c).unwrap();
            prop_assert_eq!(&b * &l.u, l.m.clone());
            prop_assert_eq!(&c * &l.v, l.m.clone());
            let g = b.gcld(&c).unwrap();
            prop_assert_eq!(l.m.deg(), b.deg() + c.deg() - g.deg());
            prop_assert!(b.exact_left_quotient(&g).is_some());
            prop_assert!(c.exact_left_quotient(&g).is_some());
        }

        #[test]
        fn llcm_is_least(b in arb_poly1(2), c in arb_poly1(2)) {
            prop_assume!(!b.is_zero() && !c.is_zero());
            let m = b.llcm(&c).unwrap().m;
            prop_assert!(common_left_multiple_within(&b, &c, m.deg()));
            if m.deg() > 0 {
                prop_assert!(!common_left_multiple_within(&b, &c, m.deg() - 1));
            }
        }
    }
}
