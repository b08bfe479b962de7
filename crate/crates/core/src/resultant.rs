//! Regular resultants of two-variable polynomials.
//!
//! Writing `P = sum q1^k P_k(q2)` and `Q = sum q1^k Q_k(q2)`, the identity
//! `P*H + Q*K = 0` with `deg_q1 H < deg_q1 Q`, `deg_q1 K < deg_q1 P` is a
//! linear system over `H[q2]` whose matrix is the Sylvester matrix `A(q2)`;
//! its Dieudonné determinant is `Res(P, Q; q1)`. Exchanging the roles of the
//! variables gives `B(q1)` and `Res(P, Q; q2)`.
//!
//! Representatives of a determinant class are not canonical, so every
//! statement checked here goes through `is_zero` and `sdet`.

use crate::dieudonne::{self, classical_det, DetClass, SkewMatrix};
use crate::error::{Error, Result};
use crate::orefield::OreFrac;
use crate::polyone::{Poly1, RealPoly};
use crate::polytwo::{Poly2, Var};
use crate::quaternion::Quaternion;

/// The resultant of two polynomials with respect to one variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantReport {
    pub wrt: Var,
    pub det_class: DetClass,
    /// A polynomial in the other variable lying in the class, when found.
    pub representative: Option<Poly1>,
    pub sylvester: SkewMatrix,
}

impl ResultantReport {
    pub fn is_zero(&self) -> bool {
        self.det_class.is_zero
    }

    /// `sdet` numerator; the denominator is 1 for polynomial inputs.
    pub fn sdet(&self) -> &RealPoly {
        &self.det_class.sdet_num
    }
}

/// `P*H + Q*K = target`, with `target` a polynomial in the variable not eliminated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub wrt: Var,
    pub h: Poly2,
    pub k: Poly2,
    pub target: Poly1,
    /// Real factor folded into `H`, `K` so that `sdet` divides `symm(target)`; 1 when none was needed.
    pub central_scale: RealPoly,
}

impl BezoutCertificate {
    /// Recomputes `P*H + Q*K` and compares with the stored target.
    pub fn verify(&self, p: &Poly2, q: &Poly2) -> bool {
        let lhs = &(p * &self.h) + &(q * &self.k);
        lhs == Poly2::from_poly1(&self.target, self.wrt.other())
    }

    /// `deg_wrt H < deg_wrt Q` and `deg_wrt K < deg_wrt P`, zero counted as degree -1.
    pub fn degree_bounds_hold(&self, p: &Poly2, q: &Poly2) -> bool {
        let below = |x: &Poly2, bound: usize| x.is_zero() || x.deg(self.wrt) < bound;
        below(&self.h, q.deg(self.wrt)) && below(&self.k, p.deg(self.wrt))
    }
}

/// Sylvester matrix of `P`, `Q` with respect to `wrt`.
///
/// With `n = deg P`, `m = deg Q` in `wrt`, column `p < m` holds `P_k` in row
/// `k + p` and column `m + p` holds `Q_k` in row `k + p`. Rows index powers
/// of `wrt`, starting from the constant term.
pub fn sylvester(p: &Poly2, q: &Poly2, wrt: Var) -> Result<SkewMatrix> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (ps, qs) = (p.coeffs_in(wrt), q.coeffs_in(wrt));
    let (n, m) = (ps.len() - 1, qs.len() - 1);
    let size = n + m;
    let mut a = SkewMatrix::zeros(size, size);
    for col in 0..m {
        for (k, pk) in ps.iter().enumerate() {
            a.set(k + col, col, OreFrac::from_poly(pk.clone()));
        }
    }
    for col in 0..n {
        for (k, qk) in qs.iter().enumerate() {
            a.set(k + col, m + col, OreFrac::from_poly(qk.clone()));
        }
    }
    Ok(a)
}

/// `A(q2)`: entries in `H[q2]`.
pub fn sylvester_q1(p: &Poly2, q: &Poly2) -> Result<SkewMatrix> {
    sylvester(p, q, Var::Q1)
}

/// `B(q1)`: entries in `H[q1]`.
pub fn sylvester_q2(p: &Poly2, q: &Poly2) -> Result<SkewMatrix> {
    sylvester(p, q, Var::Q2)
}

/// `Res(P, Q; wrt)`.
pub fn resultant(p: &Poly2, q: &Poly2, wrt: Var) -> Result<ResultantReport> {
    let sylvester = sylvester(p, q, wrt)?;
    let det_class = dieudonne::det(&sylvester)?;
    if !det_class.is_zero && !det_class.sdet_den.is_one_poly() {
        return Err(Error::Internal("sdet of a polynomial matrix has a denominator".into()));
    }
    let representative = dieudonne::poly_representative(&det_class);
    Ok(ResultantReport { wrt, det_class, representative, sylvester })
}

/// Reassembles `H = sum wrt^p x_p`, `K = sum wrt^p x_{m+p}` from a polynomial solution.
fn assemble(x: &[Poly1], m: usize, wrt: Var) -> (Poly2, Poly2) {
    (Poly2::from_coeffs_in(wrt, &x[..m]), Poly2::from_coeffs_in(wrt, &x[m..]))
}

/// Right-multiplies every entry by one common polynomial `c` so that all
/// become polynomials; returns the products and `c`.
fn clear_right_denominators(x: &[OreFrac]) -> (Vec<Poly1>, Poly1) {
    // x_j = n_j d_j^{-1}; c is a common right multiple of the d_j
    let rights: Vec<(Poly1, Poly1)> = x.iter().map(OreFrac::to_right).collect();
    let mut c = Poly1::one();
    for (_, d) in &rights {
        if d.is_constant() {
            continue;
        }
        if c.exact_left_quotient(d).is_none() {
            c = c.lcrm(d).expect("nonzero").m;
        }
    }
    let cleared = rights
        .iter()
        .map(|(n, d)| n * &c.exact_left_quotient(d).expect("common right multiple"))
        .collect();
    (cleared, c)
}

/// Nonzero `H`, `K` within the degree bounds with `P*H + Q*K = 0`, when `Res(P, Q; wrt)` is zero.
pub fn kernel_cofactors(p: &Poly2, q: &Poly2, wrt: Var) -> Result<Option<BezoutCertificate>> {
    let a = sylvester(p, q, wrt)?;
    let Some(x) = dieudonne::kernel_vector(&a) else { return Ok(None) };
    let (cleared, _) = clear_right_denominators(&x);
    let (h, k) = assemble(&cleared, q.deg(wrt), wrt);
    let cert = BezoutCertificate { wrt, h, k, target: Poly1::zero(), central_scale: RealPoly::one() };
    if cert.h.is_zero() || cert.k.is_zero() || !cert.verify(p, q) || !cert.degree_bounds_hold(p, q) {
        return Err(Error::Internal("kernel cofactors failed verification".into()));
    }
    Ok(Some(cert))
}

/// `H`, `K` with `P*H + Q*K = T` a nonzero polynomial in the other variable.
///
/// Solves `A x = e_0` (the equation of the constant term) and clears
/// denominators on the right by a common right multiple `c`, so `T = c`.
/// When `sdet` does not divide `symm(c)`, `H` and `K` are further multiplied
/// by the real polynomial `s = N / gcd(N, symm(c))`, `N` the `sdet` numerator.
pub fn bezout_certificate(p: &Poly2, q: &Poly2, wrt: Var) -> Result<BezoutCertificate> {
    let report = resultant(p, q, wrt)?;
    if report.is_zero() {
        return Err(Error::SingularSystem);
    }
    let size = report.sylvester.nrows();
    let mut rhs = vec![OreFrac::zero(); size];
    if size == 0 {
        // both degrees 0: P * P0^{-1} = 1
        let p0 = p.as_poly1_in(wrt.other()).expect("degree 0");
        let cert = BezoutCertificate {
            wrt,
            h: Poly2::zero(),
            k: Poly2::zero(),
            target: Poly1::zero(),
            central_scale: RealPoly::one(),
        };
        return finish_constant_case(p, q, &p0, cert);
    }
    rhs[0] = OreFrac::one();
    let x = dieudonne::cramer_solve(&report.sylvester, &rhs)?.ok_or(Error::SingularSystem)?;
    let (cleared, c) = clear_right_denominators(&x);
    let n = report.sdet();
    let symm_c = c.symm()?;
    let scale = if n.divides(&symm_c) {
        RealPoly::one()
    } else {
        n.exact_div(&n.gcd(&symm_c)).expect("gcd divides").monic()
    };
    let scale_poly = scale.to_poly1();
    let cleared: Vec<Poly1> = cleared.iter().map(|e| e * &scale_poly).collect();
    let (h, k) = assemble(&cleared, q.deg(wrt), wrt);
    let cert = BezoutCertificate { wrt, h, k, target: &c * &scale_poly, central_scale: scale };
    if cert.target.is_zero() || !cert.verify(p, q) || !cert.degree_bounds_hold(p, q) {
        return Err(Error::Internal("Bezout certificate failed verification".into()));
    }
    if !n.divides(&cert.target.symm()?) {
        return Err(Error::Internal("sdet does not divide the symmetrized target".into()));
    }
    Ok(cert)
}

// deg_wrt P = deg_wrt Q = 0: take H = P^c, K = 0, so T = P^s.
fn finish_constant_case(p: &Poly2, q: &Poly2, p0: &Poly1, mut cert: BezoutCertificate) -> Result<BezoutCertificate> {
    cert.h = Poly2::from_poly1(&p0.conj_reg(), cert.wrt.other());
    cert.target = p0.symm()?.to_poly1();
    if !cert.verify(p, q) {
        return Err(Error::Internal("constant-case certificate failed verification".into()));
    }
    Ok(cert)
}

/// Whether one resultant is compatible with a common zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantAtPoint {
    pub wrt: Var,
    pub is_zero: bool,
    /// `sdet` vanishes at the coordinate of the point in the other variable.
    pub sdet_vanishes: bool,
    /// The extracted representative vanishes there; representatives are only
    /// defined up to commutators, so this is informational.
    pub representative_vanishes: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonZeroReport {
    pub p_value: Quaternion,
    pub q_value: Quaternion,
    /// Both values are zero.
    pub common_zero: bool,
    /// Present when `common_zero`; indexed `[q1, q2]`.
    pub resultants: Option<[ResultantAtPoint; 2]>,
}

impl CommonZeroReport {
    /// A common zero forces both `sdet`s to vanish at the point.
    pub fn holds(&self) -> bool {
        match &self.resultants {
            None => true,
            Some(rs) => rs.iter().all(|r| r.is_zero || r.sdet_vanishes),
        }
    }
}

/// Evaluates `P`, `Q` at a commuting point and, at a common zero, checks that
/// `Res(P, Q; q1)` vanishes at `b` and `Res(P, Q; q2)` vanishes at `a`.
pub fn check_common_zero(p: &Poly2, q: &Poly2, a: &Quaternion, b: &Quaternion) -> Result<CommonZeroReport> {
    if !a.commutes(b) {
        return Err(Error::NonCommutingPoint { a: a.to_string(), b: b.to_string() });
    }
    let (p_value, q_value) = (p.eval2(a, b), q.eval2(a, b));
    let common_zero = p_value.is_zero() && q_value.is_zero();
    let resultants = if common_zero {
        let at = |wrt: Var, point: &Quaternion| -> Result<ResultantAtPoint> {
            let r = resultant(p, q, wrt)?;
            Ok(ResultantAtPoint {
                wrt,
                is_zero: r.is_zero(),
                sdet_vanishes: r.sdet().eval_quaternion(point).is_zero(),
                representative_vanishes: r.representative.as_ref().map(|rep| rep.eval(point).is_zero()),
            })
        };
        Some([at(Var::Q1, b)?, at(Var::Q2, a)?])
    } else {
        None
    };
    Ok(CommonZeroReport { p_value, q_value, common_zero, resultants })
}

/// Common left linear factors in one variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftFactorCheck {
    pub var: Var,
    /// Monic greatest common left divisor `G` in `H[var]` of all slices of `P`
    /// and `Q`; `(var - a)` is a common left factor iff it left-divides `G`.
    pub common_divisor: Poly1,
    /// Points `a` with `(var - a)` a verified common left factor.
    pub roots: Vec<Quaternion>,
    pub resultant_is_zero: bool,
}

impl LeftFactorCheck {
    pub fn has_common_factor(&self) -> bool {
        self.common_divisor.deg() >= 1
    }

    /// A common left factor forces the resultant in the same variable to vanish.
    pub fn holds(&self) -> bool {
        !self.has_common_factor() || self.resultant_is_zero
    }
}

/// Searches for common left factors `(q1 - a)` and `(q2 - b)` and checks the
/// matching resultants. Exact roots are reported when `G` is linear or when
/// one of `candidates` is a root of `G`.
pub fn check_left_factor_criterion(p: &Poly2, q: &Poly2, candidates: &[Quaternion]) -> Result<[LeftFactorCheck; 2]> {
    let check = |var: Var| -> Result<LeftFactorCheck> {
        // (var - a) * R has every slice (coefficient of a power of the other variable) left-divisible by (var - a)
        let slices = p.coeffs_in(var.other()).into_iter().chain(q.coeffs_in(var.other()));
        let g = slices.fold(Poly1::zero(), |acc, s| {
            if acc.is_zero() && s.is_zero() {
                acc
            } else {
                acc.gcld(&s).expect("not both zero")
            }
        });
        let mut roots = Vec::new();
        if g.deg() == 1 {
            roots.push(-&g.coeff(0));
        }
        for c in candidates {
            if g.deg() >= 1 && g.eval(c).is_zero() && !roots.contains(c) {
                roots.push(c.clone());
            }
        }
        for a in &roots {
            if p.factor_left_linear(var, a).is_none() || q.factor_left_linear(var, a).is_none() {
                return Err(Error::Internal("left factor failed synthetic division".into()));
            }
        }
        let resultant_is_zero = g.deg() >= 1 && resultant(p, q, var)?.is_zero();
        Ok(LeftFactorCheck { var, common_divisor: g, roots, resultant_is_zero })
    };
    Ok([check(Var::Q1)?, check(Var::Q2)?])
}

/// Sylvester determinant over `Q[x]` of two real-coefficient polynomials.
pub fn classical_resultant(p: &Poly2, q: &Poly2, wrt: Var) -> Result<RealPoly> {
    let a = sylvester(p, q, wrt)?;
    let rows: Result<Vec<Vec<RealPoly>>> = a
        .to_rows()
        .iter()
        .map(|row| row.iter().map(|x| x.as_poly().expect("polynomial entry").to_real()).collect())
        .collect();
    Ok(classical_det(&rows?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizedCheck {
    pub wrt: Var,
    pub regular_is_zero: bool,
    /// `Res(P^s, Q^s; wrt)` over `Q[x]`, computed when the regular resultant vanishes.
    pub classical: Option<RealPoly>,
}

impl SymmetrizedCheck {
    pub fn holds(&self) -> bool {
        !self.regular_is_zero || self.classical.as_ref().is_some_and(RealPoly::is_zero)
    }
}

/// A vanishing regular resultant forces the classical resultant of the symmetrizations to vanish.
pub fn symmetrized_resultant_criterion(p: &Poly2, q: &Poly2) -> Result<[SymmetrizedCheck; 2]> {
    let (ps, qs) = (p.symm2()?, q.symm2()?);
    let check = |wrt: Var| -> Result<SymmetrizedCheck> {
        let regular_is_zero = resultant(p, q, wrt)?.is_zero();
        let classical = if regular_is_zero { Some(classical_resultant(&ps, &qs, wrt)?) } else { None };
        Ok(SymmetrizedCheck { wrt, regular_is_zero, classical })
    };
    Ok([check(Var::Q1)?, check(Var::Q2)?])
}

/// `Res(P, dP/d var; var)`: zero whenever `P = (var - a)^{*m} * R` with `m >= 2`.
pub fn discriminant(p: &Poly2, var: Var) -> Result<ResultantReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.deg(var) == 0 {
        return Err(Error::DegreeTooLow { var: var.to_string() });
    }
    resultant(p, &p.partial(var), var)
}

pub fn discriminant_q1(p: &Poly2) -> Result<ResultantReport> {
    discriminant(p, Var::Q1)
}

pub fn discriminant_q2(p: &Poly2) -> Result<ResultantReport> {
    discriminant(p, Var::Q2)
}

trait IsOnePoly {
    fn is_one_poly(&self) -> bool;
}

impl IsOnePoly for RealPoly {
    fn is_one_poly(&self) -> bool {
        *self == RealPoly::one()
    }
}
