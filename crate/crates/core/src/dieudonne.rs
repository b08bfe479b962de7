//! Dieudonné determinants of matrices over the fraction skew field of `H[q]`.
//!
//! The determinant lives in the abelianized multiplicative group, so only
//! class invariants are comparable: whether the class is zero, and `sdet`,
//! the reduced symmetrization of any representative. Symmetrization is
//! central and multiplicative, so it is constant on commutator cosets.

use std::fmt;

use crate::error::{Error, Result};
use crate::orefield::{reduce_real, OreFrac};
use crate::polyone::{Poly1, RealPoly};

/// Rectangular matrix of [`OreFrac`] entries, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<OreFrac>,
}

impl SkewMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<OreFrac>) -> Result<SkewMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(SkewMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<OreFrac>>) -> Result<SkewMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            entries.extend(row);
        }
        SkewMatrix::new(n, cols, entries)
    }

    pub fn from_poly_rows(rows: Vec<Vec<Poly1>>) -> Result<SkewMatrix> {
        SkewMatrix::from_rows(
            rows.into_iter()
                .map(|row| row.into_iter().map(OreFrac::from_poly).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> SkewMatrix {
        SkewMatrix { rows, cols, entries: vec![OreFrac::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> SkewMatrix {
        SkewMatrix::diag(vec![OreFrac::one(); n])
    }

    pub fn diag(d: Vec<OreFrac>) -> SkewMatrix {
        let n = d.len();
        let mut m = SkewMatrix::zeros(n, n);
        for (idx, x) in d.into_iter().enumerate() {
            m.set(idx, idx, x);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &OreFrac {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: OreFrac) {
        self.entries[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[OreFrac] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<OreFrac>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Whether every entry is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.entries.iter().all(|x| x.as_poly().is_some())
    }

    /// `(A * B)_{ij} = sum_k a_{ik} * b_{kj}`.
    pub fn mul(&self, other: &SkewMatrix) -> Result<SkewMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = SkewMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = OreFrac::zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.get(r, k) * other.get(k, c));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[OreFrac]) -> Result<Vec<OreFrac>> {
        if self.cols != x.len() {
            return Err(Error::DimensionMismatch { expected: self.cols, found: x.len() });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .fold(OreFrac::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    /// Replaces column `c` by `v`.
    pub fn with_column(&self, c: usize, v: &[OreFrac]) -> Result<SkewMatrix> {
        if c >= self.cols {
            return Err(Error::IndexOutOfRange { index: c, size: self.cols });
        }
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: v.len() });
        }
        let mut out = self.clone();
        for (r, x) in v.iter().enumerate() {
            out.set(r, c, x.clone());
        }
        Ok(out)
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NonSquare { rows: self.rows, cols: self.cols })
        }
    }
}

impl fmt::Display for SkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewMatrix {}x{}\n{self}", self.rows, self.cols)
    }
}

/// A determinant class, carried by a representative and its class invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetClass {
    /// One representative; other representatives differ by commutators.
    pub rep: OreFrac,
    pub sdet_num: RealPoly,
    /// Monic and nonzero.
    pub sdet_den: RealPoly,
    pub is_zero: bool,
    /// Pivots whose product (in this order) is `rep`; empty for the zero class.
    pub factors: Vec<OreFrac>,
}

impl DetClass {
    pub fn from_factors(factors: Vec<OreFrac>) -> DetClass {
        let rep = factors.iter().fold(OreFrac::one(), |acc, x| &acc * x);
        let (mut d, mut n) = (RealPoly::one(), RealPoly::one());
        for x in &factors {
            let (dx, nx) = x.symm_reduced().expect("symmetrization is real");
            (d, n) = reduce_real(&(&d * &dx), &(&n * &nx));
        }
        if rep.is_zero() {
            return DetClass::zero();
        }
        DetClass { rep, sdet_num: n, sdet_den: d, is_zero: false, factors }
    }

    pub fn from_rep(rep: OreFrac) -> DetClass {
        DetClass::from_factors(vec![rep])
    }

    pub fn zero() -> DetClass {
        DetClass {
            rep: OreFrac::zero(),
            sdet_num: RealPoly::zero(),
            sdet_den: RealPoly::one(),
            is_zero: true,
            factors: Vec::new(),
        }
    }

    pub fn one() -> DetClass {
        DetClass::from_factors(Vec::new())
    }

    /// `(sdet_den, sdet_num)`.
    pub fn sdet(&self) -> (RealPoly, RealPoly) {
        (self.sdet_den.clone(), self.sdet_num.clone())
    }

    /// Class invariants agree.
    pub fn same_invariants(&self, other: &DetClass) -> bool {
        self.is_zero == other.is_zero && self.sdet() == other.sdet()
    }

    /// Product of classes.
    pub fn mul(&self, other: &DetClass) -> DetClass {
        if self.is_zero || other.is_zero {
            return DetClass::zero();
        }
        DetClass::from_factors(self.factors.iter().chain(&other.factors).cloned().collect())
    }
}

/// `Det(a b; c d)`: `[a*d - a*c*a^{-1}*b]`, or `[b*c]` when `a = 0`.
pub fn det2(a: &OreFrac, b: &OreFrac, c: &OreFrac, d: &OreFrac) -> DetClass {
    if a.is_zero() {
        return DetClass::from_rep(b * c);
    }
    let ainv = a.inv().expect("nonzero");
    DetClass::from_rep(&(a * d) - &(&(&(a * c) * &ainv) * b))
}

fn pivot_cost(x: &OreFrac) -> usize {
    x.num().deg() + x.den().deg()
}

/// Elimination with a caller-chosen pivot at each level. `choose` receives
/// the current column's nonzero candidates (row indices into the current
/// minor, ascending) and returns a position in that list.
fn eliminate(a: &SkewMatrix, mut choose: impl FnMut(&[usize], &[Vec<OreFrac>]) -> usize) -> Result<DetClass> {
    a.require_square()?;
    let mut rows = a.to_rows();
    let mut factors = Vec::with_capacity(a.rows);
    while !rows.is_empty() {
        let candidates: Vec<usize> = (0..rows.len()).filter(|&r| !rows[r][0].is_zero()).collect();
        if candidates.is_empty() {
            return Ok(DetClass::zero());
        }
        let k = candidates[choose(&candidates, &rows) % candidates.len()];
        let pivot_row = rows.remove(k);
        let pivot_inv = pivot_row[0].inv()?;
        // row_i <- row_i - (a_i1 a_k1^{-1}) row_k, then drop the first column
        rows = rows
            .into_iter()
            .map(|row| {
                if row[0].is_zero() {
                    return row[1..].to_vec();
                }
                let f = &row[0] * &pivot_inv;
                row[1..]
                    .iter()
                    .zip(&pivot_row[1..])
                    .map(|(x, p)| x - &(&f * p))
                    .collect()
            })
            .collect();
        factors.push(pivot_row[0].clone());
    }
    Ok(DetClass::from_factors(factors))
}

/// Dieudonné determinant with the default pivot rule: smallest
/// `deg num + deg den`, then smallest row.
pub fn det(a: &SkewMatrix) -> Result<DetClass> {
    eliminate(a, |cands, rows| {
        let mut best = 0;
        for (pos, &r) in cands.iter().enumerate() {
            if pivot_cost(&rows[r][0]) < pivot_cost(&rows[cands[best]][0]) {
                best = pos;
            }
        }
        best
    })
}

/// Determinant with explicit pivots: at level `l` the `choices[l]`-th
/// nonzero candidate (cyclically) is used; missing levels take the first.
pub fn det_with_pivots(a: &SkewMatrix, choices: &[usize]) -> Result<DetClass> {
    let mut level = 0;
    eliminate(a, |_, _| {
        let c = choices.get(level).copied().unwrap_or(0);
        level += 1;
        c
    })
}

/// Row operations whose effect on the determinant is prescribed.
#[derive(Clone, Debug)]
pub enum RowOp {
    /// `row_target <- row_target + lambda * row_source`; determinant unchanged.
    AddMultiple { target: usize, source: usize, lambda: OreFrac },
    /// `row <- lambda * row`; determinant multiplied by `[lambda]`.
    Scale { row: usize, lambda: OreFrac },
}

pub fn apply_row_op(a: &SkewMatrix, op: &RowOp) -> Result<SkewMatrix> {
    let check = |idx: usize| {
        if idx < a.rows {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: idx, size: a.rows })
        }
    };
    let mut out = a.clone();
    match op {
        RowOp::AddMultiple { target, source, lambda } => {
            check(*target)?;
            check(*source)?;
            if target == source {
                return Err(Error::Internal("row operation needs distinct rows".into()));
            }
            for c in 0..a.cols {
                out.set(*target, c, a.get(*target, c) + &(lambda * a.get(*source, c)));
            }
        }
        RowOp::Scale { row, lambda } => {
            check(*row)?;
            for c in 0..a.cols {
                out.set(*row, c, lambda * a.get(*row, c));
            }
        }
    }
    Ok(out)
}

/// Whether `det` of the modified matrix has the prescribed class invariants.
pub fn row_ops_check(a: &SkewMatrix, op: &RowOp) -> Result<bool> {
    let before = det(a)?;
    let after = det(&apply_row_op(a, op)?)?;
    let expected = match op {
        RowOp::AddMultiple { .. } => before,
        RowOp::Scale { lambda, .. } => DetClass::from_rep(lambda.clone()).mul(&before),
    };
    Ok(after.same_invariants(&expected))
}

/// Row echelon form by left row operations; returns the pivot columns.
fn echelon(rows: &mut [Vec<OreFrac>], reduced: bool) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        if reduced {
            let inv = rows[rank][col].inv().expect("nonzero pivot");
            rows[rank] = rows[rank].iter().map(|x| &inv * x).collect();
        }
        let pivot_inv = rows[rank][col].inv().expect("nonzero pivot");
        for r in 0..rows.len() {
            if r == rank || (!reduced && r < rank) || rows[r][col].is_zero() {
                continue;
            }
            let f = &rows[r][col] * &pivot_inv;
            let pivot_row = rows[rank].clone();
            for (x, p) in rows[r].iter_mut().zip(&pivot_row) {
                *x = &*x - &(&f * p);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}

/// Rank of the left row space.
pub fn rank(a: &SkewMatrix) -> usize {
    echelon(&mut a.to_rows(), false).len()
}

/// Solution of `A * x = b` when `Det(A)` is nonzero, `None` when it is zero.
///
/// The solution is checked by exact multiplication.
pub fn cramer_solve(a: &SkewMatrix, b: &[OreFrac]) -> Result<Option<Vec<OreFrac>>> {
    a.require_square()?;
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch { expected: a.rows, found: b.len() });
    }
    let n = a.rows;
    let mut aug: Vec<Vec<OreFrac>> = a
        .to_rows()
        .into_iter()
        .zip(b)
        .map(|(mut row, x)| {
            row.push(x.clone());
            row
        })
        .collect();
    // forward elimination
    for col in 0..n {
        let Some(p) = (col..n).filter(|&r| !aug[r][col].is_zero()).min_by_key(|&r| pivot_cost(&aug[r][col])) else {
            return Ok(None);
        };
        aug.swap(col, p);
        let pivot_inv = aug[col][col].inv()?;
        for r in col + 1..n {
            if aug[r][col].is_zero() {
                continue;
            }
            let f = &aug[r][col] * &pivot_inv;
            let pivot_row = aug[col].clone();
            for (x, pv) in aug[r].iter_mut().zip(&pivot_row).skip(col) {
                *x = &*x - &(&f * pv);
            }
        }
    }
    // back substitution: x_c = a_cc^{-1} (b_c - sum_{j>c} a_cj x_j)
    let mut x = vec![OreFrac::zero(); n];
    for c in (0..n).rev() {
        let mut rhs = aug[c][n].clone();
        for j in c + 1..n {
            rhs = &rhs - &(&aug[c][j] * &x[j]);
        }
        x[c] = &aug[c][c].inv()? * &rhs;
    }
    if a.mul_vec(&x)? != b {
        return Err(Error::Internal("Cramer solution failed the multiply-back check".into()));
    }
    Ok(Some(x))
}

/// A nonzero `x` with `A * x = 0`, when one exists.
pub fn kernel_vector(a: &SkewMatrix) -> Option<Vec<OreFrac>> {
    let mut rows = a.to_rows();
    let pivots = echelon(&mut rows, true);
    let free = (0..a.cols).find(|c| !pivots.contains(c))?;
    // x_free = 1, other free variables 0, x_p = -a_{p, free}
    let mut x = vec![OreFrac::zero(); a.cols];
    x[free] = OreFrac::one();
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = rows[r][free].neg();
    }
    Some(x)
}

/// A polynomial in the class, when one is found by exact division.
///
/// Tried in turn: the representative itself, `d^{-1} n` with `n = p d`, and
/// `N D^{-1}` with `N`, `D` the products of the pivot numerators and
/// denominators, in either order, with `N = p D` or `N = D p`. Each
/// candidate differs from the representative by commutators.
pub fn poly_representative(dc: &DetClass) -> Option<Poly1> {
    if dc.is_zero {
        return Some(Poly1::zero());
    }
    let accept = |p: Poly1| -> Option<Poly1> {
        let s = p.symm().ok()?;
        (&s * &dc.sdet_den == dc.sdet_num).then_some(p)
    };
    if let Some(p) = dc.rep.as_poly() {
        return accept(p.clone());
    }
    if let Some(p) = dc.rep.num().exact_right_quotient(dc.rep.den()) {
        return accept(p);
    }
    for reversed in [false, true] {
        let mut factors = dc.factors.clone();
        if reversed {
            factors.reverse();
        }
        let n = factors.iter().fold(Poly1::one(), |acc, x| &acc * x.num());
        let d = factors.iter().fold(Poly1::one(), |acc, x| &acc * x.den());
        if let Some(p) = n.exact_right_quotient(&d).or_else(|| n.exact_left_quotient(&d)) {
            return accept(p);
        }
    }
    None
}

/// Determinant over `Q[x]` by fraction-free (Bareiss) elimination.
pub fn classical_det(m: &[Vec<RealPoly>]) -> RealPoly {
    let n = m.len();
    if n == 0 {
        return RealPoly::one();
    }
    let mut a = m.to_vec();
    let mut sign_flip = false;
    let mut prev = RealPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else { return RealPoly::zero() };
            a.swap(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = RealPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign_flip {
        -&d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orefield::tests::arb_frac;
    use crate::polyone::tests::{arb_poly1, arb_real_poly1};
    use crate::quaternion::Quaternion;
    use proptest::prelude::*;

    fn c(q: Quaternion) -> OreFrac {
        OreFrac::from_poly(Poly1::constant(q))
    }

    fn lin(a: Quaternion) -> OreFrac {
        OreFrac::from_poly(Poly1::linear(&a))
    }

    fn arb_matrix(n: usize, deg: usize) -> impl Strategy<Value = SkewMatrix> {
        prop::collection::vec(arb_frac(deg), n * n).prop_map(move |e| SkewMatrix::new(n, n, e).unwrap())
    }

    fn arb_poly_matrix(n: usize, deg: usize) -> impl Strategy<Value = SkewMatrix> {
        prop::collection::vec(arb_poly1(deg), n * n)
            .prop_map(move |e| SkewMatrix::new(n, n, e.into_iter().map(OreFrac::from_poly).collect()).unwrap())
    }

    // Leibniz expansion; independent of elimination.
    fn leibniz(m: &[Vec<RealPoly>]) -> RealPoly {
        let n = m.len();
        if n == 0 {
            return RealPoly::one();
        }
        let mut total = RealPoly::zero();
        for col in 0..n {
            let minor: Vec<Vec<RealPoly>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &m[0][col] * &leibniz(&minor);
            total = if col % 2 == 0 { &total + &term } else { &total - &term };
        }
        total
    }

    #[test]
    fn diagonal_and_identity() {
        assert!(det(&SkewMatrix::identity(3)).unwrap().rep.is_one());
        assert!(det(&SkewMatrix::identity(0)).unwrap().rep.is_one());
        let l1 = lin(Quaternion::i());
        let l2 = lin(Quaternion::j());
        let d = det(&SkewMatrix::diag(vec![l1.clone(), l2.clone()])).unwrap();
        assert_eq!(d.rep, &l1 * &l2);
        let d2 = det2(&l1, &OreFrac::zero(), &OreFrac::zero(), &l2);
        assert_eq!(d2.rep, &l1 * &l2);
        let b = lin(Quaternion::k());
        assert_eq!(det2(&OreFrac::zero(), &b, &l1, &l2).rep, &b * &l1);
        assert_eq!(
            det(&SkewMatrix::zeros(2, 3)),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn constant_diagonal_representative() {
        let m = SkewMatrix::diag(vec![c(Quaternion::i()), c(Quaternion::j())]);
        let p = poly_representative(&det(&m).unwrap()).unwrap();
        assert!(p.is_constant());
        assert_eq!(p.coeff(0).norm_sq(), crate::quaternion::rat(1));
        let s = Poly1::new(vec![1.into(), 0.into(), 1.into()]);
        let cq = Poly1::constant(Quaternion::from_ints(1, 2, 0, 0));
        let dc = DetClass::from_rep(OreFrac::new(s.clone(), &s * &cq).unwrap());
        assert_eq!(poly_representative(&dc), Some(cq));
    }

    #[test]
    fn scaling_by_linear_factor() {
        let a = SkewMatrix::from_poly_rows(vec![
            vec![Poly1::linear(&Quaternion::j()), Poly1::one()],
            vec![Poly1::constant(Quaternion::k()), Poly1::var()],
        ])
        .unwrap();
        let lambda = lin(Quaternion::i());
        assert!(row_ops_check(&a, &RowOp::Scale { row: 0, lambda: lambda.clone() }).unwrap());
        let scaled = det(&apply_row_op(&a, &RowOp::Scale { row: 0, lambda }).unwrap()).unwrap();
        let base = det(&a).unwrap();
        assert_eq!(scaled.sdet_num, &base.sdet_num * &RealPoly::from_ints(&[1, 0, 1]));
        assert!(row_ops_check(&a, &RowOp::Scale { row: 1, lambda: OreFrac::one() }).unwrap());
        assert!(matches!(
            row_ops_check(&a, &RowOp::Scale { row: 2, lambda: OreFrac::one() }),
            Err(Error::IndexOutOfRange { index: 2, size: 2 })
        ));
    }

    #[test]
    fn cramer_examples() {
        let a = SkewMatrix::diag(vec![c(Quaternion::i()), c(Quaternion::j())]);
        let x = cramer_solve(&a, &[OreFrac::one(), OreFrac::one()]).unwrap().unwrap();
        assert_eq!(x, vec![c(-Quaternion::i()), c(-Quaternion::j())]);
        let b = vec![lin(Quaternion::k()), OreFrac::one(), c(Quaternion::j())];
        assert_eq!(cramer_solve(&SkewMatrix::identity(3), &b).unwrap().unwrap(), b);
        assert_eq!(cramer_solve(&SkewMatrix::zeros(2, 2), &b[..2]).unwrap(), None);
        assert!(matches!(cramer_solve(&SkewMatrix::identity(2), &b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn bareiss_matches_leibniz() {
        let m: Vec<Vec<RealPoly>> = [[1, 2, 0], [0, 1, 3], [2, 0, 1]]
            .iter()
            .map(|row| row.iter().map(|&a| RealPoly::from_ints(&[a, 1])).collect())
            .collect();
        assert_eq!(classical_det(&m), leibniz(&m));
        let swap = vec![
            vec![RealPoly::zero(), RealPoly::one()],
            vec![RealPoly::one(), RealPoly::zero()],
        ];
        assert_eq!(classical_det(&swap), RealPoly::from_ints(&[-1]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn pivot_independence(a in arb_matrix(3, 1)) {
            let reference = det(&a).unwrap();
            for p0 in 0..3 {
                for p1 in 0..2 {
                    prop_assert!(det_with_pivots(&a, &[p0, p1]).unwrap().same_invariants(&reference));
                }
            }
        }

        #[test]
        fn binet(a in arb_matrix(2, 1), b in arb_matrix(2, 1)) {
            let ab = det(&a.mul(&b).unwrap()).unwrap();
            prop_assert!(ab.same_invariants(&det(&a).unwrap().mul(&det(&b).unwrap())));
        }

        #[test]
        fn two_by_two_formulas(a in arb_frac(1), b in arb_frac(1), cc in arb_frac(1), d in arb_frac(1)) {
            let m = SkewMatrix::from_rows(vec![vec![a.clone(), b.clone()], vec![cc.clone(), d.clone()]]).unwrap();
            let literal = det2(&a, &b, &cc, &d);
            prop_assert!(literal.same_invariants(&det(&m).unwrap()));
            if !a.is_zero() && !cc.is_zero() {
                // alternative form [c a c^{-1} d - c b]
                let alt = &(&(&(&cc * &a) * &cc.inv().unwrap()) * &d) - &(&cc * &b);
                prop_assert!(DetClass::from_rep(alt).same_invariants(&literal));
            }
        }

        #[test]
        fn row_addition_preserves(a in arb_matrix(3, 1), lambda in arb_frac(1), t in 0usize..3, s in 1usize..3) {
            let source = (t + s) % 3;
            let op = RowOp::AddMultiple { target: t, source, lambda };
            prop_assert!(row_ops_check(&a, &op).unwrap());
        }

        #[test]
        fn row_scaling_multiplies(a in arb_matrix(2, 1), lambda in arb_frac(1), r in 0usize..2) {
            let op = RowOp::Scale { row: r, lambda };
            prop_assert!(row_ops_check(&a, &op).unwrap());
        }

        #[test]
        fn commutative_transcription(entries in prop::collection::vec(arb_real_poly1(2), 9)) {
            let rows: Vec<Vec<RealPoly>> = entries
                .chunks(3)
                .map(|r| r.iter().map(|p| p.to_real().unwrap()).collect())
                .collect();
            let m = SkewMatrix::from_poly_rows(
                rows.iter().map(|r| r.iter().map(RealPoly::to_poly1).collect()).collect(),
            ).unwrap();
            let classical = leibniz(&rows);
            let dc = det(&m).unwrap();
            prop_assert_eq!(dc.is_zero, classical.is_zero());
            prop_assert_eq!(dc.sdet(), reduce_real(&RealPoly::one(), &(&classical * &classical)));
        }

        #[test]
        fn cramer_multiply_back(a in arb_matrix(3, 1), b in prop::collection::vec(arb_frac(1), 3)) {
            let d = det(&a).unwrap();
            match cramer_solve(&a, &b).unwrap() {
                Some(x) => {
                    prop_assert!(!d.is_zero);
                    prop_assert_eq!(a.mul_vec(&x).unwrap(), b);
                }
                None => prop_assert!(d.is_zero),
            }
        }

        #[test]
        fn zero_class_iff_kernel(a in arb_poly_matrix(3, 1), dep in any::<bool>(), l in arb_frac(1)) {
            let mut a = a;
            if dep {
                // force row 2 = row 0 + l * row 1
                for col in 0..3 {
                    let v = a.get(0, col) + &(&l * a.get(1, col));
                    a.set(2, col, v);
                }
            }
            let d = det(&a).unwrap();
            let kernel = kernel_vector(&a);
            prop_assert_eq!(d.is_zero, kernel.is_some());
            prop_assert_eq!(d.is_zero, rank(&a) < 3);
            if let Some(x) = kernel {
                prop_assert!(x.iter().any(|v| !v.is_zero()));
                prop_assert!(a.mul_vec(&x).unwrap().iter().all(OreFrac::is_zero));
            }
            if !d.is_zero {
                prop_assert_eq!(&d.sdet_den, &RealPoly::one());
            }
        }
    }
}
