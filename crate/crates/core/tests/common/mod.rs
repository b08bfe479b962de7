//! Seeded generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skewres::dieudonne::classical_det;
use skewres::quaternion::{rat, ratio};
use skewres::{OreFrac, Poly1, Poly2, Quaternion, RealPoly, SkewMatrix, Var};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer components in `-r..=r`.
pub fn quaternion(rng: &mut ChaCha8Rng, r: i64) -> Quaternion {
    Quaternion::from_ints(rng.gen_range(-r..=r), rng.gen_range(-r..=r), rng.gen_range(-r..=r), rng.gen_range(-r..=r))
}

pub fn nonzero_quaternion(rng: &mut ChaCha8Rng, r: i64) -> Quaternion {
    loop {
        let q = quaternion(rng, r);
        if !q.is_zero() {
            return q;
        }
    }
}

/// Components `p/q` with `|p| <= 3`, `q` in 1..=3.
pub fn rational_quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    let mut c = || ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3));
    Quaternion::new(c(), c(), c(), c())
}

/// Degree exactly `deg` (nonzero leading coefficient).
pub fn poly1_exact(rng: &mut ChaCha8Rng, deg: usize) -> Poly1 {
    let mut coeffs: Vec<Quaternion> = (0..deg).map(|_| quaternion(rng, 2)).collect();
    coeffs.push(nonzero_quaternion(rng, 2));
    Poly1::new(coeffs)
}

pub fn poly1(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly1 {
    let deg = rng.gen_range(0..=max_deg);
    poly1_exact(rng, deg)
}

pub fn monic_poly1(rng: &mut ChaCha8Rng, deg: usize) -> Poly1 {
    poly1_exact(rng, deg).monic_left()
}

pub fn real_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> RealPoly {
    let deg = rng.gen_range(0..=max_deg);
    let mut coeffs: Vec<_> = (0..deg).map(|_| rat(rng.gen_range(-3..=3))).collect();
    let mut lead = 0;
    while lead == 0 {
        lead = rng.gen_range(-3..=3);
    }
    coeffs.push(rat(lead));
    RealPoly::new(coeffs)
}

/// Bidegree exactly `(n, m)` unless `sparse` zeroes some interior terms.
pub fn poly2_exact(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Poly2 {
    loop {
        let rows: Vec<Vec<Quaternion>> = (0..=n)
            .map(|_| {
                (0..=m)
                    .map(|_| if rng.gen_bool(0.7) { quaternion(rng, 2) } else { Quaternion::zero() })
                    .collect()
            })
            .collect();
        let p = Poly2::new(rows);
        if !p.is_zero() && p.deg_q1() == n && p.deg_q2() == m {
            return p;
        }
    }
}

/// Random nonzero polynomial of bidegree at most `(n, m)`.
pub fn poly2(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Poly2 {
    let (a, b) = (rng.gen_range(0..=n), rng.gen_range(0..=m));
    poly2_exact(rng, a, b)
}

pub fn frac(rng: &mut ChaCha8Rng, max_deg: usize) -> OreFrac {
    let den = poly1(rng, max_deg);
    let num = if rng.gen_bool(0.15) { Poly1::zero() } else { poly1(rng, max_deg) };
    OreFrac::new(den, num).expect("nonzero denominator")
}

/// Entries are polynomials with probability `poly_bias`, otherwise fractions.
pub fn matrix(rng: &mut ChaCha8Rng, n: usize, max_deg: usize, poly_bias: f64) -> SkewMatrix {
    let entries = (0..n * n)
        .map(|_| {
            if rng.gen_bool(poly_bias) {
                if rng.gen_bool(0.1) {
                    OreFrac::zero()
                } else {
                    OreFrac::from_poly(poly1(rng, max_deg))
                }
            } else {
                frac(rng, max_deg)
            }
        })
        .collect();
    SkewMatrix::new(n, n, entries).expect("square")
}

pub fn poly_matrix(rng: &mut ChaCha8Rng, n: usize, max_deg: usize) -> SkewMatrix {
    matrix(rng, n, max_deg, 1.0)
}

pub fn linear(v: Var, a: &Quaternion) -> Poly2 {
    Poly2::linear(v, a)
}

/// Left multiplication by `w + xi + yj + zk` on the basis `1, i, j, k`.
fn left_mult(c: &Quaternion) -> [[skewres::Rational; 4]; 4] {
    let [w, x, y, z] = c.components().map(Clone::clone);
    [
        [w.clone(), -x.clone(), -y.clone(), -z.clone()],
        [x.clone(), w.clone(), -z.clone(), y.clone()],
        [y.clone(), z.clone(), w.clone(), -x.clone()],
        [z, -y, x, w],
    ]
}

/// Real `4n x 4n` representation of a polynomial matrix over `H[q]`.
///
/// It is multiplicative and sends elementary matrices to determinant 1 and
/// `diag(d, 1, ...)` to `|d|^4`, so `det L(A) = sdet(A)^2`.
pub fn real_representation(a: &SkewMatrix) -> Vec<Vec<RealPoly>> {
    let n = a.nrows();
    let mut out = vec![vec![RealPoly::zero(); 4 * n]; 4 * n];
    for r in 0..n {
        for c in 0..n {
            let p = a.get(r, c).as_poly().expect("polynomial matrix");
            let mut block: Vec<Vec<Vec<skewres::Rational>>> = vec![vec![Vec::new(); 4]; 4];
            for coeff in p.coeffs() {
                let m = left_mult(coeff);
                for (u, row) in m.iter().enumerate() {
                    for (v, x) in row.iter().enumerate() {
                        block[u][v].push(x.clone());
                    }
                }
            }
            for u in 0..4 {
                for v in 0..4 {
                    out[4 * r + u][4 * c + v] = RealPoly::new(std::mem::take(&mut block[u][v]));
                }
            }
        }
    }
    out
}

/// `det L(A)` via fraction-free elimination over `Q[q]`.
pub fn real_representation_det(a: &SkewMatrix) -> RealPoly {
    classical_det(&real_representation(a))
}

/// Commutative determinant by cofactor expansion, for `RealPoly` matrices.
pub fn leibniz_det(m: &[Vec<RealPoly>]) -> RealPoly {
    let n = m.len();
    if n == 0 {
        return RealPoly::one();
    }
    let mut total = RealPoly::zero();
    for c in 0..n {
        let minor: Vec<Vec<RealPoly>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][c] * &leibniz_det(&minor);
        total = if c % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

/// Star product computed straight from the convolution definition, independent of `Poly2::mul`.
pub fn star2(p: &Poly2, q: &Poly2) -> Poly2 {
    let (a, b) = (p.rows(), q.rows());
    if a.is_empty() || b.is_empty() {
        return Poly2::zero();
    }
    let (n1, m1, n2, m2) = (a.len(), a[0].len(), b.len(), b[0].len());
    let mut out = vec![vec![Quaternion::zero(); m1 + m2 - 1]; n1 + n2 - 1];
    for (i, ra) in a.iter().enumerate() {
        for (j, x) in ra.iter().enumerate() {
            for (k, rb) in b.iter().enumerate() {
                for (l, y) in rb.iter().enumerate() {
                    out[i + k][j + l] = &out[i + k][j + l] + &(x * y);
                }
            }
        }
    }
    Poly2::new(out)
}
