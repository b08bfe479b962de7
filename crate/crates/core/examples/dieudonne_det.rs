//! Dieudonne determinant of a matrix over the fraction field, its real
//! invariant sdet, and Cramer's rule.

use skewres::dieudonne::{self, cramer_solve};
use skewres::exprio::{matrix_from_json, parse_poly1};
use skewres::{OreFrac, SkewMatrix};

fn main() -> skewres::Result<()> {
    let poly = |s: &str| parse_poly1(s).map(OreFrac::from_poly);
    let a = SkewMatrix::from_rows(vec![
        vec![poly("q - i")?, poly("j")?],
        vec![poly("k")?, poly("q + j")?],
    ])?;
    println!("A =\n{a}");
    let d = dieudonne::det(&a)?;
    println!("Det(A) representative: {}", d.rep);
    println!("sdet(A) = ({}) / ({})", d.sdet_num, d.sdet_den);

    // A 2x2 system with fraction entries, solved exactly.
    let b = vec![poly("1")?, poly("q")?];
    let x = cramer_solve(&a, &b)?.expect("Det(A) is nonzero");
    for (n, xi) in x.iter().enumerate() {
        println!("x{n} = {xi}");
    }
    assert_eq!(a.mul_vec(&x)?, b);

    // Rows (i, j) and (k, 1) are left-dependent: k = (k*i^-1)*i and 1 = (k*i^-1)*j.
    let m = matrix_from_json(r#"{"version":1,"rows":2,"cols":2,"entries":[["i","j"],["k","1"]]}"#)?;
    let dm = dieudonne::det(&m)?;
    println!("Det of [[i, j], [k, 1]]: is_zero = {}, sdet = {}", dm.is_zero, dm.sdet_num);
    Ok(())
}
