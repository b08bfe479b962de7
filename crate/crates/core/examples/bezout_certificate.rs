//! A nonzero resultant gives P*H + Q*K equal to a nonzero polynomial in
//! the other variable; a zero resultant gives nontrivial cofactors with
//! P*H + Q*K = 0.

use skewres::exprio::{parse_poly2, print_poly1};
use skewres::resultant::{bezout_certificate, kernel_cofactors};
use skewres::Var;

fn main() -> skewres::Result<()> {
    let p = parse_poly2("q1^2 + q2*i + 1")?;
    let q = parse_poly2("q1*j - q2")?;
    let c = bezout_certificate(&p, &q, Var::Q1)?;
    println!("H = {}", c.h);
    println!("K = {}", c.k);
    println!("P*H + Q*K = {}", print_poly1(&c.target, "q2"));
    println!("central scale = {}", c.central_scale.display_in("q2"));
    assert!(c.verify(&p, &q));
    assert!(c.degree_bounds_hold(&p, &q));

    let p = parse_poly2("(q1 - i)*(q2 - j)")?;
    let q = parse_poly2("(q1 - i)*(q2 - k)")?;
    let c = kernel_cofactors(&p, &q, Var::Q1)?.expect("resultant vanishes");
    println!("kernel cofactors: H = {}, K = {}", c.h, c.k);
    assert!(c.verify(&p, &q));
    Ok(())
}
