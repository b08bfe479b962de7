//! Regular resultants of two polynomials in q1, q2 with respect to either
//! variable.

use skewres::exprio::{parse_poly2, print_poly1};
use skewres::resultant::resultant;
use skewres::Var;

fn main() -> skewres::Result<()> {
    // A common left factor (q1 - i) kills the resultant in q1 only.
    let p = parse_poly2("(q1 - i)*(q2 - j)")?;
    let q = parse_poly2("(q1 - i)*(q2 - k)")?;
    for wrt in [Var::Q1, Var::Q2] {
        let r = resultant(&p, &q, wrt)?;
        println!("Res(P, Q; {wrt}) with Sylvester matrix\n{}", r.sylvester);
        println!("  is_zero = {}", r.is_zero());
        println!("  sdet = {}", r.sdet().display_factored(wrt.other().name()));
        if let Some(rep) = &r.representative {
            println!("  representative = {}", print_poly1(rep, wrt.other().name()));
        }
    }
    Ok(())
}
