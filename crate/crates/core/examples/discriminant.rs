//! Multiplicity of a left linear factor and the discriminant Res(P, dP/dv; v).

use skewres::exprio::{parse_poly2, parse_quaternion};
use skewres::resultant::{discriminant, symmetrized_resultant_criterion};
use skewres::Var;

fn main() -> skewres::Result<()> {
    let p = parse_poly2("(q1 - i)^2*(q2 - j)")?;
    let (m, rest) = p.multiplicity(Var::Q1, &parse_quaternion("i")?)?;
    println!("(q1 - i) has multiplicity {m} in P, cofactor {rest}");

    for var in [Var::Q1, Var::Q2] {
        let d = discriminant(&p, var)?;
        println!("Res(P, dP/d{var}; {var}): is_zero = {}, sdet = {}", d.is_zero(), d.sdet().display_factored(var.other().name()));
    }

    // The real symmetrizations see the same vanishing.
    let q = parse_poly2("(q1 - i)*(q2 - k)")?;
    for s in symmetrized_resultant_criterion(&p, &q)? {
        let classical = s.classical.map(|c| c.to_string()).unwrap_or_else(|| "-".into());
        println!("{}: regular zero = {}, classical resultant of symmetrizations = {classical}", s.wrt, s.regular_is_zero);
    }
    Ok(())
}
