//! Common zeros and common left factors force resultants to vanish.

use skewres::exprio::{parse_poly2, parse_quaternion};
use skewres::resultant::{check_common_zero, check_left_factor_criterion};

fn main() -> skewres::Result<()> {
    // (i, i) is a common zero; the point must have commuting coordinates.
    let p = parse_poly2("q1*q2 + 1")?;
    let q = parse_poly2("q1 - q2")?;
    let i = parse_quaternion("i")?;
    let report = check_common_zero(&p, &q, &i, &i)?;
    println!("P(i, i) = {}, Q(i, i) = {}", report.p_value, report.q_value);
    for r in report.resultants.iter().flatten() {
        println!("Res(P, Q; {}): is_zero = {}, sdet vanishes at the point = {}", r.wrt, r.is_zero, r.sdet_vanishes);
    }
    assert!(report.holds());

    let j = parse_quaternion("j")?;
    match check_common_zero(&p, &q, &i, &j) {
        Err(e) => println!("(i, j): {e}"),
        Ok(_) => unreachable!("i and j do not commute"),
    }

    let p = parse_poly2("(q1 - i)*(q2^2 + j)")?;
    let q = parse_poly2("(q1 - i)*(q1 + q2*k)")?;
    for check in check_left_factor_criterion(&p, &q, &[])? {
        println!(
            "{}: common left divisor {}, roots {:?}, resultant is zero: {}",
            check.var,
            check.common_divisor,
            check.roots.iter().map(ToString::to_string).collect::<Vec<_>>(),
            check.resultant_is_zero
        );
        assert!(check.holds());
    }
    Ok(())
}
