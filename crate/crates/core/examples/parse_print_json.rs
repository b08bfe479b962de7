//! The expression language, canonical printing, LaTeX and JSON.

use skewres::exprio::{latex_poly2, parse, parse_poly2, print_poly2, to_json_string, Poly2Json};

fn main() -> skewres::Result<()> {
    let text = "3/2*q1^2*q2*k - q2*i + conj(q1 - j)";
    println!("tree: {:?}", parse(text)?);
    let p = parse_poly2(text)?;
    let printed = print_poly2(&p);
    println!("canonical: {printed}");
    println!("latex: {}", latex_poly2(&p));
    assert_eq!(parse_poly2(&printed)?, p);

    let doc = Poly2Json::from(&p);
    let json = to_json_string(&doc);
    println!("{json}");
    let back: Poly2Json = serde_json::from_str(&json).expect("valid JSON");
    assert_eq!(back.to_poly()?, p);

    match parse("q1 + (q2 *") {
        Err(e) => println!("error: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
