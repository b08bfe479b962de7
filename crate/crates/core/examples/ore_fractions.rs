//! Left fractions d^-1 * n over H[q].

use skewres::exprio::parse_poly1;
use skewres::OreFrac;

fn main() -> skewres::Result<()> {
    let a = OreFrac::new(parse_poly1("q - i")?, parse_poly1("q + j")?)?;
    let b = OreFrac::new(parse_poly1("q^2 + 1")?, parse_poly1("k")?)?;
    println!("a = {a}");
    println!("b = {b}");
    println!("a + b = {}", &a + &b);
    println!("a * b = {}", &a * &b);
    println!("b * a = {}", &b * &a);
    println!("a / b = {}", a.div(&b)?);

    let inv = a.inv()?;
    println!("a^-1 = {inv}");
    assert!((&a * &inv).is_one());

    // Reduction is canonical: a common left factor of den and num cancels.
    let one = OreFrac::new(parse_poly1("(q - i)*(q + j)")?, parse_poly1("(q - i)*(q + j)")?)?;
    println!("reduced: {one}");

    let (num, den) = a.to_right();
    println!("as a right fraction: ({num}) * ({den})^-1");
    let (d, n) = a.symm_reduced()?;
    println!("symmetrized: ({n}) / ({d})");
    Ok(())
}
