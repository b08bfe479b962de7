//! Divisions, greatest common divisors and least common multiples in H[q].

use skewres::exprio::parse_poly1;

fn main() -> skewres::Result<()> {
    let f = parse_poly1("(q - i)*(q - j)*(q + k)")?;
    let g = parse_poly1("(q - 2*j)*(q + k)")?;
    println!("f = {f}");
    println!("g = {g}");

    let (quo, rem) = f.right_divmod(&g)?;
    println!("f = quo*g + rem with quo = {quo}, rem = {rem}");
    assert_eq!(&(&quo * &g) + &rem, f);

    println!("gcrd(f, g) = {}", f.gcrd(&g)?);
    println!("gcld(f, g) = {}", f.gcld(&g)?);

    let l = f.llcm(&g)?;
    println!("llcm(f, g) = {}", l.m);
    assert_eq!(&l.u * &f, l.m);
    assert_eq!(&l.v * &g, l.m);

    let r = f.lcrm(&g)?;
    println!("lcrm(f, g) = {}", r.m);
    assert_eq!(&f * &r.u, r.m);

    // Left division by q - a evaluates at a; symm is real.
    let h = parse_poly1("q^2 + q*i + j")?;
    let a = skewres::exprio::parse_quaternion("k")?;
    println!("h(k) = {}", h.eval(&a));
    println!("symm(h) = {}", h.symm()?);
    println!("Cullen derivative of h = {}", h.cullen_derivative());
    Ok(())
}
