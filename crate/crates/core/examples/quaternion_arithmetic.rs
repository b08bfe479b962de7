//! Exact quaternion arithmetic over the rationals.

use skewres::quaternion::ratio;
use skewres::Quaternion;

fn main() {
    let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
    println!("i*j = {}", &i * &j);
    println!("j*i = {}", &j * &i);
    println!("i*j*k = {}", &(&i * &j) * &k);

    let a = Quaternion::new(ratio(1, 2), ratio(-1, 3), ratio(2, 1), ratio(0, 1));
    let inv = a.inverse().expect("nonzero");
    println!("a = {a}");
    println!("|a|^2 = {}", a.norm_sq());
    println!("a^-1 = {inv}");
    println!("a * a^-1 = {}", &a * &inv);
    println!("conj(a) = {}", a.conj());
    println!("a commutes with i: {}", a.commutes(&i));

    // Every imaginary unit lies on the sphere x^2 = -1.
    let u = Quaternion::new(ratio(0, 1), ratio(3, 5), ratio(4, 5), ratio(0, 1));
    println!("u = {u}, u^2 = {}, imaginary unit: {}", u.pow(2), u.is_imaginary_unit());
}
