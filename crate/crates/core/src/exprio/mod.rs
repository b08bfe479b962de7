//! Text and JSON forms of quaternionic polynomials.
//!
//! ```text
//! expr    = term { ("+" | "-") term } ;
//! term    = unary { "*" unary } ;            (* "*" is the star product *)
//! unary   = "-" unary | power ;
//! power   = atom { "^" integer } ;
//! atom    = rational | "i" | "j" | "k" | "q" | "q1" | "q2"
//!         | "conj" "(" expr ")" | "symm" "(" expr ")" | "(" expr ")" ;
//! rational = integer [ "/" integer ] ;
//! ```
//!
//! Juxtaposition is not multiplication. `q` cannot be mixed with `q1`/`q2`.

mod json;
mod print;

pub use json::*;
pub use print::{latex_poly1, latex_poly2, print_poly1, print_poly2};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyone::Poly1;
use crate::polytwo::{Poly2, Var};
use crate::quaternion::{Quaternion, Rational};

/// Largest exponent accepted by the parser.
pub const MAX_EXPONENT: u32 = 255;
/// Deepest nesting of parentheses, `conj`, `symm` and unary minus.
pub const MAX_NESTING: usize = 128;
/// Bound on `bits * exponent` for the coefficients of a power.
pub const MAX_COEFFICIENT_BITS: u64 = 1 << 20;
/// Most binary and power operators in one expression.
pub const MAX_OPERATORS: usize = 4096;
/// Largest degree (per variable) produced by lowering.
pub const MAX_DEGREE: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Unit {
    I,
    J,
    K,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarName {
    Q,
    Q1,
    Q2,
}

/// Syntax tree of the surface language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    RationalLit(Rational),
    UnitLit(Unit),
    Var(VarName),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    StarMul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Conj(Box<Expr>),
    Symm(Box<Expr>),
    Paren(Box<Expr>),
}

impl Expr {
    fn children(&self) -> [Option<&Expr>; 2] {
        match self {
            Expr::RationalLit(_) | Expr::UnitLit(_) | Expr::Var(_) => [None, None],
            Expr::Neg(e) | Expr::Pow(e, _) | Expr::Conj(e) | Expr::Symm(e) | Expr::Paren(e) => [Some(e), None],
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::StarMul(a, b) => [Some(a), Some(b)],
        }
    }

    /// Which of `q`, `q1`, `q2` occur.
    pub fn variables(&self) -> [bool; 3] {
        let mut out = [false; 3];
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            if let Expr::Var(v) = e {
                out[*v as usize] = true;
            }
            stack.extend(e.children().into_iter().flatten());
        }
        out
    }
}

// Operator chains are left-deep, so the default recursive drop could exhaust the stack.
impl Drop for Expr {
    fn drop(&mut self) {
        fn detach(e: &mut Expr, out: &mut Vec<Box<Expr>>) {
            let leaf = || Box::new(Expr::UnitLit(Unit::I));
            match e {
                Expr::RationalLit(_) | Expr::UnitLit(_) | Expr::Var(_) => {}
                Expr::Neg(a) | Expr::Pow(a, _) | Expr::Conj(a) | Expr::Symm(a) | Expr::Paren(a) => {
                    out.push(std::mem::replace(a, leaf()))
                }
                Expr::Add(a, b) | Expr::Sub(a, b) | Expr::StarMul(a, b) => {
                    out.push(std::mem::replace(a, leaf()));
                    out.push(std::mem::replace(b, leaf()));
                }
            }
        }
        let mut stack = Vec::new();
        detach(self, &mut stack);
        while let Some(mut e) = stack.pop() {
            detach(&mut e, &mut stack);
        }
    }
}

/// A lowered polynomial in one or two variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Polynomial {
    One(Poly1),
    Two(Poly2),
}

impl Polynomial {
    pub fn to_text(&self) -> String {
        match self {
            Polynomial::One(p) => print_poly1(p, "q"),
            Polynomial::Two(p) => print_poly2(p),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
    operators: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: &str, expected: &[&str]) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            let token = (byte as char).to_string();
            Err(self.error("unexpected input", &[token.as_str()]))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer", &["integer"]));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit run"))
    }

    /// Runs `f` one nesting level deeper; bounds recursion on hostile input.
    fn nested<T>(&mut self, f: impl FnOnce(&mut Self) -> Result<T>) -> Result<T> {
        if self.depth >= MAX_NESTING {
            return Err(self.error(&format!("nesting exceeds {MAX_NESTING}"), &[]));
        }
        self.depth += 1;
        let out = f(self);
        self.depth -= 1;
        out
    }

    /// Counts one binary or power node; left-deep chains are built iteratively
    /// but dropped and lowered recursively, so their length is bounded too.
    fn operator(&mut self) -> Result<()> {
        self.operators += 1;
        if self.operators > MAX_OPERATORS {
            return Err(self.error(&format!("more than {MAX_OPERATORS} operators"), &[]));
        }
        self.pos += 1;
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.operator()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.operator()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(b'*') {
            self.operator()?;
            lhs = Expr::StarMul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.nested(Self::unary)?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let mut base = self.atom()?;
        while self.peek() == Some(b'^') {
            self.operator()?;
            let at = self.pos;
            let exp = self.integer()?;
            let exp = u32::try_from(exp)
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| Error::Syntax {
                    offset: at,
                    message: format!("exponent exceeds {MAX_EXPONENT}"),
                    expected: vec!["integer".into()],
                })?;
            base = Expr::Pow(Box::new(base), exp);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        const ATOMS: &[&str] = &["integer", "i", "j", "k", "q", "q1", "q2", "conj", "symm", "("];
        match self.peek() {
            Some(b'0'..=b'9') => {
                let num = self.integer()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.error("zero denominator", &["nonzero integer"]));
                    }
                    return Ok(Expr::RationalLit(Rational::new(num, den)));
                }
                Ok(Expr::RationalLit(Rational::from_integer(num)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.nested(Self::expr)?;
                self.expect(b')')?;
                Ok(Expr::Paren(Box::new(inner)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
                    self.pos += 1;
                }
                let word = &self.src[start..self.pos];
                let node = match word {
                    b"i" => Expr::UnitLit(Unit::I),
                    b"j" => Expr::UnitLit(Unit::J),
                    b"k" => Expr::UnitLit(Unit::K),
                    b"q" => Expr::Var(VarName::Q),
                    b"q1" => Expr::Var(VarName::Q1),
                    b"q2" => Expr::Var(VarName::Q2),
                    b"conj" | b"symm" => {
                        self.expect(b'(')?;
                        let inner = Box::new(self.nested(Self::expr)?);
                        self.expect(b')')?;
                        return Ok(if word == b"conj" { Expr::Conj(inner) } else { Expr::Symm(inner) });
                    }
                    _ => {
                        self.pos = start;
                        return Err(self.error("unknown identifier", ATOMS));
                    }
                };
                Ok(node)
            }
            Some(_) => Err(self.error("unexpected input", ATOMS)),
            None => Err(self.error("unexpected end of input", ATOMS)),
        }
    }
}

/// Parses one expression; the whole input must be consumed.
pub fn parse(text: &str) -> Result<Expr> {
    parse_bytes(text.as_bytes())
}

/// Like [`parse`], on raw bytes.
pub fn parse_bytes(src: &[u8]) -> Result<Expr> {
    let mut parser = Parser { src, pos: 0, depth: 0, operators: 0 };
    let expr = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.error("trailing input", &["+", "-", "*", "^", "end of input"]));
    }
    let [q, q1, q2] = expr.variables();
    if q && (q1 || q2) {
        return Err(Error::MixedVariable);
    }
    Ok(expr)
}

// `q` lowers as `q1`; the caller reads the result back as one variable.
fn lower_tree(e: &Expr) -> Result<Poly2> {
    let out = match e {
        Expr::RationalLit(r) => Poly2::constant(Quaternion::real(r.clone())),
        Expr::UnitLit(u) => Poly2::constant(match u {
            Unit::I => Quaternion::i(),
            Unit::J => Quaternion::j(),
            Unit::K => Quaternion::k(),
        }),
        Expr::Var(VarName::Q | VarName::Q1) => Poly2::var(Var::Q1),
        Expr::Var(VarName::Q2) => Poly2::var(Var::Q2),
        Expr::Neg(a) => -&lower_tree(a)?,
        Expr::Add(..) | Expr::Sub(..) => {
            // walk the left spine instead of recursing down it
            let mut rhs = Vec::new();
            let mut cur = e;
            while let Expr::Add(a, b) | Expr::Sub(a, b) = cur {
                rhs.push((matches!(cur, Expr::Add(..)), b.as_ref()));
                cur = a;
            }
            let mut acc = lower_tree(cur)?;
            for (plus, b) in rhs.into_iter().rev() {
                let b = lower_tree(b)?;
                acc = if plus { &acc + &b } else { &acc - &b };
            }
            acc
        }
        Expr::StarMul(..) => {
            let mut rhs = Vec::new();
            let mut cur = e;
            while let Expr::StarMul(a, b) = cur {
                rhs.push(b.as_ref());
                cur = a;
            }
            let mut acc = lower_tree(cur)?;
            for b in rhs.into_iter().rev() {
                let b = lower_tree(b)?;
                check_degree(acc.deg_q1() + b.deg_q1(), acc.deg_q2() + b.deg_q2())?;
                if max_bits(&acc) + max_bits(&b) > MAX_COEFFICIENT_BITS {
                    return Err(Error::CoefficientLimit { bits: MAX_COEFFICIENT_BITS });
                }
                acc = &acc * &b;
            }
            acc
        }
        Expr::Pow(..) => {
            let mut exps = Vec::new();
            let mut cur = e;
            while let Expr::Pow(a, exp) = cur {
                exps.push(*exp);
                cur = a;
            }
            let mut acc = lower_tree(cur)?;
            for exp in exps.into_iter().rev() {
                let n = exp as usize;
                check_degree(acc.deg_q1() * n, acc.deg_q2() * n)?;
                check_bits(&acc, exp)?;
                acc = acc.pow(exp);
            }
            acc
        }
        Expr::Conj(a) => lower_tree(a)?.conj_reg2(),
        Expr::Symm(a) => {
            let a = lower_tree(a)?;
            check_degree(2 * a.deg_q1(), 2 * a.deg_q2())?;
            check_bits(&a, 2)?;
            a.symm2()?
        }
        Expr::Paren(a) => lower_tree(a)?,
    };
    Ok(out)
}

fn max_bits(p: &Poly2) -> u64 {
    p.rows()
        .iter()
        .flatten()
        .flat_map(|c| c.components())
        .map(|r| r.numer().bits().max(r.denom().bits()))
        .max()
        .unwrap_or(0)
}

// Products add coefficient sizes; a power multiplies them by the exponent.
fn check_bits(p: &Poly2, exp: u32) -> Result<()> {
    if max_bits(p).saturating_mul(u64::from(exp)) > MAX_COEFFICIENT_BITS {
        return Err(Error::CoefficientLimit { bits: MAX_COEFFICIENT_BITS });
    }
    Ok(())
}

fn check_degree(d1: usize, d2: usize) -> Result<()> {
    if d1 > MAX_DEGREE || d2 > MAX_DEGREE {
        return Err(Error::DegreeLimit { limit: MAX_DEGREE });
    }
    Ok(())
}

/// Lowers to coefficient arrays; star products become `star_mul`.
///
/// Expressions without variables lower to a constant [`Polynomial::Two`].
pub fn lower(e: &Expr) -> Result<Polynomial> {
    let [q, q1, q2] = e.variables();
    if q && (q1 || q2) {
        return Err(Error::MixedVariable);
    }
    let p = lower_tree(e)?;
    if q {
        Ok(Polynomial::One(p.as_poly1_in(Var::Q1).expect("single variable")))
    } else {
        Ok(Polynomial::Two(p))
    }
}

/// Parses and lowers a polynomial in `q` (constants allowed).
pub fn parse_poly1(text: &str) -> Result<Poly1> {
    let e = parse(text)?;
    let [_, q1, q2] = e.variables();
    if q1 || q2 {
        return Err(Error::WrongVariables { expected: "q".into(), found: "q1/q2".into() });
    }
    match lower(&e)? {
        Polynomial::One(p) => Ok(p),
        Polynomial::Two(p) => Ok(p.as_poly1_in(Var::Q1).expect("constant")),
    }
}

/// Parses and lowers a polynomial in `q1`, `q2` (constants allowed).
pub fn parse_poly2(text: &str) -> Result<Poly2> {
    match lower(&parse(text)?)? {
        Polynomial::Two(p) => Ok(p),
        Polynomial::One(_) => Err(Error::WrongVariables { expected: "q1, q2".into(), found: "q".into() }),
    }
}

/// Parses a constant expression such as `1 + 2*i` or `3/2*k`.
pub fn parse_quaternion(text: &str) -> Result<Quaternion> {
    let p = parse_poly2(text)?;
    if p.deg_q1() > 0 || p.deg_q2() > 0 {
        return Err(Error::WrongVariables { expected: "a constant".into(), found: "a polynomial".into() });
    }
    Ok(p.coeff(0, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytwo::tests::arb_poly2;
    use crate::polyone::tests::arb_poly1;
    use crate::quaternion::ratio;
    use proptest::prelude::*;

    fn b(e: Expr) -> Box<Expr> {
        Box::new(e)
    }

    #[test]
    fn parses_examples() {
        let e = parse("(q1 - i)*(q2 - j)").unwrap();
        let expected = Expr::StarMul(
            b(Expr::Paren(b(Expr::Sub(b(Expr::Var(VarName::Q1)), b(Expr::UnitLit(Unit::I)))))),
            b(Expr::Paren(b(Expr::Sub(b(Expr::Var(VarName::Q2)), b(Expr::UnitLit(Unit::J)))))),
        );
        assert_eq!(e, expected);
        assert_eq!(
            parse("q^2 + 1").unwrap(),
            Expr::Add(b(Expr::Pow(b(Expr::Var(VarName::Q)), 2)), b(Expr::RationalLit(crate::quaternion::rat(1))))
        );
        let text = "3/2*q1^2*q2*k - q2*i";
        let p = parse_poly2(text).unwrap();
        assert_eq!(parse_poly2(&print_poly2(&p)).unwrap(), p);
        assert_eq!(p.coeff(2, 1), Quaternion::k().scale(&ratio(3, 2)));
    }

    #[test]
    fn precedence() {
        let e = parse("i + j*k^2").unwrap();
        let expected = Expr::Add(
            b(Expr::UnitLit(Unit::I)),
            b(Expr::StarMul(b(Expr::UnitLit(Unit::J)), b(Expr::Pow(b(Expr::UnitLit(Unit::K)), 2)))),
        );
        assert_eq!(e, expected);
        assert_eq!(parse("-q^2").unwrap(), Expr::Neg(b(Expr::Pow(b(Expr::Var(VarName::Q)), 2))));
        assert_eq!(
            parse("q - 1 - i").unwrap(),
            Expr::Sub(
                b(Expr::Sub(b(Expr::Var(VarName::Q)), b(Expr::RationalLit(crate::quaternion::rat(1))))),
                b(Expr::UnitLit(Unit::I))
            )
        );
    }

    #[test]
    fn lowering() {
        let p = parse_poly2("(q1-i)*(q2-j)").unwrap();
        let expected = Poly2::new(vec![
            vec![Quaternion::k(), -Quaternion::i()],
            vec![-Quaternion::j(), Quaternion::one()],
        ]);
        assert_eq!(p, expected);
        assert_eq!(parse_poly1("symm(q - i)").unwrap(), Poly1::new(vec![1.into(), 0.into(), 1.into()]));
        assert!(parse_poly2("0").unwrap().is_zero());
        assert_eq!(parse_poly1("conj(q*i)").unwrap(), Poly1::monomial(1, -Quaternion::i()));
        assert_eq!(parse_quaternion("1 + 2*i").unwrap(), Quaternion::from_ints(1, 2, 0, 0));
    }

    #[test]
    fn errors() {
        assert_eq!(parse("q + q1"), Err(Error::MixedVariable));
        match parse("q1 + ") {
            Err(Error::Syntax { offset, expected, .. }) => {
                assert_eq!(offset, 5);
                assert!(expected.contains(&"q2".to_string()));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("q q"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse("1/0"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x"), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse("q^256"), Err(Error::Syntax { .. })));
        assert_eq!(lower(&parse("q^200^200").unwrap()), Err(Error::DegreeLimit { limit: MAX_DEGREE }));
        assert!(matches!(parse_poly2("q"), Err(Error::WrongVariables { .. })));
    }

    #[test]
    fn hostile_sizes_are_rejected_without_overflow() {
        let deep = "(".repeat(100_000);
        assert!(matches!(parse(&deep), Err(Error::Syntax { .. })));
        assert!(matches!(parse(&"-".repeat(100_000)), Err(Error::Syntax { .. })));
        let long = vec!["1"; 100_000].join("+");
        assert!(matches!(parse(&long), Err(Error::Syntax { .. })));
        // the longest accepted chain still lowers on a test thread's stack
        let ok = vec!["q"; MAX_OPERATORS + 1].join("+");
        assert_eq!(parse_poly1(&ok).unwrap(), Poly1::var().scale_left(&Quaternion::real(crate::quaternion::rat(MAX_OPERATORS as i64 + 1))));
        assert_eq!(lower(&parse("2^255^255^255").unwrap()), Err(Error::CoefficientLimit { bits: MAX_COEFFICIENT_BITS }));
        assert_eq!(lower(&parse("((2^255)^255)^255").unwrap()), Err(Error::CoefficientLimit { bits: MAX_COEFFICIENT_BITS }));
        assert!(lower(&parse("(2^255)^255").unwrap()).is_ok());
        let product = vec!["(2^255)^255"; 20].join("*");
        assert_eq!(lower(&parse(&product).unwrap()), Err(Error::CoefficientLimit { bits: MAX_COEFFICIENT_BITS }));
        let nested = format!("{}q{}", "(".repeat(MAX_NESTING), ")".repeat(MAX_NESTING));
        assert_eq!(parse_poly1(&nested).unwrap(), Poly1::var());
    }

    #[test]
    fn printing() {
        let p = parse_poly1("k - j").unwrap();
        assert_eq!(print_poly1(&p, "q"), "-j + k");
        assert_eq!(print_poly1(&Poly1::zero(), "q"), "0");
        assert_eq!(print_poly2(&Poly2::zero()), "0");
        let q = parse_poly2("(q1-i)*(q2-j)").unwrap();
        assert_eq!(print_poly2(&q), "q1*q2 - q1*j - q2*i + k");
        let r = parse_poly1("q^2*(1 + 2*i) - q*3/2 + 1 - k").unwrap();
        assert_eq!(print_poly1(&r, "q"), "q^2*(1 + 2*i) - q*3/2 + 1 - k");
        assert_eq!(latex_poly2(&q), "q_1 q_2 - q_1 j - q_2 i + k");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn round_trip_two(p in arb_poly2(3, 3)) {
            prop_assert_eq!(parse_poly2(&print_poly2(&p)).unwrap(), p);
        }

        #[test]
        fn round_trip_one(p in arb_poly1(5)) {
            prop_assert_eq!(parse_poly1(&print_poly1(&p, "q")).unwrap(), p);
        }

        #[test]
        fn parser_is_total(bytes in prop::collection::vec(any::<u8>(), 0..40)) {
            if let Ok(e) = parse_bytes(&bytes) {
                let _ = lower(&e);
            }
        }

        #[test]
        fn parser_is_total_on_grammar_soup(parts in prop::collection::vec(
            prop::sample::select(vec!["q1", "q2", "q", "i", "(", ")", "+", "-", "*", "^", "2", "3/4", "conj(", "symm(", " "]), 0..30)) {
            let text: String = parts.concat();
            if let Ok(e) = parse(&text) {
                let _ = lower(&e);
            }
        }
    }
}
