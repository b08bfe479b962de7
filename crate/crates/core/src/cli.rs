//! Command-line front end: parse, compute, report.
//!
//! Exit codes: 0 success, 1 parse or validation error, 2 hypothesis
//! violation (non-commuting point, zero or nonzero resultant where the
//! command needs the other, failed self-test).

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};

use crate::dieudonne::{self, SkewMatrix};
use crate::error::{Error, Result};
use crate::exprio::{
    self, latex_poly1, latex_poly2, print_poly1, to_json_string, CertificateJson, DetJson, Poly1Json, Poly2Json,
    Polynomial, QuaternionJson, RealPolyJson, ResultantJson, JSON_VERSION,
};
use crate::polyone::{Poly1, RealPoly};
use crate::polytwo::{Poly2, Var};
use crate::quaternion::Quaternion;
use crate::resultant::{self, BezoutCertificate, ResultantReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "skewres", version, about = "Exact regular resultants of quaternionic polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Format {
    /// Emit a versioned JSON document.
    #[arg(long, conflicts_with = "latex")]
    json: bool,
    /// Print polynomials as LaTeX.
    #[arg(long)]
    latex: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Regular resultant Res(P, Q; wrt).
    Res {
        p: String,
        q: String,
        #[arg(long, default_value = "q1")]
        wrt: Var,
        /// Attach a Bezout certificate (nonzero resultant) or kernel cofactors (zero resultant).
        #[arg(long)]
        certificate: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Dieudonne determinant of a JSON matrix of fractions (path, `-` for stdin, or inline JSON).
    Det {
        matrix: String,
        #[command(flatten)]
        format: Format,
    },
    /// Evaluate P at a point; with a second polynomial, check the common-zero corollary.
    Eval {
        p: String,
        q: Option<String>,
        /// `a` for polynomials in q, `a,b` for polynomials in q1, q2.
        #[arg(long)]
        at: String,
        #[command(flatten)]
        format: Format,
    },
    /// Left linear factors: multiplicity of (wrt - a) with --at, otherwise the common left divisor in H[wrt].
    Factor {
        p: String,
        q: Option<String>,
        #[arg(long, default_value = "q1")]
        wrt: Var,
        #[arg(long, conflicts_with = "q")]
        at: Option<String>,
        #[command(flatten)]
        format: Format,
    },
    /// H, K with P*H + Q*K a nonzero polynomial in the other variable.
    Bezout {
        p: String,
        q: String,
        #[arg(long, default_value = "q1")]
        wrt: Var,
        #[command(flatten)]
        format: Format,
    },
    /// Nonzero degree-bounded H, K with P*H + Q*K = 0.
    Kernel {
        p: String,
        q: String,
        #[arg(long, default_value = "q1")]
        wrt: Var,
        #[command(flatten)]
        format: Format,
    },
    /// Discriminant Res(P, dP/dvar; var).
    Disc {
        p: String,
        #[arg(long, default_value = "q1")]
        var: Var,
        #[command(flatten)]
        format: Format,
    },
    /// Symmetrization P * conj(P); with two polynomials, the symmetrized-resultant criterion.
    Symm {
        p: String,
        q: Option<String>,
        #[command(flatten)]
        format: Format,
    },
    /// Golden checks on (q1 - i)*(q2 - j), (q1 - i)*(q2 - k).
    Selftest,
}

/// Outcome of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { code: EXIT_OK, output }
    }

    fn violated(output: String) -> Self {
        Outcome { code: EXIT_HYPOTHESIS, output }
    }
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return Outcome { code, output: e.render().to_string() };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => {
            let code = match e {
                Error::NonCommutingPoint { .. } | Error::SingularSystem => EXIT_HYPOTHESIS,
                Error::Internal(_) | Error::InternalRealityViolation => EXIT_HYPOTHESIS,
                _ => EXIT_INPUT,
            };
            Outcome { code, output: format!("error: {e}\n") }
        }
    }
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Res { p, q, wrt, certificate, format } => res(&p, &q, wrt, certificate, format),
        Command::Det { matrix, format } => det(&matrix, format),
        Command::Eval { p, q, at, format } => eval(&p, q.as_deref(), &at, format),
        Command::Factor { p, q, wrt, at, format } => factor(&p, q.as_deref(), wrt, at.as_deref(), format),
        Command::Bezout { p, q, wrt, format } => bezout(&p, &q, wrt, format),
        Command::Kernel { p, q, wrt, format } => kernel(&p, &q, wrt, format),
        Command::Disc { p, var, format } => disc(&p, var, format),
        Command::Symm { p, q, format } => symm(&p, q.as_deref(), format),
        Command::Selftest => Ok(selftest()),
    }
}

impl Format {
    fn poly1(&self, p: &Poly1, var: &str) -> String {
        if self.latex {
            latex_poly1(p, var)
        } else {
            print_poly1(p, var)
        }
    }

    fn poly2(&self, p: &Poly2) -> String {
        if self.latex {
            latex_poly2(p)
        } else {
            p.to_string()
        }
    }

    fn real(&self, p: &RealPoly, var: &str) -> String {
        if self.latex {
            latex_poly1(&p.to_poly1(), var)
        } else {
            p.display_factored(var)
        }
    }
}

fn json_line<T: serde::Serialize>(doc: &T) -> String {
    let mut s = to_json_string(doc);
    s.push('\n');
    s
}

fn report_text(r: &ResultantReport, f: Format) -> String {
    let var = r.wrt.other().name();
    let mut out = String::new();
    let n = r.sylvester.nrows();
    let _ = writeln!(out, "Res(P, Q; {}): {n}x{n} Sylvester matrix over H[{var}]", r.wrt);
    let _ = writeln!(out, "is_zero: {}", r.is_zero());
    let _ = writeln!(out, "sdet: {}", f.real(r.sdet(), var));
    match &r.representative {
        Some(rep) => {
            let _ = writeln!(out, "representative: {}", f.poly1(rep, var));
        }
        None if !r.is_zero() => {
            let _ = writeln!(out, "representative: not extracted");
        }
        None => {}
    }
    out
}

fn certificate_text(c: &BezoutCertificate, f: Format) -> String {
    let var = c.wrt.other().name();
    let mut out = String::new();
    let _ = writeln!(out, "H: {}", f.poly2(&c.h));
    let _ = writeln!(out, "K: {}", f.poly2(&c.k));
    let _ = writeln!(out, "P*H + Q*K: {}", f.poly1(&c.target, var));
    if c.central_scale != RealPoly::one() {
        let _ = writeln!(out, "central scale: {}", f.real(&c.central_scale, var));
    }
    out
}

fn two(p: &str, q: &str) -> Result<(Poly2, Poly2)> {
    Ok((exprio::parse_poly2(p)?, exprio::parse_poly2(q)?))
}

fn res(p: &str, q: &str, wrt: Var, with_certificate: bool, f: Format) -> Result<Outcome> {
    let (p, q) = two(p, q)?;
    let r = resultant::resultant(&p, &q, wrt)?;
    let cert = if !with_certificate {
        None
    } else if r.is_zero() {
        resultant::kernel_cofactors(&p, &q, wrt)?.map(|c| ("kernel", c))
    } else {
        Some(("bezout", resultant::bezout_certificate(&p, &q, wrt)?))
    };
    if f.json {
        let cj = cert.as_ref().map(|(kind, c)| CertificateJson::new(c, kind));
        return Ok(Outcome::ok(json_line(&ResultantJson::new(&r, cj))));
    }
    let mut out = report_text(&r, f);
    if let Some((_, c)) = &cert {
        out.push_str(&certificate_text(c, f));
    }
    Ok(Outcome::ok(out))
}

fn read_matrix_source(src: &str) -> Result<String> {
    if src.trim_start().starts_with('{') {
        return Ok(src.to_string());
    }
    let read = if src == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(src)
    };
    read.map_err(|e| Error::Json(format!("cannot read {src}: {e}")))
}

fn det(src: &str, f: Format) -> Result<Outcome> {
    let a: SkewMatrix = exprio::matrix_from_json(&read_matrix_source(src)?)?;
    let dc = dieudonne::det(&a)?;
    let poly = dieudonne::poly_representative(&dc);
    if f.json {
        return Ok(Outcome::ok(json_line(&DetJson::new(&a, &dc, poly.as_ref()))));
    }
    let mut out = String::new();
    let _ = writeln!(out, "size: {}", a.nrows());
    let _ = writeln!(out, "is_zero: {}", dc.is_zero);
    let sdet = if dc.sdet_den == RealPoly::one() {
        f.real(&dc.sdet_num, "q")
    } else {
        format!("({}) / ({})", f.real(&dc.sdet_num, "q"), f.real(&dc.sdet_den, "q"))
    };
    let _ = writeln!(out, "sdet: {sdet}");
    let _ = writeln!(out, "representative: {}", dc.rep);
    if let Some(p) = poly {
        let _ = writeln!(out, "polynomial representative: {}", f.poly1(&p, "q"));
    }
    Ok(Outcome::ok(out))
}

fn point(at: &str) -> Result<Vec<Quaternion>> {
    at.split(',').map(exprio::parse_quaternion).collect()
}

fn arity_error(expected: usize, found: usize) -> Error {
    Error::DimensionMismatch { expected, found }
}

fn eval(p: &str, q: Option<&str>, at: &str, f: Format) -> Result<Outcome> {
    let coords = point(at)?;
    if let Some(q) = q {
        let (p, q) = two(p, q)?;
        let [a, b] = <[Quaternion; 2]>::try_from(coords).map_err(|c| arity_error(2, c.len()))?;
        let report = resultant::check_common_zero(&p, &q, &a, &b)?;
        if f.json {
            let doc = serde_json::json!({
                "version": JSON_VERSION,
                "p_value": QuaternionJson::from(&report.p_value),
                "q_value": QuaternionJson::from(&report.q_value),
                "common_zero": report.common_zero,
                "resultants": report.resultants.as_ref().map(|rs| rs.iter().map(|r| serde_json::json!({
                    "wrt": r.wrt.name(),
                    "is_zero": r.is_zero,
                    "sdet_vanishes": r.sdet_vanishes,
                    "representative_vanishes": r.representative_vanishes,
                })).collect::<Vec<_>>()),
                "holds": report.holds(),
            });
            return Ok(finish(report.holds(), json_line(&doc)));
        }
        let mut out = String::new();
        let _ = writeln!(out, "P(a, b) = {}", report.p_value);
        let _ = writeln!(out, "Q(a, b) = {}", report.q_value);
        match &report.resultants {
            None => {
                let _ = writeln!(out, "not a common zero; hypothesis not met");
            }
            Some(rs) => {
                for r in rs {
                    let coord = if r.wrt == Var::Q1 { "q2 = b" } else { "q1 = a" };
                    let status = if r.is_zero { "identically zero".to_string() } else { format!("sdet vanishes at {coord}: {}", r.sdet_vanishes) };
                    let _ = writeln!(out, "Res(P, Q; {}): {status}", r.wrt);
                }
                let _ = writeln!(out, "corollary holds: {}", report.holds());
            }
        }
        return Ok(finish(report.holds(), out));
    }
    let value = match exprio::lower(&exprio::parse(p)?)? {
        Polynomial::One(p) => {
            let [a] = <[Quaternion; 1]>::try_from(coords).map_err(|c| arity_error(1, c.len()))?;
            p.eval(&a)
        }
        Polynomial::Two(p) => {
            let [a, b] = <[Quaternion; 2]>::try_from(coords).map_err(|c| arity_error(2, c.len()))?;
            p.eval2(&a, &b)
        }
    };
    if f.json {
        let doc = serde_json::json!({ "version": JSON_VERSION, "value": QuaternionJson::from(&value) });
        return Ok(Outcome::ok(json_line(&doc)));
    }
    Ok(Outcome::ok(format!("{value}\n")))
}

fn finish(holds: bool, out: String) -> Outcome {
    if holds {
        Outcome::ok(out)
    } else {
        Outcome::violated(out)
    }
}

fn factor(p: &str, q: Option<&str>, wrt: Var, at: Option<&str>, f: Format) -> Result<Outcome> {
    let p = exprio::parse_poly2(p)?;
    if let Some(at) = at {
        let [a] = <[Quaternion; 1]>::try_from(point(at)?).map_err(|c| arity_error(1, c.len()))?;
        let (mult, rest) = p.multiplicity(wrt, &a)?;
        if f.json {
            let doc = serde_json::json!({
                "version": JSON_VERSION,
                "var": wrt.name(),
                "point": QuaternionJson::from(&a),
                "multiplicity": mult,
                "cofactor": Poly2Json::from(&rest),
            });
            return Ok(Outcome::ok(json_line(&doc)));
        }
        return Ok(Outcome::ok(format!(
            "multiplicity of {} as a left factor: {mult}\ncofactor: {}\n",
            linear_text(wrt, &a),
            f.poly2(&rest)
        )));
    }
    let q = match q {
        Some(q) => exprio::parse_poly2(q)?,
        None => p.clone(),
    };
    let checks = resultant::check_left_factor_criterion(&p, &q, &[])?;
    let check = checks.iter().find(|c| c.var == wrt).expect("both variables checked");
    if f.json {
        let doc = serde_json::json!({
            "version": JSON_VERSION,
            "var": wrt.name(),
            "common_left_divisor": Poly1Json::from(&check.common_divisor),
            "common_left_divisor_text": print_poly1(&check.common_divisor, wrt.name()),
            "roots": check.roots.iter().map(QuaternionJson::from).collect::<Vec<_>>(),
            "resultant_is_zero": check.has_common_factor().then_some(check.resultant_is_zero),
            "holds": check.holds(),
        });
        return Ok(finish(check.holds(), json_line(&doc)));
    }
    let mut out = String::new();
    let _ = writeln!(out, "common left divisor in H[{wrt}]: {}", f.poly1(&check.common_divisor, wrt.name()));
    for a in &check.roots {
        let _ = writeln!(out, "left factor: {}", linear_text(wrt, a));
    }
    if check.has_common_factor() {
        let _ = writeln!(out, "Res(P, Q; {wrt}) is_zero: {}", check.resultant_is_zero);
    }
    Ok(finish(check.holds(), out))
}

fn linear_text(v: Var, a: &Quaternion) -> String {
    let text = a.to_string();
    if text.contains(' ') || text.starts_with('-') {
        format!("{v} - ({text})")
    } else {
        format!("{v} - {text}")
    }
}

fn bezout(p: &str, q: &str, wrt: Var, f: Format) -> Result<Outcome> {
    let (p, q) = two(p, q)?;
    let c = resultant::bezout_certificate(&p, &q, wrt)?;
    if f.json {
        return Ok(Outcome::ok(json_line(&CertificateJson::new(&c, "bezout"))));
    }
    Ok(Outcome::ok(certificate_text(&c, f)))
}

fn kernel(p: &str, q: &str, wrt: Var, f: Format) -> Result<Outcome> {
    let (p, q) = two(p, q)?;
    match resultant::kernel_cofactors(&p, &q, wrt)? {
        Some(c) if f.json => Ok(Outcome::ok(json_line(&CertificateJson::new(&c, "kernel")))),
        Some(c) => Ok(Outcome::ok(certificate_text(&c, f))),
        None => Ok(Outcome::violated(format!("Res(P, Q; {wrt}) is nonzero; no kernel cofactors exist\n"))),
    }
}

fn disc(p: &str, var: Var, f: Format) -> Result<Outcome> {
    let p = exprio::parse_poly2(p)?;
    let r = resultant::discriminant(&p, var)?;
    if f.json {
        return Ok(Outcome::ok(json_line(&ResultantJson::new(&r, None))));
    }
    Ok(Outcome::ok(report_text(&r, f).replacen("Res(P, Q;", &format!("Res(P, dP/d{var};"), 1)))
}

fn symm(p: &str, q: Option<&str>, f: Format) -> Result<Outcome> {
    if let Some(q) = q {
        let (p, q) = two(p, q)?;
        let checks = resultant::symmetrized_resultant_criterion(&p, &q)?;
        let holds = checks.iter().all(|c| c.holds());
        if f.json {
            let items: Vec<_> = checks
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "wrt": c.wrt.name(),
                        "regular_is_zero": c.regular_is_zero,
                        "classical": c.classical.as_ref().map(|r| RealPolyJson::new(r, c.wrt.other().name())),
                        "holds": c.holds(),
                    })
                })
                .collect();
            let doc = serde_json::json!({ "version": JSON_VERSION, "checks": items, "holds": holds });
            return Ok(finish(holds, json_line(&doc)));
        }
        let mut out = String::new();
        for c in &checks {
            let _ = write!(out, "Res(P, Q; {}) is_zero: {}", c.wrt, c.regular_is_zero);
            if let Some(cl) = &c.classical {
                let _ = write!(out, "; Res(P^s, Q^s; {}) = {}", c.wrt, f.real(cl, c.wrt.other().name()));
            }
            out.push('\n');
        }
        return Ok(finish(holds, out));
    }
    let text = match exprio::lower(&exprio::parse(p)?)? {
        Polynomial::One(p) => {
            let s = p.symm()?;
            if f.json {
                return Ok(Outcome::ok(json_line(&Poly1Json::from(&s.to_poly1()))));
            }
            f.poly1(&s.to_poly1(), "q")
        }
        Polynomial::Two(p) => {
            let s = p.symm2()?;
            if f.json {
                return Ok(Outcome::ok(json_line(&Poly2Json::from(&s))));
            }
            f.poly2(&s)
        }
    };
    Ok(Outcome::ok(format!("{text}\n")))
}

/// Golden assertions on the worked example; one PASS/FAIL line each.
pub fn selftest() -> Outcome {
    let mut lines = Vec::new();
    let mut all = true;
    let mut check = |name: &str, ok: Result<bool>| {
        let ok = ok.unwrap_or(false);
        all &= ok;
        lines.push(format!("{} {name}", if ok { "PASS" } else { "FAIL" }));
    };
    let pq = two("(q1 - i)*(q2 - j)", "(q1 - i)*(q2 - k)");
    let Ok((p, q)) = pq else {
        return Outcome::violated("FAIL parse example\n".into());
    };
    let golden_sdet = RealPoly::from_ints(&[2, 0, 4, 0, 2]);
    check("expansion q1*q2 - q1*j - q2*i + k", exprio::parse_poly2("q1*q2 - q1*j - q2*i + k").map(|e| e == p));
    check(
        "Sylvester matrix A(q2)",
        (|| {
            let expected = SkewMatrix::from_poly_rows(vec![
                vec![exprio::parse_poly1("-i*(q - j)")?, exprio::parse_poly1("-i*(q - k)")?],
                vec![exprio::parse_poly1("q - j")?, exprio::parse_poly1("q - k")?],
            ])?;
            Ok(resultant::sylvester_q1(&p, &q)? == expected)
        })(),
    );
    check("Res(P, Q; q1) is zero", resultant::resultant(&p, &q, Var::Q1).map(|r| r.is_zero()));
    let r2 = resultant::resultant(&p, &q, Var::Q2);
    check("Res(P, Q; q2) is nonzero", r2.as_ref().map(|r| !r.is_zero()).map_err(Clone::clone));
    check("sdet Res(P, Q; q2) = 2*(q1^2 + 1)^2", r2.as_ref().map(|r| *r.sdet() == golden_sdet).map_err(Clone::clone));
    check(
        "representative of Res(P, Q; q2) vanishes at q1 = i",
        r2.as_ref().map(|r| r.representative.as_ref().is_some_and(|rep| rep.eval(&Quaternion::i()).is_zero())).map_err(Clone::clone),
    );
    check(
        "symm((q1 - i)^2*(k - j)) = sdet",
        exprio::parse_poly1("(q - i)^2*(k - j)").and_then(|x| x.symm()).map(|s| s == golden_sdet),
    );
    check("P(i, j) = 2k", Ok(p.eval2(&Quaternion::i(), &Quaternion::j()) == Quaternion::from_ints(0, 0, 0, 2)));
    check("common zero (i, i) kills both resultants", resultant::check_common_zero(&p, &q, &Quaternion::i(), &Quaternion::i()).map(|r| r.common_zero && r.holds()));
    check("kernel cofactors with P*H + Q*K = 0", resultant::kernel_cofactors(&p, &q, Var::Q1).map(|c| c.is_some_and(|c| c.verify(&p, &q))));
    check(
        "common left factor q1 - i",
        resultant::check_left_factor_criterion(&p, &q, &[]).map(|[c1, _]| c1.roots == vec![Quaternion::i()] && c1.holds()),
    );
    check(
        "Res(P^s, Q^s; q1) = 0",
        resultant::symmetrized_resultant_criterion(&p, &q).map(|cs| cs[0].classical.as_ref().is_some_and(RealPoly::is_zero)),
    );
    check("Bezout certificate for Res(P, Q; q2)", resultant::bezout_certificate(&p, &q, Var::Q2).map(|c| c.verify(&p, &q)));
    let mut out = lines.join("\n");
    out.push('\n');
    finish(all, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("skewres").chain(args.iter().copied()))
    }

    #[test]
    fn eval_example() {
        let o = run_args(&["eval", "(q1-i)*(q2-j)", "--at", "i,j"]);
        assert_eq!(o, Outcome::ok("2*k\n".into()));
        let o = run_args(&["eval", "q^2 + 1", "--at", "i"]);
        assert_eq!(o.output, "0\n");
        assert_eq!(run_args(&["eval", "q^2", "--at", "i,j"]).code, EXIT_INPUT);
    }

    #[test]
    fn resultant_examples() {
        let o = run_args(&["res", "--wrt", "q1", "(q1-i)*(q2-j)", "(q1-i)*(q2-k)"]);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.output.contains("is_zero: true"));
        let o = run_args(&["res", "--wrt", "q2", "(q1-i)*(q2-j)", "(q1-i)*(q2-k)"]);
        assert!(o.output.contains("is_zero: false"));
        assert!(o.output.contains("sdet: 2*(q1^2 + 1)^2"), "{}", o.output);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["res", "(q1-i", "q2"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["res", "q", "q2"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["res", "--wrt", "q3", "q1", "q2"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["res", "--json", "--latex", "q1", "q2"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["frobnicate"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["--help"]).code, EXIT_OK);
        assert_eq!(run_args(&["eval", "q1", "q2", "--at", "i,j"]).code, EXIT_HYPOTHESIS);
        assert_eq!(run_args(&["bezout", "(q1-i)*(q2-j)", "(q1-i)*(q2-k)"]).code, EXIT_HYPOTHESIS);
        assert_eq!(run_args(&["kernel", "q1 - i", "q2 - j"]).code, EXIT_HYPOTHESIS);
        assert_eq!(run_args(&["disc", "--var", "q1", "q2^2"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["factor", "q1", "q2", "--at", "i"]).code, EXIT_INPUT);
    }

    #[test]
    fn selftest_passes() {
        let o = selftest();
        assert_eq!(o.code, EXIT_OK, "{}", o.output);
        assert!(!o.output.contains("FAIL"));
    }

    #[test]
    fn json_output_is_versioned() {
        let o = run_args(&["res", "--json", "--certificate", "--wrt", "q2", "(q1-i)*(q2-j)", "(q1-i)*(q2-k)"]);
        let v: serde_json::Value = serde_json::from_str(&o.output).unwrap();
        assert_eq!(v["version"], 1);
        assert_eq!(v["is_zero"], false);
        assert_eq!(v["sdet"]["num"]["coeffs"], serde_json::json!(["2", "0", "4", "0", "2"]));
        assert_eq!(v["certificate"]["kind"], "bezout");
    }
}
