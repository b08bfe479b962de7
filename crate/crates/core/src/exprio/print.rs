//! Canonical text and LaTeX printing.
//!
//! Terms appear in descending graded lexicographic order on `(n, m)`, each as a
//! monomial followed by its coefficient.

use num_traits::{One, Signed};

use crate::polyone::Poly1;
use crate::polytwo::Poly2;
use crate::quaternion::{Quaternion, Rational};

struct Term {
    powers: Vec<(String, usize)>,
    coeff: Quaternion,
}

#[derive(Clone, Copy)]
enum Style {
    Text,
    Latex,
}

fn rational_text(r: &Rational, style: Style) -> String {
    match (style, r.is_integer()) {
        (_, true) => r.numer().to_string(),
        (Style::Text, false) => format!("{}/{}", r.numer(), r.denom()),
        (Style::Latex, false) => format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom()),
    }
}

/// Signed-magnitude form of a quaternion: `(negative, body)`.
fn quaternion_body(c: &Quaternion, style: Style) -> (bool, String) {
    let parts: Vec<(&Rational, &str)> = c
        .components()
        .into_iter()
        .zip(["", "i", "j", "k"])
        .filter(|(v, _)| !num_traits::Zero::is_zero(*v))
        .collect();
    let mut out = String::new();
    let negative = parts.first().is_some_and(|(v, _)| v.is_negative());
    for (idx, (value, unit)) in parts.iter().enumerate() {
        if idx > 0 {
            out.push_str(if value.is_negative() { " - " } else { " + " });
        }
        let magnitude = value.abs();
        let mag = rational_text(&magnitude, style);
        match (unit.is_empty(), magnitude.is_one()) {
            (true, _) => out.push_str(&mag),
            (false, true) => out.push_str(unit),
            (false, false) => {
                out.push_str(&mag);
                out.push_str(if let Style::Text = style { "*" } else { " " });
                out.push_str(unit);
            }
        }
    }
    (negative, out)
}

fn monomial(powers: &[(String, usize)], style: Style) -> String {
    let sep = if let Style::Text = style { "*" } else { " " };
    powers
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| match (e, style) {
            (1, _) => v.clone(),
            (_, Style::Text) => format!("{v}^{e}"),
            (_, Style::Latex) => format!("{v}^{{{e}}}"),
        })
        .collect::<Vec<_>>()
        .join(sep)
}

fn render(terms: &[Term], style: Style) -> String {
    let sep = if let Style::Text = style { "*" } else { " " };
    let mut out = String::new();
    for term in terms {
        let mono = monomial(&term.powers, style);
        let single = term.coeff.components().iter().filter(|v| !num_traits::Zero::is_zero(**v)).count() == 1;
        let (negative, body) = if mono.is_empty() {
            quaternion_body(&term.coeff, style)
        } else if single {
            let (neg, body) = quaternion_body(&term.coeff, style);
            match body.as_str() {
                "1" => (neg, mono),
                _ => (neg, format!("{mono}{sep}{body}")),
            }
        } else {
            let (neg, body) = quaternion_body(&term.coeff, style);
            let inner = if neg { format!("-{body}") } else { body };
            let wrapped = match style {
                Style::Text => format!("({inner})"),
                Style::Latex => format!("\\left({inner}\\right)"),
            };
            (false, format!("{mono}{sep}{wrapped}"))
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn poly1_terms(p: &Poly1, var: &str) -> Vec<Term> {
    p.coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| Term { powers: vec![(var.to_string(), n)], coeff: c.clone() })
        .collect()
}

fn poly2_terms(p: &Poly2, v1: &str, v2: &str) -> Vec<Term> {
    let mut keyed = Vec::new();
    for (n, row) in p.rows().iter().enumerate() {
        for (m, c) in row.iter().enumerate() {
            if !c.is_zero() {
                keyed.push(((n + m, n), Term { powers: vec![(v1.into(), n), (v2.into(), m)], coeff: c.clone() }));
            }
        }
    }
    keyed.sort_by(|a, b| b.0.cmp(&a.0));
    keyed.into_iter().map(|(_, t)| t).collect()
}

/// Canonical text of a one-variable polynomial in the named variable.
pub fn print_poly1(p: &Poly1, var: &str) -> String {
    render(&poly1_terms(p, var), Style::Text)
}

/// Canonical text of a two-variable polynomial in `q1`, `q2`.
pub fn print_poly2(p: &Poly2) -> String {
    render(&poly2_terms(p, "q1", "q2"), Style::Text)
}

pub fn latex_poly1(p: &Poly1, var: &str) -> String {
    let var = match var.strip_prefix('q') {
        Some(idx) if !idx.is_empty() => format!("q_{idx}"),
        _ => var.to_string(),
    };
    render(&poly1_terms(p, &var), Style::Latex)
}

pub fn latex_poly2(p: &Poly2) -> String {
    render(&poly2_terms(p, "q_1", "q_2"), Style::Latex)
}
