//! Versioned JSON documents.
//!
//! Rationals are strings `"p/q"` (or `"p"`), so values round-trip exactly.
//! Every top-level document carries `"version": 1`. Polynomial fields inside
//! fractions and matrix entries accept either the coefficient object or an
//! expression string in `q`.

use serde::{Deserialize, Serialize};

use crate::dieudonne::{DetClass, SkewMatrix};
use crate::error::{Error, Result};
use crate::orefield::OreFrac;
use crate::polyone::{Poly1, RealPoly};
use crate::polytwo::Poly2;
use crate::quaternion::{Quaternion, Rational};
use crate::resultant::{BezoutCertificate, ResultantReport};

use super::{parse_poly1, print_poly1};

pub const JSON_VERSION: u32 = 1;

fn current_version() -> u32 {
    JSON_VERSION
}

fn check_version(v: u32) -> Result<()> {
    if v == JSON_VERSION {
        Ok(())
    } else {
        Err(Error::Json(format!("unsupported version {v}, expected {JSON_VERSION}")))
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

pub fn rational_to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_from_str(s: &str) -> Result<Rational> {
    let bad = || invalid(format!("not a rational: {s:?}"));
    let (p, q) = match s.trim().split_once('/') {
        Some((p, q)) => (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 1.into()),
    };
    if num_traits::Zero::is_zero(&q) {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuaternionJson {
    pub w: String,
    pub x: String,
    pub y: String,
    pub z: String,
}

impl From<&Quaternion> for QuaternionJson {
    fn from(q: &Quaternion) -> Self {
        let [w, x, y, z] = q.components().map(rational_to_string);
        QuaternionJson { w, x, y, z }
    }
}

impl QuaternionJson {
    pub fn to_quaternion(&self) -> Result<Quaternion> {
        Ok(Quaternion::new(
            rational_from_str(&self.w)?,
            rational_from_str(&self.x)?,
            rational_from_str(&self.y)?,
            rational_from_str(&self.z)?,
        ))
    }
}

/// `coeffs[n]` multiplies `q^n`; `degree` is null for the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poly1Json {
    #[serde(default = "current_version")]
    pub version: u32,
    pub degree: Option<usize>,
    pub coeffs: Vec<QuaternionJson>,
}

impl From<&Poly1> for Poly1Json {
    fn from(p: &Poly1) -> Self {
        Poly1Json {
            version: JSON_VERSION,
            degree: p.degree(),
            coeffs: p.coeffs().iter().map(QuaternionJson::from).collect(),
        }
    }
}

impl Poly1Json {
    pub fn to_poly(&self) -> Result<Poly1> {
        check_version(self.version)?;
        let coeffs = self.coeffs.iter().map(QuaternionJson::to_quaternion).collect::<Result<Vec<_>>>()?;
        let p = Poly1::new(coeffs);
        let degree = p.degree();
        if degree != self.degree {
            return Err(invalid(format!("declared degree {:?} but coefficients give {:?}", self.degree, degree)));
        }
        Ok(p)
    }
}

/// `coeffs[n][m]` multiplies `q1^n q2^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poly2Json {
    #[serde(default = "current_version")]
    pub version: u32,
    pub deg_q1: Option<usize>,
    pub deg_q2: Option<usize>,
    pub coeffs: Vec<Vec<QuaternionJson>>,
}

impl From<&Poly2> for Poly2Json {
    fn from(p: &Poly2) -> Self {
        let nz = !p.is_zero();
        Poly2Json {
            version: JSON_VERSION,
            deg_q1: nz.then(|| p.deg_q1()),
            deg_q2: nz.then(|| p.deg_q2()),
            coeffs: p.rows().iter().map(|row| row.iter().map(QuaternionJson::from).collect()).collect(),
        }
    }
}

impl Poly2Json {
    pub fn to_poly(&self) -> Result<Poly2> {
        check_version(self.version)?;
        let rows = self
            .coeffs
            .iter()
            .map(|row| row.iter().map(QuaternionJson::to_quaternion).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let p = Poly2::new(rows);
        let nz = !p.is_zero();
        let found = (nz.then(|| p.deg_q1()), nz.then(|| p.deg_q2()));
        if found != (self.deg_q1, self.deg_q2) {
            return Err(invalid(format!(
                "declared degrees {:?} but coefficients give {:?}",
                (self.deg_q1, self.deg_q2),
                found
            )));
        }
        Ok(p)
    }
}

/// Real polynomial with a readable rendering in `var`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealPolyJson {
    pub degree: Option<usize>,
    pub coeffs: Vec<String>,
    pub text: String,
}

impl RealPolyJson {
    pub fn new(p: &RealPoly, var: &str) -> Self {
        RealPolyJson {
            degree: p.degree(),
            coeffs: p.coeffs().iter().map(rational_to_string).collect(),
            text: p.display_in(var),
        }
    }

    pub fn to_poly(&self) -> Result<RealPoly> {
        let coeffs = self.coeffs.iter().map(|c| rational_from_str(c)).collect::<Result<Vec<_>>>()?;
        Ok(RealPoly::new(coeffs))
    }
}

/// A polynomial field given either as coefficients or as an expression in `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyField {
    Text(String),
    Coeffs(Poly1Json),
}

impl PolyField {
    pub fn to_poly(&self) -> Result<Poly1> {
        match self {
            PolyField::Text(s) => parse_poly1(s),
            PolyField::Coeffs(c) => c.to_poly(),
        }
    }
}

/// Left fraction `den^-1 * num`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FracJson {
    pub den: PolyField,
    pub num: PolyField,
}

impl From<&OreFrac> for FracJson {
    fn from(f: &OreFrac) -> Self {
        FracJson { den: PolyField::Coeffs(f.den().into()), num: PolyField::Coeffs(f.num().into()) }
    }
}

impl FracJson {
    pub fn to_frac(&self) -> Result<OreFrac> {
        OreFrac::new(self.den.to_poly()?, self.num.to_poly()?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryJson {
    Text(String),
    Frac(FracJson),
}

impl EntryJson {
    pub fn to_frac(&self) -> Result<OreFrac> {
        match self {
            EntryJson::Text(s) => Ok(OreFrac::from_poly(parse_poly1(s)?)),
            EntryJson::Frac(f) => f.to_frac(),
        }
    }
}

/// Matrix of fractions over `H[q]`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    #[serde(default = "current_version")]
    pub version: u32,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<EntryJson>>,
}

impl From<&SkewMatrix> for MatrixJson {
    fn from(a: &SkewMatrix) -> Self {
        MatrixJson {
            version: JSON_VERSION,
            rows: a.nrows(),
            cols: a.ncols(),
            entries: a.to_rows().iter().map(|r| r.iter().map(|x| EntryJson::Frac(x.into())).collect()).collect(),
        }
    }
}

impl MatrixJson {
    pub fn to_matrix(&self) -> Result<SkewMatrix> {
        check_version(self.version)?;
        if self.entries.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.entries.len() });
        }
        let mut rows = Vec::with_capacity(self.rows);
        for row in &self.entries {
            if row.len() != self.cols {
                return Err(Error::DimensionMismatch { expected: self.cols, found: row.len() });
            }
            rows.push(row.iter().map(EntryJson::to_frac).collect::<Result<Vec<_>>>()?);
        }
        if self.rows == 0 {
            return SkewMatrix::new(0, self.cols, Vec::new());
        }
        SkewMatrix::from_rows(rows)
    }
}

/// `sdet = num / den` in lowest terms with `den` monic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdetJson {
    pub num: RealPolyJson,
    pub den: RealPolyJson,
}

impl SdetJson {
    pub fn new(dc: &DetClass, var: &str) -> Self {
        SdetJson { num: RealPolyJson::new(&dc.sdet_num, var), den: RealPolyJson::new(&dc.sdet_den, var) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetJson {
    pub version: u32,
    pub size: usize,
    pub is_zero: bool,
    pub sdet: SdetJson,
    /// Product of the elimination pivots; one element of the class.
    pub representative: FracJson,
    pub polynomial_representative: Option<Poly1Json>,
}

impl DetJson {
    pub fn new(a: &SkewMatrix, dc: &DetClass, poly: Option<&Poly1>) -> Self {
        DetJson {
            version: JSON_VERSION,
            size: a.nrows(),
            is_zero: dc.is_zero,
            sdet: SdetJson::new(dc, "q"),
            representative: (&dc.rep).into(),
            polynomial_representative: poly.map(Poly1Json::from),
        }
    }
}

/// `P*H + Q*K = target`; `kind` is `"bezout"` or `"kernel"` (target 0).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub kind: String,
    pub h: Poly2Json,
    pub k: Poly2Json,
    pub h_text: String,
    pub k_text: String,
    pub target: Poly1Json,
    pub target_text: String,
    pub central_scale: RealPolyJson,
}

impl CertificateJson {
    pub fn new(c: &BezoutCertificate, kind: &str) -> Self {
        let var = c.wrt.other().name();
        CertificateJson {
            kind: kind.to_string(),
            h: (&c.h).into(),
            k: (&c.k).into(),
            h_text: c.h.to_string(),
            k_text: c.k.to_string(),
            target: (&c.target).into(),
            target_text: print_poly1(&c.target, var),
            central_scale: RealPolyJson::new(&c.central_scale, var),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultantJson {
    pub version: u32,
    pub wrt: String,
    /// Variable of the entries, of `sdet` and of the representative.
    pub var: String,
    pub is_zero: bool,
    pub sdet: SdetJson,
    pub representative: Option<Poly1Json>,
    pub representative_text: Option<String>,
    pub sylvester: MatrixJson,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<CertificateJson>,
}

impl ResultantJson {
    pub fn new(r: &ResultantReport, certificate: Option<CertificateJson>) -> Self {
        let var = r.wrt.other().name();
        ResultantJson {
            version: JSON_VERSION,
            wrt: r.wrt.name().to_string(),
            var: var.to_string(),
            is_zero: r.is_zero(),
            sdet: SdetJson::new(&r.det_class, var),
            representative: r.representative.as_ref().map(Poly1Json::from),
            representative_text: r.representative.as_ref().map(|p| print_poly1(p, var)),
            sylvester: (&r.sylvester).into(),
            certificate,
        }
    }
}

/// Parses a matrix document, as consumed by `skewres det`.
pub fn matrix_from_json(text: &str) -> Result<SkewMatrix> {
    let doc: MatrixJson = serde_json::from_str(text).map_err(|e| invalid(e.to_string()))?;
    doc.to_matrix()
}

pub fn to_json_string<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}
