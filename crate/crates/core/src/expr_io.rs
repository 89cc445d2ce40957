//! Element expressions and machine-readable documents.
//!
//! Expression grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := ['+' | '-'] term { ('+' | '-') term }
//! term   := coeff { ['*'] factor } | factor { ['*'] factor }
//! factor := var ['^' ['+' | '-'] digits]
//! coeff  := digits ['/' digits]
//! ```
//!
//! Each factor's exponent must respect its variable's role, so `X^-1*X` is
//! rejected in a series direction and `X^1` in an inverse one even when the
//! product would be admissible.
//!
//! The canonical text lists terms in lexicographic exponent order; within a
//! term inverse-role factors come first, then series-role factors, each
//! group by ascending variable index. Exponent 1 is written as the bare
//! variable.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cech::{CohomologyTable, EquivarianceReport};
use crate::duality::{PairingReport, RegularityReport, Torsion};
use crate::element::{AlgebraError, Element, Exponent, ModuleShape, Role, TruncationBox};
use crate::independence::{DeltaSequence, IndependenceCertificate, ShiftOutcome};
use crate::scalar::{Field, Scalar, ScalarError};
use crate::suite::CheckReport;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at byte {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("role violation: {variable}^{exponent} on {role:?} variable at byte {position}")]
    RoleViolation { variable: String, exponent: i64, role: Role, position: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("schema version {found} does not match supported version {SCHEMA_VERSION}")]
    VersionMismatch { found: u64 },
    #[error("missing schema_version")]
    MissingVersion,
    #[error("document holds a {0}, not an element")]
    NotAnElement(&'static str),
    #[error("invalid element: {0}")]
    Element(#[from] ParseError),
}

/// Variable names: `X`, `Y` for up to two variables, `X1..Xn` otherwise.
/// `X1..Xn` are always accepted on input.
pub fn default_variable_names(n: usize) -> Vec<String> {
    match n {
        1 => vec!["X".into()],
        2 => vec!["X".into(), "Y".into()],
        _ => (1..=n).map(|k| format!("X{k}")).collect(),
    }
}

fn resolve_variable(name: &str, n: usize) -> Option<usize> {
    if let Some(k) = default_variable_names(n).iter().position(|v| v == name) {
        return Some(k);
    }
    let k: usize = name.strip_prefix('X')?.parse().ok()?;
    (1..=n).contains(&k).then(|| k - 1)
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek_raw() {
            if f(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.text[start..self.pos]
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax { position: self.pos, message: message.into() }
    }
}

/// Parses an expression into a canonical element of the given shape and box.
pub fn parse_element(
    text: &str,
    shape: &ModuleShape,
    bounds: &TruncationBox,
    field: Field,
) -> Result<Element, ParseError> {
    let n = shape.arity();
    let mut out = Element::zero(field, shape.clone(), bounds.clone());
    let mut cur = Cursor { text, pos: 0 };
    let mut negative = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let (exponent, coeff) = parse_term(&mut cur, n, shape, field)?;
        let coeff = if negative { -&coeff } else { coeff };
        out.add_term(exponent, coeff)?;
        match cur.peek() {
            None => break,
            Some('+') => {
                cur.eat('+');
                negative = false;
            }
            Some('-') => {
                cur.eat('-');
                negative = true;
            }
            Some(c) => return Err(cur.error(format!("unexpected `{c}`"))),
        }
    }
    Ok(out)
}

fn parse_term(
    cur: &mut Cursor<'_>,
    n: usize,
    shape: &ModuleShape,
    field: Field,
) -> Result<(Exponent, Scalar), ParseError> {
    let mut exponent = Exponent::zero(n);
    let mut coeff = field.one();
    let mut factors = 0;
    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        let num = cur.take_while(|c| c.is_ascii_digit());
        let text = if cur.eat('/') {
            let den = cur.take_while(|c| c.is_ascii_digit());
            if den.is_empty() {
                return Err(cur.error("expected denominator"));
            }
            format!("{num}/{den}")
        } else {
            num.to_string()
        };
        coeff = field.parse_scalar(&text)?;
        factors += 1;
    }
    loop {
        let had_star = cur.eat('*');
        match cur.peek() {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ if had_star => return Err(cur.error("expected variable after `*`")),
            _ => break,
        }
        let position = cur.pos;
        let name = cur.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        let j = resolve_variable(name, n)
            .ok_or_else(|| ParseError::UnknownVariable { name: name.into(), position })?;
        let power = if cur.eat('^') {
            let sign = if cur.eat('-') {
                -1
            } else {
                cur.eat('+');
                1
            };
            let digits = cur.take_while(|c| c.is_ascii_digit());
            let v: i64 = digits.parse().map_err(|_| cur.error("expected exponent"))?;
            sign * v
        } else {
            1
        };
        let role = shape.role(j);
        if !role.admits(power) {
            return Err(ParseError::RoleViolation { variable: name.into(), exponent: power, role, position });
        }
        exponent.0[j] += power;
        factors += 1;
    }
    if factors == 0 {
        return Err(cur.error("expected a term"));
    }
    Ok((exponent, coeff))
}

fn monomial_text(e: &Exponent, shape: &ModuleShape, names: &[String]) -> String {
    let order = (0..e.arity())
        .filter(|&j| shape.role(j) == Role::Inverse)
        .chain((0..e.arity()).filter(|&j| shape.role(j) == Role::Series));
    order
        .filter(|&j| e[j] != 0)
        .map(|j| if e[j] == 1 { names[j].clone() } else { format!("{}^{}", names[j], e[j]) })
        .collect::<Vec<_>>()
        .join("*")
}

/// Canonical text with the default variable names.
pub fn serialize_element(e: &Element) -> String {
    serialize_with_names(e, &default_variable_names(e.arity()))
}

pub fn serialize_with_names(e: &Element, names: &[String]) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (x, c)) in e.terms().enumerate() {
        let negative = c.is_negative();
        let magnitude = if negative { -c } else { c.clone() };
        let mono = monomial_text(x, e.shape(), names);
        let body = match (mono.is_empty(), magnitude.is_one()) {
            (true, _) => magnitude.to_string(),
            (false, true) => mono,
            (false, false) => format!("{magnitude}*{mono}"),
        };
        match (k, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermEntry {
    pub exponent: Exponent,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDocument {
    pub field: Field,
    pub variables: Vec<String>,
    pub roles: ModuleShape,
    pub bounds: TruncationBox,
    pub terms: Vec<TermEntry>,
    pub exact: bool,
    /// Canonical expression text, for reading; ignored on input.
    pub text: String,
}

impl ElementDocument {
    pub fn from_element(e: &Element) -> Self {
        ElementDocument {
            field: e.field(),
            variables: default_variable_names(e.arity()),
            roles: e.shape().clone(),
            bounds: e.bounds().clone(),
            terms: e
                .terms()
                .map(|(x, c)| TermEntry { exponent: x.clone(), coeff: c.to_string() })
                .collect(),
            exact: e.is_exact(),
            text: serialize_element(e),
        }
    }

    pub fn to_element(&self) -> Result<Element, ParseError> {
        let mut e = Element::zero(self.field, self.roles.clone(), self.bounds.clone());
        for t in &self.terms {
            e.add_term(t.exponent.clone(), self.field.parse_scalar(&t.coeff)?)?;
        }
        Ok(if self.exact { e } else { e.mark_inexact() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaReport {
    pub roles: ModuleShape,
    pub gens: Vec<usize>,
    pub torsion: Torsion,
    /// Elementwise cross-check, when an element was supplied.
    pub element_is_torsion: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDocument {
    pub product: ElementDocument,
    pub socle: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDocument {
    pub target: Exponent,
    pub primal: ElementDocument,
    pub dual: ElementDocument,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDocument {
    pub a: u64,
    pub b: u64,
    pub g: String,
    pub h: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftDocument {
    pub first: DeltaSequence,
    pub second: DeltaSequence,
    pub search_bound: u64,
    pub outcome: ShiftOutcome,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum Body {
    Element(ElementDocument),
    CohomologyTable(CohomologyTable),
    Equivariance(EquivarianceReport),
    PairingReport(PairingReport),
    Pair(PairDocument),
    Witness(WitnessDocument),
    RegularityReport(RegularityReport),
    Gamma(GammaReport),
    DeltaSequence(DeltaSequence),
    Decomposition(DecompositionDocument),
    Shift(ShiftDocument),
    IndependenceCertificate(IndependenceCertificate),
    CheckReport(CheckReport),
}

impl Body {
    fn kind(&self) -> &'static str {
        match self {
            Body::Element(_) => "element",
            Body::CohomologyTable(_) => "cohomology_table",
            Body::Equivariance(_) => "equivariance",
            Body::PairingReport(_) => "pairing_report",
            Body::Pair(_) => "pair",
            Body::Witness(_) => "witness",
            Body::RegularityReport(_) => "regularity_report",
            Body::Gamma(_) => "gamma",
            Body::DeltaSequence(_) => "delta_sequence",
            Body::Decomposition(_) => "decomposition",
            Body::Shift(_) => "shift",
            Body::IndependenceCertificate(_) => "independence_certificate",
            Body::CheckReport(_) => "check_report",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub schema_version: u32,
    pub body: Body,
}

impl Document {
    pub fn new(body: Body) -> Self {
        Document { schema_version: SCHEMA_VERSION, body }
    }

    pub fn element(e: &Element) -> Self {
        Document::new(Body::Element(ElementDocument::from_element(e)))
    }

    pub fn into_element(self) -> Result<Element, DocumentError> {
        match self.body {
            Body::Element(doc) => Ok(doc.to_element()?),
            other => Err(DocumentError::NotAnElement(other.kind())),
        }
    }
}

/// Pretty JSON with fixed field order and a trailing newline.
pub fn write_document(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

pub fn read_document(text: &str) -> Result<Document, DocumentError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let found = value
        .get("schema_version")
        .ok_or(DocumentError::MissingVersion)?
        .as_u64()
        .ok_or(DocumentError::MissingVersion)?;
    if found != u64::from(SCHEMA_VERSION) {
        return Err(DocumentError::VersionMismatch { found });
    }
    Ok(serde_json::from_value(value)?)
}
