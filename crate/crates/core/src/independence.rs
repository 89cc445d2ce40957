//! Linear independence of the family `d_n = sum_l Y^(-l^n) X^l` in
//! `D = D(H^1_{(X)}(k[[X,Y]])) = k[Y^-1][[X]]`.
//!
//! The invariant `δ(d)` records, for each power `X^l`, the smallest
//! `Y`-exponent of its coefficient. For `r = X^(a+1) h + X^a g` with
//! `g = c_b Y^b + ...` in `k[[Y]]`, the `X^l` coefficient of `r d_n` has
//! smallest exponent `-(l-a)^n + b` once `l` is large, so `δ(r d_n)` is a
//! shift of `δ(d_n)`. Different `n` have different growth, and the top term
//! of `sum r_j d_j` cannot be cancelled.
//!
//! Everything here works on finite windows `l <= Lmax`: a certificate checks
//! the predicted tail pattern on `[tail_start, Lmax]` and that the truncated
//! sum is nonzero.
//!
//! Variable 0 is `X` (series), variable 1 is `Y` (inverse).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::element::{ring_act, AlgebraError, Element, Exponent, ModuleShape, TruncationBox};
use crate::expr_io::serialize_element;
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndependenceError {
    #[error("all coefficients are zero")]
    Degenerate,
    #[error("element is not exact; minimal exponents may lie below the box")]
    Inexact,
    #[error("expected an element of shape {expected}, got {got}")]
    WrongShape { expected: ModuleShape, got: ModuleShape },
    #[error("window [{start}, {end}] exceeds the X-bound {bound}")]
    WindowOutsideBox { start: u64, end: u64, bound: u64 },
    #[error("box {got:?} cannot hold d_{power} up to l = {lmax}")]
    BoxTooSmall { power: u32, lmax: u64, got: Vec<u64> },
    #[error("exponent overflow computing {lmax}^{power}")]
    Overflow { power: u32, lmax: u64 },
    #[error("fewer than 3 window points past tail start {tail_start}")]
    WindowTooShort { tail_start: u64 },
    #[error("inconclusive: {reason}")]
    Inconclusive { reason: String, required_lmax: Option<u64> },
    #[error("δ deviates from the predicted tail at l = {l}")]
    PatternMismatch { l: u64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `D = k[Y^-1][[X]]`.
pub fn plane_dual_shape() -> ModuleShape {
    ModuleShape::matlis_dual(2, 1)
}

fn checked_power(l: u64, power: u32) -> Option<i64> {
    l.checked_pow(power).and_then(|v| i64::try_from(v).ok())
}

/// `d_power = sum_{l=0}^{lmax} Y^(-l^power) X^l`.
///
/// With `bounds = None` the box is sized to `(lmax, lmax^power)`.
pub fn make_d(
    power: u32,
    lmax: u64,
    bounds: Option<TruncationBox>,
    field: Field,
) -> Result<Element, IndependenceError> {
    let deepest =
        checked_power(lmax, power).ok_or(IndependenceError::Overflow { power, lmax })?;
    let bounds = bounds.unwrap_or_else(|| TruncationBox(vec![lmax, deepest as u64]));
    if bounds.arity() != 2 || bounds.bound(0) < lmax || bounds.bound(1) < deepest as u64 {
        return Err(IndependenceError::BoxTooSmall { power, lmax, got: bounds.0 });
    }
    let terms = (0..=lmax).map(|l| {
        let y = -checked_power(l, power).expect("bounded by lmax^power");
        (Exponent(vec![l as i64, y]), field.one())
    });
    Ok(Element::from_terms(field, plane_dual_shape(), bounds, terms)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaEntry {
    /// The `X^l` coefficient vanishes.
    ZeroCoefficient,
    /// Smallest `Y`-exponent of a nonzero `X^l` coefficient.
    MinExponent(i64),
}

impl DeltaEntry {
    /// The integer the sequence takes in the shift relation: a vanishing
    /// coefficient counts as `0`.
    pub fn value(self) -> i64 {
        match self {
            DeltaEntry::ZeroCoefficient => 0,
            DeltaEntry::MinExponent(s) => s,
        }
    }
}

/// `δ(d)` restricted to `l` in `[start, start + entries.len() - 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaSequence {
    pub start: u64,
    pub entries: Vec<DeltaEntry>,
}

impl DeltaSequence {
    pub fn end(&self) -> u64 {
        self.start + self.entries.len() as u64 - 1
    }

    pub fn get(&self, l: u64) -> Option<DeltaEntry> {
        l.checked_sub(self.start).and_then(|k| self.entries.get(k as usize)).copied()
    }

    pub fn contains(&self, l: u64) -> bool {
        l >= self.start && l <= self.end()
    }
}

/// `δ(d)` over `l in [start, end]`.
pub fn delta(d: &Element, start: u64, end: u64) -> Result<DeltaSequence, IndependenceError> {
    if *d.shape() != plane_dual_shape() {
        return Err(IndependenceError::WrongShape {
            expected: plane_dual_shape(),
            got: d.shape().clone(),
        });
    }
    if !d.is_exact() {
        return Err(IndependenceError::Inexact);
    }
    if end < start || end > d.bounds().bound(0) {
        return Err(IndependenceError::WindowOutsideBox { start, end, bound: d.bounds().bound(0) });
    }
    let mut entries = vec![DeltaEntry::ZeroCoefficient; (end - start + 1) as usize];
    // Lexicographic order: the first term seen for a given X^l has the smallest Y-exponent.
    for (e, _) in d.terms() {
        let l = e[0] as u64;
        if l < start || l > end {
            continue;
        }
        let slot = &mut entries[(l - start) as usize];
        if *slot == DeltaEntry::ZeroCoefficient {
            *slot = DeltaEntry::MinExponent(e[1]);
        }
    }
    Ok(DeltaSequence { start, entries })
}

/// `r = X^(a+1) h + X^a g` with `g` in `k[[Y]]`, `g = c_b Y^b + ...`, `c_b != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub a: u64,
    pub b: u64,
    pub g: Element,
    pub h: Element,
}

pub fn decompose_r(r: &Element) -> Result<Decomposition, IndependenceError> {
    if *r.shape() != ModuleShape::ring(2) {
        return Err(IndependenceError::WrongShape {
            expected: ModuleShape::ring(2),
            got: r.shape().clone(),
        });
    }
    let a = r.terms().map(|(e, _)| e[0]).min().ok_or(IndependenceError::Degenerate)?;
    let mut g = Element::zero(r.field(), r.shape().clone(), r.bounds().clone());
    let mut h = Element::zero(r.field(), r.shape().clone(), r.bounds().clone());
    for (e, c) in r.terms() {
        if e[0] == a {
            g.add_term(Exponent(vec![0, e[1]]), c.clone())?;
        } else {
            h.add_term(Exponent(vec![e[0] - a - 1, e[1]]), c.clone())?;
        }
    }
    let b = g.terms().map(|(e, _)| e[1]).min().expect("g is nonzero");
    Ok(Decomposition { a: a as u64, b: b as u64, g, h })
}

/// `-(l - a)^power + b`.
pub fn shift_pattern(l: u64, a: u64, b: u64, power: u32) -> Option<i64> {
    let base = l.checked_sub(a)?;
    Some(-checked_power(base, power)? + b as i64)
}

/// Every `(a, b)` with `a in [0, tail_start]`, `b in [0, b_max]` and
/// `seq(l) = -(l-a)^power + b` on each window point `l >= tail_start`,
/// ordered by `b` then `a`.
///
/// For `power >= 2` there is at most one. For `power = 1` the pattern is
/// `-l + (a + b)` and only `a + b` is determined.
pub fn shift_form_fits(
    seq: &DeltaSequence,
    power: u32,
    tail_start: u64,
    b_max: u64,
) -> Result<Vec<(u64, u64)>, IndependenceError> {
    let from = tail_start.max(seq.start);
    if !seq.contains(from) || seq.end() - from + 1 < 3 {
        return Err(IndependenceError::WindowTooShort { tail_start });
    }
    let tail: Option<Vec<(u64, i64)>> = (from..=seq.end())
        .map(|l| match seq.get(l) {
            Some(DeltaEntry::MinExponent(s)) => Some((l, s)),
            _ => None,
        })
        .collect();
    let Some(tail) = tail else { return Ok(Vec::new()) };
    let mut fits = Vec::new();
    for b in 0..=b_max {
        for a in 0..=tail_start.min(from) {
            if tail.iter().all(|&(l, s)| shift_pattern(l, a, b, power) == Some(s)) {
                fits.push((a, b));
            }
        }
    }
    Ok(fits)
}

/// The first of [`shift_form_fits`], i.e. the fit with least `b`.
pub fn fit_shift_form(
    seq: &DeltaSequence,
    power: u32,
    tail_start: u64,
    b_max: u64,
) -> Result<Option<(u64, u64)>, IndependenceError> {
    Ok(shift_form_fits(seq, power, tail_start, b_max)?.first().copied())
}

/// Certifies `a_{N+k} = b_{M+k} + p` for the compared indices `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftWitness {
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(rename = "M")]
    pub m: u64,
    pub p: i64,
}

impl ShiftWitness {
    pub fn reversed(self) -> ShiftWitness {
        ShiftWitness { n: self.m, m: self.n, p: -self.p }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftOutcome {
    Witness(ShiftWitness),
    /// Every candidate shift was compared on at least 3 points and failed.
    NoWitness,
    /// No candidate matched but some had fewer than 3 comparable points.
    Inconclusive,
}

const MIN_OVERLAP: usize = 3;

fn aligned_pairs(s1: &DeltaSequence, s2: &DeltaSequence, n: u64, m: u64) -> Vec<(i64, i64)> {
    let k_lo = 1.max(s1.start.saturating_sub(n)).max(s2.start.saturating_sub(m));
    (k_lo..)
        .map_while(|k| Some((s1.get(n + k)?.value(), s2.get(m + k)?.value())))
        .collect()
}

/// Checks a witness on the overlap of the two windows.
pub fn verify_witness(s1: &DeltaSequence, s2: &DeltaSequence, w: ShiftWitness) -> bool {
    let pairs = aligned_pairs(s1, s2, w.n, w.m);
    pairs.len() >= MIN_OVERLAP && pairs.iter().all(|&(x, y)| x == y + w.p)
}

/// The lexicographically least `(N, M, p)` with `N, M <= search_bound`
/// aligning the window restrictions of `s1` and `s2`.
pub fn shift_equiv_window(s1: &DeltaSequence, s2: &DeltaSequence, search_bound: u64) -> ShiftOutcome {
    let mut short = false;
    for n in 0..=search_bound {
        for m in 0..=search_bound {
            let pairs = aligned_pairs(s1, s2, n, m);
            if pairs.len() < MIN_OVERLAP {
                short = true;
                continue;
            }
            let p = pairs[0].0 - pairs[0].1;
            if pairs.iter().all(|&(x, y)| x == y + p) {
                return ShiftOutcome::Witness(ShiftWitness { n, m, p });
            }
        }
    }
    if short {
        ShiftOutcome::Inconclusive
    } else {
        ShiftOutcome::NoWitness
    }
}

/// Box sizes making `sum r_j d_j` exact up to `X^lmax`:
/// `X`-bound `lmax + maxdeg_X`, `Y`-bound `lmax^m0 + maxdeg_Y + 1`.
pub fn auto_truncation(r_list: &[Element], lmax: u64) -> Result<TruncationBox, IndependenceError> {
    let Some(m0) = r_list.iter().rposition(|r| !r.is_zero()) else {
        return Ok(TruncationBox(vec![0, 0]));
    };
    let power = (m0 + 1) as u32;
    let max_deg = |j: usize| {
        r_list.iter().flat_map(|r| r.terms().map(move |(e, _)| e[j])).max().unwrap_or(0) as u64
    };
    let deepest = checked_power(lmax, power).ok_or(IndependenceError::Overflow { power, lmax })?;
    Ok(TruncationBox(vec![lmax + max_deg(0), deepest as u64 + max_deg(1) + 1]))
}

/// A term `X^x Y^y` of some `r_j`, multiplied into `d_power`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Contribution {
    pub x: u64,
    pub y: u64,
    pub power: u32,
}

impl Contribution {
    /// Smallest `Y`-exponent this term places in front of `X^l`, if any.
    fn at(self, l: u64) -> Option<i128> {
        let e = self.y as i128 - (l.checked_sub(self.x)? as i128).pow(self.power);
        (e <= 0).then_some(e)
    }
}

/// The least `l >= lead.x` from which `lead` alone attains the smallest
/// `Y`-exponent in front of `X^l` among all `others`, or `None` if that
/// never happens for all large `l`.
///
/// Each margin `other - lead` is a polynomial in `l`. It is a nonpositive
/// constant exactly when both have power 1 and `x - a + y - b <= 0`, and
/// otherwise tends to infinity and is nondecreasing once
/// `l >= max(2a + 2, 2^(power-1), x)`.
pub fn dominance_tail_start(lead: Contribution, others: &[Contribution]) -> Option<u64> {
    if lead.power == 1
        && others.iter().any(|o| {
            o.power == 1 && (o.x as i128 - lead.x as i128 + o.y as i128 - lead.y as i128) <= 0
        })
    {
        return None;
    }
    let holds = |l: u64| -> bool {
        let Some(v) = lead.at(l) else { return false };
        others.iter().all(|o| o.at(l).is_none_or(|w| v < w))
    };
    let settle = others
        .iter()
        .map(|o| o.x)
        .chain([2 * lead.x + 2, 1 << (lead.power - 1).min(40), lead.x + lead.y])
        .max()
        .unwrap_or(0);
    let mut first_hold = settle;
    while !holds(first_hold) {
        first_hold += 1;
        if first_hold > settle + (1 << 24) {
            return None;
        }
    }
    let last_fail = (lead.x..first_hold).rev().find(|&l| !holds(l));
    Some(last_fail.map_or(lead.x, |l| l + 1))
}

/// Tail start for a single coefficient against `d_1`.
///
/// The `X^L` coefficient of `r d_1` is `sum_t r_t(1,1) Y^(t-L)` over the
/// homogeneous parts `r_t` with every term present (`x <= L`), so for large
/// `L` its smallest exponent is `t_min - L` with `t_min` the least degree
/// where `r_t(1,1) != 0`. The decomposition pattern `-(L-a) + b` holds from
/// `max(t_min, x)` over the terms of degree `<= t_min` exactly when
/// `t_min = a + b`.
fn linear_tail_start(r: &Element, dec: &Decomposition) -> Result<u64, IndependenceError> {
    let mut sums: BTreeMap<i64, Scalar> = BTreeMap::new();
    for (e, c) in r.terms() {
        let slot = sums.entry(e[0] + e[1]).or_insert_with(|| r.field().zero());
        *slot = &*slot + c;
    }
    let Some(t_min) = sums.iter().find(|(_, c)| !c.is_zero()).map(|(&t, _)| t) else {
        return Err(IndependenceError::Inconclusive {
            reason: "r is divisible by Y - X, so r d_1 = 0".into(),
            required_lmax: None,
        });
    };
    if t_min as u64 != dec.a + dec.b {
        return Err(IndependenceError::Inconclusive {
            reason: format!(
                "tail of r d_1 is {t_min} - l, not the shift by a + b = {}",
                dec.a + dec.b
            ),
            required_lmax: None,
        });
    }
    let reach = r.terms().filter(|(e, _)| e[0] + e[1] <= t_min).map(|(e, _)| e[0]).max().unwrap_or(0);
    Ok(t_min.max(reach) as u64)
}

fn contributions(r_list: &[Element], m0: usize, dec: &Decomposition) -> Vec<Contribution> {
    let lead = (dec.a, dec.b);
    r_list[..=m0]
        .iter()
        .enumerate()
        .flat_map(|(k, r)| {
            r.terms().map(move |(e, _)| Contribution { x: e[0] as u64, y: e[1] as u64, power: (k + 1) as u32 })
        })
        .filter(|c| !(c.power as usize == m0 + 1 && (c.x, c.y) == lead))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceCertificate {
    /// 1-based index of the last nonzero coefficient.
    pub m0: usize,
    pub lmax: u64,
    pub bounds: TruncationBox,
    pub a: u64,
    pub b: u64,
    /// `g` and `h` of the decomposition of `r_{m0}`, in expression syntax.
    pub g: String,
    pub h: String,
    pub tail_start: u64,
    /// Fit found by [`fit_shift_form`] on the tail, independent of the decomposition.
    pub fitted: Option<(u64, u64)>,
    /// Whether the tail determines `(a, b)`; false only for `m0 = 1`.
    pub fit_unique: bool,
    /// `δ(sum r_j d_j)` over `l in [0, lmax]`.
    pub delta: DeltaSequence,
    pub sum_terms: usize,
    pub sum_nonzero: bool,
}

/// Computes `s = sum_j r_j d_j` (1-based `j`) in the automatically sized box.
pub fn combination(r_list: &[Element], lmax: u64) -> Result<Element, IndependenceError> {
    let bounds = auto_truncation(r_list, lmax)?;
    let field = r_list.first().map_or(Field::Rational, Element::field);
    let mut s = Element::zero(field, plane_dual_shape(), bounds.clone());
    for (k, r) in r_list.iter().enumerate() {
        if r.is_zero() {
            continue;
        }
        if *r.shape() != ModuleShape::ring(2) {
            return Err(IndependenceError::WrongShape {
                expected: ModuleShape::ring(2),
                got: r.shape().clone(),
            });
        }
        let d = make_d((k + 1) as u32, lmax, Some(bounds.clone()), field)?;
        s = &s + &ring_act(r, &d)?;
    }
    Ok(s)
}

/// A finite-window certificate that `sum_j r_j d_j != 0`.
pub fn independence_certificate(
    r_list: &[Element],
    lmax: u64,
) -> Result<IndependenceCertificate, IndependenceError> {
    let m0 = r_list.iter().rposition(|r| !r.is_zero()).ok_or(IndependenceError::Degenerate)?;
    let power = (m0 + 1) as u32;
    let dec = decompose_r(&r_list[m0])?;
    let tail_start = if power == 1 {
        linear_tail_start(&r_list[m0], &dec)?
    } else {
        let lead = Contribution { x: dec.a, y: dec.b, power };
        dominance_tail_start(lead, &contributions(r_list, m0, &dec)).ok_or_else(|| {
            IndependenceError::Inconclusive {
                reason: format!("-(l-a)^{power} + b never dominates for a = {}, b = {}", dec.a, dec.b),
                required_lmax: None,
            }
        })?
    };
    if lmax < tail_start + 2 {
        return Err(IndependenceError::Inconclusive {
            reason: format!("dominance starts at l = {tail_start}"),
            required_lmax: Some(tail_start + 2),
        });
    }
    let bounds = auto_truncation(r_list, lmax)?;
    let s = combination(r_list, lmax)?;
    let seq = delta(&s, 0, lmax)?;
    for l in tail_start..=lmax {
        let want = shift_pattern(l, dec.a, dec.b, power).map(DeltaEntry::MinExponent);
        if seq.get(l) != want {
            return Err(IndependenceError::PatternMismatch { l });
        }
    }
    let b_max = r_list.iter().flat_map(|r| r.terms().map(|(e, _)| e[1])).max().unwrap_or(0) as u64;
    let fits = shift_form_fits(&seq, power, tail_start, b_max)?;
    let fitted = fits.first().copied();
    let fit_unique = fits.len() == 1;
    Ok(IndependenceCertificate {
        m0: m0 + 1,
        lmax,
        bounds,
        a: dec.a,
        b: dec.b,
        g: serialize_element(&dec.g),
        h: serialize_element(&dec.h),
        tail_start,
        fitted,
        fit_unique,
        delta: seq,
        sum_terms: s.len(),
        sum_nonzero: !s.is_zero(),
    })
}
