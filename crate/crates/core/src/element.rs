//! Shaped sparse elements and the module structures they carry.
//!
//! Every module handled by this crate is a product of one-variable pieces:
//! a *series* direction (`k[[X]]`, exponents `>= 0`) or an *inverse*
//! direction (`k[X^-1]`, exponents `<= 0`, the socle sitting at exponent 0).
//! With that, one carrier type covers `R = k[[X1..Xn]]`, the local
//! cohomology module `H^i = k[[X_{i+1}..Xn]][X1^-1..Xi^-1]`, the injective
//! hull `E = k[X1^-1..Xn^-1]` and the Matlis dual
//! `D(H^i) = k[X_{i+1}^-1..Xn^-1][[X1..Xi]]`.
//!
//! Elements live in a finite [`TruncationBox`]. Operations that would push a
//! term outside the box drop it and clear the element's exactness flag, so an
//! exact element is a provable identity and an inexact one holds only up to
//! the window.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(ModuleShape, ModuleShape),
    #[error("truncation box mismatch: {0:?} vs {1:?}")]
    BoxMismatch(Vec<u64>, Vec<u64>),
    #[error("variable count mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("empty linear combination")]
    EmptyCombination,
    #[error("multiplier is not an element of R (shape {0})")]
    NotRingElement(ModuleShape),
    #[error("multiplier is not exact")]
    InexactMultiplier,
    #[error("variable index {index} out of range for {arity} variables")]
    BadVariable { index: usize, arity: usize },
    #[error("variable {0} does not have series role")]
    NotSeriesVariable(usize),
    #[error("exponent {exponent} violates the role of variable {variable}")]
    RoleViolation { exponent: Exponent, variable: usize },
    #[error("exponent {0} lies outside the truncation box")]
    OutOfBox(Exponent),
}

/// Exponent vector of a monomial. Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Exponent(pub Vec<i64>);

impl Exponent {
    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    pub fn unit(n: usize, j: usize) -> Self {
        let mut v = vec![0; n];
        v[j] = 1;
        Exponent(v)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    fn without(&self, j: usize) -> Exponent {
        let mut v = self.0.clone();
        v.remove(j);
        Exponent(v)
    }
}

impl From<Vec<i64>> for Exponent {
    fn from(v: Vec<i64>) -> Self {
        Exponent(v)
    }
}

impl std::ops::Index<usize> for Exponent {
    type Output = i64;
    fn index(&self, j: usize) -> &i64 {
        &self.0[j]
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    /// Power-series direction, exponents `>= 0`.
    Series,
    /// Inverse-polynomial direction, exponents `<= 0`.
    Inverse,
}

impl Role {
    pub fn flip(self) -> Role {
        match self {
            Role::Series => Role::Inverse,
            Role::Inverse => Role::Series,
        }
    }

    pub fn admits(self, e: i64) -> bool {
        match self {
            Role::Series => e >= 0,
            Role::Inverse => e <= 0,
        }
    }
}

/// Per-variable roles of a product-type module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModuleShape(pub Vec<Role>);

impl ModuleShape {
    /// `R = k[[X1..Xn]]`.
    pub fn ring(n: usize) -> Self {
        ModuleShape(vec![Role::Series; n])
    }

    /// `E = k[X1^-1..Xn^-1]`.
    pub fn injective_hull(n: usize) -> Self {
        ModuleShape(vec![Role::Inverse; n])
    }

    /// `H^i_{(X1..Xi)}(R)`: inverse in the first `i` variables.
    pub fn local_cohomology(n: usize, i: usize) -> Self {
        ModuleShape((0..n).map(|j| if j < i { Role::Inverse } else { Role::Series }).collect())
    }

    /// `D(H^i_{(X1..Xi)}(R))`: series in the first `i` variables.
    pub fn matlis_dual(n: usize, i: usize) -> Self {
        Self::local_cohomology(n, i).dual()
    }

    pub fn dual(&self) -> Self {
        ModuleShape(self.0.iter().map(|r| r.flip()).collect())
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn role(&self, j: usize) -> Role {
        self.0[j]
    }

    pub fn is_ring(&self) -> bool {
        self.0.iter().all(|&r| r == Role::Series)
    }

    pub fn is_injective_hull(&self) -> bool {
        self.0.iter().all(|&r| r == Role::Inverse)
    }

    pub fn without(&self, j: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(j);
        ModuleShape(v)
    }
}

impl fmt::Display for ModuleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.0 {
            f.write_str(match r {
                Role::Series => "S",
                Role::Inverse => "I",
            })?;
        }
        Ok(())
    }
}

/// Per-variable bounds `T_j`: `0 <= e_j <= T_j` on series roles and
/// `-T_j <= e_j <= 0` on inverse roles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TruncationBox(pub Vec<u64>);

impl TruncationBox {
    pub fn uniform(n: usize, bound: u64) -> Self {
        TruncationBox(vec![bound; n])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn bound(&self, j: usize) -> u64 {
        self.0[j]
    }

    pub fn max_bound(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        e.0.iter().zip(&self.0).all(|(&x, &t)| x.unsigned_abs() <= t)
    }

    pub fn without(&self, j: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(j);
        TruncationBox(v)
    }

    /// All exponents of the given shape lying in the box, in lexicographic order.
    pub fn monomials(&self, shape: &ModuleShape) -> Vec<Exponent> {
        let ranges: Vec<Vec<i64>> = shape
            .0
            .iter()
            .zip(&self.0)
            .map(|(role, &t)| {
                let t = t as i64;
                match role {
                    Role::Series => (0..=t).collect(),
                    Role::Inverse => (-t..=0).collect(),
                }
            })
            .collect();
        let mut out = vec![Vec::new()];
        for range in &ranges {
            let mut next = Vec::with_capacity(out.len() * range.len());
            for prefix in &out {
                for &v in range {
                    let mut p = prefix.clone();
                    p.push(v);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(Exponent).collect()
    }
}

/// A finite sparse sum of monomials in a shaped, truncated module.
#[derive(Debug, Clone)]
pub struct Element {
    field: Field,
    shape: ModuleShape,
    bounds: TruncationBox,
    terms: BTreeMap<Exponent, Scalar>,
    exact: bool,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.shape == other.shape
            && self.bounds == other.bounds
            && self.terms == other.terms
    }
}

impl Eq for Element {}

impl Element {
    pub fn zero(field: Field, shape: ModuleShape, bounds: TruncationBox) -> Self {
        assert_eq!(shape.arity(), bounds.arity(), "shape and box arity differ");
        Element { field, shape, bounds, terms: BTreeMap::new(), exact: true }
    }

    pub fn one(field: Field, shape: ModuleShape, bounds: TruncationBox) -> Self {
        let n = shape.arity();
        Self::monomial(field, shape, bounds, Exponent::zero(n), field.one())
            .expect("zero exponent is always admissible")
    }

    pub fn monomial(
        field: Field,
        shape: ModuleShape,
        bounds: TruncationBox,
        exponent: Exponent,
        coeff: Scalar,
    ) -> Result<Self, AlgebraError> {
        let mut e = Self::zero(field, shape, bounds);
        e.add_term(exponent, coeff)?;
        Ok(e)
    }

    pub fn from_terms<I>(
        field: Field,
        shape: ModuleShape,
        bounds: TruncationBox,
        terms: I,
    ) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Exponent, Scalar)>,
    {
        let mut e = Self::zero(field, shape, bounds);
        for (x, c) in terms {
            e.add_term(x, c)?;
        }
        Ok(e)
    }

    /// Adds `coeff * X^exponent`, combining with an existing term.
    pub fn add_term(&mut self, exponent: Exponent, coeff: Scalar) -> Result<(), AlgebraError> {
        self.check_admissible(&exponent)?;
        if coeff.field() != self.field {
            return Err(AlgebraError::FieldMismatch(coeff.field(), self.field));
        }
        self.accumulate(exponent, coeff);
        Ok(())
    }

    pub(crate) fn check_admissible(&self, exponent: &Exponent) -> Result<(), AlgebraError> {
        if exponent.arity() != self.arity() {
            return Err(AlgebraError::ArityMismatch(exponent.arity(), self.arity()));
        }
        if let Some(j) = (0..self.arity()).find(|&j| !self.shape.role(j).admits(exponent[j])) {
            return Err(AlgebraError::RoleViolation { exponent: exponent.clone(), variable: j });
        }
        if !self.bounds.contains(exponent) {
            return Err(AlgebraError::OutOfBox(exponent.clone()));
        }
        Ok(())
    }

    fn accumulate(&mut self, exponent: Exponent, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn empty_like(&self) -> Element {
        Element::zero(self.field, self.shape.clone(), self.bounds.clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn shape(&self) -> &ModuleShape {
        &self.shape
    }

    pub fn bounds(&self) -> &TruncationBox {
        &self.bounds
    }

    pub fn arity(&self) -> usize {
        self.shape.arity()
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Marks the element as known only up to its window.
    pub fn mark_inexact(mut self) -> Self {
        self.exact = false;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponent: &Exponent) -> Scalar {
        self.terms.get(exponent).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// The same terms viewed in a different (compatible) box.
    pub fn rebox(&self, bounds: TruncationBox) -> Result<Element, AlgebraError> {
        let mut out = Element::zero(self.field, self.shape.clone(), bounds);
        for (x, c) in &self.terms {
            out.add_term(x.clone(), c.clone())?;
        }
        out.exact = self.exact;
        Ok(out)
    }

    pub fn scaled(&self, c: &Scalar) -> Element {
        let mut out = self.empty_like();
        out.exact = self.exact;
        for (x, v) in &self.terms {
            out.accumulate(x.clone(), v * c);
        }
        out
    }
}

/// Exact `k`-linear combination `sum c_k e_k`.
pub fn linear_combine(pairs: &[(Scalar, &Element)]) -> Result<Element, AlgebraError> {
    let (_, first) = pairs.first().ok_or(AlgebraError::EmptyCombination)?;
    let mut out = first.empty_like();
    for (c, e) in pairs {
        if e.shape != first.shape {
            return Err(AlgebraError::ShapeMismatch(first.shape.clone(), e.shape.clone()));
        }
        if e.bounds != first.bounds {
            return Err(AlgebraError::BoxMismatch(first.bounds.0.clone(), e.bounds.0.clone()));
        }
        if e.field != first.field || c.field() != first.field {
            return Err(AlgebraError::FieldMismatch(first.field, c.field()));
        }
        out.exact &= e.exact;
        for (x, v) in &e.terms {
            out.accumulate(x.clone(), v * c);
        }
    }
    Ok(out)
}

impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let one = self.field.one();
        linear_combine(&[(one.clone(), self), (one, rhs)]).expect("incompatible summands")
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let one = self.field.one();
        linear_combine(&[(one.clone(), self), (-&one, rhs)]).expect("incompatible summands")
    }
}

/// The `R`-module action `r * m` for `r` in `R = k[[X1..Xn]]`.
///
/// Monomials multiply by adding exponents. On an inverse direction a
/// coordinate that becomes positive kills the term (the module structure of
/// `k[X^-1]`); on a series direction a coordinate beyond the box is dropped
/// and the result is marked inexact.
pub fn ring_act(r: &Element, m: &Element) -> Result<Element, AlgebraError> {
    if !r.shape.is_ring() {
        return Err(AlgebraError::NotRingElement(r.shape.clone()));
    }
    if r.arity() != m.arity() {
        return Err(AlgebraError::ArityMismatch(r.arity(), m.arity()));
    }
    if r.field != m.field {
        return Err(AlgebraError::FieldMismatch(r.field, m.field));
    }
    if !r.exact {
        return Err(AlgebraError::InexactMultiplier);
    }
    let mut out = m.empty_like();
    out.exact = m.exact;
    for (b, rc) in &r.terms {
        'terms: for (e, mc) in &m.terms {
            let sum = b.add(e);
            for j in 0..sum.arity() {
                match m.shape.role(j) {
                    Role::Inverse if sum[j] > 0 => continue 'terms,
                    Role::Series if sum[j] as u64 > m.bounds.bound(j) => {
                        out.exact = false;
                        continue 'terms;
                    }
                    _ => {}
                }
            }
            out.accumulate(sum, rc * mc);
        }
    }
    Ok(out)
}

/// The partial derivation `d/dX_j` acting on a shaped module.
///
/// On a series direction this is ordinary differentiation. On an inverse
/// direction the label `X^nu` (`nu <= 0`) stands for the Čech class of
/// `X^(nu-1)`, so `X^nu` is sent to `(nu-1) X^(nu-1)`; with this rule the
/// action together with [`ring_act`] satisfies the Leibniz rule and the Weyl
/// relation `[d_j, X_j] = 1` exactly, including at the socle. Terms pushed
/// below the box are dropped and the result is marked inexact.
pub fn derivation_act(j: usize, m: &Element) -> Result<Element, AlgebraError> {
    differentiate(j, m, true)
}

/// Differentiation of the exponent labels themselves: `X^e -> e X^(e-1)` on
/// every role.
///
/// On inverse directions this is *not* a module action compatible with
/// [`ring_act`]: `d(X * 1) - X * d(1) = 0` in `k[X^-1]` instead of `1`.
/// [`derivation_act`] is the operator to use for `D(R,k)`-module laws.
pub fn formal_partial(j: usize, m: &Element) -> Result<Element, AlgebraError> {
    differentiate(j, m, false)
}

fn differentiate(j: usize, m: &Element, cech_shift: bool) -> Result<Element, AlgebraError> {
    if j >= m.arity() {
        return Err(AlgebraError::BadVariable { index: j, arity: m.arity() });
    }
    let role = m.shape.role(j);
    let mut out = m.empty_like();
    out.exact = m.exact;
    for (e, c) in &m.terms {
        let factor = match role {
            Role::Inverse if cech_shift => e[j] - 1,
            _ => e[j],
        };
        if factor == 0 {
            continue;
        }
        let mut x = e.clone();
        x.0[j] -= 1;
        if role == Role::Series && x[j] < 0 {
            continue;
        }
        if role == Role::Inverse && x[j].unsigned_abs() > m.bounds.bound(j) {
            out.exact = false;
            continue;
        }
        out.accumulate(x, c.scale(factor));
    }
    Ok(out)
}

/// The class of `m` in `M / X_j M`, as an element over the remaining variables.
///
/// Keeps the terms with `e_j = 0` and deletes coordinate `j`.
pub fn quotient_by_series_var(j: usize, m: &Element) -> Result<Element, AlgebraError> {
    if j >= m.arity() {
        return Err(AlgebraError::BadVariable { index: j, arity: m.arity() });
    }
    if m.shape.role(j) != Role::Series {
        return Err(AlgebraError::NotSeriesVariable(j));
    }
    let mut out = Element::zero(m.field, m.shape.without(j), m.bounds.without(j));
    out.exact = m.exact;
    for (e, c) in m.terms.iter().filter(|(e, _)| e[j] == 0) {
        out.accumulate(e.without(j), c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Field::Rational.from_i64(v)
    }

    fn elem(shape: ModuleShape, bound: u64, terms: &[(&[i64], i64)]) -> Element {
        let n = shape.arity();
        Element::from_terms(
            Field::Rational,
            shape,
            TruncationBox::uniform(n, bound),
            terms.iter().map(|(e, c)| (Exponent(e.to_vec()), q(*c))),
        )
        .unwrap()
    }

    // D = k[Y^-1][[X]]: X series, Y inverse.
    fn d2(lmax: i64, ybound: u64) -> Element {
        let shape = ModuleShape::matlis_dual(2, 1);
        Element::from_terms(
            Field::Rational,
            shape,
            TruncationBox(vec![lmax as u64 + 2, ybound]),
            (0..=lmax).map(|l| (Exponent(vec![l, -l * l]), q(1))),
        )
        .unwrap()
    }

    #[test]
    fn linear_combine_examples() {
        let r = ModuleShape::ring(1);
        let x = elem(r.clone(), 3, &[(&[1], 1)]);
        assert_eq!(linear_combine(&[(q(1), &x)]).unwrap(), x);
        assert!(linear_combine(&[(q(1), &x), (q(-1), &x)]).unwrap().is_zero());
        let five_x = linear_combine(&[(q(2), &x), (q(3), &x)]).unwrap();
        assert_eq!(five_x, elem(r, 3, &[(&[1], 5)]));
    }

    #[test]
    fn linear_combine_rejects_mismatch() {
        let a = elem(ModuleShape::ring(1), 3, &[(&[1], 1)]);
        let b = elem(ModuleShape::injective_hull(1), 3, &[(&[-1], 1)]);
        let c = elem(ModuleShape::ring(1), 4, &[(&[1], 1)]);
        assert!(matches!(
            linear_combine(&[(q(1), &a), (q(1), &b)]),
            Err(AlgebraError::ShapeMismatch(..))
        ));
        assert!(matches!(
            linear_combine(&[(q(1), &a), (q(1), &c)]),
            Err(AlgebraError::BoxMismatch(..))
        ));
        assert_eq!(linear_combine(&[]), Err(AlgebraError::EmptyCombination));
    }

    #[test]
    fn kill_rule_in_injective_hull() {
        let e = ModuleShape::injective_hull(1);
        let x = elem(ModuleShape::ring(1), 3, &[(&[1], 1)]);
        let one = elem(e.clone(), 3, &[(&[0], 1)]);
        let xinv = elem(e.clone(), 3, &[(&[-1], 1)]);
        assert!(ring_act(&x, &one).unwrap().is_zero());
        assert!(ring_act(&x, &one).unwrap().is_exact());
        assert_eq!(ring_act(&x, &xinv).unwrap(), one);
    }

    #[test]
    fn y_times_d2_kills_constant_term() {
        let d = d2(5, 30);
        let y = elem(ModuleShape::ring(2), 1, &[(&[0, 1], 1)]);
        let got = ring_act(&y, &d).unwrap();
        let expected = Element::from_terms(
            Field::Rational,
            d.shape().clone(),
            d.bounds().clone(),
            (1..=5).map(|l| (Exponent(vec![l, 1 - l * l]), q(1))),
        )
        .unwrap();
        assert_eq!(got, expected);
        assert!(got.is_exact());
    }

    #[test]
    fn ring_act_truncates_series_direction() {
        let r = ModuleShape::ring(1);
        let x2 = elem(r.clone(), 3, &[(&[2], 1)]);
        let m = elem(r, 3, &[(&[1], 1), (&[2], 1)]);
        let got = ring_act(&x2, &m).unwrap();
        assert_eq!(got.len(), 1);
        assert!(!got.is_exact());
    }

    #[test]
    fn ring_act_rejects_non_ring_multiplier() {
        let e = elem(ModuleShape::injective_hull(1), 2, &[(&[-1], 1)]);
        assert!(matches!(ring_act(&e, &e), Err(AlgebraError::NotRingElement(_))));
        let inexact = elem(ModuleShape::ring(1), 2, &[(&[1], 1)]).mark_inexact();
        assert_eq!(ring_act(&inexact, &e), Err(AlgebraError::InexactMultiplier));
    }

    #[test]
    fn derivation_on_series() {
        let x2 = elem(ModuleShape::ring(1), 3, &[(&[2], 1)]);
        assert_eq!(derivation_act(0, &x2).unwrap(), elem(ModuleShape::ring(1), 3, &[(&[1], 2)]));
        assert!(derivation_act(1, &x2).is_err());
    }

    #[test]
    fn derivation_on_inverse_direction() {
        let e = ModuleShape::injective_hull(2);
        let y3 = elem(e.clone(), 4, &[(&[0, -3], 1)]);
        // Label Y^-3 is the Čech class of Y^-4.
        assert_eq!(derivation_act(1, &y3).unwrap(), elem(e.clone(), 4, &[(&[0, -4], -4)]));
        assert_eq!(formal_partial(1, &y3).unwrap(), elem(e.clone(), 4, &[(&[0, -4], -3)]));
        let one = elem(e.clone(), 4, &[(&[0, 0], 1)]);
        assert_eq!(derivation_act(0, &one).unwrap(), elem(e.clone(), 4, &[(&[-1, 0], -1)]));
        // Leaving the box clears exactness.
        let low = elem(e, 4, &[(&[0, -4], 1)]);
        let d = derivation_act(1, &low).unwrap();
        assert!(d.is_zero() && !d.is_exact());
    }

    #[test]
    fn formal_partial_breaks_weyl_at_socle() {
        let e = ModuleShape::injective_hull(1);
        let x = elem(ModuleShape::ring(1), 2, &[(&[1], 1)]);
        let one = elem(e, 2, &[(&[0], 1)]);
        type Op = fn(usize, &Element) -> Result<Element, AlgebraError>;
        for (op, holds) in [(formal_partial as Op, false), (derivation_act as Op, true)] {
            let lhs = op(0, &ring_act(&x, &one).unwrap()).unwrap();
            let rhs = ring_act(&x, &op(0, &one).unwrap()).unwrap();
            assert_eq!(&lhs - &rhs == one, holds);
        }
    }

    #[test]
    fn derivative_of_d2() {
        let d = d2(3, 10);
        let got = derivation_act(0, &d).unwrap();
        let expected = Element::from_terms(
            Field::Rational,
            d.shape().clone(),
            d.bounds().clone(),
            [(vec![0, -1], 1), (vec![1, -4], 2), (vec![2, -9], 3)]
                .into_iter()
                .map(|(e, c)| (Exponent(e), q(c))),
        )
        .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn quotient_examples() {
        let r = ModuleShape::ring(2);
        let m = elem(r.clone(), 3, &[(&[0, 0], 1), (&[1, 1], 1)]);
        assert_eq!(
            quotient_by_series_var(0, &m).unwrap(),
            elem(ModuleShape::ring(1), 3, &[(&[0], 1)])
        );
        let x2 = elem(r, 3, &[(&[2, 0], 1)]);
        assert!(quotient_by_series_var(0, &x2).unwrap().is_zero());
        let q = quotient_by_series_var(0, &d2(4, 20)).unwrap();
        assert_eq!(q.terms().map(|(e, _)| e.clone()).collect::<Vec<_>>(), vec![Exponent(vec![0])]);
        assert_eq!(q.shape(), &ModuleShape::injective_hull(1));
        assert_eq!(
            quotient_by_series_var(1, &d2(2, 5)),
            Err(AlgebraError::NotSeriesVariable(1))
        );
    }

    #[test]
    fn admissibility_is_enforced() {
        let e = Element::zero(Field::Rational, ModuleShape::injective_hull(1), TruncationBox(vec![2]));
        let mut e2 = e.clone();
        assert!(matches!(e2.add_term(Exponent(vec![1]), q(1)), Err(AlgebraError::RoleViolation { .. })));
        assert!(matches!(e2.add_term(Exponent(vec![-3]), q(1)), Err(AlgebraError::OutOfBox(_))));
        assert_eq!(e2, e);
    }

    #[test]
    fn shapes() {
        assert_eq!(ModuleShape::ring(3).dual(), ModuleShape::injective_hull(3));
        assert_eq!(ModuleShape::local_cohomology(2, 1).to_string(), "IS");
        assert_eq!(ModuleShape::matlis_dual(2, 1).to_string(), "SI");
        assert_eq!(TruncationBox(vec![2, 1]).monomials(&ModuleShape::matlis_dual(2, 1)).len(), 6);
    }
}
