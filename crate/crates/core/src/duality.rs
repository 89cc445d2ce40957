//! The Matlis-dual side: the pairing `D(H^i) x H^i -> E`, its surjectivity,
//! torsion functors on shaped modules, and regular sequences on the dual.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::element::{
    quotient_by_series_var, ring_act, AlgebraError, Element, Exponent, ModuleShape, Role,
    TruncationBox,
};
use crate::linalg::sparse_rank;
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("shapes {0} and {1} are not mutually dual")]
    NotDual(ModuleShape, ModuleShape),
    #[error("target exponent {0} is not an E-monomial")]
    NotInjectiveHullMonomial(Exponent),
    #[error("need 1 <= i <= n, got n = {n}, i = {i}")]
    BadIndices { n: usize, i: usize },
    #[error("need i <= n, got n = {n}, i = {i}")]
    IndexOutOfRange { n: usize, i: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub fn dual_shape(shape: &ModuleShape) -> ModuleShape {
    shape.dual()
}

/// The pairing into `E`: `X^u (x) X^v -> X^(u+v)` when every coordinate is
/// `<= 0`, and `0` otherwise.
///
/// The result lives in the `E`-shape with per-variable bound
/// `max(T_d, T_m)`, which contains every surviving product.
pub fn matlis_pair(d: &Element, m: &Element) -> Result<Element, DualityError> {
    if d.shape().dual() != *m.shape() {
        return Err(DualityError::NotDual(d.shape().clone(), m.shape().clone()));
    }
    if d.field() != m.field() {
        return Err(AlgebraError::FieldMismatch(d.field(), m.field()).into());
    }
    let n = d.arity();
    let bounds =
        TruncationBox((0..n).map(|j| d.bounds().bound(j).max(m.bounds().bound(j))).collect());
    let mut out = Element::zero(d.field(), ModuleShape::injective_hull(n), bounds);
    for (u, cu) in d.terms() {
        for (v, cv) in m.terms() {
            let w = u.add(v);
            if w.0.iter().all(|&x| x <= 0) {
                out.add_term(w, cu * cv)?;
            }
        }
    }
    if !(d.is_exact() && m.is_exact()) {
        out = out.mark_inexact();
    }
    Ok(out)
}

/// Coefficient of the socle monomial `X^0` in [`matlis_pair`].
pub fn socle_functional(d: &Element, m: &Element) -> Result<Scalar, DualityError> {
    let p = matlis_pair(d, m)?;
    Ok(p.coeff(&Exponent::zero(d.arity())))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingEntry {
    pub dual: Exponent,
    pub primal: Exponent,
    /// Exponent of the E-monomial, or `None` when the product is killed.
    pub product: Option<Exponent>,
}

/// The socle pairing between the monomial bases of `D(H^i)` and `H^i` in a box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingReport {
    pub n: usize,
    pub i: usize,
    pub bound: u64,
    pub dual_basis: Vec<Exponent>,
    pub primal_basis: Vec<Exponent>,
    pub entries: Vec<PairingEntry>,
    /// For each dual basis index, the primal index it pairs to `1` with.
    pub permutation: Vec<Option<usize>>,
    pub passed: bool,
}

fn box_basis(field: Field, shape: &ModuleShape, bounds: &TruncationBox) -> Vec<Element> {
    bounds
        .monomials(shape)
        .into_iter()
        .map(|x| Element::monomial(field, shape.clone(), bounds.clone(), x, field.one()).unwrap())
        .collect()
}

fn lead_exponent(e: &Element) -> Exponent {
    e.terms().next().map(|(x, _)| x.clone()).expect("basis monomial")
}

/// Checks that the socle pairing of the box bases is the permutation pairing
/// `X^u <-> X^-u`.
pub fn pairing_perfection_check(
    n: usize,
    i: usize,
    bound: u64,
    field: Field,
) -> Result<PairingReport, DualityError> {
    if i > n {
        return Err(DualityError::IndexOutOfRange { n, i });
    }
    let bounds = TruncationBox::uniform(n, bound);
    let primal_shape = ModuleShape::local_cohomology(n, i);
    let dual_shape = primal_shape.dual();
    let primal = box_basis(field, &primal_shape, &bounds);
    let dual = box_basis(field, &dual_shape, &bounds);
    let mut entries = Vec::with_capacity(primal.len() * dual.len());
    let mut permutation = vec![None; dual.len()];
    let mut passed = true;
    let mut hits_per_primal = vec![0usize; primal.len()];
    for (a, d) in dual.iter().enumerate() {
        let mut hits = 0;
        for (b, m) in primal.iter().enumerate() {
            let product = matlis_pair(d, m)?;
            let socle = product.coeff(&Exponent::zero(n));
            let (du, mv) = (lead_exponent(d), lead_exponent(m));
            let sums_to_zero = du.add(&mv).is_zero();
            if socle.is_one() {
                hits += 1;
                hits_per_primal[b] += 1;
                permutation[a] = Some(b);
            }
            passed &= if sums_to_zero { socle.is_one() } else { socle.is_zero() };
            entries.push(PairingEntry {
                dual: du,
                primal: mv,
                product: product.terms().next().map(|(x, _)| x.clone()),
            });
        }
        passed &= hits == 1;
    }
    passed &= hits_per_primal.iter().all(|&h| h == 1);
    Ok(PairingReport {
        n,
        i,
        bound,
        dual_basis: dual.iter().map(lead_exponent).collect(),
        primal_basis: primal.iter().map(lead_exponent).collect(),
        entries,
        permutation,
        passed,
    })
}

/// A decomposable preimage `m (x) d` of an `E`-monomial under the pairing:
/// `m` carries the exponents of `X1..Xi`, `d` those of `X_{i+1}..Xn`.
///
/// Returns `(m, d)` with `m` in the `H^i` shape and `d` in its dual.
pub fn tensor_surjectivity_witness(
    target: &Exponent,
    i: usize,
    bounds: &TruncationBox,
    field: Field,
) -> Result<(Element, Element), DualityError> {
    let n = target.arity();
    if i > n {
        return Err(DualityError::IndexOutOfRange { n, i });
    }
    if target.0.iter().any(|&x| x > 0) {
        return Err(DualityError::NotInjectiveHullMonomial(target.clone()));
    }
    let split = |keep_front: bool| {
        Exponent((0..n).map(|j| if (j < i) == keep_front { target[j] } else { 0 }).collect())
    };
    let shape = ModuleShape::local_cohomology(n, i);
    let m = Element::monomial(field, shape.clone(), bounds.clone(), split(true), field.one())?;
    let d = Element::monomial(field, shape.dual(), bounds.clone(), split(false), field.one())?;
    Ok((m, d))
}

/// Whether some power `X^v` (|v| = degree `<= vmax`) of the generators kills `e`:
/// every degree-`v` monomial in `gens` must annihilate `e` exactly.
pub fn is_torsion(e: &Element, gens: &[usize], vmax: u64) -> Result<bool, DualityError> {
    if e.is_zero() {
        return Ok(true);
    }
    let n = e.arity();
    if let Some(&j) = gens.iter().find(|&&j| j >= n) {
        return Err(AlgebraError::BadVariable { index: j, arity: n }.into());
    }
    let field = e.field();
    let probe_box = TruncationBox::uniform(n, vmax);
    for v in 0..=vmax {
        let mut all_kill = true;
        for exps in monomials_of_degree(gens, n, v) {
            let mono = Element::monomial(
                field,
                ModuleShape::ring(n),
                probe_box.clone(),
                exps,
                field.one(),
            )?;
            let acted = ring_act(&mono, e)?;
            if !(acted.is_zero() && acted.is_exact()) {
                all_kill = false;
                break;
            }
        }
        if all_kill {
            return Ok(true);
        }
    }
    Ok(false)
}

fn monomials_of_degree(gens: &[usize], n: usize, v: u64) -> Vec<Exponent> {
    let mut out = Vec::new();
    fn rec(gens: &[usize], left: u64, cur: &mut Vec<i64>, out: &mut Vec<Exponent>) {
        match gens.split_first() {
            None => {
                if left == 0 {
                    out.push(Exponent(cur.clone()));
                }
            }
            Some((&g, rest)) => {
                for k in 0..=left {
                    cur[g] += k as i64;
                    rec(rest, left - k, cur, out);
                    cur[g] -= k as i64;
                }
            }
        }
    }
    let mut gens = gens.to_vec();
    gens.sort_unstable();
    gens.dedup();
    rec(&gens, v, &mut vec![0; n], &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Torsion {
    Full,
    Zero,
}

/// `Γ_gens` of a shaped module: all of it when every generator acts on an
/// inverse direction, nothing otherwise.
pub fn gamma_of_shape(shape: &ModuleShape, gens: &[usize]) -> Torsion {
    if gens.iter().all(|&j| shape.role(j) == Role::Inverse) {
        Torsion::Full
    } else {
        Torsion::Zero
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityStep {
    /// 0-based index of `X_j` in the original variable list.
    pub variable: usize,
    pub sub_box_size: usize,
    pub kernel_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub n: usize,
    pub i: usize,
    pub bound: u64,
    pub steps: Vec<RegularityStep>,
    pub quotient_shape: ModuleShape,
    pub quotient_basis_size: usize,
    pub quotient_is_injective_hull: bool,
    pub quotient_nonzero: bool,
    pub passed: bool,
}

/// Checks that `X1, ..., Xi` is a regular sequence on `D(H^i_{(X1..Xi)}(R))`
/// within the box.
///
/// Step `j` verifies that multiplication by `X_j` on `D / (X1..X_{j-1}) D`
/// has zero kernel on the sub-box `e_j <= T - 1`, where no product leaves the
/// window. The final quotient is computed by iterating
/// [`quotient_by_series_var`] over the box basis.
pub fn regular_on_dual_check(
    n: usize,
    i: usize,
    bound: u64,
    field: Field,
) -> Result<RegularityReport, DualityError> {
    if i == 0 || i > n {
        return Err(DualityError::BadIndices { n, i });
    }
    let mut shape = ModuleShape::matlis_dual(n, i);
    let mut bounds = TruncationBox::uniform(n, bound);
    let mut steps = Vec::with_capacity(i);
    for j in 0..i {
        // After quotienting by X1..Xj the current variable sits at index 0.
        let arity = shape.arity();
        let xj = Element::monomial(
            field,
            ModuleShape::ring(arity),
            TruncationBox::uniform(arity, 1),
            Exponent::unit(arity, 0),
            field.one(),
        )?;
        let sub: Vec<Exponent> =
            bounds.monomials(&shape).into_iter().filter(|x| (x[0] as u64) < bound).collect();
        let images: Vec<BTreeMap<Exponent, Scalar>> = sub
            .iter()
            .map(|x| {
                let m = Element::monomial(field, shape.clone(), bounds.clone(), x.clone(), field.one())
                    .unwrap();
                let acted = ring_act(&xj, &m).unwrap();
                debug_assert!(acted.is_exact());
                acted.terms().map(|(k, c)| (k.clone(), c.clone())).collect()
            })
            .collect();
        let kernel_dim = sub.len() - sparse_rank(&images);
        steps.push(RegularityStep { variable: j, sub_box_size: sub.len(), kernel_dim });
        shape = shape.without(0);
        bounds = bounds.without(0);
    }

    let full_bounds = TruncationBox::uniform(n, bound);
    let full_shape = ModuleShape::matlis_dual(n, i);
    let mut images: Vec<Exponent> = Vec::new();
    for x in full_bounds.monomials(&full_shape) {
        let mut e = Element::monomial(field, full_shape.clone(), full_bounds.clone(), x, field.one())?;
        for _ in 0..i {
            e = quotient_by_series_var(0, &e)?;
        }
        images.extend(e.terms().map(|(k, _)| k.clone()));
    }
    images.sort();
    images.dedup();
    let expected_shape = ModuleShape::injective_hull(n - i);
    let expected = TruncationBox::uniform(n - i, bound).monomials(&expected_shape);
    let quotient_is_injective_hull = shape == expected_shape && images == expected;
    let quotient_nonzero = !images.is_empty();
    let passed = steps.iter().all(|s| s.kernel_dim == 0) && quotient_is_injective_hull && quotient_nonzero;
    Ok(RegularityReport {
        n,
        i,
        bound,
        steps,
        quotient_shape: shape,
        quotient_basis_size: images.len(),
        quotient_is_injective_hull,
        quotient_nonzero,
        passed,
    })
}
