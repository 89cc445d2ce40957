//! Multigraded Čech cohomology of `R = k[[X1..Xn]]` with respect to `X1..Xi`.
//!
//! The Čech complex `0 -> R -> ⊕ R_{X_j} -> ... -> R_{X1...Xi} -> 0` is
//! `Z^n`-graded, and in each multidegree `a` every localization contributes
//! at most one dimension: `R_{X_S}` has a monomial of degree `a` iff
//! `a_j >= 0` for every `j` outside `S`. Each slice is therefore a finite
//! complex of small vector spaces with `0, ±1` boundary matrices, and its
//! cohomology is computed by exact rank.
//!
//! A nonzero class in degree `a` (all `a_j <= -1` for `j < i`) is labelled
//! by the module element `X^nu` with `nu_j = a_j + 1` for `j < i`: the
//! inverse-monomial labels start at `nu = 0`, one above the Čech degrees.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::element::{ring_act, Element, Exponent, ModuleShape, TruncationBox};
use crate::linalg::integer_rank;
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CechError {
    #[error("need 1 <= i <= n, got n = {n}, i = {i}")]
    BadIndices { n: usize, i: usize },
    #[error("degree {0} has vanishing top cohomology")]
    NoClass(Exponent),
    #[error("degree has {got} coordinates, expected {expected}")]
    Arity { got: usize, expected: usize },
    #[error(transparent)]
    Algebra(#[from] crate::element::AlgebraError),
}

fn check_indices(n: usize, i: usize) -> Result<(), CechError> {
    if i == 0 || i > n || n > 31 {
        return Err(CechError::BadIndices { n, i });
    }
    Ok(())
}

/// The degree-`a` slice of the Čech complex.
#[derive(Debug, Clone)]
pub struct CechDegreePiece {
    pub degree: Exponent,
    /// Basis of position `l`: subsets `S` (bitmasks over `0..i`) with `|S| = l`,
    /// in lexicographic order of their sorted elements.
    pub bases: Vec<Vec<u32>>,
    /// `boundaries[l]` maps position `l` to `l + 1`; rows index the target basis.
    pub boundaries: Vec<Vec<Vec<i64>>>,
}

fn subsets_of_size(i: usize, l: usize) -> Vec<u32> {
    let mut out: Vec<u32> = (0u32..1 << i).filter(|s| s.count_ones() as usize == l).collect();
    out.sort_by_key(|&s| (0..i).filter(|&k| s & (1 << k) != 0).collect::<Vec<_>>());
    out
}

impl CechDegreePiece {
    pub fn build(n: usize, i: usize, degree: &Exponent) -> Result<Self, CechError> {
        check_indices(n, i)?;
        if degree.arity() != n {
            return Err(CechError::Arity { got: degree.arity(), expected: n });
        }
        let outside_ok = (i..n).all(|j| degree[j] >= 0);
        let bases: Vec<Vec<u32>> = (0..=i)
            .map(|l| {
                if !outside_ok {
                    return Vec::new();
                }
                subsets_of_size(i, l)
                    .into_iter()
                    .filter(|&s| (0..i).all(|j| s & (1 << j) != 0 || degree[j] >= 0))
                    .collect()
            })
            .collect();
        let boundaries = (0..i)
            .map(|l| {
                let (src, dst) = (&bases[l], &bases[l + 1]);
                dst.iter()
                    .map(|&t| {
                        src.iter()
                            .map(|&s| {
                                if s & t != s || (t & !s).count_ones() != 1 {
                                    return 0;
                                }
                                let k = (t & !s).trailing_zeros();
                                let before = (s & ((1u32 << k) - 1)).count_ones();
                                if before.is_multiple_of(2) {
                                    1
                                } else {
                                    -1
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(CechDegreePiece { degree: degree.clone(), bases, boundaries })
    }

    pub fn top(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    fn boundary_rank(&self, l: usize) -> usize {
        self.boundaries.get(l).map_or(0, |m| integer_rank(m))
    }

    /// `dim H^l` for `l = 0..=i`.
    pub fn cohomology_dims(&self) -> Vec<usize> {
        (0..=self.top())
            .map(|l| {
                let incoming = if l == 0 { 0 } else { self.boundary_rank(l - 1) };
                self.bases[l].len() - self.boundary_rank(l) - incoming
            })
            .collect()
    }

    /// `true` when every composite `d_{l+1} d_l` vanishes.
    pub fn is_complex(&self) -> bool {
        self.boundaries.windows(2).all(|w| {
            let (first, second) = (&w[0], &w[1]);
            second.iter().all(|row| {
                (0..first.first().map_or(0, Vec::len))
                    .all(|c| row.iter().zip(first).map(|(a, r)| a * r[c]).sum::<i64>() == 0)
            })
        })
    }

    /// Whether `vector` (coordinates in the position-`l` basis) is a coboundary.
    pub fn is_coboundary(&self, l: usize, vector: &[i64]) -> bool {
        if l == 0 {
            return vector.iter().all(|&v| v == 0);
        }
        let d = &self.boundaries[l - 1];
        let cols = d.first().map_or(0, Vec::len);
        let mut images: Vec<Vec<i64>> = (0..cols).map(|c| d.iter().map(|r| r[c]).collect()).collect();
        let before = integer_rank(&images);
        images.push(vector.to_vec());
        integer_rank(&images) == before
    }
}

/// `dim H^l` of the degree-`a` slice, `l = 0..=i`.
pub fn cech_dims_at_degree(n: usize, i: usize, a: &Exponent) -> Result<Vec<usize>, CechError> {
    Ok(CechDegreePiece::build(n, i, a)?.cohomology_dims())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyEntry {
    pub degree: Exponent,
    pub dims: Vec<usize>,
}

/// Cohomology dimensions over a window of multidegrees, plus the verdict of
/// comparing them with the shaped realization of `H^i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTable {
    pub n: usize,
    pub i: usize,
    pub window: u64,
    pub entries: Vec<CohomologyEntry>,
    pub passed: bool,
    pub mismatches: Vec<Exponent>,
}

impl CohomologyTable {
    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| e.dims.iter().any(|&d| d > 0)).count()
    }
}

/// All multidegrees with `|a_j| <= window`, lexicographically.
pub fn window_degrees(n: usize, window: u64) -> Vec<Exponent> {
    let w = window as i64;
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (-w..=w).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(Exponent).collect()
}

/// Whether degree `a` carries the realization's basis monomial.
pub fn expected_top_class(i: usize, a: &Exponent) -> bool {
    (0..a.arity()).all(|j| if j < i { a[j] <= -1 } else { a[j] >= 0 })
}

/// Sweeps the window and checks `H^l = 0` for `l != i` and
/// `dim H^i = 1` exactly on `{a_j <= -1 (j < i), a_j >= 0 (j >= i)}`.
pub fn verify_realization(n: usize, i: usize, window: u64) -> Result<CohomologyTable, CechError> {
    check_indices(n, i)?;
    let degrees = window_degrees(n, window);
    let entries: Vec<CohomologyEntry> = degrees
        .par_iter()
        .map(|a| CohomologyEntry { degree: a.clone(), dims: cech_dims_at_degree(n, i, a).unwrap() })
        .collect();
    let mismatches: Vec<Exponent> = entries
        .iter()
        .filter(|e| {
            let want_top = usize::from(expected_top_class(i, &e.degree));
            e.dims[..i].iter().any(|&d| d != 0) || e.dims[i] != want_top
        })
        .map(|e| e.degree.clone())
        .collect();
    Ok(CohomologyTable { n, i, window, passed: mismatches.is_empty(), mismatches, entries })
}

/// The realization label `nu` of a Čech degree: `nu_j = a_j + 1` for `j < i`.
pub fn realization_label(i: usize, a: &Exponent) -> Exponent {
    Exponent(a.0.iter().enumerate().map(|(j, &v)| if j < i { v + 1 } else { v }).collect())
}

/// The basis monomial of `H^i_{(X1..Xi)}(R)` corresponding to the Čech class in degree `a`.
pub fn identify_basis(
    n: usize,
    i: usize,
    a: &Exponent,
    bounds: TruncationBox,
) -> Result<Element, CechError> {
    let dims = cech_dims_at_degree(n, i, a)?;
    if dims[i] != 1 {
        return Err(CechError::NoClass(a.clone()));
    }
    let field = Field::Rational;
    Ok(Element::monomial(
        field,
        ModuleShape::local_cohomology(n, i),
        bounds,
        realization_label(i, a),
        field.one(),
    )?)
}

/// Whether multiplication by `X_j` sends the top class of degree `a` to zero,
/// computed on the Čech side.
pub fn multiplication_kills_class(
    n: usize,
    i: usize,
    a: &Exponent,
    j: usize,
) -> Result<bool, CechError> {
    let target = a.add(&Exponent::unit(n, j));
    let piece = CechDegreePiece::build(n, i, &target)?;
    let top = &piece.bases[i];
    // Multiplication by X_j is the identity on localization generators.
    let full = (1u32 << i) - 1;
    let vector: Vec<i64> = top.iter().map(|&s| i64::from(s == full)).collect();
    if vector.iter().all(|&v| v == 0) {
        return Ok(true);
    }
    Ok(piece.is_coboundary(i, &vector))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivarianceReport {
    pub n: usize,
    pub i: usize,
    pub window: u64,
    pub checked: usize,
    pub mismatches: Vec<(Exponent, usize)>,
}

impl EquivarianceReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks that [`identify_basis`] intertwines the Čech multiplication by each
/// `X_j` with [`ring_act`] (kill rule included) over the window.
pub fn equivariance_check(n: usize, i: usize, window: u64) -> Result<EquivarianceReport, CechError> {
    check_indices(n, i)?;
    let bounds = TruncationBox::uniform(n, window + 2);
    let field = Field::Rational;
    let ring = ModuleShape::ring(n);
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for a in window_degrees(n, window) {
        if cech_dims_at_degree(n, i, &a)?[i] != 1 {
            continue;
        }
        let m = identify_basis(n, i, &a, bounds.clone())?;
        for j in 0..n {
            let xj = Element::monomial(
                field,
                ring.clone(),
                TruncationBox::uniform(n, 1),
                Exponent::unit(n, j),
                field.one(),
            )?;
            let acted = ring_act(&xj, &m)?;
            let target = a.add(&Exponent::unit(n, j));
            let ok = if multiplication_kills_class(n, i, &a, j)? {
                acted.is_zero() && acted.is_exact()
            } else {
                acted == identify_basis(n, i, &target, bounds.clone())?
            };
            checked += 1;
            if !ok {
                mismatches.push((a.clone(), j));
            }
        }
    }
    Ok(EquivarianceReport { n, i, window, checked, mismatches })
}
