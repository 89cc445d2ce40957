//! Seeded random elements for property checks and trials.

use rand::Rng;

use crate::element::{Element, Exponent, ModuleShape, Role, TruncationBox};
use crate::scalar::{Field, Scalar};

/// A coefficient drawn from `{-range..=range} \ {0}`, occasionally a fraction
/// over the rationals.
pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R, field: Field, range: i64) -> Scalar {
    let mut v = 0;
    while v == 0 {
        v = rng.random_range(-range..=range);
    }
    let c = field.from_i64(v);
    if field == Field::Rational && rng.random_ratio(1, 4) {
        let den = field.from_i64(rng.random_range(2..=5));
        &c * &den.inverse().expect("nonzero")
    } else {
        c
    }
}

/// An exponent admissible for `shape` with `|e_j| <= limit_j`.
pub fn random_exponent<R: Rng + ?Sized>(rng: &mut R, shape: &ModuleShape, limit: &[u64]) -> Exponent {
    Exponent(
        limit
            .iter()
            .enumerate()
            .map(|(j, &t)| {
                let v = rng.random_range(0..=t as i64);
                match shape.role(j) {
                    Role::Series => v,
                    Role::Inverse => -v,
                }
            })
            .collect(),
    )
}

/// An element with up to `max_terms` terms anywhere in the box.
pub fn random_element<R: Rng + ?Sized>(
    rng: &mut R,
    field: Field,
    shape: &ModuleShape,
    bounds: &TruncationBox,
    max_terms: usize,
) -> Element {
    random_element_within(rng, field, shape, bounds, &bounds.0, max_terms)
}

/// An element of the box whose exponents satisfy `|e_j| <= limit_j`.
pub fn random_element_within<R: Rng + ?Sized>(
    rng: &mut R,
    field: Field,
    shape: &ModuleShape,
    bounds: &TruncationBox,
    limit: &[u64],
    max_terms: usize,
) -> Element {
    let mut e = Element::zero(field, shape.clone(), bounds.clone());
    let count = rng.random_range(0..=max_terms);
    for _ in 0..count {
        let x = random_exponent(rng, shape, limit);
        let c = random_scalar(rng, field, 3);
        e.add_term(x, c).expect("sampled inside the box");
    }
    e
}

/// A ring element of total degree at most `max_degree` with every monomial
/// present independently with probability `density`, integer coefficients in
/// `[-range, range]`.
pub fn random_polynomial<R: Rng + ?Sized>(
    rng: &mut R,
    field: Field,
    n: usize,
    max_degree: u64,
    range: i64,
    density: f64,
) -> Element {
    let bounds = TruncationBox::uniform(n, max_degree);
    let shape = ModuleShape::ring(n);
    let mut e = Element::zero(field, shape.clone(), bounds.clone());
    for x in bounds.monomials(&shape) {
        if x.total_degree() as u64 <= max_degree && rng.random_bool(density) {
            let v = rng.random_range(-range..=range);
            e.add_term(x, field.from_i64(v)).expect("inside the box");
        }
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_respect_roles_and_seed() {
        let shape = ModuleShape::matlis_dual(3, 2);
        let b = TruncationBox::uniform(3, 4);
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_element(&mut rng, Field::Rational, &shape, &b, 8)
        };
        assert_eq!(draw(9), draw(9));
        for seed in 0..50 {
            for (x, _) in draw(seed).terms() {
                assert!(x[0] >= 0 && x[1] >= 0 && x[2] <= 0);
            }
        }
    }

    #[test]
    fn polynomials_bounded_by_total_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let p = random_polynomial(&mut rng, Field::Rational, 2, 3, 2, 0.5);
            assert!(p.terms().all(|(x, _)| x.total_degree() <= 3));
        }
    }
}
