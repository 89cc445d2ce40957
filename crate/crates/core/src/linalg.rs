//! Exact rank computations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::scalar::Scalar;

/// Rank of an integer matrix over `Q` by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so no rationals appear.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank of a family of sparse vectors over a field.
///
/// Vectors are keyed by an ordered index; elimination pivots on the
/// smallest key of each reduced vector.
pub fn sparse_rank<K: Ord + Clone>(vectors: &[BTreeMap<K, Scalar>]) -> usize {
    let mut pivots: BTreeMap<K, BTreeMap<K, Scalar>> = BTreeMap::new();
    for v in vectors {
        let mut v: BTreeMap<K, Scalar> =
            v.iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k.clone(), c.clone())).collect();
        while let Some((lead, c)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
            match pivots.get(&lead) {
                Some(p) => {
                    // p is normalised to leading coefficient 1.
                    for (k, pc) in p {
                        let current = v.get(k).cloned().unwrap_or_else(|| c.field().zero());
                        let updated = &current - &(&c * pc);
                        if updated.is_zero() {
                            v.remove(k);
                        } else {
                            v.insert(k.clone(), updated);
                        }
                    }
                }
                None => {
                    let inv = c.inverse().expect("nonzero pivot");
                    let normed = v.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
                    pivots.insert(lead, normed);
                    break;
                }
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;
    use num_rational::BigRational;
    use proptest::prelude::*;

    // Independent oracle: plain Gaussian elimination over Q.
    fn rational_rank(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect();
        let ncols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..ncols {
            let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
            m.swap(rank, p);
            for r in 0..m.len() {
                if r != rank && !m[r][col].is_zero() {
                    let f = &m[r][col] / &m[rank][col];
                    for c in 0..ncols {
                        let d = &f * &m[rank][c];
                        m[r][c] -= d;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_ranks() {
        assert_eq!(integer_rank(&[vec![1]]), 1);
        assert_eq!(integer_rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(integer_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(integer_rank(&[]), 0);
        assert_eq!(integer_rank(&[vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]]), 2);
    }

    #[test]
    fn sparse_rank_dependent_family() {
        let f = Field::Rational;
        let v = |pairs: &[(u32, i64)]| -> BTreeMap<u32, Scalar> {
            pairs.iter().map(|&(k, c)| (k, f.from_i64(c))).collect()
        };
        let fam = [v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)]), v(&[(0, 1), (2, -1)])];
        assert_eq!(sparse_rank(&fam), 2);
        let gf2 = Field::prime(2).unwrap();
        let w = |pairs: &[(u32, i64)]| -> BTreeMap<u32, Scalar> {
            pairs.iter().map(|&(k, c)| (k, gf2.from_i64(c))).collect()
        };
        // Over F_2 the third vector equals the sum of the first two.
        let fam2 = [w(&[(0, 1), (1, 1)]), w(&[(1, 1), (2, 1)]), w(&[(0, 1), (2, 1)])];
        assert_eq!(sparse_rank(&fam2), 2);
    }

    proptest! {
        #[test]
        fn bareiss_matches_rational_elimination(
            rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 0..5)
        ) {
            prop_assert_eq!(integer_rank(&rows), rational_rank(&rows));
            let f = Field::Rational;
            let sparse: Vec<BTreeMap<usize, Scalar>> = rows
                .iter()
                .map(|r| r.iter().enumerate().map(|(k, &c)| (k, f.from_i64(c))).collect())
                .collect();
            prop_assert_eq!(sparse_rank(&sparse), rational_rank(&rows));
        }
    }
}
