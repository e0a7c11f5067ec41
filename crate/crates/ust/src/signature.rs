//! Exact signature computations: symmetric integer forms and the torus-knot
//! signature.
//!
//! The signature of `T(p,q)` is obtained by the classical lattice count:
//! each pair `(i, j)` with `1 <= i <= p-1`, `1 <= j <= q-1` contributes
//! `+1` when `s = i/p + j/q` lies in `(0, 1/2) U (3/2, 2)` and `-1` when it
//! lies in `(1/2, 3/2)`. The comparisons are done by cross-multiplication,
//! so no rounding can misclassify a pair, and `s` can never land on 1/2 or
//! 3/2 for coprime `(p, q)` (this is asserted at runtime).
//!
//! Because no single formula should be trusted on its own, the crate pins
//! this count against three independent routes: the Seifert-form oracle
//! [`sigma_two_strand`] on the two-strand family, the per-band-move parity
//! constraint in [`crate::batson`], and the identity
//! `upsilon - sigma/2 = b2^-` checked by [`crate::batson::verify_theorem`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::knot::TorusKnot;

/// Default cap on `p * q` for the signature scan.
pub const DEFAULT_SIGMA_CAP: i64 = 10_000_000;

/// Scans above this size are split across the rayon pool; the partial sums
/// combine associatively so the result does not depend on scheduling.
const PARALLEL_THRESHOLD: i64 = 1 << 20;

/// A symmetric matrix of 64-bit integers; symmetry is checked on
/// construction so the signature routine never has to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricIntMatrix {
    n: usize,
    rows: Vec<Vec<i64>>,
}

impl SymmetricIntMatrix {
    /// Builds a matrix from its rows, rejecting ragged or asymmetric input.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<SymmetricIntMatrix> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::RaggedMatrix {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric {
                        i,
                        j,
                        a: rows[i][j],
                        b: rows[j][i],
                    });
                }
            }
        }
        Ok(SymmetricIntMatrix { n, rows })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    /// Block-diagonal sum of `self` and `other`.
    pub fn direct_sum(&self, other: &SymmetricIntMatrix) -> SymmetricIntMatrix {
        let n = self.n + other.n;
        let mut rows = vec![vec![0i64; n]; n];
        for i in 0..self.n {
            rows[i][..self.n].copy_from_slice(&self.rows[i]);
        }
        for i in 0..other.n {
            rows[self.n + i][self.n..].copy_from_slice(&other.rows[i]);
        }
        SymmetricIntMatrix { n, rows }
    }

    /// Entrywise negation.
    pub fn negated(&self) -> SymmetricIntMatrix {
        SymmetricIntMatrix {
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|&x| -x).collect())
                .collect(),
        }
    }

    /// Simultaneous row/column permutation: entry `(i, j)` of the result is
    /// `self[perm[i]][perm[j]]`. `perm` must be a permutation of `0..order`.
    pub fn permuted(&self, perm: &[usize]) -> SymmetricIntMatrix {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation of 0..{}", self.n);
            seen[p] = true;
        }
        let rows = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.rows[perm[i]][perm[j]]).collect())
            .collect();
        SymmetricIntMatrix { n: self.n, rows }
    }

    /// Signature (number of positive minus number of negative eigenvalues),
    /// computed exactly over the rationals by congruence diagonalization.
    ///
    /// Pivot policy: the first nonzero diagonal entry of the remaining
    /// block; when the remaining block is nonzero but has an all-zero
    /// diagonal, the first nonzero off-diagonal entry is split off as a
    /// hyperbolic pair contributing one `+1` and one `-1`.
    pub fn signature(&self) -> i64 {
        let zero = BigRational::zero();
        let mut m: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| BigRational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect();
        let mut active: Vec<usize> = (0..self.n).collect();
        let mut positives = 0i64;
        let mut negatives = 0i64;

        while !active.is_empty() {
            if let Some(pos) = active.iter().position(|&i| m[i][i] != zero) {
                let i = active.remove(pos);
                let d = m[i][i].clone();
                if d > zero {
                    positives += 1;
                } else {
                    negatives += 1;
                }
                // Schur complement: C[k][l] = M[k][l] - M[k][i] M[i][l] / d.
                // Row and column i are no longer active, so they stay intact
                // while the block is updated.
                for ak in 0..active.len() {
                    let k = active[ak];
                    if m[k][i] == zero {
                        continue;
                    }
                    let f = &m[k][i] / &d;
                    for &l in &active {
                        let delta = &f * &m[i][l];
                        m[k][l] -= delta;
                    }
                }
                continue;
            }

            // Diagonal of the remaining block is zero; look for a
            // hyperbolic pair.
            let mut pair = None;
            'outer: for (ai, &i) in active.iter().enumerate() {
                for &j in &active[ai + 1..] {
                    if m[i][j] != zero {
                        pair = Some((i, j));
                        break 'outer;
                    }
                }
            }
            let Some((i, j)) = pair else {
                break; // remaining block is zero
            };
            positives += 1;
            negatives += 1;
            active.retain(|&k| k != i && k != j);
            // With M[i][i] = M[j][j] = 0 and a = M[i][j], the complement of
            // the pair is C[k][l] = M[k][l] - (M[k][i] M[l][j] + M[k][j] M[l][i]) / a.
            let a = m[i][j].clone();
            let coeffs: Vec<(usize, BigRational, BigRational)> = active
                .iter()
                .map(|&k| (k, m[k][i].clone(), m[k][j].clone()))
                .collect();
            for (k, ci_k, cj_k) in &coeffs {
                for (l, ci_l, cj_l) in &coeffs {
                    let delta = (ci_k * cj_l + cj_k * ci_l) / &a;
                    m[*k][*l] -= delta;
                }
            }
        }

        positives - negatives
    }
}

/// Signature of a symmetric integer matrix; see
/// [`SymmetricIntMatrix::signature`].
pub fn matrix_signature(m: &SymmetricIntMatrix) -> i64 {
    m.signature()
}

/// Signature of `T(p,q)` by the exact lattice count described in the
/// module docs. Errors when `p * q` exceeds `cap`.
///
/// Panics if some pair lands exactly on 1/2 or 3/2, which cannot happen
/// for coprime parameters; hitting it means the inputs broke an invariant.
pub fn sigma_count_with_cap(k: TorusKnot, cap: i64) -> Result<i64> {
    let (p, q) = (k.p(), k.q());
    if p * q > cap {
        return Err(Error::CapExceeded {
            what: "signature scan p*q",
            size: p * q,
            cap,
        });
    }
    if k.is_unknot() {
        return Ok(0);
    }
    let total = if p * q > PARALLEL_THRESHOLD {
        (1..p)
            .into_par_iter()
            .map(|i| sigma_row(p, q, i))
            .sum::<i64>()
    } else {
        (1..p).map(|i| sigma_row(p, q, i)).sum::<i64>()
    };
    Ok(total)
}

/// [`sigma_count_with_cap`] at the default cap.
pub fn sigma_count(k: TorusKnot) -> Result<i64> {
    sigma_count_with_cap(k, DEFAULT_SIGMA_CAP)
}

fn sigma_row(p: i64, q: i64, i: i64) -> i64 {
    let (half, three_halves) = (p * q, 3 * p * q);
    let mut acc = 0;
    for j in 1..q {
        // s = i/p + j/q compared against 1/2 and 3/2 via 2(qi + pj) vs pq, 3pq
        let v = 2 * (q * i + p * j);
        assert!(
            v != half && v != three_halves,
            "sigma count hit a boundary value at (i,j)=({i},{j}) for (p,q)=({p},{q}); \
             this cannot happen for coprime parameters"
        );
        acc += if v < half || v > three_halves { 1 } else { -1 };
    }
    acc
}

/// Independent oracle for the two-strand family: the symmetrized Seifert
/// form of the standard genus-((q-1)/2) surface of `T(q,2)` is the
/// `(q-1) x (q-1)` tridiagonal matrix with -2 on the diagonal and +1 off
/// it; its signature is `1 - q`.
pub fn sigma_two_strand(q: i64) -> Result<i64> {
    if q < 1 || q % 2 == 0 {
        return Err(Error::ParameterNotOdd { got: q, min: 1 });
    }
    let n = (q - 1) as usize;
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        rows[i][i] = -2;
        if i + 1 < n {
            rows[i][i + 1] = 1;
            rows[i + 1][i] = 1;
        }
    }
    let m = SymmetricIntMatrix::from_rows(rows).expect("tridiagonal form is symmetric");
    Ok(m.signature())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: Vec<Vec<i64>>) -> SymmetricIntMatrix {
        SymmetricIntMatrix::from_rows(rows).unwrap()
    }

    fn knot(p: i64, q: i64) -> TorusKnot {
        TorusKnot::new(p, q).unwrap()
    }

    #[test]
    fn signature_pinned_values() {
        assert_eq!(mat(vec![vec![1, 0], vec![0, 1]]).signature(), 2);
        // eigenvalues -1 and -3
        assert_eq!(mat(vec![vec![-2, 1], vec![1, -2]]).signature(), -2);
        // hyperbolic pair
        assert_eq!(mat(vec![vec![0, 1], vec![1, 0]]).signature(), 0);
        // empty form
        assert_eq!(mat(vec![]).signature(), 0);
    }

    #[test]
    fn signature_needs_hyperbolic_split_with_tail() {
        // all-zero diagonal forces the hyperbolic branch; det = 12 > 0 and
        // trace = 0, so the spectrum is one positive, two negative
        let m = mat(vec![
            vec![0, 2, 1],
            vec![2, 0, 3],
            vec![1, 3, 0],
        ]);
        assert_eq!(m.signature(), -1);
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(matches!(
            SymmetricIntMatrix::from_rows(vec![vec![0, 1], vec![2, 0]]),
            Err(Error::NotSymmetric { .. })
        ));
        assert!(matches!(
            SymmetricIntMatrix::from_rows(vec![vec![0, 1]]),
            Err(Error::RaggedMatrix { .. })
        ));
    }

    #[test]
    fn sigma_count_pinned_values() {
        assert_eq!(sigma_count(knot(3, 2)).unwrap(), -2);
        assert_eq!(sigma_count(knot(4, 3)).unwrap(), -6);
        assert_eq!(sigma_count(knot(7, 4)).unwrap(), -14);
        assert_eq!(sigma_count(TorusKnot::UNKNOT).unwrap(), 0);
    }

    #[test]
    fn sigma_count_respects_cap() {
        assert!(matches!(
            sigma_count_with_cap(knot(101, 100), 1000),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn two_strand_pinned_values() {
        assert_eq!(sigma_two_strand(3).unwrap(), -2);
        assert_eq!(sigma_two_strand(5).unwrap(), -4);
        assert_eq!(sigma_two_strand(1).unwrap(), 0);
        assert!(matches!(
            sigma_two_strand(4),
            Err(Error::ParameterNotOdd { .. })
        ));
    }

    #[test]
    fn two_strand_matches_count_small() {
        for q in (3..40).step_by(2) {
            assert_eq!(sigma_count(knot(q, 2)).unwrap(), 1 - q);
            assert_eq!(sigma_two_strand(q).unwrap(), 1 - q);
        }
    }

    prop_compose! {
        fn small_symmetric(max_n: usize)
            (n in 0..=max_n)
            (entries in prop::collection::vec(-6i64..=6, n * n), n in Just(n))
            -> SymmetricIntMatrix
        {
            let mut rows = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in i..n {
                    let v = entries[i * n + j];
                    rows[i][j] = v;
                    rows[j][i] = v;
                }
            }
            SymmetricIntMatrix::from_rows(rows).unwrap()
        }
    }

    proptest! {
        #[test]
        fn negation_flips_signature(m in small_symmetric(7)) {
            prop_assert_eq!(m.negated().signature(), -m.signature());
        }

        #[test]
        fn direct_sum_adds_signatures(a in small_symmetric(5), b in small_symmetric(5)) {
            prop_assert_eq!(a.direct_sum(&b).signature(), a.signature() + b.signature());
        }

        #[test]
        fn permutation_preserves_signature(m in small_symmetric(7), seed in any::<u64>()) {
            let n = m.order();
            let mut perm: Vec<usize> = (0..n).collect();
            // cheap deterministic shuffle
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (s >> 33) as usize % (i + 1);
                perm.swap(i, j);
            }
            prop_assert_eq!(m.permuted(&perm).signature(), m.signature());
        }
    }
}
