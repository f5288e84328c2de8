//! Lower Hessenberg matrices with constant superdiagonal, their exact
//! determinants, and the determinant-based sequence inversion.
//!
//! A specification `(a0; a1..an)` describes the n x n matrix whose
//! superdiagonal is `a0` and whose entry in row i, column j (0-based,
//! j <= i) is `a_{i-j+1}`. Everything above the superdiagonal is zero.
//! Two independent determinant algorithms are provided on purpose: the
//! expansion recurrence that is special to this shape, and fraction-free
//! Gaussian elimination on the dense matrix, which knows nothing about the
//! shape at all.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::Integer;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HTSpec {
    a0: Integer,
    entries: Vec<Integer>,
}

impl HTSpec {
    pub fn new(a0: Integer, entries: Vec<Integer>) -> Result<HTSpec> {
        if a0.is_zero() {
            return Err(Error::Domain("superdiagonal entry must be nonzero".into()));
        }
        Ok(HTSpec { a0, entries })
    }

    pub fn from_i64(a0: i64, entries: &[i64]) -> Result<HTSpec> {
        HTSpec::new(
            Integer::from(a0),
            entries.iter().map(|&e| Integer::from(e)).collect(),
        )
    }

    pub fn a0(&self) -> &Integer {
        &self.a0
    }

    pub fn entries(&self) -> &[Integer] {
        &self.entries
    }

    /// Order of the matrix the spec describes.
    pub fn order(&self) -> usize {
        self.entries.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    n: usize,
    rows: Vec<Vec<Integer>>,
}

impl DenseMatrix {
    pub fn from_rows(rows: Vec<Vec<Integer>>) -> Result<DenseMatrix> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Domain("matrix must be square".into()));
        }
        Ok(DenseMatrix { n, rows })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &Integer {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.rows
    }
}

/// Materializes the full matrix of a specification.
pub fn build_matrix(spec: &HTSpec) -> DenseMatrix {
    let n = spec.order();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j == i + 1 {
                        spec.a0.clone()
                    } else if j <= i {
                        spec.entries[i - j].clone()
                    } else {
                        Integer::zero()
                    }
                })
                .collect()
        })
        .collect();
    DenseMatrix { n, rows }
}

/// All leading determinants `D_0 .. D_n` of a specification, from
/// `D_m = sum_{k=1}^{m} (-a0)^(k-1) a_k D_{m-k}` with `D_0 = 1`.
pub fn det_prefix(spec: &HTSpec) -> Vec<Integer> {
    let n = spec.order();
    let neg_a0 = -spec.a0.clone();
    let mut d = Vec::with_capacity(n + 1);
    d.push(Integer::one());
    for m in 1..=n {
        let mut acc = Integer::zero();
        let mut pow = Integer::one(); // (-a0)^(k-1)
        for k in 1..=m {
            acc += &pow * &spec.entries[k - 1] * &d[m - k];
            pow *= &neg_a0;
        }
        d.push(acc);
    }
    d
}

/// Determinant of the full matrix via the expansion recurrence; O(n^2)
/// big-integer operations.
pub fn det_recurrence(spec: &HTSpec) -> Integer {
    det_prefix(spec).pop().unwrap()
}

/// Bareiss fraction-free elimination. Works on any integer matrix, so it
/// shares no code or assumptions with the recurrence above. Row swaps flip
/// the sign; a zero column means a zero determinant. The 0 x 0 determinant
/// is 1.
pub fn det_fraction_free(m: &DenseMatrix) -> Integer {
    let n = m.n;
    if n == 0 {
        return Integer::one();
    }
    let mut a = m.rows.clone();
    let mut sign = 1i32;
    let mut prev = Integer::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Integer::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                debug_assert!((&num % &prev).is_zero(), "fraction-free step divides exactly");
                a[i][j] = num / &prev;
            }
            a[i][k] = Integer::zero();
        }
        prev = a[k][k].clone();
    }
    let det = std::mem::take(&mut a[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Determinant with the superdiagonal forced to +1.
pub fn d_plus(entries: &[Integer]) -> Integer {
    let spec = HTSpec::new(Integer::one(), entries.to_vec()).unwrap();
    det_recurrence(&spec)
}

/// Determinant with the superdiagonal forced to -1.
pub fn d_minus(entries: &[Integer]) -> Integer {
    let spec = HTSpec::new(-Integer::one(), entries.to_vec()).unwrap();
    det_recurrence(&spec)
}

/// Maps `b = (1, b_1, b_2, ...)` to `a` with `a_n` the order-n determinant
/// of `(1; b_1..b_n)`. Applying the map twice returns the input, which is
/// what the round-trip tests pin down.
pub fn invert_sequence(b: &[Integer]) -> Result<Vec<Integer>> {
    if b.first().is_none_or(|b0| !b0.is_one()) {
        return Err(Error::Domain(
            "inversion requires a sequence starting with 1".into(),
        ));
    }
    let spec = HTSpec::new(Integer::one(), b[1..].to_vec()).unwrap();
    Ok(det_prefix(&spec))
}

/// Determinant of the n x n matrix with entry `values[i + j + offset]`,
/// computed fraction-free since these matrices are not Hessenberg.
pub fn hankel_det(values: &[Integer], offset: usize, n: usize) -> Result<Integer> {
    if n == 0 {
        return Ok(Integer::one());
    }
    let needed = 2 * (n - 1) + offset + 1;
    if values.len() < needed {
        return Err(Error::Domain(format!(
            "need {needed} sequence values for an order-{n} matrix at offset {offset}, got {}",
            values.len()
        )));
    }
    let rows = (0..n)
        .map(|i| (0..n).map(|j| values[i + j + offset].clone()).collect())
        .collect();
    Ok(det_fraction_free(&DenseMatrix { n, rows }))
}

/// `(-1)^(n-1)` times the determinant of `(1; C_0..C_{n-1})`, whose value
/// is the n-th Fine number. Defined for n >= 1.
pub fn deutsch_fine(n: usize) -> Result<Integer> {
    if n == 0 {
        return Err(Error::Domain(
            "the Catalan-entry determinant needs order >= 1".into(),
        ));
    }
    let entries: Vec<Integer> = (0..n).map(crate::sequences::catalan).collect();
    let d = d_plus(&entries);
    Ok(if n % 2 == 1 { d } else { -d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences;
    use crate::trudi;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn matrix_layout() {
        let spec = HTSpec::from_i64(7, &[1, 2, 3]).unwrap();
        let m = build_matrix(&spec);
        assert_eq!(m.rows(), &[ints(&[1, 7, 0]), ints(&[2, 1, 7]), ints(&[3, 2, 1])]);
        assert!(HTSpec::from_i64(0, &[1]).is_err());
    }

    #[test]
    fn recurrence_hand_values() {
        assert_eq!(
            det_recurrence(&HTSpec::from_i64(1, &[2, 6]).unwrap()),
            Integer::from(-2)
        );
        assert_eq!(
            det_recurrence(&HTSpec::from_i64(1, &[2, 6, 22]).unwrap()),
            Integer::from(6)
        );
        assert_eq!(
            det_recurrence(&HTSpec::from_i64(-1, &[2, 6, 22]).unwrap()),
            Integer::from(54)
        );
        assert_eq!(d_plus(&ints(&[1, 0, 1])), Integer::from(2));
        assert_eq!(d_plus(&ints(&[3, 11])), Integer::from(-2));
        assert_eq!(
            det_prefix(&HTSpec::from_i64(1, &[2, 6, 22]).unwrap()),
            ints(&[1, 2, -2, 6])
        );
    }

    #[test]
    fn fraction_free_hand_values() {
        let m = DenseMatrix::from_rows(vec![ints(&[0, 1]), ints(&[1, 2])]).unwrap();
        assert_eq!(det_fraction_free(&m), Integer::from(-1));
        let m = DenseMatrix::from_rows(vec![ints(&[1, 2]), ints(&[2, 4])]).unwrap();
        assert_eq!(det_fraction_free(&m), Integer::from(0));
        let m = DenseMatrix::from_rows(vec![]).unwrap();
        assert_eq!(det_fraction_free(&m), Integer::from(1));
        let m = DenseMatrix::from_rows(vec![ints(&[-5])]).unwrap();
        assert_eq!(det_fraction_free(&m), Integer::from(-5));
        assert!(DenseMatrix::from_rows(vec![ints(&[1, 2])]).is_err());
    }

    #[test]
    fn two_determinant_routes_agree() {
        // deterministic spread of awkward cases: zeros, repeats, sign flips
        let cases: Vec<(i64, Vec<i64>)> = vec![
            (1, vec![]),
            (1, vec![0, 0, 0, 1]),
            (-1, vec![1, -1, 1, -1, 1]),
            (2, vec![3, -1, 4, 1, -5, 9, 2, -6]),
            (-3, vec![0, 2, 0, -7, 0, 1]),
            (5, vec![-9, 8, -7, 6, -5, 4, -3, 2, -1]),
        ];
        for (a0, entries) in cases {
            let spec = HTSpec::from_i64(a0, &entries).unwrap();
            assert_eq!(
                det_recurrence(&spec),
                det_fraction_free(&build_matrix(&spec)),
                "a0={a0}, entries={entries:?}"
            );
        }
    }

    #[test]
    fn recurrence_matches_composition_expansion() {
        // third route: the expansion over compositions, truncated small
        let entries = ints(&[2, -3, 5, 7, -1, 4]);
        for a0 in [1i64, -1, 2] {
            for n in 0..=6 {
                let spec = HTSpec::new(Integer::from(a0), entries[..n].to_vec()).unwrap();
                assert_eq!(
                    det_recurrence(&spec),
                    trudi::trudi_composition_sum(spec.a0(), spec.entries()).unwrap(),
                    "a0={a0}, n={n}"
                );
            }
        }
    }

    #[test]
    fn inversion_round_trip() {
        let b = ints(&[1, 1, 0, 0, 0, 0]);
        let a = invert_sequence(&b).unwrap();
        assert_eq!(a, ints(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(invert_sequence(&a).unwrap(), b);

        let c = ints(&[1, 2, 6, 22, 90, 394]);
        let back = invert_sequence(&invert_sequence(&c).unwrap()).unwrap();
        assert_eq!(back, c);

        assert!(invert_sequence(&ints(&[2, 1])).is_err());
        assert!(invert_sequence(&[]).is_err());
    }

    #[test]
    fn hankel_hand_value() {
        let s: Vec<Integer> = (0..7).map(sequences::large_schroeder).collect();
        assert_eq!(hankel_det(&s, 0, 3).unwrap(), Integer::from(8));
        assert_eq!(hankel_det(&s, 0, 0).unwrap(), Integer::from(1));
        assert!(hankel_det(&s, 0, 5).is_err());
    }

    #[test]
    fn catalan_entry_determinant_gives_fine() {
        assert!(deutsch_fine(0).is_err());
        for n in 1..=10 {
            assert_eq!(deutsch_fine(n).unwrap(), sequences::fine(n), "n={n}");
        }
    }
}
