//! Smith normal form over the integers.
//!
//! Pivoting is deterministic: the nonzero entry of smallest absolute value in
//! the remaining submatrix, ties broken by lowest row, then lowest column.
//! Row operations are reported through [`RowLog`] so that callers needing
//! only `U * rhs` never materialize `U`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Receiver of the row operations applied to the input matrix.
pub(crate) trait RowLog {
    fn swap(&mut self, i: usize, j: usize);
    /// `row[dst] += k * row[src]`
    fn add_multiple(&mut self, src: usize, dst: usize, k: &BigInt);
    fn negate(&mut self, i: usize);
}

impl RowLog for IntMatrix {
    fn swap(&mut self, i: usize, j: usize) {
        self.swap_rows(i, j);
    }

    fn add_multiple(&mut self, src: usize, dst: usize, k: &BigInt) {
        self.add_row_multiple(src, dst, k);
    }

    fn negate(&mut self, i: usize) {
        self.negate_row(i);
    }
}

impl RowLog for Vec<BigInt> {
    fn swap(&mut self, i: usize, j: usize) {
        self.as_mut_slice().swap(i, j);
    }

    fn add_multiple(&mut self, src: usize, dst: usize, k: &BigInt) {
        let delta = &self[src] * k;
        self[dst] += delta;
    }

    fn negate(&mut self, i: usize) {
        self[i] = -&self[i];
    }
}

/// Result of [`smith_normal_form`]: `u * m * v == d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// `d[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        self.d.diagonal()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let v = reduce(&mut d, &mut u);
    Smith { u, d, v }
}

fn pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a.get(bi, bj).abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Diagonalizes `a` in place, logging row operations and returning the
/// accumulated column transform.
pub(crate) fn reduce<L: RowLog>(a: &mut IntMatrix, log: &mut L) -> IntMatrix {
    let (rows, cols) = (a.rows(), a.cols());
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = pivot(a, t) else {
                return v;
            };
            if pi != t {
                a.swap_rows(t, pi);
                log.swap(t, pi);
            }
            if pj != t {
                a.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }
            let p = a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -(a.get(i, t) / &p);
                if !q.is_zero() {
                    a.add_row_multiple(t, i, &q);
                    log.add_multiple(t, i, &q);
                }
                dirty |= !a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -(a.get(t, j) / &p);
                if !q.is_zero() {
                    a.add_col_multiple(t, j, &q);
                    v.add_col_multiple(t, j, &q);
                }
                dirty |= !a.get(t, j).is_zero();
            }
            if dirty {
                continue;
            }
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !(a.get(i, j) % &p).is_zero()));
            if let Some(i) = offender {
                a.add_row_multiple(i, t, &BigInt::one());
                log.add_multiple(i, t, &BigInt::one());
                continue;
            }
            if p.is_negative() {
                a.negate_row(t);
                log.negate(t);
            }
            break;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    fn check(m: &IntMatrix) -> Smith {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert!(s.d.is_diagonal());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        assert_eq!(s.u.det().abs(), BigInt::one());
        assert_eq!(s.v.det().abs(), BigInt::one());
        s
    }

    #[test]
    fn diag_two_three() {
        let s = check(&IntMatrix::from_i64(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn zero_matrix() {
        let z = IntMatrix::zeros(2, 3);
        let s = check(&z);
        assert_eq!(s.u, IntMatrix::identity(2));
        assert_eq!(s.v, IntMatrix::identity(3));
        assert!(s.d.is_zero());
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn empty_matrices() {
        check(&IntMatrix::zeros(0, 3));
        check(&IntMatrix::zeros(3, 0));
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2, 3) in disguise plus a rank-deficient row
        let s = check(&IntMatrix::from_i64(&[
            vec![2, 4, 4],
            vec![-6, 6, 12],
            vec![10, -4, -16],
        ]));
        assert_eq!(
            s.diagonal(),
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
    }

    #[test]
    fn rhs_log_matches_u() {
        let m = IntMatrix::from_i64(&[vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1], vec![2, 2, 2]]);
        let rhs: Vec<BigInt> = [3, 4, 7, 10].into_iter().map(BigInt::from).collect();
        let s = smith_normal_form(&m);
        let mut a = m.clone();
        let mut logged = rhs.clone();
        let v = reduce(&mut a, &mut logged);
        assert_eq!(v, s.v);
        assert_eq!(logged, s.u.mul_vec(&rhs));
    }
}
