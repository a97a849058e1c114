//! Dense exact linear algebra over the rationals: rank, nullspace, linear
//! solves and an incremental row-span used for ideal-membership tests.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::Rational;

pub type QVec = Vec<Rational>;

/// Dense row-major matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> QMatrix {
        QMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> QMatrix {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<QVec>) -> QMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        debug_assert!(rows.iter().all(|v| v.len() == c));
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn rank(&self) -> usize {
        let mut span = RowSpan::new(self.cols);
        for i in 0..self.rows {
            span.insert(self.row(i).to_vec());
        }
        span.rank()
    }

    /// Basis of the right nullspace {x : A x = 0}.
    pub fn nullspace(&self) -> Vec<QVec> {
        // reduce to RREF
        let mut m = self.clone();
        let mut pivots: Vec<usize> = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.at(r, c).clone();
            for j in c..m.cols {
                let v = m.at(r, j).clone() / &inv;
                *m.at_mut(r, j) = v;
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in c..m.cols {
                        let sub = &f * m.at(r, j);
                        *m.at_mut(i, j) -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..m.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![BigRational::zero(); m.cols];
            v[free] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.at(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Determinant by exact elimination; square matrices only.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = m.rows;
        let mut det = BigRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return BigRational::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m.at(c, c).clone();
            det *= &pivot;
            for i in c + 1..n {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).clone() / &pivot;
                for j in c..n {
                    let sub = &f * m.at(c, j);
                    *m.at_mut(i, j) -= sub;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Incremental row-echelon span. Rows are kept normalized with a leading 1.
#[derive(Clone, Debug)]
pub struct RowSpan {
    cols: usize,
    /// (pivot column, row) sorted by pivot column
    rows: Vec<(usize, QVec)>,
}

impl RowSpan {
    pub fn new(cols: usize) -> RowSpan {
        RowSpan { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current span in place.
    pub fn reduce(&self, v: &mut QVec) {
        debug_assert_eq!(v.len(), self.cols);
        for (pc, row) in &self.rows {
            if v[*pc].is_zero() {
                continue;
            }
            let f = v[*pc].clone();
            for (x, y) in v.iter_mut().zip(row.iter()) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Insert a vector; returns true when the rank grew.
    pub fn insert(&mut self, mut v: QVec) -> bool {
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[pc].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x /= &lead;
            }
        }
        // keep existing rows reduced against the new one
        for (opc, row) in self.rows.iter_mut() {
            if !row[pc].is_zero() {
                let f = row[pc].clone();
                for (x, y) in row.iter_mut().zip(v.iter()) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
                debug_assert!(*opc != pc);
            }
        }
        let idx = self.rows.partition_point(|(c, _)| *c < pc);
        self.rows.insert(idx, (pc, v));
        true
    }
}

/// Precomputed elimination for solving `A x = b` where the columns of `A`
/// are independent; used to re-express vectors in a chosen basis.
pub struct ColumnSolver {
    /// RREF of [A | I]: transform applied to any right-hand side
    transform: QMatrix,
    pivots: Vec<usize>,
    pub n_rows: usize,
    pub n_cols: usize,
}

impl ColumnSolver {
    pub fn new(a: &QMatrix) -> ColumnSolver {
        let rows = a.rows;
        let cols = a.cols;
        let mut work = QMatrix::zeros(rows, cols + rows);
        for i in 0..rows {
            for j in 0..cols {
                *work.at_mut(i, j) = a.at(i, j).clone();
            }
            *work.at_mut(i, cols + i) = BigRational::one();
        }
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !work.at(i, c).is_zero()) else {
                continue;
            };
            work.swap_rows(r, p);
            let inv = work.at(r, c).clone();
            for j in 0..cols + rows {
                let v = work.at(r, j).clone() / &inv;
                *work.at_mut(r, j) = v;
            }
            for i in 0..rows {
                if i != r && !work.at(i, c).is_zero() {
                    let f = work.at(i, c).clone();
                    for j in 0..cols + rows {
                        let sub = &f * work.at(r, j);
                        *work.at_mut(i, j) -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        assert_eq!(pivots.len(), cols, "columns are not independent");
        let mut transform = QMatrix::zeros(rows, rows);
        for i in 0..rows {
            for j in 0..rows {
                *transform.at_mut(i, j) = work.at(i, cols + j).clone();
            }
        }
        ColumnSolver { transform, pivots, n_rows: rows, n_cols: cols }
    }

    /// Solve `A x = b`; returns None when `b` is outside the column span.
    pub fn solve(&self, b: &[Rational]) -> Option<QVec> {
        debug_assert_eq!(b.len(), self.n_rows);
        let mut tb = vec![BigRational::zero(); self.n_rows];
        for (i, out) in tb.iter_mut().enumerate() {
            for j in 0..self.n_rows {
                let t = self.transform.at(i, j);
                if !t.is_zero() && !b[j].is_zero() {
                    *out += t * &b[j];
                }
            }
        }
        if tb[self.n_cols..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut x = vec![BigRational::zero(); self.n_cols];
        for (row, &pc) in self.pivots.iter().enumerate() {
            x[pc] = tb[row].clone();
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_rational;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn rank_and_nullspace() {
        let m = QMatrix::from_rows(vec![
            vec![q("1"), q("2"), q("3")],
            vec![q("2"), q("4"), q("6")],
            vec![q("1"), q("0"), q("1")],
        ]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            for i in 0..m.rows {
                let dot: Rational = (0..m.cols).map(|j| m.at(i, j) * &v[j]).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn row_span_membership() {
        let mut span = RowSpan::new(3);
        assert!(span.insert(vec![q("1"), q("1"), q("0")]));
        assert!(span.insert(vec![q("0"), q("1"), q("1")]));
        assert!(!span.insert(vec![q("1"), q("2"), q("1")]));
        assert_eq!(span.rank(), 2);
        assert!(span.contains(&[q("2"), q("3"), q("1")]));
        assert!(!span.contains(&[q("0"), q("0"), q("1")]));
    }

    #[test]
    fn column_solver_round_trip() {
        let a = QMatrix::from_rows(vec![
            vec![q("1"), q("0")],
            vec![q("1"), q("1")],
            vec![q("0"), q("2")],
        ]);
        let solver = ColumnSolver::new(&a);
        // b = 3*c0 - 2*c1
        let b = vec![q("3"), q("1"), q("-4")];
        let x = solver.solve(&b).unwrap();
        assert_eq!(x, vec![q("3"), q("-2")]);
        assert!(solver.solve(&[q("1"), q("0"), q("0")]).is_none());
    }

    #[test]
    fn matrix_multiply_identity() {
        let m = QMatrix::from_rows(vec![vec![q("2"), q("1")], vec![q("0"), q("5")]]);
        assert_eq!(m.mul(&QMatrix::identity(2)), m);
    }
}
