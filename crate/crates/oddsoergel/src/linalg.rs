//! Dense exact linear algebra over the rationals.
//!
//! Everything here is plain Gaussian elimination with a pivot preference for
//! ±1 entries, which keeps coefficient growth down on the sparse integer
//! systems produced by the degreewise solvers.

use num_traits::{One, Signed, Zero};

use crate::skewpoly::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Vec<Q>>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![vec![Q::zero(); cols]; rows] }
    }

    pub fn from_rows(data: Vec<Vec<Q>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        debug_assert!(data.iter().all(|r| r.len() == cols));
        Matrix { rows, cols, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &Q {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i]
    }

    /// Row echelon reduction in place; returns the pivot columns.
    /// Column order is left to right, so the result is deterministic.
    fn echelonize(&mut self) -> Vec<(usize, usize)> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // prefer a ±1 pivot to avoid fraction growth
            let mut pick = None;
            for i in r..self.rows {
                if self.data[i][c].is_zero() {
                    continue;
                }
                let unit = self.data[i][c].abs().is_one();
                match pick {
                    None => pick = Some((i, unit)),
                    Some((_, false)) if unit => pick = Some((i, true)),
                    _ => {}
                }
                if unit {
                    break;
                }
            }
            let Some((p, _)) = pick else { continue };
            self.data.swap(r, p);
            let inv = self.data[r][c].clone();
            for j in c..self.cols {
                let v = std::mem::replace(&mut self.data[r][j], Q::zero());
                self.data[r][j] = v / &inv;
            }
            for i in 0..self.rows {
                if i == r || self.data[i][c].is_zero() {
                    continue;
                }
                let f = self.data[i][c].clone();
                for j in c..self.cols {
                    let sub = &self.data[r][j] * &f;
                    if !sub.is_zero() {
                        let v = std::mem::replace(&mut self.data[i][j], Q::zero());
                        self.data[i][j] = v - sub;
                    }
                }
            }
            pivots.push((r, c));
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.echelonize().len()
    }

    /// Basis of the right nullspace {v : Mv = 0}, via the free columns of the
    /// reduced echelon form. Deterministic in the column enumeration order.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let mut m = self.clone();
        let pivots = m.echelonize();
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut out = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for &(r, c) in &pivots {
                v[c] = -m.data[r][free].clone();
            }
            out.push(v);
        }
        out
    }

    /// Solves Mx = b; `None` if inconsistent. Underdetermined systems return
    /// the solution with free variables set to zero.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.data[i][j] = self.data[i][j].clone();
            }
            aug.data[i][self.cols] = b[i].clone();
        }
        let pivots = aug.echelonize();
        if pivots.iter().any(|&(_, c)| c == self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for &(r, c) in &pivots {
            x[c] = aug.data[r][self.cols].clone();
        }
        Some(x)
    }

    /// Indices of a maximal independent subset of the given row vectors,
    /// scanning in order (earlier rows win).
    pub fn independent_rows(rows: &[Vec<Q>]) -> Vec<usize> {
        if rows.is_empty() {
            return Vec::new();
        }
        let cols = rows[0].len();
        let mut basis: Vec<Vec<Q>> = Vec::new();
        let mut pivot_of: Vec<usize> = Vec::new();
        let mut picked = Vec::new();
        'next: for (idx, row) in rows.iter().enumerate() {
            let mut v = row.clone();
            loop {
                let Some(p) = v.iter().position(|x| !x.is_zero()) else {
                    continue 'next;
                };
                if let Some(k) = pivot_of.iter().position(|&q| q == p) {
                    let f = v[p].clone();
                    for j in 0..cols {
                        let sub = &basis[k][j] * &f;
                        if !sub.is_zero() {
                            let t = std::mem::replace(&mut v[j], Q::zero());
                            v[j] = t - sub;
                        }
                    }
                } else {
                    let inv = v[p].clone();
                    for x in v.iter_mut() {
                        let t = std::mem::replace(x, Q::zero());
                        *x = t / &inv;
                    }
                    basis.push(v);
                    pivot_of.push(p);
                    picked.push(idx);
                    continue 'next;
                }
            }
        }
        picked
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skewpoly::q_int;

    fn q(n: i64) -> Q {
        q_int(n)
    }

    #[test]
    fn rank_and_nullspace() {
        let m = Matrix::from_rows(vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), q(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            for i in 0..m.rows {
                let s: Q = (0..m.cols).map(|j| m.at(i, j) * &v[j]).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = Matrix::from_rows(vec![vec![q(2), q(0)], vec![q(0), q(3)]]);
        let x = m.solve(&[q(4), q(9)]).unwrap();
        assert_eq!(x, vec![q(2), q(3)]);
        let m = Matrix::from_rows(vec![vec![q(1), q(1)], vec![q(2), q(2)]]);
        assert!(m.solve(&[q(1), q(3)]).is_none());
    }

    #[test]
    fn independent_rows_prefers_earlier() {
        let rows = vec![
            vec![q(1), q(0)],
            vec![q(2), q(0)],
            vec![q(0), q(5)],
        ];
        assert_eq!(Matrix::independent_rows(&rows), vec![0, 2]);
    }
}
