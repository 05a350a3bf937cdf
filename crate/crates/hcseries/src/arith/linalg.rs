//! Dense exact linear algebra over a [`Field`].

use super::Field;

pub type Matrix<F> = Vec<Vec<F>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, pr);
        let inv = m[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in m[r][c..].iter_mut() {
                *x = x.mul(&inv);
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    row[j] = row[j].sub(&pivot_row[j].mul(&f));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of {x : m x = 0}.
pub fn nullspace<F: Field>(m: &Matrix<F>, ncols: usize) -> Vec<Vec<F>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = a[i][f].neg();
            }
            v
        })
        .collect()
}

/// Row-reduce without keeping the full matrix: rows are fed one at a time
/// and reduced against the current echelon basis. Useful when the row count
/// is large but the rank is bounded by the column count.
pub struct IncrementalEchelon<F: Field> {
    ncols: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> IncrementalEchelon<F> {
    pub fn new(ncols: usize) -> Self {
        IncrementalEchelon { ncols, rows: Vec::new() }
    }

    /// Returns true if the row increased the rank.
    pub fn push(&mut self, mut v: Vec<F>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for j in *p..self.ncols {
                    if !row[j].is_zero() {
                        v[j] = v[j].sub(&row[j].mul(&f));
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return false };
        let inv = v[p].inv().expect("nonzero");
        for x in v[p..].iter_mut() {
            *x = x.mul(&inv);
        }
        // keep the basis reduced at the new pivot
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for j in p..self.ncols {
                    if !v[j].is_zero() {
                        row[j] = row[j].sub(&v[j].mul(&f));
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{CycNumber, Ring};

    fn c(v: i64) -> CycNumber {
        CycNumber::from_int(v)
    }

    #[test]
    fn rank_and_nullspace() {
        let m = vec![vec![c(1), c(2), c(3)], vec![c(2), c(4), c(6)], vec![c(0), c(1), c(1)]];
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let s = row.iter().zip(&ns[0]).fold(c(0), |a, (x, y)| a.add(&x.mul(y)));
            assert!(s.is_zero());
        }
    }

    #[test]
    fn incremental_matches_batch() {
        let rows = vec![vec![c(1), c(1), c(0)], vec![c(0), c(1), c(1)], vec![c(1), c(2), c(1)], vec![c(1), c(0), c(-1)]];
        let mut inc = IncrementalEchelon::new(3);
        for r in &rows {
            inc.push(r.clone());
        }
        assert_eq!(inc.rank(), rank(&rows));
    }
}
