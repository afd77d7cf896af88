//! Dense exact linear algebra over a [`Field`].

use crate::{Coeff, Field, NumError};

/// Row-reduces in place to reduced row echelon form and returns the pivot
/// columns. Zero rows are dropped.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>) -> Result<Vec<usize>, NumError> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inverse()?;
        for x in rows[r].iter_mut() {
            *x = x.times(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.minus(&factor.times(p));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    Ok(pivots)
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> Result<usize, NumError> {
    let mut work = rows.to_vec();
    Ok(rref(&mut work)?.len())
}

/// Basis of `{x : M x = 0}` for `M` with `ncols` columns.
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Result<Vec<Vec<F>>, NumError> {
    let mut work = rows.to_vec();
    let pivots = rref(&mut work)?;
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![F::zero(); ncols];
        v[f] = F::one();
        for (row, &pc) in work.iter().zip(&pivots) {
            v[pc] = row[f].negate();
        }
        basis.push(v);
    }
    Ok(basis)
}

pub fn determinant<F: Field>(m: &[Vec<F>]) -> Result<F, NumError> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = F::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return Ok(F::zero());
        };
        if p != col {
            a.swap(p, col);
            det = det.negate();
        }
        det = det.times(&a[col][col]);
        let inv = a[col][col].inverse()?;
        for i in col + 1..n {
            if a[i][col].is_zero() {
                continue;
            }
            let factor = a[i][col].times(&inv);
            for j in col..n {
                let t = factor.times(&a[col][j]);
                a[i][j] = a[i][j].minus(&t);
            }
        }
    }
    Ok(det)
}

pub fn inverse<F: Field>(m: &[Vec<F>]) -> Result<Vec<Vec<F>>, NumError> {
    let n = m.len();
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug)?;
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(NumError::Singular);
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul<C: Coeff>(a: &[Vec<C>], b: &[Vec<C>]) -> Vec<Vec<C>> {
    let inner = b.len();
    let ncols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| {
                    let mut acc = C::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc = acc.plus(&row[k].times(&b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn identity<C: Coeff>(n: usize) -> Vec<Vec<C>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { C::one() } else { C::zero() }).collect())
        .collect()
}
