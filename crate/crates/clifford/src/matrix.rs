use std::fmt;

use exactnum::{Coeff, Scalar};

/// Square matrix stored as sparse rows of `(column, entry)` sorted by
/// column. Gamma matrices and their products are signed permutations, so
/// most operators stay very sparse.
#[derive(Clone, PartialEq)]
pub struct SpinMatrix<C> {
    n: usize,
    rows: Vec<Vec<(usize, C)>>,
}

fn push_sorted<C: Coeff>(row: &mut Vec<(usize, C)>, col: usize, value: C) {
    if value.is_zero() {
        return;
    }
    match row.binary_search_by_key(&col, |(c, _)| *c) {
        Ok(pos) => {
            let sum = row[pos].1.plus(&value);
            if sum.is_zero() {
                row.remove(pos);
            } else {
                row[pos].1 = sum;
            }
        }
        Err(pos) => row.insert(pos, (col, value)),
    }
}

impl<C: Coeff> SpinMatrix<C> {
    pub fn zero(n: usize) -> Self {
        SpinMatrix { n, rows: vec![Vec::new(); n] }
    }

    pub fn identity(n: usize) -> Self {
        SpinMatrix { n, rows: (0..n).map(|i| vec![(i, C::one())]).collect() }
    }

    pub fn from_dense(data: &[Vec<C>]) -> Self {
        let n = data.len();
        let rows = data
            .iter()
            .map(|r| {
                assert_eq!(r.len(), n, "matrix must be square");
                r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect()
            })
            .collect();
        SpinMatrix { n, rows }
    }

    pub fn to_dense(&self) -> Vec<Vec<C>> {
        let mut out = vec![vec![C::zero(); self.n]; self.n];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, x) in row {
                out[i][*j] = x.clone();
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> C {
        match self.rows[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => self.rows[i][pos].1.clone(),
            Err(_) => C::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: C) {
        let row = &mut self.rows[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) if value.is_zero() => {
                row.remove(pos);
            }
            Ok(pos) => row[pos].1 = value,
            Err(_) if value.is_zero() => {}
            Err(pos) => row.insert(pos, (j, value)),
        }
    }

    /// Nonzero entries as `(row, column, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &C)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn first_nonzero(&self) -> Option<(usize, usize, C)> {
        self.entries().next().map(|(i, j, x)| (i, j, x.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        let mut out = self.clone();
        for (i, row) in other.rows.iter().enumerate() {
            for (j, x) in row {
                push_sorted(&mut out.rows[i], *j, x.clone());
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.negate())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return SpinMatrix::zero(self.n);
        }
        self.map(|x| x.scale(s))
    }

    pub fn scale_by(&self, s: &C) -> Self {
        if s.is_zero() {
            return SpinMatrix::zero(self.n);
        }
        self.map(|x| x.times(s))
    }

    /// Entrywise map; zero results are dropped.
    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SpinMatrix<D> {
        SpinMatrix {
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|(j, x)| (*j, f(x))).filter(|(_, x)| !x.is_zero()).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        let mut out = SpinMatrix::zero(self.n);
        let mut acc: Vec<Option<C>> = vec![None; self.n];
        for (i, row) in self.rows.iter().enumerate() {
            for (k, a) in row {
                for (j, b) in &other.rows[*k] {
                    let p = a.times(b);
                    acc[*j] = Some(match acc[*j].take() {
                        Some(x) => x.plus(&p),
                        None => p,
                    });
                }
            }
            out.rows[i] = acc
                .iter_mut()
                .enumerate()
                .filter_map(|(j, x)| x.take().filter(|v| !v.is_zero()).map(|v| (j, v)))
                .collect();
        }
        out
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        self.mul(other).add(&other.mul(self))
    }

    pub fn transpose(&self) -> Self {
        let mut out = SpinMatrix::zero(self.n);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, x) in row {
                out.rows[*j].push((i, x.clone()));
            }
        }
        out
    }

    pub fn trace(&self) -> C {
        let mut acc = C::zero();
        for i in 0..self.n {
            acc = acc.plus(&self.get(i, i));
        }
        acc
    }

    pub fn apply(&self, v: &[C]) -> Vec<C> {
        assert_eq!(v.len(), self.n, "vector has wrong length");
        self.rows
            .iter()
            .map(|row| {
                let mut acc = C::zero();
                for (j, x) in row {
                    if !v[*j].is_zero() {
                        acc = acc.plus(&x.times(&v[*j]));
                    }
                }
                acc
            })
            .collect()
    }

    /// `true` if this is `c · 1` for the given scalar `c`.
    pub fn is_multiple_of_identity(&self, c: &C) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| {
            if c.is_zero() {
                r.is_empty()
            } else {
                r.len() == 1 && r[0].0 == i && r[0].1 == *c
            }
        })
    }
}

impl SpinMatrix<Scalar> {
    pub fn lift<C: Coeff>(&self) -> SpinMatrix<C> {
        self.map(|x| C::from_scalar(x.clone()))
    }
}

impl<C: Coeff + fmt::Display> fmt::Debug for SpinMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SpinMatrix {}x{} [", self.n, self.n)?;
        for (i, j, x) in self.entries() {
            writeln!(f, "  ({i},{j}) = {x}")?;
        }
        write!(f, "]")
    }
}
